use std::io::Write;

use crate::error::NumericError;
use crate::integrate::Trajectory;
use crate::Real;

pub fn csv_header(labels: &[&str]) -> Vec<String> {
    let mut h = vec!["t".to_string()];
    for l in labels {
        h.push(format!("{l}_re"));
        h.push(format!("{l}_im"));
    }
    h
}

/// One row per recorded state, time first, then real and imaginary parts.
pub fn write_csv<F: Real, W: Write>(traj: &Trajectory<F>, out: W) -> Result<(), NumericError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header(&traj.labels))?;
    for (t, y) in traj.times.iter().zip(&traj.states) {
        let mut row = vec![format!("{t:e}")];
        for z in y {
            row.push(format!("{:e}", z.re));
            row.push(format!("{:e}", z.im));
        }
        w.write_record(&row)?;
    }
    w.flush().map_err(|e| NumericError::Csv(e.to_string()))?;
    Ok(())
}
