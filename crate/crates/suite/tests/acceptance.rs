//! Acceptance criteria 1-10, one line each. Runs without the libtest
//! harness so every line is printed; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cp3_cli::numeric_battery;
use cp3_cli::suite::{self, run_tasks, Task, Which};
use cp3_cli::Record;
use cp3_core::system::{decomposition_check, vector_field_checks};
use cp3_core::SystemId;

const MAIN3: [SystemId; 3] = [SystemId::D6, SystemId::B5, SystemId::D52];

/// Number, title, time budget, and the check itself.
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn records(tasks: Vec<Task>) -> Vec<Record> {
    run_tasks(&tasks).unwrap_or_else(|e| panic!("task error: {e:?}"))
}

fn failures(rs: &[Record]) -> Vec<String> {
    rs.iter().filter(|r| r.failed()).map(|r| format!("{} [{}]", r.name, r.witness)).collect()
}

/// Passes when there are at least `min` records, exactly `exact` if given,
/// and none failed.
fn judge(rs: &[Record], min: usize, exact: Option<usize>) -> Outcome {
    let bad = failures(rs);
    let count_ok = rs.len() >= min && exact.is_none_or(|n| rs.len() == n);
    let mut detail = format!("{} records, {} failed", rs.len(), bad.len());
    if !count_ok {
        detail.push_str(&format!(" (expected {})", exact.map_or(format!(">= {min}"), |n| n.to_string())));
    }
    if !bad.is_empty() {
        detail.push_str(": ");
        detail.push_str(&bad.join("; "));
    }
    Outcome { ok: count_ok && bad.is_empty(), detail }
}

fn c1() -> Outcome {
    let tasks = MAIN3.into_iter().map(|id| Task::new(format!("{id}"), move || Ok(vector_field_checks(id)))).collect();
    judge(&records(tasks), 18, Some(18))
}

fn c2() -> Outcome {
    let tasks = MAIN3
        .into_iter()
        .map(|id| Task::new(format!("{id}"), move || Ok(decomposition_check(id).into_iter().collect())))
        .collect();
    judge(&records(tasks), 3, Some(3))
}

fn c3() -> Outcome {
    judge(&records(SystemId::ALL.into_iter().flat_map(suite::relations).collect()), 60, None)
}

fn c4() -> Outcome {
    let rs = records(SystemId::ALL.into_iter().flat_map(|id| suite::symmetry(id, None)).collect());
    judge(&rs, 30, None)
}

fn c5() -> Outcome {
    judge(&records(MAIN3.into_iter().flat_map(suite::translation_shifts).collect()), 15, Some(15))
}

fn c6() -> Outcome {
    let charts = records(MAIN3.into_iter().flat_map(suite::charts).collect());
    let controls = records(MAIN3.into_iter().flat_map(suite::chart_controls).collect());
    let mut out = judge(&charts, 18, Some(18));
    let r6 = controls.iter().find(|r| r.name.starts_with("d6 r6(H)"));
    let control_ok = r6.is_some_and(|r| !r.failed()) && failures(&controls).is_empty();
    out.detail.push_str(&format!("; controls: {}", judge(&controls, 1, None).detail));
    out.ok &= control_ok;
    out
}

fn c7() -> Outcome {
    let tasks = [Which::D6B5, Which::D6D52, Which::B5D51].into_iter().flat_map(suite::confluence).collect();
    judge(&records(tasks), 1, None)
}

fn c8() -> Outcome {
    let mut tasks = suite::confluence(Which::Tr);
    tasks.extend(suite::confluence(Which::Uv));
    tasks.extend(suite::a1_generators());
    tasks.push(Task::new("scalar reduction", || Ok(cp3_core::system::scalar_piii_checks())));
    let rs: Vec<Record> = records(tasks);
    let mut fi = records(suite::integrals());
    fi.retain(|r| r.name.starts_with("t K"));
    let mut all = rs;
    let n_fi = fi.len();
    all.extend(fi);
    let mut out = judge(&all, 1, None);
    if n_fi != 2 {
        out.ok = false;
        out.detail.push_str(&format!("; expected tK1 = I1 and tK2 = I2, found {n_fi}"));
    }
    out
}

fn c9() -> Outcome {
    let mut tasks = suite::solutions(None);
    tasks.extend(suite::integrals());
    let rs = records(tasks);
    judge(&rs, 9, None)
}

fn c10() -> Outcome {
    judge(&records(numeric_battery::tasks()), 12, None)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "vector fields match the printed systems", Duration::from_secs(5), c1),
        (2, "Hamiltonian decompositions", Duration::from_secs(5), c2),
        (3, "group relations", Duration::from_secs(180), c3),
        (4, "symmetry pullback of every roster map", Duration::from_secs(300), c4),
        (5, "translation shifts", Duration::from_secs(120), c5),
        (6, "holomorphy charts and negative control", Duration::from_secs(60), c6),
        (7, "confluence limits and B5 to D51 equivalence", Duration::from_secs(120), c7),
        (8, "tr maps, integrals, uv, A1 generators, scalar reduction", Duration::from_secs(60), c8),
        (9, "closed-form solutions and first integrals", Duration::from_secs(60), c9),
        (10, "numeric endpoint, commuting and drift", Duration::from_secs(60), c10),
    ];
    // `cargo test -- <filter>` passes the filter along; honour a numeric one
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (n, title, budget, f) in criteria {
        if only.is_some_and(|k| k != n) {
            continue;
        }
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let in_time = took <= budget;
        let pass = out.ok && in_time;
        if !pass {
            failed += 1;
        }
        let timing = if in_time { String::new() } else { " OVER BUDGET".to_string() };
        println!(
            "criterion {n:>2} {}: {title} ({:.2}s of {}s{timing}) {}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs(),
            out.detail
        );
    }
    println!("acceptance: {failed} criteria failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
