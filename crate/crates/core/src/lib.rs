//! Painlevé-type Hamiltonian systems in exact arithmetic: the systems and
//! their vector fields, affine Weyl group actions, holomorphy charts,
//! degenerations and closed-form solutions.
//!
//! Every verification returns [`Check`] lines rather than failing, so a
//! report can list what holds and what does not side by side.

pub mod charts;
pub mod confluence;
pub mod error;
pub mod map;
pub mod report;
pub mod solutions;
pub mod system;
pub mod weyl;

pub use error::CoreError;
pub use map::{poisson, symplectic_defects, BirationalMap};
pub use report::{all_pass, Check, Status};
pub use system::{build_system, HamiltonianSystem, Subsystem, SystemId, VectorField};
