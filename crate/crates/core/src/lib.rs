//! Exact graded-ring algebra for Fadell–Husseini index computations over the
//! dihedral group of order eight, and the two-hyperplane mass-partition bounds
//! built on it.

pub mod bounds;
pub mod catalog;
pub mod element;
pub mod error;
pub mod hom;
pub mod ideal;
pub mod index;
pub mod linalg;
pub mod oracle;
pub mod ring;
pub mod verify;

pub use bounds::{
    admissible_f2, admissible_h1_f2, admissible_z, bound_report, min_certified_d, mvz_upper,
    ramos_lower, AdmissibilityVerdict, BoundReport, Criterion, ZReading,
};
pub use catalog::{hom, ring, Check, RestrictionDiagram};
pub use element::{poly_add, poly_mul, RingElement};
pub use error::{Error, Result};
pub use hom::{apply_hom, hom_kernel_slice, homs_equal_up_to_degree, RingHom};
pub use ideal::{graded_ideal_slice, ideal_contains, ideal_subset};
pub use index::{capital_pi_poly, pi_poly, IndexIdeal, IndexKind};
pub use linalg::howell_solve;
pub use ring::{Coefficients, GradedSlice, Monomial, RingPresentation};
