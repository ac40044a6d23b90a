//! Nice bases: certificate checking, nonniceness obstructions, proof replay
//! and irreducibility of graded Lie algebras.

pub mod certificate;
pub mod deduction;
pub mod fingerprint;
pub mod irreducible;
pub mod obstruction;

pub use certificate::{check_nice_basis, NiceCertificate, NiceCheck, NiceViolation};
pub use deduction::{DeductionState, Fact};
pub use fingerprint::{fingerprint, fingerprint_match, fingerprint_verdict, series_line, Fingerprint, FingerprintVerdict};
pub use irreducible::{graded_irreducibility, FirstLayer, IrreducibilityReport};
pub use obstruction::{eigenspace_bound_obstruction, eigenspace_bound_obstruction_with, BoundViolation};
pub use quotient_test::{ucs_quotient_test, UcsVerdict};
