//! Metric-preserving constructions: double, single and central extensions,
//! cotangents, mirages and the family `g_k`.

pub mod cotangent;
pub mod extension;
pub mod family;
pub mod mirage;

pub use cotangent::{cotangent, cotangent_grading, dual_projection};
pub use extension::{
    central_extension, double_extension, is_cocycle, orthogonal_sum, single_extension, single_extension_facts,
    SingleExtensionFacts,
};
pub use family::{family, family_in, quotient_certificate, FamilyMember, QuotientCertificate};
pub use mirage::{mirage_check, Condition, MirageReport, MirageWitness, M5};
