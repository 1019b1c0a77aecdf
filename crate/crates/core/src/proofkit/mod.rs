//! Mechanised checks for the inequality `E(P_n^6) > E(C_n)`.

pub mod closed;
pub mod certificates;
pub mod identities;
pub mod theorem;

pub use certificates::{
    k0_sign_certificate, k1_limit_certificate, limit_integral_a, limit_integrals,
    monotonicity_scan, pw_sign_certificate, sign_certificate, CaseTag, CertificateError,
    GridSpec, LimitIntegrals, MonotonicityReport, SignCertificate,
};
pub use closed::{closed_phi_cycle_axis, closed_phi_p6_axis, ClosedFormContext};
pub use identities::{verify_exact_identities, IdentityCheck, IdentityFailure};
pub use theorem::{theorem_covers, theorem_row, RowStatus, TheoremRow};
