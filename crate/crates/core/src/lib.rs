//! Inclusion regions for the zeros of complex polynomials.
//!
//! Bounds on `|z|` come from numerical-radius estimates on the Frobenius
//! companion matrix (evaluated in closed form, no matrices are built) and
//! from the classical baselines they are compared against. Reciprocal
//! polynomials turn every upper bound into a lower bound, so the bounds
//! compose into annuli. An Aberth–Ehrlich root finder provides the
//! reference zeros used to verify every region.
//!
//! ```
//! use rootzone::{ComparisonReport, BoundId, MonicPolynomial};
//!
//! // z^3 + z^2 + z + 1, coefficients a_0..a_2 in ascending order
//! let p = MonicPolynomial::from_real(&[1.0, 1.0, 1.0]).unwrap();
//! let report = ComparisonReport::build(&p, &BoundId::ALL, true).unwrap();
//! assert!(report.verdicts.unwrap().all_pass());
//! ```

pub mod bounds;
pub mod error;
pub mod fuzz;
pub mod oracle;
pub mod polynomial;
pub mod report;

pub use bounds::{
    lower_bound, upper_bound, Annulus, BoundId, BoundKind, BoundResult, Inapplicable, RectRegion,
};
pub use error::{Error, Result};
pub use oracle::{
    find_roots, modulus_extremes, verify_containment, ModulusExtremes, RootSet, Verdict,
};
pub use polynomial::{ComplexScalar, ExtendedTransform, GeneralPolynomial, MonicPolynomial};
pub use report::{best_annulus, compare_remark_1, compare_remark_2, ComparisonReport};
