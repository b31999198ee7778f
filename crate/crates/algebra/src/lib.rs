//! Polynomial algebra over prime fields: Groebner bases, ideal operations,
//! Hilbert series and graded free resolutions.

pub mod betti;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod linear;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod text;

pub use betti::{BettiDiagram, HomologicalSummary};
pub use error::AlgebraError;
pub use field::{PrimeField, DEFAULT_PRIME};
pub use groebner::{groebner_basis, GroebnerBasis};
pub use hilbert::HilbertSeries;
pub use ideal::Ideal;
pub use linear::LinearIdeal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring};
pub use resolution::{MinimalResolution, Resolution};
pub use text::{format_polynomial, parse_generators, parse_polynomial};
