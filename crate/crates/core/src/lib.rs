//! Exact classification of real polynomials as self-interlacing (kind I or
//! II) or Hurwitz stable, through Hurwitz minors, Hankel minors of
//! associated rational functions, and Stieltjes continued fractions, each
//! cross-checked against independent root oracles.

pub mod criteria;
pub mod error;
pub mod generate;
pub mod hankel;
pub mod hurwitz;
pub mod linalg;
pub mod poly;
pub mod roots;
pub mod stability;
pub mod stieltjes;
pub mod transform;
pub mod verify;

pub use criteria::{classify, ClassificationReport};
pub use error::{Error, Result};
pub use poly::{Polynomial, Rational};
pub use roots::{si_oracle, SiKind};
pub use stability::{stability_oracle, StabilityVerdict};
pub use transform::dual;
