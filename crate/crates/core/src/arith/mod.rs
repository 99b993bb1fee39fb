//! Exact scalars: rationals, cyclotomic fields, and polynomials in named
//! parameters over them.

mod cyclotomic;
mod expr;
mod poly;
mod upoly;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycField, CycNumber};
pub use expr::{parse_expr, parse_expr_with_root};
pub use poly::{Monomial, ParamPoly};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("scalar fields differ: Q(zeta_{left}) vs Q(zeta_{right})")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("Q(zeta_{order}) has {expected} coordinates, got {got}")]
    BadCoordinates { order: u32, expected: usize, got: usize },
    #[error("no value supplied for parameter `{0}`")]
    UnboundVariable(String),
    #[error("division by non-constant expression")]
    NonConstantDivisor,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
