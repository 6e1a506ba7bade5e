//! Exact symbolic computation in the enveloping algebras of sl2, A1(1) and A2(2).
//!
//! Every coefficient is an arbitrary-precision rational. The crate provides
//! arithmetic functions, symmetric functions in the power-sum presentation,
//! the three Lie algebras with their symmetries, PBW straightening in the
//! enveloping algebras, truncated power series over any of these rings, and
//! a catalog of commutation identities checked by exact comparison.

pub mod arithfun;
pub mod liealg;
pub mod series;
pub mod symfun;
pub mod uea;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Exact rational scalar used throughout.
pub type Q = BigRational;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("undefined morphism: {0}")]
    Undefined(String),
    #[error("constant term violation: {0}")]
    ConstantTerm(String),
    #[error("family is not triangular at degree {0}")]
    NotTriangular(usize),
    #[error("unknown catalog tag `{0}`")]
    UnknownTag(String),
    #[error("order {order} refused for {tag}: estimated {estimate_ms} ms exceeds ceiling {ceiling_ms} ms")]
    CostCeiling {
        tag: String,
        order: usize,
        estimate_ms: u64,
        ceiling_ms: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Q::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` for integer `n` (any sign) as a rational.
pub fn binom(n: i64, k: u32) -> Q {
    let mut acc = Q::one();
    for i in 0..k as i64 {
        acc *= qi(n - i);
    }
    acc / factorial(k)
}

/// Render a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
