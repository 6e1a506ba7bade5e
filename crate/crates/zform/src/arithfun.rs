//! Rational-valued arithmetic functions on the positive integers.
//!
//! Includes the Möbius function, Dirichlet convolution, the two integrality
//! criteria for exponential generating families, and the Pell-type sequences
//! `d_n + δ_n √2 = (1 + √2)^n` computed by integer recurrence.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{qi, Error, Result, Q};

type Rule = Arc<dyn Fn(u64) -> Q + Send + Sync>;

/// A map `n ↦ a_n` from positive integers to rationals.
#[derive(Clone)]
pub struct ArithFunction {
    name: String,
    rule: Rule,
}

impl fmt::Debug for ArithFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArithFunction").field("name", &self.name).finish()
    }
}

impl ArithFunction {
    /// Wrap an arbitrary rule.
    pub fn new(name: impl Into<String>, rule: impl Fn(u64) -> Q + Send + Sync + 'static) -> Self {
        ArithFunction {
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    /// Finite table `a_1, a_2, ...`; values past the table are zero.
    pub fn from_table(name: impl Into<String>, table: Vec<Q>) -> Self {
        Self::new(name, move |n| {
            table.get((n - 1) as usize).cloned().unwrap_or_else(Q::zero)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Value at `n ≥ 1`.
    pub fn at(&self, n: u64) -> Q {
        assert!(n >= 1, "arithmetic functions are defined on positive integers");
        (self.rule)(n)
    }

    /// The constant function `1`.
    pub fn one() -> Self {
        Self::new("1", |_| Q::one())
    }

    /// `1^{(m)}`: one on multiples of `m`, zero elsewhere.
    pub fn indicator(m: u64) -> Self {
        Self::new(format!("1^({m})"), move |n| {
            if n % m == 0 {
                Q::one()
            } else {
                Q::zero()
            }
        })
    }

    /// The Möbius function.
    pub fn mobius() -> Self {
        Self::new("mu", |n| qi(mobius(n as i64).expect("positive argument")))
    }

    /// `n ↦ d_n`.
    pub fn d() -> Self {
        Self::new("d", |n| Q::from_integer(pell_pair(n).0))
    }

    /// `n ↦ ε_n`.
    pub fn epsilon() -> Self {
        Self::new("epsilon", |n| qi(epsilon(n as i64).expect("positive argument")))
    }

    /// `d̃ = ε d`.
    pub fn dtilde() -> Self {
        Self::new("dtilde", |n| {
            qi(epsilon(n as i64).expect("positive argument")) * Q::from_integer(pell_pair(n).0)
        })
    }

    /// `n ↦ c·a_n`.
    pub fn scaled(&self, c: Q) -> Self {
        let inner = self.clone();
        Self::new(format!("{}*{}", crate::fmt_q(&c), self.name), move |n| {
            inner.at(n) * c.clone()
        })
    }
}

/// Möbius function of `n ≥ 1`.
pub fn mobius(n: i64) -> Result<i64> {
    if n <= 0 {
        return Err(Error::Domain(format!("mobius({n}) needs n >= 1")));
    }
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Dirichlet convolution `(f*g)(n) = Σ_{rs=n} f(r) g(s)`.
pub fn convolve(f: &ArithFunction, g: &ArithFunction, n: u64) -> Result<Q> {
    if n == 0 {
        return Err(Error::Domain("convolution needs n >= 1".into()));
    }
    let mut acc = Q::zero();
    for r in 1..=n {
        if n.is_multiple_of(r) {
            acc += f.at(r) * g.at(n / r);
        }
    }
    Ok(acc)
}

/// All `n ≤ bound` with `(μ*a)(n)/n` not an integer.
pub fn divisibility_criterion(a: &ArithFunction, bound: u64) -> Vec<u64> {
    let mu = ArithFunction::mobius();
    (1..=bound)
        .filter(|&n| {
            let v = convolve(&mu, a, n).expect("n >= 1") / qi(n as i64);
            !v.is_integer()
        })
        .collect()
}

/// All `(p, r, m)` with `p ≤ p_max` prime, `1 ≤ r ≤ r_max`, `1 ≤ m ≤ m_max`
/// coprime to `p`, such that `p^r` does not divide `a_{mp^r} - a_{mp^{r-1}}`.
pub fn prime_power_criterion(
    a: &ArithFunction,
    p_max: u64,
    r_max: u32,
    m_max: u64,
) -> Result<Vec<(u64, u32, u64)>> {
    let mut failures = Vec::new();
    for p in (2..=p_max).filter(|&p| is_prime(p)) {
        for r in 1..=r_max {
            let pr = p.pow(r);
            for m in (1..=m_max).filter(|m| m % p != 0) {
                let hi = integer_value(a, m * pr)?;
                let lo = integer_value(a, m * pr / p)?;
                if !(hi - lo).is_multiple_of(&BigInt::from(pr)) {
                    failures.push((p, r, m));
                }
            }
        }
    }
    Ok(failures)
}

fn integer_value(a: &ArithFunction, n: u64) -> Result<BigInt> {
    let v = a.at(n);
    if !v.is_integer() {
        return Err(Error::Domain(format!(
            "{}({n}) = {} is not an integer",
            a.name(),
            crate::fmt_q(&v)
        )));
    }
    Ok(v.to_integer())
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

/// One term of the Pell-type sequence: `d_n + δ_n √2 = (1 + √2)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellPair {
    pub d: BigInt,
    pub delta: BigInt,
}

fn pell_pair(n: u64) -> (BigInt, BigInt) {
    let (mut d0, mut d1) = (BigInt::one(), BigInt::one());
    let (mut e0, mut e1) = (BigInt::zero(), BigInt::one());
    if n == 0 {
        return (d0, e0);
    }
    for _ in 1..n {
        let d2 = &d1 * 2 + &d0;
        let e2 = &e1 * 2 + &e0;
        d0 = std::mem::replace(&mut d1, d2);
        e0 = std::mem::replace(&mut e1, e2);
    }
    (d1, e1)
}

/// `(d_n, δ_n)` for `n = 0..=bound`.
pub fn pell_sequence(bound: u64) -> Vec<PellPair> {
    let mut out = Vec::with_capacity(bound as usize + 1);
    let (mut d0, mut d1) = (BigInt::one(), BigInt::one());
    let (mut e0, mut e1) = (BigInt::zero(), BigInt::one());
    for _ in 0..=bound {
        out.push(PellPair {
            d: d0.clone(),
            delta: e0.clone(),
        });
        let d2 = &d1 * 2 + &d0;
        let e2 = &e1 * 2 + &e0;
        d0 = std::mem::replace(&mut d1, d2);
        e0 = std::mem::replace(&mut e1, e2);
    }
    out
}

/// `ε_r`: `-1` when `4 | r`, else `1`; negative `r` uses `|r|`.
pub fn epsilon(r: i64) -> Result<i64> {
    if r == 0 {
        return Err(Error::Domain("epsilon is undefined at 0".into()));
    }
    Ok(if r.abs() % 4 == 0 { -1 } else { 1 })
}

/// `ε_r` as a rational, for callers that already know `r ≠ 0`.
pub fn eps_q(r: i64) -> Q {
    qi(epsilon(r).expect("nonzero index"))
}

/// Whether the rational is an odd integer.
pub fn is_odd_integer(x: &BigInt) -> bool {
    x.abs().is_odd()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), Ok(1));
        assert_eq!(mobius(6), Ok(1));
        assert_eq!(mobius(12), Ok(0));
        assert_eq!(mobius(30), Ok(-1));
        assert!(mobius(0).is_err());
        assert!(mobius(-3).is_err());
    }

    #[test]
    fn convolution_examples() {
        let one = ArithFunction::one();
        let mu = ArithFunction::mobius();
        assert_eq!(convolve(&one, &mu, 1).unwrap(), qi(1));
        assert_eq!(convolve(&one, &mu, 6).unwrap(), qi(0));
        assert_eq!(convolve(&mu, &ArithFunction::d(), 4).unwrap(), qi(14));
    }

    #[test]
    fn mobius_inverts_one() {
        let one = ArithFunction::one();
        let mu = ArithFunction::mobius();
        for n in 1..=1000 {
            let expected = if n == 1 { qi(1) } else { qi(0) };
            assert_eq!(convolve(&mu, &one, n).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn divisibility_examples() {
        assert!(divisibility_criterion(&ArithFunction::one(), 20).is_empty());
        assert_eq!(divisibility_criterion(&ArithFunction::d(), 4), vec![4]);
        assert!(divisibility_criterion(&ArithFunction::dtilde(), 12).is_empty());
    }

    #[test]
    fn prime_power_examples() {
        assert!(prime_power_criterion(&ArithFunction::one(), 7, 3, 7)
            .unwrap()
            .is_empty());
        assert!(prime_power_criterion(&ArithFunction::dtilde(), 5, 3, 5)
            .unwrap()
            .is_empty());
        let fails = prime_power_criterion(&ArithFunction::d(), 2, 2, 1).unwrap();
        assert!(fails.contains(&(2, 2, 1)));
    }

    #[test]
    fn prime_power_rejects_fractions() {
        let half = ArithFunction::one().scaled(crate::qf(1, 2));
        assert!(matches!(
            prime_power_criterion(&half, 3, 1, 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn pell_examples() {
        let seq = pell_sequence(5);
        let d: Vec<i64> = seq.iter().map(|p| i64::try_from(&p.d).unwrap()).collect();
        let delta: Vec<i64> = seq.iter().map(|p| i64::try_from(&p.delta).unwrap()).collect();
        assert_eq!(d, vec![1, 1, 3, 7, 17, 41]);
        assert_eq!(delta, vec![0, 1, 2, 5, 12, 29]);
        assert_eq!(ArithFunction::d().at(4), qi(17));
    }

    #[test]
    fn pell_norm_identity() {
        // d_n^2 - 2 δ_n^2 = (-1)^n
        for (n, p) in pell_sequence(60).iter().enumerate() {
            let norm = &p.d * &p.d - BigInt::from(2) * &p.delta * &p.delta;
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(norm, BigInt::from(expected));
        }
    }

    #[test]
    fn pell_parities() {
        for (n, p) in pell_sequence(200).iter().enumerate().skip(1) {
            assert!(is_odd_integer(&p.d), "d_{n} even");
            assert_eq!(is_odd_integer(&p.delta), n % 2 == 1, "δ_{n} parity");
        }
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(3), Ok(1));
        assert_eq!(epsilon(4), Ok(-1));
        assert_eq!(epsilon(-8), Ok(-1));
        assert!(epsilon(0).is_err());
    }

    #[test]
    fn prime_power_implies_divisibility() {
        const N: u64 = 30;
        let candidates = [
            ArithFunction::one(),
            ArithFunction::dtilde(),
            ArithFunction::indicator(2),
            ArithFunction::indicator(3),
            ArithFunction::d(),
        ];
        for a in &candidates {
            let mut passes = true;
            for p in (2..=N).filter(|&p| is_prime(p)) {
                let mut r = 1;
                while p.pow(r) <= N {
                    let m = N / p.pow(r);
                    passes &= prime_power_criterion(a, p, r, m).unwrap().is_empty();
                    r += 1;
                }
            }
            if passes {
                assert!(divisibility_criterion(a, N).is_empty(), "{}", a.name());
            }
        }
    }

    fn table_fn(vals: Vec<i64>) -> ArithFunction {
        ArithFunction::from_table("t", vals.into_iter().map(qi).collect())
    }

    proptest! {
        #[test]
        fn convolution_commutes(a in proptest::collection::vec(-5i64..5, 1..40),
                                b in proptest::collection::vec(-5i64..5, 1..40),
                                n in 1u64..200) {
            let (f, g) = (table_fn(a), table_fn(b));
            prop_assert_eq!(convolve(&f, &g, n).unwrap(), convolve(&g, &f, n).unwrap());
        }

        #[test]
        fn convolution_associates(a in proptest::collection::vec(-3i64..3, 1..20),
                                  b in proptest::collection::vec(-3i64..3, 1..20),
                                  c in proptest::collection::vec(-3i64..3, 1..20),
                                  n in 1u64..200) {
            let (f, g, h) = (table_fn(a), table_fn(b), table_fn(c));
            let fg = {
                let (f, g) = (f.clone(), g.clone());
                ArithFunction::new("fg", move |m| convolve(&f, &g, m).unwrap())
            };
            let gh = {
                let (g, h) = (g.clone(), h.clone());
                ArithFunction::new("gh", move |m| convolve(&g, &h, m).unwrap())
            };
            prop_assert_eq!(convolve(&fg, &h, n).unwrap(), convolve(&f, &gh, n).unwrap());
        }

        #[test]
        fn evaluation_is_pure(n in 1u64..300) {
            let d = ArithFunction::d();
            prop_assert_eq!(d.at(n), d.at(n));
        }
    }
}
