//! Evaluation of parsed expressions to truncated series over an enveloping algebra.

use num_traits::{One, Zero};
use zform::liealg::{AlgebraKind, Gen};
use zform::series::Series;
use zform::uea::{UElem, Uea};
use zform::{qi, Q};

use crate::expr::Expr;
use crate::CliError;

/// A series in `u`, `v` with coefficients in the enveloping algebra.
pub type Value = Series<UElem>;

/// Evaluates expressions in one algebra at one truncation order.
pub struct Evaluator {
    pub uea: Uea,
    pub order: usize,
}

fn type_error(message: impl Into<String>) -> CliError {
    CliError::Type {
        offset: None,
        message: message.into(),
    }
}

impl Evaluator {
    pub fn new(kind: AlgebraKind, order: usize) -> Self {
        Evaluator {
            uea: Uea::new(kind),
            order,
        }
    }

    fn constant(&self, e: UElem) -> Value {
        Series::constant(&self.uea, e, self.order)
    }

    pub fn eval(&self, e: &Expr) -> Result<Value, CliError> {
        let u = &self.uea;
        let n = self.order;
        Ok(match e {
            Expr::Num(q) => self.constant(UElem::scalar(q.clone())),
            Expr::Gen(g) => {
                if !g.belongs_to(u.kind()) {
                    return Err(CliError::UnknownGenerator {
                        offset: None,
                        name: g.render(),
                        algebra: Some(u.kind()),
                    });
                }
                self.constant(u.gen(*g))
            }
            Expr::U => Series::monomial(u, UElem::one(), 1, 0, n),
            Expr::V => Series::monomial(u, UElem::one(), 0, 1, n),
            Expr::Neg(a) => self.eval(a)?.neg(u),
            Expr::Add(a, b) => self.eval(a)?.add(u, &self.eval(b)?),
            Expr::Sub(a, b) => self.eval(a)?.sub(u, &self.eval(b)?),
            Expr::Mul(a, b) => self.eval(a)?.mul(u, &self.eval(b)?),
            Expr::Pow(a, k) => self.eval(a)?.pow(u, *k),
            Expr::DivPow(a, k) => {
                if let Expr::Gen(g) = **a {
                    self.eval(a)?;
                    return Ok(self.constant(u.divided_power(g, *k)));
                }
                let s = self.eval(a)?;
                self.check_commuting(&s)?;
                s.pow(u, *k).scale(u, &(Q::one() / zform::factorial(*k)))
            }
            Expr::Binom(z, k) => {
                let (alpha, beta, gamma) = self.cartan_form(&self.eval(z)?)?;
                self.constant(u.binomial_element(&alpha, &beta, &gamma, *k))
            }
            Expr::Exp(a) => exp_nc(u, &self.eval(a)?)?,
            Expr::Ln(a) => ln_nc(u, &self.eval(a)?)?,
            Expr::Inv(a) => self.eval(a)?.invert(u)?,
            Expr::Root(a, m) => {
                if *m == 0 {
                    return Err(type_error("root needs a positive index"));
                }
                self.eval(a)?.root(u, *m)?
            }
            Expr::Pow1p(a, q) => self.eval(a)?.pow_one_plus_q(u, q)?,
        })
    }

    /// A divided power of a series is defined when its coefficients are Lie
    /// elements spanning a commutative subalgebra.
    fn check_commuting(&self, s: &Value) -> Result<(), CliError> {
        let mut gens: Vec<Gen> = Vec::new();
        for (_, _, e) in s.iter() {
            for m in e.terms().keys() {
                match m.factors() {
                    [] => {}
                    [(g, 1)] => gens.push(*g),
                    _ => return Err(type_error("divided powers apply to generators or sums of commuting generators")),
                }
            }
        }
        let alg = self.uea.algebra();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if !alg.commute(*a, *b) {
                    return Err(type_error(format!(
                        "divided power of a sum of non-commuting terms ({a} and {b})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Read `z = α·h + β·c + γ` off a constant series.
    fn cartan_form(&self, s: &Value) -> Result<(Q, Q, Q), CliError> {
        if s.iter().any(|(i, j, e)| i + j > 0 && !e.is_zero()) {
            return Err(type_error("binomial elements need a constant Cartan form"));
        }
        let h = if self.uea.kind() == AlgebraKind::Sl2 { Gen::hs() } else { Gen::h(0) };
        let (mut alpha, mut beta, mut gamma) = (Q::zero(), Q::zero(), Q::zero());
        for (m, c) in s.constant_term().terms() {
            match m.factors() {
                [] => gamma = c.clone(),
                [(g, 1)] if *g == h => alpha = c.clone(),
                [(g, 1)] if *g == Gen::c() => beta = c.clone(),
                _ => {
                    return Err(type_error(format!(
                        "binomial elements need a form a*{h} + b*c + q, found {}",
                        s.constant_term().render()
                    )))
                }
            }
        }
        Ok((alpha, beta, gamma))
    }
}

/// `Σ s^k/k!` with ordered products.
pub fn exp_nc(u: &Uea, s: &Value) -> Result<Value, CliError> {
    if !s.constant_term().is_zero() {
        return Err(type_error("exp needs a series without constant term (multiply by u or v)"));
    }
    let mut out = Series::one(u, s.cap());
    let mut term = Series::one(u, s.cap());
    for k in 1..=s.cap() {
        term = term.mul(u, s).scale(u, &(Q::one() / qi(k as i64)));
        out = out.add(u, &term);
    }
    Ok(out)
}

/// `ln(1+s) = Σ (-1)^{k-1} s^k/k` with ordered products.
pub fn ln_nc(u: &Uea, a: &Value) -> Result<Value, CliError> {
    if *a.constant_term() != UElem::one() {
        return Err(type_error("ln needs a series with constant term 1"));
    }
    let s = a.sub(u, &Series::one(u, a.cap()));
    let mut out = Series::zero(u, a.cap());
    let mut term = Series::one(u, a.cap());
    for k in 1..=a.cap() {
        term = term.mul(u, &s);
        let c = if k % 2 == 1 { qi(1) } else { qi(-1) } / qi(k as i64);
        out = out.add(u, &term.scale(u, &c));
    }
    Ok(out)
}

/// Whether a value has no `u`, `v` dependence.
pub fn is_constant(s: &Value) -> bool {
    s.iter().all(|(i, j, e)| i + j == 0 || e.is_zero())
}

/// Nonzero coefficients in degree order.
pub fn nonzero_terms(s: &Value) -> Vec<(usize, usize, UElem)> {
    let mut out: Vec<_> = s
        .iter()
        .filter(|(_, _, e)| !e.is_zero())
        .map(|(i, j, e)| (i, j, e.clone()))
        .collect();
    out.sort_by_key(|(i, j, _)| (i + j, std::cmp::Reverse(*i)));
    out
}

/// `u^i v^j` with exponents 0 and 1 elided.
pub fn monomial_uv(i: usize, j: usize) -> String {
    let p = |x: &str, k: usize| match k {
        0 => String::new(),
        1 => x.to_string(),
        _ => format!("{x}^{k}"),
    };
    match (p("u", i), p("v", j)) {
        (a, b) if a.is_empty() && b.is_empty() => "1".into(),
        (a, b) if a.is_empty() => b,
        (a, b) if b.is_empty() => a,
        (a, b) => format!("{a}*{b}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn ev(kind: AlgebraKind, n: usize, s: &str) -> Value {
        Evaluator::new(kind, n).eval(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn straighten_bracket() {
        let v = ev(AlgebraKind::A22, 3, "x+[0]*x-[1]");
        assert!(is_constant(&v));
        assert_eq!(v.constant_term().render(), "x-[1]*x+[0] + h[1]");
    }

    #[test]
    fn series_values() {
        let v = ev(AlgebraKind::Sl2, 4, "exp(e*u)*exp(f*v) - exp(f*v*inv(1+u*v))*pow1p(u*v, 0)");
        assert!(!is_constant(&v));
        let w = ev(AlgebraKind::Sl2, 4, "ln(exp(e*u))");
        assert_eq!(w, ev(AlgebraKind::Sl2, 4, "e*u"));
        assert_eq!(ev(AlgebraKind::Sl2, 3, "(e*u)^(2)"), ev(AlgebraKind::Sl2, 3, "1/2*e^2*u^2"));
    }

    #[test]
    fn type_errors() {
        let e = Evaluator::new(AlgebraKind::A11, 3);
        assert!(matches!(e.eval(&parse("(x+[0] + x-[0])^(2)").unwrap()), Err(CliError::Type { .. })));
        assert!(e.eval(&parse("(x+[0] + x+[1])^(2)").unwrap()).is_ok());
        assert!(matches!(e.eval(&parse("C(x+[0], 2)").unwrap()), Err(CliError::Type { .. })));
        assert!(matches!(e.eval(&parse("exp(x+[0])").unwrap()), Err(CliError::Type { .. })));
        assert!(matches!(e.eval(&parse("e").unwrap()), Err(CliError::UnknownGenerator { .. })));
        let b = e.eval(&parse("C(h[0] + c, 2)").unwrap()).unwrap();
        assert_eq!(b.constant_term(), &e.uea.binomial_element(&qi(1), &qi(1), &qi(0), 2));
    }
}
