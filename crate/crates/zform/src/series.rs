//! Truncated power series in `u`, `v` over an arbitrary coefficient ring.
//!
//! A series stores every coefficient of total degree at most its cap; all
//! arithmetic silently drops higher terms. Univariate series use only the
//! pure powers of `u`.

use std::fmt;

use num_traits::{One, Zero};

use crate::liealg::WPoly;
use crate::symfun::SymFunc;
use crate::{fmt_q, qi, Error, Result, Q};

/// A coefficient ring, given as a context object so that rings with
/// runtime state (an enveloping algebra with its cache) fit the same shape.
pub trait Ring {
    type E: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn scale(&self, a: &Self::E, q: &Q) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn render(&self, a: &Self::E) -> String;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }

    fn from_q(&self, q: &Q) -> Self::E {
        self.scale(&self.one(), q)
    }

    fn commutes(&self, a: &Self::E, b: &Self::E) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Whether multiplication is known to be commutative.
    fn is_commutative(&self) -> bool {
        false
    }
}

/// The rationals.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type E = Q;
    fn zero(&self) -> Q {
        Q::zero()
    }
    fn one(&self) -> Q {
        Q::one()
    }
    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn neg(&self, a: &Q) -> Q {
        -a
    }
    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }
    fn scale(&self, a: &Q, q: &Q) -> Q {
        a * q
    }
    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &Q) -> String {
        fmt_q(a)
    }
    fn is_commutative(&self) -> bool {
        true
    }
}

/// Symmetric functions in the power sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct SymFuncs;

impl Ring for SymFuncs {
    type E = SymFunc;
    fn zero(&self) -> SymFunc {
        SymFunc::zero()
    }
    fn one(&self) -> SymFunc {
        SymFunc::one()
    }
    fn add(&self, a: &SymFunc, b: &SymFunc) -> SymFunc {
        a.add(b)
    }
    fn neg(&self, a: &SymFunc) -> SymFunc {
        a.neg()
    }
    fn mul(&self, a: &SymFunc, b: &SymFunc) -> SymFunc {
        a.mul(b)
    }
    fn scale(&self, a: &SymFunc, q: &Q) -> SymFunc {
        a.scale(q)
    }
    fn is_zero(&self, a: &SymFunc) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &SymFunc) -> String {
        a.render_p()
    }
    fn is_commutative(&self) -> bool {
        true
    }
}

/// Laurent polynomials in `w` (or `T`).
#[derive(Debug, Clone, Copy, Default)]
pub struct WPolys;

impl Ring for WPolys {
    type E = WPoly;
    fn zero(&self) -> WPoly {
        WPoly::zero()
    }
    fn one(&self) -> WPoly {
        WPoly::one()
    }
    fn add(&self, a: &WPoly, b: &WPoly) -> WPoly {
        a.add(b)
    }
    fn neg(&self, a: &WPoly) -> WPoly {
        a.neg()
    }
    fn mul(&self, a: &WPoly, b: &WPoly) -> WPoly {
        a.mul(b)
    }
    fn scale(&self, a: &WPoly, q: &Q) -> WPoly {
        a.scale(q)
    }
    fn is_zero(&self, a: &WPoly) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &WPoly) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.terms()
            .iter()
            .map(|(p, c)| format!("{}*w^{}", fmt_q(c), p))
            .collect::<Vec<_>>()
            .join(" + ")
    }
    fn is_commutative(&self) -> bool {
        true
    }
}

/// One of the two formal variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    U,
    V,
}

/// A truncated series: `coeffs[n][i]` is the coefficient of `u^i v^(n-i)`.
#[derive(Clone, PartialEq)]
pub struct Series<E> {
    cap: usize,
    coeffs: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq + fmt::Debug> fmt::Debug for Series<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series")
            .field("cap", &self.cap)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

/// First coefficient where two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diff {
    pub deg_u: usize,
    pub deg_v: usize,
    pub left: String,
    pub right: String,
}

impl<E: Clone + PartialEq + fmt::Debug> Series<E> {
    pub fn zero<R: Ring<E = E>>(r: &R, cap: usize) -> Self {
        Series {
            cap,
            coeffs: (0..=cap).map(|n| vec![r.zero(); n + 1]).collect(),
        }
    }

    pub fn constant<R: Ring<E = E>>(r: &R, e: E, cap: usize) -> Self {
        let mut s = Self::zero(r, cap);
        s.coeffs[0][0] = e;
        s
    }

    pub fn one<R: Ring<E = E>>(r: &R, cap: usize) -> Self {
        Self::constant(r, r.one(), cap)
    }

    /// `e·u^i v^j`, or zero if beyond the cap.
    pub fn monomial<R: Ring<E = E>>(r: &R, e: E, i: usize, j: usize, cap: usize) -> Self {
        let mut s = Self::zero(r, cap);
        if i + j <= cap {
            s.coeffs[i + j][i] = e;
        }
        s
    }

    /// Univariate `Σ f(k) u^k`.
    pub fn from_fn_u<R: Ring<E = E>>(r: &R, cap: usize, f: impl Fn(usize) -> E) -> Self {
        let mut s = Self::zero(r, cap);
        for k in 0..=cap {
            s.coeffs[k][k] = f(k);
        }
        s
    }

    /// Bivariate `Σ f(i, j) u^i v^j`.
    pub fn from_fn<R: Ring<E = E>>(r: &R, cap: usize, f: impl Fn(usize, usize) -> E) -> Self {
        let mut s = Self::zero(r, cap);
        for n in 0..=cap {
            for i in 0..=n {
                s.coeffs[n][i] = f(i, n - i);
            }
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Coefficient of `u^i v^j`; `None` beyond the cap.
    pub fn coeff(&self, i: usize, j: usize) -> Option<&E> {
        self.coeffs.get(i + j).map(|row| &row[i])
    }

    pub fn set(&mut self, i: usize, j: usize, e: E) {
        if i + j <= self.cap {
            self.coeffs[i + j][i] = e;
        }
    }

    /// Coefficients `(i, j, c)` in order of total degree, then `i`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(i, c)| (i, n - i, c)))
    }

    pub fn constant_term(&self) -> &E {
        &self.coeffs[0][0]
    }

    /// Whether only pure powers of `u` occur.
    pub fn is_univariate<R: Ring<E = E>>(&self, r: &R) -> bool {
        self.iter().all(|(_, j, c)| j == 0 || r.is_zero(c))
    }

    pub fn map<E2, R2>(&self, r2: &R2, f: impl Fn(&E) -> E2) -> Series<E2>
    where
        E2: Clone + PartialEq + fmt::Debug,
        R2: Ring<E = E2>,
    {
        let _ = r2;
        Series {
            cap: self.cap,
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn try_map<E2, R2>(&self, r2: &R2, f: impl Fn(&E) -> Result<E2>) -> Result<Series<E2>>
    where
        E2: Clone + PartialEq + fmt::Debug,
        R2: Ring<E = E2>,
    {
        let _ = r2;
        let mut coeffs = Vec::with_capacity(self.cap + 1);
        for row in &self.coeffs {
            coeffs.push(row.iter().map(&f).collect::<Result<Vec<_>>>()?);
        }
        Ok(Series {
            cap: self.cap,
            coeffs,
        })
    }

    /// Forget every term above total degree `n`.
    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.cap);
        Series {
            cap: n,
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add<R: Ring<E = E>>(&self, r: &R, o: &Self) -> Self {
        let cap = self.cap.min(o.cap);
        Series {
            cap,
            coeffs: (0..=cap)
                .map(|n| {
                    (0..=n)
                        .map(|i| r.add(&self.coeffs[n][i], &o.coeffs[n][i]))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn neg<R: Ring<E = E>>(&self, r: &R) -> Self {
        self.map(r, |c| r.neg(c))
    }

    pub fn sub<R: Ring<E = E>>(&self, r: &R, o: &Self) -> Self {
        self.add(r, &o.neg(r))
    }

    pub fn scale<R: Ring<E = E>>(&self, r: &R, q: &Q) -> Self {
        self.map(r, |c| r.scale(c, q))
    }

    /// `e·s`.
    pub fn left_mul<R: Ring<E = E>>(&self, r: &R, e: &E) -> Self {
        self.map(r, |c| r.mul(e, c))
    }

    /// `s·e`.
    pub fn right_mul<R: Ring<E = E>>(&self, r: &R, e: &E) -> Self {
        self.map(r, |c| r.mul(c, e))
    }

    /// Product of the homogeneous components `a_k` and `b_l` into `out_{k+l}`.
    fn accumulate<R: Ring<E = E>>(r: &R, out: &mut [E], a: &[E], b: &[E]) {
        for (i, x) in a.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if r.is_zero(y) {
                    continue;
                }
                out[i + j] = r.add(&out[i + j], &r.mul(x, y));
            }
        }
    }

    pub fn mul<R: Ring<E = E>>(&self, r: &R, o: &Self) -> Self {
        let cap = self.cap.min(o.cap);
        let mut out = Self::zero(r, cap);
        for n in 0..=cap {
            for k in 0..=n {
                Self::accumulate(r, &mut out.coeffs[n], &self.coeffs[k], &o.coeffs[n - k]);
            }
        }
        out
    }

    /// Product of a list, left to right.
    pub fn product<R: Ring<E = E>>(r: &R, cap: usize, factors: &[Self]) -> Self {
        factors
            .iter()
            .fold(Self::one(r, cap), |acc, f| acc.mul(r, f))
    }

    pub fn pow<R: Ring<E = E>>(&self, r: &R, k: u32) -> Self {
        (0..k).fold(Self::one(r, self.cap), |acc, _| acc.mul(r, self))
    }

    fn check_commuting<R: Ring<E = E>>(&self, r: &R) {
        if !cfg!(debug_assertions) || r.is_commutative() {
            return;
        }
        let nz: Vec<&E> = self
            .coeffs
            .iter()
            .flatten()
            .filter(|c| !r.is_zero(c))
            .collect();
        for (a, x) in nz.iter().enumerate() {
            for y in &nz[a + 1..] {
                debug_assert!(r.commutes(x, y), "series coefficients do not commute");
            }
        }
    }

    /// `exp(s)` for `s` without constant term and pairwise commuting coefficients.
    pub fn exp<R: Ring<E = E>>(&self, r: &R) -> Result<Self> {
        if !r.is_zero(self.constant_term()) {
            return Err(Error::ConstantTerm("exp needs a zero constant term".into()));
        }
        self.check_commuting(r);
        let mut out = Self::one(r, self.cap);
        for n in 1..=self.cap {
            let mut acc = vec![r.zero(); n + 1];
            for k in 1..=n {
                let sk: Vec<E> = self.coeffs[k].iter().map(|c| r.scale(c, &qi(k as i64))).collect();
                Self::accumulate(r, &mut acc, &sk, &out.coeffs[n - k]);
            }
            let inv = Q::one() / qi(n as i64);
            out.coeffs[n] = acc.iter().map(|c| r.scale(c, &inv)).collect();
        }
        Ok(out)
    }

    /// `ln(s)` for `s` with constant term 1.
    pub fn ln<R: Ring<E = E>>(&self, r: &R) -> Result<Self> {
        if self.constant_term() != &r.one() {
            return Err(Error::ConstantTerm("ln needs constant term 1".into()));
        }
        self.check_commuting(r);
        let mut out = Self::zero(r, self.cap);
        for n in 1..=self.cap {
            let mut acc: Vec<E> = self.coeffs[n].iter().map(|c| r.scale(c, &qi(n as i64))).collect();
            for k in 1..n {
                let sk: Vec<E> = out.coeffs[k].iter().map(|c| r.scale(c, &qi(-(k as i64)))).collect();
                Self::accumulate(r, &mut acc, &sk, &self.coeffs[n - k]);
            }
            let inv = Q::one() / qi(n as i64);
            out.coeffs[n] = acc.iter().map(|c| r.scale(c, &inv)).collect();
        }
        Ok(out)
    }

    /// `s^{-1}` for `s` with constant term 1.
    pub fn invert<R: Ring<E = E>>(&self, r: &R) -> Result<Self> {
        if self.constant_term() != &r.one() {
            return Err(Error::ConstantTerm("invert needs constant term 1".into()));
        }
        let mut out = Self::one(r, self.cap);
        for n in 1..=self.cap {
            let mut acc = vec![r.zero(); n + 1];
            for k in 1..=n {
                Self::accumulate(r, &mut acc, &self.coeffs[k], &out.coeffs[n - k]);
            }
            out.coeffs[n] = acc.iter().map(|c| r.neg(c)).collect();
        }
        Ok(out)
    }

    /// `(1+s)^a = exp(a·ln(1+s))` for `a` commuting with every coefficient.
    pub fn pow_one_plus<R: Ring<E = E>>(&self, r: &R, a: &E) -> Result<Self> {
        if !r.is_zero(self.constant_term()) {
            return Err(Error::ConstantTerm("pow_one_plus needs a zero constant term".into()));
        }
        let one_plus = Self::one(r, self.cap).add(r, self);
        one_plus.ln(r)?.left_mul(r, a).exp(r)
    }

    /// `(1+s)^q` for a rational exponent.
    pub fn pow_one_plus_q<R: Ring<E = E>>(&self, r: &R, q: &Q) -> Result<Self> {
        self.pow_one_plus(r, &r.from_q(q))
    }

    /// The unique `t` with constant term 1 and `t^m = s`.
    pub fn root<R: Ring<E = E>>(&self, r: &R, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("root needs m ≥ 1".into()));
        }
        self.ln(r)?.scale(r, &(Q::one() / qi(m as i64))).exp(r)
    }

    /// Replace `u ↦ a·u^{i1}v^{j1}` and `v ↦ b·u^{i2}v^{j2}`.
    pub fn subst_monomial<R: Ring<E = E>>(
        &self,
        r: &R,
        u_img: (&Q, usize, usize),
        v_img: (&Q, usize, usize),
    ) -> Result<Self> {
        let (a, i1, j1) = u_img;
        let (b, i2, j2) = v_img;
        if i1 + j1 == 0 || i2 + j2 == 0 {
            return Err(Error::ConstantTerm("substituted variable must have positive degree".into()));
        }
        let mut out = Self::zero(r, self.cap);
        for (p, q, c) in self.iter() {
            if r.is_zero(c) {
                continue;
            }
            let (ni, nj) = (p * i1 + q * i2, p * j1 + q * j2);
            if ni + nj > self.cap {
                continue;
            }
            let f = pow_q(a, p) * pow_q(b, q);
            let cur = out.coeffs[ni + nj][ni].clone();
            out.coeffs[ni + nj][ni] = r.add(&cur, &r.scale(c, &f));
        }
        Ok(out)
    }

    /// `Σ s_k t^k` for univariate `s` and a rational series `t` without constant term.
    pub fn substitute<R: Ring<E = E>>(&self, r: &R, t: &Series<Q>) -> Result<Self> {
        if !t.constant_term().is_zero() {
            return Err(Error::ConstantTerm("substituted series must vanish at 0".into()));
        }
        let cap = self.cap.min(t.cap);
        let mut out = Self::zero(r, cap);
        let mut tk = Series::one(&Rationals, cap);
        for k in 0..=cap {
            let sk = &self.coeffs[k][k];
            if !r.is_zero(sk) {
                for (i, j, q) in tk.iter() {
                    if !q.is_zero() {
                        let cur = out.coeffs[i + j][i].clone();
                        out.coeffs[i + j][i] = r.add(&cur, &r.scale(sk, q));
                    }
                }
            }
            tk = tk.mul(&Rationals, &t.truncate(cap));
        }
        Ok(out)
    }

    /// Formal partial derivative; the cap drops by one.
    pub fn derivative<R: Ring<E = E>>(&self, r: &R, var: Var) -> Self {
        let cap = self.cap.saturating_sub(1);
        let mut out = Self::zero(r, cap);
        for (i, j, c) in self.iter() {
            let (k, ni, nj) = match var {
                Var::U if i > 0 => (i, i - 1, j),
                Var::V if j > 0 => (j, i, j - 1),
                _ => continue,
            };
            if ni + nj <= cap {
                out.coeffs[ni + nj][ni] = r.scale(c, &qi(k as i64));
            }
        }
        out
    }

    /// First coefficient, in degree order, where the two series differ.
    pub fn first_diff<R: Ring<E = E>>(&self, r: &R, o: &Self) -> Option<Diff> {
        let cap = self.cap.min(o.cap);
        for n in 0..=cap {
            for i in 0..=n {
                let (a, b) = (&self.coeffs[n][i], &o.coeffs[n][i]);
                if a != b {
                    return Some(Diff {
                        deg_u: i,
                        deg_v: n - i,
                        left: r.render(a),
                        right: r.render(b),
                    });
                }
            }
        }
        None
    }
}

fn pow_q(a: &Q, k: usize) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * a)
}

impl Series<Q> {
    /// Univariate rational series from its coefficient list.
    pub fn from_coeffs(cap: usize, c: &[Q]) -> Self {
        Self::from_fn_u(&Rationals, cap, |k| c.get(k).cloned().unwrap_or_else(Q::zero))
    }

    /// Coefficients of `u^0..=u^cap`.
    pub fn u_coeffs(&self) -> Vec<Q> {
        (0..=self.cap).map(|k| self.coeffs[k][k].clone()).collect()
    }

    /// `(p_+, p_-, p_0)` with `p(t) = p_+(t) + t·p_-(t)`, `p_±` even and
    /// `p_0(t²) = p_+(t)·p_-(t)/2`.
    pub fn even_odd_split(&self) -> (Series<Q>, Series<Q>, Series<Q>) {
        let c = self.u_coeffs();
        let cap = self.cap;
        let plus = Series::from_fn_u(&Rationals, cap, |k| {
            if k % 2 == 0 { c[k].clone() } else { Q::zero() }
        });
        let minus = Series::from_fn_u(&Rationals, cap, |k| {
            if k % 2 == 0 && k < cap { c[k + 1].clone() } else { Q::zero() }
        });
        let prod = plus.mul(&Rationals, &minus).scale(&Rationals, &crate::qf(1, 2));
        let pc = prod.u_coeffs();
        let zero = Series::from_fn_u(&Rationals, cap, |k| {
            pc.get(2 * k).cloned().unwrap_or_else(Q::zero)
        });
        (plus, minus, zero)
    }

    /// Inverse of [`Series::even_odd_split`] on `(p_+, p_-)`.
    pub fn recombine(plus: &Series<Q>, minus: &Series<Q>) -> Series<Q> {
        let cap = plus.cap.min(minus.cap);
        let t = Series::monomial(&Rationals, Q::one(), 1, 0, cap);
        plus.add(&Rationals, &t.mul(&Rationals, minus))
    }
}
