//! Catalog of commutation identities checked by exact comparison of
//! truncated series, integrality sweeps and negative controls.
//!
//! Every identity is an equality in `U[[u,v]]` for one of the enveloping
//! algebras. Both sides are built with exact arithmetic up to a total
//! degree cap and compared coefficient by coefficient.

use std::ops::RangeInclusive;
use std::sync::Arc;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arithfun::eps_q;
use crate::liealg::{Algebra, AlgebraKind, Gen, LieElem, Mutation, WPoly};
use crate::series::{Rationals, Series, SymFuncs, Var, WPolys};
use crate::symfun::{hat_h, hd, lambda_m, tilde_h, tilde_lambda_m, PMono, SymFunc};
use crate::uea::{symfun_to_uea, Basis, CartanVar, FamilyKind, Label, Part, UElem, Uea};
use crate::{qf, qi, Error, Result, Q};

/// Ceiling used when none is configured.
pub const DEFAULT_CEILING_MS: u64 = 600_000;

/// Growth of the cost estimate per unit of order.
const COST_GROWTH: f64 = 2.5;

/// Environment variable overriding every default order.
pub const ORDER_ENV: &str = "ZFORM_ORDER";

type S = Series<UElem>;

/// Builds one side of an identity in the given algebra at the given cap.
pub type Side = Arc<dyn Fn(&Uea, usize) -> Result<S> + Send + Sync>;

/// One instance of an identity.
#[derive(Clone)]
pub struct Case {
    pub label: String,
    pub left: Side,
    pub right: Side,
}

/// A named identity with its instances.
#[derive(Clone)]
pub struct IdentityEntry {
    pub tag: String,
    pub algebra: AlgebraKind,
    pub paper_ref: String,
    pub default_order: usize,
    pub cases: Vec<Case>,
    cost_ms: f64,
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("tag", &self.tag)
            .field("algebra", &self.algebra)
            .field("default_order", &self.default_order)
            .field("cases", &self.cases.len())
            .finish()
    }
}

impl IdentityEntry {
    /// Default order, overridden by [`ORDER_ENV`] when set.
    pub fn effective_order(&self) -> usize {
        std::env::var(ORDER_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .filter(|n| *n >= 1)
            .unwrap_or(self.default_order)
    }

    /// Estimated wall time at `order`, in milliseconds.
    pub fn estimate_ms(&self, order: usize) -> u64 {
        let k = order as f64 - self.default_order as f64;
        (self.cost_ms * COST_GROWTH.powf(k)).ceil() as u64
    }
}

/// The first coefficient where the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstDiff {
    pub case: String,
    pub deg_u: usize,
    pub deg_v: usize,
    pub left: String,
    pub right: String,
}

/// Outcome of checking one entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tag: String,
    pub paper_ref: String,
    pub order: usize,
    pub pass: bool,
    pub first_diff: Option<FirstDiff>,
    pub elapsed_ms: u64,
    pub tolerance: u32,
}

fn entry(
    tag: &str,
    algebra: AlgebraKind,
    paper_ref: &str,
    default_order: usize,
    cost_ms: f64,
    cases: Vec<Case>,
) -> IdentityEntry {
    IdentityEntry {
        tag: tag.into(),
        algebra,
        paper_ref: paper_ref.into(),
        default_order,
        cases,
        cost_ms,
    }
}

fn case(
    label: impl Into<String>,
    left: impl Fn(&Uea, usize) -> Result<S> + Send + Sync + 'static,
    right: impl Fn(&Uea, usize) -> Result<S> + Send + Sync + 'static,
) -> Case {
    Case {
        label: label.into(),
        left: Arc::new(left),
        right: Arc::new(right),
    }
}

fn single(
    tag: &str,
    algebra: AlgebraKind,
    paper_ref: &str,
    default_order: usize,
    cost_ms: f64,
    left: impl Fn(&Uea, usize) -> Result<S> + Send + Sync + 'static,
    right: impl Fn(&Uea, usize) -> Result<S> + Send + Sync + 'static,
) -> IdentityEntry {
    entry(tag, algebra, paper_ref, default_order, cost_ms, vec![case("", left, right)])
}

// ---------------------------------------------------------------------------
// Series builders

const QR: Rationals = Rationals;

fn sign(k: i64) -> Q {
    if k.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

fn qpow(a: &Q, k: usize) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * a)
}

/// Rational polynomial `Σ c·u^i v^j`.
fn qs(n: usize, terms: &[(i64, usize, usize)]) -> Series<Q> {
    let mut s = Series::zero(&QR, n);
    for &(c, i, j) in terms {
        if i + j <= n {
            let cur = s.coeff(i, j).cloned().unwrap_or_else(Q::zero);
            s.set(i, j, cur + qi(c));
        }
    }
    s
}

fn qdiv(a: &Series<Q>, b: &Series<Q>) -> Result<Series<Q>> {
    Ok(a.mul(&QR, &b.invert(&QR)?))
}

/// Polynomial `Σ c·w^p u^i v^j` with coefficients in `Q[w]`.
fn ws(n: usize, terms: &[(i64, i32, usize, usize)]) -> Series<WPoly> {
    let mut s = Series::zero(&WPolys, n);
    for &(c, p, i, j) in terms {
        if i + j <= n {
            let mut cur = s.coeff(i, j).cloned().unwrap_or_default();
            cur.add_term(p, qi(c));
            s.set(i, j, cur);
        }
    }
    s
}

fn wdiv(a: &Series<WPoly>, b: &Series<WPoly>) -> Result<Series<WPoly>> {
    Ok(a.mul(&WPolys, &b.invert(&WPolys)?))
}

/// `ξ(w) ↦ ξ(w²)` coefficientwise.
fn wsquare(s: &Series<WPoly>) -> Series<WPoly> {
    s.map(&WPolys, |p| p.substitute(&Q::one(), 2))
}

fn el(g: Gen) -> UElem {
    UElem::gen(g)
}

fn lg(g: Gen) -> LieElem {
    LieElem::gen(g)
}

/// `s ⊗ x` for a rational series and a Lie element.
fn lie_q(u: &Uea, s: &Series<Q>, x: &LieElem) -> S {
    s.map(u, |c| UElem::from_lie(&x.scale(c)))
}

/// `ξ(w).g` coefficientwise.
fn lie_w(u: &Uea, s: &Series<WPoly>, g: Gen) -> Result<S> {
    let alg = *u.algebra();
    s.try_map(u, |p| Ok(UElem::from_lie(&alg.w_act(p, g)?)))
}

/// `P(T).x` coefficientwise, with `WPoly` read as a Laurent polynomial in `T`.
fn lie_t(u: &Uea, s: &Series<WPoly>, x: &LieElem) -> S {
    let alg = *u.algebra();
    s.map(u, |p| UElem::from_lie(&alg.act_t(p, x)))
}

/// Series from an explicit Lie coefficient rule.
fn lie_fn(u: &Uea, n: usize, f: impl Fn(usize, usize) -> LieElem) -> S {
    Series::from_fn(u, n, |i, j| UElem::from_lie(&f(i, j)))
}

/// `Σ_k p_k T^{tp·k} u^{a·k+si} v^{b·k+sj}` for a univariate rational `p`.
fn op_series(n: usize, p: &Series<Q>, a: usize, b: usize, tp: i32, si: usize, sj: usize) -> Series<WPoly> {
    let c = p.u_coeffs();
    let mut s = Series::zero(&WPolys, n);
    for (k, ck) in c.iter().enumerate() {
        let (i, j) = (a * k + si, b * k + sj);
        if i + j <= n && !ck.is_zero() {
            s.set(i, j, WPoly::mono(tp * k as i32, ck.clone()));
        }
    }
    s
}

/// `Σ_k s^k / k!` with the true (ordered) product.
fn exp_nc(u: &Uea, s: &S) -> Result<S> {
    if !s.constant_term().is_zero() {
        return Err(Error::ConstantTerm("exp needs a zero constant term".into()));
    }
    let n = s.cap();
    let mut out = Series::one(u, n);
    let mut term = Series::one(u, n);
    for k in 1..=n {
        term = term.mul(u, s).scale(u, &qf(1, k as i64));
        out = out.add(u, &term);
    }
    Ok(out)
}

fn prod(u: &Uea, n: usize, factors: &[S]) -> S {
    Series::product(u, n, factors)
}

/// `exp(x·u^i v^j)`.
fn expg(u: &Uea, n: usize, x: &LieElem, i: usize, j: usize) -> Result<S> {
    exp_nc(u, &lie_q(u, &qs(n, &[(1, i, j)]), x))
}

/// `exp(s·x)` for a rational series `s`.
fn expq(u: &Uea, s: &Series<Q>, x: &LieElem) -> Result<S> {
    exp_nc(u, &lie_q(u, s, x))
}

/// `(1+s)^z = exp(ln(1+s)·z)` for a Cartan element `z`.
fn cpow(u: &Uea, s: &Series<Q>, z: &LieElem) -> Result<S> {
    let l = Series::one(&QR, s.cap()).add(&QR, s).ln(&QR)?;
    exp_nc(u, &lie_q(u, &l, z))
}

/// `exp(Σ_r coef(r)·h_{idx(r)} u^{ri} v^{rj})`.
fn hser(u: &Uea, n: usize, coef: impl Fn(usize) -> Q, idx: impl Fn(usize) -> i32, i: usize, j: usize) -> Result<S> {
    let mut s = Series::zero(u, n);
    let mut r = 1;
    while r * (i + j) <= n {
        s.set(r * i, r * j, UElem::from_lie(&LieElem::term(Gen::h(idx(r)), coef(r))));
        r += 1;
    }
    exp_nc(u, &s)
}

/// Coefficient sequence `a_r` of an imaginary generating series.
#[derive(Clone, Copy)]
enum Fam {
    Hat,
    Tilde,
    Half,
}

impl Fam {
    fn a(self, r: usize) -> Q {
        match self {
            Fam::Hat => Q::one(),
            Fam::Tilde => eps_q(r as i64),
            Fam::Half => qf(1, 2),
        }
    }
}

/// `λ_m` of the family series at argument `c·u^i v^j`:
/// `exp(Σ (-1)^{r-1} a_r c^r h_{mr} u^{ri} v^{rj} / r)`.
fn fam(u: &Uea, n: usize, f: Fam, m: i32, c: Q, i: usize, j: usize) -> Result<S> {
    hser(
        u,
        n,
        |r| sign(r as i64 - 1) * f.a(r) * qpow(&c, r) / qi(r as i64),
        |r| m * r as i32,
        i,
        j,
    )
}

/// `Σ_k c^k f_k u^{ik} v^{jk}` for symmetric functions read in `h_{±r}`.
fn sym_series(u: &Uea, n: usize, f: &[SymFunc], positive: bool, c: &Q, i: usize, j: usize) -> S {
    let mut s = Series::zero(u, n);
    for (k, fk) in f.iter().enumerate() {
        if k * (i + j) <= n {
            s.set(k * i, k * j, symfun_to_uea(fk, positive).scale(&qpow(c, k)));
        }
    }
    s
}

fn sym_to_uea(u: &Uea, s: &Series<SymFunc>, positive: bool) -> S {
    s.map(u, |f| symfun_to_uea(f, positive))
}

fn div(u: &Uea, g: Gen, k: usize) -> UElem {
    u.divided_power(g, k as u32)
}

fn h0() -> LieElem {
    lg(Gen::h(0))
}

fn cc() -> LieElem {
    lg(Gen::c())
}

fn xp(r: i32) -> Gen {
    Gen::xp(r)
}

fn xm(r: i32) -> Gen {
    Gen::xm(r)
}

/// `[x, y]`-commutation of divided powers: `x^{(k)} y^{(l)}` against `y^{(l)} x^{(k)}`.
fn commuting_case(label: String, x: Gen, y: Gen) -> Case {
    case(
        label,
        move |u, n| Ok(Series::from_fn(u, n, |k, l| u.mul(&div(u, x, k), &div(u, y, l)))),
        move |u, n| Ok(Series::from_fn(u, n, |k, l| u.mul(&div(u, y, l), &div(u, x, k)))),
    )
}

/// `exp(xu)exp(yv)`.
fn exp_pair(x: Gen, y: Gen) -> impl Fn(&Uea, usize) -> Result<S> + Send + Sync + 'static {
    move |u, n| Ok(prod(u, n, &[expg(u, n, &lg(x), 1, 0)?, expg(u, n, &lg(y), 0, 1)?]))
}

/// `ĥ_+(u)ĥ_-(v) = ĥ_-(v)(1-uv)^{-mc}(1+uv)^{-lc}ĥ_+(u)` for a family.
fn heise_case(f: Fam, m: i64, l: i64, central: Q) -> Case {
    let z = cc().scale(&central);
    case(
        "",
        move |u, n| Ok(prod(u, n, &[fam(u, n, f, 1, Q::one(), 1, 0)?, fam(u, n, f, -1, Q::one(), 0, 1)?])),
        move |u, n| {
            Ok(prod(
                u,
                n,
                &[
                    fam(u, n, f, -1, Q::one(), 0, 1)?,
                    cpow(u, &qs(n, &[(-1, 1, 1)]), &z.scale(&qi(-m)))?,
                    cpow(u, &qs(n, &[(1, 1, 1)]), &z.scale(&qi(-l)))?,
                    fam(u, n, f, 1, Q::one(), 1, 0)?,
                ],
            ))
        },
    )
}

/// `exp(x_r v)·F(u) = F(u)·exp(v·P(uT^{-1}).x_r)` for an imaginary family `F`.
fn hh_divided_case(
    label: String,
    x: Gen,
    f: Fam,
    m: i32,
    (a, tp): (usize, i32),
    p: fn(usize) -> Result<Series<Q>>,
) -> Case {
    case(
        label,
        move |u, n| Ok(prod(u, n, &[expg(u, n, &lg(x), 0, 1)?, fam(u, n, f, m, Q::one(), 1, 0)?])),
        move |u, n| {
            let op = op_series(n, &p(n)?, a, 0, tp, 0, 1);
            Ok(prod(u, n, &[fam(u, n, f, m, Q::one(), 1, 0)?, exp_nc(u, &lie_t(u, &op, &lg(x)))?]))
        },
    )
}

fn pow1p(n: usize, c: i64, d: usize, e: Q) -> Result<Series<Q>> {
    qs(n, &[(c, d, 0)]).pow_one_plus_q(&QR, &e)
}

fn p_pum(n: usize) -> Result<Series<Q>> {
    pow1p(n, 1, 1, qi(-2))
}

fn p_zkopp_product(n: usize) -> Result<Series<Q>> {
    Ok(pow1p(n, 1, 1, qi(-6))?
        .mul(&QR, &pow1p(n, -1, 2, qi(2))?)
        .mul(&QR, &qs(n, &[(1, 0, 0), (-1, 4, 0)])))
}

fn p_zkopp(n: usize) -> Result<Series<Q>> {
    Ok(pow1p(n, -1, 1, qi(6))?
        .mul(&QR, &pow1p(n, -1, 2, qi(-3))?)
        .mul(&QR, &qs(n, &[(1, 0, 0), (1, 2, 0)])))
}

fn p_mitz(n: usize) -> Result<Series<Q>> {
    Ok(qs(n, &[(1, 0, 0), (-1, 1, 0)]).mul(&QR, &pow1p(n, 1, 1, qi(-2))?))
}

fn p_vi_big(n: usize) -> Result<Series<Q>> {
    Ok(qs(n, &[(1, 0, 0), (-2, 1, 0), (1, 2, 0)]))
}

/// The seven factors `exp(α_-)exp(β_-)exp(γ_-)·H·exp(γ_+)exp(β_+)exp(α_+)`,
/// each given as `(ξ, square w, generator, extra scale)`.
type WFactor = (Series<WPoly>, bool, Gen, Q);

fn wexp(u: &Uea, f: &WFactor) -> Result<S> {
    let (s, square, g, c) = f;
    let s = if *square { wsquare(s) } else { s.clone() };
    exp_nc(u, &lie_w(u, &s, *g)?.scale(u, c))
}

fn seven(u: &Uea, n: usize, neg: [WFactor; 3], mid: S, pos: [WFactor; 3]) -> Result<S> {
    let mut f = Vec::with_capacity(7);
    for x in &neg {
        f.push(wexp(u, x)?);
    }
    f.push(mid);
    for x in &pos {
        f.push(wexp(u, x)?);
    }
    Ok(prod(u, n, &f))
}

/// `exp(η(w).h_0)`.
fn eta_exp(u: &Uea, eta: &Series<WPoly>) -> Result<S> {
    exp_nc(u, &lie_w(u, eta, Gen::h(0))?)
}

fn xmg_factors(n: usize) -> Result<([WFactor; 3], Series<WPoly>, [WFactor; 3])> {
    let one = Q::one();
    let den = ws(n, &[(1, 0, 0, 0), (-16, 1, 4, 2)]);
    let den2 = ws(n, &[(1, 0, 0, 0), (16, 1, 4, 2)]);
    let den2 = den2.mul(&WPolys, &den2);
    let am = wdiv(&ws(n, &[(4, 0, 1, 1)]), &den)?;
    let bm = wdiv(&ws(n, &[(1, 0, 0, 1), (48, 1, 4, 3)]), &den2)?;
    let gm = wdiv(&ws(n, &[(-16, 1, 3, 2)]), &den)?;
    let gp = wdiv(&ws(n, &[(-4, 0, 3, 1)]), &den)?;
    let bp = wdiv(&ws(n, &[(1, 0, 4, 1), (-16, 1, 8, 3)]), &den2)?;
    let ap = wdiv(&ws(n, &[(1, 0, 1, 0)]), &den)?;
    let eta = ws(n, &[(1, 0, 0, 0), (4, 1, 2, 1)])
        .ln(&WPolys)?
        .scale(&WPolys, &qf(1, 2));
    Ok((
        [
            (am, true, xm(1), one.clone()),
            (bm, false, Gen::xxm(1), one.clone()),
            (gm, true, xm(0), one.clone()),
        ],
        eta,
        [
            (gp, true, xp(1), one.clone()),
            (bp, false, Gen::xxp(1), one.clone()),
            (ap, true, xp(0), one),
        ],
    ))
}

fn x0x1_factors(n: usize) -> Result<([WFactor; 3], Series<WPoly>, [WFactor; 3])> {
    let one = Q::one();
    let den = ws(n, &[(1, 0, 0, 0), (-6, 1, 2, 2), (1, 2, 4, 4)]);
    let den2 = ws(n, &[(1, 0, 0, 0), (6, 1, 2, 2), (1, 2, 4, 4)]);
    let den2 = den2.mul(&WPolys, &den2);
    let num_b = |i: usize, j: usize, p: i32| ws(n, &[(1, p, i, j), (-4, p + 1, i + 2, j + 2), (-1, p + 2, i + 4, j + 4)]);
    let ap = wdiv(&ws(n, &[(1, 0, 1, 0), (1, 1, 3, 2)]), &den)?;
    let am = wdiv(&ws(n, &[(1, 0, 0, 1), (1, 1, 2, 3)]), &den)?;
    let bp = wdiv(&num_b(3, 1, 0), &den2)?;
    let bm = wdiv(&num_b(1, 3, 1), &den2)?;
    let gp = wdiv(&ws(n, &[(-3, 0, 2, 1), (1, 1, 4, 3)]), &den)?;
    let gm = wdiv(&ws(n, &[(-3, 1, 1, 2), (1, 2, 3, 4)]), &den)?;
    let eta = ws(n, &[(1, 0, 0, 0), (2, 1, 1, 1), (-1, 2, 2, 2)])
        .ln(&WPolys)?
        .scale(&WPolys, &qf(1, 2));
    Ok((
        [
            (am, true, xm(1), one.clone()),
            (bm, false, Gen::xxm(1), one.clone()),
            (gm, true, xm(0), one.clone()),
        ],
        eta,
        [
            (gp, true, xp(1), one.clone()),
            (bp, false, Gen::xxp(1), one.clone()),
            (ap, true, xp(0), one),
        ],
    ))
}

/// Exponents `k_m` in `1+2u-u² = (1-2u-u²)(1+6u²+u⁴)∏(1+u^m)^{4k_m}`.
pub fn d_exponents(n: usize) -> Result<Vec<Q>> {
    let l = |t: &[(i64, usize, usize)]| qs(n, t).ln(&QR);
    let c = l(&[(1, 0, 0), (2, 1, 0), (-1, 2, 0)])?
        .sub(&QR, &l(&[(1, 0, 0), (-2, 1, 0), (-1, 2, 0)])?)
        .sub(&QR, &l(&[(1, 0, 0), (6, 2, 0), (1, 4, 0)])?)
        .u_coeffs();
    let mut k = vec![Q::zero(); n + 1];
    for m in 1..=n {
        // n·c_n/4 = Σ_{d|n} k_d·d·(-1)^{n/d-1}
        let mut acc = qi(m as i64) * &c[m] / qi(4);
        for d in 1..m {
            if m % d == 0 {
                acc -= &k[d] * qi(d as i64) * sign((m / d) as i64 - 1);
            }
        }
        k[m] = acc / qi(m as i64);
    }
    Ok(k)
}

/// `exp(Σ_i (-c·uv)^i T^{i·t} g · u^a v^b)` for the ŝl2-like factors.
fn geometric_exp(u: &Uea, n: usize, g: Gen, c: i64, t: i32, a: usize, b: usize) -> Result<S> {
    let alg = *u.algebra();
    let s = lie_fn(u, n, |i, j| {
        if i >= a && j >= b && i - a == j - b {
            let k = i - a;
            alg.t_power(t * k as i32, g).scale(&qpow(&qi(-c), k))
        } else {
            LieElem::zero()
        }
    });
    exp_nc(u, &s)
}

fn tau(alg: &Algebra, e: &LieElem, f: &LieElem, g: &LieElem) -> Result<LieElem> {
    let a = alg.exp_ad(e, g)?;
    let b = alg.exp_ad(&f.scale(&-Q::one()), &a)?;
    alg.exp_ad(e, &b)
}

fn tau_case(label: &str, which: u8, source: fn(i32) -> LieElem, target: fn(i32) -> LieElem) -> Case {
    let side = move |u: &Uea, n: usize, image: bool| -> Result<S> {
        let alg = *u.algebra();
        let (e, f) = if which == 1 {
            (lg(xp(0)), lg(xm(0)))
        } else {
            (LieElem::term(Gen::xxm(1), qf(1, 4)), LieElem::term(Gen::xxp(-1), qf(1, 4)))
        };
        let mut s = Series::zero(u, n);
        for i in 0..=n.min(4) {
            let r = i as i32 - 2;
            let v = if image { tau(&alg, &e, &f, &source(r))? } else { target(r) };
            s.set(i, 0, UElem::from_lie(&v));
        }
        Ok(s)
    };
    case(label, move |u, n| side(u, n, true), move |u, n| side(u, n, false))
}

// ---------------------------------------------------------------------------
// The catalog

/// Every shipped identity, in a fixed order.
pub fn catalog() -> Vec<IdentityEntry> {
    use AlgebraKind::*;
    let mut out = Vec::new();

    out.push(single(
        "CEF",
        Sl2,
        "exp(eu)exp(fv) = exp(fv/(1+uv)) (1+uv)^h exp(eu/(1+uv))",
        12,
        400.0,
        exp_pair(Gen::e(), Gen::f()),
        |u, n| {
            let d = qs(n, &[(1, 0, 0), (1, 1, 1)]);
            Ok(prod(
                u,
                n,
                &[
                    expq(u, &qdiv(&qs(n, &[(1, 0, 1)]), &d)?, &lg(Gen::f()))?,
                    cpow(u, &qs(n, &[(1, 1, 1)]), &lg(Gen::hs()))?,
                    expq(u, &qdiv(&qs(n, &[(1, 1, 0)]), &d)?, &lg(Gen::e()))?,
                ],
            ))
        },
    ));

    out.push(single(
        "EFU",
        Sl2,
        "e exp(fu) = exp(fu)(e + hu - fu^2)",
        12,
        20.0,
        |u, n| Ok(expg(u, n, &lg(Gen::f()), 1, 0)?.left_mul(u, &el(Gen::e()))),
        |u, n| {
            let mut s = Series::zero(u, n);
            s.set(0, 0, el(Gen::e()));
            s.set(1, 0, el(Gen::hs()));
            s.set(2, 0, el(Gen::f()).scale(&-Q::one()));
            Ok(expg(u, n, &lg(Gen::f()), 1, 0)?.mul(u, &s))
        },
    ));

    for m in -2i64..=2 {
        let z = match m {
            0 => cc(),
            _ => h0().scale(&qf(m, 2)),
        };
        let tag = format!("BDM{}{}", if m > 0 { "+" } else { "" }, m);
        let z2 = z.clone();
        out.push(single(
            &tag,
            A11,
            "exp(xu)(1+v)^h = (1+v)^h exp(xu/(1+v)^m) for [h,x] = mx",
            10,
            150.0,
            move |u, n| Ok(prod(u, n, &[expg(u, n, &lg(xp(0)), 1, 0)?, cpow(u, &qs(n, &[(1, 0, 1)]), &z)?])),
            move |u, n| {
                let arg = qs(n, &[(1, 1, 0)]).mul(&QR, &pow1p(n, 1, 1, qi(-m)).map(|s| swap_uv(&s))?);
                Ok(prod(u, n, &[cpow(u, &qs(n, &[(1, 0, 1)]), &z2)?, expq(u, &arg, &lg(xp(0)))?]))
            },
        ));
    }

    let jhg = |x: Gen, y: Gen, z: LieElem, m: i64| {
        case(
            format!("x={x}, y={y}"),
            move |u, n| Ok(prod(u, n, &[expg(u, n, &lg(y), 1, 0)?, expg(u, n, &lg(x), 0, 1)?])),
            move |u, n| {
                Ok(prod(
                    u,
                    n,
                    &[
                        expg(u, n, &lg(x), 0, 1)?,
                        expq(u, &qs(n, &[(-m, 1, 1)]), &z)?,
                        expg(u, n, &lg(y), 1, 0)?,
                    ],
                ))
            },
        )
    };
    out.push(entry(
        "JHG-A22",
        A22,
        "exp(yu)exp(xv) = exp(xv)exp(zuv)^{-m}exp(yu) for [x,y] = mz central",
        8,
        100.0,
        vec![jhg(xp(0), xp(1), lg(Gen::xxp(1)), -1)],
    ));
    out.push(entry(
        "JHG-A11",
        A11,
        "exp(yu)exp(xv) = exp(xv)exp(zuv)^{-m}exp(yu) for [x,y] = mz central",
        10,
        50.0,
        vec![jhg(Gen::h(1), Gen::h(-1), cc(), 2)],
    ));

    out.push(entry(
        "HEISE-A11",
        A11,
        "hh+(u)hh-(v) = hh-(v)(1-uv)^{-mc}(1+uv)^{-lc}hh+(u), (m,l) = (2,0)",
        10,
        100.0,
        vec![heise_case(Fam::Hat, 2, 0, Q::one())],
    ));
    out.push(entry(
        "HEISE-A22",
        A22,
        "hh+(u)hh-(v) = hh-(v)(1-uv)^{-mc}(1+uv)^{-lc}hh+(u), (m,l) = (4,-2)",
        10,
        100.0,
        vec![heise_case(Fam::Hat, 4, -2, Q::one())],
    ));

    out.push(entry(
        "HH-A11",
        A11,
        "x_r hh+(u) = hh+(u) prod_d (1-(-T^{-1}u)^d)^{-m_d} (x_r), m_1 = 2",
        8,
        150.0,
        vec![
            hh_divided_case("r=0".into(), xp(0), Fam::Hat, 1, (1, -1), p_pum),
            hh_divided_case("r=1".into(), xp(1), Fam::Hat, 1, (1, -1), p_pum),
        ],
    ));
    out.push(single(
        "HH-A22",
        A22,
        "x_0+ ht+(u) = ht+(u) (1+uT^{-1})^{-6}(1-u^2T^{-2})^2(1-u^4T^{-4}) (x_0+)",
        10,
        50.0,
        |u, n| Ok(fam(u, n, Fam::Tilde, 1, Q::one(), 1, 0)?.left_mul(u, &el(xp(0)))),
        |u, n| {
            let op = op_series(n, &p_zkopp_product(n)?, 1, 0, -1, 0, 0);
            Ok(prod(u, n, &[fam(u, n, Fam::Tilde, 1, Q::one(), 1, 0)?, lie_t(u, &op, &lg(xp(0)))]))
        },
    ));

    out.push(entry(
        "ZZK",
        A11,
        "hh+(u)hh-(v) = hh-(v)(1-uv)^{-2c}hh+(u)",
        10,
        100.0,
        vec![heise_case(Fam::Hat, 2, 0, Q::one())],
    ));

    out.push(single(
        "PUM",
        A11,
        "x_0+ hh+(u) = hh+(u) (1+T^{-1}u)^{-2}(x_0+) = hh+(u) sum_r (-1)^r (r+1) x_r+ u^r",
        10,
        50.0,
        |u, n| Ok(fam(u, n, Fam::Hat, 1, Q::one(), 1, 0)?.left_mul(u, &el(xp(0)))),
        |u, n| {
            let s = lie_fn(u, n, |i, j| {
                if j == 0 {
                    LieElem::term(xp(i as i32), sign(i as i64) * qi(i as i64 + 1))
                } else {
                    LieElem::zero()
                }
            });
            Ok(prod(u, n, &[fam(u, n, Fam::Hat, 1, Q::one(), 1, 0)?, s]))
        },
    ));

    // v·x^-(-uv) = Σ_r (-1)^r x_{r+1}^- u^r v^{r+1}
    let xminus = |u: &Uea, n: usize| {
        lie_fn(u, n, |i, j| {
            if j == i + 1 {
                LieElem::term(xm(i as i32 + 1), sign(i as i64))
            } else {
                LieElem::zero()
            }
        })
    };
    // u·x^+(-uv) = Σ_r (-1)^r x_r^+ u^{r+1} v^r
    let xplus = |u: &Uea, n: usize| {
        lie_fn(u, n, |i, j| {
            if i == j + 1 {
                LieElem::term(xp(j as i32), sign(j as i64))
            } else {
                LieElem::zero()
            }
        })
    };

    out.push(single(
        "LIMT",
        A11,
        "x_0+ exp(vx^-(-uv)) = exp(vx^-(-uv))(x_0+ + d h_+(uv)/du + d(vx^-(-uv))/du)",
        8,
        200.0,
        move |u, n| Ok(exp_nc(u, &xminus(u, n))?.left_mul(u, &el(xp(0)))),
        move |u, n| {
            let a = xminus(u, n + 1);
            let b = lie_fn(u, n + 1, |i, j| {
                if i == j && i > 0 {
                    LieElem::term(Gen::h(i as i32), sign(i as i64 - 1) / qi(i as i64))
                } else {
                    LieElem::zero()
                }
            });
            let mut d = a.add(u, &b).derivative(u, Var::U);
            d.set(0, 0, el(xp(0)));
            Ok(exp_nc(u, &xminus(u, n))?.mul(u, &d))
        },
    ));

    out.push(single(
        "EXEFH",
        A11,
        "exp(x_0+ u)exp(x_1- v) = exp(vx^-(-uv)) hh+(uv) exp(ux^+(-uv))",
        8,
        800.0,
        exp_pair(xp(0), xm(1)),
        move |u, n| {
            Ok(prod(
                u,
                n,
                &[
                    exp_nc(u, &xminus(u, n))?,
                    fam(u, n, Fam::Hat, 1, Q::one(), 1, 1)?,
                    exp_nc(u, &xplus(u, n))?,
                ],
            ))
        },
    ));

    out.push(entry(
        "ZKD-hat",
        A22,
        "hh+(u)hh-(v) = hh-(v)(1-uv)^{-4c}(1+uv)^{2c}hh+(u)",
        10,
        100.0,
        vec![heise_case(Fam::Hat, 4, -2, Q::one())],
    ));
    out.push(entry(
        "ZKD-tilde",
        A22,
        "ht+(u)ht-(v) = ht-(v)(1-uv)^{-4c}(1+uv)^{2c}ht+(u)",
        10,
        100.0,
        vec![heise_case(Fam::Tilde, 4, -2, Q::one())],
    ));

    let mut zkp = Vec::new();
    for r in -2..=2 {
        for s in -2..=2 {
            let (a, b) = (xp(2 * r), xp(2 * s + 1));
            let big = Gen::xxp(2 * r + 2 * s + 1);
            zkp.push(case(
                format!("r={r}, s={s}"),
                exp_pair(a, b),
                move |u, n| {
                    Ok(prod(
                        u,
                        n,
                        &[
                            expg(u, n, &lg(b), 0, 1)?,
                            expq(u, &qs(n, &[(-1, 1, 1)]), &lg(big))?,
                            expg(u, n, &lg(a), 1, 0)?,
                        ],
                    ))
                },
            ));
        }
    }
    out.push(entry(
        "ZKP",
        A22,
        "exp(x_2r+ u)exp(x_2s+1+ v) = exp(x_2s+1+ v)exp(-X_2r+2s+1+ uv)exp(x_2r+ u)",
        8,
        300.0,
        zkp,
    ));

    let xtuz = (-1..=1)
        .map(|r| {
            case(
                format!("r={r}"),
                move |u, n| {
                    Ok(Series::from_fn(u, n, |k, l| {
                        u.mul(&div(u, xp(r), k), &u.binomial_element(&qi(1), &qi(0), &qi(0), l as u32))
                    }))
                },
                move |u, n| {
                    Ok(Series::from_fn(u, n, |k, l| {
                        u.mul(
                            &u.binomial_element(&qi(1), &qi(0), &qi(-2 * k as i64), l as u32),
                            &div(u, xp(r), k),
                        )
                    }))
                },
            )
        })
        .collect();
    out.push(entry(
        "XTUZ",
        A22,
        "(x_r+)^(k) C(h_0,l) = C(h_0-2k,l) (x_r+)^(k)",
        8,
        100.0,
        xtuz,
    ));

    out.push(entry(
        "ZKOPP",
        A22,
        "(x_0+)^(k) ht+(u) = ht+(u) ((1-uT^{-1})^6(1-u^2T^{-2})^{-3}(1+u^2T^{-2})(x_0+))^(k)",
        8,
        600.0,
        vec![hh_divided_case("r=0".into(), xp(0), Fam::Tilde, 1, (1, -1), p_zkopp)],
    ));

    out.push(single(
        "XMG",
        A22,
        "exp(x_0+ u)exp(X_1- v) = seven-factor product with alpha_-(w) = 4uv/(1-4^2wu^4v^2), eta(w) = ln(1+4wu^2v)/2",
        6,
        800.0,
        exp_pair(xp(0), Gen::xxm(1)),
        |u, n| {
            let (neg, eta, pos) = xmg_factors(n)?;
            seven(u, n, neg, eta_exp(u, &eta)?, pos)
        },
    ));

    out.push(single(
        "X0X1",
        A22,
        "exp(x_0+ u)exp(x_1- v) = seven-factor product with eta(w) = ln(1+2wuv-w^2u^2v^2)/2",
        6,
        1500.0,
        exp_pair(xp(0), xm(1)),
        |u, n| {
            let (neg, eta, pos) = x0x1_factors(n)?;
            seven(u, n, neg, eta_exp(u, &eta)?, pos)
        },
    ));

    out.push(single(
        "TDMOM2",
        A11,
        "lambda_2(hh+(-u^2)) = hh+(-u) hh+(u)",
        12,
        50.0,
        |u, n| hser(u, n, |r| -Q::one() / qi(r as i64), |r| 2 * r as i32, 2, 0),
        |u, n| {
            Ok(prod(
                u,
                n,
                &[fam(u, n, Fam::Hat, 1, -Q::one(), 1, 0)?, fam(u, n, Fam::Hat, 1, Q::one(), 1, 0)?],
            ))
        },
    ));

    out.extend(appendix_a());
    out.extend(mitzman());
    out
}

/// Swap the roles of `u` and `v` in a univariate rational series.
fn swap_uv(s: &Series<Q>) -> Series<Q> {
    let mut out = Series::zero(&QR, s.cap());
    for (i, j, c) in s.iter() {
        out.set(j, i, c.clone());
    }
    out
}

fn appendix_a() -> Vec<IdentityEntry> {
    use AlgebraKind::A22;
    let mut out = Vec::new();

    // I
    let central_c = case(
        "C(c,k) g = g C(c,k)",
        |u, n| {
            let gens = u.algebra().window(2);
            Ok(Series::from_fn(u, n, |k, j| match gens.get(j) {
                Some(g) => u.mul(&u.binomial_element(&qi(0), &qi(1), &qi(0), k as u32), &el(*g)),
                None => UElem::zero(),
            }))
        },
        |u, n| {
            let gens = u.algebra().window(2);
            Ok(Series::from_fn(u, n, |k, j| match gens.get(j) {
                Some(g) => u.mul(&el(*g), &u.binomial_element(&qi(0), &qi(1), &qi(0), k as u32)),
                None => UElem::zero(),
            }))
        },
    );
    let h0_tilde = |positive: bool| {
        let side = move |u: &Uea, n: usize, left: bool| {
            let t = tilde_h(n);
            Ok(Series::from_fn(u, n, |k, l| {
                let b = u.binomial_element(&qi(1), &qi(0), &qi(0), k as u32);
                let h = symfun_to_uea(&t[l], positive);
                if left {
                    u.mul(&b, &h)
                } else {
                    u.mul(&h, &b)
                }
            }))
        };
        case(
            if positive { "C(h_0,k) ht_l" } else { "C(h_0,k) ht_-l" },
            move |u, n| side(u, n, true),
            move |u, n| side(u, n, false),
        )
    };
    out.push(entry(
        "APP-A-I",
        A22,
        "C(c,k) is central; [C(h_0,k), ht_l] = 0",
        6,
        200.0,
        vec![central_c, h0_tilde(true), h0_tilde(false)],
    ));

    // II
    out.push(entry(
        "APP-A-II-comm",
        A22,
        "[ht_k, ht_l] = 0 for k,l > 0",
        8,
        20.0,
        vec![case(
            "",
            |u, n| {
                let t = tilde_h(n);
                Ok(Series::from_fn(u, n, |k, l| {
                    u.mul(&symfun_to_uea(&t[k], true), &symfun_to_uea(&t[l], true))
                }))
            },
            |u, n| {
                let t = tilde_h(n);
                Ok(Series::from_fn(u, n, |k, l| {
                    u.mul(&symfun_to_uea(&t[l], true), &symfun_to_uea(&t[k], true))
                }))
            },
        )],
    ));
    out.push(entry(
        "APP-A-II-tlambda",
        A22,
        "lt_m(ht+(-u^m)) = prod_{j=1..m} ht+(-w^j u), m = 2",
        10,
        50.0,
        vec![
            case(
                "series",
                |u, n| {
                    let t = tilde_h(n);
                    let f: Vec<SymFunc> = t.iter().map(|x| tilde_lambda_m(x, 2)).collect();
                    Ok(sym_series(u, n, &f, true, &-Q::one(), 2, 0))
                },
                |u, n| {
                    Ok(prod(
                        u,
                        n,
                        &[fam(u, n, Fam::Tilde, 1, Q::one(), 1, 0)?, fam(u, n, Fam::Tilde, 1, -Q::one(), 1, 0)?],
                    ))
                },
            ),
            case(
                "coefficients",
                |u, n| {
                    let t = tilde_h(n);
                    let f: Vec<SymFunc> = t.iter().map(|x| tilde_lambda_m(x, 2)).collect();
                    Ok(sym_series(u, n, &f, true, &Q::one(), 1, 0))
                },
                |u, n| {
                    let t = tilde_h(2 * n);
                    let f: Vec<SymFunc> = (0..=n)
                        .map(|k| {
                            let mut acc = SymFunc::zero();
                            for k1 in 0..=2 * k {
                                acc = acc.add(&t[k1].mul(&t[2 * k - k1]).scale(&sign(k1 as i64)));
                            }
                            acc.scale(&sign(k as i64))
                        })
                        .collect();
                    Ok(sym_series(u, n, &f, true, &Q::one(), 1, 0))
                },
            ),
        ],
    ));
    out.push(entry(
        "APP-A-II-odd",
        A22,
        "lambda_m(ht_k) = lt_m(ht_k) for m odd",
        10,
        50.0,
        [3u32, 5]
            .into_iter()
            .map(|m| {
                case(
                    format!("m={m}"),
                    move |u, n| {
                        let f: Vec<SymFunc> = tilde_h(n).iter().map(|x| lambda_m(x, m)).collect();
                        Ok(sym_series(u, n, &f, true, &Q::one(), 1, 0))
                    },
                    move |u, n| {
                        let f: Vec<SymFunc> = tilde_h(n).iter().map(|x| tilde_lambda_m(x, m)).collect();
                        Ok(sym_series(u, n, &f, true, &Q::one(), 1, 0))
                    },
                )
            })
            .collect(),
    ));
    out.push(entry(
        "APP-A-II-even",
        A22,
        "lambda_m(hh+(u)) = lt_m(ht+((-1)^{m/2}u)^{-1}) for m even",
        10,
        50.0,
        [2u32, 4, 6]
            .into_iter()
            .map(|m| {
                case(
                    format!("m={m}"),
                    move |u, n| {
                        let f: Vec<SymFunc> = hat_h(n).iter().map(|x| lambda_m(x, m)).collect();
                        Ok(sym_series(u, n, &f, true, &Q::one(), 1, 0))
                    },
                    move |u, n| {
                        let f: Vec<SymFunc> = tilde_h(n).iter().map(|x| tilde_lambda_m(x, m)).collect();
                        sym_series(u, n, &f, true, &sign((m / 2) as i64), 1, 0).invert(u)
                    },
                )
            })
            .collect(),
    ));
    out.push(single(
        "APP-A-II-hat",
        A22,
        "hh+(u) = ht+(u) lt_4(ht+(-u^4)^{-1/2})",
        12,
        50.0,
        |u, n| Ok(sym_series(u, n, &hat_h(n), true, &Q::one(), 1, 0)),
        |u, n| {
            let s = SymFuncs;
            let t = tilde_h(n);
            let y = Series::from_fn(&s, n, |i, j| {
                if j == 0 && i % 4 == 0 {
                    t[i / 4].scale(&sign((i / 4) as i64))
                } else {
                    SymFunc::zero()
                }
            });
            let z = y.ln(&s)?.scale(&s, &qf(-1, 2)).exp(&s)?.map(&s, |f| tilde_lambda_m(f, 4));
            Ok(prod(u, n, &[sym_series(u, n, &t, true, &Q::one(), 1, 0), sym_to_uea(u, &z, true)]))
        },
    ));
    out.push(single(
        "APP-A-II-d",
        A22,
        "hd+(u) = prod_m lt_m(ht+(u^m))^{k_m}, 1+2u-u^2 = (1-2u-u^2)(1+6u^2+u^4) prod_m (1+u^m)^{4k_m}",
        10,
        100.0,
        |u, n| Ok(sym_series(u, n, &hd(n), true, &Q::one(), 1, 0)),
        |u, n| {
            let s = SymFuncs;
            let t = tilde_h(n);
            let k = d_exponents(n)?;
            let mut acc = Series::one(&s, n);
            for m in 1..=n {
                if k[m].is_zero() {
                    continue;
                }
                let a = Series::from_fn(&s, n, |i, j| {
                    if j == 0 && i % m == 0 {
                        tilde_lambda_m(&t[i / m], m as u32)
                    } else {
                        SymFunc::zero()
                    }
                });
                acc = acc.mul(&s, &a.ln(&s)?.scale(&s, &k[m]).exp(&s)?);
            }
            Ok(sym_to_uea(u, &acc, true))
        },
    ));

    // III
    out.push(entry(
        "APP-A-III",
        A22,
        "ht+(u)ht-(v) = ht-(v)(1-uv)^{-4c}(1+uv)^{2c}ht+(u)",
        10,
        100.0,
        vec![heise_case(Fam::Tilde, 4, -2, Q::one())],
    ));

    // IV
    let mut iv = Vec::new();
    for (r, s) in [(0, 0), (0, 1), (-1, 1)] {
        iv.push(commuting_case(format!("X_{}+ central, x_{}+", 2 * r + 1, s), Gen::xxp(2 * r + 1), xp(s)));
    }
    iv.push(commuting_case("X_1+ X_-1+".into(), Gen::xxp(1), Gen::xxp(-1)));
    iv.push(commuting_case("X_1- x_0-".into(), Gen::xxm(1), xm(0)));
    for (r, s) in [(0, 2), (1, -1), (1, 1)] {
        iv.push(commuting_case(format!("x_{r}+ x_{s}+ even"), xp(r), xp(s)));
    }
    for (r, s) in [(0, 1), (1, 0), (-1, 2), (2, 1)] {
        iv.push(case(
            format!("x_{r}+ x_{s}+ odd"),
            exp_pair(xp(r), xp(s)),
            move |u, n| {
                Ok(prod(
                    u,
                    n,
                    &[
                        expg(u, n, &lg(xp(s)), 0, 1)?,
                        expq(u, &qs(n, &[(1, 1, 1)]).scale(&QR, &sign(s as i64)), &lg(Gen::xxp(r + s)))?,
                        expg(u, n, &lg(xp(r)), 1, 0)?,
                    ],
                ))
            },
        ));
        iv.push(case(
            format!("x_{r}- x_{s}- odd"),
            exp_pair(xm(r), xm(s)),
            move |u, n| {
                Ok(prod(
                    u,
                    n,
                    &[
                        expg(u, n, &lg(xm(s)), 0, 1)?,
                        expq(u, &qs(n, &[(1, 1, 1)]).scale(&QR, &sign(r as i64)), &lg(Gen::xxm(r + s)))?,
                        expg(u, n, &lg(xm(r)), 1, 0)?,
                    ],
                ))
            },
        ));
    }
    out.push(entry(
        "APP-A-IV",
        A22,
        "(X+)^(k) central in U+; exp(x_r+ u)exp(x_s+ v) = exp(x_s+ v)exp((-1)^s X_{r+s}+ uv)exp(x_r+ u) for r+s odd",
        8,
        400.0,
        iv,
    ));

    // V
    let mut v = Vec::new();
    for r in 0..=1 {
        for (g, shift, plus) in [
            (xp(r), 2i64, true),
            (Gen::xxp(2 * r + 1), 4, true),
            (xm(r), 2, false),
            (Gen::xxm(2 * r + 1), 4, false),
        ] {
            v.push(case(
                format!("{g}"),
                move |u, n| {
                    Ok(Series::from_fn(u, n, |k, l| {
                        let b = u.binomial_element(&qi(1), &qi(0), &qi(0), l as u32);
                        if plus {
                            u.mul(&div(u, g, k), &b)
                        } else {
                            u.mul(&b, &div(u, g, k))
                        }
                    }))
                },
                move |u, n| {
                    Ok(Series::from_fn(u, n, |k, l| {
                        let b = u.binomial_element(&qi(1), &qi(0), &qi(-shift * k as i64), l as u32);
                        if plus {
                            u.mul(&b, &div(u, g, k))
                        } else {
                            u.mul(&div(u, g, k), &b)
                        }
                    }))
                },
            ));
        }
    }
    out.push(entry(
        "APP-A-V",
        A22,
        "(x_r+)^(k) C(h_0,l) = C(h_0-2k,l)(x_r+)^(k); (X+)^(k) C(h_0,l) = C(h_0-4k,l)(X+)^(k); and the x-, X- analogues",
        8,
        200.0,
        v,
    ));

    // VI
    let mut vi = Vec::new();
    for r in [0, -1] {
        vi.push(hh_divided_case(format!("X_{}+", 2 * r + 1), Gen::xxp(2 * r + 1), Fam::Tilde, 1, (2, -1), p_vi_big));
    }
    for r in [0, 1] {
        vi.push(hh_divided_case(format!("x_{r}+"), xp(r), Fam::Tilde, 1, (1, -1), p_zkopp));
    }
    for r in [0, 1] {
        vi.push(case(
            format!("x_{r}+ split"),
            move |u, n| Ok(prod(u, n, &[expg(u, n, &lg(xp(r)), 0, 1)?, fam(u, n, Fam::Tilde, 1, Q::one(), 1, 0)?])),
            move |u, n| {
                let t6 = pow1p(n, -1, 1, qi(6))?;
                let (pp, pm, p0) = t6.even_odd_split();
                let q = qdiv(&qs(n, &[(1, 0, 0), (1, 2, 0)]), &pow1p(n, -1, 2, qi(3))?)?;
                let a = pm.mul(&QR, &q);
                let b = pp.mul(&QR, &q);
                let p0neg = Series::from_fn(&QR, n, |i, j| {
                    if j == 0 {
                        p0.coeff(i, 0).cloned().unwrap_or_else(Q::zero) * sign(i as i64)
                    } else {
                        Q::zero()
                    }
                });
                let c = p0neg.mul(&QR, &pow1p(n, -1, 1, qi(2))?).mul(&QR, &pow1p(n, 1, 1, qi(-6))?);
                let f1 = op_series(n, &a, 1, 0, -1, 1, 1);
                let f2 = op_series(n, &c, 2, 0, -1, 1, 2);
                let f3 = op_series(n, &b, 1, 0, -1, 0, 1);
                Ok(prod(
                    u,
                    n,
                    &[
                        fam(u, n, Fam::Tilde, 1, Q::one(), 1, 0)?,
                        exp_nc(u, &lie_t(u, &f1, &lg(xp(r + 1))))?,
                        exp_nc(u, &lie_t(u, &f2, &LieElem::term(Gen::xxp(2 * r + 1), sign(r as i64 - 1))))?,
                        exp_nc(u, &lie_t(u, &f3, &lg(xp(r))))?,
                    ],
                ))
            },
        ));
    }
    out.push(entry(
        "APP-A-VI",
        A22,
        "(X+)^(k) ht+(u) = ht+(u)((1-u^2T^{-1})^2 X+)^(k); (x_r+)^(k) ht+(u) = ht+(u)(p(uT^{-1})(1+u^2T^{-2})/(1-u^2T^{-2})^3 x_r+)^(k), p = (1-t)^6, and its split form",
        8,
        1500.0,
        vi,
    ));

    // VII,a
    let mut viia = Vec::new();
    for r in -1..=1 {
        viia.push(case(
            format!("x_{r}+ x_{}-", -r),
            exp_pair(xp(r), xm(-r)),
            move |u, n| {
                let d = qs(n, &[(1, 0, 0), (1, 1, 1)]);
                let z = h0().add(&cc().scale(&qi(r as i64)));
                Ok(prod(
                    u,
                    n,
                    &[
                        expq(u, &qdiv(&qs(n, &[(1, 0, 1)]), &d)?, &lg(xm(-r)))?,
                        cpow(u, &qs(n, &[(1, 1, 1)]), &z)?,
                        expq(u, &qdiv(&qs(n, &[(1, 1, 0)]), &d)?, &lg(xp(r)))?,
                    ],
                ))
            },
        ));
    }
    for r in -1..=0 {
        viia.push(case(
            format!("X_{}+ X_{}-", 2 * r + 1, -2 * r - 1),
            exp_pair(Gen::xxp(2 * r + 1), Gen::xxm(-2 * r - 1)),
            move |u, n| {
                let d = qs(n, &[(1, 0, 0), (16, 1, 1)]);
                let z = h0().scale(&qf(1, 2)).add(&cc().scale(&qf(2 * r as i64 + 1, 4)));
                Ok(prod(
                    u,
                    n,
                    &[
                        expq(u, &qdiv(&qs(n, &[(1, 0, 1)]), &d)?, &lg(Gen::xxm(-2 * r - 1)))?,
                        cpow(u, &qs(n, &[(16, 1, 1)]), &z)?,
                        expq(u, &qdiv(&qs(n, &[(1, 1, 0)]), &d)?, &lg(Gen::xxp(2 * r + 1)))?,
                    ],
                ))
            },
        ));
    }
    out.push(entry(
        "APP-A-VIIa",
        A22,
        "exp(x_r+ u)exp(x_-r- v) = exp(x_-r- v/(1+uv))(1+uv)^{h_0+rc}exp(x_r+ u/(1+uv)); X analogue with (1+4^2uv)^{h_0/2+(2r+1)c/4}",
        8,
        400.0,
        viia,
    ));

    // VII,b
    let mut viib = Vec::new();
    for (r, s) in [(0, 2), (1, 1), (2, 0), (-1, -1), (0, -2)] {
        let k = r + s;
        viib.push(case(
            format!("x_{r}+ x_{s}-"),
            exp_pair(xp(r), xm(s)),
            move |u, n| {
                Ok(prod(
                    u,
                    n,
                    &[
                        geometric_exp(u, n, xm(s), 1, k, 0, 1)?,
                        fam(u, n, Fam::Hat, k, Q::one(), 1, 1)?,
                        geometric_exp(u, n, xp(r), 1, -k, 1, 0)?,
                    ],
                ))
            },
        ));
    }
    for (r, s) in [(0, 1), (1, 1), (-1, 0), (0, -1)] {
        let k = r + s;
        viib.push(case(
            format!("X_{}+ X_{}-", 2 * r + 1, 2 * s - 1),
            exp_pair(Gen::xxp(2 * r + 1), Gen::xxm(2 * s - 1)),
            move |u, n| {
                Ok(prod(
                    u,
                    n,
                    &[
                        geometric_exp(u, n, Gen::xxm(2 * s - 1), VIIB_BIG * t_sign(k), k, 0, 1)?,
                        hser(
                            u,
                            n,
                            |j| sign(j as i64 - 1) * qpow(&qi(16), j) / qi(2 * j as i64),
                            |j| 2 * k * j as i32,
                            1,
                            1,
                        )?,
                        geometric_exp(u, n, Gen::xxp(2 * r + 1), VIIB_BIG * t_sign(k), -k, 1, 0)?,
                    ],
                ))
            },
        ));
    }
    out.push(entry(
        "APP-A-VIIb",
        A22,
        "exp(x_r+ u)exp(x_s- v) = exp(x_s- v/(1+uvT^{r+s})) lambda_{r+s}(hh+(uv)) exp(x_r+ u/(1+uvT^{-r-s})), r+s even; X analogue with lambda_{2(r+s)}(hh+(4^2uv)^{1/2})",
        8,
        1500.0,
        viib,
    ));

    // VII,c
    out.push(entry(
        "APP-A-VIIc",
        A22,
        "exp(x_0+ u)exp(X_1- v) = ... hh+(4u^2v)^{1/2} ... in explicit and compact form",
        6,
        1500.0,
        vec![
            case("explicit", exp_pair(xp(0), Gen::xxm(1)), |u, n| {
                let (neg, _, pos) = xmg_factors(n)?;
                let mid = sym_series(u, n, &hat_h(n), true, &qi(4), 2, 1).root(u, 2)?;
                seven(u, n, neg, mid, pos)
            }),
            case("compact", exp_pair(xp(0), Gen::xxm(1)), |u, n| {
                let a = wdiv(&ws(n, &[(4, 0, 1, 1)]), &ws(n, &[(1, 0, 0, 0), (4, 1, 2, 1)]))?;
                let b = wdiv(&ws(n, &[(1, 0, 0, 1)]), &ws(n, &[(1, 0, 0, 0), (16, 1, 4, 2)]))?;
                let c = wdiv(&ws(n, &[(1, 0, 1, 0)]), &ws(n, &[(1, 0, 0, 0), (4, 1, 2, 1)]))?;
                let d = wdiv(&ws(n, &[(-1, 0, 4, 1)]), &ws(n, &[(1, 0, 0, 0), (16, 1, 4, 2)]))?;
                Ok(prod(
                    u,
                    n,
                    &[
                        exp_nc(u, &lie_w(u, &a, xm(1))?)?,
                        exp_nc(u, &lie_w(u, &b, Gen::xxm(1))?)?,
                        sym_series(u, n, &hat_h(n), true, &qi(4), 2, 1).root(u, 2)?,
                        exp_nc(u, &lie_w(u, &c, xp(0))?)?,
                        exp_nc(u, &lie_w(u, &d, Gen::xxp(1))?)?,
                    ],
                ))
            }),
        ],
    ));

    // VII,d
    out.push(entry(
        "APP-A-VIId",
        A22,
        "exp(x_0+ u)exp(x_1- v) = ... hd+(uv) ... in both forms",
        6,
        3000.0,
        vec![
            case("form 1", exp_pair(xp(0), xm(1)), |u, n| {
                let (neg, _, pos) = x0x1_factors(n)?;
                seven(u, n, neg, sym_series(u, n, &hd(n), true, &Q::one(), 1, 1), pos)
            }),
            case("form 2", exp_pair(xp(0), xm(1)), |u, n| {
                let den = ws(n, &[(1, 0, 0, 0), (2, 1, 1, 1), (-1, 2, 2, 2)]);
                let den6 = ws(n, &[(1, 0, 0, 0), (6, 1, 2, 2), (1, 2, 4, 4)]);
                let half = qf(1, 2);
                let a = wdiv(&ws(n, &[(1, 0, 0, 1), (-1, 1, 1, 2)]), &den)?;
                let b = wdiv(&ws(n, &[(1, 0, 1, 3)]), &den6)?.scale(&WPolys, &half);
                let c = wdiv(&ws(n, &[(1, 0, 1, 0), (-1, 1, 2, 1)]), &den)?;
                let d = wdiv(&ws(n, &[(-1, 0, 3, 1)]), &den6)?.scale(&WPolys, &half);
                Ok(prod(
                    u,
                    n,
                    &[
                        exp_nc(u, &lie_w(u, &a, xm(1))?)?,
                        exp_nc(u, &lie_w(u, &b, Gen::xxm(3))?)?,
                        sym_series(u, n, &hd(n), true, &Q::one(), 1, 1),
                        exp_nc(u, &lie_w(u, &c, xp(0))?)?,
                        exp_nc(u, &lie_w(u, &d, Gen::xxp(1))?)?,
                    ],
                ))
            }),
        ],
    ));
    out
}

/// Scale in the geometric factors of the X-generator ŝl2-like relation.
const VIIB_BIG: i64 = 16;

/// Cancels the sign `T^k` puts on the `X` generators.
fn t_sign(k: i32) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn mitzman() -> Vec<IdentityEntry> {
    use AlgebraKind::A22;
    let mut out = Vec::new();
    out.push(entry(
        "MITZ-i",
        A22,
        "hm+(u)hm-(v) = hm-(v)(1-uv)^{-4c'}(1+uv)^{2c'}hm+(u), hm_r = h_r/2, c' = c/4",
        8,
        100.0,
        vec![heise_case(Fam::Half, 4, -2, qf(1, 4))],
    ));
    out.push(entry(
        "MITZ-iv-a",
        A22,
        "(x_r+)^(k) C(h_0/2-c/4,l) = C(h_0/2-c/4-k,l)(x_r+)^(k)",
        8,
        100.0,
        [0, 1]
            .into_iter()
            .map(|r| {
                case(
                    format!("r={r}"),
                    move |u, n| {
                        Ok(Series::from_fn(u, n, |k, l| {
                            u.mul(&div(u, xp(r), k), &u.binomial_element(&qf(1, 2), &qf(-1, 4), &qi(0), l as u32))
                        }))
                    },
                    move |u, n| {
                        Ok(Series::from_fn(u, n, |k, l| {
                            u.mul(
                                &u.binomial_element(&qf(1, 2), &qf(-1, 4), &qi(-(k as i64)), l as u32),
                                &div(u, xp(r), k),
                            )
                        }))
                    },
                )
            })
            .collect(),
    ));
    out.push(entry(
        "MITZ-iv-b",
        A22,
        "(x_r+)^(k) hm+(u) = hm+(u)((1-uT^{-1})/(1+uT^{-1})^2 x_r+)^(k)",
        8,
        400.0,
        vec![
            hh_divided_case("r=0".into(), xp(0), Fam::Half, 1, (1, -1), p_mitz),
            hh_divided_case("r=1".into(), xp(1), Fam::Half, 1, (1, -1), p_mitz),
        ],
    ));
    out.push(entry(
        "MITZ-iv-c",
        A22,
        "lambda_{-1}(x_r+) = x_-r+, lambda_{-1}(hm+(u)) = hm-(u)",
        8,
        400.0,
        vec![
            hh_divided_case("r=0".into(), xp(0), Fam::Half, -1, (1, 1), p_mitz),
            hh_divided_case("r=-1".into(), xp(-1), Fam::Half, -1, (1, 1), p_mitz),
        ],
    ));
    out.push(single(
        "MITZ-v",
        A22,
        "exp(x_0+ u)exp(y_1- v) = exp(a_-)exp(b_-)exp(c_-) hm+(u^2v) exp(c_+)exp(b_+)exp(a_+), y = X/4",
        8,
        5000.0,
        |u, n| {
            Ok(prod(
                u,
                n,
                &[expg(u, n, &lg(xp(0)), 1, 0)?, expg(u, n, &LieElem::term(Gen::xxm(1), qf(1, 4)), 0, 1)?],
            ))
        },
        |u, n| {
            let one = Q::one();
            let quarter = qf(1, 4);
            let den = ws(n, &[(1, 0, 0, 0), (-1, 2, 4, 2)]);
            let den2 = ws(n, &[(1, 0, 0, 0), (1, 1, 4, 2)]);
            let den2 = den2.mul(&WPolys, &den2);
            let am = wdiv(&ws(n, &[(1, 0, 1, 1)]), &den)?;
            let bm = wdiv(&ws(n, &[(1, 0, 0, 1), (3, 1, 4, 3)]), &den2)?;
            let gm = wdiv(&ws(n, &[(-1, 2, 3, 2)]), &den)?;
            let gp = wdiv(&ws(n, &[(-1, 0, 3, 1)]), &den)?;
            let bp = wdiv(&ws(n, &[(1, 0, 4, 1), (-1, 1, 8, 3)]), &den2)?;
            let ap = wdiv(&ws(n, &[(1, 0, 1, 0)]), &den)?;
            seven(
                u,
                n,
                [
                    (am, false, xm(1), one.clone()),
                    (bm, false, Gen::xxm(1), quarter.clone()),
                    (gm, false, xm(0), one.clone()),
                ],
                fam(u, n, Fam::Half, 1, Q::one(), 2, 1)?,
                [
                    (gp, false, xp(1), one.clone()),
                    (bp, false, Gen::xxp(1), quarter),
                    (ap, false, xp(0), one),
                ],
            )
        },
    ));
    out.push(entry(
        "MITZ-vii",
        A22,
        "tau_0(x_r+) = (-1)^{r-1}x_{r+1}-, tau_1(x_r-) = (-1)^{r+1}x_r+, tau_1(y_2r+1-) = y_2r+1+, tau_0(y_2r+1+) = -y_2r+3-",
        8,
        50.0,
        vec![
            tau_case("tau_1 x-", 1, |r| lg(xm(r)), |r| LieElem::term(xp(r), sign(r as i64 + 1))),
            tau_case(
                "tau_1 y-",
                1,
                |r| LieElem::term(Gen::xxm(2 * r + 1), qf(1, 4)),
                |r| LieElem::term(Gen::xxp(2 * r + 1), qf(1, 4)),
            ),
            tau_case("tau_0 x+", 0, |r| lg(xp(r)), |r| LieElem::term(xm(r + 1), sign(r as i64 - 1))),
            tau_case(
                "tau_0 y+",
                0,
                |r| LieElem::term(Gen::xxp(2 * r + 1), qf(1, 4)),
                |r| LieElem::term(Gen::xxm(2 * r + 3), qf(-1, 4)),
            ),
        ],
    ));
    out
}

// ---------------------------------------------------------------------------
// Running entries

/// Look up an entry by tag.
pub fn find(tag: &str) -> Result<IdentityEntry> {
    catalog()
        .into_iter()
        .find(|e| e.tag == tag)
        .ok_or_else(|| Error::UnknownTag(tag.into()))
}

/// Check `tag` at `order` under the default cost ceiling.
pub fn verify(tag: &str, order: usize) -> Result<Report> {
    verify_with(tag, order, DEFAULT_CEILING_MS)
}

/// Check `tag` at `order`, refusing orders whose estimate exceeds `ceiling_ms`.
pub fn verify_with(tag: &str, order: usize, ceiling_ms: u64) -> Result<Report> {
    let e = find(tag)?;
    check_ceiling(&e, order, ceiling_ms)?;
    run_entry(&e, &Uea::new(e.algebra), order)
}

fn check_ceiling(e: &IdentityEntry, order: usize, ceiling_ms: u64) -> Result<()> {
    if order == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    let estimate_ms = e.estimate_ms(order);
    if estimate_ms > ceiling_ms {
        return Err(Error::CostCeiling {
            tag: e.tag.clone(),
            order,
            estimate_ms,
            ceiling_ms,
        });
    }
    Ok(())
}

/// Evaluate every case of `e` in `u` and compare the two sides.
pub fn run_entry(e: &IdentityEntry, u: &Uea, order: usize) -> Result<Report> {
    let start = Instant::now();
    let mut first_diff = None;
    for c in &e.cases {
        let l = (c.left)(u, order)?;
        let r = (c.right)(u, order)?;
        if let Some(d) = l.first_diff(u, &r) {
            first_diff = Some(FirstDiff {
                case: c.label.clone(),
                deg_u: d.deg_u,
                deg_v: d.deg_v,
                left: d.left,
                right: d.right,
            });
            break;
        }
    }
    Ok(Report {
        tag: e.tag.clone(),
        paper_ref: e.paper_ref.clone(),
        order,
        pass: first_diff.is_none(),
        first_diff,
        elapsed_ms: start.elapsed().as_millis() as u64,
        tolerance: 0,
    })
}

/// Check every entry at its effective order, in parallel, preserving catalog order.
pub fn verify_all(order: Option<usize>, ceiling_ms: u64) -> Vec<Result<Report>> {
    verify_entries(&catalog(), order, ceiling_ms)
}

/// Check the given entries in parallel, preserving their order.
pub fn verify_entries(entries: &[IdentityEntry], order: Option<usize>, ceiling_ms: u64) -> Vec<Result<Report>> {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<Option<Result<Report>>>> =
        entries.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers.min(entries.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                let Some(e) = entries.get(i) else { break };
                let n = order.unwrap_or_else(|| e.effective_order());
                let res = check_ceiling(e, n, ceiling_ms).and_then(|_| run_entry(e, &Uea::new(e.algebra), n));
                *slots[i].lock().expect("slot") = Some(res);
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().expect("slot").expect("filled"))
        .collect()
}

// ---------------------------------------------------------------------------
// Integrality sweeps

/// A product found outside the integral form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub product: String,
    pub label: String,
    pub coefficient: String,
}

/// Outcome of an integrality sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub algebra: String,
    pub basis: String,
    pub checked: usize,
    pub pass: bool,
    pub first_failure: Option<SweepFailure>,
    pub elapsed_ms: u64,
}

/// Straighten `(x_r^+)^{(k)}(x_s^-)^{(l)}` (and on A2(2) also
/// `(x_r^+)^{(k)}(X_{2s+1}^-)^{(l)}`) and test integrality in `basis`.
pub fn integrality_sweep(
    algebra: AlgebraKind,
    r_range: RangeInclusive<i32>,
    s_range: RangeInclusive<i32>,
    k_max: u32,
    l_max: u32,
    basis: Basis,
) -> Result<SweepReport> {
    if algebra == AlgebraKind::Sl2 {
        return Err(Error::Domain("integrality sweeps need an affine algebra".into()));
    }
    let start = Instant::now();
    let u = Uea::new(algebra);
    let mut pairs: Vec<(Gen, Gen)> = Vec::new();
    for r in r_range.clone() {
        for s in s_range.clone() {
            pairs.push((xp(r), xm(s)));
            if algebra == AlgebraKind::A22 {
                pairs.push((xp(r), Gen::xxm(2 * s + 1)));
            }
        }
    }
    let mut checked = 0;
    for k in 1..=k_max {
        for l in 1..=l_max {
            for &(a, b) in &pairs {
                let p = u.mul(&u.divided_power(a, k), &u.divided_power(b, l));
                checked += 1;
                let m = u.membership(&p, basis)?;
                if let Some((label, c)) = m.witness {
                    return Ok(SweepReport {
                        algebra: algebra.name().into(),
                        basis: format!("{basis:?}"),
                        checked,
                        pass: false,
                        first_failure: Some(SweepFailure {
                            product: format!("{}^({})*{}^({})", a.render(), k, b.render(), l),
                            label,
                            coefficient: crate::fmt_q(&c),
                        }),
                        elapsed_ms: start.elapsed().as_millis() as u64,
                    });
                }
            }
        }
    }
    Ok(SweepReport {
        algebra: algebra.name().into(),
        basis: format!("{basis:?}"),
        checked,
        pass: true,
        first_failure: None,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// The negative control: on A2(2) with the `ĥ` family forced on the
/// imaginary blocks, `(x_0^+)^{(4)}(x_1^-)^{(4)}` is not integral.
pub fn force_hat_control() -> Result<SweepReport> {
    integrality_sweep(AlgebraKind::A22, 0..=0, 1..=1, 4, 4, Basis::ForceHat)
}

// ---------------------------------------------------------------------------
// Negative controls and Mitzman comparisons

/// Whether a perturbed structure constant is caught.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationReport {
    pub mutation: String,
    pub jacobi_violation: Option<String>,
    pub failing_entry: Option<String>,
    pub detected: bool,
}

/// Run the Jacobi sweep and, if it passes, the catalog on a mutated algebra.
pub fn detect_mutation(m: Mutation, order: usize) -> MutationReport {
    let alg = Algebra::mutated(m);
    let jac = alg.check_jacobi(3);
    let mut failing_entry = None;
    if jac.pass {
        let u = Uea::with_algebra(alg);
        for e in catalog().iter().filter(|e| e.algebra == m.algebra()) {
            let n = order.min(e.default_order);
            match run_entry(e, &u, n) {
                Ok(r) if r.pass => {}
                _ => {
                    failing_entry = Some(e.tag.clone());
                    break;
                }
            }
        }
    }
    let detected = !jac.pass || failing_entry.is_some();
    MutationReport {
        mutation: format!("{m:?}"),
        jacobi_violation: jac.first_violation,
        failing_entry,
        detected,
    }
}

/// Run a single catalog entry on a mutated algebra.
pub fn entry_on_mutation(tag: &str, m: Mutation, order: usize) -> Result<Report> {
    let e = find(tag)?;
    if e.algebra != m.algebra() {
        return Err(Error::Domain(format!("{tag} lives on {}", e.algebra)));
    }
    run_entry(&e, &Uea::with_algebra(Algebra::mutated(m)), order)
}

/// Outcome of sampling integral basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub checked: usize,
    pub pass: bool,
    pub first_failure: Option<String>,
}

/// A random label of the standard integral basis of A2(2).
pub fn random_standard_label(rng: &mut impl Rng) -> Label {
    let mut gens: Vec<Gen> = Vec::new();
    for r in -2..=2 {
        gens.push(xp(r));
        gens.push(xm(r));
    }
    for r in [-3, -1, 1, 3] {
        gens.push(Gen::xxp(r));
        gens.push(Gen::xxm(r));
    }
    let count = rng.gen_range(1..=3);
    let mut chosen: Vec<Gen> = gens.choose_multiple(rng, count).copied().collect();
    chosen.sort();
    let mut parts: Vec<(u8, Part)> = chosen
        .into_iter()
        .map(|g| (g.block(), Part::Div(g, rng.gen_range(1..=2))))
        .collect();
    if rng.gen_bool(0.5) {
        parts.push((4, Part::Binom(CartanVar::H0, rng.gen_range(1..=2))));
    }
    if rng.gen_bool(0.3) {
        parts.push((5, Part::Binom(CartanVar::C, 1)));
    }
    if rng.gen_bool(0.5) {
        let positive = rng.gen_bool(0.5);
        let m = PMono::from_pairs([(rng.gen_range(1..=3u32), 1)]);
        parts.push((if positive { 6 } else { 3 }, Part::Family(FamilyKind::Tilde, positive, m)));
    }
    parts.sort_by_key(|(b, _)| *b);
    Label(parts.into_iter().map(|(_, p)| p).collect())
}

/// Mitzman coordinates of `count` random standard basis elements are integers.
pub fn mitzman_inclusion_sample(count: usize, seed: u64) -> Result<SampleReport> {
    let u = Uea::new(AlgebraKind::A22);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let l = random_standard_label(&mut rng);
        let a = u.basis_element(&l)?;
        let m = u.membership(&a, Basis::Mitzman)?;
        if let Some((label, c)) = m.witness {
            return Ok(SampleReport {
                checked: i + 1,
                pass: false,
                first_failure: Some(format!("{}: {} on {}", l.render(), crate::fmt_q(&c), label)),
            });
        }
    }
    Ok(SampleReport {
        checked: count,
        pass: true,
        first_failure: None,
    })
}

/// Standard coordinates of `(y_1^+)^{(2)}`, which lies in Mitzman's form only.
pub fn mitzman_strictness_witness() -> Result<Vec<(String, Q)>> {
    let u = Uea::new(AlgebraKind::A22);
    let y2 = u.basis_element(&Label(vec![Part::DivQuarter(Gen::xxp(1), 2)]))?;
    Ok(u
        .integral_coordinates(&y2)?
        .into_iter()
        .map(|(l, c)| (l.render(), c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalog_shape() {
        let c = catalog();
        assert!(c.len() >= 25);
        let tags: HashSet<_> = c.iter().map(|e| e.tag.clone()).collect();
        assert_eq!(tags.len(), c.len());
        assert!(c.iter().all(|e| !e.paper_ref.is_empty() && !e.cases.is_empty()));
    }

    #[test]
    fn unknown_tag_and_ceiling() {
        assert_eq!(verify("NOPE", 3).unwrap_err(), Error::UnknownTag("NOPE".into()));
        assert!(matches!(verify_with("X0X1", 40, 1000), Err(Error::CostCeiling { .. })));
        assert!(verify("CEF", 0).is_err());
    }

    #[test]
    fn d_exponents_are_integers() {
        let k = d_exponents(12).unwrap();
        assert!(k.iter().all(|x| x.is_integer()), "{k:?}");
        assert_eq!(k[1], qi(1));
    }

    #[test]
    fn small_entries_pass() {
        for tag in ["CEF", "EFU", "BDM+2", "BDM-1", "JHG-A11", "PUM", "TDMOM2"] {
            let r = verify(tag, 5).unwrap();
            assert!(r.pass, "{tag}: {:?}", r.first_diff);
        }
    }

    #[test]
    fn report_detects_a_wrong_side() {
        let mut e = find("EFU").unwrap();
        e.cases[0].right = Arc::new(|u, n| expg(u, n, &lg(Gen::f()), 1, 0));
        let r = run_entry(&e, &Uea::new(AlgebraKind::Sl2), 4).unwrap();
        assert!(!r.pass);
        let d = r.first_diff.unwrap();
        assert_eq!((d.deg_u, d.deg_v), (0, 0));
    }
}
