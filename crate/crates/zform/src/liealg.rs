//! The Lie algebras sl2, A1(1) and A2(2) as closed-form structure constants.
//!
//! Also provides their symmetries (σ, Ω, T, λ_m), the embeddings between
//! them, the evaluation map to sl2 and the `Q[w]`-module structure on the
//! subalgebra `L` spanned by the nonnegative modes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{fmt_q, qf, qi, Error, Result, Q};

/// Which Lie algebra a generator lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraKind {
    #[serde(rename = "sl2")]
    Sl2,
    #[serde(rename = "a1_1")]
    A11,
    #[serde(rename = "a2_2")]
    A22,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Sl2 => "sl2",
            AlgebraKind::A11 => "a1_1",
            AlgebraKind::A22 => "a2_2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "sl2" => Some(AlgebraKind::Sl2),
            "a1_1" => Some(AlgebraKind::A11),
            "a2_2" => Some(AlgebraKind::A22),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Kind of a basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// sl2 `e`.
    E,
    /// sl2 `f`.
    F,
    /// sl2 `h`.
    Hs,
    /// Central `c`.
    C,
    /// `h_r`.
    H,
    /// `x_r^+`.
    Xp,
    /// `x_r^-`.
    Xm,
    /// `X_r^+`, `r` odd.
    XXp,
    /// `X_r^-`, `r` odd.
    XXm,
}

/// One basis element of one of the three algebras.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gen {
    pub kind: Kind,
    pub idx: i32,
}

impl Gen {
    pub fn e() -> Gen {
        Gen { kind: Kind::E, idx: 0 }
    }
    pub fn f() -> Gen {
        Gen { kind: Kind::F, idx: 0 }
    }
    pub fn hs() -> Gen {
        Gen { kind: Kind::Hs, idx: 0 }
    }
    pub fn c() -> Gen {
        Gen { kind: Kind::C, idx: 0 }
    }
    pub fn h(r: i32) -> Gen {
        Gen { kind: Kind::H, idx: r }
    }
    pub fn xp(r: i32) -> Gen {
        Gen { kind: Kind::Xp, idx: r }
    }
    pub fn xm(r: i32) -> Gen {
        Gen { kind: Kind::Xm, idx: r }
    }
    pub fn xxp(r: i32) -> Gen {
        assert!(r.rem_euclid(2) == 1, "X+ needs an odd index, got {r}");
        Gen { kind: Kind::XXp, idx: r }
    }
    pub fn xxm(r: i32) -> Gen {
        assert!(r.rem_euclid(2) == 1, "X- needs an odd index, got {r}");
        Gen { kind: Kind::XXm, idx: r }
    }

    /// Block number in the PBW order, see [`Gen::order_key`].
    pub fn block(&self) -> u8 {
        let odd = self.idx.rem_euclid(2) == 1;
        match self.kind {
            Kind::F => 0,
            Kind::Xm if odd => 0,
            Kind::XXm => 1,
            Kind::Xm => 2,
            Kind::H if self.idx < 0 => 3,
            Kind::H if self.idx == 0 => 4,
            Kind::Hs => 4,
            Kind::C => 5,
            Kind::H => 6,
            Kind::Xp if odd => 7,
            Kind::XXp => 8,
            Kind::Xp => 9,
            Kind::E => 9,
        }
    }

    /// Total order realizing the block order
    /// `x^-_odd < X^- < x^-_even < h_{<0} < h_0 < c < h_{>0} < x^+_odd < X^+ < x^+_even`,
    /// increasing index within a block.
    pub fn order_key(&self) -> (u8, i32) {
        (self.block(), self.idx)
    }

    /// Whether the generator belongs to the algebra.
    pub fn belongs_to(&self, alg: AlgebraKind) -> bool {
        match alg {
            AlgebraKind::Sl2 => matches!(self.kind, Kind::E | Kind::F | Kind::Hs),
            AlgebraKind::A11 => matches!(self.kind, Kind::C | Kind::H | Kind::Xp | Kind::Xm),
            AlgebraKind::A22 => match self.kind {
                Kind::C | Kind::H | Kind::Xp | Kind::Xm => true,
                Kind::XXp | Kind::XXm => self.idx.rem_euclid(2) == 1,
                _ => false,
            },
        }
    }

    /// Weight in units of the simple root: `X^±` carry `±2`.
    pub fn degree(&self) -> i32 {
        match self.kind {
            Kind::E | Kind::Xp => 1,
            Kind::F | Kind::Xm => -1,
            Kind::XXp => 2,
            Kind::XXm => -2,
            _ => 0,
        }
    }

    pub fn render(&self) -> String {
        match self.kind {
            Kind::E => "e".into(),
            Kind::F => "f".into(),
            Kind::Hs => "h".into(),
            Kind::C => "c".into(),
            Kind::H => format!("h[{}]", self.idx),
            Kind::Xp => format!("x+[{}]", self.idx),
            Kind::Xm => format!("x-[{}]", self.idx),
            Kind::XXp => format!("X+[{}]", self.idx),
            Kind::XXm => format!("X-[{}]", self.idx),
        }
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key()
            .cmp(&other.order_key())
            .then_with(|| self.kind.cmp(&other.kind))
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A finite rational combination of generators.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LieElem {
    terms: BTreeMap<Gen, Q>,
}

impl LieElem {
    pub fn zero() -> Self {
        LieElem::default()
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(g, Q::one())
    }

    pub fn term(g: Gen, c: Q) -> Self {
        let mut out = LieElem::zero();
        out.add_term(g, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<Gen, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &Gen) -> Q {
        self.terms.get(g).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, g: Gen, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(g).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, other: &LieElem) -> LieElem {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LieElem) -> LieElem {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> LieElem {
        if c.is_zero() {
            return LieElem::zero();
        }
        LieElem {
            terms: self.terms.iter().map(|(g, x)| (*g, x * c)).collect(),
        }
    }

    /// Linear extension of a map on generators.
    pub fn map(&self, f: impl Fn(Gen) -> LieElem) -> LieElem {
        let mut out = LieElem::zero();
        for (g, c) in &self.terms {
            out = out.add(&f(*g).scale(c));
        }
        out
    }

    pub fn try_map(&self, f: impl Fn(Gen) -> Result<LieElem>) -> Result<LieElem> {
        let mut out = LieElem::zero();
        for (g, c) in &self.terms {
            out = out.add(&f(*g)?.scale(c));
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (g, c) in &self.terms {
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if a.is_one() {
                out.push_str(&g.render());
            } else {
                out.push_str(&format!("{}*{}", fmt_q(&a), g.render()));
            }
        }
        out
    }
}

impl fmt::Debug for LieElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A single structure constant perturbed by `+1`, for negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// sl2: `[h,e] = 3e`.
    Sl2HE,
    /// A1(1): `[h_r,h_{-r}] = (2r+1)c`.
    A11Heisenberg,
    /// A1(1): `[h_1,x_s^+] = 3x_{s+1}^+`.
    A11HX,
    /// A2(2): `[x_r^+,x_s^+] = ((-1)^s + 1) X_{r+s}^+` for `r+s` odd.
    A22PlusPlus,
    /// A2(2): `[X_r^+,X_s^-] = 9h_{r+s} + ...`.
    A22BigXX,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::Sl2HE,
        Mutation::A11Heisenberg,
        Mutation::A11HX,
        Mutation::A22PlusPlus,
        Mutation::A22BigXX,
    ];

    pub fn algebra(self) -> AlgebraKind {
        match self {
            Mutation::Sl2HE => AlgebraKind::Sl2,
            Mutation::A11Heisenberg | Mutation::A11HX => AlgebraKind::A11,
            Mutation::A22PlusPlus | Mutation::A22BigXX => AlgebraKind::A22,
        }
    }
}

/// One of the three algebras, optionally with a perturbed structure constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Algebra {
    pub kind: AlgebraKind,
    pub mutation: Option<Mutation>,
}

/// An automorphism, antiautomorphism or endomorphism of one algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Sigma,
    Omega,
    T,
    TInv,
    Lambda(i32),
}

impl Symmetry {
    /// Antiautomorphisms reverse products in the enveloping algebra.
    pub fn reverses_products(self) -> bool {
        matches!(self, Symmetry::Sigma | Symmetry::Omega)
    }
}

/// Homomorphisms between different algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Embedding {
    /// A1(1) → A2(2): `x_r^± ↦ x_{2r}^±`.
    Small,
    /// A1(1) → A2(2): `x_r^± ↦ X_{2r∓1}^±/4`.
    Big,
    /// A1(1) → sl2, evaluation at `t = 1`.
    Ev,
}

impl Embedding {
    pub fn source(self) -> AlgebraKind {
        AlgebraKind::A11
    }

    pub fn target(self) -> AlgebraKind {
        match self {
            Embedding::Small | Embedding::Big => AlgebraKind::A22,
            Embedding::Ev => AlgebraKind::Sl2,
        }
    }
}

/// Laurent polynomial with rational coefficients in one variable
/// (used for both `w` and `T`).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct WPoly {
    terms: BTreeMap<i32, Q>,
}

impl WPoly {
    pub fn zero() -> Self {
        WPoly::default()
    }

    pub fn one() -> Self {
        Self::mono(0, Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::mono(0, c)
    }

    pub fn mono(power: i32, c: Q) -> Self {
        let mut out = WPoly::zero();
        out.add_term(power, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<i32, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, power: i32) -> Q {
        self.terms.get(&power).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, power: i32, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(power).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn add(&self, o: &WPoly) -> WPoly {
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(*p, c.clone());
        }
        out
    }

    pub fn neg(&self) -> WPoly {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> WPoly {
        if c.is_zero() {
            return WPoly::zero();
        }
        WPoly {
            terms: self.terms.iter().map(|(p, x)| (*p, x * c)).collect(),
        }
    }

    pub fn mul(&self, o: &WPoly) -> WPoly {
        let mut out = WPoly::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &o.terms {
                out.add_term(p1 + p2, c1 * c2);
            }
        }
        out
    }

    /// `ξ(w) ↦ ξ(a·w^k)`.
    pub fn substitute(&self, a: &Q, k: i32) -> WPoly {
        let mut out = WPoly::zero();
        for (p, c) in &self.terms {
            let mut f = Q::one();
            for _ in 0..p.unsigned_abs() {
                f *= a;
            }
            if *p < 0 {
                f = Q::one() / f;
            }
            out.add_term(p * k, c * f);
        }
        out
    }
}

fn sign(k: i32) -> Q {
    if k.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

impl Algebra {
    pub fn new(kind: AlgebraKind) -> Self {
        Algebra {
            kind,
            mutation: None,
        }
    }

    pub fn mutated(m: Mutation) -> Self {
        Algebra {
            kind: m.algebra(),
            mutation: Some(m),
        }
    }

    fn mutated_by(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    /// `[a, b]`.
    pub fn bracket(&self, a: Gen, b: Gen) -> LieElem {
        assert!(
            a.belongs_to(self.kind) && b.belongs_to(self.kind),
            "{a} and {b} must both lie in {}",
            self.kind
        );
        if a == b {
            return LieElem::zero();
        }
        let (x, y, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let v = match self.raw(x, y) {
            Some(v) => v,
            None => self.raw(y, x).map(|v| v.scale(&qi(-1))).unwrap_or_default(),
        };
        v.scale(&qi(s))
    }

    /// Whether `[a,b] = 0`.
    pub fn commute(&self, a: Gen, b: Gen) -> bool {
        self.bracket(a, b).is_zero()
    }

    fn raw(&self, a: Gen, b: Gen) -> Option<LieElem> {
        use Kind::*;
        let (r, s) = (a.idx, b.idx);
        match self.kind {
            AlgebraKind::Sl2 => match (a.kind, b.kind) {
                (Hs, E) => {
                    let k = if self.mutated_by(Mutation::Sl2HE) { 3 } else { 2 };
                    Some(LieElem::term(Gen::e(), qi(k)))
                }
                (Hs, F) => Some(LieElem::term(Gen::f(), qi(-2))),
                (E, F) => Some(LieElem::gen(Gen::hs())),
                _ => None,
            },
            AlgebraKind::A11 => match (a.kind, b.kind) {
                (C, _) | (_, C) => Some(LieElem::zero()),
                (H, H) => {
                    if r + s != 0 {
                        return Some(LieElem::zero());
                    }
                    let mut k = 2 * r as i64;
                    if self.mutated_by(Mutation::A11Heisenberg) && r != 0 {
                        k += 1;
                    }
                    Some(LieElem::term(Gen::c(), qi(k)))
                }
                (H, Xp) => {
                    let k = if r == 1 && self.mutated_by(Mutation::A11HX) { 3 } else { 2 };
                    Some(LieElem::term(Gen::xp(r + s), qi(k)))
                }
                (H, Xm) => Some(LieElem::term(Gen::xm(r + s), qi(-2))),
                (Xp, Xp) | (Xm, Xm) => Some(LieElem::zero()),
                (Xp, Xm) => {
                    let mut v = LieElem::gen(Gen::h(r + s));
                    if r + s == 0 {
                        v.add_term(Gen::c(), qi(r as i64));
                    }
                    Some(v)
                }
                _ => None,
            },
            AlgebraKind::A22 => match (a.kind, b.kind) {
                (C, _) | (_, C) => Some(LieElem::zero()),
                (H, H) => {
                    if r + s != 0 {
                        return Some(LieElem::zero());
                    }
                    Some(LieElem::term(Gen::c(), qi(r as i64 * h_x_coeff(r))))
                }
                (H, Xp) => Some(LieElem::term(Gen::xp(r + s), qi(h_x_coeff(r)))),
                (H, Xm) => Some(LieElem::term(Gen::xm(r + s), qi(-h_x_coeff(r)))),
                (H, XXp) => Some(if r.rem_euclid(2) == 0 {
                    LieElem::term(Gen::xxp(r + s), qi(4))
                } else {
                    LieElem::zero()
                }),
                (H, XXm) => Some(if r.rem_euclid(2) == 0 {
                    LieElem::term(Gen::xxm(r + s), qi(-4))
                } else {
                    LieElem::zero()
                }),
                (Xp, Xp) => Some(if (r + s).rem_euclid(2) == 0 {
                    LieElem::zero()
                } else {
                    let mut k = sign(s);
                    if self.mutated_by(Mutation::A22PlusPlus) {
                        k += Q::one();
                    }
                    LieElem::term(Gen::xxp(r + s), k)
                }),
                (Xm, Xm) => Some(if (r + s).rem_euclid(2) == 0 {
                    LieElem::zero()
                } else {
                    LieElem::term(Gen::xxm(r + s), -sign(s))
                }),
                (Xp, XXp) | (Xm, XXm) | (XXp, XXp) | (XXm, XXm) => Some(LieElem::zero()),
                (Xp, Xm) => {
                    let mut v = LieElem::gen(Gen::h(r + s));
                    if r + s == 0 {
                        v.add_term(Gen::c(), qi(r as i64));
                    }
                    Some(v)
                }
                (Xp, XXm) => Some(LieElem::term(Gen::xm(r + s), sign(r) * qi(4))),
                (Xm, XXp) => Some(LieElem::term(Gen::xp(r + s), -sign(r) * qi(4))),
                (XXp, XXm) => {
                    let k = if self.mutated_by(Mutation::A22BigXX) { 9 } else { 8 };
                    let mut v = LieElem::term(Gen::h(r + s), qi(k));
                    if r + s == 0 {
                        v.add_term(Gen::c(), qi(4 * r as i64));
                    }
                    Some(v)
                }
                _ => None,
            },
        }
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_elem(&self, a: &LieElem, b: &LieElem) -> LieElem {
        let mut out = LieElem::zero();
        for (g, x) in a.terms() {
            for (h, y) in b.terms() {
                out = out.add(&self.bracket(*g, *h).scale(&(x * y)));
            }
        }
        out
    }

    /// Image of a generator under a symmetry.
    pub fn apply_symmetry(&self, s: Symmetry, g: Gen) -> Result<LieElem> {
        use Kind::*;
        if self.kind == AlgebraKind::Sl2 {
            return Err(Error::Undefined(format!("{s:?} on sl2")));
        }
        let r = g.idx;
        let one = |g: Gen| Ok(LieElem::gen(g));
        match s {
            Symmetry::Sigma => match g.kind {
                Xp | Xm => one(g),
                _ => Ok(LieElem::term(g, qi(-1))),
            },
            Symmetry::Omega => match g.kind {
                Xp => one(Gen::xm(-r)),
                Xm => one(Gen::xp(-r)),
                XXp => one(Gen::xxm(-r)),
                XXm => one(Gen::xxp(-r)),
                H => one(Gen::h(-r)),
                C => one(g),
                _ => unreachable!("affine generator"),
            },
            Symmetry::T => Ok(self.t_power(1, g)),
            Symmetry::TInv => Ok(self.t_power(-1, g)),
            Symmetry::Lambda(m) => {
                if m == 0 {
                    return Err(Error::Undefined(
                        "λ_0 is the evaluation map; use Embedding::Ev".into(),
                    ));
                }
                if self.kind == AlgebraKind::A22 && m.rem_euclid(2) == 0 {
                    return Err(Error::Undefined(format!("λ_{m} on a2_2 needs odd m")));
                }
                Ok(match g.kind {
                    C => LieElem::term(g, qi(m as i64)),
                    _ => LieElem::gen(Gen { kind: g.kind, idx: m * r }),
                })
            }
        }
    }

    /// `T^j(g)` in closed form.
    pub fn t_power(&self, j: i32, g: Gen) -> LieElem {
        use Kind::*;
        let r = g.idx;
        match g.kind {
            Xp => LieElem::gen(Gen::xp(r - j)),
            Xm => LieElem::gen(Gen::xm(r + j)),
            XXp => LieElem::term(Gen::xxp(r - 2 * j), sign(j)),
            XXm => LieElem::term(Gen::xxm(r + 2 * j), sign(j)),
            H if r == 0 => {
                let mut v = LieElem::gen(g);
                v.add_term(Gen::c(), qi(-j as i64));
                v
            }
            H | C => LieElem::gen(g),
            E | F | Hs => panic!("T is not defined on sl2"),
        }
    }

    /// Linear extension of a symmetry.
    pub fn apply_symmetry_elem(&self, s: Symmetry, a: &LieElem) -> Result<LieElem> {
        a.try_map(|g| self.apply_symmetry(s, g))
    }

    /// `Σ_j a_j T^j` applied to a Lie element.
    pub fn act_t(&self, p: &WPoly, a: &LieElem) -> LieElem {
        let mut out = LieElem::zero();
        for (j, c) in p.terms() {
            out = out.add(&a.map(|g| self.t_power(*j, g)).scale(c));
        }
        out
    }

    /// Whether `g` is a basis element of `L`.
    pub fn in_l(&self, g: Gen) -> bool {
        match g.kind {
            Kind::Xp | Kind::Xm | Kind::H => g.idx >= 0,
            Kind::XXp | Kind::XXm => g.idx >= 1,
            _ => false,
        }
    }

    /// `ξ(w).g` for `g` in `L`: `w = T` on `L^-`, `w = T^{-1}` on `L^+`,
    /// `w.h_r = h_{r+1}`.
    pub fn w_act(&self, xi: &WPoly, g: Gen) -> Result<LieElem> {
        if self.kind == AlgebraKind::Sl2 || !self.in_l(g) {
            return Err(Error::Domain(format!("{g} is not in L")));
        }
        let mut out = LieElem::zero();
        for (j, c) in xi.terms() {
            if *j < 0 {
                return Err(Error::Domain("w acts only through polynomials".into()));
            }
            let img = match g.kind {
                Kind::H => LieElem::gen(Gen::h(g.idx + j)),
                Kind::Xp | Kind::XXp => self.t_power(-j, g),
                _ => self.t_power(*j, g),
            };
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    /// Linear extension of [`Algebra::w_act`].
    pub fn w_act_elem(&self, xi: &WPoly, a: &LieElem) -> Result<LieElem> {
        a.try_map(|g| self.w_act(xi, g))
    }

    /// `exp(ad a)(b)` for `ad a` nilpotent on `b`.
    pub fn exp_ad(&self, a: &LieElem, b: &LieElem) -> Result<LieElem> {
        let mut out = b.clone();
        let mut term = b.clone();
        for k in 1..=32 {
            term = self.bracket_elem(a, &term).scale(&(Q::one() / qi(k)));
            if term.is_zero() {
                return Ok(out);
            }
            out = out.add(&term);
        }
        Err(Error::Domain("ad is not nilpotent on this element".into()))
    }

    /// All generators with `|index| ≤ window`.
    pub fn window(&self, window: i32) -> Vec<Gen> {
        match self.kind {
            AlgebraKind::Sl2 => vec![Gen::f(), Gen::hs(), Gen::e()],
            _ => {
                let mut out = vec![Gen::c()];
                for r in -window..=window {
                    out.push(Gen::h(r));
                    out.push(Gen::xp(r));
                    out.push(Gen::xm(r));
                    if self.kind == AlgebraKind::A22 && r.rem_euclid(2) == 1 {
                        out.push(Gen::xxp(r));
                        out.push(Gen::xxm(r));
                    }
                }
                out.sort();
                out
            }
        }
    }

    /// Exhaustive Jacobi identity over the window.
    pub fn check_jacobi(&self, window: i32) -> JacobiReport {
        let gens = self.window(window);
        let mut checked = 0;
        for (i, &a) in gens.iter().enumerate() {
            for (j, &b) in gens.iter().enumerate().skip(i) {
                for &c in gens.iter().skip(j) {
                    checked += 1;
                    let ab = self.bracket(a, b);
                    let bc = self.bracket(b, c);
                    let ca = self.bracket(c, a);
                    let total = self
                        .bracket_elem(&ab, &LieElem::gen(c))
                        .add(&self.bracket_elem(&bc, &LieElem::gen(a)))
                        .add(&self.bracket_elem(&ca, &LieElem::gen(b)));
                    if !total.is_zero() {
                        return JacobiReport {
                            checked,
                            pass: false,
                            first_violation: Some(format!(
                                "({a}, {b}, {c}) gives {}",
                                total.render()
                            )),
                        };
                    }
                }
            }
        }
        JacobiReport {
            checked,
            pass: true,
            first_violation: None,
        }
    }
}

/// Outcome of a Jacobi sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub checked: usize,
    pub pass: bool,
    pub first_violation: Option<String>,
}

fn h_x_coeff(r: i32) -> i64 {
    if r.rem_euclid(2) == 1 {
        6
    } else {
        2
    }
}

/// Image of an A1(1) generator under an embedding.
pub fn embed(e: Embedding, g: Gen) -> Result<LieElem> {
    if !g.belongs_to(AlgebraKind::A11) {
        return Err(Error::Undefined(format!("{e:?} is defined on a1_1, got {g}")));
    }
    let r = g.idx;
    Ok(match (e, g.kind) {
        (Embedding::Small, Kind::Xp) => LieElem::gen(Gen::xp(2 * r)),
        (Embedding::Small, Kind::Xm) => LieElem::gen(Gen::xm(2 * r)),
        (Embedding::Small, Kind::H) => LieElem::gen(Gen::h(2 * r)),
        (Embedding::Small, Kind::C) => LieElem::term(Gen::c(), qi(2)),
        (Embedding::Big, Kind::Xp) => LieElem::term(Gen::xxp(2 * r - 1), qf(1, 4)),
        (Embedding::Big, Kind::Xm) => LieElem::term(Gen::xxm(2 * r + 1), qf(1, 4)),
        (Embedding::Big, Kind::H) => {
            let mut v = LieElem::term(Gen::h(2 * r), qf(1, 2));
            if r == 0 {
                v.add_term(Gen::c(), qf(-1, 4));
            }
            v
        }
        (Embedding::Big, Kind::C) => LieElem::term(Gen::c(), qf(1, 2)),
        (Embedding::Ev, _) => ev(g)?,
        _ => unreachable!("a1_1 generator"),
    })
}

/// Evaluation `A1(1) → sl2` at `t = 1`.
pub fn ev(g: Gen) -> Result<LieElem> {
    Ok(match g.kind {
        Kind::Xp => LieElem::gen(Gen::e()),
        Kind::Xm => LieElem::gen(Gen::f()),
        Kind::H => LieElem::gen(Gen::hs()),
        Kind::C => LieElem::zero(),
        _ => return Err(Error::Undefined(format!("ev is defined on a1_1, got {g}"))),
    })
}

/// Linear extension of [`embed`].
pub fn embed_elem(e: Embedding, a: &LieElem) -> Result<LieElem> {
    a.try_map(|g| embed(e, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a22() -> Algebra {
        Algebra::new(AlgebraKind::A22)
    }
    fn a11() -> Algebra {
        Algebra::new(AlgebraKind::A11)
    }
    fn sl2() -> Algebra {
        Algebra::new(AlgebraKind::Sl2)
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(
            a22().bracket(Gen::xp(0), Gen::xp(1)),
            LieElem::term(Gen::xxp(1), qi(-1))
        );
        assert_eq!(
            a22().bracket(Gen::xm(0), Gen::xm(1)),
            LieElem::gen(Gen::xxm(1))
        );
        assert_eq!(
            a22().bracket(Gen::h(1), Gen::xp(0)),
            LieElem::term(Gen::xp(1), qi(6))
        );
        let mut expected = LieElem::gen(Gen::h(0));
        expected.add_term(Gen::c(), qi(2));
        assert_eq!(a11().bracket(Gen::xp(2), Gen::xm(-2)), expected);
        assert_eq!(sl2().bracket(Gen::e(), Gen::f()), LieElem::gen(Gen::hs()));
    }

    #[test]
    #[should_panic]
    fn mixed_algebras_rejected() {
        a11().bracket(Gen::e(), Gen::xp(0));
    }

    #[test]
    #[should_panic]
    fn even_big_index_unreachable() {
        Gen::xxp(2);
    }

    #[test]
    fn antisymmetry() {
        for alg in [sl2(), a11(), a22()] {
            let gens = alg.window(4);
            for &a in &gens {
                for &b in &gens {
                    assert_eq!(
                        alg.bracket(a, b),
                        alg.bracket(b, a).scale(&qi(-1)),
                        "{a} {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_holds() {
        for alg in [sl2(), a11(), a22()] {
            let rep = alg.check_jacobi(3);
            assert!(rep.pass, "{:?}: {:?}", alg.kind, rep.first_violation);
        }
    }

    #[test]
    fn symmetry_examples() {
        let mut t_h0 = LieElem::gen(Gen::h(0));
        t_h0.add_term(Gen::c(), qi(-1));
        assert_eq!(a11().apply_symmetry(Symmetry::T, Gen::h(0)).unwrap(), t_h0);
        assert_eq!(
            a22().apply_symmetry(Symmetry::Omega, Gen::xxp(3)).unwrap(),
            LieElem::gen(Gen::xxm(-3))
        );
        assert_eq!(
            a22().apply_symmetry(Symmetry::Lambda(3), Gen::xm(2)).unwrap(),
            LieElem::gen(Gen::xm(6))
        );
        assert!(a22().apply_symmetry(Symmetry::Lambda(2), Gen::xm(2)).is_err());
        assert!(sl2().apply_symmetry(Symmetry::T, Gen::e()).is_err());
        assert_eq!(
            a22().apply_symmetry(Symmetry::T, Gen::xxp(1)).unwrap(),
            LieElem::term(Gen::xxp(-1), qi(-1))
        );
    }

    fn homomorphy(alg: Algebra, s: Symmetry) {
        let gens = alg.window(3);
        for &a in &gens {
            for &b in &gens {
                let lhs = alg
                    .apply_symmetry_elem(s, &alg.bracket(a, b))
                    .unwrap();
                let sa = alg.apply_symmetry(s, a).unwrap();
                let sb = alg.apply_symmetry(s, b).unwrap();
                let rhs = if s.reverses_products() {
                    alg.bracket_elem(&sb, &sa)
                } else {
                    alg.bracket_elem(&sa, &sb)
                };
                assert_eq!(lhs, rhs, "{s:?} on [{a}, {b}]");
            }
        }
    }

    #[test]
    fn symmetries_respect_brackets() {
        for alg in [a11(), a22()] {
            for s in [
                Symmetry::Sigma,
                Symmetry::Omega,
                Symmetry::T,
                Symmetry::TInv,
                Symmetry::Lambda(-1),
                Symmetry::Lambda(3),
            ] {
                homomorphy(alg, s);
            }
        }
        homomorphy(a11(), Symmetry::Lambda(2));
    }

    #[test]
    fn composition_table() {
        use Symmetry::*;
        for alg in [a11(), a22()] {
            let ap = |s: Symmetry, a: &LieElem| alg.apply_symmetry_elem(s, a).unwrap();
            let pow = |s: Symmetry, k: i32, a: &LieElem| {
                (0..k).fold(a.clone(), |acc, _| ap(s, &acc))
            };
            for g in alg.window(3) {
                let x = LieElem::gen(g);
                assert_eq!(ap(Sigma, &ap(Omega, &x)), ap(Omega, &ap(Sigma, &x)));
                assert_eq!(ap(Sigma, &ap(T, &x)), ap(T, &ap(Sigma, &x)));
                assert_eq!(ap(Omega, &ap(T, &x)), ap(T, &ap(Omega, &x)));
                for m in [-1, 1, 3] {
                    let lm = Lambda(m);
                    assert_eq!(ap(Sigma, &ap(lm, &x)), ap(lm, &ap(Sigma, &x)));
                    assert_eq!(ap(Omega, &ap(lm, &x)), ap(lm, &ap(Omega, &x)));
                    let (tp, tm) = if m > 0 { (T, TInv) } else { (TInv, T) };
                    assert_eq!(ap(lm, &ap(T, &x)), pow(tp, m.abs(), &ap(lm, &x)));
                    assert_eq!(ap(lm, &ap(TInv, &x)), pow(tm, m.abs(), &ap(lm, &x)));
                    for n in [-1, 1, 3] {
                        assert_eq!(ap(lm, &ap(Lambda(n), &x)), ap(Lambda(m * n), &x));
                    }
                }
                assert_eq!(ap(Sigma, &ap(Sigma, &x)), x);
                assert_eq!(ap(Omega, &ap(Omega, &x)), x);
                assert_eq!(ap(T, &ap(TInv, &x)), x);
            }
        }
    }

    #[test]
    fn w_action_examples() {
        let alg = a22();
        let w = WPoly::mono(1, qi(1));
        let w2 = WPoly::mono(2, qi(1));
        assert_eq!(alg.w_act(&w, Gen::xp(0)).unwrap(), LieElem::gen(Gen::xp(1)));
        assert_eq!(alg.w_act(&w2, Gen::xm(1)).unwrap(), LieElem::gen(Gen::xm(3)));
        let one_w = WPoly::one().add(&w);
        assert_eq!(
            alg.w_act(&one_w, Gen::h(0)).unwrap(),
            LieElem::gen(Gen::h(0)).add(&LieElem::gen(Gen::h(1)))
        );
        assert!(alg.w_act(&w, Gen::xp(-1)).is_err());
        assert!(alg.w_act(&w, Gen::c()).is_err());
    }

    #[test]
    fn w_action_lemma() {
        // i)   [ξ1(w²).x_0^±, ξ2(w²).x_1^±] = ∓(ξ1ξ2)(-w).X_1^±
        // ii)  [ξ1(w).x_0^+, ξ2(w).x_0^-] = (ξ1ξ2)(w).h_0
        // iii) [ξ1(w).x_0^+, ξ2(w).X_1^-] = 4 ξ1(-w)ξ2(-w²).x_1^-
        // iv)  [ξ1(w).h_0, ξ2(w).x_0^±] = ±(4ξ1(w) - 2ξ1(-w))ξ2(w).x_0^±
        let alg = a22();
        let one = qi(1);
        let neg = qi(-1);
        for i in 0..=4 {
            for j in 0..=4 {
                let x1 = WPoly::mono(i, qi(1));
                let x2 = WPoly::mono(j, qi(1));
                let prod = x1.mul(&x2);
                for (gp, gq, big, s) in [
                    (Gen::xp(0), Gen::xp(1), Gen::xxp(1), -1),
                    (Gen::xm(0), Gen::xm(1), Gen::xxm(1), 1),
                ] {
                    let lhs = alg.bracket_elem(
                        &alg.w_act(&x1.substitute(&one, 2), gp).unwrap(),
                        &alg.w_act(&x2.substitute(&one, 2), gq).unwrap(),
                    );
                    let rhs = alg
                        .w_act(&prod.substitute(&neg, 1), big)
                        .unwrap()
                        .scale(&qi(s));
                    assert_eq!(lhs, rhs, "i) {i} {j}");
                }
                let lhs = alg.bracket_elem(
                    &alg.w_act(&x1, Gen::xp(0)).unwrap(),
                    &alg.w_act(&x2, Gen::xm(0)).unwrap(),
                );
                assert_eq!(lhs, alg.w_act(&prod, Gen::h(0)).unwrap(), "ii)");
                let lhs = alg.bracket_elem(
                    &alg.w_act(&x1, Gen::xp(0)).unwrap(),
                    &alg.w_act(&x2, Gen::xxm(1)).unwrap(),
                );
                let xi = x1.substitute(&neg, 1).mul(&x2.substitute(&neg, 2));
                let rhs = alg.w_act(&xi, Gen::xm(1)).unwrap().scale(&qi(4));
                assert_eq!(lhs, rhs, "iii)");
                for (gx, s) in [(Gen::xp(0), 1), (Gen::xm(0), -1)] {
                    let lhs = alg.bracket_elem(
                        &alg.w_act(&x1, Gen::h(0)).unwrap(),
                        &alg.w_act(&x2, gx).unwrap(),
                    );
                    let xi = x1
                        .scale(&qi(4))
                        .add(&x1.substitute(&neg, 1).scale(&qi(-2)))
                        .mul(&x2);
                    let rhs = alg.w_act(&xi, gx).unwrap().scale(&qi(s));
                    assert_eq!(lhs, rhs, "iv)");
                }
            }
        }
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        let src = a11();
        for e in [Embedding::Small, Embedding::Big, Embedding::Ev] {
            let dst = Algebra::new(e.target());
            for &a in &src.window(3) {
                for &b in &src.window(3) {
                    let lhs = embed_elem(e, &src.bracket(a, b)).unwrap();
                    let rhs =
                        dst.bracket_elem(&embed(e, a).unwrap(), &embed(e, b).unwrap());
                    assert_eq!(lhs, rhs, "{e:?} [{a}, {b}]");
                }
            }
        }
    }

    #[test]
    fn ev_examples() {
        assert_eq!(ev(Gen::xp(5)).unwrap(), LieElem::gen(Gen::e()));
        assert!(ev(Gen::c()).unwrap().is_zero());
        assert_eq!(ev(Gen::h(-2)).unwrap(), LieElem::gen(Gen::hs()));
    }

    #[test]
    fn mutations_break_jacobi() {
        for m in Mutation::ALL {
            let rep = Algebra::mutated(m).check_jacobi(3);
            assert!(!rep.pass, "{m:?} not detected");
        }
    }

    #[test]
    fn order_blocks() {
        let mut gens = vec![
            Gen::xp(0),
            Gen::xxp(1),
            Gen::xp(1),
            Gen::h(1),
            Gen::c(),
            Gen::h(0),
            Gen::h(-1),
            Gen::xm(0),
            Gen::xxm(1),
            Gen::xm(1),
        ];
        gens.sort();
        assert_eq!(
            gens,
            vec![
                Gen::xm(1),
                Gen::xxm(1),
                Gen::xm(0),
                Gen::h(-1),
                Gen::h(0),
                Gen::c(),
                Gen::h(1),
                Gen::xp(1),
                Gen::xxp(1),
                Gen::xp(0),
            ]
        );
    }
}
