//! Enveloping algebras: PBW monomials, straightening, divided powers,
//! binomial elements, morphisms and coordinates in the integral bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::liealg::{embed, Algebra, AlgebraKind, Embedding, Gen, Kind, LieElem, Symmetry};
use crate::series::Ring;
use crate::symfun::{to_family_coords, GeneratorFamily, PMono, SymFunc};
use crate::{binom, factorial, fmt_q, qf, qi, Result, Q};

/// An ordered monomial `g_1^{a_1} ⋯ g_n^{a_n}` with `g_1 < ⋯ < g_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(Vec<(Gen, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn gen(g: Gen) -> Self {
        Mono(vec![(g, 1)])
    }

    /// Builds a monomial, checking the order.
    pub fn from_factors(f: Vec<(Gen, u32)>) -> Self {
        assert!(
            f.windows(2).all(|w| w[0].0 < w[1].0) && f.iter().all(|p| p.1 > 0),
            "factors must be strictly increasing with positive exponents"
        );
        Mono(f)
    }

    pub fn factors(&self) -> &[(Gen, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total `x^±` degree.
    pub fn degree(&self) -> i32 {
        self.0.iter().map(|(g, e)| g.degree() * *e as i32).sum()
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|(g, e)| {
                if *e == 1 {
                    g.render()
                } else {
                    format!("{}^{}", g.render(), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A rational combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UElem {
    terms: BTreeMap<Mono, Q>,
}

impl UElem {
    pub fn zero() -> Self {
        UElem::default()
    }

    pub fn one() -> Self {
        Self::scalar(Q::one())
    }

    pub fn scalar(c: Q) -> Self {
        Self::term(Mono::one(), c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(Mono::gen(g), Q::one())
    }

    pub fn term(m: Mono, c: Q) -> Self {
        let mut out = UElem::zero();
        out.add_term(m, c);
        out
    }

    pub fn from_lie(a: &LieElem) -> Self {
        let mut out = UElem::zero();
        for (g, c) in a.terms() {
            out.add_term(Mono::gen(*g), c.clone());
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &UElem, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &o.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, o: &UElem) -> UElem {
        let mut out = self.clone();
        out.add_scaled(o, &Q::one());
        out
    }

    pub fn sub(&self, o: &UElem) -> UElem {
        let mut out = self.clone();
        out.add_scaled(o, &-Q::one());
        out
    }

    pub fn scale(&self, c: &Q) -> UElem {
        let mut out = UElem::zero();
        out.add_scaled(self, c);
        out
    }

    /// Homogeneous components by `x^±` degree.
    pub fn grade(&self) -> BTreeMap<i32, UElem> {
        let mut out: BTreeMap<i32, UElem> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&fmt_q(&a));
            } else if a.is_one() {
                out.push_str(&m.render());
            } else {
                out.push_str(&format!("{}*{}", fmt_q(&a), m.render()));
            }
        }
        out
    }
}

impl fmt::Debug for UElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A homomorphism or antihomomorphism that can be applied to elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Morphism {
    Symmetry(Symmetry),
    Embedding(Embedding),
}

/// Cartan variables appearing in binomial basis elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanVar {
    /// `h_0`.
    H0,
    /// `c`.
    C,
    /// sl2 `h`.
    Hs,
    /// `c/4 - h_0/2`.
    Shifted,
}

impl CartanVar {
    fn render(self) -> &'static str {
        match self {
            CartanVar::H0 => "h[0]",
            CartanVar::C => "c",
            CartanVar::Hs => "h",
            CartanVar::Shifted => "c/4-h[0]/2",
        }
    }
}

/// Generator families used on the imaginary blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// `ĥ_k`.
    Hat,
    /// `h̃_k`.
    Tilde,
    /// `ĥ_k` evaluated on `h_r/2`.
    HalfHat,
}

impl FamilyKind {
    fn stem(self) -> &'static str {
        match self {
            FamilyKind::Hat => "hh",
            FamilyKind::Tilde => "ht",
            FamilyKind::HalfHat => "hm",
        }
    }
}

/// One factor of an integral basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    /// `g^{(k)}`.
    Div(Gen, u32),
    /// `(g/4)^{(k)}` for an `X^±` generator.
    DivQuarter(Gen, u32),
    /// `C(z, k)`.
    Binom(CartanVar, u32),
    /// Monomial in a family, on the negative (`false`) or positive side.
    Family(FamilyKind, bool, PMono),
}

impl Part {
    pub fn render(&self) -> String {
        match self {
            Part::Div(g, k) => format!("{}^({})", g.render(), k),
            Part::DivQuarter(g, k) => {
                let s = if g.kind == Kind::XXp { '+' } else { '-' };
                format!("y{}[{}]^({})", s, g.idx, k)
            }
            Part::Binom(v, k) => format!("C({},{})", v.render(), k),
            Part::Family(f, pos, m) => m
                .pairs()
                .iter()
                .map(|&(r, e)| {
                    let idx = if *pos { r as i64 } else { -(r as i64) };
                    if e == 1 {
                        format!("{}[{}]", f.stem(), idx)
                    } else {
                        format!("{}[{}]^{}", f.stem(), idx, e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*"),
        }
    }
}

/// An integral basis element, as its factors in block order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Label(pub Vec<Part>);

impl Label {
    pub fn render(&self) -> String {
        if self.0.is_empty() {
            "1".into()
        } else {
            self.0.iter().map(Part::render).collect::<Vec<_>>().join("*")
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Coordinates in an integral basis.
pub type Coords = BTreeMap<Label, Q>;

/// Which integral basis to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `ĥ` on A1(1), `h̃` on A2(2).
    Standard,
    /// `ĥ` on the imaginary blocks of A2(2) as well.
    ForceHat,
    /// Mitzman's basis of A2(2).
    Mitzman,
}

/// Membership test outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub integral: bool,
    pub witness: Option<(String, Q)>,
}

/// An enveloping algebra with its straightening cache.
pub struct Uea {
    alg: Algebra,
    cache: Mutex<HashMap<(Mono, Gen), UElem>>,
    hat: GeneratorFamily,
    tilde: GeneratorFamily,
    half_hat: GeneratorFamily,
}

impl fmt::Debug for Uea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Uea").field("alg", &self.alg).finish()
    }
}

impl Uea {
    pub fn new(kind: AlgebraKind) -> Self {
        Self::with_algebra(Algebra::new(kind))
    }

    pub fn with_algebra(alg: Algebra) -> Self {
        Uea {
            alg,
            cache: Mutex::new(HashMap::new()),
            hat: GeneratorFamily::hat(),
            tilde: GeneratorFamily::tilde(),
            half_hat: GeneratorFamily::half_hat(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn kind(&self) -> AlgebraKind {
        self.alg.kind
    }

    pub fn gen(&self, g: Gen) -> UElem {
        assert!(g.belongs_to(self.alg.kind), "{g} is not in {}", self.alg.kind);
        UElem::gen(g)
    }

    /// `m·g` in PBW form.
    pub fn mul_mono_gen(&self, m: &Mono, g: Gen) -> UElem {
        let f = m.factors();
        let pos = f.partition_point(|(h, _)| *h < g);
        if f[pos..].iter().all(|(h, _)| *h == g || self.alg.commute(*h, g)) {
            let mut v = f.to_vec();
            if pos < v.len() && v[pos].0 == g {
                v[pos].1 += 1;
            } else {
                v.insert(pos, (g, 1));
            }
            return UElem::term(Mono(v), Q::one());
        }
        let key = (m.clone(), g);
        if let Some(hit) = self.cache.lock().expect("cache").get(&key) {
            return hit.clone();
        }
        // m = m'·y with y > g: m·g = (m'·g)·y + m'·[y, g]
        let mut head = f.to_vec();
        let (y, e) = *head.last().expect("nonempty");
        if e == 1 {
            head.pop();
        } else {
            head.last_mut().expect("nonempty").1 -= 1;
        }
        let head = Mono(head);
        let mut out = self.mul_elem_gen(&self.mul_mono_gen(&head, g), y);
        for (t, c) in self.alg.bracket(y, g).terms() {
            out.add_scaled(&self.mul_mono_gen(&head, *t), c);
        }
        self.cache.lock().expect("cache").insert(key, out.clone());
        out
    }

    /// `a·g`.
    pub fn mul_elem_gen(&self, a: &UElem, g: Gen) -> UElem {
        let mut out = UElem::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.mul_mono_gen(m, g), c);
        }
        out
    }

    /// `a·b` in PBW form.
    pub fn mul(&self, a: &UElem, b: &UElem) -> UElem {
        let mut out = UElem::zero();
        for (m, c) in b.terms() {
            let mut acc = a.clone();
            for &(g, e) in m.factors() {
                for _ in 0..e {
                    acc = self.mul_elem_gen(&acc, g);
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Product of a list, left to right.
    pub fn product(&self, factors: &[UElem]) -> UElem {
        factors.iter().fold(UElem::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &UElem, k: u32) -> UElem {
        (0..k).fold(UElem::one(), |acc, _| self.mul(&acc, a))
    }

    /// `g^{(k)} = g^k/k!`.
    pub fn divided_power(&self, g: Gen, k: u32) -> UElem {
        assert!(g.belongs_to(self.alg.kind), "{g} is not in {}", self.alg.kind);
        if k == 0 {
            return UElem::one();
        }
        UElem::term(Mono(vec![(g, k)]), Q::one() / factorial(k))
    }

    /// `C(α·h + β·c + γ, k)` with `h = h_0` (or sl2 `h`).
    pub fn binomial_element(&self, alpha: &Q, beta: &Q, gamma: &Q, k: u32) -> UElem {
        let h = if self.alg.kind == AlgebraKind::Sl2 {
            Gen::hs()
        } else {
            Gen::h(0)
        };
        let mut z = UElem::scalar(gamma.clone());
        z.add_term(Mono::gen(h), alpha.clone());
        if self.alg.kind != AlgebraKind::Sl2 {
            z.add_term(Mono::gen(Gen::c()), beta.clone());
        }
        let mut out = UElem::one();
        for i in 0..k {
            let factor = z.sub(&UElem::scalar(qi(i as i64))).scale(&(Q::one() / qi(i as i64 + 1)));
            out = self.mul(&out, &factor);
        }
        out
    }

    /// Image under a symmetry of this algebra.
    pub fn apply_symmetry(&self, a: &UElem, s: Symmetry) -> Result<UElem> {
        let mut images: HashMap<Gen, UElem> = HashMap::new();
        let mut out = UElem::zero();
        for (m, c) in a.terms() {
            let mut factors = Vec::new();
            for &(g, e) in m.factors() {
                if let std::collections::hash_map::Entry::Vacant(v) = images.entry(g) {
                    v.insert(UElem::from_lie(&self.alg.apply_symmetry(s, g)?));
                }
                for _ in 0..e {
                    factors.push(images[&g].clone());
                }
            }
            if s.reverses_products() {
                factors.reverse();
            }
            out.add_scaled(&self.product(&factors), c);
        }
        Ok(out)
    }

    /// Image under a morphism, computed in `target` (which must be `self`
    /// for symmetries).
    pub fn apply_morphism(&self, a: &UElem, m: Morphism, target: &Uea) -> Result<UElem> {
        match m {
            Morphism::Symmetry(s) => self.apply_symmetry(a, s),
            Morphism::Embedding(e) => {
                if self.kind() != e.source() || target.kind() != e.target() {
                    return Err(crate::Error::Undefined(format!(
                        "{e:?} maps {} to {}",
                        e.source(),
                        e.target()
                    )));
                }
                let mut out = UElem::zero();
                for (mono, c) in a.terms() {
                    let mut factors = Vec::new();
                    for &(g, k) in mono.factors() {
                        let img = UElem::from_lie(&embed(e, g)?);
                        factors.extend(std::iter::repeat_n(img, k as usize));
                    }
                    out.add_scaled(&target.product(&factors), c);
                }
                Ok(out)
            }
        }
    }

    /// `ξ(w)` applied to a Lie element of `L`, as an element of the algebra.
    pub fn lie(&self, a: &LieElem) -> UElem {
        UElem::from_lie(a)
    }

    fn family(&self, f: FamilyKind) -> &GeneratorFamily {
        match f {
            FamilyKind::Hat => &self.hat,
            FamilyKind::Tilde => &self.tilde,
            FamilyKind::HalfHat => &self.half_hat,
        }
    }

    fn imaginary_family(&self, basis: Basis) -> FamilyKind {
        match (self.alg.kind, basis) {
            (_, Basis::Mitzman) => FamilyKind::HalfHat,
            (AlgebraKind::A22, Basis::Standard) => FamilyKind::Tilde,
            _ => FamilyKind::Hat,
        }
    }

    /// Coordinates in the integral basis of the standard form.
    pub fn integral_coordinates(&self, a: &UElem) -> Result<Coords> {
        self.coordinates(a, Basis::Standard)
    }

    /// Coordinates in Mitzman's basis (A2(2) only).
    pub fn mitzman_coordinates(&self, a: &UElem) -> Result<Coords> {
        if self.alg.kind != AlgebraKind::A22 {
            return Err(crate::Error::Undefined("Mitzman's basis is defined on a2_2".into()));
        }
        self.coordinates(a, Basis::Mitzman)
    }

    /// Coordinates of `a` in the chosen basis.
    pub fn coordinates(&self, a: &UElem, basis: Basis) -> Result<Coords> {
        let mut out = Coords::new();
        for (m, c) in a.terms() {
            for (label, x) in self.mono_coords(m, basis)? {
                let e = out.entry(label).or_insert_with(Q::zero);
                *e += x * c;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    fn mono_coords(&self, m: &Mono, basis: Basis) -> Result<Vec<(Label, Q)>> {
        let mut acc: Vec<(Vec<Part>, Q)> = vec![(Vec::new(), Q::one())];
        let push = |acc: &mut Vec<(Vec<Part>, Q)>, opts: Vec<(Vec<Part>, Q)>| {
            let mut next = Vec::with_capacity(acc.len() * opts.len());
            for (p, c) in acc.iter() {
                for (q, d) in &opts {
                    let mut v = p.clone();
                    v.extend(q.iter().cloned());
                    next.push((v, c * d));
                }
            }
            *acc = next;
        };
        let f = m.factors();
        let mut i = 0;
        while i < f.len() {
            let (g, e) = f[i];
            match g.kind {
                Kind::H if g.idx != 0 => {
                    let neg = g.idx < 0;
                    let mut pairs = Vec::new();
                    while i < f.len() && f[i].0.kind == Kind::H && (f[i].0.idx < 0) == neg && f[i].0.idx != 0 {
                        pairs.push((f[i].0.idx.unsigned_abs(), f[i].1));
                        i += 1;
                    }
                    let fam = self.imaginary_family(basis);
                    let sf = SymFunc::monomial(PMono::from_pairs(pairs), Q::one());
                    let coords = to_family_coords(&sf, self.family(fam))?;
                    push(
                        &mut acc,
                        coords
                            .into_iter()
                            .map(|(pm, c)| {
                                let parts = if pm.is_one() {
                                    vec![]
                                } else {
                                    vec![Part::Family(fam, !neg, pm)]
                                };
                                (parts, c)
                            })
                            .collect(),
                    );
                    continue;
                }
                Kind::H | Kind::C | Kind::Hs => {
                    let (mut a, mut b) = (0u32, 0u32);
                    while i < f.len() && matches!(f[i].0.kind, Kind::H | Kind::C | Kind::Hs) && f[i].0.idx == 0 {
                        if f[i].0.kind == Kind::C {
                            b = f[i].1;
                        } else {
                            a = f[i].1;
                        }
                        i += 1;
                    }
                    push(&mut acc, self.cartan_coords(a, b, basis));
                    continue;
                }
                Kind::XXp | Kind::XXm if basis == Basis::Mitzman => {
                    let s = qi(4).pow(e as i32) * factorial(e);
                    push(&mut acc, vec![(vec![Part::DivQuarter(g, e)], s)]);
                }
                _ => push(&mut acc, vec![(vec![Part::Div(g, e)], factorial(e))]),
            }
            i += 1;
        }
        Ok(acc.into_iter().map(|(p, c)| (Label(p), c)).collect())
    }

    /// `h^a c^b` in the binomial basis of the Cartan block.
    fn cartan_coords(&self, a: u32, b: u32, basis: Basis) -> Vec<(Vec<Part>, Q)> {
        let hv = if self.alg.kind == AlgebraKind::Sl2 {
            CartanVar::Hs
        } else {
            CartanVar::H0
        };
        let part = |v: CartanVar, k: u32| {
            if k == 0 {
                vec![]
            } else {
                vec![Part::Binom(v, k)]
            }
        };
        let mut out: BTreeMap<(u32, u32), Q> = BTreeMap::new();
        if basis == Basis::Mitzman {
            // c = 4z + 2h_0 with z = c/4 - h_0/2
            for j in 0..=b {
                let coef = binom(b as i64, j) * qi(4).pow(j as i32) * qi(2).pow((b - j) as i32);
                for (x, sx) in falling_expansion(a + b - j) {
                    for (y, sy) in falling_expansion(j) {
                        *out.entry((x, y)).or_insert_with(Q::zero) += &coef * &sx * &sy;
                    }
                }
            }
            return out
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((x, y), c)| {
                    let mut p = part(hv, x);
                    p.extend(part(CartanVar::Shifted, y));
                    (p, c)
                })
                .collect();
        }
        for (x, sx) in falling_expansion(a) {
            for (y, sy) in falling_expansion(b) {
                out.insert((x, y), &sx * &sy);
            }
        }
        out.into_iter()
            .map(|((x, y), c)| {
                let mut p = part(hv, x);
                p.extend(part(CartanVar::C, y));
                (p, c)
            })
            .collect()
    }

    /// The basis element named by a label.
    pub fn basis_element(&self, l: &Label) -> Result<UElem> {
        let mut out = UElem::one();
        for p in &l.0 {
            let f = match p {
                Part::Div(g, k) => self.divided_power(*g, *k),
                Part::DivQuarter(g, k) => self
                    .divided_power(*g, *k)
                    .scale(&(Q::one() / qi(4).pow(*k as i32))),
                Part::Binom(v, k) => {
                    let (a, b) = match v {
                        CartanVar::H0 | CartanVar::Hs => (qi(1), qi(0)),
                        CartanVar::C => (qi(0), qi(1)),
                        CartanVar::Shifted => (qf(-1, 2), qf(1, 4)),
                    };
                    self.binomial_element(&a, &b, &qi(0), *k)
                }
                Part::Family(fk, pos, m) => {
                    let sf = self.family(*fk).monomial(m)?;
                    symfun_to_uea(&sf, *pos)
                }
            };
            out = self.mul(&out, &f);
        }
        Ok(out)
    }

    /// `Σ c_l · l`.
    pub fn reconstruct(&self, coords: &Coords) -> Result<UElem> {
        let mut out = UElem::zero();
        for (l, c) in coords {
            out.add_scaled(&self.basis_element(l)?, c);
        }
        Ok(out)
    }

    /// Whether every coordinate in the standard integral basis is an integer.
    pub fn is_in_z_form(&self, a: &UElem) -> Result<Membership> {
        self.membership(a, Basis::Standard)
    }

    pub fn membership(&self, a: &UElem, basis: Basis) -> Result<Membership> {
        let coords = self.coordinates(a, basis)?;
        let witness = coords
            .iter()
            .find(|(_, c)| !c.is_integer())
            .map(|(l, c)| (l.render(), c.clone()));
        Ok(Membership {
            integral: witness.is_none(),
            witness,
        })
    }
}

/// `x^n = Σ_k S(n,k) k! C(x,k)` as pairs `(k, S(n,k) k!)`.
fn falling_expansion(n: u32) -> Vec<(u32, Q)> {
    let n = n as usize;
    let mut s = vec![vec![Q::zero(); n + 1]; n + 1];
    s[0][0] = Q::one();
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = &s[i - 1][k] * qi(k as i64) + &s[i - 1][k - 1];
        }
    }
    (0..=n)
        .filter(|&k| !s[n][k].is_zero())
        .map(|k| (k as u32, &s[n][k] * factorial(k as u32)))
        .collect()
}

/// A symmetric function in `p_r = h_{±r}` as an element of the algebra.
pub fn symfun_to_uea(f: &SymFunc, positive: bool) -> UElem {
    let mut out = UElem::zero();
    for (m, c) in f.terms() {
        let mut factors: Vec<(Gen, u32)> = m
            .pairs()
            .iter()
            .map(|&(r, e)| (Gen::h(if positive { r as i32 } else { -(r as i32) }), e))
            .collect();
        factors.sort();
        out.add_term(Mono(factors), c.clone());
    }
    out
}

impl Ring for Uea {
    type E = UElem;
    fn zero(&self) -> UElem {
        UElem::zero()
    }
    fn one(&self) -> UElem {
        UElem::one()
    }
    fn add(&self, a: &UElem, b: &UElem) -> UElem {
        a.add(b)
    }
    fn neg(&self, a: &UElem) -> UElem {
        a.scale(&-Q::one())
    }
    fn mul(&self, a: &UElem, b: &UElem) -> UElem {
        Uea::mul(self, a, b)
    }
    fn scale(&self, a: &UElem, q: &Q) -> UElem {
        a.scale(q)
    }
    fn is_zero(&self, a: &UElem) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &UElem) -> String {
        a.render()
    }
}
