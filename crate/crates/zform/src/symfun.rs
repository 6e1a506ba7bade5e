//! Symmetric functions in the power-sum presentation `Q[p_1, p_2, ...]`.
//!
//! Houses the exponential generating families `ĥ^{a}`, the `λ_m` and `λ̃_m`
//! homomorphisms, coordinates in a triangular generator family, integrality
//! tests, the Garland basis and the monomial symmetric functions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Signed, Zero};

use crate::arithfun::{eps_q, ArithFunction};
use crate::{fmt_q, qi, Error, Result, Q};

/// A monomial `∏ p_r^{k_r}`, stored as sorted `(r, k_r)` pairs with `k_r ≥ 1`.
///
/// The same type indexes monomials `∏ g_r^{k_r}` in a generator family.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PMono(Vec<(u32, u32)>);

impl PMono {
    pub fn one() -> Self {
        PMono(Vec::new())
    }

    /// `p_r`.
    pub fn p(r: u32) -> Self {
        assert!(r >= 1);
        PMono(vec![(r, 1)])
    }

    /// From `(r, k)` pairs in any order; zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (r, k) in pairs {
            assert!(r >= 1, "power sums are indexed from 1");
            *map.entry(r).or_insert(0) += k;
        }
        PMono(map.into_iter().filter(|&(_, k)| k > 0).collect())
    }

    /// From a partition (parts in any order).
    pub fn from_parts(parts: &[u32]) -> Self {
        Self::from_pairs(parts.iter().map(|&r| (r, 1)))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(r, k)| r * k).sum()
    }

    /// Number of parts `Σ k_r`.
    pub fn parts(&self) -> u32 {
        self.0.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Parts in weakly decreasing order.
    pub fn partition(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &(r, k) in self.0.iter().rev() {
            out.extend(std::iter::repeat_n(r, k as usize));
        }
        out
    }

    pub fn mul(&self, other: &PMono) -> PMono {
        PMono::from_pairs(self.0.iter().chain(other.0.iter()).copied())
    }

    fn exponent(&self, r: u32) -> u32 {
        self.0
            .iter()
            .find(|&&(s, _)| s == r)
            .map(|&(_, k)| k)
            .unwrap_or(0)
    }

    /// Render with the given variable stem, e.g. `p1^2*p3`.
    pub fn render(&self, stem: &str) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(r, k)| {
                if k == 1 {
                    format!("{stem}{r}")
                } else {
                    format!("{stem}{r}^{k}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for PMono {
    /// Graded, then lexicographic on exponent vectors `(k_1, k_2, ...)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let top = self
                .0
                .last()
                .map(|p| p.0)
                .max(other.0.last().map(|p| p.0))
                .unwrap_or(0);
            for r in 1..=top {
                let c = self.exponent(r).cmp(&other.exponent(r));
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for PMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("p"))
    }
}

/// A polynomial in the power sums with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<PMono, Q>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::monomial(PMono::one(), Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(PMono::one(), c)
    }

    /// `p_r`.
    pub fn p(r: u32) -> Self {
        Self::monomial(PMono::p(r), Q::one())
    }

    pub fn monomial(m: PMono, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SymFunc { terms }
    }

    pub fn terms(&self) -> &BTreeMap<PMono, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PMono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: PMono, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SymFunc {
        (0..k).fold(SymFunc::one(), |acc, _| acc.mul(self))
    }

    /// Highest degree present, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(PMono::degree).max()
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Algebra homomorphism defined by `p_r ↦ image(r)`.
    pub fn map_p(&self, image: impl Fn(u32) -> SymFunc) -> SymFunc {
        let mut cache: BTreeMap<u32, SymFunc> = BTreeMap::new();
        let mut out = SymFunc::zero();
        for (m, c) in &self.terms {
            let mut t = SymFunc::constant(c.clone());
            for &(r, k) in m.pairs() {
                let img = cache.entry(r).or_insert_with(|| image(r)).clone();
                t = t.mul(&img.pow(k));
            }
            out = out.add(&t);
        }
        out
    }

    /// Rendering in the power-sum basis, terms in increasing monomial order.
    pub fn render_p(&self) -> String {
        render_terms(self.terms.iter(), "p")
    }

    /// Rendering in the basis of monomials in `ê_k = ĥ_k`.
    pub fn render_e(&self) -> String {
        let fam = GeneratorFamily::hat();
        let coords = to_family_coords(self, &fam).expect("ĥ family is triangular");
        render_terms(coords.iter(), "e")
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (&'a PMono, &'a Q)>, stem: &str) -> String {
    let mut out = String::new();
    for (m, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
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
            out.push_str(&m.render(stem));
        } else {
            out.push_str(&format!("{}*{}", fmt_q(&a), m.render(stem)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_p())
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_p())
    }
}

/// Coefficients `ĥ^{a}_0, ..., ĥ^{a}_N` of `exp(Σ (-1)^{r-1} a_r p_r u^r / r)`.
pub fn hat_series(a: &ArithFunction, bound: usize) -> Vec<SymFunc> {
    let mut out = vec![SymFunc::one()];
    for n in 1..=bound {
        let mut acc = SymFunc::zero();
        for k in 1..=n {
            let sign = if k % 2 == 1 { Q::one() } else { -Q::one() };
            let ks = SymFunc::p(k as u32).scale(&(sign * a.at(k as u64)));
            acc = acc.add(&ks.mul(&out[n - k]));
        }
        out.push(acc.scale(&Q::new(1.into(), (n as i64).into())));
    }
    out
}

/// `ĥ_0, ..., ĥ_N`.
pub fn hat_h(bound: usize) -> Vec<SymFunc> {
    hat_series(&ArithFunction::one(), bound)
}

/// `h̃_0, ..., h̃_N`.
pub fn tilde_h(bound: usize) -> Vec<SymFunc> {
    hat_series(&ArithFunction::epsilon(), bound)
}

/// `ĥ^{d}_0, ..., ĥ^{d}_N`.
pub fn hd(bound: usize) -> Vec<SymFunc> {
    hat_series(&ArithFunction::d(), bound)
}

/// `λ_m`: `p_r ↦ p_{mr}`.
pub fn lambda_m(f: &SymFunc, m: u32) -> SymFunc {
    assert!(m >= 1);
    f.map_p(|r| SymFunc::p(m * r))
}

/// `λ̃_m`: `p_r ↦ ε_r ε_{mr} p_{mr}`.
pub fn tilde_lambda_m(f: &SymFunc, m: u32) -> SymFunc {
    assert!(m >= 1);
    f.map_p(|r| SymFunc::p(m * r).scale(&(eps_q(r as i64) * eps_q((m * r) as i64))))
}

enum FamilySource {
    Hat(ArithFunction),
    Fixed,
}

/// A sequence `g_1, g_2, ...` with `g_k` homogeneous of degree `k` and a
/// nonzero coefficient on `p_k`.
pub struct GeneratorFamily {
    name: String,
    source: FamilySource,
    members: RwLock<Vec<SymFunc>>,
}

impl fmt::Debug for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorFamily")
            .field("name", &self.name)
            .finish()
    }
}

impl GeneratorFamily {
    /// The family `ĥ^{a}_k`; triangular iff every `a_k` is nonzero.
    pub fn from_arith(name: impl Into<String>, a: ArithFunction) -> Self {
        GeneratorFamily {
            name: name.into(),
            source: FamilySource::Hat(a),
            members: RwLock::new(vec![SymFunc::one()]),
        }
    }

    /// A finite family `g_1, ..., g_n`; rejected unless triangular.
    pub fn fixed(name: impl Into<String>, members: Vec<SymFunc>) -> Result<Self> {
        for (i, g) in members.iter().enumerate() {
            let k = i as u32 + 1;
            if !g.is_homogeneous(k) || g.coeff(&PMono::p(k)).is_zero() {
                return Err(Error::NotTriangular(k as usize));
            }
        }
        let mut all = vec![SymFunc::one()];
        all.extend(members);
        Ok(GeneratorFamily {
            name: name.into(),
            source: FamilySource::Fixed,
            members: RwLock::new(all),
        })
    }

    /// `{ĥ_k}`.
    pub fn hat() -> Self {
        Self::from_arith("hh", ArithFunction::one())
    }

    /// `{h̃_k}`.
    pub fn tilde() -> Self {
        Self::from_arith("ht", ArithFunction::epsilon())
    }

    /// `{ĥ_k}` evaluated at `p_r/2`.
    pub fn half_hat() -> Self {
        Self::from_arith("hm", ArithFunction::one().scaled(crate::qf(1, 2)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `g_k` (with `g_0 = 1`).
    pub fn member(&self, k: u32) -> Result<SymFunc> {
        self.ensure(k)?;
        Ok(self.members.read().expect("family cache")[k as usize].clone())
    }

    fn ensure(&self, k: u32) -> Result<()> {
        let have = self.members.read().expect("family cache").len();
        if (k as usize) < have {
            return Ok(());
        }
        match &self.source {
            FamilySource::Fixed => Err(Error::NotTriangular(k as usize)),
            FamilySource::Hat(a) => {
                let fresh = hat_series(a, k as usize);
                for (i, g) in fresh.iter().enumerate().skip(1) {
                    if g.coeff(&PMono::p(i as u32)).is_zero() {
                        return Err(Error::NotTriangular(i));
                    }
                }
                let mut w = self.members.write().expect("family cache");
                if w.len() < fresh.len() {
                    *w = fresh;
                }
                Ok(())
            }
        }
    }

    /// `∏ g_k^{e_k}` for a family multi-index.
    pub fn monomial(&self, idx: &PMono) -> Result<SymFunc> {
        let mut out = SymFunc::one();
        for &(k, e) in idx.pairs() {
            out = out.mul(&self.member(k)?.pow(e));
        }
        Ok(out)
    }

    /// Rebuild `Σ c_a g^a` from coordinates.
    pub fn reconstruct(&self, coords: &BTreeMap<PMono, Q>) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        for (idx, c) in coords {
            out = out.add(&self.monomial(idx)?.scale(c));
        }
        Ok(out)
    }
}

/// Unique expansion of `f` in monomials of the family.
pub fn to_family_coords(f: &SymFunc, fam: &GeneratorFamily) -> Result<BTreeMap<PMono, Q>> {
    let mut rest = f.clone();
    let mut coords = BTreeMap::new();
    if let Some(d) = f.degree() {
        fam.ensure(d)?;
    }
    let leads: Vec<Q> = {
        let members = fam.members.read().expect("family cache");
        members
            .iter()
            .enumerate()
            .map(|(k, g)| {
                if k == 0 {
                    Q::one()
                } else {
                    g.coeff(&PMono::p(k as u32))
                }
            })
            .collect()
    };
    while let Some((m, c)) = rest
        .terms
        .iter()
        .min_by(|a, b| a.0.parts().cmp(&b.0.parts()).then_with(|| a.0.cmp(b.0)))
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let mut lead = Q::one();
        for &(r, k) in m.pairs() {
            for _ in 0..k {
                lead *= &leads[r as usize];
            }
        }
        let coord = c / lead;
        rest = rest.sub(&fam.monomial(&m)?.scale(&coord));
        debug_assert!(rest.coeff(&m).is_zero());
        coords.insert(m, coord);
    }
    Ok(coords)
}

/// Integrality verdict with the first non-integral coordinate as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integrality {
    pub integral: bool,
    pub witness: Option<(PMono, Q)>,
}

/// Whether every coordinate of `f` in the family is an integer.
pub fn is_integral(f: &SymFunc, fam: &GeneratorFamily) -> Result<Integrality> {
    let coords = to_family_coords(f, fam)?;
    let witness = coords
        .into_iter()
        .find(|(_, c)| !c.is_integer());
    Ok(Integrality {
        integral: witness.is_none(),
        witness,
    })
}

/// Garland element `b_k = ∏_m λ_m(ĥ_{k_m})`; `k` is given as `(m, k_m)` pairs.
pub fn garland_element(k: &PMono) -> SymFunc {
    let top = k.pairs().iter().map(|&(_, n)| n).max().unwrap_or(0);
    let hats = hat_h(top as usize);
    k.pairs().iter().fold(SymFunc::one(), |acc, &(m, n)| {
        acc.mul(&lambda_m(&hats[n as usize], m))
    })
}

/// Polynomial in `x_1..x_n`, keyed by exponent vectors.
pub type Poly = BTreeMap<Vec<u32>, Q>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e.clone()).or_insert_with(Q::zero);
            *entry += ca * cb;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

fn power_sum_poly(r: u32, n: usize) -> Poly {
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = r;
            (e, Q::one())
        })
        .collect()
}

/// Substitute `p_r ↦ x_1^r + ... + x_n^r`.
pub fn specialize(f: &SymFunc, n: usize) -> Poly {
    let mut out = Poly::new();
    let mut sums: BTreeMap<u32, Poly> = BTreeMap::new();
    for (m, c) in &f.terms {
        let mut t: Poly = [(vec![0; n], c.clone())].into_iter().collect();
        for &(r, k) in m.pairs() {
            let ps = sums.entry(r).or_insert_with(|| power_sum_poly(r, n)).clone();
            for _ in 0..k {
                t = poly_mul(&t, &ps);
            }
        }
        for (e, x) in t {
            let entry = out.entry(e.clone()).or_insert_with(Q::zero);
            *entry += x;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

/// All partitions of `d`, each in weakly decreasing order.
pub fn partitions(d: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

fn padded(lambda: &[u32], n: usize) -> Vec<u32> {
    let mut e = lambda.to_vec();
    e.resize(n, 0);
    e
}

/// Monomial symmetric function `m_λ` in the power-sum basis, found by
/// expanding every power-sum monomial of degree `|λ|` in `|λ|` variables and
/// solving the resulting linear system exactly.
pub fn monomial_symfun(lambda: &[u32]) -> SymFunc {
    let mut lambda: Vec<u32> = lambda.iter().copied().filter(|&x| x > 0).collect();
    lambda.sort_unstable_by(|a, b| b.cmp(a));
    let d: u32 = lambda.iter().sum();
    if d == 0 {
        return SymFunc::one();
    }
    let n = d as usize;
    let parts = partitions(d);
    let cols: Vec<Poly> = parts
        .iter()
        .map(|mu| specialize(&SymFunc::monomial(PMono::from_parts(mu), Q::one()), n))
        .collect();
    let size = parts.len();
    let mut mat: Vec<Vec<Q>> = parts
        .iter()
        .map(|nu| {
            let key = padded(nu, n);
            let mut row: Vec<Q> = cols
                .iter()
                .map(|c| c.get(&key).cloned().unwrap_or_else(Q::zero))
                .collect();
            row.push(if *nu == lambda { Q::one() } else { Q::zero() });
            row
        })
        .collect();
    let sol = solve(&mut mat, size).expect("power-sum monomials are a basis");
    let mut out = SymFunc::zero();
    for (mu, c) in parts.iter().zip(sol) {
        out.add_term(PMono::from_parts(mu), c);
    }
    out
}

/// Gauss-Jordan elimination on an augmented `size × (size+1)` matrix.
fn solve(mat: &mut [Vec<Q>], size: usize) -> Option<Vec<Q>> {
    for col in 0..size {
        let pivot = (col..size).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, pivot);
        let inv = Q::one() / mat[col][col].clone();
        for x in mat[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..size {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..=size {
                    let v = &mat[col][c] * &f;
                    mat[r][c] -= v;
                }
            }
        }
    }
    Some(mat.iter().map(|row| row[size].clone()).collect())
}

/// Coefficient of `m_λ` in a symmetric function: the coefficient of
/// `x_1^{λ_1} x_2^{λ_2} ...` in its specialization to `|λ|` variables.
pub fn monomial_coefficients(f: &SymFunc) -> BTreeMap<PMono, Q> {
    let mut out = BTreeMap::new();
    let Some(top) = f.degree() else {
        return out;
    };
    for d in 0..=top {
        let comp = f.component(d);
        if comp.is_zero() {
            continue;
        }
        if d == 0 {
            out.insert(PMono::one(), comp.coeff(&PMono::one()));
            continue;
        }
        let spec = specialize(&comp, d as usize);
        for lambda in partitions(d) {
            if let Some(c) = spec.get(&padded(&lambda, d as usize)) {
                out.insert(PMono::from_parts(&lambda), c.clone());
            }
        }
    }
    out
}

/// Outcome of the Garland basis check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarlandReport {
    pub degree_bound: u32,
    pub checked: usize,
    pub pass: bool,
    pub first_violation: Option<String>,
}

/// All multi-indices `k` (as `(m, k_m)` pairs) with `Σ m k_m = d`.
pub fn multi_indices(d: u32) -> Vec<PMono> {
    partitions(d).iter().map(|p| PMono::from_parts(p)).collect()
}

/// Expand every `b_k` of degree `≤ bound` in the monomial basis and check the
/// change of basis is integral and unitriangular for the filtration by `Σ k_m`.
pub fn verify_garland_basis(bound: u32) -> GarlandReport {
    let mut checked = 0;
    for d in 1..=bound {
        for k in multi_indices(d) {
            checked += 1;
            let b = garland_element(&k);
            let coords = monomial_coefficients(&b);
            let rebuilt = coords.iter().fold(SymFunc::zero(), |acc, (lam, c)| {
                acc.add(&monomial_symfun(&lam.partition()).scale(c))
            });
            let fail = |msg: String| GarlandReport {
                degree_bound: bound,
                checked,
                pass: false,
                first_violation: Some(msg),
            };
            if rebuilt != b {
                return fail(format!("b_{k:?}: monomial expansion does not rebuild"));
            }
            if coords.get(&k) != Some(&Q::one()) {
                return fail(format!("b_{k:?}: diagonal coefficient is not 1"));
            }
            for (lam, c) in &coords {
                if !c.is_integer() {
                    return fail(format!("b_{k:?}: coefficient {} on m_{lam:?}", fmt_q(c)));
                }
                if lam != &k && lam.parts() >= k.parts() {
                    return fail(format!(
                        "b_{k:?}: m_{lam:?} does not lie in a lower filtration step"
                    ));
                }
            }
        }
    }
    GarlandReport {
        degree_bound: bound,
        checked,
        pass: true,
        first_violation: None,
    }
}

/// `p`-monomial from a dense exponent list `(k_1, k_2, ...)`.
pub fn pmono_dense(exps: &[u32]) -> PMono {
    PMono::from_pairs(
        exps.iter()
            .enumerate()
            .map(|(i, &k)| (i as u32 + 1, k)),
    )
}

/// `Σ c_i m_i` with integer `c_i` as a convenience for tests and sampling.
pub fn integer_combination(parts: &[(i64, SymFunc)]) -> SymFunc {
    parts
        .iter()
        .fold(SymFunc::zero(), |acc, (c, f)| acc.add(&f.scale(&qi(*c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qf;
    use proptest::prelude::*;

    fn p(r: u32) -> SymFunc {
        SymFunc::p(r)
    }

    #[test]
    fn hat_series_examples() {
        let h = hat_h(4);
        assert_eq!(h[0], SymFunc::one());
        let e2 = p(1).mul(&p(1)).sub(&p(2)).scale(&qf(1, 2));
        assert_eq!(h[2], e2);
        assert_eq!(hd(1)[1], p(1));
    }

    #[test]
    fn tilde_examples() {
        let (h, t) = (hat_h(4), tilde_h(4));
        for i in 0..=3 {
            assert_eq!(h[i], t[i]);
        }
        assert_eq!(h[4].sub(&t[4]), p(4).scale(&qf(-1, 2)));
    }

    #[test]
    fn lambda_examples() {
        let h = hat_h(3);
        assert_eq!(lambda_m(&h[3], 1), h[3]);
        assert_eq!(lambda_m(&p(1), 2), p(2));
        let expected = p(2).mul(&p(2)).sub(&p(4)).scale(&qf(1, 2));
        assert_eq!(lambda_m(&h[2], 2), expected);
    }

    #[test]
    fn tilde_lambda_examples() {
        let h = hat_h(8);
        for m in [1, 3, 5] {
            for k in 0..=8 {
                assert_eq!(tilde_lambda_m(&h[k], m), lambda_m(&h[k], m));
            }
        }
        assert_eq!(tilde_lambda_m(&p(2), 2), p(4).neg());
        let t = tilde_h(2);
        assert!(is_integral(&tilde_lambda_m(&t[2], 2), &GeneratorFamily::tilde())
            .unwrap()
            .integral);
    }

    #[test]
    fn family_coordinate_examples() {
        let hat = GeneratorFamily::hat();
        let h = hat_h(4);
        let c = to_family_coords(&h[3], &hat).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(&PMono::p(3)), Some(&qi(1)));

        let c = to_family_coords(&p(2), &hat).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.get(&PMono::from_pairs([(1, 2)])), Some(&qi(1)));
        assert_eq!(c.get(&PMono::p(2)), Some(&qi(-2)));

        let c = to_family_coords(&h[4], &GeneratorFamily::tilde()).unwrap();
        assert_eq!(c.get(&PMono::p(4)), Some(&qi(-1)));
    }

    #[test]
    fn integrality_examples() {
        let h = hat_h(4);
        let t = tilde_h(4);
        let in_tilde = is_integral(&h[4], &GeneratorFamily::tilde()).unwrap();
        assert!(!in_tilde.integral);
        assert!(in_tilde.witness.is_some());
        assert!(!is_integral(&t[4], &GeneratorFamily::hat()).unwrap().integral);
        let tilde = GeneratorFamily::tilde();
        for (n, f) in hd(12).iter().enumerate() {
            assert!(is_integral(f, &tilde).unwrap().integral, "hd_{n}");
        }
    }

    #[test]
    fn non_triangular_family_rejected() {
        let fam = GeneratorFamily::from_arith("zero-at-2", ArithFunction::from_table(
            "t",
            vec![qi(1), qi(0), qi(1)],
        ));
        assert_eq!(
            to_family_coords(&p(2), &fam).unwrap_err(),
            Error::NotTriangular(2)
        );
        assert!(GeneratorFamily::fixed("bad", vec![p(1), p(1).mul(&p(1))]).is_err());
    }

    #[test]
    fn garland_examples() {
        let h = hat_h(3);
        assert_eq!(garland_element(&PMono::from_pairs([(1, 3)])), h[3]);
        assert_eq!(
            garland_element(&PMono::from_pairs([(3, 2)])),
            lambda_m(&h[2], 3)
        );
        assert_eq!(
            garland_element(&PMono::from_pairs([(1, 1), (2, 1)])),
            p(1).mul(&p(2))
        );
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomial_symfun(&[3]), p(3));
        assert_eq!(monomial_symfun(&[1, 1]), hat_h(2)[2]);
        assert_eq!(monomial_symfun(&[2, 1]), p(1).mul(&p(2)).sub(&p(3)));
    }

    #[test]
    fn garland_basis_small() {
        assert!(verify_garland_basis(1).pass);
        assert!(verify_garland_basis(4).pass);
    }

    #[test]
    fn specialize_examples() {
        let e = hat_h(3);
        let s = specialize(&e[2], 2);
        assert_eq!(s, [(vec![1, 1], qi(1))].into_iter().collect());
        assert!(specialize(&e[3], 2).is_empty());
        let s = specialize(&p(2), 3);
        assert_eq!(s.len(), 3);
        assert_eq!(s.get(&vec![0, 2, 0]), Some(&qi(1)));
    }

    #[test]
    fn hat_series_specializes_to_elementary() {
        let e = hat_h(5);
        for n in 1..=5usize {
            for (k, ek) in e.iter().enumerate() {
                let spec = specialize(ek, n);
                let mut expected = Poly::new();
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() as usize == k {
                        let exps = (0..n).map(|i| (mask >> i) & 1).collect();
                        expected.insert(exps, qi(1));
                    }
                }
                assert_eq!(spec, expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn lambda_stability_of_hat() {
        let hat = GeneratorFamily::hat();
        let h = hat_h(8);
        for m in 1..=5 {
            for k in (0..=8usize).filter(|k| k * m as usize <= 12) {
                assert!(is_integral(&lambda_m(&h[k], m), &hat).unwrap().integral);
            }
        }
    }

    #[test]
    fn tdmom_at_two() {
        // λ_2(ĥ(-u^2)) = ĥ(-u) ĥ(u)
        let h = hat_h(16);
        for n in 0..=16usize {
            let mut rhs = SymFunc::zero();
            for i in 0..=n {
                let sign = if i % 2 == 0 { qi(1) } else { qi(-1) };
                rhs = rhs.add(&h[i].mul(&h[n - i]).scale(&sign));
            }
            let lhs = if n % 2 == 1 {
                SymFunc::zero()
            } else {
                let sign = if (n / 2) % 2 == 0 { qi(1) } else { qi(-1) };
                lambda_m(&h[n / 2], 2).scale(&sign)
            };
            assert_eq!(lhs, rhs, "degree {n}");
        }
    }

    #[test]
    fn sign_variant_families() {
        let hat = GeneratorFamily::hat();
        let neg_p1 = GeneratorFamily::from_arith(
            "neg-p1",
            ArithFunction::new("s", |n| if n == 1 { qi(-1) } else { qi(1) }),
        );
        let h3 = hat_h(3)[3].clone();
        assert!(is_integral(&h3, &hat).unwrap().integral);
        assert!(!is_integral(&h3, &neg_p1).unwrap().integral);
    }

    #[test]
    fn ordering_is_graded() {
        assert!(PMono::p(2) > PMono::from_pairs([(1, 1)]));
        assert!(PMono::from_pairs([(1, 2)]) > PMono::p(2));
    }

    #[test]
    fn renderings() {
        let e2 = hat_h(2)[2].clone();
        assert_eq!(e2.render_p(), "-1/2*p2 + 1/2*p1^2");
        assert_eq!(e2.render_e(), "e2");
        assert_eq!(p(2).render_e(), "-2*e2 + e1^2");
    }

    fn sample_integral(rng_terms: &[(i64, Vec<u32>)]) -> SymFunc {
        let hat = GeneratorFamily::hat();
        let mut f = SymFunc::zero();
        for (c, exps) in rng_terms {
            let idx = pmono_dense(exps);
            f = f.add(&hat.monomial(&idx).unwrap().scale(&qi(*c)));
        }
        f
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn sign_families_agree(terms in proptest::collection::vec(
            (-5i64..5, proptest::collection::vec(0u32..3, 0..4)), 1..4)) {
            let terms: Vec<_> = terms.into_iter()
                .filter(|(_, e)| e.iter().enumerate().map(|(i, k)| (i as u32 + 1) * k).sum::<u32>() <= 8)
                .collect();
            let f = sample_integral(&terms);
            let fams = [
                GeneratorFamily::hat(),
                GeneratorFamily::from_arith("neg", ArithFunction::one().scaled(qi(-1))),
                GeneratorFamily::from_arith("alt", ArithFunction::new("alt", |n| {
                    if n % 2 == 0 { qi(1) } else { qi(-1) }
                })),
            ];
            for fam in &fams {
                prop_assert!(is_integral(&f, fam).unwrap().integral);
            }
        }

        #[test]
        fn coords_round_trip(a in proptest::collection::vec(-4i64..4, 6)) {
            let f = integer_combination(&[
                (a[0], p(1)), (a[1], p(2).mul(&p(1))), (a[2], p(3)),
                (a[3], p(4)), (a[4], p(2).mul(&p(2))), (a[5], SymFunc::one()),
            ]);
            for fam in [GeneratorFamily::hat(), GeneratorFamily::tilde(), GeneratorFamily::half_hat()] {
                let c = to_family_coords(&f, &fam).unwrap();
                prop_assert_eq!(fam.reconstruct(&c).unwrap(), f.clone());
            }
        }

        #[test]
        fn exp_log_round_trip(n in 1usize..16, which in 0usize..3) {
            let a = [ArithFunction::one(), ArithFunction::epsilon(), ArithFunction::d()][which].clone();
            let e = hat_series(&a, n);
            // log via n L_n = n E_n - Σ_{k<n} k L_k E_{n-k}
            let mut l: Vec<SymFunc> = vec![SymFunc::zero()];
            for m in 1..=n {
                let mut acc = e[m].scale(&qi(m as i64));
                for k in 1..m {
                    acc = acc.sub(&l[k].scale(&qi(k as i64)).mul(&e[m - k]));
                }
                l.push(acc.scale(&Q::new(1.into(), (m as i64).into())));
            }
            for r in 1..=n {
                let sign = if r % 2 == 1 { qi(1) } else { qi(-1) };
                let expected = p(r as u32).scale(&(sign * a.at(r as u64) / qi(r as i64)));
                prop_assert_eq!(&l[r], &expected);
            }
        }
    }
}
