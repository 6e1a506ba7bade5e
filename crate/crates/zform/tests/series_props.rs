//! Exponential identities for series over the enveloping algebras.

use num_traits::One;
use proptest::prelude::*;
use zform::liealg::{AlgebraKind, Gen, LieElem};
use zform::series::Series;
use zform::uea::{UElem, Uea};
use zform::{qf, qi, Q};

type S = Series<UElem>;

fn exp_nc(u: &Uea, s: &S) -> S {
    assert!(s.constant_term().is_zero());
    let mut out = Series::one(u, s.cap());
    let mut term = Series::one(u, s.cap());
    for k in 1..=s.cap() {
        term = term.mul(u, s).scale(u, &(Q::one() / qi(k as i64)));
        out = out.add(u, &term);
    }
    out
}

fn lie(u: &Uea, n: usize, x: &LieElem, i: usize, j: usize) -> S {
    Series::monomial(u, UElem::from_lie(x), i, j, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exp_of_commuting_sum(r in -2i32..=2, s in -2i32..=2, n in 2usize..=7) {
        let u = Uea::new(AlgebraKind::A22);
        let a = lie(&u, n, &LieElem::gen(Gen::xp(2 * r)), 1, 0);
        let b = lie(&u, n, &LieElem::gen(Gen::xp(2 * s)), 0, 1);
        let lhs = a.add(&u, &b).exp(&u).unwrap();
        let rhs = a.exp(&u).unwrap().mul(&u, &b.exp(&u).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_with_central_commutator(r in -2i32..=2, s in -2i32..=2, n in 2usize..=7) {
        let u = Uea::new(AlgebraKind::A22);
        let alg = *u.algebra();
        let x = LieElem::gen(Gen::xp(2 * r));
        let y = LieElem::gen(Gen::xp(2 * s + 1));
        let z = alg.bracket_elem(&x, &y);
        prop_assert_eq!(&z, &LieElem::term(Gen::xxp(2 * r + 2 * s + 1), -Q::one()));
        let (a, b, c) = (lie(&u, n, &x, 1, 0), lie(&u, n, &y, 0, 1), lie(&u, n, &z, 1, 1));
        let lhs = exp_nc(&u, &a).mul(&u, &exp_nc(&u, &b));
        let rhs = Series::product(&u, n, &[exp_nc(&u, &b), exp_nc(&u, &a), exp_nc(&u, &c)]);
        prop_assert_eq!(lhs, rhs);
        let sum = exp_nc(&u, &a.add(&u, &b));
        let split = Series::product(
            &u,
            n,
            &[exp_nc(&u, &a), exp_nc(&u, &b), exp_nc(&u, &c.scale(&u, &qf(-1, 2)))],
        );
        prop_assert_eq!(sum, split);
    }

    #[test]
    fn truncation_coherence_of_products(r in -2i32..=2, n in 2usize..=7, m in 1usize..=6) {
        prop_assume!(m < n);
        let u = Uea::new(AlgebraKind::A11);
        let build = |cap: usize| {
            let a = lie(&u, cap, &LieElem::gen(Gen::xp(r)), 1, 0);
            let b = lie(&u, cap, &LieElem::gen(Gen::xm(-r)), 0, 1);
            exp_nc(&u, &a).mul(&u, &exp_nc(&u, &b))
        };
        prop_assert_eq!(build(n).truncate(m), build(m));
    }
}
