//! parse ∘ render is the identity on generated syntax trees.

use proptest::prelude::*;
use zform::liealg::Gen;
use zform::Q;
use zform_cli::expr::{parse, render, Expr};

fn gen() -> impl Strategy<Value = Gen> {
    prop_oneof![
        (-3i32..=3).prop_map(Gen::xp),
        (-3i32..=3).prop_map(Gen::xm),
        (-2i32..=2).prop_map(|r| Gen::xxp(2 * r + 1)),
        (-2i32..=2).prop_map(|r| Gen::xxm(2 * r + 1)),
        (-3i32..=3).prop_map(Gen::h),
        Just(Gen::c()),
        Just(Gen::e()),
        Just(Gen::f()),
        Just(Gen::hs()),
    ]
}

fn rational() -> impl Strategy<Value = Q> {
    (0i64..50, 1i64..9).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        rational().prop_map(Expr::Num),
        gen().prop_map(Expr::Gen),
        Just(Expr::U),
        Just(Expr::V),
    ];
    leaf.prop_recursive(5, 48, 3, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |a| Expr::Neg(b(a))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), 0u32..5).prop_map(move |(x, k)| Expr::DivPow(b(x), k)),
            (inner.clone(), 0u32..5).prop_map(move |(x, k)| Expr::Pow(b(x), k)),
            (inner.clone(), 0u32..5).prop_map(move |(x, k)| Expr::Binom(b(x), k)),
            inner.clone().prop_map(move |x| Expr::Exp(b(x))),
            inner.clone().prop_map(move |x| Expr::Ln(b(x))),
            inner.clone().prop_map(move |x| Expr::Inv(b(x))),
            (inner.clone(), 1u32..5).prop_map(move |(x, m)| Expr::Root(b(x), m)),
            (inner, rational(), any::<bool>())
                .prop_map(move |(x, q, neg)| Expr::Pow1p(b(x), if neg { -q } else { q })),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parse_render_roundtrip(e in expr()) {
        let text = render(&e);
        let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(render(&back), text);
    }
}
