//! The identity catalog, integrality sweeps and negative controls.

use std::sync::Arc;

use zform::liealg::{AlgebraKind, Mutation};
use zform::uea::{Basis, Uea};
use zform::verify::{self, catalog, run_entry, verify};

#[test]
fn every_entry_passes_at_its_default_order() {
    let reports = verify::verify_all(None, verify::DEFAULT_CEILING_MS);
    for (e, r) in catalog().iter().zip(&reports) {
        let r = r.as_ref().unwrap_or_else(|err| panic!("{}: {err}", e.tag));
        assert!(r.pass, "{}: {:?}", e.tag, r.first_diff);
        assert_eq!(r.order, e.effective_order());
    }
}

#[test]
fn monotone_in_the_order() {
    for tag in ["CEF", "ZKP", "XMG"] {
        let top = verify::find(tag).unwrap().default_order;
        for n in 1..=top {
            assert!(verify(tag, n).unwrap().pass, "{tag} at {n}");
        }
    }
}

#[test]
fn spec_examples() {
    assert!(verify("CEF", 8).unwrap().pass);
    assert!(verify("ZZK", 10).unwrap().pass);
    assert!(verify("X0X1", 6).unwrap().pass);
}

#[test]
fn seven_factor_products_are_sensitive() {
    for tag in ["XMG", "X0X1", "MITZ-v"] {
        let mut e = verify::find(tag).unwrap();
        let right = e.cases[0].right.clone();
        e.cases[0].right = Arc::new(move |u, n| {
            let s = right(u, n)?;
            let mut t = s.clone();
            let c = s.coeff(2, 1).cloned().unwrap();
            t.set(2, 1, c.scale(&zform::qi(2)));
            Ok(t)
        });
        let r = run_entry(&e, &Uea::new(e.algebra), 5).unwrap();
        assert!(!r.pass, "{tag}");
        let d = r.first_diff.unwrap();
        assert_eq!((d.deg_u, d.deg_v), (2, 1));
    }
}

#[test]
fn integrality_sweeps() {
    let a = verify::integrality_sweep(AlgebraKind::A11, -2..=2, -2..=2, 3, 3, Basis::Standard).unwrap();
    assert!(a.pass, "{:?}", a.first_failure);
    assert_eq!(a.checked, 25 * 9);
    let b = verify::integrality_sweep(AlgebraKind::A22, -2..=2, -2..=2, 3, 3, Basis::Standard).unwrap();
    assert!(b.pass, "{:?}", b.first_failure);
    assert_eq!(b.checked, 50 * 9);
}

#[test]
fn force_hat_control_fails() {
    let r = verify::force_hat_control().unwrap();
    assert!(!r.pass);
    let f = r.first_failure.unwrap();
    assert!(f.label.contains("hh"), "{f:?}");
}

#[test]
fn mutations_are_detected() {
    for m in Mutation::ALL {
        let r = verify::detect_mutation(m, 4);
        assert!(r.detected, "{m:?}");
    }
}

#[test]
fn mitzman_inclusion_and_strictness() {
    let s = verify::mitzman_inclusion_sample(50, 11).unwrap();
    assert!(s.pass, "{:?}", s.first_failure);
    let w = verify::mitzman_strictness_witness().unwrap();
    assert!(w.iter().any(|(l, c)| l == "X+[1]^(2)" && *c == zform::qf(1, 16)), "{w:?}");
}
