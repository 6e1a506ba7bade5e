//! Random elements shared by the integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use zform::liealg::{AlgebraKind, Gen};
use zform::uea::{UElem, Uea};
use zform::{qf, Q};

/// Generators with indices in `-w..=w`.
pub fn window(kind: AlgebraKind, w: i32) -> Vec<Gen> {
    let mut out = Vec::new();
    match kind {
        AlgebraKind::Sl2 => out.extend([Gen::e(), Gen::f(), Gen::hs()]),
        _ => {
            out.push(Gen::c());
            for r in -w..=w {
                out.extend([Gen::xp(r), Gen::xm(r), Gen::h(r)]);
                if kind == AlgebraKind::A22 && r.rem_euclid(2) == 1 {
                    out.extend([Gen::xxp(r), Gen::xxm(r)]);
                }
            }
        }
    }
    out
}

pub fn rational(rng: &mut impl Rng) -> Q {
    qf(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

/// A product of up to `len` window generators, each to a power at most 2.
pub fn monomial(u: &Uea, rng: &mut impl Rng, w: i32, len: usize) -> UElem {
    let gens = window(u.kind(), w);
    let n = rng.gen_range(1..=len);
    let factors: Vec<UElem> = (0..n)
        .map(|_| {
            let g = *gens.choose(rng).unwrap();
            u.pow(&u.gen(g), rng.gen_range(1..=2))
        })
        .collect();
    u.product(&factors)
}

/// A rational combination of up to `terms` random monomials.
pub fn element(u: &Uea, rng: &mut impl Rng, w: i32, terms: usize) -> UElem {
    let mut out = UElem::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        out = out.add(&monomial(u, rng, w, 3).scale(&rational(rng)));
    }
    out
}
