//! Acceptance criteria. Prints one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zform::arithfun::{convolve, ArithFunction};
use zform::liealg::{Algebra, AlgebraKind, Mutation};
use zform::series::{Rationals, Series, SymFuncs};
use zform::symfun::{self, is_integral, GeneratorFamily};
use zform::uea::{Basis, Uea};
use zform::verify::{self, catalog, verify};
use zform::{qf, qi, Q};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn passes(tag: &str, order: usize) -> Check {
    let r = verify(tag, order).map_err(|e| format!("{tag}: {e}"))?;
    ensure(r.pass, || format!("{tag} at order {order}: {:?}", r.first_diff))
}

fn within(start: Instant, limit: Duration) -> Check {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

fn c1() -> Check {
    let t = Instant::now();
    passes("CEF", 12)?;
    within(t, Duration::from_secs(10))
}

fn c2() -> Check {
    let t = Instant::now();
    for n in 8..=10 {
        for tag in ["ZZK", "PUM", "EXEFH"] {
            passes(tag, n)?;
        }
    }
    let s = verify::integrality_sweep(AlgebraKind::A11, -2..=2, -2..=2, 3, 3, Basis::Standard)
        .map_err(|e| e.to_string())?;
    ensure(s.pass, || format!("A1(1) sweep: {:?}", s.first_failure))?;
    within(t, Duration::from_secs(120))
}

fn c3() -> Check {
    let t = Instant::now();
    for tag in ["ZKD-hat", "ZKD-tilde", "ZKP", "ZKOPP"] {
        passes(tag, 8)?;
    }
    for tag in ["XMG", "X0X1"] {
        passes(tag, 6)?;
    }
    let s = verify::integrality_sweep(AlgebraKind::A22, -2..=2, -2..=2, 3, 3, Basis::Standard)
        .map_err(|e| e.to_string())?;
    ensure(s.pass, || format!("A2(2) sweep: {:?}", s.first_failure))?;
    let h = verify::force_hat_control().map_err(|e| e.to_string())?;
    ensure(!h.pass, || "hat-only control unexpectedly integral".into())?;
    within(t, Duration::from_secs(600))
}

fn c4() -> Check {
    let d = ArithFunction::d();
    let got: Vec<Q> = [1, 2, 4].iter().map(|&n| d.at(n)).collect();
    ensure(got == [qi(1), qi(3), qi(17)], || format!("d_1, d_2, d_4 = {got:?}"))?;
    let md = convolve(&ArithFunction::mobius(), &d, 4).map_err(|e| e.to_string())?;
    ensure(md == qi(14), || format!("(mu*d)(4) = {md}"))?;
    ensure(!(md.numer() % 4u32).eq(&0.into()), || "4 divides (mu*d)(4)".into())?;
    let (hat, tilde) = (symfun::hat_h(4), symfun::tilde_h(4));
    ensure(hat[..4] == tilde[..4], || "hat and tilde differ below degree 4".into())?;
    let a = is_integral(&hat[4], &GeneratorFamily::tilde()).map_err(|e| e.to_string())?;
    let b = is_integral(&tilde[4], &GeneratorFamily::hat()).map_err(|e| e.to_string())?;
    ensure(!a.integral && !b.integral, || format!("{a:?} {b:?}"))
}

fn c5() -> Check {
    let fam = GeneratorFamily::tilde();
    for (n, f) in symfun::hd(12).iter().enumerate() {
        let r = is_integral(f, &fam).map_err(|e| e.to_string())?;
        ensure(r.integral, || format!("hd_{n}: {:?}", r.witness))?;
    }
    Ok(())
}

fn c6() -> Check {
    let r = Rationals;
    for m in 1..=6u32 {
        let s = Series::one(&r, 20).add(&r, &Series::monomial(&r, qi((m * m) as i64), 1, 0, 20));
        let t = s.root(&r, m).map_err(|e| e.to_string())?;
        for (k, c) in t.u_coeffs().iter().enumerate().skip(1) {
            ensure(c.is_integer() && c.numer() % m == 0.into(), || format!("m = {m}, u^{k}: {c}"))?;
        }
    }
    let s = SymFuncs;
    let h = symfun::hat_h(10);
    let hh = Series::from_fn_u(&s, 10, |k| h[k].scale(&qi(4i64.pow(k as u32))));
    let t = hh.root(&s, 2).map_err(|e| e.to_string())?;
    let fam = GeneratorFamily::tilde();
    for k in 0..=10 {
        let r = is_integral(t.coeff(k, 0).unwrap(), &fam).map_err(|e| e.to_string())?;
        ensure(r.integral, || format!("root coefficient {k}: {:?}", r.witness))?;
    }
    Ok(())
}

fn c7() -> Check {
    let g = symfun::verify_garland_basis(8);
    ensure(g.pass, || format!("{:?}", g.first_violation))
}

fn c8() -> Check {
    let s = verify::mitzman_inclusion_sample(50, 11).map_err(|e| e.to_string())?;
    ensure(s.pass && s.checked == 50, || format!("{:?}", s.first_failure))?;
    let w = verify::mitzman_strictness_witness().map_err(|e| e.to_string())?;
    ensure(w.iter().any(|(l, c)| l == "X+[1]^(2)" && *c == qf(1, 16)), || format!("{w:?}"))?;
    for e in catalog().iter().filter(|e| e.tag.starts_with("MITZ")) {
        passes(&e.tag, 8)?;
    }
    Ok(())
}

fn c9() -> Check {
    for kind in [AlgebraKind::Sl2, AlgebraKind::A11, AlgebraKind::A22] {
        let j = Algebra::new(kind).check_jacobi(3);
        ensure(j.pass, || format!("{kind}: {:?}", j.first_violation))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..100 {
        let u = Uea::new([AlgebraKind::Sl2, AlgebraKind::A11, AlgebraKind::A22][i % 3]);
        let a = common::monomial(&u, &mut rng, 2, 2);
        let b = common::monomial(&u, &mut rng, 2, 2);
        let c = common::monomial(&u, &mut rng, 2, 2);
        ensure(u.mul(&u.mul(&a, &b), &c) == u.mul(&a, &u.mul(&b, &c)), || format!("triple {i}"))?;
    }
    for i in 0..200 {
        let u = Uea::new([AlgebraKind::A11, AlgebraKind::A22][i % 2]);
        let a = common::element(&u, &mut rng, 2, 3);
        let c = u.coordinates(&a, Basis::Standard).map_err(|e| e.to_string())?;
        ensure(u.reconstruct(&c).map_err(|e| e.to_string())? == a, || format!("round trip {i}"))?;
    }
    let missed: Vec<_> = Mutation::ALL
        .iter()
        .filter(|m| !verify::detect_mutation(**m, 4).detected)
        .collect();
    ensure(missed.is_empty(), || format!("undetected mutations {missed:?}"))
}

fn c10() -> Check {
    let t = Instant::now();
    let entries: Vec<_> = catalog().into_iter().filter(|e| e.tag.starts_with("APP-A")).collect();
    let reports = verify::verify_entries(&entries, None, verify::DEFAULT_CEILING_MS);
    for (e, r) in entries.iter().zip(reports) {
        let r = r.map_err(|err| format!("{}: {err}", e.tag))?;
        ensure(r.pass, || format!("{}: {:?}", e.tag, r.first_diff))?;
    }
    within(t, Duration::from_secs(30 * 60))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("CEF to order 12 within 10 s", c1),
        ("ZZK, PUM, EXEFH to order 10 and the A1(1) sweep", c2),
        ("A2(2) product identities within 10 min", c3),
        ("d values and the hat/tilde separation", c4),
        ("hd_n tilde-integral for n <= 12", c5),
        ("root divisibility and tilde-integral square root", c6),
        ("Garland basis to degree 8", c7),
        ("Mitzman inclusion, strictness and identities", c8),
        ("Jacobi, associativity, round trips, mutations", c9),
        ("appendix identities within 30 min", c10),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
