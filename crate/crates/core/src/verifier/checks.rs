use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{CheckOutcome, Ctx, Status};
use crate::curvelattice::{
    blow_up, canonical_class, check_section, classify_fiber, d1, d2, gram_rank, intersect, rr_chi,
    theta_class_action, unique_fixed_component_through, Divisor, KodairaType, PointSpec,
};
use crate::ellcurve::non_isogeny_certificate;
use crate::exactfield::{ext_field_build, FieldElement, Fp, LaurentVector};
use crate::fgcert::{
    escape_witness, nielsen_schreier_expected, non_fg_certificate, parse_generator_perms,
    schreier_generators, span_membership, translation_part, word_permutation,
};
use crate::lineaction::{
    conjugate_generator, evaluate_word, f1, f2, mw_action, standard_generators, AffineMap,
    DifferentialPair, FibrationRecord, GroupWord,
};

type Body = fn(&Ctx) -> CheckOutcome;

pub(super) const ALL: [(&str, &str, Body); 13] = [
    ("field_sanity", "prime and quadratic extension field arithmetic", field_sanity),
    ("non_isogeny", "ordinary generic fiber curve versus supersingular special curve", non_isogeny),
    ("gram_rank", "rank of the 24-curve intersection matrix is 18", gram_rank_check),
    ("fibers", "D1 is I_8, D2 is IV*, and the four section checks hold", fibers),
    ("theta_action", "theta fixes every curve class; unique fixed component through P", theta_action),
    ("riemann_roch", "Euler characteristics of sample line bundles", riemann_roch),
    ("blowups", "canonical class after blowing up P and a point on E_P", blowups),
    ("mw_action", "Mordell-Weil actions on C gated on fiber certificates", mw_actions),
    ("conjugation", "f1^n f2 f1^-n acts as x + t^n", conjugation),
    ("non_fg", "powers of t span a space of dimension d + 1", non_fg),
    ("escape_witnesses", "random finite translation sets miss some power of t", escape_witnesses),
    ("schreier", "Schreier generator counts match 1 + n(r - 1)", schreier),
    ("pair_calculus", "kernel identities for differential pairs", pair_calculus_check),
];

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rng(ctx: &Ctx, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.params.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn field_sanity(ctx: &Ctx) -> CheckOutcome {
    let p = ctx.params.p;
    let field = ext_field_build(p, 2).map_err(err)?;
    let mut r = rng(ctx, 1);
    let rand_elem = |r: &mut ChaCha8Rng| field.from_coords(&[r.gen_range(0..p as i64), r.gen_range(0..p as i64)]);
    let trials = 200;
    let mut failures = 0;
    for _ in 0..trials {
        let (a, b, c) = (rand_elem(&mut r), rand_elem(&mut r), rand_elem(&mut r));
        let ab = a.try_mul(&b).map_err(err)?;
        let ok = ab == b.try_mul(&a).map_err(err)?
            && a.try_mul(&b.try_add(&c).map_err(err)?).map_err(err)?
                == ab.try_add(&a.try_mul(&c).map_err(err)?).map_err(err)?
            && (a.is_zero() || a.try_mul(&a.inv().map_err(err)?).map_err(err)?.is_one())
            && a.try_add(&b).map_err(err)?.frobenius() == a.frobenius().try_add(&b.frobenius()).map_err(err)?
            && ab.frobenius() == a.frobenius().try_mul(&b.frobenius()).map_err(err)?;
        let x = Fp::new(r.gen_range(1..p as i64), p);
        let prime_ok = x.try_mul(&x.inv().map_err(err)?).map_err(err)?.is_one();
        if !(ok && prime_ok) {
            failures += 1;
        }
    }
    Ok((
        failures == 0 && field.modulus().is_irreducible(),
        json!({
            "extension_modulus": field.modulus().to_string_in("x"),
            "extension_size": field.size(),
            "trials": trials,
            "failures": failures,
        }),
    ))
}

fn non_isogeny(ctx: &Ctx) -> CheckOutcome {
    let cert = non_isogeny_certificate(ctx.params.p).map_err(err)?;
    Ok((cert.is_valid(), cert.to_json()))
}

fn gram_rank_check(ctx: &Ctx) -> CheckOutcome {
    let rank = gram_rank(ctx.cfg);
    Ok((rank == 18, json!({ "rank": rank, "curves": ctx.cfg.len() })))
}

fn fibers(ctx: &Ctx) -> CheckOutcome {
    let cfg = ctx.cfg;
    let kind = |d: &Divisor| classify_fiber(cfg, d).map(|k| k.to_string()).unwrap_or_else(|e| e.to_string());
    let (t1, t2) = (kind(&d1()), kind(&d2()));
    let sections = [
        ("D1", d1(), "C31"),
        ("D1", d1(), "C41"),
        ("D2", d2(), "C21"),
        ("D2", d2(), "C31"),
    ];
    let mut section_json = serde_json::Map::new();
    let mut all = true;
    for (name, d, s) in &sections {
        let ok = check_section(cfg, d, s).unwrap_or(false);
        all &= ok;
        section_json.insert(format!("{name}.{s}"), json!(ok));
    }
    let pass = t1 == KodairaType::I(8).to_string() && t2 == KodairaType::IVStar.to_string() && all;
    Ok((pass, json!({ "D1": t1, "D2": t2, "sections": section_json })))
}

fn theta_action(ctx: &Ctx) -> CheckOutcome {
    let act = theta_class_action(ctx.cfg, ctx.params.p).map_err(err)?;
    let through_p = unique_fixed_component_through(ctx.cfg, "P").map_err(err)?;
    let c_label = &ctx.cfg.labels()[ctx.cfg.index_of("C").map_err(err)?];
    Ok((
        act.is_identity() && &through_p == c_label,
        json!({ "action": act.to_string(), "fixed_component_through_P": through_p }),
    ))
}

fn riemann_roch(ctx: &Ctx) -> CheckOutcome {
    let samples = [
        ("0", Divisor::zero(), 2),
        ("C", Divisor::curve("C"), 1),
        ("D1", d1(), 2),
        ("D2", d2(), 2),
        ("D1+D2", d1().plus(&d2()), 2 + intersect(ctx.cfg, &d1(), &d2()).map_err(err)?),
    ];
    let mut pass = true;
    let mut out = serde_json::Map::new();
    for (name, d, want) in samples {
        let got = rr_chi(ctx.cfg, &d);
        pass &= got.as_ref().ok() == Some(&want);
        out.insert(
            name.to_string(),
            match got {
                Ok(v) => json!(v),
                Err(e) => json!(e.to_string()),
            },
        );
    }
    Ok((pass, Value::Object(out)))
}

fn blowups(ctx: &Ctx) -> CheckOutcome {
    let y1 = blow_up(ctx.cfg, &PointSpec::NamedPoint("P".into())).map_err(err)?;
    let ep = y1.blowups()[0].exceptional.clone();
    let y2 = blow_up(&y1, &PointSpec::GenericOnCurve(ep.clone())).map_err(err)?;
    let eq = y2.blowups()[1].exceptional.clone();
    let k = canonical_class(&y2);
    let expected = Divisor::from_terms(&[(&ep, 1), (&eq, 2)]);
    let mut adjunction_failures = Vec::new();
    for cfg in [ctx.cfg, &y1, &y2] {
        let kc = canonical_class(cfg);
        for l in cfg.labels() {
            let c = Divisor::curve(l);
            if intersect(cfg, &c, &c).map_err(err)? + intersect(cfg, &kc, &c).map_err(err)? != -2 {
                adjunction_failures.push(l.clone());
            }
        }
    }
    Ok((
        k == expected && adjunction_failures.is_empty(),
        json!({
            "canonical": y2.format_divisor(&k),
            "expected": expected.to_string(),
            "adjunction_failures": adjunction_failures,
        }),
    ))
}

fn mw_actions(ctx: &Ctx) -> CheckOutcome {
    if ctx.status_of("fibers") != Some(Status::Pass) {
        return Err("fiber certificates failed; actions not evaluated".into());
    }
    let p = ctx.params.p;
    let r1 = FibrationRecord::certify(ctx.cfg, &d1(), "C31", &["C41"], p);
    let r2 = FibrationRecord::certify(ctx.cfg, &d2(), "C21", &["C31"], p);
    let a1 = mw_action(&r1, "C41").map_err(err)?;
    let a2 = mw_action(&r2, "C31").map_err(err)?;
    let z1 = mw_action(&r1, "C31").map_err(err)?;
    let z2 = mw_action(&r2, "C21").map_err(err)?;
    Ok((
        a1 == f1(p) && a2 == f2(p) && z1.is_identity() && z2.is_identity(),
        json!({ "D1.C41": a1.to_string(), "D2.C31": a2.to_string() }),
    ))
}

fn conjugation(ctx: &Ctx) -> CheckOutcome {
    let p = ctx.params.p;
    let n = ctx.params.nmax as i64;
    let mut mismatches = Vec::new();
    for k in -n..=n {
        let want = AffineMap::translation(crate::exactfield::RatFunc::monomial(Fp::one(p), k));
        if conjugate_generator(k, p) != want {
            mismatches.push(k);
        }
    }
    Ok((mismatches.is_empty(), json!({ "range": [-n, n], "mismatches": mismatches })))
}

fn non_fg(ctx: &Ctx) -> CheckOutcome {
    let cert = non_fg_certificate(ctx.params.depth, ctx.params.p).map_err(err)?;
    let last = *cert.dims.last().expect("depth >= 1");
    Ok((cert.is_valid(), json!({ "depth": cert.depth, "final_dimension": last })))
}

/// A random word over `f1, f2` whose `f1`-exponents sum to zero.
pub(crate) fn random_translation_word<R: Rng>(r: &mut R) -> GroupWord {
    let len = r.gen_range(1..=4);
    let mut syl = Vec::new();
    let mut shift = 0i64;
    for _ in 0..len {
        let a = r.gen_range(-4..=4);
        syl.push(("f1".to_string(), a));
        syl.push(("f2".to_string(), r.gen_range(1..=3)));
        shift += a;
    }
    syl.push(("f1".to_string(), -shift));
    GroupWord::new(syl)
}

fn escape_witnesses(ctx: &Ctx) -> CheckOutcome {
    let p = ctx.params.p;
    let dict = standard_generators(p);
    let mut r = rng(ctx, 11);
    let sets = 100;
    let mut failures = Vec::new();
    let mut max_n = 0;
    for k in 0..sets {
        let size = r.gen_range(1..=6);
        let mut s: Vec<LaurentVector> = Vec::new();
        for _ in 0..size {
            let w = random_translation_word(&mut r);
            let m = evaluate_word(&w, &dict).map_err(err)?;
            if let Some(v) = translation_part(&m).map_err(err)? {
                s.push(v);
            }
        }
        let n = escape_witness(&s, p).map_err(err)?;
        max_n = max_n.max(n);
        let t = |e: u64| LaurentVector::monomial(Fp::one(p), e as i64);
        let escaped = !span_membership(&t(n), &s, p).map_err(err)?;
        let least = (0..n).all(|j| span_membership(&t(j), &s, p).unwrap_or(false));
        if !(escaped && least) {
            failures.push(k);
        }
    }
    Ok((
        failures.is_empty(),
        json!({ "seed": ctx.params.seed, "sets": sets, "max_witness": max_n, "failures": failures }),
    ))
}

const SCHREIER_CASES: [(&str, u64, u64); 6] = [
    ("a=(0 1); b=(0 1)", 2, 2),
    ("a=(0 1 2)", 1, 3),
    ("a=(0 1 2 3 4 5)", 1, 6),
    ("a=(0 1 2 3); b=(0 2)", 2, 4),
    ("a=(0 1 2 3 4); b=(0 1); c=(2 3)", 3, 5),
    ("a=(0 1 2 3 4 5); b=(1 5)(2 4); c=(0 3)", 3, 6),
];

fn schreier(_ctx: &Ctx) -> CheckOutcome {
    let mut out = Vec::new();
    let mut pass = true;
    for (spec, rank, index) in SCHREIER_CASES {
        let gens = parse_generator_perms(spec, 0).map_err(err)?;
        let words = schreier_generators(&gens, 0).map_err(err)?;
        let stabilising = words
            .iter()
            .all(|w| word_permutation(w, &gens).map(|g| g.apply(0) == 0).unwrap_or(false));
        let expected = nielsen_schreier_expected(rank, index);
        pass &= stabilising && words.len() as u64 == expected;
        out.push(json!({ "gens": spec, "count": words.len(), "expected": expected }));
    }
    Ok((pass, Value::Array(out)))
}

fn pair_calculus_check(ctx: &Ctx) -> CheckOutcome {
    let p = ctx.params.p;
    let mut r = rng(ctx, 13);
    let trials = 1000;
    let mut failures = 0;
    for _ in 0..trials {
        let a1 = Fp::new(r.gen_range(1..p as i64), p);
        let a2 = Fp::new(r.gen_range(1..p as i64), p);
        let pair = DifferentialPair::new(a1, a2).map_err(err)?;
        let kernel = pair.in_g_xp() == (pair.in_g_xcp() && pair.canonical_rep().is_one());
        let scalar = pair.lifts_to_y() == (a1 == a2);
        if !(kernel && scalar) {
            failures += 1;
        }
    }
    Ok((failures == 0, json!({ "trials": trials, "failures": failures })))
}
