//! Acceptance gate: one test per criterion, each printing a pass/fail line
//! with its runtime budget. Run with `cargo test --test acceptance` (add
//! `-- --nocapture` to see the lines, `-- --ignored` for the opt-in large
//! groups).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use kschubert::demazure::{
    demazure, demazure_composite, demazure_word, euler_char, euler_char_t,
};
use kschubert::laurent::{antisymmetrize, rat_int, LaurentPoly, Rat};
use kschubert::lifts::{invariance_report, OrdinaryLift, TensorLift};
use kschubert::oracle::{
    brute_bruhat, brute_mobius, expand_by_evaluation, generic_point, random_poly, reduce_family,
    weyl_dim, SplitMix64,
};
use kschubert::rootdata::{GroupLabel, Weight};
use kschubert::structconst::{
    equivariant_chevalley, equivariant_constants, expand_line_bundle, ordinary_chevalley,
    ordinary_constants, ordinary_partial, ordinary_table, TableValue,
};
use kschubert::verify::{run_suite, spanning_set, MonomialCache, Suite, VerifyOptions};
use kschubert::weyl::{ElemId, ParabolicSubset};
use kschubert::wonderful::{kdec_basis_check, KXElement, WonderfulRing};
use kschubert::GroupData;

fn gd(label: GroupLabel) -> GroupData {
    GroupData::from_label(label).unwrap()
}

fn report(criterion: &str, start: Instant, budget: Duration, pass: bool) {
    let elapsed = start.elapsed();
    println!(
        "acceptance {criterion}: {} ({elapsed:.2?} of {budget:.2?} budget)",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion} failed");
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its runtime budget: {elapsed:.2?} > {budget:.2?}"
    );
}

/// Criterion 1: operator algebra on the monomial spanning set with all
/// coordinates bounded by 3, for A1, A2, A3, B2, G2.
#[test]
fn criterion_01_demazure_algebra() {
    let start = Instant::now();
    let labels = [
        GroupLabel::A1,
        GroupLabel::A2,
        GroupLabel::A3,
        GroupLabel::B2,
        GroupLabel::G2,
    ];
    let results: Vec<bool> = labels
        .iter()
        .map(|&label| {
            let g = gd(label);
            let wg = &g.wg;
            let span = spanning_set(g.rank(), 3);
            let mut cache = MonomialCache::new(&g);
            let mut ok = true;
            // idempotency and absorption/extension for every letter prefix
            for j in 0..g.rank() {
                let s = wg.simple_reflection(j);
                for w in 0..wg.order() {
                    let sw = wg.mult(s, w);
                    let expect = if wg.length(sw) > wg.length(w) { sw } else { w };
                    for lambda in &span {
                        let inner = cache.monomial(w, lambda);
                        if cache.apply(s, &inner) != cache.monomial(expect, lambda) {
                            ok = false;
                        }
                    }
                }
            }
            // length-additive composition over all additive pairs
            for w in 0..wg.order() {
                for wp in 0..wg.order() {
                    let prod = wg.mult(w, wp);
                    if wg.length(prod) != wg.length(w) + wg.length(wp) {
                        continue;
                    }
                    for lambda in &span {
                        let inner = cache.monomial(wp, lambda);
                        if cache.apply(w, &inner) != cache.monomial(prod, lambda) {
                            ok = false;
                        }
                    }
                }
            }
            // reduced-word independence, all reduced words of every element
            for w in 0..wg.order() {
                let words = wg.reduced_words(w);
                for lambda in &span {
                    let reference = cache.monomial(w, lambda);
                    for word in &words[1..] {
                        if demazure_word(&g.rs, &LaurentPoly::exp(lambda), word) != reference {
                            ok = false;
                        }
                    }
                }
            }
            ok
        })
        .collect();
    report(
        "01 demazure-algebra",
        start,
        Duration::from_secs(10),
        results.iter().all(|&b| b),
    );
}

/// Criterion 2: the top operator equals its antisymmetrizer closed form on
/// at least 50 random inputs per group.
#[test]
fn criterion_02_top_operator_identity() {
    let start = Instant::now();
    let labels = [
        GroupLabel::A1,
        GroupLabel::A2,
        GroupLabel::A3,
        GroupLabel::B2,
        GroupLabel::G2,
    ];
    let mut pass = true;
    for label in labels {
        let g = gd(label);
        let w0 = g.wg.longest_element();
        let j_rho_neg = antisymmetrize(&g.wg, &LaurentPoly::exp(&g.rs.rho.neg()));
        let mut rng = SplitMix64::new(0xfeed ^ label.name().len() as u64);
        for _ in 0..50 {
            let f = random_poly(g.rank(), &mut rng, 5, 3);
            let lhs = demazure(&g, &f, w0);
            let rhs = antisymmetrize(&g.wg, &f)
                .exact_div(&j_rho_neg)
                .map(|q| q.mul_monomial(&g.rs.rho.neg(), &Rat::one()));
            if rhs.as_ref() != Some(&lhs) {
                pass = false;
            }
        }
    }
    report(
        "02 top-operator-identity",
        start,
        Duration::from_secs(10),
        pass,
    );
}

/// Criterion 3: convention audit. The rank-one Euler characteristic, the
/// Weyl-dimension comparison over the antidominant window, and invariance of
/// the full-flag equivariant characteristic, on every built-in group.
#[test]
fn criterion_03_convention_audit() {
    let start = Instant::now();
    let mut pass = true;

    let a1 = gd(GroupLabel::A1);
    pass &= euler_char(&a1, a1.wg.longest_element(), &Weight(vec![-1])) == 2;

    for label in GroupLabel::BUILTIN {
        let g = gd(label);
        let w0 = g.wg.longest_element();
        let full = ParabolicSubset::full(g.rank());
        for lambda in spanning_set(g.rank(), 3) {
            let chi_t = euler_char_t(&g, w0, &lambda);
            if !chi_t.is_invariant(&g.wg, &full) {
                pass = false;
            }
            if lambda.coords().iter().all(|&c| c <= 0) {
                let chi = euler_char(&g, w0, &lambda);
                if chi != weyl_dim(&g, &lambda.neg()).unwrap() {
                    pass = false;
                }
            }
        }
    }
    report(
        "03 convention-audit",
        start,
        Duration::from_secs(30),
        pass,
    );
}

fn kronecker_holds(g: &GroupData) -> bool {
    // both identities are enforced by the builders; building is the check
    let ol = OrdinaryLift::build(g);
    let tl = TensorLift::build(g);
    ol.is_ok() && tl.is_ok()
}

/// Criterion 4: the Kronecker-delta identities of both lifts on A1, A2, B2,
/// with the stated solve budgets.
#[test]
fn criterion_04_kronecker_lifts() {
    let start = Instant::now();
    let mut pass = kronecker_holds(&gd(GroupLabel::A1));

    let t_a2 = Instant::now();
    pass &= kronecker_holds(&gd(GroupLabel::A2));
    let a2_time = t_a2.elapsed();

    let t_b2 = Instant::now();
    pass &= kronecker_holds(&gd(GroupLabel::B2));
    let b2_time = t_b2.elapsed();

    pass &= a2_time <= Duration::from_secs(60);
    pass &= b2_time <= Duration::from_secs(300);
    println!("  tensor solves: A2 {a2_time:.2?} (60s budget), B2 {b2_time:.2?} (5min budget)");
    report(
        "04 kronecker-lifts",
        start,
        Duration::from_secs(300 + 60 + 30),
        pass,
    );
}

/// Criterion 4, opt-in extension: tensor lifts for G2 and A3.
#[test]
#[ignore = "opt-in: large tensor solves"]
fn criterion_04_optin_large_tensor_lifts() {
    let start = Instant::now();
    let mut pass = true;
    let g2 = gd(GroupLabel::G2);
    pass &= TensorLift::build(&g2).is_ok();
    let a3 = gd(GroupLabel::A3);
    pass &= TensorLift::build_with_options(&a3, true).is_ok();
    report(
        "04x large-tensor-lifts",
        start,
        Duration::from_secs(3600),
        pass,
    );
}

/// Criterion 5: Schubert representatives live in the right invariant rings,
/// in both the scalar and tensor pictures.
#[test]
fn criterion_05_invariance() {
    let start = Instant::now();
    let mut pass = true;
    for label in [GroupLabel::A1, GroupLabel::A2, GroupLabel::B2] {
        let g = gd(label);
        let ol = OrdinaryLift::build(&g).unwrap();
        let tl = TensorLift::build(&g).unwrap();
        for rec in invariance_report(&g, &ol, Some(&tl)) {
            pass &= rec.ordinary_invariant && rec.tensor_invariant;
        }
    }
    report("05 invariance", start, Duration::from_secs(30), pass);
}

fn ordinary_table_battery(label: GroupLabel) -> bool {
    let g = gd(label);
    let ol = OrdinaryLift::build(&g).unwrap();
    let wg = &g.wg;
    let n = wg.order();
    let table = ordinary_table(&g, &ol);
    let mut ok = true;

    // integrality is asserted during construction; check shape properties
    for (&(x, y, z), v) in &table.entries {
        let TableValue::Int(k) = v else {
            return false;
        };
        ok &= table.entries.get(&(y, x, z)) == Some(v);
        ok &= wg.bruhat_leq(x, z) && wg.bruhat_leq(y, z);
        let parity = (wg.length(z) as i64) - (wg.length(x) as i64) - (wg.length(y) as i64);
        let sign = if parity.rem_euclid(2) == 0 { 1 } else { -1 };
        ok &= sign * k >= 0;
    }
    for y in 0..n {
        for z in 0..n {
            let got = match table.entries.get(&(wg.identity(), y, z)) {
                Some(TableValue::Int(k)) => *k,
                None => 0,
                _ => return false,
            };
            ok &= got == i64::from(y == z);
        }
    }

    // entry-for-entry agreement with the monomial-window oracle
    let pairs: Vec<(ElemId, ElemId)> = (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .collect();
    let targets: Vec<LaurentPoly> = pairs
        .iter()
        .map(|&(x, y)| ol.rv[x].mul(&ol.rv[y]))
        .collect();
    let Ok(rows) = reduce_family(&g, &ol.rv, &targets) else {
        return false;
    };
    for (&(x, y), kappa) in pairs.iter().zip(&rows) {
        for (z, val) in kappa.iter().enumerate() {
            let expected = match table.entries.get(&(x, y, z)) {
                Some(TableValue::Int(k)) => rat_int(*k),
                _ => Rat::zero(),
            };
            ok &= *val == expected;
        }
    }
    ok
}

/// Criterion 6: ordinary constant tables for A1, A2, B2, G2 against the
/// window oracle, plus the projective-space relations.
#[test]
fn criterion_06_ordinary_constants() {
    let start = Instant::now();
    let mut pass = true;

    let t_a1 = Instant::now();
    pass &= ordinary_table_battery(GroupLabel::A1);
    // A1: point squared vanishes
    let a1 = gd(GroupLabel::A1);
    let ol1 = OrdinaryLift::build(&a1).unwrap();
    pass &= ordinary_constants(&a1, &ol1, 1, 1).is_empty();
    let _ = t_a1;

    let t_a2 = Instant::now();
    pass &= ordinary_table_battery(GroupLabel::A2);
    let a2_time = t_a2.elapsed();
    pass &= a2_time <= Duration::from_secs(5);

    // projective-plane relations through the parabolic table
    let a2 = gd(GroupLabel::A2);
    let ol2 = OrdinaryLift::build(&a2).unwrap();
    let i_set = ParabolicSubset::new(2, &[1]).unwrap();
    let line = a2.wg.parse_word("s1").unwrap();
    let point = a2.wg.parse_word("s2 s1").unwrap();
    pass &= ordinary_partial(&a2, &ol2, &i_set, line, line).unwrap()
        == BTreeMap::from([(point, 1)]);
    pass &= ordinary_partial(&a2, &ol2, &i_set, point, point)
        .unwrap()
        .is_empty();

    let t_b2 = Instant::now();
    pass &= ordinary_table_battery(GroupLabel::B2);
    let b2_time = t_b2.elapsed();
    pass &= b2_time <= Duration::from_secs(30);

    let t_g2 = Instant::now();
    pass &= ordinary_table_battery(GroupLabel::G2);
    let g2_time = t_g2.elapsed();
    pass &= g2_time <= Duration::from_secs(120);

    println!(
        "  tables: A2 {a2_time:.2?} (5s), B2 {b2_time:.2?} (30s), G2 {g2_time:.2?} (2min)"
    );
    report(
        "06 ordinary-constants",
        start,
        Duration::from_secs(5 + 30 + 120 + 30),
        pass,
    );
}

/// Criterion 6, opt-in extension: the A3 table within ten minutes.
#[test]
#[ignore = "opt-in: A3 table and oracle"]
fn criterion_06_optin_a3_constants() {
    let start = Instant::now();
    let pass = ordinary_table_battery(GroupLabel::A3);
    report(
        "06x a3-ordinary-constants",
        start,
        Duration::from_secs(600),
        pass,
    );
}

/// Criterion 7: equivariant tables. Hand values at rank one, forgetful
/// compatibility, and agreement with the evaluation oracle at three generic
/// points for every pair on A1 and A2.
#[test]
fn criterion_07_equivariant_constants() {
    let start = Instant::now();
    let mut pass = true;

    // A1 hand values
    let a1 = gd(GroupLabel::A1);
    let tl1 = TensorLift::build(&a1).unwrap();
    let row = equivariant_constants(&a1, &tl1, 1, 1);
    let alpha = &a1.rs.positive_roots[0];
    pass &= row.len() == 1
        && row.get(&1) == Some(&LaurentPoly::one(1).sub(&LaurentPoly::exp(&alpha.neg())));

    for label in [GroupLabel::A1, GroupLabel::A2] {
        let g = gd(label);
        let ol = OrdinaryLift::build(&g).unwrap();
        let tl = TensorLift::build(&g).unwrap();
        let n = g.wg.order();
        let orbit: Vec<ElemId> = (0..n).collect();
        let mut rows = BTreeMap::new();
        for x in 0..n {
            for y in x..n {
                rows.insert((x, y), equivariant_constants(&g, &tl, x, y));
            }
        }
        // forgetful compatibility
        for ((x, y), row) in &rows {
            let ordinary = ordinary_constants(&g, &ol, *x, *y);
            for z in 0..n {
                let lhs = row.get(&z).map(|p| p.augmentation()).unwrap_or_else(Rat::zero);
                pass &= lhs == rat_int(ordinary.get(&z).copied().unwrap_or(0));
            }
        }
        // evaluation oracle at three generic points
        for seed in 0..3u64 {
            let t = generic_point(&g, 1000 + seed).unwrap();
            let basis: Vec<LaurentPoly> = (0..n)
                .map(|z| tl.classes[z].specialize_first(&t.values).unwrap())
                .collect();
            for ((x, y), row) in &rows {
                let target = basis[*x].mul(&basis[*y]);
                let kappa = expand_by_evaluation(&g, &t, &target, &basis, &orbit).unwrap();
                for z in 0..n {
                    let expected = row
                        .get(&z)
                        .map(|p| p.eval(&t.values))
                        .unwrap_or_else(Rat::zero);
                    pass &= kappa[z] == expected;
                }
            }
        }
    }
    report(
        "07 equivariant-constants",
        start,
        Duration::from_secs(300),
        pass,
    );
}

/// Criterion 8: Chevalley coefficients. Vanishing above the Bruhat order on
/// A2, the rank-one identity entry, forgetful compatibility, and the
/// line-bundle expansion rows.
#[test]
fn criterion_08_chevalley() {
    let start = Instant::now();
    let mut pass = true;

    let a1 = gd(GroupLabel::A1);
    let tl1 = TensorLift::build(&a1).unwrap();
    for n in -2..=2 {
        let lambda = Weight(vec![n]);
        let row = equivariant_chevalley(&a1, &tl1, &lambda, a1.wg.identity());
        pass &= row.get(&a1.wg.identity()) == Some(&LaurentPoly::exp(&lambda));
    }

    for label in [GroupLabel::A1, GroupLabel::A2] {
        let g = gd(label);
        let ol = OrdinaryLift::build(&g).unwrap();
        let tl = TensorLift::build(&g).unwrap();
        let n = g.wg.order();
        for lambda in spanning_set(g.rank(), 2) {
            // identity rows equal the line-bundle expansion
            let row = ordinary_chevalley(&g, &ol, &lambda, g.wg.identity());
            pass &= row == expand_line_bundle(&g, &LaurentPoly::exp(&lambda));
            for x in 0..n {
                let q = ordinary_chevalley(&g, &ol, &lambda, x);
                let big_q = equivariant_chevalley(&g, &tl, &lambda, x);
                for y in 0..n {
                    let entry = big_q.get(&y);
                    if !g.wg.bruhat_leq(x, y) {
                        pass &= entry.is_none();
                    }
                    let lhs = entry.map(|p| p.augmentation()).unwrap_or_else(Rat::zero);
                    pass &= lhs == rat_int(q.get(&y).copied().unwrap_or(0));
                }
            }
        }
    }
    report("08 chevalley", start, Duration::from_secs(120), pass);
}

/// Criterion 9: the Moebius closed form against the brute-force recursion on
/// every coset poset, and the operator-collapse equivalence against both
/// Bruhat implementations, on A2, B2, G2.
#[test]
fn criterion_09_moebius_bruhat() {
    let start = Instant::now();
    let mut pass = true;
    for label in [GroupLabel::A2, GroupLabel::B2, GroupLabel::G2] {
        let g = gd(label);
        let wg = &g.wg;
        for mask in 0..(1u32 << g.rank()) {
            let i_set = ParabolicSubset::from_mask(g.rank(), mask);
            let reps = wg.min_coset_reps(&i_set);
            for &v in &reps {
                for &w in &reps {
                    pass &= wg.mobius(&i_set, v, w).unwrap()
                        == brute_mobius(&g, &i_set, v, w).unwrap();
                }
            }
        }
        for w in 0..wg.order() {
            for wp in 0..wg.order() {
                let collapsed = demazure_composite(&g, wp, w) == wg.longest_element();
                pass &= collapsed == wg.bruhat_leq(w, wp);
                pass &= collapsed == brute_bruhat(&g, w, wp);
            }
        }
    }
    report("09 moebius-bruhat", start, Duration::from_secs(30), pass);
}

/// Criterion 10: the wonderful K-ring. Unit, commutativity, associativity
/// (exhaustive on A1, 200 seeded triples plus the exhaustive 216 on A2),
/// total dimension, the congruence basis, and the direct-sum counts.
#[test]
fn criterion_10_wonderful_ring() {
    let start = Instant::now();
    let mut pass = true;

    for label in [GroupLabel::A1, GroupLabel::A2] {
        let g = gd(label);
        let ol = OrdinaryLift::build(&g).unwrap();
        let ring = WonderfulRing::build(&g, &ol);
        let n = g.wg.order();

        for v in 0..n {
            let gv = KXElement::gamma(v);
            pass &= ring.kx_multiply(&KXElement::gamma(0), &gv) == gv;
            pass &= ring.kx_multiply(&gv, &KXElement::gamma(0)) == gv;
        }
        for v in 0..n {
            for vp in 0..n {
                pass &= ring.gamma_product(v, vp) == ring.gamma_product(vp, v);
            }
        }
        // associativity: exhaustive basis triples (8 on A1, 216 on A2)
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = ring.gamma_product(a, b);
                    let bc = ring.gamma_product(b, c);
                    pass &= ring.kx_multiply(&ab, &KXElement::gamma(c))
                        == ring.kx_multiply(&KXElement::gamma(a), &bc);
                }
            }
        }
        // and 200 seeded random triples on top
        let mut rng = SplitMix64::new(0xD15EA5E);
        for _ in 0..200 {
            let (a, b, c) = (
                rng.below(n as u64) as usize,
                rng.below(n as u64) as usize,
                rng.below(n as u64) as usize,
            );
            let ab = ring.gamma_product(a, b);
            let bc = ring.gamma_product(b, c);
            pass &= ring.kx_multiply(&ab, &KXElement::gamma(c))
                == ring.kx_multiply(&KXElement::gamma(a), &bc);
        }
        pass &= ring.total_dimension() == n * n;

        let report = kdec_basis_check(&g, &ol, 4242).unwrap();
        pass &= report.pass();
        pass &= report.rank_found == n;
    }
    report("10 wonderful-ring", start, Duration::from_secs(300), pass);
}

/// Criterion 11: two runs of the full verification suite with the same seed
/// produce byte-identical reports.
#[test]
fn criterion_11_determinism() {
    let start = Instant::now();
    let g = gd(GroupLabel::A2);
    let opts = VerifyOptions::default();
    let r1 = run_suite(&g, Suite::All, &opts).unwrap();
    let r2 = run_suite(&g, Suite::All, &opts).unwrap();
    let b1 = serde_json::to_string_pretty(&r1.to_json()).unwrap();
    let b2 = serde_json::to_string_pretty(&r2.to_json()).unwrap();
    let pass = b1 == b2 && r1.pass();
    report("11 determinism", start, Duration::from_secs(120), pass);
}
