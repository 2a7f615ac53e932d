//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p weylhc --test acceptance -- --nocapture` to see
//! the lines; every tolerance here is exact equality.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use weylhc::chartab::{
    char_table, char_table_generic, decompose, induce, restrict, CharacterTable, FusionData,
};
use weylhc::coxeter::{parabolic_subgroup, CoxeterGroup};
use weylhc::cyclo::{zsigmondy, zsigmondy_exception, LaurentPoly};
use weylhc::field::AlgNum;
use weylhc::hcseries::{
    check_type, g2_schur_separation_numeric, pairs_equal_on_proper_parabolics, separate_pair,
    CheckConfig, Separation,
};
use weylhc::hecke::{
    fake_degrees, poincare_polynomial, principal_series_degree, schur_a1, schur_g2,
    table1_identities, HeckeParams,
};
use weylhc::rootdata::{build_root_datum, dualize, CartanType, SimpleType};

fn group(s: &str) -> std::sync::Arc<CoxeterGroup> {
    CoxeterGroup::build_default(&s.parse().unwrap()).unwrap()
}

fn report(criterion: u32, name: &str, failures: &[String], started: Instant) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "ACCEPTANCE {criterion} ({name}): {status} [{:.2?}]",
        started.elapsed()
    );
    for f in failures {
        println!("  - {f}");
    }
    assert!(
        failures.is_empty(),
        "criterion {criterion} failed: {failures:?}"
    );
}

#[test]
fn criterion_1_table1_identities() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let rows = table1_identities(None).unwrap();
    if rows.len() != 6 {
        failures.push(format!("expected 6 identities, got {}", rows.len()));
    }
    for r in &rows {
        if !r.holds {
            failures.push(format!("identity k={} b={} does not hold", r.k, r.b));
        }
    }
    if t0.elapsed().as_secs_f64() >= 1.0 {
        failures.push(format!("runtime {:?} exceeds 1 s", t0.elapsed()));
    }
    report(1, "Table 1 cyclotomic identities", &failures, t0);
}

#[test]
fn criterion_2_g2_schur_separation() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for k in [1i64, 2, 5] {
        let c1 = schur_g2(k, 1).unwrap();
        let c2 = schur_g2(k, 2).unwrap();
        if c1.value == c2.value {
            failures.push(format!("k={k}: Schur elements coincide symbolically"));
        }
        match g2_schur_separation_numeric(k, 100) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("k={k}: numeric separation fails <= 100")),
            Err(e) => failures.push(format!("k={k}: {e}")),
        }
        // The q = 2 branch explicitly.
        let two = BigRational::from_integer(BigInt::from(2));
        if c1.value.eval(&two) == c2.value.eval(&two) {
            failures.push(format!("k={k}: no separation at q=2"));
        }
    }
    if t0.elapsed().as_secs_f64() >= 5.0 {
        failures.push(format!("runtime {:?} exceeds 5 s", t0.elapsed()));
    }
    report(
        2,
        "G2 Schur separation, symbolic and numeric",
        &failures,
        t0,
    );
}

#[test]
fn criterion_3_proposition_check() {
    let t0 = Instant::now();
    let mut failures = Vec::new();

    // Families asserted empty by the criterion.
    let mut empties: Vec<String> = Vec::new();
    for n in 2..=7 {
        empties.push(format!("A{n}"));
    }
    for n in 2..=6 {
        empties.push(format!("B{n}"));
    }
    for n in 4..=6 {
        empties.push(format!("D{n}"));
    }
    empties.push("F4".into());
    empties.push("H3".into());
    empties.push("H4".into());
    for m in [3u32, 5, 7, 9, 11] {
        empties.push(format!("I2({m})"));
    }
    for spec in &empties {
        let g = group(spec);
        let table = char_table(&g).unwrap();
        let pairs = pairs_equal_on_proper_parabolics(&table);
        if !pairs.is_empty() {
            failures.push(format!(
                "{spec}: expected no (1')-pairs, found {} {:?}",
                pairs.len(),
                pairs
            ));
        }
    }

    // A1: the unique pair {triv, sign}, Schur-separated for every k <= 10.
    let a1 = group("A1");
    let ta1 = char_table(&a1).unwrap();
    let pairs = pairs_equal_on_proper_parabolics(&ta1);
    if pairs.len() != 1 {
        failures.push(format!(
            "A1: expected exactly one pair, got {}",
            pairs.len()
        ));
    } else {
        for k in 1..=10 {
            let params = HeckeParams::equal(1, k);
            match separate_pair(&ta1, pairs[0], Some(&params)).unwrap() {
                Separation::Schur { .. } => {}
                other => failures.push(format!("A1 k={k}: not Schur-separated ({other:?})")),
            }
        }
        let (ct, cs) = schur_a1(1).unwrap();
        if ct.value == cs.value {
            failures.push("A1: c_triv = c_sign".into());
        }
    }

    // G2: the unique pair is the two 2-dimensional characters.
    let g2 = group("G2");
    let tg2 = char_table(&g2).unwrap();
    let pairs = pairs_equal_on_proper_parabolics(&tg2);
    if pairs.len() != 1 {
        failures.push(format!(
            "G2: expected exactly one pair, got {}",
            pairs.len()
        ));
    } else {
        let (i, j) = pairs[0];
        if tg2.irreducibles[i].degree() != 2u32.into()
            || tg2.irreducibles[j].degree() != 2u32.into()
        {
            failures.push("G2: pair is not the two-dimensional characters".into());
        }
    }

    if t0.elapsed().as_secs() >= 600 {
        failures.push(format!("runtime {:?} exceeds 10 min", t0.elapsed()));
    }
    report(
        3,
        "proposition check over classical and small exceptional types",
        &failures,
        t0,
    );
}

#[test]
fn criterion_4_table_validity_and_cross_oracle() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    // Every produced table satisfies orthogonality and the degree-square sum
    // (verify() checks all three exactly).
    let produced = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "G2", "F4", "H3", "I2(3)", "I2(4)",
        "I2(5)", "I2(6)", "I2(7)", "I2(8)", "B2xA1",
    ];
    for spec in produced {
        let g = group(spec);
        let table = char_table(&g).unwrap();
        if let Err(e) = table.verify() {
            failures.push(format!("{spec}: {e}"));
        }
    }
    // Combinatorial tables equal the generic-algorithm table up to row
    // permutation (same canonical classes).
    let cross = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "I2(3)", "I2(4)", "I2(5)", "I2(6)",
        "I2(7)", "I2(8)",
    ];
    for spec in cross {
        let g = group(spec);
        let comb = char_table(&g).unwrap();
        let gen = char_table_generic(&g).unwrap();
        if let Err(e) = gen.verify() {
            failures.push(format!("{spec} generic: {e}"));
        }
        if !comb.same_rows(&gen) {
            failures.push(format!("{spec}: combinatorial and generic tables differ"));
        }
    }
    if t0.elapsed().as_secs() >= 300 {
        failures.push(format!("runtime {:?} exceeds 5 min", t0.elapsed()));
    }
    report(
        4,
        "character-table validity and cross-oracle equality",
        &failures,
        t0,
    );
}

#[test]
fn criterion_5_frobenius_reciprocity_and_transitivity() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for spec in ["A3", "B3", "D4", "F4", "G2"] {
        let g = group(spec);
        let table = char_table(&g).unwrap();
        let rank = g.rank();
        // All nonempty proper parabolic subsets.
        let subsets: Vec<Vec<usize>> = (1u32..(1 << rank) - 1)
            .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        for j in &subsets {
            let sub = match parabolic_subgroup(&g, j) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("{spec} J={j:?}: {e}"));
                    continue;
                }
            };
            let sub_table = char_table(&sub.group).unwrap();
            let fusion = FusionData::from_parabolic(&g, &sub);
            // Frobenius reciprocity for every (phi, chi), exactly.
            for phi in &sub_table.irreducibles {
                let ind = induce(&phi.values, &fusion, &g);
                for chi in &table.irreducibles {
                    let lhs = table.inner_product(&ind, &chi.values);
                    let rhs = sub_table.inner_product(&phi.values, &restrict(&chi.values, &fusion));
                    if lhs != rhs {
                        failures.push(format!(
                            "{spec} J={j:?}: <Ind {}, {}> = {} but <{}, Res {}> = {}",
                            phi.label, chi.label, lhs, phi.label, chi.label, rhs
                        ));
                    }
                }
                // Induction multiplicities are non-negative integers.
                if decompose(&table, &ind).is_err() {
                    failures.push(format!(
                        "{spec} J={j:?}: Ind {} has bad multiplicities",
                        phi.label
                    ));
                }
            }
            // Restriction decomposes integrally.
            for chi in &table.irreducibles {
                if decompose(&sub_table, &restrict(&chi.values, &fusion)).is_err() {
                    failures.push(format!(
                        "{spec} J={j:?}: Res {} has bad multiplicities",
                        chi.label
                    ));
                }
            }
            // Transitivity along chains K < J: restriction through W_J agrees
            // with direct restriction, class by class.
            for kmask in 1u32..(1 << j.len()) - 1 {
                let k_positions: Vec<usize> =
                    (0..j.len()).filter(|p| kmask & (1 << p) != 0).collect();
                let k_parent: Vec<usize> = k_positions.iter().map(|&p| sub.gen_map[p]).collect();
                let inner = match parabolic_subgroup(&sub.group, &k_positions) {
                    Ok(s) => s,
                    Err(e) => {
                        failures.push(format!("{spec} K={k_parent:?}: {e}"));
                        continue;
                    }
                };
                let inner_fusion = FusionData::from_parabolic(&sub.group, &inner);
                for chi in &table.irreducibles {
                    let via_j = restrict(&restrict(&chi.values, &fusion), &inner_fusion);
                    // Direct route: match inner classes through their parent
                    // elements.
                    for (c, cls) in inner.group.classes.iter().enumerate() {
                        let in_j = inner.to_parent[cls.rep as usize];
                        let in_w = sub.to_parent[in_j as usize];
                        let direct = chi.values[g.class_of[in_w as usize] as usize].clone();
                        if via_j[c] != direct {
                            failures.push(format!(
                                "{spec}: transitivity fails for {} at J={j:?}, K={k_parent:?}",
                                chi.label
                            ));
                        }
                    }
                }
            }
        }
    }
    report(
        5,
        "Frobenius reciprocity and restriction transitivity",
        &failures,
        t0,
    );
}

#[test]
fn criterion_6_principal_series_degrees() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let params = HeckeParams::equal(1, 1);
    let triv = principal_series_degree(
        &SimpleType::A(1),
        &params,
        &weylhc::chartab::IrrLabel::Partition(vec![2]),
    )
    .unwrap();
    let sign = principal_series_degree(
        &SimpleType::A(1),
        &params,
        &weylhc::chartab::IrrLabel::Partition(vec![1, 1]),
    )
    .unwrap();
    if !triv.is_one() {
        failures.push(format!("A1 triv degree = {triv}, expected 1"));
    }
    if sign != LaurentPoly::q() {
        failures.push(format!("A1 sign degree = {sign}, expected q"));
    }
    report(6, "principal-series degree formula on A1", &failures, t0);
}

#[test]
fn criterion_7_fake_degree_identities() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for spec in ["A1", "A2", "A3", "B2", "B3", "D4", "G2", "F4"] {
        let g = group(spec);
        let table = char_table(&g).unwrap();
        let fds = fake_degrees(&table).unwrap();
        let n = g.datum.positive_roots.len() as i64;
        if !fds[table.trivial_index()].poly.is_one() {
            failures.push(format!("{spec}: R_triv != 1"));
        }
        if fds[table.sign_index()].poly != LaurentPoly::monomial(n, BigRational::one()) {
            failures.push(format!("{spec}: R_sign != q^{n}"));
        }
        let mut total = LaurentPoly::zero();
        for (irr, fd) in table.irreducibles.iter().zip(&fds) {
            let d = BigRational::from_integer(BigInt::from(u64::try_from(irr.degree()).unwrap()));
            total = total.add(&fd.poly.scale(&d));
        }
        if total != poincare_polynomial(&g) {
            failures.push(format!("{spec}: sum R_chi chi(1) != Poincaré polynomial"));
        }
    }
    // G2 b-invariants of the two-dimensional characters are {1, 2}.
    let g2 = group("G2");
    let table = char_table(&g2).unwrap();
    let fds = fake_degrees(&table).unwrap();
    let mut bs: Vec<u32> = table
        .irreducibles
        .iter()
        .zip(&fds)
        .filter(|(irr, _)| irr.degree() == 2u32.into())
        .map(|(_, fd)| fd.b_invariant)
        .collect();
    bs.sort_unstable();
    if bs != vec![1, 2] {
        failures.push(format!(
            "G2 two-dimensional b-invariants are {bs:?}, expected [1, 2]"
        ));
    }
    report(
        7,
        "fake-degree identities and G2 b-invariants",
        &failures,
        t0,
    );
}

#[test]
fn criterion_8_duality() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut types: Vec<String> = Vec::new();
    for n in 1..=6 {
        types.push(format!("A{n}"));
    }
    for n in 2..=6 {
        types.push(format!("B{n}"));
        types.push(format!("C{n}"));
    }
    for n in 3..=6 {
        types.push(format!("D{n}"));
    }
    types.push("E6".into());
    types.push("F4".into());
    types.push("G2".into());
    types.push("B2xA1".into());
    for spec in &types {
        let ct: CartanType = spec.parse().unwrap();
        let datum = build_root_datum(&ct).unwrap();
        match dualize(&datum) {
            Ok(map) => {
                if !map.verify() {
                    failures.push(format!("{spec}: duality map fails verification"));
                }
                if map.target.ctype != ct.dual() {
                    failures.push(format!(
                        "{spec}: dual type {} != {}",
                        map.target.ctype,
                        ct.dual()
                    ));
                }
            }
            Err(e) => failures.push(format!("{spec}: {e}")),
        }
    }
    // B_n <-> C_n transposition explicitly.
    for n in 2..=6 {
        let b: CartanType = format!("B{n}").parse().unwrap();
        let map = dualize(&build_root_datum(&b).unwrap()).unwrap();
        if map.target.ctype.to_string() != format!("C{n}") {
            failures.push(format!("B{n} dual is {}, expected C{n}", map.target.ctype));
        }
    }
    report(
        8,
        "duality maps preserve Coxeter matrices; B <-> C",
        &failures,
        t0,
    );
}

#[test]
fn criterion_9_zsigmondy_against_brute_force() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    // Independent oracle: direct definition over small primes with machine
    // arithmetic (no cyclotomic polynomials involved).
    let small_primes: Vec<u64> = {
        let mut sieve = vec![true; 50_000];
        let mut out = Vec::new();
        for p in 2..sieve.len() {
            if sieve[p] {
                out.push(p as u64);
                let mut m = p * p;
                while m < sieve.len() {
                    sieve[m] = false;
                    m += p;
                }
            }
        }
        out
    };
    let modpow_u64 = |base: u64, mut exp: u32, m: u64| -> u64 {
        let mut acc = 1u128;
        let mut b = (base % m) as u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m as u128;
            }
            b = b * b % m as u128;
            exp >>= 1;
        }
        acc as u64
    };
    let oracle_primitive = |q: u64, n: u32, r: u64| -> bool {
        if q % r == 0 {
            return false;
        }
        if modpow_u64(q, n, r) != 1 {
            return false;
        }
        (1..n).all(|m| modpow_u64(q, m, r) != 1)
    };

    // Parallel sweep, flattened over (q, n) and dealt round-robin so the
    // few factorisation-heavy pairs do not serialize on one thread.
    let mut work: Vec<(u64, u32)> = Vec::new();
    for q in 2..=20u64 {
        for n in 1..=30u32 {
            work.push((q, n));
        }
    }
    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(4);
    let results: Vec<(u64, u32, Option<num_bigint::BigUint>)> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let chunk: Vec<(u64, u32)> = work.iter().copied().skip(t).step_by(threads).collect();
            handles.push(scope.spawn(move || {
                chunk
                    .into_iter()
                    .map(|(q, n)| (q, n, zsigmondy(q, n).unwrap()))
                    .collect::<Vec<_>>()
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });

    for (q, n, result) in results {
        let brute: Option<u64> = small_primes
            .iter()
            .copied()
            .find(|&r| oracle_primitive(q, n, r));
        match (&result, brute) {
            (None, Some(r)) => {
                failures.push(format!("q={q} n={n}: returned none but {r} is primitive"));
            }
            (None, None) => {
                if !zsigmondy_exception(q, n) {
                    failures.push(format!(
                        "q={q} n={n}: none outside the classical exception set"
                    ));
                }
            }
            (Some(r), _) => {
                if zsigmondy_exception(q, n) {
                    failures.push(format!("q={q} n={n}: found {r} inside the exception set"));
                }
                // Verify by definition with exact arithmetic.
                let rb = r.clone();
                let qb = num_bigint::BigUint::from(q);
                let one = num_bigint::BigUint::from(1u32);
                if qb.modpow(&num_bigint::BigUint::from(n), &rb) != one {
                    failures.push(format!("q={q} n={n}: {r} does not divide q^n - 1"));
                }
                for m in 1..n {
                    if qb.modpow(&num_bigint::BigUint::from(m), &rb) == one {
                        failures.push(format!("q={q} n={n}: {r} divides q^{m} - 1"));
                        break;
                    }
                }
                if let Some(small) = brute {
                    // The implementation returns the smallest primitive prime.
                    if r > &num_bigint::BigUint::from(small) {
                        failures.push(format!(
                            "q={q} n={n}: returned {r} but {small} is a smaller primitive prime"
                        ));
                    }
                }
            }
        }
    }
    if t0.elapsed().as_secs() >= 30 {
        failures.push(format!("runtime {:?} exceeds 30 s", t0.elapsed()));
    }
    report(
        9,
        "Zsigmondy primes against brute-force search",
        &failures,
        t0,
    );
}

#[test]
fn restriction_examples_from_contract() {
    // Spot checks of the restriction/induction examples: Res^{A2}_{A1}(2-dim)
    // = triv + sign, Ind_{A1}^{A2}(triv) = triv + std, the regular character
    // from the trivial subgroup, and Res^{G2}_{A1,long}(phi_{2,1}) = triv + sign.
    let a2 = group("A2");
    let ta2 = char_table(&a2).unwrap();
    let sub = parabolic_subgroup(&a2, &[0]).unwrap();
    let ta1 = char_table(&sub.group).unwrap();
    let fusion = FusionData::from_parabolic(&a2, &sub);

    let two_dim = ta2
        .irreducibles
        .iter()
        .position(|i| i.degree() == 2u32.into())
        .unwrap();
    let parts = decompose(&ta1, &restrict(&ta2.irreducibles[two_dim].values, &fusion)).unwrap();
    assert_eq!(parts.len(), 2, "Res(2-dim) = triv + sign");
    assert!(parts.iter().all(|(_, m)| m == &1u32.into()));

    let triv_a1 = ta1.trivial_index();
    let ind = induce(&ta1.irreducibles[triv_a1].values, &fusion, &a2);
    let parts = decompose(&ta2, &ind).unwrap();
    let labels: Vec<String> = parts
        .iter()
        .map(|(i, _)| ta2.irreducibles[*i].label.to_string())
        .collect();
    assert_eq!(parts.len(), 2, "Ind(triv) = triv + std, got {labels:?}");

    // Ind from the trivial subgroup is the regular character.
    let trivial = FusionData::trivial(&a2);
    let reg = induce(&[AlgNum::int(1)], &trivial, &a2);
    assert_eq!(reg[0], AlgNum::int(6));
    assert!(reg[1..].iter().all(|v| v.is_zero()));

    // G2 restricted to a reflection subgroup.
    let g2 = group("G2");
    let tg2 = char_table(&g2).unwrap();
    for j in [0usize, 1] {
        let sub = parabolic_subgroup(&g2, &[j]).unwrap();
        let t_sub = char_table(&sub.group).unwrap();
        let fusion = FusionData::from_parabolic(&g2, &sub);
        for irr in tg2
            .irreducibles
            .iter()
            .filter(|i| i.degree() == 2u32.into())
        {
            let parts = decompose(&t_sub, &restrict(&irr.values, &fusion)).unwrap();
            assert_eq!(parts.len(), 2, "Res(phi_2b) = triv + sign on both A1s");
        }
    }

    // Res^W_W is the identity.
    let full = parabolic_subgroup(&a2, &[0, 1]).unwrap();
    let fusion_full = FusionData::from_parabolic(&a2, &full);
    for irr in &ta2.irreducibles {
        let r = restrict(&irr.values, &fusion_full);
        let back = decompose(&char_table(&full.group).unwrap(), &r).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].1, 1u32.into());
    }
}

#[test]
fn proposition_check_reports_match_expectations() {
    // The end-to-end checker on the spec's own example batch.
    let types: Vec<CartanType> = ["A2", "A3", "B2", "B3", "D4", "F4", "G2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let cfg = CheckConfig {
        k: Some(1),
        ..Default::default()
    };
    let reports = weylhc::hcseries::run_proposition_check(&types, &cfg);
    assert!(reports.iter().all(|r| r.matches_expectation));
    // And the documented exceptions.
    for (t, dim) in [("E7", 512u32), ("E8", 4096u32)] {
        let r = check_type(&t.parse().unwrap(), &CheckConfig::default());
        assert!(r.matches_expectation);
        assert_eq!(r.documented.unwrap().dimension, dim);
    }
}
