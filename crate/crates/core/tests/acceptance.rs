//! Acceptance suite: the release gate for the calculator.
//!
//! Each criterion is one test that ends by printing a PASS line; a failing
//! assertion is the corresponding FAIL. Worked totals are exact, the
//! enumeration is checked against an independent Lyndon-word oracle, and
//! the Hom/Ext closed forms are checked against exhaustive homomorphism
//! counting.

mod common;

use itertools::Itertools;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wedge_aut::engine::FactorKind;
use wedge_aut::{
    aut_order, aut_order_with, basic_commutators, count_by_weight, parse_summand, AbelianGroup,
    EngineOptions, ExtOrder, GroupTable, SuspendedSummand, WedgeInput,
};

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wedge-aut").chain(args.iter().copied());
    let code = wedge_aut::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json_report(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, err) = run_cli(&full);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn criterion_01_s2_wedge_moore_totals_32_with_reducibility_checked() {
    let report = json_report(&["S2 v M(2,2)"]);
    assert_eq!(report["total"]["finite"].as_u64(), Some(32));
    assert_eq!(report["reducibility"]["mode"], "checked");
    println!("criterion 1: PASS — S2 v M(2,2) totals 32, reducibility checked");
}

#[test]
fn criterion_02_s3_wedge_moore_totals_32() {
    let report = json_report(&["S3 v M(2,2)"]);
    assert_eq!(report["total"]["finite"].as_u64(), Some(32));
    println!("criterion 2: PASS — S3 v M(2,2) totals 32");
}

#[test]
fn criterion_03_s3_wedge_s2_is_infinite() {
    let report = json_report(&["S3 v S2"]);
    assert_eq!(report["total"], serde_json::json!("infinite"));
    println!("criterion 3: PASS — S3 v S2 is infinite");
}

#[test]
fn criterion_04_s4_wedge_s3_totals_8() {
    let report = json_report(&["S4 v S3"]);
    assert_eq!(report["total"]["finite"].as_u64(), Some(8));
    println!("criterion 4: PASS — S4 v S3 totals 8");
}

#[test]
fn criterion_05_stable_three_sphere_wedge_totals_16() {
    let report = json_report(&["S12 v S11 v S7"]);
    assert_eq!(report["total"]["finite"].as_u64(), Some(16));
    println!("criterion 5: PASS — S12 v S11 v S7 totals 16");
}

#[test]
fn criterion_06_low_three_sphere_wedge_totals_384_with_note() {
    let report = json_report(&["S6 v S5 v S3"]);
    assert_eq!(report["total"]["finite"].as_u64(), Some(384));
    let notes = report["notes"].as_array().unwrap();
    assert!(!notes.is_empty(), "divergence note expected");
    println!("criterion 6: PASS — S6 v S5 v S3 totals 384 and the notes array is nonempty");
}

#[test]
fn criterion_07_hall_counts_equal_witt_numbers_and_lyndon_counts() {
    for k in 1..=4usize {
        let q = basic_commutators(k, 6);
        for w in 1..=6u32 {
            let enumerated = q.iter().filter(|c| c.weight() == w).count() as u64;
            let witt = count_by_weight(k, w);
            let lyndon = common::lyndon_count(k, w);
            assert_eq!(BigUint::from(enumerated), witt, "witt k={k} w={w}");
            assert_eq!(enumerated, lyndon, "lyndon k={k} w={w}");
        }
    }
    println!("criterion 7: PASS — basic-commutator counts equal Witt numbers and Lyndon-word counts for k <= 4, w <= 6");
}

fn sample_pool() -> Vec<SuspendedSummand> {
    let mut pool = Vec::new();
    for n in 2..=9 {
        pool.push(parse_summand(&format!("S{n}")).unwrap());
    }
    for n in 2..=5 {
        pool.push(parse_summand(&format!("M(2,{n})")).unwrap());
    }
    pool
}

fn random_wedges(count: usize, seed: u64) -> Vec<WedgeInput> {
    let pool = sample_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(2..=4);
            let summands = (0..k)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            WedgeInput::new(summands).unwrap()
        })
        .collect()
}

#[test]
fn criterion_08_totals_are_permutation_invariant() {
    let table = GroupTable::bundled();
    for wedge in random_wedges(100, 0xA11CE) {
        let base = aut_order(&wedge, &table, true).unwrap().total;
        let k = wedge.summands().len();
        for perm in (0..k).permutations(k) {
            let permuted = WedgeInput::new(
                perm.iter().map(|&i| wedge.summands()[i].clone()).collect(),
            )
            .unwrap();
            let total = aut_order(&permuted, &table, true).unwrap().total;
            assert_eq!(total, base, "wedge {wedge} under permutation {perm:?}");
        }
    }
    println!("criterion 8: PASS — 100 random wedges have permutation-invariant totals");
}

#[test]
fn criterion_09_totals_are_stable_above_the_weight_bound() {
    let table = GroupTable::bundled();
    for wedge in random_wedges(100, 0xA11CE) {
        let base = aut_order(&wedge, &table, true).unwrap();
        let raised = aut_order_with(
            &wedge,
            &table,
            &EngineOptions {
                assume_reducible: true,
                max_weight: Some(base.max_weight + 3),
                include_trivial: false,
            },
        )
        .unwrap();
        assert_eq!(raised.total, base.total, "wedge {wedge}");
    }
    println!("criterion 9: PASS — forcing the weight bound 3 higher never changes a total");
}

#[test]
fn criterion_10_sphere_pairs_in_low_range_have_trivial_higher_factors() {
    let table = GroupTable::bundled();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for _ in 0..60 {
        // Both spheres (n-1)-connected with dimensions <= n + k, k <= n - 2.
        let n = rng.gen_range(3u32..=9);
        let k = rng.gen_range(0..=n - 2);
        let a = rng.gen_range(n..=n + k);
        let b = rng.gen_range(n..=n + k);
        let wedge = WedgeInput::new(vec![
            parse_summand(&format!("S{a}")).unwrap(),
            parse_summand(&format!("S{b}")).unwrap(),
        ])
        .unwrap();
        let report = aut_order_with(
            &wedge,
            &table,
            &EngineOptions {
                assume_reducible: true,
                max_weight: None,
                include_trivial: true,
            },
        )
        .unwrap();
        for factor in &report.factors {
            if factor.kind == FactorKind::HigherCommutator {
                assert!(
                    factor.order.is_one(),
                    "S{a} v S{b}: weight >= 2 factor {:?} should be trivial",
                    factor.commutator
                );
            }
        }
    }
    println!("criterion 10: PASS — sphere pairs within the metastable range have only trivial higher-commutator factors");
}

#[test]
fn criterion_11_undetermined_reducibility_exits_3_and_computes_nothing() {
    let (code, out, err) = run_cli(&["S3 v S3"]);
    assert_eq!(code, 3);
    assert!(out.is_empty(), "report stream must stay empty");
    assert!(err.contains("(1, 2)"), "failing pair must be named: {err}");
    println!("criterion 11: PASS — S3 v S3 exits with code 3 and an empty report stream");
}

#[test]
fn criterion_12_hom_and_ext_match_exhaustive_counting() {
    let groups = common::small_groups(12);
    assert!(groups.len() > 15);
    let to_group = |cyclic: &[u64]| {
        AbelianGroup::from_cyclic_factors(0, cyclic.iter().map(|&d| BigUint::from(d)))
    };
    for a in &groups {
        for b in &groups {
            let ga = to_group(a);
            let gb = to_group(b);

            let hom = ga.hom(&gb);
            assert_eq!(
                hom.order(),
                ExtOrder::finite(common::hom_count(a, b)),
                "Hom({ga}, {gb})"
            );
            // Pin the group structure, not just the order: the number of
            // homomorphisms killed by each m determines the isomorphism
            // class. A hom is killed by m iff every generator image is.
            let hom_factors: Vec<u64> = hom
                .invariant_factors()
                .iter()
                .map(|d| u64::try_from(d).unwrap())
                .collect();
            let order = common::group_size(&hom_factors);
            for m in 1..=order {
                let brute: u64 = a
                    .iter()
                    .map(|&d| {
                        common::elements(b)
                            .iter()
                            .filter(|x| {
                                x.iter()
                                    .zip(b)
                                    .all(|(xi, di)| (d * xi) % di == 0 && (m * xi) % di == 0)
                            })
                            .count() as u64
                    })
                    .product();
                assert_eq!(
                    common::killed_count(&hom_factors, m),
                    brute,
                    "m-torsion of Hom({ga}, {gb}) at m={m}"
                );
            }

            let ext = ga.ext(&gb);
            assert_eq!(
                ext.order(),
                ExtOrder::finite(common::ext_count(a, b)),
                "Ext({ga}, {gb})"
            );
        }
    }

    // Rank-1 cases.
    let z = AbelianGroup::free(1);
    for b in &groups {
        let gb = to_group(b);
        // Hom(Z, B) = B; the generator image is a free choice.
        assert_eq!(z.hom(&gb), gb);
        assert_eq!(
            z.hom(&gb).order(),
            ExtOrder::finite(common::elements(b).len() as u64)
        );
        // Hom(B, Z) = 0: d·x = 0 has only x = 0 over the integers.
        for &d in b {
            let solutions = (-50i64..=50).filter(|x| (d as i64) * x == 0).count();
            assert_eq!(solutions, 1);
        }
        assert!(gb.hom(&z).is_trivial());
        // Ext(Z, B) = 0 because Z is free.
        assert!(z.ext(&gb).is_trivial());
        // Ext(B, Z) = B: multiplication by d on Z has cokernel Z/d.
        assert_eq!(gb.ext(&z), gb);
    }
    println!("criterion 12: PASS — Hom/Ext closed forms match exhaustive counting for all groups of order <= 12 plus rank-1 cases");
}
