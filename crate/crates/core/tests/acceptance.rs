//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (`cargo test --test acceptance -- --nocapture` to see the
//! lines as they run). All checks are exact; there are no tolerances.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use workbench_core::{
    build_tau, center_of_radical, decompose_elementary, enumerate_theta, ideal_generated,
    io, linalg, radical_power_basis, AlgebraElement, BasisBijection, BasisVector,
    CoefficientVector, ElementaryTriple, Field, LinearMap, ProperKind, Scalar, SigmaMap,
};

const Q: Field = Field::Rational;
const F3: Field = Field::Prime(3);
const F5: Field = Field::Prime(5);
const F7: Field = Field::Prime(7);

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn criterion(number: usize, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {number} ({name}): PASS"),
        Err(msg) => {
            println!("criterion {number} ({name}): FAIL - {msg}");
            panic!("criterion {number} ({name}) failed: {msg}");
        }
    }
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path:?}: {e}"))
}

#[test]
fn criterion_1_final_example_reproduction() {
    criterion(1, "final-example reproduction", || {
        let file = io::parse_poset_file(&fixture("kite.poset")).map_err(|e| e.to_string())?;
        let p = &file.poset;
        let phi =
            io::parse_map_file(p, file.field, &fixture("kite_phi.map")).map_err(|e| e.to_string())?;
        ensure!(phi.is_lie_automorphism(), "fixture map is not a Lie automorphism");
        ensure!(phi.is_elementary(), "fixture map is not elementary");

        let triple = decompose_elementary(&phi).map_err(|e| e.to_string())?;
        let expected_theta = BasisBijection::new(
            p,
            BTreeMap::from([
                ((0, 1), (1, 2)),
                ((1, 2), (0, 1)),
                ((0, 2), (0, 2)),
                ((0, 3), (0, 3)),
            ]),
        )
        .unwrap();
        ensure!(triple.theta() == &expected_theta, "wrong theta");
        let expected_sigma = SigmaMap::new(
            p.as_ref(),
            Q,
            BTreeMap::from([
                ((0, 1), Q.integer(1)),
                ((1, 2), Q.integer(1)),
                ((0, 2), Q.integer(-1)),
                ((0, 3), Q.integer(1)),
            ]),
        )
        .unwrap();
        ensure!(triple.sigma() == &expected_sigma, "wrong sigma");
        let expected_c = CoefficientVector::new(
            Q,
            vec![Q.integer(0), Q.integer(1), Q.integer(0), Q.integer(0)],
        )
        .unwrap();
        ensure!(triple.c() == &expected_c, "wrong c");

        let verdict = phi.is_proper().map_err(|e| e.to_string())?;
        ensure!(verdict.is_none(), "fixture map must not be proper");
        Ok(())
    });
}

#[test]
fn criterion_2_two_crown_admissibility() {
    criterion(2, "two-crown admissibility", || {
        let p = two_crown();
        let theta = BasisBijection::new(
            &p,
            BTreeMap::from([
                ((0, 2), (0, 3)),
                ((0, 3), (0, 2)),
                ((1, 2), (1, 2)),
                ((1, 3), (1, 3)),
            ]),
        )
        .unwrap();
        let cycles = p.enumerate_cycles();
        ensure!(cycles.len() == 1, "expected exactly one cycle class");
        let walk = cycles[0].as_walk();
        ensure!(
            walk.vertices() == [0, 2, 1, 3, 0],
            "unexpected canonical cycle"
        );
        let at_3 = theta.st_counters(&walk, 2).map_err(|e| e.to_string())?;
        ensure!(at_3.tuple() == (0, 0, 0, 2), "counters at 3: {:?}", at_3.tuple());
        let at_1 = theta.st_counters(&walk, 0).map_err(|e| e.to_string())?;
        ensure!(at_1.tuple() == (1, 1, 0, 0), "counters at 1: {:?}", at_1.tuple());
        ensure!(!theta.is_admissible(), "theta must not be admissible");
        Ok(())
    });
}

fn chain_flip(p: &std::sync::Arc<workbench_core::FinitePoset>) -> BasisBijection {
    let n = p.size();
    let mapping = p
        .strict_pairs()
        .into_iter()
        .map(|(x, y)| ((x, y), (n - 1 - y, n - 1 - x)))
        .collect();
    BasisBijection::new(p, mapping).unwrap()
}

#[test]
fn criterion_3_chain_properness() {
    criterion(3, "chain properness", || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [3usize, 4] {
            let p = chain(n);
            for field in [Q, F7] {
                for theta in [BasisBijection::identity(&p), chain_flip(&p)] {
                    for round in 0..25 {
                        let sigma = random_sigma(&mut rng, &theta, field);
                        let c = random_c(&mut rng, field, n);
                        let triple =
                            ElementaryTriple::new(theta.clone(), sigma, c).map_err(|e| e.to_string())?;
                        let tau = build_tau(&triple);
                        ensure!(
                            tau.is_lie_automorphism(),
                            "tau not a Lie automorphism (n={n}, {field}, round {round})"
                        );
                        let witness = tau.is_proper().map_err(|e| e.to_string())?;
                        ensure!(
                            witness.is_some(),
                            "tau not proper (n={n}, {field}, round {round})"
                        );
                        let witness = witness.unwrap();
                        let expected_kind = if theta == BasisBijection::identity(&p) {
                            ProperKind::Automorphism
                        } else {
                            ProperKind::NegativeOfAntiAutomorphism
                        };
                        ensure!(
                            witness.kind == expected_kind,
                            "unexpected witness kind (n={n}, {field}, round {round})"
                        );
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_semidirect_decomposition() {
    criterion(4, "semidirect decomposition", || {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for p in [kite(), chain(4), two_crown()] {
            let mut previous: Option<LinearMap> = None;
            for round in 0..50 {
                let unit = random_inner_unit(&mut rng, &p, F5);
                let triple = random_triple(&mut rng, &p, F5);
                let tau = build_tau(&triple);
                let m = unit.conjugation().compose(&tau).unwrap();
                let (unit2, tau2) = m.decompose_inner_elementary().map_err(|e| e.to_string())?;
                ensure!(
                    unit2.beta() == unit.beta(),
                    "unit not recovered exactly (round {round})"
                );
                ensure!(tau2 == tau, "elementary part not recovered (round {round})");

                if let Some(prev) = previous.take() {
                    let composed = prev.compose(&m).unwrap();
                    let lhs = composed.tilde().map_err(|e| e.to_string())?;
                    let rhs = prev
                        .tilde()
                        .unwrap()
                        .compose(&m.tilde().unwrap())
                        .unwrap();
                    ensure!(lhs == rhs, "tilde is not multiplicative (round {round})");
                }
                previous = Some(m);
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_radical_filtration_exhaustive() {
    criterion(5, "radical filtration on all posets up to 6 elements", || {
        let posets = connected_posets_up_to(6);
        ensure!(posets.len() > 1000, "generator produced too few posets");
        for p in &posets {
            let n = p.size();
            for m in 1..=n {
                let by_length: BTreeSet<(usize, usize)> = radical_power_basis(p, m)
                    .iter()
                    .map(BasisVector::pair)
                    .collect();
                let by_products = radical_power_pairs_oracle(p, m);
                ensure!(
                    by_length == by_products,
                    "power {m} mismatch on a poset with {n} elements"
                );
            }
            ensure!(
                radical_power_basis(p, n).is_empty(),
                "J_n nonzero on a poset with {n} elements"
            );
        }
        // Tie the pair-level oracle to the actual algebra product on the
        // smaller posets.
        for p in connected_posets_up_to(4) {
            for m in 1..=p.size() {
                ensure!(
                    radical_power_pairs_oracle(p.as_ref(), m)
                        == radical_power_pairs_by_multiplication(&p, F3, m),
                    "pair oracle disagrees with multiplication closure"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_lie_ideals_are_ideals() {
    criterion(6, "Lie ideal closure equals generated ideal", || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let posets = connected_posets_up_to(5);
        let pool: Vec<_> = posets.iter().filter(|p| p.size() >= 2).collect();
        for round in 0..100 {
            let p = pool[rng.gen_range(0..pool.len())].clone();
            let count = rng.gen_range(1..=3);
            let generators: Vec<AlgebraElement> = (0..count)
                .map(|_| random_radical_element(&mut rng, &p, F3))
                .collect();
            let closure = lie_closure_rows(&p, F3, &generators);
            let pairs = p.all_pairs();
            let ideal_rows: Vec<Vec<Scalar>> = ideal_generated(&p, &generators)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|b| {
                    AlgebraElement::basis(&p, F3, b.x, b.y)
                        .unwrap()
                        .coordinates(&pairs)
                })
                .collect();
            ensure!(
                linalg::same_span(&closure, &ideal_rows),
                "closure and generated ideal differ (round {round})"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_7_radical_center_exhaustive() {
    criterion(7, "radical centre on all posets up to 6 elements", || {
        for p in connected_posets_up_to(6) {
            let strict = p.strict_pairs();
            let commutant = radical_commutant_rows(&p, F3);
            let center_rows: Vec<Vec<Scalar>> = center_of_radical(&p)
                .iter()
                .map(|b| {
                    strict
                        .iter()
                        .map(|&pair| if pair == b.pair() { F3.one() } else { F3.zero() })
                        .collect()
                })
                .collect();
            ensure!(
                linalg::same_span(&commutant, &center_rows),
                "centre mismatch on a poset with {} elements",
                p.size()
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_8_round_trips() {
    criterion(8, "triple/map round trips", || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let stations = [(kite(), Q), (two_crown(), F5), (chain(4), F7)];
        for round in 0..102 {
            let (p, field) = &stations[round % stations.len()];
            let triple = random_triple(&mut rng, p, *field);
            let tau = build_tau(&triple);
            let recovered = decompose_elementary(&tau).map_err(|e| e.to_string())?;
            ensure!(recovered == triple, "triple not recovered (round {round})");

            // The reverse direction on an elementary map not built directly:
            // the leading part of inner . tau.
            let unit = random_inner_unit(&mut rng, p, *field);
            let m = unit.conjugation().compose(&tau).unwrap();
            let elementary = m.tilde().map_err(|e| e.to_string())?;
            let t2 = decompose_elementary(&elementary).map_err(|e| e.to_string())?;
            ensure!(
                build_tau(&t2) == elementary,
                "map not rebuilt exactly (round {round})"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_9_enumeration_fixtures() {
    criterion(9, "theta enumeration fixtures", || {
        let kite_thetas = enumerate_theta(&kite()).map_err(|e| e.to_string())?;
        ensure!(kite_thetas.len() == 2, "kite count {} != 2", kite_thetas.len());
        let chain_thetas = enumerate_theta(&chain(3)).map_err(|e| e.to_string())?;
        ensure!(chain_thetas.len() == 2, "3-chain count {} != 2", chain_thetas.len());

        let crown = two_crown();
        let crown_thetas = enumerate_theta(&crown).map_err(|e| e.to_string())?;
        // Frozen brute-force value: of the 24 level-preserving bijections of
        // the crown basis, exactly 8 balance the counters on the 4-cycle.
        ensure!(crown_thetas.len() == 8, "crown count {} != 8", crown_thetas.len());

        // Cross-check the frozen value with the independent oracle route.
        let walks = closed_walks_up_to(&crown, 8);
        let oracle_count = all_level_preserving_bijections(&crown)
            .into_iter()
            .filter(|table| {
                oracle_monotone(&crown, table) && oracle_admissible_by_walks(&crown, table, &walks)
            })
            .count();
        ensure!(
            oracle_count == crown_thetas.len(),
            "oracle count {oracle_count} disagrees"
        );
        Ok(())
    });
}
