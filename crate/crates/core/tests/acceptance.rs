//! The acceptance gate: every criterion runs at its stated scale and time
//! budget and prints one pass/fail line (visible under `--nocapture`).

use lgc_core::bits::Subset;
use lgc_core::canonical::{enumerate_filters, is_prime_filter_set};
use lgc_core::gen::{gen_lattice, mix_seed, InstanceSpec, Kind};
use lgc_core::lattice::FiniteLattice;
use lgc_core::suite::{run_suite, SuiteName};
use lgc_core::Signature;
use std::time::{Duration, Instant};

fn criterion(name: &str, budget: Duration, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match &outcome {
        Ok(()) => println!("PASS {name} ({elapsed:.2?})"),
        Err(e) => println!("FAIL {name} ({elapsed:.2?}): {e}"),
    }
    if let Err(e) = outcome {
        panic!("{name}: {e}");
    }
    assert!(
        elapsed < budget,
        "{name} exceeded its {budget:?} budget: took {elapsed:?}"
    );
}

fn suite_criterion(
    name: &str,
    suite: SuiteName,
    count: usize,
    seed: u64,
    size: usize,
    budget: Duration,
) {
    criterion(name, budget, || {
        let summary =
            run_suite(suite, count, seed, size).map_err(|e| e.to_string())?;
        if summary.all_passed() {
            Ok(())
        } else {
            Err(summary.to_string())
        }
    });
}

#[test]
fn criterion_01_rough_adjunction() {
    // 50 seeded relations on a six-point universe, all subset pairs.
    suite_criterion(
        "criterion 1: rough adjunction",
        SuiteName::RoughAdjunction,
        50,
        101,
        6,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_02_complex_algebra_closure() {
    // 100 seeded frames on up to seven points: approximations stay
    // up-closed and the pair validates exhaustively.
    suite_criterion(
        "criterion 2: complex-algebra closure",
        SuiteName::FrameClosure,
        100,
        202,
        7,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_03_canonical_frame_and_star_equivalence() {
    // 1000 seeded algebras on posets of up to five points: compatibility
    // of the canonical frame and agreement of both relation clauses.
    suite_criterion(
        "criterion 3: canonical frame compatibility and clause equivalence",
        SuiteName::StarEquivalence,
        1000,
        303,
        5,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_04_finite_representation() {
    // 100 seeded HBGC instances: full law report plus surjectivity.
    suite_criterion(
        "criterion 4: finite canonical representation",
        SuiteName::CanonicalIso,
        100,
        404,
        5,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_05_spatial_representation() {
    // Same scale: the representation on join-irreducibles, plus agreement
    // of the spatial frame with the canonical frame.
    suite_criterion(
        "criterion 5: spatial representation",
        SuiteName::SpatialIso,
        100,
        505,
        5,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_06_galois_laws() {
    // 200 seeded algebras with carriers up to thirty-two elements.
    suite_criterion(
        "criterion 6: Galois connection laws",
        SuiteName::GaloisLaws,
        200,
        606,
        5,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_07_topology_roundtrip() {
    // Exhaustive in both directions for carriers of up to four points,
    // plus 100 seeded seven-point quasiorders one direction.
    suite_criterion(
        "criterion 7: topology/quasiorder round-trip",
        SuiteName::TopologyRoundtrip,
        100,
        707,
        7,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_08_rauszer_agreement() {
    // 50 seeded quasiorders on up to six points, all up-set pairs.
    suite_criterion(
        "criterion 8: up-set implication agreement",
        SuiteName::RauszerAgreement,
        50,
        808,
        6,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_09_identity_corpus() {
    // The four pair identities on generated algebras, plus the recorded
    // witness that meets need not be preserved.
    suite_criterion(
        "criterion 9: identity corpus",
        SuiteName::IdentityCorpus,
        200,
        909,
        5,
        Duration::from_secs(30),
    );
}

fn vee_closed(l: &FiniteLattice, s: Subset) -> bool {
    s.iter().all(|x| s.iter().all(|y| s.contains(l.join(x, y))))
}

#[test]
fn criterion_10_prime_filter_and_cofilter_lemmas() {
    criterion(
        "criterion 10: prime filter and co-filter lemmas",
        Duration::from_secs(30),
        || {
            let mut lattices_checked = 0;
            for index in 0..150u64 {
                let m = mix_seed(1010, index);
                let spec = InstanceSpec {
                    kind: Kind::Lattice,
                    size: 1 + (m as usize % 3),
                    seed: m,
                    density: ((m >> 8) % 101) as f64 / 100.0,
                    signature: Signature::Bdlgc,
                };
                let l = gen_lattice(&spec).map_err(|e| e.to_string())?;
                assert!(l.len() <= 8, "three-point posets have at most eight up-sets");
                let filters = enumerate_filters(&l).map_err(|e| e.to_string())?;
                let primes: Vec<Subset> = filters
                    .iter()
                    .copied()
                    .filter(|&s| is_prime_filter_set(&l, s))
                    .collect();

                // Prime filter separation: for a filter F and a outside it,
                // some prime filter extends F and still avoids a.
                for &f in &filters {
                    for a in 0..l.len() {
                        if f.contains(a) {
                            continue;
                        }
                        if !primes.iter().any(|&p| f.is_subset_of(p) && !p.contains(a)) {
                            return Err(format!(
                                "no prime filter separates {} from {} (seed {m})",
                                l.name(a),
                                f.render(l.carrier()),
                            ));
                        }
                    }
                }

                // Co-filter sandwich: a proper filter F under a superset Q
                // whose complement is join-closed admits a prime filter
                // between them.
                for &f in &filters {
                    if f.contains(l.bottom()) {
                        continue;
                    }
                    for qbits in 0..1u64 << l.len() {
                        let q = Subset::from_bits(l.len(), qbits);
                        if !f.is_subset_of(q) || !vee_closed(&l, q.complement()) {
                            continue;
                        }
                        if !primes.iter().any(|&p| f.is_subset_of(p) && p.is_subset_of(q)) {
                            return Err(format!(
                                "no prime filter sits between {} and {} (seed {m})",
                                f.render(l.carrier()),
                                q.render(l.carrier()),
                            ));
                        }
                    }
                }
                lattices_checked += 1;
            }
            assert_eq!(lattices_checked, 150);
            Ok(())
        },
    );
}
