//! Named property suites over seeded instance batches.
//!
//! Each suite generates `count` instances from a base seed, verifies one
//! family of laws on every instance independently (instances run across
//! worker threads; the summary is reduced in index order), and reports
//! pass/fail counts plus the first failing instance as a replayable
//! document together with the violated law's name.

use crate::bits::Subset;
use crate::canonical::{
    canonical_frame, prime_filters, star_alternative, star_primary, verify_embedding,
    verify_finite_iso,
};
use crate::doc::{self, Object};
use crate::frame::{ComplexAlgebra, GCFrame};
use crate::galois::{left_adjoint_of, preserves_joins, preserves_meets, right_adjoint_of};
use crate::gen::{
    element_names, gen_algebra, gen_frame, gen_quasiorder, mix_seed, GenError, InstanceSpec, Kind,
};
use crate::order::{rauszer_coimplication, rauszer_implication, upsets, QuasiOrder, UpSetFamily};
use crate::spatial::{frames_agree, verify_representation};
use crate::term::{check_identity, parse_identity, Verdict};
use crate::Signature;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown suite '{0}'; expected one of: {names}", names = SuiteName::ALL.map(|s| s.as_str()).join(", "))]
    UnknownSuite(String),
    #[error(transparent)]
    Gen(#[from] GenError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    GaloisLaws,
    RoughAdjunction,
    FrameClosure,
    CanonicalIso,
    SpatialIso,
    StarEquivalence,
    TopologyRoundtrip,
    RauszerAgreement,
    IdentityCorpus,
}

impl SuiteName {
    pub const ALL: [SuiteName; 9] = [
        SuiteName::GaloisLaws,
        SuiteName::RoughAdjunction,
        SuiteName::FrameClosure,
        SuiteName::CanonicalIso,
        SuiteName::SpatialIso,
        SuiteName::StarEquivalence,
        SuiteName::TopologyRoundtrip,
        SuiteName::RauszerAgreement,
        SuiteName::IdentityCorpus,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::GaloisLaws => "galois-laws",
            SuiteName::RoughAdjunction => "rough-adjunction",
            SuiteName::FrameClosure => "frame-closure",
            SuiteName::CanonicalIso => "canonical-iso",
            SuiteName::SpatialIso => "spatial-iso",
            SuiteName::StarEquivalence => "star-equivalence",
            SuiteName::TopologyRoundtrip => "topology-roundtrip",
            SuiteName::RauszerAgreement => "rauszer-agreement",
            SuiteName::IdentityCorpus => "identity-corpus",
        }
    }
}

impl FromStr for SuiteName {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        SuiteName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// The violated law and a document that replays the failing instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteFailure {
    pub index: usize,
    pub law: String,
    pub document: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSummary {
    pub name: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<SuiteFailure>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "first_failure": self.first_failure.as_ref().map(|f| json!({
                "index": f.index,
                "law": f.law,
                "document": f.document,
            })),
        })
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite {}: {}/{} passed", self.name, self.passed, self.total)?;
        if let Some(failure) = &self.first_failure {
            write!(
                f,
                "\nfirst failure at instance {}: {}\n{}",
                failure.index, failure.law, failure.document
            )?;
        }
        Ok(())
    }
}

struct Failure {
    law: String,
    document: String,
}

fn fail(law: impl Into<String>, object: &Object) -> Failure {
    Failure { law: law.into(), document: doc::serialize(object) }
}

/// A recorded algebra on which `f` fails to preserve meets: both atoms of
/// the four-element Boolean lattice map to the top, so
/// `f(a & b) = 0` while `f(a) & f(b) = 1`.
pub const MEET_COUNTEREXAMPLE_DOC: &str = r#"{
  "elements": ["0", "a", "b", "1"],
  "f": {"0": "0", "1": "1", "a": "1", "b": "1"},
  "g": {"0": "0", "1": "1", "a": "0", "b": "0"},
  "order": [
    ["0", "0"], ["0", "1"], ["0", "a"], ["0", "b"],
    ["1", "1"], ["a", "1"], ["a", "a"], ["b", "1"], ["b", "b"]
  ],
  "signature": "BDLGC",
  "type": "algebra"
}
"#;

/// Runs the named suite on `count` generated instances.
pub fn run_suite(
    name: SuiteName,
    count: usize,
    seed: u64,
    size: usize,
) -> Result<SuiteSummary, SuiteError> {
    if size == 0 {
        return Err(SuiteError::Gen(GenError::BadSpec(
            "suite size must be at least 1".into(),
        )));
    }
    let check: Box<dyn Fn(usize) -> Result<(), Failure> + Sync> = match name {
        SuiteName::GaloisLaws => Box::new(move |i| galois_laws(seed, size, i)),
        SuiteName::RoughAdjunction => Box::new(move |i| rough_adjunction(seed, size, i)),
        SuiteName::FrameClosure => Box::new(move |i| frame_closure(seed, size, i)),
        SuiteName::CanonicalIso => Box::new(move |i| canonical_iso(seed, size, i)),
        SuiteName::SpatialIso => Box::new(move |i| spatial_iso(seed, size, i)),
        SuiteName::StarEquivalence => Box::new(move |i| star_equivalence(seed, size, i)),
        SuiteName::TopologyRoundtrip => Box::new(move |i| topology_roundtrip(seed, size, i)),
        SuiteName::RauszerAgreement => Box::new(move |i| rauszer_agreement(seed, size, i)),
        SuiteName::IdentityCorpus => Box::new(move |i| identity_corpus(seed, size, count, i)),
    };
    let total = match name {
        // The round-trip suite prepends ten exhaustive sweeps (two
        // directions over all carriers of size 0..=4).
        SuiteName::TopologyRoundtrip => count + 10,
        // The corpus suite appends the recorded counterexample check.
        SuiteName::IdentityCorpus => count + 1,
        _ => count,
    };

    let results: Vec<Result<(), Failure>> =
        (0..total).into_par_iter().map(|i| check(i)).collect();
    let failed = results.iter().filter(|r| r.is_err()).count();
    let first_failure = results.iter().enumerate().find_map(|(index, r)| {
        r.as_ref().err().map(|f| SuiteFailure {
            index,
            law: f.law.clone(),
            document: f.document.clone(),
        })
    });
    Ok(SuiteSummary {
        name: name.as_str().to_string(),
        total,
        passed: total - failed,
        failed,
        first_failure,
    })
}

fn instance_spec(kind: Kind, seed: u64, size: usize, index: usize) -> InstanceSpec {
    let m = mix_seed(seed, index as u64);
    InstanceSpec {
        kind,
        size: 1 + (m as usize % size),
        seed: m,
        density: ((m >> 8) % 100) as f64 / 100.0,
        signature: Signature::Hbgc,
    }
}

fn galois_laws(seed: u64, size: usize, index: usize) -> Result<(), Failure> {
    let spec = instance_spec(Kind::Algebra, seed, size, index);
    let pair = gen_algebra(&spec).expect("spec is within generator bounds");
    let object = Object::Algebra { pair, signature: Signature::Bdlgc };
    let Object::Algebra { pair, .. } = &object else { unreachable!() };
    let l = pair.lattice();
    for x in 0..l.len() {
        if pair.f_at(pair.g_at(pair.f_at(x))) != pair.f_at(x) {
            return Err(fail("f.g.f = f", &object));
        }
        if pair.g_at(pair.f_at(pair.g_at(x))) != pair.g_at(x) {
            return Err(fail("g.f.g = g", &object));
        }
    }
    if !preserves_joins(l, pair.f(), 10) {
        return Err(fail("f preserves joins", &object));
    }
    if !preserves_meets(l, pair.g(), 10) {
        return Err(fail("g preserves meets", &object));
    }
    // Sampled subset joins/meets beyond the exhaustive bound.
    if l.len() > 10 {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(spec.seed, 0x5a17));
        for _ in 0..2000 {
            let subset: Vec<usize> = (0..l.len()).filter(|_| rng.gen::<bool>()).collect();
            let joined = l.join_all(subset.iter().copied());
            if pair.f_at(joined) != l.join_all(subset.iter().map(|&x| pair.f_at(x))) {
                return Err(fail("f preserves sampled joins", &object));
            }
            let met = l.meet_all(subset.iter().copied());
            if pair.g_at(met) != l.meet_all(subset.iter().map(|&x| pair.g_at(x))) {
                return Err(fail("g preserves sampled meets", &object));
            }
        }
    }
    if right_adjoint_of(l, pair.f()).ok().as_deref() != Some(pair.g()) {
        return Err(fail("right adjoint round-trip", &object));
    }
    if left_adjoint_of(l, pair.g()).ok().as_deref() != Some(pair.f()) {
        return Err(fail("left adjoint round-trip", &object));
    }
    Ok(())
}

fn rough_adjunction(seed: u64, size: usize, index: usize) -> Result<(), Failure> {
    let m = mix_seed(seed, index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(m);
    let density = ((m >> 8) % 101) as f64 / 100.0;
    let n = size;
    let mut rows = vec![Subset::empty(n); n];
    for x in 0..n {
        for y in 0..n {
            if rng.gen_bool(density) {
                rows[x].insert(y);
            }
        }
    }
    // An arbitrary relation over a discrete order is a valid frame, which
    // makes the failing instance replayable as a document.
    let frame = GCFrame::validate(QuasiOrder::discrete(element_names(n)), rows.clone())
        .expect("discrete orders accept any relation");
    let space = frame.approximation_space();
    for abits in 0..1u64 << n {
        for bbits in 0..1u64 << n {
            let a = Subset::from_bits(n, abits);
            let b = Subset::from_bits(n, bbits);
            if space.upper(a).is_subset_of(b) != a.is_subset_of(space.lower(b)) {
                return Err(fail(
                    format!(
                        "upper({}) ⊆ {} iff {} ⊆ lower({})",
                        a.render(space.universe()),
                        b.render(space.universe()),
                        a.render(space.universe()),
                        b.render(space.universe())
                    ),
                    &Object::Frame(frame),
                ));
            }
        }
    }
    Ok(())
}

fn frame_closure(seed: u64, size: usize, index: usize) -> Result<(), Failure> {
    let spec = instance_spec(Kind::Frame, seed, size, index);
    let frame = gen_frame(&spec).expect("spec is within generator bounds");
    let object = Object::Frame(frame.clone());
    let family = upsets(frame.order()).expect("frame carrier is small");
    let space = frame.approximation_space();
    for &s in family.sets() {
        if !frame.order().is_up_closed(space.upper(s)) {
            return Err(fail("upper approximation stays up-closed", &object));
        }
        if !frame.order().is_up_closed(space.lower(s)) {
            return Err(fail("lower approximation stays up-closed", &object));
        }
    }
    let algebra = match ComplexAlgebra::build(frame, Signature::Bdlgc) {
        Ok(a) => a,
        Err(e) => return Err(fail(format!("complex algebra construction: {e}"), &object)),
    };
    if let Err(e) = algebra.as_galois_pair() {
        return Err(fail(format!("approximation pair adjunction: {e}"), &object));
    }
    Ok(())
}

fn canonical_iso(seed: u64, size: usize, index: usize) -> Result<(), Failure> {
    let spec = instance_spec(Kind::Algebra, seed, size, index);
    let pair = gen_algebra(&spec).expect("spec is within generator bounds");
    let object = Object::Algebra { pair: pair.clone(), signature: Signature::Hbgc };
    match verify_embedding(&pair, Signature::Hbgc) {
        Ok(report) => {
            if let Some(failure) = report.first_failure() {
                return Err(fail(failure.law.clone(), &object));
            }
        }
        Err(e) => return Err(fail(format!("embedding verification: {e}"), &object)),
    }
    match verify_finite_iso(&pair, Signature::Hbgc) {
        Ok(true) => Ok(()),
        Ok(false) => Err(fail("surjectivity onto the canonical complex algebra", &object)),
        Err(e) => Err(fail(format!("isomorphism verification: {e}"), &object)),
    }
}

fn spatial_iso(seed: u64, size: usize, index: usize) -> Result<(), Failure> {
    let spec = instance_spec(Kind::Algebra, seed, size, index);
    let pair = gen_algebra(&spec).expect("spec is within generator bounds");
    let object = Object::Algebra { pair: pair.clone(), signature: Signature::Hbgc };
    match verify_representation(&pair, Signature::Hbgc) {
        Ok(report) => {
            if let Some(failure) = report.first_failure() {
                return Err(fail(failure.law.clone(), &object));
            }
        }
        Err(e) => return Err(fail(format!("representation verification: {e}"), &object)),
    }
    match frames_agree(&pair) {
        Ok(true) => Ok(()),
        Ok(false) => Err(fail("spatial and canonical frames agree", &object)),
        Err(e) => Err(fail(format!("frame comparison: {e}"), &object)),
    }
}

fn star_equivalence(seed: u64, size: usize, index: usize) -> Result<(), Failure> {
    let spec = instance_spec(Kind::Algebra, seed, size, index);
    let pair = gen_algebra(&spec).expect("spec is within generator bounds");
    let object = Object::Algebra { pair: pair.clone(), signature: Signature::Bdlgc };
    if let Err(e) = canonical_frame(&pair) {
        return Err(fail(format!("canonical frame compatibility: {e}"), &object));
    }
    let filters = prime_filters(pair.lattice()).expect("generated lattices are distributive");
    for p in &filters {
        for q in &filters {
            if star_primary(&pair, p, q) != star_alternative(&pair, p, q) {
                return Err(fail(
                    format!(
                        "canonical relation clauses agree at (^{}, ^{})",
                        pair.lattice().name(p.generator()),
                        pair.lattice().name(q.generator())
                    ),
                    &object,
                ));
            }
        }
    }
    Ok(())
}

fn quasiorder_object(q: &QuasiOrder) -> Object {
    // Quasiorders travel as frames with an empty relation, which any
    // quasiorder supports.
    let n = q.len();
    let frame = GCFrame::validate(q.clone(), vec![Subset::empty(n); n])
        .expect("empty relation is compatible");
    Object::Frame(frame)
}

fn roundtrip_order(q: &QuasiOrder) -> Result<(), Failure> {
    let family = match upsets(q) {
        Ok(f) => f,
        Err(e) => return Err(fail(format!("up-set enumeration: {e}"), &quasiorder_object(q))),
    };
    if family.specialization_order() != *q {
        return Err(fail("specialization of up-sets returns the order", &quasiorder_object(q)));
    }
    Ok(())
}

fn roundtrip_family(carrier: Vec<String>, sets: Vec<Subset>) -> Result<(), Failure> {
    let family = UpSetFamily::validate(carrier, sets).expect("enumerated families are Alexandrov");
    let back = upsets(&family.specialization_order())
        .expect("family carriers are small");
    if back.sets() != family.sets() {
        return Err(fail(
            "up-sets of the specialization order return the family",
            &quasiorder_object(family.base()),
        ));
    }
    Ok(())
}

/// All quasiorders on a carrier of `n` labeled points.
pub fn all_quasiorders(n: usize) -> Vec<QuasiOrder> {
    let offdiag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let names = element_names(n);
    let mut out = Vec::new();
    for bits in 0..1u64 << offdiag.len() {
        let mut rows: Vec<Subset> = (0..n).map(|i| Subset::singleton(n, i)).collect();
        for (k, &(i, j)) in offdiag.iter().enumerate() {
            if bits >> k & 1 == 1 {
                rows[i].insert(j);
            }
        }
        if let Ok(q) = QuasiOrder::validate(names.clone(), rows) {
            out.push(q);
        }
    }
    out
}

/// All families of subsets of an `n`-point carrier containing the empty set
/// and the carrier and closed under union and intersection.
pub fn all_alexandrov_families(n: usize) -> Vec<Vec<Subset>> {
    assert!(n <= 4, "exhaustive family enumeration is bounded at 4 points");
    let m = 1usize << n;
    let full = m - 1;
    let mut out = Vec::new();
    for fam in 0..1u32 << m {
        if fam & 1 == 0 || fam >> full & 1 == 0 {
            continue;
        }
        let mut closed = true;
        'pairs: for s in 0..m {
            if fam >> s & 1 == 0 {
                continue;
            }
            for t in s + 1..m {
                if fam >> t & 1 == 0 {
                    continue;
                }
                if fam >> (s | t) & 1 == 0 || fam >> (s & t) & 1 == 0 {
                    closed = false;
                    break 'pairs;
                }
            }
        }
        if closed {
            out.push(
                (0..m)
                    .filter(|&s| fam >> s & 1 == 1)
                    .map(|s| Subset::from_bits(n, s as u64))
                    .collect(),
            );
        }
    }
    out
}

fn topology_roundtrip(seed: u64, size: usize, index: usize) -> Result<(), Failure> {
    if index < 5 {
        // Exhaustive quasiorder direction on carriers of size `index`.
        for q in all_quasiorders(index) {
            roundtrip_order(&q)?;
        }
        return Ok(());
    }
    if index < 10 {
        let n = index - 5;
        let names = element_names(n);
        for sets in all_alexandrov_families(n) {
            roundtrip_family(names.clone(), sets)?;
        }
        return Ok(());
    }
    let m = mix_seed(seed, index as u64);
    let density = ((m >> 8) % 101) as f64 / 100.0;
    let q = gen_quasiorder(size, m, density);
    roundtrip_order(&q)
}

fn rauszer_agreement(seed: u64, size: usize, index: usize) -> Result<(), Failure> {
    let m = mix_seed(seed, index as u64);
    let density = ((m >> 8) % 101) as f64 / 100.0;
    let q = gen_quasiorder(1 + (m as usize % size), m, density);
    let object = quasiorder_object(&q);
    let family = upsets(&q).expect("suite carriers are small");
    for &a in family.sets() {
        for &b in family.sets() {
            let imp = rauszer_implication(&q, a, b).expect("family members are up-sets");
            if imp != family.interior(a.complement().union(b)) {
                return Err(fail("implication is the interior of -A ∪ B", &object));
            }
            let co = rauszer_coimplication(&q, a, b).expect("family members are up-sets");
            if !b.is_subset_of(a.union(co)) {
                return Err(fail("co-implication solves B ⊆ A ∪ X", &object));
            }
            for &x in family.sets() {
                if b.is_subset_of(a.union(x)) && !co.is_subset_of(x) {
                    return Err(fail("co-implication is the least solution", &object));
                }
            }
        }
    }
    Ok(())
}

fn identity_corpus(seed: u64, size: usize, count: usize, index: usize) -> Result<(), Failure> {
    if index == count {
        // The recorded witness: meets are not preserved by this f.
        let object = doc::parse(MEET_COUNTEREXAMPLE_DOC).expect("corpus document parses");
        let Object::Algebra { pair, signature } = &object else {
            unreachable!("corpus document is an algebra")
        };
        let identity = parse_identity("f(x & y) = f(x) & f(y)").expect("corpus identity parses");
        return match check_identity(&identity, pair, *signature) {
            Ok(Verdict::Counterexample(_)) => Ok(()),
            Ok(Verdict::Valid) => {
                Err(fail("recorded witness yields a counterexample", &object))
            }
            Err(e) => Err(fail(format!("witness check: {e}"), &object)),
        };
    }
    let spec = instance_spec(Kind::Algebra, seed, size, index);
    let pair = gen_algebra(&spec).expect("spec is within generator bounds");
    let object = Object::Algebra { pair: pair.clone(), signature: Signature::Bdlgc };
    for text in [
        "f(g(f(x))) = f(x)",
        "g(f(g(x))) = g(x)",
        "f(x | y) = f(x) | f(y)",
        "g(x & y) = g(x) & g(y)",
    ] {
        let identity = parse_identity(text).expect("corpus identity parses");
        match check_identity(&identity, &pair, Signature::Bdlgc) {
            Ok(Verdict::Valid) => {}
            Ok(Verdict::Counterexample(ce)) => {
                return Err(fail(format!("{text} (counterexample {ce})"), &object))
            }
            Err(e) => return Err(fail(format!("{text}: {e}"), &object)),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in SuiteName::ALL {
            assert_eq!(name.as_str().parse::<SuiteName>().unwrap(), name);
        }
        assert!(matches!(
            "no-such-suite".parse::<SuiteName>(),
            Err(SuiteError::UnknownSuite(_))
        ));
    }

    #[test]
    fn small_suite_runs_pass() {
        for name in [
            SuiteName::GaloisLaws,
            SuiteName::FrameClosure,
            SuiteName::CanonicalIso,
            SuiteName::SpatialIso,
            SuiteName::StarEquivalence,
        ] {
            let summary = run_suite(name, 10, 5, 4).unwrap();
            assert!(summary.all_passed(), "{summary}");
        }
    }

    #[test]
    fn rough_and_rauszer_suites_pass() {
        let summary = run_suite(SuiteName::RoughAdjunction, 10, 3, 5).unwrap();
        assert!(summary.all_passed(), "{summary}");
        let summary = run_suite(SuiteName::RauszerAgreement, 10, 3, 5).unwrap();
        assert!(summary.all_passed(), "{summary}");
    }

    #[test]
    fn roundtrip_suite_counts_the_exhaustive_sweeps() {
        let summary = run_suite(SuiteName::TopologyRoundtrip, 5, 1, 5).unwrap();
        assert_eq!(summary.total, 15);
        assert!(summary.all_passed(), "{summary}");
    }

    #[test]
    fn identity_corpus_includes_the_witness() {
        let summary = run_suite(SuiteName::IdentityCorpus, 5, 2, 4).unwrap();
        assert_eq!(summary.total, 6);
        assert!(summary.all_passed(), "{summary}");
    }

    #[test]
    fn zero_size_is_rejected() {
        assert!(matches!(
            run_suite(SuiteName::GaloisLaws, 1, 0, 0),
            Err(SuiteError::Gen(GenError::BadSpec(_)))
        ));
    }

    #[test]
    fn enumeration_counts_match_the_known_values() {
        // Quasiorders on labeled points: 1, 1, 4, 29, 355.
        assert_eq!(all_quasiorders(0).len(), 1);
        assert_eq!(all_quasiorders(1).len(), 1);
        assert_eq!(all_quasiorders(2).len(), 4);
        assert_eq!(all_quasiorders(3).len(), 29);
        // Alexandrov topologies are in bijection with quasiorders.
        assert_eq!(all_alexandrov_families(2).len(), 4);
        assert_eq!(all_alexandrov_families(3).len(), 29);
    }

    #[test]
    fn summary_json_shape() {
        let summary = run_suite(SuiteName::GaloisLaws, 3, 1, 3).unwrap();
        let value = summary.to_json();
        assert_eq!(value["total"], 3);
        assert_eq!(value["failed"], 0);
        assert!(value["first_failure"].is_null());
    }

    #[test]
    fn failures_render_the_law_and_document() {
        let summary = SuiteSummary {
            name: "galois-laws".into(),
            total: 3,
            passed: 2,
            failed: 1,
            first_failure: Some(SuiteFailure {
                index: 1,
                law: "f.g.f = f".into(),
                document: MEET_COUNTEREXAMPLE_DOC.to_string(),
            }),
        };
        let text = summary.to_string();
        assert!(text.contains("2/3 passed"));
        assert!(text.contains("instance 1: f.g.f = f"));
        assert!(text.contains("\"type\": \"algebra\""));
        let value = summary.to_json();
        assert_eq!(value["first_failure"]["index"], 1);
        assert_eq!(value["first_failure"]["law"], "f.g.f = f");
    }

    #[test]
    fn witness_document_round_trips() {
        let object = doc::parse(MEET_COUNTEREXAMPLE_DOC).unwrap();
        let text = doc::serialize(&object);
        assert_eq!(doc::parse(&text).unwrap(), object);
    }
}
