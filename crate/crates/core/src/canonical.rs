//! Prime filters of finite distributive lattices and the canonical frame.
//!
//! On a finite distributive lattice every prime filter is the principal
//! up-set of a join-irreducible element, so filters are stored by their
//! generator and the member set is materialized on demand. The canonical
//! frame orders the prime filters by inclusion and relates `F` to `G` when
//! `a ∈ G` always forces `f(a) ∈ F`; the complex algebra of that frame is
//! where the Stone-style map `h(x) = {F | x ∈ F}` lands. Everything the map
//! is supposed to preserve is checked law by law, and on finite carriers
//! surjectivity upgrades the embedding to an isomorphism.

use crate::bits::Subset;
use crate::frame::{ComplexAlgebra, FrameError, GCFrame};
use crate::galois::GaloisPair;
use crate::lattice::FiniteLattice;
use crate::order::{OrderError, QuasiOrder};
use crate::report::LawReport;
use crate::Signature;
use thiserror::Error;

/// Default carrier bound for exhaustive filter enumeration.
pub const DEFAULT_FILTER_BOUND: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonicalError {
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("carrier has {size} elements, filter enumeration bound is {bound}")]
    CarrierTooLarge { size: usize, bound: usize },
    #[error("constructed filter fails a primality axiom: {0}")]
    PrimalityCheckFailed(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Frame(#[from] FrameError),
}

/// A prime filter of a finite distributive lattice, stored by its
/// join-irreducible generator; the members are `{x | generator <= x}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeFilter {
    generator: usize,
}

impl PrimeFilter {
    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn contains(&self, l: &FiniteLattice, x: usize) -> bool {
        l.leq(self.generator, x)
    }

    pub fn member_indices(&self, l: &FiniteLattice) -> Vec<usize> {
        (0..l.len()).filter(|&x| self.contains(l, x)).collect()
    }

    /// Inclusion of principal up-sets reverses the generator order.
    pub fn subset_of(&self, l: &FiniteLattice, other: &PrimeFilter) -> bool {
        l.leq(other.generator, self.generator)
    }
}

/// One prime filter per join-irreducible element, each checked against the
/// primality axioms.
pub fn prime_filters(l: &FiniteLattice) -> Result<Vec<PrimeFilter>, CanonicalError> {
    if !l.is_distributive() {
        return Err(CanonicalError::NotDistributive);
    }
    let filters: Vec<PrimeFilter> =
        l.join_irreducibles().into_iter().map(|generator| PrimeFilter { generator }).collect();
    for filter in &filters {
        let members = filter.member_indices(l);
        if let Some(reason) = primality_violation(l, &members) {
            return Err(CanonicalError::PrimalityCheckFailed(format!(
                "up-set of {}: {reason}",
                l.name(filter.generator)
            )));
        }
    }
    Ok(filters)
}

fn primality_violation(l: &FiniteLattice, members: &[usize]) -> Option<String> {
    let contains = |x: usize| members.contains(&x);
    if members.is_empty() {
        return Some("empty".into());
    }
    if contains(l.bottom()) {
        return Some("not proper: contains the bottom".into());
    }
    for &x in members {
        for y in 0..l.len() {
            if l.leq(x, y) && !contains(y) {
                return Some(format!("not up-closed at {}", l.name(y)));
            }
        }
        for &y in members {
            if !contains(l.meet(x, y)) {
                return Some(format!(
                    "not meet-closed at ({}, {})",
                    l.name(x),
                    l.name(y)
                ));
            }
        }
    }
    for x in 0..l.len() {
        for y in 0..l.len() {
            if contains(l.join(x, y)) && !contains(x) && !contains(y) {
                return Some(format!("not prime at ({}, {})", l.name(x), l.name(y)));
            }
        }
    }
    None
}

/// All nonempty up-closed meet-closed subsets, the improper one included.
/// This is the independent oracle behind the prime-filter machinery.
pub fn enumerate_filters(l: &FiniteLattice) -> Result<Vec<Subset>, CanonicalError> {
    let n = l.len();
    let bound = crate::carrier_bound(DEFAULT_FILTER_BOUND);
    if n > bound {
        return Err(CanonicalError::CarrierTooLarge { size: n, bound });
    }
    let mut out = Vec::new();
    for bits in 1..1u64 << n {
        let s = Subset::from_bits(n, bits);
        if is_filter_set(l, s) {
            out.push(s);
        }
    }
    out.sort_by(Subset::canonical_cmp);
    Ok(out)
}

pub fn is_filter_set(l: &FiniteLattice, s: Subset) -> bool {
    !s.is_empty()
        && s.iter().all(|x| {
            (0..l.len()).all(|y| !l.leq(x, y) || s.contains(y))
                && s.iter().all(|y| s.contains(l.meet(x, y)))
        })
}

/// Proper + prime on top of [`is_filter_set`].
pub fn is_prime_filter_set(l: &FiniteLattice, s: Subset) -> bool {
    if !is_filter_set(l, s) || s.contains(l.bottom()) {
        return false;
    }
    for x in 0..l.len() {
        for y in 0..l.len() {
            if s.contains(l.join(x, y)) && !s.contains(x) && !s.contains(y) {
                return false;
            }
        }
    }
    true
}

/// The least member of a filter set, when the set is its principal up-set.
pub fn principal_generator(l: &FiniteLattice, s: Subset) -> Option<usize> {
    let m = l.meet_all(s.iter());
    (s.contains(m) && s.iter().all(|x| l.leq(m, x))).then_some(m)
}

/// The canonical frame of an algebra: prime filters under inclusion, related
/// by `F R G  iff  a ∈ G implies f(a) ∈ F`.
#[derive(Debug, Clone)]
pub struct CanonicalFrame {
    filters: Vec<PrimeFilter>,
    frame: GCFrame,
}

impl CanonicalFrame {
    pub fn filters(&self) -> &[PrimeFilter] {
        &self.filters
    }

    pub fn frame(&self) -> &GCFrame {
        &self.frame
    }

    pub fn into_frame(self) -> GCFrame {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }
}

/// The first clause of the canonical relation.
pub fn star_primary(pair: &GaloisPair, f_filter: &PrimeFilter, g_filter: &PrimeFilter) -> bool {
    let l = pair.lattice();
    (0..l.len()).all(|a| !g_filter.contains(l, a) || f_filter.contains(l, pair.f_at(a)))
}

/// The second clause, `g(a) ∈ G implies a ∈ F`; by the adjunction it must
/// agree with [`star_primary`] on every pair of prime filters.
pub fn star_alternative(pair: &GaloisPair, f_filter: &PrimeFilter, g_filter: &PrimeFilter) -> bool {
    let l = pair.lattice();
    (0..l.len()).all(|a| !g_filter.contains(l, pair.g_at(a)) || f_filter.contains(l, a))
}

pub fn canonical_frame(pair: &GaloisPair) -> Result<CanonicalFrame, CanonicalError> {
    let l = pair.lattice();
    let filters = prime_filters(l)?;
    let m = filters.len();
    if m > crate::bits::MAX_POINTS {
        return Err(CanonicalError::CarrierTooLarge { size: m, bound: crate::bits::MAX_POINTS });
    }
    let carrier: Vec<String> =
        filters.iter().map(|p| format!("^{}", l.name(p.generator))).collect();
    // Inclusion order: successors of a filter are the filters containing it.
    let rows: Vec<Subset> = filters
        .iter()
        .map(|p| Subset::from_indices(m, (0..m).filter(|&j| p.subset_of(l, &filters[j]))))
        .collect();
    let order = QuasiOrder::validate(carrier, rows)?;
    let rel: Vec<Subset> = filters
        .iter()
        .map(|f_filter| {
            Subset::from_indices(
                m,
                (0..m).filter(|&j| star_primary(pair, f_filter, &filters[j])),
            )
        })
        .collect();
    let frame = GCFrame::validate(order, rel)?;
    Ok(CanonicalFrame { filters, frame })
}

/// `h(x) = {F | x ∈ F}` as a subset of the canonical frame carrier, for
/// every lattice element.
pub fn stone_map(pair: &GaloisPair) -> Result<Vec<Subset>, CanonicalError> {
    let canonical = canonical_frame(pair)?;
    Ok(stone_map_on(pair, &canonical))
}

pub fn stone_map_on(pair: &GaloisPair, canonical: &CanonicalFrame) -> Vec<Subset> {
    let l = pair.lattice();
    let m = canonical.len();
    (0..l.len())
        .map(|x| {
            Subset::from_indices(
                m,
                (0..m).filter(|&j| canonical.filters[j].contains(l, x)),
            )
        })
        .collect()
}

/// Checks injectivity of the Stone map and preservation of the lattice
/// operations, the Galois pair, and the arrows named by the signature.
pub fn verify_embedding(pair: &GaloisPair, signature: Signature) -> Result<LawReport, CanonicalError> {
    let canonical = canonical_frame(pair)?;
    let algebra = ComplexAlgebra::build(canonical.frame().clone(), signature)?;
    let h = stone_map_on(pair, &canonical);
    Ok(embedding_report(pair, signature, &algebra, &h))
}

fn embedding_report(
    pair: &GaloisPair,
    signature: Signature,
    algebra: &ComplexAlgebra,
    h: &[Subset],
) -> LawReport {
    let l = pair.lattice();
    let n = l.len();
    let mut report = LawReport::new(format!(
        "embedding of a {}-element algebra into the complex algebra of its canonical frame",
        n
    ));
    let witness_pair = |x: usize, y: usize| format!("({}, {})", l.name(x), l.name(y));

    let mut injective = None;
    'inj: for x in 0..n {
        for y in x + 1..n {
            if h[x] == h[y] {
                injective = Some(witness_pair(x, y));
                break 'inj;
            }
        }
    }
    report.record("injective", injective);

    // Every h(x) must itself be a member of the complex algebra carrier.
    let image: Vec<Option<usize>> = h.iter().map(|&s| algebra.elem_of(s)).collect();
    let mut in_carrier = None;
    for x in 0..n {
        if image[x].is_none() {
            in_carrier = Some(l.name(x).to_string());
            break;
        }
    }
    report.record("image-in-carrier", in_carrier);
    if !report.all_passed() {
        return report;
    }
    let image: Vec<usize> = image.into_iter().map(Option::unwrap).collect();

    let mut law = |name: &str, check: &dyn Fn(usize, usize) -> bool, binary: bool| {
        let mut witness = None;
        'scan: for x in 0..n {
            for y in 0..if binary { n } else { 1 } {
                if !check(x, y) {
                    witness =
                        Some(if binary { witness_pair(x, y) } else { l.name(x).to_string() });
                    break 'scan;
                }
            }
        }
        report.record(name, witness);
    };

    law("preserves-join", &|x, y| image[l.join(x, y)] == algebra.lattice().join(image[x], image[y]), true);
    law("preserves-meet", &|x, y| image[l.meet(x, y)] == algebra.lattice().meet(image[x], image[y]), true);
    law("preserves-bottom", &|_, _| image[l.bottom()] == algebra.lattice().bottom(), false);
    law("preserves-top", &|_, _| image[l.top()] == algebra.lattice().top(), false);
    law("preserves-f", &|x, _| image[pair.f_at(x)] == algebra.upper_elem(image[x]), false);
    law("preserves-g", &|x, _| image[pair.g_at(x)] == algebra.lower_elem(image[x]), false);

    if signature.has_implication() {
        law(
            "preserves-imp",
            &|x, y| match (l.implication(x, y), algebra.implication_elem(image[x], image[y])) {
                (Ok(i), Ok(j)) => image[i] == j,
                _ => false,
            },
            true,
        );
    }
    if signature.has_coimplication() {
        law(
            "preserves-coimp",
            &|x, y| match (l.coimplication(x, y), algebra.coimplication_elem(image[x], image[y])) {
                (Ok(i), Ok(j)) => image[i] == j,
                _ => false,
            },
            true,
        );
    }
    report
}

/// On finite carriers the embedding is onto: every up-set `A` of prime
/// filters is hit by `x = ⋁{a ∈ J | ↑a ∈ A}`. Returns whether all embedding
/// laws and surjectivity hold.
pub fn verify_finite_iso(pair: &GaloisPair, signature: Signature) -> Result<bool, CanonicalError> {
    let canonical = canonical_frame(pair)?;
    let algebra = ComplexAlgebra::build(canonical.frame().clone(), signature)?;
    let h = stone_map_on(pair, &canonical);
    let report = embedding_report(pair, signature, &algebra, &h);
    if !report.all_passed() {
        return Ok(false);
    }
    let l = pair.lattice();
    for &a_set in algebra.family().sets() {
        let x = l.join_all(
            canonical.filters.iter().enumerate().filter_map(|(j, p)| {
                a_set.contains(j).then_some(p.generator())
            }),
        );
        if h[x] != a_set {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{b4, chain, m3};

    fn identity_pair(l: &FiniteLattice) -> GaloisPair {
        let id: Vec<usize> = (0..l.len()).collect();
        GaloisPair::validate(l.clone(), id.clone(), id).unwrap()
    }

    #[test]
    fn prime_filters_of_named_lattices() {
        let l = chain(2);
        let ps = prime_filters(&l).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].generator(), 1);

        let l = b4();
        let ps = prime_filters(&l).unwrap();
        assert_eq!(ps.len(), 2);
        assert!(!ps[0].subset_of(&l, &ps[1]) && !ps[1].subset_of(&l, &ps[0]));

        let l = chain(3);
        let ps = prime_filters(&l).unwrap();
        // ↑top ⊆ ↑middle, generator comparison reversed.
        assert!(ps[1].subset_of(&l, &ps[0]));
        assert!(!ps[0].subset_of(&l, &ps[1]));
    }

    #[test]
    fn prime_filters_need_distributivity() {
        assert_eq!(prime_filters(&m3()).unwrap_err(), CanonicalError::NotDistributive);
    }

    #[test]
    fn filter_enumeration_of_named_lattices() {
        let l = chain(2);
        let fs = enumerate_filters(&l).unwrap();
        assert_eq!(fs, vec![Subset::singleton(2, 1), Subset::full(2)]);

        let l = b4();
        let fs = enumerate_filters(&l).unwrap();
        assert_eq!(fs.len(), 4);
        let primes: Vec<Subset> =
            fs.iter().copied().filter(|&s| is_prime_filter_set(&l, s)).collect();
        assert_eq!(
            primes,
            vec![Subset::from_indices(4, [1, 3]), Subset::from_indices(4, [2, 3])]
        );

        let l = chain(1);
        let fs = enumerate_filters(&l).unwrap();
        assert_eq!(fs, vec![Subset::full(1)]);
        assert!(fs.iter().all(|&s| !is_prime_filter_set(&l, s)));
    }

    #[test]
    fn enumerated_filters_are_principal_and_primes_match() {
        for l in [chain(1), chain(4), b4()] {
            let fs = enumerate_filters(&l).unwrap();
            for &s in &fs {
                let gen = principal_generator(&l, s).expect("finite filters are principal");
                assert!(s.iter().all(|x| l.leq(gen, x)));
            }
            let primes: Vec<usize> = fs
                .iter()
                .filter(|&&s| is_prime_filter_set(&l, s))
                .map(|&s| principal_generator(&l, s).unwrap())
                .collect();
            let from_irreducibles: Vec<usize> =
                prime_filters(&l).unwrap().iter().map(|p| p.generator()).collect();
            let mut sorted = primes.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, from_irreducibles);
        }
    }

    #[test]
    fn canonical_frame_of_two_chain_identity() {
        let pair = identity_pair(&chain(2));
        let c = canonical_frame(&pair).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.frame().relates(0, 0));
    }

    #[test]
    fn canonical_frame_of_b4_identity_is_the_identity_relation() {
        let pair = identity_pair(&b4());
        let c = canonical_frame(&pair).unwrap();
        assert_eq!(c.len(), 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(c.frame().relates(i, j), i == j);
            }
        }
    }

    #[test]
    fn constant_bottom_f_gives_the_empty_relation() {
        let l = b4();
        let f = vec![l.bottom(); 4];
        let g = vec![l.top(); 4];
        let pair = GaloisPair::validate(l, f, g).unwrap();
        let c = canonical_frame(&pair).unwrap();
        for i in 0..c.len() {
            for j in 0..c.len() {
                assert!(!c.frame().relates(i, j));
            }
        }
    }

    #[test]
    fn star_clauses_agree_for_identity_pairs() {
        for l in [chain(2), chain(3), b4()] {
            let pair = identity_pair(&l);
            let filters = prime_filters(&l).unwrap();
            for p in &filters {
                for q in &filters {
                    assert_eq!(star_primary(&pair, p, q), star_alternative(&pair, p, q));
                    // With f = id the primary clause is containment.
                    assert_eq!(star_primary(&pair, p, q), q.subset_of(&l, p));
                }
            }
        }
    }

    #[test]
    fn star_clauses_agree_for_a_derived_pair() {
        let l = b4();
        let f = vec![0, 1, 0, 1];
        let g = crate::galois::right_adjoint_of(&l, &f).unwrap();
        let pair = GaloisPair::validate(l, f, g).unwrap();
        let filters = prime_filters(pair.lattice()).unwrap();
        for p in &filters {
            for q in &filters {
                assert_eq!(star_primary(&pair, p, q), star_alternative(&pair, p, q));
            }
        }
    }

    #[test]
    fn stone_map_examples() {
        let pair = identity_pair(&chain(2));
        let h = stone_map(&pair).unwrap();
        assert_eq!(h[0], Subset::empty(1));
        assert_eq!(h[1], Subset::full(1));

        let pair = identity_pair(&b4());
        let h = stone_map(&pair).unwrap();
        assert_eq!(h[0], Subset::empty(2));
        assert_eq!(h[1], Subset::singleton(2, 0));
        assert_eq!(h[3], Subset::full(2));

        let pair = identity_pair(&chain(3));
        let h = stone_map(&pair).unwrap();
        // h(middle) contains ↑middle but not ↑top.
        assert_eq!(h[1], Subset::singleton(2, 0));
    }

    #[test]
    fn embedding_laws_hold_on_named_instances() {
        for l in [chain(2), chain(3), b4()] {
            let pair = identity_pair(&l);
            let report = verify_embedding(&pair, Signature::Hbgc).unwrap();
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn finite_instances_are_isomorphisms() {
        for l in [chain(2), chain(4), b4()] {
            let pair = identity_pair(&l);
            assert!(verify_finite_iso(&pair, Signature::Hbgc).unwrap());
        }
    }

    #[test]
    fn filter_enumeration_respects_the_carrier_bound() {
        // The up-set lattice of a four-point antichain has 16 elements.
        let q = crate::order::QuasiOrder::discrete(
            (0..4).map(|i| format!("p{i}")).collect(),
        );
        let l = FiniteLattice::from_upset_family(&crate::order::upsets(&q).unwrap());
        assert_eq!(l.len(), 16);
        assert_eq!(
            enumerate_filters(&l).unwrap_err(),
            CanonicalError::CarrierTooLarge { size: 16, bound: 12 }
        );
    }

    #[test]
    fn canonical_complex_algebra_packages_a_galois_pair() {
        use crate::frame::ComplexAlgebra;
        for l in [chain(3), b4()] {
            let pair = identity_pair(&l);
            let frame = canonical_frame(&pair).unwrap().into_frame();
            let algebra = ComplexAlgebra::build(frame, Signature::Bdlgc).unwrap();
            algebra.as_galois_pair().unwrap();
        }
    }

    #[test]
    fn prime_filter_theorem_on_small_lattices() {
        for l in [chain(2), chain(4), b4()] {
            let filters = enumerate_filters(&l).unwrap();
            let primes: Vec<Subset> =
                filters.iter().copied().filter(|&s| is_prime_filter_set(&l, s)).collect();
            for &f in &filters {
                for a in 0..l.len() {
                    if f.contains(a) {
                        continue;
                    }
                    assert!(
                        primes.iter().any(|&p| f.is_subset_of(p) && !p.contains(a)),
                        "no prime filter separates {} from the filter {:?}",
                        l.name(a),
                        f
                    );
                }
            }
        }
    }
}
