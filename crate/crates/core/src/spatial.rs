//! The spatial representation on join-irreducibles.
//!
//! For a finite distributive lattice the join-irreducibles, ordered by the
//! reverse of the lattice order and related by `j R k iff j <= f(k)`, form a
//! GC-frame whose complex algebra is isomorphic to the source algebra via
//! `Φ(x) = {j | j <= x}`. The construction is checked law by law, and the
//! frame itself is compared against the canonical frame on prime filters:
//! `j ↦ ↑j` must be an isomorphism of frames.

use crate::bits::Subset;
use crate::canonical::{canonical_frame, CanonicalError};
use crate::frame::{ComplexAlgebra, FrameError, GCFrame};
use crate::galois::GaloisPair;
use crate::order::{OrderError, QuasiOrder};
use crate::report::LawReport;
use crate::Signature;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpatialError {
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("signature {0} has no implication; the spatial representation needs HGC or HBGC")]
    UnsupportedSignature(Signature),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
}

/// The frame on join-irreducibles: carrier `J(L)`, order `j ◁ k iff k <= j`,
/// relation `j R k iff j <= f(k)`.
#[derive(Debug, Clone)]
pub struct SpatialFrame {
    j_elems: Vec<usize>,
    frame: GCFrame,
}

impl SpatialFrame {
    /// Lattice indices of the frame points, in carrier order.
    pub fn j_elems(&self) -> &[usize] {
        &self.j_elems
    }

    pub fn frame(&self) -> &GCFrame {
        &self.frame
    }

    pub fn into_frame(self) -> GCFrame {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.j_elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.j_elems.is_empty()
    }
}

pub fn build_spatial_frame(pair: &GaloisPair) -> Result<SpatialFrame, SpatialError> {
    let l = pair.lattice();
    if !l.is_distributive() {
        return Err(SpatialError::NotDistributive);
    }
    let j_elems = l.join_irreducibles();
    let m = j_elems.len();
    if m > crate::bits::MAX_POINTS {
        return Err(SpatialError::Order(OrderError::CarrierTooLarge {
            size: m,
            bound: crate::bits::MAX_POINTS,
        }));
    }
    let carrier: Vec<String> = j_elems.iter().map(|&j| l.name(j).to_string()).collect();
    let order_rows: Vec<Subset> = j_elems
        .iter()
        .map(|&j| Subset::from_indices(m, (0..m).filter(|&k| l.leq(j_elems[k], j))))
        .collect();
    let order = QuasiOrder::validate(carrier, order_rows)?;
    let rel_rows: Vec<Subset> = j_elems
        .iter()
        .map(|&j| {
            Subset::from_indices(m, (0..m).filter(|&k| l.leq(j, pair.f_at(j_elems[k]))))
        })
        .collect();
    let frame = GCFrame::validate(order, rel_rows)?;
    Ok(SpatialFrame { j_elems, frame })
}

/// `Φ(x) = {j ∈ J(L) | j <= x}`, an up-set of the reversed order.
pub fn phi(pair: &GaloisPair, x: usize) -> Result<Subset, SpatialError> {
    let l = pair.lattice();
    if x >= l.len() {
        return Err(SpatialError::UnknownElement(format!("#{x}")));
    }
    let j_elems = l.join_irreducibles();
    let m = j_elems.len();
    Ok(Subset::from_indices(m, (0..m).filter(|&k| l.leq(j_elems[k], x))))
}

/// Checks that `Φ` is an isomorphism onto the complex algebra of the spatial
/// frame, commuting with the whole signature.
pub fn verify_representation(
    pair: &GaloisPair,
    signature: Signature,
) -> Result<LawReport, SpatialError> {
    if !signature.has_implication() {
        return Err(SpatialError::UnsupportedSignature(signature));
    }
    let l = pair.lattice();
    let spatial = build_spatial_frame(pair)?;
    let algebra = ComplexAlgebra::build(spatial.frame().clone(), signature)?;
    let n = l.len();
    let mut report = LawReport::new(format!(
        "spatial representation of a {n}-element algebra on {} join-irreducibles",
        spatial.len()
    ));

    let images_sets: Vec<Subset> = (0..n).map(|x| phi(pair, x).unwrap()).collect();
    let image: Vec<Option<usize>> = images_sets.iter().map(|&s| algebra.elem_of(s)).collect();
    report.record(
        "image-in-carrier",
        (0..n).find(|&x| image[x].is_none()).map(|x| l.name(x).to_string()),
    );
    if !report.all_passed() {
        return Ok(report);
    }
    let image: Vec<usize> = image.into_iter().map(Option::unwrap).collect();

    let mut seen = vec![false; algebra.len()];
    let mut injective = None;
    for x in 0..n {
        if seen[image[x]] {
            injective = Some(l.name(x).to_string());
        }
        seen[image[x]] = true;
    }
    report.record("injective", injective);
    report.record(
        "surjective",
        (!seen.iter().all(|&b| b)).then(|| {
            format!("carrier has {} up-sets but only {} images", algebra.len(), n)
        }),
    );

    let witness_pair = |x: usize, y: usize| format!("({}, {})", l.name(x), l.name(y));
    let ca = algebra.lattice();
    let mut binary_law = |name: &str, check: &dyn Fn(usize, usize) -> bool| {
        let mut witness = None;
        'scan: for x in 0..n {
            for y in 0..n {
                if !check(x, y) {
                    witness = Some(witness_pair(x, y));
                    break 'scan;
                }
            }
        }
        report.record(name, witness);
    };

    binary_law("order-isomorphism", &|x, y| {
        l.leq(x, y) == images_sets[x].is_subset_of(images_sets[y])
    });
    binary_law("preserves-join", &|x, y| image[l.join(x, y)] == ca.join(image[x], image[y]));
    binary_law("preserves-meet", &|x, y| image[l.meet(x, y)] == ca.meet(image[x], image[y]));
    binary_law("preserves-imp", &|x, y| {
        match (l.implication(x, y), algebra.implication_elem(image[x], image[y])) {
            (Ok(i), Ok(j)) => image[i] == j,
            _ => false,
        }
    });
    if signature.has_coimplication() {
        binary_law("preserves-coimp", &|x, y| {
            match (l.coimplication(x, y), algebra.coimplication_elem(image[x], image[y])) {
                (Ok(i), Ok(j)) => image[i] == j,
                _ => false,
            }
        });
    }

    report.record(
        "preserves-bottom",
        (image[l.bottom()] != ca.bottom()).then(|| l.name(l.bottom()).to_string()),
    );
    report.record(
        "preserves-top",
        (image[l.top()] != ca.top()).then(|| l.name(l.top()).to_string()),
    );
    report.record(
        "commutes-with-f",
        (0..n)
            .find(|&x| image[pair.f_at(x)] != algebra.upper_elem(image[x]))
            .map(|x| l.name(x).to_string()),
    );
    report.record(
        "commutes-with-g",
        (0..n)
            .find(|&x| image[pair.g_at(x)] != algebra.lower_elem(image[x]))
            .map(|x| l.name(x).to_string()),
    );
    Ok(report)
}

/// `j ↦ ↑j` must carry the spatial frame onto the canonical frame,
/// preserving and reflecting both the order and the relation.
pub fn frames_agree(pair: &GaloisPair) -> Result<bool, SpatialError> {
    let spatial = build_spatial_frame(pair)?;
    let canonical = canonical_frame(pair)?;
    if spatial.len() != canonical.len() {
        return Ok(false);
    }
    let m = spatial.len();
    // Match each join-irreducible with the prime filter it generates.
    let mut to_filter = Vec::with_capacity(m);
    for &j in spatial.j_elems() {
        match canonical.filters().iter().position(|p| p.generator() == j) {
            Some(k) => to_filter.push(k),
            None => return Ok(false),
        }
    }
    let (sf, cf) = (spatial.frame(), canonical.frame());
    for a in 0..m {
        for b in 0..m {
            if sf.order().leq(a, b) != cf.order().leq(to_filter[a], to_filter[b]) {
                return Ok(false);
            }
            if sf.relates(a, b) != cf.relates(to_filter[a], to_filter[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
