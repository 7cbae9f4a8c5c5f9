//! Finite quasiorders and their Alexandrov topologies of up-closed sets.
//!
//! A reflexive transitive relation on a finite carrier determines the family
//! of its up-closed subsets, which is closed under unions and intersections
//! and contains the empty set and the carrier. Conversely, any family with
//! those closure properties is the up-set family of its specialization
//! quasiorder, and the two constructions invert each other. This module
//! carries both directions together with least neighbourhoods, the minimal
//! base, interior, and the implication / co-implication operators on
//! up-sets.

use crate::bits::{Subset, MAX_POINTS};
use thiserror::Error;

/// Default carrier bound for exhaustive up-set enumeration.
pub const DEFAULT_UPSET_BOUND: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error("relation is not reflexive at {0}")]
    NotReflexive(String),
    #[error("relation is not transitive: {0} <= {1} and {1} <= {2} but not {0} <= {2}")]
    NotTransitive(String, String, String),
    #[error("carrier has {size} elements, enumeration bound is {bound}")]
    CarrierTooLarge { size: usize, bound: usize },
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("{0} is not an up-closed set")]
    NotUpClosed(String),
    #[error("family is not an Alexandrov topology: {0}")]
    NotAlexandrov(String),
}

/// A finite carrier with a reflexive transitive relation.
///
/// Row `i` of the relation is the successor set `{j | i <= j}`, so up-closure
/// tests and neighbourhood queries are word operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiOrder {
    carrier: Vec<String>,
    up: Vec<Subset>,
}

impl QuasiOrder {
    /// Validates the relation rows as given; nothing is closed implicitly.
    pub fn validate(carrier: Vec<String>, rows: Vec<Subset>) -> Result<Self, OrderError> {
        let n = carrier.len();
        if n > MAX_POINTS {
            return Err(OrderError::CarrierTooLarge { size: n, bound: MAX_POINTS });
        }
        assert_eq!(rows.len(), n, "one relation row per carrier element");
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.universe(), n, "row universe must match carrier size");
            if !row.contains(i) {
                return Err(OrderError::NotReflexive(carrier[i].clone()));
            }
        }
        for i in 0..n {
            for j in rows[i].iter() {
                if !rows[j].is_subset_of(rows[i]) {
                    let k = rows[j].difference(rows[i]).iter().next().unwrap();
                    return Err(OrderError::NotTransitive(
                        carrier[i].clone(),
                        carrier[j].clone(),
                        carrier[k].clone(),
                    ));
                }
            }
        }
        Ok(QuasiOrder { carrier, up: rows })
    }

    /// Validates a relation given as index pairs, again without closing it.
    pub fn from_pairs(carrier: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, OrderError> {
        let n = carrier.len();
        if n > MAX_POINTS {
            return Err(OrderError::CarrierTooLarge { size: n, bound: MAX_POINTS });
        }
        let mut rows = vec![Subset::empty(n); n];
        for &(x, y) in pairs {
            rows[x].insert(y);
        }
        Self::validate(carrier, rows)
    }

    /// Reflexive-transitive closure of arbitrary pairs; always a quasiorder.
    pub fn closure_of_pairs(
        carrier: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Self, OrderError> {
        let n = carrier.len();
        if n > MAX_POINTS {
            return Err(OrderError::CarrierTooLarge { size: n, bound: MAX_POINTS });
        }
        let mut rows: Vec<Subset> = (0..n).map(|i| Subset::singleton(n, i)).collect();
        for &(x, y) in pairs {
            rows[x].insert(y);
        }
        // Warshall over packed rows.
        for k in 0..n {
            for i in 0..n {
                if rows[i].contains(k) {
                    rows[i] = rows[i].union(rows[k]);
                }
            }
        }
        Self::validate(carrier, rows)
    }

    pub fn discrete(carrier: Vec<String>) -> Self {
        let n = carrier.len();
        assert!(n <= MAX_POINTS);
        let up = (0..n).map(|i| Subset::singleton(n, i)).collect();
        QuasiOrder { carrier, up }
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn name(&self, i: usize) -> &str {
        &self.carrier[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == name)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// The successor set `↑x`.
    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// The predecessor set `↓x`.
    pub fn down_set(&self, x: usize) -> Subset {
        Subset::from_indices(self.len(), (0..self.len()).filter(|&y| self.leq(y, x)))
    }

    pub fn rows(&self) -> &[Subset] {
        &self.up
    }

    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// Least neighbourhood of `x` in the Alexandrov topology, which is `↑x`.
    pub fn least_neighborhood(&self, x: usize) -> Result<Subset, OrderError> {
        if x >= self.len() {
            return Err(OrderError::UnknownElement(format!("#{x}")));
        }
        Ok(self.up[x])
    }

    pub fn least_neighborhood_named(&self, name: &str) -> Result<Subset, OrderError> {
        let x = self
            .index_of(name)
            .ok_or_else(|| OrderError::UnknownElement(name.to_string()))?;
        Ok(self.up[x])
    }

    /// `{ N(x) | x in carrier }` deduplicated, in canonical order.
    pub fn minimal_base(&self) -> Vec<Subset> {
        let mut base: Vec<Subset> = self.up.clone();
        base.sort_by(Subset::canonical_cmp);
        base.dedup();
        base
    }

    pub fn is_up_closed(&self, s: Subset) -> bool {
        s.iter().all(|x| self.up[x].is_subset_of(s))
    }

    pub fn up_closure(&self, s: Subset) -> Subset {
        let mut out = s;
        for x in s.iter() {
            out = out.union(self.up[x]);
        }
        out
    }

    /// First pair related both ways with distinct endpoints, if any.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if x != y && self.leq(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_witness().is_none()
    }
}

/// All up-closed subsets of the carrier: the full Alexandrov topology.
pub fn upsets(q: &QuasiOrder) -> Result<UpSetFamily, OrderError> {
    upsets_bounded(q, crate::carrier_bound(DEFAULT_UPSET_BOUND))
}

/// As [`upsets`], with an explicit carrier bound.
pub fn upsets_bounded(q: &QuasiOrder, bound: usize) -> Result<UpSetFamily, OrderError> {
    let n = q.len();
    if n > bound {
        return Err(OrderError::CarrierTooLarge { size: n, bound });
    }
    let mut sets = Vec::new();
    for bits in 0..1u64 << n {
        let s = Subset::from_bits(n, bits);
        if q.is_up_closed(s) {
            sets.push(s);
        }
    }
    sets.sort_by(Subset::canonical_cmp);
    Ok(UpSetFamily { base: q.clone(), sets })
}

/// An Alexandrov topology: contains the empty set and the carrier, closed
/// under union and intersection, every member up-closed in `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpSetFamily {
    base: QuasiOrder,
    sets: Vec<Subset>,
}

impl UpSetFamily {
    /// Validates an independently built family and attaches its
    /// specialization quasiorder as the base.
    pub fn validate(carrier: Vec<String>, mut sets: Vec<Subset>) -> Result<Self, OrderError> {
        let n = carrier.len();
        sets.sort_by(Subset::canonical_cmp);
        sets.dedup();
        if !sets.contains(&Subset::empty(n)) {
            return Err(OrderError::NotAlexandrov("missing the empty set".into()));
        }
        if !sets.contains(&Subset::full(n)) {
            return Err(OrderError::NotAlexandrov("missing the full carrier".into()));
        }
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i + 1..] {
                for (c, op) in [(a.union(b), "union"), (a.intersection(b), "intersection")] {
                    if sets.binary_search_by(|s| s.canonical_cmp(&c)).is_err() {
                        return Err(OrderError::NotAlexandrov(format!(
                            "{} of {} and {} is missing",
                            op,
                            a.render(&carrier),
                            b.render(&carrier)
                        )));
                    }
                }
            }
        }
        let base = specialization_order_of_sets(carrier, &sets);
        Ok(UpSetFamily { base, sets })
    }

    pub fn base(&self) -> &QuasiOrder {
        &self.base
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn carrier(&self) -> &[String] {
        self.base.carrier()
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.sets.binary_search_by(|t| t.canonical_cmp(&s)).ok()
    }

    pub fn contains_set(&self, s: Subset) -> bool {
        self.index_of(s).is_some()
    }

    /// Largest member contained in `c`: the union of all members below it.
    pub fn interior(&self, c: Subset) -> Subset {
        let mut out = Subset::empty(c.universe());
        for &s in &self.sets {
            if s.is_subset_of(c) {
                out = out.union(s);
            }
        }
        out
    }

    /// The quasiorder with `x <= y` iff `y` lies in every member containing
    /// `x`, computed from the member sets alone.
    pub fn specialization_order(&self) -> QuasiOrder {
        specialization_order_of_sets(self.base.carrier.clone(), &self.sets)
    }
}

fn specialization_order_of_sets(carrier: Vec<String>, sets: &[Subset]) -> QuasiOrder {
    let n = carrier.len();
    let rows: Vec<Subset> = (0..n)
        .map(|x| {
            let mut nbhd = Subset::full(n);
            for &s in sets {
                if s.contains(x) {
                    nbhd = nbhd.intersection(s);
                }
            }
            nbhd
        })
        .collect();
    QuasiOrder::validate(carrier, rows)
        .expect("neighbourhoods of a union/intersection-closed family form a quasiorder")
}

/// `A -> B` on up-sets: the points all of whose successors inside `A` lie in
/// `B`. Equals the interior of `-A ∪ B`.
pub fn rauszer_implication(q: &QuasiOrder, a: Subset, b: Subset) -> Result<Subset, OrderError> {
    require_up_closed(q, a)?;
    require_up_closed(q, b)?;
    let bad = a.difference(b);
    let n = q.len();
    Ok(Subset::from_indices(n, (0..n).filter(|&x| !q.up_set(x).intersects(bad))))
}

/// `A <- B` on up-sets: the points with a predecessor in `B` outside `A`.
/// It is the least up-set `X` with `B ⊆ A ∪ X`.
pub fn rauszer_coimplication(q: &QuasiOrder, a: Subset, b: Subset) -> Result<Subset, OrderError> {
    require_up_closed(q, a)?;
    require_up_closed(q, b)?;
    let witnesses = b.difference(a);
    let n = q.len();
    Ok(Subset::from_indices(n, (0..n).filter(|&x| q.down_set(x).intersects(witnesses))))
}

fn require_up_closed(q: &QuasiOrder, s: Subset) -> Result<(), OrderError> {
    if q.is_up_closed(s) {
        Ok(())
    } else {
        Err(OrderError::NotUpClosed(s.render(q.carrier())))
    }
}
