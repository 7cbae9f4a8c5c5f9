//! Seeded random generation of posets, lattices, frames, and algebras.
//!
//! Identical specs regenerate bit-identical instances: everything is driven
//! by a ChaCha stream seeded from the spec, iterated in fixed order.
//! Lattices are always up-set lattices of random posets, which reach every
//! finite distributive lattice up to isomorphism; the left adjoint is built
//! by extending a random monotone map on the join-irreducibles, which makes
//! it join-preserving by construction, and the right adjoint is derived.

use crate::bits::{BitMatrix, Subset};
use crate::frame::GCFrame;
use crate::galois::{right_adjoint_of, GaloisPair};
use crate::lattice::FiniteLattice;
use crate::order::{upsets, QuasiOrder};
use crate::Signature;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest generated poset.
pub const MAX_POSET_SIZE: usize = 12;
/// Largest poset underlying a generated lattice or algebra.
pub const MAX_ALGEBRA_POSET_SIZE: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("bad instance spec: {0}")]
    BadSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Poset,
    Lattice,
    Frame,
    Algebra,
}

impl FromStr for Kind {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        match s.to_ascii_lowercase().as_str() {
            "poset" => Ok(Kind::Poset),
            "lattice" => Ok(Kind::Lattice),
            "frame" => Ok(Kind::Frame),
            "algebra" => Ok(Kind::Algebra),
            other => Err(GenError::BadSpec(format!(
                "unknown kind '{other}', expected poset, lattice, frame, or algebra"
            ))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Poset => write!(f, "poset"),
            Kind::Lattice => write!(f, "lattice"),
            Kind::Frame => write!(f, "frame"),
            Kind::Algebra => write!(f, "algebra"),
        }
    }
}

/// Everything a generator needs; equal specs give equal instances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceSpec {
    pub kind: Kind,
    pub size: usize,
    pub seed: u64,
    pub density: f64,
    pub signature: Signature,
}

impl InstanceSpec {
    fn check(&self, max_size: usize) -> Result<(), GenError> {
        if self.size > max_size {
            return Err(GenError::BadSpec(format!(
                "size {} exceeds the {} bound {max_size}",
                self.size, self.kind
            )));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(GenError::BadSpec(format!(
                "density {} is outside [0, 1]",
                self.density
            )));
        }
        Ok(())
    }
}

/// Derives a per-instance seed from a base seed and an index (splitmix64).
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(0x1234_5678);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Point names for generated carriers: letters, then numbered fallbacks.
pub fn element_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

fn poset_edges(rng: &mut ChaCha8Rng, size: usize, density: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// A random partial order: DAG edges under the reflexive-transitive closure.
pub fn gen_poset(spec: &InstanceSpec) -> Result<QuasiOrder, GenError> {
    spec.check(MAX_POSET_SIZE)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges = poset_edges(&mut rng, spec.size, spec.density);
    Ok(QuasiOrder::closure_of_pairs(element_names(spec.size), &edges)
        .expect("closed DAG edges form a poset"))
}

/// A random quasiorder: arbitrary directed edges, closed. Used by suites
/// that want non-antisymmetric orders as well.
pub fn gen_quasiorder(size: usize, seed: u64, density: f64) -> QuasiOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if i != j && rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    QuasiOrder::closure_of_pairs(element_names(size), &edges)
        .expect("closure of edges is a quasiorder")
}

/// The up-set lattice of a random poset: finite distributive by construction.
pub fn gen_lattice(spec: &InstanceSpec) -> Result<FiniteLattice, GenError> {
    spec.check(MAX_ALGEBRA_POSET_SIZE)?;
    let poset = gen_poset(spec)?;
    let family = upsets(&poset).expect("generated poset is within the enumeration bound");
    Ok(FiniteLattice::from_upset_family(&family))
}

/// A random GC-frame: a random poset plus the compatibility closure
/// `>= ∘ R0 ∘ >=` of random relation edges.
pub fn gen_frame(spec: &InstanceSpec) -> Result<GCFrame, GenError> {
    spec.check(MAX_POSET_SIZE)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.size;
    let edges = poset_edges(&mut rng, n, spec.density);
    let order = QuasiOrder::closure_of_pairs(element_names(n), &edges)
        .expect("closed DAG edges form a poset");
    let mut raw = vec![Subset::empty(n); n];
    for x in 0..n {
        for y in 0..n {
            if rng.gen_bool(spec.density) {
                raw[x].insert(y);
            }
        }
    }
    let mut rel = vec![Subset::empty(n); n];
    for x in 0..n {
        for y in raw[x].iter() {
            let downs = order.down_set(y);
            for xp in 0..n {
                if order.leq(x, xp) {
                    rel[xp] = rel[xp].union(downs);
                }
            }
        }
    }
    Ok(GCFrame::validate(order, rel).expect("compatibility closure satisfies the condition"))
}

/// A random join-preserving self-map: pick a monotone map on the
/// join-irreducibles along a linear extension, then extend by
/// `f(x) = ⋁{f0(j) | j <= x}`.
pub fn gen_join_preserving_map(l: &FiniteLattice, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let irr = l.join_irreducibles();
    let mut order: Vec<usize> = (0..irr.len()).collect();
    // Sorting by down-set size gives a linear extension of J(L).
    let weight: Vec<usize> =
        irr.iter().map(|&j| (0..l.len()).filter(|&x| l.leq(x, j)).count()).collect();
    order.sort_by_key(|&k| (weight[k], k));

    let mut f0 = vec![0usize; irr.len()];
    for &k in &order {
        let lo = l.join_all(
            (0..irr.len()).filter(|&m| m != k && l.leq(irr[m], irr[k])).map(|m| f0[m]),
        );
        let choices: Vec<usize> = (0..l.len()).filter(|&y| l.leq(lo, y)).collect();
        f0[k] = choices[rng.gen_range(0..choices.len())];
    }
    (0..l.len())
        .map(|x| l.join_all((0..irr.len()).filter(|&m| l.leq(irr[m], x)).map(|m| f0[m])))
        .collect()
}

/// A random algebra: up-set lattice, generated left adjoint, derived right
/// adjoint. The resulting pair always validates.
pub fn gen_algebra(spec: &InstanceSpec) -> Result<GaloisPair, GenError> {
    spec.check(MAX_ALGEBRA_POSET_SIZE)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges = poset_edges(&mut rng, spec.size, spec.density);
    let poset = QuasiOrder::closure_of_pairs(element_names(spec.size), &edges)
        .expect("closed DAG edges form a poset");
    let family = upsets(&poset).expect("generated poset is within the enumeration bound");
    let lattice = FiniteLattice::from_upset_family(&family);
    let f = gen_join_preserving_map(&lattice, &mut rng);
    let g = right_adjoint_of(&lattice, &f).expect("extension of a monotone map is residuated");
    Ok(GaloisPair::validate(lattice, f, g).expect("derived adjoint satisfies the adjunction"))
}

/// Lattice order as a matrix, for rebuilding through the validated path.
pub fn order_matrix(q: &QuasiOrder) -> BitMatrix {
    BitMatrix::from_subset_rows(q.rows())
}
