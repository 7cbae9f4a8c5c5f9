//! Finite bounded lattices synthesized from their order.
//!
//! Join and meet tables are computed by bound search with explicit failure
//! on pairs lacking a unique bound. On top of the tables sit the
//! distributivity, irreducibility, spatiality, and weak atomicity
//! predicates, Heyting implication and Brouwer co-implication, the
//! (JID)/(MID) distributive-law checks, and the passage to the dual
//! quasiorder on join-irreducibles.

use crate::bits::{iter_word_bits, words_is_subset, BitMatrix, Subset};
use crate::order::{upsets, OrderError, QuasiOrder, UpSetFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Carrier bound below which (JID)/(MID) are checked over every subset.
pub const DEFAULT_JID_EXHAUSTIVE: usize = 10;
/// Sample count for the randomized (JID)/(MID) fallback.
pub const DEFAULT_JID_SAMPLES: usize = 10_000;
/// Fixed seed for the sampled fallback, so results are reproducible.
pub const JID_SAMPLE_SEED: u64 = 0x1a77_1ce5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("elements {0} and {1} have no least upper bound")]
    NoLub(String, String),
    #[error("elements {0} and {1} have no greatest lower bound")]
    NoGlb(String, String),
    #[error("lattice has no bounds: carrier is empty")]
    NoBounds,
    #[error("no relative pseudocomplement for ({0}, {1})")]
    NoRelativePseudocomplement(String, String),
    #[error("no co-implication for ({0}, {1})")]
    NoCoimplication(String, String),
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// A finite bounded lattice: carrier, order, and synthesized tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    carrier: Vec<String>,
    leq: BitMatrix,
    join_tab: Vec<u32>,
    meet_tab: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Synthesizes join/meet tables from a partial order by bound search.
    pub fn from_order(carrier: Vec<String>, leq: BitMatrix) -> Result<Self, LatticeError> {
        let n = carrier.len();
        assert_eq!(leq.size(), n, "order matrix must match carrier size");
        for i in 0..n {
            if !leq.get(i, i) {
                return Err(LatticeError::NotAPartialOrder(format!(
                    "not reflexive at {}",
                    carrier[i]
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq.get(i, j) && leq.get(j, i) {
                    return Err(LatticeError::NotAPartialOrder(format!(
                        "not antisymmetric: {} and {} are mutually related",
                        carrier[i], carrier[j]
                    )));
                }
                if leq.get(i, j) && !leq.row_is_subset(j, i) {
                    let k = iter_word_bits(leq.row(j))
                        .find(|&k| !leq.get(i, k))
                        .unwrap();
                    return Err(LatticeError::NotAPartialOrder(format!(
                        "not transitive: {} <= {} <= {} but not {} <= {}",
                        carrier[i], carrier[j], carrier[k], carrier[i], carrier[k]
                    )));
                }
            }
        }
        if n == 0 {
            return Err(LatticeError::NoBounds);
        }

        let mut join_tab = vec![0u32; n * n];
        let mut meet_tab = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let ub = leq.and_rows(x, y);
                let lub = iter_word_bits(&ub)
                    .find(|&m| words_is_subset(&ub, leq.row(m)))
                    .ok_or_else(|| LatticeError::NoLub(carrier[x].clone(), carrier[y].clone()))?;
                join_tab[x * n + y] = lub as u32;
                join_tab[y * n + x] = lub as u32;

                let lb: Vec<usize> =
                    (0..n).filter(|&z| leq.get(z, x) && leq.get(z, y)).collect();
                let glb = lb
                    .iter()
                    .copied()
                    .find(|&m| lb.iter().all(|&z| leq.get(z, m)))
                    .ok_or_else(|| LatticeError::NoGlb(carrier[x].clone(), carrier[y].clone()))?;
                meet_tab[x * n + y] = glb as u32;
                meet_tab[y * n + x] = glb as u32;
            }
        }

        // With all pairwise bounds present, folding reaches 0 and 1.
        let bottom = (0..n).fold(0, |acc, x| meet_tab[acc * n + x] as usize);
        let top = (0..n).fold(0, |acc, x| join_tab[acc * n + x] as usize);
        Ok(FiniteLattice { carrier, leq, join_tab, meet_tab, bottom, top })
    }

    /// Convenience constructor from explicit order pairs (taken as given).
    pub fn from_pairs(carrier: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let n = carrier.len();
        let mut leq = BitMatrix::new(n);
        for &(x, y) in pairs {
            leq.set(x, y, true);
        }
        Self::from_order(carrier, leq)
    }

    /// The lattice of an up-set family under inclusion. Joins are unions and
    /// meets are intersections, both members by closure of the family.
    pub fn from_upset_family(family: &UpSetFamily) -> Self {
        let n = family.len();
        let names = family.carrier().to_vec();
        let carrier: Vec<String> = family.sets().iter().map(|s| s.render(&names)).collect();
        let mut leq = BitMatrix::new(n);
        for (i, &a) in family.sets().iter().enumerate() {
            for (j, &b) in family.sets().iter().enumerate() {
                if a.is_subset_of(b) {
                    leq.set(i, j, true);
                }
            }
        }
        let mut join_tab = vec![0u32; n * n];
        let mut meet_tab = vec![0u32; n * n];
        for (i, &a) in family.sets().iter().enumerate() {
            for (j, &b) in family.sets().iter().enumerate() {
                join_tab[i * n + j] =
                    family.index_of(a.union(b)).expect("family closed under union") as u32;
                meet_tab[i * n + j] = family
                    .index_of(a.intersection(b))
                    .expect("family closed under intersection") as u32;
            }
        }
        let bottom = family.index_of(Subset::empty(names.len())).expect("empty set present");
        let top = family.index_of(Subset::full(names.len())).expect("full carrier present");
        FiniteLattice { carrier, leq, join_tab, meet_tab, bottom, top }
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

    pub fn name(&self, x: usize) -> &str {
        &self.carrier[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == name)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.get(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq.get(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join_tab[x * self.len() + y] as usize
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet_tab[x * self.len() + y] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join over any elements; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet over any elements; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Row of the order matrix for `x`: the principal up-set as words.
    pub fn up_row(&self, x: usize) -> &[u64] {
        self.leq.row(x)
    }

    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.leq.get(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// First triple breaking `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Elements `a != 0` such that `a = b ∨ c` forces `a = b` or `a = c`.
    /// On a finite lattice these are exactly the completely join-irreducible
    /// elements.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&a| {
                if a == self.bottom {
                    return false;
                }
                for b in 0..n {
                    for c in 0..n {
                        if b != a && c != a && self.join(b, c) == a {
                            return false;
                        }
                    }
                }
                true
            })
            .collect()
    }

    /// Greatest `x` with `a ∧ x <= b`, when it exists.
    pub fn implication(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        let candidates: Vec<usize> =
            (0..self.len()).filter(|&x| self.leq(self.meet(a, x), b)).collect();
        candidates
            .iter()
            .copied()
            .find(|&m| candidates.iter().all(|&x| self.leq(x, m)))
            .ok_or_else(|| {
                LatticeError::NoRelativePseudocomplement(
                    self.carrier[a].clone(),
                    self.carrier[b].clone(),
                )
            })
    }

    /// Least `x` with `b <= a ∨ x`, when it exists. Written `a <- b`.
    pub fn coimplication(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        let candidates: Vec<usize> =
            (0..self.len()).filter(|&x| self.leq(b, self.join(a, x))).collect();
        candidates
            .iter()
            .copied()
            .find(|&m| candidates.iter().all(|&x| self.leq(m, x)))
            .ok_or_else(|| {
                LatticeError::NoCoimplication(self.carrier[a].clone(), self.carrier[b].clone())
            })
    }

    pub fn is_heyting(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.implication(a, b).is_ok()))
    }

    pub fn is_heyting_brouwer(&self) -> bool {
        let n = self.len();
        self.is_heyting()
            && (0..n).all(|a| (0..n).all(|b| self.coimplication(a, b).is_ok()))
    }

    /// `x ∧ ⋁S = ⋁{x ∧ y | y ∈ S}` over all pairs `(x, S)`, exhaustively on
    /// small carriers and on seeded random subsets beyond.
    pub fn check_jid(&self) -> bool {
        self.check_jid_with(DEFAULT_JID_EXHAUSTIVE, DEFAULT_JID_SAMPLES, JID_SAMPLE_SEED)
    }

    pub fn check_jid_with(&self, exhaustive: usize, samples: usize, seed: u64) -> bool {
        self.check_distributive_law(true, exhaustive, samples, seed)
    }

    /// Dual law `x ∨ ⋀S = ⋀{x ∨ y | y ∈ S}`.
    pub fn check_mid(&self) -> bool {
        self.check_mid_with(DEFAULT_JID_EXHAUSTIVE, DEFAULT_JID_SAMPLES, JID_SAMPLE_SEED)
    }

    pub fn check_mid_with(&self, exhaustive: usize, samples: usize, seed: u64) -> bool {
        self.check_distributive_law(false, exhaustive, samples, seed)
    }

    fn check_distributive_law(
        &self,
        jid: bool,
        exhaustive: usize,
        samples: usize,
        seed: u64,
    ) -> bool {
        let n = self.len();
        let holds_for = |subset: &[usize]| -> bool {
            for x in 0..n {
                let (lhs, rhs) = if jid {
                    let big = self.join_all(subset.iter().copied());
                    (
                        self.meet(x, big),
                        self.join_all(subset.iter().map(|&y| self.meet(x, y))),
                    )
                } else {
                    let big = self.meet_all(subset.iter().copied());
                    (
                        self.join(x, big),
                        self.meet_all(subset.iter().map(|&y| self.join(x, y))),
                    )
                };
                if lhs != rhs {
                    return false;
                }
            }
            true
        };

        if n <= exhaustive {
            for bits in 0..1u64 << n {
                let subset: Vec<usize> = (0..n).filter(|&i| bits >> i & 1 == 1).collect();
                if !holds_for(&subset) {
                    return false;
                }
            }
            true
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let subset: Vec<usize> = (0..n).filter(|_| rng.gen::<bool>()).collect();
                if !holds_for(&subset) {
                    return false;
                }
            }
            true
        }
    }

    /// Every element is the join of the join-irreducibles below it.
    pub fn is_spatial(&self) -> bool {
        let irr = self.join_irreducibles();
        (0..self.len()).all(|a| {
            let below = irr.iter().copied().filter(|&j| self.leq(j, a));
            self.join_all(below) == a
        })
    }

    /// The covering pairs `(a, b)` with `a ≺ b`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Every interval `x < y` contains a covering pair `x <= a ≺ b <= y`.
    pub fn is_weakly_atomic(&self) -> bool {
        let covers = self.covers();
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y)
                    && !covers
                        .iter()
                        .any(|&(a, b)| self.leq(x, a) && self.leq(b, y))
                {
                    return false;
                }
            }
        }
        true
    }

    /// The quasiorder on join-irreducibles with the order reversed:
    /// `j ◁ k` iff `k <= j` in the lattice. Needs distributivity.
    pub fn birkhoff_dual(&self) -> Result<QuasiOrder, LatticeError> {
        if !self.is_distributive() {
            return Err(LatticeError::NotDistributive);
        }
        let irr = self.join_irreducibles();
        let m = irr.len();
        let carrier: Vec<String> = irr.iter().map(|&j| self.carrier[j].clone()).collect();
        let rows: Vec<Subset> = irr
            .iter()
            .map(|&j| {
                Subset::from_indices(m, (0..m).filter(|&k| self.leq(irr[k], j)))
            })
            .collect();
        Ok(QuasiOrder::validate(carrier, rows)?)
    }

    pub fn profile(&self) -> LatticeProfile {
        LatticeProfile {
            distributive: self.is_distributive(),
            heyting: self.is_heyting(),
            heyting_brouwer: self.is_heyting_brouwer(),
            spatial: self.is_spatial(),
            weakly_atomic: self.is_weakly_atomic(),
            jid: self.check_jid(),
            mid: self.check_mid(),
        }
    }
}

/// Verified structural flags of a finite lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeProfile {
    pub distributive: bool,
    pub heyting: bool,
    pub heyting_brouwer: bool,
    pub spatial: bool,
    pub weakly_atomic: bool,
    pub jid: bool,
    pub mid: bool,
}

/// The map `x ↦ {j ∈ J(L) | j <= x}` into the up-sets of the dual order,
/// returned with the dual and its family so callers can check it is an
/// isomorphism.
pub fn birkhoff_map(l: &FiniteLattice) -> Result<(QuasiOrder, UpSetFamily, Vec<Subset>), LatticeError> {
    let dual = l.birkhoff_dual()?;
    let family = upsets(&dual)?;
    let irr = l.join_irreducibles();
    let m = irr.len();
    let images: Vec<Subset> = (0..l.len())
        .map(|x| Subset::from_indices(m, (0..m).filter(|&k| l.leq(irr[k], x))))
        .collect();
    Ok((dual, family, images))
}
