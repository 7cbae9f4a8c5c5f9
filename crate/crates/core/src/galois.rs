//! Galois connection pairs on finite lattices.
//!
//! A pair of self-maps `(f, g)` is a Galois connection when
//! `f(p) <= q  iff  p <= g(q)` for all `p`, `q`. Validation is offered both
//! by that adjunction law directly and by the order-theoretic
//! characterization (unit, counit, monotonicity); the two must agree. Either
//! adjoint determines the other by a join (respectively meet) formula.

use crate::lattice::FiniteLattice;
use std::fmt;
use thiserror::Error;

/// Which implication of the adjunction equivalence failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `p <= g(q)` holds but `f(p) <= q` does not.
    Forward,
    /// `f(p) <= q` holds but `p <= g(q)` does not.
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Forward => write!(f, "=>"),
            Direction::Backward => write!(f, "<="),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaloisError {
    #[error("adjunction fails at ({p}, {q}) in direction {direction}")]
    AdjunctionFails { p: String, q: String, direction: Direction },
    #[error("unit law fails at {0}: p <= g(f(p)) does not hold")]
    UnitFails(String),
    #[error("counit law fails at {0}: f(g(q)) <= q does not hold")]
    CounitFails(String),
    #[error("{map} is not monotone: {x} <= {y} but the images are not ordered")]
    NotMonotone { map: char, x: String, y: String },
    #[error("map has no right adjoint: derived pair fails adjunction at ({p}, {q})")]
    NotResiduated { p: String, q: String },
    #[error("map has no left adjoint: derived pair fails adjunction at ({p}, {q})")]
    NotCoResiduated { p: String, q: String },
    #[error("map must assign every carrier element: got {got} entries for {expected}")]
    WrongArity { got: usize, expected: usize },
}

/// A validated order-preserving Galois connection `(f, g)` on one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisPair {
    base: FiniteLattice,
    f: Vec<usize>,
    g: Vec<usize>,
}

impl GaloisPair {
    /// Validates by the adjunction law, reporting the first witnessing pair.
    pub fn validate(
        base: FiniteLattice,
        f: Vec<usize>,
        g: Vec<usize>,
    ) -> Result<Self, GaloisError> {
        check_arity(&base, &f)?;
        check_arity(&base, &g)?;
        if let Some(err) = adjunction_witness(&base, &f, &g) {
            return Err(err);
        }
        Ok(GaloisPair { base, f, g })
    }

    /// Validates via unit/counit plus monotonicity. Accepts exactly the same
    /// pairs as [`GaloisPair::validate`].
    pub fn validate_by_characterization(
        base: FiniteLattice,
        f: Vec<usize>,
        g: Vec<usize>,
    ) -> Result<Self, GaloisError> {
        check_arity(&base, &f)?;
        check_arity(&base, &g)?;
        for (map, name) in [(&f, 'f'), (&g, 'g')] {
            for x in 0..base.len() {
                for y in 0..base.len() {
                    if base.leq(x, y) && !base.leq(map[x], map[y]) {
                        return Err(GaloisError::NotMonotone {
                            map: name,
                            x: base.name(x).to_string(),
                            y: base.name(y).to_string(),
                        });
                    }
                }
            }
        }
        for p in 0..base.len() {
            if !base.leq(p, g[f[p]]) {
                return Err(GaloisError::UnitFails(base.name(p).to_string()));
            }
        }
        for q in 0..base.len() {
            if !base.leq(f[g[q]], q) {
                return Err(GaloisError::CounitFails(base.name(q).to_string()));
            }
        }
        Ok(GaloisPair { base, f, g })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.base
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn g(&self) -> &[usize] {
        &self.g
    }

    pub fn f_at(&self, p: usize) -> usize {
        self.f[p]
    }

    pub fn g_at(&self, q: usize) -> usize {
        self.g[q]
    }

    pub fn into_parts(self) -> (FiniteLattice, Vec<usize>, Vec<usize>) {
        (self.base, self.f, self.g)
    }
}

fn check_arity(base: &FiniteLattice, map: &[usize]) -> Result<(), GaloisError> {
    if map.len() != base.len() || map.iter().any(|&x| x >= base.len()) {
        return Err(GaloisError::WrongArity { got: map.len(), expected: base.len() });
    }
    Ok(())
}

fn adjunction_witness(base: &FiniteLattice, f: &[usize], g: &[usize]) -> Option<GaloisError> {
    for p in 0..base.len() {
        for q in 0..base.len() {
            let lhs = base.leq(f[p], q);
            let rhs = base.leq(p, g[q]);
            if lhs != rhs {
                let direction = if rhs { Direction::Forward } else { Direction::Backward };
                return Some(GaloisError::AdjunctionFails {
                    p: base.name(p).to_string(),
                    q: base.name(q).to_string(),
                    direction,
                });
            }
        }
    }
    None
}

/// `g(q) = ⋁{p | f(p) <= q}`, then verifies the pair. Fails when `f` is not
/// residuated (does not preserve joins).
pub fn right_adjoint_of(base: &FiniteLattice, f: &[usize]) -> Result<Vec<usize>, GaloisError> {
    check_arity(base, f)?;
    let g: Vec<usize> = (0..base.len())
        .map(|q| base.join_all((0..base.len()).filter(|&p| base.leq(f[p], q))))
        .collect();
    match adjunction_witness(base, f, &g) {
        None => Ok(g),
        Some(GaloisError::AdjunctionFails { p, q, .. }) => {
            Err(GaloisError::NotResiduated { p, q })
        }
        Some(other) => Err(other),
    }
}

/// `f(p) = ⋀{q | p <= g(q)}`, then verifies the pair. Dual of
/// [`right_adjoint_of`].
pub fn left_adjoint_of(base: &FiniteLattice, g: &[usize]) -> Result<Vec<usize>, GaloisError> {
    check_arity(base, g)?;
    let f: Vec<usize> = (0..base.len())
        .map(|p| base.meet_all((0..base.len()).filter(|&q| base.leq(p, g[q]))))
        .collect();
    match adjunction_witness(base, &f, g) {
        None => Ok(f),
        Some(GaloisError::AdjunctionFails { p, q, .. }) => {
            Err(GaloisError::NotCoResiduated { p, q })
        }
        Some(other) => Err(other),
    }
}

/// Checks that `f` carries joins of subsets to joins, exhaustively on small
/// carriers (binary joins and the empty join cover the rest on a finite
/// lattice, and are always checked).
pub fn preserves_joins(base: &FiniteLattice, f: &[usize], exhaustive: usize) -> bool {
    let n = base.len();
    if f[base.bottom()] != base.bottom() {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            if f[base.join(x, y)] != base.join(f[x], f[y]) {
                return false;
            }
        }
    }
    if n <= exhaustive {
        for bits in 0..1u64 << n {
            let members = (0..n).filter(|&i| bits >> i & 1 == 1);
            let joined = base.join_all(members.clone());
            if f[joined] != base.join_all(members.map(|i| f[i])) {
                return false;
            }
        }
    }
    true
}

/// Dual of [`preserves_joins`]: meets of subsets map to meets.
pub fn preserves_meets(base: &FiniteLattice, g: &[usize], exhaustive: usize) -> bool {
    let n = base.len();
    if g[base.top()] != base.top() {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            if g[base.meet(x, y)] != base.meet(g[x], g[y]) {
                return false;
            }
        }
    }
    if n <= exhaustive {
        for bits in 0..1u64 << n {
            let members = (0..n).filter(|&i| bits >> i & 1 == 1);
            let met = base.meet_all(members.clone());
            if g[met] != base.meet_all(members.map(|i| g[i])) {
                return false;
            }
        }
    }
    true
}
