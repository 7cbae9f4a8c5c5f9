//! Named small lattices shared by unit tests.

use crate::bits::BitMatrix;
use crate::lattice::{FiniteLattice, LatticeError};
use crate::order::QuasiOrder;

/// Builds a lattice from covering pairs, closing the order first.
pub(crate) fn lattice_from_covers(
    names: &[&str],
    covers: &[(usize, usize)],
) -> Result<FiniteLattice, LatticeError> {
    let carrier: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let q = QuasiOrder::closure_of_pairs(carrier.clone(), covers)?;
    FiniteLattice::from_order(carrier, BitMatrix::from_subset_rows(q.rows()))
}

/// The chain `c0 < c1 < ... < c{n-1}`.
pub(crate) fn chain(n: usize) -> FiniteLattice {
    let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let q = QuasiOrder::closure_of_pairs(names.clone(), &covers).unwrap();
    FiniteLattice::from_order(names, BitMatrix::from_subset_rows(q.rows())).unwrap()
}

/// The four-element Boolean lattice `0 < a,b < 1` with `a`, `b` incomparable.
pub(crate) fn b4() -> FiniteLattice {
    lattice_from_covers(&["0", "a", "b", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
}

/// The diamond with three atoms: the standard non-distributive modular lattice.
pub(crate) fn m3() -> FiniteLattice {
    lattice_from_covers(
        &["0", "x", "y", "z", "1"],
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .unwrap()
}

/// The pentagon: the standard non-modular lattice.
pub(crate) fn n5() -> FiniteLattice {
    lattice_from_covers(&["0", "a", "b", "c", "1"], &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)])
        .unwrap()
}

/// A bottom with two incomparable maximal elements: not a lattice.
pub(crate) fn fork3() -> Result<FiniteLattice, LatticeError> {
    lattice_from_covers(&["0", "a", "b"], &[(0, 1), (0, 2)])
}
