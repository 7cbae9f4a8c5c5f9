//! A finite-algebra toolkit for bounded distributive lattices carrying a
//! Galois connection.
//!
//! The pieces, bottom up:
//!
//! - [`order`]: finite quasiorders, their Alexandrov topologies of up-sets,
//!   least neighbourhoods, the topology/quasiorder bijection, and the
//!   implication and co-implication operators on up-sets;
//! - [`lattice`]: finite bounded lattices synthesized from an order, with
//!   distributivity, join-irreducibles, Heyting implication, Brouwer
//!   co-implication, spatiality and weak atomicity, and the dual order on
//!   join-irreducibles;
//! - [`galois`]: validation and mutual derivation of Galois connection
//!   pairs;
//! - [`rough`]: upper and lower approximation operators of an arbitrary
//!   relation, adjoint on the powerset;
//! - [`frame`]: GC-frames (quasiorder plus compatible relation) and their
//!   complex algebras over the up-sets;
//! - [`canonical`]: prime filters, the canonical frame, and the Stone-style
//!   embedding that is an isomorphism on finite carriers;
//! - [`spatial`]: the representation on join-irreducibles and its agreement
//!   with the canonical frame;
//! - [`term`]: a small term language with a parser, evaluator, and
//!   exhaustive identity checker;
//! - [`gen`], [`doc`], [`suite`]: seeded instance generation, the canonical
//!   interchange format, and batch property suites.

pub mod bits;
pub mod canonical;
pub mod doc;
pub mod frame;
pub mod galois;
pub mod gen;
pub mod lattice;
pub mod order;
pub mod report;
pub mod rough;
pub mod spatial;
pub mod suite;
pub mod term;

#[cfg(test)]
pub(crate) mod testutil;

use std::fmt;
use std::str::FromStr;

pub use bits::{BitMatrix, Subset};
pub use canonical::{canonical_frame, prime_filters, stone_map, CanonicalFrame, PrimeFilter};
pub use frame::{ComplexAlgebra, GCFrame};
pub use galois::GaloisPair;
pub use lattice::{FiniteLattice, LatticeProfile};
pub use order::{upsets, QuasiOrder, UpSetFamily};
pub use report::{LawCheck, LawReport};
pub use rough::ApproximationSpace;
pub use spatial::{build_spatial_frame, SpatialFrame};

/// Which operations an algebra carries: the bare lattice signature with the
/// Galois pair, plus implication, plus co-implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Signature {
    Bdlgc,
    Hgc,
    Hbgc,
}

impl Signature {
    pub fn has_implication(self) -> bool {
        matches!(self, Signature::Hgc | Signature::Hbgc)
    }

    pub fn has_coimplication(self) -> bool {
        matches!(self, Signature::Hbgc)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signature::Bdlgc => write!(f, "BDLGC"),
            Signature::Hgc => write!(f, "HGC"),
            Signature::Hbgc => write!(f, "HBGC"),
        }
    }
}

impl FromStr for Signature {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "BDLGC" => Ok(Signature::Bdlgc),
            "HGC" => Ok(Signature::Hgc),
            "HBGC" => Ok(Signature::Hbgc),
            other => Err(format!("unknown signature '{other}', expected BDLGC, HGC, or HBGC")),
        }
    }
}

/// Enumeration bound with the `LGC_MAX_CARRIER` environment override.
pub fn carrier_bound(default: usize) -> usize {
    std::env::var("LGC_MAX_CARRIER").ok().and_then(|v| v.parse().ok()).unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_parsing() {
        assert_eq!("BDLGC".parse::<Signature>().unwrap(), Signature::Bdlgc);
        assert_eq!("hgc".parse::<Signature>().unwrap(), Signature::Hgc);
        assert_eq!("HBGC".parse::<Signature>().unwrap(), Signature::Hbgc);
        assert!("heyting".parse::<Signature>().is_err());
    }

    #[test]
    fn signature_capabilities() {
        assert!(!Signature::Bdlgc.has_implication());
        assert!(Signature::Hgc.has_implication());
        assert!(!Signature::Hgc.has_coimplication());
        assert!(Signature::Hbgc.has_coimplication());
    }
}
