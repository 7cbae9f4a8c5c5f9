//! GC-frames and their complex algebras.
//!
//! A GC-frame is a quasiordered set with a relation `R` satisfying the
//! compatibility condition `>= ∘ R ∘ >= ⊆ R`. Its complex algebra lives on
//! the up-sets of the quasiorder: unions, intersections, the approximation
//! operators of `R` (which stay inside the up-sets exactly because of the
//! compatibility condition), and, depending on the signature, implication
//! and co-implication on up-sets.

use crate::bits::Subset;
use crate::galois::{GaloisError, GaloisPair};
use crate::lattice::FiniteLattice;
use crate::order::{
    rauszer_coimplication, rauszer_implication, upsets, OrderError, QuasiOrder, UpSetFamily,
};
use crate::rough::{ApproximationSpace, RoughError};
use crate::Signature;
use thiserror::Error;

/// Largest up-set family a complex algebra will materialize tables for.
pub const DEFAULT_FAMILY_CAP: usize = 1024;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrameError {
    #[error("compatibility violated: {x} <= {xp}, {x} R {y}, {yp} <= {y}, but not {xp} R {yp}")]
    CrViolation { x: String, xp: String, y: String, yp: String },
    #[error("up-set family has {size} members, complex algebra cap is {cap}")]
    FamilyTooLarge { size: usize, cap: usize },
    #[error("{set} leaves the up-sets under {op}")]
    ClosureViolation { set: String, op: String },
    #[error("operation {op} is not part of signature {signature}")]
    UnsupportedOperation { op: String, signature: Signature },
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Rough(#[from] RoughError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// A quasiordered carrier with a compatible relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCFrame {
    order: QuasiOrder,
    rel: Vec<Subset>,
}

impl GCFrame {
    /// Validates the compatibility condition by comparing the relational
    /// composition `>= ∘ R ∘ >=` with `R`; a gap yields a witness quadruple.
    pub fn validate(order: QuasiOrder, rel: Vec<Subset>) -> Result<Self, FrameError> {
        let n = order.len();
        assert_eq!(rel.len(), n, "one relation row per frame point");
        for (xp, yp) in composition_gap(&order, &rel) {
            // Recover the inner witnesses for the report.
            for x in 0..n {
                if !order.leq(x, xp) {
                    continue;
                }
                if let Some(y) = rel[x].iter().find(|&y| order.leq(yp, y)) {
                    return Err(FrameError::CrViolation {
                        x: order.name(x).to_string(),
                        xp: order.name(xp).to_string(),
                        y: order.name(y).to_string(),
                        yp: order.name(yp).to_string(),
                    });
                }
            }
            unreachable!("composition gap must have a witness");
        }
        Ok(GCFrame { order, rel })
    }

    pub fn order(&self) -> &QuasiOrder {
        &self.order
    }

    pub fn relation(&self) -> &[Subset] {
        &self.rel
    }

    pub fn relates(&self, x: usize, y: usize) -> bool {
        self.rel[x].contains(y)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.rel[x].iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// The rough operators of `R` over the frame carrier.
    pub fn approximation_space(&self) -> ApproximationSpace {
        ApproximationSpace::new(self.order.carrier().to_vec(), self.rel.clone())
            .expect("frame carrier fits the approximation bound")
    }
}

/// Pairs present in `>= ∘ R ∘ >=` but missing from `R`, in scan order.
fn composition_gap<'a>(
    order: &'a QuasiOrder,
    rel: &'a [Subset],
) -> impl Iterator<Item = (usize, usize)> + 'a {
    let n = order.len();
    (0..n).flat_map(move |xp| {
        (0..n).filter_map(move |yp| {
            let composed = order
                .down_set(xp)
                .iter()
                .any(|x| rel[x].intersects(order.up_set(yp)));
            (composed && !rel[xp].contains(yp)).then_some((xp, yp))
        })
    })
}

/// The quantifier form of the compatibility condition, kept alongside the
/// composition form so the two can be checked against each other.
pub fn cr_quantifier_witness(
    order: &QuasiOrder,
    rel: &[Subset],
) -> Option<(usize, usize, usize, usize)> {
    let n = order.len();
    for x in 0..n {
        for xp in 0..n {
            if !order.leq(x, xp) {
                continue;
            }
            for y in rel[x].iter() {
                for yp in 0..n {
                    if order.leq(yp, y) && !rel[xp].contains(yp) {
                        return Some((x, xp, y, yp));
                    }
                }
            }
        }
    }
    None
}

/// The complex algebra of a GC-frame: the up-set lattice with the rough
/// operators, plus implication / co-implication when the signature has them.
#[derive(Debug, Clone)]
pub struct ComplexAlgebra {
    frame: GCFrame,
    family: UpSetFamily,
    lattice: FiniteLattice,
    upper_map: Vec<usize>,
    lower_map: Vec<usize>,
    signature: Signature,
}

impl ComplexAlgebra {
    pub fn build(frame: GCFrame, signature: Signature) -> Result<Self, FrameError> {
        let family = upsets(frame.order())?;
        if family.len() > DEFAULT_FAMILY_CAP {
            return Err(FrameError::FamilyTooLarge {
                size: family.len(),
                cap: DEFAULT_FAMILY_CAP,
            });
        }
        let space = frame.approximation_space();
        let names = frame.order().carrier();
        let mut upper_map = Vec::with_capacity(family.len());
        let mut lower_map = Vec::with_capacity(family.len());
        for &s in family.sets() {
            let up = space.upper(s);
            upper_map.push(family.index_of(up).ok_or_else(|| FrameError::ClosureViolation {
                set: s.render(names),
                op: "upper".into(),
            })?);
            let down = space.lower(s);
            lower_map.push(family.index_of(down).ok_or_else(|| {
                FrameError::ClosureViolation { set: s.render(names), op: "lower".into() }
            })?);
        }
        let lattice = FiniteLattice::from_upset_family(&family);
        Ok(ComplexAlgebra { frame, family, lattice, upper_map, lower_map, signature })
    }

    pub fn frame(&self) -> &GCFrame {
        &self.frame
    }

    pub fn family(&self) -> &UpSetFamily {
        &self.family
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn set_of(&self, elem: usize) -> Subset {
        self.family.sets()[elem]
    }

    pub fn elem_of(&self, set: Subset) -> Option<usize> {
        self.family.index_of(set)
    }

    pub fn upper_elem(&self, elem: usize) -> usize {
        self.upper_map[elem]
    }

    pub fn lower_elem(&self, elem: usize) -> usize {
        self.lower_map[elem]
    }

    /// Implication of two carrier elements, available from `HGC` upward.
    pub fn implication_elem(&self, a: usize, b: usize) -> Result<usize, FrameError> {
        if !self.signature.has_implication() {
            return Err(FrameError::UnsupportedOperation {
                op: "->".into(),
                signature: self.signature,
            });
        }
        let imp = rauszer_implication(self.frame.order(), self.set_of(a), self.set_of(b))?;
        Ok(self.family.index_of(imp).expect("implication of up-sets is an up-set"))
    }

    /// Co-implication of two carrier elements, `HBGC` only.
    pub fn coimplication_elem(&self, a: usize, b: usize) -> Result<usize, FrameError> {
        if !self.signature.has_coimplication() {
            return Err(FrameError::UnsupportedOperation {
                op: "<-".into(),
                signature: self.signature,
            });
        }
        let co = rauszer_coimplication(self.frame.order(), self.set_of(a), self.set_of(b))?;
        Ok(self.family.index_of(co).expect("co-implication of up-sets is an up-set"))
    }

    /// Packages the approximation operators as a Galois pair over the up-set
    /// lattice; validation must succeed on every valid frame.
    pub fn as_galois_pair(&self) -> Result<GaloisPair, FrameError> {
        Ok(GaloisPair::validate(
            self.lattice.clone(),
            self.upper_map.clone(),
            self.lower_map.clone(),
        )?)
    }
}
