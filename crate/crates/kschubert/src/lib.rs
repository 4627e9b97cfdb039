//! Exact symbolic Schubert calculus in the (torus-equivariant) Grothendieck
//! ring of flag varieties, with canonical lifts of Schubert classes to the
//! representation ring of the torus, Demazure-operator machinery, closed-form
//! structure-constant tables, and the rational Grothendieck ring of the
//! wonderful compactification of an adjoint semisimple group.
//!
//! Every table the crate produces is cross-checked by independent oracles:
//! a generic-point evaluation expansion, a monomial-window ideal reduction,
//! brute-force Bruhat order and Moebius functions, and the Weyl dimension
//! formula. All arithmetic is exact (arbitrary-precision rationals).
//!
//! The `parallel` feature (on by default) runs table generation data-parallel
//! with rayon; disabling it gives a pure sequential build with identical
//! output bytes.

pub mod demazure;
pub mod error;
pub mod laurent;
pub mod lifts;
pub mod oracle;
pub mod ratmat;
pub mod rootdata;
pub mod structconst;
pub mod verify;
pub mod weyl;
pub mod wonderful;

pub mod par;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Rat, TensorElem};
pub use rootdata::{CartanDatum, GroupLabel, RootSystem, Weight};
pub use weyl::{ElemId, ParabolicSubset, WeylElement, WeylGroup};

/// Root system plus its enumerated Weyl group; the context object every
/// higher-level operation takes.
pub struct GroupData {
    pub rs: RootSystem,
    pub wg: WeylGroup,
}

impl GroupData {
    pub fn build(datum: CartanDatum) -> Result<GroupData> {
        let rs = RootSystem::build(datum)?;
        let wg = WeylGroup::build(&rs);
        Ok(GroupData { rs, wg })
    }

    pub fn from_label(label: GroupLabel) -> Result<GroupData> {
        GroupData::build(CartanDatum::builtin(label))
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn label(&self) -> GroupLabel {
        self.rs.datum.label
    }
}
