//! Module realizations of the algebra and the functors Π and twisting by `ω_b`.

mod action;
mod spec;
mod upoly;
mod vector;

pub use action::{act, module_axiom_defect};
pub use spec::{parity_flip, twist, twist_by, Family, ModuleParams, ModuleSpec};
pub use upoly::UPoly;
pub use vector::{Letter, ModuleVector, PolyVector, WeightVector};

use thiserror::Error;

use crate::algebra::Parity;
use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error("{element} does not act on family {family}")]
    UnsupportedGenerator { family: Family, element: String },
    #[error("vector does not belong to family {family}")]
    FamilyMismatch { family: Family },
    #[error("module is already twisted")]
    AlreadyTwisted,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Parity of a homogeneous vector as an element of `spec`, honoring Π.
pub fn vector_parity(spec: &ModuleSpec, v: &ModuleVector) -> Option<Parity> {
    let p = v.raw_parity()?;
    Some(if spec.is_parity_flipped() {
        p.flip()
    } else {
        p
    })
}
