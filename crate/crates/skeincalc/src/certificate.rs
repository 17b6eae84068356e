//! Reduction certificates: an explicit linear combination of relators
//! witnessing that a rewrite changed an element only modulo the relator
//! submodule.

use crate::error::Error;
use crate::relators::{relator, RelatorId};
use crate::ring::LaurentPoly;
use crate::skein::SkeinElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertStep {
    pub id: RelatorId,
    pub coeff: LaurentPoly,
}

/// Witness that `input - output = sum(coeff_i * relator(id_i))` exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub steps: Vec<CertStep>,
}

impl Certificate {
    pub fn new() -> Self {
        Certificate { steps: Vec::new() }
    }

    pub fn push(&mut self, id: RelatorId, coeff: LaurentPoly) {
        if !coeff.is_zero() {
            self.steps.push(CertStep { id, coeff });
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-evaluate the witnessed identity from scratch.
    pub fn verify(&self, input: &SkeinElement, output: &SkeinElement) -> Result<bool, Error> {
        let mut acc = input - output;
        for step in &self.steps {
            acc.add_scaled(&relator(&step.id)?, &-&step.coeff);
        }
        Ok(acc.is_zero())
    }
}
