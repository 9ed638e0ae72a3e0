//! JSON forms of algebras, elements and extension instances.

use serde::{Deserialize, Serialize};

use super::{AlgElement, Algebra, ClassLabel, ExtensionInstance};
use crate::error::{AlgError, Result};
use crate::field::{Field, FieldDescriptor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldDescriptor,
    pub dim: usize,
    /// `[i, j, k, "lambda"]`: `b_i b_j` has coefficient `lambda` on `b_k`.
    pub mul: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateClaims {
    pub ideal: ClassLabel,
    pub quotient: ClassLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionJson {
    pub algebra: AlgebraJson,
    pub ideal: Vec<Vec<String>>,
    pub certificates: CertificateClaims,
}

pub fn element_to_json(f: &Field, a: &[crate::field::Elem]) -> Vec<String> {
    a.iter().map(|c| f.format(c)).collect()
}

pub fn element_from_json(alg: &Algebra, v: &[String]) -> Result<AlgElement> {
    if v.len() != alg.dim() {
        return Err(AlgError::DimensionMismatch(format!(
            "element has {} coordinates, algebra has dimension {}",
            v.len(),
            alg.dim()
        )));
    }
    v.iter().map(|s| alg.field().parse(s)).collect()
}

impl Algebra {
    pub fn to_json(&self) -> AlgebraJson {
        let f = self.field();
        AlgebraJson {
            field: f.descriptor(),
            dim: self.dim(),
            mul: self
                .structure_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, f.format(&c)))
                .collect(),
            labels: Some(self.labels().to_vec()),
            identity: self.identity().map(|e| element_to_json(f, e)),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Algebra> {
        let f = Field::make(&j.field)?;
        let entries = j
            .mul
            .iter()
            .map(|(i, k, l, s)| Ok((*i, *k, *l, f.parse(s)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut a = Algebra::from_structure_constants(&f, j.dim, &entries)?;
        if let Some(labels) = &j.labels {
            a = a.with_labels(labels.clone())?;
        }
        if let Some(id) = &j.identity {
            let e = element_from_json(&a, id)?;
            if a.identity() != Some(&e) {
                return Err(AlgError::PreconditionFailed(
                    "declared identity does not act as an identity".into(),
                ));
            }
        }
        Ok(a)
    }

    pub fn parse_json(text: &str) -> Result<Algebra> {
        let j: AlgebraJson = serde_json::from_str(text).map_err(|e| AlgError::Parse(e.to_string()))?;
        Algebra::from_json(&j)
    }
}

impl ExtensionInstance {
    pub fn to_json(&self) -> ExtensionJson {
        let f = self.algebra().field();
        ExtensionJson {
            algebra: self.algebra().to_json(),
            ideal: self.ideal().basis().iter().map(|v| element_to_json(f, v)).collect(),
            certificates: CertificateClaims {
                ideal: self.ideal_class,
                quotient: self.quotient_class,
            },
        }
    }

    pub fn from_json(j: &ExtensionJson) -> Result<ExtensionInstance> {
        let a = Algebra::from_json(&j.algebra)?;
        let ideal = j
            .ideal
            .iter()
            .map(|v| element_from_json(&a, v))
            .collect::<Result<Vec<_>>>()?;
        ExtensionInstance::new(a, ideal, j.certificates.ideal, j.certificates.quotient)
    }

    pub fn parse_json(text: &str) -> Result<ExtensionInstance> {
        let j: ExtensionJson = serde_json::from_str(text).map_err(|e| AlgError::Parse(e.to_string()))?;
        ExtensionInstance::from_json(&j)
    }
}
