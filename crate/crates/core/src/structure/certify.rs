//! Re-verification of the class claims attached to an extension instance.

use serde::Serialize;

use super::radical::radical;
use super::units::is_matricial;
use crate::algebra::{Algebra, ClassLabel, ExtensionInstance};
use crate::error::{AlgError, Result};

/// Outcome of checking one claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claimed: ClassLabel,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionVerification {
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub ideal: ClaimCheck,
    pub quotient: ClaimCheck,
}

impl ExtensionVerification {
    pub fn all_hold(&self) -> bool {
        self.ideal.holds && self.quotient.holds
    }
}

/// Checks a class claim for a finite-dimensional algebra.
///
/// In finite dimension, regular, unit-regular and semisimple coincide, so
/// those three claims reduce to a zero radical.
pub fn check_class(a: &Algebra, claim: ClassLabel) -> Result<ClaimCheck> {
    let (holds, detail) = match claim {
        ClassLabel::None => (true, "no claim".to_string()),
        ClassLabel::Matricial => {
            let v = is_matricial(a)?;
            match (&v.reason, &v.units) {
                (None, Some(u)) => (true, format!("matrix units of sizes {:?}", u.sizes)),
                (r, _) => (false, format!("not matricial: {r:?}")),
            }
        }
        ClassLabel::Fdss | ClassLabel::Regular | ClassLabel::UnitRegular => {
            let r = radical(a)?.dim();
            (r == 0, format!("radical dimension {r}"))
        }
    };
    Ok(ClaimCheck { claimed: claim, holds, detail })
}

/// Re-verifies `π` and both class claims of an extension.
pub fn verify_extension(ext: &ExtensionInstance) -> Result<ExtensionVerification> {
    ext.presentation.verify()?;
    let j = ext.presentation.ideal_algebra()?;
    Ok(ExtensionVerification {
        ideal_dim: j.algebra.dim(),
        quotient_dim: ext.quotient().dim(),
        ideal: check_class(&j.algebra, ext.ideal_class)?,
        quotient: check_class(ext.quotient(), ext.quotient_class)?,
    })
}

/// Fails with `CertificateMissing` unless both sides carry one of the
/// accepted claims and the claims verify.
pub fn require_certificates(
    ext: &ExtensionInstance,
    ideal_ok: &[ClassLabel],
    quotient_ok: &[ClassLabel],
) -> Result<ExtensionVerification> {
    if !ideal_ok.contains(&ext.ideal_class) {
        return Err(AlgError::CertificateMissing(format!(
            "ideal certified as {:?}, need one of {ideal_ok:?}",
            ext.ideal_class
        )));
    }
    if !quotient_ok.contains(&ext.quotient_class) {
        return Err(AlgError::CertificateMissing(format!(
            "quotient certified as {:?}, need one of {quotient_ok:?}",
            ext.quotient_class
        )));
    }
    let v = verify_extension(ext)?;
    if !v.ideal.holds {
        return Err(AlgError::CertificateMissing(format!("ideal claim fails: {}", v.ideal.detail)));
    }
    if !v.quotient.holds {
        return Err(AlgError::CertificateMissing(format!("quotient claim fails: {}", v.quotient.detail)));
    }
    Ok(v)
}
