//! Radical, Wedderburn decomposition, matrix units and certificates.

mod certify;
mod quaternion;
mod radical;
mod units;
mod wedderburn;

pub use certify::{check_class, require_certificates, verify_extension, ClaimCheck, ExtensionVerification};
pub use radical::{is_nilpotent_subspace, radical};
pub use units::{division_matrix_units, DivisionBlock, index_of_nilpotence, is_matricial, matrix_units, MatricialVerdict, MatrixUnitsJson, MatrixUnitsSystem, NonMatricialReason};
pub use wedderburn::{wedderburn, Component, ComponentJson, WedderburnJson, WedderburnReport};
