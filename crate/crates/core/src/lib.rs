pub mod algebra;
pub mod error;
pub mod extensions;
pub mod factor;
pub mod field;
pub mod generate;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod regular;
pub mod structure;

pub use algebra::{AlgElement, Algebra, ClassLabel, ExtensionInstance, QuotientPresentation};
pub use error::{AlgError, Result};
pub use field::{Elem, Field, FieldDescriptor, Scalar};
