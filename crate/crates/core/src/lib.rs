pub mod algebra;
pub mod error;
pub mod field;
pub mod linalg;
pub mod maps;
pub mod structure;
pub mod uea;

pub use algebra::{Algebra, Element};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Poly, Subspace};
pub use maps::{HomBlock, Isomorphism, MapKind, MapSpace, MapSpaceKind};
pub use structure::{CoreKind, Decomposition, Quotient, StructureReport, SubspaceClass};
pub use uea::{Monomial, PbwElement, Polynomial};
