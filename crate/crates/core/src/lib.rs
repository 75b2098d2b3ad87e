//! Exact computations with quiver algebras: graded models of `KQ/⟨ρ⟩`,
//! quadratic duals, Galois coverings, smash products and skew group
//! algebras, and bounded Koszulity checks via minimal graded resolutions.

pub mod algebra;
pub mod corpus;
pub mod covering;
pub mod dual;
pub mod error;
pub mod format;
pub mod group;
pub mod koszul;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod resolution;
pub mod smash;
pub mod structure;

pub use algebra::{AlgebraModel, HilbertMatrix, ModelElement, Presentation};
pub use error::{Error, RelationDiagnostic, Result};
pub use group::{FiniteGroup, GroupAction, GroupSpec, WeightFunction};
pub use linalg::{Matrix, Scalar, SparseVec};
pub use poly::PolyMatrix;
pub use quiver::{Path, PathCombination, Quiver};
pub use corpus::CorpusEntry;
pub use covering::{build_covering, cyclic_covering, Covering};
pub use dual::{dual_presentation, quadratic_check};
pub use format::{parse_presentation, serialize_presentation, Grading, PresentationDocument};
pub use koszul::{generation_check, is_koszul_to, GenerationVerdict, KoszulVerdict};
pub use resolution::{minimal_resolution, ResolutionReport};
pub use smash::{smash_product, SmashProduct};
