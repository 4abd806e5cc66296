//! Borel–Bott–Weil cohomology of equivariant bundles on Grassmannians and
//! orthogonal Grassmannians, Schur functor calculus, and the locally free
//! resolutions of pushed-forward spinor bundles built from them.
//!
//! Every result is exact: weights live in doubled-integer coordinates and
//! all multiplicities and dimensions are integers.

pub mod bbw;
pub mod diagrams;
pub mod error;
pub mod resolution;
pub mod tensor;
pub mod verify;
pub mod weyl;

pub use bbw::{BundleExpr, Carrier, GradedRepList, PointType, SpaceParams};
pub use diagrams::{DiagramFilter, Rectangle, YoungDiagram};
pub use error::{Error, Result};
pub use resolution::{GeneratorSet, Resolution, ResolutionTerm};
pub use tensor::{SchurSum, ShiftedSchurSum};
pub use verify::{CaseKind, CriterionReport, ExtTable, Lemma, Status, SweepOutcome};
pub use weyl::{Dominantization, Family, LieType, RepLabel, Sign, Weight};
