//! Group diagrams, the shipped catalog, suspension and join builders,
//! Euler characteristics and the Cohen–Macaulay decision procedures.

mod builders;
mod catalog;
mod decide;
mod diagram;
mod euler;
mod fiber;
mod group;

pub use builders::{join_diagram, suspension_diagram};
pub use catalog::{Catalog, FiberEntry, HomogeneousPair, PairFile};
pub use decide::{classify_fibers, cm_decide, noncm_join, noncm_join_generator, orbifold_check, ClassifiedFibers, JoinOutcome};
pub use diagram::{DiagramFile, DiagramOptions, GroupDiagram};
pub use euler::{euler_characteristic, homogeneous_euler, predicted_euler_sign};
pub use fiber::{classify_betti, fiber_type, FiberType};
pub use group::CompactGroupData;
