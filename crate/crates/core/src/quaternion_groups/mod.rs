//! Finite subgroups of SU(2): cyclic, binary dihedral, and the binary
//! tetrahedral, octahedral and icosahedral groups.

pub mod element;
pub mod group;
pub mod quaternion;
pub mod word;

pub use element::GroupElement;
pub use group::{
    build_ade_group, conjugacy_classes, generate_group, trace, ConjugacyClass, FiniteSubgroup,
    DEFAULT_BOUND,
};
pub use quaternion::Quaternion;
pub use word::{Word, WordFamily, WordKind};
