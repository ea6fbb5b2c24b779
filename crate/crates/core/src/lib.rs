//! Finite Gödel algebras with modal operators and their dual forest frames.
//!
//! The crate is organised around a duality: finite Gödel algebras on one
//! side, finite forests on the other. `algebra` and `order` hold the two
//! kinds of structure, `duality` translates between them, `modal` adds box
//! and diamond operators on the algebra side, `frames` adds accessibility
//! relations on the forest side, and `search` enumerates small instances to
//! check the translation theorems and hunt for counterexamples.

pub mod algebra;
pub mod duality;
pub mod error;
pub mod frames;
pub mod modal;
pub mod order;
pub mod search;
pub mod sets;

pub use algebra::{Elem, GodelAlgebra, ViolationKind, ViolationReport};
pub use error::{Error, Result};
pub use frames::{OneRelClass, OneRelFrame, TwoRelFrame};
pub use modal::{Gao, InducedRelations, LawCheck, LawWitness, VarietyFlags};
pub use order::{Forest, Poset, Rel};
pub use search::{
    enum_forests, enum_gaos, enum_one_rel_frames, enum_two_rel_frames, find_counterexample,
    for_each_gao, for_each_one_rel_frame, for_each_two_rel_frame, property_catalog,
    theorem_catalog, verify_theorem, Budget, FrameDedup, HuntReport, TheoremReport,
    TwoRelConstraint,
};
pub use sets::{ElemSet, Mask, NodeSet};
