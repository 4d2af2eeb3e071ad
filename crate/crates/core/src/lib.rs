//! Classical propositional and first-order logic: syntax, truth-table and
//! forcing semantics, normal forms, a checked Hilbert proof system with
//! proof-transforming metatheorems, consequence operators, finite model
//! checking and gate circuits.

pub mod circuits;
pub mod consequence_ops;
pub mod fol_proofs;
pub mod fol_semantics;
pub mod fol_syntax;
pub mod normal_forms;
pub mod proof_kernel;
pub mod prop_semantics;
pub mod prop_syntax;
