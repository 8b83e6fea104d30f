//! ABox modularization for SHIQ ontologies.
//!
//! This crate partitions the assertional part (ABox) of a SHIQ ontology into
//! per-individual modules that preserve all class and property entailments of
//! their signature individuals. Each module, taken together with the TBox, can
//! be reasoned over in isolation, which makes instance checking and instance
//! retrieval embarrassingly parallel.
//!
//! The crate is `no_std` (with `alloc`) and holds the algorithmic pieces:
//!
//! - [`model`]: ontology vocabulary, axioms, assertions, and indexes
//! - [`parser`]: the textual `.shiq` ontology format
//! - [`normalize`]: TBox normal form (NNF, simple form, min-rewriting)
//! - [`hierarchy`]: reflexive-transitive sub-role relation over `R`/`inv(R)`
//! - [`triggers`]: syntactic index of restriction patterns that make a role
//!   assertion classification-relevant
//! - [`extract`]: property-preserved modules, classification merges, equality
//!   candidates, and the union-find module partition
//! - [`oracle`]: a reference tableau reasoner used as ground truth at desk
//!   scale
//! - [`benchgen`]: deterministic synthetic ontology generator
//!
//! IO, persistence, stats, and the CLI live in the companion `aboxmod` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod benchgen;
pub mod extract;
pub mod hierarchy;
pub mod model;
pub mod normalize;
pub mod oracle;
pub mod parser;
pub mod triggers;
pub mod unionfind;

pub use extract::{modularize, module_of, Module, ModulePartition, OptLevel};
pub use hierarchy::RoleHierarchy;
pub use model::{Assertion, AssertionId, Axiom, Concept, ConceptName, Individual, Ontology, Role, RoleName};
pub use normalize::{normalize, NormalizedTBox};
pub use oracle::Oracle;
pub use parser::{parse, serialize, ParseError, SourceSpan};
pub use triggers::{build_trigger_index, Trigger, TriggerIndex};
