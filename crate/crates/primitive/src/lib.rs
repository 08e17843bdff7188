//! Primitive monoids `M(D, ◁)`: validation of the relation, canonical forms, presentations,
//! finite subsystems and separating certificates.

pub mod certs;
pub mod error;
pub mod poset;
pub mod subsystem;

pub use certs::separating_certificates;
pub use error::PosetError;
pub use poset::{
    all_posets, parse_poset, poset_to_text, presentation_of, validate_poset, PrimElem, PrimePoset,
};
pub use subsystem::{finite_subsystem, transition_between, Transition};
