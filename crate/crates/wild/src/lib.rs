//! Exact arithmetic for the wild refinement monoids 𝓜 and 𝓜̄ and for `M0`.
//!
//! Elements are kept in leveled normal forms; equality, order, addition and refinement are
//! total. Truncations expose the same monoids as finite presentations so that every closed
//! form can be checked against the bounded word-problem engine.

pub mod error;
pub mod ideal;
pub mod m;
pub mod m0;
pub mod mbar;
pub mod term;
pub mod truncation;

pub use error::WildError;
pub use ideal::{cong_mod_ideal, ideal_member, q_map, OIdealId, WildElem};
pub use m::{m_refine, MElem};
pub use m0::M0Elem;
pub use mbar::{mbar_refine, MBarElem};
pub use term::{m_generator, mbar_generator, parse_m_elem, parse_mbar_elem};
pub use truncation::{
    named_certificate, named_certificate_over, named_target, separating_certificates,
    truncation_presentation, Family, NamedCert, Truncation,
};
