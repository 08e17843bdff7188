//! Bounded, three-valued property checks over any monoid with an equality and order oracle:
//! the standard order-theoretic properties, irreducible elements and pedestals, quotients by
//! o-ideals, and wildness certificates.

pub mod error;
pub mod oracle;
pub mod property;
pub mod structure;
pub mod wildness;

pub use error::LabError;
pub use oracle::{
    invertible, multiple, spot_check, MBarOracle, MOracle, MonoidOracle, PresentationOracle,
    PrimOracle,
};
pub use property::{
    check_instance, check_property, replay, Context, Instance, PropertyId, PropertyOutcome,
    PropertyReport, Verdict,
};
pub use structure::{
    irreducibility, irreducibility_sweep, irreducibles, max_antisym_equal, max_cancel_equal,
    o_ideal_closure, pedestal, quotient_equal, IdealPredicate, Irreducibility, Pedestal,
};
pub use wildness::{
    further_tame_checks, replay_further, stable_finiteness_reason, tameness_evidence,
    wildness_certificate,
};
