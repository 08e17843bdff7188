//! Finitely presented commutative monoids.
//!
//! Words are exponent multisets over a [`GeneratorSet`]; a [`Presentation`] adds defining
//! relations. The word problem is answered by bounded breadth-first enumeration of
//! congruence classes ([`oracle`]) and by certificate homomorphisms into monoids with
//! exact arithmetic ([`cert`], [`target`]). Every verdict is a three-valued [`Decision`].

pub mod cert;
pub mod decision;
pub mod error;
pub mod morphism;
pub mod oracle;
pub mod parse;
pub mod presentation;
pub mod refine;
pub mod target;
pub mod word;

pub use cert::{build_certificate, certificate_from_fn, CertificateHom};
pub use decision::{Decision, SearchBound, Truth};
pub use error::CoreError;
pub use morphism::{check_homomorphism, check_isomorphism, compare_classes, Substitution};
pub use oracle::{decide_equal, decide_leq, enumerate_class, Complement, RewritePath, Separation};
pub use parse::{parse_presentation, parse_term, ParseError};
pub use presentation::{Presentation, Relation};
pub use refine::{find_refinement, RefinementMatrix};
pub use target::{Basis, FreeVec, TargetMonoid, TargetValue};
pub use word::{words_up_to, GeneratorSet, Word};
