//! Homomorphisms into `(ℤ⁺)² ⊔ {∞}` that separate all distinct canonical forms.

use refmon_core::{certificate_from_fn, CertificateHom, Presentation, TargetMonoid, TargetValue};

use crate::error::PosetError;
use crate::poset::PrimePoset;

/// One certificate per prime `q`: `q ↦ (1, 0)` (or `∞` when `q ◁ q`), primes strictly above
/// `q` to `∞`, all others to `0`.
///
/// For distinct canonical forms, a prime `q` where they differ with no differing prime
/// strictly above it is not absorbed in either, so the certificate at `q` tells them apart.
pub fn separating_certificates(
    p: &PrimePoset,
    presentation: &Presentation,
) -> Result<Vec<CertificateHom>, PosetError> {
    (0..p.len())
        .map(|q| {
            let name = format!("sep_{}", p.primes[q]);
            let image = |g: &str| {
                let r = p
                    .primes
                    .iter()
                    .position(|x| x == g)
                    .expect("prime generator");
                if r == q {
                    if p.is_idempotent(q) {
                        TargetValue::Infinity
                    } else {
                        TargetValue::pair(1, 0)
                    }
                } else if p.below(q, r) {
                    TargetValue::Infinity
                } else {
                    TargetValue::pair(0, 0)
                }
            };
            Ok(certificate_from_fn(
                presentation,
                name,
                TargetMonoid::PlanePlusInfinity,
                image,
            )?)
        })
        .collect()
}
