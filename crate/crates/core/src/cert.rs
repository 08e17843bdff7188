//! Certificate homomorphisms: generator images that respect every defining relation.

use serde::Serialize;

use crate::error::CoreError;
use crate::presentation::Presentation;
use crate::target::{TargetMonoid, TargetValue};
use crate::word::{GeneratorSet, Word};

/// A homomorphism from a presented monoid, validated against every relation at construction.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateHom {
    pub name: String,
    pub source: String,
    #[serde(skip)]
    source_gens: GeneratorSet,
    pub target: TargetMonoid,
    images: Vec<TargetValue>,
}

impl CertificateHom {
    pub fn images(&self) -> &[TargetValue] {
        &self.images
    }

    pub fn image_of(&self, generator: usize) -> &TargetValue {
        &self.images[generator]
    }

    /// Whether this certificate was built over `p` (same name and generator list).
    pub fn is_over(&self, p: &Presentation) -> bool {
        self.source == p.name && self.source_gens == p.gens
    }

    pub fn ensure_over(&self, p: &Presentation) -> Result<(), CoreError> {
        if self.is_over(p) {
            Ok(())
        } else {
            Err(CoreError::WrongPresentation {
                certificate: self.name.clone(),
                expected: self.source.clone(),
                found: p.name.clone(),
            })
        }
    }

    /// Sum over generators of exponent times image.
    pub fn apply(&self, w: &Word) -> TargetValue {
        apply_images(self.target, &self.images, w)
    }

    /// No generator is sent to zero and the target is cancellative and conical,
    /// which proves the source conical and stably finite.
    pub fn proves_stable_finiteness(&self) -> bool {
        self.target.is_cancellative_conical() && self.images.iter().all(|v| !v.is_zero())
    }

    /// A positive state: every generator goes to a strictly positive rational.
    /// Such a map proves conicality, stable finiteness and the archimedean property.
    pub fn is_positive_state(&self) -> bool {
        self.target == TargetMonoid::NonnegRational && self.images.iter().all(|v| !v.is_zero())
    }
}

fn apply_images(target: TargetMonoid, images: &[TargetValue], w: &Word) -> TargetValue {
    let mut acc = target.zero();
    for &(g, e) in w.terms() {
        acc = acc.add(&images[g].scale(e));
    }
    acc
}

/// Validates the images and every relation of `p`, then returns the certificate.
pub fn build_certificate(
    p: &Presentation,
    name: impl Into<String>,
    target: TargetMonoid,
    images: Vec<TargetValue>,
) -> Result<CertificateHom, CoreError> {
    if images.len() != p.gens.len() {
        return Err(CoreError::ImageCount {
            expected: p.gens.len(),
            found: images.len(),
        });
    }
    for (i, v) in images.iter().enumerate() {
        target.validate(v).map_err(|reason| CoreError::BadImage {
            generator: p.gens.name(i).to_string(),
            reason,
        })?;
    }
    for (index, r) in p.relations.iter().enumerate() {
        let lhs = apply_images(target, &images, &r.lhs);
        let rhs = apply_images(target, &images, &r.rhs);
        if lhs != rhs {
            return Err(CoreError::RelationViolated {
                index,
                relation: p.show_relation(r),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    Ok(CertificateHom {
        name: name.into(),
        source: p.name.clone(),
        source_gens: p.gens.clone(),
        target,
        images,
    })
}

/// Builds a certificate from a per-generator-name image function.
pub fn certificate_from_fn(
    p: &Presentation,
    name: impl Into<String>,
    target: TargetMonoid,
    image: impl Fn(&str) -> TargetValue,
) -> Result<CertificateHom, CoreError> {
    let images = p.gens.names().iter().map(|g| image(g)).collect();
    build_certificate(p, name, target, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    fn m0() -> Presentation {
        parse_presentation("monoid M0\ngenerators x0 y0 z0\nrelation x0 + y0 = x0 + z0").unwrap()
    }

    #[test]
    fn violated_relation_is_named() {
        let p = m0();
        let err = build_certificate(
            &p,
            "bad",
            TargetMonoid::NonnegInteger,
            vec![
                TargetValue::int(1),
                TargetValue::int(1),
                TargetValue::int(2),
            ],
        )
        .unwrap_err();
        match err {
            CoreError::RelationViolated {
                relation, lhs, rhs, ..
            } => {
                assert_eq!(relation, "x0 + y0 = x0 + z0");
                assert_eq!((lhs.as_str(), rhs.as_str()), ("2", "3"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infinity_certificate_on_m0() {
        let p = m0();
        let c = build_certificate(
            &p,
            "gbar",
            TargetMonoid::PlanePlusInfinity,
            vec![
                TargetValue::Infinity,
                TargetValue::pair(1, 0),
                TargetValue::pair(0, 1),
            ],
        )
        .unwrap();
        assert_eq!(c.apply(&p.gen("y0").unwrap()), TargetValue::pair(1, 0));
        assert_eq!(c.apply(&Word::zero()), TargetValue::pair(0, 0));
        assert!(!c.proves_stable_finiteness());
    }

    #[test]
    fn rejects_values_outside_target() {
        let p = m0();
        let err = build_certificate(
            &p,
            "neg",
            TargetMonoid::NonnegInteger,
            vec![
                TargetValue::int(-1),
                TargetValue::int(0),
                TargetValue::int(0),
            ],
        );
        assert!(matches!(err, Err(CoreError::BadImage { .. })));
    }
}
