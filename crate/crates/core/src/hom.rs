//! Graded ring homomorphisms given by generator images.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::element::{check_same_ring, RingElement};
use crate::error::{Error, Result};
use crate::ideal::{from_vector, to_vector, torsion_relations};
use crate::linalg::{f2_kernel, z4_kernel};
use crate::ring::{Coefficients, Monomial, RingPresentation};

#[derive(Debug, Clone)]
pub struct RingHom {
    name: String,
    domain: Arc<RingPresentation>,
    codomain: Arc<RingPresentation>,
    images: Vec<RingElement>,
}

impl RingHom {
    /// Builds a hom from `(generator, image)` pairs and validates it: every
    /// generator gets an image of its own degree, multiples by the generator's
    /// order vanish, and every relation maps to zero.
    pub fn new(
        name: impl Into<String>,
        domain: &Arc<RingPresentation>,
        codomain: &Arc<RingPresentation>,
        images: &[(&str, &str)],
    ) -> Result<Self> {
        let name = name.into();
        let invalid = |reason: String| Error::InvalidHom {
            name: name.clone(),
            reason,
        };
        let mut table: Vec<Option<RingElement>> = vec![None; domain.nvars()];
        for (sym, img) in images {
            let i = domain.generator_index(sym).ok_or_else(|| {
                invalid(format!("`{sym}` is not a generator of {}", domain.name()))
            })?;
            table[i] = Some(RingElement::parse(codomain, img)?);
        }
        let images = table
            .into_iter()
            .zip(domain.generators())
            .map(|(img, g)| img.ok_or_else(|| invalid(format!("no image for `{}`", g.symbol))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(name, domain, codomain, images)
    }

    /// Like [`RingHom::new`] with images already built, in generator order.
    pub fn from_images(
        name: impl Into<String>,
        domain: &Arc<RingPresentation>,
        codomain: &Arc<RingPresentation>,
        images: Vec<RingElement>,
    ) -> Result<Self> {
        let hom = RingHom {
            name: name.into(),
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            images,
        };
        hom.validate()?;
        Ok(hom)
    }

    fn validate(&self) -> Result<()> {
        let invalid = |reason: String| Error::InvalidHom {
            name: self.name.clone(),
            reason,
        };
        if self.images.len() != self.domain.nvars() {
            return Err(invalid("wrong number of images".into()));
        }
        for (g, img) in self.domain.generators().iter().zip(&self.images) {
            check_same_ring(&self.codomain, img.ring())?;
            if !img.is_homogeneous_of(g.degree) {
                return Err(invalid(format!(
                    "image of `{}` is not of degree {}",
                    g.symbol, g.degree
                )));
            }
            if self.domain.coefficients() == Coefficients::Z && !img.scale(g.order as i64).is_zero()
            {
                return Err(invalid(format!(
                    "{}*{} does not map to zero",
                    g.order, g.symbol
                )));
            }
        }
        for rule in self.domain.rules() {
            let lhs = self.apply_monomial(&rule.lhs, 1);
            let rhs = self.apply_terms(rule.rhs.iter().cloned());
            if lhs != rhs {
                return Err(invalid(format!(
                    "relation with leading monomial {:?} is not preserved",
                    rule.lhs.0
                )));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Arc<RingPresentation> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<RingPresentation> {
        &self.codomain
    }

    pub fn images(&self) -> &[RingElement] {
        &self.images
    }

    pub fn identity(ring: &Arc<RingPresentation>) -> Self {
        let images = ring
            .generators()
            .iter()
            .map(|g| RingElement::generator(ring, &g.symbol).expect("own generator"))
            .collect();
        RingHom {
            name: format!("id_{}", ring.name()),
            domain: Arc::clone(ring),
            codomain: Arc::clone(ring),
            images,
        }
    }

    fn apply_monomial(&self, m: &Monomial, c: i64) -> RingElement {
        let mut acc = RingElement::constant(&self.codomain, c);
        for (img, &e) in self.images.iter().zip(m.exponents()) {
            if e > 0 {
                acc = &acc * &img.pow(e);
            }
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    fn apply_terms<I: IntoIterator<Item = (Monomial, i64)>>(&self, terms: I) -> RingElement {
        let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (m, c) in terms {
            for (k, v) in self.apply_monomial(&m, c).terms() {
                *acc.entry(k.clone()).or_insert(0) += v;
            }
        }
        RingElement::from_terms(&self.codomain, acc)
    }

    /// Substitutes generator images and normal-forms in the codomain.
    pub fn apply(&self, e: &RingElement) -> Result<RingElement> {
        check_same_ring(&self.domain, e.ring())?;
        Ok(self.apply_terms(e.terms().iter().map(|(m, c)| (m.clone(), *c))))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &RingHom) -> Result<RingHom> {
        check_same_ring(&self.codomain, &outer.domain)?;
        let images = self
            .images
            .iter()
            .map(|img| outer.apply(img))
            .collect::<Result<Vec<_>>>()?;
        Ok(RingHom {
            name: format!("{}∘{}", outer.name, self.name),
            domain: Arc::clone(&self.domain),
            codomain: Arc::clone(&outer.codomain),
            images,
        })
    }
}

/// `outer ∘ inner`.
pub fn compose(outer: &RingHom, inner: &RingHom) -> Result<RingHom> {
    inner.then(outer)
}

/// Substitutes generator images and normal-forms in the codomain.
pub fn apply_hom(h: &RingHom, e: &RingElement) -> Result<RingElement> {
    h.apply(e)
}

/// True iff the two homs agree on every normal monomial of degree at most `n`.
pub fn homs_equal_up_to_degree(h1: &RingHom, h2: &RingHom, n: u32) -> Result<bool> {
    check_same_ring(&h1.domain, &h2.domain)?;
    check_same_ring(&h1.codomain, &h2.codomain)?;
    for deg in 0..=n {
        for m in h1.domain.monomials_of_degree(deg) {
            if h1.apply_monomial(&m, 1) != h2.apply_monomial(&m, 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Generators of the kernel of `h` in one degree.
pub fn hom_kernel_slice(h: &RingHom, degree: u32) -> Result<Vec<RingElement>> {
    if degree == 0 {
        return Err(Error::InvalidArgument(
            "kernel slices need degree >= 1".into(),
        ));
    }
    let src = h.domain.graded_slice(degree);
    let dst = h.codomain.graded_slice(degree);
    let rows: Vec<Vec<u8>> = src
        .basis
        .iter()
        .map(|m| to_vector(&h.apply_monomial(m, 1), &dst))
        .collect();
    let n = src.len();
    let kernel = match (h.domain.coefficients(), h.codomain.coefficients()) {
        (Coefficients::F2, Coefficients::F2) => f2_kernel(&rows, dst.len())?,
        (_, Coefficients::Z) => {
            let mut rows = rows;
            rows.extend(torsion_relations(&dst));
            z4_kernel(&rows, dst.len())?
        }
        (Coefficients::Z, Coefficients::F2) => {
            let mut rows = rows;
            rows.extend((0..dst.len()).map(|i| {
                let mut v = vec![0u8; dst.len()];
                v[i] = 2;
                v
            }));
            z4_kernel(&rows, dst.len())?
        }
    };
    let mut out: Vec<RingElement> = Vec::new();
    for k in kernel {
        let e = from_vector(&h.domain, &src, &k[..n]);
        if !e.is_zero() && !out.contains(&e) {
            out.push(e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{hom, ring};

    fn el(id: &str, s: &str) -> RingElement {
        RingElement::parse(&ring(id).unwrap(), s).unwrap()
    }

    #[test]
    fn apply_examples() {
        let h = hom("res_D8_H1_F2").unwrap();
        assert_eq!(h.apply(&el("D8_F2", "w")).unwrap().to_string(), "a^2+a*b");
        let h = hom("res_H2_K3_F2").unwrap();
        assert_eq!(h.apply(&el("H2_F2", "u")).unwrap().to_string(), "t3^2");
        let h = hom("red_D8").unwrap();
        assert_eq!(
            h.apply(&el("D8_Z_FULL", "M")).unwrap().to_string(),
            "w*x+w*y"
        );
        let h = hom("res_D8_H2_Z").unwrap();
        assert_eq!(h.apply(&el("D8_Z_FULL", "Y")).unwrap().to_string(), "2*U");
    }

    #[test]
    fn kernels() {
        let k = hom_kernel_slice(&hom("res_D8_H1_F2").unwrap(), 1).unwrap();
        assert_eq!(k, vec![el("D8_F2", "x")]);
        let k = hom_kernel_slice(&hom("res_D8_H1_Z").unwrap(), 2).unwrap();
        assert_eq!(k, vec![el("D8_Z_FULL", "X")]);
        let k = hom_kernel_slice(&hom("res_D8_H3_F2").unwrap(), 1).unwrap();
        assert_eq!(k, vec![el("D8_F2", "y")]);
    }

    #[test]
    fn rejects_bad_homs() {
        let d8 = ring("D8_F2").unwrap();
        let h1 = ring("H1_F2").unwrap();
        // xy = 0 must map to zero.
        let r = RingHom::new("bad", &d8, &h1, &[("x", "a"), ("y", "a"), ("w", "a*b")]);
        assert!(matches!(r, Err(Error::InvalidHom { .. })));
        let r = RingHom::new("bad", &d8, &h1, &[("x", "0"), ("y", "a^2"), ("w", "a*b")]);
        assert!(matches!(r, Err(Error::InvalidHom { .. })));
        let z = ring("H2_Z").unwrap();
        let k3 = ring("K3_Z").unwrap();
        // U has order 4 and maps onto an order-2 class: fine. The reverse is not.
        assert!(RingHom::new("ok", &z, &k3, &[("U", "theta3")]).is_ok());
        assert!(matches!(
            RingHom::new("bad", &k3, &z, &[("theta3", "U")]),
            Err(Error::InvalidHom { .. })
        ));
    }

    #[test]
    fn identity_and_composition() {
        let h = hom("res_D8_H1_F2").unwrap();
        let id = RingHom::identity(h.domain());
        assert!(homs_equal_up_to_degree(&id, &id, 6).unwrap());
        assert!(homs_equal_up_to_degree(&id.then(&h).unwrap(), &h, 6).unwrap());
    }
}
