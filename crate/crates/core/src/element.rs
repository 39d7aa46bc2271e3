//! Normal-form ring elements: arithmetic, parsing and printing.
//!
//! Element grammar: terms joined by `+`; a term is an optional integer
//! coefficient followed by `*`-separated powers `sym^k`, e.g. `y^3+w*y` or
//! `2*W^2+Y*M`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{Monomial, RingPresentation};

#[derive(Debug, Clone)]
pub struct RingElement {
    ring: Arc<RingPresentation>,
    terms: BTreeMap<Monomial, i64>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for RingElement {}

pub(crate) fn check_same_ring(a: &RingPresentation, b: &RingPresentation) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.name().to_string(),
            right: b.name().to_string(),
        })
    }
}

impl RingElement {
    /// Builds an element from arbitrary terms, bringing them to normal form.
    pub fn from_terms<I>(ring: &Arc<RingPresentation>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let terms = ring.normalize_terms(terms);
        RingElement {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn zero(ring: &Arc<RingPresentation>) -> Self {
        RingElement {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingPresentation>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<RingPresentation>, c: i64) -> Self {
        Self::from_terms(ring, [(Monomial::one(ring.nvars()), c)])
    }

    pub fn monomial(ring: &Arc<RingPresentation>, m: Monomial, c: i64) -> Self {
        Self::from_terms(ring, [(m, c)])
    }

    /// The generator with the given symbol (or alias).
    pub fn generator(ring: &Arc<RingPresentation>, symbol: &str) -> Result<Self> {
        let i = ring.generator_index(symbol).ok_or_else(|| Error::Parse {
            input: symbol.to_string(),
            reason: format!("no generator `{symbol}` in {}", ring.name()),
        })?;
        Ok(Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), 1))
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, i64> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of a homogeneous nonzero element; `None` for zero or
    /// inhomogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| self.ring.degree(m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// The zero element counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| self.ring.degree(m) == degree)
    }

    /// Re-applies the rewrite system. Elements are always stored in normal
    /// form, so this is the identity on well-formed values.
    pub fn normal_form(&self) -> Self {
        Self::from_terms(&self.ring, self.terms.iter().map(|(m, c)| (m.clone(), *c)))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_same_ring(&self.ring, &other.ring)?;
        let terms = self
            .terms
            .iter()
            .chain(other.terms.iter())
            .map(|(m, c)| (m.clone(), *c));
        Ok(Self::from_terms(&self.ring, terms))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_same_ring(&self.ring, &other.ring)?;
        let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert(0) += c1 * c2;
            }
        }
        Ok(Self::from_terms(&self.ring, acc))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, k)| (m.clone(), k * c)),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, m: &Monomial) -> Self {
        Self::from_terms(&self.ring, self.terms.iter().map(|(k, c)| (k.mul(m), *c)))
    }

    /// Parses the element grammar in the given ring.
    pub fn parse(ring: &Arc<RingPresentation>, input: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            input: input.to_string(),
            reason,
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty element".into()));
        }
        let mut terms = Vec::new();
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(err("empty term".into()));
            }
            let mut coeff: i64 = 1;
            let mut mono = Monomial::one(ring.nvars());
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(err(format!("empty factor in `{term}`")));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    let k: i64 = factor
                        .parse()
                        .map_err(|_| err(format!("bad coefficient `{factor}`")))?;
                    coeff *= k;
                    continue;
                }
                let (sym, pow) = match factor.split_once('^') {
                    Some((s, p)) => {
                        let p: u32 = p
                            .parse()
                            .map_err(|_| err(format!("bad exponent in `{factor}`")))?;
                        (s, p)
                    }
                    None => (factor, 1),
                };
                let i = ring
                    .generator_index(sym)
                    .ok_or_else(|| err(format!("unknown symbol `{sym}` in {}", ring.name())))?;
                mono.0[i] += pow;
            }
            terms.push((mono, coeff));
        }
        Ok(Self::from_terms(ring, terms))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| (self.ring.degree(b), *b).cmp(&(self.ring.degree(a), *a)));
        let gens = self.ring.generators();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            let mut factors = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for &i in self.ring.print_order() {
                match m.0[i] {
                    0 => {}
                    1 => factors.push(gens[i].symbol.clone()),
                    e => factors.push(format!("{}^{}", gens[i].symbol, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.try_add(&-rhs).expect("ring mismatch in subtraction")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(-1)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

/// Coefficient-wise sum in normal form.
pub fn poly_add(p: &RingElement, q: &RingElement) -> Result<RingElement> {
    p.try_add(q)
}

/// Product followed by the ring's normal form.
pub fn poly_mul(p: &RingElement, q: &RingElement) -> Result<RingElement> {
    p.try_mul(q)
}
