//! Graded commutative ring presentations.
//!
//! A presentation is a list of generators (symbol, degree, additive order)
//! together with a monomial rewrite system. Every positive-degree monomial has
//! additive order 2 or 4; in integral rings the degree-zero part is `Z` and is
//! never reduced.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Coefficient system of a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Coefficients {
    F2,
    Z,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::F2 => write!(f, "F2"),
            Coefficients::Z => write!(f, "Z"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    /// Printed name.
    pub symbol: String,
    /// Extra names accepted by the parser.
    pub aliases: Vec<String>,
    pub degree: u32,
    /// Additive order, 2 or 4.
    pub order: u8,
}

/// Exponent vector, one entry per generator of the owning presentation.
///
/// The derived ordering is lexicographic on the exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / divisor`; caller guarantees divisibility.
    pub fn quotient(&self, divisor: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

/// Rewrite rule `lhs -> rhs`, with `rhs` a list of (monomial, coefficient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Monomial,
    pub rhs: Vec<(Monomial, i64)>,
}

/// Monomial basis of one graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSlice {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    /// Additive order of each basis element; 0 marks the torsion-free `Z` in degree zero.
    pub orders: Vec<u8>,
}

impl GradedSlice {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }
}

/// A monomial spelled as `(generator symbol, power)` pairs.
pub type SpelledMonomial<'a> = &'a [(&'a str, u32)];
/// A rewrite relation `lhs -> Σ c · m`.
pub type SpelledRelation<'a> = (SpelledMonomial<'a>, &'a [(SpelledMonomial<'a>, i64)]);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    name: String,
    coefficients: Coefficients,
    generators: Vec<Generator>,
    rules: Vec<Rule>,
    print_order: Vec<usize>,
}

impl RingPresentation {
    /// Builds a presentation from spelled rewrite relations.
    pub fn new(
        name: impl Into<String>,
        coefficients: Coefficients,
        generators: Vec<Generator>,
        relations: &[SpelledRelation],
    ) -> Self {
        let mut ring = RingPresentation {
            name: name.into(),
            coefficients,
            generators,
            rules: Vec::new(),
            print_order: Vec::new(),
        };
        let mut order: Vec<usize> = (0..ring.generators.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(ring.generators[i].degree), i));
        ring.print_order = order;
        let rules = relations
            .iter()
            .map(|(lhs, rhs)| Rule {
                lhs: ring.spell(lhs),
                rhs: rhs.iter().map(|(m, c)| (ring.spell(m), *c)).collect(),
            })
            .collect();
        ring.rules = rules;
        ring
    }

    /// Polynomial ring over `F2` on degree-one-or-more generators, no relations.
    pub fn polynomial_f2(name: impl Into<String>, gens: &[(&str, u32)]) -> Self {
        let generators = gens
            .iter()
            .map(|(s, d)| Generator {
                symbol: s.to_string(),
                aliases: Vec::new(),
                degree: *d,
                order: 2,
            })
            .collect();
        RingPresentation::new(name, Coefficients::F2, generators, &[])
    }

    fn spell(&self, factors: &[(&str, u32)]) -> Monomial {
        let mut m = Monomial::one(self.generators.len());
        for (sym, pow) in factors {
            let i = self
                .generator_index(sym)
                .unwrap_or_else(|| panic!("unknown generator `{sym}` in `{}`", self.name));
            m.0[i] += pow;
        }
        m
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn nvars(&self) -> usize {
        self.generators.len()
    }

    pub fn is_free_polynomial_f2(&self) -> bool {
        self.coefficients == Coefficients::F2 && self.rules.is_empty()
    }

    pub(crate) fn print_order(&self) -> &[usize] {
        &self.print_order
    }

    pub fn generator_index(&self, symbol: &str) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| g.symbol == symbol || g.aliases.iter().any(|a| a == symbol))
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.0.iter()
            .zip(&self.generators)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Additive order of a monomial: 2 or 4, or 0 for the integral unit.
    pub fn order(&self, m: &Monomial) -> u8 {
        match self.coefficients {
            Coefficients::F2 => 2,
            Coefficients::Z => {
                m.0.iter()
                    .zip(&self.generators)
                    .filter(|(e, _)| **e > 0)
                    .map(|(_, g)| g.order)
                    .min()
                    .unwrap_or(0)
            }
        }
    }

    pub fn reduce_coefficient(&self, m: &Monomial, c: i64) -> i64 {
        match self.order(m) {
            0 => c,
            o => c.rem_euclid(o as i64),
        }
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        !self.rules.iter().any(|r| r.lhs.divides(m))
    }

    /// Rewrites a term list to normal form: no rule applies to any stored
    /// monomial, coefficients are reduced and zeros dropped.
    pub fn normalize_terms<I>(&self, terms: I) -> BTreeMap<Monomial, i64>
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
        let mut stack: Vec<(Monomial, i64)> = terms.into_iter().collect();
        while let Some((m, c)) = stack.pop() {
            let c = self.reduce_coefficient(&m, c);
            if c == 0 {
                continue;
            }
            match self.rules.iter().find(|r| r.lhs.divides(&m)) {
                Some(rule) => {
                    let q = m.quotient(&rule.lhs);
                    for (rm, rc) in &rule.rhs {
                        stack.push((q.mul(rm), c * rc));
                    }
                }
                None => *out.entry(m).or_insert(0) += c,
            }
        }
        out.retain(|m, c| {
            *c = self.reduce_coefficient(m, *c);
            *c != 0
        });
        out
    }

    /// Normal-form monomials of the given degree, in descending lexicographic
    /// order of exponent vectors.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.nvars()];
        self.enumerate(0, degree, &mut current, &mut out);
        out.retain(|m| self.is_normal(m));
        out
    }

    fn enumerate(&self, i: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.nvars() {
            if remaining == 0 {
                out.push(Monomial(current.clone()));
            }
            return;
        }
        let d = self.generators[i].degree;
        let max = remaining / d;
        for e in (0..=max).rev() {
            current[i] = e;
            self.enumerate(i + 1, remaining - e * d, current, out);
        }
        current[i] = 0;
    }

    pub fn graded_slice(&self, degree: u32) -> GradedSlice {
        let basis = self.monomials_of_degree(degree);
        let orders = basis.iter().map(|m| self.order(m)).collect();
        GradedSlice {
            degree,
            basis,
            orders,
        }
    }

    /// Checks every critical pair of the rewrite system whose overlap has
    /// degree at most `max_degree`. Returns the offending lcm monomials.
    pub fn critical_pair_failures(&self, max_degree: u32) -> Vec<Monomial> {
        let mut bad = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for r2 in &self.rules[i + 1..] {
                let overlap = r1
                    .lhs
                    .0
                    .iter()
                    .zip(&r2.lhs.0)
                    .any(|(a, b)| *a > 0 && *b > 0);
                if !overlap {
                    continue;
                }
                let l = r1.lhs.lcm(&r2.lhs);
                if self.degree(&l) > max_degree {
                    continue;
                }
                let route = |r: &Rule| {
                    let q = l.quotient(&r.lhs);
                    self.normalize_terms(r.rhs.iter().map(|(m, c)| (q.mul(m), *c)))
                };
                if route(r1) != route(r2) {
                    bad.push(l);
                }
            }
        }
        bad
    }

    pub(crate) fn same_as(&self, other: &RingPresentation) -> bool {
        self.name == other.name && self.generators == other.generators
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str, d: u32, o: u8) -> Generator {
        Generator {
            symbol: s.into(),
            aliases: vec![],
            degree: d,
            order: o,
        }
    }

    fn full_z() -> RingPresentation {
        RingPresentation::new(
            "test_full",
            Coefficients::Z,
            vec![
                gen("X", 2, 2),
                gen("Y", 2, 2),
                gen("M", 3, 2),
                gen("W", 4, 4),
            ],
            &[
                (&[("X", 1), ("Y", 1)], &[]),
                (
                    &[("M", 2)],
                    &[(&[("W", 1), ("X", 1)], 1), (&[("W", 1), ("Y", 1)], 1)],
                ),
            ],
        )
    }

    #[test]
    fn slices_are_lex_descending_and_normal() {
        let r = full_z();
        let s = r.graded_slice(6);
        // M^2 is rewritten, so it is absent
        let names: Vec<_> = s.basis.iter().map(|m| m.0.clone()).collect();
        assert_eq!(
            names,
            vec![
                vec![3, 0, 0, 0],
                vec![1, 0, 0, 1],
                vec![0, 3, 0, 0],
                vec![0, 1, 0, 1]
            ]
        );
        assert!(s.orders.iter().all(|&o| o == 2));
        assert_eq!(r.graded_slice(8).orders.last(), Some(&4));
    }

    #[test]
    fn rewriting_m_squared_times_x() {
        let r = full_z();
        let m2x = Monomial(vec![1, 0, 2, 0]);
        let nf = r.normalize_terms([(m2x, 1)]);
        let expect: BTreeMap<_, _> = [(Monomial(vec![2, 0, 0, 1]), 1)].into_iter().collect();
        assert_eq!(nf, expect);
    }

    #[test]
    fn order_rule() {
        let r = full_z();
        assert_eq!(r.order(&Monomial(vec![0, 0, 0, 3])), 4);
        assert_eq!(r.order(&Monomial(vec![0, 0, 1, 1])), 2);
        assert_eq!(r.order(&Monomial::one(4)), 0);
        assert_eq!(r.reduce_coefficient(&Monomial(vec![0, 0, 0, 1]), -1), 3);
    }

    #[test]
    fn no_critical_pair_failures() {
        assert!(full_z().critical_pair_failures(12).is_empty());
    }
}
