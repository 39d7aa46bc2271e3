//! Index ideals: the π/Π polynomial families, sphere and product indexes for
//! D8, representation spheres and tori for elementary abelian 2-groups, and
//! the join and product rules.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::catalog::{lift_bound_to_full, ring};
use crate::element::{check_same_ring, RingElement};
use crate::error::{Error, Result};
use crate::ideal::span_intersection_is_zero;
use crate::ring::{Coefficients, Generator, Monomial, RingPresentation};

/// `binom(n, k) mod 2` by Lucas' theorem.
pub fn lucas_binom_mod2(n: u64, k: u64) -> u8 {
    u8::from(k <= n && k & !n == 0)
}

/// Which index an ideal is: the kernel up to a given page, or the full kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "page")]
pub enum IndexKind {
    Partial(u32),
    Full,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexKind::Partial(k) => write!(f, "partial({k})"),
            IndexKind::Full => write!(f, "full"),
        }
    }
}

/// Selector for the product-of-spheres index over `F2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Partial,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexIdeal {
    pub ring: Arc<RingPresentation>,
    pub generators: Vec<RingElement>,
    pub kind: IndexKind,
    /// Short description of the space.
    pub label: String,
}

impl IndexIdeal {
    fn new(
        ring: &Arc<RingPresentation>,
        generators: Vec<RingElement>,
        kind: IndexKind,
        label: String,
    ) -> Self {
        IndexIdeal {
            ring: Arc::clone(ring),
            generators,
            kind,
            label,
        }
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }
}

impl fmt::Display for IndexIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", gens.join("; "))
    }
}

fn gen_of(ring: &Arc<RingPresentation>, sym: &str) -> RingElement {
    RingElement::generator(ring, sym).expect("catalog generator")
}

fn recurrence(ring: &Arc<RingPresentation>, y: &str, w: &str, d: u32) -> RingElement {
    let y = gen_of(ring, y);
    let w = gen_of(ring, w);
    let mut prev = RingElement::zero(ring);
    let mut cur = y.clone();
    if d == 0 {
        return prev;
    }
    for _ in 1..d {
        let next = &(&y * &cur) + &(&w * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

fn binomial_sum(ring: &Arc<RingPresentation>, y: &str, w: &str, d: u32) -> RingElement {
    let yi = ring.generator_index(y).expect("catalog generator");
    let wi = ring.generator_index(w).expect("catalog generator");
    let terms = (0..=d / 2).filter_map(|i| {
        let top = (d as i64) - 1 - (i as i64);
        if top < 0 || lucas_binom_mod2(top as u64, i as u64) == 0 {
            return None;
        }
        let mut m = Monomial::one(ring.nvars());
        m.0[wi] = i;
        m.0[yi] = d - 2 * i;
        Some((m, 1))
    });
    RingElement::from_terms(ring, terms)
}

/// `π_d` in `F2[x,y,w]/⟨xy⟩` via `π_{d+1} = y π_d + w π_{d-1}`.
pub fn pi_poly(d: u32) -> RingElement {
    recurrence(&ring("D8_F2").expect("catalog ring"), "y", "w", d)
}

/// `π_d` from the Lucas-reduced binomial sum.
pub fn pi_poly_binomial(d: u32) -> RingElement {
    binomial_sum(&ring("D8_F2").expect("catalog ring"), "y", "w", d)
}

/// `Π_d` in the bound ring, homogeneous of degree `2d`.
pub fn capital_pi_poly(d: u32) -> RingElement {
    recurrence(&ring("D8_Z_BOUND").expect("catalog ring"), "Y", "W", d)
}

pub fn capital_pi_poly_binomial(d: u32) -> RingElement {
    binomial_sum(&ring("D8_Z_BOUND").expect("catalog ring"), "Y", "W", d)
}

/// `ρ_d = a^d + (a+b)^d` in `F2[a,b]`.
pub fn rho(d: u32) -> RingElement {
    let h1 = ring("H1_F2").expect("catalog ring");
    let a = gen_of(&h1, "a");
    let ab = &a + &gen_of(&h1, "b");
    &a.pow(d) + &ab.pow(d)
}

fn truncate(e: &RingElement, max_degree: u32) -> RingElement {
    let r = e.ring();
    RingElement::from_terms(
        r,
        e.terms()
            .iter()
            .filter(|(m, _)| r.degree(m) <= max_degree)
            .map(|(m, c)| (m.clone(), *c)),
    )
}

/// `Y · Σ_n (Y+W)^n` in the bound ring, truncated to degrees `≤ max_degree`.
pub fn pi_generating_series(max_degree: u32) -> RingElement {
    let b = ring("D8_Z_BOUND").expect("catalog ring");
    let y = gen_of(&b, "Y");
    let step = &y + &gen_of(&b, "W");
    let mut power = RingElement::one(&b);
    let mut sum = RingElement::zero(&b);
    for _ in 0..=max_degree / 2 {
        sum = &sum + &power;
        power = truncate(&(&power * &step), max_degree);
    }
    truncate(&(&y * &sum), max_degree)
}

/// `Index S(R4^{⊕j}) = ⟨y^j w^j⟩` over `F2`.
pub fn index_sphere_r4j_f2(j: u32) -> IndexIdeal {
    let r = ring("D8_F2").expect("catalog ring");
    let g = &gen_of(&r, "y").pow(j) * &gen_of(&r, "w").pow(j);
    IndexIdeal::new(
        &r,
        vec![g],
        IndexKind::Partial(3 * j),
        format!("S(R4^{j}), F2"),
    )
}

/// The integral sphere index, in the bound ring.
pub fn index_sphere_r4j_z(j: u32) -> IndexIdeal {
    let r = ring("D8_Z_BOUND").expect("catalog ring");
    let y = gen_of(&r, "Y");
    let w = gen_of(&r, "W");
    let gens = if j.is_multiple_of(2) {
        vec![&y.pow(j / 2) * &w.pow(j / 2)]
    } else {
        let base = &y.pow(j.div_ceil(2)) * &w.pow((j - 1) / 2);
        vec![&base * &gen_of(&r, "M"), &base * &w]
    };
    IndexIdeal::new(
        &r,
        gens,
        IndexKind::Partial(3 * j + 1),
        format!("S(R4^{j}), Z"),
    )
}

/// `⟨π_{d+1}, π_{d+2}⟩`, or with `w^{d+1}` added for the full index.
pub fn index_product_spheres_f2(d: u32, kind: ProductKind) -> IndexIdeal {
    let r = ring("D8_F2").expect("catalog ring");
    let mut gens = vec![pi_poly(d + 1), pi_poly(d + 2)];
    let kind = match kind {
        ProductKind::Partial => IndexKind::Partial(d + 2),
        ProductKind::Full => {
            gens.push(gen_of(&r, "w").pow(d + 1));
            IndexKind::Full
        }
    };
    IndexIdeal::new(&r, gens, kind, format!("S^{d} x S^{d}, F2"))
}

/// Integral product-of-spheres index, in the bound ring.
pub fn index_product_spheres_z(d: u32) -> IndexIdeal {
    let r = ring("D8_Z_BOUND").expect("catalog ring");
    let gens = if d.is_multiple_of(2) {
        vec![
            capital_pi_poly((d + 2) / 2),
            capital_pi_poly((d + 4) / 2),
            &gen_of(&r, "M") * &capital_pi_poly(d / 2),
        ]
    } else {
        vec![capital_pi_poly(d.div_ceil(2)), capital_pi_poly((d + 3) / 2)]
    };
    IndexIdeal::new(
        &r,
        gens,
        IndexKind::Partial(d + 2),
        format!("S^{d} x S^{d}, Z"),
    )
}

/// A `±1` vector describing a one-dimensional real representation of `(Z2)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.is_empty() || entries.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidArgument(format!(
                "not a sign vector: {entries:?}"
            )));
        }
        Ok(SignVector(entries))
    }

    /// Parses strings like `-+` or `+-+`.
    pub fn parse(s: &str) -> Result<Self> {
        let entries = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::InvalidArgument(format!("bad sign `{c}` in `{s}`"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        SignVector::new(entries)
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `F2[t1, ..., tk]`; the catalogued ring for `k = 2`.
pub fn z2k_ring_f2(k: usize) -> Result<Arc<RingPresentation>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if k == 2 {
        return ring("Z2xZ2_F2");
    }
    let names: Vec<String> = (1..=k).map(|i| format!("t{i}")).collect();
    let gens: Vec<(&str, u32)> = names.iter().map(|n| (n.as_str(), 1)).collect();
    Ok(Arc::new(RingPresentation::polynomial_f2(
        format!("Z2^{k}_F2"),
        &gens,
    )))
}

/// Index of the sphere of a sum of sign representations: the product of the
/// linear forms `Σ ᾱ_i t_i`, with `ᾱ = 1` exactly where the sign is `-1`.
pub fn index_rep_sphere_z2k(vs: &[SignVector], k: usize) -> Result<IndexIdeal> {
    if vs.is_empty() {
        return Err(Error::InvalidArgument(
            "need at least one sign vector".into(),
        ));
    }
    let r = z2k_ring_f2(k)?;
    let mut prod = RingElement::one(&r);
    for v in vs {
        if v.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: v.len(),
            });
        }
        let form = RingElement::from_terms(
            &r,
            v.entries()
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == -1)
                .map(|(i, _)| (Monomial::var(k, i, 1), 1)),
        );
        prod = &prod * &form;
    }
    Ok(IndexIdeal::new(
        &r,
        vec![prod],
        IndexKind::Full,
        format!("S(V), (Z2)^{k}"),
    ))
}

/// `⟨t_1^{n_1+1}, ..., t_k^{n_k+1}⟩` for the torus `S^{n_1} x ... x S^{n_k}`.
pub fn index_torus_z2k(n: &[u32]) -> Result<IndexIdeal> {
    let k = n.len();
    let r = z2k_ring_f2(k)?;
    let gens = n
        .iter()
        .enumerate()
        .map(|(i, &ni)| RingElement::monomial(&r, Monomial::var(k, i, ni + 1), 1))
        .collect();
    Ok(IndexIdeal::new(
        &r,
        gens,
        IndexKind::Full,
        format!("torus {n:?}"),
    ))
}

/// Index of a join of spheres with principal indexes: `⟨f·g⟩`.
pub fn index_join(f: &IndexIdeal, g: &IndexIdeal) -> Result<IndexIdeal> {
    check_same_ring(&f.ring, &g.ring)?;
    for i in [f, g] {
        if !i.is_principal() {
            return Err(Error::NonPrincipal(i.generators.len()));
        }
    }
    let prod = f.generators[0].try_mul(&g.generators[0])?;
    Ok(IndexIdeal::new(
        &f.ring,
        vec![prod],
        IndexKind::Full,
        format!("({}) * ({})", f.label, g.label),
    ))
}

/// Tensor product of two polynomial rings over `F2`.
pub fn tensor_polynomial_f2(
    a: &Arc<RingPresentation>,
    b: &Arc<RingPresentation>,
) -> Result<Arc<RingPresentation>> {
    for r in [a, b] {
        if !r.is_free_polynomial_f2() {
            return Err(Error::NotPolynomialField(r.name().to_string()));
        }
    }
    for g in b.generators() {
        if a.generator_index(&g.symbol).is_some() {
            return Err(Error::GeneratorClash(g.symbol.clone()));
        }
    }
    let gens: Vec<Generator> = a
        .generators()
        .iter()
        .chain(b.generators())
        .cloned()
        .collect();
    Ok(Arc::new(RingPresentation::new(
        format!("{}x{}", a.name(), b.name()),
        Coefficients::F2,
        gens,
        &[],
    )))
}

fn embed(e: &RingElement, target: &Arc<RingPresentation>, offset: usize) -> RingElement {
    let n = target.nvars();
    RingElement::from_terms(
        target,
        e.terms().iter().map(|(m, c)| {
            let mut ex = vec![0; n];
            ex[offset..offset + m.0.len()].copy_from_slice(m.exponents());
            (Monomial(ex), *c)
        }),
    )
}

/// Index of `X x Y` under `G x H` over a field: the union of the generators.
pub fn index_product_groups(f: &IndexIdeal, g: &IndexIdeal) -> Result<IndexIdeal> {
    let t = tensor_polynomial_f2(&f.ring, &g.ring)?;
    let off = f.ring.nvars();
    let gens = f
        .generators
        .iter()
        .map(|e| embed(e, &t, 0))
        .chain(g.generators.iter().map(|e| embed(e, &t, off)))
        .collect();
    Ok(IndexIdeal::new(
        &t,
        gens,
        IndexKind::Full,
        format!("({}) x ({})", f.label, g.label),
    ))
}

/// Integral index of `S^n x S^n` under `Z2 x Z2`.
pub fn index_h1_z_product(n: u32) -> IndexIdeal {
    let r = ring("Z2xZ2_Z").expect("catalog ring");
    let t1 = gen_of(&r, "tau1");
    let t2 = gen_of(&r, "tau2");
    let gens = if n % 2 == 1 {
        vec![t1.pow(n.div_ceil(2)), t2.pow(n.div_ceil(2))]
    } else {
        let mu = gen_of(&r, "mu");
        vec![
            t1.pow((n + 2) / 2),
            t2.pow((n + 2) / 2),
            &t1.pow(n / 2) * &mu,
            &t2.pow(n / 2) * &mu,
        ]
    };
    IndexIdeal::new(&r, gens, IndexKind::Full, format!("S^{n} x S^{n}, Z"))
}

/// True iff the join scheme gives no obstruction: over `F2`, `x·y^j w^j = 0`;
/// over `Z`, `⟨X⟩` meets the lifted sphere index trivially in every degree up
/// to `degree_cap`.
pub fn join_scheme_obstruction(
    j: u32,
    coefficients: Coefficients,
    degree_cap: u32,
) -> Result<bool> {
    match coefficients {
        Coefficients::F2 => {
            let r = ring("D8_F2")?;
            let g = &index_sphere_r4j_f2(j).generators[0];
            Ok((&gen_of(&r, "x") * g).is_zero())
        }
        Coefficients::Z => {
            let full = ring("D8_Z_FULL")?;
            let x = vec![gen_of(&full, "X")];
            let lifted = index_sphere_r4j_z(j)
                .generators
                .iter()
                .map(lift_bound_to_full)
                .collect::<Result<Vec<_>>>()?;
            for deg in 1..=degree_cap {
                if !span_intersection_is_zero(&full, &x, &lifted, deg)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}
