//! Homogeneous ideal membership, inclusion and span intersection, decided one
//! graded piece at a time.

use std::sync::Arc;

use crate::element::{check_same_ring, RingElement};
use crate::error::{Error, Result};
use crate::linalg::{f2_kernel, f2_solve, howell_solve, z4_kernel};
use crate::ring::{Coefficients, GradedSlice, RingPresentation};

/// Coordinates of `e` on a slice, reduced mod 2 or mod 4.
pub fn to_vector(e: &RingElement, slice: &GradedSlice) -> Vec<u8> {
    let modulus = match e.ring().coefficients() {
        Coefficients::F2 => 2,
        Coefficients::Z => 4,
    };
    let mut v = vec![0u8; slice.len()];
    for (m, c) in e.terms() {
        if let Some(i) = slice.position(m) {
            v[i] = c.rem_euclid(modulus) as u8;
        }
    }
    v
}

/// Inverse of [`to_vector`].
pub fn from_vector(ring: &Arc<RingPresentation>, slice: &GradedSlice, v: &[u8]) -> RingElement {
    RingElement::from_terms(
        ring,
        slice.basis.iter().cloned().zip(v.iter().map(|&c| c as i64)),
    )
}

/// Relation vectors `2 e_i` for the order-2 coordinates of an integral slice.
pub fn torsion_relations(slice: &GradedSlice) -> Vec<Vec<u8>> {
    slice
        .orders
        .iter()
        .enumerate()
        .filter(|(_, &o)| o == 2)
        .map(|(i, _)| {
            let mut v = vec![0u8; slice.len()];
            v[i] = 2;
            v
        })
        .collect()
}

fn require_homogeneous(e: &RingElement) -> Result<()> {
    if e.is_homogeneous() {
        Ok(())
    } else {
        Err(Error::NotHomogeneous(e.to_string()))
    }
}

/// Spanning set `{ m*g : deg m + deg g = degree }` of the ideal in one degree.
pub fn graded_ideal_slice(gens: &[RingElement], degree: u32) -> Result<Vec<RingElement>> {
    let mut out = Vec::new();
    for g in gens {
        require_homogeneous(g)?;
        if let Some(first) = gens.first() {
            check_same_ring(first.ring(), g.ring())?;
        }
        let Some(dg) = g.degree() else { continue };
        if dg > degree {
            continue;
        }
        for m in g.ring().monomials_of_degree(degree - dg) {
            let p = g.shift(&m);
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

fn span_contains(
    ring: &RingPresentation,
    slice: &GradedSlice,
    mut columns: Vec<Vec<u8>>,
    target: &[u8],
) -> Result<bool> {
    match ring.coefficients() {
        Coefficients::F2 => f2_solve(&columns, target),
        Coefficients::Z => {
            columns.extend(torsion_relations(slice));
            howell_solve(&columns, target)
        }
    }
}

/// Decides `f ∈ ⟨gens⟩` for homogeneous `f` and `gens`.
pub fn ideal_contains(gens: &[RingElement], f: &RingElement) -> Result<bool> {
    require_homogeneous(f)?;
    for g in gens {
        require_homogeneous(g)?;
        check_same_ring(f.ring(), g.ring())?;
    }
    let Some(deg) = f.degree() else {
        return Ok(true);
    };
    let ring = f.ring();
    if deg == 0 && ring.coefficients() == Coefficients::Z {
        return Err(Error::DegreeZeroQuery(ring.name().to_string()));
    }
    let slice = ring.graded_slice(deg);
    let columns = graded_ideal_slice(gens, deg)?
        .iter()
        .map(|p| to_vector(p, &slice))
        .collect();
    span_contains(ring, &slice, columns, &to_vector(f, &slice))
}

/// Decides `⟨a_gens⟩ ⊆ ⟨b_gens⟩`.
pub fn ideal_subset(a_gens: &[RingElement], b_gens: &[RingElement]) -> Result<bool> {
    for a in a_gens {
        if !ideal_contains(b_gens, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First element of `a_gens` outside `⟨b_gens⟩`, if any.
pub fn first_non_member(
    a_gens: &[RingElement],
    b_gens: &[RingElement],
) -> Result<Option<RingElement>> {
    for a in a_gens {
        if !ideal_contains(b_gens, a)? {
            return Ok(Some(a.clone()));
        }
    }
    Ok(None)
}

/// Generators of `⟨a⟩ ∩ ⟨b⟩` in one degree, as ring elements (possibly empty).
pub fn span_intersection(
    ring: &Arc<RingPresentation>,
    a: &[RingElement],
    b: &[RingElement],
    degree: u32,
) -> Result<Vec<RingElement>> {
    let slice = ring.graded_slice(degree);
    let n = slice.len();
    let av: Vec<Vec<u8>> = graded_ideal_slice(a, degree)?
        .iter()
        .map(|p| to_vector(p, &slice))
        .collect();
    let bv: Vec<Vec<u8>> = graded_ideal_slice(b, degree)?
        .iter()
        .map(|p| to_vector(p, &slice))
        .collect();
    let kernel = match ring.coefficients() {
        Coefficients::F2 => {
            let rows: Vec<Vec<u8>> = av.iter().chain(&bv).cloned().collect();
            f2_kernel(&rows, n)?
        }
        Coefficients::Z => {
            let neg = |v: &Vec<u8>| v.iter().map(|x| (4 - x) % 4).collect::<Vec<u8>>();
            let rows: Vec<Vec<u8>> = av
                .iter()
                .cloned()
                .chain(bv.iter().map(neg))
                .chain(torsion_relations(&slice))
                .collect();
            z4_kernel(&rows, n)?
        }
    };
    let modulus: u8 = match ring.coefficients() {
        Coefficients::F2 => 2,
        Coefficients::Z => 4,
    };
    let mut out: Vec<RingElement> = Vec::new();
    for k in kernel {
        let mut v = vec![0u8; n];
        for (x, row) in k.iter().zip(&av) {
            for (vi, ri) in v.iter_mut().zip(row) {
                *vi = (*vi + x * ri) % modulus;
            }
        }
        let e = from_vector(ring, &slice, &v);
        if !e.is_zero() && !out.contains(&e) {
            out.push(e);
        }
    }
    Ok(out)
}

/// True iff `⟨a⟩ ∩ ⟨b⟩` vanishes in the given degree.
pub fn span_intersection_is_zero(
    ring: &Arc<RingPresentation>,
    a: &[RingElement],
    b: &[RingElement],
    degree: u32,
) -> Result<bool> {
    Ok(span_intersection(ring, a, b, degree)?.is_empty())
}
