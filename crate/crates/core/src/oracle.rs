//! Brute-force membership by enumerating every coefficient combination of a
//! degree slice. Exponential; meant for cross-checking small instances.

use std::collections::HashSet;
use std::sync::Arc;

use rand::Rng;

use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::ideal::{from_vector, graded_ideal_slice, to_vector};
use crate::ring::{Coefficients, RingPresentation};

/// All elements of the span of `columns` in `⊕ Z/orders[i]`.
pub fn enumerate_span(columns: &[Vec<u8>], orders: &[u8]) -> HashSet<Vec<u8>> {
    let reduce = |v: Vec<u8>| -> Vec<u8> { v.iter().zip(orders).map(|(x, o)| x % o).collect() };
    let mut span: HashSet<Vec<u8>> = HashSet::new();
    span.insert(vec![0; orders.len()]);
    let top = orders.iter().copied().max().unwrap_or(1);
    for col in columns {
        let mut next = HashSet::with_capacity(span.len() * top as usize);
        for s in &span {
            for k in 0..top {
                let v: Vec<u8> = s.iter().zip(col).map(|(a, b)| a + k * b).collect();
                next.insert(reduce(v));
            }
        }
        span = next;
    }
    span
}

/// Decides `f ∈ ⟨gens⟩` by enumeration.
pub fn brute_force_contains(gens: &[RingElement], f: &RingElement) -> Result<bool> {
    let Some(deg) = f.degree() else {
        if f.is_zero() {
            return Ok(true);
        }
        return Err(Error::NotHomogeneous(f.to_string()));
    };
    let ring = f.ring();
    let slice = ring.graded_slice(deg);
    let orders: Vec<u8> = match ring.coefficients() {
        Coefficients::F2 => vec![2; slice.len()],
        Coefficients::Z => slice
            .orders
            .iter()
            .map(|&o| if o == 0 { 4 } else { o })
            .collect(),
    };
    let columns: Vec<Vec<u8>> = graded_ideal_slice(gens, deg)?
        .iter()
        .map(|p| to_vector(p, &slice))
        .collect();
    let span = enumerate_span(&columns, &orders);
    let t: Vec<u8> = to_vector(f, &slice)
        .iter()
        .zip(&orders)
        .map(|(x, o)| x % o)
        .collect();
    Ok(span.contains(&t))
}

/// A uniformly random element of one graded piece (possibly zero).
pub fn random_homogeneous<R: Rng>(
    ring: &Arc<RingPresentation>,
    degree: u32,
    rng: &mut R,
) -> RingElement {
    let slice = ring.graded_slice(degree);
    let v: Vec<u8> = slice
        .orders
        .iter()
        .map(|&o| match (ring.coefficients(), o) {
            (Coefficients::F2, _) => rng.gen_range(0..2),
            (_, 0) => rng.gen_range(0..4),
            (_, o) => rng.gen_range(0..o),
        })
        .collect();
    from_vector(ring, &slice, &v)
}

/// A random membership query `(gens, f)` with `1 <= deg f <= max_degree`
/// and at most `max_span` spanning elements in degree `deg f`. Half of the
/// targets are drawn from the ideal itself so both answers occur.
pub fn random_instance<R: Rng>(
    ring: &Arc<RingPresentation>,
    max_degree: u32,
    max_span: usize,
    rng: &mut R,
) -> (Vec<RingElement>, RingElement) {
    loop {
        let deg = rng.gen_range(1..=max_degree);
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<RingElement> = (0..ngens)
            .map(|_| {
                let gd = rng.gen_range(1..=deg);
                random_homogeneous(ring, gd, rng)
            })
            .filter(|g| !g.is_zero())
            .collect();
        let span = graded_ideal_slice(&gens, deg).expect("homogeneous generators");
        if span.len() > max_span {
            continue;
        }
        let f = if rng.gen_bool(0.5) && !span.is_empty() {
            let mut acc = RingElement::zero(ring);
            for p in &span {
                acc = &acc + &p.scale(rng.gen_range(0..4));
            }
            acc
        } else {
            random_homogeneous(ring, deg, rng)
        };
        if f.is_zero() && ring.graded_slice(deg).is_empty() {
            continue;
        }
        return (gens, f);
    }
}
