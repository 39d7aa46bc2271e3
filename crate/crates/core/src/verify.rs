//! Named verification suites run by `d8index verify`.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{
    a_ideal, b_ideal, dyadic_split, verify_f2_implication, verify_lemma_l2, verify_lemma_l3,
    verify_lemma_l4,
};
use crate::catalog::{
    assumption_checks, hom, lift_bound_to_full, ring, Check, RestrictionDiagram, RING_IDS,
};
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::ideal::{ideal_contains, ideal_subset};
use crate::index::{
    capital_pi_poly, capital_pi_poly_binomial, index_join, index_product_spheres_f2,
    index_product_spheres_z, index_rep_sphere_z2k, index_sphere_r4j_f2, join_scheme_obstruction,
    lucas_binom_mod2, pi_generating_series, pi_poly, pi_poly_binomial, rho, IndexIdeal, IndexKind,
    ProductKind, SignVector,
};
use crate::oracle::{brute_force_contains, random_instance};
use crate::ring::Coefficients;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Diagram,
    Indexes,
    Oracle,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "diagram" => Ok(Suite::Diagram),
            "indexes" => Ok(Suite::Indexes),
            "oracle" => Ok(Suite::Oracle),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidArgument(format!("unknown suite `{s}`"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Lemmas => "lemmas",
            Suite::Diagram => "diagram",
            Suite::Indexes => "indexes",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        };
        write!(f, "{s}")
    }
}

/// Degree caps for the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Commutativity sweeps.
    pub diagram: u32,
    /// Reduction cube.
    pub cube: u32,
    /// Polynomial identity sweeps.
    pub identities: u32,
    /// Random oracle instances over `F2`.
    pub oracle_f2: u32,
    /// Random oracle instances over `Z`.
    pub oracle_z: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            diagram: 12,
            cube: 8,
            identities: 64,
            oracle_f2: 8,
            oracle_z: 10,
        }
    }
}

impl Caps {
    /// Caps for a `--max-degree n` run; identity sweeps keep their default.
    pub fn with_max_degree(n: u32) -> Self {
        Caps {
            identities: Caps::default().identities,
            ..Caps::uniform(n)
        }
    }

    /// Every cap set to `n`.
    pub fn uniform(n: u32) -> Self {
        Caps {
            diagram: n,
            cube: n,
            identities: n,
            oracle_f2: n,
            oracle_z: n,
        }
    }
}

/// Checks a predicate over a range, failing with the first counterexample.
fn sweep<T, I, F>(name: &str, items: I, f: F) -> Result<Check>
where
    T: fmt::Debug + Send + Sync,
    I: IntoIterator<Item = T>,
    F: Fn(&T) -> Result<bool> + Sync,
{
    let items: Vec<T> = items.into_iter().collect();
    let results: Vec<Result<bool>> = items.par_iter().map(&f).collect();
    for (item, r) in items.iter().zip(results) {
        if !r? {
            return Ok(Check::new(format!("{name} (fails at {item:?})"), false));
        }
    }
    Ok(Check::new(name, true))
}

fn pairs(a: std::ops::RangeInclusive<u32>, b: std::ops::RangeInclusive<u32>) -> Vec<(u32, u32)> {
    a.flat_map(|x| b.clone().map(move |y| (x, y))).collect()
}

pub fn lemma_checks() -> Result<Vec<Check>> {
    Ok(vec![
        sweep(
            "binom(2^q-1-i, i) = [i = 0] mod 2, q <= 8",
            pairs(1..=8, 0..=255),
            |&(q, i)| {
                let top = (1i64 << q) - 1 - i as i64;
                let v = if top < 0 {
                    0
                } else {
                    lucas_binom_mod2(top as u64, i as u64)
                };
                Ok(v == u8::from(i == 0))
            },
        )?,
        sweep("Pi_{2^q} = Y^{2^q}, q <= 6", 0..=6, |&q| {
            Ok(verify_lemma_l2(q))
        })?,
        sweep("A_{2^q} in B_{2^{q+1}-1}, q <= 4", 1..=4, |&q| {
            verify_lemma_l3(q)
        })?,
        sweep(
            "A_j in B_d implies A_{j+1} in B_{d+1}, j <= 12, d <= 24",
            pairs(1..=12, 1..=24),
            |&(j, d)| verify_lemma_l4(j, d),
        )?,
        sweep("A_j in B_{2^{q+1}+r-1}, j <= 12", 1..=12, |&j| {
            let (q, r) = dyadic_split(j);
            ideal_subset(&a_ideal(j), &b_ideal((1 << (q + 1)) + r - 1))
        })?,
        sweep(
            "(Z2)^2 membership implies D8 membership, d <= 20, j <= 10",
            pairs(1..=20, 1..=10),
            |&(d, j)| verify_f2_implication(d, j),
        )?,
    ])
}

pub fn diagram_checks(caps: Caps) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for c in [Coefficients::F2, Coefficients::Z] {
        out.extend(RestrictionDiagram::new(c)?.triangle_checks(caps.diagram)?);
    }
    out.extend(RestrictionDiagram::reduction_cube_checks(caps.cube)?);
    out.extend(assumption_checks()?);
    for id in RING_IDS {
        let r = ring(id)?;
        out.push(Check::new(
            format!("{id}: rewrite system confluent up to degree 12"),
            r.critical_pair_failures(12).is_empty(),
        ));
    }
    let red = hom("red_D8")?;
    let full = ring("D8_Z_FULL")?;
    let m = red.apply(&RingElement::parse(&full, "M")?)?;
    let wxy = red.apply(&RingElement::parse(&full, "W*X+W*Y")?)?;
    out.push(Check::new("red(M)^2 = red(W)*red(X+Y)", &m * &m == wxy));
    Ok(out)
}

fn principal(r: &std::sync::Arc<crate::ring::RingPresentation>, s: &str) -> Result<IndexIdeal> {
    Ok(IndexIdeal {
        ring: r.clone(),
        generators: vec![RingElement::parse(r, s)?],
        kind: IndexKind::Full,
        label: s.to_string(),
    })
}

pub fn index_checks(caps: Caps) -> Result<Vec<Check>> {
    let n = caps.identities;
    let h1 = ring("H1_F2")?;
    let a = RingElement::parse(&h1, "a")?;
    let b = RingElement::parse(&h1, "b")?;
    let ab = &a + &b;
    let res = hom("res_D8_H1_F2")?;
    let red = hom("red_D8")?;
    let d8 = ring("D8_F2")?;
    let mut out = vec![
        sweep(
            &format!("pi recurrence = binomial sum, d <= {}", 2 * n),
            0..=2 * n,
            |&d| Ok(pi_poly(d) == pi_poly_binomial(d)),
        )?,
        sweep(
            &format!("Pi recurrence = binomial sum, d <= {}", 2 * n),
            0..=2 * n,
            |&d| Ok(capital_pi_poly(d) == capital_pi_poly_binomial(d)),
        )?,
    ];
    let series = pi_generating_series(40);
    let mut sum = RingElement::zero(series.ring());
    for d in 0..=20 {
        sum = &sum + &capital_pi_poly(d);
    }
    out.push(Check::new(
        "Y/(1-Y-W) truncated at degree 40",
        series == sum,
    ));
    out.push(sweep(
        &format!("res_H1(pi_d) = rho_d, d <= {n}"),
        0..=n,
        |&d| Ok(res.apply(&pi_poly(d))? == rho(d)),
    )?);
    out.push(sweep(&format!("rho recurrence, d <= {n}"), 0..=n, |&d| {
        Ok(rho(d + 2) == &(&b * &rho(d + 1)) + &(&(&a * &ab) * &rho(d)))
    })?);
    out.push(sweep(
        &format!("red(Pi_d) = pi_2d, d <= {n}"),
        0..=n,
        |&d| Ok(red.apply(&lift_bound_to_full(&capital_pi_poly(d))?)? == pi_poly(2 * d)),
    )?);
    out.push(sweep(
        "F2 product index decreasing in d, d <= 30",
        1..=30,
        |&d| {
            ideal_subset(
                &index_product_spheres_f2(d + 1, ProductKind::Partial).generators,
                &index_product_spheres_f2(d, ProductKind::Partial).generators,
            )
        },
    )?);
    out.push(sweep(
        "Z product index decreasing in d, d <= 30",
        1..=30,
        |&d| {
            ideal_subset(
                &index_product_spheres_z(d + 1).generators,
                &index_product_spheres_z(d).generators,
            )
        },
    )?);
    out.push(sweep(
        "full index restricts to the three H1 generators, d <= 20",
        1..=20,
        |&d| {
            let got = index_product_spheres_f2(d, ProductKind::Full)
                .generators
                .iter()
                .map(|g| res.apply(g))
                .collect::<Result<Vec<_>>>()?;
            let want = vec![rho(d + 1), rho(d + 2), &a.pow(d + 1) * &ab.pow(d + 1)];
            Ok(got == want)
        },
    )?);
    let joined = index_join(&principal(&d8, "w")?, &principal(&d8, "y")?)?;
    out.push(Check::new(
        "<w> * <y> = Index S(R4)",
        joined.generators == index_sphere_r4j_f2(1).generators,
    ));
    out.push(sweep("x * y^j w^j = 0, j <= 10", 1..=10, |&j| {
        join_scheme_obstruction(j, Coefficients::F2, 0)
    })?);
    out.push(sweep(
        "<X> meets Index_Z S(R4^j) trivially up to 3j+6, j <= 10",
        1..=10,
        |&j| join_scheme_obstruction(j, Coefficients::Z, 3 * j + 6),
    )?);
    let v = |s: &str| SignVector::parse(s);
    let t1t2 = index_rep_sphere_z2k(&[v("-+")?, v("+-")?], 2)?;
    out.push(Check::new(
        "Index S(V_-+ + V_+-) = <t1 t2>",
        t1t2.to_string() == "t1*t2",
    ));
    out.push(Check::new(
        "res_H1(w) = a(a+b)",
        res.apply(&RingElement::parse(&d8, "w")?)? == &a * &ab,
    ));
    Ok(out)
}

pub fn oracle_checks(caps: Caps, per_ring: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (k, id) in RING_IDS.iter().enumerate() {
        let r = ring(id)?;
        let (max_deg, max_span) = match r.coefficients() {
            Coefficients::F2 => (caps.oracle_f2, 14),
            Coefficients::Z => (caps.oracle_z, 8),
        };
        if (1..=max_deg).all(|d| r.graded_slice(d).is_empty()) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + k as u64);
        let instances: Vec<_> = (0..per_ring)
            .map(|_| random_instance(&r, max_deg, max_span, &mut rng))
            .collect();
        let mut agree = true;
        for (gens, f) in &instances {
            if ideal_contains(gens, f)? != brute_force_contains(gens, f)? {
                agree = false;
                break;
            }
        }
        out.push(Check::new(
            format!("{id}: {per_ring} random memberships agree with enumeration"),
            agree,
        ));
    }
    Ok(out)
}

/// Runs one suite and returns its checks in a fixed order.
pub fn run_suite(suite: Suite, caps: Caps) -> Result<Vec<Check>> {
    match suite {
        Suite::Lemmas => lemma_checks(),
        Suite::Diagram => diagram_checks(caps),
        Suite::Indexes => index_checks(caps),
        Suite::Oracle => oracle_checks(caps, 200),
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Lemmas, Suite::Diagram, Suite::Indexes, Suite::Oracle] {
                out.extend(run_suite(s, caps)?);
            }
            Ok(out)
        }
    }
}
