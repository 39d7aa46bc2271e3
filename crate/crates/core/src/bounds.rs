//! Admissibility criteria for two hyperplanes, the classical lower and upper
//! bounds, bound scans and the inclusion lemmas behind them.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::catalog::ring;
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::ideal::{ideal_contains, ideal_subset};
use crate::index::{capital_pi_poly, pi_poly};
use crate::ring::RingPresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Criterion {
    /// `y^j w^j ∉ ⟨π_{d+1}, π_{d+2}⟩` in the mod-2 cohomology of D8.
    #[serde(rename = "F2_D8")]
    F2D8,
    /// The integral criterion comparing `A_j` and `B_d`.
    #[serde(rename = "Z_D8")]
    ZD8,
    /// `a^j b^j (a+b)^j ∉ ⟨a^{d+1}, (a+b)^{d+1}⟩` for the subgroup `(Z2)^2`.
    #[serde(rename = "H1_F2")]
    H1F2,
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [Criterion::F2D8, Criterion::ZD8, Criterion::H1F2];
}

/// How the integral criterion reads the inclusion `A_j ⊆ B_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZReading {
    /// Certify when `A_j ⊄ B_d`.
    #[default]
    NonInclusion,
    /// Certify when `A_j ⊆ B_d`, taking the inclusion sign literally.
    Inclusion,
}

/// One membership fact consulted by a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipFact {
    pub element: String,
    pub degree: u32,
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityVerdict {
    pub d: u32,
    pub j: u32,
    pub criterion: Criterion,
    pub certified: bool,
    /// Generators of the ideal tested against.
    pub ideal: Vec<String>,
    /// Membership facts in the order they were decided; for the integral
    /// criterion the scan stops at the first non-member.
    pub witness: Vec<MembershipFact>,
}

fn check_positive(d: u32, j: u32) -> Result<()> {
    if d == 0 || j == 0 {
        return Err(Error::InvalidArgument(format!(
            "need d, j >= 1, got d={d}, j={j}"
        )));
    }
    Ok(())
}

fn fact(gens: &[RingElement], e: &RingElement) -> Result<MembershipFact> {
    Ok(MembershipFact {
        element: e.to_string(),
        degree: e.degree().unwrap_or(0),
        member: ideal_contains(gens, e)?,
    })
}

fn strings(gens: &[RingElement]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

fn gen_of(r: &Arc<RingPresentation>, s: &str) -> RingElement {
    RingElement::generator(r, s).expect("catalog generator")
}

/// Mod-2 D8 criterion.
pub fn admissible_f2(d: u32, j: u32) -> Result<AdmissibilityVerdict> {
    check_positive(d, j)?;
    let r = ring("D8_F2")?;
    let target = &gen_of(&r, "y").pow(j) * &gen_of(&r, "w").pow(j);
    let gens = vec![pi_poly(d + 1), pi_poly(d + 2)];
    let f = fact(&gens, &target)?;
    Ok(AdmissibilityVerdict {
        d,
        j,
        criterion: Criterion::F2D8,
        certified: !f.member,
        ideal: strings(&gens),
        witness: vec![f],
    })
}

/// Generators of `A_j` in the bound ring.
pub fn a_ideal(j: u32) -> Vec<RingElement> {
    crate::index::index_sphere_r4j_z(j).generators
}

/// Generators of `B_d` in the bound ring.
pub fn b_ideal(d: u32) -> Vec<RingElement> {
    crate::index::index_product_spheres_z(d).generators
}

/// Integral D8 criterion under the default reading.
pub fn admissible_z(d: u32, j: u32) -> Result<AdmissibilityVerdict> {
    admissible_z_with(d, j, ZReading::default())
}

pub fn admissible_z_with(d: u32, j: u32, reading: ZReading) -> Result<AdmissibilityVerdict> {
    check_positive(d, j)?;
    let b = b_ideal(d);
    let mut witness = Vec::new();
    for a in a_ideal(j) {
        let f = fact(&b, &a)?;
        let stop = !f.member;
        witness.push(f);
        if stop {
            break;
        }
    }
    let included = witness.iter().all(|f| f.member);
    Ok(AdmissibilityVerdict {
        d,
        j,
        criterion: Criterion::ZD8,
        certified: match reading {
            ZReading::NonInclusion => !included,
            ZReading::Inclusion => included,
        },
        ideal: strings(&b),
        witness,
    })
}

/// The `(Z2)^2` criterion in `F2[a,b]`.
pub fn admissible_h1_f2(d: u32, j: u32) -> Result<AdmissibilityVerdict> {
    check_positive(d, j)?;
    let r = ring("H1_F2")?;
    let a = gen_of(&r, "a");
    let b = gen_of(&r, "b");
    let ab = &a + &b;
    let target = &(&a.pow(j) * &b.pow(j)) * &ab.pow(j);
    let gens = vec![a.pow(d + 1), ab.pow(d + 1)];
    let f = fact(&gens, &target)?;
    Ok(AdmissibilityVerdict {
        d,
        j,
        criterion: Criterion::H1F2,
        certified: !f.member,
        ideal: strings(&gens),
        witness: vec![f],
    })
}

pub fn admissible(d: u32, j: u32, criterion: Criterion) -> Result<AdmissibilityVerdict> {
    match criterion {
        Criterion::F2D8 => admissible_f2(d, j),
        Criterion::ZD8 => admissible_z(d, j),
        Criterion::H1F2 => admissible_h1_f2(d, j),
    }
}

/// `⌈(2^k - 1) j / k⌉`.
pub fn ramos_lower(j: u32, k: u32) -> u32 {
    let num = ((1u64 << k) - 1) * j as u64;
    num.div_ceil(k as u64) as u32
}

/// `2^{k+q-1} + r` where `j = 2^q + r`, `0 <= r < 2^q`.
pub fn mvz_upper(j: u32, k: u32) -> u32 {
    assert!(j >= 1 && k >= 1, "mvz_upper needs j, k >= 1");
    let q = 31 - j.leading_zeros();
    let r = j - (1 << q);
    (1 << (k + q - 1)) + r
}

/// `d >= (2^k - 1) j / k`.
pub fn dimension_condition(d: u32, j: u32, k: u32) -> bool {
    d as u64 * k as u64 >= ((1u64 << k) - 1) * j as u64
}

/// Default scan cap `max(2·mvz_upper(j,2), 24)`.
pub fn default_scan_cap(j: u32) -> u32 {
    (2 * mvz_upper(j, 2)).max(24)
}

/// Smallest `d <= d_cap` certified by the criterion.
pub fn min_certified_d(j: u32, criterion: Criterion, d_cap: u32) -> Result<Option<u32>> {
    for d in 1..=d_cap {
        if admissible(d, j, criterion)?.certified {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub j: u32,
    pub ramos_lower: u32,
    pub mvz_upper: u32,
    pub f2_min_d: Option<u32>,
    pub z_min_d: Option<u32>,
    pub h1_min_d: Option<u32>,
    pub scan_cap: u32,
}

pub fn bound_report(j: u32, scan_cap: Option<u32>) -> Result<BoundReport> {
    if j == 0 {
        return Err(Error::InvalidArgument("need j >= 1".into()));
    }
    let cap = scan_cap.unwrap_or_else(|| default_scan_cap(j));
    Ok(BoundReport {
        j,
        ramos_lower: ramos_lower(j, 2),
        mvz_upper: mvz_upper(j, 2),
        f2_min_d: min_certified_d(j, Criterion::F2D8, cap)?,
        z_min_d: min_certified_d(j, Criterion::ZD8, cap)?,
        h1_min_d: min_certified_d(j, Criterion::H1F2, cap)?,
        scan_cap: cap,
    })
}

/// `A_{2^q} ⊆ B_{2^{q+1}-1}`.
pub fn verify_lemma_l3(q: u32) -> Result<bool> {
    ideal_subset(&a_ideal(1 << q), &b_ideal((1 << (q + 1)) - 1))
}

/// The instance `A_j ⊆ B_d ⟹ A_{j+1} ⊆ B_{d+1}`.
pub fn verify_lemma_l4(j: u32, d: u32) -> Result<bool> {
    Ok(!ideal_subset(&a_ideal(j), &b_ideal(d))? || ideal_subset(&a_ideal(j + 1), &b_ideal(d + 1))?)
}

/// `Π_{2^q} = Y^{2^q}`.
pub fn verify_lemma_l2(q: u32) -> bool {
    let b = ring("D8_Z_BOUND").expect("catalog ring");
    capital_pi_poly(1 << q) == gen_of(&b, "Y").pow(1 << q)
}

fn ring_ac() -> Arc<RingPresentation> {
    static AC: OnceLock<Arc<RingPresentation>> = OnceLock::new();
    Arc::clone(AC.get_or_init(|| {
        Arc::new(RingPresentation::polynomial_f2(
            "F2[a,c]",
            &[("a", 1), ("c", 1)],
        ))
    }))
}

/// The instance, in `F2[a,c]`, of: `a^j c^j (a+c)^j ∈ ⟨a^{d+1}, c^{d+1}⟩`
/// implies membership in `⟨a^{d+1}+c^{d+1}, a^{d+2}+c^{d+2}⟩`.
pub fn verify_f2_implication(d: u32, j: u32) -> Result<bool> {
    let r = ring_ac();
    let a = gen_of(&r, "a");
    let c = gen_of(&r, "c");
    let target = &(&a.pow(j) * &c.pow(j)) * &(&a + &c).pow(j);
    let lhs = [a.pow(d + 1), c.pow(d + 1)];
    let rhs = [&a.pow(d + 1) + &c.pow(d + 1), &a.pow(d + 2) + &c.pow(d + 2)];
    Ok(!ideal_contains(&lhs, &target)? || ideal_contains(&rhs, &target)?)
}

/// `j = 2^q + r` with `0 <= r < 2^q`.
pub fn dyadic_split(j: u32) -> (u32, u32) {
    let q = 31 - j.leading_zeros();
    (q, j - (1 << q))
}
