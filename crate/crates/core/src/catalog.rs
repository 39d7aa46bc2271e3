//! The cohomology rings of D8 and its subgroups, with restriction and
//! reduction maps, addressed by stable string identifiers.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::hom::{homs_equal_up_to_degree, RingHom};
use crate::ring::{Coefficients, Generator, Monomial, RingPresentation};

pub const RING_IDS: &[&str] = &[
    "D8_F2",
    "D8_Z_FULL",
    "D8_Z_BOUND",
    "H1_F2",
    "H1_Z",
    "H2_F2",
    "H2_Z",
    "H3_F2",
    "H3_Z",
    "K1_F2",
    "K2_F2",
    "K3_F2",
    "K4_F2",
    "K5_F2",
    "K3_Z",
    "Z2xZ2_F2",
    "Z2xZ2_Z",
    "Z2_F2",
    "Z2_Z",
];

/// Subgroup nodes of the mod-2 diagram.
pub const F2_NODES: &[&str] = &["D8", "H1", "H2", "H3", "K1", "K2", "K3", "K4", "K5"];
/// Subgroup nodes of the integral diagram.
pub const Z_NODES: &[&str] = &["D8", "H1", "H2", "H3", "K3"];

/// Inclusions `(K, H)` with `K ⊂ H` of index two.
const F2_EDGES: &[(&str, &str)] = &[
    ("D8", "H1"),
    ("D8", "H2"),
    ("D8", "H3"),
    ("H1", "K1"),
    ("H1", "K2"),
    ("H1", "K3"),
    ("H2", "K3"),
    ("H3", "K3"),
    ("H3", "K4"),
    ("H3", "K5"),
];
const Z_EDGES: &[(&str, &str)] = &[
    ("D8", "H1"),
    ("D8", "H2"),
    ("D8", "H3"),
    ("H1", "K3"),
    ("H2", "K3"),
    ("H3", "K3"),
];

/// The intermediate subgroup through which `res_K^D8` is defined.
fn canonical_route(k: &str) -> &'static str {
    match k {
        "K1" | "K2" => "H1",
        "K3" => "H2",
        _ => "H3",
    }
}

pub struct Catalog {
    rings: BTreeMap<String, Arc<RingPresentation>>,
    homs: BTreeMap<String, Arc<RingHom>>,
}

fn gen(symbol: &str, aliases: &[&str], degree: u32, order: u8) -> Generator {
    Generator {
        symbol: symbol.to_string(),
        aliases: aliases.iter().map(|s| s.to_string()).collect(),
        degree,
        order,
    }
}

fn build_rings() -> Vec<RingPresentation> {
    use Coefficients::{F2, Z};
    let mut v = vec![
        RingPresentation::new(
            "D8_F2",
            F2,
            vec![
                gen("x", &[], 1, 2),
                gen("y", &[], 1, 2),
                gen("w", &[], 2, 2),
            ],
            &[(&[("x", 1), ("y", 1)], &[])],
        ),
        RingPresentation::new(
            "D8_Z_FULL",
            Z,
            vec![
                gen("X", &[], 2, 2),
                gen("Y", &[], 2, 2),
                gen("M", &[], 3, 2),
                gen("W", &[], 4, 4),
            ],
            &[
                (&[("X", 1), ("Y", 1)], &[]),
                (
                    &[("M", 2)],
                    &[(&[("W", 1), ("X", 1)], 1), (&[("W", 1), ("Y", 1)], 1)],
                ),
            ],
        ),
        RingPresentation::new(
            "D8_Z_BOUND",
            Z,
            vec![
                gen("Y", &[], 2, 2),
                gen("M", &[], 3, 2),
                gen("W", &[], 4, 4),
            ],
            &[(&[("M", 2)], &[(&[("W", 1), ("Y", 1)], 1)])],
        ),
        RingPresentation::polynomial_f2("H1_F2", &[("a", 1), ("b", 1)]),
        RingPresentation::new(
            "H1_Z",
            Z,
            vec![
                gen("alpha", &["α"], 2, 2),
                gen("beta", &["β"], 2, 2),
                gen("mu", &["μ"], 3, 2),
            ],
            &[(
                &[("mu", 2)],
                &[
                    (&[("alpha", 2), ("beta", 1)], 1),
                    (&[("alpha", 1), ("beta", 2)], 1),
                ],
            )],
        ),
        RingPresentation::new(
            "H2_F2",
            F2,
            vec![gen("e", &[], 1, 2), gen("u", &[], 2, 2)],
            &[(&[("e", 2)], &[])],
        ),
        RingPresentation::new("H2_Z", Z, vec![gen("U", &[], 2, 4)], &[]),
        RingPresentation::new(
            "H3_F2",
            F2,
            vec![gen("c", &["c3"], 1, 2), gen("d", &["d3"], 1, 2)],
            &[],
        ),
        RingPresentation::new(
            "H3_Z",
            Z,
            vec![
                gen("gamma", &["γ"], 2, 2),
                gen("delta", &["δ"], 2, 2),
                gen("eta", &["η"], 3, 2),
            ],
            &[(
                &[("eta", 2)],
                &[
                    (&[("gamma", 2), ("delta", 1)], 1),
                    (&[("gamma", 1), ("delta", 2)], 1),
                ],
            )],
        ),
    ];
    for i in 1..=5 {
        let t = format!("t{i}");
        v.push(RingPresentation::polynomial_f2(
            format!("K{i}_F2"),
            &[(t.as_str(), 1)],
        ));
    }
    v.push(RingPresentation::new(
        "K3_Z",
        Z,
        vec![gen("theta3", &["θ3"], 2, 2)],
        &[],
    ));
    v.push(RingPresentation::polynomial_f2(
        "Z2xZ2_F2",
        &[("t1", 1), ("t2", 1)],
    ));
    v.push(RingPresentation::new(
        "Z2xZ2_Z",
        Z,
        vec![
            gen("tau1", &["τ1"], 2, 2),
            gen("tau2", &["τ2"], 2, 2),
            gen("mu", &["μ"], 3, 2),
        ],
        &[(
            &[("mu", 2)],
            &[
                (&[("tau1", 2), ("tau2", 1)], 1),
                (&[("tau1", 1), ("tau2", 2)], 1),
            ],
        )],
    ));
    v.push(RingPresentation::polynomial_f2("Z2_F2", &[("t", 1)]));
    v.push(RingPresentation::new(
        "Z2_Z",
        Z,
        vec![gen("theta", &["θ"], 2, 2)],
        &[],
    ));
    v
}

type HomTable = &'static [(
    &'static str,
    &'static str,
    &'static str,
    &'static [(&'static str, &'static str)],
)];

const BASE_HOMS: HomTable = &[
    (
        "res_D8_H1_F2",
        "D8_F2",
        "H1_F2",
        &[("x", "0"), ("y", "b"), ("w", "a^2+a*b")],
    ),
    (
        "res_D8_H2_F2",
        "D8_F2",
        "H2_F2",
        &[("x", "e"), ("y", "e"), ("w", "u")],
    ),
    (
        "res_D8_H3_F2",
        "D8_F2",
        "H3_F2",
        &[("x", "d"), ("y", "0"), ("w", "c^2+c*d")],
    ),
    (
        "res_H1_K1_F2",
        "H1_F2",
        "K1_F2",
        &[("a", "t1"), ("b", "t1")],
    ),
    ("res_H1_K2_F2", "H1_F2", "K2_F2", &[("a", "0"), ("b", "t2")]),
    ("res_H1_K3_F2", "H1_F2", "K3_F2", &[("a", "t3"), ("b", "0")]),
    (
        "res_H2_K3_F2",
        "H2_F2",
        "K3_F2",
        &[("e", "0"), ("u", "t3^2")],
    ),
    ("res_H3_K3_F2", "H3_F2", "K3_F2", &[("c", "t3"), ("d", "0")]),
    (
        "res_H3_K4_F2",
        "H3_F2",
        "K4_F2",
        &[("c", "t4"), ("d", "t4")],
    ),
    ("res_H3_K5_F2", "H3_F2", "K5_F2", &[("c", "0"), ("d", "t5")]),
    (
        "res_D8_H1_Z",
        "D8_Z_FULL",
        "H1_Z",
        &[
            ("X", "0"),
            ("Y", "beta"),
            ("M", "mu"),
            ("W", "alpha^2+alpha*beta"),
        ],
    ),
    (
        "res_D8_H2_Z",
        "D8_Z_FULL",
        "H2_Z",
        &[("X", "2*U"), ("Y", "2*U"), ("M", "0"), ("W", "U^2")],
    ),
    (
        "res_D8_H3_Z",
        "D8_Z_FULL",
        "H3_Z",
        &[
            ("X", "delta"),
            ("Y", "0"),
            ("M", "eta"),
            ("W", "gamma^2+gamma*delta"),
        ],
    ),
    (
        "res_H1_K3_Z",
        "H1_Z",
        "K3_Z",
        &[("alpha", "theta3"), ("beta", "0"), ("mu", "0")],
    ),
    ("res_H2_K3_Z", "H2_Z", "K3_Z", &[("U", "theta3")]),
    (
        "res_H3_K3_Z",
        "H3_Z",
        "K3_Z",
        &[("gamma", "theta3"), ("delta", "0"), ("eta", "0")],
    ),
    (
        "red_D8",
        "D8_Z_FULL",
        "D8_F2",
        &[("X", "x^2"), ("Y", "y^2"), ("M", "w*x+w*y"), ("W", "w^2")],
    ),
    (
        "red_H1",
        "H1_Z",
        "H1_F2",
        &[("alpha", "a^2"), ("beta", "b^2"), ("mu", "a^2*b+a*b^2")],
    ),
    ("red_H2", "H2_Z", "H2_F2", &[("U", "u")]),
    (
        "red_H3",
        "H3_Z",
        "H3_F2",
        &[("gamma", "c^2"), ("delta", "d^2"), ("eta", "c^2*d+c*d^2")],
    ),
    ("red_K3", "K3_Z", "K3_F2", &[("theta3", "t3^2")]),
    (
        "red_Z2xZ2",
        "Z2xZ2_Z",
        "Z2xZ2_F2",
        &[
            ("tau1", "t1^2"),
            ("tau2", "t2^2"),
            ("mu", "t1^2*t2+t1*t2^2"),
        ],
    ),
    ("red_Z2", "Z2_Z", "Z2_F2", &[("theta", "t^2")]),
    (
        "quot_D8_Z",
        "D8_Z_FULL",
        "D8_Z_BOUND",
        &[("X", "0"), ("Y", "Y"), ("M", "M"), ("W", "W")],
    ),
];

fn build() -> Catalog {
    let rings: BTreeMap<String, Arc<RingPresentation>> = build_rings()
        .into_iter()
        .map(|r| (r.name().to_string(), Arc::new(r)))
        .collect();
    let mut homs: BTreeMap<String, Arc<RingHom>> = BTreeMap::new();
    for (name, from, to, images) in BASE_HOMS {
        let h = RingHom::new(*name, &rings[*from], &rings[*to], images)
            .unwrap_or_else(|e| panic!("catalog hom {name}: {e}"));
        homs.insert(name.to_string(), Arc::new(h));
    }
    for (k, tag) in F2_NODES[4..]
        .iter()
        .map(|k| (*k, "F2"))
        .chain(std::iter::once(("K3", "Z")))
    {
        let h = canonical_route(k);
        let first = Arc::clone(&homs[&format!("res_D8_{h}_{tag}")]);
        let second = Arc::clone(&homs[&format!("res_{h}_{k}_{tag}")]);
        let name = format!("res_D8_{k}_{tag}");
        let composed = first
            .then(&second)
            .unwrap_or_else(|e| panic!("catalog hom {name}: {e}"))
            .renamed(name.clone());
        homs.insert(name, Arc::new(composed));
    }
    Catalog { rings, homs }
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(build)
}

/// Looks up a ring by identifier, e.g. `"D8_F2"`.
pub fn ring(id: &str) -> Result<Arc<RingPresentation>> {
    catalog()
        .rings
        .get(id)
        .cloned()
        .ok_or_else(|| Error::UnknownRing(id.to_string()))
}

/// Looks up a hom by name, e.g. `"res_D8_H1_F2"` or `"red_D8"`.
pub fn hom(name: &str) -> Result<Arc<RingHom>> {
    catalog()
        .homs
        .get(name)
        .cloned()
        .ok_or_else(|| Error::UnknownHom(name.to_string()))
}

pub fn hom_names() -> Vec<String> {
    catalog().homs.keys().cloned().collect()
}

/// `res_to^from` in the given coefficients; subgroups are named `D8`, `H1`, ..., `K5`.
pub fn restriction(from: &str, to: &str, coefficients: Coefficients) -> Result<Arc<RingHom>> {
    hom(&format!("res_{from}_{to}_{coefficients}"))
}

/// The cohomology ring of a subgroup; for `D8` over `Z` this is the full ring.
pub fn subgroup_ring(group: &str, coefficients: Coefficients) -> Result<Arc<RingPresentation>> {
    match (group, coefficients) {
        ("D8", Coefficients::Z) => ring("D8_Z_FULL"),
        (g, c) => ring(&format!("{g}_{c}")),
    }
}

/// Mod-2 reduction out of the integral ring of a subgroup.
pub fn reduction(group: &str) -> Result<Arc<RingHom>> {
    hom(&format!("red_{group}"))
}

/// Lifts a bound-ring element to the full ring along `Y↦Y, M↦M, W↦W`.
pub fn lift_bound_to_full(e: &RingElement) -> Result<RingElement> {
    let bound = ring("D8_Z_BOUND")?;
    let full = ring("D8_Z_FULL")?;
    crate::element::check_same_ring(&bound, e.ring())?;
    let terms = e.terms().iter().map(|(m, c)| {
        let mut ex = vec![0];
        ex.extend_from_slice(m.exponents());
        (Monomial(ex), *c)
    });
    Ok(RingElement::from_terms(&full, terms))
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
        }
    }
}

/// The subgroup lattice of D8 with one restriction map per edge.
pub struct RestrictionDiagram {
    pub coefficients: Coefficients,
    pub nodes: Vec<&'static str>,
    pub edges: Vec<(&'static str, &'static str, Arc<RingHom>)>,
}

impl RestrictionDiagram {
    pub fn new(coefficients: Coefficients) -> Result<Self> {
        let (nodes, edges) = match coefficients {
            Coefficients::F2 => (F2_NODES, F2_EDGES),
            Coefficients::Z => (Z_NODES, Z_EDGES),
        };
        let edges = edges
            .iter()
            .map(|(g, h)| Ok((*g, *h, restriction(g, h, coefficients)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RestrictionDiagram {
            coefficients,
            nodes: nodes.to_vec(),
            edges,
        })
    }

    fn edge(&self, from: &str, to: &str) -> Option<&Arc<RingHom>> {
        self.edges
            .iter()
            .find(|(g, h, _)| *g == from && *h == to)
            .map(|(_, _, hom)| hom)
    }

    /// Every two-step path `D8 → H → K` compared with the catalogued
    /// `res_K^D8`, and every pair of such paths compared with each other.
    pub fn triangle_checks(&self, max_degree: u32) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for k in self.nodes.iter().filter(|n| n.starts_with('K')) {
            let direct = restriction("D8", k, self.coefficients)?;
            let paths: Vec<(&str, RingHom)> = self
                .nodes
                .iter()
                .filter(|n| n.starts_with('H'))
                .filter_map(|h| {
                    let first = self.edge("D8", h)?;
                    let second = self.edge(h, k)?;
                    Some((*h, first.then(second)))
                })
                .map(|(h, r)| r.map(|r| (h, r)))
                .collect::<Result<_>>()?;
            for (h, path) in &paths {
                out.push(Check::new(
                    format!(
                        "{}: res_{k}^D8 = res_{k}^{h} o res_{h}^D8",
                        self.coefficients
                    ),
                    homs_equal_up_to_degree(&direct, path, max_degree)?,
                ));
            }
        }
        Ok(out)
    }

    /// Squares `red ∘ res^Z = res^F2 ∘ red` over every integral edge.
    pub fn reduction_cube_checks(max_degree: u32) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        let mut edges: Vec<(&str, &str)> = Z_EDGES.to_vec();
        edges.push(("D8", "K3"));
        for (g, h) in edges {
            let top = restriction(g, h, Coefficients::Z)?.then(&*reduction(h)?)?;
            let bottom = reduction(g)?.then(&*restriction(g, h, Coefficients::F2)?)?;
            out.push(Check::new(
                format!("cube face {g} -> {h}"),
                homs_equal_up_to_degree(&top, &bottom, max_degree)?,
            ));
        }
        Ok(out)
    }
}

/// The fixed choice of restrictions from H1 to K1 and K2 (and the mirrored
/// choice for H3), checked generator by generator.
pub fn assumption_checks() -> Result<Vec<Check>> {
    let expect: &[(&str, &str, &str, &str)] = &[
        ("H1", "K1", "a", "t1"),
        ("H1", "K1", "b", "t1"),
        ("H1", "K2", "a", "0"),
        ("H1", "K2", "b", "t2"),
        ("H3", "K4", "c", "t4"),
        ("H3", "K4", "d", "t4"),
        ("H3", "K5", "c", "0"),
        ("H3", "K5", "d", "t5"),
    ];
    let mut out = Vec::new();
    for (h, k, g, img) in expect {
        let res = restriction(h, k, Coefficients::F2)?;
        let x = RingElement::parse(res.domain(), g)?;
        let want = RingElement::parse(res.codomain(), img)?;
        out.push(Check::new(
            format!("res_{k}^{h}({g}) = {img}"),
            res.apply(&x)? == want,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_rings_present_and_confluent() {
        for id in RING_IDS {
            let r = ring(id).unwrap();
            assert!(r.critical_pair_failures(12).is_empty(), "{id}");
        }
        assert_eq!(ring("nope").err(), Some(Error::UnknownRing("nope".into())));
    }

    #[test]
    fn normal_form_examples() {
        let d8 = ring("D8_F2").unwrap();
        assert!(RingElement::parse(&d8, "x^2*y*w").unwrap().is_zero());
        let h1 = ring("H1_Z").unwrap();
        let mu = RingElement::parse(&h1, "mu").unwrap();
        assert_eq!((&mu * &mu).to_string(), "alpha^2*beta+alpha*beta^2");
        let full = ring("D8_Z_FULL").unwrap();
        assert_eq!(
            RingElement::parse(&full, "M^2*X").unwrap().to_string(),
            "W*X^2"
        );
    }

    #[test]
    fn direct_k3_restriction_matches() {
        let res = restriction("D8", "K3", Coefficients::F2).unwrap();
        let imgs: Vec<String> = res.images().iter().map(|e| e.to_string()).collect();
        assert_eq!(imgs, ["0", "0", "t3^2"]);
    }

    #[test]
    fn diagrams_commute() {
        for c in [Coefficients::F2, Coefficients::Z] {
            let d = RestrictionDiagram::new(c).unwrap();
            let checks = d.triangle_checks(8).unwrap();
            assert_eq!(checks.len(), if c == Coefficients::F2 { 7 } else { 3 });
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
        assert!(RestrictionDiagram::reduction_cube_checks(6)
            .unwrap()
            .iter()
            .all(|c| c.passed));
        assert!(assumption_checks().unwrap().iter().all(|c| c.passed));
    }

    #[test]
    fn lift_and_quotient() {
        let b = ring("D8_Z_BOUND").unwrap();
        let e = RingElement::parse(&b, "Y^3+W*Y+M*Y").unwrap();
        let l = lift_bound_to_full(&e).unwrap();
        assert_eq!(l.to_string(), "Y^3+W*Y+M*Y");
        assert_eq!(hom("quot_D8_Z").unwrap().apply(&l).unwrap(), e);
    }
}
