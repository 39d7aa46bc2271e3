use d8_index::catalog::{hom, ring, RING_IDS};
use d8_index::linalg::howell_solve;
use d8_index::oracle::random_homogeneous;
use d8_index::{ideal_contains, ideal_subset, RingElement};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn element(id: &str, degree: u32, seed: u64) -> RingElement {
    let r = ring(id).unwrap();
    random_homogeneous(&r, degree, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn ring_id() -> impl Strategy<Value = &'static str> {
    proptest::sample::select(RING_IDS)
}

fn z4_system() -> impl Strategy<Value = (Vec<Vec<u8>>, Vec<u8>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(rows, cols)| {
        (
            proptest::collection::vec(proptest::collection::vec(0u8..4, rows), cols),
            proptest::collection::vec(0u8..4, rows),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn howell_ignores_column_order_and_units((cols, target) in z4_system(), rot in 0usize..4) {
        let base = howell_solve(&cols, &target).unwrap();
        let mut moved = cols.clone();
        let k = rot % moved.len();
        moved.rotate_left(k);
        for c in moved.iter_mut().step_by(2) {
            for x in c.iter_mut() {
                *x = (*x * 3) % 4;
            }
        }
        prop_assert_eq!(howell_solve(&moved, &target).unwrap(), base);
    }

    #[test]
    fn print_parse_round_trip(id in ring_id(), degree in 0u32..9, seed: u64) {
        let e = element(id, degree, seed);
        let back = RingElement::parse(e.ring(), &e.to_string()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn normal_form_is_idempotent(id in ring_id(), d1 in 1u32..5, d2 in 1u32..5, seed: u64) {
        let p = &element(id, d1, seed) * &element(id, d2, seed ^ 0x9e37);
        prop_assert_eq!(p.normal_form(), p.clone());
        prop_assert_eq!(p.normal_form().normal_form(), p.normal_form());
    }

    #[test]
    fn generators_and_multiples_are_members(id in ring_id(), d1 in 1u32..5, d2 in 0u32..4, seed: u64) {
        let g = element(id, d1, seed);
        prop_assume!(!g.is_zero());
        let gens = vec![g.clone(), element(id, d1 + 1, seed.wrapping_add(1))];
        prop_assert!(ideal_contains(&gens, &g).unwrap());
        let m = &g * &element(id, d2, seed.wrapping_add(2));
        prop_assert!(ideal_contains(&gens, &m).unwrap());
    }

    #[test]
    fn membership_grows_with_generators(id in ring_id(), d in 1u32..7, seed: u64) {
        let g = element(id, 1 + (seed % d as u64) as u32, seed);
        let h = element(id, 1 + (seed.rotate_left(7) % d as u64) as u32, seed ^ 1);
        let f = element(id, d, seed ^ 2);
        let gens: Vec<_> = [g.clone()].into_iter().filter(|e| !e.is_zero()).collect();
        let more: Vec<_> = [g, h].into_iter().filter(|e| !e.is_zero()).collect();
        if ideal_contains(&gens, &f).unwrap() {
            prop_assert!(ideal_contains(&more, &f).unwrap());
        }
    }

    #[test]
    fn subset_is_reflexive_and_transitive(id in ring_id(), seed: u64) {
        let a = vec![element(id, 4, seed)];
        let b: Vec<_> = vec![element(id, 2, seed ^ 3), element(id, 2, seed ^ 4)];
        let c: Vec<_> = b.iter().cloned().chain([element(id, 1, seed ^ 5)]).collect();
        prop_assert!(ideal_subset(&b, &b).unwrap());
        if ideal_subset(&a, &b).unwrap() && ideal_subset(&b, &c).unwrap() {
            prop_assert!(ideal_subset(&a, &c).unwrap());
        }
        prop_assert!(ideal_subset(&b, &c).unwrap());
    }

    #[test]
    fn restrictions_are_multiplicative(
        name in proptest::sample::select(vec![
            "res_D8_H1_F2", "res_D8_H2_F2", "res_D8_H3_F2", "res_D8_K4_F2",
            "res_D8_H1_Z", "res_D8_H2_Z", "res_D8_H3_Z", "res_D8_K3_Z",
            "red_D8", "red_H1", "quot_D8_Z",
        ]),
        d1 in 1u32..6,
        d2 in 1u32..6,
        seed: u64,
    ) {
        let h = hom(name).unwrap();
        let id = h.domain().name().to_string();
        let p = element(&id, d1, seed);
        let q = element(&id, d2, seed ^ 7);
        let lhs = h.apply(&(&p * &q)).unwrap();
        let rhs = &h.apply(&p).unwrap() * &h.apply(&q).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(h.apply(&(&p + &element(&id, d1, seed ^ 9))).unwrap(),
            &h.apply(&p).unwrap() + &h.apply(&element(&id, d1, seed ^ 9)).unwrap());
    }
}
