use gemkit_core::complex::f_vector;
use gemkit_core::constructions::*;
use gemkit_core::degree::{build_product_map, canonical_degree, ColoredVertexMap};
use gemkit_core::genus::{chi, regular_genus, CyclicPermutation};
use gemkit_core::iso::{color_isomorphic, is_color_isomorphism};
use gemkit_core::moves::{add_dipole, find_dipoles};
use gemkit_core::orientation::{canonical_orientation, is_bipartite};
use gemkit_core::{ColorSet, Gem};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn closed_family() -> impl Strategy<Value = Gem> {
    (2usize..=5, 1usize..=4, 0..4).prop_map(|(n, d, f)| match f {
        0 => necklace_sphere(n, d).unwrap(),
        1 => product_gem(n, d).unwrap(),
        2 => glued_sphere(n, d).unwrap(),
        _ => product_standard(n).unwrap(),
    })
}

fn shuffled(g: &Gem, keys: &[u32]) -> Gem {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (keys[v % keys.len()].wrapping_mul(v as u32 + 1), v));
    let mut new_id = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        new_id[v] = i;
    }
    g.permuted(&new_id).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_survive_relabeling(g in closed_family(), keys in prop::collection::vec(any::<u32>(), 1..16)) {
        let h = shuffled(&g, &keys);
        prop_assert_eq!(f_vector(&g).unwrap(), f_vector(&h).unwrap());
        let (rg, rh) = (regular_genus(&g).unwrap(), regular_genus(&h).unwrap());
        prop_assert_eq!(rg.per_permutation, rh.per_permutation);
        prop_assert_eq!(g.is_contracted().unwrap(), h.is_contracted().unwrap());
        prop_assert_eq!(is_bipartite(&g), is_bipartite(&h));
        let phi = color_isomorphic(&g, &h).expect("relabeling is an isomorphism");
        prop_assert!(is_color_isomorphism(&g, &h, &phi));
    }

    #[test]
    fn chi_depends_only_on_cyclic_class(g in closed_family(), rot in 0usize..8, rev in any::<bool>()) {
        for eps in CyclicPermutation::all(g.dimension()) {
            let mut order: Vec<u8> = eps.order().iter().map(|c| c.0).collect();
            let len = order.len();
            order.rotate_left(rot % len);
            if rev {
                order.reverse();
            }
            let other = CyclicPermutation::new(order).unwrap();
            prop_assert_eq!(other.canonical(), eps.clone());
            prop_assert_eq!(chi(&g, &other).unwrap(), chi(&g, &eps).unwrap());
        }
    }

    #[test]
    fn dipole_insertion_is_found_again(g in closed_family(), at in any::<prop::sample::Index>(), picks in subsequence((0u8..6).collect::<Vec<_>>(), 1..=5)) {
        let n = g.dimension();
        let colors: ColorSet = picks.into_iter().filter(|&c| (c as usize) < n).map(gemkit_core::Color).collect();
        prop_assume!(!colors.is_empty());
        let bigger = add_dipole(&g, at.index(g.vertex_count()), colors).unwrap();
        let v = g.vertex_count();
        prop_assert!(find_dipoles(&bigger, colors.len()).iter().any(|s| (s.u, s.v, s.colors) == (v, v + 1, colors)));
        prop_assert_eq!(f_vector(&bigger).unwrap().euler_characteristic(), f_vector(&g).unwrap().euler_characteristic());
        prop_assert!(is_bipartite(&bigger));
    }

    #[test]
    fn degree_ignores_relabeling_of_source(n in 2usize..=5, d in 1usize..=4, keys in prop::collection::vec(any::<u32>(), 1..16)) {
        let map = build_product_map(n, d).unwrap();
        let source = map.source();
        let h = shuffled(source, &keys);
        // phi: source -> h, so h-vertex phi[v] maps where v did
        let phi = color_isomorphic(source, &h).unwrap();
        let mut assignment = vec![0; h.vertex_count()];
        for (v, &w) in phi.iter().enumerate() {
            assignment[w] = map.assignment()[v];
        }
        let relabeled = ColoredVertexMap::new(h, map.target().clone(), assignment).unwrap();
        prop_assert!(relabeled.validate().is_empty());
        let deg = canonical_degree(&relabeled).unwrap().degree;
        prop_assert_eq!(deg.abs(), d as i64);
    }
}

#[test]
fn orientation_signs_alternate_on_every_edge() {
    for n in 2..=6 {
        for d in 1..=5 {
            for g in [product_gem(n, d).unwrap(), cylinder_gem(n, d).unwrap(), necklace_sphere(n, d).unwrap()] {
                let o = canonical_orientation(&g).unwrap();
                for e in g.edges() {
                    assert_eq!(o.sign(e.u).unwrap(), -o.sign(e.v).unwrap());
                }
                assert_eq!(o.root_sign(), 1);
            }
        }
    }
}
