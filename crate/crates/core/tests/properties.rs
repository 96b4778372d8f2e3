//! Property tests over randomly generated permutation groups and CM data.

use cmtate::{
    act_on_cm_type, all_cm_types, analyze, enumerate_frobenius_functions, group_from_generators, left_cosets,
    plus_types, reduce_cm_type, region_bijection, signed_representation, stabilizer_h, subgroup_generated,
    CmGaloisDatum, FiniteGroup,
};
use proptest::prelude::*;

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<usize>>()).prop_shuffle()
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    (1usize..=5)
        .prop_flat_map(|n| prop::collection::vec(permutation(n), 0..3).prop_map(move |g| (n, g)))
        .prop_map(|(n, gens)| group_from_generators(n, &gens).unwrap())
}

/// `H₀ × C₂` with `ι` the swap of two extra points, and `D` generated by a
/// random element. Data where `ι` fixes a prime are filtered out.
fn cm_datum(max_degree: usize) -> impl Strategy<Value = CmGaloisDatum> {
    (1usize..=max_degree)
        .prop_flat_map(|n| {
            (prop::collection::vec(permutation(n), 0..3), any::<prop::sample::Index>())
                .prop_map(move |(g, i)| (n, g, i))
        })
        .prop_filter_map("iota fixes a prime", |(n, gens, pick)| {
            let mut full: Vec<Vec<usize>> =
                gens.iter().map(|g| g.iter().copied().chain([n, n + 1]).collect()).collect();
            let swap: Vec<usize> = (0..n).chain([n + 1, n]).collect();
            full.push(swap.clone());
            let group = group_from_generators(n + 2, &full).unwrap();
            let iota = group.elements().find(|&x| group.permutation(x) == Some(&swap[..])).unwrap();
            let d = pick.index(group.order());
            CmGaloisDatum::new(&group, iota, &[d]).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_of_product(g in small_group()) {
        for a in g.elements() {
            for b in g.elements() {
                prop_assert_eq!(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
            }
        }
    }

    #[test]
    fn regenerating_from_all_elements_is_idempotent(g in small_group()) {
        let degree = g.degree().unwrap();
        let all: Vec<Vec<usize>> = g.elements().map(|x| g.permutation(x).unwrap().to_vec()).collect();
        let again = group_from_generators(degree, &all).unwrap();
        prop_assert_eq!(again.cayley_rows(), g.cayley_rows());
    }

    #[test]
    fn coset_spaces_are_transitive(g in small_group(), pick in any::<prop::sample::Index>()) {
        let h = subgroup_generated(&g, &[pick.index(g.order())]).unwrap();
        let w = left_cosets(&g, &h).unwrap();
        prop_assert_eq!(w.len() * h.order(), g.order());
        prop_assert!(w.action().is_transitive());
        for x in 0..w.len() {
            let stab = w.action().stabilizer(x).unwrap();
            prop_assert_eq!(stab.order() * w.action().orbit(x).unwrap().len(), g.order());
        }
    }

    #[test]
    fn enumeration_and_reports(datum in cm_datum(4).prop_filter("small", |d| {
        d.group().order() <= 24 && (d.local_degree() as u64 + 1).pow(d.half_count() as u32) <= 256
    })) {
        let t = datum.half_count();
        let d = datum.local_degree();
        let fs = enumerate_frobenius_functions(&datum).unwrap();
        prop_assert_eq!(fs.len() as u64, (d as u64 + 1).pow(t as u32));
        for f in &fs {
            let r = analyze(&datum, f).unwrap();
            prop_assert!(r.dim_p <= t + 1);
            prop_assert!(r.dim_p <= r.dim_l);
            prop_assert_eq!(r.exotic, !r.kowalski_independent);
            let h = stabilizer_h(&datum, f).unwrap();
            if !h.contains_iota() {
                prop_assert_eq!(h.index() % 2, 0);
                prop_assert_eq!(r.dim_l, h.index() / 2 + 1);
            }
            prop_assert_eq!(analyze(&datum, &f.dual(&datum)).unwrap(), r);
            for g in datum.group().elements() {
                prop_assert_eq!(analyze(&datum, &f.translate(&datum, g)).unwrap(), r);
            }
        }
    }

    #[test]
    fn cm_type_machinery(datum in cm_datum(3).prop_filter("small", |d| d.group().order() <= 24)) {
        let g = datum.group();
        let iota = datum.iota();
        let types = all_cm_types(g, iota).unwrap();
        prop_assert_eq!(types.len(), 1usize << (g.order() / 2));
        let plus = plus_types(g, &types);
        prop_assert_eq!(plus.len() * 2, types.len());

        let ordering = &plus[0];
        let rho = signed_representation(g, iota, ordering.members()).unwrap();
        prop_assert!(rho.checks().all());
        let map = region_bijection(g, iota, ordering.members()).unwrap();
        for phi in &types {
            let f = reduce_cm_type(&datum, phi).unwrap();
            for x in g.elements() {
                let moved = act_on_cm_type(g, x, phi);
                prop_assert_eq!(
                    map.sign_vector(&moved),
                    rho.image(x).apply(&map.sign_vector(phi))
                );
                prop_assert_eq!(reduce_cm_type(&datum, &moved).unwrap(), f.translate_left(&datum, x));
            }
        }
    }
}
