mod common;

use std::collections::BTreeSet;

use itertools::Itertools;
use proptest::prelude::*;
use zonotopal::algebra::{graded_ideal_dims, int, kernel_of_operators, Rational};
use zonotopal::arrangement::{
    chambers, cocircuits, enumerate_bases, rational_subspaces, tutte, RegularFace,
};
use zonotopal::dmspace::{deletion_maps_onto, dspace_basis};
use zonotopal::ideals::{betti_open_stratum, close_downward, generators, hilbert, IdealSpec};
use zonotopal::splines::{eval_t, eval_tf, fan_chambers, local_piece, positive_functional};
use zonotopal::VectorList;

fn spanning_list(max_dim: usize, max_len: usize) -> impl Strategy<Value = VectorList> {
    (1..=max_dim)
        .prop_flat_map(move |dim| {
            let v = prop::collection::vec(-2i64..=2, dim).prop_filter("nonzero", |v| v.iter().any(|&c| c != 0));
            (Just(dim), prop::collection::vec(v, dim..=max_len))
        })
        .prop_map(|(dim, vs)| VectorList::new(dim, vs).unwrap())
        .prop_filter("spanning", common::spans)
}

fn acute_list(max_dim: usize, max_len: usize) -> impl Strategy<Value = VectorList> {
    spanning_list(max_dim, max_len).prop_filter("acute", |x| positive_functional(x).is_ok())
}

fn rationals(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-40i64..=40, 1i64..=7), dim)
        .prop_map(|v| v.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn kernel_and_quotient_are_dual(x in spanning_list(3, 6)) {
        let gens = generators(&x, &IdealSpec::CocircuitFull).unwrap();
        let quotient = graded_ideal_dims(x.dim(), &gens, x.len());
        for d in 0..=x.len() {
            let kernel = kernel_of_operators(x.dim(), &gens, d as u32);
            prop_assert_eq!(kernel.len(), quotient.get(d));
        }
    }

    #[test]
    fn bases_and_independent_sublists(x in spanning_list(3, 7)) {
        let t = tutte(&x).unwrap().poly;
        prop_assert_eq!(enumerate_bases(&x).unwrap().len() as i128, t.eval(1, 1));
        let by_subspace: usize = rational_subspaces(&x)
            .iter()
            .flatten()
            .map(|r| r.index_set.iter().copied().combinations(r.dim).filter(|c| common::subset_rank(&x, c) == r.dim).count())
            .sum();
        let sublists: usize = common::independent_counts(&x).iter().sum();
        prop_assert_eq!(by_subspace, sublists);
        prop_assert_eq!(t.eval(2, 1), sublists as i128);
    }

    #[test]
    fn cocircuits_drop_rank(x in spanning_list(3, 6)) {
        for c in cocircuits(&x).unwrap() {
            let rest: Vec<usize> = (0..x.len()).filter(|i| !c.complement_indices.contains(i)).collect();
            prop_assert_eq!(common::subset_rank(&x, &rest), x.dim() - 1);
        }
    }

    #[test]
    fn subspaces_are_distinct(x in spanning_list(3, 6)) {
        let all: Vec<_> = rational_subspaces(&x).into_iter().flatten().collect();
        let distinct: BTreeSet<_> = all.iter().map(|r| r.basis_matrix.clone()).collect();
        prop_assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn chambers_match_a_grid_of_functionals(x in spanning_list(2, 6)) {
        let faces = chambers(&x);
        let signs: BTreeSet<Vec<i8>> = faces.iter().map(|f| f.signs.clone()).collect();
        prop_assert_eq!(signs.len(), faces.len());
        let mut seen = BTreeSet::new();
        for phi in (0..x.dim()).map(|_| -24i64..=24).multi_cartesian_product() {
            let phi: Vec<Rational> = phi.into_iter().map(int).collect();
            if let Ok(f) = RegularFace::from_witness(&x, phi) {
                seen.insert(f.signs);
            }
        }
        prop_assert_eq!(seen, signs);
    }

    #[test]
    fn adding_a_subspace_shrinks_the_quotient(x in spanning_list(3, 5), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..3)) {
        let all: Vec<_> = rational_subspaces(&x).into_iter().flatten().collect();
        let chosen: Vec<_> = picks.iter().map(|i| all[i.index(all.len())].clone()).collect();
        let (last, first) = chosen.split_last().unwrap();
        let q = close_downward(&x, first);
        let bigger = close_downward(&x, &[first, std::slice::from_ref(last)].concat());
        let small = hilbert(&x, &IdealSpec::SubspaceSet(q.clone()), Some(x.len())).unwrap();
        let large = hilbert(&x, &IdealSpec::SubspaceSet(bigger), Some(x.len())).unwrap();
        for d in 0..=x.len() {
            prop_assert!(large.get(d) <= small.get(d));
        }
        let betti = betti_open_stratum(&x, &q, Some(x.len())).unwrap();
        prop_assert!(betti.entries.iter().all(|(&h, &n)| h % 2 == 0 || n == 0));
    }

    #[test]
    fn derivatives_map_d_spaces_onto(x in spanning_list(3, 5)) {
        for i in 0..x.len() {
            if x.without(i).is_ok_and(|y| common::spans(&y)) {
                prop_assert!(deletion_maps_onto(&x, i).unwrap());
            }
        }
        let total = dspace_basis(&x).unwrap().total();
        prop_assert_eq!(total, common::bases(&x).len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn truncated_power_is_homogeneous(x in acute_list(2, 5), w in rationals(2), num in 1i64..9, den in 1i64..9) {
        prop_assume!(w.len() >= x.dim());
        let w = &w[..x.dim()];
        prop_assume!(eval_t(&x, w).is_ok());
        let lambda = Rational::new(num.into(), den.into());
        let scaled: Vec<Rational> = w.iter().map(|c| c * &lambda).collect();
        let expect = eval_t(&x, w).unwrap() * num_traits::pow(lambda, x.len() - x.dim());
        prop_assert_eq!(eval_t(&x, &scaled).unwrap(), expect);
    }

    #[test]
    fn truncated_power_vanishes_below_the_cone(x in acute_list(3, 5), w in rationals(3)) {
        let phi = positive_functional(&x).unwrap();
        let w = &w[..x.dim()];
        let height: Rational = phi.iter().zip(w).map(|(a, b)| a * b).sum();
        prop_assume!(height < int(0));
        if let Ok(v) = eval_t(&x, w) {
            prop_assert_eq!(v, int(0));
        }
    }

    #[test]
    fn pieces_agree_with_pointwise_values(x in acute_list(3, 5)) {
        let full: Vec<Vec<i64>> = x.vectors().to_vec();
        for w in fan_chambers(&x).unwrap() {
            let piece = local_piece(&x, &w).unwrap().polynomial;
            prop_assert_eq!(piece.evaluate(&w).unwrap(), eval_t(&x, &w).unwrap());
            if x.len() > x.dim() {
                prop_assert!(piece.product_operator(&full).unwrap().is_zero());
            }
            prop_assert!(piece.is_zero() || piece.is_homogeneous());
        }
    }

    #[test]
    fn positive_face_gives_the_truncated_power(x in acute_list(2, 5), w in rationals(2)) {
        let w = &w[..x.dim()];
        prop_assume!(eval_t(&x, w).is_ok());
        let face = chambers(&x).into_iter().find(|f| f.signs.iter().all(|&s| s > 0)).unwrap();
        prop_assert_eq!(eval_tf(&x, &face, w).unwrap(), eval_t(&x, w).unwrap());
    }
}
