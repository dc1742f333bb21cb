//! Property tests for the algebra underneath the codes: the dimension
//! formula, the metric axioms of the subspace distance, RREF canonicity,
//! the small-ambient enumeration oracle for intersections, and the
//! structural invariants of constant dimension codes.

use proptest::prelude::*;

use flagcodes::{
    max_distance_bound, ConstantDimensionCode, ContainmentDecode, FieldContext, Matrix, Subspace,
};

fn f2() -> FieldContext {
    FieldContext::new(2).unwrap()
}

/// A random subspace of F_2^n presented as up to n random spanning rows.
fn subspace_strategy(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(0u32..2, n), 0..=n)
        .prop_map(move |rows| Subspace::from_vectors(f2(), n, &rows).unwrap())
}

fn ambient_strategy(max_n: usize) -> impl Strategy<Value = usize> {
    2..=max_n
}

proptest! {
    #[test]
    fn dimension_formula((u, v) in ambient_strategy(6).prop_flat_map(|n| {
        (subspace_strategy(n), subspace_strategy(n))
    })) {
        let sum = u.sum(&v).unwrap();
        let inter = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + inter.dim(), u.dim() + v.dim());
        // the intersection is contained in both, the sum contains both
        prop_assert!(u.contains(&inter).unwrap());
        prop_assert!(v.contains(&inter).unwrap());
        prop_assert!(sum.contains(&u).unwrap());
        prop_assert!(sum.contains(&v).unwrap());
    }

    #[test]
    fn metric_axioms((u, v, w) in ambient_strategy(5).prop_flat_map(|n| {
        (subspace_strategy(n), subspace_strategy(n), subspace_strategy(n))
    })) {
        let duv = u.distance(&v).unwrap();
        prop_assert_eq!(duv, v.distance(&u).unwrap());
        prop_assert_eq!(duv == 0, u == v);
        let duw = u.distance(&w).unwrap();
        let dwv = w.distance(&v).unwrap();
        prop_assert!(duv <= duw + dwv, "triangle violated: {} > {} + {}", duv, duw, dwv);
    }

    #[test]
    fn equal_dimension_distance_is_even((u, v) in ambient_strategy(5).prop_flat_map(|n| {
        subspace_strategy(n).prop_flat_map(move |u| {
            let dim = u.dim();
            (Just(u), subspace_strategy(n).prop_filter("same dim", move |v| v.dim() == dim))
        })
    })) {
        prop_assert_eq!(u.distance(&v).unwrap() % 2, 0);
    }

    #[test]
    fn rref_is_canonical_under_row_mixing(
        (u, mixer_entries) in ambient_strategy(5).prop_flat_map(|n| {
            subspace_strategy(n).prop_flat_map(move |u| {
                let k = u.dim();
                (Just(u), prop::collection::vec(0u32..2, k * k))
            })
        })
    ) {
        let k = u.dim();
        let mixer = Matrix::new(f2(), k, k, mixer_entries).unwrap();
        prop_assume!(mixer.rank() == k); // invertible mixings only
        let mixed = mixer.mul(u.basis()).unwrap();
        prop_assert_eq!(Subspace::span(&mixed), u);
    }

    #[test]
    fn intersection_matches_enumeration_oracle((u, v) in (2usize..=4).prop_flat_map(|n| {
        (subspace_strategy(n), subspace_strategy(n))
    })) {
        let inter = u.intersect(&v).unwrap();
        let oracle = enumeration_intersection(&u, &v);
        prop_assert_eq!(inter, oracle);
    }

    #[test]
    fn codes_respect_the_distance_bound(words in (2usize..=5).prop_flat_map(|n| {
        (1usize..n).prop_flat_map(move |k| {
            prop::collection::vec(kdim_subspace(n, k), 1..=5)
        })
    })) {
        let code = ConstantDimensionCode::new(words).unwrap();
        let bound = max_distance_bound(code.dim(), code.ambient()).unwrap();
        prop_assert!(code.min_distance() <= bound);
        prop_assert_eq!(code.min_distance() % 2, 0);
    }

    #[test]
    fn sunflowers_are_equidistant_with_center_dimension(words in (2usize..=5).prop_flat_map(|n| {
        (1usize..n).prop_flat_map(move |k| {
            prop::collection::vec(kdim_subspace(n, k), 1..=5)
        })
    })) {
        let code = ConstantDimensionCode::new(words).unwrap();
        if let Some(center) = code.sunflower_center() {
            let profile = code.equidistant_profile();
            prop_assert!(profile.is_equidistant);
            prop_assert_eq!(profile.intersection_dim, Some(center.dim()));
        }
        let profile = code.equidistant_profile();
        if profile.is_equidistant && code.len() >= 2 {
            let c = profile.intersection_dim.unwrap();
            let (k, n) = (code.dim(), code.ambient());
            prop_assert!(c <= k);
            prop_assert!(c >= (2 * k).saturating_sub(n));
            prop_assert_eq!(code.min_distance(), 2 * (k - c));
        }
    }

    #[test]
    fn words_of_separated_codes_decode_to_themselves(words in (2usize..=5).prop_flat_map(|n| {
        (1usize..n).prop_flat_map(move |k| {
            prop::collection::vec(kdim_subspace(n, k), 2..=5)
        })
    })) {
        let code = ConstantDimensionCode::new(words).unwrap();
        prop_assume!(code.min_distance() > 0);
        for (i, w) in code.words().iter().enumerate() {
            prop_assert_eq!(
                code.decode_by_containment(w).unwrap(),
                ContainmentDecode::Unique(i)
            );
        }
    }
}

/// A random k-dimensional subspace of F_2^n, by rejection.
fn kdim_subspace(n: usize, k: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(0u32..2, n), n).prop_filter_map(
        "rows must span k dimensions",
        move |rows| {
            let mut picked: Vec<Vec<u32>> = Vec::new();
            for row in rows {
                let mut trial = picked.clone();
                trial.push(row);
                let s = Subspace::from_vectors(f2(), n, &trial).unwrap();
                if s.dim() == trial.len() {
                    picked = trial;
                }
                if picked.len() == k {
                    return Some(Subspace::from_vectors(f2(), n, &picked).unwrap());
                }
            }
            None
        },
    )
}

/// Independent oracle: intersect by walking all 2^n vectors of the ambient
/// space and spanning those lying in both subspaces.
fn enumeration_intersection(u: &Subspace, v: &Subspace) -> Subspace {
    let n = u.ambient();
    let mut members: Vec<Vec<u32>> = Vec::new();
    for bits in 0..(1u32 << n) {
        let vector: Vec<u32> = (0..n).map(|j| (bits >> j) & 1).collect();
        if u.contains_vector(&vector) && v.contains_vector(&vector) {
            members.push(vector);
        }
    }
    Subspace::from_vectors(f2(), n, &members).unwrap()
}
