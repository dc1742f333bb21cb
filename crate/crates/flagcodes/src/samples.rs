//! Hand-built desk-scale codes over F_2, one per structural phenomenon.
//!
//! Each constructor documents the property the code exhibits; the test suite
//! pins the exact distances and verdicts. All of them are written in terms
//! of the standard basis u_1, ..., u_n, with mixed generators where a
//! subspace off the coordinate grid is needed.

use crate::field::FieldContext;
use crate::flag::{Flag, FlagCode, TypeVector};
use crate::subspace::Subspace;

fn f2() -> FieldContext {
    FieldContext::new(2).expect("2 is prime")
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn flag(n: usize, dims: &[usize], levels: &[&[Vec<u32>]]) -> Flag {
    let t = TypeVector::new(n, dims.to_vec()).expect("sample types are valid");
    let subspaces: Vec<Subspace> = levels
        .iter()
        .map(|rows| Subspace::from_vectors(f2(), n, rows).expect("sample rows are valid"))
        .collect();
    Flag::new(t, subspaces).expect("sample flags are valid")
}

/// Type (1,2,3) on F_2^5, three flags, d_f = 6. Every projected code has
/// distance 2, yet a closest pair shares its first subspace, so the code is
/// not distance-coherent and its minimum distance intersection code mixes
/// types (1,1,1) and (0,1,2).
pub fn not_distance_coherent_n5() -> FlagCode {
    FlagCode::new(vec![
        flag(
            5,
            &[1, 2, 3],
            &[
                &[unit(5, 0)],
                &[unit(5, 0), unit(5, 2)],
                &[unit(5, 0), unit(5, 2), unit(5, 3)],
            ],
        ),
        flag(
            5,
            &[1, 2, 3],
            &[
                &[unit(5, 0)],
                &[unit(5, 0), unit(5, 4)],
                &[unit(5, 0), unit(5, 1), unit(5, 4)],
            ],
        ),
        flag(
            5,
            &[1, 2, 3],
            &[
                &[unit(5, 1)],
                &[unit(5, 0), unit(5, 1)],
                &[unit(5, 0), unit(5, 1), unit(5, 3)],
            ],
        ),
    ])
    .expect("sample code is valid")
}

/// Type (1,2,3,4) on F_2^6, three flags, d_f = 8. Distance-coherent with
/// m = (0,1,2,3) but not disjoint: only two distinct first subspaces, and a
/// pair of flags meets in a line at level 1, exceeding m_1.
pub fn distance_coherent_not_disjoint_n6() -> FlagCode {
    FlagCode::new(vec![
        flag(
            6,
            &[1, 2, 3, 4],
            &[
                &[unit(6, 0)],
                &[unit(6, 0), unit(6, 1)],
                &[unit(6, 0), unit(6, 1), unit(6, 2)],
                &[unit(6, 0), unit(6, 1), unit(6, 2), unit(6, 3)],
            ],
        ),
        flag(
            6,
            &[1, 2, 3, 4],
            &[
                &[unit(6, 1)],
                &[unit(6, 1), unit(6, 2)],
                &[unit(6, 1), unit(6, 2), unit(6, 3)],
                &[unit(6, 1), unit(6, 2), unit(6, 3), unit(6, 4)],
            ],
        ),
        flag(
            6,
            &[1, 2, 3, 4],
            &[
                &[unit(6, 0)],
                &[unit(6, 0), unit(6, 4)],
                &[unit(6, 0), unit(6, 3), unit(6, 4)],
                &[unit(6, 0), unit(6, 3), unit(6, 4), unit(6, 5)],
            ],
        ),
    ])
    .expect("sample code is valid")
}

/// Type (2,3) on F_2^5, three flags. Equidistant with d_f = 6, but no
/// projected code is equidistant: at level 1 the distances 2 and 4 coexist.
pub fn equidistant_not_projected_n5() -> FlagCode {
    FlagCode::new(vec![
        flag(
            5,
            &[2, 3],
            &[
                &[unit(5, 0), unit(5, 1)],
                &[unit(5, 0), unit(5, 1), unit(5, 2)],
            ],
        ),
        flag(
            5,
            &[2, 3],
            &[
                &[unit(5, 0), unit(5, 3)],
                &[unit(5, 0), unit(5, 3), unit(5, 4)],
            ],
        ),
        flag(
            5,
            &[2, 3],
            &[
                &[unit(5, 2), unit(5, 3)],
                &[unit(5, 1), unit(5, 2), unit(5, 3)],
            ],
        ),
    ])
    .expect("sample code is valid")
}

/// Full flags on F_2^3, three flags. Every projected code is equidistant,
/// yet the flag code is not: distances 2 and 4 both occur.
pub fn projected_equidistant_not_equidistant_n3() -> FlagCode {
    FlagCode::new(vec![
        flag(3, &[1, 2], &[&[unit(3, 0)], &[unit(3, 0), unit(3, 2)]]),
        flag(3, &[1, 2], &[&[unit(3, 0)], &[unit(3, 0), vec![0, 1, 1]]]),
        flag(3, &[1, 2], &[&[unit(3, 1)], &[unit(3, 0), unit(3, 1)]]),
    ])
    .expect("sample code is valid")
}

/// Type (2,3) on F_2^4, three flags. Both projected codes are sunflowers
/// (centers `<u1>` and `<u1,u2>`), but the flag code is not a sunflower: two
/// flags share their second subspace, whose mutual intersection exceeds the
/// level-2 center.
pub fn projected_sunflower_not_sunflower_n4() -> FlagCode {
    FlagCode::new(vec![
        flag(
            4,
            &[2, 3],
            &[
                &[unit(4, 0), unit(4, 1)],
                &[unit(4, 0), unit(4, 1), unit(4, 2)],
            ],
        ),
        flag(
            4,
            &[2, 3],
            &[
                &[unit(4, 0), unit(4, 2)],
                &[unit(4, 0), unit(4, 1), unit(4, 2)],
            ],
        ),
        flag(
            4,
            &[2, 3],
            &[
                &[unit(4, 0), unit(4, 3)],
                &[unit(4, 0), unit(4, 1), unit(4, 3)],
            ],
        ),
    ])
    .expect("sample code is valid")
}

/// Type (1,2) on F_2^4, two flags with no common subspace at any level.
/// Coherent, d_f = 6 = 2 + 4, m = (0,0), and the distance attains the bound
/// for its type: the standard target for decoding demonstrations.
pub fn coherent_pair_n4() -> FlagCode {
    FlagCode::new(vec![
        flag(4, &[1, 2], &[&[unit(4, 0)], &[unit(4, 0), unit(4, 1)]]),
        flag(4, &[1, 2], &[&[unit(4, 2)], &[unit(4, 2), unit(4, 3)]]),
    ])
    .expect("sample code is valid")
}

/// Type (1,2) on F_2^4, three flags whose planes come from a partial spread
/// (pairwise intersection zero) with pairwise distinct lines inside them.
/// Coherent with d_f = 6 attaining the bound, and a sunflower with zero
/// center at both levels.
pub fn optimum_distance_triple_n4() -> FlagCode {
    FlagCode::new(vec![
        flag(4, &[1, 2], &[&[unit(4, 0)], &[unit(4, 0), unit(4, 1)]]),
        flag(4, &[1, 2], &[&[unit(4, 2)], &[unit(4, 2), unit(4, 3)]]),
        flag(
            4,
            &[1, 2],
            &[&[vec![1, 0, 1, 0]], &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]]],
        ),
    ])
    .expect("sample code is valid")
}

/// Every sample in one list, for corpus-wide tests.
pub fn all() -> Vec<(&'static str, FlagCode)> {
    vec![
        ("not_distance_coherent_n5", not_distance_coherent_n5()),
        (
            "distance_coherent_not_disjoint_n6",
            distance_coherent_not_disjoint_n6(),
        ),
        (
            "equidistant_not_projected_n5",
            equidistant_not_projected_n5(),
        ),
        (
            "projected_equidistant_not_equidistant_n3",
            projected_equidistant_not_equidistant_n3(),
        ),
        (
            "projected_sunflower_not_sunflower_n4",
            projected_sunflower_not_sunflower_n4(),
        ),
        ("coherent_pair_n4", coherent_pair_n4()),
        ("optimum_distance_triple_n4", optimum_distance_triple_n4()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_have_the_advertised_shapes() {
        for (name, code) in all() {
            assert!(code.len() >= 2, "{name}");
            for flag in code.flags() {
                // revalidate nesting and dimensions
                Flag::new(flag.type_vector().clone(), flag.levels().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn headline_properties_hold() {
        assert!(!not_distance_coherent_n5().is_distance_coherent());
        let report = distance_coherent_not_disjoint_n6().coherence_report();
        assert!(report.is_distance_coherent && !report.is_disjoint);
        let e = equidistant_not_projected_n5().equidistance_profile();
        assert!(e.flag_equidistant && !e.projected_equidistant);
        let e = projected_equidistant_not_equidistant_n3().equidistance_profile();
        assert!(!e.flag_equidistant && e.projected_equidistant);
        let s = projected_sunflower_not_sunflower_n4().sunflower_profile();
        assert!(s.flag_center.is_none() && s.projected_centers.is_some());
        assert!(coherent_pair_n4().coherence_report().is_coherent);

        let triple = optimum_distance_triple_n4();
        let report = triple.coherence_report();
        assert!(report.is_coherent);
        assert_eq!(report.min_distance, 6);
        assert!(triple.optimum_distance_check().attained);
        let s = triple.sunflower_profile();
        let center = s.flag_center.unwrap();
        assert_eq!(center.dims(), vec![0, 0]);
    }
}
