//! Structural analysis of flag codes: distance-coherence, coherence,
//! the minimum distance intersection code, and the equidistant, sunflower,
//! and optimum-distance classifications.
//!
//! Every false predicate is reported together with a concrete witness so
//! that analysis output can be audited pair by pair.

use crate::error::{Error, Result};
use crate::flag::{FlagCode, StutteringFlag};
use crate::subspace::Subspace;

/// A level at which two distinct flags share a subspace, violating
/// disjointness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedSubspaceWitness {
    pub level: usize,
    pub flag_a: usize,
    pub flag_b: usize,
}

/// How a pair of flags breaks the distance-coherence equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistanceCoherenceViolation {
    /// The pair attains the code distance but some level distance differs
    /// from the projected minimum.
    MinimalPairNonMinimalLevel { level: usize },
    /// Every level distance is the projected minimum, yet the pair does not
    /// attain the code distance.
    MinimalLevelsNonMinimalPair { pair_distance: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceCoherenceWitness {
    pub flag_a: usize,
    pub flag_b: usize,
    pub violation: DistanceCoherenceViolation,
}

/// The full coherence analysis of a flag code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceReport {
    pub cardinality: usize,
    /// |C_i| per level.
    pub level_cardinalities: Vec<usize>,
    /// d_S(C_i) per level.
    pub level_min_distances: Vec<usize>,
    /// d_f(C).
    pub min_distance: usize,
    pub is_disjoint: bool,
    pub is_distance_coherent: bool,
    pub is_coherent: bool,
    /// m_i = t_i - d_S(C_i)/2, present when the code is distance-coherent
    /// and has at least two flags.
    pub m_vector: Option<Vec<usize>>,
    pub disjointness_witness: Option<SharedSubspaceWitness>,
    pub distance_coherence_witness: Option<DistanceCoherenceWitness>,
}

/// Witness that two flag pairs have unequal distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnequalDistanceWitness {
    pub pair_a: (usize, usize),
    pub distance_a: usize,
    pub pair_b: (usize, usize),
    pub distance_b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquidistanceProfile {
    /// Every pair of distinct flags attains the code distance.
    pub flag_equidistant: bool,
    /// Every projected code is an equidistant constant dimension code.
    pub projected_equidistant: bool,
    /// Per-level pairwise intersection dimensions c_i, present when the
    /// code is projected-equidistant and disjoint; this is the type of the
    /// minimum distance intersection code.
    pub c_vector: Option<Vec<usize>>,
    pub flag_witness: Option<UnequalDistanceWitness>,
    /// First offending level together with a pair of unequal distances.
    pub projected_witness: Option<(usize, UnequalDistanceWitness)>,
}

/// Why a candidate sunflower center failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterMismatchWitness {
    /// The pair whose intersections define the candidate center.
    pub reference_pair: (usize, usize),
    /// A pair whose intersection differs at `level`.
    pub offending_pair: (usize, usize),
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunflowerProfile {
    /// The common level-wise intersection of all pairs of distinct flags,
    /// when it exists; a one-flag code {F} is a trivial sunflower with
    /// center F.
    pub flag_center: Option<StutteringFlag>,
    /// Per-level sunflower centers of the projected codes, when every
    /// projected code is a sunflower.
    pub projected_centers: Option<Vec<Subspace>>,
    pub flag_witness: Option<CenterMismatchWitness>,
    /// First level whose projected code is not a sunflower.
    pub projected_witness: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimumDistanceCheck {
    /// Largest flag distance possible for the type vector.
    pub bound: usize,
    /// Whether the code attains it.
    pub attained: bool,
}

impl FlagCode {
    /// Distance-coherence: a pair of distinct flags attains the code
    /// distance exactly when all its level distances attain the projected
    /// minimum distances. Vacuously true for one-flag codes.
    pub fn is_distance_coherent(&self) -> bool {
        self.distance_coherence_witness().is_none()
    }

    fn distance_coherence_witness(&self) -> Option<DistanceCoherenceWitness> {
        if self.len() < 2 {
            return None;
        }
        let code_distance = self.min_distance();
        let level_min: Vec<usize> = self
            .projected_all()
            .iter()
            .map(|c| c.min_distance())
            .collect();
        for (a, fa) in self.flags().iter().enumerate() {
            for (off, fb) in self.flags()[a + 1..].iter().enumerate() {
                let b = a + 1 + off;
                let pair_distance = fa.distance(fb).expect("one code, one type");
                let level_distances: Vec<usize> = fa
                    .levels()
                    .iter()
                    .zip(fb.levels())
                    .map(|(u, v)| u.distance(v).expect("compatible levels"))
                    .collect();
                let all_levels_minimal =
                    level_distances.iter().zip(&level_min).all(|(d, m)| d == m);
                if pair_distance == code_distance && !all_levels_minimal {
                    let level = level_distances
                        .iter()
                        .zip(&level_min)
                        .position(|(d, m)| d != m)
                        .expect("some level differs");
                    return Some(DistanceCoherenceWitness {
                        flag_a: a,
                        flag_b: b,
                        violation: DistanceCoherenceViolation::MinimalPairNonMinimalLevel { level },
                    });
                }
                if all_levels_minimal && pair_distance != code_distance {
                    return Some(DistanceCoherenceWitness {
                        flag_a: a,
                        flag_b: b,
                        violation: DistanceCoherenceViolation::MinimalLevelsNonMinimalPair {
                            pair_distance,
                        },
                    });
                }
            }
        }
        None
    }

    fn disjointness_witness(&self) -> Option<SharedSubspaceWitness> {
        for level in 0..self.type_vector().levels() {
            for (a, fa) in self.flags().iter().enumerate() {
                for (off, fb) in self.flags()[a + 1..].iter().enumerate() {
                    if fa.level(level) == fb.level(level) {
                        return Some(SharedSubspaceWitness {
                            level,
                            flag_a: a,
                            flag_b: a + 1 + off,
                        });
                    }
                }
            }
        }
        None
    }

    /// Computes the full coherence report. The verdict is obtained through
    /// the pairwise definition and cross-checked against the cardinality
    /// and distance-sum characterization; the two must agree.
    pub fn coherence_report(&self) -> CoherenceReport {
        let projected = self.projected_all();
        let level_cardinalities: Vec<usize> = projected.iter().map(|c| c.len()).collect();
        let level_min_distances: Vec<usize> = projected.iter().map(|c| c.min_distance()).collect();
        let min_distance = self.min_distance();
        let disjointness_witness = self.disjointness_witness();
        let is_disjoint = disjointness_witness.is_none();
        let distance_coherence_witness = self.distance_coherence_witness();
        let is_distance_coherent = distance_coherence_witness.is_none();
        let is_coherent = is_disjoint && is_distance_coherent;

        let distance_sum: usize = level_min_distances.iter().sum();
        let coherent_by_sum = is_disjoint && min_distance == distance_sum;
        assert_eq!(
            is_coherent, coherent_by_sum,
            "the pairwise and distance-sum coherence criteria must agree"
        );

        let m_vector = if is_distance_coherent && self.len() >= 2 {
            Some(
                self.type_vector()
                    .dims()
                    .iter()
                    .zip(&level_min_distances)
                    .map(|(t, d)| t - d / 2)
                    .collect(),
            )
        } else {
            None
        };

        CoherenceReport {
            cardinality: self.len(),
            level_cardinalities,
            level_min_distances,
            min_distance,
            is_disjoint,
            is_distance_coherent,
            is_coherent,
            m_vector,
            disjointness_witness,
            distance_coherence_witness,
        }
    }

    /// The set of level-wise intersections of all pairs of flags attaining
    /// the code distance, deduplicated. For a coherent code every member has
    /// type (m_1, ..., m_r); in general the types may be mixed.
    pub fn min_distance_intersection_code(&self) -> Result<Vec<StutteringFlag>> {
        if self.len() < 2 {
            return Err(Error::TooFewFlags);
        }
        let code_distance = self.min_distance();
        let mut members: Vec<StutteringFlag> = Vec::new();
        for (a, fa) in self.flags().iter().enumerate() {
            for fb in &self.flags()[a + 1..] {
                if fa.distance(fb).expect("one code, one type") != code_distance {
                    continue;
                }
                let levels: Vec<Subspace> = fa
                    .levels()
                    .iter()
                    .zip(fb.levels())
                    .map(|(u, v)| u.intersect(v).expect("compatible levels"))
                    .collect();
                let member = StutteringFlag::new(levels)
                    .expect("intersections of nested sequences are nested");
                if !members.contains(&member) {
                    members.push(member);
                }
            }
        }
        Ok(members)
    }

    /// Equidistance at the flag level and at the projected level.
    pub fn equidistance_profile(&self) -> EquidistanceProfile {
        let flag_witness = self.flag_equidistance_witness();
        let projected = self.projected_all();
        let mut projected_witness = None;
        for (level, code) in projected.iter().enumerate() {
            if let Some(w) = projected_unequal_witness(code) {
                projected_witness = Some((level, w));
                break;
            }
        }
        let projected_equidistant = projected_witness.is_none();
        let c_vector = if projected_equidistant && self.is_disjoint() {
            Some(
                projected
                    .iter()
                    .map(|c| {
                        c.equidistant_profile()
                            .intersection_dim
                            .expect("projected code is equidistant")
                    })
                    .collect(),
            )
        } else {
            None
        };
        EquidistanceProfile {
            flag_equidistant: flag_witness.is_none(),
            projected_equidistant,
            c_vector,
            flag_witness,
            projected_witness,
        }
    }

    fn flag_equidistance_witness(&self) -> Option<UnequalDistanceWitness> {
        let mut first: Option<((usize, usize), usize)> = None;
        for (a, fa) in self.flags().iter().enumerate() {
            for (off, fb) in self.flags()[a + 1..].iter().enumerate() {
                let b = a + 1 + off;
                let d = fa.distance(fb).expect("one code, one type");
                match first {
                    None => first = Some(((a, b), d)),
                    Some((pair, d0)) if d != d0 => {
                        return Some(UnequalDistanceWitness {
                            pair_a: pair,
                            distance_a: d0,
                            pair_b: (a, b),
                            distance_b: d,
                        });
                    }
                    _ => {}
                }
            }
        }
        None
    }

    /// Sunflower structure at the flag level and at the projected level.
    pub fn sunflower_profile(&self) -> SunflowerProfile {
        let (flag_center, flag_witness) = self.flag_sunflower();
        let projected = self.projected_all();
        let mut centers = Vec::with_capacity(projected.len());
        let mut projected_witness = None;
        for (level, code) in projected.iter().enumerate() {
            match code.sunflower_center() {
                Some(c) => centers.push(c),
                None => {
                    projected_witness = Some(level);
                    break;
                }
            }
        }
        let projected_centers = if projected_witness.is_none() {
            Some(centers)
        } else {
            None
        };
        SunflowerProfile {
            flag_center,
            projected_centers,
            flag_witness,
            projected_witness,
        }
    }

    fn flag_sunflower(&self) -> (Option<StutteringFlag>, Option<CenterMismatchWitness>) {
        if self.len() == 1 {
            return (Some(StutteringFlag::from(&self.flags()[0])), None);
        }
        let intersection = |a: usize, b: usize| -> Vec<Subspace> {
            self.flags()[a]
                .levels()
                .iter()
                .zip(self.flags()[b].levels())
                .map(|(u, v)| u.intersect(v).expect("compatible levels"))
                .collect()
        };
        let candidate = intersection(0, 1);
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if (a, b) == (0, 1) {
                    continue;
                }
                let levels = intersection(a, b);
                if let Some(level) = levels.iter().zip(&candidate).position(|(x, y)| x != y) {
                    return (
                        None,
                        Some(CenterMismatchWitness {
                            reference_pair: (0, 1),
                            offending_pair: (a, b),
                            level,
                        }),
                    );
                }
            }
        }
        let center =
            StutteringFlag::new(candidate).expect("intersections of nested sequences are nested");
        (Some(center), None)
    }

    /// Compares the code distance against the largest distance its type
    /// vector allows.
    pub fn optimum_distance_check(&self) -> OptimumDistanceCheck {
        let bound = self.type_vector().max_flag_distance();
        OptimumDistanceCheck {
            bound,
            attained: self.min_distance() == bound,
        }
    }
}

fn projected_unequal_witness(
    code: &crate::cdc::ConstantDimensionCode,
) -> Option<UnequalDistanceWitness> {
    let words = code.words();
    let mut first: Option<((usize, usize), usize)> = None;
    for (a, u) in words.iter().enumerate() {
        for (off, v) in words[a + 1..].iter().enumerate() {
            let b = a + 1 + off;
            let d = u.distance(v).expect("compatible words");
            match first {
                None => first = Some(((a, b), d)),
                Some((pair, d0)) if d != d0 => {
                    return Some(UnequalDistanceWitness {
                        pair_a: pair,
                        distance_a: d0,
                        pair_b: (a, b),
                        distance_b: d,
                    });
                }
                _ => {}
            }
        }
    }
    None
}
