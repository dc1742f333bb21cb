//! Human and machine renderings of analysis results. Machine output is
//! stable `key=value` lines; human output prints 1-based flag and level
//! indices throughout.

use std::fmt::Write as _;

use flagcodes::coherence::{
    CoherenceReport, DistanceCoherenceViolation, EquidistanceProfile, SunflowerProfile,
};
use flagcodes::decode::ShotOutcome;
use flagcodes::{DecodeOutcome, DecodeResult, FlagCode, StutteringFlag, Subspace};

fn join_usize(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn subspace_oneline(s: &Subspace) -> String {
    s.to_string()
}

pub fn analyze_human(code: &FlagCode) -> String {
    let mut out = String::new();
    let report = code.coherence_report();
    let equi = code.equidistance_profile();
    let sun = code.sunflower_profile();
    let optimum = code.optimum_distance_check();

    let _ = writeln!(
        out,
        "code: {} flags of type {} on F_{}^{}",
        report.cardinality,
        code.type_vector(),
        code.field().q(),
        code.ambient()
    );
    let _ = writeln!(out, "flag distance: {}", report.min_distance);
    let _ = writeln!(out, "projected codes:");
    for (i, (count, distance)) in report
        .level_cardinalities
        .iter()
        .zip(&report.level_min_distances)
        .enumerate()
    {
        let _ = writeln!(
            out,
            "  level {}: {} subspaces, distance {}",
            i + 1,
            count,
            distance
        );
    }

    match &report.disjointness_witness {
        None => {
            let _ = writeln!(out, "disjoint: yes");
        }
        Some(w) => {
            let _ = writeln!(
                out,
                "disjoint: no (level {} has {} of {} subspaces; flags {} and {} share it)",
                w.level + 1,
                report.level_cardinalities[w.level],
                report.cardinality,
                w.flag_a + 1,
                w.flag_b + 1
            );
        }
    }
    match &report.distance_coherence_witness {
        None => {
            let _ = writeln!(out, "distance-coherent: yes");
        }
        Some(w) => match &w.violation {
            DistanceCoherenceViolation::MinimalPairNonMinimalLevel { level } => {
                let _ = writeln!(
                    out,
                    "distance-coherent: no (flags {} and {} attain the code distance but \
                     their level-{} distance is not the projected minimum)",
                    w.flag_a + 1,
                    w.flag_b + 1,
                    level + 1
                );
            }
            DistanceCoherenceViolation::MinimalLevelsNonMinimalPair { pair_distance } => {
                let _ = writeln!(
                    out,
                    "distance-coherent: no (flags {} and {} are level-wise minimal yet lie \
                     at distance {})",
                    w.flag_a + 1,
                    w.flag_b + 1,
                    pair_distance
                );
            }
        },
    }
    let _ = writeln!(
        out,
        "coherent: {}",
        if report.is_coherent { "yes" } else { "no" }
    );
    match &report.m_vector {
        Some(m) => {
            let _ = writeln!(out, "m vector: ({})", join_usize(m));
        }
        None => {
            let _ = writeln!(out, "m vector: undefined");
        }
    }

    render_equidistance_human(&mut out, &equi);
    render_sunflower_human(&mut out, &sun);

    let _ = writeln!(
        out,
        "optimum distance: {} ({}/{})",
        if optimum.attained { "yes" } else { "no" },
        report.min_distance,
        optimum.bound
    );

    match code.min_distance_intersection_code() {
        Ok(members) => {
            let _ = writeln!(
                out,
                "minimum distance intersection code: {} member{}",
                members.len(),
                if members.len() == 1 { "" } else { "s" }
            );
            for (i, member) in members.iter().enumerate() {
                let levels: Vec<String> = member.levels().iter().map(subspace_oneline).collect();
                let _ = writeln!(
                    out,
                    "  member {}: type ({}) = {}",
                    i + 1,
                    join_usize(&member.dims()),
                    levels.join(", ")
                );
            }
        }
        Err(_) => {
            let _ = writeln!(
                out,
                "minimum distance intersection code: undefined (single flag)"
            );
        }
    }
    out
}

fn render_equidistance_human(out: &mut String, equi: &EquidistanceProfile) {
    match &equi.flag_witness {
        None => {
            let _ = writeln!(out, "equidistant: yes");
        }
        Some(w) => {
            let _ = writeln!(
                out,
                "equidistant: no (flags {},{} at distance {} vs flags {},{} at {})",
                w.pair_a.0 + 1,
                w.pair_a.1 + 1,
                w.distance_a,
                w.pair_b.0 + 1,
                w.pair_b.1 + 1,
                w.distance_b
            );
        }
    }
    match &equi.projected_witness {
        None => {
            let _ = writeln!(out, "projected-equidistant: yes");
        }
        Some((level, w)) => {
            let _ = writeln!(
                out,
                "projected-equidistant: no (level {} witness: {} vs {})",
                level + 1,
                w.distance_a,
                w.distance_b
            );
        }
    }
    if let Some(c) = &equi.c_vector {
        let _ = writeln!(out, "c vector: ({})", join_usize(c));
    }
}

fn render_sunflower_human(out: &mut String, sun: &SunflowerProfile) {
    match &sun.flag_center {
        Some(center) => {
            let levels: Vec<String> = center.levels().iter().map(subspace_oneline).collect();
            let _ = writeln!(out, "sunflower: yes, center ({})", levels.join(", "));
        }
        None => match &sun.flag_witness {
            Some(w) => {
                let _ = writeln!(
                    out,
                    "sunflower: no (flags {},{} and flags {},{} intersect differently at \
                     level {})",
                    w.reference_pair.0 + 1,
                    w.reference_pair.1 + 1,
                    w.offending_pair.0 + 1,
                    w.offending_pair.1 + 1,
                    w.level + 1
                );
            }
            None => {
                let _ = writeln!(out, "sunflower: no");
            }
        },
    }
    match &sun.projected_centers {
        Some(centers) => {
            let rendered: Vec<String> = centers.iter().map(subspace_oneline).collect();
            let _ = writeln!(
                out,
                "projected-sunflower: yes, centers ({})",
                rendered.join(", ")
            );
        }
        None => {
            let level = sun.projected_witness.map(|l| l + 1).unwrap_or(0);
            let _ = writeln!(
                out,
                "projected-sunflower: no (level {level} is not a sunflower)"
            );
        }
    }
}

pub fn analyze_machine(code: &FlagCode) -> String {
    let mut out = String::new();
    let report = code.coherence_report();
    let equi = code.equidistance_profile();
    let sun = code.sunflower_profile();
    let optimum = code.optimum_distance_check();

    let _ = writeln!(out, "q={}", code.field().q());
    let _ = writeln!(out, "n={}", code.ambient());
    let _ = writeln!(out, "type={}", join_usize(code.type_vector().dims()));
    let _ = writeln!(out, "flags={}", report.cardinality);
    let _ = writeln!(out, "distance={}", report.min_distance);
    for (i, (count, distance)) in report
        .level_cardinalities
        .iter()
        .zip(&report.level_min_distances)
        .enumerate()
    {
        let _ = writeln!(out, "level.{}.cardinality={}", i + 1, count);
        let _ = writeln!(out, "level.{}.distance={}", i + 1, distance);
    }
    let _ = writeln!(out, "disjoint={}", report.is_disjoint);
    if let Some(w) = &report.disjointness_witness {
        let _ = writeln!(out, "disjoint.witness.level={}", w.level + 1);
        let _ = writeln!(
            out,
            "disjoint.witness.flags={},{}",
            w.flag_a + 1,
            w.flag_b + 1
        );
    }
    let _ = writeln!(out, "distance_coherent={}", report.is_distance_coherent);
    if let Some(w) = &report.distance_coherence_witness {
        let _ = writeln!(
            out,
            "distance_coherent.witness.flags={},{}",
            w.flag_a + 1,
            w.flag_b + 1
        );
        match &w.violation {
            DistanceCoherenceViolation::MinimalPairNonMinimalLevel { level } => {
                let _ = writeln!(out, "distance_coherent.witness.kind=minimal-pair-level");
                let _ = writeln!(out, "distance_coherent.witness.level={}", level + 1);
            }
            DistanceCoherenceViolation::MinimalLevelsNonMinimalPair { pair_distance } => {
                let _ = writeln!(out, "distance_coherent.witness.kind=minimal-levels-far");
                let _ = writeln!(
                    out,
                    "distance_coherent.witness.pair_distance={pair_distance}"
                );
            }
        }
    }
    let _ = writeln!(out, "coherent={}", report.is_coherent);
    if let Some(m) = &report.m_vector {
        let _ = writeln!(out, "m={}", join_usize(m));
    }
    let _ = writeln!(out, "equidistant={}", equi.flag_equidistant);
    if let Some(w) = &equi.flag_witness {
        let _ = write_unequal_witness(&mut out, "equidistant.witness", w);
    }
    let _ = writeln!(out, "projected_equidistant={}", equi.projected_equidistant);
    if let Some((level, w)) = &equi.projected_witness {
        let _ = writeln!(out, "projected_equidistant.witness.level={}", level + 1);
        let _ = write_unequal_witness(&mut out, "projected_equidistant.witness", w);
    }
    if let Some(c) = &equi.c_vector {
        let _ = writeln!(out, "c={}", join_usize(c));
    }
    let _ = writeln!(out, "sunflower={}", sun.flag_center.is_some());
    if let Some(w) = &sun.flag_witness {
        let _ = writeln!(out, "sunflower.witness.level={}", w.level + 1);
        let _ = writeln!(
            out,
            "sunflower.witness.reference_pair={},{}",
            w.reference_pair.0 + 1,
            w.reference_pair.1 + 1
        );
        let _ = writeln!(
            out,
            "sunflower.witness.offending_pair={},{}",
            w.offending_pair.0 + 1,
            w.offending_pair.1 + 1
        );
    }
    let _ = writeln!(
        out,
        "projected_sunflower={}",
        sun.projected_centers.is_some()
    );
    if let Some(level) = sun.projected_witness {
        let _ = writeln!(out, "projected_sunflower.witness.level={}", level + 1);
    }
    let _ = writeln!(out, "optimum_bound={}", optimum.bound);
    let _ = writeln!(out, "optimum_attained={}", optimum.attained);
    if let Ok(members) = code.min_distance_intersection_code() {
        let _ = writeln!(out, "mdic.count={}", members.len());
        for (i, member) in members.iter().enumerate() {
            let _ = writeln!(out, "mdic.{}.type={}", i + 1, join_usize(&member.dims()));
        }
    }
    out
}

pub fn distance_human(code: &FlagCode, report: &CoherenceReport) -> String {
    let mut out = String::new();
    let optimum = code.optimum_distance_check();
    let _ = writeln!(
        out,
        "code: {} flags of type {} on F_{}^{}",
        report.cardinality,
        code.type_vector(),
        code.field().q(),
        code.ambient()
    );
    let _ = writeln!(out, "flag distance: {}", report.min_distance);
    let projected: Vec<String> = report
        .level_min_distances
        .iter()
        .map(|d| d.to_string())
        .collect();
    let _ = writeln!(out, "projected distances: {}", projected.join(" "));
    let _ = writeln!(
        out,
        "optimum bound: {} ({})",
        optimum.bound,
        if optimum.attained {
            "attained"
        } else {
            "not attained"
        }
    );
    out
}

pub fn distance_machine(code: &FlagCode, report: &CoherenceReport) -> String {
    let mut out = String::new();
    let optimum = code.optimum_distance_check();
    let _ = writeln!(out, "distance={}", report.min_distance);
    for (i, d) in report.level_min_distances.iter().enumerate() {
        let _ = writeln!(out, "level.{}.distance={}", i + 1, d);
    }
    let _ = writeln!(out, "optimum_bound={}", optimum.bound);
    let _ = writeln!(out, "optimum_attained={}", optimum.attained);
    out
}

pub fn decode_human(
    outcome: &DecodeOutcome,
    thresholds: &[usize],
    received: &StutteringFlag,
) -> String {
    let mut out = String::new();
    let dims = received.dims();
    let _ = writeln!(out, "received dimensions: ({})", join_usize(&dims));
    let _ = writeln!(out, "thresholds m: ({})", join_usize(thresholds));
    for check in &outcome.checks {
        let what = match &check.outcome {
            ShotOutcome::BelowThreshold => "below threshold, skipped".to_string(),
            ShotOutcome::Decoded { word } => format!("unique containment hit (word {})", word + 1),
            ShotOutcome::Ambiguous => "ambiguous containment, skipped".to_string(),
            ShotOutcome::NotFound => "no containing word, skipped".to_string(),
        };
        let _ = writeln!(
            out,
            "shot {}: dim {} vs m = {}: {}",
            check.level + 1,
            check.received_dim,
            check.threshold,
            what
        );
    }
    match &outcome.result {
        DecodeResult::Decoded {
            flag,
            flag_index,
            shot_used,
        } => {
            let _ = writeln!(
                out,
                "decoded: flag {} in {} shot(s)",
                flag_index + 1,
                shot_used + 1
            );
            let _ = writeln!(out, "generator matrix:");
            let gen = flagcodes::nested_generator_matrix(flag);
            let _ = write!(out, "{gen}");
        }
        DecodeResult::Failed => {
            let _ = writeln!(
                out,
                "decode failed: no shot produced a unique containment hit"
            );
        }
    }
    out
}

pub fn decode_machine(outcome: &DecodeOutcome) -> String {
    let mut out = String::new();
    match &outcome.result {
        DecodeResult::Decoded {
            flag_index,
            shot_used,
            ..
        } => {
            let _ = writeln!(out, "decoded=true");
            let _ = writeln!(out, "flag={}", flag_index + 1);
            let _ = writeln!(out, "shot={}", shot_used + 1);
        }
        DecodeResult::Failed => {
            let _ = writeln!(out, "decoded=false");
        }
    }
    for check in &outcome.checks {
        let status = match &check.outcome {
            ShotOutcome::BelowThreshold => "below-threshold",
            ShotOutcome::Decoded { .. } => "decoded",
            ShotOutcome::Ambiguous => "ambiguous",
            ShotOutcome::NotFound => "not-found",
        };
        let _ = writeln!(
            out,
            "shot.{}.dim={} shot.{}.m={} shot.{}.status={}",
            check.level + 1,
            check.received_dim,
            check.level + 1,
            check.threshold,
            check.level + 1,
            status
        );
    }
    out
}

fn write_unequal_witness(
    out: &mut String,
    prefix: &str,
    w: &flagcodes::coherence::UnequalDistanceWitness,
) -> std::fmt::Result {
    writeln!(out, "{prefix}.pair_a={},{}", w.pair_a.0 + 1, w.pair_a.1 + 1)?;
    writeln!(out, "{prefix}.distance_a={}", w.distance_a)?;
    writeln!(out, "{prefix}.pair_b={},{}", w.pair_b.0 + 1, w.pair_b.1 + 1)?;
    writeln!(out, "{prefix}.distance_b={}", w.distance_b)
}
