//! Monte-Carlo transmission experiments over the erasure channel.
//!
//! Each trial picks a uniformly random codeword, transmits it, decodes the
//! received stuttering flag sequentially, and checks the outcome against the
//! exhaustive minimum-distance oracle. Trial i draws all its randomness from
//! a dedicated ChaCha stream derived from (seed, i), and results are
//! aggregated in trial order, so a report is a pure function of the code,
//! the configuration, and the seed — independent of how many workers run
//! the trials.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::channel::{correctable_with, transmit, LossModel};
use crate::decode::{exhaustive_decode, CoherentDecoder, DecodeResult};
use crate::error::Result;
use crate::flag::FlagCode;

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub trials: usize,
    pub loss: LossModel,
    pub seed: u64,
    /// Number of worker threads; the report does not depend on it.
    pub workers: usize,
}

/// Aggregated counters of a simulation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationReport {
    pub trials: usize,
    pub seed: u64,
    pub loss_label: String,
    /// d_f of the code driving the run.
    pub code_distance: usize,
    /// Trials whose total erasure count was correctable.
    pub correctable_trials: usize,
    /// Trials where the decoder returned the sent flag.
    pub successes: usize,
    /// Successes restricted to correctable trials.
    pub successes_on_correctable: usize,
    /// Correctable trials where the decoder output matched the oracle and
    /// the oracle was unambiguous.
    pub oracle_agreements_on_correctable: usize,
    /// Trials where the decoder reported failure.
    pub decode_failures: usize,
    /// Trials where the decoder returned a flag other than the sent one.
    pub wrong_decodes: usize,
    /// `shots_histogram[i]` counts decodes concluded at shot i+1.
    pub shots_histogram: Vec<usize>,
    /// `erasure_histogram[e]` counts trials with total erasure count e.
    pub erasure_histogram: Vec<usize>,
}

struct TrialRecord {
    erasures: usize,
    correctable: bool,
    success: bool,
    oracle_agreement: bool,
    shot_used: Option<usize>,
    failed: bool,
}

/// Runs `cfg.trials` independent transmissions of the given coherent code.
/// Refuses non-coherent codes, mirroring the decoder's precondition.
pub fn run_simulation(code: &FlagCode, cfg: &ExperimentConfig) -> Result<SimulationReport> {
    assert!(cfg.trials >= 1);
    let decoder = CoherentDecoder::new(code.clone())?;
    if let LossModel::PerVector(p) = cfg.loss {
        if !(0.0..=1.0).contains(&p) {
            return Err(crate::error::Error::InvalidProbability(p));
        }
    }

    let workers = cfg.workers.max(1).min(cfg.trials);
    let chunk = cfg.trials.div_ceil(workers);
    let mut records: Vec<Vec<TrialRecord>> = Vec::with_capacity(workers);
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers {
            let start = w * chunk;
            let end = ((w + 1) * chunk).min(cfg.trials);
            let decoder = &decoder;
            let cfg = &cfg;
            handles.push(scope.spawn(move || {
                (start..end)
                    .map(|trial| run_trial(decoder, cfg, trial as u64))
                    .collect::<Result<Vec<TrialRecord>>>()
            }));
        }
        for handle in handles {
            records.push(handle.join().expect("worker does not panic")?);
        }
        Ok::<(), crate::error::Error>(())
    })?;

    let levels = code.type_vector().levels();
    let mut report = SimulationReport {
        trials: cfg.trials,
        seed: cfg.seed,
        loss_label: loss_label(&cfg.loss),
        code_distance: decoder.min_distance(),
        correctable_trials: 0,
        successes: 0,
        successes_on_correctable: 0,
        oracle_agreements_on_correctable: 0,
        decode_failures: 0,
        wrong_decodes: 0,
        shots_histogram: vec![0; levels],
        erasure_histogram: Vec::new(),
    };
    for record in records.into_iter().flatten() {
        if record.erasures >= report.erasure_histogram.len() {
            report.erasure_histogram.resize(record.erasures + 1, 0);
        }
        report.erasure_histogram[record.erasures] += 1;
        if record.correctable {
            report.correctable_trials += 1;
            if record.success {
                report.successes_on_correctable += 1;
            }
            if record.oracle_agreement {
                report.oracle_agreements_on_correctable += 1;
            }
        }
        if record.success {
            report.successes += 1;
        }
        if record.failed {
            report.decode_failures += 1;
        } else if !record.success {
            report.wrong_decodes += 1;
        }
        if let Some(shot) = record.shot_used {
            report.shots_histogram[shot] += 1;
        }
    }
    Ok(report)
}

fn run_trial(decoder: &CoherentDecoder, cfg: &ExperimentConfig, trial: u64) -> Result<TrialRecord> {
    // one independent ChaCha stream per trial: reproducible regardless of
    // scheduling
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial.wrapping_add(1));

    let code = decoder.code();
    let sent_index = rng.random_range(0..code.len());
    let sent = &code.flags()[sent_index];
    let (received, trace) = transmit(sent, &cfg.loss, &mut rng)?;
    let correctable = correctable_with(decoder.min_distance(), trace.total_erasures);
    let outcome = decoder.decode(&received)?;

    let oracle = exhaustive_decode(code, &received)?;
    let (success, failed, oracle_agreement) = match &outcome.result {
        DecodeResult::Decoded { flag_index, .. } => (
            *flag_index == sent_index,
            false,
            oracle == vec![*flag_index],
        ),
        DecodeResult::Failed => (false, true, false),
    };
    Ok(TrialRecord {
        erasures: trace.total_erasures,
        correctable,
        success,
        oracle_agreement,
        shot_used: outcome.shot_used(),
        failed,
    })
}

fn loss_label(loss: &LossModel) -> String {
    match loss {
        LossModel::PerVector(p) => format!("per-vector p={p}"),
        LossModel::Pattern(pattern) => {
            let parts: Vec<String> = pattern.iter().map(|e| e.to_string()).collect();
            format!("pattern {}", parts.join(","))
        }
    }
}

impl SimulationReport {
    /// Renders the report; the output is byte-identical for identical
    /// counters. `machine` selects `key=value` lines.
    pub fn render(&self, machine: bool) -> String {
        let mut out = String::new();
        if machine {
            let _ = writeln!(out, "trials={}", self.trials);
            let _ = writeln!(out, "seed={}", self.seed);
            let _ = writeln!(out, "loss={}", self.loss_label);
            let _ = writeln!(out, "code_distance={}", self.code_distance);
            let _ = writeln!(out, "correctable={}", self.correctable_trials);
            let _ = writeln!(out, "success={}", self.successes);
            let _ = writeln!(
                out,
                "success_on_correctable={}",
                self.successes_on_correctable
            );
            let _ = writeln!(
                out,
                "oracle_agreement_on_correctable={}",
                self.oracle_agreements_on_correctable
            );
            let _ = writeln!(out, "decode_failures={}", self.decode_failures);
            let _ = writeln!(out, "wrong_decodes={}", self.wrong_decodes);
            for (i, count) in self.shots_histogram.iter().enumerate() {
                let _ = writeln!(out, "shots.{}={}", i + 1, count);
            }
            for (e, count) in self.erasure_histogram.iter().enumerate() {
                let _ = writeln!(out, "erasures.{e}={count}");
            }
        } else {
            let _ = writeln!(out, "trials: {} (seed {})", self.trials, self.seed);
            let _ = writeln!(out, "loss model: {}", self.loss_label);
            let _ = writeln!(out, "code distance: {}", self.code_distance);
            let _ = writeln!(
                out,
                "correctable erasure totals: {}/{}",
                self.correctable_trials, self.trials
            );
            let _ = writeln!(
                out,
                "decoded to the sent flag: {}/{}",
                self.successes, self.trials
            );
            let _ = writeln!(
                out,
                "  on correctable trials: {}/{}",
                self.successes_on_correctable, self.correctable_trials
            );
            let _ = writeln!(
                out,
                "oracle agreement on correctable trials: {}/{}",
                self.oracle_agreements_on_correctable, self.correctable_trials
            );
            let _ = writeln!(
                out,
                "decode failures: {}, wrong decodes: {}",
                self.decode_failures, self.wrong_decodes
            );
            let shots: Vec<String> = self
                .shots_histogram
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{}:{}", i + 1, c))
                .collect();
            let _ = writeln!(out, "shots used histogram: {}", shots.join(" "));
            let erasures: Vec<String> = self
                .erasure_histogram
                .iter()
                .enumerate()
                .map(|(e, c)| format!("{e}:{c}"))
                .collect();
            let _ = writeln!(out, "total erasures histogram: {}", erasures.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::flag::{Flag, TypeVector};
    use crate::subspace::Subspace;

    fn coherent_pair() -> FlagCode {
        let f2 = FieldContext::new(2).unwrap();
        let t = TypeVector::new(4, vec![1, 2]).unwrap();
        let sub = |rows: &[Vec<u32>]| Subspace::from_vectors(f2.clone(), 4, rows).unwrap();
        FlagCode::new(vec![
            Flag::new(
                t.clone(),
                vec![
                    sub(&[vec![1, 0, 0, 0]]),
                    sub(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]),
                ],
            )
            .unwrap(),
            Flag::new(
                t,
                vec![
                    sub(&[vec![0, 0, 1, 0]]),
                    sub(&[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]),
                ],
            )
            .unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn lossless_runs_succeed_in_one_shot() {
        let code = coherent_pair();
        let cfg = ExperimentConfig {
            trials: 200,
            loss: LossModel::PerVector(0.0),
            seed: 42,
            workers: 1,
        };
        let report = run_simulation(&code, &cfg).unwrap();
        assert_eq!(report.successes, 200);
        assert_eq!(report.shots_histogram, vec![200, 0]);
        assert_eq!(report.correctable_trials, 200);
        assert_eq!(report.erasure_histogram, vec![200]);
    }

    #[test]
    fn reports_are_deterministic_across_runs_and_workers() {
        let code = coherent_pair();
        let base = ExperimentConfig {
            trials: 500,
            loss: LossModel::PerVector(0.3),
            seed: 7,
            workers: 1,
        };
        let a = run_simulation(&code, &base).unwrap();
        let b = run_simulation(&code, &base).unwrap();
        assert_eq!(a, b);
        let mut many = base.clone();
        many.workers = 4;
        let c = run_simulation(&code, &many).unwrap();
        assert_eq!(a, c);
        assert_eq!(a.render(true), c.render(true));
        assert_eq!(a.render(false), c.render(false));
    }

    #[test]
    fn correctable_trials_always_succeed() {
        let code = coherent_pair();
        let cfg = ExperimentConfig {
            trials: 2000,
            loss: LossModel::PerVector(0.35),
            seed: 99,
            workers: 2,
        };
        let report = run_simulation(&code, &cfg).unwrap();
        assert_eq!(report.successes_on_correctable, report.correctable_trials);
        assert_eq!(
            report.oracle_agreements_on_correctable,
            report.correctable_trials
        );
        assert!(report.correctable_trials > 0);
    }

    #[test]
    fn non_coherent_codes_refused() {
        let f2 = FieldContext::new(2).unwrap();
        let t = TypeVector::new(3, vec![1, 2]).unwrap();
        let sub = |rows: &[Vec<u32>]| Subspace::from_vectors(f2.clone(), 3, rows).unwrap();
        // two flags sharing the first subspace: not disjoint
        let code = FlagCode::new(vec![
            Flag::new(
                t.clone(),
                vec![sub(&[vec![1, 0, 0]]), sub(&[vec![1, 0, 0], vec![0, 1, 0]])],
            )
            .unwrap(),
            Flag::new(
                t,
                vec![sub(&[vec![1, 0, 0]]), sub(&[vec![1, 0, 0], vec![0, 0, 1]])],
            )
            .unwrap(),
        ])
        .unwrap();
        let cfg = ExperimentConfig {
            trials: 1,
            loss: LossModel::PerVector(0.0),
            seed: 1,
            workers: 1,
        };
        assert!(matches!(
            run_simulation(&code, &cfg),
            Err(crate::error::Error::NotCoherent(_))
        ));
    }

    #[test]
    fn pattern_mode_reproduces_fixed_totals() {
        let code = coherent_pair();
        let cfg = ExperimentConfig {
            trials: 100,
            loss: LossModel::Pattern(vec![1, 1]),
            seed: 5,
            workers: 1,
        };
        let report = run_simulation(&code, &cfg).unwrap();
        assert_eq!(report.erasure_histogram, vec![0, 0, 100]);
        // e = 2 is correctable for d_f = 6, so every trial decodes
        assert_eq!(report.successes, 100);
    }
}
