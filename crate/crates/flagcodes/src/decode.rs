//! Sequential decoding of coherent flag codes on the erasure channel, plus
//! an exhaustive minimum-distance oracle used as ground truth.
//!
//! The decoder scans the received subspaces shot by shot. At the first shot
//! whose dimension exceeds m_i = t_i - d_S(C_i)/2 it decodes the received
//! subspace to the unique codeword of the i-th projected code containing it
//! and recovers the whole flag from that one subspace. When the total number
//! of erasures is correctable this is guaranteed to succeed and to return
//! the sent flag; later shots are never inspected.
//!
//! Outside that guarantee the receiver cannot observe the erasure count, so
//! the decoder degrades gracefully: if a passing shot decodes ambiguously or
//! to nothing it keeps scanning, and it reports failure with per-shot
//! diagnostics rather than ever returning a flag without the dimension
//! certificate.

use crate::cdc::{ConstantDimensionCode, ContainmentDecode};
use crate::error::{Error, Result};
use crate::flag::{Flag, FlagCode, StutteringFlag};

/// A flag code validated as coherent, with the projected codes and the
/// dimension thresholds m_i precomputed for repeated decoding.
#[derive(Debug, Clone)]
pub struct CoherentDecoder {
    code: FlagCode,
    projected: Vec<ConstantDimensionCode>,
    thresholds: Vec<usize>,
    min_distance: usize,
}

/// What happened at one inspected shot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShotCheck {
    pub level: usize,
    pub received_dim: usize,
    /// m_i; the shot is usable when `received_dim` exceeds it.
    pub threshold: usize,
    pub outcome: ShotOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShotOutcome {
    /// dim X_i <= m_i, the shot cannot identify a codeword.
    BelowThreshold,
    /// The shot identified the codeword with this index in the projected
    /// code.
    Decoded { word: usize },
    /// Two or more words of the projected code contain X_i.
    Ambiguous,
    /// No word of the projected code contains X_i.
    NotFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeResult {
    Decoded {
        flag: Flag,
        flag_index: usize,
        /// The shot that identified the flag (0-based level index).
        shot_used: usize,
    },
    /// No shot produced a unique containment hit.
    Failed,
}

/// Decoding verdict plus per-shot diagnostics. Shots after a successful one
/// are absent from `checks`: they were never inspected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub result: DecodeResult,
    pub checks: Vec<ShotCheck>,
}

impl DecodeOutcome {
    pub fn decoded_flag(&self) -> Option<&Flag> {
        match &self.result {
            DecodeResult::Decoded { flag, .. } => Some(flag),
            DecodeResult::Failed => None,
        }
    }

    pub fn shot_used(&self) -> Option<usize> {
        match &self.result {
            DecodeResult::Decoded { shot_used, .. } => Some(*shot_used),
            DecodeResult::Failed => None,
        }
    }
}

impl CoherentDecoder {
    /// Validates coherence (with at least two flags) and precomputes the
    /// projected codes and thresholds. The thresholds m_i are undefined
    /// without distance-coherence, so non-coherent codes are refused.
    pub fn new(code: FlagCode) -> Result<CoherentDecoder> {
        let report = code.coherence_report();
        if code.len() < 2 {
            return Err(Error::NotCoherent(
                "decoding needs a code with at least two flags".into(),
            ));
        }
        if !report.is_coherent {
            let reason = if !report.is_disjoint {
                "the code is not disjoint"
            } else {
                "the code is not distance-coherent"
            };
            return Err(Error::NotCoherent(reason.into()));
        }
        let thresholds = report.m_vector.expect("coherent with at least two flags");
        let projected = code.projected_all();
        let min_distance = report.min_distance;
        Ok(CoherentDecoder {
            code,
            projected,
            thresholds,
            min_distance,
        })
    }

    pub fn code(&self) -> &FlagCode {
        &self.code
    }

    /// The per-level thresholds m_i.
    pub fn thresholds(&self) -> &[usize] {
        &self.thresholds
    }

    pub fn min_distance(&self) -> usize {
        self.min_distance
    }

    /// Decodes a received stuttering flag. The input may be a prefix of the
    /// full type: decoding is sequential and can conclude before all shots
    /// arrive.
    pub fn decode(&self, received: &StutteringFlag) -> Result<DecodeOutcome> {
        let dims = self.code.type_vector().dims();
        if received.levels().len() > dims.len()
            || received.ambient() != self.code.ambient()
            || received.field() != self.code.field()
        {
            return Err(Error::TypeMismatch);
        }
        for (x, &t) in received.levels().iter().zip(dims) {
            if x.dim() > t {
                // more dimensions than were ever sent: an insertion, which
                // the erasure channel excludes
                return Err(Error::TypeMismatch);
            }
        }

        let mut checks = Vec::new();
        for (level, x) in received.levels().iter().enumerate() {
            let threshold = self.thresholds[level];
            let received_dim = x.dim();
            if received_dim <= threshold {
                checks.push(ShotCheck {
                    level,
                    received_dim,
                    threshold,
                    outcome: ShotOutcome::BelowThreshold,
                });
                continue;
            }
            match self.projected[level].decode_by_containment(x)? {
                ContainmentDecode::Unique(word) => {
                    let subspace = &self.projected[level].words()[word];
                    let flag_index = self
                        .code
                        .flags()
                        .iter()
                        .position(|f| f.level(level) == subspace)
                        .expect("projected words come from code flags");
                    checks.push(ShotCheck {
                        level,
                        received_dim,
                        threshold,
                        outcome: ShotOutcome::Decoded { word },
                    });
                    return Ok(DecodeOutcome {
                        result: DecodeResult::Decoded {
                            flag: self.code.flags()[flag_index].clone(),
                            flag_index,
                            shot_used: level,
                        },
                        checks,
                    });
                }
                ContainmentDecode::Ambiguous => {
                    checks.push(ShotCheck {
                        level,
                        received_dim,
                        threshold,
                        outcome: ShotOutcome::Ambiguous,
                    });
                }
                ContainmentDecode::NotFound => {
                    checks.push(ShotCheck {
                        level,
                        received_dim,
                        threshold,
                        outcome: ShotOutcome::NotFound,
                    });
                }
            }
        }
        Ok(DecodeOutcome {
            result: DecodeResult::Failed,
            checks,
        })
    }
}

/// Minimum-distance oracle: the indices of all flags at minimal extended
/// subspace distance from the received sequence. Independent of the
/// sequential decoder; used as ground truth in tests and reports.
pub fn exhaustive_decode(code: &FlagCode, received: &StutteringFlag) -> Result<Vec<usize>> {
    if received.levels().len() != code.type_vector().levels()
        || received.ambient() != code.ambient()
        || received.field() != code.field()
    {
        return Err(Error::TypeMismatch);
    }
    let mut best = usize::MAX;
    let mut hits: Vec<usize> = Vec::new();
    for (i, flag) in code.flags().iter().enumerate() {
        let d = received.distance_to_flag(flag)?;
        if d < best {
            best = d;
            hits.clear();
            hits.push(i);
        } else if d == best {
            hits.push(i);
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::flag::TypeVector;
    use crate::subspace::Subspace;

    fn f2() -> FieldContext {
        FieldContext::new(2).unwrap()
    }

    fn unit(n: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    fn sub(rows: &[Vec<u32>], n: usize) -> Subspace {
        Subspace::from_vectors(f2(), n, rows).unwrap()
    }

    fn coherent_pair() -> FlagCode {
        let t = TypeVector::new(4, vec![1, 2]).unwrap();
        FlagCode::new(vec![
            Flag::new(
                t.clone(),
                vec![sub(&[unit(4, 0)], 4), sub(&[unit(4, 0), unit(4, 1)], 4)],
            )
            .unwrap(),
            Flag::new(
                t,
                vec![sub(&[unit(4, 2)], 4), sub(&[unit(4, 2), unit(4, 3)], 4)],
            )
            .unwrap(),
        ])
        .unwrap()
    }

    fn shared_line_code() -> FlagCode {
        let t = TypeVector::new(5, vec![1, 2, 3]).unwrap();
        FlagCode::new(vec![
            Flag::new(
                t.clone(),
                vec![
                    sub(&[unit(5, 0)], 5),
                    sub(&[unit(5, 0), unit(5, 2)], 5),
                    sub(&[unit(5, 0), unit(5, 2), unit(5, 3)], 5),
                ],
            )
            .unwrap(),
            Flag::new(
                t,
                vec![
                    sub(&[unit(5, 0)], 5),
                    sub(&[unit(5, 0), unit(5, 4)], 5),
                    sub(&[unit(5, 0), unit(5, 1), unit(5, 4)], 5),
                ],
            )
            .unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn worked_erasure_example() {
        // send F1, lose the first generator: X = ({0}, <e2>), e = 2
        let code = coherent_pair();
        let decoder = CoherentDecoder::new(code.clone()).unwrap();
        assert_eq!(decoder.thresholds(), &[0, 0]);
        let x = StutteringFlag::new(vec![Subspace::zero(f2(), 4), sub(&[unit(4, 1)], 4)]).unwrap();
        assert!(code.correctable(2));
        let outcome = decoder.decode(&x).unwrap();
        assert_eq!(outcome.shot_used(), Some(1));
        assert_eq!(outcome.decoded_flag().unwrap(), &code.flags()[0]);
        // shot 1 failed the dimension test (0 is not greater than 0)
        assert_eq!(outcome.checks[0].outcome, ShotOutcome::BelowThreshold);

        // the oracle agrees and is unambiguous
        assert_eq!(exhaustive_decode(&code, &x).unwrap(), vec![0]);
    }

    #[test]
    fn lossless_input_decodes_at_shot_one() {
        let code = coherent_pair();
        let decoder = CoherentDecoder::new(code.clone()).unwrap();
        let x = StutteringFlag::from(&code.flags()[1]);
        let outcome = decoder.decode(&x).unwrap();
        assert_eq!(outcome.shot_used(), Some(0));
        assert_eq!(outcome.decoded_flag().unwrap(), &code.flags()[1]);
        assert_eq!(outcome.checks.len(), 1);
    }

    #[test]
    fn uncorrectable_loss_fails_with_diagnostics() {
        let code = coherent_pair();
        let decoder = CoherentDecoder::new(code.clone()).unwrap();
        let x =
            StutteringFlag::new(vec![Subspace::zero(f2(), 4), Subspace::zero(f2(), 4)]).unwrap();
        assert!(!code.correctable(3));
        let outcome = decoder.decode(&x).unwrap();
        assert_eq!(outcome.result, DecodeResult::Failed);
        assert_eq!(outcome.checks.len(), 2);
        assert!(outcome
            .checks
            .iter()
            .all(|c| c.outcome == ShotOutcome::BelowThreshold));
    }

    #[test]
    fn non_coherent_codes_are_refused() {
        let err = CoherentDecoder::new(shared_line_code()).unwrap_err();
        assert!(matches!(err, Error::NotCoherent(_)));
        // a singleton is coherent but has no pair structure to decode with
        let singleton = FlagCode::new(vec![coherent_pair().flags()[0].clone()]).unwrap();
        let err = CoherentDecoder::new(singleton).unwrap_err();
        assert!(matches!(err, Error::NotCoherent(_)));
    }

    #[test]
    fn truncated_input_decodes_the_same() {
        let code = coherent_pair();
        let decoder = CoherentDecoder::new(code.clone()).unwrap();
        let x = StutteringFlag::from(&code.flags()[0]);
        let full = decoder.decode(&x).unwrap();
        let shot = full.shot_used().unwrap();
        let truncated = decoder.decode(&x.truncated(shot + 1)).unwrap();
        assert_eq!(truncated.decoded_flag(), full.decoded_flag());
        assert_eq!(truncated.shot_used(), full.shot_used());
    }

    #[test]
    fn oversized_level_is_rejected() {
        let code = coherent_pair();
        let decoder = CoherentDecoder::new(code).unwrap();
        let x = StutteringFlag::new(vec![sub(&[unit(4, 0), unit(4, 1)], 4)]).unwrap();
        assert_eq!(decoder.decode(&x).unwrap_err(), Error::TypeMismatch);
    }

    #[test]
    fn oracle_examples() {
        let code = coherent_pair();
        // a word of a positive-distance code is closest to itself
        for (i, flag) in code.flags().iter().enumerate() {
            let x = StutteringFlag::from(flag);
            assert_eq!(exhaustive_decode(&code, &x).unwrap(), vec![i]);
        }
        // an input equidistant from both flags yields both
        let x =
            StutteringFlag::new(vec![Subspace::zero(f2(), 4), Subspace::zero(f2(), 4)]).unwrap();
        assert_eq!(exhaustive_decode(&code, &x).unwrap(), vec![0, 1]);
    }
}
