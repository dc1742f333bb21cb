//! The erasure channel for flags.
//!
//! A flag is transmitted in r shots: at shot i the source injects the new
//! generators v_{t_{i-1}+1}, ..., v_{t_i} of a nested generator matrix, and
//! the receiver's i-th subspace is the span of every generator that survived
//! so far. Receiver-side random mixing is not simulated: the row space of
//! random combinations of the surviving generators equals their span, so no
//! dimension-based quantity is affected. Generators lost at one shot never
//! reappear, which makes the per-shot erasure counts non-decreasing; that is
//! a property of this simulator's loss process, not of stuttering flags in
//! general, and the decoder accepts arbitrary stuttering flags.

use rand::Rng;

use crate::error::{Error, Result};
use crate::flag::{Flag, FlagCode, StutteringFlag};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// How injected generators get lost in transit.
#[derive(Debug, Clone, PartialEq)]
pub enum LossModel {
    /// Each injected generator is lost independently with this probability.
    /// The distribution is this simulator's choice; nothing in the channel
    /// definition prescribes one.
    PerVector(f64),
    /// Realize exactly the requested cumulative erasure counts e_1 <= ... <=
    /// e_r, dropping generators uniformly among the feasible choices.
    Pattern(Vec<usize>),
}

/// Bookkeeping for one transmission.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelTrace {
    pub sent: Flag,
    /// The injected nested generator matrix (first t_i rows span F_i).
    pub generators: Matrix,
    /// Survival of each generator row.
    pub survived: Vec<bool>,
    /// e_i = t_i - dim X_i per shot.
    pub erasures_per_shot: Vec<usize>,
    /// e = sum of e_i = d_f(F, X).
    pub total_erasures: usize,
}

/// A t_r x n matrix whose first t_i rows span the i-th subspace of the flag,
/// built deterministically by completing each level's RREF basis against the
/// rows accumulated so far.
pub fn nested_generator_matrix(flag: &Flag) -> Matrix {
    let field = flag.field().clone();
    let n = flag.ambient();
    let levels: Vec<&Subspace> = flag.levels().iter().collect();
    let rows = generator_rows(&levels);
    Matrix::from_rows(field, &rows, n).expect("generator rows are valid field vectors")
}

/// Generator rows for any nested sequence of subspaces (strict or not):
/// the first dim(X_i) rows span X_i.
pub(crate) fn generator_rows(levels: &[&Subspace]) -> Vec<Vec<u32>> {
    let field = levels[0].field().clone();
    let mut out: Vec<Vec<u32>> = Vec::new();
    // RREF accumulator: rows plus their pivot columns, kept reduced.
    let mut acc: Vec<Vec<u32>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for level in levels {
        for row in level.basis().row_iter() {
            let mut rem = row.to_vec();
            for (r, &p) in acc.iter().zip(&pivots) {
                let c = rem[p];
                if c != 0 {
                    for (x, &y) in rem.iter_mut().zip(r.iter()) {
                        *x = field.sub_raw(*x, field.mul_raw(c, y));
                    }
                }
            }
            let Some(pivot) = rem.iter().position(|&e| e != 0) else {
                continue; // already spanned
            };
            // normalize so the appended generator is canonical
            let inv = field.inv_raw(rem[pivot]);
            if inv != 1 {
                for x in rem.iter_mut() {
                    *x = field.mul_raw(*x, inv);
                }
            }
            // keep the accumulator fully reduced
            for (r, &p) in acc.iter_mut().zip(&pivots) {
                let c = r[pivot];
                if c != 0 && p != pivot {
                    for (x, &y) in r.iter_mut().zip(rem.iter()) {
                        *x = field.sub_raw(*x, field.mul_raw(c, y));
                    }
                }
            }
            acc.push(rem.clone());
            pivots.push(pivot);
            out.push(rem);
        }
        debug_assert_eq!(out.len(), level.dim());
    }
    out
}

/// Sends a flag through the erasure channel and assembles the received
/// stuttering flag together with the erasure accounting.
pub fn transmit<R: Rng + ?Sized>(
    flag: &Flag,
    loss: &LossModel,
    rng: &mut R,
) -> Result<(StutteringFlag, ChannelTrace)> {
    let dims = flag.type_vector().dims();
    let total_generators = *dims.last().unwrap();
    let survived = match loss {
        LossModel::PerVector(p) => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidProbability(*p));
            }
            (0..total_generators)
                .map(|_| !rng.random_bool(*p))
                .collect::<Vec<bool>>()
        }
        LossModel::Pattern(pattern) => {
            validate_pattern(pattern, dims)?;
            let mut survived = vec![true; total_generators];
            let mut prev_t = 0usize;
            let mut prev_e = 0usize;
            for (&t, &e) in dims.iter().zip(pattern) {
                let new = t - prev_t;
                let drops = e - prev_e;
                for idx in rand::seq::index::sample(rng, new, drops) {
                    survived[prev_t + idx] = false;
                }
                prev_t = t;
                prev_e = e;
            }
            survived
        }
    };

    let generators = nested_generator_matrix(flag);
    let field = flag.field().clone();
    let n = flag.ambient();
    let mut levels: Vec<Subspace> = Vec::with_capacity(dims.len());
    let mut erasures_per_shot = Vec::with_capacity(dims.len());
    for &t in dims {
        let rows: Vec<Vec<u32>> = (0..t)
            .filter(|&g| survived[g])
            .map(|g| generators.row(g).to_vec())
            .collect();
        let x = Subspace::from_vectors(field.clone(), n, &rows)?;
        erasures_per_shot.push(t - x.dim());
        levels.push(x);
    }
    let total_erasures = erasures_per_shot.iter().sum();
    let received = StutteringFlag::new(levels).expect("survivor spans are nested");
    let trace = ChannelTrace {
        sent: flag.clone(),
        generators,
        survived,
        erasures_per_shot,
        total_erasures,
    };
    Ok((received, trace))
}

/// A cumulative pattern is realizable exactly when it is non-decreasing,
/// e_i <= t_i, and each shot drops at most the number of newly injected
/// generators.
fn validate_pattern(pattern: &[usize], dims: &[usize]) -> Result<()> {
    if pattern.len() != dims.len() {
        return Err(Error::InfeasiblePattern(format!(
            "expected {} shot counts, got {}",
            dims.len(),
            pattern.len()
        )));
    }
    let mut prev_t = 0usize;
    let mut prev_e = 0usize;
    for (i, (&t, &e)) in dims.iter().zip(pattern).enumerate() {
        if e < prev_e {
            return Err(Error::InfeasiblePattern(format!(
                "e_{} = {} decreases below e_{} = {}",
                i + 1,
                e,
                i,
                prev_e
            )));
        }
        if e > t {
            return Err(Error::InfeasiblePattern(format!(
                "e_{} = {} exceeds t_{} = {}",
                i + 1,
                e,
                i + 1,
                t
            )));
        }
        if e - prev_e > t - prev_t {
            return Err(Error::InfeasiblePattern(format!(
                "shot {} would drop {} of {} new generators",
                i + 1,
                e - prev_e,
                t - prev_t
            )));
        }
        prev_t = t;
        prev_e = e;
    }
    Ok(())
}

/// Erasure counts of a received stuttering flag with respect to the sent
/// flag: e_i = t_i - dim X_i and e = sum e_i = d_f(F, X). Fails with
/// [`Error::NotASubflag`] when some X_i is not contained in F_i, which
/// signals an insertion and so falls outside the erasure channel.
pub fn erasure_counts(sent: &Flag, received: &StutteringFlag) -> Result<(Vec<usize>, usize)> {
    if received.levels().len() != sent.levels().len()
        || received.ambient() != sent.ambient()
        || received.field() != sent.field()
    {
        return Err(Error::TypeMismatch);
    }
    let mut per_shot = Vec::with_capacity(sent.levels().len());
    for (i, (f, x)) in sent.levels().iter().zip(received.levels()).enumerate() {
        if !f.contains(x)? {
            return Err(Error::NotASubflag { level: i });
        }
        per_shot.push(f.dim() - x.dim());
    }
    let total = per_shot.iter().sum();
    Ok((per_shot, total))
}

/// Per-shot correctability threshold: e_i is correctable by a code of
/// minimum distance d exactly when e_i <= (d - 1) / 2.
pub fn correctable_with(min_distance: usize, erasures: usize) -> bool {
    min_distance > 0 && erasures <= (min_distance - 1) / 2
}

/// All cumulative erasure patterns realizable for `dims` whose total number
/// of erasures (the sum over shots) does not exceed `max_total`.
pub fn feasible_patterns(dims: &[usize], max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(dims.len());
    extend_patterns(dims, max_total, 0, 0, &mut current, &mut out);
    out
}

fn extend_patterns(
    dims: &[usize],
    max_total: usize,
    prev_e: usize,
    total: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let i = current.len();
    if i == dims.len() {
        out.push(current.clone());
        return;
    }
    let prev_t = if i == 0 { 0 } else { dims[i - 1] };
    let new = dims[i] - prev_t;
    for drop in 0..=new {
        let e = prev_e + drop;
        if total + e > max_total {
            break;
        }
        current.push(e);
        extend_patterns(dims, max_total, e, total + e, current, out);
        current.pop();
    }
}

impl FlagCode {
    /// Total erasure counts this code corrects: e <= (d_f(C) - 1) / 2.
    pub fn correctable(&self, total_erasures: usize) -> bool {
        correctable_with(self.min_distance(), total_erasures)
    }
}
