//! Flags and flag codes: strictly nested subspace sequences of a prescribed
//! type, the flag distance, projected codes, and random code generation.

use rand::Rng;

use crate::cdc::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// The dimension sequence (t_1, ..., t_r) of a flag, with
/// 1 <= t_1 < ... < t_r < n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeVector {
    ambient: usize,
    dims: Vec<usize>,
}

impl TypeVector {
    pub fn new(ambient: usize, dims: Vec<usize>) -> Result<TypeVector> {
        if dims.is_empty() {
            return Err(Error::InvalidTypeVector("no levels".into()));
        }
        if dims[0] == 0 {
            return Err(Error::InvalidTypeVector("t_1 must be at least 1".into()));
        }
        for w in dims.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidTypeVector(format!(
                    "dimensions must strictly increase, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if *dims.last().unwrap() >= ambient {
            return Err(Error::InvalidTypeVector(format!(
                "t_r = {} must be smaller than the ambient dimension {}",
                dims.last().unwrap(),
                ambient
            )));
        }
        Ok(TypeVector { ambient, dims })
    }

    /// The full type (1, 2, ..., n-1).
    pub fn full(ambient: usize) -> Result<TypeVector> {
        TypeVector::new(ambient, (1..ambient).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of levels r.
    pub fn levels(&self) -> usize {
        self.dims.len()
    }

    /// Largest flag distance any code of this type can attain:
    /// 2 (sum of t_i for t_i <= floor(n/2), plus n - t_i for the rest).
    pub fn max_flag_distance(&self) -> usize {
        let half = self.ambient / 2;
        let total: usize = self
            .dims
            .iter()
            .map(|&t| if t <= half { t } else { self.ambient - t })
            .sum();
        2 * total
    }
}

impl std::fmt::Display for TypeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", dims.join(","))
    }
}

/// A strictly nested sequence of subspaces with dimensions given by a type
/// vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    type_vector: TypeVector,
    subspaces: Vec<Subspace>,
}

impl Flag {
    pub fn new(type_vector: TypeVector, subspaces: Vec<Subspace>) -> Result<Flag> {
        if subspaces.len() != type_vector.levels() {
            return Err(Error::TypeMismatch);
        }
        for (i, s) in subspaces.iter().enumerate() {
            if s.ambient() != type_vector.ambient() {
                return Err(Error::AmbientMismatch(type_vector.ambient(), s.ambient()));
            }
            if s.dim() != type_vector.dims()[i] {
                return Err(Error::DimensionMismatch {
                    level: i,
                    expected: type_vector.dims()[i],
                    actual: s.dim(),
                });
            }
            if s.field() != subspaces[0].field() {
                return Err(Error::FieldMismatch);
            }
        }
        for (i, pair) in subspaces.windows(2).enumerate() {
            if !pair[1].contains(&pair[0])? {
                return Err(Error::NotNested { level: i + 1 });
            }
        }
        Ok(Flag {
            type_vector,
            subspaces,
        })
    }

    /// Builds the flag whose i-th subspace is the span of the first t_i rows
    /// of `rows`. Fails when some prefix does not reach the required rank.
    pub fn from_generator_rows(
        type_vector: TypeVector,
        field: FieldContext,
        rows: &[Vec<u32>],
    ) -> Result<Flag> {
        let n = type_vector.ambient();
        let t_last = *type_vector.dims().last().unwrap();
        if rows.len() != t_last {
            return Err(Error::TypeMismatch);
        }
        let matrix = Matrix::from_rows(field, rows, n)?;
        let mut subspaces = Vec::with_capacity(type_vector.levels());
        for &t in type_vector.dims() {
            let prefix: Vec<Vec<u32>> = (0..t).map(|i| matrix.row(i).to_vec()).collect();
            subspaces.push(Subspace::from_vectors(matrix.field().clone(), n, &prefix)?);
        }
        Flag::new(type_vector, subspaces)
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.type_vector
    }

    pub fn field(&self) -> &FieldContext {
        self.subspaces[0].field()
    }

    pub fn ambient(&self) -> usize {
        self.type_vector.ambient()
    }

    pub fn levels(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn level(&self, i: usize) -> &Subspace {
        &self.subspaces[i]
    }

    /// Flag distance: the sum of per-level subspace distances.
    pub fn distance(&self, other: &Flag) -> Result<usize> {
        if self.type_vector != other.type_vector {
            return Err(Error::TypeMismatch);
        }
        let mut total = 0;
        for (a, b) in self.subspaces.iter().zip(&other.subspaces) {
            total += a.distance(b)?;
        }
        Ok(total)
    }
}

/// A nested subspace sequence where equal consecutive subspaces are allowed;
/// what a receiver assembles on the erasure channel, and the shape of
/// sunflower centers and pairwise intersections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StutteringFlag {
    subspaces: Vec<Subspace>,
}

impl StutteringFlag {
    pub fn new(subspaces: Vec<Subspace>) -> Result<StutteringFlag> {
        if subspaces.is_empty() {
            return Err(Error::TypeMismatch);
        }
        for (i, s) in subspaces.iter().enumerate() {
            if s.ambient() != subspaces[0].ambient() {
                return Err(Error::AmbientMismatch(subspaces[0].ambient(), s.ambient()));
            }
            if s.field() != subspaces[0].field() {
                return Err(Error::FieldMismatch);
            }
            if i > 0 && !s.contains(&subspaces[i - 1])? {
                return Err(Error::NotNested { level: i });
            }
        }
        Ok(StutteringFlag { subspaces })
    }

    pub fn field(&self) -> &FieldContext {
        self.subspaces[0].field()
    }

    pub fn ambient(&self) -> usize {
        self.subspaces[0].ambient()
    }

    pub fn levels(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn level(&self, i: usize) -> &Subspace {
        &self.subspaces[i]
    }

    /// Per-level dimensions, the "type" of the stuttering flag.
    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(|s| s.dim()).collect()
    }

    /// The prefix consisting of the first `levels` subspaces.
    pub fn truncated(&self, levels: usize) -> StutteringFlag {
        assert!(levels >= 1 && levels <= self.subspaces.len());
        StutteringFlag {
            subspaces: self.subspaces[..levels].to_vec(),
        }
    }

    /// Extended subspace distance to a flag, summed over the levels present
    /// in `self` (which may be a prefix of the full type).
    pub fn distance_to_flag(&self, flag: &Flag) -> Result<usize> {
        if self.subspaces.len() > flag.levels().len() {
            return Err(Error::TypeMismatch);
        }
        let mut total = 0;
        for (x, f) in self.subspaces.iter().zip(flag.levels()) {
            total += x.distance(f)?;
        }
        Ok(total)
    }
}

impl From<&Flag> for StutteringFlag {
    fn from(flag: &Flag) -> StutteringFlag {
        StutteringFlag {
            subspaces: flag.levels().to_vec(),
        }
    }
}

/// A deduplicated, non-empty set of flags sharing one type vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagCode {
    type_vector: TypeVector,
    flags: Vec<Flag>,
}

impl FlagCode {
    /// Builds a code, silently deduplicating identical flags so that
    /// cardinality statements follow set semantics.
    pub fn new(flags: Vec<Flag>) -> Result<FlagCode> {
        let Some(first) = flags.first() else {
            return Err(Error::EmptyCode);
        };
        let type_vector = first.type_vector().clone();
        let field = first.field().clone();
        let mut unique: Vec<Flag> = Vec::with_capacity(flags.len());
        for flag in flags {
            if flag.type_vector() != &type_vector || flag.field() != &field {
                return Err(Error::TypeMismatch);
            }
            if !unique.contains(&flag) {
                unique.push(flag);
            }
        }
        Ok(FlagCode {
            type_vector,
            flags: unique,
        })
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.type_vector
    }

    pub fn field(&self) -> &FieldContext {
        self.flags[0].field()
    }

    pub fn ambient(&self) -> usize {
        self.type_vector.ambient()
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty codes
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    /// Minimum pairwise flag distance; 0 for a one-flag code.
    pub fn min_distance(&self) -> usize {
        let mut best: Option<usize> = None;
        for (i, f) in self.flags.iter().enumerate() {
            for g in &self.flags[i + 1..] {
                let d = f.distance(g).expect("flags share the type vector");
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best.unwrap_or(0)
    }

    /// The i-th projected code: the set of i-th subspaces of all flags
    /// (deduplicated). Levels are indexed from 0.
    pub fn projected(&self, level: usize) -> Result<ConstantDimensionCode> {
        if level >= self.type_vector.levels() {
            return Err(Error::IndexOutOfRange {
                index: level,
                levels: self.type_vector.levels(),
            });
        }
        let words: Vec<Subspace> = self.flags.iter().map(|f| f.level(level).clone()).collect();
        ConstantDimensionCode::new(words)
    }

    /// All projected codes, level 0 first.
    pub fn projected_all(&self) -> Vec<ConstantDimensionCode> {
        (0..self.type_vector.levels())
            .map(|i| self.projected(i).expect("level index in range"))
            .collect()
    }

    /// True when every projected code has the same cardinality as the code
    /// itself, i.e. distinct flags have all their subspaces distinct.
    pub fn is_disjoint(&self) -> bool {
        self.projected_all()
            .iter()
            .all(|c| c.len() == self.flags.len())
    }

    /// Generates a code of exactly `size` distinct flags, each obtained as
    /// the image of the standard flag under a random invertible matrix.
    /// Deterministic for a fixed RNG state.
    pub fn random<R: Rng + ?Sized>(
        type_vector: &TypeVector,
        field: &FieldContext,
        size: usize,
        rng: &mut R,
    ) -> Result<FlagCode> {
        assert!(size >= 1);
        let n = type_vector.ambient();
        let budget = 100 * size + 100;
        let mut flags: Vec<Flag> = Vec::with_capacity(size);
        for attempt in 0.. {
            if flags.len() == size {
                break;
            }
            if attempt >= budget {
                return Err(Error::Unsatisfiable {
                    wanted: size,
                    attempts: budget,
                });
            }
            let mixer = random_invertible(field, n, rng);
            let rows: Vec<Vec<u32>> = (0..*type_vector.dims().last().unwrap())
                .map(|i| mixer.row(i).to_vec())
                .collect();
            let flag = Flag::from_generator_rows(type_vector.clone(), field.clone(), &rows)
                .expect("prefixes of an invertible matrix span the right dimensions");
            if !flags.contains(&flag) {
                flags.push(flag);
            }
        }
        FlagCode::new(flags)
    }
}

/// Uniformly random invertible n x n matrix, by rejection sampling.
fn random_invertible<R: Rng + ?Sized>(field: &FieldContext, n: usize, rng: &mut R) -> Matrix {
    loop {
        let entries: Vec<u32> = (0..n * n).map(|_| rng.random_range(0..field.q())).collect();
        let m = Matrix::new(field.clone(), n, n, entries).expect("entries sampled in range");
        if m.rank() == n {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

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

    /// Three flags of type (1,2,3) on F_2^5 whose closest pair shares its
    /// first subspace.
    pub(crate) fn shared_line_code() -> FlagCode {
        let t = TypeVector::new(5, vec![1, 2, 3]).unwrap();
        let f1 = Flag::new(
            t.clone(),
            vec![
                sub(&[unit(5, 0)], 5),
                sub(&[unit(5, 0), unit(5, 2)], 5),
                sub(&[unit(5, 0), unit(5, 2), unit(5, 3)], 5),
            ],
        )
        .unwrap();
        let f2_ = Flag::new(
            t.clone(),
            vec![
                sub(&[unit(5, 0)], 5),
                sub(&[unit(5, 0), unit(5, 4)], 5),
                sub(&[unit(5, 0), unit(5, 1), unit(5, 4)], 5),
            ],
        )
        .unwrap();
        let f3 = Flag::new(
            t,
            vec![
                sub(&[unit(5, 1)], 5),
                sub(&[unit(5, 0), unit(5, 1)], 5),
                sub(&[unit(5, 0), unit(5, 1), unit(5, 3)], 5),
            ],
        )
        .unwrap();
        FlagCode::new(vec![f1, f2_, f3]).unwrap()
    }

    #[test]
    fn type_vector_validation() {
        assert!(TypeVector::new(5, vec![1, 2, 3]).is_ok());
        assert!(TypeVector::new(5, vec![1, 1, 3]).is_err());
        assert!(TypeVector::new(5, vec![0, 1]).is_err());
        assert!(TypeVector::new(5, vec![1, 5]).is_err());
        assert!(TypeVector::new(5, vec![]).is_err());
        assert_eq!(TypeVector::full(4).unwrap().dims(), &[1, 2, 3]);
    }

    #[test]
    fn flag_construction_validates() {
        let t = TypeVector::new(5, vec![1, 2, 3]).unwrap();
        let good = Flag::new(
            t.clone(),
            vec![
                sub(&[unit(5, 0)], 5),
                sub(&[unit(5, 0), unit(5, 2)], 5),
                sub(&[unit(5, 0), unit(5, 2), unit(5, 3)], 5),
            ],
        );
        assert!(good.is_ok());

        let t2 = TypeVector::new(3, vec![1, 2]).unwrap();
        let not_nested = Flag::new(
            t2,
            vec![sub(&[unit(3, 0)], 3), sub(&[unit(3, 1), unit(3, 2)], 3)],
        );
        assert_eq!(not_nested.unwrap_err(), Error::NotNested { level: 1 });

        let t3 = TypeVector::new(3, vec![1]).unwrap();
        let wrong_dim = Flag::new(t3, vec![sub(&[unit(3, 0), unit(3, 1)], 3)]);
        assert_eq!(
            wrong_dim.unwrap_err(),
            Error::DimensionMismatch {
                level: 0,
                expected: 1,
                actual: 2
            }
        );
    }

    #[test]
    fn flag_distances() {
        let code = shared_line_code();
        let d12 = code.flags()[0].distance(&code.flags()[1]).unwrap();
        assert_eq!(d12, 6);
        let d = code.flags()[0].distance(&code.flags()[0]).unwrap();
        assert_eq!(d, 0);
        assert_eq!(code.min_distance(), 6);
    }

    #[test]
    fn projected_codes_deduplicate() {
        let code = shared_line_code();
        let c1 = code.projected(0).unwrap();
        assert_eq!(c1.len(), 2); // <u1> appears twice
        let c2 = code.projected(1).unwrap();
        assert_eq!(c2.len(), 3);
        assert_eq!(c2.min_distance(), 2);
        assert!(code.projected(3).is_err());
    }

    #[test]
    fn disjointness() {
        let code = shared_line_code();
        assert!(!code.is_disjoint());

        let t = TypeVector::new(4, vec![1, 2]).unwrap();
        let f1 = Flag::new(
            t.clone(),
            vec![sub(&[unit(4, 0)], 4), sub(&[unit(4, 0), unit(4, 1)], 4)],
        )
        .unwrap();
        let f2_ = Flag::new(
            t,
            vec![sub(&[unit(4, 2)], 4), sub(&[unit(4, 2), unit(4, 3)], 4)],
        )
        .unwrap();
        let pair = FlagCode::new(vec![f1.clone(), f2_]).unwrap();
        assert!(pair.is_disjoint());

        let singleton = FlagCode::new(vec![f1]).unwrap();
        assert!(singleton.is_disjoint());
        assert_eq!(singleton.min_distance(), 0);
    }

    #[test]
    fn code_deduplicates_flags() {
        let code = shared_line_code();
        let mut doubled = code.flags().to_vec();
        doubled.extend_from_slice(code.flags());
        let rebuilt = FlagCode::new(doubled).unwrap();
        assert_eq!(rebuilt.len(), 3);
        assert_eq!(rebuilt, code);
    }

    #[test]
    fn correctable_thresholds() {
        let code = shared_line_code(); // d_f = 6
        assert!(code.correctable(2));
        assert!(!code.correctable(3));
    }

    #[test]
    fn max_flag_distance_examples() {
        let t = TypeVector::new(5, vec![1, 2, 3]).unwrap();
        assert_eq!(t.max_flag_distance(), 10);
        let t = TypeVector::new(4, vec![1, 2]).unwrap();
        assert_eq!(t.max_flag_distance(), 6);
        let t = TypeVector::full(3).unwrap();
        assert_eq!(t.max_flag_distance(), 4);
    }

    #[test]
    fn random_codes_are_valid_and_deterministic() {
        let t = TypeVector::new(4, vec![1, 2]).unwrap();
        let field = f2();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let code = FlagCode::random(&t, &field, 3, &mut rng).unwrap();
        assert_eq!(code.len(), 3);
        for flag in code.flags() {
            // revalidate the nesting invariants
            Flag::new(t.clone(), flag.levels().to_vec()).unwrap();
        }
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        let again = FlagCode::random(&t, &field, 3, &mut rng2).unwrap();
        assert_eq!(code, again);

        let mut rng3 = ChaCha8Rng::seed_from_u64(8);
        let single = FlagCode::random(&t, &field, 1, &mut rng3).unwrap();
        assert_eq!(single.len(), 1);
        let c1 = single.projected(0).unwrap();
        assert_eq!(c1.len(), 1);
    }

    #[test]
    fn random_codes_beyond_the_variety_are_unsatisfiable() {
        // G_2(1,2) holds only 3 lines, so 5 distinct flags of type (1)
        // cannot exist
        let t = TypeVector::new(2, vec![1]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let err = FlagCode::random(&t, &f2(), 5, &mut rng).unwrap_err();
        assert!(matches!(err, Error::Unsatisfiable { wanted: 5, .. }));
    }

    #[test]
    fn stuttering_flags_allow_repeats() {
        let z = Subspace::zero(f2(), 4);
        let a = sub(&[unit(4, 1)], 4);
        let x = StutteringFlag::new(vec![z.clone(), z.clone(), a.clone()]).unwrap();
        assert_eq!(x.dims(), vec![0, 0, 1]);
        let bad = StutteringFlag::new(vec![a.clone(), sub(&[unit(4, 2)], 4)]);
        assert_eq!(bad.unwrap_err(), Error::NotNested { level: 1 });
        assert_eq!(x.truncated(2).dims(), vec![0, 0]);
    }
}
