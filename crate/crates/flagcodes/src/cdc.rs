//! Constant dimension codes: finite sets of equal-dimension subspaces of
//! F_q^n, with their minimum distance, equidistant and sunflower structure,
//! and containment decoding.

use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::subspace::Subspace;

/// A deduplicated, non-empty set of k-dimensional subspaces of F_q^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantDimensionCode {
    field: FieldContext,
    ambient: usize,
    dim: usize,
    words: Vec<Subspace>,
}

/// Outcome of decoding a received subspace by containment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContainmentDecode {
    /// Index of the only codeword containing the received subspace.
    Unique(usize),
    /// Two or more codewords contain it.
    Ambiguous,
    /// No codeword contains it.
    NotFound,
}

/// Whether all pairwise distances agree, and the common intersection
/// dimension when they do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquidistantProfile {
    pub is_equidistant: bool,
    /// Pairwise intersection dimension c; for a singleton this is k by
    /// convention (a one-word code is trivially equidistant of distance 0).
    pub intersection_dim: Option<usize>,
}

impl ConstantDimensionCode {
    /// Builds a code from words, deduplicating exact repeats. All words must
    /// share field, ambient dimension and dimension; the set must be
    /// non-empty.
    pub fn new(words: Vec<Subspace>) -> Result<ConstantDimensionCode> {
        let Some(first) = words.first() else {
            return Err(Error::EmptyCode);
        };
        let field = first.field().clone();
        let ambient = first.ambient();
        let dim = first.dim();
        let mut unique: Vec<Subspace> = Vec::with_capacity(words.len());
        for w in words {
            if w.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if w.ambient() != ambient {
                return Err(Error::AmbientMismatch(ambient, w.ambient()));
            }
            if w.dim() != dim {
                return Err(Error::DimensionMismatch {
                    level: 0,
                    expected: dim,
                    actual: w.dim(),
                });
            }
            if !unique.contains(&w) {
                unique.push(w);
            }
        }
        Ok(ConstantDimensionCode {
            field,
            ambient,
            dim,
            words: unique,
        })
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty codes
    }

    pub fn words(&self) -> &[Subspace] {
        &self.words
    }

    /// Minimum pairwise subspace distance; 0 for a one-word code.
    pub fn min_distance(&self) -> usize {
        let mut best: Option<usize> = None;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                let d = u.distance(v).expect("words share field and ambient");
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best.unwrap_or(0)
    }

    /// Checks whether every pair of distinct words attains the minimum
    /// distance, and reports the common intersection dimension.
    pub fn equidistant_profile(&self) -> EquidistantProfile {
        if self.words.len() == 1 {
            return EquidistantProfile {
                is_equidistant: true,
                intersection_dim: Some(self.dim),
            };
        }
        let min = self.min_distance();
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                if u.distance(v).expect("compatible words") != min {
                    return EquidistantProfile {
                        is_equidistant: false,
                        intersection_dim: None,
                    };
                }
            }
        }
        EquidistantProfile {
            is_equidistant: true,
            intersection_dim: Some(self.dim - min / 2),
        }
    }

    /// The common intersection of all pairs of distinct words, when it
    /// exists. A one-word code {U} is a trivial sunflower of center U.
    pub fn sunflower_center(&self) -> Option<Subspace> {
        if self.words.len() == 1 {
            return Some(self.words[0].clone());
        }
        let center = self.words[0]
            .intersect(&self.words[1])
            .expect("compatible words");
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                if u.intersect(v).expect("compatible words") != center {
                    return None;
                }
            }
        }
        Some(center)
    }

    /// Decodes a received subspace to the unique codeword containing it.
    pub fn decode_by_containment(&self, received: &Subspace) -> Result<ContainmentDecode> {
        if received.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if received.ambient() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, received.ambient()));
        }
        let mut hit: Option<usize> = None;
        for (i, w) in self.words.iter().enumerate() {
            if w.contains(received)? {
                if hit.is_some() {
                    return Ok(ContainmentDecode::Ambiguous);
                }
                hit = Some(i);
            }
        }
        Ok(match hit {
            Some(i) => ContainmentDecode::Unique(i),
            None => ContainmentDecode::NotFound,
        })
    }
}

/// Largest possible minimum distance of a constant dimension code of
/// dimension k in F_q^n: min{2k, 2(n-k)}.
pub fn max_distance_bound(k: usize, n: usize) -> Result<usize> {
    if k == 0 || k >= n {
        return Err(Error::InvalidDimension { k, n });
    }
    Ok((2 * k).min(2 * (n - k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldContext {
        FieldContext::new(2).unwrap()
    }

    fn sub(rows: &[Vec<u32>], n: usize) -> Subspace {
        Subspace::from_vectors(f2(), n, rows).unwrap()
    }

    fn unit(n: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    #[test]
    fn singleton_distance_is_zero() {
        let code = ConstantDimensionCode::new(vec![sub(&[unit(3, 0)], 3)]).unwrap();
        assert_eq!(code.min_distance(), 0);
        let p = code.equidistant_profile();
        assert!(p.is_equidistant);
        assert_eq!(p.intersection_dim, Some(1));
    }

    #[test]
    fn three_lines_in_f2_3() {
        let code = ConstantDimensionCode::new(vec![
            sub(&[unit(3, 0)], 3),
            sub(&[unit(3, 1)], 3),
            sub(&[vec![1, 1, 0]], 3),
        ])
        .unwrap();
        assert_eq!(code.min_distance(), 2);
        // distinct lines pairwise meet in 0: sunflower with zero center
        let center = code.sunflower_center().unwrap();
        assert!(center.is_zero());
        let p = code.equidistant_profile();
        assert!(p.is_equidistant);
        assert_eq!(p.intersection_dim, Some(0));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(max_distance_bound(2, 5).unwrap(), 4);
        assert_eq!(max_distance_bound(3, 5).unwrap(), 4);
        assert_eq!(max_distance_bound(1, 3).unwrap(), 2);
        assert_eq!(
            max_distance_bound(3, 3),
            Err(Error::InvalidDimension { k: 3, n: 3 })
        );
        assert_eq!(
            max_distance_bound(0, 3),
            Err(Error::InvalidDimension { k: 0, n: 3 })
        );
    }

    #[test]
    fn duplicate_words_collapse() {
        // lines <u1>, <u1>, <u2> deduplicate to a 2-word equidistant code
        let code = ConstantDimensionCode::new(vec![
            sub(&[unit(3, 0)], 3),
            sub(&[unit(3, 0)], 3),
            sub(&[unit(3, 1)], 3),
        ])
        .unwrap();
        assert_eq!(code.len(), 2);
        let p = code.equidistant_profile();
        assert!(p.is_equidistant);
        assert_eq!(p.intersection_dim, Some(0));
    }

    #[test]
    fn planes_sharing_a_line_not_equidistant() {
        // first subspaces of an equidistant flag code that is not
        // projected-equidistant: distances 2 and 4 coexist
        let code = ConstantDimensionCode::new(vec![
            sub(&[unit(5, 0), unit(5, 1)], 5),
            sub(&[unit(5, 0), unit(5, 3)], 5),
            sub(&[unit(5, 2), unit(5, 3)], 5),
        ])
        .unwrap();
        assert_eq!(code.min_distance(), 2);
        assert!(!code.equidistant_profile().is_equidistant);
        assert_eq!(code.equidistant_profile().intersection_dim, None);
    }

    #[test]
    fn sunflower_centers() {
        // planes through <u1> in F_2^4
        let code = ConstantDimensionCode::new(vec![
            sub(&[unit(4, 0), unit(4, 1)], 4),
            sub(&[unit(4, 0), unit(4, 2)], 4),
            sub(&[unit(4, 0), unit(4, 3)], 4),
        ])
        .unwrap();
        assert_eq!(code.sunflower_center().unwrap(), sub(&[unit(4, 0)], 4));

        // 3-spaces through <u1,u2> in F_2^4
        let code = ConstantDimensionCode::new(vec![
            sub(&[unit(4, 0), unit(4, 1), unit(4, 2)], 4),
            sub(&[unit(4, 0), unit(4, 1), unit(4, 3)], 4),
        ])
        .unwrap();
        assert_eq!(
            code.sunflower_center().unwrap(),
            sub(&[unit(4, 0), unit(4, 1)], 4)
        );
    }

    #[test]
    fn sunflower_is_equidistant_with_center_dim() {
        let code = ConstantDimensionCode::new(vec![
            sub(&[unit(4, 0), unit(4, 1)], 4),
            sub(&[unit(4, 0), unit(4, 2)], 4),
            sub(&[unit(4, 0), unit(4, 3)], 4),
        ])
        .unwrap();
        let center = code.sunflower_center().unwrap();
        let p = code.equidistant_profile();
        assert!(p.is_equidistant);
        assert_eq!(p.intersection_dim, Some(center.dim()));
    }

    #[test]
    fn containment_decoding() {
        let code = ConstantDimensionCode::new(vec![
            sub(&[unit(4, 0), unit(4, 1)], 4),
            sub(&[unit(4, 2), unit(4, 3)], 4),
        ])
        .unwrap();
        let x = sub(&[unit(4, 1)], 4);
        assert_eq!(
            code.decode_by_containment(&x).unwrap(),
            ContainmentDecode::Unique(0)
        );
        let zero = Subspace::zero(f2(), 4);
        assert_eq!(
            code.decode_by_containment(&zero).unwrap(),
            ContainmentDecode::Ambiguous
        );
        // u1 + u3 lies in neither word
        let y = sub(&[vec![1, 0, 1, 0]], 4);
        assert_eq!(
            code.decode_by_containment(&y).unwrap(),
            ContainmentDecode::NotFound
        );
    }

    #[test]
    fn words_decode_to_themselves() {
        let code = ConstantDimensionCode::new(vec![
            sub(&[unit(4, 0), unit(4, 1)], 4),
            sub(&[unit(4, 2), unit(4, 3)], 4),
        ])
        .unwrap();
        for (i, w) in code.words().iter().enumerate() {
            assert_eq!(
                code.decode_by_containment(w).unwrap(),
                ContainmentDecode::Unique(i)
            );
        }
    }

    #[test]
    fn empty_code_rejected() {
        assert_eq!(
            ConstantDimensionCode::new(Vec::new()).unwrap_err(),
            Error::EmptyCode
        );
    }
}
