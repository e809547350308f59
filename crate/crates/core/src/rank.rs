//! Rank weights of words in `L^N`.
//!
//! * `w0`: θ-degree of the minimal θ-polynomial vanishing on the entries;
//! * `w1`: rank over L of the n×N Moore matrix (n = order of θ);
//! * `w2`: rank over K of the same matrix, columns expanded over K;
//! * `w3`: rank over K of the m×N coordinate matrix.
//!
//! `w0 = w1` and `w2 = w3` always hold, and `w1 <= w2` with equality when K
//! is the fixed field of θ.

use std::fmt;

use crate::algebra::{rat, FieldElement, FieldTower, Matrix, TowerField};
use crate::error::{Error, Result};
use crate::galois::Automorphism;
use crate::random::Sampler;
use crate::skew::SkewPolynomial;

/// A word `(x_1, …, x_N)` over the top field of a tower.
#[derive(Clone, PartialEq)]
pub struct Word {
    entries: Vec<FieldElement>,
}

impl Word {
    pub fn new(entries: Vec<FieldElement>) -> Result<Self> {
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| e.tower() != first.tower() || e.level() != first.level()) {
                return Err(Error::TowerMismatch);
            }
        }
        Ok(Self { entries })
    }

    pub fn zero(tower: &FieldTower, len: usize) -> Self {
        Self { entries: vec![tower.zero(tower.top()); len] }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<FieldElement> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    fn zip_with(&self, other: &Word, f: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> Result<Word> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), actual: other.len() });
        }
        if let (Some(a), Some(b)) = (self.entries.first(), other.entries.first()) {
            if a.tower() != b.tower() || a.level() != b.level() {
                return Err(Error::TowerMismatch);
            }
        }
        Ok(Word { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect() })
    }

    pub fn add(&self, other: &Word) -> Result<Word> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &FieldElement) -> Word {
        Word { entries: self.entries.iter().map(|e| c * e).collect() }
    }

    fn lifted(&self, theta: &Automorphism) -> Result<Vec<FieldElement>> {
        self.entries.iter().map(|e| theta.lift(e)).collect()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightReport {
    pub w0: usize,
    pub w1: usize,
    pub w2: usize,
    pub w3: usize,
}

impl WeightReport {
    /// Both identities `w0 = w1` and `w2 = w3` hold, and `w1 <= w2`.
    pub fn is_consistent(&self) -> bool {
        self.w0 == self.w1 && self.w2 == self.w3 && self.w1 <= self.w2
    }
}

impl fmt::Display for WeightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.w0, self.w1, self.w2, self.w3)
    }
}

/// The `rows × N` matrix with entry `(i, j) = θ^i(x_j)`.
pub fn moore_matrix(theta: &Automorphism, x: &Word, rows: usize) -> Result<Matrix<TowerField>> {
    let entries = x.lifted(theta)?;
    let orbits: Vec<Vec<FieldElement>> = entries.iter().map(|e| theta.orbit(e, rows)).collect();
    Ok(Matrix::from_fn(theta.top_field(), rows, entries.len(), |i, j| orbits[j][i].clone()))
}

/// The `m × N` matrix over K whose `j`-th column holds the coordinates of
/// `x_j` in the monomial basis of L.
pub fn coordinate_matrix(theta: &Automorphism, x: &Word) -> Result<Matrix<TowerField>> {
    let columns: Vec<Vec<FieldElement>> = x.lifted(theta)?.iter().map(FieldElement::coeffs_below).collect();
    Matrix::from_columns(theta.base_field(), theta.degree(), &columns)
}

/// `w3`, the K-dimension of the span of the entries. Equal to every other
/// weight when θ is admissible.
pub fn k_rank(theta: &Automorphism, x: &Word) -> Result<usize> {
    coordinate_matrix(theta, x)?.rank()
}

pub fn weights(theta: &Automorphism, x: &Word) -> Result<WeightReport> {
    let entries = x.lifted(theta)?;
    let n = theta.order();
    let w0 = SkewPolynomial::min_ideal_poly(theta, &entries)?
        .degree()
        .finite()
        .expect("min(I_X) is nonzero");
    let moore = moore_matrix(theta, x, n)?;
    let w1 = moore.rank()?;
    let expanded: Vec<Vec<FieldElement>> = (0..moore.cols())
        .map(|j| moore.column(j).iter().flat_map(FieldElement::coeffs_below).collect())
        .collect();
    let w2 = Matrix::from_columns(theta.base_field(), n * theta.degree(), &expanded)?.rank()?;
    let w3 = k_rank(theta, x)?;
    debug_assert_eq!(w0, w1);
    debug_assert_eq!(w2, w3);
    Ok(WeightReport { w0, w1, w2, w3 })
}

/// Rank distance between two words. When K is the fixed field of θ the four
/// weights coincide and a single value is returned; otherwise the two
/// distinct metrics are reported side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankDistance {
    Rank(usize),
    Split { w1: usize, w2: usize },
}

pub fn rank_distance(theta: &Automorphism, x: &Word, y: &Word) -> Result<RankDistance> {
    let diff = x.sub(y)?;
    if theta.admissibility().fixed_field_is_base {
        Ok(RankDistance::Rank(k_rank(theta, &diff)?))
    } else {
        let w = weights(theta, &diff)?;
        Ok(RankDistance::Split { w1: w.w1, w2: w.w2 })
    }
}

/// A word of length `n` with K-rank exactly `t`, as `e_j = Σ_i ε_i c_ij` for
/// K-independent random `ε_i ∈ L` and a random integer `t × n` matrix `C` of
/// rank `t`. Deterministic in `seed`.
pub fn random_rank_error(theta: &Automorphism, n: usize, t: usize, seed: u64) -> Result<Word> {
    random_rank_error_from(&mut Sampler::new(seed), theta, n, t)
}

pub fn random_rank_error_from(sampler: &mut Sampler, theta: &Automorphism, n: usize, t: usize) -> Result<Word> {
    let max = n.min(theta.degree());
    if t > max {
        return Err(Error::InvalidRank { rank: t, max });
    }
    let tower = theta.tower();
    let top = theta.top();
    if t == 0 {
        return Ok(Word::zero(tower, n));
    }
    let eps = sampler.independent_elements(tower, t)?;
    let c = loop {
        let c = Matrix::from_fn(crate::algebra::Rationals, t, n, |_, _| rat(sampler.small_int()));
        if c.rank()? == t {
            break c;
        }
    };
    let entries = (0..n)
        .map(|j| {
            eps.iter()
                .enumerate()
                .fold(tower.zero(top), |acc, (i, e)| &acc + &e.scale(c.get(i, j)))
        })
        .collect();
    let word = Word::new(entries)?;
    debug_assert_eq!(k_rank(theta, &word)?, t);
    Ok(word)
}
