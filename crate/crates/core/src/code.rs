//! Generalized Gabidulin codes `Gab_{θ,k}(g)`: the L-span of the k×N Moore
//! matrix of a support `g` of K-linearly independent elements, with a
//! Welch–Berlekamp style unique decoder up to rank `floor((N - k) / 2)`.

use crate::algebra::{FieldElement, Matrix, TowerField};
use crate::error::{Error, Result};
use crate::galois::Automorphism;
use crate::random::Sampler;
use crate::rank::{k_rank, moore_matrix, Word};
use crate::skew::SkewPolynomial;

#[derive(Clone)]
pub struct GabidulinCode {
    theta: Automorphism,
    support: Word,
    k: usize,
    generator: Matrix<TowerField>,
    parity_check: Matrix<TowerField>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeStatus {
    Success,
    /// The reconstruction system had a solution but it does not correspond
    /// to a codeword within the decoding radius.
    TooManyErrors,
    /// The reconstruction system has only the trivial solution.
    NoSolution,
}

#[derive(Debug, Clone)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    pub message_poly: Option<SkewPolynomial>,
    pub error: Option<Word>,
}

impl DecodeOutcome {
    fn failure(status: DecodeStatus) -> Self {
        Self { status, message_poly: None, error: None }
    }

    pub fn is_success(&self) -> bool {
        self.status == DecodeStatus::Success
    }
}

/// Outcome of sampling random nonzero codewords against the bound
/// `d = N - k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingletonReport {
    pub trials: usize,
    pub bound: usize,
    pub min_rank: usize,
    pub max_rank: usize,
}

impl SingletonReport {
    /// Every sampled codeword had rank in `[N - k + 1, N]`.
    pub fn holds(&self, length: usize) -> bool {
        self.min_rank >= self.bound && self.max_rank <= length
    }
}

impl GabidulinCode {
    /// Requires θ admissible, `1 <= k <= N <= m` and K-independent support.
    pub fn new(theta: &Automorphism, support: Word, k: usize) -> Result<Self> {
        let report = theta.admissibility();
        if !report.is_admissible() {
            return Err(Error::InadmissibleAutomorphism(format!("{report:?}")));
        }
        let n = support.len();
        let m = theta.degree();
        if n > m {
            return Err(Error::InvalidCode(format!("length {n} exceeds the extension degree {m}")));
        }
        if k == 0 || k > n {
            return Err(Error::InvalidCode(format!("dimension {k} must lie in 1..={n}")));
        }
        if k_rank(theta, &support)? != n {
            return Err(Error::InvalidCode("support entries are not linearly independent over K".into()));
        }
        let support = Word::new(support.entries().iter().map(|g| theta.lift(g)).collect::<Result<_>>()?)?;
        let generator = moore_matrix(theta, &support, k)?;
        let kernel = generator.kernel()?;
        let parity_check = Matrix::from_fn(theta.top_field(), kernel.len(), n, |i, j| kernel[i][j].clone());
        Ok(Self { theta: theta.clone(), support, k, generator, parity_check })
    }

    /// A code with a seeded random support.
    pub fn random(theta: &Automorphism, n: usize, k: usize, seed: u64) -> Result<Self> {
        if n > theta.degree() {
            return Err(Error::InvalidCode(format!("length {n} exceeds the extension degree {}", theta.degree())));
        }
        let support = Sampler::new(seed).independent_elements(theta.tower(), n)?;
        Self::new(theta, Word::new(support)?, k)
    }

    pub fn theta(&self) -> &Automorphism {
        &self.theta
    }

    pub fn support(&self) -> &Word {
        &self.support
    }

    pub fn length(&self) -> usize {
        self.support.len()
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Designed minimum rank distance `N - k + 1`.
    pub fn min_distance(&self) -> usize {
        self.length() - self.k + 1
    }

    /// Unique decoding radius `floor((N - k) / 2)`.
    pub fn radius(&self) -> usize {
        (self.length() - self.k) / 2
    }

    pub fn generator_matrix(&self) -> &Matrix<TowerField> {
        &self.generator
    }

    /// `(N - k) × N` matrix `H` with `G Hᵀ = 0`, rows spanning the right
    /// kernel of the generator matrix.
    pub fn parity_check_matrix(&self) -> &Matrix<TowerField> {
        &self.parity_check
    }

    /// `f = Σ message_j X^{θ^j}`.
    pub fn message_poly(&self, message: &[FieldElement]) -> Result<SkewPolynomial> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch { expected: self.k, actual: message.len() });
        }
        let coeffs = message.iter().map(|c| self.theta.lift(c)).collect::<Result<_>>()?;
        Ok(SkewPolynomial::new(&self.theta, coeffs))
    }

    /// The codeword `(f(g_1), …, f(g_N))`.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Word> {
        let f = self.message_poly(message)?;
        Word::new(self.support.entries().iter().map(|g| f.evaluate(g)).collect())
    }

    /// `H y`; zero exactly on codewords.
    pub fn syndrome(&self, y: &Word) -> Result<Vec<FieldElement>> {
        if y.len() != self.length() {
            return Err(Error::LengthMismatch { expected: self.length(), actual: y.len() });
        }
        let entries = y.entries().iter().map(|e| self.theta.lift(e)).collect::<Result<Vec<_>>>()?;
        Ok(self.parity_check.mul_vec(&entries))
    }

    pub fn is_codeword(&self, y: &Word) -> Result<bool> {
        Ok(self.syndrome(y)?.iter().all(FieldElement::is_zero))
    }

    /// The N × (k + 2t + 1) reconstruction matrix with rows
    /// `(θ^0(g_i) … θ^{k+t-1}(g_i), θ^0(y_i) … θ^t(y_i))`.
    pub fn reconstruction_matrix(&self, y: &Word) -> Result<Matrix<TowerField>> {
        let t = self.radius();
        let left = self.k + t;
        let g_orbits: Vec<Vec<FieldElement>> =
            self.support.entries().iter().map(|g| self.theta.orbit(g, left)).collect();
        let y_orbits: Vec<Vec<FieldElement>> = y
            .entries()
            .iter()
            .map(|v| Ok(self.theta.orbit(&self.theta.lift(v)?, t + 1)))
            .collect::<Result<_>>()?;
        Ok(Matrix::from_fn(self.theta.top_field(), self.length(), left + t + 1, |i, j| {
            if j < left {
                g_orbits[i][j].clone()
            } else {
                y_orbits[i][j - left].clone()
            }
        }))
    }

    /// Unique decoding by linearized reconstruction: find `(W, N)` with
    /// `deg W <= t`, `deg N < k + t` and `W(y_i) = N(g_i)`, then recover the
    /// message as the right quotient `N = W · f`. A success is only reported
    /// after checking `deg f < k` and that `y - f(g)` has rank at most `t`.
    pub fn decode(&self, y: &Word) -> Result<DecodeOutcome> {
        if y.len() != self.length() {
            return Err(Error::LengthMismatch { expected: self.length(), actual: y.len() });
        }
        let t = self.radius();
        let split = self.k + t;
        let kernel = self.reconstruction_matrix(y)?.kernel()?;
        if kernel.is_empty() {
            return Ok(DecodeOutcome::failure(DecodeStatus::NoSolution));
        }
        for v in kernel {
            let w_poly = SkewPolynomial::new(&self.theta, v[split..].iter().map(|c| -c).collect());
            if w_poly.is_zero() {
                continue;
            }
            let n_poly = SkewPolynomial::new(&self.theta, v[..split].to_vec());
            let (f, rem) = n_poly.right_div(&w_poly)?;
            if !rem.is_zero() || f.degree().finite().is_some_and(|d| d >= self.k) {
                return Ok(DecodeOutcome::failure(DecodeStatus::TooManyErrors));
            }
            let codeword = Word::new(self.support.entries().iter().map(|g| f.evaluate(g)).collect())?;
            let lifted = Word::new(y.entries().iter().map(|e| self.theta.lift(e)).collect::<Result<_>>()?)?;
            let error = lifted.sub(&codeword)?;
            if k_rank(&self.theta, &error)? > t {
                return Ok(DecodeOutcome::failure(DecodeStatus::TooManyErrors));
            }
            return Ok(DecodeOutcome { status: DecodeStatus::Success, message_poly: Some(f), error: Some(error) });
        }
        Ok(DecodeOutcome::failure(DecodeStatus::NoSolution))
    }

    /// Message coefficients of a decoded polynomial, padded to length k.
    pub fn message_of(&self, f: &SkewPolynomial) -> Vec<FieldElement> {
        (0..self.k).map(|i| f.coeff(i)).collect()
    }

    /// Random nonzero messages, encoded and ranked.
    pub fn singleton_check(&self, trials: usize, seed: u64) -> Result<SingletonReport> {
        assert!(trials >= 1, "at least one trial");
        let mut sampler = Sampler::new(seed);
        let tower = self.theta.tower().clone();
        let top = self.theta.top();
        let mut min_rank = usize::MAX;
        let mut max_rank = 0;
        for _ in 0..trials {
            let message = loop {
                let msg: Vec<FieldElement> = (0..self.k).map(|_| sampler.element(&tower, top)).collect();
                if msg.iter().any(|c| !c.is_zero()) {
                    break msg;
                }
            };
            let rank = k_rank(&self.theta, &self.encode(&message)?)?;
            min_rank = min_rank.min(rank);
            max_rank = max_rank.max(rank);
        }
        Ok(SingletonReport { trials, bound: self.min_distance(), min_rank, max_rank })
    }
}
