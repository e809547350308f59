//! Seeded sampling of small random field elements.
//!
//! The generator is ChaCha8 keyed with the little-endian bytes of the `u64`
//! seed followed by 24 zero bytes. Integers in `[lo, hi]` are drawn as
//! `lo + next_u64() % (hi - lo + 1)`, so any implementation of ChaCha8 can
//! reproduce the same streams.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, FieldElement, FieldTower, Matrix};
use crate::error::Result;

/// Default half-width of the integer box for random coordinates.
pub const DEFAULT_BOUND: i64 = 3;

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bound(seed, DEFAULT_BOUND)
    }

    pub fn with_bound(seed: u64, bound: i64) -> Self {
        assert!(bound >= 1, "coefficient bound must be positive");
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        Self { rng: ChaCha8Rng::from_seed(key), bound }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn small_int(&mut self) -> i64 {
        self.int_in(-self.bound, self.bound)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.int_in(0, n as i64 - 1) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// Element of `level` with independent small integer coordinates.
    pub fn element(&mut self, tower: &FieldTower, level: usize) -> FieldElement {
        let coords = (0..tower.abs_degree(level)).map(|_| rat(self.small_int())).collect();
        tower.element(level, coords).expect("coordinate count matches level")
    }

    /// Like [`Sampler::element`] but most coordinates are zero, which keeps
    /// products and inverses small in large towers.
    pub fn sparse_element(&mut self, tower: &FieldTower, level: usize, nonzeros: usize) -> FieldElement {
        let n = tower.abs_degree(level);
        let mut coords = vec![rat(0); n];
        for _ in 0..nonzeros.max(1) {
            let i = self.index(n);
            coords[i] = rat(self.small_int());
        }
        tower.element(level, coords).expect("coordinate count matches level")
    }

    pub fn nonzero_element(&mut self, tower: &FieldTower, level: usize) -> FieldElement {
        loop {
            let e = self.element(tower, level);
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// `count` elements of the top level that are linearly independent over
    /// the level below. Requires `count <= [L : K]`.
    pub fn independent_elements(&mut self, tower: &FieldTower, count: usize) -> Result<Vec<FieldElement>> {
        let top = tower.top();
        let m = tower.degree(top);
        assert!(count <= m, "at most {m} elements can be independent");
        let mut chosen: Vec<FieldElement> = Vec::with_capacity(count);
        while chosen.len() < count {
            let candidate = self.element(tower, top);
            let mut columns: Vec<Vec<FieldElement>> = chosen.iter().map(|e| e.coeffs_below()).collect();
            columns.push(candidate.coeffs_below());
            let rank = Matrix::from_columns(tower.field(top - 1), m, &columns)?.rank()?;
            if rank == columns.len() {
                chosen.push(candidate);
            }
        }
        Ok(chosen)
    }
}
