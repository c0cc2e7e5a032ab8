//! Deterministic pseudo-randomness for the acceptance suite. A fixed-seed
//! generator keeps every report byte-identical across runs and platforms.

use triplekit::exactla::{Matrix, Scalar};

pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// A small integer in `[-bound, bound]`.
    pub fn small_int(&mut self, bound: i64) -> i64 {
        (self.below((2 * bound + 1) as u64) as i64) - bound
    }

    /// A small rational with numerator in `[-3, 3]` and denominator in `{1,2,3}`.
    pub fn small_rational(&mut self) -> Scalar {
        let p = self.small_int(3);
        let q = 1 + self.below(3) as i64;
        Scalar::ratio(p, q)
    }

    pub fn int_matrix(&mut self, rows: usize, cols: usize, bound: i64) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                *m.at_mut(r, c) = Scalar::from_int(self.small_int(bound));
            }
        }
        m
    }

    /// A random rational combination of the given vectors.
    pub fn combination(&mut self, basis: &[Vec<Scalar>], len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for v in basis {
            let c = self.small_rational();
            if c.is_zero() {
                continue;
            }
            for (dst, src) in out.iter_mut().zip(v) {
                *dst += &(src * &c);
            }
        }
        out
    }
}
