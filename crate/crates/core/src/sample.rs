//! Seeded random inputs for tests and benchmarks.
//!
//! The generator is PCG-64 MCG: a 128-bit multiplicative congruential state
//! with an xor-shift and rotate output, seeded by a single `u64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{RngExt, SeedableRng};
use rand_pcg::Pcg64Mcg;

use crate::arith::{IntPoly, RatPoly};

pub struct Sampler {
    rng: Pcg64Mcg,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: Pcg64Mcg::seed_from_u64(seed) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.random_range(0..n)
    }

    pub fn flip(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    /// Coefficients uniform in `[-2^bits, 2^bits]`, exact degree `deg`.
    pub fn poly(&mut self, deg: usize, bits: u32) -> IntPoly {
        let h = 1i64 << bits;
        loop {
            let c: Vec<BigInt> = (0..=deg).map(|_| BigInt::from(self.int(-h, h))).collect();
            let p = IntPoly::new(c);
            if p.degree() == Some(deg) {
                return p;
            }
        }
    }

    /// Numerator of degree `n - 1` and denominator of degree `n`, coprime
    /// over Q with a squarefree denominator.
    pub fn admissible(&mut self, n: usize, bits: u32) -> (IntPoly, IntPoly) {
        assert!(n >= 1);
        loop {
            let a = self.poly(n - 1, bits);
            let b = self.poly(n, bits);
            let (ar, br) = (a.to_rat(), b.to_rat());
            if ar.gcd(&br).degree() != Some(0) {
                continue;
            }
            if br.gcd(&br.derivative()).degree() != Some(0) {
                continue;
            }
            return (a, b);
        }
    }

    /// Product of `k` factors `q x - p` with `1 <= q <= 2^bits`, `|p| <= 2^bits`.
    pub fn linear_product(&mut self, k: usize, bits: u32) -> IntPoly {
        let h = 1i64 << bits;
        (0..k).fold(IntPoly::one(), |acc, _| {
            let q = self.int(1, h);
            let p = self.int(-h, h);
            acc.mul(&IntPoly::from_i64s(&[-p, q]))
        })
    }

    /// `u = sum_i r_i / (x - beta_i)` for `n` distinct integers `|beta_i| <= 2^bits`
    /// and nonzero residues `r_i = s/t` with `|s|, t <= 2^res_bits`. Returns the
    /// combined numerator and denominator together with the residues, sorted.
    pub fn with_rational_residues(
        &mut self,
        n: usize,
        bits: u32,
        res_bits: u32,
    ) -> (RatPoly, RatPoly, Vec<BigRational>) {
        assert!(n >= 1 && (n as u64) <= (2u64 << bits));
        let h = 1i64 << bits;
        let rh = 1i64 << res_bits;
        let mut betas: Vec<i64> = Vec::with_capacity(n);
        while betas.len() < n {
            let b = self.int(-h, h);
            if !betas.contains(&b) {
                betas.push(b);
            }
        }
        let residues: Vec<BigRational> = (0..n)
            .map(|_| loop {
                let r = BigRational::new(self.int(-rh, rh).into(), self.int(1, rh).into());
                if !r.is_zero() {
                    break r;
                }
            })
            .collect();
        let linear = |b: i64| RatPoly::from_i64s(&[-b, 1]);
        let den = betas.iter().fold(RatPoly::one(), |acc, &b| acc.mul(&linear(b)));
        let mut num = RatPoly::zero();
        for (i, r) in residues.iter().enumerate() {
            let others = betas
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(RatPoly::one(), |acc, (_, &b)| acc.mul(&linear(b)));
            num = num.add(&others.scale(r));
        }
        let mut sorted = residues;
        sorted.sort();
        (num, den, sorted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let mut s1 = Sampler::new(42);
        let mut s2 = Sampler::new(42);
        for _ in 0..5 {
            assert_eq!(s1.admissible(4, 10), s2.admissible(4, 10));
        }
    }

    #[test]
    fn admissible_shape() {
        let mut s = Sampler::new(7);
        for n in 1..6 {
            let (a, b) = s.admissible(n, 3);
            assert_eq!(a.degree(), Some(n - 1));
            assert_eq!(b.degree(), Some(n));
            assert!(a.height() <= BigInt::from(8));
        }
    }

    #[test]
    fn residue_sum_matches_top_coefficients() {
        let mut s = Sampler::new(3);
        for _ in 0..10 {
            let (num, den, residues) = s.with_rational_residues(3, 3, 3);
            assert_eq!(den.degree(), Some(3));
            let total: BigRational = residues.iter().sum();
            assert_eq!(total, num.coeff(2) / den.coeff(3));
        }
    }

    #[test]
    fn linear_products_have_full_degree() {
        let mut s = Sampler::new(5);
        for k in 0..5 {
            assert_eq!(s.linear_product(k, 4).degree(), Some(k));
        }
    }
}
