use super::{modp, ModPoly};
use crate::error::{Error, Result};

/// A power series over F_p known modulo `x^k`; exactly `k` coefficients are
/// stored, including trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix {
    p: u64,
    coeffs: Vec<u64>,
}

impl SeriesPrefix {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u64, k: usize) -> Self {
        Self {
            p,
            coeffs: vec![0; k],
        }
    }

    /// The first `k` coefficients of a polynomial.
    pub fn from_poly(f: &ModPoly, k: usize) -> Self {
        Self {
            p: f.modulus(),
            coeffs: (0..k).map(|i| f.coeff(i)).collect(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> ModPoly {
        ModPoly::new(self.p, self.coeffs.clone())
    }

    pub fn truncate(&self, j: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(j);
        Self { p: self.p, coeffs }
    }

    /// Product modulo `x^len`.
    pub fn mul(&self, other: &Self) -> Self {
        let k = self.len().min(other.len());
        let prod = self.to_poly().mul(&other.to_poly());
        Self::from_poly(&prod, k)
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.len().min(other.len());
        Self {
            p: self.p,
            coeffs: (0..k)
                .map(|i| modp::add(self.coeffs[i], other.coeffs[i], self.p))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }
}

/// Inverse of `b` as a power series modulo `(x^k, p)` by Newton iteration,
/// doubling the precision from 1 until it reaches `k`.
pub fn series_inverse(b: &ModPoly, k: usize) -> Result<SeriesPrefix> {
    let p = b.modulus();
    let b0 = b.coeff(0);
    let inv0 = modp::inv(b0, p).ok_or(Error::NotInvertible { p })?;
    if k == 0 {
        return Ok(SeriesPrefix::zero(p, 0));
    }
    let mut s = ModPoly::constant(p, inv0);
    let mut prec = 1;
    while prec < k {
        prec = (2 * prec).min(k);
        // s <- s * (2 - b*s) mod x^prec
        let bs = b.truncate(prec).mul(&s).truncate(prec);
        let two_minus = ModPoly::constant(p, 2 % p).sub(&bs);
        s = s.mul(&two_minus).truncate(prec);
    }
    Ok(SeriesPrefix::from_poly(&s, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_examples() {
        let s = series_inverse(&ModPoly::from_i64s(7, &[1, -1]), 4).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 1, 1]);
        let s = series_inverse(&ModPoly::from_i64s(7, &[1, -1, -1]), 5).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 2, 3, 5]);
        assert_eq!(series_inverse(&ModPoly::x(7), 3), Err(Error::NotInvertible { p: 7 }));
    }

    proptest! {
        #[test]
        fn inverse_is_consistent(c in proptest::collection::vec(0u64..101, 1..8), k in 1usize..40, j in 1usize..40) {
            let b = ModPoly::new(101, c);
            prop_assume!(b.coeff(0) != 0);
            let s = series_inverse(&b, k).unwrap();
            prop_assert_eq!(s.len(), k);
            let prod = SeriesPrefix::from_poly(&b, k).mul(&s);
            prop_assert_eq!(prod, SeriesPrefix::from_poly(&ModPoly::one(101), k));
            let j = j.min(k);
            prop_assert_eq!(s.truncate(j), series_inverse(&b, j).unwrap());
        }
    }
}
