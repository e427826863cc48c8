//! Explicit Hermite-Padé approximants to `(1-z)^((i-1) alpha)`,
//! `i = 1..2M+1`, verified exactly over Q(alpha) with `alpha` an indeterminate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::RatPoly;
use crate::error::{Error, Result};

/// Largest `sigma` accepted by [`hp_verify`].
pub const SIGMA_LIMIT: u64 = 40;

/// An element `num / den` of Q(alpha), kept reduced with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaRat {
    num: RatPoly,
    den: RatPoly,
}

impl AlphaRat {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lc = den.leading().unwrap().clone();
        Ok(Self { num: num.scale(&lc.recip()), den: den.monic() })
    }

    pub fn from_poly(p: RatPoly) -> Self {
        Self { num: p, den: RatPoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(RatPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(RatPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(RatPoly::one())
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a rational constant, if it does not depend on alpha.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).unwrap()
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.num.scale(k), self.den.clone()).unwrap()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    /// Value at `alpha = x`; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl fmt::Display for AlphaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string().replace('x', "a");
        if self.den.degree() == Some(0) {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", self.den.to_string().replace('x', "a"))
        }
    }
}

/// `binom(k alpha + s, r) = (k alpha + s)(k alpha + s - 1)...(k alpha + s - r + 1) / r!`.
pub fn binom_alpha(k: i64, s: i64, r: usize) -> AlphaRat {
    let mut p = RatPoly::one();
    let mut fact = BigInt::one();
    for j in 0..r {
        p = p.mul(&RatPoly::from_i64s(&[s - j as i64, k]));
        fact *= BigInt::from(j + 1);
    }
    AlphaRat::from_poly(p.scale(&BigRational::new(BigInt::one(), fact)))
}

fn binom_int(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `p[i-1][h] = binom(N, h) / prod_{j != i} binom((j-i) alpha + N - h - 1, N)`
/// for `i = 1..2M+1`, `h = 0..N`.
pub fn hp_coefficients(m: usize, n: usize) -> Vec<Vec<AlphaRat>> {
    let count = 2 * m + 1;
    (1..=count)
        .map(|i| {
            (0..=n)
                .map(|h| {
                    let mut den = AlphaRat::one();
                    for j in (1..=count).filter(|&j| j != i) {
                        let k = j as i64 - i as i64;
                        den = den.mul(&binom_alpha(k, n as i64 - h as i64 - 1, n));
                    }
                    let top = AlphaRat::constant(BigRational::from_integer(binom_int(n, h)));
                    top.div(&den).expect("nonconstant factors in alpha")
                })
                .collect()
        })
        .collect()
}

/// Coefficients `c[i-1][h]` of the approximants in the basis `(1-z)^h`:
/// `P_i(z) = sum_h c[i-1][h] (1-z)^h` with
/// `c[i-1][h] = (-1)^h p[i-1][h] / prod_{j != i} ((i-j) alpha - N + h)`,
/// `p` as in [`hp_coefficients`]. Read literally, `sum_h p[i-1][h] z^h` is not
/// an approximant; this rescaled form is.
pub fn hp_shifted_coefficients(m: usize, n: usize) -> Vec<Vec<AlphaRat>> {
    let count = 2 * m + 1;
    let p = hp_coefficients(m, n);
    p.into_iter()
        .enumerate()
        .map(|(idx, row)| {
            let i = idx as i64 + 1;
            row.into_iter()
                .enumerate()
                .map(|(h, ph)| {
                    let mut den = RatPoly::one();
                    for j in (1..=count as i64).filter(|&j| j != i) {
                        den = den.mul(&RatPoly::from_i64s(&[h as i64 - n as i64, i - j]));
                    }
                    let c = ph.div(&AlphaRat::from_poly(den)).expect("nonconstant factors in alpha");
                    if h % 2 == 1 { c.neg() } else { c }
                })
                .collect()
        })
        .collect()
}

/// Approximants as coefficient tables in powers of `z`.
pub fn hp_approximants(m: usize, n: usize) -> Vec<Vec<AlphaRat>> {
    hp_shifted_coefficients(m, n)
        .into_iter()
        .map(|row| {
            let mut out = vec![AlphaRat::zero(); n + 1];
            for (h, c) in row.iter().enumerate() {
                for (t, slot) in out.iter_mut().enumerate().take(h + 1) {
                    let b = BigRational::from_integer(binom_int(h, t));
                    let b = if t % 2 == 1 { -b } else { b };
                    *slot = slot.add(&c.scale(&b));
                }
            }
            out
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPCertificate {
    pub m: usize,
    pub n: usize,
    pub sigma: u64,
    pub approximants: Vec<Vec<AlphaRat>>,
    /// `N!^(2M+1) / sigma!`.
    pub lead: BigRational,
}

/// Expand `sum_i P_i(z) (1-z)^((i-1) alpha)` through `z^sigma` and check that
/// it starts with `N!^(2M+1)/sigma! z^sigma`; the same coefficient is then
/// recomputed from the shifted form as
/// `(-1)^sigma sum_{i,h} c[i-1][h] binom((i-1) alpha + h, sigma)`.
pub fn hp_verify(m: usize, n: usize) -> Result<HPCertificate> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("M and N must be positive".into()));
    }
    let count = 2 * m + 1;
    let sigma = (count * n + 2 * m) as u64;
    if sigma > SIGMA_LIMIT {
        return Err(Error::InvalidArgument(format!("sigma = {sigma} exceeds {SIGMA_LIMIT}")));
    }
    let s = sigma as usize;
    let p = hp_approximants(m, n);
    let shifted = hp_shifted_coefficients(m, n);
    let lead = BigRational::new(factorial(n as u64).pow(count as u32), factorial(sigma));

    // series of (1-z)^x: c_0 = 1, c_{k+1} = -c_k (x - k) / (k + 1)
    let mut total = vec![AlphaRat::zero(); s + 1];
    for (idx, row) in p.iter().enumerate() {
        let x = RatPoly::from_i64s(&[0, idx as i64]);
        let mut series = Vec::with_capacity(s + 1);
        let mut c = AlphaRat::one();
        for k in 0..=s {
            series.push(c.clone());
            let factor = x.sub(&RatPoly::from_i64s(&[k as i64]));
            c = c.mul(&AlphaRat::from_poly(factor)).scale(&BigRational::new(
                BigInt::from(-1),
                BigInt::from(k + 1),
            ));
        }
        for (h, ph) in row.iter().enumerate() {
            for k in 0..=s - h.min(s) {
                if h + k > s {
                    break;
                }
                total[h + k] = total[h + k].add(&ph.mul(&series[k]));
            }
        }
    }
    for (k, c) in total.iter().enumerate().take(s) {
        if !c.is_zero() {
            return Err(Error::IdentityViolation(format!("coefficient of z^{k} is {c}, not 0")));
        }
    }
    if total[s].as_constant().as_ref() != Some(&lead) {
        return Err(Error::IdentityViolation(format!(
            "coefficient of z^{sigma} is {}, expected {lead}",
            total[s]
        )));
    }

    let mut direct = AlphaRat::zero();
    let degree_cap = 2 * m * n + s;
    for (idx, row) in shifted.iter().enumerate() {
        for (h, ch) in row.iter().enumerate() {
            let term = ch.mul(&binom_alpha(idx as i64, h as i64, s));
            let deg = term.num().degree().unwrap_or(0);
            if deg > degree_cap {
                return Err(Error::IdentityViolation(format!(
                    "term (i={}, h={h}) has numerator alpha-degree {deg} > {degree_cap}",
                    idx + 1
                )));
            }
            direct = direct.add(&if s % 2 == 1 { term.neg() } else { term });
        }
    }
    if direct.as_constant().as_ref() != Some(&lead) {
        return Err(Error::IdentityViolation(format!(
            "double sum for the leading coefficient is {direct}, expected {lead}"
        )));
    }

    Ok(HPCertificate { m, n, sigma, approximants: p, lead })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn binom_alpha_examples() {
        assert_eq!(binom_alpha(1, 0, 0), AlphaRat::one());
        assert_eq!(binom_alpha(1, 0, 2), AlphaRat::from_poly(RatPoly::from_fracs(&[(0, 1), (-1, 2), (1, 2)])));
        assert_eq!(binom_alpha(2, 1, 1), AlphaRat::from_poly(RatPoly::from_i64s(&[1, 2])));
    }

    #[test]
    fn coefficient_table_entries() {
        let p = hp_coefficients(1, 1);
        assert_eq!(p.len(), 3);
        assert!(p.iter().all(|row| row.len() == 2));
        // 1 / ((a - 1)(2a - 1))
        let expected = AlphaRat::new(RatPoly::one(), RatPoly::from_i64s(&[1, -3, 2])).unwrap();
        assert_eq!(p[0][1], expected);
        // -1 / a^2
        let expected = AlphaRat::new(RatPoly::from_i64s(&[-1]), RatPoly::from_i64s(&[0, 0, 1])).unwrap();
        assert_eq!(p[1][0], expected);
        for row in hp_coefficients(2, 3) {
            // binom(N, 0) = 1 on top: the numerator is a constant
            assert_eq!(row[0].num().degree(), Some(0));
        }
    }

    #[test]
    fn certificates() {
        for (m, n, sigma, lead) in [
            (1, 1, 5, q(1, 120)),
            (1, 2, 8, q(1, 5040)),
            (1, 3, 11, q(1, 184_800)),
            (2, 1, 9, q(1, 362_880)),
        ] {
            let cert = hp_verify(m, n).unwrap();
            assert_eq!(cert.sigma, sigma);
            assert_eq!(cert.lead, lead);
        }
    }

    #[test]
    fn approximants_for_one_one() {
        let p = hp_approximants(1, 1);
        // P_2 = z / (a^2 (a^2 - 1))
        assert!(p[1][0].is_zero());
        let expected = AlphaRat::new(RatPoly::one(), RatPoly::from_i64s(&[0, 0, -1, 0, 1])).unwrap();
        assert_eq!(p[1][1], expected);
        // P_1(0) = -3 / (a (a^2 - 1)(4a^2 - 1))
        let den = RatPoly::from_i64s(&[0, 1, 0, -5, 0, 4]);
        assert_eq!(p[0][0], AlphaRat::new(RatPoly::from_i64s(&[-3]), den.clone()).unwrap());
        assert_eq!(p[2][0], AlphaRat::new(RatPoly::from_i64s(&[3]), den).unwrap());
    }

    #[test]
    fn unshifted_table_is_not_an_approximant() {
        let p = hp_coefficients(1, 1);
        // coefficient of z^1: sum_i p_{i,1} - (i-1) a p_{i,0}
        let z1 = p.iter().enumerate().fold(AlphaRat::zero(), |acc, (idx, row)| {
            let shift = AlphaRat::from_poly(RatPoly::from_i64s(&[0, idx as i64]));
            acc.add(&row[1]).sub(&shift.mul(&row[0]))
        });
        assert!(!z1.is_zero());
    }

    #[test]
    fn guards() {
        assert!(hp_verify(0, 1).is_err());
        assert!(hp_verify(3, 5).is_err());
    }

    /// Exact identity at a rational alpha, with generalized binomials over Q.
    fn numeric_identity(m: usize, n: usize, alpha: &BigRational) {
        let cert = hp_verify(m, n).unwrap();
        let s = cert.sigma as usize;
        let binom_q = |x: &BigRational, r: usize| {
            let mut acc = BigRational::one();
            for j in 0..r {
                acc = acc * (x - BigRational::from_integer(j.into())) / BigRational::from_integer((j + 1).into());
            }
            acc
        };
        for k in 0..=s {
            let mut sum = BigRational::zero();
            for (idx, row) in cert.approximants.iter().enumerate() {
                let x = alpha * BigRational::from_integer(idx.into());
                for (h, ph) in row.iter().enumerate().filter(|(h, _)| *h <= k) {
                    let v = ph.eval(alpha).expect("alpha avoids the poles");
                    let b = binom_q(&x, k - h);
                    sum += if (k - h) % 2 == 1 { -(v * b) } else { v * b };
                }
            }
            let expected = if k == s { cert.lead.clone() } else { BigRational::zero() };
            assert_eq!(sum, expected, "alpha = {alpha}, k = {k}");
        }
    }

    #[test]
    fn rational_specializations() {
        for alpha in [q(1, 7), q(3, 5)] {
            numeric_identity(1, 1, &alpha);
            numeric_identity(1, 2, &alpha);
            numeric_identity(2, 1, &alpha);
        }
    }

    proptest! {
        #[test]
        fn binomial_product_identity(k in -3i64..4, s in -4i64..5, l in 0usize..7, m in 0usize..7) {
            prop_assume!(m <= l);
            let lhs = binom_alpha(k, s, l).mul(&AlphaRat::constant(BigRational::from_integer(binom_int(l, m))));
            let rhs = binom_alpha(k, s, m).mul(&binom_alpha(k, s - m as i64, l - m));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
