use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `mantissa * 2^exponent`.
///
/// Arithmetic is exact; precision is only reduced through the explicit
/// directed roundings [`Dyadic::round_up`] and [`Dyadic::round_down`].
#[derive(Clone, Debug)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        let mut d = Self { mantissa, exponent };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Self {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn from_int(n: BigInt) -> Self {
        Self::new(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_int(BigInt::from(n))
    }

    pub fn pow2(e: i64) -> Self {
        Self::new(BigInt::one(), e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz;
            self.exponent += tz as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    /// `floor(log2 |x|)`; `None` for zero.
    pub fn floor_log2(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.mantissa.bits() as i64 - 1 + self.exponent)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        Self::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.mantissa * &other.mantissa,
            self.exponent + other.exponent,
        )
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self::new(&self.mantissa * k, self.exponent)
    }

    /// Smallest value `>= self` with at most `bits` significant bits.
    pub fn round_up(&self, bits: u64) -> Self {
        self.round(bits, true)
    }

    /// Largest value `<= self` with at most `bits` significant bits.
    pub fn round_down(&self, bits: u64) -> Self {
        self.round(bits, false)
    }

    fn round(&self, bits: u64, up: bool) -> Self {
        let len = self.mantissa.bits();
        if len <= bits {
            return self.clone();
        }
        let drop = len - bits;
        // floor division by 2^drop (arithmetic shift floors for negatives)
        let floor = &self.mantissa >> drop as usize;
        let exact = (&floor << drop as usize) == self.mantissa;
        let m = if up && !exact { floor + 1 } else { floor };
        Self::new(m, self.exponent + drop as i64)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as usize,
            )
        }
    }

    /// Smallest dyadic with `frac_bits` fractional bits that is `>= q`.
    pub fn from_rational_up(q: &BigRational, frac_bits: u64) -> Self {
        let scaled = q * BigRational::from_integer(BigInt::one() << frac_bits as usize);
        Self::new(scaled.ceil().to_integer(), -(frac_bits as i64))
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        if self.exponent >= 0 {
            &self.mantissa << self.exponent as usize
        } else {
            let d = BigInt::one() << (-self.exponent) as usize;
            self.mantissa.div_ceil(&d)
        }
    }

    /// An upper bound on `sqrt(self)` for `self >= 0`, with about `bits`
    /// significant bits.
    pub fn sqrt_up(&self, bits: u64) -> Self {
        assert!(!self.is_negative(), "sqrt of a negative dyadic");
        if self.is_zero() {
            return Self::zero();
        }
        // make the exponent even and the mantissa wide enough
        let mut m = self.mantissa.clone();
        let mut e = self.exponent;
        let want = 2 * bits + 2;
        let have = m.bits();
        if have < want {
            let s = want - have;
            m <<= s as usize;
            e -= s as i64;
        }
        if e.rem_euclid(2) == 1 {
            m <<= 1;
            e -= 1;
        }
        let r = m.sqrt();
        let r = if &r * &r == m { r } else { r + 1 };
        Self::new(r, e / 2)
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = &self.mantissa >> shift as usize;
        let m: f64 = m.to_string().parse().unwrap_or(f64::NAN);
        m * 2f64.powi((self.exponent + shift) as i32)
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.sub(other);
        match diff.mantissa.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_f64();
        if v.is_finite() && v.abs() < 1e15 && v.abs() > 1e-9 || v == 0.0 {
            write!(f, "{v}")
        } else {
            write!(f, "{}*2^{}", self.mantissa, self.exponent)
        }
    }
}

/// A closed interval `[lo, hi]` with dyadic endpoints; every operation widens
/// outward so the true value stays enclosed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn point(x: Dyadic) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn add(&self, other: &Self, bits: u64) -> Self {
        Self {
            lo: self.lo.add(&other.lo).round_down(bits),
            hi: self.hi.add(&other.hi).round_up(bits),
        }
    }

    pub fn sub(&self, other: &Self, bits: u64) -> Self {
        Self {
            lo: self.lo.sub(&other.hi).round_down(bits),
            hi: self.hi.sub(&other.lo).round_up(bits),
        }
    }

    pub fn mul(&self, other: &Self, bits: u64) -> Self {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = products.iter().min().unwrap().round_down(bits);
        let hi = products.iter().max().unwrap().round_up(bits);
        Self { lo, hi }
    }

    pub fn square(&self, bits: u64) -> Self {
        let a = self.lo.mul(&self.lo);
        let b = self.hi.mul(&self.hi);
        let (mn, mx) = if a <= b { (a, b) } else { (b, a) };
        if self.lo.is_negative() && !self.hi.is_negative() {
            Self {
                lo: Dyadic::zero(),
                hi: mx.round_up(bits),
            }
        } else {
            Self {
                lo: mn.round_down(bits),
                hi: mx.round_up(bits),
            }
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn scale_pow2(&self, e: i64) -> Self {
        let s = Dyadic::pow2(e);
        Self {
            lo: self.lo.mul(&s),
            hi: self.hi.mul(&s),
        }
    }

    /// Upper bound on `|x|` over the interval.
    pub fn mag_upper(&self) -> Dyadic {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    /// Lower bound on `|x|` over the interval (0 if it straddles zero).
    pub fn mag_lower(&self) -> Dyadic {
        if self.lo.is_negative() && !self.hi.is_negative() {
            Dyadic::zero()
        } else {
            let a = self.lo.abs();
            let b = self.hi.abs();
            if a < b {
                a
            } else {
                b
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_is_directed() {
        let x = Dyadic::from_i64(1023);
        assert_eq!(x.round_up(4), Dyadic::from_i64(1024));
        assert_eq!(x.round_down(4), Dyadic::from_i64(960));
        let y = Dyadic::from_i64(-1023);
        assert_eq!(y.round_up(4), Dyadic::from_i64(-960));
        assert_eq!(y.round_down(4), Dyadic::from_i64(-1024));
    }

    #[test]
    fn ceil_and_rational() {
        let x = Dyadic::new(BigInt::from(5), -1);
        assert_eq!(x.ceil(), BigInt::from(3));
        assert_eq!(x.to_rational(), BigRational::new(5.into(), 2.into()));
        assert_eq!(Dyadic::new(BigInt::from(-5), -1).ceil(), BigInt::from(-2));
        let q = BigRational::new(1.into(), 3.into());
        let d = Dyadic::from_rational_up(&q, 10);
        assert!(d.to_rational() >= q);
        assert!(d.to_rational() - q < BigRational::new(1.into(), 1024.into()));
    }

    #[test]
    fn sqrt_up_bounds_the_root() {
        let two = Dyadic::from_i64(2);
        let r = two.sqrt_up(64);
        assert!(r.mul(&r) >= two);
        assert!(r.to_f64() - std::f64::consts::SQRT_2 < 1e-15);
        assert_eq!(Dyadic::from_i64(16).sqrt_up(8), Dyadic::from_i64(4));
        let small = Dyadic::new(BigInt::one(), -7);
        let r = small.sqrt_up(40);
        assert!(r.mul(&r) >= small);
    }

    #[test]
    fn interval_square_straddling_zero() {
        let iv = Interval {
            lo: Dyadic::from_i64(-2),
            hi: Dyadic::from_i64(3),
        };
        let sq = iv.square(64);
        assert_eq!(sq.lo, Dyadic::zero());
        assert_eq!(sq.hi, Dyadic::from_i64(9));
    }
}
