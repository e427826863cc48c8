//! p-curvature of `y' = (a/b) y`: the rational function `u^p + u^(p-1)` over
//! F_p, tested for nullity from `2n` Taylor coefficients of its p-th root.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{fmt_terms, modp};
use crate::arith::{quotient_pow, series_inverse, IntPoly, ModPoly, SeriesPrefix};
use crate::error::{Error, Result};
use crate::normal_form::discriminant_resultant;

/// The first `2 n_bar` Taylor coefficients, at `x = shift`, of `psi^(1/p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PCurvPrefix {
    pub p: u64,
    pub shift: u64,
    pub n_bar: usize,
    pub coeffs: SeriesPrefix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PCurvOutcome {
    Zero,
    NonZero { first_nonzero_index: usize },
    BadPrime,
}

impl PCurvOutcome {
    pub fn is_zero(&self) -> bool {
        matches!(self, PCurvOutcome::Zero)
    }
}

/// A rational function `num / den` over F_p in lowest terms, `den` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModRational {
    pub num: ModPoly,
    pub den: ModPoly,
}

impl ModRational {
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for ModRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = |p: &ModPoly| p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
        let p = self.den.modulus();
        if self.den.is_one() {
            fmt_terms(f, terms(&self.num), "x")?;
        } else {
            write!(f, "(")?;
            fmt_terms(f, terms(&self.num), "x")?;
            write!(f, ")/(")?;
            fmt_terms(f, terms(&self.den), "x")?;
            write!(f, ")")?;
        }
        write!(f, " (mod {p})")
    }
}

/// Prefix and nullity of the p-curvature. Computes `Delta` to detect bad primes;
/// use [`curvature_prefix_with_delta`] when it is already known.
pub fn curvature_prefix(a: &IntPoly, b: &IntPoly, p: u64) -> Result<(PCurvPrefix, PCurvOutcome)> {
    curvature_prefix_with_delta(a, b, p, &discriminant_resultant(b))
}

pub fn curvature_prefix_with_delta(
    a: &IntPoly,
    b: &IntPoly,
    p: u64,
    delta: &BigInt,
) -> Result<(PCurvPrefix, PCurvOutcome)> {
    modp::check_prime_range(p)?;
    if delta.is_multiple_of(&BigInt::from(p)) {
        let empty = PCurvPrefix { p, shift: 0, n_bar: 0, coeffs: SeriesPrefix::zero(p, 0) };
        return Ok((empty, PCurvOutcome::BadPrime));
    }
    let (a_bar, b_bar) = reduce_pair(a, b, p)?;
    let n_bar = b_bar.degree().unwrap_or(0);
    let shift = ordinary_point(&b_bar).ok_or(Error::NoOrdinaryPoint { p })?;
    let (a_s, b_s) = (a_bar.shift(shift), b_bar.shift(shift));

    let len = 2 * n_bar;
    let w = SeriesPrefix::from_poly(&a_s, len).mul(&series_inverse(&b_s, len)?);
    let f = b_s.reversed();
    let init = SeriesPrefix::new(p, w.coeffs()[..n_bar].to_vec());
    let extracted = fiduccia_extract(&f, &init, p, len)?;
    // u^(p-1) has p-th root -sum u_{ip-1} x^(i-1): the falling factorial
    // (ip-1)...(ip-p+1) is (p-1)! = -1 mod p.
    let coeffs: Vec<u64> = w
        .coeffs()
        .iter()
        .zip(&extracted)
        .map(|(&wi, &ui)| modp::sub(wi, ui, p))
        .collect();
    let coeffs = SeriesPrefix::new(p, coeffs);
    let outcome = match coeffs.first_nonzero() {
        None => PCurvOutcome::Zero,
        Some(i) => PCurvOutcome::NonZero { first_nonzero_index: i },
    };
    Ok((PCurvPrefix { p, shift, n_bar, coeffs }, outcome))
}

/// Nullity of the p-curvature, falling back to [`curvature_naive`] when
/// F_p has no ordinary point. In that case the reported index refers to the
/// lowest nonzero numerator coefficient of the curvature.
pub fn curvature_outcome(a: &IntPoly, b: &IntPoly, p: u64, delta: &BigInt) -> Result<PCurvOutcome> {
    match curvature_prefix_with_delta(a, b, p, delta) {
        Ok((_, outcome)) => Ok(outcome),
        Err(Error::NoOrdinaryPoint { .. }) => {
            let psi = curvature_naive(a, b, p)?;
            Ok(match psi.num.coeffs().iter().position(|&c| c != 0) {
                None => PCurvOutcome::Zero,
                Some(i) => PCurvOutcome::NonZero { first_nonzero_index: i },
            })
        }
        Err(e) => Err(e),
    }
}

/// `a mod p`, `b mod p`, divided by their gcd.
fn reduce_pair(a: &IntPoly, b: &IntPoly, p: u64) -> Result<(ModPoly, ModPoly)> {
    let a_bar = ModPoly::from_int_poly(a, p);
    let b_bar = ModPoly::from_int_poly(b, p);
    if b_bar.is_zero() {
        return Err(Error::DegenerateDenominator { p });
    }
    let g = a_bar.gcd(&b_bar);
    if g.is_zero() || g.is_one() {
        return Ok((a_bar, b_bar));
    }
    Ok((a_bar.div_exact(&g)?, b_bar.div_exact(&g)?))
}

/// Least `c` in F_p with `b(c) != 0`.
fn ordinary_point(b: &ModPoly) -> Option<u64> {
    (0..b.modulus()).find(|&c| b.eval(c) != 0)
}

/// `u_{p-1}, u_{2p-1}, ..., u_{mp-1}` for the sequence with characteristic
/// polynomial `f` and initial terms `init` (`init.len() == deg f`).
pub fn fiduccia_extract(f: &ModPoly, init: &SeriesPrefix, p: u64, m: usize) -> Result<Vec<u64>> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if init.len() != d {
        return Err(Error::InvalidArgument(format!(
            "{} initial terms for a recurrence of order {d}",
            init.len()
        )));
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let x = ModPoly::x(p);
    let mut cur = quotient_pow(&x, p - 1, f)?;
    let step = cur.mul(&x).rem(f)?;
    let combine = |phi: &ModPoly| {
        phi.coeffs()
            .iter()
            .zip(init.coeffs())
            .fold(0u64, |acc, (&c, &u)| modp::add(acc, modp::mul(c, u, p), p))
    };
    let mut out = Vec::with_capacity(m);
    out.push(combine(&cur));
    for _ in 1..m {
        cur = cur.mul(&step).rem(f)?;
        out.push(combine(&cur));
    }
    Ok(out)
}

/// `u^p + u^(p-1)` for `u = a/b` over F_p, by `p - 1` quotient-rule
/// derivatives and `u(x)^p = a(x^p)/b(x^p)`.
pub fn curvature_naive(a: &IntPoly, b: &IntPoly, p: u64) -> Result<ModRational> {
    modp::check_prime_range(p)?;
    let (a_bar, b_bar) = reduce_pair(a, b, p)?;
    let db = b_bar.derivative();
    // u^(k) = num / b^(k+1)
    let mut num = a_bar.clone();
    for k in 1..p {
        let m = modp::reduce_i64(k as i64, p);
        num = num.derivative().mul(&b_bar).sub(&num.mul(&db).scale(m));
    }
    let frob = |f: &ModPoly| {
        let mut c = vec![0u64; f.coeffs().len().saturating_sub(1) * p as usize + 1];
        for (i, &v) in f.coeffs().iter().enumerate() {
            c[i * p as usize] = v;
        }
        ModPoly::new(p, c)
    };
    let den = frob(&b_bar);
    let total = frob(&a_bar).add(&num);
    Ok(lowest_terms(total, den))
}

fn lowest_terms(num: ModPoly, den: ModPoly) -> ModRational {
    let p = den.modulus();
    if num.is_zero() {
        return ModRational { num, den: ModPoly::one(p) };
    }
    let g = num.gcd(&den);
    let (num, den) = (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap());
    let lc = den.leading().unwrap();
    let inv = modp::inv(lc, p).unwrap();
    ModRational { num: num.scale(inv), den: den.scale(inv) }
}
