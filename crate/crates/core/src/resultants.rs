//! The Rothstein-Trager resultant `R(w) = res_x(b, a - w b')`, whose roots are
//! the residues of `a / b`, and its leading quantity `Delta = |res(b, b')|`.

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{resultant_formal, IntPoly};
use crate::error::{Error, Result};
use crate::normal_form::discriminant_resultant;

/// `R(w)` together with `Delta = |lc(R)| = |res(b, b')|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RtResultant {
    pub r: IntPoly,
    pub delta: BigInt,
}

/// Compute `R(w) = res_x(b, a - w b')` by evaluating at `w = 0, 1, ..., n`
/// and interpolating.
///
/// `a - w b'` is always given its formal degree `n - 1`, so each sample is the
/// Sylvester determinant even when the top coefficient vanishes at that `w`.
pub fn rothstein_trager(a: &IntPoly, b: &IntPoly) -> Result<RtResultant> {
    let n = b
        .degree()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::InvalidArgument("denominator must be nonconstant".into()))?;
    let db = b.derivative();
    let samples: Vec<BigInt> = (0..=n)
        .into_par_iter()
        .map(|w| {
            let g = a.sub(&db.scale(&BigInt::from(w)));
            resultant_formal(b, &g, n - 1)
        })
        .collect();
    let r = interpolate_consecutive(&samples)?;
    let delta = r.leading().map(|c| c.abs()).unwrap_or_default();
    Ok(RtResultant { r, delta })
}

/// `Delta = |res(b, b')|` without forming `R(w)`.
pub fn delta_of(b: &IntPoly) -> BigInt {
    discriminant_resultant(b)
}

/// Integer polynomial through `(i, values[i])`, `i = 0..len`, via forward
/// differences in the binomial basis. Errors if the result is not integral.
fn interpolate_consecutive(values: &[BigInt]) -> Result<IntPoly> {
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    for k in 0..values.len() {
        leading.push(diffs[0].clone());
        for i in 0..values.len() - k - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // sum_k D_k * w(w-1)...(w-k+1) / k!
    let mut acc = vec![BigRational::zero(); values.len()];
    let mut falling = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for (k, d) in leading.iter().enumerate() {
        if k > 0 {
            factorial *= BigInt::from(k);
            // falling *= (w - (k-1))
            let shift = BigInt::from(k - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        if d.is_zero() {
            continue;
        }
        for (i, c) in falling.iter().enumerate() {
            acc[i] += BigRational::new(c * d, factorial.clone());
        }
    }
    let mut coeffs = Vec::with_capacity(acc.len());
    for c in acc {
        if !c.is_integer() {
            return Err(Error::InterpolationMismatch);
        }
        coeffs.push(c.to_integer());
    }
    Ok(IntPoly::new(coeffs))
}

/// Check every coefficient `r_k` of `R(w)` against the a priori height bound
/// `C(n,k) 6^(-k/2) H^(2n-1) (n+1)^((n+k-1)/2) n^(n/2) (2n+1)^(k/2)`,
/// where `H` bounds the coefficients of `a` and `b`.
///
/// Both sides are squared so the comparison is exact in the integers.
pub fn height_bound_check(r: &IntPoly, n: usize, h: &BigInt) -> bool {
    if r.degree().is_some_and(|d| d > n) {
        return false;
    }
    let nn = BigInt::from(n);
    let h_part = h.pow((2 * (2 * n - 1)) as u32);
    let n_part = nn.pow(n as u32);
    (0..=n).all(|k| {
        let rk = r.coeff(k);
        let lhs = &rk * &rk * BigInt::from(6u32).pow(k as u32);
        let binom = binomial(n, k);
        let rhs = &binom
            * &binom
            * &h_part
            * BigInt::from(n + 1).pow((n + k - 1) as u32)
            * &n_part
            * BigInt::from(2 * n + 1).pow(k as u32);
        lhs <= rhs
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Residues of `a / b` at its poles, for `b` with rational roots given
/// explicitly: `a(beta) / b'(beta)`.
pub fn residue_at(a: &IntPoly, b: &IntPoly, beta: &BigRational) -> BigRational {
    let num = a.eval_rational(beta);
    let den = b.derivative().eval_rational(beta);
    num / den
}
