use std::fmt;

use super::{modp, IntPoly};
use crate::error::{Error, Result};

/// Below this operand length multiplication is schoolbook.
const KARATSUBA_THRESHOLD: usize = 32;

/// Dense polynomial over F_p, `p < 2^62`.
///
/// Residues are kept in `[0, p)` and the top coefficient is nonzero unless the
/// polynomial is zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Build from residues, reducing and trimming.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        trim(&mut coeffs);
        Self { p, coeffs }
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| modp::reduce_i64(c, p)).collect())
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| modp::reduce(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        Self {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    /// The monomial `x`.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            p,
            (0..n)
                .map(|i| modp::add(self.coeff(i), other.coeff(i), p))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            p,
            (0..n)
                .map(|i| modp::sub(self.coeff(i), other.coeff(i), p))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        Self {
            p,
            coeffs: self.coeffs.iter().map(|&c| modp::neg(c, p)).collect(),
        }
    }

    pub fn scale(&self, k: u64) -> Self {
        let p = self.p;
        Self::new(p, self.coeffs.iter().map(|&c| modp::mul(c, k, p)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        Self::new(self.p, mul_slices(&self.coeffs, &other.coeffs, self.p))
    }

    /// Keep only the terms of degree `< k`.
    pub fn truncate(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(k);
        trim(&mut coeffs);
        Self { p: self.p, coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(modp::inv(lc, self.p).expect("leading coefficient is a unit")),
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| modp::mul(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| modp::add(modp::mul(acc, x, p), c, p))
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let p = self.p;
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(ds) = self.degree() else {
            return Ok((Self::zero(p), Self::zero(p)));
        };
        if ds < dd {
            return Ok((Self::zero(p), self.clone()));
        }
        let inv_lc = modp::inv(d.leading().unwrap(), p).ok_or(Error::NotInvertible { p })?;
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let t = modp::mul(r[k + dd], inv_lc, p);
            if t != 0 {
                for (i, &dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = modp::sub(r[k + i], modp::mul(t, dc, p), p);
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        Ok((Self::new(p, q), Self::new(p, r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Inconsistent(
                "inexact polynomial division mod p".into(),
            ))
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Substitute `x -> x + c` (Taylor shift).
    pub fn shift(&self, c: u64) -> Self {
        let p = self.p;
        let c = c % p;
        let mut out = self.coeffs.clone();
        let n = out.len();
        // repeated synthetic division
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                out[j] = modp::add(out[j], modp::mul(c, out[j + 1], p), p);
            }
        }
        Self::new(p, out)
    }

    /// Coefficient reversal `x^deg * f(1/x)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.p, self.coeffs.iter().rev().copied().collect())
    }

    /// Compute `self^e mod f` by square-and-multiply.
    pub fn pow_mod(&self, e: u64, f: &Self) -> Result<Self> {
        quotient_pow(self, e, f)
    }
}

/// `base^e mod (f, p)` by binary powering; the result has degree `< deg f`.
pub fn quotient_pow(base: &ModPoly, e: u64, f: &ModPoly) -> Result<ModPoly> {
    let p = f.p;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut acc = ModPoly::one(p).rem(f)?;
    if e == 0 {
        return Ok(acc);
    }
    let mut b = base.rem(f)?;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(f)?;
        }
        e >>= 1;
        if e > 0 {
            b = b.mul(&b).rem(f)?;
        }
    }
    Ok(acc)
}

/// Monic polynomial with the same roots in the algebraic closure as `r` and
/// no repeated roots.
///
/// When the derivative vanishes the polynomial lies in F_p[w^p]; Frobenius is
/// the identity on F_p, so its p-th root is read off coefficientwise.
pub fn squarefree_part_mod_p(r: &ModPoly) -> Result<ModPoly> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = r.monic();
    if f.degree() == Some(0) {
        return Ok(f);
    }
    let d = f.derivative();
    if d.is_zero() {
        return squarefree_part_mod_p(&pth_root(&f));
    }
    let g = f.gcd(&d);
    let w = f.div_exact(&g)?;
    let mut z = g;
    loop {
        let y = z.gcd(&w);
        if y.degree() == Some(0) {
            break;
        }
        z = z.div_exact(&y)?;
    }
    if z.degree() == Some(0) {
        return Ok(w);
    }
    Ok(w.mul(&squarefree_part_mod_p(&z)?))
}

fn pth_root(f: &ModPoly) -> ModPoly {
    let p = f.p as usize;
    ModPoly::new(f.p, f.coeffs.iter().step_by(p).copied().collect())
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mul_slices(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() < KARATSUBA_THRESHOLD || b.len() < KARATSUBA_THRESHOLD {
        return schoolbook(a, b, p);
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = mul_slices(a0, b0, p);
    let z2 = mul_slices(a1, b1, p);
    let sa = add_slices(a0, a1, p);
    let sb = add_slices(b0, b1, p);
    let mut z1 = mul_slices(&sa, &sb, p);
    sub_into(&mut z1, &z0, p);
    sub_into(&mut z1, &z2, p);
    let mut out = vec![0u64; a.len() + b.len() - 1];
    add_into(&mut out, &z0, 0, p);
    add_into(&mut out, &z1, half, p);
    add_into(&mut out, &z2, 2 * half, p);
    out
}

fn schoolbook(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    // accumulate in u128 and reduce lazily; each product is < 2^124
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    let pp = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = acc[i + j] + x as u128 * y as u128;
            acc[i + j] = if t >= pp * pp { t - pp * pp } else { t };
        }
    }
    acc.into_iter().map(|t| (t % pp) as u64).collect()
}

fn add_slices(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            modp::add(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
                p,
            )
        })
        .collect()
}

fn sub_into(dst: &mut Vec<u64>, src: &[u64], p: u64) {
    if dst.len() < src.len() {
        dst.resize(src.len(), 0);
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = modp::sub(*d, s, p);
    }
}

fn add_into(dst: &mut [u64], src: &[u64], offset: usize, p: u64) {
    for (i, &s) in src.iter().enumerate() {
        if s != 0 {
            dst[offset + i] = modp::add(dst[offset + i], s, p);
        }
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_terms(f, self.coeffs.iter().map(|c| c.to_string()).collect(), "x")?;
        write!(f, " (mod {})", self.p)
    }
}
