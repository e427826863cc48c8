//! Normal form `u = c * a / b` of a rational coefficient and the structural
//! preconditions for algebraic solutions.

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{resultant_z, IntPoly, RatPoly};
use crate::error::{Error, Result};

/// `u = c * a / b` with `a`, `b` primitive integer polynomials, coprime over Q,
/// and `lc(b) > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub c: BigRational,
    pub a: IntPoly,
    pub b: IntPoly,
}

/// Structural class of a normal form, checked in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructuralClass {
    Admissible,
    /// `deg a >= deg b`: a polynomial part or a pole at infinity of order > 1.
    DegreeViolation,
    /// `b` has a repeated root.
    NonSquarefree,
}

impl NormalForm {
    pub fn degree(&self) -> usize {
        self.b.degree().unwrap_or(0)
    }

    /// The raw rational function `c * a / b` as a numerator/denominator pair over Q.
    pub fn to_rat_pair(&self) -> (RatPoly, RatPoly) {
        (self.a.to_rat().scale(&self.c), self.b.to_rat())
    }
}

/// Bring `a_raw / b_raw` into normal form.
pub fn normalize(a_raw: &RatPoly, b_raw: &RatPoly) -> Result<NormalForm> {
    if b_raw.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if a_raw.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = a_raw.gcd(b_raw);
    let (a1, _) = a_raw.div_rem(&g)?;
    let (b1, _) = b_raw.div_rem(&g)?;
    let (ca, a) = a1.content_primitive()?;
    let (cb, b) = b1.content_primitive()?;
    Ok(NormalForm { c: ca / cb, a, b })
}

pub fn classify(nf: &NormalForm) -> StructuralClass {
    let deg_a = nf.a.degree();
    let deg_b = nf.b.degree();
    match (deg_a, deg_b) {
        (Some(da), Some(db)) if da >= db => return StructuralClass::DegreeViolation,
        (_, None) => return StructuralClass::DegreeViolation,
        _ => {}
    }
    let b = nf.b.to_rat();
    let g = b.gcd(&b.derivative());
    if g.degree().unwrap_or(0) >= 1 {
        StructuralClass::NonSquarefree
    } else {
        StructuralClass::Admissible
    }
}

/// `|res(b, b')|` for a nonconstant `b`; zero exactly when `b` has a repeated root.
pub fn discriminant_resultant(b: &IntPoly) -> num_bigint::BigInt {
    let r = resultant_z(b, &b.derivative());
    if r < num_bigint::BigInt::zero() {
        -r
    } else {
        r
    }
}
