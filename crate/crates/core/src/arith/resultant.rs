use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::IntPoly;

/// Resultant of two integer polynomials, equal to the determinant of their
/// Sylvester matrix (rows of `f` first).
///
/// Computed with the subresultant pseudo-remainder sequence, which keeps all
/// intermediate quantities integral. `res(f, c) = c^deg f` for a constant `c`,
/// and the resultant of two constants is 1.
pub fn resultant_z(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    if dg == 0 {
        return g.coeff(0).pow(df as u32);
    }
    if df == 0 {
        return f.coeff(0).pow(dg as u32);
    }

    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign_negative = false;
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        sign_negative = df % 2 == 1 && dg % 2 == 1;
    }
    let ca = a.content();
    let cb = b.content();
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);
    let t = ca.pow(deg(&b) as u32) * cb.pow(deg(&a) as u32);

    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = deg(&a);
        let db = deg(&b);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        let divisor = &gg * h.clone().pow(delta as u32);
        b = r.div_scalar_exact(&divisor);
        gg = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => {
                let num = gg.clone().pow(delta as u32);
                let den = h.pow((delta - 1) as u32);
                debug_assert!(num.is_multiple_of(&den));
                num / den
            }
        };
        if deg(&b) == 0 {
            break;
        }
    }
    let da = deg(&a);
    let lb = b.leading().unwrap().clone();
    let h = if da == 1 {
        lb
    } else {
        let num = lb.pow(da as u32);
        let den = h.pow((da - 1) as u32);
        debug_assert!(num.is_multiple_of(&den));
        num / den
    };
    let res = t * h;
    if sign_negative {
        -res
    } else {
        res
    }
}

/// Sylvester resultant where `g` is treated as having formal degree
/// `formal_deg_g >= deg g`; leading zero rows contribute `lc(f)^(formal - deg g)`.
pub fn resultant_formal(f: &IntPoly, g: &IntPoly, formal_deg_g: usize) -> BigInt {
    let Some(dg) = g.degree() else {
        return BigInt::zero();
    };
    debug_assert!(formal_deg_g >= dg);
    let lc = f.leading().cloned().unwrap_or_default();
    lc.pow((formal_deg_g - dg) as u32) * resultant_z(f, g)
}

fn deg(f: &IntPoly) -> usize {
    f.degree().expect("nonzero polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    /// Sylvester determinant by fraction-based Gaussian elimination.
    fn sylvester_det(f: &IntPoly, g: &IntPoly) -> BigInt {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(size);
        for i in 0..n {
            let mut row = vec![BigRational::zero(); size];
            for (j, c) in f.coeffs().iter().rev().enumerate() {
                row[i + j] = BigRational::from_integer(c.clone());
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![BigRational::zero(); size];
            for (j, c) in g.coeffs().iter().rev().enumerate() {
                row[i + j] = BigRational::from_integer(c.clone());
            }
            rows.push(row);
        }
        let mut det = BigRational::one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
                return BigInt::zero();
            };
            if piv != col {
                rows.swap(piv, col);
                det = -det;
            }
            let pv = rows[col][col].clone();
            det *= &pv;
            for r in col + 1..size {
                let factor = &rows[r][col] / &pv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..size {
                    let t = &factor * &rows[col][c];
                    rows[r][c] -= t;
                }
            }
        }
        det.to_integer()
    }

    #[test]
    fn examples() {
        let r = resultant_z(&IntPoly::from_i64s(&[-1, 1, 2]), &IntPoly::from_i64s(&[1, 4]));
        assert_eq!(r.magnitude(), BigInt::from(18).magnitude());
        let r = resultant_z(&IntPoly::from_i64s(&[-4, 0, 1]), &IntPoly::from_i64s(&[0, 2]));
        assert_eq!(r.magnitude(), BigInt::from(16).magnitude());
        assert_eq!(resultant_z(&IntPoly::from_i64s(&[3, 1, 7]), &IntPoly::one()), BigInt::one());
        assert_eq!(resultant_z(&IntPoly::from_i64s(&[3, 1, 7]), &IntPoly::from_i64s(&[2])), BigInt::from(4));
    }

    #[test]
    fn sign_matches_sylvester() {
        let f = IntPoly::from_i64s(&[-1, 1, 2]);
        let g = IntPoly::from_i64s(&[1, 4]);
        assert_eq!(resultant_z(&f, &g), sylvester_det(&f, &g));
        assert_eq!(resultant_z(&g, &f), sylvester_det(&g, &f));
    }

    #[test]
    fn formal_degree_correction() {
        // g = 3 viewed with formal degree 1: Sylvester matrix has a zero column lead
        let f = IntPoly::from_i64s(&[-1, 1, 2]);
        let g = IntPoly::from_i64s(&[3]);
        assert_eq!(resultant_formal(&f, &g, 1), BigInt::from(2 * 9));
    }

    fn poly_strategy(max_deg: usize, bits: u32) -> impl Strategy<Value = IntPoly> {
        let h = 1i64 << bits;
        proptest::collection::vec(-h..=h, 2..=max_deg + 1).prop_map(|mut v| {
            if *v.last().unwrap() == 0 {
                *v.last_mut().unwrap() = 1;
            }
            IntPoly::from_i64s(&v)
        })
    }

    proptest! {
        #[test]
        fn matches_sylvester_determinant(f in poly_strategy(8, 16), g in poly_strategy(8, 16)) {
            prop_assert_eq!(resultant_z(&f, &g), sylvester_det(&f, &g));
        }

        #[test]
        fn vanishes_iff_common_factor(
            f in poly_strategy(5, 4),
            g in poly_strategy(5, 4),
            h in poly_strategy(2, 3),
            shared in any::<bool>(),
        ) {
            let (f, g) = if shared { (f.mul(&h), g.mul(&h)) } else { (f, g) };
            let gcd_deg = f.to_rat().gcd(&g.to_rat()).degree().unwrap_or(0);
            prop_assert_eq!(resultant_z(&f, &g).is_zero(), gcd_deg >= 1);
        }
    }
}
