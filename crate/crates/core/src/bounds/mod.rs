//! Certified upper bounds for the prime bound `sigma = (2M+1)N + 2M`:
//! a root radius bound `B` for `R(w)` and `delta(Delta)^3`.

mod dyadic;

pub use dyadic::{Dyadic, Interval};

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::modp::PRIME_LIMIT;
use crate::arith::primes::factor_distinct;
use crate::arith::IntPoly;

/// Trial division limit for factoring `Delta`.
pub const TRIAL_LIMIT: u64 = 1 << 20;

/// Fractional bits used for each `p^(3/(p-1))` factor.
pub const DEFAULT_FRAC_BITS: u64 = 32;

/// `C0 = 2.826`.
pub fn c0() -> BigRational {
    BigRational::new(BigInt::from(2826), BigInt::from(1000))
}

/// `A = 6.076`.
pub fn a_const() -> BigRational {
    BigRational::new(BigInt::from(6076), BigInt::from(1000))
}

/// `1/1024`.
pub fn default_rel_tol() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1024))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub delta: BigInt,
    pub delta_cubed_up: Dyadic,
    pub b: Dyadic,
    pub m: BigInt,
    pub n: BigInt,
    pub sigma: BigInt,
    /// `sigma >= 2^62`: the primes below `sigma` are outside the supported range.
    pub exceeds_prime_range: bool,
}

/// Upper bound on the largest modulus of a complex root of `r`.
///
/// The result `B0` satisfies `max|root| <= B0 <= (1 + rel_tol) max(max|root|, 2^-20)`.
pub fn root_radius_upper(r: &IntPoly, rel_tol: &BigRational) -> Dyadic {
    assert!(
        r.degree().is_some_and(|d| d >= 1),
        "root radius of a constant polynomial"
    );
    let eighth = BigRational::new(BigInt::one(), BigInt::from(8));
    assert!(
        rel_tol.is_positive() && *rel_tol <= eighth,
        "rel_tol must lie in (0, 1/8]"
    );
    // roots at zero do not affect the radius
    let low = (0..).find(|&i| !r.coeff(i).is_zero()).unwrap();
    let coeffs: Vec<BigInt> = r.coeffs()[low..].to_vec();
    let d = coeffs.len() - 1;
    if d == 0 {
        return Dyadic::pow2(-20);
    }

    let tol = rel_tol.to_f64().unwrap_or(1.0 / 1024.0);
    let target = (1.0 + tol / 2.0).ln();
    let mut k = 0u32;
    while (d as f64).ln() / f64::from(1u32 << k.min(31)) > target * (1.0 - 1e-9) && k < 60 {
        k += 1;
    }
    let bits = 80 + u64::from(k) + 2 * (usize::BITS - d.leading_zeros()) as u64;

    let mut c: Vec<Interval> = coeffs
        .iter()
        .map(|v| {
            let x = Dyadic::from_int(v.clone());
            Interval {
                lo: x.round_down(bits),
                hi: x.round_up(bits),
            }
        })
        .collect();
    for _ in 0..k {
        c = graeffe_step(&c, bits);
    }

    let lead = c[d].mag_lower();
    let upper: Vec<Dyadic> = c[..d].iter().map(Interval::mag_upper).collect();
    let xi = cauchy_root_upper(&lead, &upper, bits);

    let mut b0 = xi;
    for _ in 0..k {
        b0 = b0.sqrt_up(bits);
    }
    b0.round_up(64)
}

/// One root-squaring step on interval coefficients. The result has the
/// squared roots up to a sign flip, which leaves the moduli unchanged.
fn graeffe_step(c: &[Interval], bits: u64) -> Vec<Interval> {
    let d = c.len() - 1;
    (0..=d)
        .map(|j| {
            let mut acc = c[j].square(bits);
            let mut t = 1;
            while t <= j && j + t <= d {
                let prod = c[j - t].mul(&c[j + t], bits).scale_pow2(1);
                acc = if t % 2 == 1 {
                    acc.sub(&prod, bits)
                } else {
                    acc.add(&prod, bits)
                };
                t += 1;
            }
            acc
        })
        .collect()
}

/// Upper bound on the positive root of `lead x^d - sum upper[j] x^j`.
fn cauchy_root_upper(lead: &Dyadic, upper: &[Dyadic], bits: u64) -> Dyadic {
    let d = upper.len();
    assert!(
        !lead.is_zero(),
        "leading coefficient enclosure contains zero"
    );
    // positive past the root, since P(x)/x^d is increasing on x > 0
    let positive = |x: &Dyadic| {
        let mut xp = Dyadic::one();
        let mut acc = Dyadic::zero();
        for a in upper {
            acc = acc.add(&a.mul(&xp));
            xp = xp.mul(x);
        }
        lead.mul(&xp) > acc
    };
    let l_log = lead.floor_log2().unwrap();
    let mut e = upper
        .iter()
        .enumerate()
        .filter_map(|(j, a)| {
            a.floor_log2()
                .map(|la| (la - l_log).div_euclid((d - j) as i64))
        })
        .max()
        .unwrap_or(0);
    while !positive(&Dyadic::pow2(e + 1)) {
        e += 1;
    }
    while e > i64::MIN / 2 && positive(&Dyadic::pow2(e)) {
        e -= 1;
    }
    // root in (2^e, 2^(e+1)]
    let mut lo = Dyadic::pow2(e);
    let mut hi = Dyadic::pow2(e + 1);
    for _ in 0..48 {
        let mid = lo.add(&hi).mul(&Dyadic::pow2(-1));
        if positive(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi.round_up(bits)
}

/// Upper bound on `delta(n)^3` where `delta(n) = prod_{p | n} p^(1/(p-1))`.
pub fn delta_cubed_upper(delta: &BigInt) -> Dyadic {
    delta_cubed_upper_with(delta, DEFAULT_FRAC_BITS)
}

/// [`delta_cubed_upper`] with a chosen number of fractional bits per factor.
pub fn delta_cubed_upper_with(delta: &BigInt, frac_bits: u64) -> Dyadic {
    assert!(delta.is_positive(), "delta must be positive");
    let fac = factor_distinct(delta, TRIAL_LIMIT);
    let work = 2 * frac_bits + 64;
    let mut acc = Dyadic::one();
    for &p in &fac.primes {
        acc = acc.mul(&root_power_upper(p, frac_bits)).round_up(work);
    }
    if let Some(cof) = &fac.cofactor {
        // Every prime factor of the cofactor exceeds the trial limit L, and
        // q^(3/(q-1)) decreases in q, so each contributes at most L^(3/(L-1));
        // there are at most floor(log_L cof) of them.
        let l = BigInt::from(fac.limit);
        let mut count = 0u32;
        let mut pw = l.clone();
        while pw <= *cof {
            count += 1;
            pw *= &l;
        }
        let per = root_power_upper(fac.limit, frac_bits);
        for _ in 0..count {
            acc = acc.mul(&per).round_up(work);
        }
    }
    acc
}

/// Smallest `y / 2^frac_bits` whose `(m-1)`-th power is certified `>= m^3`,
/// an upper bound on `m^(3/(m-1))` for `m >= 2`.
fn root_power_upper(m: u64, frac_bits: u64) -> Dyadic {
    let cube = Dyadic::from_int(BigInt::from(m).pow(3));
    let e = m - 1;
    let prec = frac_bits + 64;
    let scale = -(frac_bits as i64);
    // the answer lies in [1, 8]
    let mut lo = BigInt::one() << frac_bits as usize;
    let mut hi = BigInt::from(8) << frac_bits as usize;
    if e == 1 {
        return cube;
    }
    let holds = |y: &BigInt| pow_down(&Dyadic::new(y.clone(), scale), e, prec) >= cube;
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1usize;
        if holds(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Dyadic::new(hi, scale)
}

/// Lower bound on `x^e` for `x >= 0`, rounding down after every product.
fn pow_down(x: &Dyadic, mut e: u64, bits: u64) -> Dyadic {
    let mut base = x.round_down(bits);
    let mut acc = Dyadic::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).round_down(bits);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base).round_down(bits);
        }
    }
    acc
}

/// `M = ceil(C0 Delta^3 D)`, `N = ceil(A B M)`, `sigma = (2M+1)N + 2M` with
/// `D = delta_cubed_upper(Delta)`.
pub fn effective_bounds(delta: &BigInt, b: &Dyadic) -> BoundsReport {
    effective_bounds_with(delta, b, DEFAULT_FRAC_BITS)
}

pub fn effective_bounds_with(delta: &BigInt, b: &Dyadic, frac_bits: u64) -> BoundsReport {
    assert!(delta.is_positive(), "delta must be positive");
    assert!(*b >= Dyadic::one(), "B must be at least 1");
    let d3 = delta_cubed_upper_with(delta, frac_bits);
    let delta_cubed = BigRational::from_integer(delta.pow(3));
    let m = (c0() * delta_cubed * d3.to_rational()).ceil().to_integer();
    let n = (a_const() * b.to_rational() * BigRational::from_integer(m.clone()))
        .ceil()
        .to_integer();
    let two_m = &m * 2;
    let sigma = (&two_m + 1) * &n + &two_m;
    let exceeds_prime_range = sigma >= BigInt::from(PRIME_LIMIT);
    BoundsReport {
        delta: delta.clone(),
        delta_cubed_up: d3,
        b: b.clone(),
        m,
        n,
        sigma,
        exceeds_prime_range,
    }
}

/// `max(root_radius_upper(r), 1)` with the default tolerance.
pub fn clamped_radius(r: &IntPoly) -> Dyadic {
    let b0 = root_radius_upper(r, &default_rel_tol());
    if b0 < Dyadic::one() {
        Dyadic::one()
    } else {
        b0
    }
}
