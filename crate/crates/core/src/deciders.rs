//! Decision procedures: rational residues, effective Kronecker splitting, and
//! the p-curvature scan up to the prime bound `sigma`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::modp::{self, PRIME_LIMIT};
use crate::arith::primes::Primes;
use crate::arith::{quotient_pow, squarefree_part_mod_p, IntPoly, ModPoly, RatPoly};
use crate::bounds::{clamped_radius, effective_bounds, BoundsReport};
use crate::error::{Error, Result};
use crate::normal_form::{classify, normalize, NormalForm, StructuralClass};
use crate::pcurvature::{curvature_outcome, PCurvOutcome};
use crate::resultants::{delta_of, rothstein_trager};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TranscendenceReason {
    DegreeViolation,
    NonSquarefree,
    IrrationalResidue,
    NonvanishingCurvature { p: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Residues of `u` with multiplicities, in increasing order.
    Algebraic { residues: Vec<(BigRational, usize)> },
    Transcendental { reason: TranscendenceReason },
    /// The prime budget ran out before `sigma`.
    Inconclusive {
        checked_up_to: BigInt,
        sigma: BigInt,
        prime_range_exceeded: bool,
    },
}

impl Verdict {
    pub fn witness_prime(&self) -> Option<u64> {
        match self {
            Verdict::Transcendental { reason: TranscendenceReason::NonvanishingCurvature { p } } => Some(*p),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonSplitWitness {
    /// A prime not dividing `lc(R)` at which `R` does not split.
    Prime(u64),
    /// Exact rational root finding accounts for less than the full degree.
    IrrationalRoot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KroneckerVerdict {
    SplitsOverQ { roots: Vec<(BigRational, usize)> },
    NotSplit { witness: NonSplitWitness },
}

/// Limits for a prime scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    /// Largest prime to examine; `None` scans all the way to `sigma - 1`.
    pub budget: Option<u64>,
    /// Worker threads; the result does not depend on this.
    pub threads: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { budget: None, threads: 1 }
    }
}

impl ScanOptions {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget: Some(budget), ..Self::default() }
    }
}

/// All rational roots of `r` with their multiplicities, in increasing order.
pub fn rational_roots(r: &IntPoly) -> Vec<(BigRational, usize)> {
    assert!(!r.is_zero(), "rational roots of the zero polynomial");
    let prim = r.primitive();
    let zeros = prim.coeffs().iter().take_while(|c| c.is_zero()).count();
    let core = IntPoly::new(prim.coeffs()[zeros..].to_vec());
    let mut out = Vec::new();
    if zeros > 0 {
        out.push((BigRational::zero(), zeros));
    }
    if core.degree().unwrap_or(0) == 0 {
        return out;
    }
    let sqf = squarefree_part_q(&core);
    let roots = match candidate_roots(&sqf) {
        Some(roots) => roots,
        None => padic_roots(&sqf),
    };
    for root in roots {
        let lin = IntPoly::new(vec![-root.numer().clone(), root.denom().clone()]);
        let mut rest = core.clone();
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&lin) {
            rest = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        out.push((root, mult));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

fn squarefree_part_q(f: &IntPoly) -> IntPoly {
    let fr = f.to_rat();
    let g = fr.gcd(&fr.derivative());
    let (q, _) = fr.div_rem(&g).expect("nonzero gcd");
    q.content_primitive().expect("nonzero quotient").1
}

/// Largest `|r_0|`, `|r_n|` for which the divisor method is tried.
const DIVISOR_LIMIT: u64 = 1 << 40;
/// Largest number of candidate pairs for the divisor method.
const CANDIDATE_LIMIT: usize = 1 << 16;

/// Roots `s/t` with `s | r_0`, `t | r_n`, filtered by `(t - s) | f(1)` and
/// `(t + s) | f(-1)`. `None` if the constant or leading coefficient is too
/// large to enumerate divisors.
fn candidate_roots(f: &IntPoly) -> Option<Vec<BigRational>> {
    let r0 = f.coeff(0).abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT)?;
    let rn = f.leading().unwrap().abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT)?;
    let ds = divisors(r0);
    let dt = divisors(rn);
    if ds.len().saturating_mul(dt.len()) > CANDIDATE_LIMIT {
        return None;
    }
    let f1 = f.eval(&BigInt::one());
    let fm1 = f.eval(&-BigInt::one());
    let divides = |d: &BigInt, v: &BigInt| if d.is_zero() { v.is_zero() } else { v.is_multiple_of(d) };
    let mut roots = Vec::new();
    for &s in &ds {
        for &t in &dt {
            if s.gcd(&t) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let s = BigInt::from(s) * sign;
                let t = BigInt::from(t);
                if !divides(&(&t - &s), &f1) || !divides(&(&t + &s), &fm1) {
                    continue;
                }
                if homogeneous_eval(f, &s, &t).is_zero() {
                    roots.push(BigRational::new(s, t));
                }
            }
        }
    }
    Some(roots)
}

/// `t^n f(s/t)`.
fn homogeneous_eval(f: &IntPoly, s: &BigInt, t: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut tp = BigInt::one();
    for c in f.coeffs().iter().rev() {
        acc = acc * s + c * &tp;
        tp *= t;
    }
    acc
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![1u64];
    let mut m = n;
    for q in Primes::new() {
        if q * q > m {
            break;
        }
        let mut e = 0;
        while m.is_multiple_of(q) {
            m /= q;
            e += 1;
        }
        if e > 0 {
            let base = out.clone();
            let mut pw = 1;
            for _ in 0..e {
                pw *= q;
                out.extend(base.iter().map(|d| d * pw));
            }
        }
    }
    if m > 1 {
        let base = out.clone();
        out.extend(base.iter().map(|d| d * m));
    }
    out.sort_unstable();
    out
}

/// Rational roots of a squarefree primitive `f` by lifting its roots modulo a
/// prime `p` (with `f mod p` squarefree of full degree) to a power `p^k` large
/// enough to read off `lc(f) * root` as a symmetric residue.
fn padic_roots(f: &IntPoly) -> Vec<BigRational> {
    let n = f.degree().unwrap();
    let lc = f.leading().unwrap().clone();
    let p = Primes::new()
        .find(|&p| {
            if lc.is_multiple_of(&BigInt::from(p)) {
                return false;
            }
            let fp = ModPoly::from_int_poly(f, p);
            fp.degree() == Some(n) && fp.gcd(&fp.derivative()).is_one()
        })
        .expect("a squarefree polynomial stays squarefree modulo some prime");
    let fp = ModPoly::from_int_poly(f, p);
    let roots_mod_p: Vec<u64> = (0..p).filter(|&x| fp.eval(x) == 0).collect();
    if roots_mod_p.is_empty() {
        return Vec::new();
    }
    // |lc * root| <= |lc| + max|c_i| by Cauchy's bound
    let bound = lc.abs() + f.height();
    let target = bound * 2 + 1;
    let df = f.derivative();
    let pb = BigInt::from(p);
    let mut out = Vec::new();
    for r0 in roots_mod_p {
        let mut r = BigInt::from(r0);
        let mut m = pb.clone();
        while m < target {
            m = &m * &m;
            let fr = f.eval(&r).mod_floor(&m);
            let dfr = df.eval(&r).mod_floor(&m);
            let inv = mod_inverse(&dfr, &m).expect("simple root stays simple");
            r = (&r - fr * inv).mod_floor(&m);
        }
        let mut x = (&lc * &r).mod_floor(&m);
        if &x * 2 > m {
            x -= &m;
        }
        let cand = BigRational::new(x, lc.clone());
        if f.eval_rational(&cand).is_zero() {
            out.push(cand);
        }
    }
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Decide by exact residues: algebraic iff every root of `R(w)` is rational.
pub fn decide_by_roots(a_raw: &RatPoly, b_raw: &RatPoly) -> Result<Verdict> {
    let nf = match prepare(a_raw, b_raw)? {
        Prepared::Done(v) => return Ok(v),
        Prepared::Admissible(nf) => nf,
    };
    let rt = rothstein_trager(&nf.a, &nf.b)?;
    let roots = rational_roots(&rt.r);
    let count: usize = roots.iter().map(|(_, m)| m).sum();
    if count == nf.degree() {
        Ok(Verdict::Algebraic { residues: scale_residues(&roots, &nf.c) })
    } else {
        Ok(Verdict::Transcendental { reason: TranscendenceReason::IrrationalResidue })
    }
}

enum Prepared {
    Done(Verdict),
    Admissible(NormalForm),
}

fn prepare(a_raw: &RatPoly, b_raw: &RatPoly) -> Result<Prepared> {
    if b_raw.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if a_raw.is_zero() {
        return Ok(Prepared::Done(Verdict::Algebraic { residues: Vec::new() }));
    }
    let nf = normalize(a_raw, b_raw)?;
    let reason = match classify(&nf) {
        StructuralClass::Admissible => return Ok(Prepared::Admissible(nf)),
        StructuralClass::DegreeViolation => TranscendenceReason::DegreeViolation,
        StructuralClass::NonSquarefree => TranscendenceReason::NonSquarefree,
    };
    Ok(Prepared::Done(Verdict::Transcendental { reason }))
}

fn scale_residues(roots: &[(BigRational, usize)], c: &BigRational) -> Vec<(BigRational, usize)> {
    let mut out: Vec<(BigRational, usize)> = roots.iter().map(|(r, m)| (r * c, *m)).collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Whether `r mod p` is a product of linear factors over F_p.
pub fn splits_mod_p(r: &IntPoly, p: u64) -> Result<bool> {
    modp::check_prime_range(p)?;
    let lc = r.leading().ok_or(Error::ZeroPolynomial)?;
    if lc.is_multiple_of(&BigInt::from(p)) {
        return Err(Error::BadPrime { p });
    }
    let rp = ModPoly::from_int_poly(r, p);
    if rp.degree() == Some(0) {
        return Ok(true);
    }
    let s = squarefree_part_mod_p(&rp)?;
    let x = ModPoly::x(p);
    Ok(quotient_pow(&x, p, &s)? == x.rem(&s)?)
}

/// Decide whether `r` splits into linear factors over Q from its splitting
/// behaviour modulo the good primes below `sigma`.
///
/// When the budget ends before `sigma` the verdict is completed by exact
/// rational root finding.
pub fn kronecker_decide(r: &IntPoly, opts: ScanOptions) -> Result<(KroneckerVerdict, Option<BoundsReport>)> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = if r.leading().unwrap().is_negative() { r.neg() } else { r.clone() };
    if r.degree() == Some(0) {
        return Ok((KroneckerVerdict::SplitsOverQ { roots: Vec::new() }, None));
    }
    let lc = r.leading().unwrap().clone();
    let report = effective_bounds(&lc, &clamped_radius(&r));
    let limit = scan_limit(&report.sigma, opts.budget);
    if report.exceeds_prime_range && opts.budget.is_none() {
        return Err(Error::PrimeRangeExceeded { sigma: report.sigma.to_string() });
    }
    let witness = first_witness(2, limit, opts.threads, |p| {
        if lc.is_multiple_of(&BigInt::from(p)) {
            return Ok(false);
        }
        Ok(!splits_mod_p(&r, p)?)
    })?;
    if let Some(p) = witness {
        return Ok((KroneckerVerdict::NotSplit { witness: NonSplitWitness::Prime(p) }, Some(report)));
    }
    let roots = rational_roots(&r);
    let count: usize = roots.iter().map(|(_, m)| m).sum();
    let n = r.degree().unwrap();
    let complete = BigInt::from(limit) + 1 >= report.sigma;
    if count == n {
        Ok((KroneckerVerdict::SplitsOverQ { roots }, Some(report)))
    } else if complete {
        Err(Error::Inconsistent(format!(
            "all good primes below {} split but only {count} of {n} roots are rational",
            report.sigma
        )))
    } else {
        Ok((KroneckerVerdict::NotSplit { witness: NonSplitWitness::IrrationalRoot }, Some(report)))
    }
}

/// `min(sigma - 1, budget)`, capped to the supported prime range.
fn scan_limit(sigma: &BigInt, budget: Option<u64>) -> u64 {
    let top = (sigma - 1u32).to_u64().unwrap_or(u64::MAX).min(PRIME_LIMIT - 1);
    match budget {
        Some(b) => top.min(b),
        None => top,
    }
}

/// p-curvature decision with the resultant delayed until the primes up to
/// `Delta` have been scanned.
///
/// The bounds report is `None` when the verdict was reached before `sigma`
/// was needed.
pub fn decide_honda(a_raw: &RatPoly, b_raw: &RatPoly, opts: ScanOptions) -> Result<(Verdict, Option<BoundsReport>)> {
    let nf = match prepare(a_raw, b_raw)? {
        Prepared::Done(v) => return Ok((v, None)),
        Prepared::Admissible(nf) => nf,
    };
    let delta = delta_of(&nf.b);
    let budget = opts.budget.unwrap_or(PRIME_LIMIT - 1).min(PRIME_LIMIT - 1);
    let test = |p: u64| -> Result<bool> {
        if delta.is_multiple_of(&BigInt::from(p)) {
            return Ok(false);
        }
        Ok(matches!(
            curvature_outcome(&nf.a, &nf.b, p, &delta)?,
            PCurvOutcome::NonZero { .. }
        ))
    };
    let transcendental = |p| Verdict::Transcendental { reason: TranscendenceReason::NonvanishingCurvature { p } };

    let phase1 = delta.to_u64().unwrap_or(u64::MAX).min(budget);
    if let Some(p) = first_witness(2, phase1, opts.threads, test)? {
        return Ok((transcendental(p), None));
    }

    let rt = rothstein_trager(&nf.a, &nf.b)?;
    let report = effective_bounds(&delta, &clamped_radius(&rt.r));
    if report.exceeds_prime_range && opts.budget.is_none() {
        return Ok((
            Verdict::Inconclusive {
                checked_up_to: BigInt::from(phase1),
                sigma: report.sigma.clone(),
                prime_range_exceeded: true,
            },
            Some(report),
        ));
    }
    let limit = scan_limit(&report.sigma, opts.budget);
    if limit > phase1 {
        if let Some(p) = first_witness(phase1 + 1, limit, opts.threads, test)? {
            return Ok((transcendental(p), Some(report)));
        }
    }
    if BigInt::from(limit) + 1 < report.sigma {
        return Ok((
            Verdict::Inconclusive {
                checked_up_to: BigInt::from(limit),
                sigma: report.sigma.clone(),
                prime_range_exceeded: report.exceeds_prime_range,
            },
            Some(report),
        ));
    }
    let roots = rational_roots(&rt.r);
    let count: usize = roots.iter().map(|(_, m)| m).sum();
    if count != nf.degree() {
        return Err(Error::Inconsistent(format!(
            "all p-curvatures below {} vanish but only {count} of {} residues are rational",
            report.sigma,
            nf.degree()
        )));
    }
    Ok((Verdict::Algebraic { residues: scale_residues(&roots, &nf.c) }, Some(report)))
}

const BATCH: usize = 1024;

/// Smallest prime `p` in `[lo, hi]` with `test(p)` true.
///
/// Primes are tested in batches; within a batch results are merged in
/// increasing order, so the answer and any error are the same for every
/// thread count.
pub fn first_witness<F>(lo: u64, hi: u64, threads: usize, test: F) -> Result<Option<u64>>
where
    F: Fn(u64) -> Result<bool> + Sync,
{
    if lo > hi {
        return Ok(None);
    }
    let pool = if threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?,
        )
    } else {
        None
    };
    let mut primes = Primes::starting_at(lo).take_while(|&p| p <= hi);
    loop {
        let batch: Vec<u64> = primes.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            return Ok(None);
        }
        let results: Vec<Result<bool>> = match &pool {
            Some(pool) => pool.install(|| batch.par_iter().map(|&p| test(p)).collect()),
            None => {
                let mut out = Vec::with_capacity(batch.len());
                for &p in &batch {
                    let r = test(p);
                    let stop = !matches!(r, Ok(false));
                    out.push(r);
                    if stop {
                        break;
                    }
                }
                out
            }
        };
        for (p, r) in batch.iter().zip(results) {
            if r? {
                return Ok(Some(*p));
            }
        }
    }
}

/// Sum of residues with multiplicity, grouped by value.
pub fn residue_sum(residues: &[(BigRational, usize)]) -> BigRational {
    let mut grouped: BTreeMap<BigRational, usize> = BTreeMap::new();
    for (r, m) in residues {
        *grouped.entry(r.clone()).or_default() += m;
    }
    grouped
        .iter()
        .map(|(r, &m)| r * BigRational::from_integer(BigInt::from(m)))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn rational_roots_examples() {
        let r = rational_roots(&IntPoly::from_i64s(&[5, 9, -18]));
        assert_eq!(r, vec![(q(-1, 3), 1), (q(5, 6), 1)]);
        assert!(rational_roots(&IntPoly::from_i64s(&[1, 0, 1])).is_empty());
        assert_eq!(rational_roots(&IntPoly::from_i64s(&[3, -6, 3])), vec![(q(1, 1), 2)]);
        assert_eq!(rational_roots(&IntPoly::from_i64s(&[0, 0, 2, 1])), vec![(q(-2, 1), 1), (q(0, 1), 2)]);
    }

    #[test]
    fn padic_agrees_with_divisors() {
        // (3w - 2)(5w + 7)(w^2 + 3)(w - 11)
        let f = IntPoly::from_i64s(&[-2, 3])
            .mul(&IntPoly::from_i64s(&[7, 5]))
            .mul(&IntPoly::from_i64s(&[3, 0, 1]))
            .mul(&IntPoly::from_i64s(&[-11, 1]));
        let mut a = candidate_roots(&f).unwrap();
        let mut b = padic_roots(&f);
        a.sort();
        b.sort();
        assert_eq!(a, vec![q(-7, 5), q(2, 3), q(11, 1)]);
        assert_eq!(a, b);
    }

    #[test]
    fn huge_coefficients_use_lifting() {
        let big: BigInt = num_traits::pow(BigInt::from(10), 30) + 7;
        let f = IntPoly::new(vec![-big.clone(), BigInt::from(3)]).mul(&IntPoly::from_i64s(&[1, 0, 1]));
        let r = rational_roots(&f);
        assert_eq!(r, vec![(BigRational::new(big, BigInt::from(3)), 1)]);
    }

    #[test]
    fn decide_by_roots_examples() {
        let v = decide_by_roots(&rp(&[2, 1]), &rp(&[-1, 1, 2])).unwrap();
        assert_eq!(v, Verdict::Algebraic { residues: vec![(q(-1, 3), 1), (q(5, 6), 1)] });
        let v = decide_by_roots(&rp(&[1]), &rp(&[-4, 0, 1])).unwrap();
        assert_eq!(v, Verdict::Algebraic { residues: vec![(q(-1, 4), 1), (q(1, 4), 1)] });
        let v = decide_by_roots(&rp(&[1]), &rp(&[-3_818_929, 0, 1])).unwrap();
        assert_eq!(v, Verdict::Transcendental { reason: TranscendenceReason::IrrationalResidue });
        let v = decide_by_roots(&rp(&[-4, 3]), &rp(&[4, -6, 2])).unwrap();
        assert_eq!(v, Verdict::Algebraic { residues: vec![(q(1, 2), 1), (q(1, 1), 1)] });
        assert_eq!(decide_by_roots(&rp(&[1]), &RatPoly::zero()), Err(Error::ZeroDenominator));
        assert_eq!(
            decide_by_roots(&RatPoly::zero(), &rp(&[1])).unwrap(),
            Verdict::Algebraic { residues: vec![] }
        );
        assert_eq!(
            decide_by_roots(&rp(&[1]), &rp(&[0, 0, 1])).unwrap(),
            Verdict::Transcendental { reason: TranscendenceReason::NonSquarefree }
        );
    }

    #[test]
    fn splits_examples() {
        assert!(splits_mod_p(&IntPoly::from_i64s(&[1, 0, 1]), 5).unwrap());
        assert!(!splits_mod_p(&IntPoly::from_i64s(&[1, 0, 1]), 3).unwrap());
        assert!(splits_mod_p(&IntPoly::from_i64s(&[-1, 1]), 2).unwrap());
        assert_eq!(splits_mod_p(&IntPoly::from_i64s(&[1, 0, 2]), 2), Err(Error::BadPrime { p: 2 }));
        // (w^2+1)^2 mod 3 does not split; (w-1)^2 (w-2) mod 7 does
        assert!(!splits_mod_p(&IntPoly::from_i64s(&[1, 0, 2, 0, 1]), 3).unwrap());
        assert!(splits_mod_p(&IntPoly::from_i64s(&[-2, 5, -4, 1]), 7).unwrap());
    }

    #[test]
    fn kronecker_examples() {
        let (v, rep) = kronecker_decide(&IntPoly::from_i64s(&[2, -3, 1]), ScanOptions::default()).unwrap();
        assert_eq!(v, KroneckerVerdict::SplitsOverQ { roots: vec![(q(1, 1), 1), (q(2, 1), 1)] });
        assert_eq!(rep.unwrap().sigma, BigInt::from(265));
        let (v, _) = kronecker_decide(&IntPoly::from_i64s(&[-3_818_929, 0, 1]), ScanOptions::default()).unwrap();
        assert_eq!(v, KroneckerVerdict::NotSplit { witness: NonSplitWitness::Prime(47) });
        let (v, _) = kronecker_decide(&IntPoly::x(), ScanOptions::default()).unwrap();
        assert_eq!(v, KroneckerVerdict::SplitsOverQ { roots: vec![(q(0, 1), 1)] });
    }

    #[test]
    fn honda_examples() {
        let (v, rep) = decide_honda(&rp(&[-4, 3]), &rp(&[4, -6, 2]), ScanOptions::default()).unwrap();
        assert_eq!(v, Verdict::Algebraic { residues: vec![(q(1, 2), 1), (q(1, 1), 1)] });
        assert_eq!(rep.unwrap().sigma, BigInt::from(265));

        let (v, rep) = decide_honda(&rp(&[-4, -3, 7]), &rp(&[4, -6, 4, 2]), ScanOptions::default()).unwrap();
        let p = v.witness_prime().expect("transcendental");
        assert!(p <= 43, "{p}");
        assert!(rep.is_none());

        let (v, rep) = decide_honda(&rp(&[1]), &rp(&[-4, 0, 1]), ScanOptions::with_budget(100_000)).unwrap();
        assert_eq!(
            v,
            Verdict::Inconclusive {
                checked_up_to: BigInt::from(100_000),
                sigma: BigInt::from(104_208_014_998u64),
                prime_range_exceeded: false,
            }
        );
        assert_eq!(rep.unwrap().m, BigInt::from(92603));
    }

    #[test]
    fn honda_witness_is_minimal_for_any_thread_count() {
        let a = rp(&[1]);
        let b = rp(&[-3_818_929, 0, 1]);
        for threads in [1, 2, 4] {
            let opts = ScanOptions { budget: Some(10_000), threads };
            let (v, _) = decide_honda(&a, &b, opts).unwrap();
            assert_eq!(v.witness_prime(), Some(47));
        }
    }

    #[test]
    fn residue_sum_matches_coefficients() {
        // u = (x+2)/(2x^2+x-1): sum of residues = 1/2
        let v = decide_by_roots(&rp(&[2, 1]), &rp(&[-1, 1, 2])).unwrap();
        let Verdict::Algebraic { residues } = v else { panic!() };
        assert_eq!(residue_sum(&residues), q(1, 2));
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(97), vec![1, 97]);
        assert!(divisors(0).is_empty());
    }
}
