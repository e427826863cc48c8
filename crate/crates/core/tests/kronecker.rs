use num_bigint::BigInt;
use num_integer::Integer;
use pcurv::arith::primes::Primes;
use pcurv::arith::IntPoly;
use pcurv::deciders::{kronecker_decide, rational_roots, splits_mod_p, KroneckerVerdict, NonSplitWitness, ScanOptions};
use pcurv::sample::Sampler;

/// Product of 1 to 4 linear factors `x - r`, `|r| <= 3`, one of which is
/// `2x - odd` in about a quarter of the cases. The leading coefficient stays
/// at 1 or 2 so that the full scan to `sigma` is affordable.
fn split_poly(s: &mut Sampler) -> IntPoly {
    let k = 1 + s.below(4) as usize;
    let mut f = IntPoly::one();
    for i in 0..k {
        let factor = if i == 0 && s.below(4) == 0 {
            IntPoly::from_i64s(&[2 * s.int(-2, 1) + 1, 2])
        } else {
            IntPoly::from_i64s(&[-s.int(-3, 3), 1])
        };
        f = f.mul(&factor);
    }
    f
}

fn irreducible_quadratic(s: &mut Sampler) -> IntPoly {
    loop {
        let (b, c) = (s.int(-3, 3), s.int(-3, 3));
        let disc = b * b - 4 * c;
        let root = (disc.max(0) as f64).sqrt().round() as i64;
        if root * root != disc {
            return IntPoly::from_i64s(&[c, b, 1]);
        }
    }
}

fn rational_root_count(f: &IntPoly) -> usize {
    rational_roots(f).iter().map(|(_, m)| m).sum()
}

#[test]
fn split_products_split_over_q() {
    let mut s = Sampler::new(9001);
    for _ in 0..100 {
        let f = split_poly(&mut s);
        let (verdict, report) = kronecker_decide(&f, ScanOptions::default()).unwrap();
        let report = report.unwrap();
        assert!(!report.exceeds_prime_range);
        match verdict {
            KroneckerVerdict::SplitsOverQ { roots } => {
                assert_eq!(roots.iter().map(|(_, m)| m).sum::<usize>(), f.degree().unwrap());
            }
            other => panic!("{f}: {other:?}"),
        }
    }
}

#[test]
fn injected_quadratic_is_detected_below_sigma() {
    let mut s = Sampler::new(9002);
    for _ in 0..100 {
        let f = split_poly(&mut s).mul(&irreducible_quadratic(&mut s));
        let (verdict, report) = kronecker_decide(&f, ScanOptions::default()).unwrap();
        let report = report.unwrap();
        let lc = f.leading().unwrap().clone();
        let KroneckerVerdict::NotSplit { witness: NonSplitWitness::Prime(p) } = verdict else {
            panic!("{f}: {verdict:?}");
        };
        assert!(BigInt::from(p) < report.sigma);
        assert!(!lc.is_multiple_of(&BigInt::from(p)));
        assert!(!splits_mod_p(&f, p).unwrap());
        for q in Primes::new().take_while(|&q| q < p) {
            if !lc.is_multiple_of(&BigInt::from(q)) {
                assert!(splits_mod_p(&f, q).unwrap(), "{f}: {q} < {p} also fails to split");
            }
        }
        assert!(rational_root_count(&f) < f.degree().unwrap());
    }
}

#[test]
fn split_polynomials_split_at_every_good_prime() {
    let mut s = Sampler::new(9003);
    for _ in 0..30 {
        let k = 1 + s.below(5) as usize;
        let f = s.linear_product(k, 5);
        assert_eq!(rational_root_count(&f), f.degree().unwrap());
        let lc = f.leading().unwrap().clone();
        for p in Primes::new().take_while(|&p| p <= 1000) {
            if !lc.is_multiple_of(&BigInt::from(p)) {
                assert!(splits_mod_p(&f, p).unwrap(), "{f} at {p}");
            }
        }
    }
}

#[test]
fn budgeted_scan_completes_by_exact_roots() {
    let mut s = Sampler::new(9004);
    for _ in 0..20 {
        let split = s.linear_product(3, 6);
        let (verdict, report) = kronecker_decide(&split, ScanOptions::with_budget(50)).unwrap();
        assert!(report.unwrap().sigma > BigInt::from(50));
        assert!(matches!(verdict, KroneckerVerdict::SplitsOverQ { .. }));
    }
    let f = IntPoly::from_i64s(&[-2, 0, 1]).mul(&IntPoly::from_i64s(&[0, 97]));
    // x^2 - 2 has no root modulo 3
    let (verdict, _) = kronecker_decide(&f, ScanOptions::with_budget(2)).unwrap();
    assert_eq!(verdict, KroneckerVerdict::NotSplit { witness: NonSplitWitness::IrrationalRoot });
    let (verdict, _) = kronecker_decide(&f, ScanOptions::with_budget(3)).unwrap();
    assert_eq!(verdict, KroneckerVerdict::NotSplit { witness: NonSplitWitness::Prime(3) });
}

#[test]
fn witness_does_not_depend_on_threads() {
    let mut s = Sampler::new(9005);
    for _ in 0..10 {
        let f = split_poly(&mut s).mul(&irreducible_quadratic(&mut s));
        let one = kronecker_decide(&f, ScanOptions::default()).unwrap();
        let four = kronecker_decide(&f, ScanOptions { budget: None, threads: 4 }).unwrap();
        assert_eq!(one, four);
    }
}
