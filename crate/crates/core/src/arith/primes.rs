//! Prime enumeration, primality and small-factor extraction.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};

use super::modp;

const SEGMENT: u64 = 1 << 16;

/// Iterator over the primes `>= start`, in increasing order, via a segmented
/// sieve of Eratosthenes.
pub struct Primes {
    base: Vec<u64>,
    base_limit: u64,
    lo: u64,
    buffer: Vec<u64>,
    pos: usize,
}

impl Primes {
    pub fn new() -> Self {
        Self::starting_at(2)
    }

    pub fn starting_at(start: u64) -> Self {
        Self {
            base: Vec::new(),
            base_limit: 1,
            lo: start.max(2),
            buffer: Vec::new(),
            pos: 0,
        }
    }

    fn extend_base(&mut self, limit: u64) {
        if limit <= self.base_limit {
            return;
        }
        let limit = limit.max(self.base_limit * 2).max(1024);
        let n = limit as usize;
        let mut composite = vec![false; n + 1];
        let mut base = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                base.push(i as u64);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        self.base = base;
        self.base_limit = limit;
    }

    fn fill(&mut self) {
        let lo = self.lo;
        let hi = lo.saturating_add(SEGMENT);
        self.extend_base(hi.sqrt() + 1);
        let len = (hi - lo) as usize;
        let mut composite = vec![false; len];
        for &q in &self.base {
            if q * q >= hi {
                break;
            }
            let mut m = (lo.div_ceil(q) * q).max(q * q);
            while m < hi {
                composite[(m - lo) as usize] = true;
                m += q;
            }
        }
        self.buffer = (0..len)
            .filter(|&i| !composite[i])
            .map(|i| lo + i as u64)
            .collect();
        self.pos = 0;
        self.lo = hi;
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.pos >= self.buffer.len() {
            if self.lo == u64::MAX {
                return None;
            }
            self.fill();
        }
        let p = self.buffer[self.pos];
        self.pos += 1;
        Some(p)
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = modp::pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = modp::mul(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Result of factoring by trial division up to a limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFactorization {
    /// Distinct prime factors found, in increasing order.
    pub primes: Vec<u64>,
    /// Remaining cofactor, free of primes `<= limit`; `None` means fully factored.
    pub cofactor: Option<BigInt>,
    pub limit: u64,
}

/// Distinct prime factors of `|n|` found by trial division up to `limit`
/// (and `sqrt(n)`); a leftover cofactor is classified as prime when that is
/// certain.
pub fn factor_distinct(n: &BigInt, limit: u64) -> PartialFactorization {
    let mut m = n.magnitude().clone();
    let mut primes = Vec::new();
    if m.is_zero() {
        return PartialFactorization {
            primes,
            cofactor: None,
            limit,
        };
    }
    for q in Primes::new() {
        if q > limit {
            break;
        }
        let qq = num_bigint::BigUint::from(q);
        if &qq * &qq > m {
            break;
        }
        if (&m % &qq).is_zero() {
            primes.push(q);
            while (&m % &qq).is_zero() {
                m /= &qq;
            }
        }
    }
    if m.is_one() {
        return PartialFactorization {
            primes,
            cofactor: None,
            limit,
        };
    }
    // everything <= min(limit, sqrt) has been removed
    let lim = num_bigint::BigUint::from(limit);
    let certainly_prime = &lim * &lim >= m || m.to_u64().is_some_and(is_prime_u64);
    if certainly_prime {
        if let Some(q) = m.to_u64() {
            primes.push(q);
            primes.sort_unstable();
            return PartialFactorization {
                primes,
                cofactor: None,
                limit,
            };
        }
    }
    PartialFactorization {
        primes,
        cofactor: Some(BigInt::from(m)),
        limit,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let naive: Vec<u64> = (2..200_000u64).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect();
        let sieved: Vec<u64> = Primes::new().take_while(|&p| p < 200_000).collect();
        assert_eq!(naive, sieved);
        let from: Vec<u64> = Primes::starting_at(100).take(3).collect();
        assert_eq!(from, vec![101, 103, 107]);
    }

    #[test]
    fn miller_rabin() {
        for n in 0..5000u64 {
            let naive = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), naive, "{n}");
        }
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3_215_031_751));
        assert!(!is_prime_u64(3_825_123_056_546_413_051));
    }

    #[test]
    fn factoring() {
        let f = factor_distinct(&BigInt::from(15_275_716u64), 1 << 20);
        assert_eq!(f.primes, vec![2, 3_818_929]);
        assert_eq!(f.cofactor, None);
        let f = factor_distinct(&BigInt::from(18), 1 << 20);
        assert_eq!(f.primes, vec![2, 3]);
        let big = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64) * BigInt::from(1_000_000_009u64);
        let f = factor_distinct(&(&big * 12), 1000);
        assert_eq!(f.primes, vec![2, 3]);
        assert_eq!(f.cofactor, Some(big));
    }
}
