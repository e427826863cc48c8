//! Seeded random benchmark: one decision per Admissible input of a given
//! degree and coefficient height.

use std::fmt::Write as _;
use std::time::Instant;

use pcurv::deciders::{decide_honda, ScanOptions, Verdict};
use pcurv::sample::Sampler;

pub const CSV_HEADER: &str = "degree,height_bits,seed,case_index,verdict,witness_prime,time_ms";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub degree: usize,
    pub height_bits: u32,
    pub seed: u64,
    pub case_index: usize,
    pub verdict: &'static str,
    /// 0 unless the verdict is Transcendental by a nonvanishing p-curvature.
    pub witness_prime: u64,
    pub time_ms: f64,
}

/// Numerator degree `degree - 1`, denominator degree `degree`, coefficients
/// uniform in `[-2^height_bits, 2^height_bits]`; case `i` depends only on
/// `seed` and `i`.
pub fn run_bench(
    degree: usize,
    height_bits: u32,
    count: usize,
    seed: u64,
    opts: ScanOptions,
) -> pcurv::Result<Vec<BenchRow>> {
    let mut sampler = Sampler::new(seed);
    let mut rows = Vec::with_capacity(count);
    for case_index in 0..count {
        let (a, b) = sampler.admissible(degree, height_bits);
        let start = Instant::now();
        let (verdict, _) = decide_honda(&a.to_rat(), &b.to_rat(), opts)?;
        let time_ms = start.elapsed().as_secs_f64() * 1000.0;
        let label = match verdict {
            Verdict::Algebraic { .. } => "algebraic",
            Verdict::Transcendental { .. } => "transcendental",
            Verdict::Inconclusive { .. } => "inconclusive",
        };
        rows.push(BenchRow {
            degree,
            height_bits,
            seed,
            case_index,
            verdict: label,
            witness_prime: verdict.witness_prime().unwrap_or(0),
            time_ms,
        });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut s = String::new();
    writeln!(s, "{CSV_HEADER}").unwrap();
    for r in rows {
        writeln!(
            s,
            "{},{},{},{},{},{},{:.3}",
            r.degree, r.height_bits, r.seed, r.case_index, r.verdict, r.witness_prime, r.time_ms
        )
        .unwrap();
    }
    s
}

/// Median of the witness primes (lower median for even counts), 0 if none.
pub fn median_witness(rows: &[BenchRow]) -> u64 {
    let mut w: Vec<u64> = rows.iter().map(|r| r.witness_prime).filter(|&p| p > 0).collect();
    w.sort_unstable();
    if w.is_empty() {
        0
    } else {
        w[(w.len() - 1) / 2]
    }
}

pub fn summary(rows: &[BenchRow]) -> String {
    let transcendental = rows.iter().filter(|r| r.verdict == "transcendental").count();
    let max = rows.iter().map(|r| r.witness_prime).max().unwrap_or(0);
    let total: f64 = rows.iter().map(|r| r.time_ms).sum();
    format!(
        "cases={} transcendental={} median_witness={} max_witness={} total_ms={:.1}\n",
        rows.len(),
        transcendental,
        median_witness(rows),
        max,
        total
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn without_times(csv: &str) -> Vec<String> {
        csv.lines().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect()
    }

    #[test]
    fn rows_are_reproducible_across_threads() {
        let one = run_bench(4, 6, 6, 11, ScanOptions::default()).unwrap();
        let two = run_bench(4, 6, 6, 11, ScanOptions { budget: None, threads: 2 }).unwrap();
        assert_eq!(without_times(&to_csv(&one)), without_times(&to_csv(&two)));
        assert!(to_csv(&one).starts_with(CSV_HEADER));
    }

    #[test]
    fn witness_is_zero_exactly_without_curvature_verdict() {
        let rows = run_bench(1, 3, 10, 5, ScanOptions::with_budget(1000)).unwrap();
        for r in &rows {
            assert_eq!(r.witness_prime == 0, r.verdict != "transcendental");
        }
    }

    #[test]
    fn median_examples() {
        let row = |w| BenchRow {
            degree: 1,
            height_bits: 1,
            seed: 0,
            case_index: 0,
            verdict: "transcendental",
            witness_prime: w,
            time_ms: 0.0,
        };
        assert_eq!(median_witness(&[row(5), row(3), row(7)]), 5);
        assert_eq!(median_witness(&[row(5), row(3)]), 3);
        assert_eq!(median_witness(&[]), 0);
    }
}
