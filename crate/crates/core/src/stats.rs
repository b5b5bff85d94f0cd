//! Whole-curve statistics: y-coordinate arrangements, correlation between
//! orderings, distinct S-box counting, and generation benchmarks.

use std::time::{Duration, Instant};

use crate::curve::CurveParams;
use crate::modmath::FieldPrime;
use crate::ordering::{self, OrderingKind, TieBreak};
use crate::sbox;
use crate::Error;

/// y-coordinates of all p affine points, sorted under `kind` with the
/// canonical tie convention. Always a permutation of `[0, p)`.
pub fn ordered_y_sequence(params: CurveParams, kind: OrderingKind) -> Vec<u64> {
    ordered_y_sequence_with(params, kind, TieBreak::default())
}

/// [`ordered_y_sequence`] with an explicit tie convention.
pub fn ordered_y_sequence_with(params: CurveParams, kind: OrderingKind, tie: TieBreak) -> Vec<u64> {
    let points = params.enumerate_points();
    ordering::sort_points_with(kind, tie, &points)
        .expect("points of one curve")
        .iter()
        .map(|pt| pt.y())
        .collect()
}

/// Pearson correlation between the y-arrangements of two orderings over the
/// whole curve.
///
/// Uses the [`TieBreak::XCoord`] convention, the one the reference
/// correlation figures for these curves were produced under.
pub fn correlation(params: CurveParams, h: OrderingKind, k: OrderingKind) -> f64 {
    let u = ordered_y_sequence_with(params, h, TieBreak::XCoord);
    let v = ordered_y_sequence_with(params, k, TieBreak::XCoord);
    pearson(&u, &v)
}

/// All three pairwise correlations for one curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationRecord {
    pub p: u64,
    pub b: u64,
    pub rho_nd: f64,
    pub rho_nm: f64,
    pub rho_dm: f64,
}

pub fn correlation_record(params: CurveParams) -> CorrelationRecord {
    use OrderingKind::*;
    CorrelationRecord {
        p: params.p(),
        b: params.b(),
        rho_nd: correlation(params, Natural, Diffusion),
        rho_nm: correlation(params, Natural, ModuloDiffusion),
        rho_dm: correlation(params, Diffusion, ModuloDiffusion),
    }
}

/// Population Pearson coefficient over integer sequences, computed from
/// exact integer sums so that perfectly correlated inputs (the
/// Cauchy–Schwarz equality case, e.g. a sequence against itself) give
/// exactly ±1.
fn pearson(u: &[u64], v: &[u64]) -> f64 {
    assert_eq!(u.len(), v.len());
    let n = u.len() as i128;
    let (mut su, mut sv, mut suv, mut suu, mut svv) = (0i128, 0i128, 0i128, 0i128, 0i128);
    for (&a, &b) in u.iter().zip(v) {
        let (a, b) = (a as i128, b as i128);
        su += a;
        sv += b;
        suv += a * b;
        suu += a * a;
        svv += b * b;
    }
    let num = n * suv - su * sv;
    let du = n * suu - su * su;
    let dv = n * svv - sv * sv;
    if du == 0 || dv == 0 {
        return f64::NAN; // undefined for a zero-variance sequence
    }
    if let (Some(n2), Some(dd)) = (num.checked_mul(num), du.checked_mul(dv)) {
        if n2 == dd {
            return if num >= 0 { 1.0 } else { -1.0 };
        }
    }
    num as f64 / ((du as f64) * (dv as f64)).sqrt()
}

/// Number of distinct tables over b ∈ [1, p−1] for one ordering.
pub fn count_distinct_sboxes(prime: FieldPrime, kind: OrderingKind) -> Result<usize, Error> {
    if prime.value() < 257 {
        return Err(Error::PrimeTooSmall(prime.value()));
    }
    let mut seen = std::collections::HashSet::new();
    for b in 1..prime.value() {
        let params = CurveParams::new(prime, b)?;
        let s = sbox::generate(params, kind)?;
        seen.insert(*s.table());
    }
    Ok(seen.len())
}

/// One benchmark row: wall time of both construction routes and the peak
/// number of simultaneously stored points.
#[derive(Debug, Clone, Copy)]
pub struct BenchRecord {
    pub p: u64,
    pub loop_time: Duration,
    pub fast_time: Duration,
    pub peak_points_stored: usize,
}

/// Times both generation routes for each prime (b = 1) and records the peak
/// working set. Runs single-threaded; reports the minimum over `reps` runs.
pub fn benchmark_generation(
    primes: &[FieldPrime],
    kind: OrderingKind,
    reps: usize,
) -> Result<Vec<BenchRecord>, Error> {
    let reps = reps.max(1);
    let mut records = Vec::with_capacity(primes.len());
    for &prime in primes {
        let params = CurveParams::new(prime, 1)?;
        let mut peak = 0;
        let mut loop_time = Duration::MAX;
        let mut fast_time = Duration::MAX;
        for _ in 0..reps {
            let t0 = Instant::now();
            let (_, stats) = sbox::generate_via_loop_instrumented(params, kind)?;
            loop_time = loop_time.min(t0.elapsed());
            peak = peak.max(stats.peak_points_stored);

            let t0 = Instant::now();
            let (_, stats) = sbox::generate_instrumented(params, kind)?;
            fast_time = fast_time.min(t0.elapsed());
            peak = peak.max(stats.peak_points_stored);
        }
        records.push(BenchRecord {
            p: prime.value(),
            loop_time,
            fast_time,
            peak_points_stored: peak,
        });
    }
    Ok(records)
}

/// Least-squares slope of log(time) against log(p); the growth exponent of
/// the loop route. NaN with fewer than two records.
pub fn fit_time_exponent(records: &[BenchRecord]) -> f64 {
    if records.len() < 2 {
        return f64::NAN;
    }
    let pts: Vec<(f64, f64)> = records
        .iter()
        .map(|r| {
            (
                (r.p as f64).ln(),
                (r.loop_time.as_secs_f64().max(1e-9)).ln(),
            )
        })
        .collect();
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|(x, _)| x).sum();
    let sy: f64 = pts.iter().map(|(_, y)| y).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = pts.iter().map(|(x, y)| x * y).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}
