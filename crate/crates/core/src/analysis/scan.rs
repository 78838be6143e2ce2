use std::ops::Range;
use std::thread;

use serde::Serialize;

use super::grid::GridSpec;
use crate::approx::{ApproxFunction, Target};
use crate::error::Result;
use crate::oracle::Oracle;

/// Relative error is not formed where the reference is smaller than this.
pub const REL_ORACLE_FLOOR: f64 = 1e-300;

/// Below this `|x|` the relative error of erf is left to the analytic
/// small-argument limit instead of dividing by a vanishing reference.
pub const ERF_REL_SKIP_BELOW: f64 = 1e-6;

/// Local maxima of the absolute error below this level are rounding noise
/// (the deep tail) and are not recorded.
pub const DEFAULT_PEAK_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocalMax {
    pub x: f64,
    pub abs_err: f64,
}

/// Maximum errors of one approximation over one grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorReport {
    pub function: ApproxFunction,
    pub max_abs: f64,
    pub argmax_abs: f64,
    pub max_rel: f64,
    pub argmax_rel: f64,
    pub points: usize,
    /// Points that contributed to the relative error.
    pub rel_points: usize,
    pub grid: GridSpec,
    /// Interior points whose absolute error exceeds both neighbours, sorted
    /// by `x`.
    pub local_maxima: Vec<LocalMax>,
}

#[derive(Debug, Clone, Copy)]
pub struct ScanOptions {
    pub oracle: Oracle,
    pub peak_floor: f64,
    /// Worker threads; `1` runs on the calling thread.
    pub threads: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            oracle: Oracle::default(),
            peak_floor: DEFAULT_PEAK_FLOOR,
            threads: 1,
        }
    }
}

impl ScanOptions {
    /// Default options using every available core.
    pub fn parallel() -> Self {
        ScanOptions {
            threads: thread::available_parallelism().map_or(1, |n| n.get()),
            ..Self::default()
        }
    }
}

/// Absolute and (where meaningful) relative error at one point.
pub fn point_error(
    approx: &ApproxFunction,
    oracle: &Oracle,
    x: f64,
) -> Result<(f64, Option<f64>)> {
    let a = approx.eval(x)?;
    let r = oracle.eval(approx.target(), x)?;
    let abs = (a - r).abs();
    let skip_rel = r.abs() < REL_ORACLE_FLOOR
        || (approx.target() == Target::Erf && x.abs() < ERF_REL_SKIP_BELOW);
    Ok((abs, (!skip_rel).then(|| abs / r.abs())))
}

/// Scans `approx` against the reference oracle on every point of `grid`.
pub fn scan(approx: ApproxFunction, grid: GridSpec) -> Result<ErrorReport> {
    scan_with(approx, grid, &ScanOptions::default())
}

/// [`scan`] with explicit options. The report does not depend on
/// `threads`: partitions overlap by one point for the local-maximum test
/// and maxima are merged keeping the first occurrence.
pub fn scan_with(approx: ApproxFunction, grid: GridSpec, opts: &ScanOptions) -> Result<ErrorReport> {
    grid.validate()?;
    let threads = opts.threads.clamp(1, grid.count);
    let partials = if threads == 1 {
        vec![scan_range(&approx, &grid, opts, 0..grid.count)?]
    } else {
        let chunk = grid.count.div_ceil(threads);
        let ranges: Vec<Range<usize>> = (0..grid.count)
            .step_by(chunk)
            .map(|s| s..(s + chunk).min(grid.count))
            .collect();
        thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|r| scope.spawn(|| scan_range(&approx, &grid, opts, r)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect::<Result<Vec<_>>>()
        })?
    };

    let mut report = ErrorReport {
        function: approx,
        max_abs: 0.0,
        argmax_abs: grid.start,
        max_rel: 0.0,
        argmax_rel: grid.start,
        points: grid.count,
        rel_points: 0,
        grid,
        local_maxima: Vec::new(),
    };
    for p in partials {
        if p.max_abs > report.max_abs {
            report.max_abs = p.max_abs;
            report.argmax_abs = p.argmax_abs;
        }
        if p.max_rel > report.max_rel {
            report.max_rel = p.max_rel;
            report.argmax_rel = p.argmax_rel;
        }
        report.rel_points += p.rel_points;
        report.local_maxima.extend(p.local_maxima);
    }
    Ok(report)
}

struct Partial {
    max_abs: f64,
    argmax_abs: f64,
    max_rel: f64,
    argmax_rel: f64,
    rel_points: usize,
    local_maxima: Vec<LocalMax>,
}

fn scan_range(
    approx: &ApproxFunction,
    grid: &GridSpec,
    opts: &ScanOptions,
    range: Range<usize>,
) -> Result<Partial> {
    let mut part = Partial {
        max_abs: 0.0,
        argmax_abs: grid.point(range.start),
        max_rel: 0.0,
        argmax_rel: grid.point(range.start),
        rel_points: 0,
        local_maxima: Vec::new(),
    };
    let abs_at = |i: usize| -> Result<f64> {
        Ok(point_error(approx, &opts.oracle, grid.point(i))?.0)
    };

    let mut prev = if range.start > 0 {
        Some(abs_at(range.start - 1)?)
    } else {
        None
    };
    let mut cur = point_error(approx, &opts.oracle, grid.point(range.start))?;
    for i in range.clone() {
        let x = grid.point(i);
        let (abs, rel) = cur;
        let next = if i + 1 < grid.count {
            Some(if i + 1 < range.end {
                point_error(approx, &opts.oracle, grid.point(i + 1))?
            } else {
                (abs_at(i + 1)?, None)
            })
        } else {
            None
        };

        if abs > part.max_abs {
            part.max_abs = abs;
            part.argmax_abs = x;
        }
        if let Some(rel) = rel {
            part.rel_points += 1;
            if rel > part.max_rel {
                part.max_rel = rel;
                part.argmax_rel = x;
            }
        }
        if let (Some(p), Some((n, _))) = (prev, next) {
            if abs > p && abs > n && abs >= opts.peak_floor {
                part.local_maxima.push(LocalMax { x, abs_err: abs });
            }
        }

        prev = Some(abs);
        match next {
            Some(n) => cur = n,
            None => break,
        }
    }
    Ok(part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::Variant;

    #[test]
    fn coarse_erf_scan() {
        let grid = GridSpec::uniform(0.0, 6.0, 20_001).unwrap();
        let r = scan(ApproxFunction::improved(Target::Erf), grid).unwrap();
        assert!(r.max_abs < 2.27e-5);
        assert!(r.max_abs > 2.2e-5);
        assert!(r.argmax_abs >= 0.0 && r.argmax_abs <= 6.0);
        assert_eq!(r.points, 20_001);
        // x = 0 is excluded from the relative error.
        assert_eq!(r.rel_points, 20_000);
        assert!(r.local_maxima.windows(2).all(|w| w[0].x < w[1].x));
    }

    #[test]
    fn partitioned_scan_is_identical() {
        let grid = GridSpec::uniform(0.0, 8.0, 10_007).unwrap();
        for f in [
            ApproxFunction::improved(Target::Erf),
            ApproxFunction::new(Target::Erf, Variant::Winitzki).unwrap(),
            ApproxFunction::improved(Target::Q),
        ] {
            let seq = scan(f, grid).unwrap();
            for threads in [2, 3, 7, 64] {
                let opts = ScanOptions {
                    threads,
                    ..ScanOptions::default()
                };
                let par = scan_with(f, grid, &opts).unwrap();
                assert_eq!(seq, par, "{f} with {threads} threads");
            }
        }
    }

    #[test]
    fn peaks_at_partition_edges_are_kept() {
        // Four points per partition forces peaks onto boundaries.
        let grid = GridSpec::uniform(0.0, 3.0, 401).unwrap();
        let f = ApproxFunction::improved(Target::Erf);
        let seq = scan(f, grid).unwrap();
        let opts = ScanOptions {
            threads: 100,
            ..ScanOptions::default()
        };
        assert_eq!(seq.local_maxima, scan_with(f, grid, &opts).unwrap().local_maxima);
        assert!(!seq.local_maxima.is_empty());
    }

    #[test]
    fn invalid_grid_is_rejected() {
        let bad = GridSpec {
            start: 2.0,
            end: 1.0,
            count: 10,
            spacing: super::super::grid::Spacing::Uniform,
        };
        assert!(scan(ApproxFunction::improved(Target::Erf), bad).is_err());
    }
}
