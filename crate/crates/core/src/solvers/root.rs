use crate::error::{Error, Result};

use super::{IterationTrace, Solution, SolverConfig, Status, TraceStep};

/// Number of halvings that shrink `[lo, hi]` to a width of at most `tol`.
pub fn bisection_steps_needed(lo: f64, hi: f64, tol: f64) -> usize {
    let ratio = (hi - lo) / tol;
    if ratio <= 1.0 {
        0
    } else {
        ratio.log2().ceil() as usize
    }
}

/// Bisection on a sign-changing bracket.
///
/// Each trace step records the midpoint and `f(midpoint)`. The returned root
/// is the last evaluated midpoint; it lies inside a final bracket of width at
/// most `tol_abs` unless the status says otherwise. A bracket that can no
/// longer be split in floating point counts as converged.
pub fn bisect_root<F>(mut f: F, lo: f64, hi: f64, cfg: &SolverConfig) -> Result<Solution>
where
    F: FnMut(f64) -> Result<f64>,
{
    cfg.validate()?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::domain("bracket lower end", lo, format!("finite and below {hi}")));
    }
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::NonFinite {
            iterate: if f_lo.is_nan() { lo } else { hi },
            value: f64::NAN,
        });
    }

    let mut steps = Vec::new();
    let finish = |value: f64, steps: Vec<TraceStep>, status: Status| Solution {
        value,
        trace: IterationTrace { steps, status },
    };

    if f_lo == 0.0 {
        steps.push(TraceStep { iterate: lo, residual: f_lo });
        return Ok(finish(lo, steps, Status::Converged));
    }
    if f_hi == 0.0 {
        steps.push(TraceStep { iterate: hi, residual: f_hi });
        return Ok(finish(hi, steps, Status::Converged));
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }

    let mut last = None;
    for _ in 0..cfg.max_iter {
        if hi - lo <= cfg.tol_abs {
            break;
        }
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid.is_nan() {
            return Err(Error::NonFinite { iterate: mid, value: f_mid });
        }
        steps.push(TraceStep { iterate: mid, residual: f_mid });
        last = Some(mid);
        if f_mid == 0.0 {
            return Ok(finish(mid, steps, Status::Converged));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }

    let split_exhausted = {
        let mid = lo + 0.5 * (hi - lo);
        mid <= lo || mid >= hi
    };
    let status = if hi - lo <= cfg.tol_abs || split_exhausted {
        Status::Converged
    } else {
        Status::MaxIter
    };
    let value = match last {
        Some(mid) => mid,
        None => {
            // Bracket already within tolerance: report the better endpoint.
            let (x, fx) = if f_lo.abs() <= f_hi.abs() { (lo, f_lo) } else { (hi, f_hi) };
            steps.push(TraceStep { iterate: x, residual: fx });
            x
        }
    };
    Ok(finish(value, steps, status))
}
