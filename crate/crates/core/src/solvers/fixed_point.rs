use crate::error::{Error, Result};

use super::{IterationTrace, Solution, SolverConfig, Status, TraceStep};

/// Damped fixed-point iteration `x ← (1−α)·x + α·g(x)`.
///
/// Every evaluated iterate is recorded with its residual `g(x) − x`. The
/// iteration stops at the first iterate whose residual is within `tol_abs`
/// and returns that iterate. After `max_iter` updates the final iterate is
/// evaluated once more, so a trace holds at most `max_iter + 1` steps.
/// Non-convergence is reported through the trace status, not as an error.
pub fn fixed_point<G>(mut g: G, x0: f64, cfg: &SolverConfig) -> Result<Solution>
where
    G: FnMut(f64) -> Result<f64>,
{
    cfg.validate()?;
    let alpha = cfg.damping;
    let mut x = x0;
    let mut steps = Vec::with_capacity(cfg.max_iter.min(1024) + 1);
    for update in 0..=cfg.max_iter {
        let gx = g(x)?;
        if !gx.is_finite() {
            return Err(Error::NonFinite { iterate: x, value: gx });
        }
        let residual = gx - x;
        steps.push(TraceStep { iterate: x, residual });
        if residual.abs() <= cfg.tol_abs {
            return Ok(Solution {
                value: x,
                trace: IterationTrace {
                    steps,
                    status: Status::Converged,
                },
            });
        }
        if update == cfg.max_iter {
            break;
        }
        x = if alpha == 1.0 { gx } else { (1.0 - alpha) * x + alpha * gx };
    }
    Ok(Solution {
        value: x,
        trace: IterationTrace {
            steps,
            status: Status::MaxIter,
        },
    })
}
