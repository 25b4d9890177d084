#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use keynes_core::model::{ConsumptionFunction, Economy, Knot, LiquidityFunction, MecSchedule};
use rand::Rng;

pub fn scenario_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

pub fn keynes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_keynes"))
        .args(args)
        .output()
        .expect("failed to launch the keynes binary")
}

pub const FAMILIES: usize = 3;

/// A random valid consumption function; `family` cycles through linear,
/// saturating and piecewise-linear.
pub fn random_consumption(rng: &mut impl Rng, family: usize) -> ConsumptionFunction {
    let autonomous = rng.gen_range(0.0..50.0);
    match family % FAMILIES {
        0 => ConsumptionFunction::linear(autonomous, rng.gen_range(0.05..0.95)).unwrap(),
        1 => ConsumptionFunction::saturating_mpc(autonomous, rng.gen_range(0.05..0.95), rng.gen_range(1e-3..1e-2))
            .unwrap(),
        _ => {
            let mut slopes: Vec<f64> = (0..3).map(|_| rng.gen_range(0.05..0.95)).collect();
            slopes.sort_by(|a, b| b.total_cmp(a));
            let mut knots = vec![Knot::new(0.0, autonomous)];
            for slope in slopes {
                let last = *knots.last().unwrap();
                let width = rng.gen_range(20.0..200.0);
                knots.push(Knot::new(last.income + width, last.consumption + slope * width));
            }
            ConsumptionFunction::piecewise_linear(knots).unwrap()
        }
    }
}

/// Consumption evaluated straight from the parameters, without going
/// through the library's evaluation code.
pub fn reference_consumption(cf: &ConsumptionFunction, y: f64) -> f64 {
    match cf {
        ConsumptionFunction::Linear { autonomous, mpc } => autonomous + mpc * y,
        ConsumptionFunction::SaturatingMpc {
            autonomous,
            initial_mpc,
            decay,
        } => autonomous + initial_mpc / decay * (1.0 - (-decay * y).exp()),
        ConsumptionFunction::PiecewiseLinear { knots } => {
            let seg = knots.windows(2).position(|w| y < w[1].income).unwrap_or(knots.len() - 2);
            let (a, b) = (knots[seg], knots[seg + 1]);
            a.consumption + (b.consumption - a.consumption) / (b.income - a.income) * (y - a.income)
        }
    }
}

/// Root of `f` on `[lo, hi]` by repeated uniform scans: each pass splits the
/// current cell into `cells` pieces and keeps the first one where `f`
/// changes sign. Assumes `f(lo) ≥ 0 > f(hi)`.
pub fn scan_root(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, cells: usize) -> Option<f64> {
    if !(f(lo) >= 0.0 && f(hi) < 0.0) {
        return None;
    }
    while hi - lo > 1e-13 * hi.abs().max(1.0) {
        let width = (hi - lo) / cells as f64;
        let mut next = None;
        for i in 0..cells {
            let a = lo + width * i as f64;
            let b = if i + 1 == cells { hi } else { lo + width * (i + 1) as f64 };
            if f(b) < 0.0 {
                next = Some((a, b));
                break;
            }
        }
        let (a, b) = next?;
        if a == lo && b == hi {
            break;
        }
        lo = a;
        hi = b;
    }
    Some(0.5 * (lo + hi))
}

/// An economy around `consumption` whose employment ceiling never binds
/// in the tests.
pub fn loose_economy(consumption: ConsumptionFunction) -> Economy {
    Economy::new(
        consumption,
        MecSchedule::new(50.0, 10.0, 0.0).unwrap(),
        LiquidityFunction::new(0.0, 1.0, 1.0, 0.0).unwrap(),
        60.0,
        1e6,
    )
    .unwrap()
}

pub fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
