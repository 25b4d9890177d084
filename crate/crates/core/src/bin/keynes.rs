use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use keynes_core::io::{emit_csv, format_value, parse_scenario, Scenario};
use keynes_core::multiplier::{expansion_path, finite_multiplier, local_multiplier};
use keynes_core::solvers::{solve_effective_demand, solve_general_equilibrium};
use keynes_core::statics::{
    linspace, policy_experiment, report_cells, report_columns, sample_curves, sweep_parameter, Column, CurveTable,
    Figure, FigureTag, PolicyShock,
};
use keynes_core::{EquilibriumReport, Error};

const EXIT_INPUT: u8 = 2;
const EXIT_SOLVER: u8 = 3;

#[derive(Parser)]
#[command(name = "keynes", version, about = "Effective demand, interest and multiplier solver")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Absolute solver tolerance (overrides the scenario)
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Iteration limit (overrides the scenario)
    #[arg(long, global = true)]
    max_iter: Option<usize>,
    /// Fixed-point damping in (0, 1] (overrides the scenario)
    #[arg(long, global = true)]
    damping: Option<f64>,
    /// Write data output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the general equilibrium of a scenario
    Equilibrium {
        /// Scenario file (TOML)
        scenario: PathBuf,
        /// Print the report as CSV instead of aligned text
        #[arg(long)]
        csv: bool,
    },
    /// Finite multiplier between two investment levels
    Multiplier {
        scenario: PathBuf,
        /// Initial investment, in wage units
        #[arg(long)]
        i1: f64,
        /// New investment, in wage units
        #[arg(long)]
        i2: f64,
        /// Emit the round-by-round expansion path as CSV
        #[arg(long)]
        path: bool,
    },
    /// Compare equilibria before and after a policy shock
    Policy {
        scenario: PathBuf,
        #[command(flatten)]
        shock: ShockArgs,
    },
    /// Solve the general equilibrium across a parameter grid
    Sweep {
        scenario: PathBuf,
        /// Parameter path, e.g. economy.money_supply
        #[arg(long)]
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        /// Number of grid points, endpoints included
        #[arg(long)]
        steps: usize,
    },
    /// Sample the curves of one of the standard diagrams
    Curves {
        scenario: PathBuf,
        /// fig1, fig2, fig3, fig4-mec or fig4-liquidity
        #[arg(long)]
        figure: String,
        /// Start of the abscissa grid (defaults to the figure's natural range)
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        /// Number of grid points, endpoints included
        #[arg(long, default_value_t = 101)]
        steps: usize,
        /// Where to write the expansion path of fig3
        #[arg(long)]
        path_out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ShockArgs {
    /// Exogenous investment added, in wage units
    #[arg(long, allow_hyphen_values = true)]
    fiscal: Option<f64>,
    /// Change in money supply, in money units
    #[arg(long, allow_hyphen_values = true)]
    monetary: Option<f64>,
    /// Shift of the optimism parameter
    #[arg(long, allow_hyphen_values = true)]
    optimism: Option<f64>,
}

struct Failure {
    code: &'static str,
    message: String,
    exit: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.code(),
            message: e.to_string(),
            exit: if e.is_input_error() { EXIT_INPUT } else { EXIT_SOLVER },
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: "E_IO",
        message: format!("{}: {e}", path.display()),
        exit: EXIT_INPUT,
    }
}

/// Data produced by a command: what goes to stdout (or `--out`), and
/// whether the underlying solve converged.
struct Output {
    data: String,
    converged: bool,
}

fn load(path: &Path, global: &GlobalOpts) -> Result<Scenario, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let mut scenario = parse_scenario(&text)?;
    if let Some(tol) = global.tol {
        scenario.solver.tol_abs = tol;
    }
    if let Some(max_iter) = global.max_iter {
        scenario.solver.max_iter = max_iter;
    }
    if let Some(damping) = global.damping {
        scenario.solver.damping = damping;
    }
    scenario.solver.validate()?;
    Ok(scenario)
}

fn render_report(report: &EquilibriumReport, full_employment: f64) -> String {
    let rate = report.interest_rate.map_or_else(|| "-".to_string(), format_value);
    let lines = [
        ("Y*", format_value(report.income), "wage units"),
        ("N*", format_value(report.employment), "employment units"),
        ("r*", rate, "rate"),
        ("I*", format_value(report.investment), "wage units"),
        (
            "unemployment_gap",
            format_value(full_employment - report.employment),
            "employment units",
        ),
        ("residual", format_value(report.residual), "wage units"),
        ("iterations", report.iterations.to_string(), ""),
        ("converged", report.converged.to_string(), ""),
        ("at_full_employment", report.at_full_employment.to_string(), ""),
        ("at_rate_floor", report.at_rate_floor.to_string(), ""),
    ];
    let mut out = String::new();
    for (name, value, units) in lines {
        let _ = writeln!(out, "{name:<20} {value:>24} {units}").map(|_| ());
    }
    out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
}

fn equilibrium(scenario: &Scenario, csv: bool) -> Result<Output, Failure> {
    let report = solve_general_equilibrium(&scenario.economy, &scenario.solver)?;
    let data = if csv {
        let mut table = CurveTable::new(report_columns())?;
        table.push_row(report_cells(&report))?;
        emit_csv(&table)
    } else {
        render_report(&report, scenario.economy.full_employment)
    };
    Ok(Output {
        data,
        converged: report.converged,
    })
}

fn multiplier(scenario: &Scenario, i1: f64, i2: f64, path: bool) -> Result<Output, Failure> {
    let (eco, cfg) = (&scenario.economy, &scenario.solver);
    let k = finite_multiplier(eco, i1, i2, cfg)?;
    let y1 = solve_effective_demand(eco, i1, cfg)?.income;
    let y2 = solve_effective_demand(eco, i2, cfg)?.income;
    if path {
        let expansion = expansion_path(eco, i1.min(i2), i1.max(i2), cfg)?;
        let mut table = CurveTable::new(vec![
            Column::new("round", "count"),
            Column::new("Y_n", "wage units"),
            Column::new("D_n", "wage units"),
            Column::new("cumulative_dY", "wage units"),
        ])?;
        for (i, round) in expansion.rounds.iter().enumerate() {
            table.push_row(vec![
                Some(i as f64),
                Some(round.income),
                Some(round.demand),
                Some(round.income - expansion.initial_income),
            ])?;
        }
        return Ok(Output {
            data: emit_csv(&table),
            converged: expansion.status == keynes_core::solvers::Status::Converged,
        });
    }
    let mut data = String::new();
    let rows = [
        ("finite_multiplier", k),
        ("Y*(i1)", y1),
        ("Y*(i2)", y2),
        ("local_multiplier(i1)", local_multiplier(&eco.consumption, y1)?),
        ("local_multiplier(i2)", local_multiplier(&eco.consumption, y2)?),
    ];
    for (name, value) in rows {
        let _ = writeln!(data, "{name:<22} {:>24}", format_value(value));
    }
    Ok(Output { data, converged: true })
}

fn policy(scenario: &Scenario, shock: &ShockArgs) -> Result<Output, Failure> {
    let shock = match (shock.fiscal, shock.monetary, shock.optimism) {
        (Some(m), _, _) => PolicyShock::fiscal(m),
        (_, Some(m), _) => PolicyShock::monetary(m),
        (_, _, Some(m)) => PolicyShock::optimism(m),
        _ => unreachable!("clap enforces exactly one shock"),
    };
    let report = policy_experiment(&scenario.economy, shock, &scenario.solver)?;
    let rate = |r: Option<f64>| r.map_or_else(|| "-".to_string(), format_value);
    let mut data = String::new();
    let _ = writeln!(data, "{:<12} {:>24} {:>24} {:>24}", "", "baseline", "shocked", "delta");
    let rows = [
        ("Y*", format_value(report.baseline.income), format_value(report.shocked.income), format_value(report.delta_income)),
        (
            "N*",
            format_value(report.baseline.employment),
            format_value(report.shocked.employment),
            format_value(report.delta_employment),
        ),
        ("r*", rate(report.baseline.interest_rate), rate(report.shocked.interest_rate), rate(report.delta_rate)),
        (
            "I*",
            format_value(report.baseline.investment),
            format_value(report.shocked.investment),
            format_value(report.delta_investment),
        ),
        (
            "full_empl",
            report.baseline.at_full_employment.to_string(),
            report.shocked.at_full_employment.to_string(),
            String::new(),
        ),
        (
            "rate_floor",
            report.baseline.at_rate_floor.to_string(),
            report.shocked.at_rate_floor.to_string(),
            String::new(),
        ),
    ];
    for (name, b, s, d) in rows {
        let line = format!("{name:<12} {b:>24} {s:>24} {d:>24}");
        let _ = writeln!(data, "{}", line.trim_end());
    }
    let _ = writeln!(data, "{:<12} {:>24}", "multiplier", rate(report.multiplier));
    Ok(Output {
        data,
        converged: report.baseline.converged && report.shocked.converged,
    })
}

fn sweep(scenario: &Scenario, param: &str, from: f64, to: f64, steps: usize) -> Result<Output, Failure> {
    if steps == 0 || (steps > 1 && !(to > from)) {
        return Err(Error::invalid("sweep grid", format!("{from}..{to} x{steps}"), "need steps ≥ 1 and to > from").into());
    }
    let table = sweep_parameter(&scenario.economy, param, &linspace(from, to, steps), &scenario.solver)?;
    Ok(Output {
        data: emit_csv(&table),
        converged: true,
    })
}

fn curves(
    scenario: &Scenario,
    figure: &str,
    from: Option<f64>,
    to: Option<f64>,
    steps: usize,
    path_out: Option<&Path>,
) -> Result<Output, Failure> {
    let (eco, cfg) = (&scenario.economy, &scenario.solver);
    let tag: FigureTag = figure.parse()?;
    let floor = eco.liquidity.rate_floor;
    let (lo, hi) = match tag {
        FigureTag::Fig1 | FigureTag::Fig2 | FigureTag::Fig3 => (0.0, eco.full_employment),
        FigureTag::Fig4Mec => (0.0, 0.2_f64.max(floor + 0.2)),
        FigureTag::Fig4Liquidity => (floor + 0.002, floor + 0.2),
    };
    let grid = linspace(from.unwrap_or(lo), to.unwrap_or(hi), steps);
    let spec = Figure::default_for(tag, eco, cfg)?;
    let data = sample_curves(eco, &spec, &grid, cfg)?;
    if let (Some(path), Some(table)) = (path_out, &data.path) {
        fs::write(path, emit_csv(table)).map_err(|e| io_failure(path, e))?;
    }
    Ok(Output {
        data: emit_csv(&data.curves),
        converged: true,
    })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let global = &cli.global;
    match &cli.command {
        Command::Equilibrium { scenario, csv } => equilibrium(&load(scenario, global)?, *csv),
        Command::Multiplier { scenario, i1, i2, path } => multiplier(&load(scenario, global)?, *i1, *i2, *path),
        Command::Policy { scenario, shock } => policy(&load(scenario, global)?, shock),
        Command::Sweep {
            scenario,
            param,
            from,
            to,
            steps,
        } => sweep(&load(scenario, global)?, param, *from, *to, *steps),
        Command::Curves {
            scenario,
            figure,
            from,
            to,
            steps,
            path_out,
        } => curves(&load(scenario, global)?, figure, *from, *to, *steps, path_out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let summary: Vec<&str> = rendered
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("error[E_USAGE]: {}", summary.join(" ").trim_start_matches("error: "));
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let output = match run(&cli) {
        Ok(output) => output,
        Err(failure) => {
            eprintln!("error[{}]: {}", failure.code, failure.message.replace('\n', " "));
            return ExitCode::from(failure.exit);
        }
    };
    if let Some(path) = &cli.global.out {
        if let Err(e) = fs::write(path, &output.data) {
            let failure = io_failure(path, e);
            eprintln!("error[{}]: {}", failure.code, failure.message);
            return ExitCode::from(failure.exit);
        }
    } else {
        print!("{}", output.data);
    }
    if !output.converged {
        eprintln!("error[E_NOT_CONVERGED]: solver did not converge within the iteration limit");
        return ExitCode::from(EXIT_SOLVER);
    }
    ExitCode::SUCCESS
}
