use std::fs::{self, File};
use std::io::{self, BufWriter, IsTerminal, Write};
use std::path::Path;

use dimcheck_core::check::{check_model, CheckError, UnsolvableKind};
use dimcheck_core::growth::{
    discounted_utility, discounted_utility_series, eigen2, euler_residual, frozen_consumption, integrate, jacobian,
    phase_grid, saddle_path_with, steady_state, write_nullclines_csv, write_phase_field_csv, write_trajectory_csv,
    Eigen2, GrowthError, ShootingOptions, State, Status, Trajectory, Welfare,
};
use dimcheck_core::lang::parse_model;
use dimcheck_core::GrowthParams;
use serde_json::json;

use crate::args::{CheckArgs, Format, ParamArgs, PhaseArgs, SimulateArgs, SteadyArgs, WelfareArgs};
use crate::Failure;

type CmdResult = Result<(), Failure>;

fn growth_failure(e: GrowthError) -> Failure {
    match e {
        GrowthError::InvalidParams(_) => Failure::Config(e.to_string()),
        _ => Failure::Numeric(e.to_string()),
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Config(format!("{}: {e}", path.display()))
}

fn valid_params(a: &ParamArgs) -> Result<GrowthParams, Failure> {
    let p = a.params();
    p.validate().map_err(growth_failure)?;
    Ok(p)
}

fn color_enabled() -> bool {
    std::env::var_os("DIMCHECK_NO_COLOR").is_none() && io::stdout().is_terminal()
}

fn source_excerpt(source: &str, line: usize, start: usize, end: usize) -> String {
    let text = source.lines().nth(line.saturating_sub(1)).unwrap_or("");
    let width = end.saturating_sub(start).max(1);
    format!("  {text}\n  {}{}", " ".repeat(start), "^".repeat(width))
}

pub fn check(a: &CheckArgs) -> CmdResult {
    let source = fs::read_to_string(&a.path).map_err(|e| io_failure(&a.path, e))?;
    let spec = parse_model(&source).map_err(|e| {
        let s = e.span();
        Failure::Config(format!(
            "{}: {e}\n{}",
            a.path.display(),
            source_excerpt(&source, s.line, s.col_start, s.col_end)
        ))
    })?;
    let mut report = check_model(&spec).map_err(|e| match e {
        CheckError::UnsolvableInference {
            kind: UnsolvableKind::Inconsistent,
            ..
        } => {
            eprintln!("dimcheck: {}: {e}", a.path.display());
            Failure::Violations
        }
        _ => Failure::Config(format!("{}: {e}", a.path.display())),
    })?;
    report.model = a
        .path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| report.model.clone());

    let mut out = io::stdout().lock();
    let text = match a.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("report serializes")),
        Format::Text => report.render_text(Some(&source), color_enabled()),
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Config(format!("writing report: {e}")))?;
    if report.is_homogeneous() {
        Ok(())
    } else {
        Err(Failure::Violations)
    }
}

pub fn steady(a: &SteadyArgs) -> CmdResult {
    let p = valid_params(&a.params)?;
    let ss = steady_state(&p).map_err(growth_failure)?;
    let j = jacobian(ss.state, &p).map_err(growth_failure)?;
    let trace = j[0][0] + j[1][1];
    let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    let eig = eigen2(j);
    match a.format {
        Format::Json => {
            let eigenvalues = match eig {
                Eigen2::Real { values, .. } => json!(values),
                Eigen2::Complex { re, im } => json!([{"re": re, "im": im}, {"re": re, "im": -im}]),
            };
            let v = json!({
                "k": ss.state.k,
                "c": ss.state.c,
                "r": ss.r,
                "eigenvalues": eigenvalues,
                "trace": trace,
                "det": det,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("json serializes"));
        }
        Format::Text => {
            println!("k* = {}", ss.state.k);
            println!("c* = {}", ss.state.c);
            println!("r* = {}", ss.r);
            match eig {
                Eigen2::Real { values, .. } => println!("eigenvalues = {}, {}", values[0], values[1]),
                Eigen2::Complex { re, im } => println!("eigenvalues = {re} +/- {im}i"),
            }
            println!("trace = {trace}");
            println!("det = {det}");
        }
    }
    Ok(())
}

fn write_csv_to(path: Option<&Path>, traj: &Trajectory, p: &GrowthParams) -> CmdResult {
    match path {
        Some(path) => {
            let f = File::create(path).map_err(|e| io_failure(path, e))?;
            let mut w = BufWriter::new(f);
            write_trajectory_csv(&mut w, traj, p)
                .and_then(|_| w.flush())
                .map_err(|e| io_failure(path, e))
        }
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            write_trajectory_csv(&mut w, traj, p)
                .and_then(|_| w.flush())
                .map_err(|e| Failure::Config(format!("writing trajectory: {e}")))
        }
    }
}

pub fn simulate(a: &SimulateArgs) -> CmdResult {
    let p = valid_params(&a.params)?;
    if !(a.h > 0.0 && a.t_max > 0.0) {
        return Err(Failure::Config("--h and --t-max must be positive".into()));
    }
    // With the CSV on stdout the diagnostics go to stderr.
    let mut notes: Box<dyn Write> = if a.out.is_some() {
        Box::new(io::stdout())
    } else {
        Box::new(io::stderr())
    };

    let traj = if a.saddle {
        let ss = steady_state(&p).map_err(growth_failure)?.state;
        if a.k0 > 0.0 && ((a.k0 - ss.k) / ss.k).abs() < 1e-12 {
            integrate(ss, &p, a.h, a.t_max).map_err(growth_failure)?
        } else {
            let opts = ShootingOptions {
                h: a.h,
                t_shoot: a.t_max,
                ..ShootingOptions::default()
            };
            let sp = saddle_path_with(&p, a.k0, &opts).map_err(growth_failure)?;
            let _ = writeln!(notes, "c0 = {}", sp.c0);
            let _ = writeln!(notes, "terminal distance = {:e}", sp.terminal_distance);
            let _ = writeln!(notes, "bisection steps = {}", sp.iterations);
            sp.trajectory
        }
    } else {
        let c0 = a.c0.expect("clap requires --c0 without --saddle");
        integrate(State::new(a.k0, c0), &p, a.h, a.t_max).map_err(growth_failure)?
    };

    write_csv_to(a.out.as_deref(), &traj, &p)?;
    if let Status::DomainExit { t, .. } = traj.status {
        let last = traj.last();
        return Err(Failure::Numeric(format!(
            "trajectory left the domain after t = {t} (k = {}, c = {})",
            last.k, last.c
        )));
    }
    match euler_residual(&traj, &p) {
        Ok(r) => {
            let _ = writeln!(notes, "euler residuals: R1 = {:e}, R2 = {:e}", r.r1, r.r2);
        }
        Err(e) => {
            let _ = writeln!(notes, "euler residuals unavailable: {e}");
        }
    }
    Ok(())
}

pub fn phase(a: &PhaseArgs) -> CmdResult {
    let p = valid_params(&a.params)?;
    let ss = steady_state(&p).map_err(growth_failure)?.state;
    let k_range = (a.k_min.unwrap_or(ss.k / 10.0), a.k_max.unwrap_or(3.0 * ss.k));
    let c_range = (a.c_min.unwrap_or(ss.c / 10.0), a.c_max.unwrap_or(2.0 * ss.c));
    for (name, (lo, hi)) in [("k", k_range), ("c", c_range)] {
        if !(lo > 0.0 && hi > lo) {
            return Err(Failure::Config(format!("{name} range [{lo}, {hi}] must be positive and nonempty")));
        }
    }
    if a.grid < 2 {
        return Err(Failure::Config("--grid must be at least 2".into()));
    }
    let grid = phase_grid(&p, k_range, c_range, a.grid, a.grid).map_err(growth_failure)?;

    fs::create_dir_all(&a.out).map_err(|e| io_failure(&a.out, e))?;
    let write = |name: &str, f: &dyn Fn(&mut BufWriter<File>) -> io::Result<()>| -> CmdResult {
        let path = a.out.join(name);
        let file = File::create(&path).map_err(|e| io_failure(&path, e))?;
        let mut w = BufWriter::new(file);
        f(&mut w).and_then(|_| w.flush()).map_err(|e| io_failure(&path, e))
    };
    write("field.csv", &|w| write_phase_field_csv(w, &grid))?;
    write("nullcline_kdot.csv", &|w| write_nullclines_csv(w, &grid.kdot_nullcline, "kdot", &grid))?;
    write("nullcline_cdot.csv", &|w| write_nullclines_csv(w, &grid.cdot_nullcline, "cdot", &grid))?;
    println!(
        "{} field points, intersection k = {}, c = {}",
        grid.field.len(),
        grid.intersection.k,
        grid.intersection.c
    );
    Ok(())
}

/// Reads `t` and `c` columns and returns `(t0, h, c)`.
fn read_consumption(path: &Path) -> Result<(f64, f64, Vec<f64>), Failure> {
    let bad = |msg: String| Failure::Config(format!("{}: {msg}", path.display()));
    let mut rdr = csv::Reader::from_path(path).map_err(|e| bad(e.to_string()))?;
    let headers = rdr.headers().map_err(|e| bad(e.to_string()))?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| bad(format!("missing `{name}` column")))
    };
    let (ti, ci) = (col("t")?, col("c")?);
    let (mut t, mut c) = (Vec::new(), Vec::new());
    for (row, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        let field = |i: usize| -> Result<f64, Failure> {
            let text = rec.get(i).unwrap_or("").trim();
            text.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| bad(format!("row {}: `{text}` is not a finite number", row + 2)))
        };
        t.push(field(ti)?);
        c.push(field(ci)?);
    }
    if t.len() < 2 {
        return Err(bad("need at least two rows".into()));
    }
    let h = t[1] - t[0];
    if h <= 0.0 {
        return Err(bad("time must increase".into()));
    }
    for (i, ti) in t.iter().enumerate() {
        if (ti - (t[0] + i as f64 * h)).abs() > 1e-6 * h {
            return Err(bad(format!("time grid is not uniform at row {}", i + 2)));
        }
    }
    Ok((t[0], h, c))
}

fn print_welfare(label: &str, w: &Welfare) {
    println!("{label}: u_p = {} (integral {}, tail {})", w.total(), w.integral, w.tail);
}

pub fn welfare(a: &WelfareArgs) -> CmdResult {
    let p = valid_params(&a.params)?;
    if let Some(path) = &a.traj {
        let (t0, h, c) = read_consumption(path)?;
        let w = discounted_utility_series(t0, h, &c, &p).map_err(growth_failure)?;
        print_welfare("trajectory", &w);
        return Ok(());
    }
    let k0 = a.k0.expect("clap requires --k0 with --saddle");
    if !(a.h > 0.0 && a.t_max > 0.0) {
        return Err(Failure::Config("--h and --t-max must be positive".into()));
    }
    let opts = ShootingOptions {
        h: a.h,
        t_shoot: a.t_max,
        ..ShootingOptions::default()
    };
    let sp = saddle_path_with(&p, k0, &opts).map_err(growth_failure)?;
    let optimal = discounted_utility(&sp.trajectory, &p).map_err(growth_failure)?;
    print_welfare("saddle", &optimal);
    let frozen = frozen_consumption(&p, k0, sp.c0, a.h, a.t_max).map_err(growth_failure)?;
    match frozen.status {
        Status::Complete => {
            let w = discounted_utility(&frozen, &p).map_err(growth_failure)?;
            print_welfare("frozen", &w);
        }
        Status::DomainExit { t, .. } => println!("frozen: capital exhausted at t = {t}"),
    }
    Ok(())
}
