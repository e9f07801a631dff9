//! CSV writers. Floats use Rust's shortest round-trip formatting.

use std::io::{self, Write};

use super::integrate::Trajectory;
use super::model::GrowthParams;
use super::phase::PhaseGrid;

/// Columns `t,k,c,y,r,w,mu`.
pub fn write_trajectory_csv<W: Write>(mut out: W, traj: &Trajectory, p: &GrowthParams) -> io::Result<()> {
    let (y, r, w, mu) = (traj.y(p), traj.r(p), traj.w(p), traj.mu(p));
    writeln!(out, "t,k,c,y,r,w,mu")?;
    for i in 0..traj.len() {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            traj.t[i], traj.k[i], traj.c[i], y[i], r[i], w[i], mu[i]
        )?;
    }
    Ok(())
}

/// Columns `k,c,kdot,cdot`.
pub fn write_phase_field_csv<W: Write>(mut out: W, grid: &PhaseGrid) -> io::Result<()> {
    writeln!(out, "k,c,kdot,cdot")?;
    for f in &grid.field {
        writeln!(out, "{},{},{},{}", f.k, f.c, f.kdot, f.cdot)?;
    }
    Ok(())
}

/// Columns `k,c,which`, where `which` names the nullcline. The last row is
/// the intersection of both.
pub fn write_nullclines_csv<W: Write>(mut out: W, points: &[(f64, f64)], which: &str, grid: &PhaseGrid) -> io::Result<()> {
    writeln!(out, "k,c,which")?;
    for (k, c) in points {
        writeln!(out, "{k},{c},{which}")?;
    }
    writeln!(out, "{},{},intersection", grid.intersection.k, grid.intersection.c)
}
