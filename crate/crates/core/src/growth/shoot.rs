//! Saddle-path construction by bisection shooting on initial consumption.
//!
//! A shot from `(k, c)` either overconsumes (capital is run down towards
//! zero) or underconsumes (capital overshoots the steady state and
//! consumption collapses). Bisection on `c` between the two outcomes
//! converges to the stable manifold to within rounding. Since the unstable
//! eigenvalue amplifies that rounding, the path is rebuilt piecewise: after
//! every segment the consumption at the current capital is shot again.

use super::integrate::{extend, step, Trajectory};
use super::model::{production, steady_state, GrowthParams, State};
use super::{GrowthError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingOptions {
    pub h: f64,
    pub t_shoot: f64,
    /// Distance to the steady state regarded as converged.
    pub eps_ss: f64,
    /// Time between re-shots.
    pub segment: f64,
    /// Time after which an undecided shot counts as on the path.
    pub horizon: f64,
}

impl Default for ShootingOptions {
    fn default() -> Self {
        Self {
            h: 0.01,
            t_shoot: 200.0,
            eps_ss: 1e-6,
            segment: 40.0,
            horizon: 1000.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SaddlePath {
    pub trajectory: Trajectory,
    pub c0: f64,
    /// Total bisection steps over all segments.
    pub iterations: usize,
    pub terminal_distance: f64,
    /// Whether the path ends within `eps_ss` of the steady state.
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    High,
    Low,
    Undecided,
}

fn classify(s: State, p: &GrowthParams, ss: State, h: f64, horizon: f64) -> Side {
    if s.c <= 0.0 {
        return Side::Low;
    }
    let mut s = s;
    let steps = (horizon / h).ceil() as usize;
    for _ in 0..steps {
        let kdot = p.a0 * s.k.powf(p.alpha) - (p.n + p.delta) * s.k - s.c;
        if s.k < ss.k && kdot < 0.0 {
            return Side::High;
        }
        if s.k > ss.k && kdot > 0.0 {
            return Side::Low;
        }
        s = match step(s, p, h) {
            Ok(next) if next.k > 0.0 && next.k.is_finite() => next,
            _ => return Side::High,
        };
        if s.c.is_nan() || s.c <= 0.0 {
            return Side::Low;
        }
    }
    Side::Undecided
}

/// Consumption on the stable manifold at capital `k`.
fn shoot(k: f64, p: &GrowthParams, ss: State, opts: &ShootingOptions) -> Result<(f64, usize)> {
    let mut lo = 0.0;
    let mut hi = production(k, p)?;
    let mut iterations = 0;
    while classify(State::new(k, hi), p, ss, opts.h, opts.horizon) != Side::High {
        iterations += 1;
        hi *= 2.0;
        if iterations > 64 || !hi.is_finite() {
            return Err(GrowthError::ShootingFailed {
                iterations,
                bracket: (lo, hi),
            });
        }
    }
    while iterations < 10_000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        match classify(State::new(k, mid), p, ss, opts.h, opts.horizon) {
            Side::High => hi = mid,
            Side::Low => lo = mid,
            Side::Undecided => return Ok((mid, iterations)),
        }
    }
    Ok((0.5 * (lo + hi), iterations))
}

pub fn saddle_path(p: &GrowthParams, k0: f64) -> Result<SaddlePath> {
    saddle_path_with(p, k0, &ShootingOptions::default())
}

pub fn saddle_path_with(p: &GrowthParams, k0: f64, opts: &ShootingOptions) -> Result<SaddlePath> {
    let ss = steady_state(p)?.state;
    if !(k0 > 0.0 && k0.is_finite()) {
        return Err(GrowthError::Domain(format!("k0 must be positive, got {k0}")));
    }
    if ((k0 - ss.k) / ss.k).abs() < 1e-12 {
        return Err(GrowthError::Domain("k0 is the steady state".into()));
    }
    if !(opts.h > 0.0 && opts.t_shoot > 0.0 && opts.segment > 0.0 && opts.horizon > 0.0) {
        return Err(GrowthError::Domain("shooting options must be positive".into()));
    }

    let (c0, mut iterations) = shoot(k0, p, ss, opts)?;
    let total = (opts.t_shoot / opts.h).round() as usize;
    let per_segment = ((opts.segment / opts.h).round() as usize).max(1);
    let mut traj = Trajectory::start(0.0, opts.h, State::new(k0, c0));
    while traj.len() - 1 < total {
        let steps = per_segment.min(total - (traj.len() - 1));
        extend(&mut traj, p, steps)?;
        if !traj.is_complete() {
            let last = traj.last();
            return Err(GrowthError::ShootingFailed {
                iterations,
                bracket: (last.c, last.c),
            });
        }
        if traj.len() - 1 < total {
            let i = traj.len() - 1;
            let (c, its) = shoot(traj.k[i], p, ss, opts)?;
            iterations += its;
            traj.c[i] = c;
        }
    }
    let terminal_distance = traj.last().distance(&ss);
    Ok(SaddlePath {
        trajectory: traj,
        c0,
        iterations,
        terminal_distance,
        converged: terminal_distance < opts.eps_ss,
    })
}
