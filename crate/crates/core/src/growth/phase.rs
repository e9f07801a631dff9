use super::model::{rhs, steady_state, GrowthParams, State};
use super::{GrowthError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPoint {
    pub k: f64,
    pub c: f64,
    pub kdot: f64,
    pub cdot: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseGrid {
    /// `nk * nc` points, `k` varying slowest.
    pub field: Vec<FieldPoint>,
    /// `(k, c)` with `k' = 0`: `c = a0 k^alpha - (n + delta) k`.
    pub kdot_nullcline: Vec<(f64, f64)>,
    /// `(k, c)` with `c' = 0` for `c > 0`: the line `k = k*`.
    pub cdot_nullcline: Vec<(f64, f64)>,
    pub intersection: State,
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| {
        if i + 1 == n {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        }
    })
}

fn check_range(name: &str, (lo, hi): (f64, f64)) -> Result<()> {
    if lo > 0.0 && hi > lo && hi.is_finite() {
        Ok(())
    } else {
        Err(GrowthError::Domain(format!("{name} range [{lo}, {hi}] must be positive and nonempty")))
    }
}

pub fn phase_grid(p: &GrowthParams, k_range: (f64, f64), c_range: (f64, f64), nk: usize, nc: usize) -> Result<PhaseGrid> {
    check_range("k", k_range)?;
    check_range("c", c_range)?;
    if nk < 2 || nc < 2 {
        return Err(GrowthError::Domain("grid needs at least 2 points per axis".into()));
    }
    let ss = steady_state(p)?.state;
    let mut field = Vec::with_capacity(nk * nc);
    for k in linspace(k_range.0, k_range.1, nk) {
        for c in linspace(c_range.0, c_range.1, nc) {
            let (kdot, cdot) = rhs(State::new(k, c), p)?;
            field.push(FieldPoint { k, c, kdot, cdot });
        }
    }
    let kdot_nullcline = linspace(k_range.0, k_range.1, nk)
        .map(|k| (k, p.a0 * k.powf(p.alpha) - (p.n + p.delta) * k))
        .collect();
    let cdot_nullcline = linspace(c_range.0, c_range.1, nc).map(|c| (ss.k, c)).collect();
    Ok(PhaseGrid {
        field,
        kdot_nullcline,
        cdot_nullcline,
        intersection: State::new(ss.k, p.a0 * ss.k.powf(p.alpha) - (p.n + p.delta) * ss.k),
    })
}
