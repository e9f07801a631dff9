use super::model::{rhs, GrowthParams, State};
use super::ode::rk4_step;
use super::{GrowthError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Status {
    Complete,
    /// The step after `index` left the domain (`k <= 0` or `c` crossed
    /// zero); samples up to and including `index` are valid.
    DomainExit { index: usize, t: f64 },
}

/// Samples of `(k, c)` on the uniform grid `t_i = t0 + i h`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub h: f64,
    pub t: Vec<f64>,
    pub k: Vec<f64>,
    pub c: Vec<f64>,
    pub status: Status,
}

impl Trajectory {
    pub fn start(t0: f64, h: f64, s: State) -> Self {
        Self {
            h,
            t: vec![t0],
            k: vec![s.k],
            c: vec![s.c],
            status: Status::Complete,
        }
    }

    pub fn push(&mut self, s: State) {
        let t = self.t[0] + self.t.len() as f64 * self.h;
        self.t.push(t);
        self.k.push(s.k);
        self.c.push(s.c);
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn state(&self, i: usize) -> State {
        State::new(self.k[i], self.c[i])
    }

    pub fn last(&self) -> State {
        self.state(self.len() - 1)
    }

    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }

    /// Output per capita `a0 k^alpha`.
    pub fn y(&self, p: &GrowthParams) -> Vec<f64> {
        self.k.iter().map(|k| p.a0 * k.powf(p.alpha)).collect()
    }

    /// Net yield on capital `f'(k) - delta`.
    pub fn r(&self, p: &GrowthParams) -> Vec<f64> {
        self.k.iter().map(|&k| p.marginal_product(k) - p.delta).collect()
    }

    /// Labour price from `f(k) - k f'(k) = n w`; `NaN` when `n == 0`.
    pub fn w(&self, p: &GrowthParams) -> Vec<f64> {
        self.k
            .iter()
            .map(|&k| {
                if p.n == 0.0 {
                    f64::NAN
                } else {
                    p.a0 * k.powf(p.alpha) * (1.0 - p.alpha) / p.n
                }
            })
            .collect()
    }

    /// Current-value costate `u'(c)`.
    pub fn mu(&self, p: &GrowthParams) -> Vec<f64> {
        self.c.iter().map(|c| c.powf(-p.theta)).collect()
    }
}

pub(crate) fn step(s: State, p: &GrowthParams, h: f64) -> Result<State> {
    let mut f = |_: f64, x: &[f64; 2]| rhs(State::new(x[0], x[1]), p).map(|(a, b)| [a, b]);
    rk4_step(&mut f, 0.0, &[s.k, s.c], h).map(|x| State::new(x[0], x[1]))
}

fn in_domain(prev: State, next: State) -> bool {
    let finite = next.k.is_finite() && next.c.is_finite();
    let crossed = next.c < 0.0 || (next.c <= 0.0 && prev.c > 0.0);
    finite && next.k > 0.0 && !crossed
}

/// RK4 from `s0` over `[0, t_max]` with step `h`.
///
/// Stops early with [`Status::DomainExit`] when capital leaves `k > 0` or
/// consumption crosses zero.
pub fn integrate(s0: State, p: &GrowthParams, h: f64, t_max: f64) -> Result<Trajectory> {
    p.validate()?;
    if !(h > 0.0 && h.is_finite()) || !(t_max >= 0.0 && t_max.is_finite()) {
        return Err(GrowthError::Domain(format!("need h > 0 and t_max >= 0, got h = {h}, t_max = {t_max}")));
    }
    if !(s0.k > 0.0 && s0.c >= 0.0 && s0.k.is_finite() && s0.c.is_finite()) {
        return Err(GrowthError::Domain(format!("initial state ({}, {}) is invalid", s0.k, s0.c)));
    }
    let steps = (t_max / h).round() as usize;
    let mut traj = Trajectory::start(0.0, h, s0);
    extend(&mut traj, p, steps)?;
    Ok(traj)
}

/// Appends up to `steps` RK4 steps to `traj`.
pub(crate) fn extend(traj: &mut Trajectory, p: &GrowthParams, steps: usize) -> Result<()> {
    let first = traj.len() == 1;
    let mut s = traj.last();
    for i in 0..steps {
        let index = traj.len() - 1;
        let next = match step(s, p, traj.h) {
            Ok(next) => next,
            Err(_) if first && i == 0 => return Err(GrowthError::StepTooLarge { h: traj.h }),
            Err(_) => State::new(f64::NAN, f64::NAN),
        };
        if !in_domain(s, next) {
            traj.status = Status::DomainExit {
                index,
                t: traj.t[index],
            };
            return Ok(());
        }
        traj.push(next);
        s = next;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::steady_state;

    #[test]
    fn steady_state_is_fixed() {
        let p = GrowthParams::default();
        let ss = steady_state(&p).unwrap().state;
        let tr = integrate(ss, &p, 0.01, 100.0).unwrap();
        assert_eq!(tr.len(), 10_001);
        assert!(tr.is_complete());
        let drift = (0..tr.len()).map(|i| tr.state(i).distance(&ss)).fold(0.0, f64::max);
        assert!(drift < 1e-9, "{drift}");
    }

    #[test]
    fn excess_consumption_exits_domain() {
        let p = GrowthParams::default();
        let ss = steady_state(&p).unwrap().state;
        let tr = integrate(State::new(ss.k, ss.c + 0.1), &p, 0.01, 500.0).unwrap();
        assert!(matches!(tr.status, Status::DomainExit { .. }));
        let n = tr.len() - 1;
        assert!(tr.c[n] > tr.c[0] && tr.k[n] < tr.k[0]);
    }

    #[test]
    fn oversized_first_step() {
        let p = GrowthParams::default();
        let r = integrate(State::new(1.0, 100.0), &p, 0.1, 1.0);
        assert_eq!(r, Err(GrowthError::StepTooLarge { h: 0.1 }));
    }

    #[test]
    fn grid_is_uniform() {
        let p = GrowthParams::default();
        let tr = integrate(State::new(2.0, 0.8), &p, 0.1, 3.0).unwrap();
        assert_eq!(tr.len(), 31);
        assert!((tr.t[30] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn derived_series() {
        let p = GrowthParams::default();
        let tr = Trajectory::start(0.0, 0.1, State::new(8.0, 2.0));
        assert!((tr.y(&p)[0] - 2.0).abs() < 1e-15);
        assert!((tr.r(&p)[0] - (1.0 / 12.0 - 0.05)).abs() < 1e-15);
        assert!((tr.w(&p)[0] - 2.0 * (2.0 / 3.0) / 0.01).abs() < 1e-12);
        assert_eq!(tr.mu(&p)[0], 0.25);
    }
}
