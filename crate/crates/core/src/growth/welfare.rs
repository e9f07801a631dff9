use super::integrate::{Status, Trajectory};
use super::model::{crra_utility, production, GrowthParams, State};
use super::{GrowthError, Result};

/// Discounted utility of a sampled consumption path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Welfare {
    /// Quadrature over the sampled horizon.
    pub integral: f64,
    /// `u(c_N) e^(-rho t_N) / rho`: the remaining horizon at constant `c_N`.
    pub tail: f64,
}

impl Welfare {
    pub fn total(&self) -> f64 {
        self.integral + self.tail
    }
}

/// Composite Simpson weights; for an odd number of intervals the last three
/// use the 3/8 rule.
fn simpson(f: &[f64], h: f64) -> f64 {
    let n = f.len().saturating_sub(1);
    match n {
        0 => 0.0,
        1 => 0.5 * h * (f[0] + f[1]),
        _ => {
            let even_end = if n.is_multiple_of(2) { n } else { n - 3 };
            let mut s = 0.0;
            for i in (0..even_end).step_by(2) {
                s += h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
            }
            if n % 2 == 1 {
                let j = even_end;
                s += 3.0 * h / 8.0 * (f[j] + 3.0 * f[j + 1] + 3.0 * f[j + 2] + f[j + 3]);
            }
            s
        }
    }
}

/// Welfare of consumption samples `c` at `t0 + i h`.
pub fn discounted_utility_series(t0: f64, h: f64, c: &[f64], p: &GrowthParams) -> Result<Welfare> {
    if c.is_empty() {
        return Err(GrowthError::GridTooShort(0));
    }
    let mut f = Vec::with_capacity(c.len());
    for (i, &ci) in c.iter().enumerate() {
        let (u, _) = crra_utility(ci, p.theta)?;
        f.push(u * (-p.rho * (t0 + i as f64 * h)).exp());
    }
    Ok(Welfare {
        integral: simpson(&f, h),
        tail: f[f.len() - 1] / p.rho,
    })
}

pub fn discounted_utility(traj: &Trajectory, p: &GrowthParams) -> Result<Welfare> {
    discounted_utility_series(traj.t[0], traj.h, &traj.c, p)
}

/// The path that keeps consumption at `c0` forever while capital follows
/// accumulation.
pub fn frozen_consumption(p: &GrowthParams, k0: f64, c0: f64, h: f64, t_max: f64) -> Result<Trajectory> {
    production(k0, p)?;
    let steps = (t_max / h).round() as usize;
    let mut traj = Trajectory::start(0.0, h, State::new(k0, c0));
    let kdot = |k: f64| p.a0 * k.powf(p.alpha) - (p.n + p.delta) * k - c0;
    let mut k = k0;
    for i in 0..steps {
        let k1 = kdot(k);
        let k2 = kdot(k + h / 2.0 * k1);
        let k3 = kdot(k + h / 2.0 * k2);
        let k4 = kdot(k + h * k3);
        let next = k + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if !(next > 0.0 && next.is_finite()) {
            traj.status = Status::DomainExit {
                index: i,
                t: traj.t[i],
            };
            break;
        }
        k = next;
        traj.push(State::new(k, c0));
    }
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_is_exact_for_cubics() {
        let f = |x: f64| x * x * x - 2.0 * x;
        for n in [2usize, 3, 4, 5, 9] {
            let h = 2.0 / n as f64;
            let ys: Vec<f64> = (0..=n).map(|i| f(i as f64 * h)).collect();
            assert!((simpson(&ys, h) - 0.0).abs() < 1e-13, "n = {n}");
        }
    }

    #[test]
    fn constant_consumption_closed_form() {
        let p = GrowthParams::default();
        for (h, t_max) in [(0.01, 200.0), (0.01, 200.01)] {
            let n = (t_max / h) as usize + 1;
            let w = discounted_utility_series(0.0, h, &vec![1.0; n], &p).unwrap();
            assert!((w.total() + 20.0).abs() < 1e-6, "{}", w.total());
        }
        let log = GrowthParams { theta: 1.0, ..p };
        let w = discounted_utility_series(0.0, 0.1, &[1.0; 11], &log).unwrap();
        assert_eq!(w.total(), 0.0);
    }

    #[test]
    fn general_theta_closed_form() {
        // u_p = c^(1-theta) / ((1-theta) rho)
        let p = GrowthParams {
            theta: 3.0,
            rho: 0.04,
            ..GrowthParams::default()
        };
        let w = discounted_utility_series(0.0, 0.05, &vec![1.5; 4001], &p).unwrap();
        let exact = 1.5f64.powf(-2.0) / (-2.0 * 0.04);
        assert!((w.total() - exact).abs() < 1e-9);
    }

    #[test]
    fn non_positive_consumption_rejected() {
        let p = GrowthParams::default();
        assert!(discounted_utility_series(0.0, 0.1, &[1.0, 0.0, 1.0], &p).is_err());
    }
}
