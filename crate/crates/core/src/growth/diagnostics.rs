//! Residual checks of sampled paths against the optimality conditions and
//! the income growth decomposition.

use super::integrate::Trajectory;
use super::model::GrowthParams;
use super::ode::rk4_solve;
use super::{GrowthError, Result};

/// Largest residuals of the costate equation (`r1`) and capital
/// accumulation (`r2`) over the interior grid points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerResiduals {
    pub r1: f64,
    pub r2: f64,
}

/// Costate `mu = u'(c)` must satisfy `mu' = mu (rho + n + delta - f'(k))`,
/// capital `k' = f(k) - (n + delta) k - c`. Derivatives are central
/// differences.
pub fn euler_residual(traj: &Trajectory, p: &GrowthParams) -> Result<EulerResiduals> {
    let n = traj.len();
    if n < 3 {
        return Err(GrowthError::GridTooShort(n));
    }
    let mu = traj.mu(p);
    let h2 = 2.0 * traj.h;
    let mut r1: f64 = 0.0;
    let mut r2: f64 = 0.0;
    for i in 1..n - 1 {
        let (k, c) = (traj.k[i], traj.c[i]);
        let mudot = (mu[i + 1] - mu[i - 1]) / h2;
        r1 = r1.max((mudot - mu[i] * (p.hurdle() - p.marginal_product(k))).abs());
        let kdot = (traj.k[i + 1] - traj.k[i - 1]) / h2;
        let model = p.a0 * k.powf(p.alpha) - (p.n + p.delta) * k - c;
        r2 = r2.max((kdot - model).abs());
    }
    Ok(EulerResiduals { r1, r2 })
}

/// Largest gap between the two sides of
/// `y'/y = beta r'/r + beta k'/k + (1 - beta) w'/w` with `y = r k + w n` and
/// `beta = r k / y`, from series sampled with step `h`.
pub fn decomposition_residual(r: &[f64], w: &[f64], k: &[f64], n: f64, h: f64) -> Result<f64> {
    let len = r.len().min(w.len()).min(k.len());
    if len < 3 {
        return Err(GrowthError::GridTooShort(len));
    }
    let y: Vec<f64> = (0..len).map(|i| r[i] * k[i] + w[i] * n).collect();
    let d = |s: &[f64], i: usize| (s[i + 1] - s[i - 1]) / (2.0 * h);
    let mut worst: f64 = 0.0;
    for i in 1..len - 1 {
        let beta = r[i] * k[i] / y[i];
        let lhs = d(&y, i) / y[i];
        let rhs = beta * d(r, i) / r[i] + beta * d(k, i) / k[i] + (1.0 - beta) * d(w, i) / w[i];
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Integrates `y'/y = alpha k'/k` along a capital path with RK4 from
/// `y(0) = a0 k(0)^alpha` and returns the largest relative gap to
/// `a0 k(t)^alpha` on `[0, t_max]`.
pub fn cobb_douglas_reproduction<K, D>(alpha: f64, a0: f64, k: K, kdot: D, t_max: f64, h: f64) -> f64
where
    K: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let steps = (t_max / h).round() as usize;
    let y0 = a0 * k(0.0).powf(alpha);
    let ys = rk4_solve(
        |t, y: &[f64; 1]| Ok::<_, ()>([y[0] * alpha * kdot(t) / k(t)]),
        0.0,
        [y0],
        h,
        steps,
    )
    .expect("infallible");
    ys.iter()
        .enumerate()
        .map(|(i, y)| {
            let exact = a0 * k(i as f64 * h).powf(alpha);
            ((y[0] - exact) / exact).abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::{steady_state, Trajectory, State};

    fn synthetic(h: f64) -> f64 {
        let n = (10.0 / h).round() as usize + 1;
        let t: Vec<f64> = (0..n).map(|i| i as f64 * h).collect();
        let r: Vec<f64> = t.iter().map(|t| 0.1 + 0.01 * t.sin()).collect();
        let w: Vec<f64> = t.iter().map(|t| 1.0 + 0.1 * t.cos()).collect();
        let k: Vec<f64> = t.iter().map(|t| 2.0 + 0.5 * (t / 2.0).sin()).collect();
        decomposition_residual(&r, &w, &k, 0.01, h).unwrap()
    }

    #[test]
    fn decomposition_is_second_order() {
        let (a, b) = (synthetic(0.002), synthetic(0.001));
        assert!(b < 1e-5, "{b}");
        assert!((a / b - 4.0).abs() < 0.2, "{}", a / b);
    }

    #[test]
    fn constant_series_have_no_residual() {
        let c = [1.0; 5];
        assert_eq!(decomposition_residual(&c, &c, &c, 0.01, 0.1).unwrap(), 0.0);
    }

    #[test]
    fn steady_path_has_zero_euler_residual() {
        let p = GrowthParams::default();
        let ss = steady_state(&p).unwrap().state;
        let mut tr = Trajectory::start(0.0, 0.01, ss);
        for _ in 0..10 {
            tr.push(ss);
        }
        let e = euler_residual(&tr, &p).unwrap();
        assert!(e.r1 < 1e-10 && e.r2 < 1e-10);
    }

    #[test]
    fn short_grid() {
        let p = GrowthParams::default();
        let tr = Trajectory::start(0.0, 0.01, State::new(1.0, 1.0));
        assert_eq!(euler_residual(&tr, &p), Err(GrowthError::GridTooShort(1)));
    }

    #[test]
    fn cobb_douglas_recovered() {
        let err = cobb_douglas_reproduction(
            1.0 / 3.0,
            1.0,
            |t| 2.0 + 0.5 * (t / 2.0).sin(),
            |t| 0.25 * (t / 2.0).cos(),
            20.0,
            0.01,
        );
        assert!(err < 1e-6, "{err}");
    }
}
