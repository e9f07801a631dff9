//! Classical fourth-order Runge–Kutta for fixed-size systems.

/// One RK4 step of `x' = f(t, x)`. The first error raised by a stage is
/// returned unchanged.
pub fn rk4_step<const N: usize, E, F>(f: &mut F, t: f64, x: &[f64; N], h: f64) -> Result<[f64; N], E>
where
    F: FnMut(f64, &[f64; N]) -> Result<[f64; N], E>,
{
    let axpy = |a: f64, k: &[f64; N]| -> [f64; N] { std::array::from_fn(|i| x[i] + a * k[i]) };
    let k1 = f(t, x)?;
    let k2 = f(t + h / 2.0, &axpy(h / 2.0, &k1))?;
    let k3 = f(t + h / 2.0, &axpy(h / 2.0, &k2))?;
    let k4 = f(t + h, &axpy(h, &k3))?;
    Ok(std::array::from_fn(|i| {
        x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
    }))
}

/// `steps` steps from `(t0, x0)`; returns every state including `x0`.
pub fn rk4_solve<const N: usize, E, F>(
    mut f: F,
    t0: f64,
    x0: [f64; N],
    h: f64,
    steps: usize,
) -> Result<Vec<[f64; N]>, E>
where
    F: FnMut(f64, &[f64; N]) -> Result<[f64; N], E>,
{
    let mut out = Vec::with_capacity(steps + 1);
    out.push(x0);
    let mut x = x0;
    for i in 0..steps {
        x = rk4_step(&mut f, t0 + i as f64 * h, &x, h)?;
        out.push(x);
    }
    Ok(out)
}

/// Global error at `t = 1` of `x' = -x, x(0) = 1` with `steps` RK4 steps.
pub fn decay_error(steps: usize) -> f64 {
    let h = 1.0 / steps as f64;
    let xs = rk4_solve(|_, x: &[f64; 1]| Ok::<_, ()>([-x[0]]), 0.0, [1.0], h, steps).unwrap();
    (xs[steps][0] - (-1f64).exp()).abs()
}
