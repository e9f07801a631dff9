use super::{GrowthError, Result};

/// Parameters of the growth model. Rates are per unit time; `alpha` and
/// `theta` are pure numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthParams {
    pub alpha: f64,
    pub a0: f64,
    pub rho: f64,
    pub n: f64,
    pub delta: f64,
    pub theta: f64,
}

impl Default for GrowthParams {
    fn default() -> Self {
        Self {
            alpha: 1.0 / 3.0,
            a0: 1.0,
            rho: 0.05,
            n: 0.01,
            delta: 0.05,
            theta: 2.0,
        }
    }
}

impl GrowthParams {
    pub fn new(alpha: f64, a0: f64, rho: f64, n: f64, delta: f64, theta: f64) -> Result<Self> {
        let p = Self {
            alpha,
            a0,
            rho,
            n,
            delta,
            theta,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(GrowthError::InvalidParams(msg.to_string()));
        let all = [self.alpha, self.a0, self.rho, self.n, self.delta, self.theta];
        if all.iter().any(|x| !x.is_finite()) {
            return bad("all parameters must be finite");
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return bad("alpha must lie in (0, 1)");
        }
        if self.a0 <= 0.0 {
            return bad("a0 must be positive");
        }
        if self.rho <= 0.0 {
            return bad("rho must be positive");
        }
        if self.theta <= 0.0 {
            return bad("theta must be positive");
        }
        if self.delta < 0.0 {
            return bad("delta must be non-negative");
        }
        if self.rho + self.n + self.delta <= 0.0 {
            return bad("rho + n + delta must be positive");
        }
        Ok(())
    }

    /// Effective discount on the marginal product, `rho + n + delta`.
    pub fn hurdle(&self) -> f64 {
        self.rho + self.n + self.delta
    }

    /// Marginal product `f'(k)`.
    pub fn marginal_product(&self, k: f64) -> f64 {
        self.a0 * self.alpha * k.powf(self.alpha - 1.0)
    }
}

/// Capital and consumption per capita.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State {
    pub k: f64,
    pub c: f64,
}

impl State {
    pub fn new(k: f64, c: f64) -> Self {
        Self { k, c }
    }

    pub fn distance(&self, other: &State) -> f64 {
        (self.k - other.k).hypot(self.c - other.c)
    }
}

fn require_capital(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(GrowthError::Domain(format!("capital must be positive, got {k}")))
    }
}

/// Output per capita `a0 k^alpha`.
pub fn production(k: f64, p: &GrowthParams) -> Result<f64> {
    require_capital(k)?;
    Ok(p.a0 * k.powf(p.alpha))
}

/// `(u(c), u'(c))` for CRRA utility; `theta == 1` is the log case.
pub fn crra_utility(c: f64, theta: f64) -> Result<(f64, f64)> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(GrowthError::Domain(format!("consumption must be positive, got {c}")));
    }
    if theta == 1.0 {
        Ok((c.ln(), 1.0 / c))
    } else {
        let mu = c.powf(-theta);
        Ok((c * mu / (1.0 - theta), mu))
    }
}

/// `(k', c')` at `s`.
pub fn rhs(s: State, p: &GrowthParams) -> Result<(f64, f64)> {
    require_capital(s.k)?;
    let ka = s.k.powf(p.alpha);
    let kdot = p.a0 * ka - (p.n + p.delta) * s.k - s.c;
    let cdot = s.c / p.theta * (p.a0 * p.alpha * ka / s.k - p.hurdle());
    Ok((kdot, cdot))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    pub state: State,
    /// Net return on capital, `f'(k*) - delta`.
    pub r: f64,
}

pub fn steady_state(p: &GrowthParams) -> Result<SteadyState> {
    p.validate()?;
    let k = (p.alpha * p.a0 / p.hurdle()).powf(1.0 / (1.0 - p.alpha));
    let c = p.a0 * k.powf(p.alpha) - (p.n + p.delta) * k;
    if !(k.is_finite() && c.is_finite() && k > 0.0 && c > 0.0) {
        return Err(GrowthError::NoSteadyState { k, c });
    }
    Ok(SteadyState {
        state: State { k, c },
        r: p.marginal_product(k) - p.delta,
    })
}

/// `[[dk'/dk, dk'/dc], [dc'/dk, dc'/dc]]`.
pub fn jacobian(s: State, p: &GrowthParams) -> Result<[[f64; 2]; 2]> {
    require_capital(s.k)?;
    let fp = p.marginal_product(s.k);
    let fpp = fp * (p.alpha - 1.0) / s.k;
    Ok([
        [fp - (p.n + p.delta), -1.0],
        [s.c / p.theta * fpp, (fp - p.hurdle()) / p.theta],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    // Root of f'(k) = rho + n + delta by plain bisection.
    fn bisect_capital(p: &GrowthParams) -> f64 {
        let g = |k: f64| p.marginal_product(k) - p.hurdle();
        let (mut lo, mut hi) = (1e-9f64, 1e9f64);
        for _ in 0..400 {
            let mid = (lo * hi).sqrt();
            if g(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo * hi).sqrt()
    }

    #[test]
    fn production_values() {
        let p = GrowthParams::default();
        assert_eq!(production(1.0, &p).unwrap(), 1.0);
        assert!(close(production(8.0, &p).unwrap(), 2.0, 1e-15));
        assert!(production(0.0, &p).is_err());
    }

    #[test]
    fn utility_values() {
        assert_eq!(crra_utility(2.0, 2.0).unwrap().1, 0.25);
        assert_eq!(crra_utility(1.0, 2.0).unwrap().0, -1.0);
        assert!(close(crra_utility(std::f64::consts::E, 1.0).unwrap().0, 1.0, 1e-15));
        assert!(crra_utility(0.0, 2.0).is_err());
    }

    #[test]
    fn rhs_by_hand() {
        let p = GrowthParams::default();
        let (kd, cd) = rhs(State::new(1.0, 1.0), &p).unwrap();
        assert!(close(kd, -0.06, 1e-14));
        assert!(close(cd, 0.5 * (1.0 / 3.0 - 0.11), 1e-14));
        let (kd, cd) = rhs(State::new(3.0, 0.0), &p).unwrap();
        assert_eq!(cd, 0.0);
        assert!(close(kd, 3f64.powf(1.0 / 3.0) - 0.06 * 3.0, 1e-15));
    }

    #[test]
    fn steady_state_matches_bisection() {
        let p = GrowthParams::default();
        let ss = steady_state(&p).unwrap();
        let k = bisect_capital(&p);
        let c = k.powf(1.0 / 3.0) - 0.06 * k;
        assert!(close(ss.state.k, k, 1e-10));
        assert!(close(ss.state.c, c, 1e-10));
        assert!((ss.state.k - 5.2751).abs() < 1e-4);
        assert!((ss.state.c - 1.4243).abs() < 1e-4);
        assert!(close(ss.r, p.rho + p.n, 1e-12));
        let (kd, cd) = rhs(ss.state, &p).unwrap();
        assert!(kd.abs() < 1e-10 && cd.abs() < 1e-10);
    }

    #[test]
    fn unit_capital_when_base_is_one() {
        let p = GrowthParams::new(0.4, 0.275, 0.05, 0.01, 0.05, 2.0).unwrap();
        assert!(close(steady_state(&p).unwrap().state.k, 1.0, 1e-12));
    }

    #[test]
    fn overflowing_steady_state_is_reported() {
        let p = GrowthParams::new(0.999, 10.0, 0.05, 0.01, 0.05, 2.0).unwrap();
        assert!(matches!(steady_state(&p), Err(GrowthError::NoSteadyState { .. })));
    }

    #[test]
    fn invalid_params() {
        assert!(GrowthParams::new(1.0, 1.0, 0.05, 0.01, 0.05, 2.0).is_err());
        assert!(GrowthParams::new(0.3, 1.0, 0.0, 0.01, 0.05, 2.0).is_err());
        assert!(GrowthParams::new(0.3, 1.0, 0.05, -0.2, 0.05, 2.0).is_err());
        assert!(GrowthParams::new(0.3, 1.0, 0.05, 0.01, -0.01, 2.0).is_err());
        assert!(GrowthParams::new(0.3, 1.0, 0.05, 0.01, 0.05, 0.0).is_err());
    }

    #[test]
    fn jacobian_against_finite_differences() {
        let p = GrowthParams::default();
        let s = State::new(2.3, 0.9);
        let j = jacobian(s, &p).unwrap();
        let e = 1e-6;
        let f = |s: State| rhs(s, &p).unwrap();
        let dk = |i: usize| {
            let (a, b) = (f(State::new(s.k + e, s.c)), f(State::new(s.k - e, s.c)));
            if i == 0 { (a.0 - b.0) / (2.0 * e) } else { (a.1 - b.1) / (2.0 * e) }
        };
        let dc = |i: usize| {
            let (a, b) = (f(State::new(s.k, s.c + e)), f(State::new(s.k, s.c - e)));
            if i == 0 { (a.0 - b.0) / (2.0 * e) } else { (a.1 - b.1) / (2.0 * e) }
        };
        assert!(close(j[0][0], dk(0), 1e-7));
        assert!(close(j[0][1], dc(0), 1e-7));
        assert!(close(j[1][0], dk(1), 1e-7));
        assert!(close(j[1][1], dc(1), 1e-7));
    }

    #[test]
    fn saddle_structure_at_steady_state() {
        let p = GrowthParams::default();
        let j = jacobian(steady_state(&p).unwrap().state, &p).unwrap();
        assert!(close(j[0][0] + j[1][1], p.rho, 1e-12));
        assert!(j[1][1].abs() < 1e-12);
        assert!(j[0][0] * j[1][1] - j[0][1] * j[1][0] < 0.0);
    }
}
