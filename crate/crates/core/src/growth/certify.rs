use crate::dim::rational::format_rational;
use crate::dim::Rational;

/// The equations integrated by this module, as a model file whose
/// productivity level is left for the solver. `alpha` must lie in (0, 1).
pub fn certification_model(alpha: Rational) -> String {
    let a = format_rational(alpha);
    let am1 = format_rational(alpha - Rational::from_integer(1));
    format!(
        "# Per-capita growth system as integrated numerically.
dims T QK QP U

var k : QK/QP
var c : QK/(QP*T)
var y : QK/(QP*T)
var mu : U/QK
var a0 : infer

param alpha : 1 = {a}
param theta : 1
param n : 1/T
param delta : 1/T
param rho : 1/T

fn uprime(QK/(QP*T)) -> U/QK

eq production: y = a0*k^alpha
eq capital: der(k) = a0*k^alpha - (n + delta)*k - c
eq consumption: der(c) = c/theta*(a0*alpha*k^({am1}) - (rho + n + delta))
eq marginal_utility: uprime(c) = mu
eq costate: der(mu) = mu*(rho + n + delta - a0*alpha*k^({am1}))
"
    )
}
