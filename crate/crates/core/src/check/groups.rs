//! Dimensionless products of a set of variables (nullspace of the exponent
//! matrix).

use num_integer::Integer;
use num_traits::Zero;

use crate::dim::{Dimension, Rational};
use crate::linalg::nullspace;

/// A basis of dimensionless products `Π var_i^e_i`.
///
/// Each vector is scaled to the smallest integer form with its first
/// nonzero entry positive; vectors come in order of the free columns, so the
/// output is deterministic for a given variable order.
pub fn dimensionless_groups(vars: &[(String, Dimension)]) -> Vec<Vec<i64>> {
    let Some((_, first)) = vars.first() else {
        return Vec::new();
    };
    let bases = first.system().len();
    let columns: Vec<Vec<Rational>> = vars.iter().map(|(_, d)| d.to_vec()).collect();
    let matrix: Vec<Vec<Rational>> = (0..bases)
        .map(|b| columns.iter().map(|col| col[b]).collect())
        .collect();
    nullspace(&matrix, vars.len())
        .into_iter()
        .map(|v| integer_scaled(&v))
        .collect()
}

fn integer_scaled(v: &[Rational]) -> Vec<i64> {
    let lcm = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (*x * lcm).to_integer()).collect();
    let gcd = ints.iter().fold(0i64, |acc, x| acc.gcd(x)).max(1);
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if *x < 0 => -1,
        _ => 1,
    };
    ints.iter().map(|x| sign * x / gcd).collect()
}

/// Renders a group as `rho*delta^(-1)`; `1` for the empty product.
pub fn format_group(names: &[&str], exps: &[i64]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, e)| **e != 0)
        .map(|(n, e)| match e {
            1 => n.to_string(),
            e if *e > 0 => format!("{n}^{e}"),
            e => format!("{n}^({e})"),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}
