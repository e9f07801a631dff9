/// Eigen-decomposition of a real 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eigen2 {
    /// Ascending eigenvalues and matching unit eigenvectors, each with its
    /// first nonzero component positive.
    Real { values: [f64; 2], vectors: [[f64; 2]; 2] },
    /// The conjugate pair `re ± i·im`, `im > 0`.
    Complex { re: f64, im: f64 },
}

impl Eigen2 {
    pub fn trace(&self) -> f64 {
        match self {
            Eigen2::Real { values, .. } => values[0] + values[1],
            Eigen2::Complex { re, .. } => 2.0 * re,
        }
    }
}

pub fn eigen2(m: [[f64; 2]; 2]) -> Eigen2 {
    let [[a, b], [c, d]] = m;
    let tr = a + d;
    let det = a * d - b * c;
    let disc = tr * tr - 4.0 * det;
    if disc < 0.0 {
        return Eigen2::Complex {
            re: tr / 2.0,
            im: (-disc).sqrt() / 2.0,
        };
    }
    // Larger-magnitude root first, the other from the product, to avoid
    // cancellation.
    let big = (tr + tr.signum() * disc.sqrt()) / 2.0;
    let small = if big == 0.0 { 0.0 } else { det / big };
    let (l1, l2) = if big <= small { (big, small) } else { (small, big) };

    // `m - lambda I` only vanishes for a multiple of the identity, where any
    // basis is an eigenbasis.
    let vectors = match (eigenvector(m, l1), eigenvector(m, l2)) {
        (Some(v1), Some(v2)) => [v1, v2],
        _ => [[1.0, 0.0], [0.0, 1.0]],
    };
    Eigen2::Real {
        values: [l1, l2],
        vectors,
    }
}

/// A null vector of `m - lambda I`, or `None` when that matrix vanishes.
fn eigenvector(m: [[f64; 2]; 2], lambda: f64) -> Option<[f64; 2]> {
    let [[a, b], [c, d]] = m;
    let r1 = [b, lambda - a];
    let r2 = [lambda - d, c];
    let n1 = r1[0].hypot(r1[1]);
    let n2 = r2[0].hypot(r2[1]);
    let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs()).max(1.0);
    let (v, n) = if n1 >= n2 { (r1, n1) } else { (r2, n2) };
    if n <= 1e-14 * scale {
        return None;
    }
    let mut v = [v[0] / n, v[1] / n];
    let first = if v[0] != 0.0 { v[0] } else { v[1] };
    if first < 0.0 {
        v = [-v[0], -v[1]];
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(m: [[f64; 2]; 2], l: f64, v: [f64; 2]) -> f64 {
        let r0 = m[0][0] * v[0] + m[0][1] * v[1] - l * v[0];
        let r1 = m[1][0] * v[0] + m[1][1] * v[1] - l * v[1];
        r0.hypot(r1)
    }

    #[test]
    fn identity() {
        let e = eigen2([[1.0, 0.0], [0.0, 1.0]]);
        assert_eq!(
            e,
            Eigen2::Real {
                values: [1.0, 1.0],
                vectors: [[1.0, 0.0], [0.0, 1.0]]
            }
        );
    }

    #[test]
    fn diagonal() {
        match eigen2([[-1.0, 0.0], [0.0, 2.0]]) {
            Eigen2::Real { values, vectors } => {
                assert_eq!(values, [-1.0, 2.0]);
                assert_eq!(vectors, [[1.0, 0.0], [0.0, 1.0]]);
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn rotation_is_complex() {
        assert_eq!(
            eigen2([[0.0, -1.0], [1.0, 0.0]]),
            Eigen2::Complex { re: 0.0, im: 1.0 }
        );
    }

    #[test]
    fn general_matrix_vectors_satisfy_definition() {
        let m = [[0.05, -1.0], [-0.0099, 0.0]];
        match eigen2(m) {
            Eigen2::Real { values, vectors } => {
                assert!(values[0] < 0.0 && values[1] > 0.0);
                assert!((values[0] + values[1] - 0.05).abs() < 1e-15);
                assert!((values[0] * values[1] + 0.0099).abs() < 1e-15);
                for i in 0..2 {
                    assert!(residual(m, values[i], vectors[i]) < 1e-14);
                    assert!(vectors[i][0] > 0.0);
                    assert!((vectors[i][0].hypot(vectors[i][1]) - 1.0).abs() < 1e-15);
                }
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn tiny_root_keeps_precision() {
        // Roots 1e8 and 1e-8: the naive formula loses the small one.
        let m = [[1e8, 0.0], [0.0, 1e-8]];
        match eigen2(m) {
            Eigen2::Real { values, .. } => {
                assert!((values[0] - 1e-8).abs() < 1e-22);
                assert_eq!(values[1], 1e8);
            }
            e => panic!("{e:?}"),
        }
    }
}
