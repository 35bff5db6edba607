//! Symmetric 3×3 eigenvalues.
//!
//! The closed-form trigonometric solution of the characteristic cubic is
//! used unless two eigenvalues come within [`CLUSTER_GAP`] of each other, in
//! which case a cyclic Jacobi iteration takes over. Geodesic spheres have a
//! double principal curvature, so the fallback is hit routinely.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};

pub const CLUSTER_GAP: f64 = 1e-10;

const JACOBI_MAX_SWEEPS: usize = 64;

/// Eigenvalues of a symmetric matrix, ascending.
pub fn sym3_eigenvalues(m: &Matrix3<f64>) -> [f64; 3] {
    let ev = characteristic_eigenvalues(m);
    if ev[1] - ev[0] < CLUSTER_GAP || ev[2] - ev[1] < CLUSTER_GAP {
        jacobi_eigen(m).0
    } else {
        ev
    }
}

/// Roots of `det(λI - m)` by the trigonometric formula, ascending.
pub fn characteristic_eigenvalues(m: &Matrix3<f64>) -> [f64; 3] {
    let off = m[(0, 1)].powi(2) + m[(0, 2)].powi(2) + m[(1, 2)].powi(2);
    if off == 0.0 {
        let mut d = [m[(0, 0)], m[(1, 1)], m[(2, 2)]];
        d.sort_by(f64::total_cmp);
        return d;
    }
    let q = m.trace() / 3.0;
    let p2 = (m[(0, 0)] - q).powi(2) + (m[(1, 1)] - q).powi(2) + (m[(2, 2)] - q).powi(2) + 2.0 * off;
    let p = (p2 / 6.0).sqrt();
    let b = (m - Matrix3::identity() * q) / p;
    let r = (b.determinant() / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let largest = q + 2.0 * p * phi.cos();
    let smallest = q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos();
    let middle = 3.0 * q - largest - smallest;
    [smallest, middle, largest]
}

/// Cyclic Jacobi rotations. Returns ascending eigenvalues and the matching
/// unit eigenvectors as columns.
pub fn jacobi_eigen(m: &Matrix3<f64>) -> ([f64; 3], Matrix3<f64>) {
    let mut a = *m;
    let mut v = Matrix3::<f64>::identity();
    let scale = m.amax().max(f64::MIN_POSITIVE);
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off = a[(0, 1)].abs() + a[(0, 2)].abs() + a[(1, 2)].abs();
        if off <= 1e-17 * scale {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let apq = a[(p, q)];
            if apq == 0.0 {
                continue;
            }
            let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let t = if theta == 0.0 { 1.0 } else { t };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let mut rot = Matrix3::<f64>::identity();
            rot[(p, p)] = c;
            rot[(q, q)] = c;
            rot[(p, q)] = s;
            rot[(q, p)] = -s;
            a = rot.transpose() * a * rot;
            a[(p, q)] = 0.0;
            a[(q, p)] = 0.0;
            v *= rot;
        }
    }
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = idx.map(|i| a[(i, i)]);
    let vectors = Matrix3::from_columns(&idx.map(|i| v.column(i).into_owned()));
    (values, vectors)
}

/// Orthonormal pair spanning the plane with unit normal `n`, oriented so
/// that `x × y = n`.
pub fn plane_basis(n: &Vector3<f64>) -> (Vector3<f64>, Vector3<f64>) {
    let helper = if n.x.abs() < 0.6 {
        Vector3::x()
    } else if n.y.abs() < 0.6 {
        Vector3::y()
    } else {
        Vector3::z()
    };
    let x = (helper - n * n.dot(&helper)).normalize();
    let y = n.cross(&x);
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sym() -> impl Strategy<Value = Matrix3<f64>> {
        proptest::array::uniform6(-5.0f64..5.0).prop_map(|e| {
            Matrix3::new(e[0], e[1], e[2], e[1], e[3], e[4], e[2], e[4], e[5])
        })
    }

    fn reference(m: &Matrix3<f64>) -> [f64; 3] {
        let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        [ev[0], ev[1], ev[2]]
    }

    proptest! {
        #[test]
        fn agrees_with_reference_solver(m in sym()) {
            let ours = sym3_eigenvalues(&m);
            let theirs = reference(&m);
            for k in 0..3 {
                prop_assert!((ours[k] - theirs[k]).abs() < 1e-9 * (1.0 + m.amax()));
            }
        }

        #[test]
        fn jacobi_diagonalizes(m in sym()) {
            let (vals, vecs) = jacobi_eigen(&m);
            let d = Matrix3::from_diagonal(&Vector3::from(vals));
            prop_assert!((vecs * d * vecs.transpose() - m).amax() < 1e-12 * (1.0 + m.amax()));
            prop_assert!((vecs.transpose() * vecs - Matrix3::identity()).amax() < 1e-13);
        }

        #[test]
        fn plane_basis_is_oriented(v in proptest::array::uniform3(-1.0f64..1.0)) {
            let n = Vector3::from(v);
            prop_assume!(n.norm() > 1e-3);
            let n = n.normalize();
            let (x, y) = plane_basis(&n);
            prop_assert!((x.cross(&y) - n).amax() < 1e-14);
            prop_assert!(x.dot(&n).abs() < 1e-15 && (x.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn double_eigenvalue_uses_fallback() {
        // rotated diag(0, 1, 1)
        let c = 0.6f64;
        let s = 0.8f64;
        let r = Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0);
        let m = r * Matrix3::from_diagonal(&Vector3::new(0.0, 1.0, 1.0)) * r.transpose();
        let ev = sym3_eigenvalues(&m);
        assert!((ev[0]).abs() < 1e-15);
        assert!((ev[1] - 1.0).abs() < 1e-15 && (ev[2] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn diagonal_shortcut() {
        let m = Matrix3::from_diagonal(&Vector3::new(3.0, -1.0, 2.0));
        assert_eq!(characteristic_eigenvalues(&m), [-1.0, 2.0, 3.0]);
    }
}
