use nalgebra::Matrix3;

use super::{AmbientVector, Param, SurfaceChart};
use crate::{Error, Result};

/// Smallest admissible Gram-Schmidt remainder before a frame is declared
/// rank-deficient.
pub const RANK_THRESHOLD: f64 = 1e-8;

/// Projects `w` onto the horizontal space at `p`, the orthogonal complement
/// of `span{p, i·p}` in `R⁶`.
pub fn horizontalize(w: &AmbientVector, p: &AmbientVector) -> AmbientVector {
    let ip = p.mul_i();
    w.axpy(-w.dot(&ip), &ip).axpy(-w.dot(p), p)
}

/// Horizontal orthonormal tangent frame and unit normal at a chart point.
#[derive(Debug, Clone, PartialEq)]
pub struct MovingFrame {
    pub p: AmbientVector,
    /// Fiber direction `i·p`.
    pub vertical: AmbientVector,
    /// Horizontalized chart partials `H_a`.
    pub horizontal: [AmbientVector; 3],
    pub e: [AmbientVector; 3],
    pub normal: AmbientVector,
    /// Row `i` holds the coefficients of `E_i` in the basis `H_1, H_2, H_3`.
    pub coeffs: Matrix3<f64>,
}

impl MovingFrame {
    /// Coordinates of an ambient vector in the tangent frame.
    pub fn project(&self, w: &AmbientVector) -> [f64; 3] {
        [w.dot(&self.e[0]), w.dot(&self.e[1]), w.dot(&self.e[2])]
    }

    /// Largest deviation of `{p, i·p, E1, E2, E3, N}` from an orthonormal set.
    pub fn orthonormality_defect(&self) -> f64 {
        let all = [
            self.p,
            self.vertical,
            self.e[0],
            self.e[1],
            self.e[2],
            self.normal,
        ];
        let mut worst: f64 = 0.0;
        for i in 0..all.len() {
            for j in i..all.len() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((all[i].dot(&all[j]) - target).abs());
            }
        }
        worst
    }

    pub(crate) fn flip_normal(&mut self) {
        self.normal = -self.normal;
    }
}

/// Builds the horizontal frame at `q`: horizontalize the chart partials,
/// orthonormalize them with modified Gram-Schmidt, and complete with the
/// unit normal, whose largest-magnitude real coordinate is made positive.
pub fn build_frame(chart: &dyn SurfaceChart, q: Param) -> Result<MovingFrame> {
    let p = chart.evaluate(q);
    let vertical = p.mul_i();
    let partials = chart.partials(q);
    let horizontal = partials.map(|d| horizontalize(&d, &p));

    let mut e = [AmbientVector::ZERO; 3];
    let mut coeffs = Matrix3::<f64>::zeros();
    let mut smallest = f64::INFINITY;
    for a in 0..3 {
        let mut w = horizontal[a];
        let mut row = nalgebra::RowVector3::<f64>::zeros();
        row[a] = 1.0;
        for b in 0..a {
            let c = w.dot(&e[b]);
            w = w.axpy(-c, &e[b]);
            row -= coeffs.row(b) * c;
        }
        let len = w.norm();
        smallest = smallest.min(len);
        if len < RANK_THRESHOLD {
            return Err(Error::RankDeficient {
                remainder: len,
                threshold: RANK_THRESHOLD,
            });
        }
        e[a] = w.scale(1.0 / len);
        coeffs.set_row(a, &(row / len));
    }
    debug_assert!(smallest >= RANK_THRESHOLD);

    let normal = complete_normal(&[p, vertical, e[0], e[1], e[2]]);
    Ok(MovingFrame {
        p,
        vertical,
        horizontal,
        e,
        normal,
        coeffs,
    })
}

/// The unit vector of `R⁶` orthogonal to five orthonormal vectors, with the
/// sign making its largest-magnitude coordinate positive.
fn complete_normal(basis: &[AmbientVector; 5]) -> AmbientVector {
    let reject = |mut w: AmbientVector| {
        for b in basis {
            w = w.axpy(-w.dot(b), b);
        }
        w
    };
    let mut best = AmbientVector::ZERO;
    let mut best_len = -1.0;
    for k in 0..6 {
        let r = reject(AmbientVector::unit(k));
        let len = r.norm();
        if len > best_len {
            best = r;
            best_len = len;
        }
    }
    // second pass removes what roundoff left of the basis components
    let n = reject(best.normalized()).normalized();
    let re = n.to_real();
    let lead = re
        .iter()
        .copied()
        .reduce(|a, b| if b.abs() > a.abs() { b } else { a })
        .unwrap_or(1.0);
    if lead < 0.0 {
        -n
    } else {
        n
    }
}
