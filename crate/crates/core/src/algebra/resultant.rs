//! Sylvester resultants via fraction-free (Bareiss) elimination over the
//! polynomial ring in the remaining variables.

use super::{MPoly, Var};
use crate::{Error, Result};

/// Sylvester matrix of `p` and `q` in `v`: `deg q` shifted rows of `p`'s
/// coefficients (highest power first) above `deg p` shifted rows of `q`'s.
pub fn sylvester_matrix(p: &MPoly, q: &MPoly, v: Var) -> Result<Vec<Vec<MPoly>>> {
    let (m, n) = (p.degree_in(v) as usize, q.degree_in(v) as usize);
    if m == 0 || n == 0 {
        return Err(Error::Degenerate(format!(
            "both polynomials need positive degree in {}",
            v.name()
        )));
    }
    let pc = p.coefficients_in(v);
    let qc = q.coefficients_in(v);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, deg, shifts) in [(&pc, m, n), (&qc, n, m)] {
        for s in 0..shifts {
            let mut row = vec![MPoly::zero(); size];
            for k in 0..=deg {
                row[s + k] = coeffs[deg - k].clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Determinant by Bareiss elimination: every intermediate entry is a minor
/// of the input, so the division by the previous pivot is exact.
pub fn bareiss_determinant(matrix: &[Vec<MPoly>]) -> MPoly {
    let n = matrix.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut a: Vec<Vec<MPoly>> = matrix.to_vec();
    let mut sign_flip = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return MPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly by the previous pivot");
            }
            a[i][k] = MPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// `Res_v(p, q)` as the Sylvester determinant with `p`'s rows first.
pub fn sylvester_resultant(p: &MPoly, q: &MPoly, v: Var) -> Result<MPoly> {
    Ok(bareiss_determinant(&sylvester_matrix(p, q, v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::tests::small_poly;
    use crate::algebra::parse_poly;
    use proptest::prelude::*;

    fn poly(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn linear_factors() {
        // x = gamma, a = beta, b = mu
        let r = sylvester_resultant(&poly("gamma - beta"), &poly("gamma - mu"), Var::Gamma).unwrap();
        assert_eq!(r, poly("mu - beta").scale(&(-num_rational::BigRational::from_integer(1.into()))));
    }

    #[test]
    fn common_root_gives_zero() {
        let r = sylvester_resultant(&poly("gamma^2 - 1"), &poly("gamma - 1"), Var::Gamma).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn matrix_shape() {
        let m = sylvester_matrix(&poly("gamma^2 + beta*gamma + 1"), &poly("2*gamma - mu"), Var::Gamma).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m[0], vec![MPoly::one(), poly("beta"), MPoly::one()]);
        assert_eq!(m[1], vec![poly("2"), poly("-mu"), MPoly::zero()]);
        assert_eq!(m[2], vec![MPoly::zero(), poly("2"), poly("-mu")]);
    }

    #[test]
    fn constant_input_is_degenerate() {
        assert!(matches!(
            sylvester_resultant(&poly("beta"), &poly("gamma"), Var::Gamma),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn pivoting_through_zero_leading_entry() {
        let m = vec![
            vec![MPoly::zero(), poly("beta")],
            vec![poly("gamma"), MPoly::one()],
        ];
        assert_eq!(bareiss_determinant(&m), -poly("beta*gamma"));
    }

    /// Laplace expansion along the first row; test oracle only.
    pub(crate) fn cofactor_determinant(m: &[Vec<MPoly>]) -> MPoly {
        if m.is_empty() {
            return MPoly::one();
        }
        let mut det = MPoly::zero();
        for (j, entry) in m[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<MPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
                .collect();
            let term = entry * &cofactor_determinant(&minor);
            det = if j % 2 == 0 { &det + &term } else { &det - &term };
        }
        det
    }

    fn with_gamma(deg: u16) -> impl Strategy<Value = MPoly> {
        proptest::collection::vec(small_poly(), deg as usize..=deg as usize).prop_map(move |cs| {
            let lead = &MPoly::var(Var::Gamma).pow(deg as u32) * &MPoly::var(Var::Mu);
            cs.into_iter().enumerate().fold(lead, |acc, (k, c)| {
                let c = c.specialize(Var::Gamma, &num_rational::BigRational::from_integer(0.into()));
                &acc + &(&c * &MPoly::var(Var::Gamma).pow(k as u32))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn swap_sign(
            (p, q) in (1u16..4, 1u16..4).prop_flat_map(|(dp, dq)| (with_gamma(dp), with_gamma(dq)))
        ) {
            let pq = sylvester_resultant(&p, &q, Var::Gamma).unwrap();
            let qp = sylvester_resultant(&q, &p, Var::Gamma).unwrap();
            if (p.degree_in(Var::Gamma) * q.degree_in(Var::Gamma)) % 2 == 0 {
                prop_assert_eq!(pq, qp);
            } else {
                prop_assert_eq!(pq, -qp);
            }
        }

        #[test]
        fn bareiss_matches_cofactor_expansion(entries in proptest::collection::vec(small_poly(), 16)) {
            let m: Vec<Vec<MPoly>> = entries.chunks(4).map(|r| r.to_vec()).collect();
            prop_assert_eq!(bareiss_determinant(&m), cofactor_determinant(&m));
        }
    }
}
