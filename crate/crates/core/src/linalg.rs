//! Minimal complex linear algebra: singular values by one-sided Jacobi.
//! Sized for the small matrices that show up when reshaping few-qubit
//! states; no external solver needed.
//!
//! One-sided Jacobi rotates column pairs of the matrix itself until all
//! columns are mutually orthogonal, so zero singular values come out at
//! rounding level (~ε‖A‖) rather than the √ε‖A‖ a Gram-matrix route would
//! give; that headroom is what keeps the 1e-9 rank threshold trustworthy.

use num_complex::Complex;

use crate::scalar::Real;

/// Singular values of an `m×n` complex matrix (row-major), descending.
#[allow(clippy::needless_range_loop)] // paired-column updates index two columns at once
pub(crate) fn singular_values<F: Real>(a: &[Vec<Complex<F>>]) -> Vec<F> {
    let m = a.len();
    if m == 0 {
        return Vec::new();
    }
    let n = a[0].len();
    // columns of A
    let mut cols: Vec<Vec<Complex<F>>> =
        (0..n).map(|j| (0..m).map(|i| a[i][j]).collect()).collect();
    let eps = F::epsilon();
    for _sweep in 0..60 {
        let mut converged = true;
        for p in 0..n {
            for q in p + 1..n {
                let mut app = F::zero();
                let mut aqq = F::zero();
                let mut apq = Complex::new(F::zero(), F::zero());
                for i in 0..m {
                    app += cols[p][i].norm_sqr();
                    aqq += cols[q][i].norm_sqr();
                    apq += cols[p][i].conj() * cols[q][i];
                }
                let mag = apq.norm();
                if mag <= eps * (app * aqq).sqrt() {
                    continue;
                }
                converged = false;
                // phase-align column q so the inner product is real, then
                // apply the real rotation diagonalizing the 2×2 Gram block
                let u = (apq / Complex::new(mag, F::zero())).conj();
                let tau = (aqq - app) / (mag + mag);
                let t = if tau >= F::zero() {
                    F::one() / (tau + (F::one() + tau * tau).sqrt())
                } else {
                    -F::one() / (-tau + (F::one() + tau * tau).sqrt())
                };
                let c = F::one() / (F::one() + t * t).sqrt();
                let s = t * c;
                for i in 0..m {
                    let vq = cols[q][i] * u;
                    let vp = cols[p][i];
                    cols[p][i] = vp * c - vq * s;
                    cols[q][i] = vp * s + vq * c;
                }
            }
        }
        if converged {
            break;
        }
    }
    let mut sv: Vec<F> = cols
        .iter()
        .map(|col| {
            col.iter()
                .fold(F::zero(), |acc, e| acc + e.norm_sqr())
                .sqrt()
        })
        .collect();
    sv.sort_by(|x, y| y.partial_cmp(x).expect("finite singular values"));
    sv
}
