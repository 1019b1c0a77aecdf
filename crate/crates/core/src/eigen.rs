//! Eigenvalues of a dense real symmetric matrix: Householder reduction to
//! tridiagonal form followed by implicitly shifted QL iterations.

use alloc::vec::Vec;

/// The QL sweep ran out of rotations before every off-diagonal entry
/// vanished. `diagonal` holds the partially converged diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct NoConvergence {
    pub rotations: usize,
    pub diagonal: Vec<f64>,
}

/// Reduces the row-major symmetric `a` (n by n) to tridiagonal form.
/// Returns the diagonal `d` and subdiagonal `e` (`e[i]` couples `i` and
/// `i + 1`; its last slot is zero).
pub fn tridiagonalize(a: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    assert_eq!(a.len(), n * n, "matrix must be n by n");
    let mut m = a.to_vec();
    let mut d = alloc::vec![0.0; n];
    let mut e = alloc::vec![0.0; n];
    if n == 0 {
        return (d, e);
    }
    let mut v = alloc::vec![0.0; n];
    let mut p = alloc::vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let lo = k + 1;
        let norm = (lo..n).map(|i| m[i * n + k] * m[i * n + k]).sum::<f64>().sqrt();
        d[k] = m[k * n + k];
        if norm == 0.0 {
            e[k] = 0.0;
            continue;
        }
        let x0 = m[lo * n + k];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        for i in lo..n {
            v[i] = m[i * n + k];
        }
        v[lo] -= alpha;
        let vnorm = (lo..n).map(|i| v[i] * v[i]).sum::<f64>().sqrt();
        e[k] = alpha;
        if vnorm == 0.0 {
            continue;
        }
        for vi in &mut v[lo..n] {
            *vi /= vnorm;
        }
        // p = M v on the trailing block, then q = p - (v.p) v
        for i in lo..n {
            p[i] = (lo..n).map(|j| m[i * n + j] * v[j]).sum();
        }
        let kappa: f64 = (lo..n).map(|i| v[i] * p[i]).sum();
        for i in lo..n {
            p[i] -= kappa * v[i];
        }
        for i in lo..n {
            for j in lo..n {
                m[i * n + j] -= 2.0 * (v[i] * p[j] + p[i] * v[j]);
            }
        }
    }
    if n >= 2 {
        d[n - 2] = m[(n - 2) * n + (n - 2)];
        e[n - 2] = m[(n - 1) * n + (n - 2)];
    }
    d[n - 1] = m[(n - 1) * n + (n - 1)];
    e[n - 1] = 0.0;
    (d, e)
}

/// Eigenvalues of the symmetric tridiagonal matrix `(d, e)`, unsorted.
pub fn tridiagonal_ql(
    mut d: Vec<f64>,
    mut e: Vec<f64>,
    max_rotations: usize,
) -> Result<Vec<f64>, NoConvergence> {
    let n = d.len();
    if n == 0 {
        return Ok(d);
    }
    e[n - 1] = 0.0;
    let mut rotations = 0usize;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0f64, 1.0f64, 0.0f64);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                rotations += 1;
                if rotations > max_rotations {
                    return Err(NoConvergence { rotations, diagonal: d });
                }
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(d)
}

/// All eigenvalues of the row-major symmetric matrix `a`, sorted
/// descending, with a budget of `100 n^2` QL rotations.
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Result<Vec<f64>, NoConvergence> {
    let (d, e) = tridiagonalize(a, n);
    let mut vals = tridiagonal_ql(d, e, 100 * n * n.max(1))?;
    vals.sort_by(|x, y| y.total_cmp(x));
    Ok(vals)
}

/// Backward-error bound `n eps ||A||_inf` for the computed eigenvalues.
pub fn error_bound(a: &[f64], n: usize) -> f64 {
    let inf_norm = (0..n)
        .map(|i| a[i * n..(i + 1) * n].iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    4.0 * (n.max(1) as f64) * f64::EPSILON * inf_norm.max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_by_two() {
        let v = symmetric_eigenvalues(&[0.0, 1.0, 1.0, 0.0], 2).unwrap();
        assert!((v[0] - 1.0).abs() < 1e-15 && (v[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn dense_known_spectrum() {
        // [[2,1,0],[1,2,1],[0,1,2]] has eigenvalues 2 + sqrt2, 2, 2 - sqrt2
        let a = [2.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0];
        let v = symmetric_eigenvalues(&a, 3).unwrap();
        let r2 = core::f64::consts::SQRT_2;
        for (got, want) in v.iter().zip([2.0 + r2, 2.0, 2.0 - r2]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn diagonal_and_empty() {
        assert!(symmetric_eigenvalues(&[], 0).unwrap().is_empty());
        let v = symmetric_eigenvalues(&[3.0, 0.0, 0.0, -1.0], 2).unwrap();
        assert_eq!(v, vec![3.0, -1.0]);
        assert_eq!(symmetric_eigenvalues(&[5.0], 1).unwrap(), vec![5.0]);
    }

    #[test]
    fn budget_exhaustion_reports_state() {
        let (d, e) = tridiagonalize(&[0.0, 1.0, 1.0, 0.0], 2);
        let err = tridiagonal_ql(d, e, 0).unwrap_err();
        assert_eq!(err.rotations, 1);
        assert_eq!(err.diagonal.len(), 2);
    }
}
