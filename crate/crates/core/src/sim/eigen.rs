//! Dense symmetric eigenvalues: Householder reduction to tridiagonal form
//! followed by the implicit QL iteration with Wilkinson-style shifts.

use alloc::vec;
use alloc::vec::Vec;

use libm::{fabs, hypot, sqrt};

use crate::{Error, Result};

/// Per-eigenvalue cap on QL sweeps before giving up.
pub const MAX_QL_ITERATIONS: usize = 60;

/// Eigenvalues of the symmetric `n × n` row-major matrix `a`, ascending.
/// Only the lower triangle is read; `a` is overwritten.
pub fn symmetric_eigenvalues(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix is not {n} x {n}");
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut d, mut e) = tridiagonalize(a, n);
    tridiagonal_ql(&mut d, &mut e)?;
    d.sort_unstable_by(f64::total_cmp);
    Ok(d)
}

/// Returns the diagonal `d` and subdiagonal `e` (with `e[i]` coupling rows
/// `i - 1` and `i`, `e[0] = 0`).
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let at = |i: usize, j: usize| i * n + j;

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..i).map(|k| fabs(a[at(i, k)])).sum();
            if scale == 0.0 {
                e[i] = a[at(i, l)];
            } else {
                for k in 0..i {
                    a[at(i, k)] /= scale;
                    h += a[at(i, k)] * a[at(i, k)];
                }
                let f = a[at(i, l)];
                let g = if f >= 0.0 { -sqrt(h) } else { sqrt(h) };
                e[i] = scale * g;
                h -= f * g;
                a[at(i, l)] = f - g;
                let mut f = 0.0;
                for j in 0..i {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[at(j, k)] * a[at(i, k)];
                    }
                    for k in (j + 1)..i {
                        g += a[at(k, j)] * a[at(i, k)];
                    }
                    e[j] = g / h;
                    f += e[j] * a[at(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..i {
                    let f = a[at(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[at(j, k)] -= f * e[k] + g * a[at(i, k)];
                    }
                }
            }
        } else {
            e[i] = a[at(i, l)];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[at(i, i)];
    }
    (d, e)
}

fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = fabs(d[m]) + fabs(d[m + 1]);
                if fabs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence { iterations: MAX_QL_ITERATIONS });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { fabs(r) } else { -fabs(r) });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = hypot(f, g);
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
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| fabs(x - y) <= tol)
    }

    #[test]
    fn small_closed_forms() {
        let mut two = [0.0, 1.0, 1.0, 0.0];
        assert!(close(&symmetric_eigenvalues(&mut two, 2).unwrap(), &[-1.0, 1.0], 1e-14));

        let mut path = [0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0];
        let s2 = sqrt(2.0);
        assert!(close(&symmetric_eigenvalues(&mut path, 3).unwrap(), &[-s2, 0.0, s2], 1e-14));

        let mut one = [5.0];
        assert_eq!(symmetric_eigenvalues(&mut one, 1).unwrap(), [5.0]);
        assert!(symmetric_eigenvalues(&mut [], 0).unwrap().is_empty());
    }

    #[test]
    fn path_graph_spectrum() {
        // P_n has eigenvalues 2 cos(πj/(n+1)).
        let n = 40;
        let mut a = vec![0.0; n * n];
        for i in 0..n - 1 {
            a[i * n + i + 1] = 1.0;
            a[(i + 1) * n + i] = 1.0;
        }
        let got = symmetric_eigenvalues(&mut a, n).unwrap();
        let mut want: Vec<f64> = (1..=n)
            .map(|j| 2.0 * libm::cos(core::f64::consts::PI * j as f64 / (n + 1) as f64))
            .collect();
        want.sort_unstable_by(f64::total_cmp);
        assert!(close(&got, &want, 1e-12));
    }

    #[test]
    fn complete_graph_spectrum() {
        let n = 30;
        let mut a: Vec<f64> = (0..n * n).map(|t| if t / n == t % n { 0.0 } else { 1.0 }).collect();
        let got = symmetric_eigenvalues(&mut a, n).unwrap();
        assert!(got[..n - 1].iter().all(|&x| fabs(x + 1.0) < 1e-12));
        assert!(fabs(got[n - 1] - (n as f64 - 1.0)) < 1e-11);
    }

    #[test]
    fn diagonal_and_repeated() {
        let mut a = [3.0, 0.0, 0.0, 0.0, -2.0, 0.0, 0.0, 0.0, 3.0];
        assert_eq!(symmetric_eigenvalues(&mut a, 3).unwrap(), [-2.0, 3.0, 3.0]);
    }
}
