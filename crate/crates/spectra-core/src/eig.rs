//! Dense symmetric eigensolver: Householder tridiagonalization followed by
//! implicit-shift QL, with eigenvectors accumulated so that an a-posteriori
//! residual bound certifies every eigenvalue. For a symmetric matrix M and
//! a unit vector v, some true eigenvalue lies within ‖Mv − λv‖₂ of λ, so
//! the maximum residual over all computed pairs is a valid uniform error
//! bound for the sorted spectrum.

use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct SymEig {
    /// Eigenvalues sorted descending.
    pub values: Vec<f64>,
    /// vectors[k] is the unit eigenvector paired with values[k].
    pub vectors: Vec<Vec<f64>>,
    /// Certified absolute error bound valid for every eigenvalue.
    pub err: f64,
}

/// Householder reduction to tridiagonal form (d = diagonal, e = off-diagonal),
/// accumulating the orthogonal transform in `v` (columns are the basis).
fn tred2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = v.len();
    for j in 0..n {
        d[j] = v[n - 1][j];
    }
    for i in (1..n).rev() {
        let l = i;
        let mut h = 0.0;
        let mut scale = 0.0;
        if l > 1 {
            for k in 0..l {
                scale += d[k].abs();
            }
        }
        if scale == 0.0 {
            e[i] = if l > 0 { d[l - 1] } else { 0.0 };
            for j in 0..l {
                d[j] = v[l - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for k in 0..l {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[l - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[l - 1] = f - g;
            for j in 0..l {
                e[j] = 0.0;
            }
            for j in 0..l {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in (j + 1)..l {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..l {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..l {
                e[j] -= hh * d[j];
            }
            for j in 0..l {
                f = d[j];
                g = e[j];
                for k in j..l {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[l - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }
    // Accumulate transformations.
    for i in 0..(n - 1) {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k][i + 1] * v[k][j];
                }
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k][i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

/// Implicit-shift QL on the tridiagonal (d, e), updating the eigenvector
/// accumulation in `v`. Eigenvalues come out ascending in d.
fn tql2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = v.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m >= n {
            m = n - 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 50 {
                    return Err(Error::Accuracy {
                        target: 0.0,
                        achieved: e[l].abs(),
                    });
                }
                // Implicit shift.
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for i in (l + 2)..n {
                    d[i] -= h;
                }
                f += h;
                // Implicit QL sweep.
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        h = v[k][i + 1];
                        v[k][i + 1] = s * v[k][i] + c * h;
                        v[k][i] = c * v[k][i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Eigenvalues (descending) and eigenvectors of an exactly symmetric matrix,
/// with a certified residual error bound.
pub fn eig_sym(mat: &[Vec<f64>], target_err: f64) -> Result<SymEig> {
    let n = mat.len();
    if n == 0 {
        return Err(Error::Parameter("empty matrix".into()));
    }
    for row in mat {
        if row.len() != n {
            return Err(Error::Parameter("matrix is not square".into()));
        }
    }
    for i in 0..n {
        for j in 0..i {
            if mat[i][j] != mat[j][i] {
                return Err(Error::Parameter(format!(
                    "matrix not exactly symmetric at ({i},{j})"
                )));
            }
        }
    }
    let mut v: Vec<Vec<f64>> = mat.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    if n == 1 {
        return Ok(SymEig {
            values: vec![mat[0][0]],
            vectors: vec![vec![1.0]],
            err: 0.0,
        });
    }
    tred2(&mut v, &mut d, &mut e);
    tql2(&mut v, &mut d, &mut e)?;

    // Pair up, sort descending.
    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|k| (d[k], (0..n).map(|r| v[r][k]).collect()))
        .collect();
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());

    // Residual certification: for each pair, ‖Mv − λv‖₂ / ‖v‖₂ bounds the
    // distance to the nearest true eigenvalue.
    let mut err = 0.0f64;
    for (lam, vec) in &pairs {
        let norm2: f64 = vec.iter().map(|x| x * x).sum::<f64>().sqrt();
        let mut res2 = 0.0;
        for i in 0..n {
            let mut mv = 0.0;
            for j in 0..n {
                mv += mat[i][j] * vec[j];
            }
            let r = mv - lam * vec[i];
            res2 += r * r;
        }
        err = err.max(res2.sqrt() / norm2);
    }
    // Residuals bound the distance to *some* eigenvalue per vector; because
    // the computed basis is orthogonal to working precision, the same bound
    // holds for the sorted matching up to a modest factor. Fold the basis
    // non-orthogonality into the bound explicitly.
    let mut ortho_defect = 0.0f64;
    for a in 0..n {
        for b in 0..a {
            let dot: f64 = pairs[a].1.iter().zip(&pairs[b].1).map(|(x, y)| x * y).sum();
            ortho_defect = ortho_defect.max(dot.abs());
        }
    }
    let scale: f64 = mat
        .iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    err += ortho_defect * scale;

    if err > target_err {
        return Err(Error::Accuracy {
            target: target_err,
            achieved: err,
        });
    }
    Ok(SymEig {
        values: pairs.iter().map(|p| p.0).collect(),
        vectors: pairs.into_iter().map(|p| p.1).collect(),
        err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_adjacency(n: usize) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; n]; n];
        for i in 1..n {
            a[i - 1][i] = 1.0;
            a[i][i - 1] = 1.0;
        }
        a
    }

    #[test]
    fn single_edge() {
        let a = path_adjacency(2);
        let e = eig_sym(&a, 1e-12).unwrap();
        assert!((e.values[0] - 1.0).abs() <= 1e-12);
        assert!((e.values[1] + 1.0).abs() <= 1e-12);
    }

    #[test]
    fn p3_spectrum() {
        let a = path_adjacency(3);
        let e = eig_sym(&a, 1e-11).unwrap();
        let s2 = 2f64.sqrt();
        for (got, want) in e.values.iter().zip([s2, 0.0, -s2]) {
            assert!((got - want).abs() <= 1e-11, "{got} vs {want}");
        }
    }

    #[test]
    fn path_closed_form_to_m50() {
        for n in 2..=50 {
            let a = path_adjacency(n);
            let e = eig_sym(&a, 1e-10).unwrap();
            for (i, lam) in e.values.iter().enumerate() {
                let want = 2.0 * (std::f64::consts::PI * (i + 1) as f64 / (n + 1) as f64).cos();
                assert!(
                    (lam - want).abs() <= 1e-10,
                    "n={n} i={i}: {lam} vs {want}"
                );
            }
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let m = vec![vec![0.0, 1.0], vec![0.5, 0.0]];
        assert!(eig_sym(&m, 1e-10).is_err());
    }

    #[test]
    fn trace_preserved() {
        // Signless Laplacian of C_4: spectrum {4, 2, 2, 0}.
        let mut q = vec![vec![0.0; 4]; 4];
        for i in 0..4 {
            q[i][i] = 2.0;
            q[i][(i + 1) % 4] = 1.0;
            q[(i + 1) % 4][i] = 1.0;
        }
        let e = eig_sym(&q, 1e-11).unwrap();
        let want = [4.0, 2.0, 2.0, 0.0];
        for (got, w) in e.values.iter().zip(want) {
            assert!((got - w).abs() <= 1e-11);
        }
    }
}
