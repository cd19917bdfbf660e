//! Exact linear algebra over the rationals: determinants, characteristic
//! polynomials (Faddeev–LeVerrier), and integer walk-count traces.

use crate::poly::{Rat, RatPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Convert a big rational to f64, robust to numerators/denominators that
/// individually overflow f64 range.
pub fn rat_to_f64(x: &Rat) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back to a scaled conversion via bit lengths.
    let num = x.numer();
    let den = x.denom();
    let shift = (num.bits() as i64 - den.bits() as i64) - 52;
    if shift > 0 {
        let scaled = num / (BigInt::one() << shift as usize);
        scaled.to_f64().unwrap_or(0.0) / den.to_f64().unwrap_or(1.0)
            * 2f64.powi(shift as i32)
    } else {
        let scaled = den / (BigInt::one() << (-shift) as usize);
        num.to_f64().unwrap_or(0.0) / scaled.to_f64().unwrap_or(1.0)
            * 2f64.powi(shift as i32)
    }
}

/// Natural log of a positive rational, evaluated via ln(num) - ln(den) on
/// mantissa/exponent splits so that huge determinants stay accurate.
pub fn ln_rat(x: &Rat) -> f64 {
    assert!(x.is_positive(), "log of non-positive rational");
    ln_bigint(x.numer()) - ln_bigint(x.denom())
}

fn ln_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let mantissa = (x >> shift).to_f64().unwrap();
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Dense rational matrix (row-major, square).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub n: usize,
    pub data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        RatMatrix {
            n,
            data: vec![Rat::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        (0..self.n).map(|i| self[(i, i)].clone()).sum()
    }

    /// Determinant by fraction-free-style Gaussian elimination (exact).
    pub fn det(&self) -> Rat {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a[r * n + col].is_zero());
            let pivot_row = match pivot_row {
                Some(r) => r,
                None => return Rat::zero(),
            };
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in (col + 1)..n {
                let factor = &a[r * n + col] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = &factor * &a[col * n + j];
                    a[r * n + j] -= sub;
                }
            }
        }
        det
    }

    /// Characteristic polynomial det(λI − M) by Faddeev–LeVerrier;
    /// returned constant-term-first in λ.
    pub fn charpoly(&self) -> RatPoly {
        let n = self.n;
        // c[k] holds the coefficient of λ^{n-k}; c[0] = 1.
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[0] = Rat::one();
        let mut m = RatMatrix::zero(n); // M_0 = 0
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{k-1}·I
            let mut am = self.mul(&m);
            for i in 0..n {
                let add = coeffs[k - 1].clone();
                am[(i, i)] += add;
            }
            m = am;
            let t = self.mul(&m).trace();
            coeffs[k] = -t / Rat::from(BigInt::from(k as i64));
        }
        // det(λI - M) = Σ_k coeffs[k] λ^{n-k}; reverse to constant-first.
        let mut out = vec![Rat::zero(); n + 1];
        for (k, c) in coeffs.into_iter().enumerate() {
            out[n - k] = c;
        }
        RatPoly::from_coeffs(out)
    }

    /// det(I + x·M) as an exact polynomial in x, via the characteristic
    /// polynomial: det(I + xM) = x^n · χ_M(-1/x) · (-1)^n, i.e. the
    /// reversed charpoly with alternating signs.
    pub fn det_i_plus_x(&self) -> RatPoly {
        let n = self.n;
        let chi = self.charpoly();
        // χ(λ) = Σ a_j λ^j ⇒ det(I + xM) = Σ_j a_j (-1)^{n-j} x^{n-j}.
        let mut out = vec![Rat::zero(); n + 1];
        for j in 0..=n {
            let a = chi.coeff(j);
            let k = n - j;
            out[k] = if k % 2 == 0 { a } else { -a };
        }
        RatPoly::from_coeffs(out)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.n + j]
    }
}

/// Dense integer matrix for exact walk counting.
#[derive(Clone, Debug)]
pub struct IntMatrix {
    pub n: usize,
    pub data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.data[i * self.n + i].clone()).sum()
    }

    /// Trace of the k-th power (exact closed-walk count for adjacency input).
    pub fn power_trace(&self, k: usize) -> BigInt {
        if k == 0 {
            return BigInt::from(self.n as i64);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc.trace()
    }
}

/// Binomial coefficient C(n, k) as an exact big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat_int, RatPoly};

    fn from_ints(n: usize, vals: &[i64]) -> RatMatrix {
        RatMatrix {
            n,
            data: vals.iter().map(|&v| rat_int(v)).collect(),
        }
    }

    #[test]
    fn det_and_charpoly_agree() {
        let m = from_ints(3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        // det(λI − M) at λ=0 is (−1)^n det(M).
        let chi = m.charpoly();
        let det = m.det();
        assert_eq!(chi.coeff(0), -det.clone());
        // Known determinant: 2(12-1) - 1(4-0) = 18.
        assert_eq!(det, rat_int(18));
    }

    #[test]
    fn det_i_plus_x_path() {
        // Gram matrix of P_4 on its smaller side: B⊤B = [[2,1],[1,2]]? No:
        // biadjacency of P_4 with sides {0,2},{1,3}: B = [[1,1],[0,1]] wait,
        // just verify against direct determinant at sample x.
        let m = from_ints(2, &[2, 1, 1, 1]);
        let p = m.det_i_plus_x();
        for xv in [rat_int(1), rat_int(2), crate::poly::rat(1, 3)] {
            let mut ixm = RatMatrix::identity(2);
            for i in 0..2 {
                for j in 0..2 {
                    let add = &xv * &m[(i, j)];
                    ixm[(i, j)] += add;
                }
            }
            assert_eq!(p.eval(&xv), ixm.det());
        }
        // det(I + xM) = 1 + tr(M)x + det(M)x² = 1 + 3x + x².
        assert_eq!(p, RatPoly::from_ints(&[1, 3, 1]));
    }

    #[test]
    fn walk_traces() {
        // Triangle: tr A^3 = 6.
        let mut a = IntMatrix::zero(3);
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            a.data[i * 3 + j] = BigInt::one();
            a.data[j * 3 + i] = BigInt::one();
        }
        assert_eq!(a.power_trace(3), BigInt::from(6));
        assert_eq!(a.power_trace(2), BigInt::from(6));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(39, 19).to_string(), "68923264410");
    }
}
