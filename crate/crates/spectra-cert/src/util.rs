//! Shared helpers: margin-policy checks, closed-form path/cycle spectra,
//! and energy evaluation from a precomputed spectrum.

use crate::report::{Failure, NearEquality};

/// Per-worker accumulator; merged in canonical instance order.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub near: Vec<NearEquality>,
}

impl Outcome {
    pub fn merge(mut self, other: Outcome) -> Outcome {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self.near.extend(other.near);
        self
    }

    pub fn merge_all(parts: Vec<Outcome>) -> Outcome {
        parts.into_iter().fold(Outcome::default(), Outcome::merge)
    }
}

/// How to resolve an instance whose margin falls inside the precision band.
pub enum Refine<'a> {
    /// Equality is the statement's own equality case; accept and log.
    Equality,
    /// Exact-arithmetic recheck: returns true iff LHS ≥ RHS is confirmed.
    Exact(&'a dyn Fn() -> bool),
    /// Recompute (gap, err) at elevated precision and re-apply the policy.
    HighPrec(&'a dyn Fn() -> (f64, f64)),
}

/// Margin-policy comparison LHS ≥ RHS: passes outright when
/// LHS − RHS ≥ κ·err, fails when LHS − RHS < −κ·err, and otherwise runs
/// the supplied recheck and logs the instance as a near-equality.
pub fn check_ge(
    out: &mut Outcome,
    kappa: f64,
    id: &str,
    param: &str,
    lhs: f64,
    rhs: f64,
    err: f64,
    refine: Refine,
) {
    out.instances += 1;
    let gap = lhs - rhs;
    let band = kappa * err;
    if gap >= band {
        return;
    }
    if gap < -band {
        out.failures.push(Failure {
            graph6: id.to_string(),
            param: param.to_string(),
            lhs,
            rhs,
            margin: gap,
        });
        return;
    }
    let (ok, method) = match refine {
        Refine::Equality => (true, "expected-equality".to_string()),
        Refine::Exact(f) => (f(), "exact".to_string()),
        Refine::HighPrec(f) => {
            let (gap2, err2) = f();
            (gap2 >= -kappa * err2, "high-precision".to_string())
        }
    };
    if ok {
        out.near.push(NearEquality {
            graph6: id.to_string(),
            param: param.to_string(),
            gap,
            err,
            method,
        });
    } else {
        out.failures.push(Failure {
            graph6: id.to_string(),
            param: param.to_string(),
            lhs,
            rhs,
            margin: gap,
        });
    }
}

/// Squared singular values μ_i(P_n) = 4cos²(iπ/(n+1)), i = 1..⌊n/2⌋,
/// in decreasing order.
pub fn path_mus(n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n / 2);
    for i in 1..=n / 2 {
        let c = (std::f64::consts::PI * i as f64 / (n as f64 + 1.0)).cos();
        out.push(4.0 * c * c);
    }
    out
}

/// Adjacency eigenvalues of P_n: 2cos(kπ/(n+1)), k = 1..n.
pub fn path_eigs(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| {
            // The middle eigenvalue (odd n) is exactly zero; cos(π/2)
            // would otherwise leave ~1e−16 noise that pollutes exact
            // comparisons at p-th powers.
            if 2 * k == n + 1 {
                0.0
            } else {
                2.0 * (std::f64::consts::PI * k as f64 / (n as f64 + 1.0)).cos()
            }
        })
        .collect()
}

/// μ values of the even cycle C_{2m}: 4cos²(πj/m), j = 0..m−1.
pub fn cycle_mus(two_m: usize) -> Vec<f64> {
    assert!(two_m >= 4 && two_m % 2 == 0);
    let m = two_m / 2;
    (0..m)
        .map(|j| {
            let c = (std::f64::consts::PI * j as f64 / m as f64).cos();
            4.0 * c * c
        })
        .collect()
}

/// Σ (μ − t)₊² over a μ-multiset.
pub fn stoploss_from_mus(mus: &[f64], t: f64) -> f64 {
    mus.iter()
        .map(|&m| {
            let d = (m - t).max(0.0);
            d * d
        })
        .sum()
}

/// S_t(P_n) from the closed-form spectrum.
pub fn path_stoploss(n: usize, t: f64) -> f64 {
    stoploss_from_mus(&path_mus(n), t)
}

/// 𝓔_p(P_n) from the closed-form spectrum.
pub fn path_p_energy(n: usize, p: f64) -> f64 {
    path_eigs(n).iter().map(|l| l.abs().powf(p)).sum()
}

/// (Σ|λ|^p, propagated error) from a computed spectrum with a uniform
/// eigenvalue error bound.
pub fn p_energy_from(values: &[f64], err: f64, p: f64) -> (f64, f64) {
    let mut v = 0.0;
    let mut e = 0.0;
    for lam in values {
        let a = lam.abs();
        v += a.powf(p);
        e += p * (a + err).powf(p - 1.0) * err;
    }
    (v, e)
}

/// (Σ λ₊^p over positive eigenvalues, propagated error); eigenvalues inside
/// the error band around zero contribute only error.
pub fn positive_p_energy_from(values: &[f64], err: f64, p: f64) -> (f64, f64) {
    let mut v = 0.0;
    let mut e = 0.0;
    for &lam in values {
        if lam > err {
            v += lam.powf(p);
            e += p * (lam + err).powf(p - 1.0) * err;
        } else if lam > -err {
            e += (2.0 * err).powf(p);
        }
    }
    (v, e)
}
