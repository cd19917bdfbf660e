//! Numeric spectral functionals with certified error bounds: p-energies,
//! bipartite Gram eigenvalues (μ-values), stop-loss sums, the exact
//! determinant functional R₁ with its Mellin representation, Laplacian and
//! signless-Laplacian functionals, and the rank-one spectral-shift calculus.

use crate::eig::{eig_sym, SymEig};
use crate::exact::{ln_rat, rat_to_f64, RatMatrix};
use crate::graph::{bipartition_of, Graph};
use crate::poly::{Rat, RatPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A numeric value with a certified absolute error bound.
#[derive(Clone, Copy, Debug)]
pub struct Energy {
    pub value: f64,
    pub err: f64,
}

/// Weighted adjacency matrix (entries √ω so that the Gram identities hold
/// verbatim for weighted graphs; 1 for unweighted edges).
pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut a = vec![vec![0.0; n]; n];
    for &(u, v) in g.edges() {
        let w = rat_to_f64(&g.weight(u, v)).sqrt();
        a[u][v] = w;
        a[v][u] = w;
    }
    a
}

pub fn laplacian_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let mut l = adjacency_matrix(g);
    let n = g.n();
    for i in 0..n {
        let d: f64 = (0..n).map(|j| l[i][j]).sum();
        for j in 0..n {
            l[i][j] = -l[i][j];
        }
        l[i][i] = d;
    }
    l
}

pub fn signless_laplacian_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let mut q = adjacency_matrix(g);
    let n = g.n();
    for i in 0..n {
        let d: f64 = (0..n).map(|j| q[i][j]).sum();
        q[i][i] = d;
    }
    q
}

pub fn adjacency_spectrum(g: &Graph, target_err: f64) -> Result<SymEig> {
    eig_sym(&adjacency_matrix(g), target_err)
}

pub fn lap_spectrum(g: &Graph, target_err: f64) -> Result<SymEig> {
    eig_sym(&laplacian_matrix(g), target_err)
}

pub fn q_spectrum(g: &Graph, target_err: f64) -> Result<SymEig> {
    eig_sym(&signless_laplacian_matrix(g), target_err)
}

/// Gram matrix B⊤B (or BB⊤, whichever is smaller) of a bipartite graph,
/// with B the √ω biadjacency on the deterministic bipartition.
fn gram_smaller_side(g: &Graph) -> Result<Vec<Vec<f64>>> {
    let bip = bipartition_of(g)
        .ok_or_else(|| Error::Contract("μ-values need a bipartite graph".into()))?;
    let (side, other) = if bip.left.len() <= bip.right.len() {
        (bip.left, bip.right)
    } else {
        (bip.right, bip.left)
    };
    let k = side.len();
    let mut m = vec![vec![0.0; k]; k];
    for (i, &a) in side.iter().enumerate() {
        for (j, &b) in side.iter().enumerate() {
            let mut acc = 0.0;
            for &c in &other {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    acc += (rat_to_f64(&g.weight(a, c)) * rat_to_f64(&g.weight(b, c))).sqrt();
                }
            }
            m[i][j] = acc;
        }
    }
    Ok(m)
}

/// μ-values of a bipartite graph: eigenvalues of B⊤B on the smaller side,
/// descending, with a certified error bound. Nonzero μ-values coincide for
/// either side, and the p-energy is 𝓔_p = 2·Σ μ^{p/2}.
pub fn mu_values(g: &Graph, target_err: f64) -> Result<(Vec<f64>, f64)> {
    let m = gram_smaller_side(g)?;
    if m.is_empty() {
        return Ok((vec![], 0.0));
    }
    let e = eig_sym(&m, target_err)?;
    Ok((e.values, e.err))
}

/// p-energy Σ_i |λ_i|^p of the (weighted) adjacency spectrum, p ≥ 1.
pub fn p_energy(g: &Graph, p: f64) -> Result<Energy> {
    if !(p >= 1.0) {
        return Err(Error::Parameter(format!("p-energy needs p >= 1, got {p}")));
    }
    let e = adjacency_spectrum(g, 1e-8)?;
    let mut value = 0.0;
    let mut err = 0.0;
    for lam in &e.values {
        let a = lam.abs();
        value += a.powf(p);
        err += p * (a + e.err).powf(p - 1.0) * e.err;
    }
    Ok(Energy { value, err })
}

/// Signed p-energies: Σ_{λ>0} λ^p and Σ_{λ<0} |λ|^p, with eigenvalues
/// inside the certified error band around zero treated as zero and counted.
#[derive(Clone, Copy, Debug)]
pub struct SignedEnergy {
    pub plus: f64,
    pub minus: f64,
    pub err: f64,
    /// Eigenvalues within ±err of zero (their sign is undecidable).
    pub near_zero: usize,
}

pub fn p_energy_signed(g: &Graph, p: f64) -> Result<SignedEnergy> {
    if !(p >= 1.0) {
        return Err(Error::Parameter(format!("p-energy needs p >= 1, got {p}")));
    }
    let e = adjacency_spectrum(g, 1e-8)?;
    let mut plus = 0.0;
    let mut minus = 0.0;
    let mut err = 0.0;
    let mut near_zero = 0;
    for lam in &e.values {
        if lam.abs() <= e.err {
            near_zero += 1;
            continue;
        }
        let a = lam.abs();
        err += p * (a + e.err).powf(p - 1.0) * e.err;
        if *lam > 0.0 {
            plus += a.powf(p);
        } else {
            minus += a.powf(p);
        }
    }
    Ok(SignedEnergy {
        plus,
        minus,
        err,
        near_zero,
    })
}

/// Exact 2-energy of an unweighted graph: 𝓔₂ = tr A² = 2|E|.
pub fn e2_exact(g: &Graph) -> BigInt {
    BigInt::from(2 * g.m() as u64)
}

/// Exact 4-energy of an unweighted graph: closed 4-walks decompose into
/// edge back-and-forths, cherries, and 4-cycles:
/// tr A⁴ = 2|E| + 4·Σ_v C(d_v, 2) + 8·#C₄.
pub fn e4_exact(g: &Graph) -> BigInt {
    let mut total = BigInt::from(2 * g.m() as u64);
    for d in g.degrees() {
        total += BigInt::from(4 * (d as u64) * (d as u64).saturating_sub(1) / 2);
    }
    total + BigInt::from(8 * g.count_c4())
}

/// Exact even-power energy tr A^k (closed k-walk count) for unweighted
/// graphs, via big-integer matrix powers.
pub fn trace_power_exact(g: &Graph, k: usize) -> BigInt {
    let n = g.n();
    let mut a = crate::exact::IntMatrix::zero(n);
    for &(u, v) in g.edges() {
        a.data[u * n + v] = BigInt::one();
        a.data[v * n + u] = BigInt::one();
    }
    a.power_trace(k)
}

/// Stop-loss functional S_t(G) = Σ_i (μ_i − t)₊² over the μ-values.
pub fn stoploss(g: &Graph, t: f64) -> Result<Energy> {
    let (mus, err) = mu_values(g, 1e-8)?;
    Ok(stoploss_of_mus(&mus, t, err))
}

pub fn stoploss_of_mus(mus: &[f64], t: f64, mu_err: f64) -> Energy {
    let mut value = 0.0;
    let mut err = 0.0;
    for &mu in mus {
        let part = (mu - t).max(0.0);
        value += part * part;
        // |d/dμ (μ−t)₊²| = 2(μ−t)₊ plus the second-order term.
        err += 2.0 * (part + mu_err) * mu_err;
    }
    Energy { value, err }
}

/// det(I + x·B⊤B) of a bipartite graph as an exact polynomial. Unweighted
/// graphs use the integer Gram matrix directly; weighted inputs must be
/// forests (the diagonal rescaling that clears the square roots needs an
/// acyclic graph).
pub fn r1_det_poly(g: &Graph) -> Result<RatPoly> {
    let bip = bipartition_of(g)
        .ok_or_else(|| Error::Contract("R₁ needs a bipartite graph".into()))?;
    if g.is_weighted() {
        if g.m() + g.components().len() != g.n() {
            return Err(Error::Contract(
                "exact weighted determinant needs a forest".into(),
            ));
        }
        let m = crate::matching::forest_gram_rational(g, &bip)?;
        return Ok(m.det_i_plus_x());
    }
    let (side, other) = if bip.left.len() <= bip.right.len() {
        (bip.left, bip.right)
    } else {
        (bip.right, bip.left)
    };
    let k = side.len();
    let mut m = RatMatrix::zero(k);
    for (i, &a) in side.iter().enumerate() {
        for (j, &b) in side.iter().enumerate() {
            let common = other
                .iter()
                .filter(|&&c| g.has_edge(a, c) && g.has_edge(b, c))
                .count();
            m[(i, j)] = Rat::from(BigInt::from(common as u64));
        }
    }
    Ok(m.det_i_plus_x())
}

/// R₁(G; x) = x|E| − log det(I + x·B⊤B) with the determinant evaluated
/// exactly at the rational point x ≥ 0.
pub fn r1(g: &Graph, x: &Rat) -> Result<f64> {
    if x.is_negative() {
        return Err(Error::Parameter("R₁ needs x >= 0".into()));
    }
    let det_poly = r1_det_poly(g)?;
    let det = det_poly.eval(x);
    if !det.is_positive() {
        return Err(Error::Contract("determinant not positive".into()));
    }
    let edge_weight: Rat = g
        .edges()
        .iter()
        .map(|&(u, v)| g.weight(u, v))
        .fold(Rat::zero(), |a, b| a + b);
    Ok(rat_to_f64(&(x * edge_weight)) - ln_rat(&det))
}

#[derive(Clone, Copy, Debug)]
pub struct MellinReport {
    /// Σ μ_i^α from the eigenvalues.
    pub lhs: f64,
    /// c_α ∫₀^∞ R₁(x) x^{−α−1} dx by adaptive quadrature with tail bounds.
    pub rhs: f64,
    pub abs_err: f64,
    pub pass: bool,
}

/// Check the Mellin representation Σ μ^α = c_α ∫₀^∞ R₁(x)·x^{−α−1} dx for
/// α ∈ (1, 2), c_α = α·sin(π(α−1))/π. The integral is truncated with the
/// elementary bounds r₁(u) ≤ u²/2 (near 0) and r₁(u) ≤ u (at ∞).
pub fn mellin_check(g: &Graph, alpha: f64, tol: f64) -> Result<MellinReport> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return Err(Error::Parameter(format!(
            "Mellin exponent must lie in (1,2), got {alpha}"
        )));
    }
    let (mus, _) = mu_values(g, 1e-9)?;
    let mus: Vec<f64> = mus.iter().map(|&m| m.max(0.0)).collect();
    let lhs: f64 = mus.iter().map(|&m| m.powf(alpha)).sum();
    let c_alpha = alpha * (std::f64::consts::PI * (alpha - 1.0)).sin() / std::f64::consts::PI;

    let sum_mu: f64 = mus.iter().sum();
    let sum_mu2: f64 = mus.iter().map(|&m| m * m).sum();
    if sum_mu == 0.0 {
        return Ok(MellinReport {
            lhs,
            rhs: 0.0,
            abs_err: lhs.abs(),
            pass: lhs.abs() <= tol,
        });
    }
    // Tail budgets (each ≤ tol/4 after the c_α factor).
    let budget = tol / (4.0 * c_alpha);
    // Low cut: ∫₀^a R₁ x^{−α−1} ≤ (Σμ²/2)·a^{2−α}/(2−α).
    let a_lo = (budget * (2.0 - alpha) * 2.0 / sum_mu2).powf(1.0 / (2.0 - alpha));
    // High cut: ∫_X^∞ R₁ x^{−α−1} ≤ Σμ · X^{1−α}/(α−1).
    let x_hi = (sum_mu / (budget * (alpha - 1.0))).powf(1.0 / (alpha - 1.0));

    let r1_num = |x: f64| -> f64 { mus.iter().map(|&m| r1_scalar(x * m)).sum() };
    // Substitute x = e^s: ∫ R₁(x) x^{−α−1} dx = ∫ R₁(e^s) e^{−αs} ds. The
    // truncation range spans many decades, so the log variable is the one
    // on which the integrand is smooth and Simpson converges.
    let f = |s: f64| -> f64 { r1_num(s.exp()) * (-alpha * s).exp() };
    // Unit-width panels stop the adaptive rule from accepting a coarse
    // answer on a span whose scale varies over many orders of magnitude.
    let (s_lo, s_hi) = (a_lo.ln(), x_hi.ln());
    let panels = ((s_hi - s_lo).ceil() as usize).max(1);
    let panel_tol = tol / (2.0 * c_alpha) / panels as f64;
    let mut integral = 0.0;
    for k in 0..panels {
        let a = s_lo + (s_hi - s_lo) * k as f64 / panels as f64;
        let b = s_lo + (s_hi - s_lo) * (k + 1) as f64 / panels as f64;
        integral += adaptive_simpson(&f, a, b, panel_tol, 32);
    }
    let rhs = c_alpha * integral;
    let abs_err = (lhs - rhs).abs();
    Ok(MellinReport {
        lhs,
        rhs,
        abs_err,
        pass: abs_err <= tol,
    })
}

/// r₁(u) = u − log(1+u), evaluated without cancellation: the direct formula
/// loses all relative accuracy for small u (and the Mellin integrand then
/// amplifies the noise by x^{−α−1}), so switch to the alternating series
/// u²/2 − u³/3 + … below 1/2.
pub fn r1_scalar(u: f64) -> f64 {
    if u >= 0.5 {
        return u - u.ln_1p();
    }
    let mut term = u * u;
    let mut sum = 0.0;
    let mut k = 2.0;
    loop {
        let add = term / k;
        sum += if k as u64 % 2 == 0 { add } else { -add };
        if add < sum.abs() * 1e-18 + 1e-300 {
            return sum;
        }
        term *= u;
        k += 1.0;
    }
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let c = 0.5 * (a + b);
    let fa = f(a);
    let fb = f(b);
    let fc = f(c);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
    simpson_rec(f, a, b, fa, fb, fc, whole, tol, depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fc: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let c = 0.5 * (a + b);
    let d = 0.5 * (a + c);
    let e = 0.5 * (c + b);
    let fd = f(d);
    let fe = f(e);
    let left = (c - a) / 6.0 * (fa + 4.0 * fd + fc);
    let right = (b - c) / 6.0 * (fc + 4.0 * fe + fb);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        return left + right + (left + right - whole) / 15.0;
    }
    simpson_rec(f, a, c, fa, fc, fd, left, 0.5 * tol, depth - 1)
        + simpson_rec(f, c, b, fc, fb, fe, right, 0.5 * tol, depth - 1)
}

/// Laplacian / signless-Laplacian choice for the convex functionals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Laplacian,
    SignlessLaplacian,
}

/// The admissible convex functionals of the (signless) Laplacian spectrum.
#[derive(Clone, Copy, Debug)]
pub enum Functional {
    /// Σ λ^α with α ≥ 1.
    Power(f64),
    /// Σ (e^{θλ} − 1) with θ > 0.
    Estrada(f64),
    /// Laplacian: Σ 1/(n+1−λ); signless: Σ 1/(2n−1−λ). The poles clear the
    /// spectrum (λ(L) ≤ n, λ(Q) ≤ 2n−2).
    Resolvent,
    /// Σ (λ − a)₊^p with p ≥ 2.
    Threshold { a: f64, p: f64 },
}

pub fn lap_functional(g: &Graph, kind: MatrixKind, f: Functional) -> Result<Energy> {
    let e = match kind {
        MatrixKind::Laplacian => lap_spectrum(g, 1e-8)?,
        MatrixKind::SignlessLaplacian => q_spectrum(g, 1e-8)?,
    };
    let n = g.n() as f64;
    let (value, err) = match f {
        Functional::Power(alpha) => {
            if !(alpha >= 1.0) {
                return Err(Error::Parameter("power functional needs α >= 1".into()));
            }
            let mut v = 0.0;
            let mut er = 0.0;
            for lam in &e.values {
                let l = lam.max(0.0);
                v += l.powf(alpha);
                er += alpha * (l + e.err).powf(alpha - 1.0) * e.err;
            }
            (v, er)
        }
        Functional::Estrada(theta) => {
            if !(theta > 0.0) {
                return Err(Error::Parameter("Estrada functional needs θ > 0".into()));
            }
            let mut v = 0.0;
            let mut er = 0.0;
            for lam in &e.values {
                v += (theta * lam).exp() - 1.0;
                er += theta * (theta * (lam + e.err)).exp() * e.err;
            }
            (v, er)
        }
        Functional::Resolvent => {
            let pole = match kind {
                MatrixKind::Laplacian => n + 1.0,
                MatrixKind::SignlessLaplacian => 2.0 * n - 1.0,
            };
            let mut v = 0.0;
            let mut er = 0.0;
            for lam in &e.values {
                let gap = pole - lam;
                if gap <= e.err {
                    return Err(Error::Contract("resolvent pole inside spectrum".into()));
                }
                v += 1.0 / gap;
                er += e.err / ((gap - e.err) * (gap - e.err));
            }
            (v, er)
        }
        Functional::Threshold { a, p } => {
            if !(p >= 2.0) {
                return Err(Error::Parameter("threshold functional needs p >= 2".into()));
            }
            let mut v = 0.0;
            let mut er = 0.0;
            for lam in &e.values {
                let part = (lam - a).max(0.0);
                v += part.powf(p);
                er += p * (part + e.err).powf(p - 1.0) * e.err;
            }
            (v, er)
        }
    };
    Ok(Energy { value, err })
}

/// Ψ_t(G) = Σ_i (λ_i(Q) − t)₊², defined for t ≥ 2.
pub fn psi(g: &Graph, t: f64) -> Result<Energy> {
    if !(t >= 2.0) {
        return Err(Error::Parameter(format!("Ψ needs t >= 2, got {t}")));
    }
    lap_functional(
        g,
        MatrixKind::SignlessLaplacian,
        Functional::Threshold { a: t, p: 2.0 },
    )
}

/// The spectral-shift set of the rank-one update M → M + bb⊤: the disjoint
/// union of the intervals [λ_i(M), λ_i(M + bb⊤)] (descending pairing, which
/// interlaces). Total length = ‖b‖².
#[derive(Clone, Debug)]
pub struct IntervalSet {
    pub intervals: Vec<(f64, f64)>,
    pub err: f64,
}

impl IntervalSet {
    pub fn total_length(&self) -> f64 {
        self.intervals.iter().map(|&(a, b)| b - a).sum()
    }
}

pub fn shift_intervals(m0: &[Vec<f64>], b: &[f64], target_err: f64) -> Result<IntervalSet> {
    let n = m0.len();
    if b.len() != n {
        return Err(Error::Parameter("vector length mismatch".into()));
    }
    let e0 = eig_sym(m0, target_err)?;
    let mut m1: Vec<Vec<f64>> = m0.to_vec();
    for i in 0..n {
        for j in 0..n {
            m1[i][j] += b[i] * b[j];
        }
    }
    // Symmetrize exactly (floating addition can differ across (i,j)/(j,i)).
    for i in 0..n {
        for j in 0..i {
            let avg = 0.5 * (m1[i][j] + m1[j][i]);
            m1[i][j] = avg;
            m1[j][i] = avg;
        }
    }
    let e1 = eig_sym(&m1, target_err)?;
    let err = e0.err + e1.err;
    let intervals = e0
        .values
        .iter()
        .zip(&e1.values)
        .map(|(&a, &b1)| (a.min(b1), a.max(b1)))
        .collect();
    Ok(IntervalSet { intervals, err })
}

/// J_E(t) = ∫_E (y − t)₊ dy over the interval set.
pub fn j_of(set: &IntervalSet, t: f64) -> f64 {
    set.intervals.iter().map(|&(a, b)| i_of(a, b, t)).sum()
}

/// 𝓘_{[u,v]}(t) = ∫_u^v (y − t)₊ dy, evaluated piecewise:
/// 0 for t ≥ v, ½(v−t)² for u ≤ t ≤ v, (v−u)((u+v)/2 − t) for t ≤ u.
pub fn i_of(u: f64, v: f64, t: f64) -> f64 {
    if t >= v {
        0.0
    } else if t >= u {
        0.5 * (v - t) * (v - t)
    } else {
        (v - u) * (0.5 * (u + v) - t)
    }
}

/// Exact rational 𝓘_{[u,v]}(t).
pub fn i_of_rat(u: &Rat, v: &Rat, t: &Rat) -> Rat {
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    if t >= v {
        Rat::zero()
    } else if t >= u {
        let d = v - t;
        &half * &d * &d
    } else {
        (v - u) * (half * (u + v) - t)
    }
}

#[derive(Clone, Debug)]
pub struct RankOneReport {
    /// tr(M₁ − t)₊² − tr(M₀ − t)₊² from the two spectra.
    pub gain: f64,
    /// 2·J_E(t) over the shift intervals.
    pub via_intervals: f64,
    /// 2·∫₀¹ b⊤(M_θ − t)₊ b dθ by quadrature along the homotopy
    /// M_θ = M₀ + θ·bb⊤.
    pub via_quadrature: f64,
    pub max_discrepancy: f64,
}

/// Three independent evaluations of the rank-one stop-loss gain; their
/// agreement certifies the trace formula on this instance.
pub fn rank_one_gain(m0: &[Vec<f64>], b: &[f64], t: f64, target_err: f64) -> Result<RankOneReport> {
    let n = m0.len();
    if b.len() != n {
        return Err(Error::Parameter("vector length mismatch".into()));
    }
    let stoploss_sum = |vals: &[f64]| -> f64 {
        vals.iter()
            .map(|&l| {
                let p = (l - t).max(0.0);
                p * p
            })
            .sum()
    };
    let m_theta = |theta: f64| -> Vec<Vec<f64>> {
        let mut m: Vec<Vec<f64>> = m0.to_vec();
        for i in 0..n {
            for j in 0..n {
                m[i][j] += theta * b[i] * b[j];
            }
        }
        for i in 0..n {
            for j in 0..i {
                let avg = 0.5 * (m[i][j] + m[j][i]);
                m[i][j] = avg;
                m[j][i] = avg;
            }
        }
        m
    };
    let e0 = eig_sym(m0, target_err)?;
    let e1 = eig_sym(&m_theta(1.0), target_err)?;
    let gain = stoploss_sum(&e1.values) - stoploss_sum(&e0.values);
    let set = shift_intervals(m0, b, target_err)?;
    let via_intervals = 2.0 * j_of(&set, t);
    // b⊤(M_θ − t)₊ b via the eigendecomposition of M_θ.
    let integrand = |theta: f64| -> f64 {
        let e = eig_sym(&m_theta(theta), target_err).expect("homotopy matrix stays symmetric");
        let mut acc = 0.0;
        for (lam, vec) in e.values.iter().zip(&e.vectors) {
            let dot: f64 = vec.iter().zip(b).map(|(x, y)| x * y).sum();
            acc += (lam - t).max(0.0) * dot * dot;
        }
        acc
    };
    let via_quadrature = 2.0 * adaptive_simpson(&integrand, 0.0, 1.0, 1e-10, 24);
    let max_discrepancy = (gain - via_intervals)
        .abs()
        .max((gain - via_quadrature).abs());
    Ok(RankOneReport {
        gain,
        via_intervals,
        via_quadrature,
        max_discrepancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};
    use crate::poly::{rat, rat_int};
    use num_traits::ToPrimitive;

    #[test]
    fn mu_values_of_small_paths_and_cycles() {
        // P₄: μ = (3 ± √5)/2.
        let (mus, err) = mu_values(&make_family(&Family::Path(4)).unwrap(), 1e-10).unwrap();
        let s5 = 5f64.sqrt();
        assert!((mus[0] - (3.0 + s5) / 2.0).abs() <= 1e-10 + err);
        assert!((mus[1] - (3.0 - s5) / 2.0).abs() <= 1e-10 + err);
        // P₅: μ = {3, 1}.
        let (mus, _) = mu_values(&make_family(&Family::Path(5)).unwrap(), 1e-10).unwrap();
        assert!((mus[0] - 3.0).abs() <= 1e-9);
        assert!((mus[1] - 1.0).abs() <= 1e-9);
        // C₄: μ = {4, 0}.
        let (mus, _) = mu_values(&make_family(&Family::Cycle(4)).unwrap(), 1e-10).unwrap();
        assert!((mus[0] - 4.0).abs() <= 1e-9);
        assert!(mus[1].abs() <= 1e-9);
        // Σ μ = |E|.
        for fam in [Family::Path(7), Family::Cycle(8), Family::Star(6)] {
            let g = make_family(&fam).unwrap();
            let (mus, _) = mu_values(&g, 1e-9).unwrap();
            let s: f64 = mus.iter().sum();
            assert!((s - g.m() as f64).abs() <= 1e-8, "{fam:?}");
        }
    }

    #[test]
    fn exact_energy_anchors() {
        for n in 2..=9usize {
            let p = make_family(&Family::Path(n)).unwrap();
            assert_eq!(e2_exact(&p).to_i64().unwrap(), 2 * (n as i64 - 1));
            assert_eq!(e4_exact(&p).to_i64().unwrap(), 6 * n as i64 - 10);
            assert_eq!(e4_exact(&p), trace_power_exact(&p, 4));
            // Numeric agreement.
            let e2 = p_energy(&p, 2.0).unwrap();
            assert!((e2.value - 2.0 * (n as f64 - 1.0)).abs() <= 1e-8);
            let e4 = p_energy(&p, 4.0).unwrap();
            assert!((e4.value - (6.0 * n as f64 - 10.0)).abs() <= 1e-7);
        }
        // 𝓔_p = 2 Σ μ^{p/2} on a bipartite instance.
        let g = make_family(&Family::CompleteBipartite(2, 3)).unwrap();
        let (mus, _) = mu_values(&g, 1e-9).unwrap();
        for p in [2.0, 3.0, 4.0, 6.5] {
            let via_mu: f64 = 2.0 * mus.iter().map(|&m| m.max(0.0).powf(p / 2.0)).sum::<f64>();
            let direct = p_energy(&g, p).unwrap();
            assert!((via_mu - direct.value).abs() <= 1e-7, "p={p}");
        }
    }

    #[test]
    fn signed_energy_splits_bipartite_evenly() {
        let g = make_family(&Family::Path(6)).unwrap();
        for p in [2.0, 3.0, 3.5, 5.0] {
            let s = p_energy_signed(&g, p).unwrap();
            assert!((s.plus - s.minus).abs() <= 1e-8, "p={p}");
        }
    }

    #[test]
    fn stoploss_anchor_at_zero() {
        for fam in [Family::Path(6), Family::Cycle(8), Family::Star(5)] {
            let g = make_family(&fam).unwrap();
            let s0 = stoploss(&g, 0.0).unwrap();
            let half_e4 = e4_exact(&g).to_f64().unwrap() / 2.0;
            assert!((s0.value - half_e4).abs() <= 1e-7, "{fam:?}");
        }
    }

    #[test]
    fn r1_single_edge() {
        let p2 = make_family(&Family::Path(2)).unwrap();
        assert_eq!(r1_det_poly(&p2).unwrap(), RatPoly::from_ints(&[1, 1]));
        let v = r1(&p2, &rat_int(1)).unwrap();
        assert!((v - (1.0 - 2f64.ln())).abs() <= 1e-12);
        assert!(r1(&p2, &rat(-1, 2)).is_err());
        // Matching polynomial and determinant agree on trees.
        let t = make_family(&Family::Star(5)).unwrap();
        assert_eq!(
            r1_det_poly(&t).unwrap(),
            crate::matching::matching_poly(&t)
        );
    }

    #[test]
    fn mellin_identity_small() {
        for fam in [Family::Path(4), Family::Cycle(6), Family::Star(4)] {
            let g = make_family(&fam).unwrap();
            for alpha in [1.25, 1.5, 1.75] {
                let rep = mellin_check(&g, alpha, 1e-6).unwrap();
                assert!(rep.pass, "{fam:?} α={alpha}: {rep:?}");
            }
        }
        assert!(mellin_check(&make_family(&Family::Path(3)).unwrap(), 2.0, 1e-6).is_err());
    }

    #[test]
    fn laplacian_functionals() {
        let p2 = make_family(&Family::Path(2)).unwrap();
        // L(P₂) spectrum {2, 0}: resolvent Σ 1/(3−λ) = 1/1 + 1/3.
        let r = lap_functional(&p2, MatrixKind::Laplacian, Functional::Resolvent).unwrap();
        assert!((r.value - 4.0 / 3.0).abs() <= 1e-10);
        // Q(C₄) spectrum {4,2,2,0}: Ψ₂ = 4.
        let c4 = make_family(&Family::Cycle(4)).unwrap();
        let v = psi(&c4, 2.0).unwrap();
        assert!((v.value - 4.0).abs() <= 1e-9);
        assert!(psi(&c4, 1.5).is_err());
        // Power sum α=1 is the trace: 2|E| for both L and Q.
        for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let s = lap_functional(&c4, kind, Functional::Power(1.0)).unwrap();
            assert!((s.value - 8.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn piecewise_integral_values() {
        assert_eq!(i_of(1.0, 3.0, 4.0), 0.0);
        assert!((i_of(1.0, 3.0, 2.0) - 0.5).abs() <= 1e-15);
        assert!((i_of(1.0, 3.0, 0.0) - 4.0).abs() <= 1e-15);
        assert_eq!(i_of_rat(&rat_int(1), &rat_int(3), &rat_int(2)), rat(1, 2));
        assert_eq!(i_of_rat(&rat_int(1), &rat_int(3), &rat_int(0)), rat_int(4));
        assert_eq!(i_of_rat(&rat_int(1), &rat_int(3), &rat_int(5)), rat_int(0));
    }

    #[test]
    fn rank_one_machinery() {
        // M₀ = diag(0), b = e₁: intervals = [0, 1].
        let set = shift_intervals(&[vec![0.0]], &[1.0], 1e-10).unwrap();
        assert!((set.intervals[0].0).abs() <= 1e-12);
        assert!((set.intervals[0].1 - 1.0).abs() <= 1e-12);
        assert!((set.total_length() - 1.0).abs() <= 1e-12);

        // A small symmetric example: total length equals ‖b‖².
        let m0 = vec![
            vec![2.0, 1.0, 0.0],
            vec![1.0, 1.0, 0.5],
            vec![0.0, 0.5, 3.0],
        ];
        let b = vec![0.5, -1.0, 0.25];
        let set = shift_intervals(&m0, &b, 1e-8).unwrap();
        let norm2: f64 = b.iter().map(|x| x * x).sum();
        assert!((set.total_length() - norm2).abs() <= 1e-8);

        for t in [0.0, 0.5, 1.5, 2.5] {
            let rep = rank_one_gain(&m0, &b, t, 1e-8).unwrap();
            assert!(rep.max_discrepancy <= 1e-7, "t={t}: {rep:?}");
        }
    }
}
