//! Rigorous bisection certificates for the low-range splicing inequalities:
//! strip residuals D_p(ρ) and small-box residuals K_{p,q}(ρ) over
//! ρ ∈ [1/6, 1/2], evaluated in outward-rounded ball arithmetic with
//! rational subdivision endpoints. Every accepted box certifies the
//! inequality on the whole box; boxes that cannot be certified are bisected
//! (LIFO, depth-first) up to a depth limit.

use crate::ball::{cos2pi, pi, sqrt_rat, Ball};
use crate::poly::{rat, rat_int, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Shared transcendental context for one certification run.
pub struct SpliceCtx {
    pub prec: u32,
    pub pi: Ball,
    /// C* = 17·√3·π²/27.
    pub c_star: Ball,
}

impl SpliceCtx {
    pub fn new(prec: u32) -> Result<SpliceCtx> {
        let pi_ball = pi(prec);
        let c_star = Ball::from_int(17)
            .mul(&sqrt_rat(&rat_int(3), prec)?, prec)
            .mul(&pi_ball.square(prec), prec)
            .div(&Ball::from_int(27), prec);
        Ok(SpliceCtx {
            prec,
            pi: pi_ball,
            c_star,
        })
    }

    fn cos2pi(&self, u: &Ball) -> Ball {
        cos2pi(u, &self.pi, self.prec)
    }
}

/// ∫ (α + βu)·sin(2πu) du  =  −(α+βu)·cos(2πu)/(2π) + β·sin(2πu)/(4π²).
fn f2_anti(ctx: &SpliceCtx, u: &Ball, alpha: &Rat, beta: &Rat) -> Ball {
    let prec = ctx.prec;
    let a = Ball::from_rat(alpha, prec);
    let b = Ball::from_rat(beta, prec);
    let arg = u.scl(2, prec).mul(&ctx.pi, prec);
    let term1 = a
        .add(&b.mul(u, prec), prec)
        .neg()
        .mul(&arg.cos(prec), prec)
        .div(&ctx.pi.scl(2, prec), prec);
    let term2 = b
        .mul(&arg.sin(prec), prec)
        .div(&ctx.pi.square(prec).scl(4, prec), prec);
    term1.add(&term2, prec)
}

/// ∫ (α + βu)·sin(2πu)cos(2πu) du = −(α+βu)·cos(4πu)/(8π) + β·sin(4πu)/(32π²).
fn f1_anti(ctx: &SpliceCtx, u: &Ball, alpha: &Rat, beta: &Rat) -> Ball {
    let prec = ctx.prec;
    let a = Ball::from_rat(alpha, prec);
    let b = Ball::from_rat(beta, prec);
    let arg = u.scl(4, prec).mul(&ctx.pi, prec);
    let term1 = a
        .add(&b.mul(u, prec), prec)
        .neg()
        .mul(&arg.cos(prec), prec)
        .div(&ctx.pi.scl(8, prec), prec);
    let term2 = b
        .mul(&arg.sin(prec), prec)
        .div(&ctx.pi.square(prec).scl(32, prec), prec);
    term1.add(&term2, prec)
}

/// Rational breakpoints of the strip integrand for parameter p:
/// {0, 1/6, 1/2} ∪ {k/p : 0 ≤ k ≤ p} ∩ [0, 1/2], sorted.
fn strip_breakpoints(p: u32) -> Vec<Rat> {
    let mut pts = vec![Rat::zero(), rat(1, 6), rat(1, 2)];
    for k in 0..=p {
        let x = Rat::new(BigInt::from(k), BigInt::from(p));
        if x <= rat(1, 2) {
            pts.push(x);
        }
    }
    pts.sort();
    pts.dedup();
    pts
}

/// On the cell containing `u_mid`, the strip coefficient
/// 1_{u<1/6} + u − {pu} is affine: α + βu with α = 1_{mid<1/6} + ⌊p·mid⌋
/// and β = 1 − p.
fn cell_coeff(p: u32, u_mid: &Rat) -> (Rat, Rat) {
    let ind: i64 = if u_mid < &rat(1, 6) { 1 } else { 0 };
    let k = (u_mid * Rat::from(BigInt::from(p))).floor().to_integer();
    (
        Rat::from(BigInt::from(ind) + k),
        Rat::from(BigInt::from(1i64 - p as i64)),
    )
}

/// Ball enclosure of the strip residual
/// D_p(ρ) = ∫₀^ρ (1_{u<1/6} + u − {pu})·16π·sin(2πu)(cos(2πu) − cos(2πρ)) du
/// for ρ ranging over the whole box [lo, hi] (which must lie inside a
/// single integrand cell).
pub fn d_strip(ctx: &SpliceCtx, p: u32, lo: &Rat, hi: &Rat) -> Result<Ball> {
    if p < 2 {
        return Err(Error::Parameter("strip parameter needs p >= 2".into()));
    }
    let prec = ctx.prec;
    let rho = Ball::hull(lo, hi, prec)?;
    let c_rho = ctx.cos2pi(&rho);
    let mut total = Ball::from_int(0);
    let pts = strip_breakpoints(p);
    for w in pts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let mid = (a + b) * rat(1, 2);
        let (alpha, beta) = cell_coeff(p, &mid);
        let aa = Ball::hull(a, a, prec)?;
        if b <= lo {
            let bb = Ball::hull(b, b, prec)?;
            total = total.add(
                &f1_anti(ctx, &bb, &alpha, &beta).sub(&f1_anti(ctx, &aa, &alpha, &beta), prec),
                prec,
            );
            total = total.sub(
                &c_rho.mul(
                    &f2_anti(ctx, &bb, &alpha, &beta)
                        .sub(&f2_anti(ctx, &aa, &alpha, &beta), prec),
                    prec,
                ),
                prec,
            );
        } else if a <= lo && hi <= b {
            total = total.add(
                &f1_anti(ctx, &rho, &alpha, &beta).sub(&f1_anti(ctx, &aa, &alpha, &beta), prec),
                prec,
            );
            total = total.sub(
                &c_rho.mul(
                    &f2_anti(ctx, &rho, &alpha, &beta)
                        .sub(&f2_anti(ctx, &aa, &alpha, &beta), prec),
                    prec,
                ),
                prec,
            );
            break;
        } else {
            return Err(Error::Contract(format!(
                "box [{lo}, {hi}] straddles the cell boundary {a}..{b}"
            )));
        }
    }
    Ok(Ball::from_int(16).mul(&ctx.pi, prec).mul(&total, prec))
}

/// Signed atoms of the small-box functional for (p, q):
/// (0, +1), (1/6, −1), (i/p, +1), (j/q, +1), (k/(p+q−1), −1)
/// with indices up to n/2 for each family.
fn box_atoms(p: u32, q: u32) -> Vec<(Rat, i64)> {
    let l = p + q - 1;
    let mut atoms = vec![(Rat::zero(), 1i64), (rat(1, 6), -1)];
    for (n, wt) in [(p, 1i64), (q, 1), (l, -1)] {
        for i in 1..=(n / 2) {
            atoms.push((Rat::new(BigInt::from(i), BigInt::from(n)), wt));
        }
    }
    atoms
}

/// Ball enclosure of K_{p,q}(ρ) = 4·Σ_{α active} ω_α (cos(2πα) − cos(2πρ))²
/// for ρ over [lo, hi]; an atom is active iff α ≤ lo (boxes never straddle
/// atom breakpoints, and a newly active atom contributes zero there).
pub fn k_box(ctx: &SpliceCtx, p: u32, q: u32, lo: &Rat, hi: &Rat) -> Result<Ball> {
    if p < 2 || q < p {
        return Err(Error::Parameter(
            "small-box parameters need 2 <= p <= q".into(),
        ));
    }
    let prec = ctx.prec;
    let rho = Ball::hull(lo, hi, prec)?;
    let c = ctx.cos2pi(&rho);
    let mut total = Ball::from_int(0);
    for (alpha, wt) in box_atoms(p, q) {
        if &alpha <= lo {
            let ca = ctx.cos2pi(&Ball::hull(&alpha, &alpha, prec)?);
            let term = Ball::from_int(wt).mul(&ca.sub(&c, prec).square(prec), prec);
            total = total.add(&term, prec);
        }
    }
    Ok(Ball::from_int(4).mul(&total, prec))
}

/// Outcome of one certified bisection run.
#[derive(Clone, Debug)]
pub struct CertifySummary {
    pub label: String,
    pub boxes: usize,
    pub max_depth: usize,
    /// Exact lower bound of the residual over all accepted boxes (already
    /// past the 10⁻⁴ target).
    pub min_margin: Rat,
}

/// Depth-first bisection: accept a box iff the residual
/// f(box) − threshold − target has a strictly positive lower bound,
/// otherwise split it. Fails if the depth limit is reached.
pub fn certify_bisect<F>(
    label: &str,
    f: F,
    intervals: &[(Rat, Rat)],
    threshold: &Ball,
    target: &Rat,
    max_depth: usize,
    prec: u32,
) -> Result<CertifySummary>
where
    F: Fn(&Rat, &Rat) -> Result<Ball>,
{
    let mut stack: Vec<(Rat, Rat, usize)> = intervals
        .iter()
        .filter(|(lo, hi)| lo < hi)
        .map(|(lo, hi)| (lo.clone(), hi.clone(), 0))
        .collect();
    let mut boxes = 0usize;
    let mut deepest = 0usize;
    let mut min_margin: Option<Rat> = None;
    while let Some((lo, hi, depth)) = stack.pop() {
        let val = f(&lo, &hi)?
            .sub(threshold, prec)
            .sub(&Ball::from_rat(target, prec), prec);
        let lower = val.lower(prec);
        if lower.is_positive() {
            boxes += 1;
            deepest = deepest.max(depth);
            min_margin = Some(match min_margin {
                Some(m) => m.min(lower),
                None => lower,
            });
            continue;
        }
        if depth >= max_depth {
            return Err(Error::Certification(format!(
                "{label}: box [{lo}, {hi}] not certified at depth {depth}"
            )));
        }
        let mid = (&lo + &hi) * rat(1, 2);
        stack.push((lo, mid.clone(), depth + 1));
        stack.push((mid, hi, depth + 1));
    }
    Ok(CertifySummary {
        label: label.to_string(),
        boxes,
        max_depth: deepest,
        min_margin: min_margin
            .ok_or_else(|| Error::Parameter("no nonempty intervals".into()))?,
    })
}

fn seed_intervals(points: &[Rat]) -> Vec<(Rat, Rat)> {
    let lo = rat(1, 6);
    let hi = rat(1, 2);
    let mut pts: Vec<Rat> = points
        .iter()
        .filter(|x| &lo <= *x && *x <= &hi)
        .cloned()
        .collect();
    pts.push(lo);
    pts.push(hi);
    pts.sort();
    pts.dedup();
    pts.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
}

/// Certify the strip inequality
/// D_p(ρ) − C*(1/49 + 1/(p+6)²) ≥ 10⁻⁴ on ρ ∈ [1/6, 1/2].
pub fn certify_strip(ctx: &SpliceCtx, p: u32, max_depth: usize) -> Result<CertifySummary> {
    let tail = ctx.c_star.mul(
        &Ball::from_rat(&rat(1, 49), ctx.prec).add(
            &Ball::from_rat(
                &Rat::new(BigInt::one(), BigInt::from((p + 6) * (p + 6))),
                ctx.prec,
            ),
            ctx.prec,
        ),
        ctx.prec,
    );
    let seeds = seed_intervals(&strip_breakpoints(p));
    certify_bisect(
        &format!("strip p={p}"),
        |lo, hi| d_strip(ctx, p, lo, hi),
        &seeds,
        &tail,
        &rat(1, 10000),
        max_depth,
        ctx.prec,
    )
}

/// Certify the small-box inequality K_{p,q}(ρ) ≥ 10⁻⁴ on ρ ∈ [1/6, 1/2].
pub fn certify_box(ctx: &SpliceCtx, p: u32, q: u32, max_depth: usize) -> Result<CertifySummary> {
    let pts: Vec<Rat> = box_atoms(p, q).into_iter().map(|(a, _)| a).collect();
    let seeds = seed_intervals(&pts);
    certify_bisect(
        &format!("box p={p} q={q}"),
        |lo, hi| k_box(ctx, p, q, lo, hi),
        &seeds,
        &Ball::from_int(0),
        &rat(1, 10000),
        max_depth,
        ctx.prec,
    )
}

/// Run the full finite splicing certificate: strips p = 2..6 and boxes
/// 2 ≤ p ≤ q ≤ 6.
pub fn full_suite(prec: u32, max_depth: usize) -> Result<Vec<CertifySummary>> {
    let ctx = SpliceCtx::new(prec)?;
    let mut out = Vec::new();
    for p in 2..=6 {
        out.push(certify_strip(&ctx, p, max_depth)?);
    }
    for p in 2..=6 {
        for q in p..=6 {
            out.push(certify_box(&ctx, p, q, max_depth)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_to_f64;

    #[test]
    fn strip_p2_reference_margin() {
        let ctx = SpliceCtx::new(256).unwrap();
        let s = certify_strip(&ctx, 2, 20).unwrap();
        let margin = rat_to_f64(&s.min_margin);
        let reference = 0.2091836844141283218430;
        assert!(
            (margin / reference - 1.0).abs() < 1e-9,
            "margin {margin} vs reference {reference}"
        );
        assert_eq!(s.boxes, 5);
        assert!(s.max_depth <= 20);
    }

    #[test]
    fn box_22_reference_margin() {
        let ctx = SpliceCtx::new(256).unwrap();
        let s = certify_box(&ctx, 2, 2, 20).unwrap();
        let margin = rat_to_f64(&s.min_margin);
        let reference = 0.6508904537194193263616;
        assert!(
            (margin / reference - 1.0).abs() < 1e-9,
            "margin {margin} vs reference {reference}"
        );
        assert_eq!(s.boxes, 6);
    }

    #[test]
    fn rejects_bad_parameters() {
        let ctx = SpliceCtx::new(64).unwrap();
        assert!(d_strip(&ctx, 1, &rat(1, 6), &rat(1, 4)).is_err());
        assert!(k_box(&ctx, 3, 2, &rat(1, 6), &rat(1, 4)).is_err());
    }
}
