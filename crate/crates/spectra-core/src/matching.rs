//! Weighted matching generating polynomials and the exact polynomial
//! machinery built on them: path polynomials, the forest determinant
//! identity, θ-interpolation of a pendant-arm shift, real-rootedness, and
//! the same-side deletion-ratio cone evidence.

use crate::eig::eig_sym;
use crate::exact::{rat_to_f64, RatMatrix};
use crate::graph::{bipartition_of, Bipartition, Graph, TreeShiftStep};
use crate::poly::{Rat, RatPoly, RatPoly2};
use crate::{Error, Result};
use num_traits::{One, Zero};

/// Exact weighted matching generating polynomial
/// M_G(x) = Σ_matchings (∏ ω_e) x^{|M|}, by edge recursion
/// M_G = M_{G−e} + ω_e·x·M_{G−u−v} on the highest-index edge.
pub fn matching_poly(g: &Graph) -> RatPoly {
    let edges: Vec<((usize, usize), Rat)> = g
        .edges()
        .iter()
        .map(|&(u, v)| ((u, v), g.weight(u, v)))
        .collect();
    matching_rec(g.n(), &edges)
}

fn matching_rec(n: usize, edges: &[((usize, usize), Rat)]) -> RatPoly {
    if edges.is_empty() {
        return RatPoly::one();
    }
    let (&((u, v), ref w), rest) = edges.split_last().map(|(l, r)| (l, r)).unwrap();
    // Skip the edge.
    let without = matching_rec(n, rest);
    // Use the edge: drop everything incident to u or v.
    let reduced: Vec<((usize, usize), Rat)> = rest
        .iter()
        .filter(|&&((a, b), _)| a != u && a != v && b != u && b != v)
        .cloned()
        .collect();
    let with = matching_rec(n, &reduced);
    without.add(&with.mul(&RatPoly::from_coeffs(vec![Rat::zero(), w.clone()])))
}

/// Path matching polynomial h_m with h_{−1} = 0, h_0 = h_1 = 1,
/// h_m = h_{m−1} + x·h_{m−2}.
pub fn path_poly(m: i64) -> RatPoly {
    if m < 0 {
        return RatPoly::zero();
    }
    let mut prev = RatPoly::zero(); // h_{-1}
    let mut cur = RatPoly::one(); // h_0
    for _ in 0..m {
        let next = cur.add(&prev.shift_up(1));
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact rational Gram matrix similar to B⊤B on the chosen side of a
/// weighted forest (B has entries √ω). The square roots are eliminated by
/// a diagonal rescaling: positive rationals u_x, v_y with u_x·v_y = 1/ω_xy
/// on every edge (solvable because a forest has no cycles), after which
/// B⊤B is similar to W⊤·diag(u)·W·diag(v) with W the rational weight
/// biadjacency.
pub(crate) fn forest_gram_rational(f: &Graph, bip: &Bipartition) -> Result<RatMatrix> {
    let left_index: std::collections::HashMap<usize, usize> =
        bip.left.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let right_index: std::collections::HashMap<usize, usize> =
        bip.right.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for &(a, b) in f.edges() {
        let crosses = (left_index.contains_key(&a) && right_index.contains_key(&b))
            || (left_index.contains_key(&b) && right_index.contains_key(&a));
        if !crosses {
            return Err(Error::Contract("bipartition does not fit the graph".into()));
        }
    }
    // Solve u_x v_y = 1/ω by propagation over each component (acyclic).
    let n = f.n();
    let mut val: Vec<Option<Rat>> = vec![None; n]; // u on left, v on right
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in f.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for s in 0..n {
        if val[s].is_some() {
            continue;
        }
        val[s] = Some(Rat::one());
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let vx = val[x].clone().unwrap();
            for &y in &adj[x] {
                if val[y].is_none() {
                    let w = f.weight(x, y);
                    if w.is_zero() {
                        // Zero-weight edges contribute nothing; treat as seed.
                        val[y] = Some(Rat::one());
                    } else {
                        val[y] = Some(Rat::one() / (w * &vx));
                    }
                    stack.push(y);
                }
            }
        }
    }
    // M on the right side: M_{y,y'} = Σ_x ω_xy · u_x · ω_xy' · v_{y'}.
    let ny = bip.right.len();
    let mut m = RatMatrix::zero(ny);
    for (yi, &y) in bip.right.iter().enumerate() {
        for (yj, &y2) in bip.right.iter().enumerate() {
            let mut acc = Rat::zero();
            for &x in &bip.left {
                if f.has_edge(x, y) && f.has_edge(x, y2) {
                    acc += f.weight(x, y)
                        * val[x].clone().unwrap()
                        * f.weight(x, y2)
                        * val[y2].clone().unwrap();
                }
            }
            m[(yi, yj)] = acc;
        }
    }
    Ok(m)
}

/// det(I + x·B⊤B) of a weighted forest as an exact polynomial; equals the
/// matching polynomial (the forest determinant identity).
pub fn gram_charpoly(f: &Graph, bip: &Bipartition) -> Result<RatPoly> {
    if f.m() + f.components().len() != f.n() {
        return Err(Error::Contract("gram_charpoly needs a forest".into()));
    }
    let m = forest_gram_rational(f, bip)?;
    Ok(m.det_i_plus_x())
}

/// Convenience: gram_charpoly with the deterministic bipartition.
pub fn gram_charpoly_auto(f: &Graph) -> Result<RatPoly> {
    let bip = bipartition_of(f)
        .ok_or_else(|| Error::Contract("forest should be bipartite".into()))?;
    gram_charpoly(f, &bip)
}

/// Re-export: exact real-rootedness with negative roots (Sturm sequences).
pub fn real_rooted_negative(p: &RatPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::Parameter("zero polynomial".into()));
    }
    if p.coeff(0) != Rat::one() {
        return Err(Error::Parameter("matching polynomials have P(0) = 1".into()));
    }
    Ok(crate::poly::real_rooted_negative(p))
}

/// The θ-interpolated matching polynomial of a pendant-arm shift: the old
/// edge v–b₁ carries weight 1−θ, the new edge a_last–b₁ carries weight θ.
/// Specializing θ = 0 gives M_T, θ = 1 gives M_{T′}.
pub fn theta_interpolation(t: &Graph, step: &TreeShiftStep) -> Result<RatPoly2> {
    // Reuse apply_tree_shift's validation by running it.
    crate::graph::apply_tree_shift(t, step)?;
    let u_last = *step.arm_a.last().unwrap();
    let w1 = step.arm_b[0];
    let theta = RatPoly::x();
    let one_minus_theta = RatPoly::one().sub(&theta);
    let mut edges: Vec<((usize, usize), RatPoly)> = Vec::new();
    for &(a, b) in t.edges() {
        if (a.min(b), a.max(b)) == (step.v.min(w1), step.v.max(w1)) {
            edges.push(((a, b), one_minus_theta.clone()));
        } else {
            edges.push(((a, b), RatPoly::constant(t.weight(a, b))));
        }
    }
    edges.push(((u_last.min(w1), u_last.max(w1)), theta));
    Ok(matching_rec2(&edges))
}

fn matching_rec2(edges: &[((usize, usize), RatPoly)]) -> RatPoly2 {
    if edges.is_empty() {
        return RatPoly2::one();
    }
    let (&((u, v), ref w), rest) = edges.split_last().map(|(l, r)| (l, r)).unwrap();
    let without = matching_rec2(rest);
    let reduced: Vec<((usize, usize), RatPoly)> = rest
        .iter()
        .filter(|&&((a, b), _)| a != u && a != v && b != u && b != v)
        .cloned()
        .collect();
    let with = matching_rec2(&reduced);
    without.add(&with.mul(&RatPoly2::from_theta_poly(w.clone(), 1)))
}

/// Exact check of the shift derivative identity ∂θ M_θ = x²·W·E, with
/// W = (M_C − M_{C−v})/x over the core C (the tree minus both arms) and
/// E = h_{a−1}·h_{b−1}.
pub fn theta_derivative_identity(t: &Graph, step: &TreeShiftStep) -> Result<bool> {
    let m_theta = theta_interpolation(t, step)?;
    let arm_verts: Vec<usize> = step
        .arm_a
        .iter()
        .chain(step.arm_b.iter())
        .copied()
        .collect();
    let core_verts: Vec<usize> = (0..t.n()).filter(|v| !arm_verts.contains(v)).collect();
    let core = t.induced(&core_verts);
    let v_in_core = core_verts
        .iter()
        .position(|&u| u == step.v)
        .expect("v stays in the core");
    let core_minus_v: Vec<usize> = (0..core.n()).filter(|&u| u != v_in_core).collect();
    let m_c = matching_poly(&core);
    let m_cv = matching_poly(&core.induced(&core_minus_v));
    let w = m_c.sub(&m_cv).shift_down(1);
    let e = path_poly(step.arm_a.len() as i64 - 1).mul(&path_poly(step.arm_b.len() as i64 - 1));
    let rhs = RatPoly2::from_x_coeffs(
        w.mul(&e)
            .shift_up(2)
            .coeffs()
            .iter()
            .map(|c| RatPoly::constant(c.clone()))
            .collect(),
    );
    Ok(m_theta.d_theta() == rhs)
}

/// The one-shift difference M_{T′} − M_T (expected: x²·Q with Q ≥ 0
/// coefficientwise).
pub fn one_shift_difference(t: &Graph, step: &TreeShiftStep) -> Result<RatPoly> {
    let shifted = crate::graph::apply_tree_shift(t, step)?;
    Ok(matching_poly(&shifted).sub(&matching_poly(t)))
}

#[derive(Clone, Debug)]
pub struct DeletionRatioReport {
    /// Exterior-power expansion coefficients (squared minors, so ≥ 0 up to
    /// rounding).
    pub coeffs: Vec<f64>,
    pub min_coeff: f64,
    /// Worst |reconstruction − exact ratio| over the sample points.
    pub max_identity_residual: f64,
    pub pass: bool,
}

/// Evidence that M_{Y−U}(x)/M_Y(x) is a nonnegative combination of products
/// of resolvent factors 1/(1+xμ): expand the U×U principal minor of
/// (I + x·BB⊤)^{-1} over the eigenbasis of the side Gram matrix and check
/// the squared-minor coefficients and the exact-ratio reconstruction.
pub fn deletion_ratio_evidence(
    y: &Graph,
    u: &[usize],
    tol: f64,
) -> Result<DeletionRatioReport> {
    if y.m() + y.components().len() != y.n() {
        return Err(Error::Contract("deletion ratio evidence needs a forest".into()));
    }
    if u.len() > 2 {
        return Err(Error::Parameter("|U| <= 2".into()));
    }
    let bip = bipartition_of(y).ok_or_else(|| Error::Contract("forest is bipartite".into()))?;
    let side = if u.iter().all(|x| bip.left.contains(x)) {
        bip.left.clone()
    } else if u.iter().all(|x| bip.right.contains(x)) {
        bip.right.clone()
    } else {
        return Err(Error::Contract("U must lie on one side of the bipartition".into()));
    };
    if u.is_empty() {
        return Ok(DeletionRatioReport {
            coeffs: vec![1.0],
            min_coeff: 1.0,
            max_identity_residual: 0.0,
            pass: true,
        });
    }
    // Numeric Gram on the side containing U: (BB⊤)_{x,x'} = Σ_y √(ω ω').
    let other: Vec<usize> = (0..y.n()).filter(|v| !side.contains(v)).collect();
    let k = side.len();
    let mut m = vec![vec![0.0f64; k]; k];
    for (i, &a) in side.iter().enumerate() {
        for (j, &b) in side.iter().enumerate() {
            let mut acc = 0.0;
            for &c in &other {
                if y.has_edge(a, c) && y.has_edge(b, c) {
                    acc += (rat_to_f64(&y.weight(a, c)) * rat_to_f64(&y.weight(b, c))).sqrt();
                }
            }
            m[i][j] = acc;
        }
    }
    // Exact symmetry can be violated in the last bit by sqrt rounding; the
    // entries are built from the same formula both ways, so they agree.
    let eig = eig_sym(&m, 1e-8)?;
    let pos: Vec<usize> = u
        .iter()
        .map(|x| side.iter().position(|&s| s == *x).unwrap())
        .collect();
    let (coeffs, terms): (Vec<f64>, Vec<Vec<usize>>) = if u.len() == 1 {
        (0..k)
            .map(|i| (eig.vectors[i][pos[0]].powi(2), vec![i]))
            .unzip()
    } else {
        let mut cs = Vec::new();
        let mut ts = Vec::new();
        for i in 0..k {
            for j in (i + 1)..k {
                let det = eig.vectors[i][pos[0]] * eig.vectors[j][pos[1]]
                    - eig.vectors[i][pos[1]] * eig.vectors[j][pos[0]];
                cs.push(det * det);
                ts.push(vec![i, j]);
            }
        }
        (cs, ts)
    };
    let min_coeff = coeffs.iter().cloned().fold(f64::INFINITY, f64::min);
    // Reconstruction check against the exact ratio at rational sample points.
    let m_y = matching_poly(y);
    let rest: Vec<usize> = (0..y.n()).filter(|v| !u.contains(v)).collect();
    let m_yu = matching_poly(&y.induced(&rest));
    let mut max_res = 0.0f64;
    for xv in [crate::poly::rat(1, 3), crate::poly::rat(1, 1), crate::poly::rat(3, 1)] {
        let exact = rat_to_f64(&m_yu.eval(&xv)) / rat_to_f64(&m_y.eval(&xv));
        let xf = rat_to_f64(&xv);
        let mut recon = 0.0;
        for (c, term) in coeffs.iter().zip(&terms) {
            let mut prod = *c;
            for &i in term {
                prod /= 1.0 + xf * eig.values[i];
            }
            recon += prod;
        }
        max_res = max_res.max((recon - exact).abs());
    }
    let pass = min_coeff >= -tol && max_res <= 1e-6;
    Ok(DeletionRatioReport {
        coeffs,
        min_coeff,
        max_identity_residual: max_res,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};
    use crate::poly::{rat, rat_int};
    use std::collections::BTreeMap;

    #[test]
    fn basic_matching_polys() {
        let p2 = make_family(&Family::Path(2)).unwrap();
        assert_eq!(matching_poly(&p2), RatPoly::from_ints(&[1, 1]));
        let p4 = make_family(&Family::Path(4)).unwrap();
        assert_eq!(matching_poly(&p4), RatPoly::from_ints(&[1, 3, 1]));
        let star = make_family(&Family::Star(4)).unwrap();
        assert_eq!(matching_poly(&star), RatPoly::from_ints(&[1, 3]));
        // Weighted single edge.
        let mut w = BTreeMap::new();
        w.insert((0, 1), rat(2, 3));
        let e = make_family(&Family::Path(2)).unwrap().with_weights(w).unwrap();
        assert_eq!(
            matching_poly(&e),
            RatPoly::from_coeffs(vec![rat_int(1), rat(2, 3)])
        );
    }

    #[test]
    fn path_poly_identities() {
        assert_eq!(path_poly(-1), RatPoly::zero());
        assert_eq!(path_poly(0), RatPoly::one());
        assert_eq!(path_poly(1), RatPoly::one());
        assert_eq!(path_poly(4), RatPoly::from_ints(&[1, 3, 1]));
        // Concatenation: h_{a+b} = h_a h_b + x h_{a−1} h_{b−1}.
        for a in 0..=10i64 {
            for b in 0..=10i64 {
                let lhs = path_poly(a + b);
                let rhs = path_poly(a)
                    .mul(&path_poly(b))
                    .add(&path_poly(a - 1).mul(&path_poly(b - 1)).shift_up(1));
                assert_eq!(lhs, rhs, "a={a} b={b}");
            }
        }
        // h_m is the matching polynomial of P_m.
        for m in 1..=10 {
            let p = make_family(&Family::Path(m)).unwrap();
            assert_eq!(matching_poly(&p), path_poly(m as i64));
        }
    }

    #[test]
    fn forest_determinant_identity_small() {
        for (fam, want) in [
            (Family::Path(4), RatPoly::from_ints(&[1, 3, 1])),
            (Family::Star(4), RatPoly::from_ints(&[1, 3])),
        ] {
            let f = make_family(&fam).unwrap();
            assert_eq!(gram_charpoly_auto(&f).unwrap(), want);
        }
        // Weighted P_2 with ω = 2/3.
        let mut w = BTreeMap::new();
        w.insert((0, 1), rat(2, 3));
        let f = make_family(&Family::Path(2)).unwrap().with_weights(w).unwrap();
        assert_eq!(
            gram_charpoly_auto(&f).unwrap(),
            RatPoly::from_coeffs(vec![rat_int(1), rat(2, 3)])
        );
    }

    #[test]
    fn theta_interpolation_endpoints() {
        let star = make_family(&Family::Star(4)).unwrap();
        let step = crate::graph::find_tree_shift(&star).unwrap().unwrap();
        let m_theta = theta_interpolation(&star, &step).unwrap();
        assert_eq!(m_theta.at_theta(&rat_int(0)), matching_poly(&star));
        let shifted = crate::graph::apply_tree_shift(&star, &step).unwrap();
        assert_eq!(m_theta.at_theta(&rat_int(1)), matching_poly(&shifted));
        assert!(theta_derivative_identity(&star, &step).unwrap());
        // Specialization at θ = 1/2 equals the half-weighted graph.
        let half = rat(1, 2);
        let u_last = *step.arm_a.last().unwrap();
        let w1 = step.arm_b[0];
        let mut weights = BTreeMap::new();
        weights.insert(
            (step.v.min(w1), step.v.max(w1)),
            rat(1, 2),
        );
        weights.insert((u_last.min(w1), u_last.max(w1)), rat(1, 2));
        let g_half = crate::graph::add_edge(&star, (u_last, w1))
            .unwrap()
            .with_weights(weights)
            .unwrap();
        assert_eq!(m_theta.at_theta(&half), matching_poly(&g_half));
    }

    #[test]
    fn real_rootedness_wrapper() {
        assert!(real_rooted_negative(&RatPoly::from_ints(&[1, 3, 1])).unwrap());
        assert!(!real_rooted_negative(&RatPoly::from_ints(&[1, 0, 1])).unwrap());
        assert!(real_rooted_negative(&RatPoly::from_ints(&[2, 1])).is_err());
    }

    #[test]
    fn deletion_ratio_small_cases() {
        let p3 = make_family(&Family::Path(3)).unwrap();
        let rep = deletion_ratio_evidence(&p3, &[0], 1e-9).unwrap();
        assert!(rep.pass, "{rep:?}");
        let p5 = make_family(&Family::Path(5)).unwrap();
        let rep = deletion_ratio_evidence(&p5, &[0, 2], 1e-9).unwrap();
        assert!(rep.pass, "{rep:?}");
        let rep = deletion_ratio_evidence(&p5, &[], 1e-9).unwrap();
        assert!(rep.pass);
        assert!(deletion_ratio_evidence(&p5, &[0, 1], 1e-9).is_err());
    }
}
