//! Dense univariate (and bivariate) polynomials with exact rational
//! coefficients, plus Sturm-sequence real-root counting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Dense univariate polynomial over the rationals, constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly{:?}", self.coeffs)
    }
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(out)
    }

    /// Exact division by x^k; panics if a lower coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Self {
        for c in self.coeffs.iter().take(k) {
            assert!(c.is_zero(), "not divisible by x^{}", k);
        }
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::exact::rat_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from(BigInt::from(k)))
                .collect(),
        )
    }

    /// Substitute x := a + b·y, returning the coefficients in y (Horner).
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Self {
        let lin = Self::from_coeffs(vec![a.clone(), b.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dn = divisor.coeffs.len();
        if rem.len() < dn {
            return (Self::zero(), self.clone());
        }
        let lead_inv = Rat::one() / divisor.leading();
        let mut quot = vec![Rat::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dn - 1].clone() * &lead_inv;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dn - 1);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = Rat::one() / a.leading();
            a.scale(&inv)
        }
    }

    pub fn min_coeff(&self) -> Rat {
        self.coeffs
            .iter()
            .cloned()
            .min()
            .unwrap_or_else(Rat::zero)
    }

    pub fn all_coeffs_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficientwise comparison: self(x) ≤ other(x) coefficient by coefficient.
    pub fn le_coeffwise(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| self.coeff(k) <= other.coeff(k))
    }
}

/// Sign of a rational: -1, 0, or 1.
fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of a (square-free) polynomial.
fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

/// Count sign changes of the chain evaluated at a point (zeros skipped).
fn sign_changes_at(chain: &[RatPoly], x: &Rat) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| sign(&p.eval(x))).collect();
    count_changes(&signs)
}

/// Sign changes of the chain "at -infinity": sign of leading coeff times (-1)^deg.
fn sign_changes_at_neg_inf(chain: &[RatPoly]) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| {
            if p.is_zero() {
                0
            } else {
                let s = sign(&p.leading());
                if p.degree() % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        })
        .collect();
    count_changes(&signs)
}

fn count_changes(signs: &[i32]) -> usize {
    let mut changes = 0;
    let mut last = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `p` in the open interval (-inf, b),
/// assuming p(b) != 0. Decided exactly by Sturm's theorem.
pub fn count_distinct_roots_below(p: &RatPoly, b: &Rat) -> usize {
    assert!(!p.eval(b).is_zero(), "endpoint is a root");
    let g = p.gcd(&p.derivative());
    let sf = if g.degree() == 0 {
        p.clone()
    } else {
        p.div_rem(&g).0
    };
    let chain = sturm_chain(&sf);
    sign_changes_at_neg_inf(&chain) - sign_changes_at(&chain, b)
}

/// True iff every root of `p` is real and strictly negative (with
/// multiplicity), decided exactly. Requires p(0) != 0.
pub fn real_rooted_negative(p: &RatPoly) -> bool {
    assert!(!p.is_zero(), "zero polynomial");
    assert!(!p.eval(&Rat::zero()).is_zero(), "root at zero");
    if p.degree() == 0 {
        return true;
    }
    let g = p.gcd(&p.derivative());
    let sf = if g.degree() == 0 {
        p.clone()
    } else {
        p.div_rem(&g).0
    };
    let chain = sturm_chain(&sf);
    let distinct_neg =
        sign_changes_at_neg_inf(&chain) - sign_changes_at(&chain, &Rat::zero());
    if distinct_neg != sf.degree() {
        return false;
    }
    // Repeated roots live in the gcd: recurse on it.
    if g.degree() == 0 {
        true
    } else {
        real_rooted_negative(&g)
    }
}

/// Bivariate polynomial in (x, θ): `coeffs[k]` is the θ-polynomial
/// multiplying x^k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly2 {
    coeffs: Vec<RatPoly>,
}

impl RatPoly2 {
    pub fn from_x_coeffs(mut coeffs: Vec<RatPoly>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly2 { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly2 { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly2 {
            coeffs: vec![RatPoly::one()],
        }
    }

    /// Embed a θ-polynomial as the x^k coefficient.
    pub fn from_theta_poly(theta_poly: RatPoly, x_power: usize) -> Self {
        let mut coeffs = vec![RatPoly::zero(); x_power];
        coeffs.push(theta_poly);
        Self::from_x_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn x_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn x_coeff(&self, k: usize) -> RatPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(RatPoly::zero)
    }

    pub fn x_coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_x_coeffs((0..n).map(|k| self.x_coeff(k).add(&other.x_coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_x_coeffs((0..n).map(|k| self.x_coeff(k).sub(&other.x_coeff(k))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![RatPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_x_coeffs(out)
    }

    /// ∂/∂θ, taken coefficientwise in x.
    pub fn d_theta(&self) -> Self {
        Self::from_x_coeffs(self.coeffs.iter().map(|c| c.derivative()).collect())
    }

    /// Specialize θ to a rational value, leaving a polynomial in x.
    pub fn at_theta(&self, theta: &Rat) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(theta)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_roundtrip() {
        let p = RatPoly::from_ints(&[2, 0, -3, 1, 5]);
        let d = RatPoly::from_ints(&[1, 2, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), p);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn sturm_counts_roots() {
        // (x+1)(x+2)(x-3) = x^3 - 7x - 6: two negative roots.
        let p = RatPoly::from_ints(&[-6, -7, 0, 1]);
        assert_eq!(count_distinct_roots_below(&p, &Rat::zero()), 2);
    }

    #[test]
    fn real_rooted_examples() {
        // 1 + 3x + x^2: both roots real negative.
        assert!(real_rooted_negative(&RatPoly::from_ints(&[1, 3, 1])));
        // 1 + x^2: roots ±i.
        assert!(!real_rooted_negative(&RatPoly::from_ints(&[1, 0, 1])));
        // (1+x)^3: repeated negative root.
        assert!(real_rooted_negative(&RatPoly::from_ints(&[1, 3, 3, 1])));
        // (1+x)^2 (1+x^2): repeated negative root times complex pair.
        let p = RatPoly::from_ints(&[1, 2, 1]).mul(&RatPoly::from_ints(&[1, 0, 1]));
        assert!(!real_rooted_negative(&p));
        // 1 - x: positive root.
        assert!(!real_rooted_negative(&RatPoly::from_ints(&[1, -1])));
    }

    #[test]
    fn compose_affine_matches_eval() {
        let p = RatPoly::from_ints(&[1, -4, 2, 7]);
        let a = rat(1, 3);
        let b = rat(5, 2);
        let q = p.compose_affine(&a, &b);
        for y in [rat(0, 1), rat(1, 2), rat(-3, 4)] {
            assert_eq!(q.eval(&y), p.eval(&(a.clone() + b.clone() * &y)));
        }
    }

    #[test]
    fn bivariate_specialization() {
        // (1 + θx)(1 + x) = 1 + (1+θ)x + θx².
        let p = RatPoly2::from_x_coeffs(vec![RatPoly::one(), RatPoly::x()]);
        let q = RatPoly2::from_x_coeffs(vec![RatPoly::one(), RatPoly::one()]);
        let prod = p.mul(&q);
        let half = rat(1, 2);
        assert_eq!(
            prod.at_theta(&half),
            RatPoly::from_coeffs(vec![rat_int(1), rat(3, 2), rat(1, 2)])
        );
        assert_eq!(
            prod.d_theta(),
            RatPoly2::from_x_coeffs(vec![RatPoly::zero(), RatPoly::one(), RatPoly::one()])
        );
    }
}
