//! Outward-rounded ball arithmetic (midpoint ± radius) backed by the Arb
//! library: every operation returns a ball guaranteed to contain the exact
//! result, so any strict sign obtained from a ball bound is a proof.
//! Rational endpoints move in and out of the balls exactly.

use crate::poly::Rat;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use arb_sys::arb::*;
use arb_sys::arf::*;
use arb_sys::mag::*;
use flint_sys::fmpz::{fmpz, fmpz_clear, fmpz_get_str, fmpz_init, fmpz_set_str};
use std::ffi::{CStr, CString};

/// arf round-to-nearest constant (ARF_RND_NEAR).
const RND_NEAR: i32 = 4;

/// Owned FLINT big integer, used only at the FFI boundary.
struct Fz(fmpz);

impl Fz {
    fn new() -> Fz {
        unsafe {
            let mut z = std::mem::MaybeUninit::<fmpz>::uninit();
            fmpz_init(z.as_mut_ptr());
            Fz(z.assume_init())
        }
    }

    fn from_bigint(v: &BigInt) -> Fz {
        let mut z = Fz::new();
        let s = CString::new(v.to_string()).expect("decimal digits");
        let rc = unsafe { fmpz_set_str(&mut z.0, s.as_ptr(), 10) };
        debug_assert_eq!(rc, 0);
        z
    }

    fn to_bigint(&self) -> BigInt {
        unsafe {
            let s = fmpz_get_str(std::ptr::null_mut(), 10, &self.0);
            let text = CStr::from_ptr(s).to_string_lossy().into_owned();
            libc::free(s as *mut libc::c_void);
            text.parse().expect("fmpz prints valid decimal")
        }
    }
}

impl Drop for Fz {
    fn drop(&mut self) {
        unsafe { fmpz_clear(&mut self.0) };
    }
}

/// A real ball. All operations take the working precision in bits.
pub struct Ball(arb_struct);

// A Ball owns its heap data and is only mutated through &mut.
unsafe impl Send for Ball {}
unsafe impl Sync for Ball {}

impl Drop for Ball {
    fn drop(&mut self) {
        unsafe { arb_clear(&mut self.0) };
    }
}

impl Clone for Ball {
    fn clone(&self) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_set(&mut z.0, &self.0) };
        z
    }
}

impl std::fmt::Debug for Ball {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mid = unsafe { arf_get_d(&self.0.mid, RND_NEAR) };
        let rad = unsafe { mag_get_d(&self.0.rad) };
        write!(f, "Ball({mid} ± {rad})")
    }
}

impl Ball {
    fn zero() -> Ball {
        unsafe {
            let mut x = std::mem::MaybeUninit::<arb_struct>::uninit();
            arb_init(x.as_mut_ptr());
            Ball(x.assume_init())
        }
    }

    pub fn from_int(v: i64) -> Ball {
        let mut x = Ball::zero();
        unsafe { arb_set_si(&mut x.0, v) };
        x
    }

    /// Exact rational made into a ball: the midpoint is the correctly
    /// rounded quotient, the radius covers the rounding.
    pub fn from_rat(x: &Rat, prec: u32) -> Ball {
        let num = Fz::from_bigint(x.numer());
        let mut z = Ball::zero();
        unsafe { arb_set_fmpz(&mut z.0, &num.0) };
        if !x.denom().is_one() {
            let den = Fz::from_bigint(x.denom());
            unsafe { arb_div_fmpz(&mut z.0, &z.0, &den.0, prec as i64) };
        }
        z
    }

    /// Ball covering the whole interval [lo, hi]: midpoint (lo+hi)/2 and
    /// radius (hi−lo)/2, both rounded outward.
    pub fn hull(lo: &Rat, hi: &Rat, prec: u32) -> Result<Ball> {
        if lo > hi {
            return Err(Error::Parameter(format!("empty hull [{lo}, {hi}]")));
        }
        let mid = (lo + hi) / Rat::from(BigInt::from(2));
        let rad = (hi - lo) / Rat::from(BigInt::from(2));
        let mut x = Ball::from_rat(&mid, prec);
        if !rad.is_zero() {
            let num = Fz::from_bigint(rad.numer());
            let den = Fz::from_bigint(rad.denom());
            unsafe {
                let mut a = std::mem::MaybeUninit::<arf_struct>::uninit();
                let mut b = std::mem::MaybeUninit::<arf_struct>::uninit();
                let mut t = std::mem::MaybeUninit::<arf_struct>::uninit();
                arf_init(a.as_mut_ptr());
                arf_init(b.as_mut_ptr());
                arf_init(t.as_mut_ptr());
                arf_set_fmpz(a.as_mut_ptr(), &num.0);
                arf_set_fmpz(b.as_mut_ptr(), &den.0);
                arf_div(t.as_mut_ptr(), a.as_ptr(), b.as_ptr(), 53, RND_NEAR);
                let mut m = std::mem::MaybeUninit::<mag_struct>::uninit();
                mag_init(m.as_mut_ptr());
                arf_get_mag(m.as_mut_ptr(), t.as_ptr());
                mag_add(&mut x.0.rad, &x.0.rad, m.as_ptr());
                mag_clear(m.as_mut_ptr());
                arf_clear(a.as_mut_ptr());
                arf_clear(b.as_mut_ptr());
                arf_clear(t.as_mut_ptr());
            }
        }
        Ok(x)
    }

    /// Exact rational lower endpoint of the ball (rounded down at `prec`).
    pub fn lower(&self, prec: u32) -> Rat {
        let (lo, _) = self.endpoints(prec);
        lo
    }

    /// Exact rational upper endpoint of the ball (rounded up at `prec`).
    pub fn upper(&self, prec: u32) -> Rat {
        let (_, hi) = self.endpoints(prec);
        hi
    }

    fn endpoints(&self, prec: u32) -> (Rat, Rat) {
        unsafe {
            let mut lo = std::mem::MaybeUninit::<arf_struct>::uninit();
            let mut hi = std::mem::MaybeUninit::<arf_struct>::uninit();
            arf_init(lo.as_mut_ptr());
            arf_init(hi.as_mut_ptr());
            arb_get_interval_arf(lo.as_mut_ptr(), hi.as_mut_ptr(), &self.0, prec as i64);
            let l = arf_to_rat(lo.as_ptr());
            let h = arf_to_rat(hi.as_ptr());
            arf_clear(lo.as_mut_ptr());
            arf_clear(hi.as_mut_ptr());
            (l, h)
        }
    }

    pub fn contains(&self, x: &Rat, prec: u32) -> bool {
        let (lo, hi) = self.endpoints(prec);
        &lo <= x && x <= &hi
    }

    pub fn add(&self, o: &Ball, prec: u32) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_add(&mut z.0, &self.0, &o.0, prec as i64) };
        z
    }

    pub fn sub(&self, o: &Ball, prec: u32) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_sub(&mut z.0, &self.0, &o.0, prec as i64) };
        z
    }

    pub fn mul(&self, o: &Ball, prec: u32) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_mul(&mut z.0, &self.0, &o.0, prec as i64) };
        z
    }

    pub fn div(&self, o: &Ball, prec: u32) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_div(&mut z.0, &self.0, &o.0, prec as i64) };
        z
    }

    pub fn neg(&self) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_neg(&mut z.0, &self.0) };
        z
    }

    pub fn square(&self, prec: u32) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_pow_ui(&mut z.0, &self.0, 2, prec as i64) };
        z
    }

    /// Multiply by a small integer constant.
    pub fn scl(&self, c: i64, prec: u32) -> Ball {
        Ball::from_int(c).mul(self, prec)
    }

    pub fn sin(&self, prec: u32) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_sin(&mut z.0, &self.0, prec as i64) };
        z
    }

    pub fn cos(&self, prec: u32) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_cos(&mut z.0, &self.0, prec as i64) };
        z
    }

    pub fn sqrt(&self, prec: u32) -> Ball {
        let mut z = Ball::zero();
        unsafe { arb_sqrt(&mut z.0, &self.0, prec as i64) };
        z
    }
}

/// Exact conversion of a finite dyadic arf to a rational: mantissa · 2^exp.
unsafe fn arf_to_rat(x: *const arf_struct) -> Rat {
    let mut man = Fz::new();
    let mut exp = Fz::new();
    arf_get_fmpz_2exp(&mut man.0, &mut exp.0, x);
    let m = man.to_bigint();
    let e = exp.to_bigint();
    let e: i64 = i64::try_from(&e).expect("arf exponent fits i64");
    if e >= 0 {
        Rat::from(m * (BigInt::one() << e as usize))
    } else {
        Rat::new(m, BigInt::one() << (-e) as usize)
    }
}

/// Ball enclosure of π.
pub fn pi(prec: u32) -> Ball {
    let mut z = Ball::zero();
    unsafe { arb_const_pi(&mut z.0, prec as i64) };
    z
}

/// Ball enclosure of √x for a nonnegative rational x.
pub fn sqrt_rat(x: &Rat, prec: u32) -> Result<Ball> {
    if x.is_negative() {
        return Err(Error::Parameter(format!("sqrt of negative rational {x}")));
    }
    Ok(Ball::from_rat(x, prec).sqrt(prec))
}

pub fn sin_ball(x: &Ball, prec: u32) -> Ball {
    x.sin(prec)
}

pub fn cos_ball(x: &Ball, prec: u32) -> Ball {
    x.cos(prec)
}

/// cos(2πu) for a ball u, sharing one π enclosure.
pub fn cos2pi(u: &Ball, pi_ball: &Ball, prec: u32) -> Ball {
    u.scl(2, prec).mul(pi_ball, prec).cos(prec)
}

/// sin(2πu) for a ball u, sharing one π enclosure.
pub fn sin2pi(u: &Ball, pi_ball: &Ball, prec: u32) -> Ball {
    u.scl(2, prec).mul(pi_ball, prec).sin(prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    const P: u32 = 128;

    #[test]
    fn pi_enclosure_is_tight() {
        let p = pi(P);
        // 3.14159265 < π < 3.14159266
        assert!(p.lower(P) > rat(314159265, 100000000));
        assert!(p.upper(P) < rat(314159266, 100000000));
    }

    #[test]
    fn rational_round_trip() {
        let x = Ball::from_rat(&rat(1, 3), P);
        assert!(x.contains(&rat(1, 3), P));
        assert!(x.upper(P) - x.lower(P) < rat(1, 1i64 << 40));
        // Dyadic rationals are exact.
        let y = Ball::from_rat(&rat(5, 8), P);
        assert_eq!(y.lower(P), rat(5, 8));
        assert_eq!(y.upper(P), rat(5, 8));
    }

    #[test]
    fn hull_covers_both_endpoints() {
        let h = Ball::hull(&rat(1, 6), &rat(1, 2), P).unwrap();
        assert!(h.contains(&rat(1, 6), P));
        assert!(h.contains(&rat(1, 2), P));
        assert!(h.contains(&rat(1, 3), P));
        assert!(!h.contains(&rat(3, 5), P));
        assert!(Ball::hull(&rat(1, 2), &rat(1, 6), P).is_err());
    }

    #[test]
    fn arithmetic_contains_exact_values() {
        let a = Ball::from_rat(&rat(1, 3), P);
        let b = Ball::from_rat(&rat(1, 7), P);
        assert!(a.add(&b, P).contains(&rat(10, 21), P));
        assert!(a.sub(&b, P).contains(&rat(4, 21), P));
        assert!(a.mul(&b, P).contains(&rat(1, 21), P));
        assert!(a.div(&b, P).contains(&rat(7, 3), P));
        assert!(a.square(P).contains(&rat(1, 9), P));
        assert!(a.neg().contains(&rat(-1, 3), P));
        assert!(a.scl(6, P).contains(&rat(2, 1), P));
    }

    #[test]
    fn trig_and_sqrt_enclosures() {
        let p = pi(P);
        // sin(π) contains 0; cos(π) contains −1.
        assert!(sin_ball(&p, P).contains(&rat(0, 1), P));
        assert!(cos_ball(&p, P).contains(&rat(-1, 1), P));
        // cos(2π·1/2) = cos(π) = −1.
        let half = Ball::from_rat(&rat(1, 2), P);
        assert!(cos2pi(&half, &p, P).contains(&rat(-1, 1), P));
        assert!(sin2pi(&half, &p, P).contains(&rat(0, 1), P));
        // √2 ∈ (1.41421356, 1.41421357)
        let s = sqrt_rat(&rat(2, 1), P).unwrap();
        assert!(s.lower(P) > rat(141421356, 100000000));
        assert!(s.upper(P) < rat(141421357, 100000000));
        assert!(sqrt_rat(&rat(-1, 1), P).is_err());
    }
}
