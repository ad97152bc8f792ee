//! Complex discs with exact dyadic centers and integer radii.
//!
//! A [`CBall`] with `prec = p` denotes the closed disc of radius `rad / 2^p`
//! around `(re + i im) / 2^p`. All bounds below are rigorous: every
//! rounding is absorbed into the radius.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactalg::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CBall {
    pub re: BigInt,
    pub im: BigInt,
    pub rad: BigInt,
    pub prec: u32,
}

/// `ceil(sqrt(n))` for `n >= 0`.
pub(crate) fn isqrt_ceil(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &(&r * &r) < n {
        r + 1
    } else {
        r
    }
}

/// `x / 2^s` rounded to nearest (ties away from zero is fine here).
pub(crate) fn shr_round(x: &BigInt, s: u32) -> BigInt {
    if s == 0 {
        return x.clone();
    }
    let half = BigInt::one() << (s - 1);
    if x.sign() == Sign::Minus {
        -((-x + &half) >> s)
    } else {
        (x + &half) >> s
    }
}

/// `ceil(x / 2^s)` for `x >= 0`.
pub(crate) fn shr_ceil(x: &BigInt, s: u32) -> BigInt {
    if s == 0 {
        return x.clone();
    }
    let mask = (BigInt::one() << s) - 1;
    let q = x >> s;
    if (x & &mask).is_zero() {
        q
    } else {
        q + 1
    }
}

/// Natural log of a positive big integer, to about 1e-15 relative accuracy.
pub(crate) fn ln_big(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "ln of nonpositive integer");
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// `a / b` as f64 for big integers (b != 0), to about 1e-15 relative accuracy.
pub(crate) fn ratio_f64(a: &BigInt, b: &BigInt) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    let top = |x: &BigInt| -> (f64, i64) {
        let bits = x.bits() as i64;
        let s = (bits - 62).max(0);
        ((x.abs() >> s as u64).to_f64().unwrap(), s)
    };
    let (ma, sa) = top(a);
    let (mb, sb) = top(b);
    let s = if a.sign() == b.sign() { 1.0 } else { -1.0 };
    let e = (sa - sb).clamp(-2000, 2000) as i32;
    s * (ma / mb) * 2f64.powi(e)
}

/// Round a rational to an integer multiple of `2^-p`; returns the numerator.
pub(crate) fn rat_to_fixed(x: &Rat, p: u32) -> BigInt {
    let num = x.numer() << p;
    let den = x.denom();
    let (q, r) = num.div_mod_floor(den);
    if (r << 1u32) >= *den {
        q + 1
    } else {
        q
    }
}

impl CBall {
    pub fn exact_int(re: BigInt, im: BigInt, prec: u32) -> Self {
        CBall { re, im, rad: BigInt::zero(), prec }
    }

    pub fn from_rat(x: &Rat, prec: u32) -> Self {
        let re = rat_to_fixed(x, prec);
        let exact = Rat::new(re.clone(), BigInt::one() << prec) == *x;
        CBall {
            re,
            im: BigInt::zero(),
            rad: if exact { BigInt::zero() } else { BigInt::one() },
            prec,
        }
    }

    /// Upper bound for `|center| * 2^prec`.
    pub fn center_abs_upper(&self) -> BigInt {
        isqrt_ceil(&(&self.re * &self.re + &self.im * &self.im))
    }

    /// Lower bound for `|center| * 2^prec`.
    pub fn center_abs_lower(&self) -> BigInt {
        (&self.re * &self.re + &self.im * &self.im).sqrt()
    }

    /// Integer bounds `[lo, hi]` with `lo <= |z| * 2^prec <= hi` for every `z` in the ball.
    pub fn abs_bounds(&self) -> (BigInt, BigInt) {
        let lo = self.center_abs_lower() - &self.rad;
        let lo = if lo.is_negative() { BigInt::zero() } else { lo };
        (lo, self.center_abs_upper() + &self.rad)
    }

    pub fn contains_zero(&self) -> bool {
        self.abs_bounds().0.is_zero()
    }

    /// Same ball expressed at a higher precision `q >= prec`.
    pub fn lift(&self, q: u32) -> Self {
        assert!(q >= self.prec);
        let s = q - self.prec;
        CBall {
            re: &self.re << s,
            im: &self.im << s,
            rad: &self.rad << s,
            prec: q,
        }
    }

    /// Enclosing ball at lower precision `q <= prec`.
    pub fn round_to(&self, q: u32) -> Self {
        if q >= self.prec {
            return self.lift(q);
        }
        let s = self.prec - q;
        CBall {
            re: shr_round(&self.re, s),
            im: shr_round(&self.im, s),
            rad: shr_ceil(&self.rad, s) + 1,
            prec: q,
        }
    }

    pub fn conj(&self) -> Self {
        CBall {
            im: -&self.im,
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        CBall {
            re: -&self.re,
            im: -&self.im,
            ..self.clone()
        }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let p = a.prec.max(b.prec);
        (a.lift(p), b.lift(p))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        CBall {
            re: a.re + b.re,
            im: a.im + b.im,
            rad: a.rad + b.rad,
            prec: a.prec,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        let p = a.prec;
        let re = &a.re * &b.re - &a.im * &b.im;
        let im = &a.re * &b.im + &a.im * &b.re;
        // |c1 e2| + |c2 e1| + |e1 e2|, all at scale 2^(2p)
        let err = a.center_abs_upper() * &b.rad + b.center_abs_upper() * &a.rad + &a.rad * &b.rad;
        CBall {
            re: shr_round(&re, p),
            im: shr_round(&im, p),
            rad: shr_ceil(&err, p) + 1,
            prec: p,
        }
    }

    /// Whether `self` lies inside `o`.
    pub fn inside(&self, o: &Self) -> bool {
        let (a, b) = Self::common(self, o);
        let dre = &a.re - &b.re;
        let dim = &a.im - &b.im;
        let dist = isqrt_ceil(&(&dre * &dre + &dim * &dim));
        dist + &a.rad <= b.rad
    }

    pub fn disjoint(&self, o: &Self) -> bool {
        let (a, b) = Self::common(self, o);
        let dre = &a.re - &b.re;
        let dim = &a.im - &b.im;
        let r = &a.rad + &b.rad;
        &r * &r < &dre * &dre + &dim * &dim
    }

    /// Radius as a float (for accuracy bookkeeping only).
    pub fn rad_f64(&self) -> f64 {
        ratio_f64(&self.rad, &(BigInt::one() << self.prec))
    }

    pub fn re_f64(&self) -> f64 {
        ratio_f64(&self.re, &(BigInt::one() << self.prec))
    }

    pub fn im_f64(&self) -> f64 {
        ratio_f64(&self.im, &(BigInt::one() << self.prec))
    }

    /// `ln |center|`; `-inf` at the origin.
    pub fn ln_abs_center(&self) -> f64 {
        let n2 = &self.re * &self.re + &self.im * &self.im;
        if n2.is_zero() {
            return f64::NEG_INFINITY;
        }
        0.5 * ln_big(&n2) - self.prec as f64 * std::f64::consts::LN_2
    }

    /// Certified comparison of `|self|` and `|o|`, or `None` if the
    /// enclosures overlap.
    pub fn cmp_abs(&self, o: &Self) -> Option<Ordering> {
        let (a, b) = Self::common(self, o);
        let (alo, ahi) = a.abs_bounds();
        let (blo, bhi) = b.abs_bounds();
        if ahi < blo {
            Some(Ordering::Less)
        } else if bhi < alo {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Whether the whole ball lies in the open disc of radius `bound` about 0.
    pub fn inside_radius(&self, bound: &Rat) -> bool {
        let hi = self.abs_bounds().1;
        Rat::new(hi, BigInt::one() << self.prec) < *bound
    }

    /// Rational enclosure `[lo, hi]` of the real part.
    pub fn re_interval(&self) -> (Rat, Rat) {
        let den = BigInt::one() << self.prec;
        (
            Rat::new(&self.re - &self.rad, den.clone()),
            Rat::new(&self.re + &self.rad, den),
        )
    }

    pub fn im_interval(&self) -> (Rat, Rat) {
        let den = BigInt::one() << self.prec;
        (
            Rat::new(&self.im - &self.rad, den.clone()),
            Rat::new(&self.im + &self.rad, den),
        )
    }
}
