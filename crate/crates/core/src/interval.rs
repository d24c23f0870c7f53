//! Exact interval arithmetic with rational endpoints.

use crate::num::{rat_midpoint, rat_sign, Rat};
use num_traits::{Signed, Zero};

/// A closed interval `[lo, hi]` with rational endpoints; `lo == hi` encodes an
/// exact point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn point(v: Rat) -> Self {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        rat_midpoint(&self.lo, &self.hi)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// Sign of every point in the interval, if constant: `None` when the
    /// interval straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        match rat_sign(c) {
            0 => RatInterval::point(Rat::zero()),
            1 => RatInterval::new(&self.lo * c, &self.hi * c),
            _ => RatInterval::new(&self.hi * c, &self.lo * c),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return RatInterval::point(Rat::from_integer(1.into()));
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.midpoint();
        let n: f64 = m.numer().to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = m.denom().to_string().parse().unwrap_or(f64::NAN);
        n / d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat(-2), rat(3));
        let b = RatInterval::new(rat(-1), rat(4));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-8));
        assert_eq!(p.hi, rat(12));
    }

    #[test]
    fn pow_of_straddling_interval() {
        let a = RatInterval::new(rat(-2), rat(1));
        let sq = a.pow(2);
        // naive product bound, not the tight even-power bound
        assert!(sq.lo <= rat(0) && sq.hi >= rat(4));
        assert!(RatInterval::new(ratio(1, 2), rat(2)).pow(3).lo == ratio(1, 8));
    }
}
