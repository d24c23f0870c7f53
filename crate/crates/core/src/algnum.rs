//! Real algebraic numbers as (squarefree defining polynomial, isolating
//! interval) pairs, and the rational-or-algebraic value union.
//!
//! Zero tests are always algebraic (gcd / exact root membership); interval
//! refinement only ever resolves nonzero signs.

use crate::interval::RatInterval;
use crate::num::{rat_midpoint, rat_to_string, Rat};
use crate::upoly::{isolate_real_roots, rational_root_in, IsolatedRoot, UPoly};
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

/// Number of simplest-rational probes before an isolated root is accepted as
/// irrational for representation purposes.
const RATIONAL_PROBE_DEPTH: usize = 32;

/// A real algebraic number: the unique root of `defpoly` inside the open
/// interval `(lo, hi)`; the endpoints are never roots of `defpoly`.
#[derive(Debug, Clone)]
pub struct AlgebraicNumber {
    defpoly: UPoly,
    lo: Rat,
    hi: Rat,
}

impl AlgebraicNumber {
    /// Wrap an isolated root; `defpoly` must be squarefree with exactly one
    /// root in `(lo, hi)` and non-root endpoints.
    pub fn new(defpoly: UPoly, lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo < hi);
        AlgebraicNumber {
            defpoly: defpoly.primitive(),
            lo,
            hi,
        }
    }

    /// Full invariant check (squarefree isolation with non-root endpoints);
    /// intended for tests, not hot paths.
    pub fn validate(&self) -> bool {
        self.lo < self.hi
            && self.defpoly.sign_at(&self.lo) != 0
            && self.defpoly.sign_at(&self.hi) != 0
            && self.defpoly.count_roots_in_sturm(&self.lo, &self.hi) == 1
    }

    pub fn defpoly(&self) -> &UPoly {
        &self.defpoly
    }

    pub fn interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    fn sign_in_interval(&self, f: &UPoly, lo: &Rat, hi: &Rat) -> bool {
        // does f change sign over (lo,hi)? (f squarefree divisor of defpoly)
        f.sign_at(lo) * f.sign_at(hi) < 0
    }

    /// One bisection step; `Err(r)` reports that the root is exactly the
    /// rational bisection point.
    fn bisect_once(&self) -> Result<AlgebraicNumber, Rat> {
        let mid = rat_midpoint(&self.lo, &self.hi);
        match self.defpoly.sign_at(&mid) {
            0 => Err(mid),
            s => {
                let s_lo = self.defpoly.sign_at(&self.lo);
                if s_lo * s < 0 {
                    Ok(AlgebraicNumber {
                        defpoly: self.defpoly.clone(),
                        lo: self.lo.clone(),
                        hi: mid,
                    })
                } else {
                    Ok(AlgebraicNumber {
                        defpoly: self.defpoly.clone(),
                        lo: mid,
                        hi: self.hi.clone(),
                    })
                }
            }
        }
    }

    /// Same root, interval width at most `width`.  If bisection happens to hit
    /// the root exactly the interval is recentred around it (the value level
    /// collapses such roots to rationals instead).
    pub fn refined_to_width(&self, width: &Rat) -> AlgebraicNumber {
        assert!(width > &Rat::zero());
        let mut cur = self.clone();
        while &cur.width() > width {
            match cur.bisect_once() {
                Ok(next) => cur = next,
                Err(root) => {
                    // the root is the bisection point; recentre inside the
                    // current interval (which contains no other root)
                    let w = cur.width().min(width.clone()) / Rat::from_integer(4.into());
                    let lo = &root - &w;
                    let hi = &root + &w;
                    debug_assert!(cur.defpoly.sign_at(&lo) != 0 && cur.defpoly.sign_at(&hi) != 0);
                    return AlgebraicNumber {
                        defpoly: cur.defpoly,
                        lo,
                        hi,
                    };
                }
            }
        }
        cur
    }

    /// Shrink the interval until the rational `r` lies outside it (the root
    /// must differ from `r`).
    pub fn refined_excluding(&self, r: &Rat) -> AlgebraicNumber {
        if r <= &self.lo || r >= &self.hi {
            return self.clone();
        }
        // r is interior and not the root, so defpoly(r) != 0 and it becomes a
        // legal endpoint
        match self.compare_rat_inner(r) {
            Ordering::Equal => panic!("cannot exclude the root itself"),
            Ordering::Less => AlgebraicNumber {
                defpoly: self.defpoly.clone(),
                lo: self.lo.clone(),
                hi: r.clone(),
            },
            Ordering::Greater => AlgebraicNumber {
                defpoly: self.defpoly.clone(),
                lo: r.clone(),
                hi: self.hi.clone(),
            },
        }
    }

    /// Exact comparison against a rational (no refinement needed).
    pub fn compare_rat(&self, r: &Rat) -> Ordering {
        self.compare_rat_inner(r)
    }

    fn compare_rat_inner(&self, r: &Rat) -> Ordering {
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        match self.defpoly.sign_at(r) {
            0 => Ordering::Equal, // unique defpoly root in the interval
            s => {
                let s_lo = self.defpoly.sign_at(&self.lo);
                if s_lo * s < 0 {
                    // root in (lo, r)
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// Exact comparison of two algebraic numbers.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        let g = a.defpoly.gcd(&b.defpoly);
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if !g.is_constant() {
                let lo = a.lo.clone().max(b.lo.clone());
                let hi = a.hi.clone().min(b.hi.clone());
                if lo < hi && self.sign_in_interval(&g, &lo, &hi) {
                    // a common defining root inside both isolating intervals
                    return Ordering::Equal;
                }
            }
            a = match a.bisect_once() {
                Ok(n) => n,
                Err(r) => return b.compare_rat(&r).reverse(),
            };
            b = match b.bisect_once() {
                Ok(n) => n,
                Err(r) => return a.compare_rat(&r),
            };
        }
    }

    /// Exact sign of a univariate integer polynomial at this number.
    pub fn sign_of(&self, f: &UPoly) -> i8 {
        if f.is_zero() {
            return 0;
        }
        let g = f.gcd(&self.defpoly);
        if !g.is_constant() && self.sign_in_interval(&g, &self.lo, &self.hi) {
            return 0;
        }
        // nonzero: refine until the interval evaluation excludes zero
        let mut cur = self.clone();
        loop {
            let iv = f.interval_eval(&cur.interval());
            if let Some(s) = iv.sign() {
                if s != 0 {
                    return s;
                }
            }
            cur = match cur.bisect_once() {
                Ok(n) => n,
                Err(r) => return f.sign_at(&r),
            };
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.refined_to_width(&Rat::new(1.into(), 1_000_000.into()))
            .interval()
            .to_f64()
    }

    pub fn defpoly_text(&self, var: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.defpoly.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            parts.push(match (mono.is_empty(), c.to_string().as_str()) {
                (false, "1") => mono,
                (false, "-1") => format!("-{}", mono),
                (false, cs) => format!("{}*{}", cs, mono),
                (true, cs) => cs.to_string(),
            });
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i > 0 && !p.starts_with('-') {
                out.push('+');
            }
            out.push_str(p);
        }
        out
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in ({}, {})",
            self.defpoly_text("t"),
            rat_to_string(&self.lo),
            rat_to_string(&self.hi)
        )
    }
}

/// An exact real value: rational, or the root of an integer polynomial.
#[derive(Debug, Clone)]
pub enum Value {
    Rational(Rat),
    Algebraic(AlgebraicNumber),
}

impl Value {
    pub fn rational(r: Rat) -> Self {
        Value::Rational(r)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Value::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Value::Rational(r) => Some(r),
            Value::Algebraic(_) => None,
        }
    }

    pub fn interval(&self) -> RatInterval {
        match self {
            Value::Rational(r) => RatInterval::point(r.clone()),
            Value::Algebraic(a) => a.interval(),
        }
    }

    pub fn compare(&self, other: &Value) -> Ordering {
        match (self, other) {
            (Value::Rational(a), Value::Rational(b)) => a.cmp(b),
            (Value::Rational(a), Value::Algebraic(b)) => b.compare_rat(a).reverse(),
            (Value::Algebraic(a), Value::Rational(b)) => a.compare_rat(b),
            (Value::Algebraic(a), Value::Algebraic(b)) => a.compare(b),
        }
    }

    /// Exact sign of a univariate integer polynomial at this value.
    pub fn sign_of(&self, f: &UPoly) -> i8 {
        match self {
            Value::Rational(r) => f.sign_at(r),
            Value::Algebraic(a) => a.sign_of(f),
        }
    }

    /// Refined copy with interval width at most `width` (rationals are
    /// returned unchanged; a bisection hit collapses to a rational).
    pub fn refined_to_width(&self, width: &Rat) -> Value {
        match self {
            Value::Rational(r) => Value::Rational(r.clone()),
            Value::Algebraic(a) => Value::Algebraic(a.refined_to_width(width)),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Rational(r) => RatInterval::point(r.clone()).to_f64(),
            Value::Algebraic(a) => a.to_f64(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => write!(f, "{}", rat_to_string(r)),
            Value::Algebraic(a) => write!(f, "{}", a),
        }
    }
}

/// Isolate the distinct real roots of a nonzero integer polynomial as exact
/// values, ascending; rational roots are recognised and returned exactly.
pub fn roots_of_upoly(f: &UPoly) -> Vec<Value> {
    let sf = f.squarefree_part();
    isolate_real_roots(f)
        .into_iter()
        .map(|r| match r {
            IsolatedRoot::Point(p) => Value::Rational(p),
            IsolatedRoot::Interval(lo, hi) => {
                match rational_root_in(&sf, &lo, &hi, RATIONAL_PROBE_DEPTH) {
                    Some(p) => Value::Rational(p),
                    None => Value::Algebraic(AlgebraicNumber::new(sf.clone(), lo, hi)),
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};

    fn sqrt2() -> AlgebraicNumber {
        AlgebraicNumber::new(UPoly::from_i64(&[-2, 0, 1]), rat(1), rat(2))
    }

    #[test]
    fn refine_keeps_the_root() {
        let a = sqrt2();
        let b = a.refined_to_width(&ratio(1, 4));
        assert!(b.width() <= ratio(1, 4));
        assert!(b.lo >= rat(1) && b.hi <= rat(2));
        assert_eq!(a.compare(&b), Ordering::Equal);
    }

    #[test]
    fn signs_at_sqrt2() {
        let a = sqrt2();
        assert_eq!(a.sign_of(&UPoly::from_i64(&[0, 1])), 1); // x
        assert_eq!(a.sign_of(&UPoly::from_i64(&[-2, 0, 1])), 0); // x^2-2
        assert_eq!(a.sign_of(&UPoly::from_i64(&[-3, 0, 1])), -1); // x^2-3
    }

    #[test]
    fn comparisons() {
        let a = sqrt2();
        // same root from a multiple of the polynomial
        let b = AlgebraicNumber::new(UPoly::from_i64(&[-4, 0, 2]), ratio(5, 4), ratio(3, 2));
        assert_eq!(a.compare(&b), Ordering::Equal);
        // -sqrt2 < sqrt2
        let m = AlgebraicNumber::new(UPoly::from_i64(&[-2, 0, 1]), rat(-2), rat(-1));
        assert_eq!(m.compare(&a), Ordering::Less);
        // sqrt2 vs sqrt3
        let s3 = AlgebraicNumber::new(UPoly::from_i64(&[-3, 0, 1]), rat(1), rat(2));
        assert_eq!(a.compare(&s3), Ordering::Less);
        // rational comparisons without refinement
        assert_eq!(a.compare_rat(&ratio(3, 2)), Ordering::Less);
        assert_eq!(a.compare_rat(&ratio(7, 5)), Ordering::Greater);
    }

    #[test]
    fn roots_of_mixed_polynomial() {
        // (x^2-2)(x-1): roots -sqrt2, 1, sqrt2
        let f = UPoly::from_i64(&[2, -2, -1, 1]);
        let roots = roots_of_upoly(&f);
        assert_eq!(roots.len(), 3);
        assert!(matches!(&roots[0], Value::Algebraic(_)));
        assert_eq!(roots[1].as_rational(), Some(&rat(1)));
        assert!(matches!(&roots[2], Value::Algebraic(_)));
        for w in roots.windows(2) {
            assert_eq!(w[0].compare(&w[1]), Ordering::Less);
        }
    }

    #[test]
    fn rational_roots_with_moderate_denominators_collapse() {
        // (3x-1)(x^2-2)
        let f = UPoly::from_i64(&[-2, 6, -1, 3]);
        let roots = roots_of_upoly(&f);
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[1].as_rational(), Some(&ratio(1, 3)));
    }
}
