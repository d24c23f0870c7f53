//! Dense univariate polynomials over the integers and real root isolation.
//!
//! Root isolation uses Descartes' rule of signs with dyadic bisection
//! (Vincent–Collins–Akritas) on the squarefree part; all transformations stay
//! in integer arithmetic.  Sturm sequences are provided as an independent
//! root-counting oracle.

use crate::interval::RatInterval;
use crate::num::{int_pow, simplest_rational_between, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial, ascending coefficients, no trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    coeffs: Vec<Int>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// Clear denominators of exact rational coefficients.
    pub fn from_rationals(coeffs: &[Rat]) -> Self {
        let mut l = Int::one();
        for c in coeffs {
            l = l.lcm(c.denom());
        }
        UPoly::new(
            coeffs
                .iter()
                .map(|c| (c * Rat::from_integer(l.clone())).numer().clone())
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().expect("zero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Int::from(i + 1))
                .collect(),
        )
    }

    pub fn neg(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Divide out the integer content and normalise the leading sign to +.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            g = -g;
        }
        UPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact sign of `self(p/q)`.
    pub fn sign_at(&self, x: &Rat) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let p = x.numer();
        let q = x.denom();
        // sum c_i p^i q^(d-i)
        let d = self.degree();
        let mut acc = Int::zero();
        let mut ppow = Int::one();
        let mut qpows = vec![Int::one(); d + 1];
        for i in (0..d).rev() {
            qpows[i] = &qpows[i + 1] * q;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &ppow * &qpows[i];
            ppow *= p;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    /// Interval extension over a closed rational interval.
    pub fn interval_eval(&self, iv: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(Rat::zero());
        for c in self.coeffs.iter().enumerate() {
            let term = iv.pow(c.0 as u32).scale(&Rat::from_integer(c.1.clone()));
            acc = acc.add(&term);
        }
        acc
    }

    /// Sign as x -> +inf and -inf.
    fn sign_at_pos_inf(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.leading().is_positive() {
            1
        } else {
            -1
        }
    }

    fn sign_at_neg_inf(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    /// Pseudo-remainder with a positive multiplier: returns `r` with
    /// `c * self = q*d + r` for some `c > 0`, so signs match the true
    /// remainder (as required by Sturm sequences).
    fn srem_positive(&self, d: &UPoly) -> UPoly {
        let dd = d.degree();
        assert!(dd >= 1, "pseudo-division by a constant");
        let lc = d.leading().clone();
        let mut r = self.clone();
        let mut mults: u32 = 0;
        while !r.is_zero() && r.degree() >= dd && !r.is_constant() {
            let shift = r.degree() - dd;
            let lr = r.leading().clone();
            let mut new = vec![Int::zero(); r.coeffs.len()];
            for (i, c) in r.coeffs.iter().enumerate() {
                new[i] = c * &lc;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                new[i + shift] -= c * &lr;
            }
            r = UPoly::new(new);
            mults += 1;
        }
        if mults % 2 == 1 && lc.is_negative() {
            // applied an odd power of a negative leading coefficient
            r.neg()
        } else {
            r
        }
    }

    /// gcd over Q (returned integer-primitive, positive leading coefficient).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return UPoly::new(vec![Int::one()]);
            }
            let r = a.srem_positive(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Exact division (panics if not exact) — used for squarefree parts.
    pub fn exact_div(&self, d: &UPoly) -> UPoly {
        assert!(!d.is_zero());
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut r: Vec<Rat> = self
            .coeffs
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        let dd = d.degree();
        let n = self.degree();
        assert!(n >= dd);
        let mut q = vec![Rat::zero(); n - dd + 1];
        let lc = Rat::from_integer(d.leading().clone());
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() / &lc;
            q[k] = c.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let delta = &c * Rat::from_integer(dc.clone());
                r[k + i] -= delta;
            }
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact division");
        UPoly::from_rationals(&q)
    }

    /// Squarefree part (primitive, positive leading coefficient).
    pub fn squarefree_part(&self) -> UPoly {
        if self.is_zero() || self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        self.exact_div(&g).primitive()
    }

    /// Power-of-two bound `B` with all real roots strictly inside `(-B, B)`.
    pub fn root_bound_pow2(&self) -> Rat {
        assert!(!self.is_zero());
        let lc = self.leading().abs();
        let max = self
            .coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Int::zero);
        // Cauchy: 1 + max|c_i|/|c_d|
        let bound = Rat::one() + Rat::new(max, lc);
        let mut b = Rat::one();
        let two = Rat::from_integer(Int::from(2));
        while b <= bound {
            b *= &two;
        }
        b
    }

    // ----- Sturm sequences (root-count oracle) -----

    pub fn sturm_sequence(&self) -> Vec<UPoly> {
        let mut seq = vec![self.primitive(), self.derivative().primitive()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                return seq;
            }
            if seq[n - 1].is_constant() {
                return seq;
            }
            let r = seq[n - 2].srem_positive(&seq[n - 1]).neg().primitive();
            if r.is_zero() {
                return seq;
            }
            seq.push(r);
        }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots (whole line), via Sturm's theorem.
    pub fn count_real_roots_sturm(&self) -> usize {
        if self.is_zero() || self.degree() == 0 {
            return 0;
        }
        let f = self.squarefree_part();
        let seq = f.sturm_sequence();
        let at_neg = UPoly::variations(seq.iter().map(|p| p.sign_at_neg_inf()));
        let at_pos = UPoly::variations(seq.iter().map(|p| p.sign_at_pos_inf()));
        at_neg - at_pos
    }

    /// Number of distinct real roots in the open interval `(a, b)`, via Sturm.
    pub fn count_roots_in_sturm(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a < b);
        let f = self.squarefree_part();
        let seq = f.sturm_sequence();
        let va = UPoly::variations(seq.iter().map(|p| p.sign_at(a)));
        let vb = UPoly::variations(seq.iter().map(|p| p.sign_at(b)));
        let mut n = va - vb;
        // V counts roots in (a, b]; make the interval open
        if f.sign_at(b) == 0 {
            n -= 1;
        }
        n
    }

    // ----- Descartes / VCA isolation -----

    fn sign_variations_coeffs(&self) -> usize {
        UPoly::variations(self.coeffs.iter().map(|c| match c.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }))
    }

    fn reversed(&self, degree: usize) -> UPoly {
        let mut c = vec![Int::zero(); degree + 1];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[degree - i] = v.clone();
        }
        UPoly::new(c)
    }

    /// Taylor shift x -> x + 1 (O(d^2) integer additions).
    fn shifted_by_one(&self) -> UPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n.saturating_sub(1) {
            for j in (i..n - 1).rev() {
                let (a, b) = c.split_at_mut(j + 1);
                a[j] += &b[0];
            }
        }
        UPoly::new(c)
    }

    // number of sign variations of (1+x)^d p(1/(1+x)): Descartes bound for (0,1)
    fn descartes_bound_01(&self) -> usize {
        self.reversed(self.degree()).shifted_by_one().sign_variations_coeffs()
    }

    // p(x/2) * 2^d and p((x+1)/2) * 2^d
    fn halves(&self) -> (UPoly, UPoly) {
        let d = self.degree();
        let left = UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * int_pow(&Int::from(2), (d - i) as u64))
                .collect(),
        );
        let right = left.shifted_by_one();
        (left, right)
    }
}

/// An isolated real root of a squarefree integer polynomial: either an exact
/// rational or an open interval containing exactly one root.
#[derive(Debug, Clone)]
pub enum IsolatedRoot {
    Point(Rat),
    Interval(Rat, Rat),
}

/// Isolate all distinct real roots of a nonzero polynomial, ascending.
///
/// Exact rational roots hit by the dyadic subdivision are reported as
/// `Point`s; the remaining roots come as open intervals whose endpoints are
/// not roots of the (full) squarefree part.
pub fn isolate_real_roots(f: &UPoly) -> Vec<IsolatedRoot> {
    assert!(!f.is_zero(), "cannot isolate roots of the zero polynomial");
    if f.degree() == 0 {
        return vec![];
    }
    let full_sf = f.squarefree_part();
    let mut sf = full_sf.clone();
    let mut out: Vec<IsolatedRoot> = Vec::new();

    // root at the origin
    let mut zero_root = false;
    if sf.coeffs[0].is_zero() {
        zero_root = true;
        let k = sf.coeffs.iter().take_while(|c| c.is_zero()).count();
        sf = UPoly::new(sf.coeffs[k..].to_vec());
    }
    if sf.degree() >= 1 {
        let bound = sf.root_bound_pow2();
        // negative side: roots of sf(-x) in (0, B) mirror to (-B, 0)
        let neg = UPoly::new(
            sf.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        );
        let mut neg_roots = isolate_positive(&neg, &bound);
        neg_roots.reverse();
        for r in neg_roots {
            out.push(match r {
                IsolatedRoot::Point(p) => IsolatedRoot::Point(-p),
                IsolatedRoot::Interval(lo, hi) => IsolatedRoot::Interval(-hi, -lo),
            });
        }
        if zero_root {
            out.push(IsolatedRoot::Point(Rat::zero()));
        }
        out.extend(isolate_positive(&sf, &bound));
    } else if zero_root {
        out.push(IsolatedRoot::Point(Rat::zero()));
    }
    // repair intervals whose endpoints happen to be other roots of f
    out.into_iter()
        .map(|r| match r {
            IsolatedRoot::Point(p) => IsolatedRoot::Point(p),
            IsolatedRoot::Interval(lo, hi) => trim_endpoint_roots(&full_sf, lo, hi),
        })
        .collect()
}

// Shrink (lo, hi) until neither endpoint is a root of sf, preserving the
// unique interior root; an interior dyadic hit upgrades to an exact point.
// Rare path (a neighbouring root sits on a dyadic endpoint), so Sturm-counted
// bisection is fine here.
fn trim_endpoint_roots(sf: &UPoly, mut lo: Rat, mut hi: Rat) -> IsolatedRoot {
    if sf.sign_at(&lo) != 0 && sf.sign_at(&hi) != 0 {
        return IsolatedRoot::Interval(lo, hi);
    }
    loop {
        let mid = crate::num::rat_midpoint(&lo, &hi);
        if sf.sign_at(&mid) == 0 {
            return IsolatedRoot::Point(mid);
        }
        if sf.count_roots_in_sturm(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
        if sf.sign_at(&lo) != 0 && sf.sign_at(&hi) != 0 {
            return IsolatedRoot::Interval(lo, hi);
        }
    }
}

// roots of sf in (0, bound): scale to (0,1) and run the Descartes recursion
fn isolate_positive(sf: &UPoly, bound: &Rat) -> Vec<IsolatedRoot> {
    // g(x) = sf(bound * x); bound is a power of two p/q with q=1 or p=1
    let d = sf.degree();
    let g = UPoly::new(
        sf.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                // multiply by bound^i, then clear by bound-denominator^d
                let num = int_pow(bound.numer(), i as u64);
                let den = int_pow(bound.denom(), (d - i) as u64);
                c * num * den
            })
            .collect(),
    );
    let mut out = Vec::new();
    descartes_01(&g, &Rat::zero(), &Rat::one(), bound, &mut out);
    out
}

// isolate roots of g in (0,1); (lo,hi) is the image of (0,1) in the original
// coordinates divided by `scale`
fn descartes_01(g: &UPoly, lo: &Rat, hi: &Rat, scale: &Rat, out: &mut Vec<IsolatedRoot>) {
    match g.descartes_bound_01() {
        0 => {}
        1 => out.push(IsolatedRoot::Interval(lo * scale, hi * scale)),
        _ => {
            let mid = crate::num::rat_midpoint(lo, hi);
            let (left, mut right) = g.halves();
            let mut mid_root: Option<IsolatedRoot> = None;
            if right.coeffs.first().map_or(false, |c| c.is_zero()) {
                // exact root at the midpoint
                mid_root = Some(IsolatedRoot::Point(&mid * scale));
                let k = right.coeffs.iter().take_while(|c| c.is_zero()).count();
                right = UPoly::new(right.coeffs[k..].to_vec());
            }
            descartes_01(&left, lo, &mid, scale, out);
            if let Some(p) = mid_root {
                out.push(p);
            }
            descartes_01(&right, &mid, hi, scale, out);
        }
    }
}

/// Try to recognise an isolated interval root as an exact rational by testing
/// simplest rationals under progressive bisection.  Deterministic; gives up
/// after `max_bisect` halvings (the root is then treated as algebraic).
pub fn rational_root_in(sf: &UPoly, lo: &Rat, hi: &Rat, max_bisect: usize) -> Option<Rat> {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let s_lo = sf.sign_at(&lo);
    debug_assert!(s_lo != 0 && sf.sign_at(&hi) != 0);
    let mut s_lo = s_lo;
    for _ in 0..max_bisect {
        let cand = simplest_rational_between(&lo, &hi);
        let s = sf.sign_at(&cand);
        if s == 0 {
            return Some(cand);
        }
        if s == s_lo {
            lo = cand;
        } else {
            hi = cand;
        }
        // also try the midpoint to guarantee geometric shrinking
        let mid = crate::num::rat_midpoint(&lo, &hi);
        let sm = sf.sign_at(&mid);
        if sm == 0 {
            return Some(mid);
        }
        if sm == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        s_lo = sf.sign_at(&lo);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};

    #[test]
    fn isolates_rational_roots_exactly() {
        // x^3 - x: roots -1, 0, 1
        let f = UPoly::from_i64(&[0, -1, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        let vals: Vec<Rat> = roots
            .iter()
            .map(|r| match r {
                IsolatedRoot::Point(p) => p.clone(),
                IsolatedRoot::Interval(lo, hi) => {
                    rational_root_in(&f.squarefree_part(), lo, hi, 32).expect("rational root")
                }
            })
            .collect();
        assert_eq!(vals, vec![rat(-1), rat(0), rat(1)]);
    }

    #[test]
    fn isolates_sqrt2() {
        let f = UPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        match &roots[1] {
            IsolatedRoot::Interval(lo, hi) => {
                assert!(lo < hi);
                assert!(f.sign_at(lo) != 0 && f.sign_at(hi) != 0);
                assert!(lo >= &rat(1) && hi <= &rat(2) || (lo < &ratio(3, 2) && hi > &ratio(7, 5)));
            }
            other => panic!("expected interval, got {other:?}"),
        }
    }

    #[test]
    fn no_real_roots() {
        let f = UPoly::from_i64(&[1, 0, 1]); // x^2+1
        assert!(isolate_real_roots(&f).is_empty());
        assert_eq!(f.count_real_roots_sturm(), 0);
    }

    #[test]
    fn repeated_roots_collapse() {
        // (x-1)^2 (x+2)
        let f = UPoly::from_i64(&[2, -3, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        assert_eq!(f.count_real_roots_sturm(), 2);
    }

    #[test]
    fn sturm_agrees_with_descartes_on_samples() {
        let polys: Vec<UPoly> = vec![
            UPoly::from_i64(&[-2, 0, 1]),
            UPoly::from_i64(&[1, -3, 0, 2]),
            UPoly::from_i64(&[0, 0, -1, 0, 1]),
            UPoly::from_i64(&[-1, 5, -7, 3]),
            UPoly::from_i64(&[6, -5, -2, 1]),
        ];
        for f in polys {
            assert_eq!(
                isolate_real_roots(&f).len(),
                f.count_real_roots_sturm(),
                "mismatch for {:?}",
                f
            );
        }
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = UPoly::from_i64(&[2, -3, 0, 1]); // (x-1)^2 (x+2)
        let g = UPoly::from_i64(&[-1, 1]); // x-1
        assert_eq!(f.gcd(&g), g);
        let sf = f.squarefree_part();
        assert_eq!(sf, UPoly::from_i64(&[-2, 1, 1])); // (x-1)(x+2)
    }

    #[test]
    fn count_roots_in_interval() {
        let f = UPoly::from_i64(&[0, -1, 0, 1]); // roots -1, 0, 1
        assert_eq!(f.count_roots_in_sturm(&rat(-2), &rat(2)), 3);
        assert_eq!(f.count_roots_in_sturm(&ratio(-1, 2), &rat(2)), 2);
        // open at the right endpoint
        assert_eq!(f.count_roots_in_sturm(&ratio(1, 2), &rat(1)), 0);
        assert_eq!(f.count_roots_in_sturm(&ratio(1, 2), &rat(3)), 1);
    }
}
