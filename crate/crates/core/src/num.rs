//! Small helpers over `BigInt` / `BigRational`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Render a rational as `p` or `p/q` (always reduced, `q > 0`).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn rat_from_string(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<Int>().ok().map(Rat::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<Int>().ok()?;
            let d = d.trim().parse::<Int>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
    }
}

pub fn rat_midpoint(a: &Rat, b: &Rat) -> Rat {
    (a + b) / rat(2)
}

/// Exact sign of a rational as -1, 0 or +1.
pub fn rat_sign(r: &Rat) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// The rational with smallest denominator strictly inside the open interval
/// `(lo, hi)` (ties towards zero). Continued-fraction descent.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo < hi, "empty interval");
    if lo < &Rat::zero() && hi > &Rat::zero() {
        return Rat::zero();
    }
    if hi <= &Rat::zero() {
        return -simplest_rational_between(&-hi, &-lo);
    }
    // 0 <= lo < hi
    let next_int = lo.floor() + Rat::one();
    if &next_int < hi {
        return next_int;
    }
    let n = lo.floor();
    let fl = lo - &n;
    let fh = hi - &n;
    if fl.is_zero() {
        // simplest in (0, fh) is 1/q for the least q with 1/q < fh
        let mut q = fh.recip().ceil().to_integer();
        if Rat::new(Int::one(), q.clone()) >= fh {
            q += 1;
        }
        return n + Rat::new(Int::one(), q);
    }
    n + simplest_rational_between(&fh.recip(), &fl.recip()).recip()
}

/// gcd over `BigInt` absolute values.
pub fn int_gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// `base^exp` for `BigInt` base and `u64` exponent by squaring.
pub fn int_pow(base: &Int, exp: u64) -> Int {
    let mut result = Int::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

/// `base^exp` for rationals.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    Rat::new(
        int_pow(base.numer(), exp as u64),
        int_pow(base.denom(), exp as u64),
    )
}

/// Floor of log2 of a positive integer.
pub fn int_log2_floor(n: &Int) -> u64 {
    assert!(n.is_positive());
    (n.bits() - 1) as u64
}

/// Natural log of a positive big integer, good to ~1e-12 relative error.
pub fn int_ln(n: &Int) -> f64 {
    assert!(n.is_positive());
    let bits = n.bits();
    if bits <= 52 {
        let v: f64 = n.to_string().parse().unwrap();
        return v.ln();
    }
    // take the top 64 bits as mantissa
    let shift = bits - 53;
    let top = n >> shift;
    let mant: f64 = top.to_string().parse().unwrap();
    mant.ln() + (shift as f64) * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let r = ratio(-7, 3);
        assert_eq!(rat_to_string(&r), "-7/3");
        assert_eq!(rat_from_string("-7/3").unwrap(), r);
        assert_eq!(rat_from_string("5").unwrap(), rat(5));
        assert!(rat_from_string("1/0").is_none());
    }

    #[test]
    fn simplest_rational_small_cases() {
        // (1/3, 1/2) -> 2/5
        let s = simplest_rational_between(&ratio(1, 3), &ratio(1, 2));
        assert_eq!(s, ratio(2, 5));
        // (-1/2, 1/2) -> 0
        let s = simplest_rational_between(&ratio(-1, 2), &ratio(1, 2));
        assert_eq!(s, rat(0));
        // (2, 3) -> 5/2 (no integer strictly between)
        let s = simplest_rational_between(&rat(2), &rat(3));
        assert!(s > rat(2) && s < rat(3));
        // (7/5, 8/5) contains 3/2
        let s = simplest_rational_between(&ratio(7, 5), &ratio(8, 5));
        assert_eq!(s, ratio(3, 2));
    }

    #[test]
    fn simplest_rational_is_inside_and_minimal_denominator() {
        let cases = [
            (ratio(13, 17), ratio(14, 17)),
            (ratio(-22, 7), ratio(-3, 1)),
            (ratio(99, 100), ratio(101, 100)),
            (ratio(1, 1000), ratio(2, 1000)),
        ];
        for (lo, hi) in cases {
            let s = simplest_rational_between(&lo, &hi);
            assert!(s > lo && s < hi, "{} not in ({}, {})", s, lo, hi);
            // brute-force denominator minimality
            let sd = s.denom().clone();
            for q in 1..sd.to_string().parse::<i64>().unwrap_or(i64::MAX).min(200) {
                let qd = Int::from(q);
                // any p/q in (lo,hi)?
                let pmin: Int = (&lo * Rat::from_integer(qd.clone())).floor().to_integer() - 1;
                let pmax = (&hi * Rat::from_integer(qd.clone())).ceil().to_integer() + 1;
                let mut p = pmin;
                while p <= pmax {
                    let cand = Rat::new(p.clone(), qd.clone());
                    if cand > lo && cand < hi {
                        assert!(
                            Int::from(q) >= sd,
                            "found simpler {} in ({},{}) than {}",
                            cand,
                            lo,
                            hi,
                            s
                        );
                    }
                    p += 1;
                }
            }
        }
    }

    #[test]
    fn ln_of_big_integers() {
        let n = int_pow(&Int::from(3), 1000);
        let expect = 1000.0 * 3f64.ln();
        assert!((int_ln(&n) - expect).abs() < 1e-6 * expect);
    }
}
