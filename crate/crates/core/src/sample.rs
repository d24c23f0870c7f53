//! Exact evaluation at sample points with algebraic coordinates.
//!
//! A sample point of `R^k` is a vector of coordinates; each coordinate is a
//! rational or the root of a defining polynomial over the earlier coordinates
//! (a triangular description produced by stack construction).  Sign queries
//! are answered exactly: zero is decided algebraically via pseudo-remainder
//! gcds evaluated along the triangular chain, and nonzero signs by interval
//! refinement.  No primitive elements are ever constructed.

use crate::algnum::AlgebraicNumber;
use crate::interval::RatInterval;
use crate::num::{rat_midpoint, simplest_rational_between, Rat};
use crate::poly::Polynomial;
use crate::upoly::UPoly;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::sync::{Arc, Mutex, OnceLock};

/// Interval-only attempts before falling back to the exact zero test.
const QUICK_SIGN_ROUNDS: usize = 4;
/// Simplest-rational probes when hunting exact rational roots over an
/// algebraic base.
const RATIONAL_PROBES_OVER_ALG: usize = 8;

/// An algebraic coordinate: the unique root of `defining` (specialised at the
/// earlier coordinates) inside `interval`, where it is a simple root.
#[derive(Debug)]
pub struct AlgCoord {
    /// Variable index of this coordinate.
    pub level: usize,
    /// Defining polynomial in variables `0..=level`; its specialisation at
    /// the base prefix is squarefree with this coordinate as one of its
    /// (simple) roots.
    pub defining: Polynomial,
    /// Current isolating interval; refinable, shared across cells.
    interval: Mutex<RatInterval>,
    /// Univariate-over-Q representation, cached on demand.
    univ: OnceLock<UPoly>,
}

impl AlgCoord {
    pub fn interval(&self) -> RatInterval {
        self.interval.lock().unwrap().clone()
    }

    fn store_interval(&self, iv: RatInterval) {
        let mut cur = self.interval.lock().unwrap();
        // keep the tighter information (both contain the root)
        let lo = if iv.lo > cur.lo { iv.lo.clone() } else { cur.lo.clone() };
        let hi = if iv.hi < cur.hi { iv.hi.clone() } else { cur.hi.clone() };
        *cur = RatInterval::new(lo, hi);
    }

    pub fn univ_defpoly(&self) -> Option<&UPoly> {
        self.univ.get()
    }
}

/// One coordinate of a sample point.
#[derive(Debug, Clone)]
pub enum Coord {
    Rational(Rat),
    Algebraic(Arc<AlgCoord>),
}

impl Coord {
    pub fn rational(r: Rat) -> Self {
        Coord::Rational(r)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Coord::Rational(_))
    }

    pub fn interval(&self) -> RatInterval {
        match self {
            Coord::Rational(r) => RatInterval::point(r.clone()),
            Coord::Algebraic(a) => a.interval(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.interval().to_f64()
    }
}

/// Build a coordinate from a univariate value at `level` (used by the base
/// phase and by stacks over all-rational samples).
pub fn coord_from_value(v: crate::algnum::Value, level: usize, order: &crate::vars::VarOrder) -> Coord {
    match v {
        crate::algnum::Value::Rational(r) => Coord::Rational(r),
        crate::algnum::Value::Algebraic(a) => {
            let defining = upoly_to_polynomial(a.defpoly(), level, order);
            let c = AlgCoord {
                level,
                defining,
                interval: Mutex::new(a.interval()),
                univ: OnceLock::new(),
            };
            let _ = c.univ.set(a.defpoly().clone());
            Coord::Algebraic(Arc::new(c))
        }
    }
}

fn upoly_to_polynomial(u: &UPoly, level: usize, order: &crate::vars::VarOrder) -> Polynomial {
    let mut terms = Vec::new();
    for (i, c) in u.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let mut e = vec![0u32; order.len()];
            e[level] = i as u32;
            terms.push((Rat::from_integer(c.clone()), e));
        }
    }
    Polynomial::from_terms(order, terms)
}

fn polynomial_to_upoly(p: &Polynomial, level: usize) -> UPoly {
    let d = p.degree(level);
    let mut coeffs = vec![Rat::zero(); d as usize + 1];
    for k in 0..=d {
        coeffs[k as usize] = p
            .coefficient_of(level, k)
            .constant_value()
            .expect("polynomial not univariate in the given variable");
    }
    UPoly::from_rationals(&coeffs)
}

// ---------------------------------------------------------------------------
// sign determination
// ---------------------------------------------------------------------------

/// Substitute the rational coordinates of `s` into `f`.
pub fn substitute_rationals(f: &Polynomial, s: &[Coord]) -> Polynomial {
    let mut assign: Vec<Option<Rat>> = vec![None; f.order().len()];
    for (i, c) in s.iter().enumerate() {
        if let Coord::Rational(r) = c {
            assign[i] = Some(r.clone());
        }
    }
    f.substitute(&assign)
}

fn active_coords(g: &Polynomial, s: &[Coord]) -> Vec<usize> {
    (0..s.len())
        .filter(|&i| g.uses_var(i) && !s[i].is_rational())
        .collect()
}

fn coord_boxes(g: &Polynomial, s: &[Coord]) -> Vec<Option<RatInterval>> {
    let mut out = vec![None; g.order().len()];
    for i in 0..s.len() {
        if g.uses_var(i) {
            out[i] = Some(s[i].interval());
        }
    }
    out
}

/// Bisect the isolating interval of an algebraic coordinate once.
pub fn refine_coord(s: &[Coord], j: usize) {
    let a = match &s[j] {
        Coord::Algebraic(a) => a,
        Coord::Rational(_) => return,
    };
    let iv = a.interval();
    if iv.is_point() {
        return;
    }
    let mid = iv.midpoint();
    let s_mid = if let Some(u) = a.univ.get() {
        u.sign_at(&mid)
    } else {
        let spec = {
            let mut assign: Vec<Option<Rat>> = vec![None; a.defining.order().len()];
            assign[j] = Some(mid.clone());
            a.defining.substitute(&assign)
        };
        sign_at(&spec, &s[..j])
    };
    if s_mid == 0 {
        // the root is exactly the bisection point; recentre
        let w = iv.width() / Rat::from_integer(8.into());
        a.store_interval(RatInterval::new(&mid - &w, &mid + &w));
        return;
    }
    // sign at lo decides the half (lo sign is nonzero by the invariants)
    let s_lo = if let Some(u) = a.univ.get() {
        u.sign_at(&iv.lo)
    } else {
        let spec = {
            let mut assign: Vec<Option<Rat>> = vec![None; a.defining.order().len()];
            assign[j] = Some(iv.lo.clone());
            a.defining.substitute(&assign)
        };
        sign_at(&spec, &s[..j])
    };
    if s_lo * s_mid < 0 {
        a.store_interval(RatInterval::new(iv.lo, mid));
    } else {
        a.store_interval(RatInterval::new(mid, iv.hi));
    }
}

/// Exact sign of `f` at the sample point `s` (every variable of `f` must have
/// a coordinate).
pub fn sign_at(f: &Polynomial, s: &[Coord]) -> i8 {
    let g = substitute_rationals(f, s);
    if let Some(c) = g.constant_value() {
        return crate::num::rat_sign(&c);
    }
    let active = active_coords(&g, s);
    debug_assert!(!active.is_empty());
    // single algebraic coordinate with a univariate defining polynomial:
    // fully handled by the univariate machinery
    if active.len() == 1 {
        if let Coord::Algebraic(a) = &s[active[0]] {
            if let Some(u) = a.univ.get() {
                let iv = a.interval();
                let alg = AlgebraicNumber::new(u.clone(), iv.lo, iv.hi);
                return alg.sign_of(&polynomial_to_upoly(&g, active[0]));
            }
        }
    }
    // quick interval passes
    for _ in 0..QUICK_SIGN_ROUNDS {
        let iv = g.interval_eval(&coord_boxes(&g, s));
        if let Some(sig) = iv.sign() {
            if sig != 0 {
                return sig;
            }
        }
        for &j in &active {
            refine_coord(s, j);
        }
    }
    if is_zero_at(&g, s) {
        return 0;
    }
    loop {
        let iv = g.interval_eval(&coord_boxes(&g, s));
        if let Some(sig) = iv.sign() {
            if sig != 0 {
                return sig;
            }
        }
        for &j in &active {
            refine_coord(s, j);
        }
    }
}

/// Exact zero test of `f` at `s`.
pub fn is_zero_at(f: &Polynomial, s: &[Coord]) -> bool {
    let g = substitute_rationals(f, s);
    if let Some(c) = g.constant_value() {
        return c.is_zero();
    }
    is_zero_at_reduced(&g, s)
}

// g has its rational coordinates already substituted
fn is_zero_at_reduced(g: &Polynomial, s: &[Coord]) -> bool {
    if let Some(c) = g.constant_value() {
        return c.is_zero();
    }
    let active = active_coords(g, s);
    let j = *active.last().expect("nonconstant after substitution");
    let a = match &s[j] {
        Coord::Algebraic(a) => a.clone(),
        Coord::Rational(_) => unreachable!("rational coordinates were substituted"),
    };
    // defining relation for x_j at this sample (univariate shortcut if cached)
    let chain = match a.univ.get() {
        Some(u) => upoly_to_polynomial(u, j, g.order()),
        None => substitute_rationals(&a.defining, s),
    };
    if g.degree(j) == 0 {
        // j does not actually occur; recurse below it
        return is_zero_at_reduced(g, &s[..j]);
    }
    // H ~ gcd(g_s, chain_s) in x_j
    let h = gcd_at(g, &chain, j, s);
    let h = strip_at(&h, j, s);
    if h.degree(j) == 0 {
        return false;
    }
    // chain_s = H_s * Q_s up to a factor nonzero at s; exactly one of
    // H_s, Q_s vanishes at the coordinate (chain_s is squarefree there)
    let chain_stripped = strip_at(&chain, j, s);
    let (q, _r) = chain_stripped.pseudo_div(&h, j);
    loop {
        let hv = h.interval_eval(&coord_boxes(&h, s));
        if let Some(sig) = hv.sign() {
            if sig != 0 {
                return false;
            }
        }
        let qv = q.interval_eval(&coord_boxes(&q, s));
        if let Some(sig) = qv.sign() {
            if sig != 0 {
                return true;
            }
        }
        for i in active_coords(&h, s).into_iter().chain(active_coords(&q, s)) {
            refine_coord(s, i);
        }
        refine_coord(s, j);
    }
}

/// Drop leading `v`-coefficients of `f` that vanish at the sample prefix.
fn strip_at(f: &Polynomial, v: usize, s: &[Coord]) -> Polynomial {
    let mut out = f.clone();
    loop {
        if out.is_zero() {
            return out;
        }
        let d = out.degree(v);
        let lc = out.leading_coefficient(v);
        if d == 0 {
            return out;
        }
        if is_zero_at(&lc, &s[..v]) {
            out = out.sub(&lc.mul(&Polynomial::var(f.order(), v).pow(d)));
        } else {
            return out;
        }
    }
}

/// Degree of `f` in `v` after specialisation at `s`; `None` when the whole
/// polynomial vanishes there (nullification).
pub fn true_degree(f: &Polynomial, v: usize, s: &[Coord]) -> Option<u32> {
    let g = substitute_rationals(f, s);
    let st = strip_at(&g, v, s);
    if st.is_zero() {
        return None;
    }
    if st.degree(v) == 0 {
        // constant in v at s: zero only if the remaining part vanishes
        if is_zero_at(&st, s) {
            return None;
        }
        return Some(0);
    }
    Some(st.degree(v))
}

// pseudo-remainder based gcd evaluated along the chain: the returned
// polynomial specialises (at s) to gcd(f_s, g_s) up to a nonzero factor
fn gcd_at(f: &Polynomial, g: &Polynomial, v: usize, s: &[Coord]) -> Polynomial {
    let mut a = strip_at(f, v, s);
    let mut b = strip_at(g, v, s);
    if a.degree(v) < b.degree(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_zero() {
            return a;
        }
        if b.degree(v) == 0 {
            // nonzero constant at s: coprime
            return b;
        }
        let r = a.prem(&b, v);
        let r = strip_at(&r, v, s);
        let r = trim_content(&r, v);
        a = b;
        b = r;
    }
}

// divide out polynomial and integer content w.r.t. v (safe: the content
// divides the leading coefficient, which is nonzero at the sample)
fn trim_content(f: &Polynomial, v: usize) -> Polynomial {
    if f.is_zero() || f.degree(v) == 0 {
        return f.canonical_keep_sign();
    }
    let c = f.content(v);
    if c.is_constant() {
        return f.canonical_keep_sign();
    }
    f.exact_div(&c)
        .expect("content divides")
        .canonical_keep_sign()
}

/// Squarefree-at-sample part of `f` in `v` (leading coefficient nonzero at
/// `s`, and the specialisation at `s` is squarefree).
pub fn squarefree_at(f: &Polynomial, v: usize, s: &[Coord]) -> Polynomial {
    let st = strip_at(&substitute_rationals(f, s), v, s);
    if st.degree(v) <= 1 {
        return st;
    }
    let g = gcd_at(&st, &st.derivative(v), v, s);
    let g = strip_at(&g, v, s);
    if g.degree(v) == 0 {
        return st;
    }
    let (q, _r) = st.pseudo_div(&g, v);
    let q = strip_at(&q, v, s);
    trim_content(&q, v)
}

// ---------------------------------------------------------------------------
// root isolation at a sample point
// ---------------------------------------------------------------------------

/// Outcome of specialising one polynomial over a sample point.
pub enum Specialised {
    /// Identically zero at the sample (nullification).
    Nullified,
    /// Nonzero constant at the sample: contributes no roots.
    Constant,
    /// Positive degree; carries the squarefree-at-sample part.
    Positive(Polynomial),
}

/// Classify `p` (main variable `v`) over the sample `s` of the lower space.
pub fn specialise(p: &Polynomial, v: usize, s: &[Coord]) -> Specialised {
    match true_degree(p, v, s) {
        None => Specialised::Nullified,
        Some(0) => Specialised::Constant,
        Some(_) => Specialised::Positive(squarefree_at(p, v, s)),
    }
}

/// A root in the stack direction together with the indices (into the input
/// polynomial list) of the polynomials vanishing there.
pub struct StackRoot {
    pub coord: Coord,
    pub tags: Vec<usize>,
}

/// Isolate the merged, ascending real roots of the given specialised
/// polynomials (already squarefree at `s`) in variable `v` over the sample.
pub fn isolate_at(polys: &[(usize, Polynomial)], v: usize, s: &[Coord]) -> Vec<StackRoot> {
    let all_rational = s.iter().all(|c| c.is_rational());
    let mut roots: Vec<StackRoot> = Vec::new();
    for (tag, sq) in polys {
        let these = if all_rational {
            let u = polynomial_to_upoly(sq, v);
            crate::algnum::roots_of_upoly(&u)
                .into_iter()
                .map(|val| coord_from_value(val, v, sq.order()))
                .collect::<Vec<_>>()
        } else {
            isolate_over_algebraic_base(sq, v, s)
        };
        merge_roots(&mut roots, these, *tag, v, s);
    }
    roots
}

// insert the ascending roots of one polynomial into the accumulated list
fn merge_roots(acc: &mut Vec<StackRoot>, incoming: Vec<Coord>, tag: usize, v: usize, s: &[Coord]) {
    for c in incoming {
        let mut pos = acc.len();
        let mut equal = false;
        for (i, existing) in acc.iter().enumerate() {
            match compare_coords(&existing.coord, &c, v, s) {
                Ordering::Less => continue,
                Ordering::Equal => {
                    pos = i;
                    equal = true;
                    break;
                }
                Ordering::Greater => {
                    pos = i;
                    break;
                }
            }
        }
        if equal {
            if !acc[pos].tags.contains(&tag) {
                acc[pos].tags.push(tag);
            }
        } else {
            acc.insert(
                pos,
                StackRoot {
                    coord: c,
                    tags: vec![tag],
                },
            );
        }
    }
}

// refine a stack coordinate (level v) in place, given the base sample
fn refine_stack_coord(c: &Coord, s: &[Coord]) {
    if let Coord::Algebraic(_) = c {
        let mut ext: Vec<Coord> = s.to_vec();
        ext.push(c.clone());
        refine_coord(&ext, s.len());
    }
}

// exact sign of the specialisation q(s, t) for rational t
fn sign_at_point(q: &Polynomial, v: usize, t: &Rat, s: &[Coord]) -> i8 {
    let mut assign: Vec<Option<Rat>> = vec![None; q.order().len()];
    assign[v] = Some(t.clone());
    sign_at(&q.substitute(&assign), s)
}

/// Exact comparison of two stack coordinates over the same base sample.
pub fn compare_coords(a: &Coord, b: &Coord, v: usize, s: &[Coord]) -> Ordering {
    match (a, b) {
        (Coord::Rational(x), Coord::Rational(y)) => x.cmp(y),
        (Coord::Rational(x), Coord::Algebraic(_)) => {
            compare_alg_with_rat(b, x, v, s).reverse()
        }
        (Coord::Algebraic(_), Coord::Rational(y)) => compare_alg_with_rat(a, y, v, s),
        (Coord::Algebraic(_), Coord::Algebraic(bb)) => {
            // equality test once: a == b iff a satisfies b's defining
            // polynomial and lies in b's isolating interval
            let mut ext: Vec<Coord> = s.to_vec();
            ext.push(a.clone());
            let equal_candidate = is_zero_at(&bb.defining, &ext);
            loop {
                let ia = a.interval();
                let ib = b.interval();
                if ia.hi <= ib.lo {
                    return Ordering::Less;
                }
                if ib.hi <= ia.lo {
                    return Ordering::Greater;
                }
                if equal_candidate {
                    // a is a root of b's defining polynomial; it equals b as
                    // soon as it is inside b's isolating interval
                    if ia.lo >= ib.lo && ia.hi <= ib.hi {
                        return Ordering::Equal;
                    }
                    refine_stack_coord(a, s);
                } else {
                    refine_stack_coord(a, s);
                    refine_stack_coord(b, s);
                }
            }
        }
    }
}

// position of an algebraic stack coordinate relative to a rational
fn compare_alg_with_rat(a: &Coord, r: &Rat, v: usize, s: &[Coord]) -> Ordering {
    let alg = match a {
        Coord::Algebraic(alg) => alg,
        Coord::Rational(_) => unreachable!(),
    };
    let iv = alg.interval();
    if r <= &iv.lo {
        return Ordering::Greater;
    }
    if r >= &iv.hi {
        return Ordering::Less;
    }
    // r strictly inside the isolating interval: compare via defining signs
    let s_r = sign_at_point(&alg.defining, v, r, s);
    if s_r == 0 {
        // r is the unique defining root in the interval
        return Ordering::Equal;
    }
    let s_lo = sign_at_point(&alg.defining, v, &iv.lo, s);
    if s_lo * s_r < 0 {
        // root in (lo, r)
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

// ---------------------------------------------------------------------------
// Sturm isolation over an algebraic base
// ---------------------------------------------------------------------------

// Sturm chain of the squarefree-at-s polynomial `sq` in `v`, sign-faithful at
// the sample: every pseudo-remainder is corrected by the sign of the factor
// it was multiplied with.
fn sturm_chain_at(sq: &Polynomial, v: usize, s: &[Coord]) -> Vec<Polynomial> {
    let mut chain = vec![sq.clone(), strip_at(&sq.derivative(v), v, s)];
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.is_zero() || b.degree(v) == 0 {
            break;
        }
        let delta = a.degree(v) - b.degree(v);
        let lc = b.leading_coefficient(v);
        let r = a.prem(b, v);
        // prem multiplied by lc^(delta+1); fix the sign at the sample
        let lc_sign = sign_at(&lc, s);
        debug_assert!(lc_sign != 0);
        let mut r = if lc_sign < 0 && (delta + 1) % 2 == 1 {
            r.neg()
        } else {
            r
        };
        r = r.neg(); // Sturm: next = -rem
        let r = strip_at(&r, v, s);
        let r = trim_content_signed(&r, v, s);
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

// content-trim that preserves the sign of the specialisation at s
fn trim_content_signed(f: &Polynomial, v: usize, s: &[Coord]) -> Polynomial {
    if f.is_zero() {
        return f.clone();
    }
    let trimmed = trim_content(f, v);
    // trim_content divides by the polynomial content and a positive rational;
    // the content may be negative at the sample
    if f.degree(v) == 0 {
        return trimmed;
    }
    let c = f.content(v);
    if c.is_constant() {
        // only a rational scale; canonical_keep_sign keeps it positive
        return trimmed;
    }
    if sign_at(&c, s) < 0 {
        trimmed.neg()
    } else {
        trimmed
    }
}

fn sturm_variations_at(chain: &[Polynomial], v: usize, t: &Rat, s: &[Coord]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for q in chain {
        let sg = sign_at_point(q, v, t, s);
        if sg == 0 {
            continue;
        }
        if last != 0 && sg != last {
            count += 1;
        }
        last = sg;
    }
    count
}

// roots of sq_s in the open interval (a, b)
fn sturm_count_open(
    chain: &[Polynomial],
    v: usize,
    a: &Rat,
    b: &Rat,
    s: &[Coord],
) -> usize {
    let va = sturm_variations_at(chain, v, a, s);
    let vb = sturm_variations_at(chain, v, b, s);
    let mut n = va - vb; // roots in (a, b]
    if sign_at_point(&chain[0], v, b, s) == 0 {
        n -= 1;
    }
    n
}

// power-of-two bound B with all roots of sq_s inside (-B, B)
fn root_bound_at(sq: &Polynomial, v: usize, s: &[Coord]) -> Rat {
    let d = sq.degree(v);
    let lc = sq.leading_coefficient(v);
    loop {
        let lc_box = lc.interval_eval(&coord_boxes(&lc, s));
        if let Some(sig) = lc_box.sign() {
            if sig != 0 {
                let lmin = lc_box.lo.abs().min(lc_box.hi.abs());
                let mut umax = Rat::zero();
                for k in 0..d {
                    let c = sq.coefficient_of(v, k);
                    let cb = c.interval_eval(&coord_boxes(&c, s));
                    let m = cb.lo.abs().max(cb.hi.abs());
                    if m > umax {
                        umax = m;
                    }
                }
                let bound = Rat::from_integer(1.into()) + umax / lmin;
                let mut b = Rat::from_integer(1.into());
                let two = Rat::from_integer(2.into());
                while b <= bound {
                    b *= &two;
                }
                return b;
            }
        }
        for j in active_coords(&lc, s) {
            refine_coord(s, j);
        }
    }
}

// recursive bisection on (a, b): endpoints with nonzero sq_s sign
fn sturm_isolate(
    chain: &[Polynomial],
    v: usize,
    a: &Rat,
    b: &Rat,
    s: &[Coord],
    out: &mut Vec<(Option<Rat>, Rat, Rat)>,
) {
    let n = sturm_count_open(chain, v, a, b, s);
    if n == 0 {
        return;
    }
    if n == 1 && sign_at_point(&chain[0], v, a, s) != 0 && sign_at_point(&chain[0], v, b, s) != 0
    {
        out.push((None, a.clone(), b.clone()));
        return;
    }
    let mid = rat_midpoint(a, b);
    if sign_at_point(&chain[0], v, &mid, s) == 0 {
        sturm_isolate(chain, v, a, &mid, s, out);
        out.push((Some(mid.clone()), a.clone(), b.clone()));
        sturm_isolate(chain, v, &mid, b, s, out);
    } else {
        sturm_isolate(chain, v, a, &mid, s, out);
        sturm_isolate(chain, v, &mid, b, s, out);
    }
}

// isolate the roots of a squarefree-at-s polynomial over an algebraic base
fn isolate_over_algebraic_base(sq: &Polynomial, v: usize, s: &[Coord]) -> Vec<Coord> {
    let chain = sturm_chain_at(sq, v, s);
    let bound = root_bound_at(sq, v, s);
    let mut raw: Vec<(Option<Rat>, Rat, Rat)> = Vec::new();
    sturm_isolate(&chain, v, &-bound.clone(), &bound, s, &mut raw);
    let mut out = Vec::new();
    for (exact, lo, hi) in raw {
        if let Some(r) = exact {
            out.push(Coord::Rational(r));
            continue;
        }
        // probe for a rational root before accepting an algebraic coordinate
        let mut lo = lo;
        let mut hi = hi;
        let mut found: Option<Rat> = None;
        let mut s_lo = sign_at_point(sq, v, &lo, s);
        for _ in 0..RATIONAL_PROBES_OVER_ALG {
            let cand = simplest_rational_between(&lo, &hi);
            let sc = sign_at_point(sq, v, &cand, s);
            if sc == 0 {
                found = Some(cand);
                break;
            }
            if sc == s_lo {
                lo = cand;
            } else {
                hi = cand;
            }
            let mid = rat_midpoint(&lo, &hi);
            let sm = sign_at_point(sq, v, &mid, s);
            if sm == 0 {
                found = Some(mid);
                break;
            }
            if sm == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
            s_lo = sign_at_point(sq, v, &lo, s);
        }
        match found {
            Some(r) => out.push(Coord::Rational(r)),
            None => out.push(Coord::Algebraic(Arc::new(AlgCoord {
                level: v,
                defining: sq.clone(),
                interval: Mutex::new(RatInterval::new(lo, hi)),
                univ: OnceLock::new(),
            }))),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// univariate-over-Q materialisation (for serialisation and display)
// ---------------------------------------------------------------------------

/// Express a coordinate as an exact univariate value over Q, eliminating the
/// lower algebraic coordinates through resultants.  May collapse to a
/// rational.  The result is cached on the coordinate.
pub fn univariate_value(c: &Coord, s: &[Coord]) -> crate::algnum::Value {
    use crate::algnum::Value;
    let a = match c {
        Coord::Rational(r) => return Value::Rational(r.clone()),
        Coord::Algebraic(a) => a,
    };
    let v = a.level;
    if let Some(u) = a.univ.get() {
        let iv = a.interval();
        return Value::Algebraic(AlgebraicNumber::new(u.clone(), iv.lo, iv.hi));
    }
    let mut f = substitute_rationals(&a.defining, s);
    // eliminate lower algebraic coordinates, highest first
    let lowers: Vec<usize> = active_coords(&f, s)
        .into_iter()
        .filter(|&j| j != v)
        .collect();
    for &j in lowers.iter().rev() {
        let mval = univariate_value(&s[j], &s[..j]);
        match mval {
            Value::Rational(r) => {
                let mut assign: Vec<Option<Rat>> = vec![None; f.order().len()];
                assign[j] = Some(r);
                f = f.substitute(&assign);
            }
            Value::Algebraic(alg) => {
                let mut m = alg.defpoly().clone();
                // split off the conjugate factors that would nullify f
                let mut common = UPoly::zero();
                for (_, coeff) in univariate_coefficient_split(&f, j) {
                    common = common.gcd(&coeff);
                    if common.is_constant() && !common.is_zero() {
                        break;
                    }
                }
                if !common.is_constant() {
                    let g = m.gcd(&common);
                    if !g.is_constant() {
                        m = m.exact_div(&g).primitive();
                    }
                }
                let mp = upoly_to_polynomial(&m, j, f.order());
                f = crate::poly::resultant(&mp, &f, j)
                    .expect("elimination resultant")
                    .canonical();
            }
        }
    }
    debug_assert!(active_coords(&f, s).iter().all(|&j| j == v));
    let u = polynomial_to_upoly(&f, v).squarefree_part();
    // locate this root among the roots of u
    let mut candidates = crate::algnum::roots_of_upoly(&u);
    loop {
        let iv = a.interval();
        candidates.retain(|cand| cand.interval().intersects(&iv));
        if candidates.len() == 1 {
            match &candidates[0] {
                Value::Rational(r) => {
                    // exact check: is the coordinate equal to r?
                    if sign_at_point(&a.defining, v, r, s) == 0 && iv.contains(r) {
                        return Value::Rational(r.clone());
                    }
                }
                Value::Algebraic(cand) => {
                    let ci = cand.interval();
                    if iv.lo >= ci.lo && iv.hi <= ci.hi {
                        // the candidate interval isolates this root w.r.t. u
                        let _ = a.univ.set(u.clone());
                        a.store_interval(iv);
                        return Value::Algebraic(AlgebraicNumber::new(u, ci.lo, ci.hi));
                    }
                }
            }
        }
        let mut ext: Vec<Coord> = s.to_vec();
        ext.push(c.clone());
        refine_coord(&ext, v);
        candidates = candidates
            .iter()
            .map(|cand| cand.refined_to_width(&(a.interval().width())))
            .collect();
    }
}

// coefficients of f as a polynomial in the remaining variables, each a
// univariate polynomial in x_j
fn univariate_coefficient_split(f: &Polynomial, j: usize) -> Vec<(Vec<u32>, UPoly)> {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<Vec<u32>, Vec<(u32, Rat)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut key = m.0.clone();
        let e = key[j];
        key[j] = 0;
        groups.entry(key).or_default().push((e, c.clone()));
    }
    groups
        .into_iter()
        .map(|(key, parts)| {
            let d = parts.iter().map(|(e, _)| *e).max().unwrap_or(0);
            let mut coeffs = vec![Rat::zero(); d as usize + 1];
            for (e, c) in parts {
                coeffs[e as usize] += c;
            }
            (key, UPoly::from_rationals(&coeffs))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};
    use crate::parse;
    use crate::vars::VarOrder;

    fn order3() -> VarOrder {
        VarOrder::new(vec!["x", "y", "z"]).unwrap()
    }

    fn alg_coord(defining: Polynomial, level: usize, lo: i64, hi: i64) -> Coord {
        Coord::Algebraic(Arc::new(AlgCoord {
            level,
            defining,
            interval: Mutex::new(RatInterval::new(rat(lo), rat(hi))),
            univ: OnceLock::new(),
        }))
    }

    #[test]
    fn signs_with_one_algebraic_coordinate() {
        let o = order3();
        // x = sqrt(2)
        let s = vec![alg_coord(parse::polynomial("x^2-2", &o).unwrap(), 0, 1, 2)];
        assert_eq!(sign_at(&parse::polynomial("x", &o).unwrap(), &s), 1);
        assert_eq!(sign_at(&parse::polynomial("x^2-2", &o).unwrap(), &s), 0);
        assert_eq!(sign_at(&parse::polynomial("x^2-3", &o).unwrap(), &s), -1);
        assert_eq!(sign_at(&parse::polynomial("x^3-2x", &o).unwrap(), &s), 0);
    }

    #[test]
    fn joint_zero_test_on_equal_coordinates() {
        let o = order3();
        // x = sqrt(2), y = sqrt(2) (y defined by y^2-2, independent of x)
        let s = vec![
            alg_coord(parse::polynomial("x^2-2", &o).unwrap(), 0, 1, 2),
            alg_coord(parse::polynomial("y^2-2", &o).unwrap(), 1, 1, 2),
        ];
        // x - y vanishes exactly
        assert_eq!(sign_at(&parse::polynomial("x-y", &o).unwrap(), &s), 0);
        assert_eq!(sign_at(&parse::polynomial("x+y", &o).unwrap(), &s), 1);
        assert_eq!(sign_at(&parse::polynomial("x y - 2", &o).unwrap(), &s), 0);
        assert_eq!(sign_at(&parse::polynomial("x y - 3", &o).unwrap(), &s), -1);

        // y = -sqrt(2): x - y is now nonzero
        let s2 = vec![
            alg_coord(parse::polynomial("x^2-2", &o).unwrap(), 0, 1, 2),
            alg_coord(parse::polynomial("y^2-2", &o).unwrap(), 1, -2, -1),
        ];
        assert_eq!(sign_at(&parse::polynomial("x-y", &o).unwrap(), &s2), 1);
        assert_eq!(sign_at(&parse::polynomial("x y + 2", &o).unwrap(), &s2), 0);
    }

    #[test]
    fn triangular_chain_coordinates() {
        let o = order3();
        // x = sqrt(2), y the root of y^2 - x in (1, 2): y = 2^(1/4)... wait
        // sqrt(sqrt 2) ~ 1.189
        let x = alg_coord(parse::polynomial("x^2-2", &o).unwrap(), 0, 1, 2);
        let s1 = vec![x.clone()];
        let ydef = parse::polynomial("y^2-x", &o).unwrap();
        let roots = isolate_at(&[(0usize, squarefree_at(&ydef, 1, &s1))], 1, &s1);
        assert_eq!(roots.len(), 2);
        let y = roots[1].coord.clone();
        let s = vec![x, y];
        // y^4 = 2
        assert_eq!(sign_at(&parse::polynomial("y^4-2", &o).unwrap(), &s), 0);
        assert_eq!(sign_at(&parse::polynomial("y^4-3", &o).unwrap(), &s), -1);
        assert_eq!(sign_at(&parse::polynomial("y - x", &o).unwrap(), &s), -1);
    }

    #[test]
    fn nullification_detection() {
        let o = order3();
        // x*z + y at (x, y) = (0, 0): identically zero in z
        let s = vec![Coord::rational(rat(0)), Coord::rational(rat(0))];
        let f = parse::polynomial("x z + y", &o).unwrap();
        assert_eq!(true_degree(&f, 2, &s), None);
        // at (0, 1): constant 1
        let s2 = vec![Coord::rational(rat(0)), Coord::rational(rat(1))];
        assert_eq!(true_degree(&f, 2, &s2), Some(0));
        // at (1, 0): degree 1
        let s3 = vec![Coord::rational(rat(1)), Coord::rational(rat(0))];
        assert_eq!(true_degree(&f, 2, &s3), Some(1));
    }

    #[test]
    fn isolate_over_rational_base_with_double_root() {
        let o = order3();
        // circle over x = 1: y^2 = 0 has the single root 0
        let f = parse::polynomial("x^2+y^2-1", &o).unwrap();
        let s = vec![Coord::rational(rat(1))];
        match specialise(&f, 1, &s) {
            Specialised::Positive(sq) => {
                let roots = isolate_at(&[(0, sq)], 1, &s);
                assert_eq!(roots.len(), 1);
                match &roots[0].coord {
                    Coord::Rational(r) => assert_eq!(r, &rat(0)),
                    other => panic!("expected rational root, got {other:?}"),
                }
            }
            _ => panic!("expected positive degree"),
        }
    }

    #[test]
    fn isolate_over_algebraic_base_finds_pole() {
        let o = order3();
        // sphere x^2+y^2+z^2-1 over x = 1/2 (rational), y = sqrt(3)/2
        // (algebraic section of x^2+y^2-1): z^2 = 0, root z = 0
        let circle = parse::polynomial("x^2+y^2-1", &o).unwrap();
        let sx = vec![Coord::rational(ratio(1, 2))];
        let yroots = isolate_at(&[(0, squarefree_at(&circle, 1, &sx))], 1, &sx);
        assert_eq!(yroots.len(), 2);
        let y = yroots[1].coord.clone();
        assert!(!y.is_rational());
        let s = vec![Coord::rational(ratio(1, 2)), y];
        let sphere = parse::polynomial("x^2+y^2+z^2-1", &o).unwrap();
        match specialise(&sphere, 2, &s) {
            Specialised::Positive(sq) => {
                let roots = isolate_at(&[(0, sq)], 2, &s);
                assert_eq!(roots.len(), 1);
                match &roots[0].coord {
                    Coord::Rational(r) => assert_eq!(r, &rat(0)),
                    other => panic!("expected z = 0, got {other:?}"),
                }
            }
            _ => panic!("expected positive degree"),
        }
    }

    #[test]
    fn merged_roots_of_two_polynomials() {
        let o = order3();
        // x-1 and (x-1)(x-2) over the empty base
        let s: Vec<Coord> = vec![];
        let f = parse::polynomial("x-1", &o).unwrap();
        let g = parse::polynomial("x^2-3x+2", &o).unwrap();
        let roots = isolate_at(&[(0, f), (1, g)], 0, &s);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].tags, vec![0, 1]);
        assert_eq!(roots[1].tags, vec![1]);
    }

    #[test]
    fn univariate_materialisation_of_chained_coordinate() {
        let o = order3();
        let x = alg_coord(parse::polynomial("x^2-2", &o).unwrap(), 0, 1, 2);
        let s1 = vec![x.clone()];
        let ydef = parse::polynomial("y^2-x", &o).unwrap();
        let roots = isolate_at(&[(0usize, squarefree_at(&ydef, 1, &s1))], 1, &s1);
        let y = roots[1].coord.clone();
        // y = 2^(1/4): its univariate defining polynomial divides y^4 - 2
        let val = univariate_value(&y, &s1);
        match val {
            crate::algnum::Value::Algebraic(a) => {
                assert!(a.validate());
                assert_eq!(a.sign_of(&crate::upoly::UPoly::from_i64(&[-2, 0, 0, 0, 1])), 0);
            }
            other => panic!("expected algebraic, got {other}"),
        }
    }
}
