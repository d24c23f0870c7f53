//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so the greatest entry is the leading term.  All
//! operations are exact; canonical form (no zero coefficients, exponent
//! vectors of full length) is restored by every constructor.

use crate::error::CadError;
use crate::interval::RatInterval;
use crate::num::{int_gcd, rat_sign, Int, Rat};
use crate::vars::VarOrder;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector under graded lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients under a
/// fixed variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    order: VarOrder,
    terms: BTreeMap<Mono, Rat>,
}

impl Polynomial {
    pub fn zero(order: &VarOrder) -> Self {
        Polynomial {
            order: order.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(order: &VarOrder, c: Rat) -> Self {
        let mut p = Polynomial::zero(order);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; order.len()]), c);
        }
        p
    }

    pub fn one(order: &VarOrder) -> Self {
        Polynomial::constant(order, Rat::one())
    }

    pub fn var(order: &VarOrder, v: usize) -> Self {
        assert!(v < order.len());
        let mut e = vec![0; order.len()];
        e[v] = 1;
        let mut p = Polynomial::zero(order);
        p.terms.insert(Mono(e), Rat::one());
        p
    }

    /// Build from `(coefficient, exponents)` pairs; repeated monomials are
    /// accumulated and zeros dropped.
    pub fn from_terms(order: &VarOrder, terms: Vec<(Rat, Vec<u32>)>) -> Self {
        let mut p = Polynomial::zero(order);
        for (c, e) in terms {
            assert_eq!(e.len(), order.len(), "exponent vector length mismatch");
            p.add_term(c, Mono(e));
        }
        p
    }

    fn add_term(&mut self, c: Rat, m: Mono) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn order(&self) -> &VarOrder {
        &self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1
            && self
                .terms
                .keys()
                .all(|m| m.total_degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Degree in one variable (0 for constants and zero).
    pub fn degree(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Greatest variable with positive exponent; `None` for constants.
    pub fn main_variable(&self) -> Option<usize> {
        let mut mv: Option<usize> = None;
        for m in self.terms.keys() {
            for (i, e) in m.0.iter().enumerate().rev() {
                if *e > 0 {
                    mv = Some(mv.map_or(i, |c| c.max(i)));
                    break;
                }
            }
        }
        mv
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.0[v] > 0)
    }

    fn check_order(&self, other: &Polynomial) -> Result<(), CadError> {
        if self.order.same(&other.order) {
            Ok(())
        } else {
            Err(CadError::OrderMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_order(other).expect("variable order mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_order(other).expect("variable order mismatch");
        let mut out = Polynomial::zero(&self.order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.order);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact partial derivative.
    pub fn derivative(&self, v: usize) -> Polynomial {
        assert!(v < self.order.len(), "unknown variable");
        let mut out = Polynomial::zero(&self.order);
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[v] = e - 1;
            out.add_term(c * Rat::from_integer(Int::from(e)), me);
        }
        out
    }

    /// Coefficient of `v^k`, a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: usize, k: u32) -> Polynomial {
        let mut out = Polynomial::zero(&self.order);
        for (m, c) in &self.terms {
            if m.0[v] == k {
                let mut me = m.clone();
                me.0[v] = 0;
                out.add_term(c.clone(), me);
            }
        }
        out
    }

    /// Coefficients viewed as univariate in `v`, leading coefficient first.
    pub fn coefficients(&self, v: usize) -> Vec<Polynomial> {
        let d = self.degree(v);
        (0..=d)
            .rev()
            .map(|k| self.coefficient_of(v, k))
            .collect()
    }

    pub fn leading_coefficient(&self, v: usize) -> Polynomial {
        self.coefficient_of(v, self.degree(v))
    }

    /// Substitute rational values for a subset of the variables.
    pub fn substitute(&self, assign: &[Option<Rat>]) -> Polynomial {
        assert_eq!(assign.len(), self.order.len());
        let mut out = Polynomial::zero(&self.order);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut me = m.clone();
            for (i, a) in assign.iter().enumerate() {
                if let Some(val) = a {
                    let e = me.0[i];
                    if e > 0 {
                        coeff *= crate::num::rat_pow(val, e);
                        me.0[i] = 0;
                    }
                }
            }
            out.add_term(coeff, me);
        }
        out
    }

    /// Full rational evaluation.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.order.len());
        let assign: Vec<Option<Rat>> = point.iter().cloned().map(Some).collect();
        self.substitute(&assign)
            .constant_value()
            .expect("full substitution must be constant")
    }

    /// Interval evaluation over a box; every variable occurring in the
    /// polynomial must have an interval.
    pub fn interval_eval(&self, boxes: &[Option<RatInterval>]) -> RatInterval {
        let mut acc = RatInterval::point(Rat::zero());
        for (m, c) in &self.terms {
            let mut term = RatInterval::point(c.clone());
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    let b = boxes[i]
                        .as_ref()
                        .expect("missing interval for variable");
                    term = term.mul(&b.pow(*e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Map this polynomial into a (weakly larger) order by variable name.
    pub fn reorder(&self, target: &VarOrder) -> Result<Polynomial, CadError> {
        let map: Vec<usize> = self
            .order
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| CadError::UnknownVariable(n.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, exp) in m.0.iter().enumerate() {
                e[map[i]] = *exp;
            }
            out.add_term(c.clone(), Mono(e));
        }
        Ok(out)
    }

    // ------------------------------------------------------------------
    // integer normalisation
    // ------------------------------------------------------------------

    /// Least common multiple of the coefficient denominators.
    fn denominator_lcm(&self) -> Int {
        let mut l = Int::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        l
    }

    /// Sum of absolute values of the integer coefficients after clearing
    /// denominators.
    pub fn norm_length(&self) -> Int {
        let l = self.denominator_lcm();
        let mut s = Int::zero();
        for c in self.terms.values() {
            s += (c * Rat::from_integer(l.clone())).numer().abs();
        }
        s
    }

    /// Canonical integer-primitive form: coefficients are coprime integers and
    /// the leading coefficient is positive.  Returns the zero polynomial
    /// unchanged.
    pub fn canonical(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut scale = self.primitive_scale();
        let lead = self.terms.iter().next_back().unwrap().1;
        if rat_sign(&(lead * &scale)) < 0 {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Integer-primitive form that keeps the original sign (used for atoms of
    /// inequalities, where flipping the sign would change the relation).
    pub fn canonical_keep_sign(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.primitive_scale())
    }

    // positive factor turning the coefficients into coprime integers
    fn primitive_scale(&self) -> Rat {
        let l = self.denominator_lcm();
        let mut g = Int::zero();
        for c in self.terms.values() {
            g = int_gcd(&g, (c * Rat::from_integer(l.clone())).numer());
        }
        Rat::new(l, g)
    }

    /// `true` when `other` equals `self` up to a nonzero rational factor.
    pub fn similar(&self, other: &Polynomial) -> bool {
        self.canonical() == other.canonical()
    }

    // ------------------------------------------------------------------
    // division, gcd, content
    // ------------------------------------------------------------------

    /// Exact multivariate division; `None` if `self` is not a multiple of `d`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let mut q = Polynomial::zero(&self.order);
        let (dm, dc) = {
            let (m, c) = d.terms.iter().next_back().unwrap();
            (m.clone(), c.clone())
        };
        while !r.is_zero() {
            let (rm, rc) = {
                let (m, c) = r.terms.iter().next_back().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.try_div(&dm)?;
            let qc = rc / &dc;
            let mut t = Polynomial::zero(&self.order);
            t.terms.insert(qm, qc);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Pseudo-remainder of `self` by `d` in variable `v`:
    /// `lc(d)^(deg self - deg d + 1) * self ≡ prem (mod d)`.
    pub fn prem(&self, d: &Polynomial, v: usize) -> Polynomial {
        let dd = d.degree(v);
        assert!(dd >= 1, "pseudo-division by a polynomial constant in v");
        let lc_d = d.leading_coefficient(v);
        let mut r = self.clone();
        let mut e = (self.degree(v) as i64) - (dd as i64) + 1;
        while !r.is_zero() && r.degree(v) >= dd {
            let dr = r.degree(v);
            let lc_r = r.leading_coefficient(v);
            let mut shift = Polynomial::var(&self.order, v).pow(dr - dd);
            shift = shift.mul(&lc_r);
            r = r.mul(&lc_d).sub(&shift.mul(d));
            e -= 1;
        }
        let mut out = r;
        while e > 0 {
            out = out.mul(&lc_d);
            e -= 1;
        }
        out
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(d)^(deg self - deg d + 1) * self = q*d + r` and `deg_v r < deg_v d`.
    pub fn pseudo_div(&self, d: &Polynomial, v: usize) -> (Polynomial, Polynomial) {
        let dd = d.degree(v);
        assert!(dd >= 1, "pseudo-division by a polynomial constant in v");
        let lc_d = d.leading_coefficient(v);
        let mut r = self.clone();
        let mut q = Polynomial::zero(&self.order);
        let mut e = (self.degree(v) as i64) - (dd as i64) + 1;
        while !r.is_zero() && r.degree(v) >= dd {
            let dr = r.degree(v);
            let t = Polynomial::var(&self.order, v)
                .pow(dr - dd)
                .mul(&r.leading_coefficient(v));
            q = q.mul(&lc_d).add(&t);
            r = r.mul(&lc_d).sub(&t.mul(d));
            e -= 1;
        }
        while e > 0 {
            q = q.mul(&lc_d);
            r = r.mul(&lc_d);
            e -= 1;
        }
        (q, r)
    }

    /// Content with respect to `v`: gcd of the `v`-coefficients (a polynomial
    /// in the lower variables, integer-primitive and positively normalised).
    pub fn content(&self, v: usize) -> Polynomial {
        let mut g = Polynomial::zero(&self.order);
        for k in 0..=self.degree(v) {
            let c = self.coefficient_of(v, k);
            if !c.is_zero() {
                g = gcd(&g, &c);
            }
        }
        g
    }

    pub fn primitive_part(&self, v: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content(v);
        self.exact_div(&c)
            .expect("content must divide")
            .canonical()
    }

    /// Squarefree part w.r.t. the main variable of a primitive polynomial.
    pub fn squarefree_part(&self) -> Polynomial {
        let v = match self.main_variable() {
            Some(v) => v,
            None => return self.canonical(),
        };
        let d = self.derivative(v);
        let g = gcd(self, &d);
        if g.is_constant() {
            return self.canonical();
        }
        self.exact_div(&g)
            .expect("gcd must divide")
            .canonical()
    }

    // ------------------------------------------------------------------
    // display
    // ------------------------------------------------------------------

    fn format_term(&self, m: &Mono, c: &Rat, first: bool, out: &mut String) {
        let neg = rat_sign(c) < 0;
        let abs = c.abs();
        if first {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.total_degree() == 0 {
            factors.push(crate::num::rat_to_string(&abs));
        }
        for (i, e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(self.order.name(i).to_string()),
                _ => factors.push(format!("{}^{}", self.order.name(i), e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            self.format_term(m, c, i == 0, &mut out);
        }
        write!(f, "{}", out)
    }
}

/// gcd of two polynomials, integer-primitive with positive leading
/// coefficient; `gcd(0, g) = |g|` normalised, and nonzero constants behave as
/// units (the gcd of coprime elements is 1).
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.canonical();
    }
    if b.is_zero() {
        return a.canonical();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.order());
    }
    let va = a.main_variable().unwrap();
    let vb = b.main_variable().unwrap();
    let v = va.max(vb);
    if va != vb {
        // the one not involving v is "a coefficient": recurse against content
        let (low, high) = if va < vb { (a, b) } else { (b, a) };
        return gcd(low, &high.content(v));
    }
    let ca = a.content(v);
    let cb = b.content(v);
    let c = gcd(&ca, &cb);
    let mut p = a.primitive_part(v);
    let mut q = b.primitive_part(v);
    if p.degree(v) < q.degree(v) {
        std::mem::swap(&mut p, &mut q);
    }
    // primitive PRS
    loop {
        let r = p.prem(&q, v);
        if r.is_zero() {
            break;
        }
        if r.degree(v) == 0 {
            // coprime apart from content
            return c.canonical();
        }
        p = q;
        q = r.primitive_part(v);
    }
    c.mul(&q.primitive_part(v)).canonical()
}

/// Resultant of `f` and `g` with respect to `v` via the subresultant PRS.
///
/// Requires at least one argument of positive degree in `v`; the resultant of
/// two polynomials constant in `v` is not defined.
pub fn resultant(f: &Polynomial, g: &Polynomial, v: usize) -> Result<Polynomial, CadError> {
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.order()));
    }
    let df = f.degree(v);
    let dg = g.degree(v);
    if df == 0 && dg == 0 {
        return Err(CadError::invalid(
            "resultant requires positive degree in the eliminated variable",
        ));
    }
    if df < dg {
        let swapped = resultant(g, f, v)?;
        return Ok(if (df * dg) % 2 == 1 {
            swapped.neg()
        } else {
            swapped
        });
    }
    if dg == 0 {
        return Ok(g.pow(df));
    }
    // contents out
    let fa = f.content(v);
    let gb = g.content(v);
    let mut a = f.primitive_part(v);
    let mut b = g.primitive_part(v);
    let t = fa.pow(dg).mul(&gb.pow(df));
    let mut sign = 1i8;
    let one = Polynomial::one(f.order());
    let mut gcoef = one.clone();
    let mut h = one.clone();
    loop {
        let da = a.degree(v);
        let db = b.degree(v);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.prem(&b, v);
        if r.is_zero() {
            // common factor of positive degree
            return Ok(Polynomial::zero(f.order()));
        }
        a = b;
        let divisor = gcoef.mul(&h.pow(delta));
        b = r.exact_div(&divisor).expect("subresultant division is exact");
        gcoef = a.leading_coefficient(v);
        // h = g^delta * h^(1-delta)
        h = if delta == 0 {
            h
        } else {
            let num = gcoef.pow(delta);
            if delta == 1 {
                num
            } else {
                num.exact_div(&h.pow(delta - 1))
                    .expect("subresultant h-update is exact")
            }
        };
        if b.degree(v) == 0 {
            break;
        }
    }
    let da = a.degree(v);
    // res(pp) = lc(B)^{deg A} / h^{deg A - 1}
    let num = b.coefficient_of(v, 0).pow(da);
    let res_pp = if da <= 1 {
        num
    } else {
        num.exact_div(&h.pow(da - 1))
            .expect("final subresultant division is exact")
    };
    let mut res = t.mul(&res_pp);
    if sign < 0 {
        res = res.neg();
    }
    Ok(res)
}

/// Discriminant with respect to `v`:
/// `(-1)^(d(d-1)/2) * res_v(f, df/dv) / lc_v(f)`, defined for `deg_v f >= 2`.
pub fn discriminant(f: &Polynomial, v: usize) -> Result<Polynomial, CadError> {
    let d = f.degree(v);
    if d < 2 {
        return Err(CadError::invalid("discriminant requires degree >= 2"));
    }
    let res = resultant(f, &f.derivative(v), v)?;
    let lc = f.leading_coefficient(v);
    let q = res
        .exact_div(&lc)
        .expect("leading coefficient divides the discriminant resultant");
    Ok(if (d * (d - 1) / 2) % 2 == 1 { q.neg() } else { q })
}

/// Finest squarefree basis of a finite polynomial set.
///
/// The result is a list of pairwise-coprime squarefree integer-primitive
/// polynomials (positive leading coefficient, deterministic order) such that
/// every nonconstant input is a rational multiple of a product of powers of
/// basis elements.  Nonconstant contents are kept as basis elements.
pub fn squarefree_basis(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut queue: Vec<Polynomial> = Vec::new();
    for f in polys {
        push_split(f, &mut queue);
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    'next: while let Some(g) = queue.pop() {
        if g.is_constant() {
            continue;
        }
        let mut g = g;
        let mut i = 0;
        while i < basis.len() {
            if basis[i] == g {
                continue 'next;
            }
            let d = gcd(&basis[i], &g);
            if !d.is_constant() {
                let b = basis.swap_remove(i);
                let b_rest = b.exact_div(&d).expect("gcd divides").canonical();
                let g_rest = g.exact_div(&d).expect("gcd divides").canonical();
                if !b_rest.is_constant() {
                    queue.push(b_rest);
                }
                if !g_rest.is_constant() {
                    queue.push(g_rest);
                }
                g = d;
                i = 0;
                continue;
            }
            i += 1;
        }
        basis.push(g);
    }
    basis.sort_by(compare_polys);
    basis.dedup();
    basis
}

// split a polynomial into primitive squarefree candidate factors
fn push_split(f: &Polynomial, out: &mut Vec<Polynomial>) {
    if f.is_zero() || f.is_constant() {
        return;
    }
    let v = f.main_variable().unwrap();
    let c = f.content(v);
    if !c.is_constant() {
        push_split(&c, out);
    }
    let p = f.primitive_part(v);
    out.push(p.squarefree_part());
}

/// Deterministic polynomial ordering: by total degree, then leading monomial,
/// then term-by-term comparison.
pub fn compare_polys(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| {
            let ta: Vec<_> = a.terms().collect();
            let tb: Vec<_> = b.terms().collect();
            for (x, y) in ta.iter().rev().zip(tb.iter().rev()) {
                let c = x.0.cmp(y.0).then_with(|| x.1.cmp(y.1));
                if c != Ordering::Equal {
                    return c;
                }
            }
            ta.len().cmp(&tb.len())
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};
    use crate::parse;

    fn xy() -> VarOrder {
        VarOrder::new(vec!["x", "y"]).unwrap()
    }

    fn p(text: &str, o: &VarOrder) -> Polynomial {
        parse::polynomial(text, o).unwrap()
    }

    #[test]
    fn arithmetic_cancellation_and_identity() {
        let o = xy();
        // (x+1) + (x-1) = 2x
        assert_eq!(p("x+1", &o).add(&p("x-1", &o)), p("2x", &o));
        // (x^2+y^2-1) * 1
        let f = p("x^2+y^2-1", &o);
        assert_eq!(f.mul(&Polynomial::one(&o)), f);
        // (x-1)(x+2) = x^2+x-2
        assert_eq!(p("x-1", &o).mul(&p("x+2", &o)), p("x^2+x-2", &o));
    }

    #[test]
    fn derivative_examples() {
        let o = xy();
        assert_eq!(p("x^2+y^2-1", &o).derivative(1), p("2y", &o));
        assert_eq!(p("y^3", &o).derivative(0), Polynomial::zero(&o));
        assert_eq!(p("x^3-x", &o).derivative(0), p("3x^2-1", &o));
    }

    #[test]
    fn main_variable_and_coefficients() {
        let o = xy();
        let f = p("x^2+y^2-1", &o);
        assert_eq!(f.main_variable(), Some(1));
        assert_eq!(p("x", &o).main_variable(), Some(0));
        assert_eq!(Polynomial::constant(&o, rat(3)).main_variable(), None);
        // coeffs_y(x^2+y^2-1) = [1, 0, x^2-1]
        let coeffs = f.coefficients(1);
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[0], Polynomial::one(&o));
        assert!(coeffs[1].is_zero());
        assert_eq!(coeffs[2], p("x^2-1", &o));
        // coeffs_y(x) = [x]
        assert_eq!(p("x", &o).coefficients(1), vec![p("x", &o)]);
        // coeffs_x(2xy + 3) = [2y, 3]
        assert_eq!(
            p("2x y + 3", &o).coefficients(0),
            vec![p("2y", &o), p("3", &o)]
        );
    }

    #[test]
    fn resultant_examples() {
        let o = xy();
        // res_x(x^2+y^2-1, x) = y^2-1
        let r = resultant(&p("x^2+y^2-1", &o), &p("x", &o), 0).unwrap();
        assert_eq!(r, p("y^2-1", &o));
        // res_y(x^2+y^2-1, 2y) = 4(x^2-1)
        let r = resultant(&p("x^2+y^2-1", &o), &p("2y", &o), 1).unwrap();
        assert_eq!(r, p("4x^2-4", &o));
        // res_x(x-a, x-b) = a-b over the order a,b,x
        let abx = VarOrder::new(vec!["a", "b", "x"]).unwrap();
        let r = resultant(&p("x-a", &abx), &p("x-b", &abx), 2).unwrap();
        assert_eq!(r, p("a-b", &abx));
        // both constant in the variable is an error
        assert!(resultant(&p("y", &o), &p("y+1", &o), 0).is_err());
    }

    #[test]
    fn resultant_swap_sign() {
        let o = xy();
        let f = p("x^3 - y x + 1", &o);
        let g = p("x^2 + y", &o);
        let fg = resultant(&f, &g, 0).unwrap();
        let gf = resultant(&g, &f, 0).unwrap();
        // (-1)^{3*2} = +1
        assert_eq!(fg, gf);
        let h = p("x^3 + y", &o);
        let fh = resultant(&f, &h, 0).unwrap();
        let hf = resultant(&h, &f, 0).unwrap();
        // (-1)^{3*3} = -1
        assert_eq!(fh, hf.neg());
    }

    #[test]
    fn discriminant_examples() {
        let o = xy();
        // disc_y(y^2+x^2-1) = -4(x^2-1)
        let d = discriminant(&p("y^2+x^2-1", &o), 1).unwrap();
        assert_eq!(d, p("-4x^2+4", &o));
        // disc_x(x^2-2) = 8
        let d = discriminant(&p("x^2-2", &o), 0).unwrap();
        assert_eq!(d.constant_value(), Some(rat(8)));
        // disc_y(y^2) = 0
        let d = discriminant(&p("y^2", &o), 1).unwrap();
        assert!(d.is_zero());
        // degree < 2 rejected
        assert!(discriminant(&p("y", &o), 1).is_err());
    }

    #[test]
    fn gcd_and_content() {
        let o = xy();
        let f = p("(x-1)^2 (x+2)", &o);
        let g = p("(x-1)(x+3)", &o);
        assert_eq!(gcd(&f, &g), p("x-1", &o));
        assert_eq!(gcd(&f, &Polynomial::zero(&o)), f.canonical());
        // content w.r.t. y of (2y x + 2 x^2) is x (integer content folded in)
        let h = p("2 x y + 2 x^2", &o);
        assert_eq!(h.content(1), p("x", &o));
        assert_eq!(h.primitive_part(1), p("y + x", &o));
    }

    #[test]
    fn exact_division() {
        let o = xy();
        let f = p("x^2 y - y^3", &o);
        let d = p("x - y", &o);
        let q = f.exact_div(&d).unwrap();
        assert_eq!(q.mul(&d), f);
        assert!(p("x^2+1", &o).exact_div(&p("x+1", &o)).is_none());
    }

    #[test]
    fn squarefree_basis_examples() {
        let o = xy();
        // {(x-1)^2 (x+2), x-1} -> {x-1, x+2}
        let b = squarefree_basis(&[p("(x-1)^2 (x+2)", &o), p("x-1", &o)]);
        assert_eq!(b, vec![p("x-1", &o), p("x+2", &o)]);
        // {x^2+y^2-1, x} -> unchanged
        let b = squarefree_basis(&[p("x^2+y^2-1", &o), p("x", &o)]);
        assert_eq!(b.len(), 2);
        assert!(b.contains(&p("x", &o)));
        assert!(b.contains(&p("x^2+y^2-1", &o)));
        // {x^2} -> {x}
        assert_eq!(squarefree_basis(&[p("x^2", &o)]), vec![p("x", &o)]);
        // empty input -> empty basis
        assert!(squarefree_basis(&[]).is_empty());
        // nonconstant content is kept as a basis element
        let b = squarefree_basis(&[p("x y^2 + x", &o)]);
        assert_eq!(b, vec![p("x", &o), p("y^2+1", &o)]);
    }

    #[test]
    fn canonical_and_norm_length() {
        let o = xy();
        let f = p("x/2 - 1/3", &o);
        let c = f.canonical();
        assert_eq!(c, p("3x - 2", &o));
        // norm length clears denominators: |3x-2|_1 = 5
        assert_eq!(c.norm_length(), Int::from(5));
        assert_eq!(f.norm_length(), Int::from(5));
        // sign-preserving variant
        assert_eq!(p("-x/2", &o).canonical_keep_sign(), p("-x", &o));
        assert_eq!(p("-x/2", &o).canonical(), p("x", &o));
    }

    #[test]
    fn substitute_and_interval_eval() {
        let o = xy();
        let f = p("x^2+y^2-1", &o);
        let g = f.substitute(&[Some(ratio(1, 2)), None]);
        assert_eq!(g, p("y^2 - 3/4", &o));
        let b = f.interval_eval(&[
            Some(crate::interval::RatInterval::new(rat(0), rat(1))),
            Some(crate::interval::RatInterval::point(rat(2))),
        ]);
        assert!(b.contains(&rat(3)) && b.contains(&rat(4)));
    }

    #[test]
    fn display_is_reparseable() {
        let o = xy();
        for text in ["x^2+y^2-1", "-x", "2/3 x y - 7", "x^2 y^3 + x - 1/2", "0", "5"] {
            let f = p(text, &o);
            let g = p(&f.to_string(), &o);
            assert_eq!(f, g);
        }
    }
}
