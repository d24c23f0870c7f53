//! Quantifier-free Tarski formulae.

use crate::error::CadError;
use crate::poly::{squarefree_basis, Polynomial};
use crate::sample::sign_at;
use crate::vars::VarOrder;
use std::fmt;

/// Relation of an atom `p REL 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Rel {
    pub fn holds(self, sign: i8) -> bool {
        match self {
            Rel::Eq => sign == 0,
            Rel::Ne => sign != 0,
            Rel::Lt => sign < 0,
            Rel::Le => sign <= 0,
            Rel::Gt => sign > 0,
            Rel::Ge => sign >= 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Gt => ">",
            Rel::Ge => ">=",
        }
    }
}

/// Formula tree over atoms `p REL 0`; conjunction and disjunction are n-ary.
#[derive(Debug, Clone, PartialEq)]
pub enum Formula {
    Atom(Polynomial, Rel),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Not(Box<Formula>),
}

impl Formula {
    pub fn order(&self) -> Option<&VarOrder> {
        match self {
            Formula::Atom(p, _) => Some(p.order()),
            Formula::And(v) | Formula::Or(v) => v.iter().find_map(|f| f.order()),
            Formula::Not(f) => f.order(),
        }
    }

    /// Distinct polynomials appearing in atoms, in first-appearance order.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        self.collect_polys(&mut out);
        out
    }

    fn collect_polys(&self, out: &mut Vec<Polynomial>) {
        match self {
            Formula::Atom(p, _) => {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
            Formula::And(v) | Formula::Or(v) => {
                for f in v {
                    f.collect_polys(out);
                }
            }
            Formula::Not(f) => f.collect_polys(out),
        }
    }

    /// Exact truth value at a sample point with rational or algebraic
    /// coordinates.
    pub fn evaluate(&self, sample: &[crate::sample::Coord]) -> bool {
        match self {
            Formula::Atom(p, rel) => rel.holds(sign_at(p, sample)),
            Formula::And(v) => v.iter().all(|f| f.evaluate(sample)),
            Formula::Or(v) => v.iter().any(|f| f.evaluate(sample)),
            Formula::Not(f) => !f.evaluate(sample),
        }
    }

    /// Recognise the designated equational constraint.
    ///
    /// Recognised shapes: a top-level equation, a top-level conjunction with
    /// exactly one equation conjunct, or a disjunction whose branches each
    /// yield one (the product is then an implicit constraint).  Anything else
    /// requires an explicit designation.
    pub fn auto_equational_constraint(&self) -> Result<Polynomial, CadError> {
        match self {
            Formula::Atom(p, Rel::Eq) => Ok(p.clone()),
            Formula::And(items) => {
                let eqs: Vec<&Polynomial> = items
                    .iter()
                    .filter_map(|f| match f {
                        Formula::Atom(p, Rel::Eq) => Some(p),
                        _ => None,
                    })
                    .collect();
                match eqs.len() {
                    0 => Err(CadError::invalid(
                        "no top-level equation to use as an equational constraint",
                    )),
                    1 => Ok(eqs[0].clone()),
                    _ => Err(CadError::invalid(
                        "multiple equations present; designate one explicitly",
                    )),
                }
            }
            Formula::Or(items) => {
                let mut product: Option<Polynomial> = None;
                for f in items {
                    let p = f.auto_equational_constraint()?;
                    product = Some(match product {
                        None => p,
                        Some(acc) => acc.mul(&p),
                    });
                }
                product.ok_or_else(|| CadError::invalid("empty disjunction"))
            }
            _ => Err(CadError::invalid(
                "cannot infer an equational constraint; designate one explicitly",
            )),
        }
    }

    /// Atom-level implication check for a designated constraint: an equated
    /// atom dividing `f` forces `f = 0`, a conjunction needs one such branch,
    /// a disjunction needs all of them.
    pub fn implies_equation(&self, f: &Polynomial) -> bool {
        match self {
            Formula::Atom(p, Rel::Eq) => f.exact_div(p).is_some(),
            Formula::Atom(..) => false,
            Formula::And(items) => items.iter().any(|i| i.implies_equation(f)),
            Formula::Or(items) => !items.is_empty() && items.iter().all(|i| i.implies_equation(f)),
            Formula::Not(_) => false,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p, rel) => write!(out, "{} {} 0", p, rel.symbol()),
            Formula::And(items) => {
                let parts: Vec<String> = items.iter().map(|f| f.fmt_nested(true)).collect();
                write!(out, "{}", parts.join(" /\\ "))
            }
            Formula::Or(items) => {
                let parts: Vec<String> = items.iter().map(|f| f.fmt_nested(false)).collect();
                write!(out, "{}", parts.join(" \\/ "))
            }
            Formula::Not(f) => write!(out, "~({})", f),
        }
    }
}

impl Formula {
    fn fmt_nested(&self, in_and: bool) -> String {
        match self {
            Formula::Or(_) if in_and => format!("({})", self),
            Formula::And(_) if !in_and => format!("({})", self),
            _ => format!("{}", self),
        }
    }
}

/// A formula with its designated equational constraint, ready for the
/// sub-decomposition algorithms.
#[derive(Debug, Clone)]
pub struct ConstrainedFormula {
    pub formula: Formula,
    /// The designated constraint polynomial (`None` when the construction
    /// does not use one).
    pub ec: Option<Polynomial>,
}

impl ConstrainedFormula {
    pub fn without_ec(formula: Formula) -> Self {
        ConstrainedFormula { formula, ec: None }
    }

    pub fn with_ec(formula: Formula, ec: Polynomial) -> Self {
        ConstrainedFormula {
            formula,
            ec: Some(ec),
        }
    }

    /// Squarefree basis of all atom polynomials, plus the subset of basis
    /// elements dividing the designated constraint.
    pub fn basis_and_ec(&self) -> Result<(Vec<Polynomial>, Vec<Polynomial>), CadError> {
        let mut polys = self.formula.polynomials();
        if let Some(ec) = &self.ec {
            if !polys.iter().any(|p| p.similar(ec)) {
                polys.push(ec.clone());
            }
        }
        let basis = squarefree_basis(&polys);
        let ec_set = match &self.ec {
            None => Vec::new(),
            Some(ec) => basis
                .iter()
                .filter(|b| divides(b, ec))
                .cloned()
                .collect(),
        };
        if self.ec.is_some() && ec_set.is_empty() {
            return Err(CadError::invalid(
                "designated equational constraint reduced to a constant",
            ));
        }
        Ok((basis, ec_set))
    }
}

fn divides(d: &Polynomial, f: &Polynomial) -> bool {
    f.exact_div(d).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    fn order() -> VarOrder {
        VarOrder::new(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn auto_ec_single_conjunct() {
        let o = order();
        let f = parse::formula("x^2+y^2-1=0 /\\ x<0", &o).unwrap();
        let ec = f.auto_equational_constraint().unwrap();
        assert_eq!(ec, parse::polynomial("x^2+y^2-1", &o).unwrap());
    }

    #[test]
    fn auto_ec_product_over_disjunction() {
        let o = order();
        let f = parse::formula("(x-1=0 /\\ y>0) \\/ (x+1=0 /\\ y<0)", &o).unwrap();
        let ec = f.auto_equational_constraint().unwrap();
        let want = parse::polynomial("(x-1)(x+1)", &o).unwrap();
        assert!(ec.similar(&want));
    }

    #[test]
    fn auto_ec_rejects_ambiguity() {
        let o = order();
        let f = parse::formula("x=0 /\\ y=0", &o).unwrap();
        assert!(f.auto_equational_constraint().is_err());
        let g = parse::formula("x<0 \\/ y=0", &o).unwrap();
        assert!(g.auto_equational_constraint().is_err());
    }

    #[test]
    fn de_morgan_on_rational_points() {
        let o = order();
        let a = parse::formula("~(x>0 /\\ y>0)", &o).unwrap();
        let b = parse::formula("~(x>0) \\/ ~(y>0)", &o).unwrap();
        for (px, py) in [(1i64, 1i64), (1, -1), (-1, 1), (-2, -3), (0, 5)] {
            let sample = vec![
                crate::sample::Coord::rational(crate::num::rat(px)),
                crate::sample::Coord::rational(crate::num::rat(py)),
            ];
            assert_eq!(a.evaluate(&sample), b.evaluate(&sample));
        }
    }
}
