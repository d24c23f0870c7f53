//! Text formats: polynomial expressions, Tarski formulae and problem files.
//!
//! Polynomial syntax: integer or rational (`p/q`) coefficients, `^` for
//! exponents, `*` optional (juxtaposition multiplies), parentheses and unary
//! minus.  Formula syntax: relations `= != < <= > >=`, connectives
//! `/\  \/  ~`.
//!
//! Problem files are line based:
//!
//! ```text
//! # comment
//! vars: x,y,z
//! ec: x^2+y^2-1        (optional, or `ec: auto`)
//! phi: x^2+y^2-1=0 /\ x<0
//! phi: ... ; ec= ...   (several phi lines form a formula list)
//! ```

use crate::error::CadError;
use crate::formula::{Formula, Rel};
use crate::num::{Int, Rat};
use crate::poly::Polynomial;
use crate::vars::VarOrder;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    And,
    Or,
    Not,
    Rel(Rel),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line,
            col: 1,
        }
    }

    fn err(&self, msg: impl Into<String>) -> CadError {
        CadError::Syntax {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.pos];
        self.pos += 1;
        self.col += 1;
        c
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<u8> {
        self.src.get(self.pos + 1).copied()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, CadError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            let (line, col) = (self.line, self.col);
            let tok = match c {
                b' ' | b'\t' | b'\r' => {
                    self.bump();
                    continue;
                }
                b'0'..=b'9' => {
                    let mut s = String::new();
                    while matches!(self.peek(), Some(b'0'..=b'9')) {
                        s.push(self.bump() as char);
                    }
                    Tok::Int(s.parse().unwrap())
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    let mut s = String::new();
                    while matches!(self.peek(), Some(b'a'..=b'z' | b'A'..=b'Z' | b'_' | b'0'..=b'9'))
                    {
                        s.push(self.bump() as char);
                    }
                    Tok::Ident(s)
                }
                b'+' => {
                    self.bump();
                    Tok::Plus
                }
                b'-' => {
                    self.bump();
                    Tok::Minus
                }
                b'*' => {
                    self.bump();
                    Tok::Star
                }
                b'^' => {
                    self.bump();
                    Tok::Caret
                }
                b'(' => {
                    self.bump();
                    Tok::LParen
                }
                b')' => {
                    self.bump();
                    Tok::RParen
                }
                b'~' => {
                    self.bump();
                    Tok::Not
                }
                b'/' => {
                    if self.peek2() == Some(b'\\') {
                        self.bump();
                        self.bump();
                        Tok::And
                    } else {
                        self.bump();
                        Tok::Slash
                    }
                }
                b'\\' => {
                    if self.peek2() == Some(b'/') {
                        self.bump();
                        self.bump();
                        Tok::Or
                    } else {
                        return Err(self.err("stray `\\`"));
                    }
                }
                b'=' => {
                    self.bump();
                    Tok::Rel(Rel::Eq)
                }
                b'!' => {
                    if self.peek2() == Some(b'=') {
                        self.bump();
                        self.bump();
                        Tok::Rel(Rel::Ne)
                    } else {
                        return Err(self.err("expected `!=`"));
                    }
                }
                b'<' => {
                    if self.peek2() == Some(b'=') {
                        self.bump();
                        self.bump();
                        Tok::Rel(Rel::Le)
                    } else {
                        self.bump();
                        Tok::Rel(Rel::Lt)
                    }
                }
                b'>' => {
                    if self.peek2() == Some(b'=') {
                        self.bump();
                        self.bump();
                        Tok::Rel(Rel::Ge)
                    } else {
                        self.bump();
                        Tok::Rel(Rel::Gt)
                    }
                }
                other => {
                    return Err(self.err(format!("unexpected character `{}`", other as char)));
                }
            };
            out.push(Spanned { tok, line, col });
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    order: &'a VarOrder,
    line: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn bump(&mut self) -> Option<&Spanned> {
        let s = self.toks.get(self.pos);
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    fn err_here(&self, msg: impl Into<String>) -> CadError {
        let (line, col) = self
            .toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or_else(|| {
                self.toks
                    .last()
                    .map(|s| (s.line, s.col + 1))
                    .unwrap_or((self.line, 1))
            });
        CadError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), CadError> {
        if self.peek() == Some(t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err_here(format!("expected {}", what)))
        }
    }

    // ---- polynomial expressions ----

    fn expr(&mut self) -> Result<Polynomial, CadError> {
        let mut neg = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            neg = true;
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, CadError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                // juxtaposition
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, CadError> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.bump().map(|s| s.tok.clone()) {
                Some(Tok::Int(e)) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.err_here("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => {
                    self.pos -= 1;
                    Err(self.err_here("expected integer exponent"))
                }
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial, CadError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                // rational literal p/q
                if self.peek() == Some(&Tok::Slash) {
                    if let Some(Tok::Int(d)) = self.toks.get(self.pos + 1).map(|s| s.tok.clone()) {
                        self.pos += 2;
                        if d == Int::from(0) {
                            return Err(self.err_here("zero denominator"));
                        }
                        return Ok(Polynomial::constant(self.order, Rat::new(n, d)));
                    }
                }
                Ok(Polynomial::constant(self.order, Rat::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                let v = self.order.index_of(&name).ok_or_else(|| {
                    self.err_here(format!("unknown variable `{}`", name))
                })?;
                self.pos += 1;
                Ok(Polynomial::var(self.order, v))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            _ => Err(self.err_here("expected a polynomial term")),
        }
    }

    // ---- formulae ----

    fn formula(&mut self) -> Result<Formula, CadError> {
        let mut items = vec![self.conjunction()?];
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            items.push(self.conjunction()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Formula::Or(items)
        })
    }

    fn conjunction(&mut self) -> Result<Formula, CadError> {
        let mut items = vec![self.unary()?];
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            items.push(self.unary()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Formula::And(items)
        })
    }

    fn unary(&mut self) -> Result<Formula, CadError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Some(Tok::LParen) => {
                // try an atom first (the parenthesis may open a polynomial)
                let save = self.pos;
                match self.atom() {
                    Ok(a) => Ok(a),
                    Err(_) => {
                        self.pos = save;
                        self.pos += 1;
                        let f = self.formula()?;
                        self.expect(&Tok::RParen, "`)`")?;
                        Ok(f)
                    }
                }
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, CadError> {
        let lhs = self.expr()?;
        let rel = match self.peek() {
            Some(Tok::Rel(r)) => *r,
            _ => return Err(self.err_here("expected a relation")),
        };
        self.pos += 1;
        let rhs = self.expr()?;
        Ok(Formula::Atom(lhs.sub(&rhs).canonical_keep_sign(), rel))
    }
}

fn parser<'a>(text: &str, order: &'a VarOrder, line: usize) -> Result<Parser<'a>, CadError> {
    let toks = Lexer::new(text, line).tokens()?;
    Ok(Parser {
        toks,
        pos: 0,
        order,
        line,
    })
}

/// Parse a polynomial in the given variable order.
pub fn polynomial(text: &str, order: &VarOrder) -> Result<Polynomial, CadError> {
    let mut p = parser(text, order, 1)?;
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err_here("trailing input after polynomial"));
    }
    Ok(e)
}

/// Parse a quantifier-free formula in the given variable order.
pub fn formula(text: &str, order: &VarOrder) -> Result<Formula, CadError> {
    formula_at(text, order, 1)
}

fn formula_at(text: &str, order: &VarOrder, line: usize) -> Result<Formula, CadError> {
    let mut p = parser(text, order, line)?;
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(p.err_here("trailing input after formula"));
    }
    Ok(f)
}

/// Equational-constraint designation in a problem file.
#[derive(Debug, Clone, PartialEq)]
pub enum EcSpec {
    Auto,
    Explicit(Polynomial),
}

/// A parsed problem file: variable order plus one or more formulae, each with
/// an optional constraint designation.
#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub order: VarOrder,
    pub formulas: Vec<(Formula, Option<EcSpec>)>,
}

impl ProblemFile {
    pub fn is_list(&self) -> bool {
        self.formulas.len() > 1
    }
}

/// Parse a problem file (see module docs for the format).
pub fn problem_file(text: &str) -> Result<ProblemFile, CadError> {
    let mut order: Option<VarOrder> = None;
    let mut global_ec: Option<(String, usize)> = None;
    let mut phi_lines: Vec<(String, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if order.is_some() {
                return Err(CadError::Syntax {
                    line: lineno,
                    col: 1,
                    msg: "duplicate vars: line".into(),
                });
            }
            let names: Vec<String> = rest
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            order = Some(VarOrder::new(names)?);
        } else if let Some(rest) = line.strip_prefix("ec:") {
            global_ec = Some((rest.trim().to_string(), lineno));
        } else if let Some(rest) = line.strip_prefix("phi:") {
            phi_lines.push((rest.trim().to_string(), lineno));
        } else {
            return Err(CadError::Syntax {
                line: lineno,
                col: 1,
                msg: "expected `vars:`, `ec:` or `phi:`".into(),
            });
        }
    }

    let order = order.ok_or_else(|| CadError::invalid("missing vars: line"))?;
    if phi_lines.is_empty() {
        return Err(CadError::invalid("missing phi: line"));
    }

    let parse_ec = |spec: &str, lineno: usize| -> Result<EcSpec, CadError> {
        if spec == "auto" {
            Ok(EcSpec::Auto)
        } else {
            let mut p = parser(spec, &order, lineno)?;
            let poly = p.expr()?;
            if p.pos != p.toks.len() {
                return Err(p.err_here("trailing input after polynomial"));
            }
            Ok(EcSpec::Explicit(poly))
        }
    };

    let mut formulas = Vec::new();
    for (body, lineno) in &phi_lines {
        let (ftext, ec) = match body.split_once(';') {
            Some((f, annot)) => {
                let annot = annot.trim();
                let spec = annot.strip_prefix("ec=").ok_or_else(|| CadError::Syntax {
                    line: *lineno,
                    col: 1,
                    msg: "expected `ec=` after `;`".into(),
                })?;
                (f.trim(), Some(parse_ec(spec.trim(), *lineno)?))
            }
            None => (body.as_str(), None),
        };
        let f = formula_at(ftext, &order, *lineno)?;
        formulas.push((f, ec));
    }

    // a global ec: applies to a single-formula problem without inline ec
    if let Some((spec, lineno)) = global_ec {
        if formulas.len() != 1 {
            return Err(CadError::invalid(
                "global ec: only applies to single-formula problems; use per-line `; ec=`",
            ));
        }
        if formulas[0].1.is_none() {
            formulas[0].1 = Some(parse_ec(&spec, lineno)?);
        }
    }

    Ok(ProblemFile { order, formulas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};

    fn order() -> VarOrder {
        VarOrder::new(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn parses_basic_polynomials() {
        let o = order();
        let p = polynomial("x^2+y^2-1", &o).unwrap();
        assert_eq!(p.degree(0), 2);
        assert_eq!(p.degree(1), 2);
        assert_eq!(p.eval(&[rat(1), rat(1)]), rat(1));
        // implicit multiplication and rational coefficients
        let q = polynomial("1/2 x y - 3(x+1)", &o).unwrap();
        assert_eq!(q.eval(&[rat(2), rat(3)]), rat(3) - rat(9));
        let r = polynomial("-x^3", &o).unwrap();
        assert_eq!(r.eval(&[rat(2), rat(0)]), rat(-8));
        assert_eq!(
            polynomial("2x", &o).unwrap().eval(&[ratio(1, 2), rat(0)]),
            rat(1)
        );
    }

    #[test]
    fn syntax_error_carries_position() {
        let o = order();
        let err = formula("x^2+=1", &o).unwrap_err();
        match err {
            CadError::Syntax { line, col, .. } => {
                assert_eq!(line, 1);
                assert_eq!(col, 5);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unknown_variable_is_reported() {
        let o = order();
        assert!(matches!(
            polynomial("x + z", &o),
            Err(CadError::Syntax { .. })
        ));
    }

    #[test]
    fn parses_formula_tree() {
        let o = order();
        let f = formula("x^2+y^2-1=0 /\\ x<0", &o).unwrap();
        match &f {
            Formula::And(items) => assert_eq!(items.len(), 2),
            other => panic!("expected conjunction, got {other:?}"),
        }
        // parenthesised sub-formulae and negation
        let g = formula("(x=0 \\/ y=0) /\\ ~(x>1)", &o).unwrap();
        assert!(matches!(g, Formula::And(_)));
    }

    #[test]
    fn formula_round_trips_through_display() {
        let o = order();
        for text in [
            "x^2 + y^2 - 1 = 0 /\\ x < 0",
            "(x - 1 = 0 /\\ y > 0) \\/ (x + 1 = 0 /\\ y < 0)",
            "~(x = 0) /\\ (y >= 2 \\/ y <= -2)",
            "2*x^2*y - 1/2 != 0",
        ] {
            let f = formula(text, &o).unwrap();
            let printed = f.to_string();
            let g = formula(&printed, &o).unwrap();
            assert_eq!(f, g, "round trip failed for `{text}` -> `{printed}`");
        }
    }

    #[test]
    fn parses_problem_file() {
        let text = "# circle and line\nvars: x,y\nec: auto\nphi: x^2+y^2-1=0 /\\ x<0\n";
        let pf = problem_file(text).unwrap();
        assert_eq!(pf.order.names(), &["x".to_string(), "y".to_string()]);
        assert_eq!(pf.formulas.len(), 1);
        assert_eq!(pf.formulas[0].1, Some(EcSpec::Auto));

        let multi = "vars: x,y\nphi: x-1=0 /\\ y>0 ; ec= x-1\nphi: x+1=0 /\\ y<0 ; ec= auto\n";
        let pf = problem_file(multi).unwrap();
        assert!(pf.is_list());
        assert_eq!(pf.formulas.len(), 2);
    }
}
