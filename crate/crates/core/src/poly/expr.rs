//! Parser for polynomial expressions such as `1/4*(-U^4 + V^4) + 13/100*U^2`.
//!
//! Grammar: sums and differences of products and quotients of powers; `^`
//! binds tighter than unary minus and takes a nonnegative integer exponent.
//! Division is only allowed by constants. Identifiers are looked up in an
//! [`Env`], which always knows `x` and `y`.

use std::collections::HashMap;

use num_traits::Zero;

use super::bi::BiPoly;
use super::rational::{parse_rational, Q};
use super::PolyError;

/// Named polynomials available to an expression.
#[derive(Clone, Debug)]
pub struct Env {
    names: HashMap<String, BiPoly>,
}

impl Default for Env {
    fn default() -> Self {
        let mut names = HashMap::new();
        names.insert("x".to_string(), BiPoly::x());
        names.insert("y".to_string(), BiPoly::y());
        Env { names }
    }
}

impl Env {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: BiPoly) -> Self {
        self.names.insert(name.to_string(), value);
        self
    }

    pub fn with_const(self, name: &str, value: Q) -> Self {
        self.with(name, BiPoly::constant(value))
    }

    pub fn insert(&mut self, name: &str, value: BiPoly) {
        self.names.insert(name.to_string(), value);
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, PolyError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected character {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    env: &'a Env,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> PolyError {
        PolyError::Parse(format!("{what} at token {}", self.pos))
    }

    fn sum(&mut self) -> Result<BiPoly, PolyError> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<BiPoly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.degx() > 0 || d.degy() > 0 || d.is_zero() {
                    return Err(self.err("division by a non-constant or zero"));
                }
                acc = acc.scale(&(Q::from_integer(1.into()) / d.coeff(0, 0)));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly, PolyError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly, PolyError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = match self.toks.get(self.pos) {
                Some(Tok::Num(s)) => s.parse::<u32>().map_err(|_| self.err("bad exponent"))?,
                _ => return Err(self.err("expected integer exponent")),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly, PolyError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                Ok(BiPoly::constant(parse_rational(&s)?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.env
                    .names
                    .get(&name)
                    .cloned()
                    .ok_or_else(|| PolyError::Parse(format!("unknown name {name:?}")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.err("expected a number, name or '('")),
        }
    }
}

/// Parses `src` into an exact polynomial in `x` and `y`.
pub fn parse_poly(src: &str, env: &Env) -> Result<BiPoly, PolyError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, env };
    let out = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses a constant expression such as `-7/50` or `(3/5)^2`.
pub fn parse_constant(src: &str, env: &Env) -> Result<Q, PolyError> {
    let p = parse_poly(src, env)?;
    if p.degx() > 0 || p.degy() > 0 {
        return Err(PolyError::Parse(format!("{src:?} is not a constant")));
    }
    Ok(if p.is_zero() { Q::zero() } else { p.coeff(0, 0) })
}

#[cfg(test)]
mod tests {
    use super::super::rational::{q, qi};
    use super::*;

    #[test]
    fn precedence_and_unary_minus() {
        let env = Env::new();
        let p = parse_poly("-x^2 + 2*(x - y/5)", &env).unwrap();
        assert_eq!(p.eval_exact(&qi(1), &qi(5)), qi(-1) + qi(2) * qi(0));
        assert_eq!(parse_constant("-2/5*3", &env).unwrap(), q(-6, 5));
        assert!(parse_constant("2^3^1", &env).is_err());
    }

    #[test]
    fn substitution_names() {
        let env = Env::new().with("U", parse_poly("x + 1", &Env::new()).unwrap()).with_const("a", q(1, 2));
        let p = parse_poly("a*U^2", &env).unwrap();
        assert_eq!(p.eval(1.0, 0.0), 2.0);
    }

    #[test]
    fn rejects_bad_input() {
        let env = Env::new();
        assert!(parse_poly("x / y", &env).is_err());
        assert!(parse_poly("x +", &env).is_err());
        assert!(parse_poly("z", &env).is_err());
        assert!(parse_poly("(x", &env).is_err());
        assert!(parse_poly("x $ y", &env).is_err());
    }
}
