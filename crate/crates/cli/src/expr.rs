//! The expression language: lexer, parser, printer and evaluator.
//!
//! ```text
//! sum     := unary (("+" | "-") unary)*
//! unary   := "-" unary | product
//! product := power (("*" | "/") power)*
//! power   := atom ("^" "-"? INT)?
//! atom    := INT | "i" | "t" | "q" | "a" | "b" | "c" | "d" | "s" | "zeta" | "(" sum ")"
//! ```

use std::fmt;

use qsuper_core::superalg::{Element, Gen, Monomial, Ring};
use qsuper_core::{Error, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    A,
    B,
    C,
    D,
    S,
    T,
    I,
    Q,
    Zeta,
}

impl Sym {
    pub const ALL: [Sym; 9] = [Sym::A, Sym::B, Sym::C, Sym::D, Sym::S, Sym::T, Sym::I, Sym::Q, Sym::Zeta];

    pub fn name(self) -> &'static str {
        match self {
            Sym::A => "a",
            Sym::B => "b",
            Sym::C => "c",
            Sym::D => "d",
            Sym::S => "s",
            Sym::T => "t",
            Sym::I => "i",
            Sym::Q => "q",
            Sym::Zeta => "zeta",
        }
    }

    fn from_name(s: &str) -> Option<Sym> {
        Sym::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Sym(Sym),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Op(char),
    End,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let ch = bytes[k];
        if ch.is_ascii_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            let n = src[start..k]
                .parse::<u64>()
                .map_err(|_| ParseError { offset: start, message: "integer literal too large".into() })?;
            out.push((Tok::Int(n), start));
        } else if ch.is_ascii_alphabetic() {
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_alphanumeric() {
                k += 1;
            }
            out.push((Tok::Ident(src[start..k].to_string()), start));
        } else if b"+-*/^()".contains(&ch) {
            out.push((Tok::Op(ch as char), k));
            k += 1;
        } else {
            let c = src[k..].chars().next().unwrap_or('?');
            return Err(ParseError { offset: k, message: format!("unexpected character '{c}'") });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn eat(&mut self, op: char) -> bool {
        if *self.peek() == Tok::Op(op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), message: message.into() })
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.unary()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.product()
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
            } else if self.eat('/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.power()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        match *self.peek() {
            Tok::Int(n) => {
                let e = i64::try_from(n).or_else(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => self.error("expected an integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, off) = self.toks[self.pos].clone();
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Tok::Ident(name) => match Sym::from_name(&name) {
                Some(s) => {
                    self.pos += 1;
                    Ok(Expr::Sym(s))
                }
                None => Err(ParseError { offset: off, message: format!("unknown symbol '{name}'") }),
            },
            Tok::Op('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(e)
            }
            Tok::End => self.error("expected an expression, found end of input"),
            Tok::Op(c) => self.error(format!("expected an expression, found '{c}'")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Neg(_) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Pow(..) => 3,
        Expr::Int(_) | Expr::Sym(_) => 4,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "(")?;
        write_at(f, e, 0)?;
        return write!(f, ")");
    }
    match e {
        Expr::Int(n) => write!(f, "{n}"),
        Expr::Sym(s) => write!(f, "{}", s.name()),
        Expr::Neg(x) => {
            write!(f, "-")?;
            write_at(f, x, 1)
        }
        Expr::Add(x, y) | Expr::Sub(x, y) => {
            write_at(f, x, 0)?;
            write!(f, "{}", if matches!(e, Expr::Add(..)) { " + " } else { " - " })?;
            write_at(f, y, 1)
        }
        Expr::Mul(x, y) | Expr::Div(x, y) => {
            write_at(f, x, 2)?;
            write!(f, "{}", if matches!(e, Expr::Mul(..)) { "*" } else { "/" })?;
            write_at(f, y, 3)
        }
        Expr::Pow(x, n) => {
            write_at(f, x, 4)?;
            write!(f, "^{n}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(f, self, 0)
    }
}

/// The value of an element with no generator part.
pub fn as_scalar(x: &Element) -> Option<Scalar> {
    let mut out = Scalar::zero();
    for (m, c) in x.terms() {
        if *m != Monomial::ONE {
            return None;
        }
        out = c.clone();
    }
    Some(out)
}

fn gen(ring: Ring, g: Gen) -> Result<Element, Error> {
    Element::gen(ring, g)
}

/// Evaluate in `ring`. Division and negative powers need a scalar divisor.
pub fn eval(e: &Expr, ring: Ring) -> Result<Element, Error> {
    let scalar = |c: Scalar| Element::scalar(ring, c);
    Ok(match e {
        Expr::Int(n) => {
            let n = i64::try_from(*n).map_err(|_| Error::InvalidParameter("integer literal too large".into()))?;
            scalar(Scalar::int(n))
        }
        Expr::Sym(s) => match s {
            Sym::A => gen(ring, Gen::A)?,
            Sym::B => gen(ring, Gen::B)?,
            Sym::C => gen(ring, Gen::C)?,
            Sym::D => gen(ring, Gen::D)?,
            Sym::S => gen(ring, Gen::Sigma)?,
            Sym::T => scalar(Scalar::t()),
            Sym::I => scalar(Scalar::i()),
            Sym::Q => scalar(Scalar::q()),
            Sym::Zeta => gen(ring, Gen::B)?.mul(&gen(ring, Gen::C)?).mul(&gen(ring, Gen::Sigma)?).scale(&Scalar::t()),
        },
        Expr::Neg(x) => eval(x, ring)?.neg(),
        Expr::Add(x, y) => eval(x, ring)?.add(&eval(y, ring)?),
        Expr::Sub(x, y) => eval(x, ring)?.sub(&eval(y, ring)?),
        Expr::Mul(x, y) => eval(x, ring)?.try_mul(&eval(y, ring)?)?,
        Expr::Div(x, y) => {
            let d = as_scalar(&eval(y, ring)?)
                .ok_or_else(|| Error::InvalidParameter(format!("divisor {y} is not a scalar")))?;
            eval(x, ring)?.scale(&d.inv()?)
        }
        Expr::Pow(x, n) => {
            let base = eval(x, ring)?;
            if *n >= 0 {
                let n = u32::try_from(*n).map_err(|_| Error::InvalidParameter("exponent too large".into()))?;
                base.pow(n)
            } else {
                let c = as_scalar(&base)
                    .ok_or_else(|| Error::InvalidParameter(format!("negative power of non-scalar {x}")))?;
                scalar(c.pow(*n)?)
            }
        }
    })
}

/// Parse and evaluate.
pub fn element(src: &str, ring: Ring) -> Result<Element, crate::CliError> {
    let e = parse(src)?;
    Ok(eval(&e, ring)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("-a*b^2 + c").unwrap();
        assert_eq!(e.to_string(), "-a*b^2 + c");
        match e {
            Expr::Add(l, _) => assert!(matches!(*l, Expr::Neg(_))),
            _ => panic!("{e:?}"),
        }
        assert_eq!(parse("a - (b - c)").unwrap().to_string(), "a - (b - c)");
        assert_eq!(parse("(a*b)*c").unwrap().to_string(), "a*b*c");
        assert_eq!(parse("a*(b*c)").unwrap().to_string(), "a*(b*c)");
        assert_eq!(parse("t^-2").unwrap(), Expr::Pow(Box::new(Expr::Sym(Sym::T)), -2));
    }

    #[test]
    fn diagnostics() {
        assert_eq!(parse("a*(").unwrap_err().offset, 3);
        assert_eq!(parse("a b").unwrap_err().offset, 2);
        assert_eq!(parse("a + x").unwrap_err().offset, 4);
        assert_eq!(parse("a # b").unwrap_err().offset, 2);
        assert_eq!(parse("a^b").unwrap_err().offset, 2);
        assert_eq!(parse("").unwrap_err().offset, 0);
    }

    #[test]
    fn values() {
        let r = Ring::Asigma;
        assert_eq!(element("a*d + t*b*c", r).unwrap(), Element::g(r, Gen::Sigma));
        assert_eq!(element("s^2", r).unwrap(), Element::one(r));
        assert_eq!(element("q", r).unwrap(), element("-t^2", r).unwrap());
        assert_eq!(element("zeta", r).unwrap(), Element::zeta());
        assert_eq!(element("(1 - t^-2)/(1 - t^-4)", r).unwrap(), element("t^2/(t^2 + 1)", r).unwrap());
        assert!(element("a/b", r).is_err());
        assert!(element("s", Ring::B).is_err());
        assert!(element("1/(t - t)", r).is_err());
    }
}
