//! Recursive-descent parser for the expression language used on the command
//! line:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary | juxtaposed unary)*
//! unary := '-'? power
//! power := atom ('^' integer)*        right-associative, integer exponents only
//! atom  := integer | 'x' | 't' | '(' expr ')'
//! ```
//!
//! Juxtaposition (`3x`, `(1/2)x`, `(t + 1)x^2`) multiplies; it is only
//! recognised before `x`, `t` or `(`. In F_{p^k}, `t` is the class of the
//! modulus variable, a constant.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Integer(BigInt),
    Var,
    Generator,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
    Group(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("digits"))));
                continue;
            }
            'x' | 't' => Tok::Ident(c),
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Syntax { pos: i, msg: format!("unexpected character `{other}`") });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Ident(_) | Tok::LParen => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.power()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let mut exps = Vec::new();
        while *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Int(n) => exps.push(n.to_u64().ok_or(Error::Syntax {
                    pos,
                    msg: "exponent too large".into(),
                })?),
                _ => return Err(Error::NonIntegerExponent { pos }),
            }
        }
        let mut e = exps.pop().expect("at least one exponent");
        while let Some(b) = exps.pop() {
            let overflow = || Error::Syntax { pos: 0, msg: "exponent too large".into() };
            let e32 = u32::try_from(e).map_err(|_| overflow())?;
            e = b.checked_pow(e32).ok_or_else(overflow)?;
        }
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Integer(n)),
            Tok::Ident('x') => Ok(Expr::Var),
            Tok::Ident(_) => Ok(Expr::Generator),
            Tok::LParen => {
                let inner = self.expr()?;
                let pos = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(Expr::Group(Box::new(inner))),
                    _ => Err(Error::Syntax { pos, msg: "expected `)`".into() }),
                }
            }
            Tok::End => Err(Error::Syntax { pos, msg: "unexpected end of input".into() }),
            other => Err(Error::Syntax { pos, msg: format!("unexpected token {other:?}") }),
        }
    }
}

/// Parses text into an AST without evaluating it.
pub fn parse_ast(text: &str) -> Result<Expr> {
    let mut parser = Parser { toks: lex(text)?, at: 0 };
    let e = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(Error::Syntax { pos: parser.pos(), msg: "trailing input".into() });
    }
    Ok(e)
}

struct Eval {
    field: Field,
    /// Which identifier plays the role of the indeterminate.
    variable: char,
}

impl Eval {
    fn eval(&self, e: &Expr) -> Result<RationalFunction> {
        Ok(match e {
            Expr::Integer(n) => RationalFunction::constant(self.field.from_bigint(n)),
            Expr::Var => self.ident('x')?,
            Expr::Generator => self.ident('t')?,
            Expr::Neg(a) => -&self.eval(a)?,
            Expr::Add(a, b) => &self.eval(a)? + &self.eval(b)?,
            Expr::Sub(a, b) => &self.eval(a)? - &self.eval(b)?,
            Expr::Mul(a, b) => &self.eval(a)? * &self.eval(b)?,
            Expr::Div(a, b) => self.eval(a)?.checked_div(&self.eval(b)?)?,
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                RationalFunction::new(base.numerator().pow(*k), base.denominator().pow(*k))?
            }
            Expr::Group(a) => self.eval(a)?,
        })
    }

    fn ident(&self, name: char) -> Result<RationalFunction> {
        if name == self.variable {
            return Ok(RationalFunction::x(self.field));
        }
        match (name, self.field.generator()) {
            ('t', Some(g)) => Ok(RationalFunction::constant(g)),
            _ => Err(Error::Syntax { pos: 0, msg: format!("`{name}` is not defined over {}", self.field) }),
        }
    }
}

/// Parses a rational function in `x` over `field`.
pub fn parse_expression(text: &str, field: Field) -> Result<RationalFunction> {
    Eval { field, variable: 'x' }.eval(&parse_ast(text)?)
}

/// Parses a polynomial whose indeterminate is written `var`.
pub fn parse_polynomial_in(text: &str, field: Field, var: char) -> Result<Polynomial> {
    let f = Eval { field, variable: var }.eval(&parse_ast(text)?)?;
    match f.as_polynomial() {
        Some(p) => Ok(p.clone()),
        None => Err(Error::Syntax { pos: 0, msg: format!("`{text}` is not a polynomial") }),
    }
}

/// Parses a field constant such as `-3/2` or `t + 1`.
pub fn parse_constant(text: &str, field: Field) -> Result<FieldElement> {
    parse_expression(text, field)?.constant_value().ok_or(Error::NotConstant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn documented_examples() {
        let f3 = make_field("F3").unwrap();
        let f = parse_expression("x^3 - x", f3).unwrap();
        assert_eq!(f.as_polynomial().unwrap(), &Polynomial::from_i64s(f3, &[0, 2, 0, 1]));
        let q = Field::Rational;
        let g = parse_expression("(x^6+1)/x^2", q).unwrap();
        assert_eq!(g.numerator(), &Polynomial::from_i64s(q, &[1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(g.denominator(), &Polynomial::from_i64s(q, &[0, 0, 1]));
        let h = parse_expression("1/2*x", q).unwrap();
        assert_eq!(h.as_polynomial().unwrap(), &Polynomial::linear(q.one() / q.from_i64(2), q.zero()));
    }

    #[test]
    fn precedence() {
        let q = Field::Rational;
        let e = |s| parse_expression(s, q).unwrap();
        assert_eq!(e("-x^2"), e("-(x^2)"));
        assert_eq!(e("2x^2"), e("2*(x^2)"));
        assert_eq!(e("2^3^2"), e("512"));
        assert_eq!(e("1/2/x"), e("1/(2*x)"));
        assert_eq!(e("(1/2)x - 1/2"), e("(x-1)/2"));
        assert_eq!(e("2*-x"), e("-2*x"));
    }

    #[test]
    fn errors() {
        let q = Field::Rational;
        assert!(matches!(parse_expression("x +", q), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expression("x $ 1", q), Err(Error::Syntax { pos: 2, .. })));
        assert_eq!(parse_expression("1/(x-x)", q), Err(Error::DivisionByZeroFunction));
        assert_eq!(parse_expression("x^x", q), Err(Error::NonIntegerExponent { pos: 2 }));
        assert_eq!(parse_expression("x^(1/2)", q), Err(Error::NonIntegerExponent { pos: 2 }));
        assert!(matches!(parse_expression("t", q), Err(Error::Syntax { .. })));
        assert_eq!(parse_constant("x+1", q), Err(Error::NotConstant));
        let f5 = make_field("F5").unwrap();
        assert_eq!(parse_expression("1/5", f5), Err(Error::DivisionByZeroFunction));
    }

    #[test]
    fn extension_constants() {
        let f4 = make_field("F4 mod t^2+t+1").unwrap();
        let t = f4.generator().unwrap();
        assert_eq!(parse_constant("t+1", f4).unwrap(), &t + &f4.one());
        assert_eq!(parse_constant("t^2", f4).unwrap(), &t + &f4.one());
        let f = parse_expression("(t + 1)x^2 + tx", f4).unwrap();
        assert_eq!(f.to_string(), "(t + 1)x^2 + (t)x");
    }
}
