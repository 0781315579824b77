//! Recursive-descent parser for polynomial text like `3/2*x1^2*x3 - x2 + 1`.
//!
//! Grammar: sums of products of powered atoms. Atoms are rational literals
//! (`3`, `0.4`, `2/5`), declared variable names, or parenthesized
//! subexpressions. `^` takes a non-negative integer exponent. Division is
//! only part of a rational literal.

use num_rational::BigRational;
use num_traits::One;

use crate::monomial::Monomial;
use crate::polynomial::Polynomial;
use crate::rational::parse_rational;
use crate::vars::Vars;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        i += 1;
                    }
                } else if i < bytes.len()
                    && bytes[i] == b'/'
                    && i + 1 < bytes.len()
                    && (bytes[i + 1] as char).is_ascii_digit()
                {
                    i += 1;
                    while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        i += 1;
                    }
                }
                tokens.push(Token::Number(parse_rational(&input[start..i])?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(input[start..i].to_string()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a Vars,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while let Some(t) = self.peek() {
            match t {
                Token::Plus => {
                    self.pos += 1;
                }
                Token::Minus => {
                    negate = !negate;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn signed_term(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while let Some(Token::Minus | Token::Plus) = self.peek() {
            if let Some(Token::Minus) = self.peek() {
                negate = !negate;
            }
            self.pos += 1;
        }
        let t = self.term()?;
        Ok(if negate { -&t } else { t })
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.bump() {
                Some(Token::Number(q)) if q.is_integer() && *q.numer() >= 0.into() => {
                    u32::try_from(q.to_integer())
                        .map_err(|_| Error::Parse("exponent too large".into()))?
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected a non-negative integer exponent, found {other:?}"
                    )))
                }
            };
            let mut acc = Polynomial::one(self.vars.arity());
            for _ in 0..e {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Token::Number(q)) => Ok(Polynomial::constant(self.vars.arity(), q)),
            Some(Token::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(Polynomial::variable(self.vars.arity(), i)),
                None => Err(Error::Parse(format!("unknown variable `{name}`"))),
            },
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(Error::Parse("unbalanced parentheses".into())),
                }
            }
            Some(Token::Minus) => {
                let f = self.factor()?;
                Ok(-&f)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_polynomial(input: &str, vars: &Vars) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser { tokens, pos: 0, vars };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input after position {}",
            parser.pos
        )));
    }
    Ok(p)
}

/// Parse a single monic monomial such as `x1*x4^2`.
pub fn parse_monomial(input: &str, vars: &Vars) -> Result<Monomial> {
    let p = parse_polynomial(input, vars)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if c.is_one() => Ok(m.clone()),
        _ => Err(Error::Parse(format!("`{input}` is not a monic monomial"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int as q, from_ratio};

    fn vars() -> Vars {
        Vars::new(vec!["x1", "x2", "x3"]).unwrap()
    }

    #[test]
    fn parses_spec_syntax() {
        let f = parse_polynomial("3/2*x1^2*x3 - x2 + 1", &vars()).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.coefficient(&Monomial::new(vec![2, 0, 1])), from_ratio(3, 2));
        assert_eq!(f.coefficient(&Monomial::new(vec![0, 1, 0])), q(-1));
        assert_eq!(f.coefficient(&Monomial::unit(3)), q(1));
    }

    #[test]
    fn parses_parens_and_decimals() {
        let f = parse_polynomial("0.5*(1 - x1*x2*x3)", &vars()).unwrap();
        assert_eq!(f.coefficient(&Monomial::unit(3)), from_ratio(1, 2));
        assert_eq!(f.coefficient(&Monomial::new(vec![1, 1, 1])), from_ratio(-1, 2));
        let g = parse_polynomial("(x1 + 1)^2", &vars()).unwrap();
        assert_eq!(g.coefficient(&Monomial::new(vec![1, 0, 0])), q(2));
    }

    #[test]
    fn round_trips_through_printer() {
        let inputs = ["x1^2*x2 - 2*x3 + 5/3", "-x1 + x2", "0"];
        for s in inputs {
            let f = parse_polynomial(s, &vars()).unwrap();
            let printed = f.to_string_with(&vars(), &crate::TermOrder::DegRevLex);
            let g = parse_polynomial(&printed, &vars()).unwrap();
            assert_eq!(f, g, "round trip failed for `{s}` -> `{printed}`");
        }
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "x9", "x1 +", "x1^x2", "(x1", "x1/2", "2 x1"] {
            assert!(parse_polynomial(bad, &vars()).is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn monomial_parsing() {
        let m = parse_monomial("x1*x3^2", &vars()).unwrap();
        assert_eq!(m, Monomial::new(vec![1, 0, 2]));
        assert!(parse_monomial("2*x1", &vars()).is_err());
        assert!(parse_monomial("x1+x2", &vars()).is_err());
    }
}
