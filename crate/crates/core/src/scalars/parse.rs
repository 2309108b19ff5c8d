//! Recursive-descent parser for scalar text: integers, `eta`, `+ - * / ^`
//! and parentheses.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{FieldDescriptor, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Eta,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Int(digits.parse().map_err(|_| "bad integer".to_string())?));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..=i].iter().collect();
                if word != "eta" {
                    return Err(format!("unknown identifier `{word}`"));
                }
                out.push(Token::Eta);
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    field: FieldDescriptor,
    eta: Option<&'a Scalar>,
}

type PResult = Result<Scalar, String>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> PResult {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.try_add(&self.term()?).map_err(|e| e.to_string())?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?).map_err(|e| e.to_string())?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc.try_mul(&self.unary()?).map_err(|e| e.to_string())?;
                }
                Some(Token::Slash) => {
                    self.bump();
                    acc = acc.checked_div(&self.unary()?).map_err(|e| e.to_string())?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Token::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let exp = match self.bump() {
            Some(Token::Int(n)) => i64::try_from(n).map_err(|_| "exponent too large".to_string())?,
            _ => return Err("expected integer exponent after `^`".into()),
        };
        base.pow(if negative { -exp } else { exp }).map_err(|e| e.to_string())
    }

    fn atom(&mut self) -> PResult {
        match self.bump() {
            Some(Token::Int(n)) => Ok(Scalar::from_rational(self.field, BigRational::from_integer(n))),
            Some(Token::Eta) => {
                if self.field.generic_eta() {
                    Ok(Scalar::eta(self.field).expect("generic field"))
                } else if let Some(v) = self.eta {
                    v.cast_constant(self.field).map_err(|e| e.to_string())
                } else {
                    Err(ScalarError::UnboundEta.to_string())
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err("missing `)`".into()),
                }
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

/// Parse scalar text into `field`. In a non-generic field, `eta` is replaced
/// by `eta_value` when one is given.
pub fn parse_scalar(
    input: &str,
    field: FieldDescriptor,
    eta_value: Option<&Scalar>,
) -> Result<Scalar, ScalarError> {
    let fail = |message: String| ScalarError::Parse { input: input.to_string(), message };
    let tokens = tokenize(input).map_err(fail)?;
    if tokens.is_empty() {
        return Err(fail("empty input".into()));
    }
    let mut parser = Parser { tokens, pos: 0, field, eta: eta_value };
    let value = parser.expr().map_err(fail)?;
    if parser.pos != parser.tokens.len() {
        return Err(fail(format!("trailing input at token {}", parser.pos)));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_powers() {
        let f = FieldDescriptor::rational_functions();
        let a = parse_scalar("2*eta^2 - 3*(eta+1)/2", f, None).unwrap();
        let b = parse_scalar("(4*eta^2-3*eta-3)/2", f, None).unwrap();
        assert_eq!(a, b);
        let c = parse_scalar("eta^-1", f, None).unwrap();
        assert_eq!(c, parse_scalar("1/eta", f, None).unwrap());
    }

    #[test]
    fn eta_substitution() {
        let q = FieldDescriptor::rationals();
        let v = Scalar::from_i64(q, -1);
        let x = parse_scalar("(eta+3)/2", q, Some(&v)).unwrap();
        assert_eq!(x, Scalar::one(q));
        assert!(matches!(parse_scalar("eta", q, None), Err(ScalarError::Parse { .. })));
    }

    #[test]
    fn rejects_garbage() {
        let f = FieldDescriptor::rational_functions();
        for bad in ["", "x+1", "(eta", "1/0", "eta^", "2 3"] {
            assert!(parse_scalar(bad, f, None).is_err(), "{bad}");
        }
    }
}
