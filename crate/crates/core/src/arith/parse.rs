//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ('+' | '-') factor | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | VAR | '(' expr ')'
//! ```
//!
//! Multiplication must be written out: `2x`, `x y` and `(x)(y)` are errors.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::bipoly::BiPoly;
use crate::error::ParseError;
use crate::{QBiPoly, Rational};

/// Default bound on the total degree of parsed input.
pub const MAX_INPUT_DEGREE: u32 = 64;

/// Parse with the default degree cap.
pub fn parse_poly(text: &str, vars: (&str, &str)) -> Result<QBiPoly, ParseError> {
    parse_poly_capped(text, vars, MAX_INPUT_DEGREE)
}

/// Parse, refusing any intermediate result of total degree above `cap`.
pub fn parse_poly_capped(
    text: &str,
    vars: (&str, &str),
    cap: u32,
) -> Result<QBiPoly, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        vars,
        cap,
        end: text.len(),
    };
    let out = p.expr()?;
    match p.peek() {
        None => Ok(out),
        Some(t) => Err(p.unexpected(t)),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'.') {
                    j += 1;
                }
                return Err(ParseError::NonRationalLiteral {
                    text: text[start..j].to_string(),
                    pos: start,
                });
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push(Token {
                tok: Tok::Int(n),
                pos: start,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(text[start..i].to_string()),
                pos: start,
            });
        } else if "+-*^/()".contains(c) {
            out.push(Token {
                tok: Tok::Op(c),
                pos: i,
            });
            i += 1;
        } else if c == '.' {
            return Err(ParseError::NonRationalLiteral {
                text: c.to_string(),
                pos: i,
            });
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(ParseError::Syntax {
                pos: i,
                message: format!("unexpected character '{ch}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: (&'a str, &'a str),
    cap: u32,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_op(&self) -> Option<char> {
        match self.peek() {
            Some(Token { tok: Tok::Op(c), .. }) => Some(*c),
            _ => None,
        }
    }

    fn unexpected(&self, t: &Token) -> ParseError {
        let message = match &t.tok {
            Tok::Int(_) | Tok::Ident(_) | Tok::Op('(') => {
                "implicit multiplication is not allowed; write '*'".to_string()
            }
            Tok::Op(c) => format!("unexpected '{c}'"),
        };
        ParseError::Syntax { pos: t.pos, message }
    }

    fn eof(&self) -> ParseError {
        ParseError::Syntax {
            pos: self.end,
            message: "unexpected end of input".to_string(),
        }
    }

    fn check_degree(&self, p: &QBiPoly, pos: usize) -> Result<(), ParseError> {
        match p.total_degree() {
            Some(d) if d > self.cap => Err(ParseError::DegreeTooLarge {
                degree: d as u64,
                cap: self.cap,
                pos,
            }),
            _ => Ok(()),
        }
    }

    fn expr(&mut self) -> Result<QBiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QBiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek_op() == Some('*') {
            let pos = self.peek().expect("op").pos;
            self.pos += 1;
            let rhs = self.factor()?;
            let deg = acc.total_degree().unwrap_or(0) + rhs.total_degree().unwrap_or(0);
            if deg > self.cap && !acc.is_zero() && !rhs.is_zero() {
                return Err(ParseError::DegreeTooLarge {
                    degree: deg as u64,
                    cap: self.cap,
                    pos,
                });
            }
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QBiPoly, ParseError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some('+') => {
                self.pos += 1;
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QBiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        let caret = self.peek().expect("op").pos;
        self.pos += 1;
        let exp = match self.peek().cloned() {
            Some(Token {
                tok: Tok::Int(n), ..
            }) => {
                self.pos += 1;
                n
            }
            Some(t) => {
                return Err(ParseError::Syntax {
                    pos: t.pos,
                    message: "exponent must be a nonnegative integer literal".to_string(),
                })
            }
            None => return Err(self.eof()),
        };
        if base.is_zero() || base.is_constant() {
            // Constants never raise the degree; keep the exponent bounded anyway.
            let e = exp.to_u32().ok_or(ParseError::DegreeTooLarge {
                degree: u64::MAX,
                cap: self.cap,
                pos: caret,
            })?;
            return Ok(base.pow(e));
        }
        let bd = base.total_degree().unwrap_or(0) as u64;
        let e = exp.to_u64().unwrap_or(u64::MAX);
        let deg = bd.saturating_mul(e);
        if deg > self.cap as u64 {
            return Err(ParseError::DegreeTooLarge {
                degree: deg,
                cap: self.cap,
                pos: caret,
            });
        }
        let out = base.pow(e as u32);
        self.check_degree(&out, caret)?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<QBiPoly, ParseError> {
        let t = self.peek().cloned().ok_or_else(|| self.eof())?;
        self.pos += 1;
        match t.tok {
            Tok::Int(n) => {
                if self.peek_op() == Some('/') {
                    self.pos += 1;
                    let d = match self.peek().cloned() {
                        Some(Token {
                            tok: Tok::Int(d), ..
                        }) => d,
                        Some(other) => {
                            return Err(ParseError::Syntax {
                                pos: other.pos,
                                message: "'/' is only allowed inside a rational literal a/b"
                                    .to_string(),
                            })
                        }
                        None => return Err(self.eof()),
                    };
                    self.pos += 1;
                    if d.is_zero() {
                        return Err(ParseError::NonRationalLiteral {
                            text: format!("{n}/{d}"),
                            pos: t.pos,
                        });
                    }
                    return Ok(BiPoly::constant(Rational::new(n, d)));
                }
                Ok(BiPoly::constant(Rational::from_integer(n)))
            }
            Tok::Ident(name) => {
                if name == self.vars.0 {
                    Ok(BiPoly::x())
                } else if name == self.vars.1 {
                    Ok(BiPoly::y())
                } else {
                    Err(ParseError::UnknownVariable { name, pos: t.pos })
                }
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                match self.peek_op() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => match self.peek() {
                        Some(t) => Err(self.unexpected(t)),
                        None => Err(ParseError::Syntax {
                            pos: self.end,
                            message: "missing ')'".to_string(),
                        }),
                    },
                }
            }
            Tok::Op('/') => Err(ParseError::Syntax {
                pos: t.pos,
                message: "'/' is only allowed inside a rational literal a/b".to_string(),
            }),
            Tok::Op(c) => Err(ParseError::Syntax {
                pos: t.pos,
                message: format!("unexpected '{c}'"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    const XY: (&str, &str) = ("x", "y");

    #[test]
    fn monomials_and_sums() {
        let p = parse_poly("x^4*y", XY).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert!(p.coeff(4, 1).is_one());
        let q = parse_poly("x^7 + x*y^4", XY).unwrap();
        assert_eq!(q.num_terms(), 2);
        assert!(parse_poly("0", XY).unwrap().is_zero());
        let r = parse_poly(" 3/6*x - (y - 1)^2 ", XY).unwrap();
        // Degree-first ordering puts y^2 first.
        assert_eq!(r.to_string(), "-y^2 + 1/2*x + 2*y - 1");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_poly("2x", XY),
            Err(ParseError::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_poly("x y", XY),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly("x + z", XY),
            Err(ParseError::UnknownVariable { pos: 4, .. })
        ));
        assert!(matches!(
            parse_poly("1.5*x", XY),
            Err(ParseError::NonRationalLiteral { pos: 0, .. })
        ));
        assert!(matches!(
            parse_poly("1/0", XY),
            Err(ParseError::NonRationalLiteral { .. })
        ));
        assert!(matches!(
            parse_poly("x/2", XY),
            Err(ParseError::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_poly("x^65", XY),
            Err(ParseError::DegreeTooLarge { degree: 65, .. })
        ));
        assert!(matches!(
            parse_poly("(x^40)*(y^40)", XY),
            Err(ParseError::DegreeTooLarge { degree: 80, .. })
        ));
        assert!(matches!(
            parse_poly("(x+", XY),
            Err(ParseError::Syntax { pos: 3, .. })
        ));
        assert!(parse_poly_capped("x^100", XY, 128).is_ok());
    }

    #[test]
    fn custom_variable_names() {
        let p = parse_poly("u^2 - v", ("u", "v")).unwrap();
        assert_eq!(p.render(("u", "v")), "u^2 - v");
    }

    fn small_poly() -> impl Strategy<Value = QBiPoly> {
        prop::collection::vec(((0u32..6, 0u32..6), -20i64..21, 1i64..5), 0..7).prop_map(|ts| {
            BiPoly::from_terms(
                ts.into_iter()
                    .map(|(e, n, d)| (e, Rational::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_round_trips(p in small_poly()) {
            let text = p.to_string();
            let q = parse_poly(&text, XY).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_string(), text);
        }
    }
}
