//! Concrete syntax for KF(Y) and XKF(Y) expressions.
//!
//! Grammar:
//!   ring   := ['-'] term (('+'|'-') term)*
//!   term   := factor ('*' factor)*
//!   factor := integer | y<k> ['^' int] | '(' ring ')' ['^' int]
//!   module := modterm (('+'|'-') modterm)*
//!   modterm := x<k> 'o' factor
//!
//! A caret binds to group variables and parenthesized words; a negative
//! exponent on anything but a single invertible monomial is rejected.

use crate::error::{Error, Result};
use crate::module::FreeModuleElement;
use crate::ring::GroupRingElement;
use crate::scalar::Field;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    YVar(usize),
    XVar(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Action,
    LParen,
    RParen,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            'o' => {
                out.push((i, Token::Action));
                i += 1;
            }
            'x' | 'y' => {
                let start = i;
                i += 1;
                let ds = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: format!("variable '{c}' needs an index"),
                    });
                }
                let idx: usize = text[ds..i].parse().map_err(|_| Error::Syntax {
                    pos: ds,
                    msg: "bad variable index".into(),
                })?;
                if idx == 0 {
                    return Err(Error::Syntax {
                        pos: ds,
                        msg: "variable indices are 1-based".into(),
                    });
                }
                out.push((start, if c == 'x' { Token::XVar(idx) } else { Token::YVar(idx) }));
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: i64 = text[start..i].parse().map_err(|_| Error::Syntax {
                    pos: start,
                    msg: "integer too large".into(),
                })?;
                out.push((start, Token::Int(n)));
            }
            other => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map_or(0, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token, what: &str) -> Result<()> {
        let pos = self.here();
        match self.next() {
            Some(got) if got == t => Ok(()),
            _ => Err(Error::Syntax {
                pos,
                msg: format!("expected {what}"),
            }),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let pos = self.here();
        match self.next() {
            Some(Token::Int(n)) => Ok(n),
            Some(Token::Minus) => match self.next() {
                Some(Token::Int(n)) => Ok(-n),
                _ => Err(Error::Syntax {
                    pos,
                    msg: "expected integer after '-'".into(),
                }),
            },
            _ => Err(Error::Syntax {
                pos,
                msg: "expected integer".into(),
            }),
        }
    }
}

fn parse_factor(lx: &mut Lexer, field: Field) -> Result<GroupRingElement> {
    let pos = lx.here();
    match lx.next() {
        Some(Token::Int(n)) => Ok(GroupRingElement::constant(field, n)),
        Some(Token::YVar(k)) => {
            if lx.peek() == Some(&Token::Caret) {
                lx.next();
                let e = lx.signed_int()?;
                if e == 0 {
                    return Err(Error::Syntax {
                        pos,
                        msg: "exponent must be nonzero".into(),
                    });
                }
                Ok(GroupRingElement::word(field, Word::generator_power(k, e)))
            } else {
                Ok(GroupRingElement::word(field, Word::generator(k)))
            }
        }
        Some(Token::LParen) => {
            let inner = parse_ring(lx, field)?;
            lx.expect(Token::RParen, "')'")?;
            if lx.peek() == Some(&Token::Caret) {
                lx.next();
                let e = lx.signed_int()?;
                if e == 0 {
                    return Err(Error::Syntax {
                        pos,
                        msg: "exponent must be nonzero".into(),
                    });
                }
                inner.power(e).map_err(|_| Error::Syntax {
                    pos,
                    msg: "negative exponent on a non-invertible expression".into(),
                })
            } else {
                Ok(inner)
            }
        }
        _ => Err(Error::Syntax {
            pos,
            msg: "expected integer, group variable or '('".into(),
        }),
    }
}

fn parse_term(lx: &mut Lexer, field: Field) -> Result<GroupRingElement> {
    let mut acc = parse_factor(lx, field)?;
    while lx.peek() == Some(&Token::Star) {
        lx.next();
        acc = acc.multiply(&parse_factor(lx, field)?)?;
    }
    Ok(acc)
}

fn parse_ring(lx: &mut Lexer, field: Field) -> Result<GroupRingElement> {
    let mut acc = if lx.peek() == Some(&Token::Minus) {
        lx.next();
        parse_term(lx, field)?.neg()
    } else {
        parse_term(lx, field)?
    };
    loop {
        match lx.peek() {
            Some(Token::Plus) => {
                lx.next();
                acc = acc.add(&parse_term(lx, field)?)?;
            }
            Some(Token::Minus) => {
                lx.next();
                acc = acc.sub(&parse_term(lx, field)?)?;
            }
            _ => return Ok(acc),
        }
    }
}

/// Parses a ring expression like `2*y1 - 1 + y2*y1`.
pub fn parse_ring_expr(text: &str, field: Field) -> Result<GroupRingElement> {
    let mut lx = Lexer {
        tokens: lex(text)?,
        pos: 0,
    };
    let e = parse_ring(&mut lx, field)?;
    if lx.peek().is_some() {
        return Err(Error::Syntax {
            pos: lx.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

fn parse_module_term(lx: &mut Lexer, field: Field) -> Result<FreeModuleElement> {
    let pos = lx.here();
    match lx.next() {
        Some(Token::XVar(k)) => {
            lx.expect(Token::Action, "'o'")?;
            Ok(FreeModuleElement::action_term(k, parse_factor(lx, field)?))
        }
        _ => Err(Error::Syntax {
            pos,
            msg: "expected module variable x<k>".into(),
        }),
    }
}

/// Parses a module expression like `x1 o (y1 - 1) + x2 o (3*y2)`.
pub fn parse_module_expr(text: &str, field: Field) -> Result<FreeModuleElement> {
    let mut lx = Lexer {
        tokens: lex(text)?,
        pos: 0,
    };
    let mut acc = parse_module_term(&mut lx, field)?;
    loop {
        match lx.peek() {
            Some(Token::Plus) => {
                lx.next();
                acc = acc.add(&parse_module_term(&mut lx, field)?)?;
            }
            Some(Token::Minus) => {
                lx.next();
                acc = acc.sub(&parse_module_term(&mut lx, field)?)?;
            }
            None => return Ok(acc),
            _ => {
                return Err(Error::Syntax {
                    pos: lx.here(),
                    msg: "trailing input".into(),
                })
            }
        }
    }
}

/// Parses a group word like `y1*y2^-1`: a ring expression required to be a
/// single word with unit coefficient.
pub fn parse_word(text: &str) -> Result<Word> {
    let e = parse_ring_expr(text, Field::Q)?;
    let mut terms = e.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c.is_one() => Ok(w.clone()),
        _ => Err(Error::Syntax {
            pos: 0,
            msg: "not a group word".into(),
        }),
    }
}
