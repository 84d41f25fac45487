//! Text grammar for words, bracket trees and Lie polynomials.
//!
//! ```text
//! word  := prime (prime)*
//! prime := GEN | OP '(' word (',' word)* ')'
//! tree  := GEN | OP '(' tree (',' tree)* ')' | '(' tree tree ')'
//! poly  := '0' | ['-'] term (('+' | '-') term)*
//! term  := factor ('*' factor)*      -- exactly one factor is a tree
//! factor:= INT ['/' INT] | 'l' ['^' INT] | tree
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lie_poly::{Coefficient, LieError, LiePoly};
use crate::lyndon::Tree;
use crate::omega_words::{Alphabet, OmegaWord, Prime};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },
    #[error("unknown name `{name}` at offset {offset}")]
    UnknownName { offset: usize, name: String },
    #[error("operator `{op}` at offset {offset} takes {expected} argument(s), found {found}")]
    Arity {
        offset: usize,
        op: String,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Times,
    Slash,
    Caret,
    Star,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    end: usize,
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (off, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < bytes.len() && (bytes[i].1.is_alphanumeric() || bytes[i].1 == '_') {
                s.push(bytes[i].1);
                i += 1;
            }
            toks.push((off, Tok::Ident(s)));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                s.push(bytes[i].1);
                i += 1;
            }
            toks.push((off, Tok::Int(s.parse().expect("digits"))));
            continue;
        }
        let t = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Times,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '⋆' => Tok::Star,
            _ => {
                return Err(ParseError::Syntax {
                    offset: off,
                    expected: format!("a symbol, found `{c}`"),
                })
            }
        };
        toks.push((off, t));
        i += 1;
    }
    Ok(Lexer {
        toks,
        end: text.len(),
        pos: 0,
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            expected: expected.to_string(),
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            Err(self.err("end of input"))
        } else {
            Ok(())
        }
    }
}

enum Symbol<'a> {
    Gen(&'a crate::omega_words::Generator),
    Op(&'a crate::omega_words::OperatorSymbol),
}

fn lookup<'a>(a: &'a Alphabet, name: &str, offset: usize) -> Result<Symbol<'a>, ParseError> {
    if let Some(g) = a.generator(name) {
        return Ok(Symbol::Gen(g));
    }
    if let Some(o) = a.operator(name) {
        return Ok(Symbol::Op(o));
    }
    Err(ParseError::UnknownName {
        offset,
        name: name.to_string(),
    })
}

fn word(lx: &mut Lexer, a: &Alphabet) -> Result<OmegaWord, ParseError> {
    let mut primes = vec![prime(lx, a)?];
    while matches!(lx.peek(), Some(Tok::Ident(_))) {
        primes.push(prime(lx, a)?);
    }
    Ok(OmegaWord::from_primes(primes))
}

fn prime(lx: &mut Lexer, a: &Alphabet) -> Result<Prime, ParseError> {
    let offset = lx.offset();
    let Some(Tok::Ident(name)) = lx.bump() else {
        lx.pos -= 1;
        return Err(lx.err("a generator or operator name"));
    };
    match lookup(a, &name, offset)? {
        Symbol::Gen(g) => Ok(Prime::Letter(g.clone())),
        Symbol::Op(op) => {
            lx.expect(Tok::LParen, "`(`")?;
            let mut args = vec![word(lx, a)?];
            while lx.peek() == Some(&Tok::Comma) {
                lx.bump();
                args.push(word(lx, a)?);
            }
            lx.expect(Tok::RParen, "`,` or `)`")?;
            if args.len() != op.arity() {
                return Err(ParseError::Arity {
                    offset,
                    op: op.name().to_string(),
                    expected: op.arity(),
                    found: args.len(),
                });
            }
            Ok(Prime::op(op.clone(), args))
        }
    }
}

fn tree(lx: &mut Lexer, a: &Alphabet) -> Result<Tree, ParseError> {
    let offset = lx.offset();
    match lx.bump() {
        Some(Tok::LParen) => {
            let l = tree(lx, a)?;
            let r = tree(lx, a)?;
            lx.expect(Tok::RParen, "`)`")?;
            Ok(Tree::bracket(l, r))
        }
        Some(Tok::Ident(name)) => match lookup(a, &name, offset)? {
            Symbol::Gen(g) => Ok(Tree::Leaf(g.clone())),
            Symbol::Op(op) => {
                lx.expect(Tok::LParen, "`(`")?;
                let mut args = vec![tree(lx, a)?];
                while lx.peek() == Some(&Tok::Comma) {
                    lx.bump();
                    args.push(tree(lx, a)?);
                }
                lx.expect(Tok::RParen, "`,` or `)`")?;
                if args.len() != op.arity() {
                    return Err(ParseError::Arity {
                        offset,
                        op: op.name().to_string(),
                        expected: op.arity(),
                        found: args.len(),
                    });
                }
                Ok(Tree::Op(op.clone(), args))
            }
        },
        _ => {
            lx.pos -= 1;
            Err(lx.err("a tree"))
        }
    }
}

fn starts_tree(t: Option<&Tok>) -> bool {
    match t {
        Some(Tok::LParen) => true,
        Some(Tok::Ident(n)) => n != "l",
        _ => false,
    }
}

fn term(lx: &mut Lexer, a: &Alphabet) -> Result<(Coefficient, Tree), ParseError> {
    let mut coeff = Coefficient::one();
    let mut body: Option<Tree> = None;
    loop {
        match lx.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(n)) = lx.bump() else {
                    unreachable!()
                };
                let mut r = BigRational::from_integer(n);
                if lx.peek() == Some(&Tok::Slash) {
                    lx.bump();
                    match lx.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => r /= BigRational::from_integer(d),
                        _ => {
                            lx.pos -= 1;
                            return Err(lx.err("a nonzero denominator"));
                        }
                    }
                }
                coeff = coeff.scale(&r);
            }
            Some(Tok::Ident(n)) if n == "l" => {
                lx.bump();
                let mut power = 1usize;
                if lx.peek() == Some(&Tok::Caret) {
                    lx.bump();
                    match lx.bump() {
                        Some(Tok::Int(k)) => {
                            power = k.try_into().map_err(|_| lx.err("a small exponent"))?;
                        }
                        _ => {
                            lx.pos -= 1;
                            return Err(lx.err("an exponent"));
                        }
                    }
                }
                coeff = &coeff * &Coefficient::monomial(BigRational::one(), power);
            }
            t if starts_tree(t) => {
                if body.is_some() {
                    return Err(lx.err("`*` between a coefficient and a single tree"));
                }
                body = Some(tree(lx, a)?);
            }
            _ => return Err(lx.err("a coefficient or a tree")),
        }
        if lx.peek() == Some(&Tok::Times) {
            lx.bump();
        } else {
            break;
        }
    }
    let body = body.ok_or_else(|| lx.err("a tree in each term"))?;
    Ok((coeff, body))
}

/// Parses a word such as `w3(x2 x1 x1, x1, w1(x2 x2 x1)) x2 x1`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<OmegaWord, ParseError> {
    let mut lx = lex(text)?;
    let w = word(&mut lx, alphabet)?;
    lx.finish()?;
    Ok(w)
}

/// Parses a bracket tree such as `((x2 x1) x1)` or `P((x2 P(x1)))`.
pub fn parse_tree(text: &str, alphabet: &Alphabet) -> Result<Tree, ParseError> {
    let mut lx = lex(text)?;
    let t = tree(&mut lx, alphabet)?;
    lx.finish()?;
    Ok(t)
}

/// Parses a Lie polynomial such as `3/2*l^1*P((x2 x1)) - (x2 x1)`; each tree
/// is evaluated in the NLSW basis.
pub fn parse_poly(text: &str, alphabet: &Alphabet) -> Result<LiePoly, ParseError> {
    let mut lx = lex(text)?;
    if lx.toks.len() == 1 && matches!(&lx.toks[0].1, Tok::Int(n) if n.is_zero()) {
        return Ok(LiePoly::zero());
    }
    let mut out = LiePoly::zero();
    let mut sign = Coefficient::one();
    match lx.peek() {
        Some(Tok::Minus) => {
            lx.bump();
            sign = Coefficient::from_int(-1);
        }
        Some(Tok::Plus) => {
            lx.bump();
        }
        _ => {}
    }
    loop {
        let (c, t) = term(&mut lx, alphabet)?;
        let value = LiePoly::from_tree(&t)?;
        out.add_scaled(&value, &(&sign * &c));
        match lx.peek() {
            Some(Tok::Plus) => sign = Coefficient::one(),
            Some(Tok::Minus) => sign = Coefficient::from_int(-1),
            None => break,
            _ => return Err(lx.err("`+`, `-` or end of input")),
        }
        lx.bump();
    }
    Ok(out)
}
