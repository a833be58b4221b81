//! Text forms of scalars and polynomials.
//!
//! ```text
//! polynomial := "0" | ["+" | "-"] term (("+" | "-") term)*
//! term       := factor ("*" factor)*        at most one word, written last
//! factor     := word | atom
//! word       := "[" index* "]"              1-based indices, "[]" is the unit
//! scalar     := ["+" | "-"] product (("+" | "-") product)*
//! product    := atom ("*" atom)*
//! atom       := primary ["^" ["-"] integer]
//! primary    := integer ["/" integer]       a rational number
//!             | "e(" ["-"] integer "/" integer ")"   the root exp(2πi·a/b)
//!             | "(" scalar ")"
//! ```
//!
//! Examples: `e(1/3)`, `1/2 - 3*e(1/4)`, `(1 - e(1/6)) * [2 1] + [1 2]`.
//! A term without a word is a multiple of the empty word.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::NCPolynomial;
use crate::error::{Error, Result};
use crate::graphs::Word;
use crate::scalars::{CycNumber, RootFraction};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    E,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() || c == ',' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Int(digits.parse().expect("digits")));
            }
            '/' => out.push(Tok::Slash),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            '[' => out.push(Tok::LBracket),
            ']' => out.push(Tok::RBracket),
            'e' => out.push(Tok::E),
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    rank: usize,
}

enum Factor {
    Scalar(CycNumber),
    Word(Word),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            got => Err(Error::Parse(format!("expected an integer, found {got:?}"))),
        }
    }

    fn signed_small(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self
            .int()?
            .to_i64()
            .ok_or_else(|| Error::Parse("integer too large".into()))?;
        Ok(if neg { -n } else { n })
    }

    fn primary(&mut self) -> Result<CycNumber> {
        match self.next() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    Ok(CycNumber::from_rational(BigRational::new(n, d)))
                } else {
                    Ok(CycNumber::from_rational(BigRational::from_integer(n)))
                }
            }
            Some(Tok::E) => {
                self.expect(Tok::LParen)?;
                let a = self.signed_small()?;
                self.expect(Tok::Slash)?;
                let b = self
                    .int()?
                    .to_u64()
                    .ok_or_else(|| Error::Parse("bad root denominator".into()))?;
                self.expect(Tok::RParen)?;
                Ok(CycNumber::embed(RootFraction::new(a, b)?))
            }
            Some(Tok::LParen) => {
                let s = self.scalar()?;
                self.expect(Tok::RParen)?;
                Ok(s)
            }
            got => Err(Error::Parse(format!("expected a scalar, found {got:?}"))),
        }
    }

    fn atom(&mut self) -> Result<CycNumber> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let k = self.signed_small()?;
            return base.pow(k);
        }
        Ok(base)
    }

    fn product(&mut self) -> Result<CycNumber> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = &acc * &self.atom()?;
        }
        Ok(acc)
    }

    fn scalar(&mut self) -> Result<CycNumber> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.product()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn word(&mut self) -> Result<Word> {
        self.expect(Tok::LBracket)?;
        let mut letters = Vec::new();
        loop {
            match self.next() {
                Some(Tok::RBracket) => break,
                Some(Tok::Int(n)) => {
                    let i = n.to_usize().unwrap_or(0);
                    if i == 0 || i > self.rank {
                        return Err(Error::Parse(format!(
                            "generator index {n} outside 1..={}",
                            self.rank
                        )));
                    }
                    letters.push(i - 1);
                }
                got => return Err(Error::Parse(format!("unexpected {got:?} inside a word"))),
            }
        }
        Ok(Word::new(letters))
    }

    fn factor(&mut self) -> Result<Factor> {
        if self.peek() == Some(&Tok::LBracket) {
            Ok(Factor::Word(self.word()?))
        } else {
            Ok(Factor::Scalar(self.atom()?))
        }
    }

    fn term(&mut self) -> Result<NCPolynomial> {
        let mut coeff = CycNumber::one();
        let mut word = None;
        loop {
            if word.is_some() {
                return Err(Error::Parse(
                    "a word must be the last factor of a term".into(),
                ));
            }
            match self.factor()? {
                Factor::Scalar(c) => coeff = &coeff * &c,
                Factor::Word(w) => word = Some(w),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(NCPolynomial::monomial(
            self.rank,
            word.unwrap_or_default(),
            coeff,
        ))
    }

    fn polynomial(&mut self) -> Result<NCPolynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                None => return Ok(acc),
                got => return Err(Error::Parse(format!("unexpected {got:?}"))),
            }
        }
    }
}

/// Parses a scalar literal such as `1/2 - 3*e(1/4)`.
pub fn parse_scalar(s: &str) -> Result<CycNumber> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
        rank: 0,
    };
    let v = p.scalar()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in scalar {s:?}")));
    }
    Ok(v)
}

/// Parses a polynomial in generators `x_1..x_rank`.
pub fn parse_polynomial(s: &str, rank: usize) -> Result<NCPolynomial> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
        rank,
    };
    if p.toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    p.polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_literals() {
        let z3 = CycNumber::embed("1/3".parse().unwrap());
        assert_eq!(parse_scalar("e(1/3)").unwrap(), z3);
        assert_eq!(
            parse_scalar("e(1/3)^2 + e(1/3) + 1").unwrap(),
            CycNumber::zero()
        );
        assert_eq!(parse_scalar("e(-1/3)").unwrap(), z3.inv().unwrap());
        assert_eq!(
            parse_scalar("-(2/4)").unwrap(),
            parse_scalar("-1/2").unwrap()
        );
        assert_eq!(
            parse_scalar("(1 - e(1/4))^-1 * (1 - e(1/4))").unwrap(),
            CycNumber::one()
        );
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1 +").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn polynomial_round_trip() {
        let texts = [
            "0",
            "[1 2]",
            "(1 - e(1/6)) * [2 1] + [1 2]",
            "-3 * [1] + 1/2 * e(1/4) * [2 2] - []",
        ];
        for t in texts {
            let p = parse_polynomial(t, 2).unwrap();
            let back = parse_polynomial(&p.to_string(), 2).unwrap();
            assert_eq!(p, back, "{t}");
        }
        assert!(parse_polynomial("[3]", 2).is_err());
        assert!(parse_polynomial("[1] * 2", 2).is_err());
    }
}
