//! Parser for right-hand-side expressions like `2*x^4 + x^2 - x` or
//! `a^3*x^7 + 2*a*x^2`. The grammar is a signed sum of products of integer
//! constants, powers of the bound generator `a`, and powers of `x`.

use grmcurves::field::{FieldElement, FieldTower};
use grmcurves::{Error, TraceForm};

pub fn parse(
    src: &str,
    a: Option<&FieldElement>,
    tower: &FieldTower,
) -> Result<TraceForm, Error> {
    let tokens = tokenize(src)?;
    let mut pos = 0usize;
    let mut terms: Vec<(u64, FieldElement)> = Vec::new();

    let mut sign_negative = match tokens.get(pos) {
        Some(Token::Plus) => {
            pos += 1;
            false
        }
        Some(Token::Minus) => {
            pos += 1;
            true
        }
        _ => false,
    };

    loop {
        let (exp, coeff, next) = parse_term(&tokens, pos, a, tower)?;
        pos = next;
        let coeff = if sign_negative { tower.neg(&coeff) } else { coeff };
        terms.push((exp, coeff));
        match tokens.get(pos) {
            None => break,
            Some(Token::Plus) => {
                sign_negative = false;
                pos += 1;
            }
            Some(Token::Minus) => {
                sign_negative = true;
                pos += 1;
            }
            Some(t) => {
                return Err(Error::BadParameter(format!(
                    "expected + or - between terms, found {:?}",
                    t
                )))
            }
        }
    }
    TraceForm::from_terms(&terms, tower.zero(), tower)
}

/// One product of factors; returns the x-exponent, the coefficient, and
/// the next token position.
fn parse_term(
    tokens: &[Token],
    mut pos: usize,
    a: Option<&FieldElement>,
    tower: &FieldTower,
) -> Result<(u64, FieldElement, usize), Error> {
    let mut coeff = tower.one();
    let mut x_exp: u128 = 0;
    loop {
        match tokens.get(pos) {
            Some(Token::Int(n)) => {
                coeff = tower.scalar_mul(n % tower.p(), &coeff);
                pos += 1;
            }
            Some(Token::Gen) => {
                let a = a.ok_or_else(|| {
                    Error::BadParameter(
                        "expression uses the generator a; pass --gen trace-zero".into(),
                    )
                })?;
                let e = take_exponent(tokens, &mut pos)?;
                coeff = tower.mul(&coeff, &tower.pow(a, e as u128));
                pos += 1;
            }
            Some(Token::X) => {
                x_exp += take_exponent(tokens, &mut pos)? as u128;
                pos += 1;
            }
            t => {
                return Err(Error::BadParameter(format!(
                    "expected a factor, found {:?}",
                    t
                )))
            }
        }
        if let Some(Token::Star) = tokens.get(pos) {
            pos += 1;
            continue;
        }
        break;
    }
    if x_exp > u64::MAX as u128 {
        return Err(Error::BadParameter("x exponent too large".into()));
    }
    Ok((x_exp as u64, coeff, pos))
}

/// Consume an optional `^ INT` after the factor at `pos`; leaves `pos` on
/// the last token of the factor.
fn take_exponent(tokens: &[Token], pos: &mut usize) -> Result<u64, Error> {
    if let Some(Token::Caret) = tokens.get(*pos + 1) {
        match tokens.get(*pos + 2) {
            Some(Token::Int(n)) => {
                *pos += 2;
                Ok(*n)
            }
            t => Err(Error::BadParameter(format!(
                "expected an integer exponent after ^, found {:?}",
                t
            ))),
        }
    } else {
        Ok(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Int(u64),
    Gen,
    X,
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(src: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            'a' => {
                chars.next();
                out.push(Token::Gen);
            }
            'x' => {
                chars.next();
                out.push(Token::X);
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as u64))
                        .ok_or_else(|| Error::BadParameter("integer literal too large".into()))?;
                    chars.next();
                }
                out.push(Token::Int(n));
            }
            other => {
                return Err(Error::BadParameter(format!(
                    "unexpected character {:?} in expression",
                    other
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(Error::BadParameter("empty expression".into()));
    }
    Ok(out)
}
