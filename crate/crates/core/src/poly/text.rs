//! Text format: a sum of terms `c*X1^a1*...*Xm^am` with integer or `p/q`
//! coefficients. Variable names default to `X1..Xm`; callers may supply
//! their own name table.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Rat};
use crate::error::{Error, Result};

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    m.pairs()
        .map(|(v, e)| if e == 1 { names[v].clone() } else { format!("{}^{}", names[v], e) })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn format_poly(p: &Polynomial, names: &[String]) -> String {
    assert!(names.len() >= p.nvars(), "name table too short");
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if m.is_one() {
            out.push_str(&format_rat(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&format_rat(&abs));
                out.push('*');
            }
            out.push_str(&format_monomial(m, names));
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, &default_names(self.nvars())))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        f.write_str(&format_monomial(self, &default_names(self.var_bound())))
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            _ => return None,
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }
}

/// Parses a rational literal such as `-3/4` or `7`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let mut lx = Lexer { src: s.as_bytes(), pos: 0 };
    let neg = if lx.peek() == Some(b'-') {
        lx.pos += 1;
        true
    } else {
        false
    };
    let num = lx.integer()?;
    let den = if lx.peek() == Some(b'/') {
        lx.pos += 1;
        lx.integer()?
    } else {
        BigInt::one()
    };
    if lx.peek().is_some() {
        return lx.err("trailing input");
    }
    if den.is_zero() {
        return lx.err("zero denominator");
    }
    let r = Rat::new(num, den);
    Ok(if neg { -r } else { r })
}

/// Parses with the default names `X1..Xn`; `X` alone means `X1` when n = 1.
pub fn parse_poly(s: &str, nvars: usize) -> Result<Polynomial> {
    let mut names = default_names(nvars);
    if nvars == 1 {
        names.push("X".into());
    }
    parse_poly_inner(s, nvars, &names, nvars == 1)
}

/// Parses using an explicit name table; variable `i` is `names[i]`.
pub fn parse_poly_with(s: &str, names: &[String]) -> Result<Polynomial> {
    parse_poly_inner(s, names.len(), names, false)
}

fn parse_poly_inner(s: &str, nvars: usize, names: &[String], alias_x: bool) -> Result<Polynomial> {
    let mut lx = Lexer { src: s.as_bytes(), pos: 0 };
    let mut terms: Vec<(Monomial, Rat)> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = Rat::one();
        match lx.peek() {
            None if first => return lx.err("empty polynomial"),
            None => break,
            Some(b'+') => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(_) => return lx.err("expected '+' or '-'"),
        }
        first = false;
        let mut coeff = sign;
        let mut exps: Vec<(usize, u32)> = Vec::new();
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = lx.integer()?;
                    let den = if lx.peek() == Some(b'/') {
                        lx.pos += 1;
                        lx.integer()?
                    } else {
                        BigInt::one()
                    };
                    if den.is_zero() {
                        return lx.err("zero denominator");
                    }
                    coeff *= Rat::new(num, den);
                }
                _ => {
                    let at = lx.pos;
                    let name = match lx.ident() {
                        Some(n) => n,
                        None => return lx.err("expected a number or a variable"),
                    };
                    let v = match names.iter().position(|n| *n == name) {
                        Some(v) if alias_x && v == nvars => 0,
                        Some(v) => v,
                        None => return Err(Error::Parse { pos: at, msg: format!("unknown variable {name}") }),
                    };
                    let e = if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        let k = lx.integer()?;
                        u32::try_from(k).or_else(|_| lx.err("exponent too large"))?
                    } else {
                        1
                    };
                    exps.push((v, e));
                }
            }
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            } else {
                break;
            }
        }
        terms.push((Monomial::from_pairs(exps), coeff));
    }
    Ok(Polynomial::from_terms(nvars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn prints_graded_order() {
        let p = parse_poly("X1^2 + 2*X1 + 1", 1).unwrap();
        assert_eq!(p.to_string(), "1+2*X1+X1^2");
        let q = parse_poly("-3/2*X1*X2 + X3 - 1/3", 3).unwrap();
        assert_eq!(q.to_string(), "-1/3+X3-3/2*X1*X2");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn parses_products_of_numbers() {
        let p = parse_poly("2*3/4*X", 1).unwrap();
        assert_eq!(p, Polynomial::var(1, 0).scale(&rat(3, 2)));
    }

    #[test]
    fn custom_names_round_trip() {
        let names: Vec<String> = ["a", "g1_10", "g1_01"].iter().map(|s| s.to_string()).collect();
        let p = parse_poly_with("a*g1_10 - 2*g1_01^3", &names).unwrap();
        assert_eq!(parse_poly_with(&format_poly(&p, &names), &names).unwrap(), p);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_poly("X1 ++", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("Y1", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1/0", 1), Err(Error::Parse { .. })));
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
    }
}
