//! Text grammar shared by the library and the CLI.
//!
//! Polynomials: variables `z0`..`z15`, integer and `a/b` rational literals,
//! operators `+ - * ^` (exponents are non-negative integer literals),
//! parentheses; multiplication is always explicit.
//!
//! Maps: `( expr : expr : ... : expr )`.
//! Matrices: rows `[a,b;c,d]`.
//! Homographies: `num` or `num/den`, both linear in `z0`.
//! Affine tuples: `( expr , expr , ... )`.

use num::rational::BigRational;
use num::BigInt;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, MAX_VARS};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, nvars: usize) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            nvars,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    /// expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    /// term := factor ('*' factor)*
    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    /// factor := '-' factor | atom ['^' uint]
    fn factor(&mut self) -> Result<MultiPoly> {
        if self.eat(b'-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::Parse {
                    pos: self.pos,
                    msg: "exponent too large".into(),
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'z') => {
                self.pos += 1;
                let idx = self.integer()?;
                let idx: usize = idx.try_into().map_err(|_| Error::Parse {
                    pos: self.pos,
                    msg: "variable index too large".into(),
                })?;
                if idx >= MAX_VARS {
                    return self.err(format!("variables range over z0..z{}", MAX_VARS - 1));
                }
                if idx >= self.nvars {
                    return self.err(format!(
                        "variable z{idx} out of range (expected {} variables)",
                        self.nvars
                    ));
                }
                Ok(MultiPoly::var(self.nvars, idx))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                // rational literal `a/b`: `/` directly between integer literals
                let save = self.pos;
                if self.eat(b'/') {
                    if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        let d = self.integer()?;
                        if d == BigInt::from(0) {
                            return self.err("zero denominator in literal");
                        }
                        return Ok(MultiPoly::constant(self.nvars, BigRational::new(n, d)));
                    }
                    self.pos = save;
                }
                Ok(MultiPoly::constant(self.nvars, BigRational::from_integer(n)))
            }
            Some(c) => self.err(format!("unexpected character `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            self.err("trailing input")
        } else {
            Ok(())
        }
    }
}

/// Parses a polynomial in variables `z0..z{nvars-1}`.
pub fn parse_poly(src: &str, nvars: usize) -> Result<MultiPoly> {
    let mut p = Parser::new(src, nvars);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses `( expr : expr : ... )`; the variable count equals the component
/// count. Returns the raw components, unvalidated.
pub fn parse_map_components(src: &str) -> Result<Vec<MultiPoly>> {
    let ncomp = count_top_level(src, b':')? + 1;
    if ncomp < 2 {
        return Err(Error::Parse {
            pos: 0,
            msg: "a map needs at least two components".into(),
        });
    }
    let mut p = Parser::new(src, ncomp);
    p.expect(b'(')?;
    let mut comps = Vec::with_capacity(ncomp);
    comps.push(p.expr()?);
    while p.eat(b':') {
        comps.push(p.expr()?);
    }
    p.expect(b')')?;
    p.finish()?;
    if comps.len() != ncomp {
        return Err(Error::Parse {
            pos: 0,
            msg: "misnested component separators".into(),
        });
    }
    Ok(comps)
}

/// Parses `( expr , expr , ... )` over `nvars` variables.
pub fn parse_affine_tuple(src: &str, nvars: usize) -> Result<Vec<MultiPoly>> {
    let mut p = Parser::new(src, nvars);
    p.expect(b'(')?;
    let mut comps = vec![p.expr()?];
    while p.eat(b',') {
        comps.push(p.expr()?);
    }
    p.expect(b')')?;
    p.finish()?;
    Ok(comps)
}

/// Parses `[a,b;c,d]` with polynomial entries over `nvars` variables.
pub fn parse_matrix(src: &str, nvars: usize) -> Result<Vec<Vec<MultiPoly>>> {
    let mut p = Parser::new(src, nvars);
    p.expect(b'[')?;
    let mut rows = Vec::new();
    loop {
        let mut row = vec![p.expr()?];
        while p.eat(b',') {
            row.push(p.expr()?);
        }
        rows.push(row);
        if !p.eat(b';') {
            break;
        }
    }
    p.expect(b']')?;
    p.finish()?;
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Parse {
            pos: 0,
            msg: "ragged matrix rows".into(),
        });
    }
    Ok(rows)
}

/// Parses `num` or `num/den`, both polynomials linear in `z0`; returns the
/// four coefficient polynomials `(a, b, c, d)` of `(a*z0+b)/(c*z0+d)`, each
/// free of `z0`, over the same `nvars` variables.
pub fn parse_homography(src: &str, nvars: usize) -> Result<[MultiPoly; 4]> {
    let split = top_level_split(src, b'/')?;
    let (num_src, den_src) = match split {
        Some(i) => (&src[..i], &src[i + 1..]),
        None => (src, ""),
    };
    let num = parse_poly(num_src.trim(), nvars)?;
    let den = if den_src.is_empty() {
        MultiPoly::one(nvars)
    } else {
        parse_poly(den_src.trim(), nvars)?
    };
    let [a, b] = split_linear_z0(&num)?;
    let [c, d] = split_linear_z0(&den)?;
    Ok([a, b, c, d])
}

/// Writes `p = a*z0 + b` with `a`, `b` free of `z0`.
fn split_linear_z0(p: &MultiPoly) -> Result<[MultiPoly; 2]> {
    if p.degree_in(0).unwrap_or(0) > 1 {
        return Err(Error::Parse {
            pos: 0,
            msg: "homography must be linear in z0".into(),
        });
    }
    let nv = p.nvars();
    let mut a = MultiPoly::zero(nv);
    let mut b = MultiPoly::zero(nv);
    for (m, c) in p.terms() {
        let mut stripped = m.clone();
        if m.degree_of(0) == 1 {
            stripped.0[0] = 0;
            a.add_term(stripped, c.clone());
        } else {
            b.add_term(stripped, c.clone());
        }
    }
    Ok([a, b])
}

/// Byte index of the single top-level occurrence of `sep`, if any.
fn top_level_split(src: &str, sep: u8) -> Result<Option<usize>> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, &c) in src.as_bytes().iter().enumerate() {
        match c {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            c if c == sep && depth == 0 => {
                if found.is_some() {
                    return Err(Error::Parse {
                        pos: i,
                        msg: "multiple top-level separators".into(),
                    });
                }
                found = Some(i);
            }
            _ => {}
        }
    }
    Ok(found)
}

fn count_top_level(src: &str, sep: u8) -> Result<usize> {
    let mut depth = 0i32;
    let mut count = 0;
    for &c in src.as_bytes() {
        match c {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            c if c == sep && depth == 1 => count += 1,
            _ => {}
        }
    }
    Ok(count)
}
