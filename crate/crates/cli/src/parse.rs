//! Text syntax for fields, elements, rational functions, additive
//! polynomials, places and Witt vectors.

use std::fmt;

use aspw_core::addpoly::AdditivePoly;
use aspw_core::gf::FieldCtx;
use aspw_core::{FFElem, Place, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    /// 0-based character offset.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parse error at column {}: {}", self.pos + 1, self.msg)?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {}^", " ".repeat(self.pos))
    }
}

impl std::error::Error for ParseError {}

fn err(input: &str, pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { input: input.to_string(), pos, msg: msg.into() }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = cs[st..i].iter().collect();
            let v = text.parse::<i64>().map_err(|_| err(s, st, "number too large"))?;
            out.push((Tok::Num(v), st));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphabetic() || cs[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(cs[st..i].iter().collect()), st));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(err(s, i, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

/// Recursive-descent parser producing rational functions in one variable
/// over `ctx`; `var` names the variable and `gen` the field generator.
struct Parser<'a> {
    input: &'a str,
    toks: Vec<(Tok, usize)>,
    i: usize,
    ctx: &'a FieldCtx,
    var: &'a str,
}

impl<'a> Parser<'a> {
    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.input.chars().count(), |t| t.1)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = if self.eat('-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.pos();
                self.i += 1;
                let d = self.power()?;
                acc = acc.div(&d).map_err(|_| err(self.input, at, "division by zero"))?;
            } else if self.starts_factor() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.pos();
            let neg = self.eat('-');
            let e = match self.peek() {
                Some(Tok::Num(v)) => *v,
                _ => return Err(err(self.input, self.pos(), "expected an integer exponent")),
            };
            self.i += 1;
            let e = if neg { -e } else { e };
            return base.powi(e).map_err(|_| err(self.input, at, "negative power of zero"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        let at = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.i += 1;
                Ok(RatFunc::constant(&self.ctx.from_int(v)))
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                if name == self.var {
                    Ok(RatFunc::t(self.ctx))
                } else if name == self.ctx.symbol() {
                    Ok(RatFunc::constant(&self.ctx.gen()))
                } else {
                    Err(err(self.input, at, format!("unknown symbol '{name}'")))
                }
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.input, self.pos(), "expected ')'"));
                }
                Ok(v)
            }
            Some(Tok::Op(c)) => Err(err(self.input, at, format!("unexpected '{c}'"))),
            None => Err(err(self.input, at, "unexpected end of input")),
        }
    }
}

fn parse_in(ctx: &FieldCtx, s: &str, var: &str) -> Result<RatFunc, ParseError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(err(s, 0, "empty expression"));
    }
    let mut p = Parser { input: s, toks, i: 0, ctx, var };
    let v = p.expr()?;
    if p.i < p.toks.len() {
        return Err(err(s, p.pos(), "unexpected trailing input"));
    }
    Ok(v)
}

/// Rational function in `T`, e.g. `1/(T+1)^2 + w*T^3`.
pub fn parse_ratfunc(ctx: &FieldCtx, s: &str) -> Result<RatFunc, ParseError> {
    parse_in(ctx, s, "T")
}

/// Element of the field, e.g. `w^2+2*w+1`.
pub fn parse_element(ctx: &FieldCtx, s: &str) -> Result<FFElem, ParseError> {
    let r = parse_in(ctx, s, "\u{0}")?;
    r.constant_value().ok_or_else(|| err(s, 0, "not a field element"))
}

/// `X^9 - X` or a coefficient list `[a0, a1, ..., 1]` of `X^(p^i)`.
pub fn parse_additive(ctx: &FieldCtx, s: &str) -> Result<AdditivePoly, ParseError> {
    let t = s.trim();
    if let Some(inner) = t.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| err(s, s.len(), "expected ']'"))?;
        let offset = s.find('[').unwrap() + 1;
        let mut coeffs = Vec::new();
        let mut start = 0;
        for part in inner.split(',') {
            let e = parse_element(ctx, part).map_err(|mut e| {
                e.input = s.to_string();
                e.pos += offset + start;
                e
            })?;
            coeffs.push(e);
            start += part.len() + 1;
        }
        return AdditivePoly::new(coeffs).map_err(|e| err(s, 0, e.to_string()));
    }
    let r = parse_in(ctx, s, "X")?;
    if !r.is_poly() {
        return Err(err(s, 0, "additive polynomial must be a polynomial in X"));
    }
    AdditivePoly::from_poly(r.num()).map_err(|e| err(s, 0, e.to_string()))
}

/// `inf` or a monic irreducible polynomial in `T`.
pub fn parse_place(ctx: &FieldCtx, s: &str) -> Result<Place, ParseError> {
    let t = s.trim();
    if t == "inf" || t == "infinity" {
        return Ok(Place::Infinity);
    }
    let r = parse_ratfunc(ctx, t)?;
    if !r.is_poly() {
        return Err(err(s, 0, "place must be a polynomial in T"));
    }
    Place::finite(r.num().clone()).map_err(|e| err(s, 0, e.to_string()))
}

/// `[c1; c2; ...]` with rational-function components.
pub fn parse_witt(ctx: &FieldCtx, s: &str) -> Result<Vec<RatFunc>, ParseError> {
    let t = s.trim();
    let open = s.find('[').ok_or_else(|| err(s, 0, "expected '['"))?;
    if !t.ends_with(']') {
        return Err(err(s, s.len(), "expected ']'"));
    }
    let close = s.rfind(']').unwrap();
    let inner = &s[open + 1..close];
    let mut out = Vec::new();
    let mut start = open + 1;
    for part in inner.split(';') {
        let v = parse_ratfunc(ctx, part).map_err(|mut e| {
            e.input = s.to_string();
            e.pos += start;
            e
        })?;
        out.push(v);
        start += part.len() + 1;
    }
    Ok(out)
}

/// `a; b; c` split into trimmed items.
pub fn split_list(s: &str) -> Vec<&str> {
    s.split(';').map(str::trim).filter(|x| !x.is_empty()).collect()
}

/// `p=3,s=3,mod=x^3-x-2,gen=w`; `s`, `mod` and `gen` are optional.
pub fn parse_field(s: &str) -> Result<FieldCtx, ParseError> {
    let mut p = None;
    let mut deg = 1u32;
    let mut modulus: Option<(Vec<i64>, usize)> = None;
    let mut gen = String::from("w");
    let mut have_s = false;
    let mut offset = 0;
    for part in s.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(|| err(s, offset, "expected key=value"))?;
        let vpos = offset + k.len() + 1;
        match k.trim() {
            "p" => p = Some(v.trim().parse::<u32>().map_err(|_| err(s, vpos, "p must be an integer"))?),
            "s" => {
                deg = v.trim().parse::<u32>().map_err(|_| err(s, vpos, "s must be an integer"))?;
                have_s = true;
            }
            "gen" => gen = v.trim().to_string(),
            "mod" => modulus = Some((parse_int_poly(v).map_err(|(i, m)| err(s, vpos + i, m))?, vpos)),
            other => return Err(err(s, offset, format!("unknown key '{other}'"))),
        }
        offset += part.len() + 1;
    }
    let p = p.ok_or_else(|| err(s, 0, "missing p"))?;
    let modulus = match modulus {
        Some((m, at)) => {
            let d = m.len() as u32 - 1;
            if have_s && d != deg {
                return Err(err(s, at, format!("modulus degree {d} does not match s = {deg}")));
            }
            deg = d;
            Some(m.iter().map(|c| c.rem_euclid(p as i64) as u32).collect::<Vec<u32>>())
        }
        None => None,
    };
    FieldCtx::new(p, deg, modulus.as_deref(), &gen).map_err(|e| err(s, 0, e.to_string()))
}

/// Integer polynomial in `x`, coefficients low degree first, reduced later.
fn parse_int_poly(s: &str) -> Result<Vec<i64>, (usize, String)> {
    let cs: Vec<char> = s.chars().collect();
    let mut coeffs: Vec<i64> = Vec::new();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < cs.len() && cs[*i].is_whitespace() {
            *i += 1;
        }
    };
    let mut first = true;
    loop {
        skip(&mut i);
        if i >= cs.len() {
            break;
        }
        let mut sign = 1;
        if cs[i] == '+' || cs[i] == '-' {
            if cs[i] == '-' {
                sign = -1;
            }
            i += 1;
            skip(&mut i);
        } else if !first {
            return Err((i, "expected '+' or '-'".into()));
        }
        first = false;
        let st = i;
        while i < cs.len() && cs[i].is_ascii_digit() {
            i += 1;
        }
        let mut c: i64 = if i > st { cs[st..i].iter().collect::<String>().parse().unwrap() } else { 1 };
        skip(&mut i);
        let mut e = 0usize;
        if i < cs.len() && cs[i] == '*' {
            i += 1;
            skip(&mut i);
        }
        if i < cs.len() && cs[i] == 'x' {
            i += 1;
            e = 1;
            skip(&mut i);
            if i < cs.len() && cs[i] == '^' {
                i += 1;
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                if i == st {
                    return Err((i, "expected exponent".into()));
                }
                e = cs[st..i].iter().collect::<String>().parse().unwrap();
            }
        } else if i == st {
            return Err((i, "expected a term".into()));
        }
        c *= sign;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] += c;
    }
    if coeffs.is_empty() {
        return Err((0, "empty modulus".into()));
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_with_explicit_modulus() {
        let k = parse_field("p=3,s=3,mod=x^3-x-2").unwrap();
        let w = k.gen();
        assert_eq!(w.pow(3), &w + &k.from_int(2));
        assert_eq!(parse_field("p=2,s=2").unwrap().size(), 4);
        let e = parse_field("p=3,s=2,mod=x^3-x-2").unwrap_err();
        assert!(e.msg.contains("does not match"));
    }

    #[test]
    fn expressions() {
        let k = parse_field("p=3,s=3,mod=x^3-x-2").unwrap();
        let u = parse_ratfunc(&k, "1/(T+1)^2 + 1/(T+1) + T^9+T^3+T+w+1").unwrap();
        assert_eq!(u.to_string(), "1/(T+1)^2 + 1/(T+1) + T^9+T^3+T+w+1");
        let v = parse_ratfunc(&k, "2T^2 (w+1) - T^-1").unwrap();
        assert_eq!(v, parse_ratfunc(&k, "2*(w+1)*T^2 - 1/T").unwrap());
        let e = parse_ratfunc(&k, "T + * 2").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = parse_ratfunc(&k, "T + z").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(parse_ratfunc(&k, "1/(T-T)").is_err());
    }

    #[test]
    fn additive_and_witt() {
        let k = parse_field("p=3,s=2").unwrap();
        let f = parse_additive(&k, "X^9 - X").unwrap();
        assert!(f.is_x_q_minus_x());
        assert_eq!(parse_additive(&k, "[-1, 0, 1]").unwrap(), f);
        assert!(parse_additive(&k, "X^2 + X").is_err());
        let v = parse_witt(&k, "[T; 1/T; w]").unwrap();
        assert_eq!(v.len(), 3);
        let e = parse_witt(&k, "[T; 1/]").unwrap_err();
        assert_eq!(e.pos, 6);
        assert_eq!(parse_place(&k, "inf").unwrap(), Place::Infinity);
        assert!(parse_place(&k, "T^2").is_err());
    }
}
