//! Scalar string format: `"3/4"`, `"2"`, `"t/(t+1)"`, `"[c0,c1]"`.

use num_bigint::BigInt;

use super::{Elem, Field, Kind, RatFn};
use crate::error::{AlgError, Result};

impl Field {
    pub fn format(&self, a: &Elem) -> String {
        match (&*self.0, a) {
            (Kind::Rationals, Elem::Q(q)) => q.to_string(),
            (Kind::Prime(_), Elem::Fp(x)) => x.to_string(),
            (Kind::RatFun { var, .. }, Elem::FpT(r)) => format_ratfn(r, var),
            (Kind::Ext { base, .. }, Elem::Ext(v)) => {
                let parts: Vec<String> = v.iter().map(|c| base.format(c)).collect();
                format!("[{}]", parts.join(","))
            }
            _ => panic!("field mismatch in format"),
        }
    }

    pub fn parse(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if let Kind::Ext { base, minpoly, .. } = &*self.0 {
            if let Some(inner) = s.strip_prefix('[') {
                let inner = inner
                    .strip_suffix(']')
                    .ok_or_else(|| AlgError::Parse(format!("unbalanced bracket in `{s}`")))?;
                let d = minpoly.len() - 1;
                let parts: Vec<&str> = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner.split(',').collect()
                };
                if parts.len() > d {
                    return Err(AlgError::Parse(format!(
                        "`{s}` has more than {d} coefficients"
                    )));
                }
                let mut v = parts
                    .iter()
                    .map(|t| base.parse(t))
                    .collect::<Result<Vec<_>>>()?;
                v.resize(d, base.zero());
                return Ok(Elem::Ext(v));
            }
        }
        let mut parser = Parser {
            field: self,
            chars: s.chars().collect(),
            pos: 0,
        };
        let v = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.chars.len() {
            return Err(AlgError::Parse(format!("trailing input in `{s}`")));
        }
        Ok(v)
    }
}

fn format_poly(c: &[u64], var: &str) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (d, &k) in c.iter().enumerate().rev() {
        if k == 0 {
            continue;
        }
        let t = match (d, k) {
            (0, _) => k.to_string(),
            (1, 1) => var.to_string(),
            (1, _) => format!("{k}*{var}"),
            (_, 1) => format!("{var}^{d}"),
            _ => format!("{k}*{var}^{d}"),
        };
        terms.push(t);
    }
    terms.join("+")
}

fn format_ratfn(r: &RatFn, var: &str) -> String {
    let num = format_poly(&r.num, var);
    if r.den == [1] {
        return num;
    }
    let wrap = |s: String| if s.contains('+') { format!("({s})") } else { s };
    format!("{}/{}", wrap(num), wrap(format_poly(&r.den, var)))
}

struct Parser<'a> {
    field: &'a Field,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Elem> {
        let f = self.field;
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = f.add(&acc, &self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = f.sub(&acc, &self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Elem> {
        let f = self.field;
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = f.mul(&acc, &self.factor()?);
                }
                '/' => {
                    self.pos += 1;
                    acc = f.div(&acc, &self.factor()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Elem> {
        let f = self.field;
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(f.neg(&self.factor()?));
        }
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let e: u64 = digits
                .parse()
                .map_err(|_| AlgError::Parse(format!("bad exponent `{digits}`")))?;
            return Ok(f.pow_u64(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Elem> {
        let f = self.field;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(AlgError::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits
                    .parse()
                    .map_err(|_| AlgError::Parse(format!("bad integer `{digits}`")))?;
                Ok(f.from_bigint(&n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.variable(&name)
            }
            other => Err(AlgError::Parse(format!("unexpected {other:?}"))),
        }
    }

    fn variable(&self, name: &str) -> Result<Elem> {
        let f = self.field;
        match &*f.0 {
            Kind::RatFun { var, .. } if var == name => Ok(f.generator().expect("variable")),
            Kind::Ext { base, var, .. } => {
                if var == name {
                    Ok(f.generator().expect("generator"))
                } else if let Kind::RatFun { var: bv, .. } = &*base.0 {
                    if bv == name {
                        Ok(f.embed_base(&base.generator().expect("variable")))
                    } else {
                        Err(AlgError::Parse(format!("unknown variable `{name}`")))
                    }
                } else {
                    Err(AlgError::Parse(format!("unknown variable `{name}`")))
                }
            }
            _ => Err(AlgError::Parse(format!("unknown variable `{name}`"))),
        }
    }
}
