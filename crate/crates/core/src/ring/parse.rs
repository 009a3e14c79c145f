//! Text grammar for polynomials: `+ - * / ^ ( )`, integer or `p/q` coefficients,
//! optional `*`, and a table of accepted variable names.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arith::Q;
use crate::error::{Result, WpsError};
use crate::ring::poly::Polynomial;
use crate::ring::weights::WeightSystem;

/// Accepted spellings of each variable plus the canonical names used for output.
#[derive(Clone, Debug)]
pub struct VarTable {
    nvars: usize,
    lookup: HashMap<String, usize>,
    canonical: Vec<String>,
}

impl VarTable {
    /// Plain names, in order; these are also the canonical output names.
    pub fn from_names(names: &[&str]) -> Self {
        let mut t = VarTable { nvars: names.len(), lookup: HashMap::new(), canonical: Vec::new() };
        for (i, n) in names.iter().enumerate() {
            t.lookup.insert(n.to_string(), i);
            t.canonical.push(n.to_string());
        }
        t
    }

    /// Names for a weighted ring: `x0..xn`, `x_{i,j}`, and when there are at most three
    /// weight classes the aliases `x_j`, `y_j`, `z_j` (bare `x`, `y`, `z` for singleton classes).
    /// Canonical output uses `x_{i,j}`.
    pub fn for_weights(ws: &WeightSystem) -> Self {
        let n = ws.nvars();
        let mut t = VarTable { nvars: n, lookup: HashMap::new(), canonical: Vec::new() };
        for v in 0..n {
            let (i, j) = ws.group_of(v);
            let grouped = format!("x_{{{i},{j}}}");
            t.canonical.push(grouped.clone());
            t.lookup.insert(grouped, v);
            t.lookup.insert(format!("x{v}"), v);
        }
        if ws.grouped().len() <= 3 {
            let letters = ["x", "y", "z"];
            for v in 0..n {
                let (i, j) = ws.group_of(v);
                let l = letters[i];
                t.lookup.entry(format!("{l}_{j}")).or_insert(v);
                t.lookup.entry(format!("{l}_{{{j}}}")).or_insert(v);
                if ws.a(i) == 1 {
                    t.lookup.entry(l.to_string()).or_insert(v);
                }
            }
        }
        t
    }

    /// Weighted names extended by caller-supplied names, which take priority.
    pub fn with_names(ws: &WeightSystem, names: &[String]) -> Result<Self> {
        if names.len() != ws.nvars() {
            return Err(WpsError::parse(format!(
                "{} variable names given for {} weights",
                names.len(),
                ws.nvars()
            )));
        }
        let mut t = Self::for_weights(ws);
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(WpsError::parse(format!("bad variable name {n:?}")));
            }
            t.lookup.insert(n.clone(), i);
        }
        Ok(t)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn names(&self) -> &[String] {
        &self.canonical
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    /// Splits a juxtaposed identifier such as `xy` or `x0x1` into known names.
    fn split_identifier(&self, ident: &str) -> Option<Vec<usize>> {
        if let Some(&i) = self.lookup.get(ident) {
            return Some(vec![i]);
        }
        let bytes = ident.len();
        // best[p] = factorization of ident[..p]
        let mut best: Vec<Option<Vec<usize>>> = vec![None; bytes + 1];
        best[0] = Some(vec![]);
        for p in 0..bytes {
            let Some(prefix) = best[p].clone() else { continue };
            for q in (p + 1..=bytes).rev() {
                if !ident.is_char_boundary(q) {
                    continue;
                }
                if let Some(&v) = self.lookup.get(&ident[p..q]) {
                    if best[q].is_none() {
                        let mut f = prefix.clone();
                        f.push(v);
                        best[q] = Some(f);
                    }
                }
            }
        }
        best[bytes].clone()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let tokens = lex(text)?;
        let mut p = Parser { toks: &tokens, pos: 0, vars: self, src: text };
        let out = p.expr()?;
        if p.pos != tokens.len() {
            return Err(WpsError::parse(format!("unexpected {:?} in {text:?}", tokens[p.pos])));
        }
        Ok(out)
    }

    pub fn render(&self, f: &Polynomial) -> String {
        f.render(&self.canonical)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[st..i].iter().collect();
            out.push(Tok::Num(digits.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < chars.len() {
                let d = chars[i];
                if d.is_ascii_alphanumeric() {
                    i += 1;
                } else if d == '_' {
                    i += 1;
                    if i < chars.len() && chars[i] == '{' {
                        while i < chars.len() && chars[i] != '}' {
                            i += 1;
                        }
                        if i == chars.len() {
                            return Err(WpsError::parse(format!("unclosed brace in {s:?}")));
                        }
                        i += 1;
                    }
                } else {
                    break;
                }
            }
            let ident: String = chars[st..i].iter().filter(|c| !c.is_whitespace()).collect();
            out.push(Tok::Ident(ident));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '−' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(WpsError::parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    vars: &'a VarTable,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, what: &str) -> WpsError {
        WpsError::parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    // expr := ['-'|'+'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.vars.nvars;
        let mut acc = Polynomial::zero(n);
        let mut sign = Q::one();
        match self.peek() {
            Some(Tok::Op('-')) => {
                sign = -Q::one();
                self.pos += 1;
            }
            Some(Tok::Op('+')) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = &acc + &t.scale(&sign);
            match self.peek() {
                Some(Tok::Op('+')) => {
                    sign = Q::one();
                    self.pos += 1;
                }
                Some(Tok::Op('-')) => {
                    sign = -Q::one();
                    self.pos += 1;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (['*'|'/'] factor | juxtaposed factor)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    let c = constant_value(&f).ok_or_else(|| self.err("division by a non-constant"))?;
                    if c.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&(Q::one() / c));
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := atom ('^' integer)?
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(k)) => {
                    let k: u32 = k.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => return Err(self.err("expected exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.vars.nvars;
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(n, Q::from_integer(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .vars
                    .split_identifier(&name)
                    .ok_or_else(|| WpsError::parse(format!("unknown variable {name:?} in {:?}", self.src)))?;
                let mut p = Polynomial::one(n);
                for i in idx {
                    p = &p * &Polynomial::var(n, i);
                }
                Ok(p)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                let f = self.factor()?;
                Ok(-&f)
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

fn constant_value(p: &Polynomial) -> Option<Q> {
    if p.is_zero() {
        return Some(Q::zero());
    }
    if p.len() == 1 {
        let (m, c) = p.terms().next().unwrap();
        if m.is_one() {
            return Some(c.clone());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};
    use crate::ring::poly::Monomial;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    #[test]
    fn aliases_agree() {
        let t = VarTable::for_weights(&ws(&[1, 1, 2, 2]));
        let a = t.parse("x_1*y_2 - x2^2").unwrap();
        let b = t.parse("x0 x3 - x_{1,1}^2").unwrap();
        let c = t.parse("x_{0,1}*x_{1,2} - y_1^2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn juxtaposition_and_rationals() {
        let w = ws(&[2, 3, 5, 5]);
        let t = VarTable::for_weights(&w);
        let f = t.parse("z_1 - z_2 + xy").unwrap();
        assert_eq!(f.homogeneous_degree(w.weights()).unwrap(), Some(5));
        let g = t.parse("3/4 x^2 y - 1/2*x^3").unwrap();
        assert_eq!(g.coeff(&Monomial(vec![2, 1, 0, 0])), qf(3, 4));
        assert_eq!(g.coeff(&Monomial(vec![3, 0, 0, 0])), qf(-1, 2));
        let h = t.parse("-(x - y)^2 + 2xy").unwrap();
        assert_eq!(h.coeff(&Monomial(vec![1, 1, 0, 0])), q(4));
    }

    #[test]
    fn round_trip_uses_grouped_names() {
        let t = VarTable::for_weights(&ws(&[1, 1, 2, 2]));
        let f = t.parse("x_2*y_1 - x_1*y_2 + 5/3").unwrap();
        let text = t.render(&f);
        assert!(text.contains("x_{0,2}"), "{text}");
        assert_eq!(t.parse(&text).unwrap(), f);
    }

    #[test]
    fn errors() {
        let t = VarTable::for_weights(&ws(&[1, 1, 2, 2]));
        assert!(t.parse("x12").is_err());
        assert!(t.parse("x0 +").is_err());
        assert!(t.parse("x0 / x1").is_err());
        assert!(t.parse("x0 ? x1").is_err());
        assert!(t.parse("w").is_err());
    }

    #[test]
    fn explicit_names() {
        let w = ws(&[1, 3, 4, 7]);
        let names: Vec<String> = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
        let t = VarTable::with_names(&w, &names).unwrap();
        let f = t.parse("x^4 + z").unwrap();
        assert_eq!(f.homogeneous_degree(w.weights()).unwrap(), Some(4));
    }
}
