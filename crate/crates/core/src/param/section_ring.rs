//! Binary forms in `s, t`, rational functions with linear denominators, and the ring
//! `Q[s, t, v_1, …, v_k] / (v_i^{r_i} − base_i)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_q, Q};
use crate::error::{Result, WpsError};
use crate::ring::{Monomial, Polynomial, VarTable};

/// `s`, or `t − ε s`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    S,
    Line(Q),
}

pub(crate) fn s() -> Polynomial {
    Polynomial::var(2, 0)
}

pub(crate) fn t() -> Polynomial {
    Polynomial::var(2, 1)
}

impl Base {
    pub fn poly(&self) -> Polynomial {
        match self {
            Base::S => s(),
            Base::Line(e) => &t() - &s().scale(e),
        }
    }

    /// Parses `s`, `t`, `t - s`, `t + 2*s`, ...; the coefficient of `t` (or of `s` when `t` is absent) must be 1.
    pub fn parse(text: &str) -> Result<Base> {
        let f = VarTable::from_names(&["s", "t"]).parse(text)?;
        let cs = f.coeff(&Monomial(vec![1, 0]));
        let ct = f.coeff(&Monomial(vec![0, 1]));
        if f.len() != usize::from(!cs.is_zero()) + usize::from(!ct.is_zero()) {
            return Err(WpsError::parse(format!("section base {text:?} is not a linear form in s, t")));
        }
        if ct.is_zero() {
            return if cs.is_one() { Ok(Base::S) } else { Err(WpsError::parse(format!("section base {text:?} must be s"))) };
        }
        if !ct.is_one() {
            return Err(WpsError::parse(format!("section base {text:?} must be monic in t")));
        }
        Ok(Base::Line(-cs))
    }

    /// Exact quotient `f / base`, if it exists.
    pub fn divide(&self, f: &Polynomial) -> Option<Polynomial> {
        match self {
            Base::S => {
                if f.terms().any(|(m, _)| m.0[0] == 0) {
                    return None;
                }
                Some(Polynomial::from_terms(2, f.terms().map(|(m, c)| (Monomial(vec![m.0[0] - 1, m.0[1]]), c.clone()))))
            }
            Base::Line(eps) => {
                // synthetic division in t with coefficients in Q[s]
                let top = f.terms().map(|(m, _)| m.0[1]).max()?;
                let mut coeff: Vec<Polynomial> = vec![Polynomial::zero(2); top as usize + 1];
                for (m, c) in f.terms() {
                    coeff[m.0[1] as usize].add_term(Monomial(vec![m.0[0], 0]), c.clone());
                }
                let es = s().scale(eps);
                let mut carry = Polynomial::zero(2);
                let mut quot = Polynomial::zero(2);
                for j in (1..=top as usize).rev() {
                    carry = &coeff[j] + &(&es * &carry);
                    quot = &quot + &carry.mul_monomial(&Monomial(vec![0, j as u32 - 1]), &Q::one());
                }
                let rem = &coeff[0] + &(&es * &carry);
                rem.is_zero().then_some(quot)
            }
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::S => write!(f, "s"),
            Base::Line(e) if e.is_zero() => write!(f, "t"),
            Base::Line(e) => {
                let sign = if e.is_positive() { '-' } else { '+' };
                let a = e.abs();
                if a.is_one() {
                    write!(f, "t {sign} s")
                } else {
                    write!(f, "t {sign} {}*s", fmt_q(&a))
                }
            }
        }
    }
}

/// `num / Π base^k`.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Frac {
    pub num: Polynomial,
    pub den: BTreeMap<Base, u32>,
}

impl Frac {
    pub fn poly(num: Polynomial) -> Frac {
        Frac { num, den: BTreeMap::new() }
    }

    fn times_base_pow(&self, b: &Base, k: u32) -> Frac {
        let mut out = self.clone();
        out.num = &out.num * &b.poly().pow(k);
        out
    }

    pub fn add(&self, o: &Frac) -> Frac {
        let mut den = self.den.clone();
        for (b, &k) in &o.den {
            let e = den.entry(b.clone()).or_insert(0);
            *e = (*e).max(k);
        }
        let lift = |f: &Frac| {
            let mut g = Frac::poly(f.num.clone());
            for (b, &k) in &den {
                g = g.times_base_pow(b, k - f.den.get(b).copied().unwrap_or(0));
            }
            g.num
        };
        Frac { num: &lift(self) + &lift(o), den }.reduced()
    }

    pub fn mul(&self, o: &Frac) -> Frac {
        let mut den = self.den.clone();
        for (b, &k) in &o.den {
            *den.entry(b.clone()).or_insert(0) += k;
        }
        Frac { num: &self.num * &o.num, den }.reduced()
    }

    pub fn pow(&self, k: u32) -> Frac {
        let mut out = Frac::poly(Polynomial::one(2));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `self / b`.
    pub fn over(&self, b: &Base) -> Frac {
        let mut out = self.clone();
        *out.den.entry(b.clone()).or_insert(0) += 1;
        out.reduced()
    }

    /// `self · b^k`.
    pub fn times(&self, b: &Base, k: u32) -> Frac {
        let mut out = self.clone();
        let have = out.den.get(b).copied().unwrap_or(0);
        let cancel = have.min(k);
        if cancel > 0 {
            out.den.insert(b.clone(), have - cancel);
        }
        out.times_base_pow(b, k - cancel).reduced()
    }

    /// Cancels base factors shared by numerator and denominator.
    pub fn reduced(mut self) -> Frac {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        for (b, k) in self.den.iter_mut() {
            while *k > 0 {
                match b.divide(&self.num) {
                    Some(q) => {
                        self.num = q;
                        *k -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, k| *k > 0);
        self
    }

    pub fn den_power(&self, b: &Base) -> u32 {
        self.den.get(b).copied().unwrap_or(0)
    }

    /// Value of `f` with variable `i` replaced by `vals[i]`.
    pub fn eval(f: &Polynomial, vals: &[Option<Frac>]) -> Result<Frac> {
        let mut out = Frac::poly(Polynomial::zero(2));
        for (m, c) in f.terms() {
            let mut term = Frac::poly(Polynomial::constant(2, c.clone()));
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = vals[i]
                    .as_ref()
                    .ok_or_else(|| WpsError::invariant(format!("variable {i} used before it was parameterized")))?;
                term = term.mul(&v.pow(e));
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

/// Element of `Q[s, t][v] / (v_i^{r_i} − base_i)` in the basis `v^e`, `0 ≤ e_i < r_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionElem {
    terms: BTreeMap<Vec<u32>, Polynomial>,
}

/// The quotient ring by the section relations.
#[derive(Clone, Debug)]
pub struct SectionRing {
    sections: Vec<(Base, u32)>,
}

impl SectionRing {
    pub fn new(sections: Vec<(Base, u32)>) -> Result<Self> {
        if sections.iter().any(|(_, r)| *r == 0) {
            return Err(WpsError::domain("section order must be positive"));
        }
        Ok(SectionRing { sections })
    }

    pub fn len(&self) -> usize {
        self.sections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sections.is_empty()
    }

    pub fn zero(&self) -> SectionElem {
        SectionElem { terms: BTreeMap::new() }
    }

    /// `coeff · Π v_i^{e_i}` with arbitrary exponents.
    pub fn term(&self, coeff: &Polynomial, exps: &[u32]) -> SectionElem {
        let mut c = coeff.clone();
        let mut e = exps.to_vec();
        for (i, (b, r)) in self.sections.iter().enumerate() {
            let q = e[i] / r;
            if q > 0 {
                c = &c * &b.poly().pow(q);
                e[i] %= r;
            }
        }
        let mut out = self.zero();
        if !c.is_zero() {
            out.terms.insert(e, c);
        }
        out
    }

    pub fn add(&self, a: &SectionElem, b: &SectionElem) -> SectionElem {
        let mut out = a.clone();
        for (e, c) in &b.terms {
            let sum = match out.terms.get(e) {
                Some(x) => x + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                out.terms.remove(e);
            } else {
                out.terms.insert(e.clone(), sum);
            }
        }
        out
    }

    pub fn neg(&self, a: &SectionElem) -> SectionElem {
        SectionElem { terms: a.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn mul(&self, a: &SectionElem, b: &SectionElem) -> SectionElem {
        let mut out = self.zero();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out = self.add(&out, &self.term(&(ca * cb), &e));
            }
        }
        out
    }

    pub fn pow(&self, a: &SectionElem, k: u32) -> SectionElem {
        let mut out = self.term(&Polynomial::one(2), &vec![0; self.len()]);
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    /// Value of `f` with variable `i` replaced by `vals[i]`.
    pub fn eval(&self, f: &Polynomial, vals: &[SectionElem]) -> SectionElem {
        let mut out = self.zero();
        for (m, c) in f.terms() {
            let mut term = self.term(&Polynomial::constant(2, c.clone()), &vec![0; self.len()]);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = self.mul(&term, &self.pow(&vals[i], e));
                }
            }
            out = self.add(&out, &term);
        }
        out
    }

    /// Reduces a polynomial in `s, t, v_1, …, v_k`.
    pub fn reduce(&self, f: &Polynomial) -> Result<SectionElem> {
        if f.nvars() != 2 + self.len() {
            return Err(WpsError::domain("polynomial is not over s, t and the section symbols"));
        }
        let mut out = self.zero();
        for (m, c) in f.terms() {
            let st = Polynomial::monomial(Monomial(vec![m.0[0], m.0[1]]), c.clone());
            out = self.add(&out, &self.term(&st, &m.0[2..]));
        }
        Ok(out)
    }
}

impl SectionElem {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(coefficient, exponents)` when the element is a single basis term.
    pub fn single(&self) -> Option<(&Polynomial, &[u32])> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, e.as_slice()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Polynomial)> {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn p(text: &str) -> Polynomial {
        VarTable::from_names(&["s", "t"]).parse(text).unwrap()
    }

    #[test]
    fn base_division() {
        let b = Base::Line(q(1));
        assert_eq!(b.divide(&p("t^2 - s^2")).unwrap(), p("t + s"));
        assert!(b.divide(&p("t^2 + s^2")).is_none());
        assert_eq!(Base::S.divide(&p("s^2*t + s^3")).unwrap(), p("s*t + s^2"));
        assert_eq!(Base::Line(q(0)).divide(&p("t^3")).unwrap(), p("t^2"));
    }

    #[test]
    fn base_text() {
        for text in ["s", "t", "t - s", "t + s", "t - 3/2*s"] {
            assert_eq!(Base::parse(text).unwrap().to_string(), text);
        }
        assert!(Base::parse("2*t").is_err());
        assert!(Base::parse("t^2").is_err());
    }

    #[test]
    fn fractions_cancel() {
        let x = Frac::poly(p("s^2")).over(&Base::Line(q(0))).over(&Base::Line(q(0)));
        let y = x.times(&Base::Line(q(0)), 3);
        assert_eq!(y, Frac::poly(p("s^2*t")));
        let z = Frac::poly(p("t - s")).over(&Base::Line(q(1)));
        assert_eq!(z, Frac::poly(p("1")));
    }

    #[test]
    fn quotient_ring_reduces() {
        let r = SectionRing::new(vec![(Base::Line(q(0)), 2), (Base::Line(q(1)), 4)]).unwrap();
        let v = r.term(&p("1"), &[0, 1]);
        let v8 = r.pow(&v, 8);
        assert_eq!(v8, r.term(&p("t^2 - 2*s*t + s^2"), &[0, 0]));
        let u = r.term(&p("1"), &[1, 0]);
        assert_eq!(r.mul(&u, &u), r.term(&p("t"), &[0, 0]));
    }
}
