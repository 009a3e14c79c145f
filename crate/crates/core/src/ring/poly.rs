use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_q, Q};
use crate::error::{Result, WpsError};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Σ e_i w_i.
    pub fn weighted_degree(&self, weights: &[u32]) -> Result<u64> {
        if weights.len() != self.0.len() {
            return Err(WpsError::domain(format!(
                "monomial has {} exponents but there are {} weights",
                self.0.len(),
                weights.len()
            )));
        }
        Ok(self.wdeg(weights))
    }

    /// Unchecked weighted degree for internal hot paths.
    pub fn wdeg(&self, weights: &[u32]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * k).collect())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Sparse polynomial with exact rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Q::one())
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Q)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The weighted degree shared by all terms, `None` when mixed; zero polynomial errors.
    pub fn homogeneous_degree(&self, weights: &[u32]) -> Result<Option<u64>> {
        if self.is_zero() {
            return Err(WpsError::domain("zero polynomial has no degree"));
        }
        let mut deg = None;
        for m in self.terms.keys() {
            let d = m.weighted_degree(weights)?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Ok(None),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        self.is_zero() || matches!(self.homogeneous_degree(weights), Ok(Some(_)))
    }

    /// Largest monomial in the canonical (exponent-lexicographic) storage order.
    pub fn max_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    /// Scalar multiple whose canonical top coefficient is 1.
    pub fn normalized(&self) -> Polynomial {
        match self.max_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Q::one() / c)),
        }
    }

    /// Substitutes polynomials (all in a common ring) for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Polynomial::zero(target);
        let mut cache: std::collections::HashMap<(usize, u32), Polynomial> = std::collections::HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache.entry((i, e)).or_insert_with(|| images[i].pow(e)).clone();
                t = &t * &p;
            }
            out = &out + &t;
        }
        out
    }

    /// Renders with explicit variable names, highest canonical term first.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&fmt_q(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&fmt_q(&a));
                    out.push('*');
                }
                out.push_str(&m.render(names));
            }
        }
        out
    }

    pub fn map_vars(&self, nvars: usize, f: impl Fn(usize) -> usize) -> Polynomial {
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[f(i)] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Q::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn weighted_degrees() {
        let w = [2, 3, 5, 5];
        assert_eq!(Monomial(vec![0, 0, 0, 0]).weighted_degree(&w).unwrap(), 0);
        assert_eq!(Monomial(vec![3, 1, 0, 0]).weighted_degree(&w).unwrap(), 9);
        assert_eq!(Monomial(vec![0, 0, 1, 1]).weighted_degree(&[1, 1, 2, 2]).unwrap(), 4);
        assert!(Monomial(vec![1, 1]).weighted_degree(&w).is_err());
    }

    #[test]
    fn arithmetic_and_degree() {
        let x = Polynomial::var(3, 0);
        let y = Polynomial::var(3, 1);
        let f = &(&x * &y) - &x.pow(2);
        let g = &f + &x.pow(2);
        assert_eq!(g, &x * &y);
        assert!((&f - &f).is_zero());
        assert_eq!(f.homogeneous_degree(&[1, 1, 2]).unwrap(), Some(2));
        assert_eq!((&x + &Polynomial::var(3, 2)).homogeneous_degree(&[1, 1, 2]).unwrap(), None);
        assert_eq!(Polynomial::constant(3, q(7)).homogeneous_degree(&[1, 1, 2]).unwrap(), Some(0));
        assert!(Polynomial::zero(3).homogeneous_degree(&[1, 1, 2]).is_err());
    }

    #[test]
    fn substitution() {
        // x0^2 - x1 at (s, s^2) vanishes
        let s = Polynomial::var(1, 0);
        let f = &Polynomial::var(2, 0).pow(2) - &Polynomial::var(2, 1);
        assert!(f.substitute(&[s.clone(), s.pow(2)]).is_zero());
    }
}
