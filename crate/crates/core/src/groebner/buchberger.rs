use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use crate::arith::Q;
use crate::error::{Result, WpsError};
use crate::ring::{Monomial, Polynomial};

pub(crate) type Exp = Vec<u32>;

/// Resource caps for one Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_bytes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 100_000, max_bytes: 64 << 20 }
    }
}

impl Budget {
    /// Default caps, overridden by `WPS_BUDGET` = `pairs` or `pairs:megabytes`.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var("WPS_BUDGET") {
            let mut it = v.split(':');
            if let Some(p) = it.next().and_then(|s| s.trim().parse().ok()) {
                b.max_pairs = p;
            }
            if let Some(m) = it.next().and_then(|s| s.trim().parse::<usize>().ok()) {
                b.max_bytes = m << 20;
            }
        }
        b
    }
}

/// Polynomial with terms in increasing order; the leading term is last.
#[derive(Clone, Debug)]
pub(crate) struct GPoly {
    pub terms: Vec<(Exp, Q)>,
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quo(b: &[u32], a: &[u32]) -> Exp {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl GPoly {
    pub fn from_poly(f: &Polynomial, ord: &MonomialOrder) -> GPoly {
        let mut terms: Vec<(Exp, Q)> = f.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        GPoly { terms }
    }

    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().map(|(e, c)| (Monomial(e.clone()), c.clone())))
    }

    pub fn lt(&self) -> &Exp {
        &self.terms.last().expect("nonzero").0
    }

    pub fn lc(&self) -> &Q {
        &self.terms.last().expect("nonzero").1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn make_monic(&mut self) {
        if self.is_zero() {
            return;
        }
        let inv = Q::one() / self.lc();
        if inv.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.1 *= &inv;
        }
    }

    fn shifted(&self, m: &[u32]) -> Vec<(Exp, Q)> {
        self.terms.iter().map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone())).collect()
    }
}

/// `p − c·x^m·g` for increasing term lists.
fn sub_mul(p: &[(Exp, Q)], c: &Q, m: &[u32], g: &[(Exp, Q)], ord: &MonomialOrder) -> Vec<(Exp, Q)> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(e, k)| (e.iter().zip(m).map(|(a, b)| a + b).collect::<Exp>(), k)).peekable();
    while i < p.len() || gi.peek().is_some() {
        let o = match (p.get(i), gi.peek()) {
            (Some(a), Some(b)) => ord.cmp(&a.0, &b.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match o {
            Ordering::Less => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let (e, k) = gi.next().unwrap();
                out.push((e, -(c * k)));
            }
            Ordering::Equal => {
                let (e, k) = gi.next().unwrap();
                let v = &p[i].1 - c * k;
                if !v.is_zero() {
                    out.push((e, v));
                }
                i += 1;
            }
        }
    }
    out
}

/// Reduces `p` modulo `basis`. With `full`, every term is reduced, not just the leading one.
pub(crate) fn reduce(p: GPoly, basis: &[&GPoly], ord: &MonomialOrder, full: bool) -> GPoly {
    let mut p = p.terms;
    let mut rem: Vec<(Exp, Q)> = Vec::new();
    while let Some((lt, lc)) = p.last() {
        match basis.iter().find(|g| divides(g.lt(), lt)) {
            Some(g) => {
                let m = quo(lt, g.lt());
                let c = lc / g.lc();
                p = sub_mul(&p, &c, &m, &g.terms, ord);
            }
            None if full => rem.push(p.pop().unwrap()),
            None => break,
        }
    }
    if full {
        rem.reverse();
        GPoly { terms: rem }
    } else {
        GPoly { terms: p }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
    deg: u64,
}

fn spoly(f: &GPoly, g: &GPoly, l: &[u32], ord: &MonomialOrder) -> GPoly {
    let a = f.shifted(&quo(l, f.lt()));
    let b = quo(l, g.lt());
    GPoly { terms: sub_mul(&a, &Q::one(), &b, &g.terms, ord) }
}

/// Reduced Gröbner basis of the span of `gens`, sorted by increasing leading term.
pub(crate) fn buchberger(gens: &[Polynomial], ord: &MonomialOrder, budget: &Budget) -> Result<Vec<GPoly>> {
    let nvars = ord.weights().len();
    let term_bytes = 64 + 4 * nvars;
    let max_terms = (budget.max_bytes / term_bytes).max(1);
    let mut polys: Vec<GPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut stored = 0usize;

    let mut input: Vec<GPoly> = gens.iter().filter(|f| !f.is_zero()).map(|f| GPoly::from_poly(f, ord)).collect();
    input.sort_by(|a, b| ord.cmp(a.lt(), b.lt()));

    let insert = |h: GPoly, polys: &mut Vec<GPoly>, active: &mut Vec<usize>, pairs: &mut Vec<Pair>| {
        let hi = polys.len();
        let hlt = h.lt().clone();
        // Gebauer–Möller update
        let cand: Vec<(usize, Exp)> = active.iter().map(|&g| (g, lcm(polys[g].lt(), &hlt))).collect();
        let mut keep: Vec<(usize, Exp)> = Vec::new();
        for (idx, (g, l)) in cand.iter().enumerate() {
            if coprime(polys[*g].lt(), &hlt) {
                keep.push((*g, l.clone()));
                continue;
            }
            let dominated = cand[idx + 1..].iter().any(|(_, l2)| divides(l2, l))
                || keep.iter().any(|(_, l2)| divides(l2, l));
            if !dominated {
                keep.push((*g, l.clone()));
            }
        }
        pairs.retain(|p| {
            !(divides(&hlt, &p.lcm)
                && lcm(polys[p.i].lt(), &hlt) != p.lcm
                && lcm(polys[p.j].lt(), &hlt) != p.lcm)
        });
        for (g, l) in keep {
            if !coprime(polys[g].lt(), &hlt) {
                let deg = ord.degree(&l);
                pairs.push(Pair { i: g, j: hi, lcm: l, deg });
            }
        }
        active.retain(|&g| !divides(&hlt, polys[g].lt()));
        active.push(hi);
        polys.push(h);
    };

    for f in input {
        let basis: Vec<&GPoly> = active.iter().map(|&i| &polys[i]).collect();
        let mut h = reduce(f, &basis, ord, true);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        stored += h.terms.len();
        insert(h, &mut polys, &mut active, &mut pairs);
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        let (best, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.deg.cmp(&b.deg).then_with(|| ord.cmp(&a.lcm, &b.lcm)).then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        processed += 1;
        if processed > budget.max_pairs {
            return Err(WpsError::budget(format!("Gröbner basis exceeded {} S-pair reductions", budget.max_pairs)));
        }
        let s = spoly(&polys[p.i], &polys[p.j], &p.lcm, ord);
        let basis: Vec<&GPoly> = active.iter().map(|&i| &polys[i]).collect();
        let mut h = reduce(s, &basis, ord, true);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        stored += h.terms.len();
        if stored > max_terms {
            return Err(WpsError::budget(format!(
                "Gröbner basis exceeded {} MB of term storage",
                budget.max_bytes >> 20
            )));
        }
        insert(h, &mut polys, &mut active, &mut pairs);
    }

    // inter-reduce the minimal basis
    let mut out: Vec<GPoly> = active.iter().map(|&i| polys[i].clone()).collect();
    out.sort_by(|a, b| ord.cmp(a.lt(), b.lt()));
    for k in 0..out.len() {
        let f = out[k].clone();
        let others: Vec<&GPoly> = out.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g).collect();
        let lead = f.terms.last().cloned().unwrap();
        let tail = GPoly { terms: f.terms[..f.terms.len() - 1].to_vec() };
        let mut r = reduce(tail, &others, ord, true);
        r.terms.push(lead);
        out[k] = r;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::order::TieBreak;
    use crate::ring::VarTable;

    #[test]
    fn twisted_cubic() {
        let t = VarTable::from_names(&["a", "b", "c", "d"]);
        let gens: Vec<Polynomial> =
            ["a c - b^2", "b d - c^2", "a d - b c"].iter().map(|s| t.parse(s).unwrap()).collect();
        let ord = MonomialOrder::weighted(&[1, 1, 1, 1], TieBreak::RevLex);
        let g = buchberger(&gens, &ord, &Budget::default()).unwrap();
        assert_eq!(g.len(), 3);
        let ord = MonomialOrder::weighted(&[1, 1, 1, 1], TieBreak::Lex);
        let g = buchberger(&gens, &ord, &Budget::default()).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g[0].lt(), &vec![0, 1, 0, 1]);
    }

    #[test]
    fn budget_is_enforced() {
        let t = VarTable::from_names(&["a", "b", "c", "d"]);
        let gens: Vec<Polynomial> =
            ["a c - b^2", "b d - c^2", "a d - b c"].iter().map(|s| t.parse(s).unwrap()).collect();
        let ord = MonomialOrder::weighted(&[1, 1, 1, 1], TieBreak::Lex);
        let b = Budget { max_pairs: 0, ..Budget::default() };
        assert!(matches!(buchberger(&gens, &ord, &b), Err(WpsError::Budget(_))));
    }
}
