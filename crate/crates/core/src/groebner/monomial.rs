//! Combinatorics of monomial ideals: minimal generators, codimension, Hilbert numerators.

use std::collections::HashMap;

use crate::upoly::ZPoly;

pub(crate) type Exp = Vec<u32>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Minimal generators, sorted.
pub fn minimalize(mut gens: Vec<Exp>) -> Vec<Exp> {
    gens.sort_by_key(|g| (g.iter().map(|&e| e as u64).sum::<u64>(), g.clone()));
    gens.dedup();
    let mut out: Vec<Exp> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

/// Smallest number of variables meeting the support of every generator; `n + 1`
/// conventionally for the unit ideal, where `n + 1 = nvars`.
pub fn codimension(gens: &[Exp], nvars: usize) -> usize {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return nvars;
    }
    let masks: Vec<u64> = {
        let mut m: Vec<u64> = gens
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |a, (i, _)| a | 1 << i))
            .collect();
        m.sort();
        m.dedup();
        m
    };
    if masks.is_empty() {
        return 0;
    }
    let mut best = nvars;
    hitting(&masks, 0, 0, &mut best);
    best
}

fn hitting(masks: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let Some(&m) = masks.iter().find(|&&m| m & chosen == 0) else {
        *best = size;
        return;
    };
    let mut bits = m;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        bits ^= b;
        hitting(masks, chosen | b, size + 1, best);
    }
}

/// Numerator `N(t)` with `HS(S/I) = N(t) / Π (1 − t^{w_i})`.
pub fn hilbert_numerator(gens: &[Exp], weights: &[u32]) -> ZPoly {
    let mut memo = HashMap::new();
    numerator(minimalize(gens.to_vec()), weights, &mut memo)
}

fn wdeg(e: &[u32], w: &[u32]) -> usize {
    e.iter().zip(w).map(|(&a, &b)| a as usize * b as usize).sum()
}

fn numerator(gens: Vec<Exp>, w: &[u32], memo: &mut HashMap<Vec<Exp>, ZPoly>) -> ZPoly {
    if gens.is_empty() {
        return ZPoly::one();
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return ZPoly::zero();
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    let n = w.len();
    // variable shared by the most generators
    let mut count = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    let (v, &c) = count.iter().enumerate().max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i))).unwrap();
    let result = if c < 2 {
        gens.iter().fold(ZPoly::one(), |acc, g| &acc * &ZPoly::one_minus_t_pow(wdeg(g, w)))
    } else {
        let e = gens.iter().map(|g| g[v]).filter(|&x| x > 0).min().unwrap();
        let mut p = vec![0u32; n];
        p[v] = e;
        let mut plus = gens.clone();
        plus.push(p.clone());
        let colon: Vec<Exp> = gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                h[v] = h[v].saturating_sub(e);
                h
            })
            .collect();
        let a = numerator(minimalize(plus), w, memo);
        let b = numerator(minimalize(colon), w, memo);
        &a + &b.shift(wdeg(&p, w))
    };
    memo.insert(gens, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerators() {
        // (x^2, xy, y^2) in standard P^1: 1 − 3t^2 + 2t^3
        let n = hilbert_numerator(&[vec![2, 0], vec![1, 1], vec![0, 2]], &[1, 1]);
        assert_eq!(n, ZPoly::from_i64(&[1, 0, -3, 2]));
        assert_eq!(hilbert_numerator(&[], &[1, 2]), ZPoly::one());
        assert_eq!(hilbert_numerator(&[vec![0, 0]], &[1, 2]), ZPoly::zero());
    }

    #[test]
    fn codims() {
        assert_eq!(codimension(&[], 4), 0);
        assert_eq!(codimension(&[vec![1, 0, 1, 0], vec![0, 1, 0, 1]], 4), 2);
        assert_eq!(codimension(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], 3), 3);
        assert_eq!(codimension(&[vec![1, 1, 0]], 3), 1);
        assert_eq!(codimension(&[vec![0, 0, 0]], 3), 3);
    }
}

/// All exponent vectors of weighted degree `d`, in lexicographic order.
pub fn monomials_of_degree(weights: &[u32], d: u64) -> Vec<Exp> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; weights.len()];
    fill(weights, 0, d, &mut cur, &mut out);
    out
}

fn fill(w: &[u32], i: usize, left: u64, cur: &mut Exp, out: &mut Vec<Exp>) {
    if i == w.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let wi = w[i] as u64;
    for e in (0..=left / wi).rev() {
        cur[i] = e as u32;
        fill(w, i + 1, left - e * wi, cur, out);
    }
    cur[i] = 0;
}
