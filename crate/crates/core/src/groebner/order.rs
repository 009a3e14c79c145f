use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::ring::WeightSystem;

/// How monomials of equal weighted degree are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TieBreak {
    RevLex,
    Lex,
}

/// Weighted-degree-first monomial order with an optional elimination block made of
/// the first `eliminate` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    weights: Vec<u32>,
    tie: TieBreak,
    eliminate: usize,
}

impl MonomialOrder {
    pub fn weighted(weights: &[u32], tie: TieBreak) -> Self {
        MonomialOrder { weights: weights.to_vec(), tie, eliminate: 0 }
    }

    /// Weighted degree then reverse lexicographic.
    pub fn default_for(ws: &WeightSystem) -> Self {
        Self::weighted(ws.weights(), TieBreak::RevLex)
    }

    /// Any monomial involving one of the first `eliminate` variables is larger than
    /// every monomial free of them.
    pub fn elimination(weights: &[u32], eliminate: usize, tie: TieBreak) -> Self {
        MonomialOrder { weights: weights.to_vec(), tie, eliminate }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie
    }

    pub fn eliminated(&self) -> usize {
        self.eliminate
    }

    pub fn degree(&self, a: &[u32]) -> u64 {
        a.iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    fn block_degree(&self, a: &[u32]) -> u64 {
        a[..self.eliminate].iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        if self.eliminate > 0 {
            let o = self.block_degree(a).cmp(&self.block_degree(b));
            if o != Ordering::Equal {
                return o;
            }
        }
        let o = self.degree(a).cmp(&self.degree(b));
        if o != Ordering::Equal {
            return o;
        }
        match self.tie {
            TieBreak::RevLex => {
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
            TieBreak::Lex => a.cmp(b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn revlex_and_elimination() {
        let o = MonomialOrder::weighted(&[1, 1, 1], TieBreak::RevLex);
        // x0 x2 < x1^2 in revlex
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        let l = MonomialOrder::weighted(&[1, 1, 1], TieBreak::Lex);
        assert_eq!(l.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Greater);
        let w = MonomialOrder::weighted(&[1, 2], TieBreak::RevLex);
        assert_eq!(w.cmp(&[3, 0], &[0, 1]), Ordering::Greater);
        let e = MonomialOrder::elimination(&[1, 1, 5], 1, TieBreak::RevLex);
        assert_eq!(e.cmp(&[1, 0, 0], &[0, 0, 7]), Ordering::Greater);
    }
}
