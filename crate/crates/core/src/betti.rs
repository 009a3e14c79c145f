//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Result, WpsError};

/// Sparse table `(i, j) ↦ β_{i,j}` of a graded free resolution.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    i: usize,
    j: u64,
    beta: u64,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(it: impl IntoIterator<Item = ((usize, u64), u64)>) -> Self {
        let mut t = Self::new();
        for ((i, j), b) in it {
            t.add(i, j, b);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: u64, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Length of the resolution.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0; self.projective_dimension() + 1];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    /// Largest internal degree in column `i`.
    pub fn max_degree(&self, i: usize) -> Option<u64> {
        self.entries.keys().filter(|k| k.0 == i).map(|k| k.1).max()
    }

    pub fn min_degree(&self, i: usize) -> Option<u64> {
        self.entries.keys().filter(|k| k.0 == i).map(|k| k.1).min()
    }

    /// `max (j − i)` over nonzero entries.
    pub fn height(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    /// Column `i` as `row ↦ β` with row `j − i`.
    pub fn column(&self, i: usize) -> BTreeMap<i64, u64> {
        self.entries
            .iter()
            .filter(|(k, _)| k.0 == i)
            .map(|(&(i, j), &b)| (j as i64 - i as i64, b))
            .collect()
    }

    /// Macaulay-style layout: row `j − i`, column `i`, dots for zeros.
    pub fn render(&self) -> String {
        self.render_with_marks(&[])
    }

    /// As [`render`](Self::render), with `marks[i-1]` the row to flag in column `i`
    /// (a trailing `*`; a `-` stands in for a flagged zero).
    pub fn render_with_marks(&self, marks: &[i64]) -> String {
        let pd = self.projective_dimension();
        let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap_or(0).min(0);
        let hi = self.height().max(marks.iter().copied().max().unwrap_or(0));
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        cells.push(header);
        let mut total = vec!["total:".to_string()];
        total.extend(self.totals().iter().map(|b| b.to_string()));
        cells.push(total);
        for r in lo..=hi {
            let mut row = vec![format!("{r}:")];
            for i in 0..=pd {
                let j = r + i as i64;
                let b = if j < 0 { 0 } else { self.get(i, j as u64) };
                let marked = i >= 1 && marks.get(i - 1) == Some(&r);
                let s = match (b, marked) {
                    (0, false) => ".".to_string(),
                    (0, true) => "-".to_string(),
                    (b, false) => b.to_string(),
                    (b, true) => format!("{b}*"),
                };
                row.push(s);
            }
            cells.push(row);
        }
        let ncol = pd + 2;
        let widths: Vec<usize> =
            (0..ncol).map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &cells {
            let mut line = String::new();
            for (c, s) in row.iter().enumerate() {
                if c > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{:>w$}", s, w = widths[c]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let v: Vec<Entry> = self.entries().map(|(i, j, beta)| Entry { i, j, beta }).collect();
        serde_json::json!({ "betti": v })
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let arr = v.get("betti").cloned().unwrap_or_else(|| v.clone());
        let es: Vec<Entry> =
            serde_json::from_value(arr).map_err(|e| WpsError::parse(format!("betti table: {e}")))?;
        Ok(Self::from_entries(es.into_iter().map(|e| ((e.i, e.j), e.beta))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_roundtrip() {
        let t = BettiTable::from_entries([((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]);
        assert_eq!(t.totals(), vec![1, 3, 2]);
        assert_eq!(t.height(), 1);
        let txt = t.render();
        assert_eq!(txt, "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
        let back = BettiTable::from_json_value(&t.to_json_value()).unwrap();
        assert_eq!(back, t);
    }
}
