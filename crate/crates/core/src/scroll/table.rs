//! Tables of all scrolls in a divisible ambient.

use serde::Serialize;

use super::profile::{degree_display, feasible_profiles, minimal_profile, scroll_degree, Profile};
use super::syzygy::regularities;
use crate::arith::Q;
use crate::error::Result;
use crate::ring::WeightSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScrollRow {
    pub dim: usize,
    #[serde(serialize_with = "ser_profile")]
    pub profile: Profile,
    #[serde(with = "crate::arith::serde_q")]
    pub degree: Q,
    pub degree_display: String,
    pub k_reg: i64,
    pub w_reg: i64,
    pub minimal: bool,
}

fn ser_profile<S: serde::Serializer>(p: &Profile, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.display())
}

/// All feasible profiles with codimension at least `min_codim`, sorted by dimension,
/// then degree, then column multiset.
pub fn enumerate_scrolls(ws: &WeightSystem, min_codim: usize) -> Result<Vec<ScrollRow>> {
    let mut rows = Vec::new();
    for p in feasible_profiles(ws)? {
        if p.codim() < min_codim {
            continue;
        }
        let reg = regularities(&p)?;
        let minimal = minimal_profile(ws, p.dim())? == p;
        rows.push(ScrollRow {
            dim: p.dim(),
            degree: scroll_degree(&p),
            degree_display: degree_display(&p),
            k_reg: reg.k_reg,
            w_reg: reg.w_reg,
            minimal,
            profile: p,
        });
    }
    rows.sort_by(|a, b| {
        (a.dim, &a.degree, a.profile.multiset()).cmp(&(b.dim, &b.degree, b.profile.multiset()))
    });
    Ok(rows)
}

/// Tab-separated rendering with a header line.
pub fn render_tsv(rows: &[ScrollRow]) -> String {
    let mut out = String::from("dim\tprofile\tdegree\tdegree_display\tkReg\twReg\tminimal\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.dim,
            r.profile.display(),
            crate::arith::fmt_q(&r.degree),
            r.degree_display,
            r.k_reg,
            r.w_reg,
            r.minimal
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_scrolls_in_p3() {
        let ws = WeightSystem::new(vec![1, 1, 1, 1]).unwrap();
        let rows = enumerate_scrolls(&ws, 2).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].profile.multiset(), vec![1, 1, 1]);
        let rows = enumerate_scrolls(&ws, 1).unwrap();
        let shown: Vec<_> = rows.iter().map(|r| r.profile.display()).collect();
        assert_eq!(shown, vec!["(1^3)", "(1^2)"]);
    }

    #[test]
    fn fifteen_rows_over_1_1_3_3_6_6_6() {
        let ws = WeightSystem::new(vec![1, 1, 3, 3, 6, 6, 6]).unwrap();
        let rows = enumerate_scrolls(&ws, 2).unwrap();
        let tsv = render_tsv(&rows);
        let got: Vec<String> = rows
            .iter()
            .map(|r| format!("{} {} {} {} {}{}", r.dim, r.profile, crate::arith::fmt_q(&r.degree), r.k_reg, r.w_reg, if r.minimal { " *" } else { "" }))
            .collect();
        let want = [
            "1 (1,3^2,6^3) 13/6 6 1 *",
            "2 (1,3^2,6^2) 1/3 6 -4 *",
            "2 (1,3,6^3) 11/18 9 -1",
            "2 (3^2,6^3) 7/6 11 1",
            "3 (1,3^2,6) 11/216 6 -9 *",
            "3 (1,3,6^2) 5/54 9 -6",
            "3 (1,6^3) 1/6 12 -3",
            "3 (3^2,6^2) 1/6 11 -4",
            "3 (3,6^3) 5/18 14 -1",
            "4 (1,3^2) 5/648 3 -14 *",
            "4 (1,3,6) 1/72 6 -11",
            "4 (3^2,6) 5/216 8 -9",
            "4 (1,6^2) 2/81 9 -8",
            "4 (3,6^2) 1/27 11 -6",
            "4 (6^3) 1/18 14 -3",
        ];
        assert_eq!(got, want);
        assert_eq!(tsv.lines().count(), 16);
    }
}
