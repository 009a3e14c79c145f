//! Determinantal curves in weighted projective threefolds `P(w_0, w_1, w_2, w_3)`.

use std::fmt;

use serde::Serialize;

use crate::arith::{fmt_q, q, Q};
use crate::error::{Result, WpsError};
use crate::groebner::monomial::monomials_of_degree;
use crate::hilbert::ideal_degree;
use crate::ring::{GradedMatrix, Polynomial, VarTable, WeightSystem};
use crate::scroll::minimal_degree_bound;

/// Degrees `(a_1 ≤ a_2 ≤ a_3)` of the first row and offset `b` of the second row of a 2×3 matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThreefoldProfile {
    pub a: [u64; 3],
    pub b: u64,
    pub weights: [u32; 4],
}

impl ThreefoldProfile {
    pub fn new(a: [u64; 3], b: u64, weights: [u32; 4]) -> Result<Self> {
        if a[0] == 0 || a[0] > a[1] || a[1] > a[2] {
            return Err(WpsError::domain(format!("column degrees must satisfy 1 <= a1 <= a2 <= a3, got {a:?}")));
        }
        WeightSystem::new(weights.to_vec())?;
        Ok(ThreefoldProfile { a, b, weights })
    }

    /// Profile of a 2×3 matrix over four variables.
    pub fn of_matrix(m: &GradedMatrix) -> Result<Self> {
        let w = m.ambient().weights();
        if m.rows() != 2 || m.cols() != 3 || w.len() != 4 {
            return Err(WpsError::domain("expected a 2x3 matrix over a weighted threefold"));
        }
        let p = m.profile_of()?;
        let a = [p.col_degrees[0], p.col_degrees[1], p.col_degrees[2]];
        Self::new(a, p.row_offsets[0], [w[0], w[1], w[2], w[3]])
    }

    /// Degrees of the six entries, first row then second row.
    pub fn entry_degrees(&self) -> [[u64; 3]; 2] {
        let [a1, a2, a3] = self.a;
        [[a1, a2, a3], [a1 + self.b, a2 + self.b, a3 + self.b]]
    }
}

impl fmt::Display for ThreefoldProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{})", self.a[0], self.a[1], self.a[2], self.b)
    }
}

impl Serialize for ThreefoldProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `[b(a_1+a_2+a_3+b) + a_1a_2 + a_1a_3 + a_2a_3] / (w_0w_1w_2w_3)`.
pub fn det_curve_degree(p: &ThreefoldProfile) -> Q {
    let [a1, a2, a3] = p.a;
    let b = p.b;
    let num = b * (a1 + a2 + a3 + b) + a1 * a2 + a1 * a3 + a2 * a3;
    let den: u64 = p.weights.iter().map(|&w| w as u64).product();
    Q::new(num.into(), den.into())
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateCurve {
    #[serde(skip)]
    pub matrix: GradedMatrix,
    pub entries: Vec<Vec<String>>,
    pub profile: ThreefoldProfile,
    #[serde(with = "crate::arith::serde_q")]
    pub degree: Q,
    /// Minimal degree of curves in the ambient when it is divisible (`m | n`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisible_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees_with_bound: Option<bool>,
}

/// The curve `I_2 [[x_1, x_2^{(k+1)m−n}, y^k], [x_2^{n−km+1}, y, z]]` in `P(1,1,m,n)`, `k = ⌊n/m⌋`.
pub fn candidate_curve(m: u32, n: u32) -> Result<CandidateCurve> {
    if m < 2 || m > n {
        return Err(WpsError::domain(format!("candidate curve needs 2 <= m <= n, got m={m}, n={n}")));
    }
    let ws = WeightSystem::new(vec![1, 1, m, n])?;
    let t = VarTable::from_names(&["x_1", "x_2", "y", "z"]);
    let k = n / m;
    let e1 = (k + 1) * m - n;
    let e2 = n - k * m + 1;
    let text = [
        ["x_1".to_string(), format!("x_2^{e1}"), format!("y^{k}")],
        [format!("x_2^{e2}"), "y".to_string(), "z".to_string()],
    ];
    let entries: Vec<Vec<Polynomial>> =
        text.iter().map(|r| r.iter().map(|s| t.parse(s)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let matrix = GradedMatrix::new(ws.clone(), entries)?;
    let profile = ThreefoldProfile::of_matrix(&matrix)?;
    let degree = det_curve_degree(&profile);
    let closed = q(1) + Q::new((1 + k as i64).into(), (n as i64).into());
    if closed != degree {
        return Err(WpsError::invariant(format!(
            "candidate degree {} disagrees with 1 + (1+k)/n = {}",
            fmt_q(&degree),
            fmt_q(&closed)
        )));
    }
    let (divisible_bound, agrees_with_bound) = if n % m == 0 {
        let b = minimal_degree_bound(&ws, 1)?;
        (Some(fmt_q(&b)), Some(b == degree))
    } else {
        (None, None)
    };
    let entries = matrix.entries().iter().map(|r| r.iter().map(|e| t.render(e)).collect()).collect();
    Ok(CandidateCurve { matrix, entries, profile, degree, divisible_bound, agrees_with_bound })
}

fn check_mn(m: u32, n: u32) -> Result<()> {
    if m < 2 || m > n {
        return Err(WpsError::domain(format!("need 2 <= m <= n, got m={m}, n={n}")));
    }
    Ok(())
}

/// `1 + 1/m − (n mod m)/(mn)`.
pub fn threefold_lower_bound(m: u32, n: u32) -> Result<Q> {
    check_mn(m, n)?;
    let (m, n) = (m as i64, n as i64);
    Ok(q(1) + Q::new(1.into(), m.into()) - Q::new((n % m).into(), (m * n).into()))
}

/// `1 + 1/m + 1/n − (n mod m)/(mn)`.
pub fn conjectured_bound(m: u32, n: u32) -> Result<Q> {
    check_mn(m, n)?;
    Ok(threefold_lower_bound(m, n)? + Q::new(1.into(), (n as i64).into()))
}

/// `(m + 1 + 1/n)/m`: the minimal degree `m + 1 + 1/n` of a nondegenerate curve in
/// `P(1^{m+2}, n)`, pulled back along the map by all degree-`m` monomials in `x_1, x_2, y`
/// together with `z`, which multiplies degrees by at most `m`.
pub fn veronese_bound(m: u32, n: u32) -> Result<Q> {
    check_mn(m, n)?;
    let (m, n) = (m as i64, n as i64);
    Ok((q(m + 1) + Q::new(1.into(), n.into())) / q(m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub m: u32,
    pub n: u32,
    /// The closed-form bound `1 + 1/m − (n mod m)/(mn)`.
    #[serde(with = "crate::arith::serde_q")]
    pub proven_bound: Q,
    /// Largest bound available: the closed form, the pulled-back bound, and for `m | n`
    /// the divisible minimal degree.
    #[serde(with = "crate::arith::serde_q")]
    pub best_proven_bound: Q,
    #[serde(with = "crate::arith::serde_q")]
    pub conjectured_bound: Q,
    #[serde(with = "crate::arith::serde_q")]
    pub candidate_degree: Q,
    pub gap_closed: bool,
}

pub fn conjecture_report(m: u32, n: u32) -> Result<ConjectureReport> {
    check_mn(m, n)?;
    let proven = threefold_lower_bound(m, n)?;
    let mut best = proven.clone().max(veronese_bound(m, n)?);
    if n % m == 0 {
        let ws = WeightSystem::new(vec![1, 1, m, n])?;
        best = best.max(minimal_degree_bound(&ws, 1)?);
    }
    let conj = conjectured_bound(m, n)?;
    let candidate = candidate_curve(m, n)?.degree;
    let gap_closed = best == conj;
    Ok(ConjectureReport {
        m,
        n,
        proven_bound: proven,
        best_proven_bound: best,
        conjectured_bound: conj,
        candidate_degree: candidate,
        gap_closed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchEntry {
    pub profile: ThreefoldProfile,
    #[serde(with = "crate::arith::serde_q")]
    pub degree: Q,
}

#[derive(Clone, Debug, Serialize)]
pub struct Elimination {
    pub profile: ThreefoldProfile,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub weights: [u32; 4],
    #[serde(with = "crate::arith::serde_q")]
    pub degree_cap: Q,
    pub ceiling: u64,
    pub numeric_survivors: Vec<SearchEntry>,
    pub structurally_eliminated: Vec<Elimination>,
    pub final_survivors: Vec<SearchEntry>,
    /// Final survivors pass necessary conditions only.
    pub note: String,
}

struct Degrees<'a> {
    w: &'a [u32; 4],
}

impl Degrees<'_> {
    fn monomials(&self, d: u64) -> Vec<Vec<u32>> {
        monomials_of_degree(self.w, d)
    }

    /// Variables dividing every monomial of degree `d`.
    fn forced_factors(&self, d: u64) -> Vec<bool> {
        let ms = self.monomials(d);
        (0..4).map(|v| !ms.is_empty() && ms.iter().all(|e| e[v] > 0)).collect()
    }

    fn vars_up_to(&self, d: u64) -> usize {
        self.w.iter().filter(|&&w| w as u64 <= d).count()
    }
}

fn numeric_reject(p: &ThreefoldProfile, dg: &Degrees) -> Option<String> {
    let e = p.entry_degrees();
    for row in &e {
        for &d in row {
            if dg.monomials(d).is_empty() {
                return Some(format!("no monomials of degree {d}"));
            }
        }
    }
    // entries of degree <= D generate a regular sequence inside the subring of variables of weight <= D
    for row in &e {
        for &d in row {
            let k = row.iter().filter(|&&x| x <= d).count();
            if k > dg.vars_up_to(d) {
                return Some(format!("{k} row entries of degree <= {d} but only {} variables", dg.vars_up_to(d)));
            }
        }
    }
    for (d1, d2) in entry_pairs(&e) {
        let (s1, s2) = (dg.monomials(d1), dg.monomials(d2));
        if s1.len() == 1 && s2.len() == 1 && shares_variable(&s1[0], &s2[0]) {
            return Some(format!("monomial entries of degrees {d1} and {d2} share a variable"));
        }
    }
    for (v, &w) in dg.w.iter().enumerate() {
        let w = w as u64;
        let present = e.iter().flatten().any(|&d| d >= w && !dg.monomials(d - w).is_empty());
        if !present {
            return Some(format!("variable {v} of weight {w} cannot appear"));
        }
    }
    None
}

/// Degree pairs of entries sharing a row or a column.
fn entry_pairs(e: &[[u64; 3]; 2]) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for row in e {
        for i in 0..3 {
            for j in i + 1..3 {
                pairs.push((row[i], row[j]));
            }
        }
    }
    for c in 0..3 {
        pairs.push((e[0][c], e[1][c]));
    }
    pairs
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn shares_variable(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).any(|(x, y)| *x > 0 && *y > 0)
}

/// Column operations reduce each entry of a row modulo the entries whose graded piece is a single
/// monomial; row operations reduce a bottom entry modulo a forced top entry of its column.
fn structural_reject(p: &ThreefoldProfile, dg: &Degrees) -> Option<String> {
    let e = p.entry_degrees();
    for (d1, d2) in entry_pairs(&e) {
        let (f1, f2) = (dg.forced_factors(d1), dg.forced_factors(d2));
        if let Some(v) = (0..4).find(|&v| f1[v] && f2[v]) {
            return Some(format!("entries of degrees {d1} and {d2} share the factor of weight {}", dg.w[v]));
        }
    }
    let mut forced_top: [Option<Vec<u32>>; 3] = [None, None, None];
    for (r, row) in e.iter().enumerate() {
        let forced: Vec<Option<Vec<u32>>> = row
            .iter()
            .map(|&d| {
                let ms = dg.monomials(d);
                (ms.len() == 1).then(|| ms[0].clone())
            })
            .collect();
        if r == 0 {
            for c in 0..3 {
                forced_top[c] = forced[c].clone();
            }
        }
        let mut singles: Vec<(usize, Vec<u32>)> = Vec::new();
        for c in 0..3 {
            if let Some(mu) = &forced[c] {
                singles.push((c, mu.clone()));
                continue;
            }
            let residue: Vec<Vec<u32>> = dg
                .monomials(row[c])
                .into_iter()
                .filter(|m| !forced.iter().flatten().any(|mu| divides(mu, m)))
                .collect();
            match residue.len() {
                0 => return Some(format!("row {} entry {} reduces to zero", r + 1, c + 1)),
                1 => singles.push((c, residue[0].clone())),
                _ => {}
            }
        }
        for i in 0..singles.len() {
            for j in i + 1..singles.len() {
                if shares_variable(&singles[i].1, &singles[j].1) {
                    return Some(format!(
                        "row {} entries {} and {} are monomials with a common factor",
                        r + 1,
                        singles[i].0 + 1,
                        singles[j].0 + 1
                    ));
                }
            }
        }
    }
    for c in 0..3 {
        if let Some(mu) = &forced_top[c] {
            let residue = dg.monomials(e[1][c]).into_iter().filter(|m| !divides(mu, m)).count();
            if residue == 0 {
                return Some(format!("column {} bottom entry reduces to zero", c + 1));
            }
        }
    }
    None
}

/// Profiles of 2×3 determinantal curves in `P(w)` of degree at most `cap`.
pub fn profile_search(weights: [u32; 4], cap: &Q) -> Result<SearchReport> {
    profile_search_with_ceiling(weights, cap, 2 * weights[3] as u64)
}

pub fn profile_search_with_ceiling(weights: [u32; 4], cap: &Q, ceiling: u64) -> Result<SearchReport> {
    if weights.windows(2).any(|p| p[0] > p[1]) {
        return Err(WpsError::domain(format!("weights must be sorted, got {weights:?}")));
    }
    WeightSystem::new(weights.to_vec())?;
    let dg = Degrees { w: &weights };
    let top = weights[3] as u64;
    let mut numeric = Vec::new();
    for a3 in 1..=ceiling {
        for a2 in 1..=a3 {
            for a1 in 1..=a2 {
                for b in 0..=ceiling - a3 {
                    if a3 + b < top {
                        continue;
                    }
                    let p = ThreefoldProfile { a: [a1, a2, a3], b, weights };
                    let degree = det_curve_degree(&p);
                    if &degree > cap || numeric_reject(&p, &dg).is_some() {
                        continue;
                    }
                    numeric.push(SearchEntry { profile: p, degree });
                }
            }
        }
    }
    numeric.sort_by(|x, y| x.profile.cmp(&y.profile));
    let mut eliminated = Vec::new();
    let mut survivors = Vec::new();
    for s in &numeric {
        match structural_reject(&s.profile, &dg) {
            Some(reason) => eliminated.push(Elimination { profile: s.profile.clone(), reason }),
            None => survivors.push(s.clone()),
        }
    }
    Ok(SearchReport {
        weights,
        degree_cap: cap.clone(),
        ceiling,
        numeric_survivors: numeric,
        structurally_eliminated: eliminated,
        final_survivors: survivors,
        note: "final survivors satisfy the degree and common-factor necessary conditions; realizability is not certified"
            .into(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FinalRemarkReport {
    pub entries: Vec<Vec<String>>,
    pub profile: ThreefoldProfile,
    #[serde(with = "crate::arith::serde_q")]
    pub formula_degree: Q,
    #[serde(with = "crate::arith::serde_q")]
    pub stated_degree: Q,
    #[serde(with = "crate::arith::serde_q")]
    pub oracle_degree: Q,
    pub oracle_dimension: usize,
    pub formula_matches_oracle: bool,
    pub stated_matches_oracle: bool,
}

/// Degree of `I_2 [[x, y, z], [x^4 + z, x^6 + x^3 y, w]]` in `P(1,3,4,7)` by the closed form and by
/// Gröbner bases, compared against the printed value 13/14.
pub fn final_remark_check() -> Result<FinalRemarkReport> {
    let ws = WeightSystem::new(vec![1, 3, 4, 7])?;
    let t = VarTable::from_names(&["x", "y", "z", "w"]);
    let text = [["x", "y", "z"], ["x^4 + z", "x^6 + x^3*y", "w"]];
    let entries: Vec<Vec<Polynomial>> =
        text.iter().map(|r| r.iter().map(|s| t.parse(s)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let matrix = GradedMatrix::new(ws, entries)?;
    let profile = ThreefoldProfile::of_matrix(&matrix)?;
    let formula = det_curve_degree(&profile);
    let (dim, oracle) = ideal_degree(&matrix.minors(2)?)?;
    let stated = Q::new(13.into(), 14.into());
    Ok(FinalRemarkReport {
        entries: matrix.entries().iter().map(|r| r.iter().map(|e| t.render(e)).collect()).collect(),
        profile,
        formula_matches_oracle: formula == oracle,
        stated_matches_oracle: stated == oracle,
        formula_degree: formula,
        stated_degree: stated,
        oracle_degree: oracle,
        oracle_dimension: dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(a: [u64; 3], b: u64, w: [u32; 4]) -> ThreefoldProfile {
        ThreefoldProfile::new(a, b, w).unwrap()
    }

    #[test]
    fn determinantal_degrees() {
        assert_eq!(det_curve_degree(&tp([1, 1, 1], 1, [1, 1, 1, 1])), q(7));
        assert_eq!(det_curve_degree(&tp([1, 1, 1], 0, [1, 1, 1, 1])), q(3));
        assert_eq!(det_curve_degree(&tp([1, 3, 4], 3, [1, 3, 4, 7])), Q::new(13.into(), 21.into()));
        assert_eq!(det_curve_degree(&tp([1, 3, 5], 2, [1, 3, 4, 7])), Q::new(15.into(), 28.into()));
    }

    #[test]
    fn candidates() {
        assert_eq!(candidate_curve(2, 3).unwrap().degree, Q::new(5.into(), 3.into()));
        assert_eq!(candidate_curve(3, 4).unwrap().degree, Q::new(3.into(), 2.into()));
        let c = candidate_curve(2, 4).unwrap();
        assert_eq!(c.degree, Q::new(7.into(), 4.into()));
        assert_eq!(c.agrees_with_bound, Some(true));
        assert_eq!(c.profile.to_string(), "(1,2,4;0)");
    }

    #[test]
    fn bounds() {
        assert_eq!(threefold_lower_bound(3, 4).unwrap(), Q::new(5.into(), 4.into()));
        assert_eq!(conjectured_bound(3, 4).unwrap(), Q::new(3.into(), 2.into()));
        assert_eq!(threefold_lower_bound(2, 4).unwrap(), Q::new(3.into(), 2.into()));
        assert!(threefold_lower_bound(1, 4).is_err());
    }

    #[test]
    fn gap_closes_on_the_two_residues() {
        for n in 2..=30u32 {
            for m in 2..=n {
                let r = conjecture_report(m, n).unwrap();
                assert_eq!(r.gap_closed, n % m == 0 || n % m == m - 1, "m={m} n={n}");
                assert!(r.best_proven_bound <= r.conjectured_bound);
                assert!(r.conjectured_bound <= r.candidate_degree);
            }
        }
    }

    #[test]
    fn search_1347() {
        let r = profile_search([1, 3, 4, 7], &Q::new(4.into(), 7.into())).unwrap();
        let names: Vec<String> = r.numeric_survivors.iter().map(|s| s.profile.to_string()).collect();
        assert_eq!(names, ["(1,3,5;2)", "(2,3,6;1)"]);
        assert!(r.final_survivors.is_empty());
        assert_eq!(r.structurally_eliminated.len(), 2);
    }

    #[test]
    fn search_keeps_candidate() {
        for (m, n) in [(2, 3), (2, 5), (3, 4), (3, 7)] {
            let c = candidate_curve(m, n).unwrap();
            let r = profile_search([1, 1, m, n], &c.degree).unwrap();
            assert!(r.numeric_survivors.iter().any(|s| s.profile == c.profile), "m={m} n={n}");
        }
    }

    #[test]
    fn final_remark_oracle_matches_formula() {
        let r = final_remark_check().unwrap();
        assert_eq!(r.profile.to_string(), "(1,3,4;3)");
        assert_eq!(r.oracle_dimension, 1);
        assert!(r.formula_matches_oracle, "oracle {}", fmt_q(&r.oracle_degree));
    }

    #[test]
    fn candidates_probe_as_generic() {
        use crate::scroll::{pseudo_1generic_probe, ProbeOutcome};
        for n in 3..=10u32 {
            for m in 2..n {
                let c = candidate_curve(m, n).unwrap();
                let out = pseudo_1generic_probe(&c.matrix, 4).unwrap();
                assert!(matches!(out, ProbeOutcome::ProbableYes { .. }), "m={m} n={n}: {out:?}");
            }
        }
    }
}
