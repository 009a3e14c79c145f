//! Parameterizations of 1-generic curves by weighted series on root stacks over `P^1`.

pub mod section_ring;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{fmt_q, parse_q, q, Q};
use crate::error::{Result, WpsError};
use crate::groebner::has_basepoint;
use crate::ring::{GradedMatrix, Polynomial, VarTable, WeightSystem};
use crate::scroll::{build_kw, structural_verdict, BlockKind, BlockSpec, StructuralVerdict};

pub use section_ring::{Base, SectionElem, SectionRing};
use section_ring::{s, t, Frac};

/// A symbol `v` with `v^order = base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSection {
    pub name: String,
    pub base: Base,
    pub order: u32,
}

/// `coefficient(s, t) · Π v_k^{root_factors[k]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamEntry {
    pub coefficient: Polynomial,
    pub root_factors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSeries {
    pub entries: Vec<ParamEntry>,
    /// Degree of the weight-1 entries; weight-`w` entries have degree `w` times this.
    pub base_degree: Q,
    pub sections: Vec<RootSection>,
}

fn section_names(k: usize) -> Vec<String> {
    if k <= 3 {
        ["u", "v", "w"][..k].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=k).map(|i| format!("v_{i}")).collect()
    }
}

impl ParamSeries {
    pub fn ring(&self) -> Result<SectionRing> {
        SectionRing::new(self.sections.iter().map(|r| (r.base.clone(), r.order)).collect())
    }

    pub fn elements(&self) -> Result<Vec<SectionElem>> {
        let ring = self.ring()?;
        Ok(self.entries.iter().map(|e| ring.term(&e.coefficient, &e.root_factors)).collect())
    }

    /// Degree of an entry, counting `v` as `1/order`; `None` for a zero or inhomogeneous coefficient.
    pub fn entry_degree(&self, i: usize) -> Option<Q> {
        let e = &self.entries[i];
        let d = e.coefficient.homogeneous_degree(&[1, 1]).ok()??;
        let roots: Q = self
            .sections
            .iter()
            .zip(&e.root_factors)
            .map(|(r, &x)| Q::new((x as i64).into(), (r.order as i64).into()))
            .sum();
        Some(q(d as i64) + roots)
    }

    pub fn render_entry(&self, i: usize) -> String {
        let e = &self.entries[i];
        let c = e.coefficient.render(&["s".to_string(), "t".to_string()]);
        let roots: Vec<String> = self
            .sections
            .iter()
            .zip(&e.root_factors)
            .filter(|(_, &x)| x > 0)
            .map(|(r, &x)| if x == 1 { r.name.clone() } else { format!("{}^{x}", r.name) })
            .collect();
        if roots.is_empty() {
            return c;
        }
        let r = roots.join("*");
        if c == "1" {
            r
        } else if e.coefficient.len() == 1 {
            format!("{c}*{r}")
        } else {
            format!("({c})*{r}")
        }
    }

    /// Reads entries written over `s, t` and the section names, e.g. `(s^10*t^6 + s^16)*v^4`.
    pub fn parse(ws: &WeightSystem, sections: &[(&str, &str, u32)], entries: &[&str]) -> Result<Self> {
        let sections: Vec<RootSection> = sections
            .iter()
            .map(|(name, base, order)| Ok(RootSection { name: name.to_string(), base: Base::parse(base)?, order: *order }))
            .collect::<Result<_>>()?;
        let mut names = vec!["s", "t"];
        names.extend(sections.iter().map(|r| r.name.as_str()));
        let table = VarTable::from_names(&names);
        let ring = SectionRing::new(sections.iter().map(|r| (r.base.clone(), r.order)).collect())?;
        let mut out = Vec::new();
        for text in entries {
            let el = ring.reduce(&table.parse(text)?)?;
            let entry = if el.is_zero() {
                ParamEntry { coefficient: Polynomial::zero(2), root_factors: vec![0; sections.len()] }
            } else {
                let (c, e) = el
                    .single()
                    .ok_or_else(|| WpsError::parse(format!("entry {text:?} is not a form times a product of sections")))?;
                ParamEntry { coefficient: c.clone(), root_factors: e.to_vec() }
            };
            out.push(entry);
        }
        let mut ps = ParamSeries { entries: out, base_degree: Q::zero(), sections };
        ps.base_degree = ps.infer_base_degree(ws)?;
        Ok(ps)
    }

    fn infer_base_degree(&self, ws: &WeightSystem) -> Result<Q> {
        if self.entries.len() != ws.nvars() {
            return Err(WpsError::domain(format!("expected {} entries, got {}", ws.nvars(), self.entries.len())));
        }
        (0..self.entries.len())
            .find_map(|i| self.entry_degree(i).map(|d| d / q(ws.weights()[i] as i64)))
            .ok_or_else(|| WpsError::domain("no nonzero homogeneous entry"))
    }

    /// Applies the unit `λ` (acting by `λ^{w_i}` on slot `i`) that makes the leading coefficient of the first
    /// nonzero entry equal to 1.
    pub fn normalized(&self, ws: &WeightSystem) -> ParamSeries {
        let mut out = self.clone();
        let Some((i, lead)) = self
            .entries
            .iter()
            .enumerate()
            .find_map(|(i, e)| e.coefficient.max_term().map(|(_, c)| (i, c.clone())))
        else {
            return out;
        };
        // a rational λ with λ^{w_i} = 1/lead is only guaranteed for w_i = 1
        let w = ws.weights();
        if w[i] != 1 {
            return out;
        }
        let lambda = Q::one() / lead;
        for (j, e) in out.entries.iter_mut().enumerate() {
            let mut f = Q::one();
            for _ in 0..w[j] {
                f *= &lambda;
            }
            e.coefficient = e.coefficient.scale(&f);
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let factors: serde_json::Map<String, Value> = self
                    .sections
                    .iter()
                    .zip(&e.root_factors)
                    .filter(|(_, &x)| x > 0)
                    .map(|(r, &x)| (r.name.clone(), json!(x)))
                    .collect();
                json!({
                    "coeff": e.coefficient.render(&["s".to_string(), "t".to_string()]),
                    "factors": factors,
                    "display": self.render_entry(i),
                })
            })
            .collect();
        json!({
            "base_degree": fmt_q(&self.base_degree),
            "sections": self.sections.iter().map(|r| json!({"name": r.name, "base": r.base.to_string(), "order": r.order})).collect::<Vec<_>>(),
            "entries": entries,
        })
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let bad = |m: &str| WpsError::parse(format!("bad parameterization JSON: {m}"));
        let sections: Vec<RootSection> = v["sections"]
            .as_array()
            .ok_or_else(|| bad("missing sections"))?
            .iter()
            .map(|r| {
                Ok(RootSection {
                    name: r["name"].as_str().ok_or_else(|| bad("section name"))?.to_string(),
                    base: Base::parse(r["base"].as_str().ok_or_else(|| bad("section base"))?)?,
                    order: r["order"].as_u64().ok_or_else(|| bad("section order"))? as u32,
                })
            })
            .collect::<Result<_>>()?;
        let table = VarTable::from_names(&["s", "t"]);
        let entries = v["entries"]
            .as_array()
            .ok_or_else(|| bad("missing entries"))?
            .iter()
            .map(|e| {
                let coefficient = table.parse(e["coeff"].as_str().ok_or_else(|| bad("entry coeff"))?)?;
                let mut root_factors = vec![0; sections.len()];
                if let Some(f) = e["factors"].as_object() {
                    for (name, x) in f {
                        let k = sections.iter().position(|r| &r.name == name).ok_or_else(|| bad("unknown section"))?;
                        root_factors[k] = x.as_u64().ok_or_else(|| bad("factor exponent"))? as u32;
                    }
                }
                Ok(ParamEntry { coefficient, root_factors })
            })
            .collect::<Result<_>>()?;
        let base_degree = parse_q(v["base_degree"].as_str().ok_or_else(|| bad("base_degree"))?)?;
        Ok(ParamSeries { entries, base_degree, sections })
    }
}

/// Solves the determinantal relations block by block and clears denominators with root sections.
pub fn parameterize_curve(ws: &WeightSystem, spec: &BlockSpec) -> Result<ParamSeries> {
    let kw = build_kw(ws, spec)?;
    if let StructuralVerdict::Violation { clause } = structural_verdict(&kw) {
        return Err(WpsError::domain(format!("matrix is not structurally 1-generic: {clause}")));
    }
    let g = ws.grouped();
    let n = ws.nvars();
    let mut used = vec![0usize; g.len()];
    for b in &kw.blocks {
        if !matches!(b.kind, BlockKind::Jordan | BlockKind::Nilpotent1) {
            return Err(WpsError::domain("a curve has only Jordan and size-one nilpotent blocks"));
        }
        used[b.degree_index] += b.vars.len();
    }
    if (1..g.len()).any(|i| used[i] != g[i].1) {
        return Err(WpsError::domain("blocks do not use every variable, so the minors do not define a curve"));
    }

    let a0 = g[0].1 as u32;
    let mut vals: Vec<Option<Frac>> = vec![None; n];
    for j in 1..=a0 {
        vals[ws.var_index(0, j as usize)] = Some(Frac::poly(&s().pow(a0 - j) * &t().pow(j - 1)));
    }
    let mut bases: Vec<Base> = Vec::new();
    let mut note = |b: &Base| {
        if !bases.contains(b) {
            bases.push(b.clone());
        }
    };
    for b in &kw.blocks {
        match b.kind {
            BlockKind::Jordan => {
                let base = Base::Line(b.epsilon.clone());
                note(&base);
                let mut next: Option<Frac> = None;
                for c in (0..b.vars.len()).rev() {
                    let p = Frac::eval(&b.perturbations[c], &vals)?;
                    let inner = match next {
                        Some(x) => x.add(&p),
                        None => p,
                    };
                    let x = inner.mul(&Frac::poly(s())).over(&base);
                    vals[b.vars[c]] = Some(x.clone());
                    next = Some(x);
                }
            }
            BlockKind::Nilpotent1 => {
                note(&Base::S);
                let qv = Frac::eval(&b.perturbations[0], &vals)?;
                vals[b.vars[0]] = Some(qv.mul(&Frac::poly(t())).over(&Base::S));
            }
            _ => unreachable!("checked above"),
        }
    }
    let mut fr: Vec<Frac> =
        vals.into_iter().map(|v| v.ok_or_else(|| WpsError::invariant("variable left unparameterized"))).collect::<Result<_>>()?;

    let class: Vec<usize> = (0..n).map(|v| ws.group_of(v).0).collect();
    let mut sections: Vec<(Base, u32)> = Vec::new();
    let mut exps: Vec<Vec<u32>> = vec![Vec::new(); n];
    for base in bases {
        let mut gamma = vec![0u32; g.len()];
        for v in 0..n {
            gamma[class[v]] = gamma[class[v]].max(fr[v].den_power(&base));
        }
        if gamma.iter().all(|&x| x == 0) {
            continue;
        }
        // largest γ_i / m_i, first index on ties
        let mut best = 0;
        for i in 1..g.len() {
            if gamma[i] as u64 * g[best].0 as u64 > gamma[best] as u64 * g[i].0 as u64 {
                best = i;
            }
        }
        let r = g[best].0;
        for v in 0..n {
            let e = gamma[best] * g[class[v]].0;
            fr[v] = fr[v].times(&base, e / r);
            exps[v].push(e % r);
        }
        sections.push((base, r));
    }
    if let Some(v) = fr.iter().position(|f| !f.den.is_empty()) {
        return Err(WpsError::invariant(format!("denominator of variable {v} survived clearing")));
    }
    let keep: Vec<usize> = (0..sections.len()).filter(|&k| exps.iter().any(|e| e[k] > 0)).collect();
    let names = section_names(keep.len());
    let sections: Vec<RootSection> = keep
        .iter()
        .zip(names)
        .map(|(&k, name)| RootSection { name, base: sections[k].0.clone(), order: sections[k].1 })
        .collect();
    let entries: Vec<ParamEntry> = fr
        .into_iter()
        .zip(exps)
        .map(|(f, e)| ParamEntry { coefficient: f.num, root_factors: keep.iter().map(|&k| e[k]).collect() })
        .collect();
    let mut ps = ParamSeries { entries, base_degree: Q::zero(), sections };
    ps.base_degree = ps.infer_base_degree(ws)?;
    Ok(ps)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub minors_vanish: bool,
    pub homogeneous: bool,
    pub basepoint_free: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Checks that the series kills the 2×2 minors of `m`, is homogeneous, and has no base points.
pub fn verify_parameterization(ps: &ParamSeries, m: &GradedMatrix) -> Result<VerifyReport> {
    let ws = m.ambient();
    if ps.entries.len() != ws.nvars() {
        return Err(WpsError::domain(format!(
            "{} entries for an ambient with {} variables",
            ps.entries.len(),
            ws.nvars()
        )));
    }
    let ring = ps.ring()?;
    let vals = ps.elements()?;
    let mut failures = Vec::new();

    let img: Vec<Vec<SectionElem>> =
        m.entries().iter().map(|row| row.iter().map(|f| ring.eval(f, &vals)).collect()).collect();
    let mut minors_vanish = true;
    for r1 in 0..m.rows() {
        for r2 in r1 + 1..m.rows() {
            for c1 in 0..m.cols() {
                for c2 in c1 + 1..m.cols() {
                    let a = ring.mul(&img[r1][c1], &img[r2][c2]);
                    let b = ring.mul(&img[r1][c2], &img[r2][c1]);
                    if !ring.add(&a, &ring.neg(&b)).is_zero() {
                        minors_vanish = false;
                        failures.push(format!("minor on rows {},{} and columns {},{} does not vanish", r1 + 1, r2 + 1, c1 + 1, c2 + 1));
                    }
                }
            }
        }
    }

    let mut homogeneous = true;
    for (i, e) in ps.entries.iter().enumerate() {
        if e.coefficient.is_zero() {
            continue;
        }
        let want = &ps.base_degree * q(ws.weights()[i] as i64);
        match ps.entry_degree(i) {
            Some(d) if d == want => {}
            Some(d) => {
                homogeneous = false;
                failures.push(format!("entry {} has degree {}, expected {}", i + 1, fmt_q(&d), fmt_q(&want)));
            }
            None => {
                homogeneous = false;
                failures.push(format!("entry {} is not homogeneous", i + 1));
            }
        }
    }

    let mut basepoint_free = true;
    let coeffs: Vec<Polynomial> = ps.entries.iter().map(|e| e.coefficient.clone()).collect();
    if has_basepoint(&coeffs) {
        basepoint_free = false;
        failures.push("the coefficients share a linear factor".into());
    }
    for (k, r) in ps.sections.iter().enumerate() {
        let free = ps
            .entries
            .iter()
            .any(|e| e.root_factors[k] == 0 && !e.coefficient.is_zero() && r.base.divide(&e.coefficient).is_none());
        if !free {
            basepoint_free = false;
            failures.push(format!("every entry vanishes where {} = 0", r.name));
        }
    }
    let passed = failures.is_empty();
    Ok(VerifyReport { minors_vanish, homogeneous, basepoint_free, failures, passed })
}

/// Entries as a map from variable name to rendered value.
pub fn entry_table(ps: &ParamSeries, ws: &WeightSystem) -> BTreeMap<String, String> {
    let t = VarTable::for_weights(ws);
    (0..ps.entries.len()).map(|i| (t.names()[i].clone(), ps.render_entry(i))).collect()
}
