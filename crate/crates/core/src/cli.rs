//! Command-line front end: one verb per operation plus presets for the standard tables.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{fmt_q, parse_q, Q};
use crate::error::{Result, WpsError};
use crate::groebner::resolution_data;
use crate::hilbert::{degree_from_series, ideal_degree, quasi_polynomial, reduce_series};
use crate::lowdim::{candidate_curve, conjecture_report, final_remark_check, profile_search_with_ceiling};
use crate::param::{entry_table, parameterize_curve, verify_parameterization, ParamSeries};
use crate::ring::{RingDocument, WeightSystem};
use crate::scroll::{
    betti_from_multiset, build_kw, check_wnp, degree_display, enumerate_scrolls, minimal_degree_bound, minimal_profile,
    pseudo_1generic_probe, regularities, render_tsv, scroll_degree, standard_perturbations, structural_verdict,
    wnp_threshold_rows, BlockSpec, DepthInfo, Profile,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Parser, Debug)]
#[command(name = "wps", version, about = "Exact computations for curves and scrolls in weighted projective space")]
struct Cli {
    /// Output format; tables default to TSV, everything else to JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Dimension and degree of V(I) from a ring document (generators or a matrix).
    Degree {
        #[arg(long)]
        ideal: String,
    },
    /// Hilbert series of S/I; `--keep` reduces it onto the listed denominator factors.
    Hilbert {
        #[arg(long)]
        ideal: String,
        #[arg(long, value_delimiter = ',')]
        keep: Option<Vec<u32>>,
    },
    /// Hilbert quasi-polynomial of S/I.
    Qp {
        #[arg(long)]
        ideal: String,
    },
    /// Betti table, either of an ideal or of the scroll with the given column degrees.
    Betti {
        #[arg(long, conflicts_with_all = ["weights", "profile"])]
        ideal: Option<String>,
        #[arg(long, requires = "profile")]
        weights: Option<String>,
        /// Column degrees, e.g. `1,3,6,6,6`.
        #[arg(long, requires = "weights")]
        profile: Option<String>,
    },
    /// All weighted scrolls of at least the given codimension.
    Scrolls {
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 2)]
        min_codim: usize,
    },
    /// Greedy minimal-degree profile of a given dimension.
    MinimalProfile {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        dim: usize,
    },
    /// Minimal degree of a non-degenerate subvariety of a given dimension.
    Bound {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        dim: usize,
    },
    /// Matrix in Kronecker–Weierstrass form from block data.
    KwBuild {
        #[arg(long)]
        blocks: String,
        #[arg(long)]
        weights: Option<String>,
        /// Fill missing perturbations with the standard defaults.
        #[arg(long)]
        standard_perturbations: bool,
    },
    /// Structural certificate for block data and/or the sampled probe for a matrix.
    #[command(name = "check-1generic")]
    Check1Generic {
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// Parameterization of a 1-generic curve by a weighted series.
    Param {
        #[arg(long)]
        blocks: String,
        #[arg(long)]
        weights: Option<String>,
    },
    /// Curves in weighted threefolds.
    Threefold {
        #[command(subcommand)]
        cmd: ThreefoldCmd,
    },
    /// Named reproductions.
    Reproduce {
        #[arg(value_enum)]
        preset: Preset,
    },
}

#[derive(Subcommand, Debug)]
enum ThreefoldCmd {
    /// Candidate curve and bounds in P(1,1,m,n).
    Conjecture {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Matrix of the candidate curve in P(1,1,m,n).
    Candidate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Profiles of 2x3 determinantal curves below a degree cap.
    Search {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        cap: String,
        #[arg(long)]
        ceiling: Option<u64>,
    },
    /// Degree of the curve [[x,y,z],[x^4+z, x^6+x^3y, w]] in P(1,3,4,7) by formula and by Gröbner bases.
    FinalRemark,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Figure5,
    Figure1,
    Prop64,
    Example417,
    Example211,
    Example511,
    FinalRemark,
    IntroC1,
    IntroC2,
}

const EXAMPLE211: &str = include_str!("../fixtures/example211.json");
const EXAMPLE417: &str = include_str!("../fixtures/example417_blocks.json");
const INTRO_C1: &str = include_str!("../fixtures/intro_c1_blocks.json");
const INTRO_C2_PARAM: &str = include_str!("../fixtures/intro_c2_param.json");
const INTRO_M2: &str = include_str!("../fixtures/intro_m2.json");
const CI_1347: &str = include_str!("../fixtures/ci_1347.json");

/// Inline JSON when the argument starts with `{` or `[`, otherwise a file path.
fn read_input(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| WpsError::parse(format!("cannot read {arg}: {e}")))
}

fn weights(text: &str) -> Result<WeightSystem> {
    WeightSystem::parse_list(text)
}

fn document(arg: &str) -> Result<RingDocument> {
    RingDocument::from_json(&read_input(arg)?)
}

fn blocks(arg: &str, w: Option<&str>) -> Result<(WeightSystem, BlockSpec)> {
    let spec = BlockSpec::from_json(&read_input(arg)?)?;
    let ws = match (w, spec.ambient()?) {
        (Some(t), _) => weights(t)?,
        (None, Some(ws)) => ws,
        (None, None) => return Err(WpsError::parse("block data names no weights; pass --weights")),
    };
    Ok((ws, spec))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn tsv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}

/// Parses `argv` (including the program name) and returns what should go to standard output.
pub fn run<I, T>(argv: I) -> Result<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => return Ok(e.to_string()),
        Err(e) => return Err(WpsError::parse(e.to_string())),
    };
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Degree { ideal } => {
            let (dim, deg) = ideal_degree(&document(&ideal)?.ideal()?)?;
            Ok(match fmt {
                Some(Format::Tsv) => tsv(&["dimension", "degree"], &[vec![dim.to_string(), fmt_q(&deg)]]),
                _ => pretty(&json!(fmt_q(&deg))),
            })
        }
        Cmd::Hilbert { ideal, keep } => {
            let hs = crate::groebner::hilbert_series(&document(&ideal)?.ideal()?)?;
            let dim = hs.dimension();
            let mut v = json!({ "series": hs.to_json_value(), "dimension": dim });
            if let Some(d) = dim {
                v["degree"] = json!(fmt_q(&degree_from_series(&hs, d)?));
                if let Some(k) = keep {
                    let r = reduce_series(&hs, d, &k)?;
                    v["reduction"] = json!({
                        "kept": r.kept,
                        "p_numerator": r.p_num.render(),
                        "p_denominator": r.p_den.render(),
                        "p_at_one": fmt_q(&r.p_at_one()),
                        "degree": fmt_q(&r.degree()),
                    });
                }
            }
            Ok(pretty(&v))
        }
        Cmd::Qp { ideal } => {
            let hs = crate::groebner::hilbert_series(&document(&ideal)?.ideal()?)?;
            Ok(pretty(&quasi_polynomial(&hs)?.to_json_value()))
        }
        Cmd::Betti { ideal, weights: w, profile } => {
            if let Some(ideal) = ideal {
                let doc = document(&ideal)?;
                let i = doc.ideal()?;
                let r = resolution_data(&i)?;
                return Ok(match fmt {
                    Some(Format::Tsv) => r.betti.render(),
                    _ => pretty(&json!({
                        "betti": r.betti.to_json_value(),
                        "projective_dimension": r.projective_dimension,
                        "depth": r.depth,
                    })),
                });
            }
            let (Some(w), Some(p)) = (w, profile) else {
                return Err(WpsError::parse("betti needs --ideal or both --weights and --profile"));
            };
            let ws = weights(&w)?;
            let u: Vec<u32> = p
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| WpsError::parse(format!("bad column degree {x:?}"))))
                .collect::<Result<_>>()?;
            let prof = Profile::from_multiset(ws.clone(), &u)?;
            let b = betti_from_multiset(&u)?;
            let marks = wnp_threshold_rows(&ws, b.projective_dimension());
            Ok(match fmt {
                Some(Format::Tsv) => b.render_with_marks(&marks),
                _ => pretty(&json!({
                    "profile": prof.display(),
                    "betti": b.to_json_value(),
                    "threshold_rows": marks,
                    "wnp": to_value(&check_wnp(&b, &ws, DepthInfo::CohenMacaulay)),
                })),
            })
        }
        Cmd::Scrolls { weights: w, min_codim } => {
            let rows = enumerate_scrolls(&weights(&w)?, min_codim)?;
            Ok(match fmt {
                Some(Format::Json) => pretty(&to_value(&rows)),
                _ => render_tsv(&rows),
            })
        }
        Cmd::MinimalProfile { weights: w, dim } => {
            let ws = weights(&w)?;
            let p = minimal_profile(&ws, dim)?;
            Ok(pretty(&json!({
                "profile": p.display(),
                "degree": fmt_q(&scroll_degree(&p)),
                "degree_display": degree_display(&p),
                "bound": fmt_q(&minimal_degree_bound(&ws, dim)?),
            })))
        }
        Cmd::Bound { weights: w, dim } => Ok(pretty(&json!(fmt_q(&minimal_degree_bound(&weights(&w)?, dim)?)))),
        Cmd::KwBuild { blocks: b, weights: w, standard_perturbations: std } => {
            let (ws, mut spec) = blocks(&b, w.as_deref())?;
            if std {
                spec = standard_perturbations(&ws, &spec)?;
            }
            let kw = build_kw(&ws, &spec)?;
            let doc = RingDocument::from_matrix(&kw.matrix);
            let profile = kw.matrix.profile_of()?;
            Ok(pretty(&json!({
                "document": serde_json::to_value(&doc).expect("document serializes"),
                "column_degrees": profile.col_degrees,
                "row_offsets": profile.row_offsets,
            })))
        }
        Cmd::Check1Generic { blocks: b, matrix, weights: w, samples } => {
            let mut v = json!({});
            if let Some(b) = b {
                let (ws, spec) = blocks(&b, w.as_deref())?;
                v["structural"] = to_value(&structural_verdict(&build_kw(&ws, &spec)?));
            }
            if let Some(m) = matrix {
                let m = document(&m)?.matrix()?;
                v["probe"] = to_value(&pseudo_1generic_probe(&m, samples)?);
            }
            if v.as_object().is_some_and(|o| o.is_empty()) {
                return Err(WpsError::parse("check-1generic needs --blocks and/or --matrix"));
            }
            Ok(pretty(&v))
        }
        Cmd::Param { blocks: b, weights: w } => {
            let (ws, spec) = blocks(&b, w.as_deref())?;
            Ok(pretty(&param_report(&ws, &spec)?))
        }
        Cmd::Threefold { cmd } => threefold(cmd),
        Cmd::Reproduce { preset } => reproduce(preset, fmt),
    }
}

fn param_report(ws: &WeightSystem, spec: &BlockSpec) -> Result<Value> {
    let ps = parameterize_curve(ws, spec)?;
    let m = build_kw(ws, spec)?.matrix;
    let check = verify_parameterization(&ps, &m)?;
    Ok(json!({
        "entries": entry_table(&ps, ws),
        "series": ps.to_json_value(),
        "verification": to_value(&check),
    }))
}

fn threefold(cmd: ThreefoldCmd) -> Result<String> {
    let v = match cmd {
        ThreefoldCmd::Conjecture { m, n } => to_value(&conjecture_report(m, n)?),
        ThreefoldCmd::Candidate { m, n } => to_value(&candidate_curve(m, n)?),
        ThreefoldCmd::Search { weights: w, cap, ceiling } => {
            let ws = weights(&w)?;
            let ww = ws.weights();
            if ww.len() != 4 {
                return Err(WpsError::parse("threefold search needs four weights"));
            }
            let arr = [ww[0], ww[1], ww[2], ww[3]];
            let cap: Q = parse_q(&cap)?;
            to_value(&profile_search_with_ceiling(arr, &cap, ceiling.unwrap_or(2 * arr[3] as u64))?)
        }
        ThreefoldCmd::FinalRemark => to_value(&final_remark_check()?),
    };
    Ok(pretty(&v))
}

fn reproduce(preset: Preset, fmt: Option<Format>) -> Result<String> {
    match preset {
        Preset::Figure5 => {
            let rows = enumerate_scrolls(&WeightSystem::new(vec![1, 1, 3, 3, 6, 6, 6])?, 2)?;
            Ok(match fmt {
                Some(Format::Json) => pretty(&to_value(&rows)),
                _ => render_tsv(&rows),
            })
        }
        Preset::Figure1 => {
            let ws = WeightSystem::new(vec![1, 1, 3, 3, 6, 6, 6])?;
            let mut text = String::new();
            let mut items = Vec::new();
            for u in [vec![1, 3, 6, 6, 6], vec![3, 3, 6, 6, 6], vec![1, 3, 3, 6, 6]] {
                let p = Profile::from_multiset(ws.clone(), &u)?;
                let b = betti_from_multiset(&u)?;
                let marks = wnp_threshold_rows(&ws, b.projective_dimension());
                let wnp = check_wnp(&b, &ws, DepthInfo::CohenMacaulay);
                text.push_str(&format!("# {}\n{}\n", p.display(), b.render_with_marks(&marks)));
                items.push(json!({
                    "profile": p.display(),
                    "betti": b.to_json_value(),
                    "threshold_rows": marks,
                    "wnp": to_value(&wnp),
                }));
            }
            Ok(match fmt {
                Some(Format::Tsv) => text,
                _ => pretty(&Value::Array(items)),
            })
        }
        Preset::Prop64 => {
            let report = profile_search_with_ceiling([1, 3, 4, 7], &Q::new(4.into(), 7.into()), 14)?;
            let ci = RingDocument::from_json(CI_1347)?;
            let (dim, deg) = ideal_degree(&ci.ideal()?)?;
            Ok(pretty(&json!({
                "search": to_value(&report),
                "complete_intersection": {
                    "generators": ci.generators,
                    "dimension": dim,
                    "degree": fmt_q(&deg),
                },
            })))
        }
        Preset::Example417 => {
            let (ws, spec) = blocks(EXAMPLE417, None)?;
            Ok(pretty(&param_report(&ws, &spec)?))
        }
        Preset::IntroC1 => {
            let (ws, spec) = blocks(INTRO_C1, None)?;
            Ok(pretty(&param_report(&ws, &spec)?))
        }
        Preset::IntroC2 => {
            let m = RingDocument::from_json(INTRO_M2)?.matrix()?;
            let v: Value = serde_json::from_str(INTRO_C2_PARAM).map_err(|e| WpsError::parse(e.to_string()))?;
            let ps = ParamSeries::from_json_value(&v)?;
            let check = verify_parameterization(&ps, &m)?;
            Ok(pretty(&json!({
                "entries": entry_table(&ps, m.ambient()),
                "series": ps.to_json_value(),
                "verification": to_value(&check),
            })))
        }
        Preset::Example211 => {
            let doc = RingDocument::from_json(EXAMPLE211)?;
            let hs = crate::groebner::hilbert_series(&doc.ideal()?)?;
            let d = hs.dimension().ok_or_else(|| WpsError::invariant("empty scheme"))?;
            let mut reductions = Vec::new();
            for kept in [[5, 3], [3, 2]] {
                let r = reduce_series(&hs, d, &kept)?;
                reductions.push(json!({
                    "kept": r.kept,
                    "p_at_one": fmt_q(&r.p_at_one()),
                    "degree": fmt_q(&r.degree()),
                }));
            }
            Ok(pretty(&json!({
                "series": hs.to_json_value(),
                "dimension": d,
                "degree": fmt_q(&degree_from_series(&hs, d)?),
                "reductions": reductions,
            })))
        }
        Preset::Example511 => {
            let ws = WeightSystem::from_grouped(&[(1, 4), (2, 4), (4, 4)])?;
            let mut rows = Vec::new();
            for u in [vec![1, 2, 2, 2, 2, 4], vec![1, 1, 1, 2, 4, 4]] {
                let p = Profile::from_multiset(ws.clone(), &u)?;
                let r = regularities(&p)?;
                rows.push(vec![p.display(), fmt_q(&r.degree), r.k_reg.to_string(), r.w_reg.to_string()]);
            }
            Ok(match fmt {
                Some(Format::Json) => pretty(&json!(rows
                    .iter()
                    .map(|r| json!({"profile": r[0], "degree": r[1], "kReg": r[2].parse::<i64>().unwrap(), "wReg": r[3].parse::<i64>().unwrap()}))
                    .collect::<Vec<_>>())),
                _ => tsv(&["profile", "degree", "kReg", "wReg"], &rows),
            })
        }
        Preset::FinalRemark => Ok(pretty(&to_value(&final_remark_check()?))),
    }
}

/// Structured diagnostic for standard error.
pub fn diagnostic(e: &WpsError) -> String {
    let kind = match e {
        WpsError::Parse(_) => "parse",
        WpsError::Budget(_) => "budget",
        WpsError::Invariant(_) => "invariant",
        WpsError::Domain(_) => "domain",
    };
    let msg = match e {
        WpsError::Parse(m) | WpsError::Budget(m) | WpsError::Invariant(m) | WpsError::Domain(m) => m,
    };
    serde_json::to_string(&json!({ "error": kind, "exit_code": e.exit_code(), "message": msg }))
        .expect("diagnostic serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Result<String> {
        run(std::iter::once("wps").chain(args.iter().copied()))
    }

    #[test]
    fn bound_and_degree() {
        assert_eq!(go(&["bound", "--weights", "1,1,2,2", "--dim", "1"]).unwrap().trim(), "\"2\"");
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example211.json");
        assert_eq!(go(&["degree", "--ideal", path]).unwrap().trim(), "\"11/30\"");
    }

    #[test]
    fn inline_json_input() {
        let doc = r#"{"weights":[1,2,2],"generators":["x_{0,1}"]}"#;
        let out: Value = serde_json::from_str(&go(&["qp", "--ideal", doc]).unwrap()).unwrap();
        assert_eq!(out["period"], 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["bound", "--weights", "1,x", "--dim", "1"]).unwrap_err().exit_code(), 2);
        assert_eq!(go(&["frobnicate"]).unwrap_err().exit_code(), 2);
        assert_eq!(go(&["bound", "--weights", "2,3", "--dim", "1"]).unwrap_err().exit_code(), 1);
        let d = diagnostic(&WpsError::budget("too many pairs"));
        assert!(d.contains("\"exit_code\":3"));
    }

    #[test]
    fn kw_output_feeds_the_probe() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/intro_c1_blocks.json");
        let out: Value = serde_json::from_str(&go(&["kw-build", "--blocks", path]).unwrap()).unwrap();
        let doc = out["document"].to_string();
        let probe: Value = serde_json::from_str(&go(&["check-1generic", "--matrix", &doc]).unwrap()).unwrap();
        assert_eq!(probe["probe"]["result"], "probable_yes");
    }

    #[test]
    fn presets_are_stable() {
        for p in ["figure5", "figure1", "prop64", "example417", "example211", "example511", "intro-c1", "intro-c2"] {
            let a = go(&["reproduce", p]).unwrap();
            let b = go(&["reproduce", p]).unwrap();
            assert_eq!(a, b, "{p}");
        }
    }

    #[test]
    fn help_is_not_an_error() {
        assert!(go(&["--help"]).unwrap().contains("reproduce"));
    }
}
