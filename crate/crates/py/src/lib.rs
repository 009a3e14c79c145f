//! Python bindings. Results cross the boundary as JSON text; rationals are strings like `"11/30"`.

use pyo3::exceptions::{PyMemoryError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use wps_core::hilbert::ideal_degree;
use wps_core::lowdim::conjecture_report;
use wps_core::param::{entry_table, parameterize_curve};
use wps_core::ring::{RingDocument, WeightSystem};
use wps_core::scroll::{enumerate_scrolls, minimal_degree_bound, BlockSpec};
use wps_core::{fmt_q, WpsError};

fn err(e: WpsError) -> PyErr {
    match e {
        WpsError::Parse(m) => PyValueError::new_err(m),
        WpsError::Budget(m) => PyMemoryError::new_err(m),
        WpsError::Invariant(m) | WpsError::Domain(m) => PyRuntimeError::new_err(m),
    }
}

fn json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("value serializes")
}

/// Runs a CLI command, e.g. `run(["bound", "--weights", "1,1,2,2", "--dim", "1"])`.
#[pyfunction]
fn run(args: Vec<String>) -> PyResult<String> {
    wps_core::cli::run(std::iter::once("wps".to_string()).chain(args)).map_err(err)
}

/// `(dimension, degree)` of V(I) for a ring document in JSON.
#[pyfunction]
fn degree(document: &str) -> PyResult<(usize, String)> {
    let doc = RingDocument::from_json(document).map_err(err)?;
    let (d, deg) = ideal_degree(&doc.ideal().map_err(err)?).map_err(err)?;
    Ok((d, fmt_q(&deg)))
}

#[pyfunction]
fn minimal_degree(weights: Vec<u32>, dim: usize) -> PyResult<String> {
    let ws = WeightSystem::new(weights).map_err(err)?;
    Ok(fmt_q(&minimal_degree_bound(&ws, dim).map_err(err)?))
}

/// Scroll table rows as a JSON array.
#[pyfunction]
#[pyo3(signature = (weights, min_codim = 2))]
fn scrolls(weights: Vec<u32>, min_codim: usize) -> PyResult<String> {
    let ws = WeightSystem::new(weights).map_err(err)?;
    Ok(json(&enumerate_scrolls(&ws, min_codim).map_err(err)?))
}

/// Variable name to parameterizing form, from block data in JSON.
#[pyfunction]
fn parameterize(blocks: &str) -> PyResult<String> {
    let spec = BlockSpec::from_json(blocks).map_err(err)?;
    let ws = spec.ambient().map_err(err)?.ok_or_else(|| PyValueError::new_err("block data names no weights"))?;
    let ps = parameterize_curve(&ws, &spec).map_err(err)?;
    Ok(json(&entry_table(&ps, &ws)))
}

#[pyfunction]
fn threefold_conjecture(m: u32, n: u32) -> PyResult<String> {
    Ok(json(&conjecture_report(m, n).map_err(err)?))
}

#[pymodule]
fn wps(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(degree, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_degree, m)?)?;
    m.add_function(wrap_pyfunction!(scrolls, m)?)?;
    m.add_function(wrap_pyfunction!(parameterize, m)?)?;
    m.add_function(wrap_pyfunction!(threefold_conjecture, m)?)?;
    Ok(())
}
