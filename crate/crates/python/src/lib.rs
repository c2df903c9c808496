//! Python bindings. Polynomials cross the boundary as `(min_deg, coeffs)`
//! tuples; full reports cross as JSON strings with the same shape the CLI
//! emits.

use lorenz_links::invariants::{self, Bracket, InvariantOptions};
use lorenz_links::verify;
use lorenz_links::{braid, grid, lorenz, parse};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: lorenz_links::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn poly_tuple(p: &lorenz_links::laurent::LaurentPoly) -> (i64, Vec<i64>) {
    // the zero polynomial has no degrees; report (0, [])
    (p.min_degree().unwrap_or(0), p.coeffs().to_vec())
}

fn options(max_bracket_crossings: usize) -> InvariantOptions {
    InvariantOptions {
        max_bracket_crossings,
        ..Default::default()
    }
}

#[pyclass(frozen)]
struct LorenzVector {
    inner: lorenz::LorenzVector,
}

#[pymethods]
impl LorenzVector {
    #[new]
    fn new(entries: Vec<u32>) -> PyResult<Self> {
        lorenz::LorenzVector::new(entries)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    /// Accepts run-length notation (`3^4,5^3`) or pair notation
    /// (`(3,4),(5,3)`).
    #[staticmethod]
    fn parse(spec: &str) -> PyResult<Self> {
        let inner = if spec.trim_start().starts_with('(') {
            parse::parse_tlink_spec(spec).map(|t| t.decompress())
        } else {
            parse::parse_vector_spec(spec)
        }
        .map_err(err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_tlink(pairs: Vec<(u32, u32)>) -> PyResult<Self> {
        lorenz::TLinkParams::new(pairs)
            .map(|t| Self {
                inner: t.decompress(),
            })
            .map_err(err)
    }

    #[getter]
    fn entries(&self) -> Vec<u32> {
        self.inner.entries().to_vec()
    }

    fn spec(&self) -> String {
        self.inner.spec_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LorenzVector(\"{}\")", self.inner.spec_string())
    }

    fn tlink(&self) -> Vec<(u32, u32)> {
        self.inner.compress().pairs().to_vec()
    }

    fn shuffle_images(&self) -> Vec<usize> {
        self.inner.shuffle().images().to_vec()
    }

    fn lorenz_braid(&self) -> BraidWord {
        BraidWord {
            inner: braid::lorenz_word(&self.inner.shuffle()),
        }
    }

    fn t_braid(&self) -> BraidWord {
        BraidWord {
            inner: braid::tlink_word(&self.inner.compress()),
        }
    }

    fn components(&self) -> usize {
        grid::GridDiagram::from_shuffle(&self.inner.shuffle()).components()
    }

    fn grid_ascii(&self) -> String {
        grid::GridDiagram::from_shuffle(&self.inner.shuffle()).render_ascii()
    }

    fn grid_svg(&self) -> String {
        grid::GridDiagram::from_shuffle(&self.inner.shuffle()).render_svg()
    }

    /// Crossings of the grid diagram as `(col, row, sign)` triples.
    fn grid_crossings(&self) -> Vec<(usize, usize, i8)> {
        grid::GridDiagram::from_shuffle(&self.inner.shuffle())
            .crossings()
            .iter()
            .map(|c| (c.col, c.row, c.sign))
            .collect()
    }

    /// True when all representations agree on every comparable invariant.
    #[pyo3(signature = (max_bracket_crossings = invariants::DEFAULT_BRACKET_CROSSING_LIMIT))]
    fn verify(&self, max_bracket_crossings: usize) -> PyResult<bool> {
        verify::verify_instance(&self.inner, &options(max_bracket_crossings))
            .map(|r| r.verified)
            .map_err(err)
    }

    /// Full cross-check result as a JSON string.
    #[pyo3(signature = (max_bracket_crossings = invariants::DEFAULT_BRACKET_CROSSING_LIMIT))]
    fn verify_json(&self, max_bracket_crossings: usize) -> PyResult<String> {
        let r =
            verify::verify_instance(&self.inner, &options(max_bracket_crossings)).map_err(err)?;
        serde_json::to_string_pretty(&r).map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

#[pyclass(frozen)]
struct BraidWord {
    inner: braid::BraidWord,
}

#[pymethods]
impl BraidWord {
    #[new]
    fn new(strands: usize, word: Vec<i32>) -> PyResult<Self> {
        braid::BraidWord::new(strands, word)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    fn strands(&self) -> usize {
        self.inner.strands()
    }

    fn word(&self) -> Vec<i32> {
        self.inner.word().to_vec()
    }

    fn text(&self) -> String {
        self.inner.text()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "BraidWord({}, {:?})",
            self.inner.strands(),
            self.inner.word()
        )
    }

    fn is_positive(&self) -> bool {
        self.inner.is_positive()
    }

    fn permutation(&self) -> Vec<usize> {
        self.inner.permutation().images().to_vec()
    }

    fn components(&self) -> usize {
        self.inner.closure_components()
    }

    fn euler_characteristic(&self) -> PyResult<i64> {
        self.inner.positive_euler_characteristic().map_err(err)
    }

    /// Alexander polynomial of the closure as `(min_deg, coeffs)`.
    fn alexander(&self) -> PyResult<(i64, Vec<i64>)> {
        invariants::alexander(&self.inner)
            .map(|p| poly_tuple(&p))
            .map_err(err)
    }

    /// Writhe-normalized bracket of the closure as `(min_deg, coeffs)`,
    /// or None when the diagram exceeds the crossing cap.
    #[pyo3(signature = (max_bracket_crossings = invariants::DEFAULT_BRACKET_CROSSING_LIMIT))]
    fn kauffman_f(&self, max_bracket_crossings: usize) -> Option<(i64, Vec<i64>)> {
        match invariants::normalized_f(&self.inner.closure_planar(), max_bracket_crossings) {
            Bracket::Computed(p) => Some(poly_tuple(&p)),
            Bracket::Skipped { .. } => None,
        }
    }
}

#[pyfunction]
fn enumerate_vectors(max_sum: u32) -> Vec<LorenzVector> {
    verify::enumerate_vectors(max_sum)
        .into_iter()
        .map(|inner| LorenzVector { inner })
        .collect()
}

#[pyfunction]
#[pyo3(signature = (max_sum, max_bracket_crossings = invariants::DEFAULT_BRACKET_CROSSING_LIMIT))]
fn battery_json(max_sum: u32, max_bracket_crossings: usize) -> PyResult<String> {
    let s = verify::battery(max_sum, &options(max_bracket_crossings)).map_err(err)?;
    serde_json::to_string_pretty(&s).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn lorenz_links_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<LorenzVector>()?;
    m.add_class::<BraidWord>()?;
    m.add_function(wrap_pyfunction!(enumerate_vectors, m)?)?;
    m.add_function(wrap_pyfunction!(battery_json, m)?)?;
    Ok(())
}
