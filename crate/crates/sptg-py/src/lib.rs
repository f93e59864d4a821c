//! Python module `sptg`: exact values come back as `fractions.Fraction`,
//! `+∞` as `math.inf`.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use sptg::formula::{brute_force_qbf, Formula, Qbf};
use sptg::io::{
    parse_game_or_reduction, render_diagram, serialize_game, serialize_reduction, RenderOptions, ValueDocument,
};
use sptg::reduce::{compile_conp, compile_np, compile_qbf, gen_exp_family, solve_any, OuterMode, ReductionOutput};
use sptg::{ExtendedValue, Rational, StateId};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Accepts `int`, `str` ("p/q") or `Fraction`.
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_str()?.parse::<Rational>().map_err(err)
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn extended<'py>(py: Python<'py>, v: &ExtendedValue) -> PyResult<Bound<'py, PyAny>> {
    match v {
        ExtendedValue::Finite(r) => fraction(py, r),
        ExtendedValue::Infinite => py.import("math")?.getattr("inf"),
    }
}

#[pyclass(name = "Game", module = "sptg", skip_from_py_object)]
#[derive(Clone)]
struct PyGame {
    game: sptg::Game,
}

impl PyGame {
    fn state(&self, id: &str) -> PyResult<StateId> {
        self.game.find(id).ok_or_else(|| PyKeyError::new_err(id.to_string()))
    }
}

#[pymethods]
impl PyGame {
    /// Reads a game document (or the game inside a reduction document).
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let (game, _) = parse_game_or_reduction(text).map_err(err)?;
        Ok(PyGame { game })
    }

    #[staticmethod]
    fn exp_family(i: usize) -> Self {
        PyGame { game: gen_exp_family(i) }
    }

    fn to_json(&self) -> String {
        serialize_game(&self.game)
    }

    #[getter]
    fn states(&self) -> Vec<String> {
        self.game.states().iter().map(|s| s.id.clone()).collect()
    }

    #[getter]
    fn horizon<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.game.horizon())
    }

    fn __len__(&self) -> usize {
        self.game.len()
    }

    /// `{state: [(t, v), ...]}` with `None` for states worth `+∞`.
    fn solve<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let vm = solve_any(&self.game).map_err(err)?;
        let out = PyDict::new(py);
        for s in self.game.state_ids() {
            let f = vm.get(s);
            if f.is_infinite() {
                out.set_item(self.game.id(s), py.None())?;
                continue;
            }
            let pts = PyList::empty(py);
            for (t, v) in f.breakpoints() {
                pts.append((fraction(py, t)?, fraction(py, v)?))?;
            }
            out.set_item(self.game.id(s), pts)?;
        }
        Ok(out)
    }

    fn value<'py>(&self, py: Python<'py>, state: &str, t: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let s = self.state(state)?;
        let v = sptg::value_at(&self.game, s, &rational(t)?).map_err(err)?;
        extended(py, &v)
    }

    fn decide(&self, state: &str, t: &Bound<'_, PyAny>, threshold: &Bound<'_, PyAny>) -> PyResult<bool> {
        sptg::decide(&self.game, self.state(state)?, &rational(t)?, &rational(threshold)?).map_err(err)
    }

    fn event_points<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let vm = solve_any(&self.game).map_err(err)?;
        vm.event_points().iter().map(|t| fraction(py, t)).collect()
    }

    /// SVG diagram; `relative` plots `v + relative·t`.
    #[pyo3(signature = (states=None, relative=None))]
    fn render(&self, states: Option<Vec<String>>, relative: Option<&Bound<'_, PyAny>>) -> PyResult<String> {
        let vm = solve_any(&self.game).map_err(err)?;
        let doc = ValueDocument::new(&self.game, &vm);
        let rho = relative.map(rational).transpose()?.unwrap_or_else(Rational::zero);
        let opts = RenderOptions { states: states.unwrap_or_default(), rho, ..Default::default() };
        render_diagram(&doc, &opts).map_err(err)
    }
}

/// A compiled formula or QBF with its query state and expected values.
#[pyclass(name = "Reduction", module = "sptg")]
struct PyReduction {
    out: ReductionOutput,
}

#[pymethods]
impl PyReduction {
    #[staticmethod]
    #[pyo3(signature = (formula, n=None))]
    fn np(formula: &str, n: Option<usize>) -> PyResult<Self> {
        let f = Formula::parse(formula).map_err(err)?;
        let n = n.unwrap_or(f.max_var());
        Ok(PyReduction { out: compile_np(&f, n).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (formula, n=None))]
    fn conp(formula: &str, n: Option<usize>) -> PyResult<Self> {
        let f = Formula::parse(formula).map_err(err)?;
        let n = n.unwrap_or(f.max_var());
        Ok(PyReduction { out: compile_conp(&f, n).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (qbf, outer="horizontal"))]
    fn tqbf(qbf: &str, outer: &str) -> PyResult<Self> {
        let mode = match outer {
            "horizontal" => OuterMode::Horizontal,
            "decaying" => OuterMode::Decaying,
            other => return Err(err(format!("unknown outer mode {other:?}"))),
        };
        let q = Qbf::parse(qbf).map_err(err)?;
        Ok(PyReduction { out: compile_qbf(&q, mode).map_err(err)? })
    }

    #[getter]
    fn game(&self) -> PyGame {
        PyGame { game: self.out.game.clone() }
    }

    #[getter]
    fn query(&self) -> String {
        self.out.game.id(self.out.query).to_string()
    }

    #[getter]
    fn expected_true<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.out.expected_true)
    }

    #[getter]
    fn expected_false<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.out.expected_false)
    }

    /// `val(query, 0)`.
    fn value<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let v = sptg::solve_dag_streaming(&self.out.game, self.out.query, &Rational::zero())
            .or_else(|_| sptg::value_at(&self.out.game, self.out.query, &Rational::zero()))
            .map_err(err)?;
        extended(py, &v)
    }

    /// Whether the encoded statement holds, read off `val(query, 0)`.
    fn decide(&self) -> PyResult<bool> {
        sptg::decide(&self.out.game, self.out.query, &Rational::zero(), &self.out.midpoint()).map_err(err)
    }

    fn to_json(&self) -> String {
        serialize_reduction(&self.out)
    }
}

/// Truth of a QBF such as `"(forall (x1) (exists (x2) (or x1 x2)))"` by
/// exhaustive evaluation.
#[pyfunction(name = "brute_force_qbf")]
fn py_brute_force_qbf(qbf: &str) -> PyResult<bool> {
    Ok(brute_force_qbf(&Qbf::parse(qbf).map_err(err)?))
}

#[pymodule(name = "sptg")]
fn sptg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGame>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(py_brute_force_qbf, m)?)?;
    Ok(())
}
