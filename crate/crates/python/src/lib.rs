use std::sync::Arc;

use ::partial_hopf as core;
use core::algebras::BuiltinKind;
use core::hopf::{dual_hopf, from_json, to_json, validate_all, AxiomReport, HopfData, HopfJson};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Outcome of a verification sweep.
#[pyclass(frozen, get_all)]
pub struct Report {
    passed: bool,
    checked: usize,
    failures: Vec<(String, Vec<usize>, String)>,
}

impl From<AxiomReport> for Report {
    fn from(r: AxiomReport) -> Self {
        Report {
            passed: r.passed(),
            checked: r.checked,
            failures: r.failures.into_iter().map(|f| (f.axiom, f.indices, f.detail)).collect(),
        }
    }
}

#[pymethods]
impl Report {
    fn __bool__(&self) -> bool {
        self.passed
    }

    fn __repr__(&self) -> String {
        format!(
            "Report(passed={}, checked={}, failures={})",
            self.passed,
            self.checked,
            self.failures.len()
        )
    }
}

/// A finite-dimensional Hopf algebra over Q(ζₙ) given by structure constants.
#[pyclass(frozen)]
pub struct HopfAlgebra {
    inner: Arc<HopfData>,
}

fn built(kind: BuiltinKind, n: i64) -> PyResult<HopfAlgebra> {
    Ok(HopfAlgebra {
        inner: kind.build(n).map_err(err)?,
    })
}

#[pymethods]
impl HopfAlgebra {
    #[staticmethod]
    fn taft(n: i64) -> PyResult<Self> {
        built(BuiltinKind::Taft, n)
    }

    #[staticmethod]
    fn nichols(n: i64) -> PyResult<Self> {
        built(BuiltinKind::Nichols, n)
    }

    #[staticmethod]
    fn group_algebra(n: i64) -> PyResult<Self> {
        built(BuiltinKind::GroupAlg, n)
    }

    #[staticmethod]
    fn dual_group_algebra(n: i64) -> PyResult<Self> {
        built(BuiltinKind::DualGroupAlg, n)
    }

    /// Parses and validates the JSON structure-constant format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let j: HopfJson = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(HopfAlgebra {
            inner: Arc::new(from_json(&j).map_err(err)?),
        })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&to_json(&self.inner)).expect("json")
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn order(&self) -> u32 {
        self.inner.order()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.basis().to_vec()
    }

    fn validate(&self) -> Report {
        validate_all(&self.inner).into()
    }

    fn dual(&self) -> HopfAlgebra {
        HopfAlgebra {
            inner: Arc::new(dual_hopf(&self.inner, None)),
        }
    }

    fn __repr__(&self) -> String {
        format!("HopfAlgebra({}, dim={})", self.inner.name(), self.inner.dim())
    }
}

fn symbol(h: &HopfData) -> &'static str {
    if h.name().starts_with("taft(") {
        "q"
    } else {
        "z"
    }
}

/// A parametric partial action of `H` on the base field.
#[pyclass(frozen)]
pub struct ActionFamily {
    inner: core::partial::ActionFamily,
}

#[pymethods]
impl ActionFamily {
    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn params(&self) -> Vec<String> {
        self.inner.params.clone()
    }

    /// Nonzero values as `(basis label, expression)`.
    fn table(&self) -> Vec<(String, String)> {
        self.inner.table(symbol(self.inner.algebra()))
    }

    fn verify_partial(&self) -> Report {
        core::partial::verify_partial_action(&self.inner.functional).into()
    }

    fn verify_symmetric(&self) -> Report {
        core::partial::verify_symmetric_action(&self.inner.functional).into()
    }

    fn verify_idempotent(&self) -> Report {
        core::partial::verify_convolution_idempotent(&self.inner.functional).into()
    }

    fn __repr__(&self) -> String {
        format!("ActionFamily({}, params={:?})", self.inner.name, self.inner.params)
    }
}

/// A parametric partial coaction of `H` on the base field.
#[pyclass(frozen)]
pub struct CoactionFamily {
    inner: core::partial::CoactionFamily,
}

#[pymethods]
impl CoactionFamily {
    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn params(&self) -> Vec<String> {
        self.inner.params.clone()
    }

    fn table(&self) -> Vec<(String, String)> {
        self.inner.table(symbol(self.inner.algebra()))
    }

    fn verify_partial(&self) -> Report {
        core::partial::verify_partial_coaction(&self.inner.element).into()
    }

    fn verify_symmetric(&self) -> Report {
        core::partial::verify_symmetric_coaction(&self.inner.element).into()
    }

    fn __repr__(&self) -> String {
        format!("CoactionFamily({}, params={:?})", self.inner.name, self.inner.params)
    }
}

#[pyfunction]
fn action_families(h: &HopfAlgebra) -> PyResult<Vec<ActionFamily>> {
    Ok(core::partial::builtin_action_families(&h.inner)
        .map_err(err)?
        .into_iter()
        .map(|inner| ActionFamily { inner })
        .collect())
}

#[pyfunction]
fn coaction_families(h: &HopfAlgebra) -> PyResult<Vec<CoactionFamily>> {
    Ok(core::partial::builtin_coaction_families(&h.inner)
        .map_err(err)?
        .into_iter()
        .map(|inner| CoactionFamily { inner })
        .collect())
}

/// One family found by the classifier.
#[pyclass(frozen, get_all)]
pub struct Classified {
    family: Py<ActionFamily>,
    branch: String,
    trail: Vec<String>,
    conditions: Vec<String>,
    matches: Option<String>,
}

#[pyclass(frozen, get_all)]
pub struct Classification {
    algebra: String,
    families: Vec<Py<Classified>>,
    exhaustive: bool,
    branches: Vec<String>,
}

#[pyfunction]
#[pyo3(signature = (h, branch_limit = core::classify::DEFAULT_BRANCH_LIMIT, shortcuts = true))]
fn classify(py: Python<'_>, h: &HopfAlgebra, branch_limit: usize, shortcuts: bool) -> PyResult<Classification> {
    let opts = core::classify::ClassifyOptions {
        branch_limit,
        shortcuts,
    };
    let s = py
        .detach(|| core::classify::classify_with(&h.inner, &opts))
        .map_err(err)?;
    let families = s
        .families
        .into_iter()
        .map(|f| {
            let family = Py::new(py, ActionFamily { inner: f.family })?;
            Py::new(
                py,
                Classified {
                    family,
                    branch: f.branch,
                    trail: f.trail,
                    conditions: f.conditions,
                    matches: f.matches,
                },
            )
        })
        .collect::<PyResult<_>>()?;
    Ok(Classification {
        algebra: s.algebra,
        families,
        exhaustive: s.exhaustive,
        branches: s.grouplikes.branches.into_iter().map(|b| b.label).collect(),
    })
}

#[pyfunction]
fn family_count(n: i64) -> PyResult<usize> {
    core::classify::family_count(n).map_err(err)
}

/// `(m over l)_q` at `q = ζₙ`, or in generic `q` when `n` is omitted.
#[pyfunction]
#[pyo3(signature = (m, l, n = None))]
fn q_binomial(m: i64, l: i64, n: Option<u32>) -> String {
    let q = match n {
        Some(n) => core::qcomb::QScalar::zeta(n),
        None => core::qcomb::QScalar::generic(),
    };
    core::qcomb::q_binomial(m, l, &q).to_string()
}

/// Checks `ψ`, `φ` (or `ψ⁻¹`) and the action-to-coaction transport for
/// `taft(n)` or `nichols(n)`.
#[pyfunction]
fn self_duality(py: Python<'_>, h: &HopfAlgebra) -> PyResult<bool> {
    py.detach(|| -> core::Result<bool> {
        let name = h.inner.name();
        let n = h.inner.order() as i64;
        let morphisms_ok = if name.starts_with("taft(") {
            let (psi, phi) = (core::duality::taft_psi(n)?, core::duality::taft_phi(n)?);
            psi.verify().passed() && phi.verify().passed() && phi.compose(&psi)?.is_identity()
        } else if name.starts_with("nichols(") {
            let k = h.inner.dim().trailing_zeros() as i64;
            let psi = core::duality::nichols_psi(k)?;
            psi.verify().passed() && psi.inverse()?.compose(&psi)?.is_identity()
        } else {
            return Err(core::Error::PreconditionViolated(format!("no self-duality for {name}")));
        };
        let transport_ok = core::duality::builtin_transport_checks(&h.inner)?
            .iter()
            .all(|c| c.matches);
        Ok(morphisms_ok && transport_ok)
    })
    .map_err(err)
}

/// `(table id, matches)` for every embedded worked example.
#[pyfunction]
fn check_example_tables() -> PyResult<Vec<(String, bool)>> {
    core::tables::example_tables()
        .iter()
        .map(|t| {
            let d = core::tables::check_table(t).map_err(err)?;
            Ok((d.id.clone(), d.is_empty()))
        })
        .collect()
}

#[pymodule(name = "partial_hopf")]
fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<HopfAlgebra>()?;
    m.add_class::<Report>()?;
    m.add_class::<ActionFamily>()?;
    m.add_class::<CoactionFamily>()?;
    m.add_class::<Classified>()?;
    m.add_class::<Classification>()?;
    m.add_function(wrap_pyfunction!(action_families, m)?)?;
    m.add_function(wrap_pyfunction!(coaction_families, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(family_count, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(self_duality, m)?)?;
    m.add_function(wrap_pyfunction!(check_example_tables, m)?)?;
    Ok(())
}
