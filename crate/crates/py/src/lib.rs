//! Python bindings. Slopes cross the boundary as exact `(numerator,
//! denominator)` integer pairs; nothing is ever rounded to a float.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use multicurve as mc;

fn err(e: mc::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn slope_pair(r: mc::Rational) -> (i128, i128) {
    (r.numer(), r.denom())
}

#[pyclass(name = "CurveContext", frozen, from_py_object)]
#[derive(Clone)]
struct PyCurveContext {
    inner: mc::CurveContext,
}

#[pymethods]
impl PyCurveContext {
    #[new]
    fn new(n: i64, g: i64, deg_l: i64) -> PyResult<Self> {
        Ok(PyCurveContext {
            inner: mc::CurveContext::new(n, g, deg_l).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> i64 {
        self.inner.n()
    }

    #[getter]
    fn g(&self) -> i64 {
        self.inner.g()
    }

    #[getter]
    fn deg_l(&self) -> i64 {
        self.inner.l()
    }

    fn __repr__(&self) -> String {
        format!(
            "CurveContext(n={}, g={}, deg_l={})",
            self.inner.n(),
            self.inner.g(),
            self.inner.l()
        )
    }
}

#[pyclass(name = "Invariants", frozen, from_py_object)]
#[derive(Clone)]
struct PyInvariants {
    inner: mc::Invariants,
}

#[pymethods]
impl PyInvariants {
    #[new]
    fn new(r: i64, deg: i64) -> PyResult<Self> {
        Ok(PyInvariants {
            inner: mc::Invariants::new(r, deg).map_err(err)?,
        })
    }

    #[getter]
    fn r(&self) -> i64 {
        self.inner.r()
    }

    #[getter]
    fn deg(&self) -> i64 {
        self.inner.deg()
    }

    /// Exact slope as a (numerator, denominator) pair.
    fn slope(&self) -> PyResult<(i128, i128)> {
        Ok(slope_pair(self.inner.slope().map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Invariants(r={}, deg={})", self.inner.r(), self.inner.deg())
    }

    fn __eq__(&self, other: &PyInvariants) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "RigidSheaf", frozen)]
struct PyRigidSheaf {
    inner: mc::RigidSheaf,
}

#[pymethods]
impl PyRigidSheaf {
    #[new]
    fn new(ctx: PyCurveContext, a: i64, k: i64, deg_e: i64, deg_f: i64) -> PyResult<Self> {
        Ok(PyRigidSheaf {
            inner: mc::RigidSheaf::new(ctx.inner, a, k, deg_e, deg_f).map_err(err)?,
        })
    }

    fn invariants(&self) -> PyResult<PyInvariants> {
        Ok(PyInvariants {
            inner: self.inner.invariants().map_err(err)?,
        })
    }

    /// The bundles E, F, V on the reduced curve as (rank, deg) pairs.
    fn e(&self) -> (i64, i64) {
        (self.inner.e().rank(), self.inner.e().deg())
    }

    fn f(&self) -> (i64, i64) {
        (self.inner.f().rank(), self.inner.f().deg())
    }

    fn v(&self) -> PyResult<(i64, i64)> {
        let v = self.inner.v().map_err(err)?;
        Ok((v.rank(), v.deg()))
    }

    fn first_graded(&self) -> PyResult<Vec<(i64, i64)>> {
        Ok(self
            .inner
            .first_graded()
            .map_err(err)?
            .iter()
            .map(|b| (b.rank(), b.deg()))
            .collect())
    }

    fn second_graded(&self) -> PyResult<Vec<(i64, i64)>> {
        Ok(self
            .inner
            .second_graded()
            .map_err(err)?
            .iter()
            .map(|b| (b.rank(), b.deg()))
            .collect())
    }

    /// Verdict of the rigid-type rule with the given premise statuses
    /// ("stable", "semistable" or "unknown") for E, F, V.
    fn certify(&self, e: &str, f: &str, v: &str) -> PyResult<String> {
        let premise = |subject: &str, status: &str| -> PyResult<mc::Premise> {
            let status = match status {
                "stable" => mc::StabilityStatus::Stable,
                "semistable" => mc::StabilityStatus::Semistable,
                "unknown" => mc::StabilityStatus::Unknown,
                other => {
                    return Err(PyValueError::new_err(format!(
                        "unknown premise status '{other}'"
                    )))
                }
            };
            Ok(mc::Premise::declared(subject, status))
        };
        let cert = mc::theo3_certify(
            &self.inner,
            &premise("E", e)?,
            &premise("F", f)?,
            &premise("V", v)?,
        )
        .map_err(err)?;
        Ok(match cert.conclusion {
            mc::StabilityStatus::Stable => "stable",
            mc::StabilityStatus::Semistable => "semistable",
            mc::StabilityStatus::Unknown => "unknown",
        }
        .into())
    }
}

#[pyclass(name = "FiltrationSlice", frozen)]
struct PyFiltrationSlice {
    inner: mc::FiltrationSlice,
}

#[pymethods]
impl PyFiltrationSlice {
    #[new]
    #[pyo3(signature = (ctx, total, sub, k, t=0))]
    fn new(
        ctx: PyCurveContext,
        total: PyInvariants,
        sub: PyInvariants,
        k: i64,
        t: i64,
    ) -> PyResult<Self> {
        Ok(PyFiltrationSlice {
            inner: mc::FiltrationSlice::new(ctx.inner, total.inner, sub.inner, k, t)
                .map_err(err)?,
        })
    }

    fn cor2_check(&self) -> PyResult<bool> {
        mc::cor2_check(&self.inner).map_err(err)
    }

    /// The two gate inequalities (non-strict, strict) of the slice rule.
    fn eqx(&self) -> PyResult<(bool, bool, bool, bool)> {
        let rep = mc::eqx_check(&self.inner).map_err(err)?;
        Ok((rep.first, rep.second, rep.first_strict, rep.second_strict))
    }

    fn dual_total(&self) -> PyResult<PyInvariants> {
        Ok(PyInvariants {
            inner: mc::slice_derived(&self.inner).map_err(err)?.dual_total,
        })
    }
}

#[pyfunction]
fn dual_invariants(inv: PyInvariants, torsion_len: i64, ctx: PyCurveContext) -> PyResult<PyInvariants> {
    Ok(PyInvariants {
        inner: mc::dual_invariants(inv.inner, torsion_len, &ctx.inner).map_err(err)?,
    })
}

#[pyfunction]
fn moduli_rd(ctx: PyCurveContext, a: i64, k: i64, epsilon: i64, delta: i64) -> PyResult<PyInvariants> {
    let p = mc::moduli::ModuliPoint::new(ctx.inner, a, k, epsilon, delta).map_err(err)?;
    Ok(PyInvariants {
        inner: mc::moduli::moduli_rd(&p).map_err(err)?,
    })
}

#[pyfunction]
fn moduli_dim(ctx: PyCurveContext, a: i64, k: i64) -> PyResult<i64> {
    mc::moduli::moduli_dim(&ctx.inner, a, k).map_err(err)
}

#[pyfunction]
fn moduli_nonempty(ctx: PyCurveContext, a: i64, k: i64, epsilon: i64, delta: i64) -> PyResult<bool> {
    let p = mc::moduli::ModuliPoint::new(ctx.inner, a, k, epsilon, delta).map_err(err)?;
    mc::moduli::moduli_nonempty(&p).map_err(err)
}

/// Number of counterexamples to the slope lemma on the bounded grid
/// (always 0; a nonzero value would mean the comparator is broken).
#[pyfunction]
fn lemma_violations(rank_max: i64, deg_max: i64) -> PyResult<usize> {
    Ok(mc::lemma_oracle(rank_max, deg_max).map_err(err)?.len())
}

#[pymodule]
fn multicurve_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCurveContext>()?;
    m.add_class::<PyInvariants>()?;
    m.add_class::<PyRigidSheaf>()?;
    m.add_class::<PyFiltrationSlice>()?;
    m.add_function(wrap_pyfunction!(dual_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(moduli_rd, m)?)?;
    m.add_function(wrap_pyfunction!(moduli_dim, m)?)?;
    m.add_function(wrap_pyfunction!(moduli_nonempty, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_violations, m)?)?;
    Ok(())
}
