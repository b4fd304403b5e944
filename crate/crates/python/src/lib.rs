use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use sedqm::dynamics::{
    analytic_extended as core_analytic_extended, analytic_rotation as core_analytic_rotation,
    integrate_model, operator_rhs as core_operator_rhs, DynamicsModel, ExtendedState, FieldConfig,
    ModelState, OdeState, RotationModel, Sign, SpinState,
};
use sedqm::expr::eval_str;
use sedqm::matrix_rep;
use sedqm::{
    BasisUnit, Element, ModelId, PhysicalConstants, SuiteId, TableFormat, VerificationReport,
};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn unit(name: &str) -> PyResult<BasisUnit> {
    name.parse().map_err(value_error)
}

fn consts(hbar_tilde: f64) -> PyResult<PhysicalConstants> {
    PhysicalConstants::with_hbar(hbar_tilde).map_err(value_error)
}

fn sign(n: i64) -> PyResult<Sign> {
    Sign::try_from(n).map_err(value_error)
}

/// Element of the 16-dimensional algebra with complex coefficients.
#[pyclass(name = "Element", module = "sedqm", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq)]
pub struct PyElement {
    inner: Element,
}

impl From<Element> for PyElement {
    fn from(inner: Element) -> Self {
        Self { inner }
    }
}

#[derive(FromPyObject)]
#[allow(clippy::large_enum_variant)]
enum Operand {
    Element(PyElement),
    Scalar(Complex64),
}

impl Operand {
    fn element(self) -> Element {
        match self {
            Operand::Element(e) => e.inner,
            Operand::Scalar(c) => Element::scalar(c),
        }
    }
}

#[pymethods]
impl PyElement {
    /// Builds an element from 16 coefficients in table order
    /// (1, i1..i7, i0, e1..e7), or the zero element.
    #[new]
    #[pyo3(signature = (coeffs = None))]
    fn new(coeffs: Option<Vec<Complex64>>) -> PyResult<Self> {
        match coeffs {
            None => Ok(Element::zero().into()),
            Some(v) => {
                let arr: [Complex64; 16] = v
                    .try_into()
                    .map_err(|v: Vec<_>| value_error(format!("expected 16 coefficients, got {}", v.len())))?;
                Ok(Element::from_coeffs(arr).into())
            }
        }
    }

    /// A basis unit by name: `1`, `i0`..`i7`, `e1`..`e7`.
    #[staticmethod]
    fn basis(name: &str) -> PyResult<Self> {
        Ok(Element::basis(unit(name)?).into())
    }

    #[staticmethod]
    fn scalar(c: Complex64) -> Self {
        Element::scalar(c).into()
    }

    fn coeffs(&self) -> Vec<Complex64> {
        self.inner.coeffs().to_vec()
    }

    fn coeff(&self, name: &str) -> PyResult<Complex64> {
        Ok(self.inner.coeff(unit(name)?))
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    #[pyo3(signature = (other, tol = 1e-12))]
    fn approx_eq(&self, other: PyElement, tol: f64) -> bool {
        self.inner.approx_eq(&other.inner, tol)
    }

    fn __add__(&self, other: Operand) -> Self {
        (self.inner + other.element()).into()
    }

    fn __radd__(&self, other: Operand) -> Self {
        (other.element() + self.inner).into()
    }

    fn __sub__(&self, other: Operand) -> Self {
        (self.inner - other.element()).into()
    }

    fn __rsub__(&self, other: Operand) -> Self {
        (other.element() - self.inner).into()
    }

    fn __mul__(&self, other: Operand) -> Self {
        (self.inner * other.element()).into()
    }

    fn __rmul__(&self, other: Operand) -> Self {
        (other.element() * self.inner).into()
    }

    fn __neg__(&self) -> Self {
        (-self.inner).into()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.inner)
    }
}

#[pyfunction]
fn basis_units() -> Vec<&'static str> {
    BasisUnit::ALL.iter().map(|u| u.token()).collect()
}

/// Product of two basis units as a signed unit string, e.g. `-e1`.
#[pyfunction]
fn basis_product(a: &str, b: &str) -> PyResult<String> {
    Ok(sedqm::basis_product(unit(a)?, unit(b)?).to_string())
}

#[pyfunction]
fn multiply(x: PyElement, y: PyElement) -> PyElement {
    sedqm::multiply(&x.inner, &y.inner).into()
}

#[pyfunction]
fn commutator(x: PyElement, y: PyElement) -> PyElement {
    sedqm::commutator(&x.inner, &y.inner).into()
}

#[pyfunction]
fn associator(x: PyElement, y: PyElement, z: PyElement) -> PyElement {
    sedqm::associator(&x.inner, &y.inner, &z.inner).into()
}

/// `a(bc) - (ca)b`
#[pyfunction]
fn na_bracket(a: PyElement, b: PyElement, c: PyElement) -> PyElement {
    sedqm::na_bracket(&a.inner, &b.inner, &c.inner).into()
}

/// Evaluates an expression such as `[i4,i5,i2]`.
#[pyfunction]
fn evaluate(text: &str) -> PyResult<PyElement> {
    match eval_str(text) {
        Ok(ev) => Ok(ev.value.into()),
        Err(e) => {
            let mut msg = e.to_string();
            if let Some(c) = e.caret(text) {
                msg = format!("{msg}\n{c}");
            }
            Err(value_error(msg))
        }
    }
}

#[pyfunction]
#[pyo3(signature = (format = "csv"))]
fn export_table(format: &str) -> PyResult<String> {
    let f: TableFormat = format.parse().map_err(value_error)?;
    Ok(sedqm::export_table(f))
}

fn report_to_py<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (r.to_json(),))
}

#[pyfunction]
fn suite_names() -> Vec<String> {
    SuiteId::ALL.iter().map(|s| s.slug()).collect()
}

/// Runs one suite and returns its report as a dict.
#[pyfunction]
#[pyo3(signature = (name, hbar_tilde = 1.0))]
fn run_suite<'py>(py: Python<'py>, name: &str, hbar_tilde: f64) -> PyResult<Bound<'py, PyAny>> {
    let id: SuiteId = name.parse().map_err(value_error)?;
    report_to_py(py, &sedqm::run_suite(id, &consts(hbar_tilde)?))
}

#[pyfunction]
#[pyo3(signature = (hbar_tilde = 1.0))]
fn run_all<'py>(py: Python<'py>, hbar_tilde: f64) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let c = consts(hbar_tilde)?;
    sedqm::run_all(&c).iter().map(|r| report_to_py(py, r)).collect()
}

#[pyfunction]
fn homomorphism_check<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    report_to_py(py, &matrix_rep::homomorphism_check())
}

#[pyfunction]
fn pauli_relations_check<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    report_to_py(py, &sedqm::dynamics::pauli_relations_check())
}

/// 3×3 matrix image of a unit of span{1, i3, e3, i0}.
#[pyfunction]
fn rep(name: &str) -> PyResult<Vec<Vec<Complex64>>> {
    let m = matrix_rep::rep(unit(name)?).map_err(value_error)?;
    Ok(m.entries
        .iter()
        .map(|row| row.iter().map(|g| Complex64::new(g.re as f64, g.im as f64)).collect())
        .collect())
}

/// Integrates `model` ("standard", "na-qubit" or "extended") with RK4 and
/// returns `(times, states)`; each state is `[s1,s2,s3]` or
/// `[s1,s2,s3,l1,l2,l3]`.
#[pyfunction]
#[pyo3(signature = (
    model = "na-qubit", t_max = std::f64::consts::TAU, dt = 1e-3,
    omega = [0.0, 0.0, 1.0], omega1 = [0.0, 0.0, 1.0], omega2 = [0.0, 0.0, 1.0],
    n1 = 1, n2 = 1, s0 = [1.0, 0.0, 0.0], l0 = [0.0, 1.0, 0.0],
))]
#[allow(clippy::too_many_arguments)]
fn simulate(
    model: &str,
    t_max: f64,
    dt: f64,
    omega: [f64; 3],
    omega1: [f64; 3],
    omega2: [f64; 3],
    n1: i64,
    n2: i64,
    s0: [f64; 3],
    l0: [f64; 3],
) -> PyResult<(Vec<f64>, Vec<Vec<f64>>)> {
    let model: DynamicsModel = model.parse().map_err(value_error)?;
    let field = FieldConfig {
        omega,
        omega1,
        omega2,
        n1: sign(n1)?,
        n2: sign(n2)?,
    };
    let initial = match model {
        DynamicsModel::Extended => ModelState::Extended(ExtendedState::new(s0, l0)),
        _ => ModelState::Spin(SpinState::new(s0)),
    };
    let tr = integrate_model(model, initial, &field, t_max, dt).map_err(value_error)?;
    let states = tr.states.iter().map(|s| s.components()).collect();
    Ok((tr.times, states))
}

/// Right-hand side through the ternary bracket. Pass `l` for the
/// biquaternionic model; returns `ds` or `(ds, dl)`.
#[pyfunction]
#[pyo3(signature = (s, l = None, omega = [0.0, 0.0, 1.0], omega1 = [0.0, 0.0, 1.0],
    omega2 = [0.0, 0.0, 1.0], n1 = 1, n2 = 1, hbar_tilde = 1.0))]
#[allow(clippy::too_many_arguments)]
fn operator_rhs<'py>(
    py: Python<'py>,
    s: [f64; 3],
    l: Option<[f64; 3]>,
    omega: [f64; 3],
    omega1: [f64; 3],
    omega2: [f64; 3],
    n1: i64,
    n2: i64,
    hbar_tilde: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let field = FieldConfig {
        omega,
        omega1,
        omega2,
        n1: sign(n1)?,
        n2: sign(n2)?,
    };
    let c = consts(hbar_tilde)?;
    match l {
        None => {
            let d = core_operator_rhs(ModelId::Quaternionic, &SpinState::new(s).into(), &field, &c)
                .map_err(value_error)?;
            Ok(d.as_spin().s.into_pyobject(py)?.into_any())
        }
        Some(l) => {
            let d = core_operator_rhs(
                ModelId::Biquaternionic,
                &ExtendedState::new(s, l).into(),
                &field,
                &c,
            )
            .map_err(value_error)?;
            let x = d.as_extended();
            Ok(PyTuple::new(py, [x.s, x.l])?.into_any())
        }
    }
}

/// Closed-form rotation about z; `model` is "standard" or "na".
#[pyfunction]
fn analytic_rotation(s0: [f64; 3], omega_z: f64, t: f64, model: &str) -> PyResult<[f64; 3]> {
    let m = match model {
        "standard" => RotationModel::Standard,
        "na" | "na-qubit" => RotationModel::Na,
        other => return Err(value_error(format!("unknown rotation model `{other}`"))),
    };
    Ok(core_analytic_rotation(&SpinState::new(s0), omega_z, t, m).s)
}

/// `(s_x(t), l_y(t))` of the extended model with fields along z.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
fn analytic_extended(
    s0x: f64,
    l0y: f64,
    omega1: f64,
    omega2: f64,
    n1: i64,
    n2: i64,
    t: f64,
) -> PyResult<(f64, f64)> {
    Ok(core_analytic_extended(s0x, l0y, omega1, omega2, sign(n1)?, sign(n2)?, t))
}

#[pymodule]
#[pyo3(name = "sedqm")]
fn sedqm_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElement>()?;
    m.add_function(wrap_pyfunction!(basis_units, m)?)?;
    m.add_function(wrap_pyfunction!(basis_product, m)?)?;
    m.add_function(wrap_pyfunction!(multiply, m)?)?;
    m.add_function(wrap_pyfunction!(commutator, m)?)?;
    m.add_function(wrap_pyfunction!(associator, m)?)?;
    m.add_function(wrap_pyfunction!(na_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(export_table, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(run_all, m)?)?;
    m.add_function(wrap_pyfunction!(homomorphism_check, m)?)?;
    m.add_function(wrap_pyfunction!(pauli_relations_check, m)?)?;
    m.add_function(wrap_pyfunction!(rep, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(operator_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(analytic_rotation, m)?)?;
    m.add_function(wrap_pyfunction!(analytic_extended, m)?)?;
    Ok(())
}
