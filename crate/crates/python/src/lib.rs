//! Python bindings: the main types (groups, subgroups, linear characters,
//! family instances) and operations (eta with certificates, Mackey and
//! naive inner products, the oracle, verification checks).
//!
//! Build the module with `cargo build -p pchar-py --release` and copy
//! `target/release/libpchar_py.so` to `pchar_py.so` on the Python path;
//! `python/smoke_test.py` automates this.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pchar_core::characters::{lin_all, naive_induced_inner_product, LinearCharacter};
use pchar_core::families::{self, FamilyInstance};
use pchar_core::induction::{eta as eta_impl, MonomialDescriptor, StrategyHint};
use pchar_core::oracle::irr_exhaustive;
use pchar_core::pcgroup::{textfmt, PcGroup, Subgroup};
use pchar_core::verify::{run_check, CheckName, CheckParams};
use pchar_core::Limits;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn limits_with(oracle_bound: u128) -> Limits {
    Limits {
        oracle_max_order: oracle_bound,
        ..Limits::default()
    }
}

/// A finite p-group given by a consistent power-commutator presentation.
/// Elements cross the boundary as exponent vectors (lists of ints).
#[pyclass(frozen, name = "PcGroup")]
struct PyPcGroup {
    inner: Arc<PcGroup>,
}

#[pymethods]
impl PyPcGroup {
    /// Parse the pc-presentation text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let pres = textfmt::parse_pc(text).map_err(err)?;
        Ok(PyPcGroup {
            inner: PcGroup::new(pres).map_err(err)?,
        })
    }

    fn prime(&self) -> u16 {
        self.inner.prime()
    }

    fn ngens(&self) -> usize {
        self.inner.ngens()
    }

    fn order(&self) -> PyResult<u128> {
        self.inner.order().map_err(err)
    }

    fn to_text(&self) -> String {
        textfmt::write_pc(self.inner.presentation())
    }

    fn multiply(&self, x: Vec<u16>, y: Vec<u16>) -> PyResult<Vec<u16>> {
        let a = self.inner.element_from_exps(&x).map_err(err)?;
        let b = self.inner.element_from_exps(&y).map_err(err)?;
        Ok(self.inner.multiply(&a, &b).exps().to_vec())
    }

    fn inverse(&self, x: Vec<u16>) -> PyResult<Vec<u16>> {
        let a = self.inner.element_from_exps(&x).map_err(err)?;
        Ok(self.inner.inverse(&a).exps().to_vec())
    }

    fn power(&self, x: Vec<u16>, k: i64) -> PyResult<Vec<u16>> {
        let a = self.inner.element_from_exps(&x).map_err(err)?;
        Ok(self.inner.power_signed(&a, k).exps().to_vec())
    }

    /// x^g = g^-1 x g.
    fn conjugate(&self, x: Vec<u16>, g: Vec<u16>) -> PyResult<Vec<u16>> {
        let a = self.inner.element_from_exps(&x).map_err(err)?;
        let b = self.inner.element_from_exps(&g).map_err(err)?;
        Ok(self.inner.conjugate(&a, &b).exps().to_vec())
    }

    fn commutator(&self, x: Vec<u16>, y: Vec<u16>) -> PyResult<Vec<u16>> {
        let a = self.inner.element_from_exps(&x).map_err(err)?;
        let b = self.inner.element_from_exps(&y).map_err(err)?;
        Ok(self.inner.commutator(&a, &b).exps().to_vec())
    }

    /// Subgroup generated by exponent vectors.
    fn subgroup(&self, gens: Vec<Vec<u16>>) -> PyResult<PySubgroup> {
        let elems = gens
            .iter()
            .map(|g| self.inner.element_from_exps(g))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        Ok(PySubgroup {
            inner: Subgroup::from_generators(&self.inner, &elems),
        })
    }

    fn full_subgroup(&self) -> PySubgroup {
        PySubgroup {
            inner: Subgroup::full(&self.inner),
        }
    }
}

/// A subgroup in induced-generating-sequence form.
#[pyclass(frozen, skip_from_py_object, name = "Subgroup")]
#[derive(Clone)]
struct PySubgroup {
    inner: Subgroup,
}

#[pymethods]
impl PySubgroup {
    fn order(&self) -> PyResult<u128> {
        self.inner.order().map_err(err)
    }

    fn index_exponent(&self) -> usize {
        self.inner.index_exponent()
    }

    fn igs(&self) -> Vec<Vec<u16>> {
        self.inner.igs().iter().map(|w| w.exps().to_vec()).collect()
    }

    fn contains(&self, x: Vec<u16>) -> PyResult<bool> {
        let a = self.inner.group().element_from_exps(&x).map_err(err)?;
        Ok(self.inner.contains(&a))
    }

    /// Validated linear character from zeta-exponents on the IGS.
    fn character(&self, exps: Vec<u64>, value_order: u64) -> PyResult<PyLinearCharacter> {
        Ok(PyLinearCharacter {
            inner: LinearCharacter::make_linear(&self.inner, exps, value_order).map_err(err)?,
        })
    }

    fn principal_character(&self) -> PyLinearCharacter {
        PyLinearCharacter {
            inner: LinearCharacter::principal(&self.inner),
        }
    }

    /// All linear characters of this subgroup.
    fn linear_characters(&self) -> PyResult<Vec<PyLinearCharacter>> {
        Ok(lin_all(&self.inner, &Limits::default())
            .map_err(err)?
            .into_iter()
            .map(|inner| PyLinearCharacter { inner })
            .collect())
    }
}

/// A degree-1 character stored on the IGS of its domain.
#[pyclass(frozen, skip_from_py_object, name = "LinearCharacter")]
#[derive(Clone)]
struct PyLinearCharacter {
    inner: LinearCharacter,
}

#[pymethods]
impl PyLinearCharacter {
    fn exps(&self) -> Vec<u64> {
        self.inner.exps().to_vec()
    }

    fn value_order(&self) -> u64 {
        self.inner.value_order()
    }

    fn domain(&self) -> PySubgroup {
        PySubgroup {
            inner: self.inner.domain().clone(),
        }
    }

    /// zeta-exponent at the given element, or None outside the domain.
    fn eval(&self, x: Vec<u16>) -> PyResult<Option<u64>> {
        let a = self
            .inner
            .domain()
            .group()
            .element_from_exps(&x)
            .map_err(err)?;
        Ok(self.inner.eval(&a))
    }

    /// chi^g(x) = chi(g x g^-1).
    fn conjugate(&self, g: Vec<u16>) -> PyResult<PyLinearCharacter> {
        let b = self
            .inner
            .domain()
            .group()
            .element_from_exps(&g)
            .map_err(err)?;
        Ok(PyLinearCharacter {
            inner: self.inner.conjugate(&b),
        })
    }

    /// eta of this character induced to the whole group, with the
    /// certificate as a JSON string.
    #[pyo3(signature = (oracle_bound = 243))]
    fn eta(&self, oracle_bound: u128) -> PyResult<(u64, String)> {
        let limits = limits_with(oracle_bound);
        let full = Subgroup::full(self.inner.domain().group());
        let r = eta_impl(&self.inner, &full, &StrategyHint::Auto, &limits).map_err(err)?;
        let doc = serde_json::to_string(&r.certificate.to_doc()).map_err(err)?;
        Ok((r.eta, doc))
    }
}

/// A constructed family member with its distinguished subgroup, base
/// character, and decomposition strategy.
#[pyclass(frozen, name = "FamilyInstance")]
struct PyFamilyInstance {
    inner: FamilyInstance,
}

#[pymethods]
impl PyFamilyInstance {
    fn group(&self) -> PyPcGroup {
        PyPcGroup {
            inner: self.inner.group.clone(),
        }
    }

    fn h(&self) -> PySubgroup {
        PySubgroup {
            inner: self.inner.h.clone(),
        }
    }

    fn lambda_character(&self) -> PyLinearCharacter {
        PyLinearCharacter {
            inner: self.inner.lambda.clone(),
        }
    }

    fn predicted_eta(&self) -> u64 {
        self.inner.predicted_eta
    }

    fn index_exponent(&self) -> usize {
        self.inner.index_exponent()
    }

    fn to_text(&self) -> String {
        textfmt::write_pc(self.inner.group.presentation())
    }

    /// eta(lambda^G) with the instance's strategy; returns
    /// (eta, multiplicities, certificate JSON).
    #[pyo3(signature = (oracle_bound = 243))]
    fn eta(&self, oracle_bound: u128) -> PyResult<(u64, Vec<u64>, String)> {
        let limits = limits_with(oracle_bound);
        let r = eta_impl(
            &self.inner.lambda,
            &self.inner.full(),
            &self.inner.hint,
            &limits,
        )
        .map_err(err)?;
        let doc = serde_json::to_string(&r.certificate.to_doc()).map_err(err)?;
        Ok((r.eta, r.certificate.multiplicities(), doc))
    }
}

/// The order-p^4 family: C_p acting on elementary abelian p^3.
#[pyfunction]
fn family_a(p: u64) -> PyResult<PyFamilyInstance> {
    Ok(PyFamilyInstance {
        inner: families::family_a(p).map_err(err)?,
    })
}

/// The order-p^6 truncated-polynomial family (p > 5, 3 | p - 1).
#[pyfunction]
fn family_b(p: u64) -> PyResult<PyFamilyInstance> {
    Ok(PyFamilyInstance {
        inner: families::family_b(p).map_err(err)?,
    })
}

/// The wreath lift G_0 wr C_p of a family instance.
#[pyfunction]
fn wreath_lift(base: &PyFamilyInstance) -> PyResult<PyFamilyInstance> {
    Ok(PyFamilyInstance {
        inner: families::wreath_lift(&base.inner).map_err(err)?,
    })
}

/// Mackey inner product [chi1^G, chi2^G] of two monomially induced
/// characters of the same group.
#[pyfunction]
fn mackey_inner_product(chi1: &PyLinearCharacter, chi2: &PyLinearCharacter) -> PyResult<u64> {
    let limits = Limits::default();
    let g = chi1.inner.domain().group();
    let full = Subgroup::full(g);
    let d1 = MonomialDescriptor::new(full.clone(), chi1.inner.clone()).map_err(err)?;
    let d2 = MonomialDescriptor::new(full, chi2.inner.clone()).map_err(err)?;
    pchar_core::induction::mackey_inner_product(&d1, &d2, &limits).map_err(err)
}

/// Brute-force inner product over all group elements, as a
/// (numerator, denominator) pair.
#[pyfunction]
fn naive_inner_product(
    chi1: &PyLinearCharacter,
    chi2: &PyLinearCharacter,
) -> PyResult<(i128, i128)> {
    let limits = Limits::default();
    let g = chi1.inner.domain().group();
    let full = Subgroup::full(g);
    let d1 = MonomialDescriptor::new(full.clone(), chi1.inner.clone()).map_err(err)?;
    let d2 = MonomialDescriptor::new(full, chi2.inner.clone()).map_err(err)?;
    let r = naive_induced_inner_product(&d1, &d2, &limits).map_err(err)?;
    Ok((*r.numer(), *r.denom()))
}

/// Complete irreducible table of a group, as JSON.
#[pyfunction]
#[pyo3(signature = (group, oracle_bound = 243))]
fn oracle_irr(group: &PyPcGroup, oracle_bound: u128) -> PyResult<String> {
    let limits = limits_with(oracle_bound);
    let table = irr_exhaustive(&Subgroup::full(&group.inner), &limits).map_err(err)?;
    serde_json::to_string(&table.to_doc().map_err(err)?).map_err(err)
}

/// Run a named verification check; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (name, prime = None, iterate = None))]
fn verify_check(name: &str, prime: Option<u64>, iterate: Option<u32>) -> PyResult<String> {
    let check: CheckName = name.parse().map_err(err)?;
    let params = CheckParams { prime, iterate };
    let limits = pchar_core::verify::limits_for(&params);
    let report = run_check(check, &params, &limits);
    serde_json::to_string(&report).map_err(err)
}

#[pymodule]
fn pchar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPcGroup>()?;
    m.add_class::<PySubgroup>()?;
    m.add_class::<PyLinearCharacter>()?;
    m.add_class::<PyFamilyInstance>()?;
    m.add_function(wrap_pyfunction!(family_a, m)?)?;
    m.add_function(wrap_pyfunction!(family_b, m)?)?;
    m.add_function(wrap_pyfunction!(wreath_lift, m)?)?;
    m.add_function(wrap_pyfunction!(mackey_inner_product, m)?)?;
    m.add_function(wrap_pyfunction!(naive_inner_product, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_irr, m)?)?;
    m.add_function(wrap_pyfunction!(verify_check, m)?)?;
    Ok(())
}
