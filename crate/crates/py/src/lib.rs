//! Python bindings: groups, Brauer characters, orbital dimensions, o-basis
//! searches and the verification sweep.

use pyo3::exceptions::{PyIndexError, PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use symclass::brauer::{cyclic_support, find_character, irreducible_brauer_characters, ordinary_table, BrauerCharacter};
use symclass::cyclo::CycNum;
use symclass::group::{build_group, split_prime_power, FiniteGroup, GroupElement, GroupFamily, IndexSequence};
use symclass::report::CaseRecord;
use symclass::tensor::{inner_product_direct, inner_product_formula, symmetrized_tensor};
use symclass::theorems::{
    predicate, run_sweep, verify_with, CaseParams, FamilyRange, SweepConfig, VerificationReport, VerifyOptions,
};
use symclass::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::UnknownCharacter(_) => PyKeyError::new_err(e.to_string()),
        Error::IndexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        Error::ConstructionFailure { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn family(name: &str, param: u32) -> PyResult<GroupFamily> {
    GroupFamily::from_name(name, param).ok_or_else(|| PyValueError::new_err(format!("unknown family '{name}'")))
}

fn element(g: &FiniteGroup, (reflect, exponent): (bool, u32)) -> PyResult<GroupElement> {
    if exponent >= g.rotation_order() {
        return Err(PyValueError::new_err(format!("exponent {exponent} out of range")));
    }
    Ok(if reflect {
        GroupElement::refl(exponent)
    } else {
        GroupElement::rot(exponent)
    })
}

fn sequence(g: &FiniteGroup, entries: Vec<u8>) -> PyResult<IndexSequence> {
    if entries.len() != g.degree() {
        return Err(to_py(Error::LengthMismatch {
            expected: g.degree(),
            found: entries.len(),
        }));
    }
    let k = entries.iter().copied().max().unwrap_or(1) as u32;
    IndexSequence::checked(entries, k).map_err(to_py)
}

/// Exact value as its display string and a complex approximation.
fn exact(x: &CycNum) -> (String, (f64, f64)) {
    let z = x.to_complex();
    (x.to_string(), (z.re, z.im))
}

/// One of `D_m`, `T_4n`, `SD_8n` with its permutation action.
#[pyclass(frozen, module = "symclass")]
struct Group {
    inner: FiniteGroup,
}

#[pymethods]
impl Group {
    #[new]
    fn new(family_name: &str, param: u32) -> PyResult<Self> {
        Ok(Group {
            inner: build_group(family(family_name, param)?).map_err(to_py)?,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.family().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn rotation_order(&self) -> u32 {
        self.inner.rotation_order()
    }

    #[getter]
    fn conductor(&self) -> u32 {
        self.inner.conductor()
    }

    /// Class representatives as strings, e.g. `"r^2"`.
    fn conjugacy_classes(&self) -> Vec<Vec<String>> {
        let g = &self.inner;
        g.conjugacy_classes()
            .iter()
            .map(|c| c.iter().map(|&x| g.describe(x)).collect())
            .collect()
    }

    fn p_regular_classes(&self, p: u32) -> PyResult<Vec<Vec<String>>> {
        let g = &self.inner;
        Ok(g.p_regular_classes(p)
            .map_err(to_py)?
            .iter()
            .map(|c| c.iter().map(|&x| g.describe(x)).collect())
            .collect())
    }

    /// `(l, t)` with `rotation_order = l * p^t`, `p` not dividing `l`.
    fn split(&self, p: u32) -> (u32, u32) {
        split_prime_power(self.inner.rotation_order(), p)
    }

    /// The image of `(reflect, exponent)` as a 0-based permutation list.
    fn permutation(&self, g: (bool, u32)) -> PyResult<Vec<u16>> {
        Ok(self.inner.perm(element(&self.inner, g)?).to_vec())
    }

    fn stabilizer_order(&self, alpha: Vec<u8>) -> PyResult<usize> {
        let alpha = sequence(&self.inner, alpha)?;
        Ok(self.inner.stabilizer(&alpha).map_err(to_py)?.order())
    }

    /// Irreducible Brauer characters for `p`, or the ordinary table.
    #[pyo3(signature = (p=None))]
    fn characters(slf: Py<Self>, py: Python<'_>, p: Option<u32>) -> PyResult<Vec<Character>> {
        let g = &slf.get().inner;
        let chars = match p {
            Some(p) => irreducible_brauer_characters(g, p).map_err(to_py)?,
            None => ordinary_table(g),
        };
        Ok(chars
            .into_iter()
            .map(|inner| Character {
                group: slf.clone_ref(py),
                inner,
            })
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.inner.family())
    }
}

#[pyclass(frozen, module = "symclass")]
struct Character {
    group: Py<Group>,
    inner: BrauerCharacter,
}

#[pymethods]
impl Character {
    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    #[getter]
    fn prime(&self) -> Option<u32> {
        self.inner.prime()
    }

    #[getter]
    fn degree(&self) -> String {
        self.inner.degree().to_string()
    }

    #[getter]
    fn is_linear(&self) -> bool {
        self.inner.spec().is_linear()
    }

    /// `None` off the p-regular set.
    fn value(&self, g: (bool, u32)) -> PyResult<Option<(String, (f64, f64))>> {
        let group = &self.group.get().inner;
        let x = element(group, g)?;
        Ok(self.inner.in_domain(x).then(|| exact(&self.inner.evaluate(x).expect("in domain"))))
    }

    /// `(support_is_cyclic, nonzero_on_support)`.
    fn cyclic_support(&self) -> (bool, bool) {
        let info = cyclic_support(&self.group.get().inner, &self.inner);
        (info.support_is_cyclic, info.nonzero_on_support)
    }

    /// `<e_{alpha s1}, e_{alpha s2}>`, by the stabilizer formula or by
    /// expanding both tensors.
    #[pyo3(signature = (alpha, sigma1, sigma2, direct=false))]
    fn inner_product(
        &self,
        alpha: Vec<u8>,
        sigma1: (bool, u32),
        sigma2: (bool, u32),
        direct: bool,
    ) -> PyResult<(String, (f64, f64))> {
        let g = &self.group.get().inner;
        let alpha = sequence(g, alpha)?;
        let (s1, s2) = (element(g, sigma1)?, element(g, sigma2)?);
        let value = if direct {
            inner_product_direct(
                &symmetrized_tensor(g, &self.inner, &alpha.act(g, s1)),
                &symmetrized_tensor(g, &self.inner, &alpha.act(g, s2)),
            )
        } else {
            inner_product_formula(g, &self.inner, &alpha, s1, s2).map_err(to_py)?
        };
        Ok(exact(&value))
    }

    fn __repr__(&self) -> String {
        format!("Character('{}' of {})", self.inner.label(), self.group.get().inner.family())
    }
}

fn run_case(family_name: &str, param: u32, p: u32, character: &str, dim_v: u32, cap: usize) -> PyResult<VerificationReport> {
    let g = build_group(family(family_name, param)?).map_err(to_py)?;
    let chars = irreducible_brauer_characters(&g, p).map_err(to_py)?;
    let phi = find_character(&chars, character).map_err(to_py)?;
    let case = CaseParams::new(g.family(), p, dim_v, *phi.spec());
    let options = VerifyOptions {
        cap,
        invert_predicates: false,
    };
    verify_with(&g, phi, case, &options).map_err(to_py)
}

/// Per-`t_gamma` dimensions for a two-dimensional character, or per-orbit
/// dimensions for a linear one.
#[pyfunction]
#[pyo3(signature = (family_name, param, p, character, dim_v=2, cap=16))]
fn orbital_dims<'py>(
    py: Python<'py>,
    family_name: &str,
    param: u32,
    p: u32,
    character: &str,
    dim_v: u32,
    cap: usize,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let report = run_case(family_name, param, p, character, dim_v, cap)?;
    let mut out = Vec::new();
    for gc in &report.gammas {
        let d = PyDict::new(py);
        d.set_item("t_gamma", gc.t_gamma)?;
        d.set_item("gamma", gc.gamma.entries().to_vec())?;
        d.set_item("predicted", gc.predicted_dim)?;
        d.set_item("circulant", gc.circulant_dim)?;
        d.set_item("rank_m", gc.rank_m)?;
        d.set_item("rank_gram", gc.rank_gram)?;
        d.set_item("nonzero", gc.observed_nonvanishing)?;
        out.push(d);
    }
    for o in &report.orbits {
        let d = PyDict::new(py);
        d.set_item("alpha", o.alpha.entries().to_vec())?;
        d.set_item("dim", o.dim)?;
        out.push(d);
    }
    Ok(out)
}

/// Predicted and observed o-basis verdicts with the witnesses found.
#[pyfunction]
#[pyo3(signature = (family_name, param, p, character, dim_v=2, cap=16))]
fn obasis<'py>(
    py: Python<'py>,
    family_name: &str,
    param: u32,
    p: u32,
    character: &str,
    dim_v: u32,
    cap: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let report = run_case(family_name, param, p, character, dim_v, cap)?;
    let d = PyDict::new(py);
    d.set_item("predicted", predicate(&report.case).map_err(to_py)?)?;
    d.set_item("observed", report.observed_obasis())?;
    d.set_item("sampled", report.sampled)?;
    let witnesses: Vec<(u32, Option<Vec<u32>>)> = report.gammas.iter().map(|g| (g.t_gamma, g.witness.clone())).collect();
    d.set_item("witnesses", witnesses)?;
    d.set_item("disagreements", report.disagreements())?;
    Ok(d)
}

fn record_dict<'py>(py: Python<'py>, r: &CaseRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("family", &r.family)?;
    d.set_item("n", r.n)?;
    d.set_item("p", r.p)?;
    d.set_item("t", r.t)?;
    d.set_item("l", r.l)?;
    d.set_item("character", &r.character)?;
    d.set_item("dimV", r.dim_v)?;
    d.set_item("t_gamma", r.t_gamma)?;
    d.set_item("predicted_dim", r.predicted_dim)?;
    d.set_item("observed_dim", r.observed_dim)?;
    d.set_item("predicted_obasis", r.predicted_obasis)?;
    d.set_item("observed_obasis", r.observed_obasis)?;
    d.set_item("agree", r.agree)?;
    Ok(d)
}

/// Runs the predicate-against-oracle sweep. `families` holds
/// `(name, lo, hi)` triples; the defaults match the command-line tool.
#[pyfunction]
#[pyo3(signature = (families=None, primes=None, dim_v=(1, 3), cap=16))]
fn verify<'py>(
    py: Python<'py>,
    families: Option<Vec<(String, u32, u32)>>,
    primes: Option<Vec<u32>>,
    dim_v: (u32, u32),
    cap: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let mut config = SweepConfig::default();
    if let Some(families) = families {
        config.families = families
            .into_iter()
            .map(|(name, lo, hi)| {
                let family = family(&name, 0)?.name().to_string();
                Ok(FamilyRange { family, lo, hi })
            })
            .collect::<PyResult<_>>()?;
    }
    if let Some(primes) = primes {
        config.primes = primes;
    }
    config.dim_v = dim_v;
    config.options.cap = cap;
    let outcome = py.detach(|| run_sweep(&config)).map_err(to_py)?;
    let d = PyDict::new(py);
    let records = outcome
        .records()
        .iter()
        .map(|r| record_dict(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("all_agree", outcome.all_agree())?;
    d.set_item("cases", records)?;
    d.set_item("vacuous", outcome.vacuous.clone())?;
    let failures: Vec<String> = outcome.failures.iter().map(|f| f.error.to_string()).collect();
    d.set_item("failures", failures)?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "symclass")]
fn symclass_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Character>()?;
    m.add_function(wrap_pyfunction!(orbital_dims, m)?)?;
    m.add_function(wrap_pyfunction!(obasis, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
