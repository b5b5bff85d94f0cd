//! Python module exposing S-box generation, the metric suite and the
//! curve statistics. Import as `mecsbox_py`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBytes, PyDict};

use mecsbox::analysis;
use mecsbox::fixtures;
use mecsbox::formats;
use mecsbox::gf256;
use mecsbox::ordering::{OrderingKind, TieBreak};
use mecsbox::report::{AnalysisReport, MetricRatio, ReportSource};
use mecsbox::sbox;
use mecsbox::stats;
use mecsbox::CurveParams;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_kind(code: &str) -> PyResult<OrderingKind> {
    code.parse::<OrderingKind>().map_err(PyValueError::new_err)
}

fn parse_tie(code: &str) -> PyResult<TieBreak> {
    match code {
        "squared-y" => Ok(TieBreak::SquaredY),
        "x" => Ok(TieBreak::XCoord),
        other => Err(PyValueError::new_err(format!(
            "unknown tie rule {other:?}, expected \"squared-y\" or \"x\""
        ))),
    }
}

fn curve(p: u64, b: u64) -> PyResult<CurveParams> {
    CurveParams::from_raw(p, b).map_err(value_err)
}

/// A 256-entry substitution table.
#[pyclass(name = "SBox")]
struct PySBox {
    inner: sbox::SBox,
}

#[pymethods]
impl PySBox {
    /// Build from any sequence of 256 integers in 0..=255.
    #[staticmethod]
    fn from_table(values: Vec<u16>) -> PyResult<Self> {
        if values.len() != 256 {
            return Err(PyValueError::new_err(format!(
                "expected 256 values, got {}",
                values.len()
            )));
        }
        let mut table = [0u8; 256];
        for (i, &v) in values.iter().enumerate() {
            if v > 255 {
                return Err(PyValueError::new_err(format!("value {v} out of range")));
            }
            table[i] = v as u8;
        }
        Ok(PySBox {
            inner: sbox::SBox::from_table(table),
        })
    }

    #[staticmethod]
    fn from_grid(text: &str) -> PyResult<Self> {
        Ok(PySBox {
            inner: formats::parse_grid(text).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PySBox {
            inner: formats::parse_json(text).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn from_bin(data: &[u8]) -> PyResult<Self> {
        Ok(PySBox {
            inner: formats::parse_bin(data).map_err(value_err)?,
        })
    }

    fn table(&self) -> Vec<u8> {
        self.inner.table().to_vec()
    }

    fn apply(&self, x: u8) -> u8 {
        self.inner.apply(x)
    }

    fn __getitem__(&self, x: u8) -> u8 {
        self.inner.apply(x)
    }

    fn __len__(&self) -> usize {
        256
    }

    /// (p, b, ordering) when the table was generated here, else None.
    fn provenance(&self) -> Option<(u64, u64, String)> {
        self.inner
            .provenance()
            .map(|pr| (pr.p, pr.b, pr.ordering.code().to_string()))
    }

    fn is_bijective(&self) -> bool {
        self.inner.is_bijective()
    }

    fn inverse(&self) -> PyResult<Self> {
        Ok(PySBox {
            inner: self.inner.inverse().map_err(value_err)?,
        })
    }

    fn nonlinearity(&self) -> u32 {
        analysis::nonlinearity(&self.inner)
    }

    /// Nonlinearity over single-bit output masks only.
    fn coordinate_nonlinearity(&self) -> u32 {
        analysis::coordinate_nonlinearity(&self.inner)
    }

    fn lap(&self) -> f64 {
        analysis::lap(&self.inner)
    }

    fn dap(&self) -> f64 {
        analysis::dap(&self.inner)
    }

    fn sac_matrix(&self) -> Vec<Vec<f64>> {
        analysis::sac_matrix(&self.inner)
            .values()
            .iter()
            .map(|row| row.to_vec())
            .collect()
    }

    /// (max, min) of the avalanche matrix.
    fn sac_minmax(&self) -> (f64, f64) {
        analysis::sac_minmax(&self.inner)
    }

    /// (max, min) of the off-diagonal bit-independence entries.
    fn bic_minmax(&self) -> (f64, f64) {
        analysis::bic_minmax(&self.inner)
    }

    fn algebraic_complexity(&self) -> usize {
        gf256::algebraic_complexity(&self.inner)
    }

    /// Full metric report as a dict.
    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        report_to_dict(py, &AnalysisReport::analyze(&self.inner))
    }

    fn to_grid(&self) -> String {
        formats::write_grid(&self.inner)
    }

    fn to_json(&self) -> String {
        formats::write_json(&self.inner)
    }

    fn to_bin<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, &formats::write_bin(&self.inner))
    }

    fn __repr__(&self) -> String {
        match self.inner.provenance() {
            Some(pr) => format!("SBox(p={}, b={}, ordering={})", pr.p, pr.b, pr.ordering),
            None => "SBox(external)".to_string(),
        }
    }
}

fn ratio_to_dict<'py>(py: Python<'py>, r: &MetricRatio) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("numerator", r.numerator)?;
    d.set_item("denominator", r.denominator)?;
    d.set_item("value", r.value)?;
    d.set_item("rendered", &r.rendered)?;
    Ok(d)
}

fn report_to_dict<'py>(py: Python<'py>, r: &AnalysisReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match &r.source {
        ReportSource::Generated { p, b, ordering } => {
            let src = PyDict::new(py);
            src.set_item("p", p)?;
            src.set_item("b", b)?;
            src.set_item("ordering", ordering)?;
            d.set_item("source", src)?;
        }
        ReportSource::External(tag) => d.set_item("source", tag)?,
    }
    d.set_item("bijective", r.bijective)?;
    d.set_item("nonlinearity", r.nonlinearity)?;
    d.set_item("coordinate_nonlinearity", r.coordinate_nonlinearity)?;
    d.set_item("lap", ratio_to_dict(py, &r.lap)?)?;
    d.set_item("dap", ratio_to_dict(py, &r.dap)?)?;
    d.set_item(
        "sac_matrix",
        r.sac_matrix
            .iter()
            .map(|row| row.to_vec())
            .collect::<Vec<_>>(),
    )?;
    d.set_item("sac_max", ratio_to_dict(py, &r.sac_max)?)?;
    d.set_item("sac_min", ratio_to_dict(py, &r.sac_min)?)?;
    d.set_item("bic_max", ratio_to_dict(py, &r.bic_max)?)?;
    d.set_item("bic_min", ratio_to_dict(py, &r.bic_min)?)?;
    d.set_item("algebraic_complexity", r.algebraic_complexity)?;
    Ok(d)
}

/// Generate the S-box for (p, b, ordering); ordering is "N", "D" or "M".
#[pyfunction]
#[pyo3(signature = (p, b, ordering, via_loop = false))]
fn generate(p: u64, b: u64, ordering: &str, via_loop: bool) -> PyResult<PySBox> {
    let params = curve(p, b)?;
    let kind = parse_kind(ordering)?;
    let inner = if via_loop {
        sbox::generate_via_loop(params, kind)
    } else {
        sbox::generate(params, kind)
    }
    .map_err(value_err)?;
    Ok(PySBox { inner })
}

/// Bundled reference tables: "s_n_1667_351", "s_d_3299_1451",
/// "s_m_4229_2422" or "aes".
#[pyfunction]
fn fixture(name: &str) -> PyResult<PySBox> {
    let inner = match name {
        "s_n_1667_351" => fixtures::s_n_1667_351(),
        "s_d_3299_1451" => fixtures::s_d_3299_1451(),
        "s_m_4229_2422" => fixtures::s_m_4229_2422(),
        "aes" => fixtures::aes(),
        other => return Err(PyValueError::new_err(format!("unknown fixture {other:?}"))),
    };
    Ok(PySBox { inner })
}

/// y-coordinates of all p curve points sorted under one ordering.
/// tie is "squared-y" (default) or "x".
#[pyfunction]
#[pyo3(signature = (p, b, ordering, tie = "squared-y"))]
fn ordered_y_sequence(p: u64, b: u64, ordering: &str, tie: &str) -> PyResult<Vec<u64>> {
    Ok(stats::ordered_y_sequence_with(
        curve(p, b)?,
        parse_kind(ordering)?,
        parse_tie(tie)?,
    ))
}

/// Pearson correlation between the arrangements of two orderings.
#[pyfunction]
fn correlation(p: u64, b: u64, h: &str, k: &str) -> PyResult<f64> {
    Ok(stats::correlation(
        curve(p, b)?,
        parse_kind(h)?,
        parse_kind(k)?,
    ))
}

/// All three pairwise correlations as a dict with keys "nd", "nm", "dm".
#[pyfunction]
fn correlation_record<'py>(py: Python<'py>, p: u64, b: u64) -> PyResult<Bound<'py, PyDict>> {
    let r = stats::correlation_record(curve(p, b)?);
    let d = PyDict::new(py);
    d.set_item("p", r.p)?;
    d.set_item("b", r.b)?;
    d.set_item("nd", r.rho_nd)?;
    d.set_item("nm", r.rho_nm)?;
    d.set_item("dm", r.rho_dm)?;
    Ok(d)
}

/// Number of distinct tables over b in [1, p-1] for one ordering.
#[pyfunction]
fn count_distinct_sboxes(p: u64, ordering: &str) -> PyResult<usize> {
    let params = curve(p, 0)?;
    stats::count_distinct_sboxes(params.prime(), parse_kind(ordering)?).map_err(value_err)
}

#[pymodule]
fn mecsbox_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySBox>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(ordered_y_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(correlation, m)?)?;
    m.add_function(wrap_pyfunction!(correlation_record, m)?)?;
    m.add_function(wrap_pyfunction!(count_distinct_sboxes, m)?)?;
    Ok(())
}
