//! Full metric report for one table, with exact rational values and their
//! 4-decimal renderings.

use serde::Serialize;

use crate::analysis::{self, round4};
use crate::gf256;
use crate::sbox::SBox;

/// An exact probability n/d together with its 4-decimal rendering.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct MetricRatio {
    pub numerator: u32,
    pub denominator: u32,
    pub value: f64,
    pub rendered: String,
}

impl MetricRatio {
    fn new(numerator: u32, denominator: u32) -> Self {
        let value = numerator as f64 / denominator as f64;
        MetricRatio {
            numerator,
            denominator,
            value,
            rendered: format!("{:.4}", round4(value)),
        }
    }
}

/// Where the analyzed table came from.
#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(untagged)]
pub enum ReportSource {
    Generated { p: u64, b: u64, ordering: String },
    External(String),
}

/// Every metric for one table. Construct with [`AnalysisReport::analyze`].
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct AnalysisReport {
    pub source: ReportSource,
    pub bijective: bool,
    pub nonlinearity: u32,
    pub coordinate_nonlinearity: u32,
    pub lap: MetricRatio,
    pub dap: MetricRatio,
    pub sac_matrix: [[f64; 8]; 8],
    pub sac_max: MetricRatio,
    pub sac_min: MetricRatio,
    pub bic_max: MetricRatio,
    pub bic_min: MetricRatio,
    pub algebraic_complexity: usize,
}

impl AnalysisReport {
    pub fn analyze(sbox: &SBox) -> Self {
        let source = match sbox.provenance() {
            Some(pr) => ReportSource::Generated {
                p: pr.p,
                b: pr.b,
                ordering: pr.ordering.code().to_string(),
            },
            None => ReportSource::External("external".to_string()),
        };
        let spectrum = analysis::walsh_spectrum(sbox);
        let max_abs = spectrum.max_abs();
        let sac = analysis::sac_matrix(sbox);
        let (sac_max_c, sac_min_c) = {
            let mut lo = u16::MAX;
            let mut hi = 0u16;
            for i in 0..8 {
                for j in 0..8 {
                    lo = lo.min(sac.count(i, j));
                    hi = hi.max(sac.count(i, j));
                }
            }
            (hi, lo)
        };
        let bic = analysis::bic_matrix(sbox);
        let (bic_max_c, bic_min_c) = {
            let mut lo = u16::MAX;
            let mut hi = 0u16;
            for i in 0..8 {
                for k in 0..8 {
                    if i != k {
                        lo = lo.min(bic.count(i, k));
                        hi = hi.max(bic.count(i, k));
                    }
                }
            }
            (hi, lo)
        };
        AnalysisReport {
            source,
            bijective: sbox.is_bijective(),
            nonlinearity: 128 - max_abs / 2,
            coordinate_nonlinearity: 128 - spectrum.max_abs_single_bit_beta() / 2,
            lap: MetricRatio::new(max_abs / 2, 256),
            dap: MetricRatio::new(analysis::dap_count(sbox), 256),
            sac_matrix: sac.values(),
            sac_max: MetricRatio::new(sac_max_c as u32, 256),
            sac_min: MetricRatio::new(sac_min_c as u32, 256),
            bic_max: MetricRatio::new(bic_max_c as u32, 2048),
            bic_min: MetricRatio::new(bic_min_c as u32, 2048),
            algebraic_complexity: gf256::algebraic_complexity(sbox),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Plain-text rendering, one metric per line plus the SAC matrix.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.source {
            ReportSource::Generated { p, b, ordering } => {
                out.push_str(&format!("source: p={p} b={b} ordering={ordering}\n"));
            }
            ReportSource::External(tag) => out.push_str(&format!("source: {tag}\n")),
        }
        out.push_str(&format!("bijective: {}\n", self.bijective));
        out.push_str(&format!("nl: {}\n", self.nonlinearity));
        out.push_str(&format!(
            "nl (single-bit output masks): {}\n",
            self.coordinate_nonlinearity
        ));
        out.push_str(&format!(
            "lap: {}/{} = {}\n",
            self.lap.numerator, self.lap.denominator, self.lap.rendered
        ));
        out.push_str(&format!(
            "dap: {}/{} = {}\n",
            self.dap.numerator, self.dap.denominator, self.dap.rendered
        ));
        out.push_str(&format!(
            "sac: max {}/{} = {}, min {}/{} = {}\n",
            self.sac_max.numerator,
            self.sac_max.denominator,
            self.sac_max.rendered,
            self.sac_min.numerator,
            self.sac_min.denominator,
            self.sac_min.rendered
        ));
        out.push_str(&format!(
            "bic: max {}/{} = {}, min {}/{} = {}\n",
            self.bic_max.numerator,
            self.bic_max.denominator,
            self.bic_max.rendered,
            self.bic_min.numerator,
            self.bic_min.denominator,
            self.bic_min.rendered
        ));
        out.push_str(&format!("ac: {}\n", self.algebraic_complexity));
        out.push_str("sac matrix:\n");
        for row in &self.sac_matrix {
            let cells: Vec<String> = row.iter().map(|v| format!("{:.4}", round4(*v))).collect();
            out.push_str("  ");
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}
