use serde::{Deserialize, Serialize};

use crate::cc::{CoherentConfiguration, ColorMatrix, Fingerprint};
use crate::decomposition::{DecompositionTrace, TensorDecomposition};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub degree: usize,
    pub rank: usize,
    /// Sorted valency multiset.
    pub valencies: Vec<usize>,
    pub matrix: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub pstar_size: usize,
    pub subsets_tested: usize,
    pub recursion_calls: usize,
    pub nodes: DecompositionTrace,
}

/// Machine-readable result of a decomposition, written as JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub source: Fingerprint,
    pub factors: Vec<FactorReport>,
    /// Factor coordinates of each source point.
    pub point_map: Vec<Vec<usize>>,
    pub trace: TraceReport,
}

impl DecompositionReport {
    pub fn new(source: &CoherentConfiguration, d: &TensorDecomposition) -> Self {
        let factors = d
            .factors()
            .iter()
            .map(|f| {
                let mut valencies: Vec<usize> = f.colors().map(|c| f.valency(c)).collect();
                valencies.sort_unstable();
                FactorReport {
                    degree: f.degree(),
                    rank: f.rank(),
                    valencies,
                    matrix: f.matrix().rows().map(<[u32]>::to_vec).collect(),
                }
            })
            .collect();
        let t = d.trace();
        DecompositionReport {
            source: source.fingerprint(),
            factors,
            point_map: d.point_map().to_vec(),
            trace: TraceReport {
                pstar_size: t.pstar_size(),
                subsets_tested: t.subsets_tested(),
                recursion_calls: t.recursion_calls(),
                nodes: t.clone(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    /// Rebuilds the factor configurations.
    pub fn factor_configurations(&self) -> Result<Vec<CoherentConfiguration>> {
        self.factors.iter().map(|f| CoherentConfiguration::from_matrix(ColorMatrix::from_rows(&f.matrix)?)).collect()
    }

    /// Source point to its index in the tensor of the factors.
    pub fn product_map(&self) -> Vec<usize> {
        self.point_map.iter().map(|t| t.iter().zip(&self.factors).fold(0, |acc, (&x, f)| acc * f.degree + x)).collect()
    }

    /// One-line human summary, e.g. `2 factors: degree 3 rank 2; degree 4 rank 2`.
    pub fn summary(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| format!("degree {} rank {}", f.degree, f.rank)).collect();
        let noun = if self.factors.len() == 1 { "factor" } else { "factors" };
        format!("{} {noun}: {}", self.factors.len(), parts.join("; "))
    }
}
