//! On-disk formats: `.fring.json` rings and premetric groups.

use std::fs;
use std::path::Path;

use fusionkit_core::pointed::QuadraticForm;
use fusionkit_core::{FiniteAbelianGroup, FusionRing, RootOfUnity};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("rank is {rank} but {what} has {len} entries")]
    RankMismatch { rank: usize, what: &'static str, len: usize },
    #[error(transparent)]
    Core(#[from] fusionkit_core::Error),
}

/// Free-form provenance carried next to the fusion rules. The twist `ζ`
/// lives here: it never changes the coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    /// Reduced `p/q` exponent string.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<u64>>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

/// A fusion ring as JSON: `coeffs` lists the nonzero `[a, b, c, N]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFile {
    pub rank: usize,
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    pub coeffs: Vec<[i64; 4]>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

impl RingFile {
    pub fn from_ring(ring: &FusionRing, metadata: Metadata) -> Self {
        Self {
            rank: ring.rank(),
            labels: ring.labels().to_vec(),
            unit: ring.unit(),
            dual: ring.duals().to_vec(),
            coeffs: ring
                .triples()
                .map(|(a, b, c, n)| [a as i64, b as i64, c as i64, i64::from(n)])
                .collect(),
            metadata,
        }
    }

    pub fn to_ring(&self) -> Result<FusionRing, FormatError> {
        for (what, len) in [("labels", self.labels.len()), ("dual", self.dual.len())] {
            if len != self.rank {
                return Err(FormatError::RankMismatch { rank: self.rank, what, len });
            }
        }
        let index = |x: i64| usize::try_from(x).unwrap_or(usize::MAX);
        let triples = self.coeffs.iter().map(|&[a, b, c, n]| (index(a), index(b), index(c), n));
        Ok(FusionRing::new(self.labels.clone(), self.unit, self.dual.clone(), triples)?)
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FormatError> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: name.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| FormatError::Json { path: name, source })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), FormatError> {
    fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_ring(path: &Path) -> Result<(FusionRing, Metadata), FormatError> {
    let file: RingFile = read_json(path)?;
    let ring = file.to_ring()?;
    Ok((ring, file.metadata))
}

pub fn ring_to_json(ring: &FusionRing, metadata: Metadata) -> String {
    let mut s = serde_json::to_string_pretty(&RingFile::from_ring(ring, metadata)).expect("ring files serialize");
    s.push('\n');
    s
}

/// A premetric group: invariant factors and `q` on every element, in the
/// mixed-radix order of the residues (last factor fastest).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PremetricFile {
    pub group: Vec<u64>,
    pub values: Vec<String>,
}

impl PremetricFile {
    pub fn from_form(q: &QuadraticForm) -> Self {
        Self {
            group: q.group().factors().to_vec(),
            values: q.values().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn to_form(&self) -> Result<QuadraticForm, FormatError> {
        let group = FiniteAbelianGroup::new(self.group.clone())?;
        let values = self
            .values
            .iter()
            .map(|v| v.parse::<RootOfUnity>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QuadraticForm::new(group, values)?)
    }
}

pub fn read_premetric(path: &Path) -> Result<QuadraticForm, FormatError> {
    read_json::<PremetricFile>(path)?.to_form()
}
