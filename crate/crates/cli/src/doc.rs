//! JSON documents written to stdout. Field order is fixed by the struct
//! definitions so outputs can be compared byte for byte.

use matchcover::{Edge, MatchingDecomposition, SolveResult, StableSetCertificate, VertexSet};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertDoc {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(rename = "N_of_S")]
    pub n_of_s: Vec<usize>,
    /// The k this set rules out: `|S| > k·|N(S)|`.
    pub k: usize,
}

impl CertDoc {
    pub fn from_cert(c: &StableSetCertificate) -> CertDoc {
        CertDoc {
            s: c.s.as_slice().to_vec(),
            n_of_s: c.n_of_s.as_slice().to_vec(),
            k: c.k,
        }
    }

    pub fn to_cert(&self) -> StableSetCertificate {
        StableSetCertificate {
            s: self.s.iter().copied().collect(),
            n_of_s: self.n_of_s.iter().copied().collect(),
            k: self.k,
        }
    }
}

/// Shared shape of the cover, min-k and weighted documents.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverDoc {
    pub feasible: bool,
    pub k: Option<usize>,
    pub matchings: Vec<Vec<[usize; 2]>>,
    pub uncovered: Vec<usize>,
    pub certificate: Option<CertDoc>,
    /// Command-specific fields, appended after the common ones.
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl CoverDoc {
    pub fn from_decomposition(
        d: &MatchingDecomposition,
        uncovered: &VertexSet,
        cert: Option<&StableSetCertificate>,
    ) -> CoverDoc {
        CoverDoc {
            feasible: uncovered.is_empty(),
            k: Some(d.k),
            matchings: d.matchings.iter().map(|m| edge_pairs(m)).collect(),
            uncovered: uncovered.as_slice().to_vec(),
            certificate: cert.map(CertDoc::from_cert),
            extra: Map::new(),
        }
    }

    pub fn from_solve(r: &SolveResult) -> CoverDoc {
        let mut doc =
            CoverDoc::from_decomposition(&r.decomposition, &r.uncovered, r.witness.as_ref());
        doc.extra
            .insert("augmentations".into(), r.augmentations.into());
        doc
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> CoverDoc {
        self.extra.insert(key.into(), value.into());
        self
    }

    pub fn matchings_as_edges(&self) -> Vec<Vec<Edge>> {
        self.matchings
            .iter()
            .map(|m| m.iter().map(|&[u, v]| Edge::new(u, v)).collect())
            .collect()
    }
}

pub fn edge_pairs(edges: &[Edge]) -> Vec<[usize; 2]> {
    edges.iter().map(|e| [e.0, e.1]).collect()
}

pub fn set(s: &VertexSet) -> Value {
    s.as_slice().into()
}
