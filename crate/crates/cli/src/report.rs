//! Machine-readable output. Keys serialize sorted, integers as JSON numbers
//! when they fit in 64 bits and as decimal strings otherwise.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use semiglue::gluing::RankConditions;
use semiglue::{Binomial, GluingReport, HomologySummary, LatticeVector, VariableBlock};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub kmax: u64,
    pub degree_bound: Option<Vec<i64>>,
    pub work_limit: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub artifact: String,
    pub version: String,
    pub input_sha256: String,
    pub bounds: Bounds,
}

impl Provenance {
    pub fn new(input: &[u8], bounds: Bounds) -> Self {
        Provenance {
            artifact: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_sha256: hex::encode(Sha256::digest(input)),
            bounds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    /// `yes`, `no` or `inconclusive`.
    pub outcome: String,
    pub exit_code: i32,
    pub result: Value,
    pub provenance: Provenance,
}

impl ReportDocument {
    /// Pretty-printed with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&canonical(value)).expect("value serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Rebuilds every object with its keys inserted in sorted order.
fn canonical(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(
                entries
                    .into_iter()
                    .map(|(k, v)| (k, canonical(v)))
                    .collect(),
            )
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}

pub fn lattice(v: &LatticeVector) -> Value {
    match v.to_i64() {
        Some(xs) => json!(xs),
        None => json!(v
            .entries()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()),
    }
}

pub fn binomials(gens: &[Binomial], block: &VariableBlock) -> Value {
    json!(gens.iter().map(|g| g.display(block)).collect::<Vec<_>>())
}

pub fn homology(h: &HomologySummary) -> Value {
    json!({
        "dim": h.dim,
        "variables": h.variables,
        "mu": h.mu,
        "pd": h.pd,
        "depth": h.depth,
        "ci": h.ci.as_str(),
        "cm": h.cm.as_str(),
        "gorenstein": h.gorenstein.as_str(),
    })
}

pub fn rank_conditions(rc: &RankConditions) -> Value {
    json!({
        "rank_a": rc.rank_a,
        "rank_b": rc.rank_b,
        "rank_ab": rc.rank_ab,
        "n": rc.n,
        "hold": rc.hold(),
        "degenerate": rc.is_degenerate(),
    })
}

pub fn gluing(r: &GluingReport) -> Value {
    let block = &r.block;
    json!({
        "k1": r.k1,
        "k2": r.k2,
        "rank_conditions": rank_conditions(&r.rank_conditions),
        "projected_rows": r.projected_rows.as_ref().map(|rows| rows.iter().map(|i| i + 1).collect::<Vec<_>>()),
        "u": r.u.as_ref().map(lattice),
        "witness_a": r.witness_a,
        "witness_b": r.witness_b,
        "is_gluing": r.is_gluing,
        "rho": r.rho.as_ref().map(|b| b.display(block)),
        "rho_source": r.rho_source.map(|s| s.as_str()),
        "rho_level": r.rho_level,
        "mu": { "a": r.mu_a(), "b": r.mu_b(), "c": r.mu_c() },
        "ideal_a": binomials(&r.ideal_a, block),
        "ideal_b": binomials(&r.ideal_b, block),
        "ideal_c": binomials(&r.ideal_c, block),
        "extra_generators": binomials(&r.extra_generators, block),
        "homology": {
            "a": homology(&r.homology_a),
            "b": homology(&r.homology_b),
            "c": homology(&r.homology_c),
            "predicted": r.predicted.as_ref().map(homology),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportDocument {
        ReportDocument {
            command: "toric".into(),
            outcome: "yes".into(),
            exit_code: 0,
            result: json!({"mu": 3, "generators": ["x1*x3 - x2^2"], "big": "123456789012345678901234"}),
            provenance: Provenance::new(
                b"A:\n1 0\n",
                Bounds {
                    kmax: 50,
                    degree_bound: Some(vec![4, 4]),
                    work_limit: 10,
                },
            ),
        }
    }

    #[test]
    fn round_trip() {
        let doc = sample();
        assert_eq!(ReportDocument::from_json(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn keys_sorted_and_stable() {
        let text = sample().to_json();
        let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("command") < pos("exit_code"));
        assert!(pos("exit_code") < pos("outcome"));
        assert!(pos("outcome") < pos("provenance"));
        assert!(pos("big") < pos("generators"));
        assert_eq!(text, sample().to_json());
    }

    #[test]
    fn input_hash() {
        let p = Provenance::new(
            b"",
            Bounds {
                kmax: 1,
                degree_bound: None,
                work_limit: 1,
            },
        );
        assert_eq!(
            p.input_sha256,
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn wide_lattice_values() {
        let wide = semiglue::exactlin::BigInt::from(u64::MAX) + 1;
        let v = LatticeVector(vec![wide, 1.into()]);
        assert_eq!(lattice(&v), json!(["18446744073709551616", "1"]));
        assert_eq!(lattice(&LatticeVector::from_i64(&[1, -2])), json!([1, -2]));
    }
}
