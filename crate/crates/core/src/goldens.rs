//! Golden artefacts, rendered in memory and keyed by relative path.

use serde::Serialize;
use serde_json::{json, Value};

use crate::arrowcat::CatAmbient;
use crate::awfs::alg_to_liftfun;
use crate::catfolk::{
    coherence_check, functor_corpus, generator_table, isofibrations, j_generators, trivcof_algebras, xi_direct, CofAwfs, TrivCofAwfs,
    ALG_LIMIT,
};
use crate::error::Result;
use crate::fincat::functor_to_json;
use crate::report;
use crate::sset::{anodyne_certificate, supported_table, trough_demo};

pub const XI_SEED: u64 = 0;
pub const XI_CORPUS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub path: String,
    pub content: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DriftStatus {
    Missing,
    Changed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Drift {
    pub path: String,
    pub status: DriftStatus,
    /// first differing byte
    pub offset: Option<usize>,
}

fn golden(path: impl Into<String>, v: &Value) -> Golden {
    let mut content = serde_json::to_string_pretty(v).unwrap_or_default();
    content.push('\n');
    Golden { path: path.into(), content }
}

fn generator_table_json() -> Result<Value> {
    let rows: Vec<Value> = generator_table()?
        .into_iter()
        .map(|r| {
            let witness = r.witness.map(|(u, v)| json!({"u": functor_to_json(&u), "v": functor_to_json(&v)}));
            json!({"name": r.name, "expected": r.expected, "witness": witness})
        })
        .collect();
    Ok(json!({ "rows": rows }))
}

fn xi_json(cof: &CofAwfs, triv: &TrivCofAwfs) -> Result<Value> {
    let amb = CatAmbient;
    let comps = functor_corpus(XI_SEED, XI_CORPUS)
        .iter()
        .map(|f| Ok(json!({"arrow": crate::arrowcat::Ambient::describe(&amb, f), "xi": functor_to_json(&xi_direct(cof, triv, f)?)})))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "seed": XI_SEED, "components": comps }))
}

fn liftfun_json(triv: &TrivCofAwfs) -> Result<Value> {
    let amb = CatAmbient;
    let gens = j_generators(triv);
    let mut out = Vec::new();
    for (name, g) in isofibrations().into_iter().filter(|(n, _)| ["I->1", "z2->1", "idI"].contains(&n.as_str())) {
        for (k, a) in trivcof_algebras(triv, &g, ALG_LIMIT)?.iter().enumerate() {
            out.push(json!({"arrow": name, "algebra": k, "lifting_function": alg_to_liftfun(triv, a, &gens)?.to_json(&amb)}));
        }
    }
    Ok(Value::Array(out))
}

/// Every golden file, in a fixed order.
pub fn render() -> Result<Vec<Golden>> {
    let (cof, triv) = (CofAwfs::new(), TrivCofAwfs::new());
    let mut out = vec![
        golden("cat/generator_table.json", &generator_table_json()?),
        golden("cat/xi_components.json", &xi_json(&cof, &triv)?),
        golden("cat/coherence.json", &report::to_json(&coherence_check(&cof, &triv)?)),
        golden("cat/lifting_functions.json", &liftfun_json(&triv)?),
    ];
    for (n, k, m) in supported_table() {
        out.push(golden(format!("sset/anodyne/n{n}_k{k}_m{m}.json"), &anodyne_certificate(n, k, m)?.to_json()));
    }
    out.push(golden("sset/trough.json", &trough_demo()?.to_json()));
    Ok(out)
}

/// Compare rendered goldens against stored bytes; one entry per drifted file.
pub fn diff(expected: &[Golden], read: impl Fn(&str) -> Option<Vec<u8>>) -> Vec<Drift> {
    expected
        .iter()
        .filter_map(|g| match read(&g.path) {
            None => Some(Drift { path: g.path.clone(), status: DriftStatus::Missing, offset: None }),
            Some(bytes) if bytes == g.content.as_bytes() => None,
            Some(bytes) => {
                let offset = bytes.iter().zip(g.content.as_bytes()).position(|(a, b)| a != b).unwrap_or(bytes.len().min(g.content.len()));
                Some(Drift { path: g.path.clone(), status: DriftStatus::Changed, offset: Some(offset) })
            }
        })
        .collect()
}
