use std::sync::Arc;

use serde::Serialize;

use super::simplicial::{delta, horn_inclusion, image, sphere_inclusion, sset_pushout, subcomplex, FinSSet, SimplicialMap};
use crate::error::Result;
use crate::report::{Report, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenKind {
    Sphere,
    Horn,
}

/// ∂Δⁿ → Δⁿ (k unused) or Λⁿ_k → Δⁿ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub kind: GenKind,
    pub n: usize,
    pub k: usize,
}

impl Generator {
    pub fn sphere(n: usize) -> Generator {
        Generator { kind: GenKind::Sphere, n, k: 0 }
    }

    pub fn horn(n: usize, k: usize) -> Generator {
        Generator { kind: GenKind::Horn, n, k }
    }

    pub fn inclusion(&self, dim: usize) -> Result<SimplicialMap> {
        match self.kind {
            GenKind::Sphere => sphere_inclusion(self.n, dim),
            GenKind::Horn => horn_inclusion(self.n, self.k, dim),
        }
    }
}

/// One attachment: the generator and the n-simplex of the target it fills.
/// The attaching map is the characteristic map of `cell` restricted to the
/// generator's domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub gen: Generator,
    pub cell: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CellularCertificate {
    pub kind: GenKind,
    pub m: SimplicialMap,
    pub steps: Vec<Step>,
}

type Membership = Vec<Vec<bool>>;

/// Mark x and all its degeneracies.
pub(crate) fn add_closed(y: &FinSSet, member: &mut Membership, n: usize, x: u32) {
    let mut todo = vec![(n, x)];
    while let Some((n, x)) = todo.pop() {
        if std::mem::replace(&mut member[n][x as usize], true) {
            continue;
        }
        if n < y.dim() {
            todo.extend((0..=n).map(|i| (n + 1, y.degen(n, i, x))));
        }
    }
}

fn step_ids(s: usize, st: &Step, y: &FinSSet) -> Vec<String> {
    vec![format!("step {s}"), format!("{:?}({},{})", st.gen.kind, st.gen.n, st.gen.k), y.label(st.gen.n, st.cell).to_string()]
}

/// Empty iff every step is a pushout of its generator onto the current stage
/// and the stages exhaust the target.
pub fn certificate_verify(c: &CellularCertificate) -> Report {
    let mut out = Vec::new();
    let y = &c.m.tgt;
    let dim = y.dim();
    if !c.m.is_mono() {
        out.push(Violation::new("target map is monic", vec![], "not monic", "monic"));
        return out;
    }
    let mut stage = image(&c.m);
    for (s, st) in c.steps.iter().enumerate() {
        let ids = step_ids(s, st, y);
        if st.gen.kind != c.kind {
            out.push(Violation::new("generator kind", ids, format!("{:?}", st.gen.kind), format!("{:?}", c.kind)));
            return out;
        }
        if st.gen.n > dim || st.cell as usize >= y.count(st.gen.n) {
            out.push(Violation::new("step in range", ids, "out of range", ""));
            return out;
        }
        match attach(y, &stage, st) {
            Ok(Some(next)) => stage = next,
            Ok(None) | Err(_) => {
                out.push(Violation::new("step is a pushout of its generator", ids, "no pushout onto current stage", "pushout"));
                return out;
            }
        }
    }
    let missing: Vec<String> =
        (0..=dim).flat_map(|n| { let stage = &stage; y.simplices(n).filter(move |&x| !stage[n][x as usize]).map(move |x| (n, x)) }).take(4).map(|(n, x)| y.label(n, x).to_string()).collect();
    if !missing.is_empty() {
        out.push(Violation::new("composite equals target", missing, "stage", "target"));
    }
    out
}

/// The next stage if attaching `st` is a pushout square.
pub(crate) fn attach(y: &Arc<FinSSet>, stage: &Membership, st: &Step) -> Result<Option<Membership>> {
    let dim = y.dim();
    let g = st.gen.inclusion(dim)?;
    let dn = delta(st.gen.n, dim)?;
    let sigma = SimplicialMap::yoneda(&dn, st.gen.n, y, st.cell)?;
    let att = sigma.after(&g)?;
    if (0..=dim).any(|n| att.table[n].iter().any(|&x| !stage[n][x as usize])) {
        return Ok(None);
    }
    let (xs, incl) = subcomplex(y, stage)?;
    let a = SimplicialMap {
        src: att.src.clone(),
        tgt: xs.clone(),
        table: att.table.iter().enumerate().map(|(n, t)| t.iter().map(|&x| incl.table[n].binary_search(&x).map(|p| p as u32).unwrap_or(u32::MAX)).collect()).collect(),
    };
    let po = sset_pushout(&g, &a)?;
    let cmp = po.induced(&sigma, &incl)?;
    if !cmp.is_mono() {
        return Ok(None);
    }
    let mut next = stage.clone();
    for n in 0..=dim {
        for &x in &sigma.table[n] {
            next[n][x as usize] = true;
        }
    }
    Ok(Some(next))
}

/// The 𝓘-cellular structure: complement nondegenerates in (dimension, id) order.
pub fn mono_icellular(m: &SimplicialMap) -> CellularCertificate {
    let y = &m.tgt;
    let stage = image(m);
    let steps = (0..=y.dim())
        .flat_map(|n| y.nondegenerate(n).into_iter().filter(|&x| !stage[n][x as usize]).map(move |x| Step { gen: Generator::sphere(n), cell: x }).collect::<Vec<_>>())
        .collect();
    CellularCertificate { kind: GenKind::Sphere, m: m.clone(), steps }
}

impl CellularCertificate {
    /// Push the steps forward along a map of targets that is injective on
    /// the cells involved.
    pub fn transport(&self, along: &SimplicialMap) -> Vec<Step> {
        self.steps.iter().map(|s| Step { gen: s.gen, cell: along.at(s.gen.n, s.cell) }).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let y = &self.m.tgt;
        let steps: Vec<serde_json::Value> = self
            .steps
            .iter()
            .map(|st| {
                let tables = delta(st.gen.n, y.dim())
                    .and_then(|dn| {
                        let sigma = SimplicialMap::yoneda(&dn, st.gen.n, y, st.cell)?;
                        sigma.after(&st.gen.inclusion(y.dim())?)
                    })
                    .map(|att| {
                        (0..=y.dim())
                            .map(|n| att.src.nondegenerate(n).into_iter().map(|x| serde_json::json!([att.src.label(n, x), y.label(n, att.at(n, x))])).collect::<Vec<_>>())
                            .collect::<Vec<_>>()
                    })
                    .unwrap_or_default();
                serde_json::json!({ "generator": st.gen, "cell": y.label(st.gen.n, st.cell), "attaching": tables })
            })
            .collect();
        serde_json::json!({ "kind": self.kind, "steps": steps })
    }
}
