use serde::Serialize;

use super::anodyne::anodyne_certificate;
use super::cert::{certificate_verify, CellularCertificate, GenKind, Generator, Step};
use super::simplicial::{delta, horn_inclusion, product_map, sset_pp, sset_product, SimplicialMap, DEFAULT_DIM};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::report::Report;

/// The two 𝓙-cellular structures on h¹₀ ⊠ h²₁ and where they part ways.
#[derive(Clone, Debug)]
pub struct TroughReport {
    pub a: CellularCertificate,
    pub b: CellularCertificate,
    pub a_report: Report,
    pub b_report: Report,
    /// first step index at which the two lists differ
    pub divergence: Option<usize>,
    pub end_triangle: Label,
    pub a_end_dim: Option<usize>,
    pub b_end_dim: Option<usize>,
}

#[derive(Serialize)]
struct TroughJson {
    divergence: Option<usize>,
    end_triangle: Label,
    a_end_dim: Option<usize>,
    b_end_dim: Option<usize>,
    a: serde_json::Value,
    b: serde_json::Value,
}

impl TroughReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TroughJson {
            divergence: self.divergence,
            end_triangle: self.end_triangle.clone(),
            a_end_dim: self.a_end_dim,
            b_end_dim: self.b_end_dim,
            a: self.a.to_json(),
            b: self.b.to_json(),
        })
        .unwrap_or_default()
    }
}

fn seq(v: &[u32]) -> Label {
    Label::tup(v.iter().map(|&x| Label::int(x)))
}

/// Dimension of the generator of the step whose attachment first covers the
/// 2-simplex `t`.
fn filling_dim(c: &CellularCertificate, t: u32) -> Option<usize> {
    let y = &c.m.tgt;
    c.steps.iter().find(|s| match s.gen.n {
        2 => s.cell == t,
        3 => y.face(3, s.gen.k, s.cell) == t,
        _ => false,
    }).map(|s| s.gen.n)
}

pub fn trough_demo() -> Result<TroughReport> {
    let dim = DEFAULT_DIM;
    let pp = sset_pp(&horn_inclusion(1, 0, dim)?, &horn_inclusion(2, 1, dim)?)?;
    let y = pp.bd.obj.clone();
    let (d1, d2) = (delta(1, dim)?, delta(2, dim)?);
    let end_triangle = Label::pair(seq(&[1, 1, 1]), seq(&[0, 1, 2]));
    let t = y.find(2, &end_triangle).ok_or_else(|| Error::Malformed("no end triangle".into()))?;

    // A: fill {1}×Δ² with Λ²₁, then ∂Δ¹→Δ¹ ⊠ h²₁ by symmetry of the (2,1,1) structure
    let c211 = anodyne_certificate(2, 1, 1)?;
    let p21 = sset_product(&d2, &d1)?;
    let swap = pp.bd.pairing(&p21.p2, &p21.p1)?;
    let mut a_steps = vec![Step { gen: Generator::horn(2, 1), cell: t }];
    a_steps.extend(c211.transport(&swap));

    // B: the (1,0,1) structure pushed along Δ¹ × (edge 02), then (1,0,2)
    let c101 = anodyne_certificate(1, 0, 1)?;
    let c102 = anodyne_certificate(1, 0, 2)?;
    let p11 = sset_product(&d1, &d1)?;
    let e02 = SimplicialMap::yoneda(&d1, 1, &d2, d2.find(1, &seq(&[0, 2])).ok_or_else(|| Error::Malformed("no edge 02".into()))?)?;
    let along = product_map(&p11, &pp.bd, &SimplicialMap::identity(&d1), &e02)?;
    let mut b_steps = c101.transport(&along);
    b_steps.extend(c102.transport(&SimplicialMap::by_labels(&c102.m.tgt, &y)?));

    let a = CellularCertificate { kind: GenKind::Horn, m: pp.arrow.clone(), steps: a_steps };
    let b = CellularCertificate { kind: GenKind::Horn, m: pp.arrow.clone(), steps: b_steps };
    let divergence = a.steps.iter().zip(&b.steps).position(|(x, y)| x != y).or_else(|| (a.steps.len() != b.steps.len()).then(|| a.steps.len().min(b.steps.len())));
    Ok(TroughReport {
        a_report: certificate_verify(&a),
        b_report: certificate_verify(&b),
        divergence,
        a_end_dim: filling_dim(&a, t),
        b_end_dim: filling_dim(&b, t),
        end_triangle,
        a,
        b,
    })
}
