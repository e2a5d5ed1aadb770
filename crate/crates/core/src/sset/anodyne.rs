use std::sync::Arc;

use super::cert::{add_closed, attach, certificate_verify, CellularCertificate, GenKind, Generator, Step};
use super::simplicial::{horn_inclusion, image, sphere_inclusion, sset_pp, FinSSet, SimplicialMap, DEFAULT_DIM, SPP};
use crate::error::{Error, Result};

pub const SEARCH_BUDGET: usize = 200_000;

/// Λⁿ_k → Δⁿ ⊠ ∂Δᵐ → Δᵐ at the given dimension bound.
pub fn anodyne_pp(n: usize, k: usize, m: usize, dim: usize) -> Result<SPP> {
    if n + m > dim {
        return Err(Error::BoundExceeded(format!("{n} + {m} exceeds bound {dim}")));
    }
    sset_pp(&horn_inclusion(n, k, dim)?, &sphere_inclusion(m, dim)?)
}

/// Candidate horn fillings at a stage: (y, k) with y and d_k y missing and
/// all other faces present, ordered by (dimension, id, k).
fn candidates(y: &FinSSet, stage: &[Vec<bool>]) -> Vec<Step> {
    let mut out = Vec::new();
    for n in 1..=y.dim() {
        for x in y.nondegenerate(n) {
            if stage[n][x as usize] {
                continue;
            }
            let missing: Vec<usize> = (0..=n).filter(|&i| !stage[n - 1][y.face(n, i, x) as usize]).collect();
            if let [k] = missing[..] {
                if !y.is_degenerate(n - 1, y.face(n, k, x)) {
                    out.push(Step { gen: Generator::horn(n, k), cell: x });
                }
            }
        }
    }
    out
}

fn complete(stage: &[Vec<bool>]) -> bool {
    stage.iter().all(|d| d.iter().all(|&b| b))
}

/// Deterministic depth-first search for a 𝓙-cellular structure on a mono.
pub fn horn_search(m: &SimplicialMap, budget: usize) -> Result<CellularCertificate> {
    let y = m.tgt.clone();
    let mut steps = Vec::new();
    let mut spent = 0;
    fn go(y: &Arc<FinSSet>, stage: &[Vec<bool>], steps: &mut Vec<Step>, spent: &mut usize, budget: usize) -> Result<bool> {
        if complete(stage) {
            return Ok(true);
        }
        for st in candidates(y, stage) {
            *spent += 1;
            if *spent > budget {
                return Err(Error::SearchExhausted(format!("budget {budget} spent after {} steps", steps.len())));
            }
            let Some(mut next) = attach(y, &stage.to_vec(), &st)? else { continue };
            add_closed(y, &mut next, st.gen.n, st.cell);
            steps.push(st);
            if go(y, &next, steps, spent, budget)? {
                return Ok(true);
            }
            steps.pop();
        }
        Ok(false)
    }
    if !go(&y, &image(m), &mut steps, &mut spent, budget)? {
        return Err(Error::SearchExhausted("no horn filling completes the target".into()));
    }
    Ok(CellularCertificate { kind: GenKind::Horn, m: m.clone(), steps })
}

/// The 𝓙-cellular structure on Λⁿ_k ⊠ (∂Δᵐ → Δᵐ), verified before return.
pub fn anodyne_certificate(n: usize, k: usize, m: usize) -> Result<CellularCertificate> {
    anodyne_certificate_at(n, k, m, DEFAULT_DIM.max(n + m), SEARCH_BUDGET)
}

pub fn anodyne_certificate_at(n: usize, k: usize, m: usize, dim: usize, budget: usize) -> Result<CellularCertificate> {
    let pp = anodyne_pp(n, k, m, dim)?;
    let cert = horn_search(&pp.arrow, budget)?;
    let report = certificate_verify(&cert);
    if !report.is_empty() {
        return Err(Error::Malformed(format!("search produced an invalid certificate: {}", report[0].law)));
    }
    Ok(cert)
}

/// All (n, k, m) with n ≤ 2 and m ≤ 2.
pub fn supported_table() -> Vec<(usize, usize, usize)> {
    (1..=2).flat_map(|n| (0..=n).flat_map(move |k| (0..=2).map(move |m| (n, k, m)))).collect()
}
