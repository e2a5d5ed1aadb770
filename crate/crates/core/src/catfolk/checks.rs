use std::sync::Arc;

use serde::Serialize;

use super::cof::{cof_sections, unique_coalg, CofAwfs};
use super::corpus::isofibrations;
use super::generators::generator_set_i;
use super::homside::{CatHomSide, Transposer};
use super::trivcof::{j_coalg, j_lifting_functions, pointed_algebra_count, trivcof_algebras, TrivCofAwfs};
use crate::arrowcat::{liftfun_compose, Ambient, CatAmbient};
use crate::awfs::{alg_compose, alg_to_liftfun, composition_criterion_check, Algebra, CoalgGenerators};
use crate::error::Result;
use crate::fincat::{same_cat, Functor};
use crate::report::{Report, Violation};

pub const ALG_LIMIT: usize = 1 << 14;

/// Section search on every corpus functor: one structure on each
/// injective-on-objects functor, none otherwise.
pub fn unique_coalg_census(cof: &CofAwfs, corpus: &[Functor]) -> (usize, usize, Report) {
    let amb = CatAmbient;
    let (mut inj, mut non) = (0, 0);
    let mut out = Vec::new();
    for f in corpus {
        let found = cof_sections(cof, f);
        let expected = usize::from(f.is_injective_on_objects());
        if expected == 1 {
            inj += 1;
        } else {
            non += 1;
        }
        if found.len() != expected {
            out.push(Violation::new("unique C-coalgebra", vec![amb.describe(f)], found.len().to_string(), expected.to_string()));
        } else if let (Some(c), Ok(u)) = (found.first(), unique_coalg(cof, f)) {
            if let Some((l, r)) = amb.diff(&c.s, &u.s) {
                out.push(Violation::new("unique C-coalgebra", vec![amb.describe(f)], l, r));
            }
        }
    }
    (inj, non, out)
}

/// The single generator j with its coalgebra structure.
pub fn j_generators(triv: &TrivCofAwfs) -> CoalgGenerators<Functor> {
    CoalgGenerators::discrete(&CatAmbient, vec![("j".to_string(), j_coalg(triv))])
}

/// Every pair of algebra structures on composable isofibrations.
pub fn algebra_pairs(triv: &TrivCofAwfs) -> Result<Vec<(String, Algebra<Functor>, Algebra<Functor>)>> {
    let isos = isofibrations();
    let mut algs = Vec::new();
    for (n, f) in &isos {
        algs.push((n.clone(), f.clone(), trivcof_algebras(triv, f, ALG_LIMIT)?));
    }
    let mut out = Vec::new();
    for (nf, f, af) in &algs {
        for (ng, g, ag) in &algs {
            if !same_cat(f.tgt(), g.src()) {
                continue;
            }
            for (k1, a1) in af.iter().enumerate() {
                for (k2, a2) in ag.iter().enumerate() {
                    out.push((format!("{nf}#{k1} ; {ng}#{k2}"), a1.clone(), a2.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// The lifting function of a composite algebra against the composite of the
/// parts' lifting functions.
pub fn lift_preserves_composition(triv: &TrivCofAwfs, pairs: &[(String, Algebra<Functor>, Algebra<Functor>)]) -> Report {
    let amb = CatAmbient;
    let gens = j_generators(triv);
    let mut out = Vec::new();
    for (name, a1, a2) in pairs {
        let run = || -> Result<Option<Violation>> {
            let whole = alg_to_liftfun(triv, &alg_compose(triv, a1, a2)?, &gens)?;
            let parts = liftfun_compose(&amb, &alg_to_liftfun(triv, a1, &gens)?, &alg_to_liftfun(triv, a2, &gens)?)?;
            Ok(whole.first_difference(&amb, &parts))
        };
        match run() {
            Ok(Some(mut v)) => {
                v.ids.insert(0, name.clone());
                out.push(v);
            }
            Ok(None) => {}
            Err(e) => out.push(Violation::new("lift preserves composition", vec![name.clone()], e.to_string(), "computable")),
        }
    }
    out
}

/// Algebra and lifting-function counts for one arrow.
#[derive(Clone, Debug, Serialize)]
pub struct CorrRow {
    pub arrow: String,
    pub algebras: usize,
    pub pointed_algebras: usize,
    pub lifting_functions: usize,
}

/// 𝔽-algebras against coherent j-lifting functions: every algebra must map
/// to a distinct lifting function and every lifting function must be hit.
pub fn algebra_liftfun_correspondence(triv: &TrivCofAwfs, arrows: &[(String, Functor)]) -> Result<(Vec<CorrRow>, Report)> {
    let amb = CatAmbient;
    let gens = j_generators(triv);
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for (name, g) in arrows {
        let algs = trivcof_algebras(triv, g, ALG_LIMIT)?;
        let lfs = j_lifting_functions(&gens.gens, g, ALG_LIMIT)?;
        let pointed = pointed_algebra_count(triv, g, ALG_LIMIT)?;
        let mut hit = vec![false; lfs.len()];
        for a in &algs {
            let phi = alg_to_liftfun(triv, a, &gens)?;
            match lfs.iter().position(|l| l.first_difference(&amb, &phi).is_none()) {
                Some(k) if !hit[k] => hit[k] = true,
                Some(_) => out.push(Violation::new("algebras -> lifting functions injective", vec![name.clone()], "repeated image", "distinct")),
                None => out.push(Violation::new("algebras -> lifting functions", vec![name.clone()], "image not coherent", "coherent")),
            }
        }
        if let Some(k) = hit.iter().position(|h| !h) {
            let missed = &lfs[k];
            let ids = vec![name.clone(), format!("lifting function {k}")];
            let witness = missed.entries.iter().map(|e| amb.describe(&e.diag)).collect::<Vec<_>>().join("; ");
            out.push(Violation::new("algebras -> lifting functions surjective", ids, format!("{} algebras", algs.len()), format!("{} lifting functions, missed: {witness}", lfs.len())));
        }
        rows.push(CorrRow { arrow: name.clone(), algebras: algs.len(), pointed_algebras: pointed, lifting_functions: lfs.len() });
    }
    Ok((rows, out))
}

/// Composition criterion for the Cat hom side with i ∈ {c, d, e}.
/// `replace` may substitute the algebra used for a given composite.
pub fn hom_side_criterion(
    triv: &Arc<TrivCofAwfs>,
    pairs: &[(String, Algebra<Functor>, Algebra<Functor>)],
    replace: impl Fn(&Algebra<Functor>) -> Option<Algebra<Functor>> + Sync,
) -> Report {
    let side = Arc::new(CatHomSide::new());
    let tr = Transposer::new(triv.clone(), side.clone());
    let params: Vec<(String, Functor)> = generator_set_i().into_iter().map(|(n, f)| (n.to_string(), f)).collect();
    let algs: Vec<_> = pairs.iter().map(|(_, a, b)| (a.clone(), b.clone())).collect();
    composition_criterion_check(&**triv, &*side, &params, &algs, |p, a| match replace(a) {
        Some(b) => tr.liftfun(&p.1, &b),
        None => tr.liftfun(&p.1, a),
    })
}

/// The hom-side criterion with the composite algebra on pr₁ ; (𝐈 → 1)
/// swapped for a different algebra on 𝐈×𝐈 → 1. Expected to fail.
pub fn hom_side_mutation(triv: &Arc<TrivCofAwfs>) -> Result<Report> {
    let pairs: Vec<_> = algebra_pairs(triv)?.into_iter().filter(|(n, _, _)| n.starts_with("pr1:IxI->I#0 ; I->1")).take(1).collect();
    let Some((_, a1, a2)) = pairs.first() else {
        return Err(crate::error::Error::Malformed("no pr1 ; I->1 pair".into()));
    };
    let gf = alg_compose(&**triv, a1, a2)?;
    let other = trivcof_algebras(triv, &gf.g, ALG_LIMIT)?
        .into_iter()
        .find(|b| b.t != gf.t)
        .ok_or_else(|| crate::error::Error::Malformed("composite has a single algebra".into()))?;
    Ok(hom_side_criterion(triv, &pairs, |a| (a.g == gf.g).then(|| other.clone())))
}
