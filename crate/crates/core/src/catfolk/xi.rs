use super::cof::{unique_coalg, CofAwfs};
use super::trivcof::TrivCofAwfs;
use crate::arrowcat::{Ambient, CatAmbient, Square};
use crate::awfs::{awfs_morphism_validate, chosen_lift, free_alg, Awfs};
use crate::error::Result;
use crate::fincat::{basic, iso_comma, Functor, FunctorSearch, Ob};
use crate::report::Report;

/// ξ_f : E₁ f → Q f by its explicit formula: A-side a ↦ a, P(a, β) ↦ cod β.
pub fn xi_direct(cof: &CofAwfs, triv: &TrivCofAwfs, f: &Functor) -> Result<Functor> {
    let e = triv.ext(f);
    let q = cof.cyl(f);
    let na = f.src().n_obj() as Ob;
    let m = e.mid();
    let obj = m
        .objects()
        .map(|x| match e.tag[x as usize] {
            None => m.proj(x).unwrap_or(0),
            Some(beta) => na + f.tgt().cod(beta),
        })
        .collect();
    Ok(Functor::lift_into(&q.mid, obj, &e.fac.right))
}

/// ξ_f as the chosen lift of unique_coalg(L₁ f) against the free 𝔽_t-algebra
/// on f, in the square (C f, R₁ f): L₁ f ⇒ F_t f.
pub fn xi_chosen(cof: &CofAwfs, triv: &TrivCofAwfs, f: &Functor) -> Result<Functor> {
    let l1 = triv.l(f)?;
    let c = unique_coalg(cof, &l1)?;
    let a = free_alg(cof, f)?;
    let sq = Square::new(&l1, &a.g, &cof.l(f)?, &triv.r(f)?);
    chosen_lift(cof, &c, &a, &sq)
}

/// ξ components on a corpus, computed both ways; differing routes are reported.
pub fn comparison_xi(cof: &CofAwfs, triv: &TrivCofAwfs, corpus: &[Functor]) -> Result<(Vec<Functor>, Report)> {
    let amb = CatAmbient;
    let mut comps = Vec::new();
    let mut out = Vec::new();
    for f in corpus {
        let (d, c) = (xi_direct(cof, triv, f)?, xi_chosen(cof, triv, f)?);
        if let Some((l, r)) = amb.diff(&d, &c) {
            out.push(crate::report::Violation::new("xi formula = chosen lift", vec![amb.describe(f)], l, r));
        }
        comps.push(c);
    }
    Ok((comps, out))
}

pub fn xi_validate(cof: &CofAwfs, triv: &TrivCofAwfs, arrows: &[Functor], squares: &[Square<Functor>]) -> Report {
    awfs_morphism_validate(triv, cof, |f| xi_direct(cof, triv, f), arrows, squares)
}

/// All functors E₁ j → Q j satisfying both triangles, each with the number of
/// morphism-of-awfs violations when it replaces ξ_j.
pub fn xi_candidates_at(cof: &CofAwfs, triv: &TrivCofAwfs, f: &Functor) -> Result<Vec<(Functor, usize)>> {
    let e = triv.ext(f);
    let q = cof.cyl(f);
    let mut search = FunctorSearch::new(e.mid(), &q.mid);
    let l1 = triv.l(f)?;
    let c = cof.l(f)?;
    for m in f.src().morphisms() {
        search = search.fix_mor(l1.mor(m), c.mor(m));
    }
    for a in f.src().objects() {
        search = search.fix_obj(l1.ob(a), c.ob(a));
    }
    let ft = cof.r(f)?;
    let r1 = triv.r(f)?;
    let mut out = Vec::new();
    for cand in search.run() {
        if ft.after(&cand)? != r1 {
            continue;
        }
        let fp = f.fingerprint();
        let viol = awfs_morphism_validate(
            triv,
            cof,
            |g| if g.fingerprint() == fp { Ok(cand.clone()) } else { xi_direct(cof, triv, g) },
            std::slice::from_ref(f),
            &[],
        );
        out.push((cand, viol.len()));
    }
    Ok(out)
}

/// The iso-comma factorization admits no natural comparison into the
/// cylinder: at the square (1, !): j ⇒ id₁, no pair of triangle-respecting
/// components commutes with E. Returns the number of commuting pairs.
pub fn iso_comma_xi_obstruction(cof: &CofAwfs) -> Result<usize> {
    let j = super::generators::gen_j();
    let one = basic::terminal();
    let id1 = Functor::identity(&one);
    let bang = Functor::constant(j.tgt(), &one, 0);
    let candidates = |f: &Functor| -> Result<Vec<Functor>> {
        let p = iso_comma(f);
        let q = cof.cyl(f);
        let mut out = Vec::new();
        for cand in FunctorSearch::new(&p.mid, &q.mid).run() {
            if cand.after(&p.left)? == q.left && q.right.after(&cand)? == p.right {
                out.push(cand);
            }
        }
        Ok(out)
    };
    // P(1, !) : P j → P id₁, (a, β) ↦ (a, !β)
    let (pj, pid) = (iso_comma(&j), iso_comma(&id1));
    let obj: Vec<Ob> = pj.mid.objects().map(|_| 0).collect();
    let p_sq = Functor::lift_into(&pid.mid, obj, &Functor::projection(&pj.mid));
    let q_sq = cof.e_sq(&Square::new(&j, &id1, &Functor::identity(&one), &bang))?;
    let mut n = 0;
    for xj in candidates(&j)? {
        for xid in candidates(&id1)? {
            if xid.after(&p_sq)? == q_sq.after(&xj)? {
                n += 1;
            }
        }
    }
    Ok(n)
}
