use std::sync::Arc;

use super::square::{mate_of, Filling, MateSquare};
use crate::error::Result;
use crate::fincat::{all_functors, nat_transformations, AdjunctionData, FinCat, Functor, NatTrans};
use crate::report::{Report, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monad {
    pub h: Functor,
    pub unit: NatTrans,
    pub mult: NatTrans,
}

fn monad_laws(h: &Functor, unit: &NatTrans, mult: &NatTrans) -> bool {
    let c = h.tgt();
    c.objects().all(|x| {
        let (m, hx) = (mult.at(x), h.ob(x));
        c.compose(m, h.mor(unit.at(x))) == c.id(hx)
            && c.compose(m, unit.at(hx)) == c.id(hx)
            && c.compose(m, h.mor(mult.at(x))) == c.compose(m, mult.at(hx))
    })
}

/// Every monad on a small category, by brute force.
pub fn monads(c: &Arc<FinCat>) -> Vec<Monad> {
    let id = Functor::identity(c);
    let mut out = Vec::new();
    for h in all_functors(c, c) {
        let hh = h.after(&h).unwrap_or_else(|_| h.clone());
        let mults = nat_transformations(&hh, &h);
        for unit in nat_transformations(&id, &h) {
            for mult in &mults {
                if monad_laws(&h, &unit, mult) {
                    out.push(Monad { h: h.clone(), unit: unit.clone(), mult: mult.clone() });
                }
            }
        }
    }
    out
}

/// (S, ρ : HS ⇒ SK) satisfies ρ·η_S = Sη and ρ·μ_S = Sμ·ρ_K·Hρ.
pub fn lax_report(s: &Functor, rho: &NatTrans, h: &Monad, k: &Monad) -> Report {
    let a = s.tgt();
    let mut out = Vec::new();
    for y in s.src().objects() {
        let sy = s.ob(y);
        let (l, r) = (a.compose(rho.at(y), h.unit.at(sy)), s.mor(k.unit.at(y)));
        if l != r {
            out.push(Violation::new("lax triangle", vec![s.src().obj_label(y).to_string()], a.mor_label(l).to_string(), a.mor_label(r).to_string()));
        }
        let l = a.compose(rho.at(y), h.mult.at(sy));
        let r = a.compose(s.mor(k.mult.at(y)), a.compose(rho.at(k.h.ob(y)), h.h.mor(rho.at(y))));
        if l != r {
            out.push(Violation::new("lax pentagon", vec![s.src().obj_label(y).to_string()], a.mor_label(l).to_string(), a.mor_label(r).to_string()));
        }
    }
    out
}

/// (T, λ : TH ⇒ KT) satisfies λ·Tη = η_T and λ·Tμ = μ_T·Kλ·λ_H.
pub fn colax_report(t: &Functor, lam: &NatTrans, h: &Monad, k: &Monad) -> Report {
    let c = t.tgt();
    let mut out = Vec::new();
    for x in t.src().objects() {
        let tx = t.ob(x);
        let (l, r) = (c.compose(lam.at(x), t.mor(h.unit.at(x))), k.unit.at(tx));
        if l != r {
            out.push(Violation::new("colax triangle", vec![t.src().obj_label(x).to_string()], c.mor_label(l).to_string(), c.mor_label(r).to_string()));
        }
        let l = c.compose(lam.at(x), t.mor(h.mult.at(x)));
        let r = c.compose(k.mult.at(tx), c.compose(k.h.mor(lam.at(x)), lam.at(h.h.ob(x))));
        if l != r {
            out.push(Violation::new("colax pentagon", vec![t.src().obj_label(x).to_string()], c.mor_label(l).to_string(), c.mor_label(r).to_string()));
        }
    }
    out
}

/// A lax monad morphism (S, ρ) along T ⊣ S, with H on dom T and K on cod T.
#[derive(Clone, Debug)]
pub struct LaxInstance {
    pub adj: AdjunctionData,
    pub h: Monad,
    pub k: Monad,
    pub rho: NatTrans,
}

impl LaxInstance {
    pub fn square(&self) -> MateSquare {
        MateSquare { h: self.h.h.clone(), k: self.k.h.clone(), left: self.adj.clone(), right: self.adj.clone(), cell: Filling::Right(self.rho.clone()) }
    }
}

/// All lax monad morphisms between the given monads along `adj`.
pub fn lax_morphisms(adj: &AdjunctionData, h: &Monad, k: &Monad) -> Result<Vec<NatTrans>> {
    let s = &adj.right;
    let (hs, sk) = (h.h.after(s)?, s.after(&k.h)?);
    Ok(nat_transformations(&hs, &sk).into_iter().filter(|rho| lax_report(s, rho, h, k).is_empty()).collect())
}

/// The mate of a lax monad morphism must be colax.
pub fn lax_to_colax_check(inst: &LaxInstance) -> Report {
    let sq = inst.square();
    let mut out = lax_report(&inst.adj.right, &inst.rho, &inst.h, &inst.k);
    if !out.is_empty() {
        return out;
    }
    match mate_of(&sq) {
        Ok(m) => {
            out.extend(colax_report(&inst.adj.left, m.cell.nat(), &inst.h, &inst.k).into_iter().map(|mut v| {
                v.ids.push(sq.describe());
                v
            }));
        }
        Err(e) => out.push(Violation::new("mate exists", vec![sq.describe()], e.to_string(), "")),
    }
    out
}
