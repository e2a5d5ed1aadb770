use super::ambient::Ambient;
use crate::error::{Error, Result};

/// A commutative square (u, v): f ⇒ g, i.e. g ∘ u = v ∘ f.
#[derive(Clone, Debug, PartialEq)]
pub struct Square<T> {
    pub f: T,
    pub g: T,
    pub u: T,
    pub v: T,
}

impl<T: Clone> Square<T> {
    pub fn new(f: &T, g: &T, u: &T, v: &T) -> Square<T> {
        Square { f: f.clone(), g: g.clone(), u: u.clone(), v: v.clone() }
    }
}

/// The identity square (1, 1): f ⇒ f.
pub fn id_square<A: Ambient>(amb: &A, f: &A::Arr) -> Square<A::Arr> {
    Square::new(f, f, &amb.id(&amb.dom(f)), &amb.id(&amb.cod(f)))
}

pub fn square_check<A: Ambient>(amb: &A, sq: &Square<A::Arr>) -> Result<()> {
    let ends = amb.obj_eq(&amb.dom(&sq.u), &amb.dom(&sq.f))
        && amb.obj_eq(&amb.cod(&sq.u), &amb.dom(&sq.g))
        && amb.obj_eq(&amb.dom(&sq.v), &amb.cod(&sq.f))
        && amb.obj_eq(&amb.cod(&sq.v), &amb.cod(&sq.g));
    if !ends {
        return Err(Error::Malformed("square sides have mismatched endpoints".into()));
    }
    let gu = amb.compose(&sq.g, &sq.u)?;
    let vf = amb.compose(&sq.v, &sq.f)?;
    match amb.diff(&gu, &vf) {
        None => Ok(()),
        Some((l, r)) => Err(Error::Malformed(format!("square does not commute: g.u = {l}, v.f = {r}"))),
    }
}

/// Paste α: f ⇒ g and β: g ⇒ h side by side into f ⇒ h.
pub fn compose_h<A: Ambient>(amb: &A, alpha: &Square<A::Arr>, beta: &Square<A::Arr>) -> Result<Square<A::Arr>> {
    if alpha.g != beta.f {
        return Err(Error::NotComposable("squares do not share the middle arrow".into()));
    }
    Ok(Square {
        f: alpha.f.clone(),
        g: beta.g.clone(),
        u: amb.compose(&beta.u, &alpha.u)?,
        v: amb.compose(&beta.v, &alpha.v)?,
    })
}

/// Stack α: f ⇒ g on top of β: f′ ⇒ g′ (with β.u = α.v) into f′f ⇒ g′g.
pub fn compose_v<A: Ambient>(amb: &A, alpha: &Square<A::Arr>, beta: &Square<A::Arr>) -> Result<Square<A::Arr>> {
    if alpha.v != beta.u {
        return Err(Error::NotComposable("squares do not share the middle edge".into()));
    }
    Ok(Square {
        f: amb.compose(&beta.f, &alpha.f)?,
        g: amb.compose(&beta.g, &alpha.g)?,
        u: alpha.u.clone(),
        v: beta.v.clone(),
    })
}

/// All squares f ⇒ g, at most `limit` candidate pairs per side.
pub fn squares<A: Ambient>(amb: &A, f: &A::Arr, g: &A::Arr, limit: usize) -> Vec<Square<A::Arr>> {
    let mut out = Vec::new();
    let vs = amb.hom(&amb.cod(f), &amb.cod(g), limit);
    let us = amb.hom(&amb.dom(f), &amb.dom(g), limit);
    for v in &vs {
        let Ok(vf) = amb.compose(v, f) else { continue };
        for u in &us {
            if amb.compose(g, u).is_ok_and(|gu| gu == vf) {
                out.push(Square::new(f, g, u, v));
            }
        }
    }
    out
}
