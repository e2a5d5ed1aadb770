use std::sync::Arc;

use super::enumerate::{isomorphisms, FunctorSearch};
use super::functor::Functor;
use super::cat::FinCat;

/// An isomorphism of arrows f ≅ g: a pair (u, v) with g ∘ u = v ∘ f.
pub fn arrow_iso(f: &Functor, g: &Functor) -> Option<(Functor, Functor)> {
    if f.src().n_obj() != g.src().n_obj() || f.tgt().n_obj() != g.tgt().n_obj() {
        return None;
    }
    for v in isomorphisms(f.tgt(), g.tgt(), usize::MAX) {
        let vf = v.after(f).ok()?;
        for u in isomorphisms(f.src(), g.src(), usize::MAX) {
            if g.after(&u).ok()? == vf {
                return Some((u, v));
            }
        }
    }
    None
}

/// Functors `src → tgt` that agree with `along` on a given part, i.e. all h
/// with h ∘ i = along.
pub fn extensions(i: &Functor, along: &Functor, tgt: &Arc<FinCat>) -> Vec<Functor> {
    let mut s = FunctorSearch::new(i.tgt(), tgt);
    for x in i.src().objects() {
        s = s.fix_obj(i.ob(x), along.ob(x));
    }
    for m in i.src().morphisms() {
        s = s.fix_mor(i.mor(m), along.mor(m));
    }
    s.run()
}
