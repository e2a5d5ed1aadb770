use std::sync::Arc;

use crate::fincat::{basic, Functor};

/// c : ∅ → 1
pub fn gen_c() -> Functor {
    Functor::constant(&basic::empty(), &basic::terminal(), 0)
}

/// d : 1 ⊔ 1 → 𝟚
pub fn gen_d() -> Functor {
    let (s, t) = (basic::discrete(2), basic::arrow());
    Functor::from_tables(s, t.clone(), vec![0, 1], vec![t.id(0), t.id(1)])
}

/// e : (a, b: 0 ⇉ 1) → 𝟚 identifying a and b
pub fn gen_e() -> Functor {
    let (s, t) = (basic::parallel_pair(), basic::arrow());
    let u = t.hom(0, 1).start;
    Functor::from_fn(s.clone(), t.clone(), vec![0, 1], |m| if s.is_identity(m) { t.id(s.dom(m)) } else { u })
}

/// j : 1 → 𝐈 picking 0
pub fn gen_j() -> Functor {
    Functor::constant(&basic::terminal(), &basic::interval(), 0)
}

pub fn generator_set_i() -> Vec<(&'static str, Functor)> {
    vec![("c", gen_c()), ("d", gen_d()), ("e", gen_e())]
}

pub fn generator_set_j() -> Vec<(&'static str, Functor)> {
    vec![("j", gen_j())]
}

/// The fold 𝟚 ⊔ 𝟚 → 𝟚, not injective on objects.
pub fn fold() -> Functor {
    let a = basic::arrow();
    let cp = crate::fincat::coproduct(&a, &a);
    let id = Functor::identity(&a);
    cp.copair(&id, &id).expect("fold")
}

pub fn bang(a: &Arc<crate::fincat::FinCat>) -> Functor {
    Functor::constant(a, &basic::terminal(), 0)
}
