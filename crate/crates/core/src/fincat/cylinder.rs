use std::sync::Arc;

use super::cat::{FinCat, Ob};
use super::functor::Functor;
use crate::label::Label;

/// A factorization f = right ∘ left through `mid`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub left: Functor,
    pub mid: Arc<FinCat>,
    pub right: Functor,
}

/// Mapping cylinder: Qf on A₀ ⊔ B₀ with homs pulled back from B along
/// a ↦ f(a), b ↦ b. Returns (Cf, Qf, Ftf) as a factorization.
pub fn mapping_cylinder(f: &Functor) -> Factorization {
    let (a, b) = (f.src(), f.tgt());
    let mut objs: Vec<Label> = a.obj_labels().iter().map(|l| Label::tag("A", l.clone())).collect();
    objs.extend(b.obj_labels().iter().map(|l| Label::tag("B", l.clone())));
    let mut proj: Vec<Ob> = f.obj_table().to_vec();
    proj.extend(b.objects());
    let q = Arc::new(FinCat::pulled(b.clone(), objs, proj));
    let left = Functor::lift_into(&q, a.objects().collect(), f);
    let right = Functor::projection(&q);
    Factorization { left, mid: q, right }
}

/// Iso-comma: objects (a, β: f(a) ≅ b), homs pulled back from A.
pub fn iso_comma(f: &Functor) -> Factorization {
    let (a, b) = (f.src(), f.tgt());
    let isos = b.isos();
    let mut objs = Vec::new();
    let mut proj = Vec::new();
    let mut beta = Vec::new();
    let mut unit = Vec::new();
    for x in a.objects() {
        for &m in &isos {
            if b.dom(m) == f.ob(x) {
                if m == b.id(f.ob(x)) {
                    unit.push(objs.len() as Ob);
                }
                objs.push(Label::tag("P", Label::pair(a.obj_label(x).clone(), b.mor_label(m))));
                proj.push(x);
                beta.push(m);
            }
        }
    }
    let p = Arc::new(FinCat::pulled(a.clone(), objs, proj));
    let left = Functor::lift_into(&p, unit, &Functor::identity(a));
    let right = conjugated_projection(&p, f, &beta);
    Factorization { left, mid: p, right }
}

/// Free iso-extension: A-side copies of A plus P(a, β) for every iso β out of
/// f(a); homs pulled back from A.
pub fn iso_extension(f: &Functor) -> (Factorization, Vec<Option<u32>>) {
    let (a, b) = (f.src(), f.tgt());
    let isos = b.isos();
    let mut objs: Vec<Label> = a.obj_labels().iter().map(|l| Label::tag("A", l.clone())).collect();
    let mut proj: Vec<Ob> = a.objects().collect();
    let mut beta: Vec<u32> = a.objects().map(|x| b.id(f.ob(x))).collect();
    let mut tag: Vec<Option<u32>> = vec![None; a.n_obj()];
    for x in a.objects() {
        for &m in &isos {
            if b.dom(m) == f.ob(x) {
                objs.push(Label::tag("P", Label::pair(a.obj_label(x).clone(), b.mor_label(m))));
                proj.push(x);
                beta.push(m);
                tag.push(Some(m));
            }
        }
    }
    let e = Arc::new(FinCat::pulled(a.clone(), objs, proj));
    let left = Functor::lift_into(&e, a.objects().collect(), &Functor::identity(a));
    let right = conjugated_projection(&e, f, &beta);
    (Factorization { left, mid: e, right }, tag)
}

/// x ↦ cod β_x, m ↦ β_y ∘ f(m) ∘ β_x⁻¹ for a category pulled back over dom f.
fn conjugated_projection(e: &Arc<FinCat>, f: &Functor, beta: &[u32]) -> Functor {
    let b = f.tgt();
    let inv: Vec<u32> = beta.iter().map(|&m| b.inverse(m).expect("iso")).collect();
    let obj = e.objects().map(|x| b.cod(beta[x as usize])).collect();
    Functor::from_fn(e.clone(), b.clone(), obj, |m| {
        let (x, y) = (e.dom(m) as usize, e.cod(m) as usize);
        let fm = f.mor(e.base_mor(m).expect("pulled"));
        b.compose(beta[y], b.compose(fm, inv[x]))
    })
}
