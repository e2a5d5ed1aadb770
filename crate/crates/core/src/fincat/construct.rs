use std::collections::HashMap;
use std::sync::Arc;

use super::cat::{FinCat, Mor, Ob};
use super::functor::Functor;
use crate::error::{Error, Result};
use crate::label::Label;

pub fn opposite(c: &Arc<FinCat>) -> Arc<FinCat> {
    let mors = c.morphisms().map(|m| (c.mor_label(m), c.cod(m), c.dom(m))).collect();
    let id_of = c.objects().map(|x| c.id(x) as usize).collect();
    Arc::new(FinCat::from_parts(c.obj_labels().to_vec(), mors, id_of, |g, f| c.compose(f as Mor, g as Mor) as usize))
}

/// A × B with its projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub cat: Arc<FinCat>,
    pub p1: Functor,
    pub p2: Functor,
}

impl Product {
    pub fn obj(&self, a: Ob, b: Ob) -> Ob {
        a * self.p2.tgt().n_obj() as Ob + b
    }

    /// ⟨f, g⟩ : X → A × B
    pub fn pairing(&self, f: &Functor, g: &Functor) -> Result<Functor> {
        let x = f.src().clone();
        let obj: Vec<Ob> = x.objects().map(|o| self.obj(f.ob(o), g.ob(o))).collect();
        let c = &self.cat;
        let key: HashMap<(Mor, Mor), Mor> = c.morphisms().map(|m| ((self.p1.mor(m), self.p2.mor(m)), m)).collect();
        let mor = x
            .morphisms()
            .map(|m| key.get(&(f.mor(m), g.mor(m))).copied().ok_or_else(|| Error::Malformed("pairing".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Functor::from_tables(x, c.clone(), obj, mor))
    }

    pub fn mor(&self, f: Mor, g: Mor) -> Mor {
        let (a, b) = (self.p1.tgt(), self.p2.tgt());
        let x = self.obj(a.dom(f), b.dom(g));
        let y = self.obj(a.cod(f), b.cod(g));
        let off = (f - a.hom(a.dom(f), a.cod(f)).start) * b.hom(b.dom(g), b.cod(g)).len() as u32
            + (g - b.hom(b.dom(g), b.cod(g)).start);
        self.cat.hom(x, y).start + off
    }
}

pub fn product(a: &Arc<FinCat>, b: &Arc<FinCat>) -> Product {
    let (na, nb) = (a.n_obj(), b.n_obj());
    let mut objs = Vec::with_capacity(na * nb);
    for x in a.objects() {
        for y in b.objects() {
            objs.push(Label::pair(a.obj_label(x).clone(), b.obj_label(y).clone()));
        }
    }
    let mut mors = Vec::new();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for x in a.objects() {
        for y in b.objects() {
            for x2 in a.objects() {
                for y2 in b.objects() {
                    for f in a.hom(x, x2) {
                        for g in b.hom(y, y2) {
                            index.insert((f, g), mors.len());
                            pairs.push((f, g));
                            mors.push((
                                Label::pair(a.mor_label(f), b.mor_label(g)),
                                x * nb as Ob + y,
                                x2 * nb as Ob + y2,
                            ));
                        }
                    }
                }
            }
        }
    }
    let id_of = (0..na * nb).map(|k| index[&(a.id((k / nb) as Ob), b.id((k % nb) as Ob))]).collect();
    let cat = Arc::new(FinCat::from_parts(objs, mors, id_of, |g, f| {
        let (g1, g2) = pairs[g];
        let (f1, f2) = pairs[f];
        index[&(a.compose(g1, f1), b.compose(g2, f2))]
    }));
    let p1 = Functor::from_tables(
        cat.clone(),
        a.clone(),
        (0..na * nb).map(|k| (k / nb) as Ob).collect(),
        cat.morphisms().map(|m| {
            let (x, y) = (cat.dom(m), cat.cod(m));
            let nbh = b.hom(x % nb as Ob, y % nb as Ob).len() as u32;
            a.hom(x / nb as Ob, y / nb as Ob).start + (m - cat.hom(x, y).start) / nbh
        }).collect(),
    );
    let p2 = Functor::from_tables(
        cat.clone(),
        b.clone(),
        (0..na * nb).map(|k| (k % nb) as Ob).collect(),
        cat.morphisms().map(|m| {
            let (x, y) = (cat.dom(m), cat.cod(m));
            let nbh = b.hom(x % nb as Ob, y % nb as Ob).len() as u32;
            b.hom(x % nb as Ob, y % nb as Ob).start + (m - cat.hom(x, y).start) % nbh
        }).collect(),
    );
    Product { cat, p1, p2 }
}

/// f × g : A × B → A' × B'
pub fn product_map(pa: &Product, pb: &Product, f: &Functor, g: &Functor) -> Result<Functor> {
    let l = f.after(&pa.p1)?;
    let r = g.after(&pa.p2)?;
    pb.pairing(&l, &r)
}

/// A ⊔ B with its injections.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub cat: Arc<FinCat>,
    pub i1: Functor,
    pub i2: Functor,
}

impl Coproduct {
    pub fn copair(&self, f: &Functor, g: &Functor) -> Result<Functor> {
        let c = &self.cat;
        let na = self.i1.src().n_obj();
        let obj = c.objects().map(|x| if (x as usize) < na { f.ob(x) } else { g.ob(x - na as Ob) }).collect();
        let back1: HashMap<Mor, Mor> = self.i1.src().morphisms().map(|m| (self.i1.mor(m), m)).collect();
        let back2: HashMap<Mor, Mor> = self.i2.src().morphisms().map(|m| (self.i2.mor(m), m)).collect();
        let mor = c
            .morphisms()
            .map(|m| match back1.get(&m) {
                Some(&k) => f.mor(k),
                None => g.mor(back2[&m]),
            })
            .collect();
        Ok(Functor::from_tables(c.clone(), f.tgt().clone(), obj, mor))
    }
}

pub fn coproduct(a: &Arc<FinCat>, b: &Arc<FinCat>) -> Coproduct {
    let na = a.n_obj();
    let mut objs: Vec<Label> = a.obj_labels().iter().map(|l| Label::tag("L", l.clone())).collect();
    objs.extend(b.obj_labels().iter().map(|l| Label::tag("R", l.clone())));
    let ma = a.n_mor();
    let mut mors: Vec<(Label, Ob, Ob)> =
        a.morphisms().map(|m| (Label::tag("L", a.mor_label(m)), a.dom(m), a.cod(m))).collect();
    mors.extend(b.morphisms().map(|m| (Label::tag("R", b.mor_label(m)), b.dom(m) + na as Ob, b.cod(m) + na as Ob)));
    let mut id_of: Vec<usize> = a.objects().map(|x| a.id(x) as usize).collect();
    id_of.extend(b.objects().map(|x| b.id(x) as usize + ma));
    let cat = Arc::new(FinCat::from_parts(objs, mors, id_of, |g, f| {
        if g < ma {
            a.compose(g as Mor, f as Mor) as usize
        } else {
            b.compose((g - ma) as Mor, (f - ma) as Mor) as usize + ma
        }
    }));
    // a's morphisms keep their relative order and precede b's
    let i1 = Functor::from_tables(a.clone(), cat.clone(), a.objects().collect(), a.morphisms().map(|m| {
        cat.hom(a.dom(m), a.cod(m)).start + (m - a.hom(a.dom(m), a.cod(m)).start)
    }).collect());
    let i2 = Functor::from_tables(b.clone(), cat.clone(), b.objects().map(|x| x + na as Ob).collect(), b.morphisms().map(|m| {
        let (x, y) = (b.dom(m) + na as Ob, b.cod(m) + na as Ob);
        cat.hom(x, y).start + (m - b.hom(b.dom(m), b.cod(m)).start)
    }).collect());
    Coproduct { cat, i1, i2 }
}

/// Strict pullback A ×_C B of f: A → C and g: B → C.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub cat: Arc<FinCat>,
    pub p1: Functor,
    pub p2: Functor,
}

impl Pullback {
    /// The unique map into the pullback from a commuting pair.
    pub fn pairing(&self, l: &Functor, r: &Functor) -> Result<Functor> {
        let c = &self.cat;
        let okey: HashMap<(Ob, Ob), Ob> = c.objects().map(|x| ((self.p1.ob(x), self.p2.ob(x)), x)).collect();
        let mkey: HashMap<(Mor, Mor), Mor> = c.morphisms().map(|m| ((self.p1.mor(m), self.p2.mor(m)), m)).collect();
        let x = l.src();
        let obj = x
            .objects()
            .map(|o| okey.get(&(l.ob(o), r.ob(o))).copied().ok_or_else(|| Error::Malformed("pullback pairing: cone does not commute".into())))
            .collect::<Result<Vec<_>>>()?;
        let mor = x
            .morphisms()
            .map(|m| mkey.get(&(l.mor(m), r.mor(m))).copied().ok_or_else(|| Error::Malformed("pullback pairing".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Functor::from_tables(x.clone(), c.clone(), obj, mor))
    }
}

pub fn pullback(f: &Functor, g: &Functor) -> Pullback {
    let (a, b) = (f.src(), g.src());
    let mut objs = Vec::new();
    let mut opairs = Vec::new();
    for x in a.objects() {
        for y in b.objects() {
            if f.ob(x) == g.ob(y) {
                opairs.push((x, y));
                objs.push(Label::pair(a.obj_label(x).clone(), b.obj_label(y).clone()));
            }
        }
    }
    let mut mors = Vec::new();
    let mut mpairs = Vec::new();
    let mut index = HashMap::new();
    for (i, &(x, y)) in opairs.iter().enumerate() {
        for (j, &(x2, y2)) in opairs.iter().enumerate() {
            for m in a.hom(x, x2) {
                for n in b.hom(y, y2) {
                    if f.mor(m) == g.mor(n) {
                        index.insert((m, n), mors.len());
                        mpairs.push((m, n));
                        mors.push((Label::pair(a.mor_label(m), b.mor_label(n)), i as Ob, j as Ob));
                    }
                }
            }
        }
    }
    let id_of = opairs.iter().map(|&(x, y)| index[&(a.id(x), b.id(y))]).collect();
    let (cat, new_of) = FinCat::from_parts_indexed(objs, mors, id_of, |g2, f2| {
        let (gm, gn) = mpairs[g2];
        let (fm, fn_) = mpairs[f2];
        index[&(a.compose(gm, fm), b.compose(gn, fn_))]
    });
    let cat = Arc::new(cat);
    let mut comp = vec![(0, 0); cat.n_mor()];
    for (k, &p) in mpairs.iter().enumerate() {
        comp[new_of[k] as usize] = p;
    }
    let p1 = Functor::from_tables(cat.clone(), a.clone(), opairs.iter().map(|p| p.0).collect(), comp.iter().map(|p| p.0).collect());
    let p2 = Functor::from_tables(cat.clone(), b.clone(), opairs.iter().map(|p| p.1).collect(), comp.iter().map(|p| p.1).collect());
    Pullback { cat, p1, p2 }
}

