use std::collections::HashMap;
use std::sync::Arc;

use super::cat::{FinCat, Mor, Ob};
use super::construct::{product, Product};
use super::enumerate::all_functors;
use super::functor::{Functor, NatTrans};
use crate::error::{Error, Result};
use crate::label::Label;

/// The functor category X^A: objects are functors A → X, morphisms natural
/// transformations.
#[derive(Clone, Debug)]
pub struct Exponential {
    pub cat: Arc<FinCat>,
    pub base: Arc<FinCat>,
    pub target: Arc<FinCat>,
    pub functors: Vec<Functor>,
    /// components of each morphism
    pub comps: Vec<Vec<Mor>>,
    obj_key: HashMap<Vec<Mor>, Ob>,
    mor_key: HashMap<(Ob, Ob, Vec<Mor>), Mor>,
}

fn nat_components(a: &FinCat, x: &FinCat, f: &Functor, g: &Functor) -> Vec<Vec<Mor>> {
    fn go(a: &FinCat, x: &FinCat, f: &Functor, g: &Functor, k: usize, cur: &mut Vec<Mor>, out: &mut Vec<Vec<Mor>>) {
        if k == a.n_obj() {
            out.push(cur.clone());
            return;
        }
        let o = k as Ob;
        for c in x.hom(f.ob(o), g.ob(o)) {
            cur.push(c);
            // naturality for morphisms between already assigned objects
            let ok = a.objects().take(k + 1).all(|p| {
                let pairs = [(p, o), (o, p)];
                pairs.iter().all(|&(s, t)| {
                    a.hom(s, t).all(|m| {
                        x.compose(g.mor(m), cur[s as usize]) == x.compose(cur[t as usize], f.mor(m))
                    })
                })
            });
            if ok {
                go(a, x, f, g, k + 1, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(a, x, f, g, 0, &mut Vec::new(), &mut out);
    out
}

pub fn exponential(a: &Arc<FinCat>, x: &Arc<FinCat>) -> Exponential {
    let functors = all_functors(a, x);
    let objs = (0..functors.len()).map(|k| Label::tag("fun", Label::int(k))).collect();
    let mut mors = Vec::new();
    let mut comps = Vec::new();
    let mut id_of = vec![0; functors.len()];
    let mut index: HashMap<(Ob, Ob, Vec<Mor>), usize> = HashMap::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for c in nat_components(a, x, f, g) {
                if i == j && c.iter().enumerate().all(|(o, &m)| m == x.id(f.ob(o as Ob))) {
                    id_of[i] = mors.len();
                }
                index.insert((i as Ob, j as Ob, c.clone()), mors.len());
                mors.push((Label::tag("nat", Label::pair(Label::int(i), Label::int(mors.len()))), i as Ob, j as Ob));
                comps.push(c);
            }
        }
    }
    let ends: Vec<(Ob, Ob)> = mors.iter().map(|m| (m.1, m.2)).collect();
    let (cat, new_of) = FinCat::from_parts_indexed(objs, mors, id_of, |g, f| {
        let c: Vec<Mor> = comps[f].iter().zip(&comps[g]).map(|(&p, &q)| x.compose(q, p)).collect();
        index[&(ends[f].0, ends[g].1, c)]
    });
    let mut sorted = vec![Vec::new(); comps.len()];
    for (k, c) in comps.into_iter().enumerate() {
        sorted[new_of[k] as usize] = c;
    }
    let obj_key = functors.iter().enumerate().map(|(k, f)| (f.mor_table().to_vec(), k as Ob)).collect();
    let cat = Arc::new(cat);
    let mor_key = cat.morphisms().map(|m| ((cat.dom(m), cat.cod(m), sorted[m as usize].clone()), m)).collect();
    Exponential { cat, base: a.clone(), target: x.clone(), functors, comps: sorted, obj_key, mor_key }
}

impl Exponential {
    pub fn object_of(&self, f: &Functor) -> Option<Ob> {
        self.obj_key.get(f.mor_table()).copied()
    }

    pub fn morphism_of(&self, t: &NatTrans) -> Option<Mor> {
        let (i, j) = (self.object_of(&t.src)?, self.object_of(&t.tgt)?);
        self.mor_key.get(&(i, j, t.comp.clone())).copied()
    }

    pub fn functor(&self, o: Ob) -> &Functor {
        &self.functors[o as usize]
    }

    pub fn nat(&self, m: Mor) -> NatTrans {
        NatTrans {
            src: self.functors[self.cat.dom(m) as usize].clone(),
            tgt: self.functors[self.cat.cod(m) as usize].clone(),
            comp: self.comps[m as usize].clone(),
        }
    }

    /// ev : A × X^A → X
    pub fn evaluation(&self, p: &Product) -> Functor {
        let (a, x) = (&self.base, &self.target);
        let c = &p.cat;
        let obj = c.objects().map(|o| self.functors[p.p2.ob(o) as usize].ob(p.p1.ob(o))).collect();
        let mor = c
            .morphisms()
            .map(|m| {
                let (f, t) = (p.p1.mor(m), p.p2.mor(m));
                // t_{cod f} ∘ F(f)
                let src_f = &self.functors[self.cat.dom(t) as usize];
                x.compose(self.comps[t as usize][a.cod(f) as usize], src_f.mor(f))
            })
            .collect();
        Functor::from_tables(c.clone(), x.clone(), obj, mor)
    }

    /// Transpose h : A × K → X (given on the product `p` = A × K) to K → X^A.
    pub fn curry(&self, p: &Product, h: &Functor) -> Result<Functor> {
        let (a, k) = (p.p1.tgt(), p.p2.tgt());
        let mut obj = Vec::with_capacity(k.n_obj());
        for o in k.objects() {
            let f = Functor::from_fn(a.clone(), self.target.clone(), a.objects().map(|x| h.ob(p.obj(x, o))).collect(), |m| {
                h.mor(p.mor(m, k.id(o)))
            });
            obj.push(self.object_of(&f).ok_or_else(|| Error::Malformed("curry: not a functor".into()))?);
        }
        let mut mor = Vec::with_capacity(k.n_mor());
        for m in k.morphisms() {
            let comp: Vec<Mor> = a.objects().map(|x| h.mor(p.mor(a.id(x), m))).collect();
            let key = (obj[k.dom(m) as usize], obj[k.cod(m) as usize], comp);
            mor.push(*self.mor_key.get(&key).ok_or_else(|| Error::Malformed("curry: not natural".into()))?);
        }
        Ok(Functor::from_tables(k.clone(), self.cat.clone(), obj, mor))
    }

    /// Transpose g : K → X^A back to A × K → X.
    pub fn uncurry(&self, p: &Product, g: &Functor) -> Functor {
        let x = &self.target;
        let c = &p.cat;
        let obj = c.objects().map(|o| self.functors[g.ob(p.p2.ob(o)) as usize].ob(p.p1.ob(o))).collect();
        let mor = c
            .morphisms()
            .map(|m| {
                let (f, t) = (p.p1.mor(m), p.p2.mor(m));
                let gt = g.mor(t);
                let src_f = &self.functors[self.cat.dom(gt) as usize];
                x.compose(self.comps[gt as usize][self.base.cod(f) as usize], src_f.mor(f))
            })
            .collect();
        Functor::from_tables(c.clone(), x.clone(), obj, mor)
    }

    /// Postcomposition h^A : X^A → Y^A for h : X → Y.
    pub fn post(&self, h: &Functor, other: &Exponential) -> Result<Functor> {
        let obj = self
            .functors
            .iter()
            .map(|f| other.object_of(&h.after(f)?).ok_or_else(|| Error::Malformed("post".into())))
            .collect::<Result<Vec<_>>>()?;
        let mor = self
            .cat
            .morphisms()
            .map(|m| {
                let comp = self.comps[m as usize].iter().map(|&c| h.mor(c)).collect();
                let key = (obj[self.cat.dom(m) as usize], obj[self.cat.cod(m) as usize], comp);
                other.mor_key.get(&key).copied().ok_or_else(|| Error::Malformed("post".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Functor::from_tables(self.cat.clone(), other.cat.clone(), obj, mor))
    }

    /// Precomposition X^i : X^B → X^A for i : A → B (self is X^B).
    pub fn pre(&self, i: &Functor, other: &Exponential) -> Result<Functor> {
        let obj = self
            .functors
            .iter()
            .map(|f| other.object_of(&f.after(i)?).ok_or_else(|| Error::Malformed("pre".into())))
            .collect::<Result<Vec<_>>>()?;
        let mor = self
            .cat
            .morphisms()
            .map(|m| {
                let comp = i.obj_table().iter().map(|&b| self.comps[m as usize][b as usize]).collect();
                let key = (obj[self.cat.dom(m) as usize], obj[self.cat.cod(m) as usize], comp);
                other.mor_key.get(&key).copied().ok_or_else(|| Error::Malformed("pre".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Functor::from_tables(self.cat.clone(), other.cat.clone(), obj, mor))
    }
}

/// Verify 𝓝(K × M, N) ≅ 𝓜(M, N^K) by enumeration: currying is a bijection
/// and uncurry∘curry is the identity. Returns the number of functors matched.
pub fn adjunction_check(k: &Arc<FinCat>, m: &Arc<FinCat>, n: &Arc<FinCat>) -> Result<usize> {
    let p = product(k, m);
    let exp = exponential(k, n);
    let left = all_functors(&p.cat, n);
    let right = all_functors(m, &exp.cat);
    if left.len() != right.len() {
        return Err(Error::Malformed(format!("currying: {} vs {} functors", left.len(), right.len())));
    }
    let mut seen = std::collections::HashSet::new();
    for h in &left {
        let c = exp.curry(&p, h)?;
        if exp.uncurry(&p, &c) != *h {
            return Err(Error::Malformed("uncurry(curry h) != h".into()));
        }
        seen.insert(c.fingerprint());
    }
    if seen.len() != right.len() {
        return Err(Error::Malformed("currying is not injective".into()));
    }
    // naturality in M: curry(h ∘ (K × g)) = curry(h) ∘ g for endofunctors g of M
    for g in all_functors(m, m).into_iter().take(4) {
        let kg = p.pairing(&p.p1, &g.after(&p.p2)?)?;
        for h in left.iter().take(8) {
            let lhs = exp.curry(&p, &h.after(&kg)?)?;
            let rhs = exp.curry(&p, h)?.after(&g)?;
            if lhs != rhs {
                return Err(Error::Malformed("currying is not natural in M".into()));
            }
        }
    }
    Ok(left.len())
}

/// All natural transformations f ⇒ g.
pub fn nat_transformations(f: &Functor, g: &Functor) -> Vec<NatTrans> {
    nat_components(f.src(), f.tgt(), f, g).into_iter().map(|comp| NatTrans { src: f.clone(), tgt: g.clone(), comp }).collect()
}
