use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::cat::{same_cat, FinCat, Mor, Ob};
use crate::error::{Error, Result};
use crate::report::Violation;

/// A functor stored as explicit object and morphism tables.
#[derive(Clone)]
pub struct Functor {
    src: Arc<FinCat>,
    tgt: Arc<FinCat>,
    obj: Arc<[Ob]>,
    mor: Arc<[Mor]>,
    fp: u64,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functor({:016x}: {} obj -> {} obj)", self.fp, self.src.n_obj(), self.tgt.n_obj())
    }
}

impl Functor {
    /// No validation; see `validate_functor`.
    pub fn from_tables(src: Arc<FinCat>, tgt: Arc<FinCat>, obj: Vec<Ob>, mor: Vec<Mor>) -> Functor {
        let mut h = DefaultHasher::new();
        (src.fingerprint(), tgt.fingerprint(), &obj, &mor).hash(&mut h);
        Functor { src, tgt, obj: obj.into(), mor: mor.into(), fp: h.finish() }
    }

    pub fn from_fn(src: Arc<FinCat>, tgt: Arc<FinCat>, obj: Vec<Ob>, mor: impl Fn(Mor) -> Mor) -> Functor {
        let mor: Vec<Mor> = src.morphisms().map(mor).collect();
        Functor::from_tables(src, tgt, obj, mor)
    }

    pub fn identity(c: &Arc<FinCat>) -> Functor {
        Functor::from_tables(c.clone(), c.clone(), c.objects().collect(), c.morphisms().collect())
    }

    /// The functor into a pulled category with the given object map whose
    /// composite with the projection is `base`.
    pub fn lift_into(tgt: &Arc<FinCat>, obj: Vec<Ob>, base: &Functor) -> Functor {
        let src = base.src.clone();
        let mor = src
            .morphisms()
            .map(|m| tgt.over(obj[src.dom(m) as usize], obj[src.cod(m) as usize], base.mor(m)))
            .collect();
        Functor::from_tables(src, tgt.clone(), obj, mor)
    }

    /// Projection of a pulled category to its base.
    pub fn projection(c: &Arc<FinCat>) -> Functor {
        let base = c.base().expect("projection of a non-pulled category").clone();
        let obj = c.objects().map(|x| c.proj(x).unwrap_or(0)).collect();
        let mor = c.morphisms().map(|m| c.base_mor(m).unwrap_or(0)).collect();
        Functor::from_tables(c.clone(), base, obj, mor)
    }

    pub fn constant(src: &Arc<FinCat>, tgt: &Arc<FinCat>, x: Ob) -> Functor {
        let i = tgt.id(x);
        Functor::from_tables(src.clone(), tgt.clone(), vec![x; src.n_obj()], vec![i; src.n_mor()])
    }

    pub fn src(&self) -> &Arc<FinCat> {
        &self.src
    }

    pub fn tgt(&self) -> &Arc<FinCat> {
        &self.tgt
    }

    pub fn ob(&self, x: Ob) -> Ob {
        self.obj[x as usize]
    }

    pub fn mor(&self, m: Mor) -> Mor {
        self.mor[m as usize]
    }

    pub fn obj_table(&self) -> &[Ob] {
        &self.obj
    }

    pub fn mor_table(&self) -> &[Mor] {
        &self.mor
    }

    pub fn fingerprint(&self) -> u64 {
        self.fp
    }

    /// self∘f
    pub fn after(&self, f: &Functor) -> Result<Functor> {
        if !same_cat(&f.tgt, &self.src) {
            return Err(Error::NotComposable("functor codomain/domain mismatch".into()));
        }
        let obj = f.obj.iter().map(|&x| self.ob(x)).collect();
        let mor = f.mor.iter().map(|&m| self.mor(m)).collect();
        Ok(Functor::from_tables(f.src.clone(), self.tgt.clone(), obj, mor))
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.tgt.n_obj()];
        self.obj.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn is_faithful(&self) -> bool {
        self.src.objects().all(|x| {
            self.src.objects().all(|y| {
                let mut imgs: Vec<Mor> = self.src.hom(x, y).map(|m| self.mor(m)).collect();
                let n = imgs.len();
                imgs.sort_unstable();
                imgs.dedup();
                imgs.len() == n
            })
        })
    }

    pub fn is_full(&self) -> bool {
        self.src.objects().all(|x| {
            self.src.objects().all(|y| {
                let imgs: std::collections::HashSet<Mor> = self.src.hom(x, y).map(|m| self.mor(m)).collect();
                imgs.len() == self.tgt.hom(self.ob(x), self.ob(y)).len()
            })
        })
    }

    pub fn is_iso(&self) -> bool {
        self.src.n_obj() == self.tgt.n_obj()
            && self.src.n_mor() == self.tgt.n_mor()
            && self.is_injective_on_objects()
            && self.is_full()
            && self.is_faithful()
    }

    /// Inverse of an isomorphism of categories.
    pub fn inverse(&self) -> Option<Functor> {
        if !self.is_iso() {
            return None;
        }
        let mut obj = vec![0; self.tgt.n_obj()];
        for x in self.src.objects() {
            obj[self.ob(x) as usize] = x;
        }
        let mut mor = vec![0; self.tgt.n_mor()];
        for m in self.src.morphisms() {
            mor[self.mor(m) as usize] = m;
        }
        Some(Functor::from_tables(self.tgt.clone(), self.src.clone(), obj, mor))
    }

    /// Describe the first morphism on which two parallel functors differ.
    pub fn first_difference(&self, other: &Functor) -> Option<(String, String)> {
        if !same_cat(&self.src, &other.src) || !same_cat(&self.tgt, &other.tgt) {
            return Some(("functor with other endpoints".into(), "parallel functor".into()));
        }
        for x in self.src.objects() {
            if self.ob(x) != other.ob(x) {
                let at = self.src.obj_label(x);
                return Some((
                    format!("{at} |-> {}", self.tgt.obj_label(self.ob(x))),
                    format!("{at} |-> {}", self.tgt.obj_label(other.ob(x))),
                ));
            }
        }
        for m in self.src.morphisms() {
            if self.mor(m) != other.mor(m) {
                let at = self.src.mor_label(m);
                return Some((
                    format!("{at} |-> {}", self.tgt.mor_label(self.mor(m))),
                    format!("{at} |-> {}", self.tgt.mor_label(other.mor(m))),
                ));
            }
        }
        None
    }
}

impl PartialEq for Functor {
    fn eq(&self, other: &Functor) -> bool {
        self.fp == other.fp
            && same_cat(&self.src, &other.src)
            && same_cat(&self.tgt, &other.tgt)
            && self.obj == other.obj
            && self.mor == other.mor
    }
}

impl Eq for Functor {}

pub fn validate_functor(f: &Functor) -> Vec<Violation> {
    let (a, b) = (f.src(), f.tgt());
    let mut out = Vec::new();
    for m in a.morphisms() {
        let fm = f.mor(m);
        if b.dom(fm) != f.ob(a.dom(m)) || b.cod(fm) != f.ob(a.cod(m)) {
            out.push(Violation::new("functor endpoints", vec![a.mor_label(m).to_string()], b.mor_label(fm).to_string(), "F dom -> F cod"));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for x in a.objects() {
        if f.mor(a.id(x)) != b.id(f.ob(x)) {
            out.push(Violation::new("functor identity", vec![a.obj_label(x).to_string()], b.mor_label(f.mor(a.id(x))).to_string(), "identity"));
        }
    }
    for m in a.morphisms() {
        for g in a.out(a.cod(m)) {
            let lhs = f.mor(a.compose(g, m));
            let rhs = b.compose(f.mor(g), f.mor(m));
            if lhs != rhs {
                out.push(Violation::new(
                    "functor composition",
                    vec![a.mor_label(g).to_string(), a.mor_label(m).to_string()],
                    b.mor_label(lhs).to_string(),
                    b.mor_label(rhs).to_string(),
                ));
            }
        }
    }
    out
}

/// A natural transformation between parallel functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    pub src: Functor,
    pub tgt: Functor,
    pub comp: Vec<Mor>,
}

impl NatTrans {
    pub fn identity(f: &Functor) -> NatTrans {
        let c = f.tgt();
        NatTrans { src: f.clone(), tgt: f.clone(), comp: f.src().objects().map(|x| c.id(f.ob(x))).collect() }
    }

    pub fn at(&self, x: Ob) -> Mor {
        self.comp[x as usize]
    }

    /// Vertical composite other·self.
    pub fn then(&self, other: &NatTrans) -> Result<NatTrans> {
        if self.tgt != other.src {
            return Err(Error::NotComposable("natural transformations".into()));
        }
        let c = self.src.tgt();
        let comp = self.comp.iter().zip(&other.comp).map(|(&a, &b)| c.compose(b, a)).collect();
        Ok(NatTrans { src: self.src.clone(), tgt: other.tgt.clone(), comp })
    }

    /// Whiskering H·self for a functor H out of the common target.
    pub fn whisker_left(&self, h: &Functor) -> Result<NatTrans> {
        let comp = self.comp.iter().map(|&m| h.mor(m)).collect();
        Ok(NatTrans { src: h.after(&self.src)?, tgt: h.after(&self.tgt)?, comp })
    }

    /// Whiskering self·K for a functor K into the common source.
    pub fn whisker_right(&self, k: &Functor) -> Result<NatTrans> {
        let comp = k.obj_table().iter().map(|&x| self.at(x)).collect();
        Ok(NatTrans { src: self.src.after(k)?, tgt: self.tgt.after(k)?, comp })
    }
}

pub fn validate_nat(t: &NatTrans) -> Vec<Violation> {
    let (a, c) = (t.src.src(), t.src.tgt());
    let mut out = Vec::new();
    for x in a.objects() {
        let m = t.at(x);
        if c.dom(m) != t.src.ob(x) || c.cod(m) != t.tgt.ob(x) {
            out.push(Violation::new("component endpoints", vec![a.obj_label(x).to_string()], c.mor_label(m).to_string(), "F x -> G x"));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for m in a.morphisms() {
        let (x, y) = (a.dom(m), a.cod(m));
        let lhs = c.compose(t.tgt.mor(m), t.at(x));
        let rhs = c.compose(t.at(y), t.src.mor(m));
        if lhs != rhs {
            out.push(Violation::new("naturality", vec![a.mor_label(m).to_string()], c.mor_label(lhs).to_string(), c.mor_label(rhs).to_string()));
        }
    }
    out
}

/// T ⊣ S with unit η: 1 ⇒ ST and counit ε: TS ⇒ 1.
#[derive(Clone, Debug)]
pub struct AdjunctionData {
    pub left: Functor,
    pub right: Functor,
    pub unit: NatTrans,
    pub counit: NatTrans,
}

impl AdjunctionData {
    pub fn identity(c: &Arc<FinCat>) -> AdjunctionData {
        let id = Functor::identity(c);
        AdjunctionData { left: id.clone(), right: id.clone(), unit: NatTrans::identity(&id), counit: NatTrans::identity(&id) }
    }
}

pub fn validate_adjunction(adj: &AdjunctionData) -> Vec<Violation> {
    let mut out = validate_nat(&adj.unit);
    out.extend(validate_nat(&adj.counit));
    if !out.is_empty() {
        return out;
    }
    let (t, s) = (&adj.left, &adj.right);
    let (m, k) = (t.src(), t.tgt());
    for x in m.objects() {
        // εT ∘ Tη = 1
        let lhs = k.compose(adj.counit.at(t.ob(x)), t.mor(adj.unit.at(x)));
        if lhs != k.id(t.ob(x)) {
            out.push(Violation::new("triangle eps_T . T eta", vec![m.obj_label(x).to_string()], k.mor_label(lhs).to_string(), "identity"));
        }
    }
    for y in k.objects() {
        // Sε ∘ ηS = 1
        let lhs = m.compose(s.mor(adj.counit.at(y)), adj.unit.at(s.ob(y)));
        if lhs != m.id(s.ob(y)) {
            out.push(Violation::new("triangle S eps . eta_S", vec![k.obj_label(y).to_string()], m.mor_label(lhs).to_string(), "identity"));
        }
    }
    out
}
