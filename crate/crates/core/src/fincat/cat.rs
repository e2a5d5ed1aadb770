use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::sync::Arc;

use crate::label::Label;
use crate::report::Violation;

pub type Ob = u32;
pub type Mor = u32;

/// A finite category. Morphisms are numbered so that every hom-set is a
/// contiguous range, ordered by (dom, cod).
#[derive(Debug)]
pub struct FinCat {
    obj_labels: Vec<Label>,
    obj_index: HashMap<Label, Ob>,
    hom_start: Vec<u32>,
    dom: Vec<Ob>,
    cod: Vec<Ob>,
    ids: Vec<Mor>,
    body: Body,
    fp: u64,
}

#[derive(Debug)]
enum Body {
    Table {
        labels: Vec<Label>,
        index: HashMap<Label, Mor>,
        comp_off: Vec<u32>,
        comp: Vec<Mor>,
    },
    /// Hom-sets pulled back along an object map into `base`.
    Pulled { base: Arc<FinCat>, proj: Vec<Ob>, base_of: Vec<Mor> },
}

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

impl FinCat {
    /// Build an explicit category. `mors` lists (label, dom, cod); `id_of[x]` is
    /// the index in `mors` of the identity on `x`; `comp(g, f)` returns the index
    /// of g∘f for composable indices. Nothing is validated here.
    pub fn from_parts(
        objs: Vec<Label>,
        mors: Vec<(Label, Ob, Ob)>,
        id_of: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
    ) -> FinCat {
        FinCat::from_parts_indexed(objs, mors, id_of, comp).0
    }

    /// As `from_parts`, also returning the id assigned to each input morphism.
    pub fn from_parts_indexed(
        objs: Vec<Label>,
        mors: Vec<(Label, Ob, Ob)>,
        id_of: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
    ) -> (FinCat, Vec<Mor>) {
        let n = objs.len();
        let mut order: Vec<usize> = (0..mors.len()).collect();
        order.sort_by_key(|&k| (mors[k].1, mors[k].2, k));
        let mut new_of = vec![0u32; mors.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new as u32;
        }
        let dom: Vec<Ob> = order.iter().map(|&k| mors[k].1).collect();
        let cod: Vec<Ob> = order.iter().map(|&k| mors[k].2).collect();
        let hom_start = hom_starts(n, &dom, &cod);
        let ids: Vec<Mor> = id_of.iter().map(|&k| new_of[k]).collect();
        let mut comp_off = Vec::with_capacity(order.len() + 1);
        let mut table = Vec::new();
        for (f_new, &f_old) in order.iter().enumerate() {
            comp_off.push(table.len() as u32);
            let y = cod[f_new] as usize;
            let out = hom_start[y * n] as usize..hom_start[y * n + n] as usize;
            for g_new in out {
                let g_old = order[g_new];
                table.push(new_of[comp(g_old, f_old)]);
            }
        }
        comp_off.push(table.len() as u32);
        let labels: Vec<Label> = order.iter().map(|&k| mors[k].0.clone()).collect();
        let index = labels.iter().enumerate().map(|(k, l)| (l.clone(), k as Mor)).collect();
        let obj_index = objs.iter().enumerate().map(|(k, l)| (l.clone(), k as Ob)).collect();
        let fp = hash_of(&("table", &objs, &labels, &dom, &cod, &ids, &table));
        let cat = FinCat {
            obj_labels: objs,
            obj_index,
            hom_start,
            dom,
            cod,
            ids,
            body: Body::Table { labels, index, comp_off, comp: table },
            fp,
        };
        (cat, new_of)
    }

    /// The category with the given objects, each lying over `proj[x]` in
    /// `base`, with hom(x, y) = hom_base(proj x, proj y).
    pub fn pulled(base: Arc<FinCat>, objs: Vec<Label>, proj: Vec<Ob>) -> FinCat {
        let n = objs.len();
        let mut hom_start = Vec::with_capacity(n * n + 1);
        let mut dom = Vec::new();
        let mut cod = Vec::new();
        let mut base_of = Vec::new();
        for x in 0..n {
            for y in 0..n {
                hom_start.push(dom.len() as u32);
                for b in base.hom(proj[x], proj[y]) {
                    dom.push(x as Ob);
                    cod.push(y as Ob);
                    base_of.push(b);
                }
            }
        }
        hom_start.push(dom.len() as u32);
        let ids = (0..n)
            .map(|x| {
                let b = base.id(proj[x]);
                hom_start[x * n + x] + (b - base.hom(proj[x], proj[x]).start)
            })
            .collect();
        let obj_index = objs.iter().enumerate().map(|(k, l)| (l.clone(), k as Ob)).collect();
        let fp = hash_of(&("pulled", base.fp, &objs, &proj));
        FinCat { obj_labels: objs, obj_index, hom_start, dom, cod, ids, body: Body::Pulled { base, proj, base_of }, fp }
    }

    pub fn fingerprint(&self) -> u64 {
        self.fp
    }

    pub fn n_obj(&self) -> usize {
        self.obj_labels.len()
    }

    pub fn n_mor(&self) -> usize {
        self.dom.len()
    }

    pub fn objects(&self) -> Range<Ob> {
        0..self.n_obj() as Ob
    }

    pub fn morphisms(&self) -> Range<Mor> {
        0..self.n_mor() as Mor
    }

    pub fn dom(&self, m: Mor) -> Ob {
        self.dom[m as usize]
    }

    pub fn cod(&self, m: Mor) -> Ob {
        self.cod[m as usize]
    }

    pub fn id(&self, x: Ob) -> Mor {
        self.ids[x as usize]
    }

    pub fn is_identity(&self, m: Mor) -> bool {
        self.dom(m) == self.cod(m) && self.id(self.dom(m)) == m
    }

    pub fn hom(&self, x: Ob, y: Ob) -> Range<Mor> {
        let n = self.n_obj();
        let k = x as usize * n + y as usize;
        self.hom_start[k]..self.hom_start[k + 1]
    }

    /// All morphisms with domain `x`.
    pub fn out(&self, x: Ob) -> Range<Mor> {
        let n = self.n_obj();
        self.hom_start[x as usize * n]..self.hom_start[x as usize * n + n]
    }

    /// g∘f. Panics in debug builds if not composable.
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        debug_assert_eq!(self.cod(f), self.dom(g), "compose: not composable");
        match &self.body {
            Body::Table { comp_off, comp, .. } => {
                let start = self.out(self.cod(f)).start;
                comp[(comp_off[f as usize] + (g - start)) as usize]
            }
            Body::Pulled { base, base_of, .. } => {
                let b = base.compose(base_of[g as usize], base_of[f as usize]);
                self.over(self.dom(f), self.cod(g), b)
            }
        }
    }

    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        (self.cod(f) == self.dom(g)).then(|| self.compose(g, f))
    }

    /// Compose a path given first-to-last.
    pub fn compose_path(&self, path: &[Mor]) -> Mor {
        let mut it = path.iter();
        let mut acc = *it.next().expect("empty path");
        for &m in it {
            acc = self.compose(m, acc);
        }
        acc
    }

    pub fn inverse(&self, m: Mor) -> Option<Mor> {
        let (x, y) = (self.dom(m), self.cod(m));
        self.hom(y, x).find(|&k| self.compose(k, m) == self.id(x) && self.compose(m, k) == self.id(y))
    }

    pub fn is_iso(&self, m: Mor) -> bool {
        self.inverse(m).is_some()
    }

    pub fn obj_label(&self, x: Ob) -> &Label {
        &self.obj_labels[x as usize]
    }

    pub fn obj_labels(&self) -> &[Label] {
        &self.obj_labels
    }

    pub fn find_obj(&self, l: &Label) -> Option<Ob> {
        self.obj_index.get(l).copied()
    }

    pub fn mor_label(&self, m: Mor) -> Label {
        match &self.body {
            Body::Table { labels, .. } => labels[m as usize].clone(),
            Body::Pulled { base, base_of, .. } => Label::tup([
                self.obj_label(self.dom(m)).clone(),
                self.obj_label(self.cod(m)).clone(),
                base.mor_label(base_of[m as usize]),
            ]),
        }
    }

    pub fn find_mor(&self, l: &Label) -> Option<Mor> {
        match &self.body {
            Body::Table { index, .. } => index.get(l).copied(),
            Body::Pulled { base, .. } => match l {
                Label::Tup(items) if items.len() == 3 => {
                    let x = self.find_obj(&items[0])?;
                    let y = self.find_obj(&items[1])?;
                    let b = base.find_mor(&items[2])?;
                    let (px, py) = (self.proj(x)?, self.proj(y)?);
                    base.hom(px, py).contains(&b).then(|| self.over(x, y, b))
                }
                _ => None,
            },
        }
    }

    /// For a pulled category: the base category.
    pub fn base(&self) -> Option<&Arc<FinCat>> {
        match &self.body {
            Body::Pulled { base, .. } => Some(base),
            Body::Table { .. } => None,
        }
    }

    pub fn proj(&self, x: Ob) -> Option<Ob> {
        match &self.body {
            Body::Pulled { proj, .. } => Some(proj[x as usize]),
            Body::Table { .. } => None,
        }
    }

    pub fn base_mor(&self, m: Mor) -> Option<Mor> {
        match &self.body {
            Body::Pulled { base_of, .. } => Some(base_of[m as usize]),
            Body::Table { .. } => None,
        }
    }

    /// For a pulled category: the morphism x → y lying over the base morphism `b`.
    pub fn over(&self, x: Ob, y: Ob, b: Mor) -> Mor {
        match &self.body {
            Body::Pulled { base, proj, .. } => {
                let r = base.hom(proj[x as usize], proj[y as usize]);
                debug_assert!(r.contains(&b), "over: base morphism has wrong endpoints");
                self.hom(x, y).start + (b - r.start)
            }
            Body::Table { .. } => panic!("over() on a table category"),
        }
    }

    pub fn is_pulled(&self) -> bool {
        matches!(self.body, Body::Pulled { .. })
    }

    pub fn isos(&self) -> Vec<Mor> {
        self.morphisms().filter(|&m| self.is_iso(m)).collect()
    }
}

fn hom_starts(n: usize, dom: &[Ob], cod: &[Ob]) -> Vec<u32> {
    let mut counts = vec![0u32; n * n];
    for (d, c) in dom.iter().zip(cod) {
        counts[*d as usize * n + *c as usize] += 1;
    }
    let mut starts = Vec::with_capacity(n * n + 1);
    let mut acc = 0;
    for c in counts {
        starts.push(acc);
        acc += c;
    }
    starts.push(acc);
    starts
}

/// Two categories are the same object of Cat when their canonical content agrees.
pub fn same_cat(a: &FinCat, b: &FinCat) -> bool {
    std::ptr::eq(a, b) || (a.fp == b.fp && a.n_obj() == b.n_obj() && a.n_mor() == b.n_mor())
}

/// Exhaustive check of the category axioms.
pub fn validate_category(c: &FinCat) -> Vec<Violation> {
    let mut out = Vec::new();
    let ml = |m: Mor| c.mor_label(m).to_string();
    for x in c.objects() {
        let i = c.id(x);
        if c.dom(i) != x || c.cod(i) != x {
            out.push(Violation::new("identity endpoints", vec![c.obj_label(x).to_string()], ml(i), "dom = cod = x"));
        }
    }
    for f in c.morphisms() {
        let (x, y) = (c.dom(f), c.cod(f));
        if c.compose(c.id(y), f) != f {
            out.push(Violation::new("left unit", vec![ml(f)], ml(c.compose(c.id(y), f)), ml(f)));
        }
        if c.compose(f, c.id(x)) != f {
            out.push(Violation::new("right unit", vec![ml(f)], ml(c.compose(f, c.id(x))), ml(f)));
        }
        for g in c.out(y) {
            let gf = c.compose(g, f);
            if c.dom(gf) != x || c.cod(gf) != c.cod(g) {
                out.push(Violation::new("composite endpoints", vec![ml(g), ml(f)], ml(gf), "x -> cod g"));
            }
        }
    }
    for f in c.morphisms() {
        for g in c.out(c.cod(f)) {
            let gf = c.compose(g, f);
            if c.cod(gf) != c.cod(g) || c.dom(gf) != c.dom(f) {
                continue;
            }
            for h in c.out(c.cod(g)) {
                let hg = c.compose(h, g);
                if c.dom(hg) != c.dom(g) {
                    continue;
                }
                let lhs = c.compose(h, gf);
                let rhs = c.compose(hg, f);
                if lhs != rhs {
                    out.push(Violation::new("associativity", vec![ml(h), ml(g), ml(f)], ml(lhs), ml(rhs)));
                }
            }
        }
    }
    out
}
