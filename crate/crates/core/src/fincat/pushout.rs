use std::collections::VecDeque;
use std::sync::Arc;

use super::cat::{FinCat, Mor, Ob};
use super::enumerate::FunctorSearch;
use super::functor::{validate_functor, Functor};
use crate::error::{Error, Result};
use crate::label::Label;

pub const DEFAULT_CAP: usize = 10_000;
pub const DEFAULT_WORD_LEN: usize = 16;

#[derive(Clone, Copy, Debug)]
pub struct Bound {
    pub cap: usize,
    pub word_len: usize,
}

impl Default for Bound {
    fn default() -> Bound {
        Bound { cap: DEFAULT_CAP, word_len: DEFAULT_WORD_LEN }
    }
}

/// A computed pushout B ⊔_A C with legs and a word for every morphism.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub cat: Arc<FinCat>,
    pub inl: Functor,
    pub inr: Functor,
    /// generator word (side, morphism) of each morphism, first letter applied first
    pub words: Vec<Vec<(u8, Mor)>>,
}

const NONE: u32 = u32::MAX;

struct Enum {
    gens: Vec<(u8, Mor, usize, usize)>,
    out_gens: Vec<Vec<usize>>,
    slot: Vec<usize>,
    node_obj: Vec<usize>,
    node_start: Vec<usize>,
    depth: Vec<usize>,
    edges: Vec<Vec<u32>>,
    parent: Vec<u32>,
    live: usize,
    bound: Bound,
}

impl Enum {
    fn find(&mut self, mut n: u32) -> u32 {
        while self.parent[n as usize] != n {
            let p = self.parent[n as usize];
            self.parent[n as usize] = self.parent[p as usize];
            n = p;
        }
        n
    }

    fn new_node(&mut self, obj: usize, start: usize, depth: usize) -> Result<u32> {
        if depth > self.bound.word_len {
            return Err(Error::CapExceeded(format!("pushout word length exceeds {}", self.bound.word_len)));
        }
        if self.live >= self.bound.cap {
            return Err(Error::CapExceeded(format!("pushout exceeds {} morphisms", self.bound.cap)));
        }
        let id = self.node_obj.len() as u32;
        self.node_obj.push(obj);
        self.node_start.push(start);
        self.depth.push(depth);
        self.edges.push(vec![NONE; self.out_gens[obj].len()]);
        self.parent.push(id);
        self.live += 1;
        Ok(id)
    }

    fn step(&mut self, n: u32, g: usize) -> Result<u32> {
        let n = self.find(n);
        let s = self.slot[g];
        let e = self.edges[n as usize][s];
        if e != NONE {
            return Ok(self.find(e));
        }
        let cod = self.gens[g].3;
        let m = self.new_node(cod, self.node_start[n as usize], self.depth[n as usize] + 1)?;
        self.edges[n as usize][s] = m;
        Ok(m)
    }

    fn trace(&mut self, n: u32, word: &[usize]) -> Result<u32> {
        let mut cur = n;
        for &g in word {
            cur = self.step(cur, g)?;
        }
        Ok(self.find(cur))
    }

    fn merge(&mut self, a: u32, b: u32) {
        let mut queue = VecDeque::from([(a, b)]);
        while let Some((a, b)) = queue.pop_front() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop as usize] = keep;
            self.live -= 1;
            let dropped = std::mem::take(&mut self.edges[drop as usize]);
            for (s, e) in dropped.into_iter().enumerate() {
                if e == NONE {
                    continue;
                }
                let k = self.edges[keep as usize][s];
                if k == NONE {
                    self.edges[keep as usize][s] = e;
                } else {
                    queue.push_back((k, e));
                }
            }
        }
    }
}

/// Pushout of B ←f− A −g→ C by enumeration of the quotient of the free
/// category on the amalgamated graph.
pub fn pushout_bounded(f: &Functor, g: &Functor, bound: Bound) -> Result<Pushout> {
    let (b, c) = (f.tgt().clone(), g.tgt().clone());
    let a = f.src().clone();
    let nb = b.n_obj();
    let total = nb + c.n_obj();
    // glue objects
    let mut uf: Vec<usize> = (0..total).collect();
    fn root(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for x in a.objects() {
        let (p, q) = (root(&mut uf, f.ob(x) as usize), root(&mut uf, nb + g.ob(x) as usize));
        if p != q {
            let (lo, hi) = (p.min(q), p.max(q));
            uf[hi] = lo;
        }
    }
    let mut class_of = vec![0usize; total];
    let mut reps = Vec::new();
    for x in 0..total {
        let r = root(&mut uf, x);
        if r == x {
            class_of[x] = reps.len();
            reps.push(x);
        }
    }
    for x in 0..total {
        class_of[x] = class_of[root(&mut uf, x)];
    }
    let n_obj = reps.len();
    let obj_b = |x: Ob| class_of[x as usize];
    let obj_c = |x: Ob| class_of[nb + x as usize];

    // generators: non-identity morphisms of B then C
    let mut gens = Vec::new();
    let mut gen_b = vec![usize::MAX; b.n_mor()];
    let mut gen_c = vec![usize::MAX; c.n_mor()];
    for m in b.morphisms().filter(|&m| !b.is_identity(m)) {
        gen_b[m as usize] = gens.len();
        gens.push((0u8, m, obj_b(b.dom(m)), obj_b(b.cod(m))));
    }
    for m in c.morphisms().filter(|&m| !c.is_identity(m)) {
        gen_c[m as usize] = gens.len();
        gens.push((1u8, m, obj_c(c.dom(m)), obj_c(c.cod(m))));
    }
    let mut out_gens = vec![Vec::new(); n_obj];
    let mut slot = vec![0; gens.len()];
    for (k, gdat) in gens.iter().enumerate() {
        slot[k] = out_gens[gdat.2].len();
        out_gens[gdat.2].push(k);
    }
    let word_b = |m: Mor| if b.is_identity(m) { vec![] } else { vec![gen_b[m as usize]] };
    let word_c = |m: Mor| if c.is_identity(m) { vec![] } else { vec![gen_c[m as usize]] };

    // relations grouped by start object
    let mut rels: Vec<Vec<(Vec<usize>, Vec<usize>)>> = vec![Vec::new(); n_obj];
    for m1 in b.morphisms().filter(|&m| !b.is_identity(m)) {
        for m2 in b.out(b.cod(m1)).filter(|&m| !b.is_identity(m)) {
            let lhs = vec![gen_b[m1 as usize], gen_b[m2 as usize]];
            rels[obj_b(b.dom(m1))].push((lhs, word_b(b.compose(m2, m1))));
        }
    }
    for m1 in c.morphisms().filter(|&m| !c.is_identity(m)) {
        for m2 in c.out(c.cod(m1)).filter(|&m| !c.is_identity(m)) {
            let lhs = vec![gen_c[m1 as usize], gen_c[m2 as usize]];
            rels[obj_c(c.dom(m1))].push((lhs, word_c(c.compose(m2, m1))));
        }
    }
    for m in a.morphisms().filter(|&m| !a.is_identity(m)) {
        let (l, r) = (word_b(f.mor(m)), word_c(g.mor(m)));
        if l != r {
            rels[obj_b(f.ob(a.dom(m)))].push((l, r));
        }
    }

    let mut en = Enum {
        gens,
        out_gens,
        slot,
        node_obj: Vec::new(),
        node_start: Vec::new(),
        depth: Vec::new(),
        edges: Vec::new(),
        parent: Vec::new(),
        live: 0,
        bound,
    };
    let roots: Vec<u32> = (0..n_obj).map(|o| en.new_node(o, o, 0)).collect::<Result<_>>()?;
    let mut i = 0u32;
    while (i as usize) < en.node_obj.len() {
        let n = i;
        i += 1;
        if en.find(n) != n {
            continue;
        }
        let obj = en.node_obj[n as usize];
        for k in 0..en.out_gens[obj].len() {
            let gk = en.out_gens[obj][k];
            en.step(n, gk)?;
        }
        for r in 0..rels[obj].len() {
            let (lhs, rhs) = rels[obj][r].clone();
            let x = en.trace(n, &lhs)?;
            let y = en.trace(n, &rhs)?;
            en.merge(x, y);
        }
    }

    // canonical shortlex words by BFS from the roots
    let mut word_of: Vec<Option<Vec<usize>>> = vec![None; en.node_obj.len()];
    let mut order: Vec<u32> = Vec::new();
    for &r in &roots {
        let r = en.find(r);
        let mut queue = VecDeque::from([r]);
        word_of[r as usize] = Some(vec![]);
        while let Some(n) = queue.pop_front() {
            order.push(n);
            let obj = en.node_obj[n as usize];
            for k in 0..en.out_gens[obj].len() {
                let gk = en.out_gens[obj][k];
                let e = en.edges[n as usize][k];
                let m = en.find(e);
                if word_of[m as usize].is_none() {
                    let mut w = word_of[n as usize].clone().unwrap_or_default();
                    w.push(gk);
                    word_of[m as usize] = Some(w);
                    queue.push_back(m);
                }
            }
        }
    }
    let mut index = vec![usize::MAX; en.node_obj.len()];
    for (k, &n) in order.iter().enumerate() {
        index[n as usize] = k;
    }
    let obj_label = |o: usize| {
        let x = reps[o];
        if x < nb {
            Label::tag("L", b.obj_label(x as Ob).clone())
        } else {
            Label::tag("R", c.obj_label((x - nb) as Ob).clone())
        }
    };
    let objs: Vec<Label> = (0..n_obj).map(obj_label).collect();
    let gen_label = |gk: usize| {
        let (side, m, _, _) = en.gens[gk];
        if side == 0 {
            Label::tag("L", b.mor_label(m))
        } else {
            Label::tag("R", c.mor_label(m))
        }
    };
    let mut mors = Vec::with_capacity(order.len());
    let mut words = Vec::with_capacity(order.len());
    for &n in &order {
        let w = word_of[n as usize].clone().unwrap_or_default();
        let start = en.node_start[n as usize];
        let label = if w.is_empty() { Label::tag("id", objs[start].clone()) } else { Label::Tup(w.iter().map(|&g| gen_label(g)).collect()) };
        mors.push((label, start as Ob, en.node_obj[n as usize] as Ob));
        words.push(w);
    }
    let id_of: Vec<usize> = roots.iter().map(|&r| index[en.find(r) as usize]).collect();
    let mut comp_err = None;
    let (cat, new_of) = {
        let en_ref = &mut en;
        let mut table = std::collections::HashMap::new();
        for (fi, _) in order.iter().enumerate() {
            let nf = order[fi];
            let cod = en_ref.node_obj[nf as usize];
            for (gi, &ng) in order.iter().enumerate() {
                if en_ref.node_start[ng as usize] != cod {
                    continue;
                }
                match en_ref.trace(nf, &words[gi]) {
                    Ok(r) => {
                        table.insert((gi, fi), index[r as usize]);
                    }
                    Err(e) => comp_err = Some(e),
                }
            }
        }
        FinCat::from_parts_indexed(objs, mors, id_of, |g, f| table.get(&(g, f)).copied().unwrap_or(0))
    };
    if let Some(e) = comp_err {
        return Err(e);
    }
    let cat = Arc::new(cat);
    let mut sorted_words = vec![Vec::new(); words.len()];
    for (k, w) in words.into_iter().enumerate() {
        sorted_words[new_of[k] as usize] = w.into_iter().map(|gk| (en.gens[gk].0, en.gens[gk].1)).collect();
    }
    let node_mor = |en: &mut Enum, start: usize, w: &[usize]| -> Result<Mor> {
        let r = en.find(roots[start]);
        let n = en.trace(r, w)?;
        Ok(new_of[index[n as usize]])
    };
    let mut inl_m = Vec::with_capacity(b.n_mor());
    for m in b.morphisms() {
        inl_m.push(node_mor(&mut en, obj_b(b.dom(m)), &word_b(m))?);
    }
    let mut inr_m = Vec::with_capacity(c.n_mor());
    for m in c.morphisms() {
        inr_m.push(node_mor(&mut en, obj_c(c.dom(m)), &word_c(m))?);
    }
    let inl = Functor::from_tables(b.clone(), cat.clone(), b.objects().map(|x| obj_b(x) as Ob).collect(), inl_m);
    let inr = Functor::from_tables(c.clone(), cat.clone(), c.objects().map(|x| obj_c(x) as Ob).collect(), inr_m);
    Ok(Pushout { cat, inl, inr, words: sorted_words })
}

impl Pushout {
    /// The map out of the pushout induced by a cocone (h1, h2).
    pub fn induced(&self, h1: &Functor, h2: &Functor) -> Result<Functor> {
        let x = h1.tgt().clone();
        let p = &self.cat;
        let mut obj = vec![u32::MAX; p.n_obj()];
        for o in self.inl.src().objects() {
            obj[self.inl.ob(o) as usize] = h1.ob(o);
        }
        for o in self.inr.src().objects() {
            let t = self.inr.ob(o) as usize;
            if obj[t] != u32::MAX && obj[t] != h2.ob(o) {
                return Err(Error::Malformed("cocone legs disagree on objects".into()));
            }
            obj[t] = h2.ob(o);
        }
        let mut mor = Vec::with_capacity(p.n_mor());
        for m in p.morphisms() {
            let w = &self.words[m as usize];
            let mut acc = x.id(obj[p.dom(m) as usize]);
            for &(side, k) in w {
                let img = if side == 0 { h1.mor(k) } else { h2.mor(k) };
                if x.cod(acc) != x.dom(img) {
                    return Err(Error::Malformed("cocone does not respect gluing".into()));
                }
                acc = x.compose(img, acc);
            }
            mor.push(acc);
        }
        let h = Functor::from_tables(p.clone(), x, obj, mor);
        if !validate_functor(&h).is_empty() {
            return Err(Error::Malformed("induced map is not a functor; cocone does not commute".into()));
        }
        if h.after(&self.inl)? != *h1 || h.after(&self.inr)? != *h2 {
            return Err(Error::Malformed("induced map does not restrict to the cocone".into()));
        }
        Ok(h)
    }

    /// Check the universal property against every cocone into `x` (up to
    /// `limit` cocones): a unique factorization exists.
    pub fn verify_universal(&self, f: &Functor, g: &Functor, x: &Arc<FinCat>, limit: usize) -> Result<usize> {
        let mut checked = 0;
        for h1 in FunctorSearch::new(self.inl.src(), x).run() {
            let hf = h1.after(f)?;
            let mut s = FunctorSearch::new(self.inr.src(), x);
            for o in f.src().objects() {
                s = s.fix_obj(g.ob(o), hf.ob(o));
            }
            for m in f.src().morphisms() {
                s = s.fix_mor(g.mor(m), hf.mor(m));
            }
            for h2 in s.run() {
                if checked >= limit {
                    return Ok(checked);
                }
                let h = self.induced(&h1, &h2)?;
                let mut u = FunctorSearch::new(&self.cat, x);
                for o in self.cat.objects() {
                    u = u.fix_obj(o, h.ob(o));
                }
                for m in self.inl.src().morphisms() {
                    u = u.fix_mor(self.inl.mor(m), h1.mor(m));
                }
                for m in self.inr.src().morphisms() {
                    u = u.fix_mor(self.inr.mor(m), h2.mor(m));
                }
                let n = u.limit(2).run().len();
                if n != 1 {
                    return Err(Error::NotPushout(format!("{n} factorizations of a cocone")));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }
}
