use std::sync::Arc;

use super::cat::{FinCat, Mor, Ob};
use super::functor::Functor;

/// Backtracking enumeration of functors with optional constraints.
pub struct FunctorSearch {
    pub src: Arc<FinCat>,
    pub tgt: Arc<FinCat>,
    /// Injective on objects and on morphisms.
    pub injective: bool,
    pub fixed_obj: Vec<Option<Ob>>,
    pub fixed_mor: Vec<Option<Mor>>,
    pub limit: usize,
}

struct State<'a> {
    s: &'a FunctorSearch,
    order: Vec<Mor>,
    checks: Vec<Vec<(Mor, Mor, Mor)>>,
    obj: Vec<Ob>,
    mor: Vec<Mor>,
    used_obj: Vec<bool>,
    used_mor: Vec<bool>,
    out: Vec<Functor>,
}

impl FunctorSearch {
    pub fn new(src: &Arc<FinCat>, tgt: &Arc<FinCat>) -> FunctorSearch {
        FunctorSearch {
            src: src.clone(),
            tgt: tgt.clone(),
            injective: false,
            fixed_obj: vec![None; src.n_obj()],
            fixed_mor: vec![None; src.n_mor()],
            limit: usize::MAX,
        }
    }

    pub fn injective(mut self) -> Self {
        self.injective = true;
        self
    }

    pub fn limit(mut self, n: usize) -> Self {
        self.limit = n;
        self
    }

    pub fn fix_obj(mut self, x: Ob, y: Ob) -> Self {
        self.fixed_obj[x as usize] = Some(y);
        self
    }

    pub fn fix_mor(mut self, m: Mor, n: Mor) -> Self {
        self.fixed_mor[m as usize] = Some(n);
        self
    }

    pub fn run(&self) -> Vec<Functor> {
        let src = &self.src;
        let order: Vec<Mor> = src.morphisms().filter(|&m| !src.is_identity(m)).collect();
        let mut pos = vec![usize::MAX; src.n_mor()];
        for (k, &m) in order.iter().enumerate() {
            pos[m as usize] = k;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for &f in &order {
            for g in src.out(src.cod(f)) {
                if src.is_identity(g) {
                    continue;
                }
                let h = src.compose(g, f);
                let mut k = pos[f as usize].max(pos[g as usize]);
                if !src.is_identity(h) {
                    k = k.max(pos[h as usize]);
                }
                checks[k].push((g, f, h));
            }
        }
        let mut st = State {
            s: self,
            order,
            checks,
            obj: vec![0; src.n_obj()],
            mor: vec![0; src.n_mor()],
            used_obj: vec![false; self.tgt.n_obj()],
            used_mor: vec![false; self.tgt.n_mor()],
            out: Vec::new(),
        };
        if self.limit > 0 {
            st.objects(0);
        }
        st.out
    }
}

impl State<'_> {
    fn objects(&mut self, x: usize) {
        let (src, tgt) = (&self.s.src, &self.s.tgt);
        if x == src.n_obj() {
            for x in src.objects() {
                let y = self.obj[x as usize];
                let i = tgt.id(y);
                if self.s.fixed_mor[src.id(x) as usize].is_some_and(|n| n != i) {
                    return;
                }
                self.mor[src.id(x) as usize] = i;
                if self.s.injective {
                    self.used_mor[i as usize] = true;
                }
            }
            self.morphisms(0);
            if self.s.injective {
                for x in src.objects() {
                    self.used_mor[tgt.id(self.obj[x as usize]) as usize] = false;
                }
            }
            return;
        }
        let cands: Vec<Ob> = match self.s.fixed_obj[x] {
            Some(y) => vec![y],
            None => tgt.objects().collect(),
        };
        for y in cands {
            if self.s.injective && self.used_obj[y as usize] {
                continue;
            }
            self.obj[x] = y;
            self.used_obj[y as usize] = true;
            self.objects(x + 1);
            self.used_obj[y as usize] = false;
            if self.out.len() >= self.s.limit {
                return;
            }
        }
    }

    fn morphisms(&mut self, k: usize) {
        let (src, tgt) = (self.s.src.clone(), self.s.tgt.clone());
        if k == self.order.len() {
            self.out.push(Functor::from_tables(src, tgt, self.obj.clone(), self.mor.clone()));
            return;
        }
        let m = self.order[k];
        let (x, y) = (self.obj[src.dom(m) as usize], self.obj[src.cod(m) as usize]);
        let cands: Vec<Mor> = match self.s.fixed_mor[m as usize] {
            Some(n) if tgt.dom(n) == x && tgt.cod(n) == y => vec![n],
            Some(_) => vec![],
            None => tgt.hom(x, y).collect(),
        };
        for n in cands {
            if self.s.injective && self.used_mor[n as usize] {
                continue;
            }
            self.mor[m as usize] = n;
            let ok = self.checks[k]
                .iter()
                .all(|&(g, f, h)| tgt.compose(self.mor[g as usize], self.mor[f as usize]) == self.mor[h as usize]);
            if !ok {
                continue;
            }
            self.used_mor[n as usize] = true;
            self.morphisms(k + 1);
            self.used_mor[n as usize] = false;
            if self.out.len() >= self.s.limit {
                return;
            }
        }
    }
}

pub fn all_functors(src: &Arc<FinCat>, tgt: &Arc<FinCat>) -> Vec<Functor> {
    FunctorSearch::new(src, tgt).run()
}

pub fn isomorphisms(a: &Arc<FinCat>, b: &Arc<FinCat>, limit: usize) -> Vec<Functor> {
    if a.n_obj() != b.n_obj() || a.n_mor() != b.n_mor() {
        return Vec::new();
    }
    FunctorSearch::new(a, b).injective().limit(limit).run()
}

pub fn isomorphic(a: &Arc<FinCat>, b: &Arc<FinCat>) -> Option<Functor> {
    isomorphisms(a, b, 1).into_iter().next()
}
