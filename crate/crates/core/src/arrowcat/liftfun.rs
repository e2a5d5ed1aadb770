use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Value};

use super::ambient::Ambient;
use super::square::{compose_h, id_square, square_check, squares, Square};
use crate::error::{Error, Result};
use crate::report::{Report, Violation};

const HOM_LIMIT: usize = 100_000;

/// A finite category of arrows and squares between them.
#[derive(Clone, Debug)]
pub struct GeneratorCategory<T> {
    pub names: Vec<String>,
    pub arrows: Vec<T>,
    /// (source index, target index, square)
    pub squares: Vec<(usize, usize, Square<T>)>,
}

impl<T: Clone + PartialEq> GeneratorCategory<T> {
    /// Only identity squares.
    pub fn discrete<A: Ambient<Arr = T>>(amb: &A, named: Vec<(String, T)>) -> GeneratorCategory<T> {
        let (names, arrows): (Vec<String>, Vec<T>) = named.into_iter().unzip();
        let squares = arrows.iter().enumerate().map(|(k, f)| (k, k, id_square(amb, f))).collect();
        GeneratorCategory { names, arrows, squares }
    }

    pub fn empty() -> GeneratorCategory<T> {
        GeneratorCategory { names: vec![], arrows: vec![], squares: vec![] }
    }
}

pub fn generators_validate<A: Ambient>(amb: &A, gens: &GeneratorCategory<A::Arr>) -> Report {
    let mut out = Vec::new();
    for (k, f) in gens.arrows.iter().enumerate() {
        if !gens.squares.iter().any(|(s, t, sq)| *s == k && *t == k && *sq == id_square(amb, f)) {
            out.push(Violation::new("generator identity square", vec![gens.names[k].clone()], "missing", "present"));
        }
    }
    for (s, t, sq) in &gens.squares {
        if sq.f != gens.arrows[*s] || sq.g != gens.arrows[*t] {
            out.push(Violation::new("generator square endpoints", vec![gens.names[*s].clone(), gens.names[*t].clone()], "other arrows", "listed arrows"));
            continue;
        }
        if let Err(e) = square_check(amb, sq) {
            out.push(Violation::new("generator square commutes", vec![gens.names[*s].clone(), gens.names[*t].clone()], e.to_string(), "g.u = v.f"));
        }
    }
    for (s1, t1, a) in &gens.squares {
        for (s2, t2, b) in &gens.squares {
            if t1 != s2 {
                continue;
            }
            let Ok(c) = compose_h(amb, a, b) else { continue };
            if !gens.squares.iter().any(|(s, t, sq)| s == s1 && t == t2 && *sq == c) {
                out.push(Violation::new("generator squares closed", vec![gens.names[*s1].clone(), gens.names[*t2].clone()], "composite missing", "composite listed"));
            }
        }
    }
    out
}

/// A lifting problem (a, b): j ⇒ f with its chosen diagonal.
#[derive(Clone, Debug)]
pub struct Entry<T> {
    pub gen: usize,
    pub a: T,
    pub b: T,
    pub diag: T,
}

/// A lifting function against a generator category, stored as a table over all
/// lifting problems in canonical order.
#[derive(Clone, Debug)]
pub struct LiftingFunction<T> {
    pub carrier: T,
    pub gens: Arc<GeneratorCategory<T>>,
    pub entries: Vec<Entry<T>>,
    index: HashMap<(usize, u64, u64), usize>,
}

/// All lifting problems j ⇒ f for generator j, canonical order.
pub fn problems<A: Ambient>(amb: &A, j: &A::Arr, f: &A::Arr) -> Vec<(A::Arr, A::Arr)> {
    let mut out: Vec<(A::Arr, A::Arr)> = squares(amb, j, f, HOM_LIMIT).into_iter().map(|sq| (sq.u, sq.v)).collect();
    out.sort_by_key(|(a, b)| (amb.key(a), amb.key(b)));
    out
}

impl<T: Clone + PartialEq> LiftingFunction<T> {
    /// Build by calling `choose(generator, a, b)` on every problem.
    pub fn build<A: Ambient<Arr = T>>(
        amb: &A,
        carrier: &T,
        gens: &Arc<GeneratorCategory<T>>,
        mut choose: impl FnMut(usize, &T, &T) -> Result<T>,
    ) -> Result<LiftingFunction<T>> {
        let mut entries = Vec::new();
        for (k, j) in gens.arrows.iter().enumerate() {
            for (a, b) in problems(amb, j, carrier) {
                let diag = choose(k, &a, &b)?;
                entries.push(Entry { gen: k, a, b, diag });
            }
        }
        Ok(LiftingFunction::from_entries(amb, carrier, gens, entries))
    }

    pub fn from_entries<A: Ambient<Arr = T>>(
        amb: &A,
        carrier: &T,
        gens: &Arc<GeneratorCategory<T>>,
        entries: Vec<Entry<T>>,
    ) -> LiftingFunction<T> {
        let index = entries.iter().enumerate().map(|(k, e)| ((e.gen, amb.key(&e.a), amb.key(&e.b)), k)).collect();
        LiftingFunction { carrier: carrier.clone(), gens: gens.clone(), entries, index }
    }

    pub fn choose<A: Ambient<Arr = T>>(&self, amb: &A, gen: usize, a: &T, b: &T) -> Option<&T> {
        let k = self.index.get(&(gen, amb.key(a), amb.key(b)))?;
        let e = &self.entries[*k];
        (e.a == *a && e.b == *b).then_some(&e.diag)
    }

    /// Pointwise comparison; returns the first differing problem.
    pub fn first_difference<A: Ambient<Arr = T>>(&self, amb: &A, other: &LiftingFunction<T>) -> Option<Violation> {
        if self.entries.len() != other.entries.len() {
            return Some(Violation::new("lifting function domain", vec![], self.entries.len().to_string(), other.entries.len().to_string()));
        }
        for e in &self.entries {
            let name = self.gens.names[e.gen].clone();
            match other.choose(amb, e.gen, &e.a, &e.b) {
                None => return Some(Violation::new("lifting function domain", vec![name], "problem present", "problem missing")),
                Some(d) => {
                    if let Some((l, r)) = amb.diff(&e.diag, d) {
                        return Some(Violation::new("lifting function equality", vec![name, amb.describe(&e.a), amb.describe(&e.b)], l, r));
                    }
                }
            }
        }
        None
    }

    pub fn to_json<A: Ambient<Arr = T>>(&self, amb: &A) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "generator": self.gens.names[e.gen],
                    "a": amb.describe(&e.a),
                    "b": amb.describe(&e.b),
                    "diagonal": amb.describe(&e.diag),
                })
            })
            .collect();
        json!({ "carrier": amb.describe(&self.carrier), "problems": rows })
    }
}

pub fn liftfun_validate<A: Ambient>(amb: &A, phi: &LiftingFunction<A::Arr>) -> Report {
    let mut out = Vec::new();
    let f = &phi.carrier;
    let gens = &phi.gens;
    for e in &phi.entries {
        let j = &gens.arrows[e.gen];
        let ids = || vec![gens.names[e.gen].clone(), amb.describe(&e.a), amb.describe(&e.b)];
        match amb.compose(&e.diag, j) {
            Ok(dj) => {
                if let Some((l, r)) = amb.diff(&dj, &e.a) {
                    out.push(Violation::new("lift upper triangle", ids(), l, r));
                }
            }
            Err(err) => out.push(Violation::new("lift upper triangle", ids(), err.to_string(), "d.j = a")),
        }
        match amb.compose(f, &e.diag) {
            Ok(fd) => {
                if let Some((l, r)) = amb.diff(&fd, &e.b) {
                    out.push(Violation::new("lift lower triangle", ids(), l, r));
                }
            }
            Err(err) => out.push(Violation::new("lift lower triangle", ids(), err.to_string(), "f.d = b")),
        }
    }
    for (s, t, sq) in &gens.squares {
        for e in phi.entries.iter().filter(|e| e.gen == *t) {
            let (Ok(ap), Ok(bq)) = (amb.compose(&e.a, &sq.u), amb.compose(&e.b, &sq.v)) else { continue };
            let ids = vec![gens.names[*s].clone(), gens.names[*t].clone(), amb.describe(&e.a), amb.describe(&e.b)];
            let Some(lhs) = phi.choose(amb, *s, &ap, &bq) else {
                out.push(Violation::new("lifting function totality", ids, "missing", "restricted problem"));
                continue;
            };
            match amb.compose(&e.diag, &sq.v) {
                Ok(rhs) => {
                    if let Some((l, r)) = amb.diff(lhs, &rhs) {
                        out.push(Violation::new("lift coherence", ids, l, r));
                    }
                }
                Err(err) => out.push(Violation::new("lift coherence", ids, err.to_string(), "phi(j,a,b).q")),
            }
        }
    }
    out
}

/// Vertical composite on g∘f: (φg • φf)(j, a, b) = φf(j, a, φg(j, f∘a, b)).
pub fn liftfun_compose<A: Ambient>(
    amb: &A,
    phi_f: &LiftingFunction<A::Arr>,
    phi_g: &LiftingFunction<A::Arr>,
) -> Result<LiftingFunction<A::Arr>> {
    if !Arc::ptr_eq(&phi_f.gens, &phi_g.gens) {
        return Err(Error::NotComposable("lifting functions over different generator categories".into()));
    }
    let (f, g) = (&phi_f.carrier, &phi_g.carrier);
    let gf = amb.compose(g, f)?;
    LiftingFunction::build(amb, &gf, &phi_f.gens, |k, a, b| {
        let fa = amb.compose(f, a)?;
        let d1 = phi_g.choose(amb, k, &fa, b).ok_or_else(|| Error::Malformed("outer lift undefined".into()))?;
        phi_f.choose(amb, k, a, d1).cloned().ok_or_else(|| Error::Malformed("inner lift undefined".into()))
    })
}
