use std::sync::Arc;

use super::laws::{Awfs, Checker};
use crate::arrowcat::{Ambient, GeneratorCategory, LiftingFunction, Square};
use crate::error::{Error, Result};
use crate::report::Report;

type Arr<W> = <<W as Awfs>::Amb as Ambient>::Arr;

/// An L-coalgebra (f, s) with s : cod f → E f.
#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra<T> {
    pub f: T,
    pub s: T,
}

/// An R-algebra (g, t) with t : E g → dom g.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<T> {
    pub g: T,
    pub t: T,
}

pub fn free_coalg<W: Awfs>(aw: &W, f: &Arr<W>) -> Result<Coalgebra<Arr<W>>> {
    Ok(Coalgebra { f: aw.l(f)?, s: aw.delta(f)? })
}

pub fn free_alg<W: Awfs>(aw: &W, f: &Arr<W>) -> Result<Algebra<Arr<W>>> {
    Ok(Algebra { g: aw.r(f)?, t: aw.mu(f)? })
}

pub fn coalg_validate<W: Awfs>(aw: &W, c: &Coalgebra<Arr<W>>) -> Report {
    let amb = aw.ambient();
    let mut ch = Checker::new(amb);
    let ids = [amb.describe(&c.f), amb.describe(&c.s)];
    let (f, s) = (&c.f, &c.s);
    ch.eq("coalgebra s.f = Lf", &ids, amb.compose(s, f), aw.l(f));
    ch.eq("coalgebra Rf.s = 1", &ids, aw.r(f).and_then(|r| amb.compose(&r, s)), Ok(amb.id(&amb.cod(f))));
    let lhs = aw.delta(f).and_then(|d| amb.compose(&d, s));
    let rhs = (|| {
        let sq = Square::new(f, &aw.l(f)?, &amb.id(&amb.dom(f)), s);
        amb.compose(&aw.e_sq(&sq)?, s)
    })();
    ch.eq("coalgebra delta.s = E(1,s).s", &ids, lhs, rhs);
    ch.out
}

pub fn alg_validate<W: Awfs>(aw: &W, a: &Algebra<Arr<W>>) -> Report {
    let amb = aw.ambient();
    let mut ch = Checker::new(amb);
    let ids = [amb.describe(&a.g), amb.describe(&a.t)];
    let (g, t) = (&a.g, &a.t);
    ch.eq("algebra t.Lg = 1", &ids, aw.l(g).and_then(|l| amb.compose(t, &l)), Ok(amb.id(&amb.dom(g))));
    ch.eq("algebra g.t = Rg", &ids, amb.compose(g, t), aw.r(g));
    let lhs = (|| {
        let sq = Square::new(&aw.r(g)?, g, t, &amb.id(&amb.cod(g)));
        amb.compose(t, &aw.e_sq(&sq)?)
    })();
    let rhs = aw.mu(g).and_then(|m| amb.compose(t, &m));
    ch.eq("algebra t.E(t,1) = t.mu", &ids, lhs, rhs);
    ch.out
}

/// The canonical diagonal t ∘ E(u, v) ∘ s.
pub fn chosen_lift<W: Awfs>(aw: &W, c: &Coalgebra<Arr<W>>, a: &Algebra<Arr<W>>, sq: &Square<Arr<W>>) -> Result<Arr<W>> {
    if sq.f != c.f || sq.g != a.g {
        return Err(Error::Malformed("square is not between the coalgebra and algebra arrows".into()));
    }
    let amb = aw.ambient();
    crate::arrowcat::square_check(amb, sq)?;
    amb.compose_all(&[&a.t, &aw.e_sq(sq)?, &c.s])
}

/// (i, s) then (j, t): structure μ_{ji} ∘ E(E(1, j) ∘ s, 1) ∘ t on j ∘ i.
pub fn coalg_compose<W: Awfs>(aw: &W, c1: &Coalgebra<Arr<W>>, c2: &Coalgebra<Arr<W>>) -> Result<Coalgebra<Arr<W>>> {
    let amb = aw.ambient();
    let (i, s, j, t) = (&c1.f, &c1.s, &c2.f, &c2.s);
    let ji = amb.compose(j, i)?;
    let e1j = aw.e_sq(&Square::new(i, &ji, &amb.id(&amb.dom(i)), j))?;
    let top = amb.compose(&e1j, s)?;
    let outer = aw.e_sq(&Square::new(j, &aw.r(&ji)?, &top, &amb.id(&amb.cod(j))))?;
    let st = amb.compose_all(&[&aw.mu(&ji)?, &outer, t])?;
    Ok(Coalgebra { f: ji, s: st })
}

/// (f, s) then (g, t): structure s ∘ E(1, t) ∘ E(1, E(f, 1)) ∘ δ_{gf} on g ∘ f.
pub fn alg_compose<W: Awfs>(aw: &W, a1: &Algebra<Arr<W>>, a2: &Algebra<Arr<W>>) -> Result<Algebra<Arr<W>>> {
    let amb = aw.ambient();
    let (f, s, g, t) = (&a1.g, &a1.t, &a2.g, &a2.t);
    let gf = amb.compose(g, f)?;
    let id_a = amb.id(&amb.dom(f));
    let ef1 = aw.e_sq(&Square::new(&gf, g, f, &amb.id(&amb.cod(g))))?;
    let lgf = amb.compose(&aw.l(g)?, f)?;
    let e1ef1 = aw.e_sq(&Square::new(&aw.l(&gf)?, &lgf, &id_a, &ef1))?;
    let e1t = aw.e_sq(&Square::new(&lgf, f, &id_a, t))?;
    let ts = amb.compose_all(&[s, &e1t, &e1ef1, &aw.delta(&gf)?])?;
    Ok(Algebra { g: gf, t: ts })
}

/// A generator category whose arrows carry coalgebra structures.
#[derive(Clone, Debug)]
pub struct CoalgGenerators<T> {
    pub gens: Arc<GeneratorCategory<T>>,
    pub structures: Vec<T>,
}

impl<T: Clone + PartialEq> CoalgGenerators<T> {
    pub fn discrete<A: Ambient<Arr = T>>(amb: &A, named: Vec<(String, Coalgebra<T>)>) -> CoalgGenerators<T> {
        let structures = named.iter().map(|(_, c)| c.s.clone()).collect();
        let gens = GeneratorCategory::discrete(amb, named.into_iter().map(|(n, c)| (n, c.f)).collect());
        CoalgGenerators { gens: Arc::new(gens), structures }
    }

    pub fn coalg(&self, k: usize) -> Coalgebra<T> {
        Coalgebra { f: self.gens.arrows[k].clone(), s: self.structures[k].clone() }
    }
}

/// The lifting function of an algebra: chosen lifts against every generator.
pub fn alg_to_liftfun<W: Awfs>(aw: &W, a: &Algebra<Arr<W>>, cg: &CoalgGenerators<Arr<W>>) -> Result<LiftingFunction<Arr<W>>> {
    LiftingFunction::build(aw.ambient(), &a.g, &cg.gens, |k, x, y| {
        let c = cg.coalg(k);
        chosen_lift(aw, &c, a, &Square::new(&c.f, &a.g, x, y))
    })
}

/// Transport along an awfs morphism: coalgebras forward by ξ ∘ s.
pub fn coalg_push<W: Awfs>(aw: &W, xi: impl Fn(&Arr<W>) -> Result<Arr<W>>, c: &Coalgebra<Arr<W>>) -> Result<Coalgebra<Arr<W>>> {
    Ok(Coalgebra { f: c.f.clone(), s: aw.ambient().compose(&xi(&c.f)?, &c.s)? })
}

/// Transport along an awfs morphism: algebras backward by t ∘ ξ.
pub fn alg_pull<W: Awfs>(aw: &W, xi: impl Fn(&Arr<W>) -> Result<Arr<W>>, a: &Algebra<Arr<W>>) -> Result<Algebra<Arr<W>>> {
    Ok(Algebra { g: a.g.clone(), t: aw.ambient().compose(&a.t, &xi(&a.g)?)? })
}

