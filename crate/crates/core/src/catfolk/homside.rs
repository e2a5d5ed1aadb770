use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::Mutex;

use super::generators::gen_j;
use super::pp::{lifted_pp, pp, PP};
use super::trivcof::{j_coalg, TrivCofAwfs};
use crate::arrowcat::{problems, CatAmbient, Entry, GeneratorCategory, LiftingFunction, Square};
use crate::awfs::{chosen_lift, Algebra, Coalgebra, HomSide};
use crate::error::Result;
use crate::fincat::{exponential, pullback, Exponential, FinCat, Functor, Pullback};

/// The hom side for Cat: f ↦ the map Â^Y → A^X ×_{B^X} B^Y induced by a
/// cofibration i : X → Y.
#[derive(Default)]
pub struct CatHomSide {
    exps: Mutex<HashMap<(u64, u64), Arc<Exponential>>>,
    hats: Mutex<HashMap<(u64, u64), Arc<HomHat>>>,
}

/// The pieces of hom̂(i, f).
#[derive(Debug)]
pub struct HomHat {
    pub ay: Arc<Exponential>,
    pub ax: Arc<Exponential>,
    pub by: Arc<Exponential>,
    pub bx: Arc<Exponential>,
    pub pb: Pullback,
    pub arrow: Functor,
}

impl CatHomSide {
    pub fn new() -> CatHomSide {
        CatHomSide::default()
    }

    pub fn exp(&self, base: &Arc<FinCat>, target: &Arc<FinCat>) -> Arc<Exponential> {
        let key = (base.fingerprint(), target.fingerprint());
        if let Some(e) = self.exps.lock().get(&key) {
            return e.clone();
        }
        let e = Arc::new(exponential(base, target));
        self.exps.lock().insert(key, e.clone());
        e
    }

    pub fn hat(&self, i: &Functor, f: &Functor) -> Result<Arc<HomHat>> {
        let key = (i.fingerprint(), f.fingerprint());
        if let Some(h) = self.hats.lock().get(&key) {
            return Ok(h.clone());
        }
        let (x, y, a, b) = (i.src(), i.tgt(), f.src(), f.tgt());
        let (ay, ax, by, bx) = (self.exp(y, a), self.exp(x, a), self.exp(y, b), self.exp(x, b));
        let pb = pullback(&ax.post(f, &bx)?, &by.pre(i, &bx)?);
        let arrow = pb.pairing(&ay.pre(i, &ax)?, &ay.post(f, &by)?)?;
        let h = Arc::new(HomHat { ay, ax, by, bx, pb, arrow });
        self.hats.lock().insert(key, h.clone());
        Ok(h)
    }
}

impl HomSide<CatAmbient> for CatHomSide {
    type Param = (String, Functor);

    fn param_name(&self, p: &Self::Param) -> String {
        p.0.clone()
    }

    fn carrier(&self, _: &CatAmbient, p: &Self::Param, f: &Functor) -> Result<Functor> {
        Ok(self.hat(&p.1, f)?.arrow.clone())
    }

    fn right_square(&self, _: &CatAmbient, p: &Self::Param, f: &Functor, g: &Functor) -> Result<Square<Functor>> {
        let gf = g.after(f)?;
        let (hgf, hg) = (self.hat(&p.1, &gf)?, self.hat(&p.1, g)?);
        let u = hgf.ay.post(f, &hg.ay)?;
        let post_x = hgf.ax.post(f, &hg.ax)?;
        let v = hg.pb.pairing(&post_x.after(&hgf.pb.p1)?, &hgf.pb.p2)?;
        Ok(Square::new(&hgf.arrow, &hg.arrow, &u, &v))
    }

    fn pair(&self, _: &CatAmbient, p: &Self::Param, f: &Functor, g: &Functor, d: &Functor, bc: &Functor) -> Result<Functor> {
        let (hgf, hf) = (self.hat(&p.1, &g.after(f)?)?, self.hat(&p.1, f)?);
        hf.pb.pairing(&hgf.pb.p1.after(bc)?, d)
    }
}

/// Lifting problems j ⇒ hom̂(i, g) solved by transposing to (i ⊠ j) ⇒ g and
/// taking the chosen lift against the lifted coalgebra on i ⊠ j.
pub struct Transposer {
    pub triv: Arc<TrivCofAwfs>,
    pub side: Arc<CatHomSide>,
    pub gens: Arc<GeneratorCategory<Functor>>,
    cache: Mutex<HashMap<u64, (Arc<PP>, Coalgebra<Functor>)>>,
}

impl Transposer {
    pub fn new(triv: Arc<TrivCofAwfs>, side: Arc<CatHomSide>) -> Transposer {
        let gens = Arc::new(GeneratorCategory::discrete(&CatAmbient, vec![("j".to_string(), gen_j())]));
        Transposer { triv, side, gens, cache: Mutex::new(HashMap::new()) }
    }

    fn lifted(&self, i: &Functor) -> Result<(Arc<PP>, Coalgebra<Functor>)> {
        if let Some(v) = self.cache.lock().get(&i.fingerprint()) {
            return Ok(v.clone());
        }
        let j = gen_j();
        let p = Arc::new(pp(i, &j)?);
        let c = lifted_pp(&self.triv, i, &j_coalg(&self.triv), true)?;
        let v = (p, c);
        self.cache.lock().insert(i.fingerprint(), v.clone());
        Ok(v)
    }

    /// The solution of one problem (a, bc) : j ⇒ hom̂(i, alg.g).
    pub fn solve(&self, i: &Functor, alg: &Algebra<Functor>, a: &Functor, bc: &Functor) -> Result<Functor> {
        let h = self.side.hat(i, &alg.g)?;
        let (p, c) = self.lifted(i)?;
        let h1 = h.ax.uncurry(&p.ps, &h.pb.p1.after(bc)?);
        let h2 = h.ay.uncurry(&p.qr, a);
        let top = p.po.induced(&h1, &h2)?;
        let bottom = h.by.uncurry(&p.qs, &h.pb.p2.after(bc)?);
        let d = chosen_lift(&*self.triv, &c, alg, &Square::new(&p.arrow, &alg.g, &top, &bottom))?;
        h.ay.curry(&p.qs, &d)
    }

    /// The lifting function of hom̂(i, alg.g) against {j}.
    pub fn liftfun(&self, i: &Functor, alg: &Algebra<Functor>) -> Result<LiftingFunction<Functor>> {
        let amb = CatAmbient;
        let h = self.side.hat(i, &alg.g)?;
        let j = &self.gens.arrows[0];
        let mut entries = Vec::new();
        for (a, bc) in problems(&amb, j, &h.arrow) {
            let diag = self.solve(i, alg, &a, &bc)?;
            entries.push(Entry { gen: 0, a, b: bc, diag });
        }
        Ok(LiftingFunction::from_entries(&amb, &h.arrow, &self.gens, entries))
    }
}
