use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fincat::basic::{chain, discrete, terminal};
use crate::fincat::{all_functors, exponential, product, product_map, Exponential, FinCat, Functor, Product};
use crate::report::{Report, Violation};

/// K = − × d, M = − × c, N = − × e on a finite fragment of Cat, with
/// λ_{k,m} : (k×d) × (m×c) → (k×m) × e given by the projections and a fixed
/// h : d × c → e.
#[derive(Clone, Debug)]
pub struct ParamData {
    pub c: Arc<FinCat>,
    pub d: Arc<FinCat>,
    pub e: Arc<FinCat>,
    pub h: Functor,
}

fn swap(pab: &Product, pba: &Product) -> Result<Functor> {
    pba.pairing(&pab.p2, &pab.p1)
}

impl ParamData {
    pub fn new(c: Arc<FinCat>, d: Arc<FinCat>, e: Arc<FinCat>, h: Functor) -> ParamData {
        ParamData { c, d, e, h }
    }

    pub fn kk(&self, k: &Arc<FinCat>) -> Product {
        product(k, &self.d)
    }

    pub fn mm(&self, m: &Arc<FinCat>) -> Product {
        product(m, &self.c)
    }

    pub fn nn(&self, n: &Arc<FinCat>) -> Product {
        product(n, &self.e)
    }

    /// λ_{k,m} on the product Kk × Mm.
    pub fn lambda(&self, k: &Arc<FinCat>, m: &Arc<FinCat>) -> Result<(Product, Functor)> {
        let (pk, pm) = (self.kk(k), self.mm(m));
        let src = product(&pk.cat, &pm.cat);
        let pkm = product(k, m);
        let tgt = product(&pkm.cat, &self.e);
        let km = pkm.pairing(&pk.p1.after(&src.p1)?, &pm.p1.after(&src.p2)?)?;
        let dc = product(&self.d, &self.c).pairing(&pk.p2.after(&src.p1)?, &pm.p2.after(&src.p2)?)?;
        let lam = tgt.pairing(&km, &self.h.after(&dc)?)?;
        Ok((src, lam))
    }

    /// N applied to a functor x → y.
    fn n_map(&self, g: &Functor) -> Result<Functor> {
        product_map(&self.nn(g.src()), &self.nn(g.tgt()), g, &Functor::identity(&self.e))
    }

    fn m_map(&self, g: &Functor) -> Result<Functor> {
        product_map(&self.mm(g.src()), &self.mm(g.tgt()), g, &Functor::identity(&self.c))
    }

    fn k_map(&self, g: &Functor) -> Result<Functor> {
        product_map(&self.kk(g.src()), &self.kk(g.tgt()), g, &Functor::identity(&self.d))
    }

    /// Upper bound on the objects of (Nn)^{K(nᵐ)}, the largest exponential
    /// the route through ρˡ materializes.
    pub fn cost(&self, m: &Arc<FinCat>, n: &Arc<FinCat>) -> f64 {
        let y = exponential(m, n).cat.n_obj() * self.d.n_obj();
        ((n.n_obj() * self.e.n_obj()) as f64).powi(y as i32)
    }

    /// ρˡ_{k,n} : M(nᵏ) → (Nn)^{Kk}, the mate of λ_{k,−} across k×− ⊣ (−)ᵏ.
    /// S′(g)·ι is computed as the transpose of g.
    pub fn rho_l(&self, k: &Arc<FinCat>, n: &Arc<FinCat>) -> Result<Functor> {
        let x = exponential(k, n);
        let ev = x.evaluation(&product(k, &x.cat));
        let (src, lam) = self.lambda(k, &x.cat)?;
        let g = self.n_map(&ev)?.after(&lam)?;
        let target = exponential(&self.kk(k).cat, &self.nn(n).cat);
        target.curry(&src, &g)
    }

    /// ρʳ_{m,n} : K(nᵐ) → (Nn)^{Mm} by fixing m and taking mates across
    /// −×m ⊣ (−)ᵐ.
    pub fn rho_r_direct(&self, m: &Arc<FinCat>, n: &Arc<FinCat>) -> Result<Functor> {
        let y = exponential(m, n);
        let ev = y.evaluation(&product(m, &y.cat)).after(&swap(&product(&y.cat, m), &product(m, &y.cat))?)?;
        let (src, lam) = self.lambda(&y.cat, m)?;
        let (ky, mm) = (self.kk(&y.cat).cat, self.mm(m).cat);
        let flipped = self.n_map(&ev)?.after(&lam)?.after(&swap(&product(&mm, &ky), &src)?)?;
        exponential(&mm, &self.nn(n).cat).curry(&product(&mm, &ky), &flipped)
    }

    /// ρʳ_{m,n} by fixing n and taking mates of ρˡ_{−,n} across
    /// hom(−, n) ⊣ hom(−, n) : 𝒦 ⇄ 𝓜ᵒᵖ.
    pub fn rho_r_via_l(&self, m: &Arc<FinCat>, n: &Arc<FinCat>) -> Result<Functor> {
        let y = exponential(m, n);
        let z = exponential(&y.cat, n);
        // counit at m, as a map m → n^{nᵐ} of 𝓜
        let ev = y.evaluation(&product(m, &y.cat)).after(&swap(&product(&y.cat, m), &product(m, &y.cat))?)?;
        let ev_m = z.curry(&product(&y.cat, m), &ev)?;
        let g = self.rho_l(&y.cat, n)?.after(&self.m_map(&ev_m)?)?;
        let e1 = exponential(&self.kk(&y.cat).cat, &self.nn(n).cat);
        let (ky, mm) = (self.kk(&y.cat).cat, self.mm(m).cat);
        let un = e1.uncurry(&product(&ky, &mm), &g);
        let flipped = un.after(&swap(&product(&mm, &ky), &product(&ky, &mm))?)?;
        exponential(&mm, &self.nn(n).cat).curry(&product(&mm, &ky), &flipped)
    }
}

/// Data for one parameterized check: f : k′ → k, u : m′ → m, g : n → n′.
#[derive(Clone, Debug)]
pub struct ParamInstance {
    pub data: ParamData,
    pub f: Functor,
    pub u: Functor,
    pub g: Functor,
}

fn pre(x: &Exponential, i: &Functor, other: &Exponential) -> Result<Functor> {
    x.pre(i, other)
}

fn diff(law: &str, ids: &[String], l: &Functor, r: &Functor, out: &mut Report) {
    if l != r {
        let (a, b) = l.first_difference(r).unwrap_or_default();
        out.push(Violation::new(law, ids.to_vec(), a, b));
    }
}

/// Lemma-level checks: ρˡ natural in k and n, ρʳ natural in m and n, and the
/// two routes to ρʳ agree.
pub fn parameterized_mate_check(inst: &ParamInstance) -> Report {
    let mut out = Vec::new();
    let ids = vec![describe(inst)];
    let res = (|| -> Result<()> {
        let p = &inst.data;
        let (k, k2) = (inst.f.tgt(), inst.f.src());
        let (m, m2) = (inst.u.tgt(), inst.u.src());
        let (n, n2) = (inst.g.src(), inst.g.tgt());
        // ρˡ natural in k
        let lhs = pre(&exponential(&p.kk(k).cat, &p.nn(n).cat), &p.k_map(&inst.f)?, &exponential(&p.kk(k2).cat, &p.nn(n).cat))?.after(&p.rho_l(k, n)?)?;
        let rhs = p.rho_l(k2, n)?.after(&p.m_map(&pre(&exponential(k, n), &inst.f, &exponential(k2, n))?)?)?;
        diff("pointwise mates natural in k", &ids, &lhs, &rhs, &mut out);
        // ρˡ natural in n
        let lhs = exponential(&p.kk(k).cat, &p.nn(n).cat).post(&p.n_map(&inst.g)?, &exponential(&p.kk(k).cat, &p.nn(n2).cat))?.after(&p.rho_l(k, n)?)?;
        let rhs = p.rho_l(k, n2)?.after(&p.m_map(&exponential(k, n).post(&inst.g, &exponential(k, n2))?)?)?;
        diff("pointwise mates natural in n (fixed k)", &ids, &lhs, &rhs, &mut out);
        // ρʳ natural in m
        let lhs = pre(&exponential(&p.mm(m).cat, &p.nn(n).cat), &p.m_map(&inst.u)?, &exponential(&p.mm(m2).cat, &p.nn(n).cat))?.after(&p.rho_r_direct(m, n)?)?;
        let rhs = p.rho_r_direct(m2, n)?.after(&p.k_map(&pre(&exponential(m, n), &inst.u, &exponential(m2, n))?)?)?;
        diff("pointwise mates natural in m", &ids, &lhs, &rhs, &mut out);
        // ρʳ natural in n
        let lhs = exponential(&p.mm(m).cat, &p.nn(n).cat).post(&p.n_map(&inst.g)?, &exponential(&p.mm(m).cat, &p.nn(n2).cat))?.after(&p.rho_r_direct(m, n)?)?;
        let rhs = p.rho_r_direct(m, n2)?.after(&p.k_map(&exponential(m, n).post(&inst.g, &exponential(m, n2))?)?)?;
        diff("pointwise mates natural in n (fixed m)", &ids, &lhs, &rhs, &mut out);
        // the two orders
        for (mm, nn) in [(m, n), (m2, n), (m, n2)] {
            diff("parameterized mates agree in both orders", &ids, &p.rho_r_via_l(mm, nn)?, &p.rho_r_direct(mm, nn)?, &mut out);
        }
        Ok(())
    })();
    if let Err(e) = res {
        out.push(Violation::new("parameterized mates computable", ids, e.to_string(), ""));
    }
    out
}

fn describe(inst: &ParamInstance) -> String {
    let sz = |c: &Arc<FinCat>| format!("{}/{}", c.n_obj(), c.n_mor());
    format!(
        "c={} d={} e={} h={:?} f:{}->{} u:{}->{} g:{}->{}",
        sz(&inst.data.c),
        sz(&inst.data.d),
        sz(&inst.data.e),
        inst.data.h.obj_table(),
        sz(inst.f.src()),
        sz(inst.f.tgt()),
        sz(inst.u.src()),
        sz(inst.u.tgt()),
        sz(inst.g.src()),
        sz(inst.g.tgt())
    )
}

/// The mate of f × − : k′×− ⇒ k×− across the exponential adjunctions, as a
/// map nᵏ → n^{k′}.
pub fn induced_mate(f: &Functor, n: &Arc<FinCat>) -> Result<Functor> {
    let (k, k2) = (f.tgt(), f.src());
    let x = exponential(k, n);
    let (p2, p) = (product(k2, &x.cat), product(k, &x.cat));
    let lam = product_map(&p2, &p, f, &Functor::identity(&x.cat))?;
    exponential(k2, n).curry(&p2, &x.evaluation(&p).after(&lam)?)
}

pub const MAX_COST: f64 = 256.0;

/// Seeded instances over categories with at most three objects.
pub fn param_corpus(seed: u64, size: usize) -> Vec<ParamInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small = [terminal(), chain(2), discrete(2)];
    let params = [terminal(), discrete(2), chain(2)];
    let mut out = Vec::new();
    let mut guard = 0;
    while out.len() < size && guard < 50 * size {
        guard += 1;
        let mut arrow = || -> Option<Functor> {
            let (a, b) = (small.choose(&mut rng)?, small.choose(&mut rng)?);
            all_functors(a, b).choose(&mut rng).cloned()
        };
        let (Some(f), Some(u), Some(g)) = (arrow(), arrow(), arrow()) else { continue };
        let (c, d, e) = (params.choose(&mut rng).unwrap().clone(), params.choose(&mut rng).unwrap().clone(), params.choose(&mut rng).unwrap().clone());
        let Some(h) = all_functors(&product(&d, &c).cat, &e).choose(&mut rng).cloned() else { continue };
        let data = ParamData::new(c, d, e, h);
        let (m, m2, n, n2) = (u.tgt(), u.src(), g.src(), g.tgt());
        if [(m, n), (m2, n), (m, n2)].iter().any(|(a, b)| data.cost(a, b) > MAX_COST) {
            continue;
        }
        out.push(ParamInstance { data, f, u, g });
    }
    out
}
