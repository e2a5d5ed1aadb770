use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::Mutex;

use super::generators::gen_j;
use crate::arrowcat::{problems, CatAmbient, Entry, GeneratorCategory, LiftingFunction, Square};
use crate::awfs::{alg_validate, Algebra, Awfs, Coalgebra};
use crate::error::{Error, Result};
use crate::fincat::{all_functors, iso_extension, FinCat, Functor, Mor, Ob};

/// E f of the iso-extension factorization together with its object index.
#[derive(Clone, Debug)]
pub struct Ext {
    pub fac: crate::fincat::Factorization,
    /// (a, β) ↦ the object P(a, β)
    pub index: HashMap<(Ob, Mor), Ob>,
    /// for each object: None on the A-side, Some(β) for P(a, β)
    pub tag: Vec<Option<Mor>>,
}

impl Ext {
    pub fn p(&self, a: Ob, beta: Mor) -> Ob {
        self.index[&(a, beta)]
    }

    pub fn mid(&self) -> &Arc<FinCat> {
        &self.fac.mid
    }
}

/// The free iso-extension awfs (ℂ_t, 𝔽) on Cat.
#[derive(Default)]
pub struct TrivCofAwfs {
    amb: CatAmbient,
    cache: Mutex<HashMap<u64, Arc<Ext>>>,
}

impl TrivCofAwfs {
    pub fn new() -> TrivCofAwfs {
        TrivCofAwfs::default()
    }

    pub fn ext(&self, f: &Functor) -> Arc<Ext> {
        if let Some(e) = self.cache.lock().get(&f.fingerprint()) {
            return e.clone();
        }
        let (fac, tag) = iso_extension(f);
        let index = tag
            .iter()
            .enumerate()
            .filter_map(|(x, t)| t.map(|b| ((fac.mid.proj(x as Ob).unwrap_or(0), b), x as Ob)))
            .collect();
        let e = Arc::new(Ext { fac, index, tag });
        self.cache.lock().insert(f.fingerprint(), e.clone());
        e
    }
}

impl Awfs for TrivCofAwfs {
    type Amb = CatAmbient;

    fn ambient(&self) -> &CatAmbient {
        &self.amb
    }

    fn name(&self) -> String {
        "iso-extension".into()
    }

    fn l(&self, f: &Functor) -> Result<Functor> {
        Ok(self.ext(f).fac.left.clone())
    }

    fn r(&self, f: &Functor) -> Result<Functor> {
        Ok(self.ext(f).fac.right.clone())
    }

    fn e_sq(&self, sq: &Square<Functor>) -> Result<Functor> {
        crate::arrowcat::square_check(&self.amb, sq)?;
        let (ef, eg) = (self.ext(&sq.f), self.ext(&sq.g));
        let m = ef.mid();
        let obj = m
            .objects()
            .map(|x| {
                let a = m.proj(x).unwrap_or(0);
                match ef.tag[x as usize] {
                    None => Ok(sq.u.ob(a)),
                    Some(b) => eg.index.get(&(sq.u.ob(a), sq.v.mor(b))).copied().ok_or_else(|| Error::Malformed("E(u,v): not a square".into())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let base = sq.u.after(&Functor::projection(m))?;
        Ok(Functor::lift_into(eg.mid(), obj, &base))
    }

    fn delta(&self, f: &Functor) -> Result<Functor> {
        let ef = self.ext(f);
        let elf = self.ext(&ef.fac.left);
        let m = ef.mid();
        let a = f.src();
        let obj = m
            .objects()
            .map(|x| {
                let ax = m.proj(x).unwrap_or(0);
                match ef.tag[x as usize] {
                    None => x,
                    Some(_) => elf.p(ax, m.over(ax, x, a.id(ax))),
                }
            })
            .collect();
        Ok(Functor::lift_into(elf.mid(), obj, &Functor::projection(m)))
    }

    fn mu(&self, f: &Functor) -> Result<Functor> {
        let ef = self.ext(f);
        let erf = self.ext(&ef.fac.right);
        let b = f.tgt();
        let (m, mr) = (ef.mid(), erf.mid());
        let obj = mr
            .objects()
            .map(|x| {
                let y = mr.proj(x).unwrap_or(0);
                match erf.tag[x as usize] {
                    None => y,
                    Some(gamma) => {
                        let a = m.proj(y).unwrap_or(0);
                        match ef.tag[y as usize] {
                            None => ef.p(a, gamma),
                            Some(beta) => ef.p(a, b.compose(gamma, beta)),
                        }
                    }
                }
            })
            .collect();
        let base = Functor::projection(m).after(&Functor::projection(mr))?;
        Ok(Functor::lift_into(m, obj, &base))
    }
}

/// The unique ℂ_t-coalgebra structure on j: 0 ↦ A-side, 1 ↦ P(*, u).
pub fn j_coalg(aw: &TrivCofAwfs) -> Coalgebra<Functor> {
    let j = gen_j();
    let e = aw.ext(&j);
    let i = j.tgt();
    let u = i.hom(0, 1).start;
    let obj = vec![0, e.p(0, u)];
    let base = Functor::constant(i, &crate::fincat::basic::terminal(), 0);
    Coalgebra { f: j.clone(), s: Functor::lift_into(e.mid(), obj, &base) }
}

/// The functor t : E g → A determined by a cleavage (one lift per P-object).
pub fn cleavage_functor(aw: &TrivCofAwfs, g: &Functor, theta: &HashMap<Ob, Mor>) -> Functor {
    let e = aw.ext(g);
    let (m, a) = (e.mid(), g.src());
    let lift = |x: Ob| -> Mor {
        match e.tag[x as usize] {
            None => a.id(m.proj(x).unwrap_or(0)),
            Some(_) => theta[&x],
        }
    };
    let obj: Vec<Ob> = m.objects().map(|x| a.cod(lift(x))).collect();
    Functor::from_fn(m.clone(), a.clone(), obj, |mm| {
        let (x, y) = (m.dom(mm), m.cod(mm));
        let base = m.base_mor(mm).unwrap_or(0);
        let inv = a.inverse(lift(x)).unwrap_or(0);
        a.compose(lift(y), a.compose(base, inv))
    })
}

/// For every P-object of E g, the candidate lifts: isos of A out of a over β.
fn lift_candidates(aw: &TrivCofAwfs, g: &Functor) -> Vec<(Ob, Vec<Mor>)> {
    let e = aw.ext(g);
    let (m, a) = (e.mid(), g.src());
    let isos = a.isos();
    m.objects()
        .filter_map(|x| {
            let beta = e.tag[x as usize]?;
            let ax = m.proj(x).unwrap_or(0);
            let c = isos.iter().copied().filter(|&h| a.dom(h) == ax && g.mor(h) == beta).collect();
            Some((x, c))
        })
        .collect()
}

fn for_each_choice(cands: &[(Ob, Vec<Mor>)], limit: usize, mut visit: impl FnMut(&HashMap<Ob, Mor>) -> bool) -> Result<()> {
    let total: f64 = cands.iter().map(|(_, c)| c.len() as f64).product();
    if total > limit as f64 {
        return Err(Error::CapExceeded(format!("{total} candidate cleavages exceed {limit}")));
    }
    if cands.iter().any(|(_, c)| c.is_empty()) {
        return Ok(());
    }
    let mut pick = vec![0usize; cands.len()];
    loop {
        let theta: HashMap<Ob, Mor> = cands.iter().zip(&pick).map(|((x, c), &k)| (*x, c[k])).collect();
        if !visit(&theta) {
            return Ok(());
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                return Ok(());
            }
            pick[k] += 1;
            if pick[k] < cands[k].1.len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// All 𝔽-algebra structures on g, by exhaustive search over cleavages
/// followed by the full algebra law check.
pub fn trivcof_algebras(aw: &TrivCofAwfs, g: &Functor, limit: usize) -> Result<Vec<Algebra<Functor>>> {
    let cands = lift_candidates(aw, g);
    let mut out = Vec::new();
    for_each_choice(&cands, limit, |theta| {
        let a = Algebra { g: g.clone(), t: cleavage_functor(aw, g, theta) };
        if alg_validate(aw, &a).is_empty() {
            out.push(a);
        }
        true
    })?;
    Ok(out)
}

/// Algebras of the pointed endofunctor (R, η): only t ∘ L g = 1 and g ∘ t = R g.
pub fn pointed_algebra_count(aw: &TrivCofAwfs, g: &Functor, limit: usize) -> Result<usize> {
    let cands = lift_candidates(aw, g);
    let mut n = 0;
    for_each_choice(&cands, limit, |theta| {
        let a = Algebra { g: g.clone(), t: cleavage_functor(aw, g, theta) };
        let bad = alg_validate(aw, &a).iter().any(|v| !v.law.contains("mu"));
        if !bad {
            n += 1;
        }
        true
    })?;
    Ok(n)
}

/// Every coherent lifting function for g against {j}: since the generator
/// category is discrete, all independent choices of diagonals.
pub fn j_lifting_functions(
    gens: &Arc<GeneratorCategory<Functor>>,
    g: &Functor,
    limit: usize,
) -> Result<Vec<LiftingFunction<Functor>>> {
    let amb = CatAmbient;
    let j = &gens.arrows[0];
    let probs = problems(&amb, j, g);
    let mut sols = Vec::new();
    for (a, b) in &probs {
        let cands: Vec<Functor> = all_functors(j.tgt(), g.src())
            .into_iter()
            .filter(|d| d.after(j).is_ok_and(|dj| dj == *a) && g.after(d).is_ok_and(|gd| gd == *b))
            .collect();
        sols.push(cands);
    }
    let total: f64 = sols.iter().map(|c| c.len() as f64).product();
    if total > limit as f64 {
        return Err(Error::CapExceeded(format!("{total} lifting functions exceed {limit}")));
    }
    let mut out = Vec::new();
    if sols.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    let mut pick = vec![0usize; sols.len()];
    loop {
        let entries = probs
            .iter()
            .zip(&pick)
            .zip(&sols)
            .map(|(((a, b), &k), c)| Entry { gen: 0, a: a.clone(), b: b.clone(), diag: c[k].clone() })
            .collect();
        out.push(LiftingFunction::from_entries(&amb, g, gens, entries));
        let mut k = 0;
        loop {
            if k == pick.len() {
                return Ok(out);
            }
            pick[k] += 1;
            if pick[k] < sols[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}
