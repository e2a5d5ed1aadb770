use std::collections::HashMap;

use parking_lot::Mutex;

use crate::arrowcat::{CatAmbient, Square};
use crate::awfs::{coalg_validate, Awfs, Coalgebra};
use crate::error::{Error, Result};
use crate::fincat::{mapping_cylinder, Factorization, Functor, Ob};

/// The mapping-cylinder awfs (ℂ, 𝔽_t) on Cat.
#[derive(Default)]
pub struct CofAwfs {
    amb: CatAmbient,
    cache: Mutex<HashMap<u64, Factorization>>,
}

impl CofAwfs {
    pub fn new() -> CofAwfs {
        CofAwfs::default()
    }

    pub fn cyl(&self, f: &Functor) -> Factorization {
        if let Some(q) = self.cache.lock().get(&f.fingerprint()) {
            return q.clone();
        }
        let q = mapping_cylinder(f);
        self.cache.lock().insert(f.fingerprint(), q.clone());
        q
    }
}

impl Awfs for CofAwfs {
    type Amb = CatAmbient;

    fn ambient(&self) -> &CatAmbient {
        &self.amb
    }

    fn name(&self) -> String {
        "cylinder".into()
    }

    fn l(&self, f: &Functor) -> Result<Functor> {
        Ok(self.cyl(f).left)
    }

    fn r(&self, f: &Functor) -> Result<Functor> {
        Ok(self.cyl(f).right)
    }

    fn e_sq(&self, sq: &Square<Functor>) -> Result<Functor> {
        crate::arrowcat::square_check(&self.amb, sq)?;
        let (qf, qg) = (self.cyl(&sq.f), self.cyl(&sq.g));
        let (na, nag) = (sq.f.src().n_obj() as Ob, sq.g.src().n_obj() as Ob);
        let obj = qf.mid.objects().map(|x| if x < na { sq.u.ob(x) } else { nag + sq.v.ob(x - na) }).collect();
        let base = sq.v.after(&qf.right)?;
        Ok(Functor::lift_into(&qg.mid, obj, &base))
    }

    fn delta(&self, f: &Functor) -> Result<Functor> {
        let qf = self.cyl(f);
        let qlf = self.cyl(&qf.left);
        let na = f.src().n_obj() as Ob;
        let obj = qf.mid.objects().map(|x| if x < na { x } else { na + x }).collect();
        Ok(Functor::lift_into(&qlf.mid, obj, &Functor::identity(&qf.mid)))
    }

    fn mu(&self, f: &Functor) -> Result<Functor> {
        let qf = self.cyl(f);
        let qrf = self.cyl(&qf.right);
        let (na, nq) = (f.src().n_obj() as Ob, qf.mid.n_obj() as Ob);
        let obj = qrf.mid.objects().map(|x| if x < nq { x } else { na + (x - nq) }).collect();
        Ok(Functor::lift_into(&qf.mid, obj, &qrf.right))
    }
}

/// The unique ℂ-coalgebra structure on an injective-on-objects functor.
pub fn unique_coalg(aw: &CofAwfs, f: &Functor) -> Result<Coalgebra<Functor>> {
    if !f.is_injective_on_objects() {
        return Err(Error::NotCofibration("functor is not injective on objects".into()));
    }
    let q = aw.cyl(f);
    let b = f.tgt();
    let na = f.src().n_obj() as Ob;
    let mut obj: Vec<Ob> = b.objects().map(|y| na + y).collect();
    for a in f.src().objects() {
        obj[f.ob(a) as usize] = a;
    }
    Ok(Coalgebra { f: f.clone(), s: Functor::lift_into(&q.mid, obj, &Functor::identity(b)) })
}

/// Every section of R f (all are determined by their object map) that is a
/// valid ℂ-coalgebra structure on f.
pub fn cof_sections(aw: &CofAwfs, f: &Functor) -> Vec<Coalgebra<Functor>> {
    let q = aw.cyl(f);
    let b = f.tgt();
    let na = f.src().n_obj() as Ob;
    let choices: Vec<Vec<Ob>> = b
        .objects()
        .map(|y| {
            let mut c: Vec<Ob> = f.src().objects().filter(|&a| f.ob(a) == y).collect();
            c.push(na + y);
            c
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let obj: Vec<Ob> = pick.iter().zip(&choices).map(|(&k, c)| c[k]).collect();
        let s = Functor::lift_into(&q.mid, obj, &Functor::identity(b));
        let c = Coalgebra { f: f.clone(), s };
        if coalg_validate(aw, &c).is_empty() {
            out.push(c);
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                return out;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

