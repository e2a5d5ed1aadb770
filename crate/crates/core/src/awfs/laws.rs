use rayon::prelude::*;

use crate::arrowcat::{compose_h, id_square, Ambient, Square};
use crate::error::Result;
use crate::report::{Report, Violation};

type Arr<W> = <<W as Awfs>::Amb as Ambient>::Arr;

/// An algebraic weak factorization system given by its functorial
/// factorization E and the components of δ and μ.
pub trait Awfs: Send + Sync {
    type Amb: Ambient;

    fn ambient(&self) -> &Self::Amb;
    fn name(&self) -> String;
    /// L f : dom f → E f
    fn l(&self, f: &Arr<Self>) -> Result<Arr<Self>>;
    /// R f : E f → cod f
    fn r(&self, f: &Arr<Self>) -> Result<Arr<Self>>;
    /// E(u, v) : E f → E g for a square (u, v): f ⇒ g
    fn e_sq(&self, sq: &Square<Arr<Self>>) -> Result<Arr<Self>>;
    /// δ_f : E f → E(L f)
    fn delta(&self, f: &Arr<Self>) -> Result<Arr<Self>>;
    /// μ_f : E(R f) → E f
    fn mu(&self, f: &Arr<Self>) -> Result<Arr<Self>>;
}

/// ε_f = (1, R f): L f ⇒ f
pub fn epsilon_sq<W: Awfs>(aw: &W, f: &Arr<W>) -> Result<Square<Arr<W>>> {
    let amb = aw.ambient();
    Ok(Square::new(&aw.l(f)?, f, &amb.id(&amb.dom(f)), &aw.r(f)?))
}

/// η_f = (L f, 1): f ⇒ R f
pub fn eta_sq<W: Awfs>(aw: &W, f: &Arr<W>) -> Result<Square<Arr<W>>> {
    let amb = aw.ambient();
    Ok(Square::new(f, &aw.r(f)?, &aw.l(f)?, &amb.id(&amb.cod(f))))
}

/// L(u, v) = (u, E(u, v)): L f ⇒ L g
pub fn l_sq<W: Awfs>(aw: &W, sq: &Square<Arr<W>>) -> Result<Square<Arr<W>>> {
    Ok(Square::new(&aw.l(&sq.f)?, &aw.l(&sq.g)?, &sq.u, &aw.e_sq(sq)?))
}

/// R(u, v) = (E(u, v), v): R f ⇒ R g
pub fn r_sq<W: Awfs>(aw: &W, sq: &Square<Arr<W>>) -> Result<Square<Arr<W>>> {
    Ok(Square::new(&aw.r(&sq.f)?, &aw.r(&sq.g)?, &aw.e_sq(sq)?, &sq.v))
}

/// δ as a square (1, δ_f): L f ⇒ L L f
pub fn delta_sq<W: Awfs>(aw: &W, f: &Arr<W>) -> Result<Square<Arr<W>>> {
    let amb = aw.ambient();
    let lf = aw.l(f)?;
    Ok(Square::new(&lf, &aw.l(&lf)?, &amb.id(&amb.dom(f)), &aw.delta(f)?))
}

/// μ as a square (μ_f, 1): R R f ⇒ R f
pub fn mu_sq<W: Awfs>(aw: &W, f: &Arr<W>) -> Result<Square<Arr<W>>> {
    let amb = aw.ambient();
    let rf = aw.r(f)?;
    Ok(Square::new(&aw.r(&rf)?, &rf, &aw.mu(f)?, &amb.id(&amb.cod(f))))
}

pub(crate) struct Checker<'a, A: Ambient> {
    pub amb: &'a A,
    pub out: Report,
}

impl<'a, A: Ambient> Checker<'a, A> {
    pub fn new(amb: &'a A) -> Self {
        Checker { amb, out: Vec::new() }
    }

    pub fn eq(&mut self, law: &str, ids: &[String], lhs: Result<A::Arr>, rhs: Result<A::Arr>) {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                if let Some((a, b)) = self.amb.diff(&l, &r) {
                    self.out.push(Violation::new(law, ids.to_vec(), a, b));
                }
            }
            (Err(e), _) => self.out.push(Violation::new(law, ids.to_vec(), e.to_string(), "defined")),
            (_, Err(e)) => self.out.push(Violation::new(law, ids.to_vec(), "defined", e.to_string())),
        }
    }

}

fn per_arrow<W: Awfs>(aw: &W, f: &Arr<W>) -> Report {
    let amb = aw.ambient();
    let mut c = Checker::new(amb);
    let ids = [amb.describe(f)];
    let (lf, rf) = match (aw.l(f), aw.r(f)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => {
            c.out.push(Violation::new("factorization defined", ids.to_vec(), e.to_string(), "L f, R f"));
            return c.out;
        }
    };
    let comp = |g: &Arr<W>, h: &Arr<W>| amb.compose(g, h);
    c.eq("factorization", &ids, comp(&rf, &lf), Ok(f.clone()));
    let ef_id = Ok(amb.id(&amb.cod(&lf)));

    // E preserves identities
    c.eq("E identity", &ids, aw.e_sq(&id_square(amb, f)), ef_id.clone());

    let delta = aw.delta(f);
    let mu = aw.mu(f);
    let llf = aw.l(&lf);
    let rlf = aw.r(&lf);
    let lrf = aw.l(&rf);
    let rrf = aw.r(&rf);
    let e_eps = epsilon_sq(aw, f).and_then(|s| aw.e_sq(&s));
    let e_eta = eta_sq(aw, f).and_then(|s| aw.e_sq(&s));
    let and = |a: &Result<Arr<W>>, b: &Result<Arr<W>>| -> Result<Arr<W>> { comp(a.as_ref().map_err(Clone::clone)?, b.as_ref().map_err(Clone::clone)?) };

    // comonad
    c.eq("counit R(Lf).delta = 1", &ids, and(&rlf, &delta), ef_id.clone());
    c.eq("counit E(1,Rf).delta = 1", &ids, and(&e_eps, &delta), ef_id.clone());
    c.eq("delta square delta.Lf = L(Lf)", &ids, and(&delta, &Ok(lf.clone())), llf.clone());
    let dl = aw.delta(&lf);
    let e1d = delta_sq(aw, f).and_then(|s| aw.e_sq(&s));
    c.eq("coassociativity", &ids, and(&dl, &delta), and(&e1d, &delta));

    // monad
    c.eq("unit mu.L(Rf) = 1", &ids, and(&mu, &lrf), ef_id.clone());
    c.eq("unit mu.E(Lf,1) = 1", &ids, and(&mu, &e_eta), ef_id.clone());
    c.eq("mu square Rf.mu = R(Rf)", &ids, and(&Ok(rf.clone()), &mu), rrf.clone());
    let mr = aw.mu(&rf);
    let em1 = mu_sq(aw, f).and_then(|s| aw.e_sq(&s));
    c.eq("associativity", &ids, and(&mu, &mr), and(&mu, &em1));

    // distributive law
    c.eq("distributive square R(Lf).delta = mu.L(Rf)", &ids, and(&rlf, &delta), and(&mu, &lrf));
    let lhs = and(&delta, &mu);
    let rhs = (|| {
        let d_r = aw.delta(&rf)?;
        let sq = Square::new(&aw.l(&rf)?, &aw.r(&lf)?, &delta.clone()?, &mu.clone()?);
        let e_dm = aw.e_sq(&sq)?;
        let mu_l = aw.mu(&lf)?;
        amb.compose_all(&[&mu_l, &e_dm, &d_r])
    })();
    c.eq("distributive law delta.mu = mu_L.E(delta,mu).delta_R", &ids, lhs, rhs);

    // redundant instances of naturality at η and ε
    if let (Ok(eta), Ok(eps)) = (eta_sq(aw, f), epsilon_sq(aw, f)) {
        let lhs = (|| amb.compose(&aw.delta(&rf)?, &aw.e_sq(&eta)?))();
        let rhs = (|| amb.compose(&aw.e_sq(&l_sq(aw, &eta)?)?, &aw.delta(f)?))();
        c.eq("delta natural at eta", &ids, lhs, rhs);
        let lhs = (|| amb.compose(&aw.mu(f)?, &aw.e_sq(&r_sq(aw, &eps)?)?))();
        let rhs = (|| amb.compose(&aw.e_sq(&eps)?, &aw.mu(&lf)?))();
        c.eq("mu natural at epsilon", &ids, lhs, rhs);
    }
    c.out
}

fn per_square<W: Awfs>(aw: &W, sq: &Square<Arr<W>>) -> Report {
    let amb = aw.ambient();
    let mut c = Checker::new(amb);
    let ids = [amb.describe(&sq.f), amb.describe(&sq.g), amb.describe(&sq.u), amb.describe(&sq.v)];
    let e = aw.e_sq(sq);
    let e_ok = |e: &Result<Arr<W>>| e.as_ref().map_err(Clone::clone).cloned();
    let and = |a: Result<Arr<W>>, b: Result<Arr<W>>| -> Result<Arr<W>> { amb.compose(&a?, &b?) };
    c.eq("E square left", &ids, and(e_ok(&e), aw.l(&sq.f)), and(aw.l(&sq.g), Ok(sq.u.clone())));
    c.eq("E square right", &ids, and(aw.r(&sq.g), e_ok(&e)), and(Ok(sq.v.clone()), aw.r(&sq.f)));
    let rhs = l_sq(aw, sq).and_then(|s| aw.e_sq(&s));
    c.eq("delta naturality", &ids, and(aw.delta(&sq.g), e_ok(&e)), and(rhs, aw.delta(&sq.f)));
    let lhs = r_sq(aw, sq).and_then(|s| aw.e_sq(&s));
    c.eq("mu naturality", &ids, and(aw.mu(&sq.g), lhs), and(e_ok(&e), aw.mu(&sq.f)));
    c.out
}

/// Exhaustive law check over a corpus of arrows and squares between them.
pub fn validate_awfs<W: Awfs>(aw: &W, arrows: &[Arr<W>], squares: &[Square<Arr<W>>]) -> Report {
    let amb = aw.ambient();
    let mut out: Report = arrows.par_iter().map(|f| per_arrow(aw, f)).flatten().collect();
    out.extend(squares.par_iter().map(|s| per_square(aw, s)).flatten().collect::<Vec<_>>());
    // E preserves composites
    let comp: Vec<Violation> = squares
        .par_iter()
        .flat_map(|a| {
            let mut c = Checker::new(amb);
            for b in squares.iter().filter(|b| b.f == a.g) {
                let ids = [amb.describe(&a.f), amb.describe(&a.g), amb.describe(&b.g)];
                let lhs = compose_h(amb, a, b).and_then(|ab| aw.e_sq(&ab));
                let rhs = (|| amb.compose(&aw.e_sq(b)?, &aw.e_sq(a)?))();
                c.eq("E composite", &ids, lhs, rhs);
            }
            c.out
        })
        .collect();
    out.extend(comp);
    out
}
