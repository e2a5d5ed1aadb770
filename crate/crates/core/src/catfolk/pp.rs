use std::sync::Arc;

use super::cof::{unique_coalg, CofAwfs};
use super::generators::{gen_j, generator_set_i};
use super::trivcof::{j_coalg, TrivCofAwfs};
use super::xi::xi_direct;
use crate::arrowcat::{Ambient, CatAmbient, Square};
use crate::awfs::{coalg_compose, coalg_push, Awfs, Coalgebra};
use crate::error::{Error, Result};
use crate::fincat::{
    basic, coproduct, product, product_map, pushout_bounded, arrow_iso, Bound, FinCat, Functor, Ob, Product, Pushout,
};
use crate::report::{Report, Violation};

/// Pushout-product f ⊠ g : P×S ⊔_{P×R} Q×R → Q×S of f: P → Q and g: R → S.
#[derive(Clone, Debug)]
pub struct PP {
    pub f: Functor,
    pub g: Functor,
    /// P×R, P×S, Q×R, Q×S
    pub pr: Product,
    pub ps: Product,
    pub qr: Product,
    pub qs: Product,
    pub po: Pushout,
    pub arrow: Functor,
}

pub fn pp(f: &Functor, g: &Functor) -> Result<PP> {
    pp_bounded(f, g, Bound::default())
}

pub fn pp_bounded(f: &Functor, g: &Functor, bound: Bound) -> Result<PP> {
    let (p, q, r, s) = (f.src(), f.tgt(), g.src(), g.tgt());
    let (pr, ps, qr, qs) = (product(p, r), product(p, s), product(q, r), product(q, s));
    let idp = Functor::identity(p);
    let idr = Functor::identity(r);
    let po = pushout_bounded(&product_map(&pr, &ps, &idp, g)?, &product_map(&pr, &qr, f, &idr)?, bound)?;
    let arrow = po.induced(&product_map(&ps, &qs, f, &Functor::identity(s))?, &product_map(&qr, &qs, &Functor::identity(q), g)?)?;
    Ok(PP { f: f.clone(), g: g.clone(), pr, ps, qr, qs, po, arrow })
}

/// Transport a coalgebra structure along an arrow isomorphism (u, v): f ≅ g.
pub fn coalg_transport<W: Awfs>(aw: &W, c: &Coalgebra<<W::Amb as Ambient>::Arr>, g: &<W::Amb as Ambient>::Arr, u: &<W::Amb as Ambient>::Arr, v: &<W::Amb as Ambient>::Arr, v_inv: &<W::Amb as Ambient>::Arr) -> Result<Coalgebra<<W::Amb as Ambient>::Arr>> {
    let e = aw.e_sq(&Square::new(&c.f, g, u, v))?;
    Ok(Coalgebra { f: g.clone(), s: aw.ambient().compose_all(&[&e, &c.s, v_inv])? })
}

/// Coalgebra structure on f′ from a pushout square (u, v): f ⇒ f′.
pub fn coalg_pushout<W: Awfs<Amb = CatAmbient>>(aw: &W, c: &Coalgebra<Functor>, sq: &Square<Functor>) -> Result<Coalgebra<Functor>> {
    if sq.f != c.f {
        return Err(Error::Malformed("square does not start at the coalgebra".into()));
    }
    crate::arrowcat::square_check(aw.ambient(), sq)?;
    let po = pushout_bounded(&c.f, &sq.u, Bound::default())?;
    let cmp = po.induced(&sq.v, &sq.g)?;
    let inv = cmp.inverse().ok_or_else(|| Error::NotPushout("comparison map is not invertible".into()))?;
    let h1 = aw.e_sq(sq)?.after(&c.s)?;
    let out = po.induced(&h1, &aw.l(&sq.g)?)?;
    Ok(Coalgebra { f: sq.g.clone(), s: out.after(&inv)? })
}

/// Structure on n ⊗ j for a discrete n, one copy of c per object.
fn copower(aw: &TrivCofAwfs, c: &Coalgebra<Functor>, n: &Arc<FinCat>, n_left: bool) -> Result<Coalgebra<Functor>> {
    let (a, b) = (c.f.src(), c.f.tgt());
    let idn = Functor::identity(n);
    let (pa, pb, arrow) = if n_left {
        let (pa, pb) = (product(n, a), product(n, b));
        let arr = product_map(&pa, &pb, &idn, &c.f)?;
        (pa, pb, arr)
    } else {
        let (pa, pb) = (product(a, n), product(b, n));
        let arr = product_map(&pa, &pb, &c.f, &idn)?;
        (pa, pb, arr)
    };
    let e = aw.ext(&arrow);
    let mut obj = vec![0; pb.cat.n_obj()];
    let mut mor = vec![0; pb.cat.n_mor()];
    for k in n.objects() {
        let (ia, ib) = if n_left {
            let cn = |x: &Arc<FinCat>| Functor::constant(x, n, k);
            (pa.pairing(&cn(a), &Functor::identity(a))?, pb.pairing(&cn(b), &Functor::identity(b))?)
        } else {
            let cn = |x: &Arc<FinCat>| Functor::constant(x, n, k);
            (pa.pairing(&Functor::identity(a), &cn(a))?, pb.pairing(&Functor::identity(b), &cn(b))?)
        };
        let ek = aw.e_sq(&Square::new(&c.f, &arrow, &ia, &ib))?.after(&c.s)?;
        for y in b.objects() {
            obj[ib.ob(y) as usize] = ek.ob(y);
        }
        for m in b.morphisms() {
            mor[ib.mor(m) as usize] = ek.mor(m);
        }
    }
    Ok(Coalgebra { f: arrow, s: Functor::from_tables(pb.cat.clone(), e.mid().clone(), obj, mor) })
}

/// The 𝔽-coalgebra structure on i ⊠ j (or j ⊠ i when `cof_first` is false)
/// for a cofibration i and a coalgebra (j, s). The construction splits
/// i = k ∘ c′ with c′ : X → X ⊔ N adding the missing objects and k bijective
/// on objects; i ⊠ j is then the composite of a pushout of N ⊗ j with the
/// isomorphism k ⊠ j.
pub fn lifted_pp(aw: &TrivCofAwfs, i: &Functor, cj: &Coalgebra<Functor>, cof_first: bool) -> Result<Coalgebra<Functor>> {
    if !i.is_injective_on_objects() {
        return Err(Error::NotCofibration("functor is not injective on objects".into()));
    }
    let (x, y) = (i.src(), i.tgt());
    let missing: Vec<Ob> = y.objects().filter(|&o| !x.objects().any(|a| i.ob(a) == o)).collect();
    let n = basic::discrete(missing.len());
    let cp = coproduct(x, &n);
    let c1 = cp.i1.clone();
    let new = Functor::from_fn(n.clone(), y.clone(), missing.clone(), |m| y.id(missing[m as usize]));
    let k = cp.copair(i, &new)?;
    let j = &cj.f;
    let (a, b) = (j.src(), j.tgt());
    let (ida, idb) = (Functor::identity(a), Functor::identity(b));
    let (full, pc, pk) = if cof_first { (pp(i, j)?, pp(&c1, j)?, pp(&k, j)?) } else { (pp(j, i)?, pp(j, &c1)?, pp(j, &k)?) };

    // step 1: N ⊗ j pushed into c′ ⊠ j
    let cn = copower(aw, cj, &n, cof_first)?;
    let sq1 = if cof_first {
        let u = pc.po.inr.after(&product_map(&product(&n, a), &pc.qr, &cp.i2, &ida)?)?;
        let v = product_map(&product(&n, b), &pc.qs, &cp.i2, &idb)?;
        Square::new(&cn.f, &pc.arrow, &u, &v)
    } else {
        let u = pc.po.inl.after(&product_map(&product(a, &n), &pc.ps, &ida, &cp.i2)?)?;
        let v = product_map(&product(b, &n), &pc.qs, &idb, &cp.i2)?;
        Square::new(&cn.f, &pc.arrow, &u, &v)
    };
    let sc = coalg_pushout(aw, &cn, &sq1)?;

    // step 2: k ⊠ j is invertible
    let h = &pk.arrow;
    let h_inv = h.inverse().ok_or_else(|| Error::NotPushout("k ⊠ j is not invertible".into()))?;
    let sk = Coalgebra { f: h.clone(), s: aw.l(h)?.after(&h_inv)? };

    // step 3: c′ ⊠ j ⇒ w is a pushout square, and i ⊠ j = (k ⊠ j) ∘ w
    let (u, v, w) = if cof_first {
        let u = pc.po.induced(&full.po.inl, &full.po.inr.after(&product_map(&pc.qr, &full.qr, &k, &ida)?)?)?;
        let w = full.po.induced(&pk.po.inl.after(&product_map(&full.ps, &pk.ps, &c1, &idb)?)?, &pk.po.inr)?;
        (u, pk.po.inl.clone(), w)
    } else {
        let u = pc.po.induced(&full.po.inl.after(&product_map(&pc.ps, &full.ps, &ida, &k)?)?, &full.po.inr)?;
        let w = full.po.induced(&pk.po.inl, &pk.po.inr.after(&product_map(&full.qr, &pk.qr, &idb, &c1)?)?)?;
        (u, pk.po.inr.clone(), w)
    };
    if h.after(&w)? != full.arrow {
        return Err(Error::Malformed("k ⊠ j ∘ w differs from i ⊠ j".into()));
    }
    let sw = coalg_pushout(aw, &sc, &Square::new(&pc.arrow, &w, &u, &v))?;
    coalg_compose(aw, &sw, &sk)
}

/// One row of the generator table: i ⊠ j ≅ expected, with the witness.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub name: String,
    pub expected: String,
    pub witness: Option<(Functor, Functor)>,
}

/// i ⊠ j for i ∈ {c, d, e}: c ⊠ j ≅ j and d ⊠ j ≅ e ⊠ j ≅ id_{𝟚×𝐈}.
pub fn generator_table() -> Result<Vec<TableRow>> {
    generator_table_bounded(Bound::default())
}

/// The generator table with every pushout under `bound`.
pub fn generator_table_bounded(bound: Bound) -> Result<Vec<TableRow>> {
    let j = gen_j();
    let two_i = product(&basic::arrow(), &basic::interval()).cat;
    let mut rows = Vec::new();
    for (name, i) in generator_set_i() {
        let p = pp_bounded(&i, &j, bound)?;
        let (expected, target) = if name == "c" { ("j".to_string(), j.clone()) } else { ("id(2xI)".to_string(), Functor::identity(&two_i)) };
        rows.push(TableRow { name: format!("{name} [x] j"), expected, witness: arrow_iso(&p.arrow, &target) });
    }
    Ok(rows)
}

/// Both coherence routes at (j, j), plus the comparison of ξ-images with the
/// unique cylinder coalgebras.
pub fn coherence_check(cof: &CofAwfs, triv: &TrivCofAwfs) -> Result<Report> {
    let amb = CatAmbient;
    let j = gen_j();
    let cj = j_coalg(triv);
    let mut out = Vec::new();
    let ra = lifted_pp(triv, &j, &cj, true)?;
    let rb = lifted_pp(triv, &j, &cj, false)?;
    if let Some((l, r)) = amb.diff(&ra.s, &rb.s) {
        out.push(Violation::new("coherence at (j, j)", vec!["j [x] j".into()], l, r));
    }
    let xi = |f: &Functor| xi_direct(cof, triv, f);
    let pushed = coalg_push(triv, xi, &cj)?;
    let uj = unique_coalg(cof, &j)?;
    if let Some((l, r)) = amb.diff(&pushed.s, &uj.s) {
        out.push(Violation::new("xi_* j = unique", vec!["j".into()], l, r));
    }
    for (name, i) in generator_set_i() {
        let lp = lifted_pp(triv, &i, &cj, true)?;
        let pushed = coalg_push(triv, xi, &lp)?;
        let u = unique_coalg(cof, &lp.f)?;
        if let Some((l, r)) = amb.diff(&pushed.s, &u.s) {
            out.push(Violation::new("xi_* (i [x] j) = unique", vec![name.into()], l, r));
        }
    }
    Ok(out)
}
