use awfs_core::arrowcat::{id_square, squares, Ambient, CatAmbient, Square};
use awfs_core::awfs::*;
use awfs_core::catfolk::{
    bang, functor_corpus, gen_j, isofibrations, j_generators, square_corpus, trivcof_algebras, unique_coalg, CofAwfs, TrivCofAwfs,
    ALG_LIMIT,
};
use awfs_core::fincat::basic::{discrete, interval, terminal, z2};
use awfs_core::fincat::{coproduct, Ob};
use awfs_core::{Functor, Result};
use proptest::prelude::*;

/// f ↦ (f, 1) with identity comonad and monad data.
struct Trivial(CatAmbient);

impl Awfs for Trivial {
    type Amb = CatAmbient;
    fn ambient(&self) -> &CatAmbient {
        &self.0
    }
    fn name(&self) -> String {
        "trivial".into()
    }
    fn l(&self, f: &Functor) -> Result<Functor> {
        Ok(f.clone())
    }
    fn r(&self, f: &Functor) -> Result<Functor> {
        Ok(Functor::identity(f.tgt()))
    }
    fn e_sq(&self, sq: &Square<Functor>) -> Result<Functor> {
        Ok(sq.v.clone())
    }
    fn delta(&self, f: &Functor) -> Result<Functor> {
        Ok(Functor::identity(f.tgt()))
    }
    fn mu(&self, f: &Functor) -> Result<Functor> {
        Ok(Functor::identity(f.tgt()))
    }
}

/// The cylinder awfs with δ sending every object to the B-side of Q(C f).
struct WrongLeg(CofAwfs);

impl Awfs for WrongLeg {
    type Amb = CatAmbient;
    fn ambient(&self) -> &CatAmbient {
        self.0.ambient()
    }
    fn name(&self) -> String {
        "wrong leg".into()
    }
    fn l(&self, f: &Functor) -> Result<Functor> {
        self.0.l(f)
    }
    fn r(&self, f: &Functor) -> Result<Functor> {
        self.0.r(f)
    }
    fn e_sq(&self, sq: &Square<Functor>) -> Result<Functor> {
        self.0.e_sq(sq)
    }
    fn delta(&self, f: &Functor) -> Result<Functor> {
        let qf = self.0.cyl(f);
        let qlf = self.0.cyl(&qf.left);
        let na = f.src().n_obj() as Ob;
        let obj = qf.mid.objects().map(|x| na + x).collect();
        Ok(Functor::lift_into(&qlf.mid, obj, &Functor::identity(&qf.mid)))
    }
    fn mu(&self, f: &Functor) -> Result<Functor> {
        self.0.mu(f)
    }
}

fn groupoid_arrows() -> Vec<Functor> {
    let (one, i, z) = (terminal(), interval(), z2());
    let d2 = discrete(2);
    let iz = coproduct(&i, &z);
    vec![
        bang(&i),
        bang(&z),
        gen_j(),
        Functor::identity(&i),
        Functor::constant(&d2, &i, 1),
        iz.i1.clone(),
        iz.i2.clone(),
        Functor::constant(&one, &z, 0),
    ]
}

fn iso(name: &str) -> Functor {
    isofibrations().into_iter().find(|(n, _)| n == name).unwrap().1
}

#[test]
fn trivial_factorization_on_groupoids() {
    let aw = Trivial(CatAmbient);
    let arrows = groupoid_arrows();
    let sq = square_corpus(&arrows, 3);
    assert!(!sq.is_empty());
    assert!(validate_awfs(&aw, &arrows, &sq).is_empty());
}

#[test]
fn cylinder_on_fifty_functors() {
    let cof = CofAwfs::new();
    let corpus = functor_corpus(1, 50);
    let sq = square_corpus(&corpus, 2);
    assert!(validate_awfs(&cof, &corpus, &sq).is_empty());
}

#[test]
fn wrong_delta_breaks_coassociativity() {
    let aw = WrongLeg(CofAwfs::new());
    let report = validate_awfs(&aw, &functor_corpus(1, 10), &[]);
    assert!(report.iter().any(|v| v.law == "coassociativity"), "{report:?}");
}

#[test]
fn free_structures_validate() {
    let (cof, triv) = (CofAwfs::new(), TrivCofAwfs::new());
    for f in functor_corpus(2, 20) {
        assert!(coalg_validate(&cof, &free_coalg(&cof, &f).unwrap()).is_empty());
        assert!(alg_validate(&cof, &free_alg(&cof, &f).unwrap()).is_empty());
        assert!(coalg_validate(&triv, &free_coalg(&triv, &f).unwrap()).is_empty());
        assert!(alg_validate(&triv, &free_alg(&triv, &f).unwrap()).is_empty());
    }
}

#[test]
fn bad_section_is_located() {
    let cof = CofAwfs::new();
    let f = gen_j();
    let q = cof.cyl(&f);
    // every object to the B-side: R f ∘ s = 1 but s ∘ f ≠ C f
    let s = Functor::lift_into(&q.mid, vec![1, 2], &Functor::identity(f.tgt()));
    assert_eq!(cof.r(&f).unwrap().after(&s).unwrap(), Functor::identity(f.tgt()));
    let report = coalg_validate(&cof, &Coalgebra { f, s });
    let laws: Vec<&str> = report.iter().map(|v| v.law.as_str()).collect();
    assert_eq!(laws, ["coalgebra s.f = Lf", "coalgebra delta.s = E(1,s).s"]);
}

#[test]
fn chosen_lifts_of_the_structure_squares() {
    let cof = CofAwfs::new();
    let amb = CatAmbient;
    for f in functor_corpus(4, 30).into_iter().filter(|f| f.is_injective_on_objects()) {
        let c = unique_coalg(&cof, &f).unwrap();
        let free = free_alg(&cof, &f).unwrap();
        let sq = Square::new(&f, &free.g, &cof.l(&f).unwrap(), &amb.id(f.tgt()));
        assert_eq!(chosen_lift(&cof, &c, &free, &sq).unwrap(), c.s);
    }
    let triv = TrivCofAwfs::new();
    for (_, g) in isofibrations() {
        for a in trivcof_algebras(&triv, &g, ALG_LIMIT).unwrap().iter().take(8) {
            let fc = free_coalg(&triv, &g).unwrap();
            let sq = Square::new(&fc.f, &g, &amb.id(g.src()), &triv.r(&g).unwrap());
            assert_eq!(chosen_lift(&triv, &fc, a, &sq).unwrap(), a.t);
        }
    }
}

#[test]
fn lift_of_an_identity_against_itself() {
    let cof = CofAwfs::new();
    let amb = CatAmbient;
    for b in [interval(), z2(), discrete(2)] {
        let f = Functor::identity(&b);
        let c = unique_coalg(&cof, &f).unwrap();
        let a = Algebra { g: f.clone(), t: cof.r(&f).unwrap() };
        assert!(alg_validate(&cof, &a).is_empty());
        let d = chosen_lift(&cof, &c, &a, &id_square(&amb, &f)).unwrap();
        assert_eq!(d.after(&f).unwrap(), f);
        assert_eq!(f.after(&d).unwrap(), f);
    }
}

#[test]
fn lift_rejects_foreign_squares() {
    let cof = CofAwfs::new();
    let amb = CatAmbient;
    let j = gen_j();
    let c = unique_coalg(&cof, &j).unwrap();
    let a = free_alg(&cof, &j).unwrap();
    assert!(chosen_lift(&cof, &c, &a, &id_square(&amb, &j)).is_err());
}

#[test]
fn composing_with_an_identity_coalgebra() {
    let cof = CofAwfs::new();
    for f in functor_corpus(6, 30).into_iter().filter(|f| f.is_injective_on_objects()) {
        let c = unique_coalg(&cof, &f).unwrap();
        let id = unique_coalg(&cof, &Functor::identity(f.tgt())).unwrap();
        let after = coalg_compose(&cof, &c, &id).unwrap();
        assert_eq!(after, c);
        let id = unique_coalg(&cof, &Functor::identity(f.src())).unwrap();
        assert_eq!(coalg_compose(&cof, &id, &c).unwrap(), c);
    }
}

#[test]
fn composite_coalgebras_validate() {
    let (cof, triv) = (CofAwfs::new(), TrivCofAwfs::new());
    let inj: Vec<Functor> = functor_corpus(6, 60).into_iter().filter(|f| f.is_injective_on_objects()).collect();
    let mut n = 0;
    for f in &inj {
        for g in inj.iter().filter(|g| awfs_core::fincat::same_cat(f.tgt(), g.src())) {
            let gf = coalg_compose(&cof, &unique_coalg(&cof, f).unwrap(), &unique_coalg(&cof, g).unwrap()).unwrap();
            assert!(coalg_validate(&cof, &gf).is_empty());
            assert_eq!(gf, unique_coalg(&cof, &gf.f).unwrap());
            n += 1;
        }
    }
    assert!(n > 0);
    let fj = free_coalg(&triv, &gen_j()).unwrap();
    let fl = free_coalg(&triv, &triv.r(&gen_j()).unwrap()).unwrap();
    assert!(coalg_validate(&triv, &coalg_compose(&triv, &fj, &fl).unwrap()).is_empty());
}

#[test]
fn composing_with_free_algebras() {
    let triv = TrivCofAwfs::new();
    for (name, g) in isofibrations() {
        let free_src = free_alg(&triv, &Functor::identity(g.src())).unwrap();
        for a in trivcof_algebras(&triv, &g, ALG_LIMIT).unwrap().iter().take(8) {
            assert!(alg_validate(&triv, &alg_compose(&triv, &free_src, a).unwrap()).is_empty(), "{name}");
        }
        let id_tgt = trivcof_algebras(&triv, &Functor::identity(g.tgt()), 2).unwrap();
        let fr = free_alg(&triv, &g).unwrap();
        assert!(alg_validate(&triv, &alg_compose(&triv, &fr, &id_tgt[0]).unwrap()).is_empty(), "{name}");
    }
}

#[test]
fn algebra_composition_is_associative() {
    let triv = TrivCofAwfs::new();
    let (f, g, h) = (iso("swapI"), iso("idI"), iso("I->1"));
    let algs = |x: &Functor| trivcof_algebras(&triv, x, ALG_LIMIT).unwrap();
    let mut n = 0;
    for a in algs(&f) {
        for b in algs(&g) {
            for c in algs(&h) {
                let l = alg_compose(&triv, &alg_compose(&triv, &a, &b).unwrap(), &c).unwrap();
                let r = alg_compose(&triv, &a, &alg_compose(&triv, &b, &c).unwrap()).unwrap();
                assert_eq!(l, r);
                assert!(alg_validate(&triv, &l).is_empty());
                n += 1;
            }
        }
    }
    assert_eq!(n, 3);
}

#[test]
fn identity_arrow_lifts_by_the_bottom_edge() {
    let triv = TrivCofAwfs::new();
    let gens = j_generators(&triv);
    for b in [interval(), z2()] {
        let id = Functor::identity(&b);
        let algs = trivcof_algebras(&triv, &id, 4).unwrap();
        assert_eq!(algs.len(), 1);
        let phi = alg_to_liftfun(&triv, &algs[0], &gens).unwrap();
        assert!(!phi.entries.is_empty());
        assert!(phi.entries.iter().all(|e| e.diag == e.b));
    }
}

#[test]
fn identity_is_an_awfs_morphism() {
    let cof = CofAwfs::new();
    let corpus = functor_corpus(8, 20);
    let sq = square_corpus(&corpus, 2);
    let report = awfs_morphism_validate(&cof, &cof, |f| Ok(Functor::identity(&cof.cyl(f).mid)), &corpus, &sq);
    assert!(report.is_empty());
}

#[test]
fn direct_criterion_and_its_mutation() {
    let triv = TrivCofAwfs::new();
    let gens = j_generators(&triv);
    let (f, g) = (iso("pr1:IxI->I"), iso("I->1"));
    let (af, ag) = (trivcof_algebras(&triv, &f, ALG_LIMIT).unwrap(), trivcof_algebras(&triv, &g, ALG_LIMIT).unwrap());
    let pairs: Vec<_> = af.iter().take(6).flat_map(|a| ag.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let assign = |_: &(), a: &Algebra<Functor>| alg_to_liftfun(&triv, a, &gens);
    assert!(composition_criterion_check(&triv, &Direct, &[()], &pairs, assign).is_empty());
    // answer composite problems with a fixed algebra on g∘f instead of the composite
    let gf = g.after(&f).unwrap();
    let all = trivcof_algebras(&triv, &gf, ALG_LIMIT).unwrap();
    let mutated = |_: &(), a: &Algebra<Functor>| {
        if a.g == gf {
            let c = alg_compose(&triv, &pairs[0].0, &pairs[0].1)?;
            let other = all.iter().find(|b| b.t != c.t).unwrap();
            alg_to_liftfun(&triv, other, &gens)
        } else {
            alg_to_liftfun(&triv, a, &gens)
        }
    };
    let report = composition_criterion_check(&triv, &Direct, &[()], &pairs[..1], mutated);
    assert_eq!(report.len(), 1);
    assert!(report[0].ids.contains(&"pair 0".to_string()));
}

#[test]
fn e_preserves_composite_squares() {
    let cof = CofAwfs::new();
    let amb = CatAmbient;
    let f = bang(&discrete(2));
    let sqs = squares(&amb, &f, &f, 100);
    for a in &sqs {
        for b in &sqs {
            let c = awfs_core::arrowcat::compose_h(&amb, a, b).unwrap();
            assert_eq!(cof.e_sq(&c).unwrap(), cof.e_sq(b).unwrap().after(&cof.e_sq(a).unwrap()).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn factorizations_compose_back(seed in 0u64..1000) {
        let (cof, triv) = (CofAwfs::new(), TrivCofAwfs::new());
        for f in functor_corpus(seed, 6) {
            for (l, r) in [(cof.l(&f).unwrap(), cof.r(&f).unwrap()), (triv.l(&f).unwrap(), triv.r(&f).unwrap())] {
                prop_assert_eq!(r.after(&l).unwrap(), f.clone());
            }
            prop_assert!(coalg_validate(&triv, &free_coalg(&triv, &f).unwrap()).is_empty());
            prop_assert!(alg_validate(&cof, &free_alg(&cof, &f).unwrap()).is_empty());
        }
    }
}
