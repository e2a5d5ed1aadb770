use std::sync::Arc;

use awfs_core::arrowcat::{Ambient, CatAmbient, Square};
use awfs_core::awfs::{alg_validate, coalg_validate, validate_awfs, Algebra, Awfs};
use awfs_core::catfolk::*;
use awfs_core::fincat::FunctorSearch;
use awfs_core::{Error, Functor};
use proptest::prelude::*;

fn awfs_pair() -> (CofAwfs, TrivCofAwfs) {
    (CofAwfs::new(), TrivCofAwfs::new())
}

#[test]
fn generator_table_witnesses_commute() {
    let rows = generator_table().unwrap();
    assert_eq!(rows.len(), 3);
    let j = gen_j();
    for (row, (_, i)) in rows.iter().zip(generator_set_i()) {
        let (u, v) = row.witness.clone().unwrap_or_else(|| panic!("{} has no witness", row.name));
        let p = pp(&i, &j).unwrap();
        let target = if row.expected == "j" { j.clone() } else { Functor::identity(p.arrow.tgt()) };
        assert_eq!(v.after(&p.arrow).unwrap(), target.after(&u).unwrap(), "{}", row.name);
        assert!(u.is_iso() && v.is_iso());
    }
}

#[test]
fn pushout_product_shapes() {
    let j = gen_j();
    let pc = pp(&gen_c(), &j).unwrap();
    assert_eq!((pc.arrow.src().n_obj(), pc.arrow.tgt().n_obj()), (1, 2));
    for i in [gen_d(), gen_e()] {
        let p = pp(&i, &j).unwrap();
        assert_eq!((p.arrow.src().n_obj(), p.arrow.src().n_mor()), (4, 12));
        assert!(p.arrow.is_iso());
    }
}

#[test]
fn both_awfs_validate_on_corpus() {
    let (cof, triv) = awfs_pair();
    let corpus = functor_corpus(11, 25);
    assert_eq!(corpus.len(), 25);
    let sq = square_corpus(&corpus, 2);
    assert!(validate_awfs(&cof, &corpus, &sq).is_empty());
    assert!(validate_awfs(&triv, &corpus, &sq).is_empty());
}

/// Independent oracle: every functor s : B → Q f with R f ∘ s = 1 and
/// s ∘ f = C f, filtered by the coalgebra laws.
fn coalgebras_by_search(cof: &CofAwfs, f: &Functor) -> usize {
    let q = cof.cyl(f);
    let mut search = FunctorSearch::new(f.tgt(), &q.mid);
    for a in f.src().objects() {
        search = search.fix_obj(f.ob(a), q.left.ob(a));
    }
    search
        .run()
        .into_iter()
        .filter(|s| q.right.after(s).is_ok_and(|r| r == Functor::identity(f.tgt())))
        .filter(|s| s.after(f).is_ok_and(|sf| sf == q.left))
        .filter(|s| coalg_validate(cof, &awfs_core::awfs::Coalgebra { f: f.clone(), s: s.clone() }).is_empty())
        .count()
}

#[test]
fn unique_coalgebra_matches_search() {
    let (cof, _) = awfs_pair();
    let corpus = functor_corpus(3, 30);
    let (inj, non, report) = unique_coalg_census(&cof, &corpus);
    assert!(report.is_empty(), "{report:?}");
    assert!(inj > 0 && non > 0);
    for f in corpus.iter().filter(|f| f.tgt().n_obj() <= 3) {
        let expected = usize::from(f.is_injective_on_objects());
        assert_eq!(coalgebras_by_search(&cof, f), expected);
    }
    assert!(matches!(unique_coalg(&cof, &fold()), Err(Error::NotCofibration(_))));
}

#[test]
fn xi_formula_is_the_only_lawful_candidate_at_j() {
    let (cof, triv) = awfs_pair();
    let j = gen_j();
    let cands = xi_candidates_at(&cof, &triv, &j).unwrap();
    assert_eq!(cands.len(), 2);
    let good: Vec<_> = cands.iter().filter(|(_, v)| *v == 0).collect();
    assert_eq!(good.len(), 1);
    assert_eq!(good[0].0, xi_direct(&cof, &triv, &j).unwrap());
    assert_eq!(xi_chosen(&cof, &triv, &j).unwrap(), good[0].0);
}

#[test]
fn xi_is_a_morphism_of_awfs() {
    let (cof, triv) = awfs_pair();
    let corpus = functor_corpus(5, 20);
    let sq = square_corpus(&corpus, 2);
    assert!(xi_validate(&cof, &triv, &corpus, &sq).is_empty());
    let (_, diffs) = comparison_xi(&cof, &triv, &corpus).unwrap();
    assert!(diffs.is_empty());
}

#[test]
fn iso_comma_has_no_natural_comparison() {
    let (cof, _) = awfs_pair();
    assert_eq!(iso_comma_xi_obstruction(&cof).unwrap(), 0);
}

#[test]
fn lifted_structures_validate() {
    let (_, triv) = awfs_pair();
    let cj = j_coalg(&triv);
    assert!(coalg_validate(&triv, &cj).is_empty());
    for (name, i) in generator_set_i().into_iter().chain(generator_set_j()) {
        for first in [true, false] {
            let c = lifted_pp(&triv, &i, &cj, first).unwrap();
            assert!(coalg_validate(&triv, &c).is_empty(), "{name} {first}");
        }
    }
    assert!(matches!(lifted_pp(&triv, &fold(), &cj, true), Err(Error::NotCofibration(_))));
}

#[test]
fn coalg_pushout_rejects_non_pushouts() {
    let (cof, _) = awfs_pair();
    let c = gen_c();
    let cc = unique_coalg(&cof, &c).unwrap();
    let j = gen_j();
    let u = Functor::constant(c.src(), j.src(), 0);
    let v = Functor::constant(c.tgt(), j.tgt(), 0);
    let r = coalg_pushout(&cof, &cc, &Square::new(&c, &j, &u, &v));
    assert!(matches!(r, Err(Error::NotPushout(_))), "{r:?}");
    let id1 = Functor::identity(c.tgt());
    let same = coalg_pushout(&cof, &cc, &Square::new(&c, &c, &Functor::identity(c.src()), &id1)).unwrap();
    assert_eq!(same.s, cc.s);
}

#[test]
fn coherence_at_j_j_differs() {
    let (cof, triv) = awfs_pair();
    let report = coherence_check(&cof, &triv).unwrap();
    let laws: Vec<&str> = report.iter().map(|v| v.law.as_str()).collect();
    assert_eq!(laws, ["coherence at (j, j)"]);
}

/// Independent oracle: all functors E g → A passing the algebra laws.
fn algebras_by_search(triv: &TrivCofAwfs, g: &Functor) -> usize {
    let e = triv.ext(g);
    FunctorSearch::new(e.mid(), g.src())
        .run()
        .into_iter()
        .filter(|t| alg_validate(triv, &Algebra { g: g.clone(), t: t.clone() }).is_empty())
        .count()
}

#[test]
fn algebra_counts() {
    let (_, triv) = awfs_pair();
    let isos = isofibrations();
    let get = |n: &str| isos.iter().find(|(k, _)| k == n).map(|(_, f)| (n.to_string(), f.clone())).unwrap();
    let arrows = vec![get("I->1"), get("z2->1"), get("idI"), get("I+1->1")];
    for (_, g) in &arrows {
        assert_eq!(trivcof_algebras(&triv, g, ALG_LIMIT).unwrap().len(), algebras_by_search(&triv, g));
    }
    let (rows, report) = algebra_liftfun_correspondence(&triv, &arrows).unwrap();
    let counts: Vec<(usize, usize, usize)> = rows.iter().map(|r| (r.algebras, r.pointed_algebras, r.lifting_functions)).collect();
    assert_eq!(counts, [(3, 4, 4), (1, 2, 2), (1, 1, 1), (3, 4, 4)]);
    assert_eq!(report.len(), 3);
    assert!(report.iter().all(|v| v.law.contains("surjective")));
}

#[test]
fn non_isofibration_has_no_algebra() {
    let (_, triv) = awfs_pair();
    let j = gen_j();
    assert!(trivcof_algebras(&triv, &j, ALG_LIMIT).unwrap().is_empty());
    let gens = j_generators(&triv);
    assert!(j_lifting_functions(&gens.gens, &j, ALG_LIMIT).unwrap().is_empty());
}

#[test]
fn lifting_composite_algebras() {
    let (_, triv) = awfs_pair();
    let pairs = algebra_pairs(&triv).unwrap();
    assert!(pairs.len() >= 20);
    assert!(lift_preserves_composition(&triv, &pairs).is_empty());
}

#[test]
fn hom_side_criterion_and_mutation() {
    let triv = Arc::new(TrivCofAwfs::new());
    let pairs: Vec<_> = algebra_pairs(&triv).unwrap().into_iter().step_by(5).collect();
    assert!(hom_side_criterion(&triv, &pairs, |_| None).is_empty());
    let mutated = hom_side_mutation(&triv).unwrap();
    assert!(!mutated.is_empty());
    assert_eq!(mutated[0].law, "composition criterion");
}

#[test]
fn hom_side_at_c_is_the_arrow_itself() {
    let side = CatHomSide::new();
    let g = isofibrations().remove(0).1;
    let h = side.hat(&gen_c(), &g).unwrap();
    assert_eq!((h.arrow.src().n_obj(), h.arrow.tgt().n_obj()), (g.src().n_obj(), g.tgt().n_obj()));
}

#[test]
fn corpus_is_deterministic_and_bounded() {
    let a = functor_corpus(9, 40);
    let b = functor_corpus(9, 40);
    assert_eq!(a, b);
    for c in categories(9, 6) {
        assert!(c.n_obj() <= MAX_OBJ && c.n_mor() <= MAX_MOR);
    }
    let amb = CatAmbient;
    assert!(a.iter().all(|f| !amb.describe(f).is_empty()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn cylinder_factors_and_validates(seed in 0u64..1000) {
        let (cof, triv) = awfs_pair();
        let corpus = functor_corpus(seed, 6);
        for f in &corpus {
            prop_assert_eq!(cof.r(f).unwrap().after(&cof.l(f).unwrap()).unwrap(), f.clone());
            prop_assert_eq!(triv.r(f).unwrap().after(&triv.l(f).unwrap()).unwrap(), f.clone());
        }
        prop_assert!(validate_awfs(&cof, &corpus, &[]).is_empty());
        prop_assert!(xi_validate(&cof, &triv, &corpus, &[]).is_empty());
    }

    #[test]
    fn injective_functors_get_valid_structures(seed in 0u64..1000) {
        let (cof, _) = awfs_pair();
        for f in functor_corpus(seed, 8).iter().filter(|f| f.is_injective_on_objects()) {
            let c = unique_coalg(&cof, f).unwrap();
            prop_assert!(coalg_validate(&cof, &c).is_empty());
        }
    }
}
