use std::sync::Arc;

use awfs_core::fincat::{self, basic, Bound, FinCat, Functor};
use awfs_core::Label;
use proptest::prelude::*;

fn bang(a: &Arc<FinCat>) -> Functor {
    Functor::constant(a, &basic::terminal(), 0)
}

/// j : 1 → 𝐈 picking 0
fn j() -> Functor {
    Functor::constant(&basic::terminal(), &basic::interval(), 0)
}

/// A category with one deliberately broken composite (g∘e)∘f ≠ g∘(e∘f).
fn broken() -> FinCat {
    let names = ["id0", "id1", "id2", "f", "f2", "g", "e", "h1", "h2"];
    let ends = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 1), (1, 2), (1, 1), (0, 2), (0, 2)];
    let mors = names.iter().zip(ends).map(|(n, (d, c))| (Label::from(*n), d, c)).collect();
    let objs = (0..3).map(Label::int).collect();
    FinCat::from_parts(objs, mors, vec![0, 1, 2], |g, f| match (names[g], names[f]) {
        (_, "id0" | "id1" | "id2") => g,
        ("id0" | "id1" | "id2", _) => f,
        ("e", "f") | ("e", "f2") => 4,
        ("e", "e") => 6,
        ("g", "e") => 5,
        ("g", "f") => 7,
        ("g", "f2") => 8,
        (a, b) => panic!("not composable: {a} {b}"),
    })
}

#[test]
fn basic_categories_validate() {
    for c in [
        basic::terminal(),
        basic::empty(),
        basic::arrow(),
        basic::interval(),
        basic::chain(4),
        basic::indiscrete(3),
        basic::z2(),
        basic::idempotent(),
        basic::parallel_pair(),
    ] {
        assert!(fincat::validate_category(&c).is_empty(), "{:?}", c.obj_labels());
    }
    assert_eq!(basic::arrow().n_mor(), 3);
}

#[test]
fn broken_table_gives_one_associativity_violation() {
    let v = fincat::validate_category(&broken());
    assert_eq!(v.len(), 1, "{v:?}");
    assert_eq!(v[0].law, "associativity");
}

#[test]
fn interval_shape() {
    let i = basic::interval();
    assert_eq!((i.n_obj(), i.n_mor()), (2, 4));
    assert!(i.morphisms().all(|m| i.is_iso(m)));
    assert!(fincat::isomorphic(&i, &fincat::opposite(&i)).is_some());
}

#[test]
fn products_and_coproducts() {
    let (t, a, i) = (basic::terminal(), basic::arrow(), basic::interval());
    let p = fincat::product(&a, &i);
    assert_eq!((p.cat.n_obj(), p.cat.n_mor()), (4, 12));
    assert!(fincat::validate_category(&p.cat).is_empty());
    assert!(fincat::isomorphic(&fincat::product(&t, &i).cat, &i).is_some());
    let c = fincat::coproduct(&basic::empty(), &a);
    assert!(fincat::isomorphic(&c.cat, &a).is_some());
    // pairing of the projections is the identity
    let id = p.pairing(&p.p1, &p.p2).unwrap();
    assert_eq!(id, Functor::identity(&p.cat));
}

#[test]
fn pullback_of_cospan() {
    let a = basic::arrow();
    let f = Functor::identity(&a);
    let pb = fincat::pullback(&f, &f);
    assert!(fincat::validate_category(&pb.cat).is_empty());
    assert!(fincat::isomorphic(&pb.cat, &a).is_some());
}

#[test]
fn exponential_counts() {
    let (t, a, i) = (basic::terminal(), basic::arrow(), basic::interval());
    assert_eq!(fincat::exponential(&a, &a).cat.n_obj(), 3);
    assert_eq!(fincat::exponential(&i, &a).cat.n_obj(), 2);
    let e = fincat::exponential(&t, &i);
    assert!(fincat::isomorphic(&e.cat, &i).is_some());
    assert!(fincat::validate_category(&fincat::exponential(&a, &i).cat).is_empty());
}

#[test]
fn currying_is_a_natural_bijection() {
    let (t, a, i) = (basic::terminal(), basic::arrow(), basic::interval());
    for (k, m, n) in [(&a, &a, &a), (&i, &a, &a), (&a, &i, &a), (&a, &t, &i), (&t, &a, &i)] {
        fincat::adjunction_check(k, m, n).unwrap();
    }
}

fn indiscrete_on(c: &FinCat, n: usize) -> bool {
    c.n_obj() == n && c.objects().all(|x| c.objects().all(|y| c.hom(x, y).len() == 1))
}

#[test]
fn mapping_cylinder_examples() {
    let q = fincat::mapping_cylinder(&bang(&basic::arrow()));
    assert!(indiscrete_on(&q.mid, 3));
    let q = fincat::mapping_cylinder(&Functor::identity(&basic::terminal()));
    assert!(indiscrete_on(&q.mid, 2));
    assert!(fincat::isomorphic(&q.mid, &basic::interval()).is_some());
    let q = fincat::mapping_cylinder(&j());
    assert!(indiscrete_on(&q.mid, 3));
}

#[test]
fn iso_comma_examples() {
    let f = bang(&basic::arrow());
    let p = fincat::iso_comma(&f);
    assert!(fincat::isomorphic(&p.mid, &basic::arrow()).is_some());
    assert!(p.left.is_iso());
    let e = basic::empty();
    let p = fincat::iso_comma(&Functor::constant(&e, &basic::interval(), 0));
    assert_eq!(p.mid.n_obj(), 0);
    let p = fincat::iso_comma(&Functor::identity(&basic::interval()));
    assert_eq!(p.mid.n_obj(), 4);
}

fn corpus_functors() -> Vec<Functor> {
    let cats = [basic::terminal(), basic::arrow(), basic::interval(), basic::z2(), basic::discrete(2), basic::chain(3)];
    let mut out = Vec::new();
    for a in &cats {
        for b in &cats {
            out.extend(fincat::all_functors(a, b).into_iter().take(6));
        }
    }
    out
}

#[test]
fn cylinder_invariants_on_corpus() {
    for f in corpus_functors() {
        let q = fincat::mapping_cylinder(&f);
        assert!(fincat::validate_category(&q.mid).is_empty());
        assert!(q.right.is_full() && q.right.is_faithful());
        assert!(q.left.is_injective_on_objects());
        assert_eq!(q.right.after(&q.left).unwrap(), f);

        let p = fincat::iso_comma(&f);
        assert!(fincat::validate_category(&p.mid).is_empty());
        assert!(fincat::validate_functor(&p.right).is_empty());
        assert_eq!(p.right.after(&p.left).unwrap(), f);

        let (e, _) = fincat::iso_extension(&f);
        assert!(fincat::validate_category(&e.mid).is_empty());
        assert!(fincat::validate_functor(&e.right).is_empty());
        assert_eq!(e.right.after(&e.left).unwrap(), f);
    }
}

#[test]
fn iso_comma_cleavage_is_a_section() {
    // (a, β), γ ↦ (a, γβ) lies over γ
    for f in corpus_functors() {
        let p = fincat::iso_comma(&f);
        let b = f.tgt();
        for x in p.mid.objects() {
            let a = p.mid.proj(x).unwrap();
            let Label::Tag(_, inner) = p.mid.obj_label(x) else { panic!() };
            let Label::Tup(parts) = &**inner else { panic!() };
            let beta = b.find_mor(&parts[1]).unwrap();
            for gamma in b.isos().into_iter().filter(|&g| b.dom(g) == b.cod(beta)) {
                let gb = b.compose(gamma, beta);
                let l = Label::tag("P", Label::pair(f.src().obj_label(a).clone(), b.mor_label(gb)));
                let y = p.mid.find_obj(&l).unwrap();
                let m = p.mid.over(x, y, f.src().id(a));
                assert_eq!(p.right.mor(m), gamma);
            }
        }
    }
}

#[test]
fn pushout_of_empty_span_is_coproduct() {
    let (e, a, i) = (basic::empty(), basic::arrow(), basic::interval());
    let po = fincat::pushout_bounded(&Functor::constant(&e, &a, 0), &Functor::constant(&e, &i, 0), Bound::default())
        .unwrap();
    assert!(fincat::isomorphic(&po.cat, &fincat::coproduct(&a, &i).cat).is_some());
}

#[test]
fn crosswise_pushout_is_capped() {
    let (d, a) = (basic::discrete(2), basic::arrow());
    let f = Functor::from_tables(d.clone(), a.clone(), vec![0, 1], vec![a.id(0), a.id(1)]);
    let g = Functor::from_tables(d.clone(), a.clone(), vec![1, 0], vec![a.id(1), a.id(0)]);
    let err = fincat::pushout_bounded(&f, &g, Bound::default()).unwrap_err();
    assert!(err.is_resource_cap());
    let err = fincat::pushout_bounded(&f, &g, Bound { cap: 50, word_len: 1000 }).unwrap_err();
    assert!(err.is_resource_cap());
}

/// A × 𝐈 ← A → B with a ↦ (a, 1).
fn cylinder_span(f: &Functor) -> (Functor, Functor) {
    let a = f.src();
    let p = fincat::product(a, &basic::interval());
    let one = Functor::constant(a, &basic::interval(), 1);
    (p.pairing(&Functor::identity(a), &one).unwrap(), f.clone())
}

#[test]
fn pushout_recovers_mapping_cylinder() {
    for f in [j(), bang(&basic::arrow()), Functor::identity(&basic::z2())] {
        let (l, r) = cylinder_span(&f);
        let po = fincat::pushout_bounded(&l, &r, Bound::default()).unwrap();
        assert!(fincat::validate_category(&po.cat).is_empty());
        assert_eq!(po.inl.after(&l).unwrap(), po.inr.after(&r).unwrap());
        let q = fincat::mapping_cylinder(&f);
        assert!(fincat::isomorphic(&po.cat, &q.mid).is_some());
    }
}

#[test]
fn pushout_universal_property() {
    let (l, r) = cylinder_span(&j());
    let po = fincat::pushout_bounded(&l, &r, Bound::default()).unwrap();
    for x in [basic::interval(), basic::indiscrete(3), basic::arrow()] {
        po.verify_universal(&l, &r, &x, 200).unwrap();
    }
}

#[test]
fn arrow_iso_examples() {
    let f = j();
    let (u, v) = fincat::arrow_iso(&f, &f).unwrap();
    assert!(u.is_iso() && v.is_iso());
    assert!(fincat::arrow_iso(&f, &Functor::identity(&basic::interval())).is_none());
}

fn small_cat() -> impl Strategy<Value = Arc<FinCat>> {
    prop_oneof![
        Just(basic::terminal()),
        Just(basic::arrow()),
        Just(basic::interval()),
        Just(basic::z2()),
        Just(basic::idempotent()),
        Just(basic::discrete(2)),
        Just(basic::chain(3)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constructions_validate(a in small_cat(), b in small_cat()) {
        prop_assert!(fincat::validate_category(&fincat::product(&a, &b).cat).is_empty());
        prop_assert!(fincat::validate_category(&fincat::coproduct(&a, &b).cat).is_empty());
        prop_assert!(fincat::validate_category(&fincat::exponential(&a, &b).cat).is_empty());
        for f in fincat::all_functors(&a, &b).into_iter().take(4) {
            prop_assert!(fincat::validate_functor(&f).is_empty());
            let q = fincat::mapping_cylinder(&f);
            prop_assert!(q.right.is_full() && q.right.is_faithful());
        }
    }

    #[test]
    fn pushout_cocone_commutes(a in small_cat(), b in small_cat(), seed in 0usize..16) {
        let fs = fincat::all_functors(&a, &b);
        let gs = fincat::all_functors(&a, &basic::indiscrete(2));
        let (f, g) = (&fs[seed % fs.len()], &gs[seed % gs.len()]);
        match fincat::pushout_bounded(f, g, Bound { cap: 2000, word_len: 16 }) {
            Ok(po) => {
                prop_assert!(fincat::validate_category(&po.cat).is_empty());
                prop_assert_eq!(po.inl.after(f).unwrap(), po.inr.after(g).unwrap());
            }
            Err(e) => prop_assert!(e.is_resource_cap()),
        }
    }
}

#[test]
fn objects_are_labelled_deterministically() {
    let q = fincat::mapping_cylinder(&j());
    let names: Vec<String> = q.mid.obj_labels().iter().map(|l| l.to_string()).collect();
    assert_eq!(names, ["A[*]", "B[0]", "B[1]"]);
}
