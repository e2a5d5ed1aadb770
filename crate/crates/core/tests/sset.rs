use std::sync::Arc;

use awfs_core::sset::*;
use awfs_core::{Error, Label};
use proptest::prelude::*;

const D: usize = DEFAULT_DIM;

fn nd(x: &FinSSet) -> Vec<usize> {
    (0..=x.dim()).map(|n| x.nondegenerate(n).len()).collect()
}

fn seq(v: &[u32]) -> Label {
    Label::tup(v.iter().map(|&x| Label::int(x)))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing chains of length p+q+1 in [p]×[q], by brute force.
fn maximal_chains(p: u32, q: u32) -> usize {
    fn go(cur: (u32, u32), len: usize, p: u32, q: u32) -> usize {
        if len == (p + q + 1) as usize {
            return 1;
        }
        let mut c = 0;
        for a in cur.0..=p {
            for b in cur.1..=q {
                if (a, b) != cur {
                    c += go((a, b), len + 1, p, q);
                }
            }
        }
        c
    }
    go((0, 0), 1, p, q)
}

#[test]
fn standard_models() {
    assert_eq!(nd(&delta(1, D).unwrap())[..2], [2, 1]);
    let b2 = boundary(2, D).unwrap();
    assert_eq!(nd(&b2)[1..3], [3, 0]);
    let h21 = horn(2, 1, D).unwrap();
    let missing: Vec<Label> = b2.nondegenerate(1).into_iter().map(|x| b2.label(1, x).clone()).filter(|l| h21.find(1, l).is_none()).collect();
    assert_eq!(missing, vec![seq(&[0, 2])]);
    assert_eq!(nd(&h21)[..3], [3, 2, 0]);
    assert!(matches!(horn(2, 3, D), Err(Error::OutOfRange(_))));
    assert!(matches!(delta(5, D), Err(Error::BoundExceeded(_))));
}

#[test]
fn degenerate_marks_match_repeated_vertices() {
    for x in [delta(3, D).unwrap(), horn(3, 1, D).unwrap(), boundary(2, D).unwrap()] {
        for n in 0..=D {
            for s in x.simplices(n) {
                let q = x.seq(n, s).unwrap();
                assert_eq!(x.is_degenerate(n, s), q.windows(2).any(|w| w[0] == w[1]));
            }
        }
    }
}

#[test]
fn shuffle_counts() {
    for p in 0..=4usize {
        for q in 0..=4 - p {
            let x = sset_product(&delta(p, D).unwrap(), &delta(q, D).unwrap()).unwrap();
            let top = x.obj.nondegenerate(p + q).len();
            assert_eq!(top, maximal_chains(p as u32, q as u32), "Δ{p}×Δ{q}");
            assert_eq!(top, binom(p + q, p));
            assert!(validate_sset(&x.obj).is_empty());
        }
    }
    let x = sset_product(&delta(1, D).unwrap(), &delta(1, D).unwrap()).unwrap();
    assert_eq!(x.obj.nondegenerate(2).len(), 2);
    let x = sset_product(&delta(1, D).unwrap(), &delta(2, D).unwrap()).unwrap();
    assert_eq!(x.obj.nondegenerate(3).len(), 3);
}

#[test]
fn pushout_along_empty_is_coproduct() {
    let (e, a, b) = (empty(D), delta(1, D).unwrap(), horn(2, 0, D).unwrap());
    let m = SimplicialMap::by_labels(&e, &a).unwrap();
    let g = SimplicialMap::by_labels(&e, &b).unwrap();
    let po = sset_pushout(&m, &g).unwrap();
    for n in 0..=D {
        assert_eq!(po.obj.count(n), a.count(n) + b.count(n));
    }
    assert!(validate_sset(&po.obj).is_empty());
    assert!(validate_map(&po.inl).is_empty() && validate_map(&po.inr).is_empty());
}

#[test]
fn pushout_product_unit() {
    let c = SimplicialMap::by_labels(&empty(D), &delta(0, D).unwrap()).unwrap();
    for j in [horn_inclusion(2, 1, D).unwrap(), sphere_inclusion(1, D).unwrap()] {
        let p = sset_pp(&c, &j).unwrap();
        for n in 0..=D {
            assert_eq!(p.arrow.src.count(n), j.src.count(n));
            assert_eq!(p.arrow.tgt.count(n), j.tgt.count(n));
        }
        assert!(p.arrow.is_mono() && validate_map(&p.arrow).is_empty());
    }
}

#[test]
fn square_minus_diagonal() {
    let p = sset_pp(&horn_inclusion(1, 0, D).unwrap(), &sphere_inclusion(1, D).unwrap()).unwrap();
    assert_eq!(nd(&p.arrow.src)[..3], [4, 3, 0]);
    assert_eq!(nd(&p.arrow.tgt)[..3], [4, 5, 2]);
    let mut edges: Vec<String> = p.arrow.src.nondegenerate(1).into_iter().map(|x| p.arrow.tgt.label(1, p.arrow.at(1, x)).to_string()).collect();
    edges.sort();
    assert_eq!(edges, ["((0,0),(0,1))", "((0,1),(0,0))", "((0,1),(1,1))"]);
}

#[test]
fn trough_shape() {
    let p = sset_pp(&horn_inclusion(1, 0, D).unwrap(), &horn_inclusion(2, 1, D).unwrap()).unwrap();
    let y = &p.arrow.tgt;
    let img = image(&p.arrow);
    let has = |l: Label| img[2][y.find(2, &l).unwrap() as usize];
    assert!(!has(Label::pair(seq(&[1, 1, 1]), seq(&[0, 1, 2]))));
    assert!(has(Label::pair(seq(&[0, 0, 0]), seq(&[0, 1, 2]))));
    for (a, b) in [([0, 0, 1], [0, 2, 2]), ([0, 1, 1], [0, 0, 2])] {
        assert!(!has(Label::pair(seq(&a), seq(&b))));
    }
    for (a, b) in [([0, 0, 1], [0, 1, 1]), ([0, 1, 1], [1, 1, 2])] {
        assert!(has(Label::pair(seq(&a), seq(&b))));
    }
    assert_eq!(p.arrow.src.nondegenerate(3).len(), 0);
}

#[test]
fn icellular_examples() {
    let c = mono_icellular(&sphere_inclusion(2, D).unwrap());
    assert_eq!(c.steps, vec![Step { gen: Generator::sphere(2), cell: c.m.tgt.find(2, &seq(&[0, 1, 2])).unwrap() }]);
    assert!(certificate_verify(&c).is_empty());

    let c = mono_icellular(&horn_inclusion(2, 1, D).unwrap());
    let y = &c.m.tgt;
    let shown: Vec<(usize, Label)> = c.steps.iter().map(|s| (s.gen.n, y.label(s.gen.n, s.cell).clone())).collect();
    assert_eq!(shown, vec![(1, seq(&[0, 2])), (2, seq(&[0, 1, 2]))]);
    assert!(c.steps.iter().all(|s| s.gen.kind == GenKind::Sphere));
    assert!(certificate_verify(&c).is_empty());

    let c = mono_icellular(&SimplicialMap::by_labels(&empty(D), &boundary(1, D).unwrap()).unwrap());
    assert_eq!(c.steps.len(), 2);
    assert!(c.steps.iter().all(|s| s.gen == Generator::sphere(0)));
    assert!(certificate_verify(&c).is_empty());
}

#[test]
fn swapped_steps_fail_at_offending_step() {
    let mut c = mono_icellular(&horn_inclusion(2, 1, D).unwrap());
    c.steps.swap(0, 1);
    let r = certificate_verify(&c);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].ids[0], "step 0");
}

#[test]
fn icellular_unique_up_to_same_dimension_order() {
    let m = SimplicialMap::by_labels(&empty(D), &delta(2, D).unwrap()).unwrap();
    let c = mono_icellular(&m);
    assert_eq!(c, mono_icellular(&m));
    let by_dim: Vec<Vec<Step>> = (0..=2).map(|n| c.steps.iter().copied().filter(|s| s.gen.n == n).collect()).collect();
    fn perms(v: &[Step]) -> Vec<Vec<Step>> {
        if v.is_empty() {
            return vec![vec![]];
        }
        (0..v.len())
            .flat_map(|i| {
                let mut rest = v.to_vec();
                let x = rest.remove(i);
                perms(&rest).into_iter().map(move |mut p| {
                    p.insert(0, x);
                    p
                })
            })
            .collect()
    }
    let mut count = 0;
    for p0 in perms(&by_dim[0]) {
        for p1 in perms(&by_dim[1]) {
            let steps = [p0.clone(), p1, by_dim[2].clone()].concat();
            assert!(certificate_verify(&CellularCertificate { steps, ..c.clone() }).is_empty());
            count += 1;
        }
    }
    assert_eq!(count, 36);
    // an edge before its vertices is not a pushout
    let mut bad = c.clone();
    bad.steps.swap(1, 3);
    assert!(!certificate_verify(&bad).is_empty());
}

#[test]
fn anodyne_unit_case() {
    let c = anodyne_certificate(1, 0, 0).unwrap();
    assert_eq!(c.steps.len(), 1);
    assert_eq!(c.steps[0].gen, Generator::horn(1, 0));
}

#[test]
fn anodyne_paper_order() {
    let c = anodyne_certificate(1, 0, 1).unwrap();
    let y = &c.m.tgt;
    let pinned = vec![
        Step { gen: Generator::horn(2, 1), cell: y.find(2, &Label::pair(seq(&[0, 0, 1]), seq(&[0, 1, 1]))).unwrap() },
        Step { gen: Generator::horn(2, 0), cell: y.find(2, &Label::pair(seq(&[0, 1, 1]), seq(&[0, 0, 1]))).unwrap() },
    ];
    assert_eq!(c.steps, pinned);
    assert!(certificate_verify(&CellularCertificate { steps: pinned.into_iter().rev().collect(), ..c.clone() }).len() == 1);
}

#[test]
fn anodyne_table_verifies() {
    for (n, k, m) in supported_table() {
        let c = anodyne_certificate(n, k, m).unwrap();
        assert!(certificate_verify(&c).is_empty(), "({n},{k},{m})");
        assert!(c.steps.iter().all(|s| s.gen.kind == GenKind::Horn));
        // one horn adds exactly two nondegenerate simplices
        let missing: usize = (0..=D).map(|d| c.m.tgt.nondegenerate(d).len() - c.m.src.nondegenerate(d).len()).sum();
        assert_eq!(2 * c.steps.len(), missing, "({n},{k},{m})");
        assert!(kan_spot_check(&c, 7, 2).is_empty(), "({n},{k},{m})");
    }
}

#[test]
fn search_budget_exhausts() {
    assert!(matches!(anodyne_certificate_at(2, 1, 2, D, 3), Err(Error::SearchExhausted(_))));
    // a sphere inclusion is not anodyne
    assert!(matches!(horn_search(&sphere_inclusion(1, D).unwrap(), 100), Err(Error::SearchExhausted(_))));
}

#[test]
fn trough_structures_differ() {
    let r = trough_demo().unwrap();
    assert!(r.a_report.is_empty(), "{:?}", r.a_report);
    assert!(r.b_report.is_empty(), "{:?}", r.b_report);
    assert_ne!(r.a.steps, r.b.steps);
    assert_eq!(r.divergence, Some(0));
    assert_eq!((r.a_end_dim, r.b_end_dim), (Some(2), Some(3)));
    assert_eq!(r.a.steps.len(), r.b.steps.len());
    assert_eq!(r.to_json()["b_end_dim"], 3);
}

#[test]
fn certificate_json_shape() {
    let c = anodyne_certificate(1, 0, 1).unwrap();
    let j = c.to_json();
    assert_eq!(j["kind"], "horn");
    assert_eq!(j["steps"][0]["generator"], serde_json::json!({"kind": "horn", "n": 2, "k": 1}));
    // Λ²₁ has two nondegenerate edges
    assert_eq!(j["steps"][0]["attaching"][1].as_array().unwrap().len(), 2);
}

#[test]
fn bz2_is_a_simplicial_set() {
    let e = bz2(D);
    assert!(validate_sset(&e).is_empty());
    assert_eq!(nd(&e), vec![1, 1, 1, 1, 1]);
    assert!(validate_sset(&codiscrete(2, D)).is_empty());
}

fn random_sub(n: usize, faces: &[u32]) -> (Arc<FinSSet>, SimplicialMap) {
    let keep = |q: &[u32]| faces.iter().any(|&f| q.iter().all(|&v| f >> v & 1 == 1));
    let x = Arc::new(nerve(n + 1, |a, b| a <= b, keep, D, |q| seq(q)));
    let m = SimplicialMap::by_labels(&x, &delta(n, D).unwrap()).unwrap();
    (x, m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constructions_satisfy_identities(a in 1usize..3, b in 1usize..3, fa in proptest::collection::vec(0u32..8, 1..3), fb in proptest::collection::vec(0u32..8, 1..3)) {
        let (xa, ia) = random_sub(a, &fa);
        let (xb, ib) = random_sub(b, &fb);
        prop_assert!(validate_sset(&xa).is_empty());
        prop_assert!(validate_map(&ia).is_empty());
        let p = sset_product(&xa, &xb).unwrap();
        prop_assert!(validate_sset(&p.obj).is_empty());
        let pp = sset_pp(&ia, &ib).unwrap();
        prop_assert!(pp.arrow.is_mono());
        prop_assert!(validate_sset(&pp.po.obj).is_empty());
        prop_assert!(validate_map(&pp.arrow).is_empty());
        prop_assert!(certificate_verify(&mono_icellular(&pp.arrow)).is_empty());
    }
}
