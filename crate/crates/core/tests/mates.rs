use std::sync::Arc;

use awfs_core::fincat::basic::{chain, discrete, split_idempotent, terminal};
use awfs_core::fincat::{all_functors, exponential, nat_transformations, AdjunctionData, Functor, NatTrans};
use awfs_core::mates::*;
use awfs_core::Error;
use proptest::prelude::*;

fn point(c: &Arc<awfs_core::FinCat>, x: u32) -> Functor {
    Functor::constant(&terminal(), c, x)
}

#[test]
fn pool_adjunctions_validate() {
    let adjs = adjunction_pool();
    assert!(adjs.len() >= 40);
    // chain(2) ⇄ 1: the left adjoint of 2 → 1 picks the bottom
    let found = adjunctions(&terminal(), &chain(2));
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].left.ob(0), 0);
}

#[test]
fn identity_adjunctions_fix_the_cell() {
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
    for (_, c) in mate_pool() {
        for (_, d) in mate_pool().into_iter().take(5) {
            let (l, r) = (AdjunctionData::identity(&c), AdjunctionData::identity(&d));
            for as_left in [true, false] {
                let Some(sq) = random_square(&mut rng, &l, &r, None, None, as_left) else { continue };
                let m = mate_of(&sq).unwrap();
                assert_eq!(m.cell.nat().comp, sq.cell.nat().comp);
                assert_ne!(m.cell.is_left(), sq.cell.is_left());
            }
        }
    }
}

#[test]
fn adjunct_arrows_are_mates() {
    for adj in adjunction_pool().into_iter().filter(|a| a.left.src().n_mor() > 1) {
        let (t, s) = (&adj.left, &adj.right);
        let (m, k) = (t.src(), t.tgt());
        let one = AdjunctionData::identity(&terminal());
        for x in m.objects() {
            for y in k.objects() {
                // hom(Tx, y) ≅ hom(x, Sy), both sides enumerated
                let sharp: Vec<u32> = k.hom(t.ob(x), y).collect();
                let flat: Vec<u32> = m.hom(x, s.ob(y)).collect();
                assert_eq!(sharp.len(), flat.len());
                let (hx, ky) = (point(m, x), point(k, y));
                for &g in &sharp {
                    let cell = NatTrans { src: t.after(&hx).unwrap(), tgt: ky.clone(), comp: vec![g] };
                    let sq = MateSquare { h: hx.clone(), k: ky.clone(), left: one.clone(), right: adj.clone(), cell: Filling::Left(cell) };
                    let f = mate_of(&sq).unwrap().cell.nat().comp[0];
                    assert_eq!(f, m.compose(s.mor(g), adj.unit.at(x)));
                    assert!(flat.contains(&f));
                }
            }
        }
    }
}

#[test]
fn roundtrip_on_corpus() {
    let c = mate_corpus(11, 24);
    assert!(c.squares.len() >= 20);
    for sq in &c.squares {
        assert!(validate_square(sq).is_empty(), "{}", sq.describe());
        assert!(roundtrip_check(sq).is_empty(), "{}", sq.describe());
    }
}

#[test]
fn pasting_on_corpus() {
    let c = mate_corpus(11, 24);
    assert!(c.grids.len() >= 20);
    assert!(c.grids.iter().any(|g| g.len() == 2) && c.grids.iter().any(|g| g[0].len() == 2));
    for g in &c.grids {
        assert!(pasting_check(g).is_empty());
    }
    // 1×1 grids are vacuous
    for sq in c.squares.iter().take(5) {
        assert!(pasting_check(&[vec![sq.clone()]]).is_empty());
    }
}

#[test]
fn pasting_rejects_mismatched_verticals() {
    let c = mate_corpus(5, 8);
    let a = c.squares.iter().find(|s| !same_adjunction(&s.right, &s.left)).unwrap();
    assert!(matches!(paste_h(a, a), Err(Error::NotComposable(_))));
}

#[test]
fn two_by_two_grid() {
    let adj = adjunctions(&terminal(), &chain(2)).remove(0);
    let id2 = AdjunctionData::identity(&chain(2));
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(9);
    let tl = random_square(&mut rng, &adj, &adj, None, None, true).unwrap();
    let tr = random_square(&mut rng, &adj, &adj, None, None, true).unwrap();
    let bl = random_square(&mut rng, &id2, &id2, Some(&tl.k), Some(&tl.k), true).unwrap();
    let br = random_square(&mut rng, &id2, &id2, Some(&tr.k), Some(&tr.k), true).unwrap();
    assert!(pasting_check(&[vec![tl, tr], vec![bl, br]]).is_empty());
}

#[test]
fn lax_mates_are_colax() {
    let lax = lax_corpus(2, 12);
    assert!(lax.len() >= 10);
    for inst in &lax {
        assert!(lax_to_colax_check(inst).is_empty());
    }
    assert!(lax.iter().any(|i| i.adj.left.src().n_mor() > i.adj.left.src().n_obj() * i.adj.left.src().n_obj()));
}

#[test]
fn lax_and_colax_counts_agree() {
    // independent enumeration of colax cells on the other side of the bijection
    for inst in lax_corpus(4, 10) {
        let (t, s) = (&inst.adj.left, &inst.adj.right);
        let colax = nat_transformations(&t.after(&inst.h.h).unwrap(), &inst.k.h.after(t).unwrap())
            .into_iter()
            .filter(|l| colax_report(t, l, &inst.h, &inst.k).is_empty())
            .count();
        let lax = lax_morphisms(&inst.adj, &inst.h, &inst.k).unwrap().len();
        assert_eq!(lax, colax, "{}", s.src().n_obj());
    }
}

#[test]
fn monads_on_split_idempotent() {
    let ms = monads(&split_idempotent());
    assert!(ms.iter().any(|m| m.h == Functor::identity(&split_idempotent())));
    // the idempotent e splits through object 1: the monad s∘r
    assert!(ms.len() >= 2);
}

#[test]
fn identity_shaped_parameterized_mates() {
    let one = terminal();
    let h = all_functors(&awfs_core::fincat::product(&one, &one).cat, &one).remove(0);
    let p = ParamData::new(one.clone(), one.clone(), one.clone(), h);
    for (k, n) in [(chain(2), chain(2)), (discrete(2), chain(2))] {
        let rho = p.rho_l(&k, &n).unwrap();
        let x = exponential(&k, &n);
        let e = exponential(&p.kk(&k).cat, &p.nn(&n).cat);
        for o in rho.src().objects() {
            let f = x.functor(o);
            let g = e.functor(rho.ob(o));
            for y in k.objects() {
                assert_eq!(p.nn(&n).p1.ob(g.ob(y)), f.ob(y));
            }
        }
    }
}

#[test]
fn induced_mate_is_precomposition() {
    let pool = [terminal(), chain(2), discrete(2), chain(3)];
    for k in &pool {
        for k2 in &pool {
            for f in all_functors(k2, k) {
                for n in [chain(2), discrete(2)] {
                    let expected = exponential(k, &n).pre(&f, &exponential(k2, &n)).unwrap();
                    assert_eq!(induced_mate(&f, &n).unwrap(), expected);
                }
            }
        }
    }
}

#[test]
fn parameterized_mates_on_corpus() {
    let ps = param_corpus(5, 12);
    assert!(ps.len() >= 10);
    for p in &ps {
        assert!(parameterized_mate_check(p).is_empty());
    }
}

#[test]
fn parameterized_routes_detect_a_changed_lambda() {
    // routes built from different λ must disagree somewhere
    let (d, c, e) = (discrete(2), terminal(), discrete(2));
    let dc = awfs_core::fincat::product(&d, &c).cat;
    let hs = all_functors(&dc, &e);
    let (p1, p2) = (ParamData::new(c.clone(), d.clone(), e.clone(), hs[0].clone()), ParamData::new(c, d, e, hs[1].clone()));
    let (m, n) = (chain(2), chain(2));
    assert_ne!(p1.rho_r_via_l(&m, &n).unwrap(), p2.rho_r_direct(&m, &n).unwrap());
    assert_eq!(p1.rho_r_via_l(&m, &n).unwrap(), p1.rho_r_direct(&m, &n).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn mates_are_an_involution(seed in 0u64..10_000) {
        let c = mate_corpus(seed, 4);
        for sq in &c.squares {
            prop_assert!(roundtrip_check(sq).is_empty());
        }
        for g in &c.grids {
            prop_assert!(pasting_check(g).is_empty());
        }
    }
}
