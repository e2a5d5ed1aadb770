use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monad::{lax_morphisms, monads, LaxInstance};
use super::square::{Filling, MateSquare};
use crate::fincat::basic::{chain, discrete, idempotent, indiscrete, parallel_pair, split_idempotent, terminal, z2};
use crate::fincat::{all_functors, nat_transformations, validate_adjunction, AdjunctionData, FinCat, Functor, NatTrans};

/// Categories the random instances draw from.
pub fn mate_pool() -> Vec<(&'static str, Arc<FinCat>)> {
    vec![
        ("1", terminal()),
        ("2", chain(2)),
        ("3", chain(3)),
        ("1+1", discrete(2)),
        ("I", indiscrete(2)),
        ("z2", z2()),
        ("E", idempotent()),
        ("par", parallel_pair()),
        ("split", split_idempotent()),
    ]
}

/// T ⊣ S with the given functors, if one exists: a unit candidate whose
/// components are universal arrows, counit read off from the unit.
pub fn find_adjunction(t: &Functor, s: &Functor) -> Option<AdjunctionData> {
    let (m, k) = (t.src(), t.tgt());
    let id_m = Functor::identity(m);
    let id_k = Functor::identity(k);
    let st = s.after(t).ok()?;
    let ts = t.after(s).ok()?;
    for unit in nat_transformations(&id_m, &st) {
        let universal = m.objects().all(|x| {
            k.objects().all(|y| {
                m.hom(x, s.ob(y)).all(|f| k.hom(t.ob(x), y).filter(|&g| m.compose(s.mor(g), unit.at(x)) == f).count() == 1)
            })
        });
        if !universal {
            continue;
        }
        let counit: Option<Vec<_>> =
            k.objects().map(|y| k.hom(t.ob(s.ob(y)), y).find(|&g| m.compose(s.mor(g), unit.at(s.ob(y))) == m.id(s.ob(y)))).collect();
        let adj = AdjunctionData {
            left: t.clone(),
            right: s.clone(),
            unit,
            counit: NatTrans { src: ts.clone(), tgt: id_k.clone(), comp: counit? },
        };
        if validate_adjunction(&adj).is_empty() {
            return Some(adj);
        }
    }
    None
}

/// Every adjunction between two categories, up to the choice of unit.
pub fn adjunctions(m: &Arc<FinCat>, k: &Arc<FinCat>) -> Vec<AdjunctionData> {
    let rights = all_functors(k, m);
    all_functors(m, k).iter().flat_map(|t| rights.iter().filter_map(|s| find_adjunction(t, s)).collect::<Vec<_>>()).collect()
}

/// All adjunctions among pool categories.
pub fn adjunction_pool() -> Vec<AdjunctionData> {
    let pool = mate_pool();
    let mut out = Vec::new();
    for (_, m) in &pool {
        for (_, k) in &pool {
            out.extend(adjunctions(m, k));
        }
    }
    out
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, v: &'a [T]) -> Option<&'a T> {
    v.choose(rng)
}

/// A random square on fixed verticals, with H and K fixed when given.
pub fn random_square(rng: &mut ChaCha8Rng, left: &AdjunctionData, right: &AdjunctionData, h: Option<&Functor>, k: Option<&Functor>, as_left: bool) -> Option<MateSquare> {
    let hs = match h {
        Some(h) => vec![h.clone()],
        None => all_functors(left.left.src(), right.left.src()),
    };
    let ks = match k {
        Some(k) => vec![k.clone()],
        None => all_functors(left.left.tgt(), right.left.tgt()),
    };
    for _ in 0..8 {
        let (h, k) = (pick(rng, &hs)?, pick(rng, &ks)?);
        let cells = if as_left {
            nat_transformations(&right.left.after(h).ok()?, &k.after(&left.left).ok()?)
        } else {
            nat_transformations(&h.after(&left.right).ok()?, &right.right.after(k).ok()?)
        };
        if let Some(c) = pick(rng, &cells) {
            let cell = if as_left { Filling::Left(c.clone()) } else { Filling::Right(c.clone()) };
            return Some(MateSquare { h: h.clone(), k: k.clone(), left: left.clone(), right: right.clone(), cell });
        }
    }
    None
}

/// Seeded single squares, horizontal 1×2 and vertical 2×1 grids.
pub struct MateCorpus {
    pub squares: Vec<MateSquare>,
    pub grids: Vec<Vec<Vec<MateSquare>>>,
}

pub fn mate_corpus(seed: u64, size: usize) -> MateCorpus {
    let adjs = adjunction_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut squares = Vec::new();
    let mut grids = Vec::new();
    let mut tries = 0;
    while (squares.len() < size || grids.len() < size) && tries < 100 * size {
        tries += 1;
        let as_left = rng.gen_bool(0.5);
        let (l, r) = (&adjs[rng.gen_range(0..adjs.len())], &adjs[rng.gen_range(0..adjs.len())]);
        let Some(sq) = random_square(&mut rng, l, r, None, None, as_left) else { continue };
        if squares.len() < size {
            squares.push(sq.clone());
        }
        if grids.len() >= size {
            continue;
        }
        if rng.gen_bool(0.5) {
            let r2 = &adjs[rng.gen_range(0..adjs.len())];
            if let Some(sq2) = random_square(&mut rng, r, r2, None, None, as_left) {
                grids.push(vec![vec![sq, sq2]]);
            }
        } else {
            let below: Vec<&AdjunctionData> = adjs.iter().filter(|a| crate::fincat::same_cat(a.left.src(), l.left.tgt())).collect();
            let below_r: Vec<&AdjunctionData> = adjs.iter().filter(|a| crate::fincat::same_cat(a.left.src(), r.left.tgt())).collect();
            if let (Some(bl), Some(br)) = (pick(&mut rng, &below), pick(&mut rng, &below_r)) {
                if let Some(sq2) = random_square(&mut rng, bl, br, Some(&sq.k), None, as_left) {
                    grids.push(vec![vec![sq], vec![sq2]]);
                }
            }
        }
    }
    MateCorpus { squares, grids }
}

/// Seeded lax monad morphisms, one per shuffled pool adjunction that admits one.
pub fn lax_corpus(seed: u64, size: usize) -> Vec<LaxInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjs = adjunction_pool();
    adjs.shuffle(&mut rng);
    let mut out = Vec::new();
    for adj in adjs {
        if out.len() >= size {
            break;
        }
        let (hs, ks) = (monads(adj.left.src()), monads(adj.left.tgt()));
        let (Some(h), Some(k)) = (pick(&mut rng, &hs), pick(&mut rng, &ks)) else { continue };
        let Ok(rhos) = lax_morphisms(&adj, h, k) else { continue };
        if let Some(rho) = pick(&mut rng, &rhos) {
            out.push(LaxInstance { adj: adj.clone(), h: h.clone(), k: k.clone(), rho: rho.clone() });
        }
    }
    out
}
