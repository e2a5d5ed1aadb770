use std::collections::HashSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrowcat::{squares, CatAmbient, Square};
use crate::fincat::{all_functors, basic, coproduct, FinCat, Functor, Ob};

pub const MAX_OBJ: usize = 4;
pub const MAX_MOR: usize = 12;

/// A random preorder on up to four objects, closed under transitivity.
fn random_preorder(rng: &mut ChaCha8Rng) -> Arc<FinCat> {
    let n = rng.gen_range(1..=MAX_OBJ);
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(0.3) {
                rel[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    basic::poset(n, |i, j| rel[i][j])
}

/// Fixed small categories, then seeded random preorders; all within the
/// object and morphism bounds.
pub fn categories(seed: u64, extra: usize) -> Vec<Arc<FinCat>> {
    let a = basic::arrow();
    let one = basic::terminal();
    let mut out = vec![
        basic::empty(),
        one.clone(),
        basic::discrete(2),
        a.clone(),
        basic::interval(),
        basic::z2(),
        basic::idempotent(),
        basic::parallel_pair(),
        basic::chain(3),
        basic::indiscrete(3),
        coproduct(&a, &one).cat,
        coproduct(&basic::interval(), &one).cat,
        coproduct(&basic::z2(), &one).cat,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<u64> = out.iter().map(|c| c.fingerprint()).collect();
    let mut tries = 0;
    while out.len() < 13 + extra && tries < 100 * (extra + 1) {
        tries += 1;
        let c = random_preorder(&mut rng);
        if c.n_mor() <= MAX_MOR && seen.insert(c.fingerprint()) {
            out.push(c);
        }
    }
    out
}

/// `size` distinct functors between corpus categories, picked by a seeded RNG.
pub fn functor_corpus(seed: u64, size: usize) -> Vec<Functor> {
    let cats = categories(seed, 6);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut tries = 0;
    while out.len() < size && tries < 50 * size {
        tries += 1;
        let (s, t) = (cats.choose(&mut rng).unwrap_or(&cats[0]), cats.choose(&mut rng).unwrap_or(&cats[0]));
        let fs = all_functors(s, t);
        if let Some(f) = fs.choose(&mut rng) {
            if seen.insert(f.fingerprint()) {
                out.push(f.clone());
            }
        }
    }
    out
}

/// Up to `per_pair` squares between consecutive corpus arrows.
pub fn square_corpus(arrows: &[Functor], per_pair: usize) -> Vec<Square<Functor>> {
    let amb = CatAmbient;
    let mut out = Vec::new();
    for w in arrows.windows(2) {
        out.extend(squares(&amb, &w[0], &w[1], 256).into_iter().take(per_pair));
        out.extend(squares(&amb, &w[0], &w[0], 256).into_iter().take(1));
    }
    out
}

/// Named isofibrations between small groupoid-rich categories.
pub fn isofibrations() -> Vec<(String, Functor)> {
    let (one, i, z2, a) = (basic::terminal(), basic::interval(), basic::z2(), basic::arrow());
    let ii = crate::fincat::product(&i, &i);
    let i1 = coproduct(&i, &one);
    let d2 = basic::discrete(2);
    let swap = Functor::from_fn(i.clone(), i.clone(), vec![1, 0], |m| i.hom(1 - i.dom(m), 1 - i.cod(m)).start);
    let to_one = |c: &Arc<FinCat>| Functor::constant(c, &one, 0);
    let i1_to_d2 = Functor::from_fn(i1.cat.clone(), d2.clone(), vec![0, 0, 1], |m| d2.id((i1.cat.dom(m) / 2) as Ob));
    vec![
        ("I->1".into(), to_one(&i)),
        ("z2->1".into(), to_one(&z2)),
        ("1+1->1".into(), to_one(&d2)),
        ("I+1->1".into(), to_one(&i1.cat)),
        ("2->1".into(), to_one(&a)),
        ("id1".into(), Functor::identity(&one)),
        ("idI".into(), Functor::identity(&i)),
        ("swapI".into(), swap),
        ("id2".into(), Functor::identity(&a)),
        ("pr1:IxI->I".into(), ii.p1.clone()),
        ("I+1->1+1".into(), i1_to_d2),
    ]
}
