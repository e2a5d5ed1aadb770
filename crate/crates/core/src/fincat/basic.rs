use std::sync::Arc;

use super::cat::{FinCat, Ob};
use crate::label::Label;

fn ints(n: usize) -> Vec<Label> {
    (0..n).map(Label::int).collect()
}

pub fn empty() -> Arc<FinCat> {
    Arc::new(FinCat::from_parts(vec![], vec![], vec![], |_, _| 0))
}

pub fn terminal() -> Arc<FinCat> {
    let mors = vec![(Label::tag("id", Label::sym("*")), 0, 0)];
    Arc::new(FinCat::from_parts(vec![Label::sym("*")], mors, vec![0], |g, _| g))
}

pub fn discrete(n: usize) -> Arc<FinCat> {
    let mors = (0..n).map(|k| (Label::tag("id", Label::int(k)), k as Ob, k as Ob)).collect();
    Arc::new(FinCat::from_parts(ints(n), mors, (0..n).collect(), |g, _| g))
}

/// Poset on 0..n with `leq(i, j)` assumed reflexive and transitive.
pub fn poset(n: usize, leq: impl Fn(usize, usize) -> bool) -> Arc<FinCat> {
    let mut mors = Vec::new();
    let mut idx = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in 0..n {
            if leq(i, j) {
                idx[i][j] = mors.len();
                mors.push((Label::pair(Label::int(i), Label::int(j)), i as Ob, j as Ob));
            }
        }
    }
    let id_of = (0..n).map(|i| idx[i][i]).collect();
    let ends: Vec<(Ob, Ob)> = mors.iter().map(|m| (m.1, m.2)).collect();
    Arc::new(FinCat::from_parts(ints(n), mors, id_of, |g, f| idx[ends[f].0 as usize][ends[g].1 as usize]))
}

/// The ordinal [n-1] = {0 < 1 < ... < n-1}.
pub fn chain(n: usize) -> Arc<FinCat> {
    poset(n, |i, j| i <= j)
}

/// Indiscrete (chaotic) category on n objects.
pub fn indiscrete(n: usize) -> Arc<FinCat> {
    poset(n, |_, _| true)
}

/// The walking arrow 𝟚 = {0 → 1}.
pub fn arrow() -> Arc<FinCat> {
    let mors = vec![("id0".into(), 0, 0), ("id1".into(), 1, 1), ("u".into(), 0, 1)];
    Arc::new(FinCat::from_parts(ints(2), mors, vec![0, 1], |g, f| match (g, f) {
        (1, f) => f,
        (g, _) => g,
    }))
}

/// The free-standing isomorphism 𝐈 with u: 0 → 1 and v: 1 → 0.
pub fn interval() -> Arc<FinCat> {
    let mors = vec![("id0".into(), 0, 0), ("id1".into(), 1, 1), ("u".into(), 0, 1), ("v".into(), 1, 0)];
    Arc::new(FinCat::from_parts(ints(2), mors, vec![0, 1], |g, f| match (g, f) {
        (0, f) | (1, f) => f,
        (g, 0) | (g, 1) => g,
        (2, 3) => 1,
        (3, 2) => 0,
        _ => unreachable!("interval: not composable"),
    }))
}

/// Two parallel arrows a, b: 0 → 1.
pub fn parallel_pair() -> Arc<FinCat> {
    let mors = vec![("id0".into(), 0, 0), ("id1".into(), 1, 1), ("a".into(), 0, 1), ("b".into(), 0, 1)];
    Arc::new(FinCat::from_parts(ints(2), mors, vec![0, 1], |g, f| if g == 1 { f } else { g }))
}

/// One-object category from a monoid table on 0..n with unit 0.
pub fn monoid(name: &str, n: usize, mul: impl Fn(usize, usize) -> usize) -> Arc<FinCat> {
    let mors = (0..n).map(|k| (Label::tag(name, Label::int(k)), 0, 0)).collect();
    Arc::new(FinCat::from_parts(vec![Label::sym("*")], mors, vec![0], |g, f| mul(g, f)))
}

/// ℤ/2 as a one-object groupoid.
pub fn z2() -> Arc<FinCat> {
    monoid("z", 2, |g, f| (g + f) % 2)
}

/// The monoid {1, e} with e∘e = e.
pub fn idempotent() -> Arc<FinCat> {
    monoid("e", 2, |g, f| g.max(f))
}

/// A split idempotent: r: 0 → 1, s: 1 → 0 with r∘s = 1 and e = s∘r.
pub fn split_idempotent() -> Arc<FinCat> {
    let mors = vec![("id0".into(), 0, 0), ("e".into(), 0, 0), ("r".into(), 0, 1), ("id1".into(), 1, 1), ("s".into(), 1, 0)];
    Arc::new(FinCat::from_parts(ints(2), mors, vec![0, 3], |g, f| match (g, f) {
        (0, f) | (3, f) => f,
        (g, 0) | (g, 3) => g,
        (1, 1) | (4, 2) => 1,
        (2, 1) => 2,
        (1, 4) => 4,
        (2, 4) => 3,
        _ => unreachable!("split idempotent: not composable"),
    }))
}
