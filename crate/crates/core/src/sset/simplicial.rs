use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::report::{Report, Violation};

pub const DEFAULT_DIM: usize = 4;

/// A simplicial set truncated at `dim`, with explicit face and degeneracy
/// tables and every degenerate simplex stored.
#[derive(Clone, Debug)]
pub struct FinSSet {
    dim: usize,
    labels: Vec<Vec<Label>>,
    /// face[n][i][x] = d_i x for x of degree n ≥ 1
    face: Vec<Vec<Vec<u32>>>,
    /// degen[n][i][x] = s_i x for x of degree n < dim
    degen: Vec<Vec<Vec<u32>>>,
    index: Vec<HashMap<Label, u32>>,
    /// vertex sequences, for nerves of posets
    seqs: Option<Vec<Vec<Vec<u32>>>>,
    fp: u64,
}

impl FinSSet {
    pub fn from_tables(labels: Vec<Vec<Label>>, face: Vec<Vec<Vec<u32>>>, degen: Vec<Vec<Vec<u32>>>) -> FinSSet {
        let dim = labels.len() - 1;
        let index = labels.iter().map(|ls| ls.iter().enumerate().map(|(k, l)| (l.clone(), k as u32)).collect()).collect();
        let mut h = DefaultHasher::new();
        (&labels, &face, &degen).hash(&mut h);
        FinSSet { dim, labels, face, degen, index, seqs: None, fp: h.finish() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn count(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn simplices(&self, n: usize) -> std::ops::Range<u32> {
        0..self.count(n) as u32
    }

    pub fn label(&self, n: usize, x: u32) -> &Label {
        &self.labels[n][x as usize]
    }

    pub fn find(&self, n: usize, l: &Label) -> Option<u32> {
        self.index.get(n)?.get(l).copied()
    }

    pub fn face(&self, n: usize, i: usize, x: u32) -> u32 {
        self.face[n][i][x as usize]
    }

    pub fn degen(&self, n: usize, i: usize, x: u32) -> u32 {
        self.degen[n][i][x as usize]
    }

    pub fn fingerprint(&self) -> u64 {
        self.fp
    }

    pub fn seq(&self, n: usize, x: u32) -> Option<&[u32]> {
        self.seqs.as_ref().map(|s| s[n][x as usize].as_slice())
    }

    pub fn is_degenerate(&self, n: usize, x: u32) -> bool {
        n > 0 && (0..n).any(|i| self.degen(n - 1, i, self.face(n, i, x)) == x)
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<u32> {
        self.simplices(n).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    /// Highest degree holding a nondegenerate simplex.
    pub fn top_dim(&self) -> Option<usize> {
        (0..=self.dim).rev().find(|&n| !self.nondegenerate(n).is_empty())
    }

    /// θ*(x) for a monotone θ : [m] → [n] given by its values.
    pub fn act(&self, n: usize, x: u32, theta: &[u32]) -> u32 {
        let mut img: Vec<u32> = theta.to_vec();
        img.dedup();
        let (mut y, mut deg) = (x, n);
        for v in (0..=n as u32).rev() {
            if !img.contains(&v) {
                y = self.face(deg, v as usize, y);
                deg -= 1;
            }
        }
        for j in 0..theta.len().saturating_sub(1) {
            if theta[j] == theta[j + 1] {
                y = self.degen(deg, j, y);
                deg += 1;
            }
        }
        y
    }
}

impl PartialEq for FinSSet {
    fn eq(&self, other: &FinSSet) -> bool {
        self.fp == other.fp && self.labels == other.labels
    }
}

/// Nerve of a poset restricted to the chains whose vertex set passes `keep`
/// (closed under faces). Chains are listed lexicographically.
pub fn nerve(n_elems: usize, leq: impl Fn(u32, u32) -> bool, keep: impl Fn(&[u32]) -> bool, dim: usize, name: impl Fn(&[u32]) -> Label) -> FinSSet {
    let mut seqs: Vec<Vec<Vec<u32>>> = vec![Vec::new(); dim + 1];
    fn extend(cur: &mut Vec<u32>, len: usize, n_elems: usize, leq: &dyn Fn(u32, u32) -> bool, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for e in 0..n_elems as u32 {
            if cur.last().is_none_or(|&l| leq(l, e)) {
                cur.push(e);
                extend(cur, len, n_elems, leq, out);
                cur.pop();
            }
        }
    }
    for (n, s) in seqs.iter_mut().enumerate() {
        let mut all = Vec::new();
        extend(&mut Vec::new(), n + 1, n_elems, &leq, &mut all);
        s.extend(all.into_iter().filter(|q| keep(q)));
    }
    let index: Vec<HashMap<Vec<u32>, u32>> =
        seqs.iter().map(|s| s.iter().enumerate().map(|(k, q)| (q.clone(), k as u32)).collect()).collect();
    let face = (0..=dim)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    seqs[n]
                        .iter()
                        .map(|q| {
                            let mut f = q.clone();
                            f.remove(i);
                            index[n - 1][&f]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|n| {
            if n == dim {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    seqs[n]
                        .iter()
                        .map(|q| {
                            let mut s = q.clone();
                            s.insert(i, q[i]);
                            index[n + 1][&s]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let labels = seqs.iter().map(|s| s.iter().map(|q| name(q)).collect()).collect();
    let mut x = FinSSet::from_tables(labels, face, degen);
    x.seqs = Some(seqs);
    x
}

fn seq_label(q: &[u32]) -> Label {
    Label::tup(q.iter().map(|&v| Label::int(v)))
}

fn check_bound(n: usize, dim: usize) -> Result<()> {
    if n > dim {
        return Err(Error::BoundExceeded(format!("dimension {n} exceeds bound {dim}")));
    }
    Ok(())
}

fn vertex_set(q: &[u32]) -> Vec<u32> {
    let mut v = q.to_vec();
    v.dedup();
    v
}

pub fn delta(n: usize, dim: usize) -> Result<Arc<FinSSet>> {
    check_bound(n, dim)?;
    Ok(Arc::new(nerve(n + 1, |a, b| a <= b, |_| true, dim, seq_label)))
}

/// ∂Δⁿ: chains missing at least one vertex.
pub fn boundary(n: usize, dim: usize) -> Result<Arc<FinSSet>> {
    check_bound(n, dim)?;
    Ok(Arc::new(nerve(n + 1, |a, b| a <= b, |q| vertex_set(q).len() < n + 1, dim, seq_label)))
}

/// Λⁿ_k: chains missing some vertex other than k.
pub fn horn(n: usize, k: usize, dim: usize) -> Result<Arc<FinSSet>> {
    check_bound(n, dim)?;
    if k > n || n == 0 {
        return Err(Error::OutOfRange(format!("horn({n}, {k})")));
    }
    Ok(Arc::new(nerve(n + 1, |a, b| a <= b, |q| {
        let v = vertex_set(q);
        (0..=n as u32).any(|i| i != k as u32 && !v.contains(&i))
    }, dim, seq_label)))
}

pub fn empty(dim: usize) -> Arc<FinSSet> {
    Arc::new(nerve(0, |_, _| true, |_| true, dim, seq_label))
}

/// A simplicial map as degreewise tables.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    pub src: Arc<FinSSet>,
    pub tgt: Arc<FinSSet>,
    pub table: Vec<Vec<u32>>,
}

impl PartialEq for SimplicialMap {
    fn eq(&self, o: &SimplicialMap) -> bool {
        self.src == o.src && self.tgt == o.tgt && self.table == o.table
    }
}

impl SimplicialMap {
    pub fn at(&self, n: usize, x: u32) -> u32 {
        self.table[n][x as usize]
    }

    pub fn identity(x: &Arc<FinSSet>) -> SimplicialMap {
        SimplicialMap { src: x.clone(), tgt: x.clone(), table: (0..=x.dim()).map(|n| x.simplices(n).collect()).collect() }
    }

    pub fn after(&self, f: &SimplicialMap) -> Result<SimplicialMap> {
        if *f.tgt != *self.src {
            return Err(Error::NotComposable("simplicial maps".into()));
        }
        let table = f.table.iter().enumerate().map(|(n, t)| t.iter().map(|&x| self.at(n, x)).collect()).collect();
        Ok(SimplicialMap { src: f.src.clone(), tgt: self.tgt.clone(), table })
    }

    pub fn is_mono(&self) -> bool {
        self.table.iter().all(|t| {
            let mut s = t.clone();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && (0..=self.tgt.dim()).all(|n| self.table[n].len() == self.tgt.count(n))
    }

    /// Inclusion between nerves (or any two sets) matching simplices by label.
    pub fn by_labels(src: &Arc<FinSSet>, tgt: &Arc<FinSSet>) -> Result<SimplicialMap> {
        let table = (0..=src.dim())
            .map(|n| {
                src.simplices(n)
                    .map(|x| tgt.find(n, src.label(n, x)).ok_or_else(|| Error::Malformed(format!("no simplex {} in target", src.label(n, x)))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialMap { src: src.clone(), tgt: tgt.clone(), table })
    }

    /// The map Δⁿ → Y classifying an n-simplex y.
    pub fn yoneda(dn: &Arc<FinSSet>, n: usize, tgt: &Arc<FinSSet>, y: u32) -> Result<SimplicialMap> {
        let table = (0..=dn.dim())
            .map(|m| {
                dn.simplices(m)
                    .map(|s| dn.seq(m, s).map(|q| tgt.act(n, y, q)).ok_or_else(|| Error::Malformed("yoneda: source is not a nerve".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialMap { src: dn.clone(), tgt: tgt.clone(), table })
    }
}

pub fn validate_sset(x: &FinSSet) -> Report {
    let mut out = Vec::new();
    let mut bad = |law: &str, n: usize, s: u32, l: u32, r: u32| {
        if l != r {
            out.push(Violation::new(law, vec![format!("deg {n}"), x.label(n, s).to_string()], l.to_string(), r.to_string()));
        }
    };
    for n in 0..=x.dim() {
        for s in x.simplices(n) {
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        bad("d_i d_j = d_{j-1} d_i", n, s, x.face(n - 1, i, x.face(n, j, s)), x.face(n - 1, j - 1, x.face(n, i, s)));
                    }
                }
            }
            if n < x.dim() {
                for j in 0..=n {
                    let sj = x.degen(n, j, s);
                    bad("d_j s_j = id", n, s, x.face(n + 1, j, sj), s);
                    bad("d_{j+1} s_j = id", n, s, x.face(n + 1, j + 1, sj), s);
                    for i in 0..j {
                        bad("d_i s_j = s_{j-1} d_i", n, s, x.face(n + 1, i, sj), x.degen(n - 1, j - 1, x.face(n, i, s)));
                    }
                    for i in j + 2..=n + 1 {
                        bad("d_i s_j = s_j d_{i-1}", n, s, x.face(n + 1, i, sj), x.degen(n - 1, j, x.face(n, i - 1, s)));
                    }
                    if n + 1 < x.dim() {
                        for i in 0..=j {
                            bad("s_i s_j = s_{j+1} s_i", n, s, x.degen(n + 1, i, sj), x.degen(n + 1, j + 1, x.degen(n, i, s)));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn validate_map(f: &SimplicialMap) -> Report {
    let (x, y) = (&f.src, &f.tgt);
    let mut out = Vec::new();
    if x.dim() != y.dim() {
        out.push(Violation::new("dimension bound", vec![], x.dim().to_string(), y.dim().to_string()));
        return out;
    }
    for n in 0..=x.dim() {
        for s in x.simplices(n) {
            if n > 0 {
                for i in 0..=n {
                    if f.at(n - 1, x.face(n, i, s)) != y.face(n, i, f.at(n, s)) {
                        out.push(Violation::new("map commutes with faces", vec![format!("d_{i}"), x.label(n, s).to_string()], "", ""));
                    }
                }
            }
            if n < x.dim() {
                for i in 0..=n {
                    if f.at(n + 1, x.degen(n, i, s)) != y.degen(n, i, f.at(n, s)) {
                        out.push(Violation::new("map commutes with degeneracies", vec![format!("s_{i}"), x.label(n, s).to_string()], "", ""));
                    }
                }
            }
        }
    }
    out
}

/// X × Y with its projections.
#[derive(Clone, Debug)]
pub struct SProduct {
    pub obj: Arc<FinSSet>,
    pub p1: SimplicialMap,
    pub p2: SimplicialMap,
}

impl SProduct {
    pub fn pairing(&self, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
        let ny: Vec<usize> = (0..=self.p2.tgt.dim()).map(|n| self.p2.tgt.count(n)).collect();
        let table = (0..=f.src.dim()).map(|n| f.src.simplices(n).map(|s| (f.at(n, s) as usize * ny[n] + g.at(n, s) as usize) as u32).collect()).collect();
        Ok(SimplicialMap { src: f.src.clone(), tgt: self.obj.clone(), table })
    }
}

pub fn sset_product(x: &Arc<FinSSet>, y: &Arc<FinSSet>) -> Result<SProduct> {
    if x.dim() != y.dim() {
        return Err(Error::Malformed("product of different dimension bounds".into()));
    }
    let dim = x.dim();
    let pair = |n: usize, a: u32, b: u32| a * y.count(n) as u32 + b;
    let labels = (0..=dim)
        .map(|n| x.simplices(n).flat_map(|a| y.simplices(n).map(move |b| Label::pair(x.label(n, a).clone(), y.label(n, b).clone()))).collect())
        .collect();
    let face = (0..=dim)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n).map(|i| x.simplices(n).flat_map(|a| y.simplices(n).map(move |b| (a, b))).map(|(a, b)| pair(n - 1, x.face(n, i, a), y.face(n, i, b))).collect()).collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|n| {
            if n == dim {
                return Vec::new();
            }
            (0..=n).map(|i| x.simplices(n).flat_map(|a| y.simplices(n).map(move |b| (a, b))).map(|(a, b)| pair(n + 1, x.degen(n, i, a), y.degen(n, i, b))).collect()).collect()
        })
        .collect();
    let obj = Arc::new(FinSSet::from_tables(labels, face, degen));
    let p1 = SimplicialMap { src: obj.clone(), tgt: x.clone(), table: (0..=dim).map(|n| obj.simplices(n).map(|s| s / y.count(n) as u32).collect()).collect() };
    let p2 = SimplicialMap { src: obj.clone(), tgt: y.clone(), table: (0..=dim).map(|n| obj.simplices(n).map(|s| s % y.count(n) as u32).collect()).collect() };
    Ok(SProduct { obj, p1, p2 })
}

pub fn product_map(pa: &SProduct, pb: &SProduct, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
    pb.pairing(&f.after(&pa.p1)?, &g.after(&pa.p2)?)
}

/// Pushout of a span X ← A → Y whose left leg is monic: Y ⊔ (X ∖ A).
#[derive(Clone, Debug)]
pub struct SPushout {
    pub obj: Arc<FinSSet>,
    pub inl: SimplicialMap,
    pub inr: SimplicialMap,
}

pub fn sset_pushout(m: &SimplicialMap, g: &SimplicialMap) -> Result<SPushout> {
    if !m.is_mono() {
        return Err(Error::Malformed("pushout: left leg is not monic".into()));
    }
    let (x, y) = (&m.tgt, &g.tgt);
    let dim = x.dim();
    // position of each simplex of X in the pushout
    let mut place: Vec<Vec<u32>> = Vec::new();
    let mut labels: Vec<Vec<Label>> = Vec::new();
    for n in 0..=dim {
        let mut pl = vec![u32::MAX; x.count(n)];
        for a in m.src.simplices(n) {
            pl[m.at(n, a) as usize] = g.at(n, a);
        }
        let mut ls: Vec<Label> = y.simplices(n).map(|b| Label::tag("R", y.label(n, b).clone())).collect();
        for s in x.simplices(n) {
            if pl[s as usize] == u32::MAX {
                pl[s as usize] = ls.len() as u32;
                ls.push(Label::tag("L", x.label(n, s).clone()));
            }
        }
        place.push(pl);
        labels.push(ls);
    }
    let ny: Vec<usize> = (0..=dim).map(|n| y.count(n)).collect();
    let new_of = |n: usize| -> Vec<u32> { x.simplices(n).filter(|&s| place[n][s as usize] as usize >= ny[n]).collect() };
    let face = (0..=dim)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let mut t: Vec<u32> = y.simplices(n).map(|b| y.face(n, i, b)).collect();
                    t.extend(new_of(n).into_iter().map(|s| place[n - 1][x.face(n, i, s) as usize]));
                    t
                })
                .collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|n| {
            if n == dim {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let mut t: Vec<u32> = y.simplices(n).map(|b| y.degen(n, i, b)).collect();
                    t.extend(new_of(n).into_iter().map(|s| place[n + 1][x.degen(n, i, s) as usize]));
                    t
                })
                .collect()
        })
        .collect();
    let obj = Arc::new(FinSSet::from_tables(labels, face, degen));
    let inl = SimplicialMap { src: x.clone(), tgt: obj.clone(), table: place };
    let inr = SimplicialMap { src: y.clone(), tgt: obj.clone(), table: (0..=dim).map(|n| y.simplices(n).collect()).collect() };
    Ok(SPushout { obj, inl, inr })
}

impl SPushout {
    /// The map out of the pushout induced by (hx, hy).
    pub fn induced(&self, hx: &SimplicialMap, hy: &SimplicialMap) -> Result<SimplicialMap> {
        let dim = self.obj.dim();
        let mut table = Vec::with_capacity(dim + 1);
        for n in 0..=dim {
            let mut t = vec![u32::MAX; self.obj.count(n)];
            for s in hy.src.simplices(n) {
                t[self.inr.at(n, s) as usize] = hy.at(n, s);
            }
            for s in hx.src.simplices(n) {
                let p = self.inl.at(n, s) as usize;
                if t[p] != u32::MAX && t[p] != hx.at(n, s) {
                    return Err(Error::Malformed("cocone legs disagree".into()));
                }
                t[p] = hx.at(n, s);
            }
            table.push(t);
        }
        Ok(SimplicialMap { src: self.obj.clone(), tgt: hx.tgt.clone(), table })
    }
}

/// A subcomplex of Y given by membership, with its inclusion.
pub fn subcomplex(y: &Arc<FinSSet>, member: &[Vec<bool>]) -> Result<(Arc<FinSSet>, SimplicialMap)> {
    let dim = y.dim();
    let keep: Vec<Vec<u32>> = (0..=dim).map(|n| y.simplices(n).filter(|&s| member[n][s as usize]).collect()).collect();
    let pos: Vec<HashMap<u32, u32>> = keep.iter().map(|k| k.iter().enumerate().map(|(i, &s)| (s, i as u32)).collect()).collect();
    let lookup = |n: usize, s: u32| pos[n].get(&s).copied().ok_or_else(|| Error::Malformed("membership is not a subcomplex".into()));
    let mut face = Vec::new();
    let mut degen = Vec::new();
    for n in 0..=dim {
        face.push(if n == 0 { Vec::new() } else { (0..=n).map(|i| keep[n].iter().map(|&s| lookup(n - 1, y.face(n, i, s))).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()? });
        degen.push(if n == dim { Vec::new() } else { (0..=n).map(|i| keep[n].iter().map(|&s| lookup(n + 1, y.degen(n, i, s))).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()? });
    }
    let labels = keep.iter().enumerate().map(|(n, k)| k.iter().map(|&s| y.label(n, s).clone()).collect()).collect();
    let mut sub = FinSSet::from_tables(labels, face, degen);
    if let Some(seqs) = &y.seqs {
        sub.seqs = Some(keep.iter().enumerate().map(|(n, k)| k.iter().map(|&s| seqs[n][s as usize].clone()).collect()).collect());
    }
    let sub = Arc::new(sub);
    let incl = SimplicialMap { src: sub.clone(), tgt: y.clone(), table: keep };
    Ok((sub, incl))
}

/// Membership table of the image of a map.
pub fn image(f: &SimplicialMap) -> Vec<Vec<bool>> {
    (0..=f.tgt.dim())
        .map(|n| {
            let mut m = vec![false; f.tgt.count(n)];
            for &s in &f.table[n] {
                m[s as usize] = true;
            }
            m
        })
        .collect()
}

/// Pushout-product i ⊠ j : A×D ⊔_{A×C} B×C → B×D.
#[derive(Clone, Debug)]
pub struct SPP {
    pub po: SPushout,
    pub arrow: SimplicialMap,
    pub ad: SProduct,
    pub bc: SProduct,
    pub bd: SProduct,
}

pub fn sset_pp(i: &SimplicialMap, j: &SimplicialMap) -> Result<SPP> {
    let (a, b, c, d) = (&i.src, &i.tgt, &j.src, &j.tgt);
    let (ac, ad, bc, bd) = (sset_product(a, c)?, sset_product(a, d)?, sset_product(b, c)?, sset_product(b, d)?);
    let (ida, idc, idd) = (SimplicialMap::identity(a), SimplicialMap::identity(c), SimplicialMap::identity(d));
    let po = sset_pushout(&product_map(&ac, &ad, &ida, j)?, &product_map(&ac, &bc, i, &idc)?)?;
    let arrow = po.induced(&product_map(&ad, &bd, i, &idd)?, &product_map(&bc, &bd, &SimplicialMap::identity(b), j)?)?;
    if !arrow.is_mono() {
        return Err(Error::Malformed("pushout-product is not monic".into()));
    }
    Ok(SPP { po, arrow, ad, bc, bd })
}

/// The boundary inclusion ∂Δⁿ → Δⁿ.
pub fn sphere_inclusion(n: usize, dim: usize) -> Result<SimplicialMap> {
    SimplicialMap::by_labels(&boundary(n, dim)?, &delta(n, dim)?)
}

/// The horn inclusion Λⁿ_k → Δⁿ.
pub fn horn_inclusion(n: usize, k: usize, dim: usize) -> Result<SimplicialMap> {
    SimplicialMap::by_labels(&horn(n, k, dim)?, &delta(n, dim)?)
}
