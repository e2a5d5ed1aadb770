use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cert::CellularCertificate;
use super::simplicial::{delta, nerve, validate_map, FinSSet, SimplicialMap};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::report::{Report, Violation};

/// Codiscrete simplicial set on `s` points: n-simplices are (n+1)-tuples.
pub fn codiscrete(s: usize, dim: usize) -> Arc<FinSSet> {
    Arc::new(nerve(s, |_, _| true, |_| true, dim, |q| Label::tup(q.iter().map(|&v| Label::int(v)))))
}

/// Nerve of ℤ/2: n-simplices are bit strings g₁…gₙ.
pub fn bz2(dim: usize) -> Arc<FinSSet> {
    let bits = |x: u32, n: usize| -> Vec<u32> { (0..n).map(|i| (x >> i) & 1).collect() };
    let code = |g: &[u32]| -> u32 { g.iter().enumerate().map(|(i, &b)| b << i).sum() };
    let labels = (0..=dim).map(|n| (0..1u32 << n).map(|x| Label::tup(bits(x, n).into_iter().map(Label::int))).collect()).collect();
    let face = (0..=dim)
        .map(|n| {
            (0..=n)
                .filter(|_| n > 0)
                .map(|i| {
                    (0..1u32 << n)
                        .map(|x| {
                            let mut g = bits(x, n);
                            if i == 0 {
                                g.remove(0);
                            } else if i == n {
                                g.pop();
                            } else {
                                g[i - 1] ^= g[i];
                                g.remove(i);
                            }
                            code(&g)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|n| {
            (0..=n)
                .filter(|_| n < dim)
                .map(|i| {
                    (0..1u32 << n)
                        .map(|x| {
                            let mut g = bits(x, n);
                            g.insert(i, 0);
                            code(&g)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Arc::new(FinSSet::from_tables(labels, face, degen))
}

/// The least n-simplex matching a horn's faces (None at k).
pub fn first_filler(e: &FinSSet, n: usize, faces: &[Option<u32>]) -> Option<u32> {
    e.simplices(n).find(|&z| faces.iter().enumerate().all(|(i, f)| f.is_none_or(|f| e.face(n, i, z) == f)))
}

/// Extend f : X → E along the certificate's mono using chosen fillers.
pub fn extend_along(c: &CellularCertificate, f: &SimplicialMap) -> Result<SimplicialMap> {
    let (y, e) = (&c.m.tgt, &f.tgt);
    let dim = y.dim();
    let mut t: Vec<Vec<Option<u32>>> = (0..=dim).map(|n| vec![None; y.count(n)]).collect();
    for n in 0..=dim {
        for x in c.m.src.simplices(n) {
            t[n][c.m.at(n, x) as usize] = Some(f.at(n, x));
        }
    }
    for st in &c.steps {
        let (n, k) = (st.gen.n, st.gen.k);
        let faces: Vec<Option<u32>> = (0..=n).map(|i| if i == k { None } else { t[n - 1][y.face(n, i, st.cell) as usize] }).collect();
        if faces.iter().enumerate().any(|(i, f)| i != k && f.is_none()) {
            return Err(Error::Malformed("horn face not yet assigned".into()));
        }
        let z = first_filler(e, n, &faces).ok_or_else(|| Error::Malformed(format!("no filler for a Λ^{n}_{k} horn")))?;
        let dn = delta(n, dim)?;
        let (sy, sz) = (SimplicialMap::yoneda(&dn, n, y, st.cell)?, SimplicialMap::yoneda(&dn, n, e, z)?);
        for d in 0..=dim {
            for s in dn.simplices(d) {
                let slot = &mut t[d][sy.at(d, s) as usize];
                match *slot {
                    Some(v) if v != sz.at(d, s) => return Err(Error::Malformed("filler disagrees with assigned simplex".into())),
                    _ => *slot = Some(sz.at(d, s)),
                }
            }
        }
    }
    let table = t
        .into_iter()
        .map(|d| d.into_iter().collect::<Option<Vec<u32>>>().ok_or_else(|| Error::Malformed("certificate leaves simplices unassigned".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialMap { src: y.clone(), tgt: e.clone(), table })
}

/// A map Y → E from a vertex labelling: tuples of vertex images for
/// codiscrete E, successive differences for BZ/2.
pub fn from_vertices(y: &Arc<FinSSet>, e: &Arc<FinSSet>, phi: &[u32], differences: bool) -> Result<SimplicialMap> {
    let table = (0..=y.dim())
        .map(|n| {
            y.simplices(n)
                .map(|x| {
                    let vs: Vec<u32> = (0..=n as u32).map(|i| phi[y.act(n, x, &[i]) as usize]).collect();
                    let l = if differences {
                        Label::tup(vs.windows(2).map(|w| Label::int(w[0] ^ w[1])))
                    } else {
                        Label::tup(vs.iter().map(|&v| Label::int(v)))
                    };
                    e.find(n, &l).ok_or_else(|| Error::Malformed(format!("no simplex {l}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialMap { src: y.clone(), tgt: e.clone(), table })
}

/// Solve the lifting problems of a 𝓙-certificate against small Kan complexes
/// (codiscrete on 2 and 3 points, BZ/2) for seeded vertex labellings.
pub fn kan_spot_check(c: &CellularCertificate, seed: u64, trials: usize) -> Report {
    let mut out = Vec::new();
    let y = &c.m.tgt;
    let dim = y.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let targets = [(codiscrete(2, dim), false, 2), (codiscrete(3, dim), false, 3), (bz2(dim), true, 2)];
    for (e, diff, s) in &targets {
        for trial in 0..trials {
            let phi: Vec<u32> = (0..y.count(0)).map(|_| rng.gen_range(0..*s)).collect();
            let ids = vec![format!("target {}", if *diff { "BZ/2".to_string() } else { format!("codiscrete({s})") }), format!("trial {trial}")];
            let res = from_vertices(y, e, &phi, *diff).and_then(|g| g.after(&c.m)).and_then(|f| Ok((extend_along(c, &f)?, f)));
            match res {
                Ok((g, f)) => {
                    if !validate_map(&g).is_empty() {
                        out.push(Violation::new("filled extension is simplicial", ids, "not simplicial", "simplicial"));
                    } else if g.after(&c.m).map(|r| r != f).unwrap_or(true) {
                        out.push(Violation::new("filled extension restricts to the horn data", ids, "differs", "equal"));
                    }
                }
                Err(err) => out.push(Violation::new("horn problems solvable by chosen fillers", ids, err.to_string(), "solved")),
            }
        }
    }
    out
}
