use std::sync::Arc;

use awfs_core::catfolk::*;
use awfs_core::fincat::{Bound, DEFAULT_CAP, DEFAULT_WORD_LEN};
use awfs_core::mates::*;
use awfs_core::sset::*;
use awfs_core::awfs::{alg_validate, coalg_validate, free_alg, free_coalg, validate_awfs};
use awfs_core::{Error, Report, Result};
use serde_json::json;

use crate::runner::Runner;

pub const SUITES: [&str; 6] = ["mates", "awfs-laws", "cat-folk", "sset-cells", "sset-trough", "all"];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cap: Option<usize>,
    pub dim_bound: usize,
    pub corpus_size: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig { seed: 0, cap: None, dim_bound: DEFAULT_DIM, corpus_size: None }
    }
}

impl SuiteConfig {
    fn bound(&self) -> Bound {
        Bound { cap: self.cap.unwrap_or(DEFAULT_CAP), word_len: DEFAULT_WORD_LEN }
    }

    fn size(&self, default: usize) -> usize {
        self.corpus_size.unwrap_or(default)
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig, r: &mut Runner) -> Result<()> {
    match name {
        "mates" => mates(cfg, r),
        "awfs-laws" => awfs_laws(cfg, r),
        "cat-folk" => cat_folk(cfg, r),
        "sset-cells" => sset_cells(cfg, r),
        "sset-trough" => sset_trough(r),
        "all" => {
            for s in &SUITES[..5] {
                run_suite(s, cfg, r)?;
            }
        }
        other => return Err(Error::Malformed(format!("unknown suite {other}"))),
    }
    Ok(())
}

fn collect<T>(items: &[T], check: impl Fn(&T) -> Report) -> Report {
    items.iter().flat_map(check).collect()
}

fn mates(cfg: &SuiteConfig, r: &mut Runner) {
    let size = cfg.size(24);
    let corpus = mate_corpus(cfg.seed, size);
    r.report("mates.roundtrip", "mate of the mate is the original cell", || Ok(collect(&corpus.squares, roundtrip_check)));
    r.report("mates.pasting", "mates commute with pasting", || Ok(collect(&corpus.grids, |g| pasting_check(g))));
    r.report("mates.lax-colax", "mates of lax morphisms are colax", || Ok(collect(&lax_corpus(cfg.seed, size.max(10)), lax_to_colax_check)));
    r.report("mates.parameterized", "parameterized mates agree in both orders", || {
        Ok(collect(&param_corpus(cfg.seed, size.clamp(10, 16)), parameterized_mate_check))
    });
}

fn awfs_laws(cfg: &SuiteConfig, r: &mut Runner) {
    let (cof, triv) = (CofAwfs::new(), TrivCofAwfs::new());
    let corpus = functor_corpus(cfg.seed, cfg.size(50));
    let squares = square_corpus(&corpus, 2);
    r.report("awfs-laws.cylinder", "comonad, monad and distributive laws", || Ok(validate_awfs(&cof, &corpus, &squares)));
    r.report("awfs-laws.iso-extension", "comonad, monad and distributive laws", || Ok(validate_awfs(&triv, &corpus, &squares)));
    r.report("awfs-laws.free", "free coalgebras and algebras validate", || {
        let mut out = Vec::new();
        for f in &corpus {
            out.extend(coalg_validate(&cof, &free_coalg(&cof, f)?));
            out.extend(alg_validate(&cof, &free_alg(&cof, f)?));
            out.extend(coalg_validate(&triv, &free_coalg(&triv, f)?));
            out.extend(alg_validate(&triv, &free_alg(&triv, f)?));
        }
        Ok(out)
    });
}

fn cat_folk(cfg: &SuiteConfig, r: &mut Runner) {
    let (cof, triv) = (CofAwfs::new(), Arc::new(TrivCofAwfs::new()));
    let bound = cfg.bound();
    r.expect("cat-folk.generator-table", "c [x] j = j, d [x] j = e [x] j = id(2xI)", || {
        let rows = generator_table_bounded(bound)?;
        let ok = rows.iter().all(|row| row.witness.is_some());
        let w: Vec<_> = rows.iter().map(|row| json!({"row": row.name, "expected": row.expected, "witnessed": row.witness.is_some()})).collect();
        Ok((ok, json!(w)))
    });
    let corpus = functor_corpus(cfg.seed, cfg.size(60));
    r.expect("cat-folk.unique-coalgebras", "injective-on-objects functors carry exactly one C-coalgebra", || {
        let (inj, non, rep) = unique_coalg_census(&cof, &corpus);
        Ok((rep.is_empty(), json!({"injective": inj, "other": non, "violations": rep.len()})))
    });
    let squares = square_corpus(&corpus, 2);
    r.report("cat-folk.xi", "xi is a morphism of awfs", || Ok(xi_validate(&cof, &triv, &corpus, &squares)));
    r.report("cat-folk.xi-routes", "xi formula equals the chosen lift", || Ok(comparison_xi(&cof, &triv, &corpus)?.1));
    r.report("cat-folk.coherence", "lifted structures agree at (j, j)", || coherence_check(&cof, &triv));
    r.report("cat-folk.lift-composition", "lifting functions of composite algebras", || {
        Ok(lift_preserves_composition(&triv, &algebra_pairs(&triv)?))
    });
    r.report("cat-folk.hom-side", "hom-side composition criterion", || {
        Ok(hom_side_criterion(&triv, &algebra_pairs(&triv)?, |_| None))
    });
    r.expect("cat-folk.hom-side-mutation", "a swapped composite algebra is detected", || {
        let rep = hom_side_mutation(&triv)?;
        Ok((!rep.is_empty(), json!({"violations": rep.len()})))
    });
    r.expect("cat-folk.algebras-liftfuns", "algebras correspond to coherent lifting functions", || {
        let arrows: Vec<_> = isofibrations().into_iter().filter(|(n, _)| ["I->1", "z2->1", "idI", "I+1->1"].contains(&n.as_str())).collect();
        let (rows, rep) = algebra_liftfun_correspondence(&triv, &arrows)?;
        Ok((rep.is_empty(), json!({"rows": rows, "violations": rep.len()})))
    });
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn sset_cells(cfg: &SuiteConfig, r: &mut Runner) {
    let budget = cfg.cap.unwrap_or(SEARCH_BUDGET);
    for (n, k, m) in supported_table() {
        let id = format!("sset-cells.anodyne.n{n}_k{k}_m{m}");
        r.report(&id, "horn certificate for the pushout-product", || {
            let c = anodyne_certificate_at(n, k, m, cfg.dim_bound, budget)?;
            let mut out = certificate_verify(&c);
            out.extend(kan_spot_check(&c, cfg.seed, 4));
            Ok(out)
        });
    }
    r.expect("sset-cells.shuffles", "Delta^p x Delta^q has C(p+q, p) top simplices", || {
        let mut counts = Vec::new();
        let mut ok = true;
        for p in 0..=4usize {
            for q in 0..=4 - p {
                let x = sset_product(&delta(p, cfg.dim_bound.max(p + q))?, &delta(q, cfg.dim_bound.max(p + q))?)?;
                let top = x.obj.nondegenerate(p + q).len();
                ok &= top == binom(p + q, p);
                counts.push(json!([p, q, top]));
            }
        }
        Ok((ok, json!(counts)))
    });
    r.report("sset-cells.icellular", "monos are relative cell complexes", || {
        let mut out = Vec::new();
        for n in 1..=3 {
            for k in 0..=n {
                let c = mono_icellular(&horn_inclusion(n, k, cfg.dim_bound.max(n))?);
                out.extend(certificate_verify(&c));
            }
        }
        Ok(out)
    });
}

fn sset_trough(r: &mut Runner) {
    let t = trough_demo();
    let t = match t {
        Ok(t) => t,
        Err(e) => {
            r.report("sset-trough.demo", "trough structures", || Err(e));
            return;
        }
    };
    r.report("sset-trough.a", "structure A is a valid certificate", || Ok(t.a_report.clone()));
    r.report("sset-trough.b", "structure B is a valid certificate", || Ok(t.b_report.clone()));
    r.expect("sset-trough.differ", "the structures differ; B fills the end triangle with a 3-dimensional horn", || {
        let ok = t.divergence.is_some() && t.a_end_dim == Some(2) && t.b_end_dim == Some(3);
        Ok((ok, json!({"divergence": t.divergence, "end_triangle": t.end_triangle.to_string(), "a_end_dim": t.a_end_dim, "b_end_dim": t.b_end_dim})))
    });
}
