//! Acceptance run: one line per criterion.

use std::sync::Arc;
use std::time::Instant;

use awfs_core::awfs::validate_awfs;
use awfs_core::catfolk::*;
use awfs_core::mates::*;
use awfs_core::sset::*;
use awfs_core::{Functor, Result};

const SEED: u64 = 0;
/// criteria recorded as unattainable in the decisions ledger
const LEDGERED: [usize; 2] = [7, 8];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn c1() -> Result<Outcome> {
    let rows = generator_table()?;
    let j = gen_j();
    let mut ok = rows.len() == 3;
    for (row, (_, i)) in rows.iter().zip(generator_set_i()) {
        let p = pp(&i, &j)?;
        let target = if row.expected == "j" { j.clone() } else { Functor::identity(p.arrow.tgt()) };
        ok &= match &row.witness {
            Some((u, v)) => u.is_iso() && v.is_iso() && v.after(&p.arrow)? == target.after(u)?,
            None => false,
        };
    }
    let names: Vec<String> = rows.iter().map(|r| format!("{} = {}", r.name, r.expected)).collect();
    outcome(ok, names.join(", "))
}

fn c2() -> Result<Outcome> {
    let corpus = functor_corpus(SEED, 50);
    let squares = square_corpus(&corpus, 2);
    let small = corpus.iter().all(|f| f.src().n_obj() <= 4 && f.tgt().n_obj() <= 4);
    let a = validate_awfs(&CofAwfs::new(), &corpus, &squares).len();
    let b = validate_awfs(&TrivCofAwfs::new(), &corpus, &squares).len();
    outcome(small && a == 0 && b == 0, format!("{} functors, {} squares; violations {a} + {b}", corpus.len(), squares.len()))
}

fn c3() -> Result<Outcome> {
    let corpus = functor_corpus(SEED, 60);
    let (inj, non, rep) = unique_coalg_census(&CofAwfs::new(), &corpus);
    outcome(rep.is_empty() && inj > 0 && non > 0, format!("{inj} injective with 1 structure, {non} others with 0; violations {}", rep.len()))
}

fn c4() -> Result<Outcome> {
    let (cof, triv) = (CofAwfs::new(), TrivCofAwfs::new());
    let corpus = functor_corpus(SEED, 50);
    let squares = square_corpus(&corpus, 2);
    let v = xi_validate(&cof, &triv, &corpus, &squares).len();
    let routes = comparison_xi(&cof, &triv, &corpus)?.1.len();
    outcome(v == 0 && routes == 0, format!("{} functors; morphism violations {v}, formula/lift disagreements {routes}", corpus.len()))
}

fn c5() -> Result<Outcome> {
    let triv = TrivCofAwfs::new();
    let pairs = algebra_pairs(&triv)?;
    let v = lift_preserves_composition(&triv, &pairs).len();
    outcome(pairs.len() >= 20 && v == 0, format!("{} algebra pairs; violations {v}", pairs.len()))
}

fn c6() -> Result<Outcome> {
    let triv = Arc::new(TrivCofAwfs::new());
    let pairs = algebra_pairs(&triv)?;
    let v = hom_side_criterion(&triv, &pairs, |_| None).len();
    let m = hom_side_mutation(&triv)?;
    let located = m.first().map(|x| x.ids.join(" / ")).unwrap_or_default();
    outcome(v == 0 && !m.is_empty(), format!("3 parameters x {} pairs; violations {v}; mutation caught at [{located}]", pairs.len()))
}

fn c7() -> Result<Outcome> {
    let rep = coherence_check(&CofAwfs::new(), &TrivCofAwfs::new())?;
    let detail = match rep.first() {
        None => "routes agree".to_string(),
        Some(v) => format!("{}: {} vs {}", v.law, v.lhs, v.rhs),
    };
    outcome(rep.is_empty(), detail)
}

fn c8() -> Result<Outcome> {
    let triv = TrivCofAwfs::new();
    let gens = j_generators(&triv);
    let mut arrows = isofibrations();
    for (k, f) in functor_corpus(SEED, 60).into_iter().enumerate() {
        if arrows.len() >= 24 {
            break;
        }
        let small = trivcof_algebras(&triv, &f, ALG_LIMIT).is_ok() && j_lifting_functions(&gens.gens, &f, ALG_LIMIT).is_ok();
        if small {
            arrows.push((format!("corpus {k}"), f));
        }
    }
    let (rows, rep) = algebra_liftfun_correspondence(&triv, &arrows)?;
    let differ: Vec<String> = rows.iter().filter(|r| r.algebras != r.lifting_functions).map(|r| format!("{} {}/{}", r.arrow, r.algebras, r.lifting_functions)).collect();
    let pointed = rows.iter().all(|r| r.pointed_algebras == r.lifting_functions);
    outcome(
        rows.len() >= 20 && rep.is_empty(),
        format!(
            "{} arrows; algebras/lifting functions differ on [{}]; pointed-endofunctor algebra counts match lifting functions: {pointed}",
            rows.len(),
            differ.join(", ")
        ),
    )
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn c9() -> Result<Outcome> {
    let mut ok = true;
    let mut steps = Vec::new();
    for (n, k, m) in supported_table() {
        let c = anodyne_certificate(n, k, m)?;
        let target = anodyne_pp(n, k, m, DEFAULT_DIM.max(n + m))?.arrow;
        ok &= certificate_verify(&c).is_empty() && c.m == target && c.kind == GenKind::Horn;
        steps.push(c.steps.len());
    }
    let mut shuffles = true;
    for p in 0..=4usize {
        for q in 0..=4 - p {
            let x = sset_product(&delta(p, 4)?, &delta(q, 4)?)?;
            shuffles &= x.obj.nondegenerate(p + q).len() == binom(p + q, p);
        }
    }
    outcome(ok && shuffles, format!("{} certificates (steps {:?}); shuffle counts match: {shuffles}", steps.len(), steps))
}

fn c10() -> Result<Outcome> {
    let t = trough_demo()?;
    let ok = t.a_report.is_empty() && t.b_report.is_empty() && t.a.steps != t.b.steps && t.a_end_dim == Some(2) && t.b_end_dim == Some(3);
    outcome(ok, format!("diverge at step {:?}; end triangle {} filled by a {:?}-dim horn in A, {:?}-dim in B", t.divergence, t.end_triangle, t.a_end_dim, t.b_end_dim))
}

fn c11() -> Result<Outcome> {
    let corpus = mate_corpus(SEED, 24);
    let rt: usize = corpus.squares.iter().map(|s| roundtrip_check(s).len()).sum();
    let ps: usize = corpus.grids.iter().map(|g| pasting_check(g).len()).sum();
    let lax = lax_corpus(SEED, 12);
    let lc: usize = lax.iter().map(|i| lax_to_colax_check(i).len()).sum();
    let params = param_corpus(SEED, 12);
    let pc: usize = params.iter().map(|p| parameterized_mate_check(p).len()).sum();
    let sizes = corpus.squares.len() >= 20 && corpus.grids.len() >= 20 && lax.len() >= 10 && params.len() >= 10;
    outcome(
        sizes && rt + ps + lc + pc == 0,
        format!(
            "roundtrip {} squares, pasting {} grids, lax/colax {} instances, parameterized {} instances; violations {rt}/{ps}/{lc}/{pc}",
            corpus.squares.len(),
            corpus.grids.len(),
            lax.len(),
            params.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Result<Outcome>); 11] = [
        ("generator table", c1),
        ("Cat awfs laws", c2),
        ("unique C-coalgebras", c3),
        ("comparison map xi", c4),
        ("lifting composite algebras", c5),
        ("hom-side composition criterion", c6),
        ("coherence at (j, j)", c7),
        ("algebras vs lifting functions", c8),
        ("anodyne certificates", c9),
        ("trough", c10),
        ("mates", c11),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let n = k + 1;
        let t = Instant::now();
        let (pass, detail) = match run() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let tag = match (pass, LEDGERED.contains(&n)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (ledgered)",
            (false, false) => "FAIL",
        };
        println!("criterion {n:>2} {tag}: {name} -- {detail} [{:.2}s]", t.elapsed().as_secs_f64());
        if !pass {
            failed.push(n);
        }
    }
    println!("{}/11 pass, failing {:?}, total {:.1}s", 11 - failed.len(), failed, start.elapsed().as_secs_f64());
    if failed.iter().any(|n| !LEDGERED.contains(n)) {
        std::process::exit(1);
    }
}
