use std::hint::black_box;

use awfs_core::awfs::validate_awfs;
use awfs_core::catfolk::{functor_corpus, gen_d, gen_j, pp, square_corpus, CofAwfs, TrivCofAwfs};
use awfs_core::fincat::{exponential, basic};
use awfs_core::mates::{mate_corpus, pasting_check, roundtrip_check};
use awfs_core::sset::{anodyne_certificate, certificate_verify, sset_pp, horn_inclusion, sphere_inclusion};
use criterion::{criterion_group, criterion_main, Criterion};

fn cat(c: &mut Criterion) {
    let (d, j) = (gen_d(), gen_j());
    c.bench_function("pushout-product d [x] j", |b| b.iter(|| pp(black_box(&d), black_box(&j)).unwrap()));
    let (i, three) = (basic::interval(), basic::chain(3));
    c.bench_function("exponential 3^I", |b| b.iter(|| exponential(black_box(&i), black_box(&three))));
    let corpus = functor_corpus(0, 20);
    let squares = square_corpus(&corpus, 2);
    let (cof, triv) = (CofAwfs::new(), TrivCofAwfs::new());
    c.bench_function("validate cylinder awfs, 20 functors", |b| b.iter(|| validate_awfs(&cof, &corpus, &squares)));
    c.bench_function("validate iso-extension awfs, 20 functors", |b| b.iter(|| validate_awfs(&triv, &corpus, &squares)));
}

fn sset(c: &mut Criterion) {
    let (h, s) = (horn_inclusion(2, 1, 4).unwrap(), sphere_inclusion(1, 4).unwrap());
    c.bench_function("sset_pp horn(2,1) x sphere(1)", |b| b.iter(|| sset_pp(black_box(&h), black_box(&s)).unwrap()));
    c.bench_function("anodyne certificate (1,0,1)", |b| b.iter(|| anodyne_certificate(1, 0, 1).unwrap()));
    c.bench_function("anodyne certificate (2,1,2)", |b| b.iter(|| anodyne_certificate(2, 1, 2).unwrap()));
    let cert = anodyne_certificate(2, 1, 2).unwrap();
    c.bench_function("verify certificate (2,1,2)", |b| b.iter(|| certificate_verify(black_box(&cert))));
}

fn mates(c: &mut Criterion) {
    let corpus = mate_corpus(0, 24);
    c.bench_function("mate roundtrips, 24 squares", |b| b.iter(|| corpus.squares.iter().map(roundtrip_check).count()));
    c.bench_function("pasting checks, 24 grids", |b| b.iter(|| corpus.grids.iter().map(|g| pasting_check(g)).count()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = cat, sset, mates
}
criterion_main!(benches);
