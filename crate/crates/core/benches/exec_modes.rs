//! Sequential against rayon-parallel execution of the data-parallel workloads.
//!
//! `cargo bench -p relsyl-core`. Built without the `parallel` feature both modes run sequentially.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use relsyl::copying::{build_copies_with, choose, random_preframe, ChoicePolicy};
use relsyl::fuzz::soundness_campaign;
use relsyl::proofs::corpus::corpus_entry;
use relsyl::proofs::{check_proof_with, AxiomName, CheckOptions};
use relsyl::solver::{is_sat_with, is_valid_with, SolverConfig};
use relsyl::syntax::parse_formula;
use relsyl::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn campaign(c: &mut Criterion) {
    let schemes: Vec<AxiomName> = AxiomName::all().collect();
    let mut g = c.benchmark_group("soundness_campaign");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "27x2000"), |b| {
            b.iter(|| soundness_campaign(black_box(&schemes), 2000, 6, 1, exec))
        });
    }
    g.finish();
}

fn solver(c: &mut Criterion) {
    let sat = parse_formula("EE(a,b)[r] & AA(a,c)[-r] & AE(b,c)[r^*s] & !EE(c,a)[s] & AE(c,b)[-s]").unwrap();
    let valid = parse_formula("EA(a,b)[r] & AA(b,c)[s] -> AE(a,c)[1] | a = 0").unwrap();
    let mut g = c.benchmark_group("solver");
    g.sample_size(20);
    for (name, exec) in MODES {
        let cfg = SolverConfig { exec, ..SolverConfig::default() };
        g.bench_function(BenchmarkId::new(name, "is_sat bound 4"), |b| {
            b.iter(|| is_sat_with(black_box(&sat), 4, &cfg))
        });
        g.bench_function(BenchmarkId::new(name, "is_valid bound 4"), |b| {
            b.iter(|| is_valid_with(black_box(&valid), 4, &cfg))
        });
    }
    g.finish();
}

fn copying(c: &mut Criterion) {
    let pre = random_preframe(40, 8, 3);
    let choices = choose(&pre, ChoicePolicy::Seeded(3)).unwrap();
    let mut g = c.benchmark_group("build_copies");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, format!("{} points", pre.points().len())), |b| {
            b.iter(|| build_copies_with(black_box(&pre), &choices, exec))
        });
    }
    g.finish();
}

fn proofs(c: &mut Criterion) {
    let proof = corpus_entry("diagonal-two").unwrap().proof;
    let mut g = c.benchmark_group("check_proof");
    for (name, exec) in MODES {
        let opts = CheckOptions { exec, ..CheckOptions::default() };
        g.bench_function(BenchmarkId::new(name, format!("{} lines", proof.lines.len())), |b| {
            b.iter(|| check_proof_with(black_box(&proof), &opts))
        });
    }
    g.finish();
}

criterion_group!(benches, campaign, solver, copying, proofs);
criterion_main!(benches);
