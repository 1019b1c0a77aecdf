#![allow(dead_code)]

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use graph_energy::report::{from_json, RunReport};
use graph_energy_core::enumerate::unicyclic_bipartite_from;
use graph_energy_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BIN: &str = env!("CARGO_BIN_EXE_graph-energy");

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub elapsed: Duration,
}

impl Run {
    pub fn report(&self) -> RunReport {
        from_json(&self.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}):\n{}", self.stdout))
    }
}

pub fn run(args: &[&str]) -> Run {
    let start = Instant::now();
    let Output {
        status,
        stdout,
        stderr,
    } = Command::new(BIN).args(args).output().expect("binary runs");
    Run {
        code: status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&stdout).into_owned(),
        stderr: String::from_utf8_lossy(&stderr).into_owned(),
        elapsed: start.elapsed(),
    }
}

/// A connected unicyclic bipartite graph on `n` vertices.
pub fn random_unicyclic_bipartite(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
        if let Some(g) = unicyclic_bipartite_from(&seq, n, rng.random_range(0..1000)) {
            return g;
        }
    }
}

/// `count` pairs of equal order in `[6, n_max]`, reproducible from `seed`.
pub fn random_pairs(seed: u64, count: usize, n_max: usize) -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(6..=n_max);
            (
                random_unicyclic_bipartite(&mut rng, n),
                random_unicyclic_bipartite(&mut rng, n),
            )
        })
        .collect()
}
