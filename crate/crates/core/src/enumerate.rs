//! Exhaustive search over labelled connected unicyclic bipartite graphs.
//!
//! Every labelled tree on `n` vertices is decoded from its Prüfer sequence.
//! Adding a non-edge `(u, v)` at odd tree distance closes an even cycle. A
//! unicyclic graph arises from as many trees as its cycle has edges; it is
//! kept only when the added edge is the largest edge of the cycle, so each
//! graph is visited exactly once.

use alloc::vec::Vec;

use crate::eigen::symmetric_eigenvalues;
use crate::energy::EnergyError;
use crate::graph::{Graph, GraphError};

pub const EXHAUSTIVE_MIN_N: usize = 7;
pub const EXHAUSTIVE_MAX_N: usize = 8;

/// Graphs whose energy ties `E(P_n^6)` within this tolerance count as ties.
pub const TIE_TOL: f64 = 1e-9;

/// Tree with vertices `0..n` from a Prüfer sequence of length `n - 2`.
pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = alloc::vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf.min(a), leaf.max(a)));
        degree[leaf] -= 1;
        degree[a] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Parent pointers and depths of a tree rooted at 0.
fn root_tree(n: usize, edges: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let mut adj = alloc::vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = alloc::vec![usize::MAX; n];
    let mut depth = alloc::vec![0usize; n];
    let mut stack = alloc::vec![0usize];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                stack.push(w);
            }
        }
    }
    (parent, depth)
}

/// Edges of the tree path from `u` to `v`, each as `(min, max)`.
fn tree_path(parent: &[usize], depth: &[usize], mut u: usize, mut v: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    while u != v {
        if depth[u] >= depth[v] {
            out.push((u.min(parent[u]), u.max(parent[u])));
            u = parent[u];
        } else {
            out.push((v.min(parent[v]), v.max(parent[v])));
            v = parent[v];
        }
    }
    out
}

/// Non-edges of a tree whose addition closes an even cycle, i.e. pairs at
/// odd tree distance of at least 3.
pub fn even_cycle_chords(n: usize, tree: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let (parent, depth) = root_tree(n, tree);
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let len = tree_path(&parent, &depth, u, v).len();
            if len >= 3 && len % 2 == 1 {
                out.push((u, v));
            }
        }
    }
    out
}

/// A connected unicyclic bipartite graph: the tree of `seq` (entries in
/// `0..n`) plus chord number `choice % count` from [`even_cycle_chords`].
/// `None` when the tree has no such chord (a star, for instance).
pub fn unicyclic_bipartite_from(seq: &[usize], n: usize, choice: usize) -> Option<Graph> {
    if n < 4 || seq.len() != n - 2 || seq.iter().any(|&a| a >= n) {
        return None;
    }
    let mut edges = prufer_decode(seq, n);
    let chords = even_cycle_chords(n, &edges);
    if chords.is_empty() {
        return None;
    }
    edges.push(chords[choice % chords.len()]);
    Graph::new(n, &edges).ok()
}

/// True for a unicyclic graph isomorphic to `P_n^6`: cycle length 6 and
/// degree multiset `{3, 2, ..., 2, 1}` (for `n = 7` the leaf hangs directly
/// on the cycle).
pub fn is_p6_shape(g: &Graph, cycle_len: usize) -> bool {
    if cycle_len != 6 || !g.is_unicyclic() {
        return false;
    }
    let mut d = g.degree_sequence();
    d.sort_unstable();
    let n = g.n();
    n >= 7 && d[0] == 1 && d[1] == 2 && d[n - 1] == 3 && d[n - 2] == 2
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExhaustiveReport {
    pub n: usize,
    pub trees: usize,
    /// Distinct labelled connected unicyclic bipartite graphs visited.
    pub graphs: usize,
    /// Labelled copies of `C_n`.
    pub cycle_copies: usize,
    /// Labelled copies of `P_n^6`.
    pub p6_copies: usize,
    pub energy_p6: f64,
    /// Largest energy among graphs that are neither `C_n` nor `P_n^6`.
    pub max_other_energy: f64,
    /// A graph other than `C_n` and `P_n^6` with `E(G) >= E(P_n^6) - TIE_TOL`.
    pub counterexample: Option<Vec<(usize, usize)>>,
}

impl ExhaustiveReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Combines two partial reports over disjoint Prüfer ranges.
    pub fn merge(mut self, other: ExhaustiveReport) -> ExhaustiveReport {
        self.trees += other.trees;
        self.graphs += other.graphs;
        self.cycle_copies += other.cycle_copies;
        self.p6_copies += other.p6_copies;
        self.max_other_energy = self.max_other_energy.max(other.max_other_energy);
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }
}

fn check_order(n: usize) -> Result<(), EnergyError> {
    if n < EXHAUSTIVE_MIN_N {
        return Err(GraphError::TooSmall {
            family: "exhaustive",
            n,
            min: EXHAUSTIVE_MIN_N,
        }
        .into());
    }
    if n > EXHAUSTIVE_MAX_N {
        return Err(GraphError::TooLarge {
            n,
            max: EXHAUSTIVE_MAX_N,
        }
        .into());
    }
    Ok(())
}

/// Number of Prüfer sequences (labelled trees) on `n` vertices.
pub fn tree_count(n: usize) -> usize {
    n.pow((n - 2) as u32)
}

fn energy(g: &Graph) -> Result<f64, EnergyError> {
    let vals = symmetric_eigenvalues(&g.adjacency_matrix(), g.n()).map_err(|e| {
        EnergyError::NoConvergence {
            rotations: e.rotations,
            partial: e.diagonal,
        }
    })?;
    Ok(vals.iter().map(|v| v.abs()).sum())
}

/// Scans the Prüfer sequences with indices in `range` (base-`n` digits).
pub fn exhaustive_range(
    n: usize,
    range: core::ops::Range<usize>,
) -> Result<ExhaustiveReport, EnergyError> {
    check_order(n)?;
    let energy_p6 = energy(&Graph::p6(n)?)?;
    let mut report = ExhaustiveReport {
        n,
        energy_p6,
        max_other_energy: f64::NEG_INFINITY,
        ..ExhaustiveReport::default()
    };
    let mut seq = alloc::vec![0usize; n - 2];
    for index in range.start..range.end.min(tree_count(n)) {
        let mut k = index;
        for slot in seq.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        let tree = prufer_decode(&seq, n);
        report.trees += 1;
        let (parent, depth) = root_tree(n, &tree);
        for u in 0..n {
            for v in u + 1..n {
                if tree.contains(&(u, v)) {
                    continue;
                }
                let path = tree_path(&parent, &depth, u, v);
                let cycle_len = path.len() + 1;
                if cycle_len % 2 == 1 || path.iter().any(|&e| e > (u, v)) {
                    continue;
                }
                let mut edges = tree.clone();
                edges.push((u, v));
                let g = Graph::new(n, &edges)?;
                report.graphs += 1;
                if cycle_len == n {
                    report.cycle_copies += 1;
                    continue;
                }
                let e = energy(&g)?;
                if is_p6_shape(&g, cycle_len) {
                    // isomorphic copies must reproduce the reference energy
                    report.p6_copies += 1;
                    if (e - energy_p6).abs() > TIE_TOL && report.counterexample.is_none() {
                        report.counterexample = Some(edges);
                    }
                    continue;
                }
                report.max_other_energy = report.max_other_energy.max(e);
                if e >= energy_p6 - TIE_TOL && report.counterexample.is_none() {
                    report.counterexample = Some(edges);
                }
            }
        }
    }
    Ok(report)
}

/// Checks `E(G) < E(P_n^6)` for every labelled connected unicyclic
/// bipartite `G` on `n` vertices other than `C_n` and copies of `P_n^6`.
pub fn exhaustive_small(n: usize) -> Result<ExhaustiveReport, EnergyError> {
    check_order(n)?;
    exhaustive_range(n, 0..tree_count(n))
}
