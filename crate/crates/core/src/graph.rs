//! Simple undirected graphs and the families under study.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("{family} requires n >= {min}, got {n}")]
    TooSmall { family: &'static str, n: usize, min: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {u}-{v} references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph spec `{0}` (expected cycle:<n>, p6:<n>, path:<n> or file:<path>)")]
    MalformedSpec(String),
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("graph has {0} independent cycles; at most one is supported")]
    TooManyCycles(usize),
    #[error("graph contains a cycle")]
    NotAForest,
    #[error("graph has {n} vertices; at most {max} are supported here")]
    TooLarge { n: usize, max: usize },
}

/// An immutable simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted. Connectivity and
/// bipartiteness are computed once at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    connected: bool,
    bipartite: bool,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Result of a two-colouring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Colour (0 or 1) of every vertex.
    Bipartite { coloring: Vec<u8> },
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle { cycle: Vec<usize> },
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite { .. })
    }

    /// Checks the witness against `g` without trusting how it was produced.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Bipartition::Bipartite { coloring } => {
                coloring.len() == g.n()
                    && coloring.iter().all(|&c| c <= 1)
                    && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
            }
            Bipartition::OddCycle { cycle } => {
                let k = cycle.len();
                if k < 3 || k % 2 == 0 {
                    return false;
                }
                let mut seen = vec![false; g.n()];
                for &v in cycle {
                    if v >= g.n() || seen[v] {
                        return false;
                    }
                    seen[v] = true;
                }
                (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
            }
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ends.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push(if u < v { (u, v) } else { (v, u) });
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut g = Graph {
            n,
            edges: canon,
            adj,
            connected: false,
            bipartite: false,
        };
        g.connected = g.component_count() == 1;
        g.bipartite = g.two_color().is_bipartite();
        Ok(g)
    }

    /// The cycle `C_n`: edges `{i, i+1 mod n}`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall { family: "cycle", n, min: 3 });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    /// The path `P_n` on vertices `0..n`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::TooSmall { family: "path", n, min: 1 });
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    /// `P_n^6`: hexagon on `0..6`, edge `{0, 6}`, path on `6..n`.
    pub fn p6(n: usize) -> Result<Self, GraphError> {
        if n < 7 {
            return Err(GraphError::TooSmall { family: "p6", n, min: 7 });
        }
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 6));
        edges.extend((7..n).map(|i| (i - 1, i)));
        Graph::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Bipartiteness flag computed at construction (per component).
    pub fn bipartite_flag(&self) -> bool {
        self.bipartite
    }

    /// Number of connected components, by a fresh BFS.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Number of independent cycles, `m - n + c`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edges.len() + self.component_count() - self.n
    }

    pub fn is_unicyclic(&self) -> bool {
        self.connected && self.edges.len() == self.n
    }

    pub fn is_forest(&self) -> bool {
        self.cyclomatic_number() == 0
    }

    /// Two-colouring of a connected graph with a verifiable witness.
    pub fn is_bipartite(&self) -> Result<Bipartition, GraphError> {
        if !self.connected {
            return Err(GraphError::Disconnected);
        }
        Ok(self.two_color())
    }

    fn two_color(&self) -> Bipartition {
        const UNSET: usize = usize::MAX;
        let mut color = vec![0u8; self.n];
        let mut parent = vec![UNSET; self.n];
        let mut depth = vec![UNSET; self.n];
        for s in 0..self.n {
            if depth[s] != UNSET {
                continue;
            }
            depth[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if depth[w] == UNSET {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        // climb to the lowest common ancestor
                        let (mut a, mut b) = (u, w);
                        let mut left = vec![a];
                        let mut right = vec![b];
                        while depth[a] > depth[b] {
                            a = parent[a];
                            left.push(a);
                        }
                        while depth[b] > depth[a] {
                            b = parent[b];
                            right.push(b);
                        }
                        while a != b {
                            a = parent[a];
                            b = parent[b];
                            left.push(a);
                            right.push(b);
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        return Bipartition::OddCycle { cycle: left };
                    }
                }
            }
        }
        Bipartition::Bipartite { coloring: color }
    }

    /// Same graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// Adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for &(u, v) in &self.edges {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }

    /// Parses the edge-list format: a header line `n <count>` followed by one
    /// whitespace-separated `u v` pair per line, 0-indexed. Blank lines are
    /// ignored. Disconnected graphs are rejected.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing `n <count>` header".to_string(),
        })?;
        let mut head = header.split_whitespace();
        let n = match (head.next(), head.next(), head.next()) {
            (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| GraphError::Parse {
                line: hline,
                msg: format!("bad vertex count `{count}`"),
            })?,
            _ => {
                return Err(GraphError::Parse {
                    line: hline,
                    msg: "expected `n <count>` header".to_string(),
                })
            }
        };
        let mut edges = Vec::new();
        for (line, body) in lines {
            let mut parts = body.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                let tok = tok.ok_or(GraphError::Parse {
                    line,
                    msg: "expected `u v`".to_string(),
                })?;
                tok.parse::<usize>().map_err(|_| GraphError::Parse {
                    line,
                    msg: format!("bad vertex index `{tok}`"),
                })
            };
            let u = parse(parts.next())?;
            let v = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(GraphError::Parse {
                    line,
                    msg: "trailing tokens after `u v`".to_string(),
                });
            }
            edges.push((u, v));
        }
        let g = Graph::new(n, &edges)?;
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Canonical edge-list text (header, then edges in sorted order).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// The named families with closed-form characteristic polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Family {
    Cycle(usize),
    P6(usize),
    Path(usize),
}

impl Family {
    pub fn order(self) -> usize {
        match self {
            Family::Cycle(n) | Family::P6(n) | Family::Path(n) => n,
        }
    }

    pub fn build(self) -> Result<Graph, GraphError> {
        match self {
            Family::Cycle(n) => Graph::cycle(n),
            Family::P6(n) => Graph::p6(n),
            Family::Path(n) => Graph::path(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::P6(n) => write!(f, "p6:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
        }
    }
}

/// A parsed graph spec: `cycle:<n>`, `p6:<n>`, `path:<n>` or `file:<path>`.
///
/// File specs are resolved by the caller, which owns IO.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Family(Family),
    File(String),
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::MalformedSpec(spec.to_string());
        let (kind, arg) = spec.split_once(':').ok_or_else(bad)?;
        if kind == "file" {
            if arg.is_empty() {
                return Err(bad());
            }
            return Ok(GraphSpec::File(arg.to_string()));
        }
        let n: usize = arg.parse().map_err(|_| bad())?;
        let family = match kind {
            "cycle" => Family::Cycle(n),
            "p6" => Family::P6(n),
            "path" => Family::Path(n),
            _ => return Err(bad()),
        };
        // validate the order now so bad specs fail at parse time
        family.build()?;
        Ok(GraphSpec::Family(family))
    }
}

/// A graph together with the spec text it came from.
#[derive(Debug, Clone)]
pub struct Subject {
    pub label: String,
    pub graph: Graph,
    pub family: Option<Family>,
}

impl Subject {
    pub fn from_family(family: Family) -> Result<Self, GraphError> {
        Ok(Subject {
            label: family.to_string(),
            graph: family.build()?,
            family: Some(family),
        })
    }

    pub fn from_graph(label: impl Into<String>, graph: Graph) -> Result<Self, GraphError> {
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(Subject {
            label: label.into(),
            graph,
            family: None,
        })
    }

    /// Parses a non-file spec.
    pub fn parse(spec: &str) -> Result<Self, GraphError> {
        match spec.parse::<GraphSpec>()? {
            GraphSpec::Family(f) => Subject::from_family(f),
            GraphSpec::File(_) => Err(GraphError::MalformedSpec(spec.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_four_edges() {
        let g = Graph::cycle(4).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!((0..4).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn triangle() {
        let g = Graph::cycle(3).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(!g.bipartite_flag());
    }

    #[test]
    fn small_orders_rejected() {
        assert!(matches!(Graph::cycle(2), Err(GraphError::TooSmall { .. })));
        assert!(matches!(Graph::p6(6), Err(GraphError::TooSmall { .. })));
        assert!(matches!(Graph::path(0), Err(GraphError::TooSmall { .. })));
    }

    #[test]
    fn p6_shape() {
        let g = Graph::p6(7).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(6), 1);
        let g = Graph::p6(8).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree_sequence().iter().filter(|&&d| d == 3).count(), 1);
        let g = Graph::p6(16).unwrap();
        assert!(g.is_unicyclic());
        assert!(g.is_bipartite().unwrap().verify(&g));
        assert!(g.is_bipartite().unwrap().is_bipartite());
    }

    #[test]
    fn paths() {
        assert_eq!(Graph::path(1).unwrap().edge_count(), 0);
        assert_eq!(Graph::path(2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(Graph::path(5).unwrap().degree_sequence(), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn odd_cycle_witness() {
        let g = Graph::cycle(5).unwrap();
        let w = g.is_bipartite().unwrap();
        match &w {
            Bipartition::OddCycle { cycle } => assert_eq!(cycle.len(), 5),
            _ => panic!("expected odd cycle"),
        }
        assert!(w.verify(&g));
        // a triangle hanging off a path
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let w = g.is_bipartite().unwrap();
        assert!(!w.is_bipartite());
        assert!(w.verify(&g));
    }

    #[test]
    fn even_cycles_bipartite() {
        for n in [4, 6, 18] {
            let g = Graph::cycle(n).unwrap();
            let w = g.is_bipartite().unwrap();
            assert!(w.is_bipartite() && w.verify(&g));
        }
        assert!(Graph::p6(10).unwrap().is_bipartite().unwrap().is_bipartite());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.is_bipartite(), Err(GraphError::Disconnected));
        assert_eq!(
            Graph::from_edge_list("n 4\n0 1\n2 3\n"),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn invalid_edges() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edge_list("n 2\n0 2\n"),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_edge_list("n 2\n0 1").unwrap();
        assert_eq!(g, Graph::path(2).unwrap());
        let text = "n 5\n3 4\n0 1\n\n2 1\n4 0\n";
        let g = Graph::from_edge_list(text).unwrap();
        let canon = g.to_edge_list();
        assert_eq!(canon, "n 5\n0 1\n0 4\n1 2\n3 4\n");
        assert_eq!(Graph::from_edge_list(&canon).unwrap().to_edge_list(), canon);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(Graph::from_edge_list(""), Err(GraphError::Parse { .. })));
        assert!(matches!(Graph::from_edge_list("5\n0 1"), Err(GraphError::Parse { .. })));
        assert!(matches!(
            Graph::from_edge_list("n 3\n0 1 2\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("n 3\n0 x\n"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "cycle:18".parse::<GraphSpec>().unwrap(),
            GraphSpec::Family(Family::Cycle(18))
        );
        assert_eq!(
            "p6:16".parse::<GraphSpec>().unwrap(),
            GraphSpec::Family(Family::P6(16))
        );
        assert_eq!(
            "file:k2.edges".parse::<GraphSpec>().unwrap(),
            GraphSpec::File("k2.edges".into())
        );
        for bad in ["cycle", "cycle:", "cycle:x", "wheel:5", "file:", "p6:3"] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad}");
        }
        assert_eq!(Subject::parse("cycle:18").unwrap().graph, Graph::cycle(18).unwrap());
    }

    #[test]
    fn cyclomatic() {
        assert_eq!(Graph::path(6).unwrap().cyclomatic_number(), 0);
        assert_eq!(Graph::p6(9).unwrap().cyclomatic_number(), 1);
        let theta = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(theta.cyclomatic_number(), 2);
    }
}
