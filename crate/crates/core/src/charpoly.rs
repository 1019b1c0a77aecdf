//! Characteristic polynomials `det(xI - A)` by three independent routes,
//! matching numbers of forests, and the coefficient quasi-order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{Graph, GraphError};
use crate::poly::IntPoly;

fn too_small(family: &'static str, n: usize, min: usize) -> GraphError {
    GraphError::TooSmall { family, n, min }
}

/// `x p - q`.
fn step(p: &IntPoly, q: &IntPoly) -> IntPoly {
    &p.shift(1) - q
}

/// Path polynomials `phi(P_0), ..., phi(P_n)` with `phi(P_0) = 1`.
fn path_table(n: usize) -> Vec<IntPoly> {
    let mut t = Vec::with_capacity(n + 1);
    t.push(IntPoly::one());
    if n >= 1 {
        t.push(IntPoly::x());
    }
    for k in 2..=n {
        let next = step(&t[k - 1], &t[k - 2]);
        t.push(next);
    }
    t
}

/// `phi(P_n)` from `phi(P_1) = x`, `phi(P_2) = x^2 - 1` and
/// `phi(P_n) = x phi(P_{n-1}) - phi(P_{n-2})`.
pub fn charpoly_path(n: usize) -> Result<IntPoly, GraphError> {
    if n < 1 {
        return Err(too_small("path", n, 1));
    }
    Ok(path_table(n).pop().expect("table is nonempty"))
}

/// `phi(C_n) = phi(P_n) - phi(P_{n-2}) - 2`.
pub fn charpoly_cycle(n: usize) -> Result<IntPoly, GraphError> {
    if n < 3 {
        return Err(too_small("cycle", n, 3));
    }
    let t = path_table(n);
    Ok(&(&t[n] - &t[n - 2]) - &IntPoly::from_i64s(&[2]))
}

/// `phi(P_7^6) = x^7 - 7x^5 + 13x^3 - 7x`.
pub fn p6_seed_7() -> IntPoly {
    IntPoly::from_i64s(&[0, -7, 0, 13, 0, -7, 0, 1])
}

/// `phi(P_8^6) = x^8 - 8x^6 + 19x^4 - 16x^2 + 4`.
pub fn p6_seed_8() -> IntPoly {
    IntPoly::from_i64s(&[4, 0, -16, 0, 19, 0, -8, 0, 1])
}

/// `phi(P_n^6)` by the three-term recurrence from the `n = 7, 8` seeds.
pub fn charpoly_p6(n: usize) -> Result<IntPoly, GraphError> {
    if n < 7 {
        return Err(too_small("p6", n, 7));
    }
    let (mut prev, mut cur) = (p6_seed_7(), p6_seed_8());
    if n == 7 {
        return Ok(prev);
    }
    for _ in 9..=n {
        let next = step(&cur, &prev);
        prev = core::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Faddeev-LeVerrier over big integers.
///
/// With `M_0 = 0`, `c_n = 1`, the recurrence `M_k = A M_{k-1} + c_{n-k+1} I`,
/// `c_{n-k} = -tr(A M_k) / k` yields every coefficient; the division is
/// exact. `A` is applied through adjacency lists.
pub fn charpoly_general(g: &Graph) -> IntPoly {
    let n = g.n();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // am = A * M_{k-1}
        let mut am = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for &j in g.neighbors(i) {
                for col in 0..n {
                    let v = &m[j * n + col];
                    if !v.is_zero() {
                        am[i * n + col] += v;
                    }
                }
            }
        }
        for i in 0..n {
            am[i * n + i] += &c[n - k + 1];
        }
        m = am;
        // tr(A M_k) = sum_i sum_{j ~ i} M_k[j][i]
        let mut tr = BigInt::zero();
        for i in 0..n {
            for &j in g.neighbors(i) {
                tr += &m[j * n + i];
            }
        }
        c[n - k] = -(tr / BigInt::from(k));
    }
    IntPoly::from_coeffs(c)
}

/// Subgraph state for the deletion recursion: surviving vertices plus the
/// edges of `g` removed so far.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct State {
    mask: u128,
    removed: Vec<(usize, usize)>,
}

struct Deletion<'a> {
    g: &'a Graph,
    memo: BTreeMap<State, IntPoly>,
}

fn bit(v: usize) -> u128 {
    1u128 << v
}

fn norm_edge(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Deletion<'_> {
    fn alive(&self, s: &State, u: usize, v: usize) -> bool {
        s.mask & bit(u) != 0
            && s.mask & bit(v) != 0
            && !s.removed.contains(&norm_edge(u, v))
    }

    fn nbrs(&self, s: &State, v: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.alive(s, v, w))
            .collect()
    }

    /// Drops removed edges whose endpoints are gone, so equal subgraphs share
    /// one memo key.
    fn canonical(&self, mask: u128, removed: &[(usize, usize)]) -> State {
        let mut r: Vec<_> = removed
            .iter()
            .copied()
            .filter(|&(a, b)| mask & bit(a) != 0 && mask & bit(b) != 0)
            .collect();
        r.sort_unstable();
        r.dedup();
        State { mask, removed: r }
    }

    fn components(&self, s: &State) -> Vec<u128> {
        let mut seen = 0u128;
        let mut out = Vec::new();
        for v in 0..self.g.n() {
            if s.mask & bit(v) == 0 || seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            let mut stack = vec![v];
            while let Some(a) = stack.pop() {
                for b in self.nbrs(s, a) {
                    if comp & bit(b) == 0 {
                        comp |= bit(b);
                        stack.push(b);
                    }
                }
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    fn phi(&mut self, s: State) -> IntPoly {
        if s.mask == 0 {
            return IntPoly::one();
        }
        if let Some(p) = self.memo.get(&s) {
            return p.clone();
        }
        let comps = self.components(&s);
        let result = if comps.len() > 1 {
            let mut acc = IntPoly::one();
            for c in comps {
                let sub = self.canonical(c, &s.removed);
                acc = &acc * &self.phi(sub);
            }
            acc
        } else {
            self.phi_connected(&s)
        };
        self.memo.insert(s, result.clone());
        result
    }

    fn phi_connected(&mut self, s: &State) -> IntPoly {
        let verts: Vec<usize> = (0..self.g.n()).filter(|&v| s.mask & bit(v) != 0).collect();
        if verts.len() == 1 {
            return IntPoly::x();
        }
        // pendant rule on the highest-index leaf
        if let Some(&v) = verts.iter().rev().find(|&&v| self.nbrs(s, v).len() == 1) {
            let u = self.nbrs(s, v)[0];
            let without_v = self.canonical(s.mask & !bit(v), &s.removed);
            let without_uv = self.canonical(s.mask & !bit(v) & !bit(u), &s.removed);
            return &self.phi(without_v).shift(1) - &self.phi(without_uv);
        }
        // no leaves: a lone cycle, cut at its lowest edge
        let u = verts[0];
        let v = self.nbrs(s, u)[0];
        self.edge_rule(s, u, v)
    }

    /// `phi(S) = phi(S - uv) - phi(S - u - v) - 2 sum_{C through uv} phi(S - C)`.
    fn edge_rule(&mut self, s: &State, u: usize, v: usize) -> IntPoly {
        let mut removed = s.removed.clone();
        removed.push(norm_edge(u, v));
        let minus_edge = self.canonical(s.mask, &removed);
        let mut acc = self.phi(minus_edge.clone());
        let minus_uv = self.canonical(s.mask & !bit(u) & !bit(v), &s.removed);
        acc = &acc - &self.phi(minus_uv);
        if let Some(cycle) = self.path_avoiding(&minus_edge, v, u) {
            let cmask = cycle.iter().fold(0u128, |m, &w| m | bit(w));
            let rest = self.canonical(s.mask & !cmask, &s.removed);
            acc = &acc - &self.phi(rest).scale(&BigInt::from(2));
        }
        acc
    }

    /// A path from `a` to `b` in state `s` (BFS), if any.
    fn path_avoiding(&self, s: &State, a: usize, b: usize) -> Option<Vec<usize>> {
        let n = self.g.n();
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut queue = alloc::collections::VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[cur];
                    path.push(cur);
                }
                return Some(path);
            }
            for y in self.nbrs(s, x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// `phi(G)` by edge deletion, starting from the given edge.
///
/// Accepts graphs whose cycle space has dimension at most 1 (forests and
/// unicyclic graphs, possibly disconnected) on at most 128 vertices.
pub fn charpoly_deletion(g: &Graph, edge: (usize, usize)) -> Result<IntPoly, GraphError> {
    const MAX: usize = 128;
    if g.n() > MAX {
        return Err(GraphError::TooLarge { n: g.n(), max: MAX });
    }
    let cyc = g.cyclomatic_number();
    if cyc >= 2 {
        return Err(GraphError::TooManyCycles(cyc));
    }
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge(u, v));
    }
    let mut d = Deletion {
        g,
        memo: BTreeMap::new(),
    };
    let full = if g.n() == MAX {
        u128::MAX
    } else {
        bit(g.n()) - 1
    };
    let s = d.canonical(full, &[]);
    Ok(d.edge_rule(&s, u, v))
}

/// The cheapest exact route: edge deletion for graphs with at most one
/// cycle, Faddeev-LeVerrier otherwise.
pub fn charpoly_auto(g: &Graph) -> IntPoly {
    if g.cyclomatic_number() <= 1 && g.n() <= 128 {
        if let Some(&e) = g.edges().first() {
            if let Ok(p) = charpoly_deletion(g, e) {
                return p;
            }
        }
    }
    charpoly_general(g)
}

/// `m(T, k)` for `k = 0..=n/2`: the number of `k`-edge matchings of a forest.
///
/// Each tree is rooted at its smallest vertex (vertex 0 for a tree). For
/// every vertex the DP keeps two generating polynomials in the matching
/// size: all matchings of its subtree, and those leaving the vertex free to
/// pair with its parent.
pub fn matching_numbers(t: &Graph) -> Result<Vec<BigInt>, GraphError> {
    if !t.is_forest() {
        return Err(GraphError::NotAForest);
    }
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in t.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
    }
    let mut total = vec![IntPoly::one(); n];
    let mut free = vec![IntPoly::one(); n];
    for &v in order.iter().rev() {
        let children: Vec<usize> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&c| parent[c] == v)
            .collect();
        let mut f = IntPoly::one();
        for &c in &children {
            f = &f * &total[c];
        }
        let mut matched = IntPoly::zero();
        for (i, &c) in children.iter().enumerate() {
            let mut term = free[c].shift(1);
            for (j, &d) in children.iter().enumerate() {
                if i != j {
                    term = &term * &total[d];
                }
            }
            matched = &matched + &term;
        }
        total[v] = &f + &matched;
        free[v] = f;
    }
    let mut all = IntPoly::one();
    for v in 0..n {
        if parent[v] == usize::MAX {
            all = &all * &total[v];
        }
    }
    Ok((0..=n / 2).map(|k| all.coeff(k)).collect())
}

/// `sum_k (-1)^k m_k x^(n - 2k)`.
pub fn charpoly_from_matchings(n: usize, m: &[BigInt]) -> IntPoly {
    let mut c = vec![BigInt::zero(); n + 1];
    for (k, mk) in m.iter().enumerate() {
        if 2 * k <= n {
            c[n - 2 * k] = if k % 2 == 1 { -mk.clone() } else { mk.clone() };
        }
    }
    IntPoly::from_coeffs(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum QuasiOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Componentwise comparison of two coefficient lists.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuasiOrderResult {
    pub verdict: QuasiOrder,
    /// First index where the first list is strictly smaller.
    pub witness_less: Option<usize>,
    /// First index where the first list is strictly larger.
    pub witness_greater: Option<usize>,
}

impl QuasiOrderResult {
    /// Checks both witnesses against the lists.
    pub fn verify(&self, b1: &[BigInt], b2: &[BigInt]) -> bool {
        let get = |b: &[BigInt], k: usize| b.get(k).cloned().unwrap_or_default();
        let ok_less = self.witness_less.is_none_or(|k| get(b1, k) < get(b2, k));
        let ok_greater = self.witness_greater.is_none_or(|k| get(b1, k) > get(b2, k));
        let expected = match (self.witness_less, self.witness_greater) {
            (None, None) => QuasiOrder::Equal,
            (Some(_), None) => QuasiOrder::Less,
            (None, Some(_)) => QuasiOrder::Greater,
            (Some(_), Some(_)) => QuasiOrder::Incomparable,
        };
        ok_less && ok_greater && expected == self.verdict
    }
}

/// Compares `b1` and `b2` entrywise, padding the shorter with zeros.
pub fn quasi_order_compare(b1: &[BigInt], b2: &[BigInt]) -> QuasiOrderResult {
    let len = b1.len().max(b2.len());
    let zero = BigInt::zero();
    let mut less = None;
    let mut greater = None;
    for k in 0..len {
        let a = b1.get(k).unwrap_or(&zero);
        let b = b2.get(k).unwrap_or(&zero);
        match a.cmp(b) {
            Ordering::Less if less.is_none() => less = Some(k),
            Ordering::Greater if greater.is_none() => greater = Some(k),
            _ => {}
        }
    }
    let verdict = match (less, greater) {
        (None, None) => QuasiOrder::Equal,
        (Some(_), None) => QuasiOrder::Less,
        (None, Some(_)) => QuasiOrder::Greater,
        (Some(_), Some(_)) => QuasiOrder::Incomparable,
    };
    QuasiOrderResult {
        verdict,
        witness_less: less,
        witness_greater: greater,
    }
}
