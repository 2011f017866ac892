//! Ground truth for small graphs: greedy colouring, exact chromatic number
//! and odd girth.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::colorings::Coloring;
use crate::error::{Error, Result};
use crate::graphs::{build_typegraph, Graph, Subset};
use crate::order_types::{Mark, OrderType};

/// Palette limit of the exact search.
pub const MAX_COLORS: usize = 64;

/// Node limit for [`exact_chromatic`]; `None` searches to completion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_nodes: None }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    /// A proper colouring with exactly `chi` colours.
    pub witness: Coloring,
    pub nodes_explored: u64,
    /// Size of the greedy clique used as starting point.
    pub clique_bound: usize,
    /// Colours used by the DSATUR heuristic.
    pub greedy_bound: usize,
}

/// First-fit colouring along `order`, which must be a permutation of the vertices.
pub fn greedy_coloring<V>(g: &Graph<V>, order: &[usize]) -> Result<Coloring> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || core::mem::replace(&mut seen[v], true)) {
        return Err(Error::BadRange);
    }
    const NONE: usize = usize::MAX;
    let mut color = vec![NONE; n];
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.extend(g.neighbors(v).iter().map(|&u| color[u]).filter(|&c| c != NONE));
        taken.sort_unstable();
        taken.dedup();
        let c = taken.iter().enumerate().find(|&(i, &c)| i != c).map_or(taken.len(), |(i, _)| i);
        color[v] = c;
    }
    Ok(Coloring::from_dense(&color))
}

/// The DSATUR heuristic: repeatedly colour the vertex seeing the most colours.
pub fn dsatur_coloring<V>(g: &Graph<V>) -> Coloring {
    let n = g.vertex_count();
    let mut search = Search::new(g, n.max(1));
    let mut used = 0;
    for _ in 0..n {
        let v = search.select();
        let c = (0..search.k).find(|&c| search.forbid[v * search.k + c] == 0).expect("k = n suffices");
        search.assign(v, c);
        used = used.max(c + 1);
    }
    let colors: Vec<usize> = search.color.iter().map(|&c| c as usize).collect();
    Coloring::from_dense(&colors)
}

/// A clique found greedily: vertices by decreasing degree, kept when adjacent
/// to everything kept so far.
pub fn greedy_clique<V>(g: &Graph<V>) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

pub fn exact_chromatic<V>(g: &Graph<V>, budget: Budget) -> Result<ChromaticResult> {
    exact_chromatic_with(g, budget, &mut |_| false)
}

/// Exact chromatic number by iterative `k`-colourability tests.
///
/// `abort` is polled every few thousand search nodes with the running node
/// count; returning `true` stops the search with [`Error::BudgetExceeded`].
pub fn exact_chromatic_with<V>(
    g: &Graph<V>,
    budget: Budget,
    abort: &mut dyn FnMut(u64) -> bool,
) -> Result<ChromaticResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            witness: Coloring::from_dense(&[]),
            nodes_explored: 0,
            clique_bound: 0,
            greedy_bound: 0,
        });
    }
    let heuristic = dsatur_coloring(g);
    let greedy_bound = heuristic.palette_size();
    let clique_bound = greedy_clique(g).len();
    let mut nodes = 0u64;
    for k in clique_bound..greedy_bound.min(MAX_COLORS + 1) {
        let mut search = Search::new(g, k);
        match search.run(&mut nodes, budget, abort) {
            Outcome::Colored => {
                let colors: Vec<usize> = search.color.iter().map(|&c| c as usize).collect();
                return Ok(ChromaticResult {
                    chi: k,
                    witness: Coloring::from_dense(&colors),
                    nodes_explored: nodes,
                    clique_bound,
                    greedy_bound,
                });
            }
            Outcome::Infeasible => {}
            Outcome::Aborted => {
                return Err(Error::BudgetExceeded { lower: k, upper: greedy_bound, nodes });
            }
        }
    }
    Ok(ChromaticResult {
        chi: greedy_bound,
        witness: heuristic,
        nodes_explored: nodes,
        clique_bound,
        greedy_bound,
    })
}

/// Exact chromatic number of `G(n, τ)`.
///
/// Shift graphs (`τ` = `132` or `231`) are solved by [`shift_graph_chromatic`];
/// every other type goes through the generic search.
pub fn typegraph_chromatic(
    n: u64,
    tau: &OrderType,
    budget: Budget,
    abort: &mut dyn FnMut(u64) -> bool,
) -> Result<(Graph<Subset>, ChromaticResult)> {
    let g = build_typegraph(n, tau)?;
    let r = if is_shift_type(tau) {
        shift_graph_chromatic(&g, n, budget)?
    } else {
        exact_chromatic_with(&g, budget, abort)?
    };
    Ok((g, r))
}

fn is_shift_type(tau: &OrderType) -> bool {
    let s = tau.marks();
    s == [Mark::One, Mark::Three, Mark::Two] || s == [Mark::Two, Mark::Three, Mark::One]
}

/// Exact chromatic number of the shift graph `G(n, 132)`, whose vertices
/// `g` lists as pairs `{i < j}` of `[n]`.
///
/// The graph is `k`-colourable iff there are sets `S_1, …, S_n ⊆ [k]` with
/// `S_i ⊄ S_j` whenever `i < j`: given a colouring take `S_i` to be the
/// colours on the pairs `{i, ·}` starting at `i`; conversely colour `{i, j}`
/// with any element of `S_i ∖ S_j`. The search enumerates such sequences for
/// increasing `k`, so non-colourability is certified by exhaustion.
pub fn shift_graph_chromatic(g: &Graph<Subset>, n: u64, budget: Budget) -> Result<ChromaticResult> {
    let expected = if n < 2 { 0 } else { n * (n - 1) / 2 };
    if g.vertex_count() as u64 != expected || g.vertices().iter().any(|v| v.len() != 2) {
        return Err(Error::SizeMismatch { expected: expected as usize, found: g.vertex_count() });
    }
    let clique_bound = greedy_clique(g).len();
    let greedy_bound = dsatur_coloring(g).palette_size();
    let n = n as usize;
    let mut nodes = 0u64;
    for k in 0..=MAX_SHIFT_COLORS {
        let mut seq = Vec::with_capacity(n);
        match subset_sequence(n, k, &mut seq, &mut nodes, budget) {
            Some(true) => {
                let colors: Vec<usize> = g
                    .vertices()
                    .iter()
                    .map(|p| {
                        let (i, j) = (p[0] as usize - 1, p[1] as usize - 1);
                        (seq[i] & !seq[j]).trailing_zeros() as usize
                    })
                    .collect();
                return Ok(ChromaticResult {
                    chi: k,
                    witness: Coloring::from_dense(&colors),
                    nodes_explored: nodes,
                    clique_bound,
                    greedy_bound,
                });
            }
            Some(false) => {}
            None => return Err(Error::BudgetExceeded { lower: k, upper: greedy_bound, nodes }),
        }
    }
    Err(Error::TooLarge { vertices: g.vertex_count(), limit: MAX_SHIFT_COLORS })
}

/// Largest palette tried by [`shift_graph_chromatic`].
const MAX_SHIFT_COLORS: usize = 16;

/// Depth-first search for `S_1, …, S_n ⊆ [k]` with `S_i ⊄ S_j` for `i < j`.
/// `None` when the node budget runs out.
fn subset_sequence(n: usize, k: usize, seq: &mut Vec<u32>, nodes: &mut u64, budget: Budget) -> Option<bool> {
    if seq.len() == n {
        return Some(true);
    }
    *nodes += 1;
    if budget.max_nodes.is_some_and(|m| *nodes > m) {
        return None;
    }
    let admissible = |m: u32, seq: &[u32]| seq.iter().all(|&s| s & !m != 0);
    let candidates: Vec<u32> = (0..1u32 << k).filter(|&m| admissible(m, seq)).collect();
    // later sets are admissible now and pairwise distinct
    if candidates.len() < n - seq.len() {
        return Some(false);
    }
    for m in candidates {
        seq.push(m);
        match subset_sequence(n, k, seq, nodes, budget) {
            Some(false) => {}
            found => return found,
        }
        seq.pop();
    }
    Some(false)
}

enum Outcome {
    Colored,
    Infeasible,
    Aborted,
}

const UNCOLORED: u32 = u32::MAX;

/// DSATUR backtracking state for a fixed palette size `k`.
struct Search<'g, V> {
    g: &'g Graph<V>,
    k: usize,
    color: Vec<u32>,
    /// `forbid[v * k + c]`: coloured neighbours of `v` with colour `c`.
    forbid: Vec<u32>,
    saturation: Vec<u32>,
    free_degree: Vec<u32>,
    colored: usize,
}

impl<'g, V> Search<'g, V> {
    fn new(g: &'g Graph<V>, k: usize) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            k,
            color: vec![UNCOLORED; n],
            forbid: vec![0; n * k],
            saturation: vec![0; n],
            free_degree: (0..n).map(|v| g.degree(v) as u32).collect(),
            colored: 0,
        }
    }

    /// Uncoloured vertex with maximum saturation, then maximum uncoloured
    /// degree, then lowest index.
    fn select(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0u32, 0u32);
        for v in 0..self.color.len() {
            if self.color[v] != UNCOLORED {
                continue;
            }
            let k = (self.saturation[v], self.free_degree[v]);
            if best == usize::MAX || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c as u32;
        self.colored += 1;
        for &u in self.g.neighbors(v) {
            self.free_degree[u] -= 1;
            let slot = &mut self.forbid[u * self.k + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v] as usize;
        self.color[v] = UNCOLORED;
        self.colored -= 1;
        for &u in self.g.neighbors(v) {
            self.free_degree[u] += 1;
            let slot = &mut self.forbid[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn run(&mut self, nodes: &mut u64, budget: Budget, abort: &mut dyn FnMut(u64) -> bool) -> Outcome {
        struct Frame {
            v: usize,
            next: usize,
            used_before: usize,
        }
        let n = self.color.len();
        if self.k == 0 {
            return if n == 0 { Outcome::Colored } else { Outcome::Infeasible };
        }
        let mut stack: Vec<Frame> = Vec::with_capacity(n);
        let mut used = 0usize;
        loop {
            if self.colored == n {
                return Outcome::Colored;
            }
            *nodes += 1;
            if budget.max_nodes.is_some_and(|m| *nodes > m) || (*nodes & 0xfff == 0 && abort(*nodes)) {
                return Outcome::Aborted;
            }
            let v = self.select();
            stack.push(Frame { v, next: 0, used_before: used });
            // advance the deepest frame to its next admissible colour, popping exhausted ones
            loop {
                let Some(frame) = stack.last_mut() else {
                    return Outcome::Infeasible;
                };
                let v = frame.v;
                if self.color[v] != UNCOLORED {
                    self.unassign(v);
                }
                used = frame.used_before;
                // colours above `used` are interchangeable, so only the first one is tried
                let limit = (used + 1).min(self.k);
                let row = &self.forbid[v * self.k..v * self.k + self.k];
                if let Some(c) = (frame.next..limit).find(|&c| row[c] == 0) {
                    frame.next = c + 1;
                    self.assign(v, c);
                    used = used.max(c + 1);
                    break;
                }
                stack.pop();
            }
        }
    }
}

/// Length of a shortest odd cycle, or `None` for bipartite graphs.
pub fn odd_girth<V>(g: &Graph<V>) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                } else if dist[w] == dist[u] {
                    let len = 2 * dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
