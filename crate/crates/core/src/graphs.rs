//! Type-graphs `G(n, τ)` and the auxiliary graphs `G_b(n)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::order_types::{Mark, OrderType};

/// Upper limit on the number of vertices a materialised graph may have.
pub const MAX_VERTICES: usize = 20_000;

/// A `k`-subset of `[n]`, elements in increasing order.
pub type Subset = Vec<u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// `G(n, τ)` on the `k`-subsets of `[n]`.
    TypeGraph { n: u64, tau: OrderType },
    /// `G_b(n)` on `V_b(n)`.
    Auxiliary { b: usize, n: u64 },
    /// Anything assembled from an explicit edge list.
    Custom,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::TypeGraph { n, tau } => write!(f, "typegraph n={n} type={tau}"),
            GraphKind::Auxiliary { b, n } => write!(f, "gb b={b} n={n}"),
            GraphKind::Custom => f.write_str("custom"),
        }
    }
}

/// An immutable simple graph whose vertices carry payloads of type `V`.
///
/// Edges are stored as index pairs `(u, v)` with `u < v`, sorted.
#[derive(Clone)]
pub struct Graph<V> {
    kind: GraphKind,
    vertices: Vec<V>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    index: BTreeMap<V, usize>,
}

impl<V: Ord + Clone> Graph<V> {
    pub fn new(kind: GraphKind, vertices: Vec<V>, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        for e in edges.iter_mut() {
            if e.0 == e.1 || e.0 >= n || e.1 >= n {
                return Err(Error::BadRange);
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = alloc::vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(Graph { kind, vertices, edges, adjacency, index })
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }
}

impl Graph<usize> {
    /// A graph on `0..n` from an explicit edge list.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::new(GraphKind::Custom, (0..n).collect(), edges.to_vec())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).tuple_combinations().collect();
        Graph::new(GraphKind::Custom, (0..n).collect(), edges).expect("valid edges")
    }

    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(GraphKind::Custom, (0..n).collect(), edges).expect("valid edges")
    }
}

impl<V> Graph<V> {
    pub fn kind(&self) -> &GraphKind {
        &self.kind
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|list| list.binary_search(&v).is_ok())
    }
}

impl<V: fmt::Debug> fmt::Debug for Graph<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("kind", &self.kind)
            .field("vertices", &self.vertices.len())
            .field("edges", &self.edges.len())
            .finish()
    }
}

/// Anything that can answer membership and adjacency queries on payloads.
///
/// Materialised graphs implement it, and so do the implicit descriptions
/// [`TypeGraphSpec`] and [`GbSpec`] for targets too large to build.
pub trait AdjacencyOracle<V> {
    fn contains(&self, v: &V) -> bool;
    fn adjacent(&self, a: &V, b: &V) -> bool;
}

impl<V: Ord + Clone> AdjacencyOracle<V> for Graph<V> {
    fn contains(&self, v: &V) -> bool {
        self.index.contains_key(v)
    }

    fn adjacent(&self, a: &V, b: &V) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge(i, j),
            _ => false,
        }
    }
}

/// `G(n, τ)` described by its parameters only.
#[derive(Clone, Debug)]
pub struct TypeGraphSpec {
    pub n: u64,
    pub tau: OrderType,
}

impl AdjacencyOracle<Subset> for TypeGraphSpec {
    fn contains(&self, v: &Subset) -> bool {
        is_subset_of_range(v, self.tau.width(), self.n)
    }

    fn adjacent(&self, a: &Subset, b: &Subset) -> bool {
        let m = self.tau.marks();
        realizes(m, a, b) || realizes(m, b, a)
    }
}

/// `G_b(n)` described by its parameters only.
#[derive(Clone, Copy, Debug)]
pub struct GbSpec {
    pub b: usize,
    pub n: u64,
}

impl AdjacencyOracle<GbVertex> for GbSpec {
    fn contains(&self, v: &GbVertex) -> bool {
        v.len() == 2 * self.b - 1 && v.is_in_v(self.n)
    }

    fn adjacent(&self, a: &GbVertex, b: &GbVertex) -> bool {
        gb_ordered(&a.0, &b.0) || gb_ordered(&b.0, &a.0)
    }
}

fn is_subset_of_range(v: &[u64], k: usize, n: u64) -> bool {
    v.len() == k
        && v.first().is_none_or(|&x| x >= 1)
        && v.last().is_none_or(|&x| x <= n)
        && v.windows(2).all(|w| w[0] < w[1])
}

/// Does the pair `(x, y)` of increasing sequences have order type `marks`?
pub(crate) fn realizes(marks: &[Mark], x: &[u64], y: &[u64]) -> bool {
    let (mut i, mut j) = (0, 0);
    for &m in marks {
        let got = match (x.get(i), y.get(j)) {
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Less => Mark::One,
                Ordering::Greater => Mark::Two,
                Ordering::Equal => Mark::Three,
            },
            (Some(_), None) => Mark::One,
            (None, Some(_)) => Mark::Two,
            (None, None) => return false,
        };
        if got != m {
            return false;
        }
        i += m.in_first() as usize;
        j += m.in_second() as usize;
    }
    i == x.len() && j == y.len()
}

/// Are the `k`-sets `x` and `y` adjacent in `G(n, τ)`?
pub fn adjacent_typegraph(tau: &OrderType, x: &[u64], y: &[u64]) -> Result<bool> {
    let k = tau.width();
    for s in [x, y] {
        if s.len() != k {
            return Err(Error::WidthMismatch { expected: k, found: s.len() });
        }
    }
    Ok(realizes(tau.marks(), x, y) || realizes(tau.marks(), y, x))
}

/// `C(n, k)`, saturating at `usize::MAX`.
pub fn binomial(n: u64, k: usize) -> usize {
    let k = k as u64;
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: u64, k: usize) -> impl Iterator<Item = Subset> {
    (1..=n).combinations(k)
}

fn check_typegraph(n: u64, tau: &OrderType) -> Result<usize> {
    tau.check_type()?;
    if tau.is_empty() || tau.is_trivial() {
        return Err(Error::TrivialType);
    }
    let k = tau.width();
    if n < k as u64 {
        return Err(Error::TooSmall { n, k });
    }
    Ok(k)
}

/// Builds `G(n, τ)`; vertices are the `k`-subsets of `[n]` in lexicographic order.
pub fn build_typegraph(n: u64, tau: &OrderType) -> Result<Graph<Subset>> {
    let k = check_typegraph(n, tau)?;
    let count = binomial(n, k);
    if count > MAX_VERTICES {
        return Err(Error::TooLarge { vertices: count, limit: MAX_VERTICES });
    }
    let vertices: Vec<Subset> = k_subsets(n, k).collect();
    let kind = GraphKind::TypeGraph { n, tau: tau.clone() };
    let edges = if is_sigma(tau) || is_sigma(&tau.dual()) {
        shift_edges(n, k, &vertices)
    } else {
        let marks = tau.marks();
        let mut edges = Vec::new();
        for (i, x) in vertices.iter().enumerate() {
            for (j, y) in vertices.iter().enumerate().skip(i + 1) {
                if realizes(marks, x, y) || realizes(marks, y, x) {
                    edges.push((i, j));
                }
            }
        }
        edges
    };
    Graph::new(kind, vertices, edges)
}

fn is_sigma(tau: &OrderType) -> bool {
    let m = tau.marks();
    m.len() >= 3
        && m[0] == Mark::One
        && m[m.len() - 1] == Mark::Two
        && m[1..m.len() - 1].iter().all(|&c| c == Mark::Three)
}

/// Edges of `G(n, σ_k)`: `{h_1..h_k} ~ {h_2..h_{k+1}}` for each `(k+1)`-subset.
fn shift_edges(n: u64, k: usize, vertices: &[Subset]) -> Vec<(usize, usize)> {
    let index: BTreeMap<&[u64], usize> =
        vertices.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    k_subsets(n, k + 1)
        .map(|h| (index[&h[..k]], index[&h[1..]]))
        .collect()
}

/// A tuple `(x_1, …, x_{2b−1})`; membership in `W_b(n)` / `V_b(n)` is checked
/// by [`GbVertex::is_in_w`] and [`GbVertex::is_in_v`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GbVertex(Vec<u64>);

impl GbVertex {
    pub fn from_coords(coords: Vec<u64>) -> Self {
        GbVertex(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `b` for a tuple of length `2b − 1`.
    pub fn b(&self) -> usize {
        self.0.len().div_ceil(2)
    }

    /// `1 ≤ x_1 ≤ x_2 ≤ … ≤ x_{2b−1} ≤ n` with odd length.
    pub fn is_in_w(&self, n: u64) -> bool {
        let c = &self.0;
        c.len() % 2 == 1
            && c[0] >= 1
            && c[c.len() - 1] <= n
            && c.windows(2).all(|w| w[0] <= w[1])
    }

    /// In `W_b(n)` and `x_1 < x_3 < … < x_{2b−1}`.
    pub fn is_in_v(&self, n: u64) -> bool {
        self.is_in_w(n) && self.0.iter().step_by(2).tuple_windows().all(|(a, b)| a < b)
    }
}

impl fmt::Debug for GbVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Do `(x, y)`, in this order, satisfy both adjacency clauses of `G_b`?
///
/// (i) `x_1 < y_1 ≤ x_3 < y_3 ≤ … ≤ x_{2b−1} < y_{2b−1}` and
/// (ii) `x_{j+1} ≤ y_j` for `j ∈ [2b−2]`.
#[inline]
pub(crate) fn gb_ordered(x: &[u64], y: &[u64]) -> bool {
    let d = x.len();
    let mut j = 0;
    while j < d {
        if x[j] >= y[j] {
            return false;
        }
        if j + 2 < d && y[j] > x[j + 2] {
            return false;
        }
        j += 2;
    }
    (0..d - 1).all(|j| x[j + 1] <= y[j])
}

pub fn adjacent_gb(x: &GbVertex, y: &GbVertex) -> Result<bool> {
    if x.len() != y.len() || x.len() % 2 == 0 {
        return Err(Error::DimensionMismatch { expected: x.len() | 1, found: y.len() });
    }
    Ok(gb_ordered(&x.0, &y.0) || gb_ordered(&y.0, &x.0))
}

/// `V_b(n)` in lexicographic order.
pub fn enumerate_vb(b: usize, n: u64) -> impl Iterator<Item = GbVertex> {
    (1..=n)
        .combinations_with_replacement(2 * b - 1)
        .map(GbVertex)
        .filter(move |v| v.is_in_v(n))
}

/// Builds `G_b(n)` on `V_b(n)` in lexicographic order.
pub fn build_gb(b: usize, n: u64) -> Result<Graph<GbVertex>> {
    if b == 0 || n == 0 {
        return Err(Error::BadRange);
    }
    let vertices: Vec<GbVertex> = enumerate_vb(b, n).take(MAX_VERTICES + 1).collect();
    if vertices.len() > MAX_VERTICES {
        return Err(Error::TooLarge { vertices: vertices.len(), limit: MAX_VERTICES });
    }
    let mut edges = Vec::new();
    for (i, x) in vertices.iter().enumerate() {
        let x = &x.0;
        // lexicographic order puts every possible partner y (x_1 < y_1 ≤ x_3) after x
        let last = if x.len() > 1 { x[2] } else { n };
        for (j, y) in vertices.iter().enumerate().skip(i + 1) {
            let y = &y.0;
            if y[0] > last {
                break;
            }
            if gb_ordered(x, y) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(GraphKind::Auxiliary { b, n }, vertices, edges)
}
