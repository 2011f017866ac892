//! Graph homomorphisms between type-graphs and auxiliary graphs.
//!
//! * [`hom_lower`]: `G(n, σ_{b−1}) → G(kn, τ)` for irreducible `τ` with `b` blocks.
//! * [`hom_upper`]: `G(n, τ) → G_{b−1}(n)` via block boundaries.
//! * [`hom_project`]: `G(n, τ) → G(n, ρ_i)` onto an irreducible factor.
//! * [`hom_reducible`]: `G(n, σ_{b*−1}) → G(kn, τ)` for arbitrary nontrivial `τ`.
//!
//! For `b = 2` the source `G(n, σ_1)` is read as `G(n, 12)`, the clique `K_n`
//! on singletons.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::colorings::{aux_token, ColorToken};
use crate::error::{Error, Result};
use crate::graphs::{k_subsets, AdjacencyOracle, GbVertex, Graph, GraphKind, Subset};
use crate::order_types::{block_decompose, marks_count, sigma, BlockDecomposition, OrderType, Polarity};
use crate::realizations::{extend_left, rank_normalize, RationalSet};

/// An explicit table `source payload → target payload`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap<S, T> {
    pub source: GraphKind,
    pub target: GraphKind,
    pub pairs: Vec<(S, T)>,
}

impl<S: Ord, T> VertexMap<S, T> {
    pub fn image(&self, s: &S) -> Option<&T> {
        self.pairs.iter().find(|(x, _)| x == s).map(|(_, t)| t)
    }
}

impl<T> VertexMap<Subset, T> {
    /// The type of the source type-graph, if the source is one.
    pub fn source_type(&self) -> Option<&OrderType> {
        match &self.source {
            GraphKind::TypeGraph { tau, .. } => Some(tau),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomReport {
    /// Source edges (as index pairs) whose images are not adjacent.
    pub violations: Vec<(usize, usize)>,
    /// Number of source vertices that share an image with an earlier one.
    pub collisions: usize,
    pub edges_checked: usize,
}

impl HomReport {
    pub fn is_homomorphism(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `map` sends every edge of `src` to an edge of `dst`.
pub fn verify_homomorphism<S, T, D>(src: &Graph<S>, dst: &D, map: &VertexMap<S, T>) -> Result<HomReport>
where
    S: Ord + Clone,
    T: Ord,
    D: AdjacencyOracle<T> + ?Sized,
{
    let lookup: BTreeMap<&S, &T> = map.pairs.iter().map(|(s, t)| (s, t)).collect();
    let mut images = Vec::with_capacity(src.vertex_count());
    for (i, s) in src.vertices().iter().enumerate() {
        let t = *lookup.get(s).ok_or(Error::CoverageGap {
            expected: src.vertex_count(),
            found: i,
        })?;
        if !dst.contains(t) {
            return Err(Error::ImageNotVertex { source: i });
        }
        images.push(t);
    }
    let mut distinct: Vec<&T> = images.clone();
    distinct.sort();
    distinct.dedup();
    let violations = src
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !dst.adjacent(images[u], images[v]))
        .collect();
    Ok(HomReport {
        violations,
        collisions: images.len() - distinct.len(),
        edges_checked: src.edge_count(),
    })
}

fn require_nontrivial_irreducible(tau: &OrderType) -> Result<BlockDecomposition> {
    tau.check_type()?;
    if tau.is_trivial() || tau.is_empty() {
        return Err(Error::TrivialType);
    }
    if !tau.is_irreducible() {
        return Err(Error::Reducible);
    }
    block_decompose(tau)
}

/// `R*_0, …, R*_b` for the primary orientation of `dec`:
/// `τ(R*_i, R*_{i−1}) = B_i` with every set inside `[k]`.
pub fn build_r_sets(dec: &BlockDecomposition) -> Result<Vec<Vec<u64>>> {
    let blocks = dec.primary_blocks();
    let mut sets = Vec::with_capacity(blocks.len() + 1);
    sets.push(RationalSet::empty());
    for block in &blocks {
        let next = extend_left(block, sets.last().expect("nonempty"))?;
        sets.push(next);
    }
    let b = blocks.len();
    if !sets[b].is_empty() {
        return Err(Error::SizeMismatch { expected: 0, found: sets[b].len() });
    }
    Ok(rank_normalize(&sets))
}

/// The source type of the lower-bound map for `b` blocks: `σ_{b−1}`, or `12`
/// when `b = 2`.
pub fn shift_source_type(b: usize) -> Result<OrderType> {
    match b {
        0 | 1 => Err(Error::TrivialType),
        2 => Ok(OrderType::from_raw(alloc::vec![crate::Mark::One, crate::Mark::Two])),
        _ => sigma(b - 1),
    }
}

/// Lower-bound map for one irreducible type, oriented so that a shift edge
/// `{h_1..h_{b−1}}`, `{h_2..h_b}` lands on a pair realising `τ` itself.
#[derive(Clone, Debug)]
struct LowerMap {
    k: usize,
    r_sets: Vec<Vec<u64>>,
    reflect: bool,
}

impl LowerMap {
    fn new(tau: &OrderType) -> Result<(Self, usize)> {
        let dec = require_nontrivial_irreducible(tau)?;
        let r_sets = build_r_sets(&dec)?;
        let reflect = dec.polarity() == Polarity::Secondary;
        Ok((LowerMap { k: tau.width(), r_sets, reflect }, dec.count()))
    }

    /// `h` has `b − 1` elements of `[n]`.
    fn image(&self, n: u64, h: &[u64]) -> Subset {
        let k = self.k as u64;
        let mut out = Vec::with_capacity(self.k);
        let mut push = |i: usize, hi: u64| {
            out.extend(self.r_sets[i + 1].iter().map(|&j| (hi - 1) * k + j));
        };
        if self.reflect {
            // a reflected shift edge swaps its left and right ends, turning τ' into τ
            for (i, &hi) in h.iter().rev().enumerate() {
                push(i, n + 1 - hi);
            }
        } else {
            for (i, &hi) in h.iter().enumerate() {
                push(i, hi);
            }
        }
        out.sort_unstable();
        out
    }
}

/// `φ({h_1, …, h_{b−1}}) = ⋃_i {(h_i − 1)k + j : j ∈ R*_i}`.
pub fn hom_lower(tau: &OrderType, n: u64) -> Result<VertexMap<Subset, Subset>> {
    let (map, b) = LowerMap::new(tau)?;
    if n < b as u64 {
        return Err(Error::TooSmall { n, k: b });
    }
    let source_type = shift_source_type(b)?;
    let pairs = k_subsets(n, b - 1).map(|h| {
        let img = map.image(n, &h);
        (h, img)
    });
    Ok(VertexMap {
        source: GraphKind::TypeGraph { n, tau: source_type },
        target: GraphKind::TypeGraph { n: n * tau.width() as u64, tau: tau.clone() },
        pairs: pairs.collect(),
    })
}

/// Block-boundary tuple `(x_{s(1)+1}, x_{s(2)}, x_{s(2)+1}, …, x_{s(b−1)}, x_{s(b−1)+1})`.
pub(crate) fn upper_image(prefix_twos: &[usize], x: &[u64]) -> GbVertex {
    let b = prefix_twos.len();
    let mut coords = Vec::with_capacity(2 * b - 3);
    coords.push(x[prefix_twos[0]]);
    for &s in &prefix_twos[1..b - 1] {
        coords.push(x[s - 1]);
        coords.push(x[s]);
    }
    GbVertex::from_coords(coords)
}

/// The image of `X` under the embedding `G(n, τ) → G_{b−1}(n)`.
pub fn hom_upper(tau: &OrderType, x: &[u64]) -> Result<GbVertex> {
    let dec = require_nontrivial_irreducible(tau)?;
    if x.len() != tau.width() {
        return Err(Error::WidthMismatch { expected: tau.width(), found: x.len() });
    }
    Ok(upper_image(dec.prefix_twos(), x))
}

/// [`hom_upper`] tabulated over every vertex of `G(n, τ)`.
pub fn hom_upper_map(tau: &OrderType, n: u64) -> Result<VertexMap<Subset, GbVertex>> {
    let dec = require_nontrivial_irreducible(tau)?;
    let k = tau.width();
    if n < k as u64 {
        return Err(Error::TooSmall { n, k });
    }
    let pairs = k_subsets(n, k).map(|x| {
        let img = upper_image(dec.prefix_twos(), &x);
        (x, img)
    });
    Ok(VertexMap {
        source: GraphKind::TypeGraph { n, tau: tau.clone() },
        target: GraphKind::Auxiliary { b: dec.count() - 1, n },
        pairs: pairs.collect(),
    })
}

/// Positions `r..s` of the `i`-th factor (1-based) inside `X`.
fn factor_range(factors: &[OrderType], i: usize) -> Result<(usize, usize)> {
    if i == 0 || i > factors.len() {
        return Err(Error::IndexOut { index: i, len: factors.len() });
    }
    let r: usize = factors[..i - 1].iter().map(|f| marks_count(f.marks()).0).sum();
    let s = r + marks_count(factors[i - 1].marks()).0;
    Ok((r, s))
}

fn require_nontrivial(tau: &OrderType) -> Result<()> {
    tau.check_type()?;
    if tau.is_empty() || tau.is_trivial() {
        return Err(Error::TrivialType);
    }
    Ok(())
}

/// `{x_{r+1}, …, x_s}` for the `i`-th factor `ρ_i` (1-based).
pub fn hom_project(tau: &OrderType, i: usize, x: &[u64]) -> Result<Subset> {
    require_nontrivial(tau)?;
    if x.len() != tau.width() {
        return Err(Error::WidthMismatch { expected: tau.width(), found: x.len() });
    }
    let (r, s) = factor_range(&tau.factorize(), i)?;
    Ok(x[r..s].to_vec())
}

/// [`hom_project`] tabulated over `G(n, τ)`.
pub fn hom_project_map(tau: &OrderType, i: usize, n: u64) -> Result<VertexMap<Subset, Subset>> {
    require_nontrivial(tau)?;
    let factors = tau.factorize();
    let (r, s) = factor_range(&factors, i)?;
    let k = tau.width();
    if n < k as u64 {
        return Err(Error::TooSmall { n, k });
    }
    let pairs = k_subsets(n, k).map(|x| {
        let img = x[r..s].to_vec();
        (x, img)
    });
    Ok(VertexMap {
        source: GraphKind::TypeGraph { n, tau: tau.clone() },
        target: GraphKind::TypeGraph { n, tau: factors[i - 1].clone() },
        pairs: pairs.collect(),
    })
}

/// Block count of each factor and `b* = max b_i`.
pub fn factor_block_counts(tau: &OrderType) -> Result<(Vec<usize>, usize)> {
    require_nontrivial(tau)?;
    let counts = tau
        .factorize()
        .iter()
        .map(|f| block_decompose(f).map(|d| d.count()))
        .collect::<Result<Vec<_>>>()?;
    let best = counts.iter().copied().max().unwrap_or(0);
    Ok((counts, best))
}

/// `ψ(X) = ⋃_i ψ̂_i(X)` stitching the factor maps into disjoint ranges
/// `[c_{i−1}n + 1, c_i n]`; trivial factors contribute `{c_i n}`.
pub fn hom_reducible(tau: &OrderType, n: u64) -> Result<VertexMap<Subset, Subset>> {
    require_nontrivial(tau)?;
    let factors = tau.factorize();
    let (counts, b_star) = factor_block_counts(tau)?;
    if n < b_star as u64 {
        return Err(Error::TooSmall { n, k: b_star });
    }
    let parts = factors
        .iter()
        .map(|f| if f.is_trivial() { Ok(None) } else { LowerMap::new(f).map(|(m, _)| Some(m)) })
        .collect::<Result<Vec<_>>>()?;
    let widths: Vec<u64> = factors.iter().map(|f| f.width() as u64).collect();
    let pairs = k_subsets(n, b_star - 1).map(|h| {
        let mut img = Vec::with_capacity(tau.width());
        let mut offset = 0u64;
        for ((part, &w), &b_i) in parts.iter().zip(&widths).zip(&counts) {
            match part {
                Some(map) => img.extend(map.image(n, &h[..b_i - 1]).iter().map(|&v| offset * n + v)),
                None => img.push((offset + w) * n),
            }
            offset += w;
        }
        (h, img)
    });
    Ok(VertexMap {
        source: GraphKind::TypeGraph { n, tau: shift_source_type(b_star)? },
        target: GraphKind::TypeGraph { n: n * tau.width() as u64, tau: tau.clone() },
        pairs: pairs.collect(),
    })
}

/// Precomputed route from a vertex of `G(n, τ)` to its pipeline colour.
#[derive(Clone, Debug)]
pub(crate) struct PipelinePlan {
    range: (usize, usize),
    prefix_twos: Vec<usize>,
}

impl PipelinePlan {
    pub(crate) fn new(tau: &OrderType) -> Result<Self> {
        let (counts, b_star) = factor_block_counts(tau)?;
        let factors = tau.factorize();
        let best = counts.iter().position(|&c| c == b_star).expect("nonempty");
        let range = factor_range(&factors, best + 1)?;
        let dec = block_decompose(&factors[best])?;
        Ok(PipelinePlan { range, prefix_twos: dec.prefix_twos().to_vec() })
    }

    pub(crate) fn token(&self, n: u64, x: &[u64]) -> ColorToken {
        let y = &x[self.range.0..self.range.1];
        let image = upper_image(&self.prefix_twos, y);
        ColorToken::Pipeline(Box::new(aux_token(self.prefix_twos.len() - 1, n, image.coords())))
    }
}
