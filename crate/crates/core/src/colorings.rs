//! Explicit proper colourings of `G_1(n)`, `G_2(n)`, `G_b(2^n)` and `G(n, τ)`.
//!
//! Colours are structured [`ColorToken`]s that record which part of the
//! construction produced them. A [`Coloring`] flattens them to dense integers
//! in order of first appearance.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::dyadic::{ceil_log2, dyadic_split, f_of, reflect, MAX_EXPONENT};
use crate::error::{Error, Result};
use crate::graphs::{k_subsets, GbVertex, Graph, GraphKind, Subset};
use crate::homomorphisms::PipelinePlan;
use crate::order_types::OrderType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum G2Class {
    /// The single colour of the innermost `G_2(2)`.
    Base,
    /// `y ≤ m < z` on a range of size `2m`.
    B,
    /// `x ≤ m < y` on a range of size `2m`.
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GbPart {
    A,
    /// `x_i ≤ T(x) < x_{i+1}`
    B(usize),
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColorToken {
    Clique(u64),
    /// `depth` counts halvings from the full range, starting at 1.
    G2 { depth: u32, class: G2Class },
    Gb { b: usize, part: GbPart, signature: Vec<bool>, sub: Option<Box<ColorToken>> },
    Pipeline(Box<ColorToken>),
    /// `f(i, j)` colouring of the shift graph.
    Shift(u32),
    Dense(usize),
}

/// Compact labels such as `clique:3`, `g2:1:C`, `gb3:A:10/g2:2:B`.
impl fmt::Display for ColorToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorToken::Clique(v) => write!(f, "clique:{v}"),
            ColorToken::G2 { depth, class } => {
                let class = match class {
                    G2Class::Base => "base",
                    G2Class::B => "B",
                    G2Class::C => "C",
                };
                write!(f, "g2:{depth}:{class}")
            }
            ColorToken::Gb { b, part, signature, sub } => {
                match part {
                    GbPart::A => write!(f, "gb{b}:A")?,
                    GbPart::B(i) => write!(f, "gb{b}:B{i}")?,
                    GbPart::C => write!(f, "gb{b}:C")?,
                }
                if !signature.is_empty() {
                    f.write_str(":")?;
                    for &bit in signature {
                        f.write_str(if bit { "1" } else { "0" })?;
                    }
                }
                match sub {
                    Some(sub) => write!(f, "/{sub}"),
                    None => Ok(()),
                }
            }
            ColorToken::Pipeline(sub) => write!(f, "pipe/{sub}"),
            ColorToken::Shift(v) => write!(f, "shift:{v}"),
            ColorToken::Dense(c) => write!(f, "{c}"),
        }
    }
}

/// Per-vertex colours aligned with a graph's vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    tokens: Vec<ColorToken>,
    colors: Vec<usize>,
    legend: Vec<ColorToken>,
}

impl Coloring {
    pub fn from_tokens(tokens: Vec<ColorToken>) -> Self {
        let mut seen: BTreeMap<&ColorToken, usize> = BTreeMap::new();
        let mut legend = Vec::new();
        let colors = tokens
            .iter()
            .map(|t| {
                *seen.entry(t).or_insert_with(|| {
                    legend.push(t.clone());
                    legend.len() - 1
                })
            })
            .collect();
        Coloring { tokens, colors, legend }
    }

    pub fn from_dense(colors: &[usize]) -> Self {
        Self::from_tokens(colors.iter().map(|&c| ColorToken::Dense(c)).collect())
    }

    pub fn tokens(&self) -> &[ColorToken] {
        &self.tokens
    }

    /// Dense colours `0..palette_size()`.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// `legend()[c]` is the token behind dense colour `c`.
    pub fn legend(&self) -> &[ColorToken] {
        &self.legend
    }

    pub fn palette_size(&self) -> usize {
        self.legend.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperReport {
    /// Monochromatic edges, in edge order.
    pub violations: Vec<(usize, usize)>,
    pub colors_used: usize,
}

impl ProperReport {
    pub fn is_proper(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_proper<V>(g: &Graph<V>, c: &Coloring) -> Result<ProperReport> {
    if c.colors.len() != g.vertex_count() {
        return Err(Error::CoverageGap { expected: g.vertex_count(), found: c.colors.len() });
    }
    let violations = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| c.colors[u] == c.colors[v])
        .collect();
    Ok(ProperReport { violations, colors_used: c.palette_size() })
}

/// `G_1(n)` is a clique: every vertex keeps its own colour.
pub fn color_g1(x: &GbVertex) -> Result<ColorToken> {
    if x.len() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: x.len() });
    }
    Ok(ColorToken::Clique(x.coords()[0]))
}

/// Colours `x ∈ V_2(2^k)` with at most `2k − 1` colours.
///
/// On a range of size `2m`, triples below `m` and triples above `m` (shifted
/// down by `m`) recurse into the same smaller palette, while the two
/// straddling classes `y ≤ m < z` and `x ≤ m < y` are independent and each
/// take one new colour.
pub fn color_g2(x: &GbVertex, k: u32) -> Result<ColorToken> {
    if x.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: x.len() });
    }
    if k == 0 || k > MAX_EXPONENT || !x.is_in_v(1 << k) {
        return Err(Error::BadRange);
    }
    let c = x.coords();
    Ok(g2_token(c[0], c[1], c[2], k))
}

fn g2_token(mut x: u64, mut y: u64, mut z: u64, k: u32) -> ColorToken {
    for depth in 1..k {
        let m = 1u64 << (k - depth);
        if z <= m {
            continue;
        }
        if x > m {
            x -= m;
            y -= m;
            z -= m;
        } else if y <= m {
            return ColorToken::G2 { depth, class: G2Class::B };
        } else {
            return ColorToken::G2 { depth, class: G2Class::C };
        }
    }
    ColorToken::G2 { depth: k, class: G2Class::Base }
}

/// Bit `i − 3` is set iff `f(x_1, x_i) = f(x_1, x_{i+1})`, for `i ∈ [3, 2b−2]`.
pub fn class_signature(b: usize, x: &GbVertex) -> Result<Vec<bool>> {
    let dim = 2 * b - 1;
    if b < 2 || x.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: x.len() });
    }
    let c = x.coords();
    if c[0] >= c[2] {
        return Err(Error::BadRange);
    }
    Ok(signature(c))
}

fn signature(c: &[u64]) -> Vec<bool> {
    c[2..].windows(2).map(|w| f_of(c[0], w[0]) == f_of(c[0], w[1])).collect()
}

/// Colours `x ∈ V_b(2^n)` for `b ≥ 3`, `n ≥ b`.
///
/// With `T = T(x)` the dyadic threshold of `(x_1, x_{2b−1})`, the vertex is in
/// part A when `x_{2b−3} ≤ T`, part C when `T < x_3`, and otherwise in the
/// independent set `B_i` with `x_i ≤ T < x_{i+1}`. A vertices are coloured by
/// their signature together with the `(b−1)`-level colour of
/// `(f(x_1, x_3), …, f(x_1, x_{2b−1}))`; C vertices reuse the colour of their
/// reflection, which lies in A.
pub fn color_gb(b: usize, n: u32, x: &GbVertex) -> Result<ColorToken> {
    let dim = 2 * b - 1;
    if b < 3 || x.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: x.len() });
    }
    if (n as usize) < b || n > MAX_EXPONENT || !x.is_in_v(1 << n) {
        return Err(Error::BadRange);
    }
    Ok(gb_token(b, n, x.coords()))
}

/// Which part of the A/B/C partition of `V_b(2^n)` contains `x`.
pub fn gb_part(b: usize, x: &GbVertex) -> Result<GbPart> {
    let dim = 2 * b - 1;
    if b < 3 || x.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: x.len() });
    }
    if !x.is_in_v(u64::MAX) {
        return Err(Error::BadRange);
    }
    Ok(classify(b, x.coords()))
}

fn classify(b: usize, c: &[u64]) -> GbPart {
    let dim = 2 * b - 1;
    let t = dyadic_split(c[0], c[dim - 1]).expect("x_1 < x_{2b-1}").threshold();
    // c[i - 1] is x_i
    if c[dim - 3] <= t {
        GbPart::A
    } else if t < c[2] {
        GbPart::C
    } else {
        let i = (3..=2 * b - 4)
            .find(|&i| c[i - 1] <= t && t < c[i])
            .expect("A, B_3..B_{2b-4} and C cover V_b");
        GbPart::B(i)
    }
}

fn gb_token(b: usize, n: u32, c: &[u64]) -> ColorToken {
    match classify(b, c) {
        GbPart::A => a_token(b, n, c),
        GbPart::B(i) => ColorToken::Gb { b, part: GbPart::B(i), signature: Vec::new(), sub: None },
        GbPart::C => {
            let mirrored = reflect(1 << n, &GbVertex::from_coords(c.to_vec()));
            match a_token(b, n, mirrored.coords()) {
                ColorToken::Gb { signature, sub, .. } => {
                    ColorToken::Gb { b, part: GbPart::C, signature, sub }
                }
                _ => unreachable!("a_token always yields a Gb token"),
            }
        }
    }
}

/// `φ_A(x) = (f(x_1, x_3), f(x_1, x_4), …, f(x_1, x_{2b−1}))`.
pub fn phi_a(b: usize, x: &GbVertex) -> Result<GbVertex> {
    let dim = 2 * b - 1;
    if b < 2 || x.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: x.len() });
    }
    if !x.is_in_v(u64::MAX) {
        return Err(Error::BadRange);
    }
    Ok(phi(x.coords()))
}

fn phi(c: &[u64]) -> GbVertex {
    GbVertex::from_coords(c[2..].iter().map(|&xi| f_of(c[0], xi) as u64).collect())
}

fn a_token(b: usize, n: u32, c: &[u64]) -> ColorToken {
    let image = phi(c);
    let n = n as u64;
    // φ_A images outside V_{b−1}(n) have no neighbours inside their class
    let sub = if image.is_in_v(n) {
        aux_token(b - 1, n, image.coords())
    } else {
        aux_token(b - 1, n, canonical_vertex(b - 1).coords())
    };
    ColorToken::Gb { b, part: GbPart::A, signature: signature(c), sub: Some(Box::new(sub)) }
}

/// `(1, 1, 2, 2, …, b)`: the lexicographically first vertex of `V_b(n)`.
pub fn canonical_vertex(b: usize) -> GbVertex {
    GbVertex::from_coords((0..2 * b - 1).map(|j| j as u64 / 2 + 1).collect())
}

/// Colours `x ∈ V_b(n)` for any `b ≥ 1`, `n ≥ 1`.
///
/// `b = 1` is the clique colouring, `b = 2` the `G_2` scheme on
/// `[2^⌈log n⌉]`, and `b ≥ 3` the `G_b(2^m)` recursion with
/// `m = max(⌈log n⌉, b)`, since `G_b(n)` is an induced subgraph of `G_b(2^m)`.
pub fn color_aux(b: usize, n: u64, x: &GbVertex) -> Result<ColorToken> {
    let dim = 2 * b - 1;
    if b == 0 || x.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: x.len() });
    }
    if n == 0 || ceil_log2(n) > MAX_EXPONENT || !x.is_in_v(n) {
        return Err(Error::BadRange);
    }
    Ok(aux_token(b, n, x.coords()))
}

pub(crate) fn aux_token(b: usize, n: u64, c: &[u64]) -> ColorToken {
    match b {
        1 => ColorToken::Clique(c[0]),
        2 => g2_token(c[0], c[1], c[2], ceil_log2(n).max(1)),
        _ => gb_token(b, ceil_log2(n).max(b as u32), c),
    }
}

/// Colours every vertex of a built `G_b(n)`.
pub fn color_gb_graph(g: &Graph<GbVertex>) -> Result<Coloring> {
    let GraphKind::Auxiliary { b, n } = *g.kind() else {
        return Err(Error::BadRange);
    };
    let tokens = g.vertices().iter().map(|v| aux_token(b, n, v.coords())).collect();
    Ok(Coloring::from_tokens(tokens))
}

/// Colours `G(n, τ)`; colours are aligned with the vertex order of
/// [`crate::graphs::build_typegraph`].
///
/// Irreducible `τ` with `b` blocks: the colour of `X` is the `G_{b−1}(n)`
/// colour of its block-boundary tuple. Reducible `τ`: `X` is first projected
/// onto a factor with the most blocks.
pub fn color_typegraph(n: u64, tau: &OrderType) -> Result<Coloring> {
    let plan = PipelinePlan::new(tau)?;
    let k = tau.width();
    if n < k as u64 {
        return Err(Error::TooSmall { n, k });
    }
    let tokens = k_subsets(n, k).map(|x| plan.token(n, &x)).collect();
    Ok(Coloring::from_tokens(tokens))
}

/// Colour of a single vertex `X` of `G(n, τ)` under [`color_typegraph`].
pub fn typegraph_color_of(n: u64, tau: &OrderType, x: &Subset) -> Result<ColorToken> {
    let plan = PipelinePlan::new(tau)?;
    if x.len() != tau.width() {
        return Err(Error::WidthMismatch { expected: tau.width(), found: x.len() });
    }
    Ok(plan.token(n, x))
}

/// `c({i, j}) = f(i, j)`: a proper colouring of `G(n, 132)` with `⌈log n⌉` colours.
pub fn color_shift_graph(n: u64) -> Coloring {
    let tokens = k_subsets(n, 2).map(|p| ColorToken::Shift(f_of(p[0], p[1]))).collect();
    Coloring::from_tokens(tokens)
}
