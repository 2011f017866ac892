//! Dyadic splits of integer pairs and the reflection of `[2^n]`.
//!
//! For `1 ≤ x < y` there is exactly one pair `(f, q)` with `q` odd and
//! `(q−1)·2^{f−1} < x ≤ q·2^{f−1} < y ≤ (q+1)·2^{f−1}`: `f − 1` is the highest
//! bit in which `x − 1` and `y − 1` differ.

use crate::error::{Error, Result};
use crate::graphs::GbVertex;

/// Largest exponent accepted for ground sets `[2^n]`.
pub const MAX_EXPONENT: u32 = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DyadicSplit {
    pub f: u32,
    pub q: u64,
}

impl DyadicSplit {
    /// `T⁻ = (q−1)·2^{f−1}`
    pub fn lower(&self) -> u64 {
        (self.q - 1) << (self.f - 1)
    }

    /// `T = q·2^{f−1}`
    pub fn threshold(&self) -> u64 {
        self.q << (self.f - 1)
    }

    /// `T⁺ = (q+1)·2^{f−1}`
    pub fn upper(&self) -> u64 {
        (self.q + 1) << (self.f - 1)
    }
}

pub fn dyadic_split(x: u64, y: u64) -> Result<DyadicSplit> {
    if x < 1 || x >= y {
        return Err(Error::BadRange);
    }
    let diff = (x - 1) ^ (y - 1);
    let f = u64::BITS - diff.leading_zeros();
    let q = (((x - 1) >> f) << 1) | 1;
    Ok(DyadicSplit { f, q })
}

/// `f(x, y)`; `x < y` is the caller's responsibility.
#[inline]
pub fn f_of(x: u64, y: u64) -> u32 {
    debug_assert!(1 <= x && x < y);
    u64::BITS - ((x - 1) ^ (y - 1)).leading_zeros()
}

/// Smallest `m` with `2^m ≥ n` (`0` for `n ≤ 1`).
pub fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        u64::BITS - (n - 1).leading_zeros()
    }
}

/// Maps `(x_1, …, x_{2b−1})` to `(2^n+1−x_{2b−1}, …, 2^n+1−x_1)`.
pub fn eta(b: usize, n: u32, x: &GbVertex) -> Result<GbVertex> {
    if n > MAX_EXPONENT {
        return Err(Error::BadRange);
    }
    let dim = 2 * b - 1;
    if x.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: x.len() });
    }
    let top = 1u64 << n;
    if x.coords().iter().any(|&c| c < 1 || c > top) {
        return Err(Error::BadRange);
    }
    Ok(reflect(top, x))
}

pub(crate) fn reflect(top: u64, x: &GbVertex) -> GbVertex {
    GbVertex::from_coords(x.coords().iter().rev().map(|&c| top + 1 - c).collect())
}
