//! Concrete set pairs: computing their order types and realising given types.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::order_types::{marks_count, BlockDecomposition, Mark, OrderType};

pub type Rational = Ratio<i64>;

/// A finite, strictly increasing set of exact rationals.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RationalSet {
    elements: Vec<Rational>,
}

impl RationalSet {
    pub fn empty() -> Self {
        RationalSet { elements: Vec::new() }
    }

    /// Takes elements that are already strictly increasing.
    pub fn new(elements: Vec<Rational>) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing);
        }
        Ok(RationalSet { elements })
    }

    /// Sorts and deduplicates arbitrary input.
    pub fn from_unsorted(mut elements: Vec<Rational>) -> Self {
        elements.sort();
        elements.dedup();
        RationalSet { elements }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Self {
        Self::from_unsorted(values.into_iter().map(Rational::from_integer).collect())
    }

    pub fn elements(&self) -> &[Rational] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The elements as integers, if every denominator is 1.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.elements.iter().map(|r| r.is_integer().then(|| r.to_integer())).collect()
    }
}

impl fmt::Debug for RationalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements.iter().map(|r| DisplayRatio(*r))).finish()
    }
}

struct DisplayRatio(Rational);

impl fmt::Debug for DisplayRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The order type of `(x, y)` for two strictly increasing sequences.
///
/// The result is a raw mark sequence; it is a type exactly when `|x| = |y|`.
pub fn order_type_of<T: Ord>(x: &[T], y: &[T]) -> OrderType {
    let mut marks = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let mark = match (x.get(i), y.get(j)) {
            (Some(a), Some(b)) => match a.cmp(b) {
                core::cmp::Ordering::Less => Mark::One,
                core::cmp::Ordering::Greater => Mark::Two,
                core::cmp::Ordering::Equal => Mark::Three,
            },
            (Some(_), None) => Mark::One,
            (None, _) => Mark::Two,
        };
        i += mark.in_first() as usize;
        j += mark.in_second() as usize;
        marks.push(mark);
    }
    OrderType::from_raw(marks)
}

/// `X = {i : τ_i ∈ {1,3}}`, `Y = {i : τ_i ∈ {2,3}}` over the ground set `[ℓ]`.
pub fn canonical_realization(tau: &OrderType) -> (Vec<u64>, Vec<u64>) {
    let mut x = Vec::new();
    let mut y = Vec::new();
    for (i, m) in tau.marks().iter().enumerate() {
        let pos = i as u64 + 1;
        if m.in_first() {
            x.push(pos);
        }
        if m.in_second() {
            y.push(pos);
        }
    }
    (x, y)
}

/// Finds `X` with `τ(X, Y) = B` for a fragment `B` with `𝟐(B) = |Y|`.
///
/// Marks `2` and `3` consume the next element of `Y` (`3` also puts it in
/// `X`). Each maximal run of ones is placed at equal spacing strictly between
/// the neighbouring anchors; a missing anchor on the left is replaced by
/// `min(Y) − run − 1`, on the right by `max(Y) + run + 1`.
pub fn extend_left(block: &OrderType, y: &RationalSet) -> Result<RationalSet> {
    let (_, twos) = marks_count(block.marks());
    if twos != y.len() {
        return Err(Error::SizeMismatch { expected: twos, found: y.len() });
    }
    let ys = y.elements();
    let mut x = Vec::new();
    let mut run = 0i64;
    let mut consumed = 0;
    for &m in block.marks() {
        if m == Mark::One {
            run += 1;
            continue;
        }
        let anchor = ys[consumed];
        if run > 0 {
            let lo = if consumed == 0 {
                anchor - Rational::from_integer(run + 1)
            } else {
                ys[consumed - 1]
            };
            place_run(&mut x, lo, anchor, run);
            run = 0;
        }
        if m == Mark::Three {
            x.push(anchor);
        }
        consumed += 1;
    }
    if run > 0 {
        let lo = ys.last().copied().unwrap_or_else(Rational::zero);
        place_run(&mut x, lo, lo + Rational::from_integer(run + 1), run);
    }
    Ok(RationalSet { elements: x })
}

fn place_run(out: &mut Vec<Rational>, lo: Rational, hi: Rational, run: i64) {
    let step = (hi - lo) / Rational::from_integer(run + 1);
    let mut v = lo;
    for _ in 0..run {
        v += step;
        out.push(v);
    }
}

/// Replaces every element by its 1-based rank within the union of all sets.
pub fn rank_normalize(sets: &[RationalSet]) -> Vec<Vec<u64>> {
    let mut union: Vec<Rational> = sets.iter().flat_map(|s| s.elements.iter().copied()).collect();
    union.sort();
    union.dedup();
    sets.iter()
        .map(|s| {
            s.elements
                .iter()
                .map(|e| union.binary_search(e).map(|r| r as u64 + 1).unwrap_or(0))
                .collect()
        })
        .collect()
}

/// Irreducible-type overlap: for `τ(X, Y)` primary irreducible,
/// `x_i < y_i` for all `i` and `x_{i+1} ≤ y_i` for all `i < k`.
pub fn irreducible_overlap_holds<T: Ord>(x: &[T], y: &[T]) -> bool {
    x.len() == y.len()
        && x.iter().zip(y).all(|(a, b)| a < b)
        && x.iter().skip(1).zip(y).all(|(a, b)| a <= b)
}

/// Block overlap: `x_{s(i+1)} < y_{s(i)+1} ≤ x_{s(i+1)+1}` for `i ∈ [b−2]`,
/// where `(X, Y)` realises the primary orientation of `dec`.
pub fn block_overlap_holds<T: Ord>(dec: &BlockDecomposition, x: &[T], y: &[T]) -> bool {
    let s = dec.prefix_twos();
    let b = s.len();
    // 1-based accessors
    let xi = |i: usize| &x[i - 1];
    let yi = |i: usize| &y[i - 1];
    (1..=b.saturating_sub(2)).all(|i| {
        let si = s[i - 1];
        let si1 = s[i];
        xi(si1) < yi(si + 1) && yi(si + 1) <= xi(si1 + 1)
    })
}

/// A rational `p/q` from integers; panics on a zero denominator.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// `true` if `r` has denominator 1.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ints(v: &[i64]) -> RationalSet {
        RationalSet::from_integers(v.iter().copied())
    }

    #[test]
    fn order_type_examples() {
        let s = |x: &[i64], y: &[i64]| order_type_of(ints(x).elements(), ints(y).elements());
        assert_eq!(s(&[1, 2, 3, 5], &[3, 4, 5]).to_string(), "11323");
        assert_eq!(s(&[1, 3, 4, 7], &[2, 3, 4, 9]).to_string(), "123312");
        assert_eq!(s(&[2, 7], &[2, 7]).to_string(), "33");
        assert!(s(&[], &[]).is_empty());
    }

    #[test]
    fn canonical_examples() {
        let c = |s: &str| canonical_realization(&OrderType::parse(s).unwrap());
        assert_eq!(c("132"), (vec![1, 2], vec![2, 3]));
        assert_eq!(c("12"), (vec![1], vec![2]));
        assert_eq!(c("3"), (vec![1], vec![1]));
    }

    #[test]
    fn extend_left_examples() {
        let b = |s: &str| OrderType::parse_raw(s).unwrap();
        let y = RationalSet::new(vec![ratio(1, 2), ratio(5, 1)]).unwrap();
        assert!(extend_left(&b("22"), &y).unwrap().is_empty());

        let x = extend_left(&b("132"), &ints(&[5, 9])).unwrap();
        assert_eq!(order_type_of(x.elements(), &[ratio(5, 1), ratio(9, 1)]), b("132"));
        assert_eq!(x.to_integers(), Some(vec![4, 5]));

        let x = extend_left(&b("311"), &ints(&[7])).unwrap();
        assert_eq!(order_type_of(x.elements(), ints(&[7]).elements()), b("311"));
        assert_eq!(x.to_integers(), Some(vec![7, 8, 9]));

        // ones squeezed between two close anchors become proper fractions
        let x = extend_left(&b("2112"), &ints(&[1, 2])).unwrap();
        assert_eq!(x.elements(), [ratio(4, 3), ratio(5, 3)]);
        assert!(!is_integral(&x.elements()[0]));

        assert_eq!(
            extend_left(&b("132"), &ints(&[5])),
            Err(Error::SizeMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn rank_normalize_examples() {
        let a = RationalSet::new(vec![ratio(1, 2), ratio(7, 1)]).unwrap();
        let b = ints(&[7, 9]);
        assert_eq!(rank_normalize(&[a, b]), vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(rank_normalize(&[RationalSet::empty()]), vec![Vec::<u64>::new()]);
        assert_eq!(
            rank_normalize(&[ints(&[3]), ints(&[1]), ints(&[2])]),
            vec![vec![3], vec![1], vec![2]]
        );
    }

    #[test]
    fn new_rejects_unsorted() {
        assert_eq!(RationalSet::new(vec![ratio(2, 1), ratio(1, 1)]), Err(Error::NotIncreasing));
        assert_eq!(RationalSet::new(vec![ratio(1, 1), ratio(2, 2)]), Err(Error::NotIncreasing));
    }
}
