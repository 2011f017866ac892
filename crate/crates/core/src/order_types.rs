//! Order types as mark sequences, their factorisation and the block algorithm.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// One position of an order type: the element lies in `X` only, `Y` only, or both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Mark {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Mark {
    pub fn from_digit(ch: char) -> Option<Mark> {
        match ch {
            '1' => Some(Mark::One),
            '2' => Some(Mark::Two),
            '3' => Some(Mark::Three),
            _ => None,
        }
    }

    pub fn digit(self) -> char {
        match self {
            Mark::One => '1',
            Mark::Two => '2',
            Mark::Three => '3',
        }
    }

    /// Swaps ones and twos.
    pub fn dual(self) -> Mark {
        match self {
            Mark::One => Mark::Two,
            Mark::Two => Mark::One,
            Mark::Three => Mark::Three,
        }
    }

    /// Marks an element of the first set (`1` or `3`).
    pub fn in_first(self) -> bool {
        self != Mark::Two
    }

    /// Marks an element of the second set (`2` or `3`).
    pub fn in_second(self) -> bool {
        self != Mark::One
    }
}

/// A finite sequence of marks.
///
/// Values built with [`OrderType::parse`] or [`OrderType::new`] are genuine
/// types (equally many ones and twos). The `raw` constructors skip that check
/// so the same representation can hold block fragments such as `211121`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderType {
    marks: Vec<Mark>,
}

/// Spellings accepted for the empty type.
pub const EMPTY_LITERALS: [&str; 2] = ["∅", "empty"];

impl OrderType {
    /// The empty type of width and length zero.
    pub fn empty() -> Self {
        OrderType { marks: Vec::new() }
    }

    pub fn new(marks: Vec<Mark>) -> Result<Self> {
        let seq = OrderType { marks };
        seq.check_type()?;
        Ok(seq)
    }

    pub fn from_raw(marks: Vec<Mark>) -> Self {
        OrderType { marks }
    }

    /// Parses a digit string such as `"13332"` into a type.
    pub fn parse(text: &str) -> Result<Self> {
        let seq = Self::parse_raw(text)?;
        Self::new(seq.marks)
    }

    /// Parses a digit string without requiring balanced ones and twos.
    pub fn parse_raw(text: &str) -> Result<Self> {
        let text = text.trim();
        if EMPTY_LITERALS.contains(&text) {
            return Ok(Self::empty());
        }
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        text.chars()
            .enumerate()
            .map(|(pos, ch)| Mark::from_digit(ch).ok_or(Error::InvalidDigit { ch, pos }))
            .collect::<Result<Vec<_>>>()
            .map(Self::from_raw)
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    /// Number of `2`s and `3`s, which is `|X| = |Y|` for a type.
    pub fn width(&self) -> usize {
        marks_count(&self.marks).1
    }

    /// `NotAType` unless ones and twos occur equally often.
    pub fn check_type(&self) -> Result<()> {
        let (ones, twos) = self.digit_counts();
        if ones != twos {
            return Err(Error::NotAType { ones, twos });
        }
        Ok(())
    }

    /// `true` when ones and twos occur equally often.
    pub fn is_type(&self) -> bool {
        let (ones, twos) = self.digit_counts();
        ones == twos
    }

    /// Nonempty and consisting of threes only.
    pub fn is_trivial(&self) -> bool {
        !self.marks.is_empty() && self.marks.iter().all(|&m| m == Mark::Three)
    }

    pub fn dual(&self) -> OrderType {
        OrderType { marks: self.marks.iter().map(|m| m.dual()).collect() }
    }

    pub fn concat(&self, other: &OrderType) -> OrderType {
        let mut marks = self.marks.clone();
        marks.extend_from_slice(&other.marks);
        OrderType { marks }
    }

    /// Primary, secondary or trivial according to the first mark.
    pub fn polarity(&self) -> Option<Polarity> {
        match self.marks.first()? {
            Mark::One => Some(Polarity::Primary),
            Mark::Two => Some(Polarity::Secondary),
            Mark::Three => Some(Polarity::Trivial),
        }
    }

    /// Splits the type into irreducible factors.
    ///
    /// A factor ends after every nonempty prefix containing as many ones as twos.
    pub fn factorize(&self) -> Vec<OrderType> {
        let mut factors = Vec::new();
        let mut balance = 0isize;
        let mut start = 0;
        for (i, &m) in self.marks.iter().enumerate() {
            match m {
                Mark::One => balance += 1,
                Mark::Two => balance -= 1,
                Mark::Three => {}
            }
            if balance == 0 {
                factors.push(OrderType::from_raw(self.marks[start..=i].to_vec()));
                start = i + 1;
            }
        }
        if start < self.marks.len() {
            // unbalanced tail of a fragment
            factors.push(OrderType::from_raw(self.marks[start..].to_vec()));
        }
        factors
    }

    pub fn is_irreducible(&self) -> bool {
        !self.is_empty() && self.is_type() && self.factorize().len() == 1
    }

    /// The primary orientation of an irreducible type: itself if it starts
    /// with `1` (or is `3`), its dual if it starts with `2`.
    pub fn to_primary(&self) -> OrderType {
        match self.polarity() {
            Some(Polarity::Secondary) => self.dual(),
            _ => self.clone(),
        }
    }

    fn digit_counts(&self) -> (usize, usize) {
        let ones = self.marks.iter().filter(|&&m| m == Mark::One).count();
        let twos = self.marks.iter().filter(|&&m| m == Mark::Two).count();
        (ones, twos)
    }
}

impl fmt::Display for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marks.is_empty() {
            return f.write_str(EMPTY_LITERALS[0]);
        }
        for m in &self.marks {
            fmt::Write::write_char(f, m.digit())?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderType({self})")
    }
}

impl FromStr for OrderType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrderType::parse(s)
    }
}

/// `(𝟏(seq), 𝟐(seq))`: the number of marks in `{1, 3}` and in `{2, 3}`.
pub fn marks_count(seq: &[Mark]) -> (usize, usize) {
    seq.iter().fold((0, 0), |(a, b), &m| {
        (a + m.in_first() as usize, b + m.in_second() as usize)
    })
}

/// `σ_k = 1 3…3 2` with `k − 1` threes.
pub fn sigma(k: usize) -> Result<OrderType> {
    if k < 2 {
        return Err(Error::BadWidth(k));
    }
    let mut marks = Vec::with_capacity(k + 1);
    marks.push(Mark::One);
    marks.extend(core::iter::repeat(Mark::Three).take(k - 1));
    marks.push(Mark::Two);
    Ok(OrderType::from_raw(marks))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    Primary,
    Secondary,
    Trivial,
}

/// The blocks `B_1 … B_b` of an irreducible type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    source: OrderType,
    polarity: Polarity,
    /// Blocks in the orientation of `source`.
    blocks: Vec<OrderType>,
    /// `s(i) = 𝟐(B_1 ⋯ B_i)`, taken over the primary orientation.
    prefix_twos: Vec<usize>,
}

impl BlockDecomposition {
    pub fn source(&self) -> &OrderType {
        &self.source
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn blocks(&self) -> &[OrderType] {
        &self.blocks
    }

    /// Number of blocks `b`.
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    /// `s(1), …, s(b)` (0-based slice: `prefix_twos()[i-1] = s(i)`).
    pub fn prefix_twos(&self) -> &[usize] {
        &self.prefix_twos
    }

    /// The same decomposition read in the primary orientation.
    pub fn primary_blocks(&self) -> Vec<OrderType> {
        match self.polarity {
            Polarity::Secondary => self.blocks.iter().map(OrderType::dual).collect(),
            _ => self.blocks.clone(),
        }
    }

    /// Blocks separated by single spaces, e.g. `11 211121 212122 22`.
    pub fn spaced(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{block}");
        }
        out
    }
}

/// Runs the block algorithm on an irreducible type.
pub fn block_decompose(tau: &OrderType) -> Result<BlockDecomposition> {
    if !tau.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let polarity = tau.polarity().ok_or(Error::NotIrreducible)?;
    if polarity == Polarity::Trivial {
        // irreducibility leaves only `3`
        return Ok(BlockDecomposition {
            source: tau.clone(),
            polarity,
            blocks: alloc::vec![tau.clone()],
            prefix_twos: alloc::vec![1],
        });
    }
    let primary = tau.to_primary();
    let primary_blocks = primary_blocks(primary.marks())?;
    let mut prefix_twos = Vec::with_capacity(primary_blocks.len());
    let mut acc = 0;
    for block in &primary_blocks {
        acc += block.width();
        prefix_twos.push(acc);
    }
    let blocks = match polarity {
        Polarity::Secondary => primary_blocks.iter().map(OrderType::dual).collect(),
        _ => primary_blocks,
    };
    Ok(BlockDecomposition { source: tau.clone(), polarity, blocks, prefix_twos })
}

fn primary_blocks(marks: &[Mark]) -> Result<Vec<OrderType>> {
    let len = marks.len();
    let mut pos = marks.iter().take_while(|&&m| m == Mark::One).count();
    let mut blocks = alloc::vec![OrderType::from_raw(marks[..pos].to_vec())];
    let mut need = pos;
    while pos < len {
        if need == 0 {
            return Err(Error::NotIrreducible);
        }
        let start = pos;
        let mut twos = 0;
        while twos < need {
            let m = *marks.get(pos).ok_or(Error::NotIrreducible)?;
            twos += m.in_second() as usize;
            pos += 1;
        }
        // a trailing run of ones keeps 𝟐 unchanged, so the block absorbs it
        while pos < len && marks[pos] == Mark::One {
            pos += 1;
        }
        let block = &marks[start..pos];
        need = marks_count(block).0;
        blocks.push(OrderType::from_raw(block.to_vec()));
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn t(s: &str) -> OrderType {
        OrderType::parse(s).unwrap()
    }

    fn raw(s: &str) -> OrderType {
        OrderType::parse_raw(s).unwrap()
    }

    fn strs(v: &[OrderType]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn parse_counts_width_and_length() {
        let tau = t("113223");
        assert_eq!((tau.width(), tau.len()), (4, 6));
        let three = t("3");
        assert_eq!((three.width(), three.len()), (1, 1));
        assert!(three.is_trivial());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(OrderType::parse("112"), Err(Error::NotAType { ones: 2, twos: 1 }));
        assert_eq!(OrderType::parse("1a2"), Err(Error::InvalidDigit { ch: 'a', pos: 1 }));
        assert_eq!(OrderType::parse(""), Err(Error::EmptyInput));
        assert_eq!(OrderType::parse("∅"), Ok(OrderType::empty()));
        assert_eq!(OrderType::parse("empty").unwrap().width(), 0);
        // fragments are fine in raw mode
        assert_eq!(raw("211121").len(), 6);
    }

    #[test]
    fn marks_count_examples() {
        assert_eq!(marks_count(raw("211121").marks()), (4, 2));
        assert_eq!(marks_count(&[]), (0, 0));
        assert_eq!(marks_count(raw("333").marks()), (3, 3));
    }

    #[test]
    fn dual_and_concat() {
        assert_eq!(t("132").dual(), t("231"));
        assert_eq!(t("3").dual(), t("3"));
        assert_eq!(t("123312").dual(), t("213321"));
        assert_eq!(t("12").concat(&t("132")), t("12132"));
        assert_eq!(OrderType::empty().concat(&t("132")), t("132"));
        assert_eq!(t("3").concat(&t("12")), t("312"));
        let c = t("12").concat(&t("1332"));
        assert_eq!((c.width(), c.len()), (4, 6));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(strs(&t("12132").factorize()), ["12", "132"]);
        assert_eq!(strs(&t("132").factorize()), ["132"]);
        assert_eq!(strs(&t("33").factorize()), ["3", "3"]);
        assert!(t("132").is_irreducible());
        assert!(!t("1212").is_irreducible());
        assert!(t("3").is_irreducible());
        assert!(!OrderType::empty().is_irreducible());
    }

    #[test]
    fn block_algorithm_examples() {
        let dec = block_decompose(&t("1121112121212222")).unwrap();
        assert_eq!(strs(dec.blocks()), ["11", "211121", "212122", "22"]);
        assert_eq!(dec.spaced(), "11 211121 212122 22");
        let dec = block_decompose(&t("131122311222")).unwrap();
        assert_eq!(strs(dec.blocks()), ["1", "311", "22311", "222"]);
        let dec = block_decompose(&t("13332")).unwrap();
        assert_eq!(strs(dec.blocks()), ["1", "3", "3", "3", "2"]);
        assert_eq!(dec.prefix_twos(), [0, 1, 2, 3, 4]);
    }

    #[test]
    fn block_algorithm_trivial_and_secondary() {
        let dec = block_decompose(&t("3")).unwrap();
        assert_eq!(dec.count(), 1);
        assert_eq!(dec.polarity(), Polarity::Trivial);

        let dec = block_decompose(&t("231")).unwrap();
        assert_eq!(dec.polarity(), Polarity::Secondary);
        assert_eq!(strs(dec.blocks()), ["2", "3", "1"]);
        assert_eq!(strs(&dec.primary_blocks()), ["1", "3", "2"]);
        assert_eq!(dec.prefix_twos(), [0, 1, 2]);

        assert_eq!(block_decompose(&t("1212")), Err(Error::NotIrreducible));
    }

    #[test]
    fn sigma_shapes() {
        assert_eq!(sigma(2).unwrap(), t("132"));
        assert_eq!(sigma(4).unwrap(), t("13332"));
        assert_eq!(sigma(1), Err(Error::BadWidth(1)));
        for k in 2..9 {
            let s = sigma(k).unwrap();
            assert_eq!(s.width(), k);
            assert_eq!(block_decompose(&s).unwrap().count(), k + 1);
        }
        assert_eq!(block_decompose(&sigma(5).unwrap()).unwrap().count(), 6);
    }

    #[test]
    fn display_round_trips() {
        for s in ["12", "13332", "213321"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert_eq!(OrderType::empty().to_string(), "∅");
        assert_eq!(vec![Mark::One.digit(), Mark::Three.digit()], ['1', '3']);
    }
}
