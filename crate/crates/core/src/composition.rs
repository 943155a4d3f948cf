//! Integer compositions and 3-colored compositions.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Count;

/// Ordered tuple of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Each part `k` becomes `k - 1` zeros followed by a one.
    pub fn to_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.size());
        for &k in &self.0 {
            bits.extend(std::iter::repeat_n(false, k - 1));
            bits.push(true);
        }
        bits
    }

    pub fn from_bits(bits: &[bool]) -> Result<Composition> {
        if bits.last() == Some(&false) {
            return Err(Error::MalformedBits);
        }
        let mut parts = Vec::new();
        let mut run = 0;
        for &b in bits {
            run += 1;
            if b {
                parts.push(run);
                run = 0;
            }
        }
        Ok(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    One,
    Two,
    Three,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::One, Color::Two, Color::Three];

    pub fn index(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
            Color::Three => 3,
        }
    }

    pub fn from_index(i: u8) -> Option<Color> {
        match i {
            1 => Some(Color::One),
            2 => Some(Color::Two),
            3 => Some(Color::Three),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPart {
    pub value: usize,
    pub color: Color,
}

/// Composition whose parts carry one of three colors; the last part has
/// color 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ColoredComposition(Vec<ColoredPart>);

impl ColoredComposition {
    pub fn new(parts: Vec<ColoredPart>) -> Result<ColoredComposition> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::InvalidColoredComposition("zero part".into()));
        }
        if let Some(last) = parts.last() {
            if last.color != Color::One {
                return Err(Error::InvalidColoredComposition(
                    "last part must have color 1".into(),
                ));
            }
        }
        Ok(ColoredComposition(parts))
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|p| p.value).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|p| p.value)
    }

    fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().map(|p| p.color)
    }
}

// parts first, then colors
impl Ord for ColoredComposition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.values()
            .cmp(other.values())
            .then_with(|| self.colors().cmp(other.colors()))
    }
}

impl PartialOrd for ColoredComposition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{}_{}", p.value, p.color.index())?;
        }
        Ok(())
    }
}

/// Two compositions of the same size `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionPair {
    first: Composition,
    second: Composition,
}

impl CompositionPair {
    pub fn new(first: Composition, second: Composition) -> Result<CompositionPair> {
        if first.size() != second.size() {
            return Err(Error::SizeMismatch(first.size(), second.size()));
        }
        if first.is_empty() {
            return Err(Error::EmptyComposition);
        }
        Ok(CompositionPair { first, second })
    }

    pub fn first(&self) -> &Composition {
        &self.first
    }

    pub fn second(&self) -> &Composition {
        &self.second
    }

    pub fn size(&self) -> usize {
        self.first.size()
    }
}

/// All compositions of `n`, lexicographic in their parts.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for k in 1..=rest {
            cur.push(k);
            rec(rest - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All 3-compositions of `n`: parts in lexicographic order, then colors.
pub fn enumerate_3compositions(n: usize) -> Vec<ColoredComposition> {
    let mut out = Vec::new();
    for c in enumerate_compositions(n) {
        // all parts but the last are free; base-3 digits, most significant first
        let free = c.parts().len().saturating_sub(1);
        for code in 0..3usize.pow(free as u32) {
            let parts = c
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &value)| {
                    let color = if i == free {
                        Color::One
                    } else {
                        Color::ALL[code / 3usize.pow((free - 1 - i) as u32) % 3]
                    };
                    ColoredPart { value, color }
                })
                .collect();
            out.push(ColoredComposition(parts));
        }
    }
    out
}

/// The composition of `n` at position `rank` in [`enumerate_compositions`]
/// order. Parts-lexicographic order lists the bit encodings in decreasing
/// binary order.
pub fn unrank_composition(n: usize, rank: &Count) -> Option<Composition> {
    if n == 0 {
        return rank.is_zero().then(Composition::default);
    }
    let width = n - 1;
    if rank.bits() > width as u64 {
        return None;
    }
    let mut bits: Vec<bool> = (0..width)
        .map(|i| !rank.bit((width - 1 - i) as u64))
        .collect();
    bits.push(true);
    Composition::from_bits(&bits).ok()
}
