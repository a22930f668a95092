//! Colors and color sets.

use core::fmt;

/// Largest supported dimension. Color sets are stored as `u32` bitmasks.
pub const MAX_DIMENSION: usize = 30;

/// An element of `{0, 1, ..., n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u8);

impl Color {
    /// The color as an index.
    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u8> for Color {
    fn from(value: u8) -> Self {
        Color(value)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the color set, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSet(u32);

impl ColorSet {
    /// The empty set.
    pub const EMPTY: ColorSet = ColorSet(0);

    /// All colors `0..=dimension`.
    pub fn full(dimension: usize) -> Self {
        debug_assert!(dimension <= MAX_DIMENSION);
        ColorSet((1u32 << (dimension + 1)) - 1)
    }

    /// Build a set from raw bits.
    pub const fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    /// Raw bits.
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Singleton set.
    pub fn single(color: Color) -> Self {
        ColorSet(1 << color.0)
    }

    /// Insert a color.
    pub fn insert(&mut self, color: Color) {
        self.0 |= 1 << color.0;
    }

    /// Membership test.
    #[inline]
    pub fn contains(self, color: Color) -> bool {
        color.index() < 32 && self.0 & (1 << color.0) != 0
    }

    /// Number of colors in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether the set is empty.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Set difference.
    pub fn without(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    /// Set union.
    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    /// Largest color in the set, if any.
    pub fn max(self) -> Option<Color> {
        (self.0 != 0).then(|| Color((31 - self.0.leading_zeros()) as u8))
    }

    /// Colors in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        (0u8..32).filter(move |&c| self.0 & (1 << c) != 0).map(Color)
    }

    /// Every subset of `0..=dimension` with exactly `size` colors, in increasing
    /// bitmask order.
    pub fn subsets_of_size(dimension: usize, size: usize) -> impl Iterator<Item = ColorSet> {
        let full = ColorSet::full(dimension).0;
        (0..=full).filter(move |bits| bits & !full == 0 && bits.count_ones() as usize == size).map(ColorSet)
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut set = ColorSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}
