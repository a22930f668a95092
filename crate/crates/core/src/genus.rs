//! Regular genus.
//!
//! For a closed gem and a cyclic order `ε` of the colors, the gem embeds in a
//! surface whose faces are the `{ε_i, ε_{i+1}}`-colored cycles. That surface has
//!
//! ```text
//! χ_ε = Σ_i g(ε_i, ε_{i+1}) + (1 - n) V / 2,    ρ_ε = 1 - χ_ε / 2
//! ```
//!
//! and the regular genus is the least `ρ_ε`. Genus zero characterizes the
//! sphere.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::color::{Color, ColorSet};
use crate::gem::Gem;
use crate::{Error, Result};

/// A cyclic order of the colors `0..=n`, compared up to rotation and reversal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicPermutation {
    order: Vec<Color>,
}

impl CyclicPermutation {
    /// Any arrangement of `0..=n`; not required to be canonical.
    pub fn new(order: impl IntoIterator<Item = u8>) -> Result<Self> {
        let order: Vec<Color> = order.into_iter().map(Color).collect();
        if order.len() < 2 {
            return Err(Error::BadPermutation("needs at least two colors".into()));
        }
        let mut seen = vec![false; order.len()];
        for c in &order {
            if c.index() >= order.len() || core::mem::replace(&mut seen[c.index()], true) {
                return Err(Error::BadPermutation(format!("{:?} is not a permutation of 0..{}", order, order.len())));
            }
        }
        Ok(CyclicPermutation { order })
    }

    /// The colors in cyclic order.
    pub fn order(&self) -> &[Color] {
        &self.order
    }

    /// Dimension `n` of the color set `0..=n`.
    pub fn dimension(&self) -> usize {
        self.order.len() - 1
    }

    /// The representative with `ε_0 = 0` and `ε_1 <= ε_n`.
    pub fn canonical(&self) -> CyclicPermutation {
        let len = self.order.len();
        let zero = self.order.iter().position(|c| c.0 == 0).expect("permutation contains 0");
        let mut order: Vec<Color> = (0..len).map(|i| self.order[(zero + i) % len]).collect();
        if order[1] > order[len - 1] {
            order[1..].reverse();
        }
        CyclicPermutation { order }
    }

    /// Whether this is its own canonical representative.
    pub fn is_canonical(&self) -> bool {
        self.order[0].0 == 0 && self.order[1] <= self.order[self.order.len() - 1]
    }

    /// Cyclically adjacent color pairs, `(ε_i, ε_{i+1})` for `i` mod `n + 1`.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (Color, Color)> + '_ {
        let len = self.order.len();
        (0..len).map(move |i| (self.order[i], self.order[(i + 1) % len]))
    }

    /// Every canonical cyclic permutation of `0..=n` in lexicographic order:
    /// `n!/2` of them for `n >= 2`.
    pub fn all(n: usize) -> Vec<CyclicPermutation> {
        let mut rest: Vec<u8> = (1..=n as u8).collect();
        let mut out = Vec::new();
        loop {
            if rest.first() <= rest.last() {
                let order = core::iter::once(Color(0)).chain(rest.iter().copied().map(Color)).collect();
                out.push(CyclicPermutation { order });
            }
            if !next_permutation(&mut rest) {
                return out;
            }
        }
    }
}

fn next_permutation(items: &mut [u8]) -> bool {
    let Some(i) = items.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = items.iter().rposition(|&x| x > items[i]).expect("successor exists");
    items.swap(i, j);
    items[i + 1..].reverse();
    true
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// An exact multiple of one half.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    /// Zero.
    pub const ZERO: HalfInteger = HalfInteger { twice: 0 };

    /// The value `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    /// An integer value.
    pub const fn from_integer(value: i64) -> Self {
        HalfInteger { twice: 2 * value }
    }

    /// Twice the value.
    pub const fn twice(self) -> i64 {
        self.twice
    }

    /// The value when it is an integer.
    pub fn as_integer(self) -> Option<i64> {
        (self.twice % 2 == 0).then_some(self.twice / 2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

/// Number of `{i, j}`-colored cycles of a closed gem.
pub fn bicolored_cycle_count(gem: &Gem, i: Color, j: Color) -> Result<usize> {
    gem.require_closed()?;
    let pair: ColorSet = [i, j].into_iter().collect();
    gem.check_colors(pair)?;
    if i == j {
        return Err(Error::BadParam(format!("cycle colors must differ, got {i} twice")));
    }
    Ok(gem.residue_count(pair))
}

/// `g(i, j)` for every pair, as a symmetric table.
struct CycleTable {
    counts: Vec<usize>,
    width: usize,
    vertex_count: usize,
    dimension: usize,
}

impl CycleTable {
    fn new(gem: &Gem) -> Result<Self> {
        gem.require_closed()?;
        let vertex_count = gem.vertex_count();
        if vertex_count % 2 == 1 {
            return Err(Error::OddVertexCount(vertex_count));
        }
        let width = gem.dimension() + 1;
        let mut counts = vec![0; width * width];
        for i in 0..width {
            for j in i + 1..width {
                let g = gem.residue_count([Color(i as u8), Color(j as u8)].into_iter().collect());
                counts[i * width + j] = g;
                counts[j * width + i] = g;
            }
        }
        Ok(CycleTable { counts, width, vertex_count, dimension: gem.dimension() })
    }

    fn chi(&self, eps: &CyclicPermutation) -> Result<i64> {
        if eps.dimension() != self.dimension {
            return Err(Error::BadPermutation(format!("{eps} has {} colors, gem has {}", eps.order.len(), self.width)));
        }
        let faces: usize = eps.adjacent_pairs().map(|(a, b)| self.counts[a.index() * self.width + b.index()]).sum();
        Ok(faces as i64 + (1 - self.dimension as i64) * (self.vertex_count as i64 / 2))
    }
}

/// Euler characteristic `χ_ε` of the regular embedding along `eps`.
pub fn chi(gem: &Gem, eps: &CyclicPermutation) -> Result<i64> {
    CycleTable::new(gem)?.chi(eps)
}

fn rho_from_chi(chi: i64) -> HalfInteger {
    HalfInteger::from_twice(2 - chi)
}

/// Genus (half-genus for non-bipartite gems) `ρ_ε = 1 - χ_ε / 2`.
pub fn rho(gem: &Gem, eps: &CyclicPermutation) -> Result<HalfInteger> {
    chi(gem, eps).map(rho_from_chi)
}

/// `χ_ε` and `ρ_ε` of one cyclic permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbeddingGenus {
    /// Euler characteristic of the surface.
    pub chi: i64,
    /// Its genus.
    pub rho: HalfInteger,
}

/// Genus of every canonical cyclic permutation and the minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    /// Keyed by canonical permutation.
    pub per_permutation: BTreeMap<CyclicPermutation, EmbeddingGenus>,
    /// `ρ(Γ)`.
    pub regular_genus: HalfInteger,
    /// Lexicographically least permutation attaining the minimum.
    pub argmin: CyclicPermutation,
}

/// Scan all `n!/2` canonical cyclic permutations.
pub fn regular_genus(gem: &Gem) -> Result<GenusReport> {
    let table = CycleTable::new(gem)?;
    let mut per_permutation = BTreeMap::new();
    let mut best: Option<(HalfInteger, CyclicPermutation)> = None;
    for eps in CyclicPermutation::all(gem.dimension()) {
        let chi = table.chi(&eps)?;
        let rho = rho_from_chi(chi);
        if best.as_ref().is_none_or(|(b, _)| rho < *b) {
            best = Some((rho, eps.clone()));
        }
        per_permutation.insert(eps, EmbeddingGenus { chi, rho });
    }
    let (regular_genus, argmin) = best.expect("at least one permutation");
    Ok(GenusReport { per_permutation, regular_genus, argmin })
}

/// Whether the regular genus is zero, which characterizes `S^n`.
pub fn certify_sphere(gem: &Gem) -> Result<bool> {
    Ok(regular_genus(gem)?.regular_genus == HalfInteger::ZERO)
}

/// Whether every component of every residue on `m >= 3` colors has regular
/// genus zero, so that each such residue is a sphere by induction from the
/// 3-colored case.
pub fn hereditary_certificate(gem: &Gem) -> Result<bool> {
    gem.require_closed()?;
    let n = gem.dimension();
    for m in 3..=n + 1 {
        for colors in ColorSet::subsets_of_size(n, m) {
            for component in gem.residues(colors)?.components {
                let residue = gem.residue_gem(colors, &component)?;
                if !certify_sphere(&residue)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
