//! Color-compatible vertex maps and the degree of the simplicial maps they
//! induce.
//!
//! A vertex map `g` between gems of the same dimension induces a simplicial
//! map of the encoded complexes when, for every source edge `u -- v` of color
//! `i`, either `g(u) = g(v)` or `g(u) -- g(v)` is a target edge of color `i`.
//! For a surjective `g` the degree is `sign(w) · Σ_{g(u) = w} sign(u)` for any
//! target vertex `w`; a non-surjective map has degree zero.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::color::{Color, ColorSet};
use crate::constructions::{product_gem, product_standard, standard_sphere};
use crate::gem::{Edge, Gem, VertexLabel};
use crate::moves::add_dipole;
use crate::orientation::{canonical_orientation, Orientation};
use crate::{Error, Result};

/// A vertex map from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredVertexMap {
    source: Gem,
    target: Gem,
    assignment: Vec<usize>,
}

/// A source edge whose endpoints land on distinct target vertices not joined
/// by its color.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    /// The source edge.
    pub edge: Edge,
    /// Images of its endpoints.
    pub images: (usize, usize),
}

impl ColoredVertexMap {
    /// Check shapes; the edge contract is checked by [`validate`](Self::validate).
    pub fn new(source: Gem, target: Gem, assignment: Vec<usize>) -> Result<Self> {
        if source.dimension() != target.dimension() {
            return Err(Error::Mismatch(format!(
                "source dimension {} differs from target dimension {}",
                source.dimension(),
                target.dimension()
            )));
        }
        if assignment.len() != source.vertex_count() {
            return Err(Error::Mismatch(format!(
                "{} images for {} source vertices",
                assignment.len(),
                source.vertex_count()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&w| w >= target.vertex_count()) {
            return Err(Error::UnknownVertex(bad));
        }
        Ok(ColoredVertexMap { source, target, assignment })
    }

    /// The identity on `gem`.
    pub fn identity(gem: &Gem) -> Self {
        let assignment = (0..gem.vertex_count()).collect();
        ColoredVertexMap { source: gem.clone(), target: gem.clone(), assignment }
    }

    /// Every source vertex sent to `vertex`.
    pub fn constant(source: &Gem, target: &Gem, vertex: usize) -> Result<Self> {
        target.check_vertex(vertex)?;
        Self::new(source.clone(), target.clone(), alloc::vec![vertex; source.vertex_count()])
    }

    /// Source gem.
    pub fn source(&self) -> &Gem {
        &self.source
    }

    /// Target gem.
    pub fn target(&self) -> &Gem {
        &self.target
    }

    /// Image of every source vertex.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Source vertices mapped to `w`.
    pub fn preimage(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        self.assignment.iter().enumerate().filter(move |(_, &x)| x == w).map(|(v, _)| v)
    }

    /// Every edge breaking the contract. Empty iff the map induces a
    /// simplicial map.
    pub fn validate(&self) -> Vec<Violation> {
        self.source
            .edges()
            .into_iter()
            .filter_map(|edge| {
                let images = (self.assignment[edge.u], self.assignment[edge.v]);
                let ok = images.0 == images.1 || self.target.neighbor(images.0, edge.color) == Some(images.1);
                (!ok).then_some(Violation { edge, images })
            })
            .collect()
    }

    /// Whether every target vertex is hit.
    pub fn is_surjective(&self) -> bool {
        let mut hit = alloc::vec![false; self.target.vertex_count()];
        for &w in &self.assignment {
            hit[w] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// Degree of the induced simplicial map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeResult {
    /// The degree; zero for non-surjective maps.
    pub degree: i64,
    /// Whether every target vertex has a preimage.
    pub surjective: bool,
    /// `sign(w) · (algebraic number of g⁻¹(w))` per target vertex `w`.
    pub per_target: BTreeMap<usize, i64>,
}

/// Degree with respect to the given orientations.
pub fn degree(map: &ColoredVertexMap, source: &Orientation, target: &Orientation) -> Result<DegreeResult> {
    let violations = map.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidMap { violations: violations.len() });
    }
    map.source.require_closed()?;
    map.target.require_closed()?;
    if source.signs().len() != map.source.vertex_count() || target.signs().len() != map.target.vertex_count() {
        return Err(Error::Mismatch("orientation does not match its gem".into()));
    }
    let mut per_target = BTreeMap::new();
    for w in 0..map.target.vertex_count() {
        let algebraic = source.algebraic_number(map.preimage(w))?;
        per_target.insert(w, i64::from(target.sign(w)?) * algebraic);
    }
    let surjective = map.is_surjective();
    if !surjective {
        return Ok(DegreeResult { degree: 0, surjective, per_target });
    }
    let mut values = per_target.values().copied();
    let first = values.next().unwrap_or(0);
    if values.any(|x| x != first) {
        return Err(Error::InconsistentDegree { per_target: per_target.into_iter().collect() });
    }
    Ok(DegreeResult { degree: first, surjective, per_target })
}

/// Degree under the canonical orientations of source and target.
pub fn canonical_degree(map: &ColoredVertexMap) -> Result<DegreeResult> {
    degree(map, &canonical_orientation(&map.source)?, &canonical_orientation(&map.target)?)
}

/// Add `d - p` dipoles of order `n` at vertex 0 so that a closed bipartite
/// gem on `2p` vertices gets `d` vertices of each sign. Returns the gem
/// unchanged when `d <= p`.
pub fn enlarge_for_degree(source: &Gem, d: usize) -> Result<Gem> {
    source.require_closed()?;
    let n = source.dimension();
    let colors = ColorSet::full(n).without(ColorSet::single(Color(n as u8)));
    let mut gem = source.clone();
    while gem.vertex_count() / 2 < d {
        gem = add_dipole(&gem, 0, colors)?;
    }
    Ok(gem)
}

/// A map onto the two-vertex `S^n` of degree `d`.
///
/// With `p` vertices of each sign: for `d < p` the `d` negative vertices of
/// least id go to `v^2` and everything else to `v^1`; for `d = p` positive
/// vertices go to `v^1` and negative ones to `v^2`. Larger `d` needs the source
/// enlarged first with [`enlarge_for_degree`].
pub fn build_sphere_map(source: &Gem, d: usize) -> Result<ColoredVertexMap> {
    source.require_closed()?;
    let orientation = canonical_orientation(source)?;
    let p = source.vertex_count() / 2;
    if d > p {
        return Err(Error::BadParam(format!(
            "degree {d} needs at least {d} facets of each sign, source has {p}; enlarge it first"
        )));
    }
    let target = standard_sphere(source.dimension())?;
    let mut assignment = alloc::vec![0; source.vertex_count()];
    // at d = p this takes every negative vertex
    for v in orientation.vertices_with_sign(-1).take(d) {
        assignment[v] = 1;
    }
    ColoredVertexMap::new(source.clone(), target, assignment)
}

/// The projection of [`product_gem`]`(n, d)` onto [`product_standard`]`(n)`:
/// `v_{2j-1}^k -> v_1^k` and `v_{2j}^k -> v_2^k`.
pub fn build_product_map(n: usize, d: usize) -> Result<ColoredVertexMap> {
    let source = product_gem(n, d)?;
    let target = product_standard(n)?;
    let assignment = source
        .labels()
        .iter()
        .map(|label| match *label {
            VertexLabel::Grid { series, level } => {
                let column = if series % 2 == 1 { 1 } else { 2 };
                target
                    .find_label(&VertexLabel::grid(column, level))
                    .ok_or_else(|| Error::Mismatch(format!("target lacks v_{column}^{level}")))
            }
            ref other => Err(Error::Mismatch(format!("unexpected label {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    ColoredVertexMap::new(source, target, assignment)
}

/// The column swap `v^1 <-> v^2` of the two-vertex sphere, or
/// `v_1^k <-> v_2^k` of the standard `S^{n-1} x S^1` crystallization.
pub fn orientation_reversal(target: &Gem) -> Result<ColoredVertexMap> {
    let n = target.dimension();
    if standard_sphere(n).is_ok_and(|s| s == *target) {
        return ColoredVertexMap::new(target.clone(), target.clone(), alloc::vec![1, 0]);
    }
    if product_standard(n).is_ok_and(|s| s == *target) {
        let assignment = target
            .labels()
            .iter()
            .map(|label| match *label {
                VertexLabel::Grid { series, level } => {
                    target.find_label(&VertexLabel::grid(3 - series, level)).ok_or(Error::UnsupportedTarget)
                }
                _ => Err(Error::UnsupportedTarget),
            })
            .collect::<Result<Vec<_>>>()?;
        return ColoredVertexMap::new(target.clone(), target.clone(), assignment);
    }
    Err(Error::UnsupportedTarget)
}

/// `outer ∘ inner`.
pub fn compose(outer: &ColoredVertexMap, inner: &ColoredVertexMap) -> Result<ColoredVertexMap> {
    if inner.target != outer.source {
        return Err(Error::Mismatch("inner target is not the outer source".into()));
    }
    let assignment = inner.assignment.iter().map(|&w| outer.assignment[w]).collect();
    Ok(ColoredVertexMap { source: inner.source.clone(), target: outer.target.clone(), assignment })
}
