//! Manifold-preserving rewrites: dipole cancellation and insertion, and the
//! polyhedral glue move.
//!
//! An `h`-dipole is a pair `u, v` joined by exactly `h` edges, colored `D`,
//! that lie in different components of `Γ_{Δ \ D}`. Cancelling it deletes both
//! vertices and, for every color `c ∉ D`, joins the former `c`-neighbors of `u`
//! and `v`. Vertex ids are compacted afterwards; survivors keep their relative
//! order and their labels.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::color::{Color, ColorSet};
use crate::gem::{Edge, Gem, VertexLabel};
use crate::{Error, Result};

/// A candidate dipole.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DipoleSpec {
    /// First vertex.
    pub u: usize,
    /// Second vertex.
    pub v: usize,
    /// Colors of the edges joining `u` and `v`.
    pub colors: ColorSet,
}

impl DipoleSpec {
    /// Shorthand constructor.
    pub fn new(u: usize, v: usize, colors: impl IntoIterator<Item = u8>) -> Self {
        DipoleSpec { u, v, colors: colors.into_iter().map(Color).collect() }
    }

    /// The dipole's order `h = |D|`.
    pub fn order(&self) -> usize {
        self.colors.len()
    }
}

/// A polyhedral glue move: `lambda1[i]` is glued to `lambda2[i]` across its
/// `glue_color` edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueMoveSpec {
    /// First vertex set, `Λ₁`.
    pub lambda1: Vec<usize>,
    /// Second vertex set, `Λ₂`, listed so that `Φ(lambda1[i]) = lambda2[i]`.
    pub lambda2: Vec<usize>,
    /// The color `i` joining each `u` to `Φ(u)`.
    pub glue_color: Color,
}

/// Check every dipole condition of `spec` against `gem`.
pub fn validate_dipole(gem: &Gem, spec: &DipoleSpec) -> Result<()> {
    let invalid = |why: String| Err(Error::InvalidDipole(why));
    let DipoleSpec { u, v, colors } = *spec;
    if u >= gem.vertex_count() || v >= gem.vertex_count() {
        return invalid(format!("vertex {} out of range", u.max(v)));
    }
    if u == v {
        return invalid(format!("both ends are vertex {u}"));
    }
    let h = colors.len();
    if h == 0 || h > gem.dimension() {
        return invalid(format!("order {h} outside 1..={}", gem.dimension()));
    }
    let joining = gem.colors_between(u, v);
    if joining != colors {
        return invalid(format!("{u} and {v} are joined by colors {joining}, not {colors}"));
    }
    let (ids, _) = gem.component_ids(gem.colors().without(colors));
    if ids[u] == ids[v] {
        return invalid(format!("{u} and {v} share a component of the complementary residue"));
    }
    Ok(())
}

/// All `h`-dipoles, ordered by `(u, v)` with `u < v`.
pub fn find_dipoles(gem: &Gem, h: usize) -> Vec<DipoleSpec> {
    let mut found = Vec::new();
    let mut components: Vec<(ColorSet, Vec<usize>)> = Vec::new();
    for u in 0..gem.vertex_count() {
        for c in gem.colors().iter() {
            let Some(v) = gem.neighbor(u, c) else { continue };
            let colors = gem.colors_between(u, v);
            // visit each pair once, at its least color
            if v < u || colors.iter().next() != Some(c) || colors.len() != h || h > gem.dimension() {
                continue;
            }
            let ids = match components.iter().find(|(set, _)| *set == colors) {
                Some((_, ids)) => ids,
                None => {
                    let (ids, _) = gem.component_ids(gem.colors().without(colors));
                    components.push((colors, ids));
                    &components.last().expect("just pushed").1
                }
            };
            if ids[u] != ids[v] {
                found.push(DipoleSpec { u, v, colors });
            }
        }
    }
    found.sort();
    found
}

/// Rebuild `gem` without the `removed` vertices, keeping surviving edges and
/// adding `extra` (given in old ids).
fn rebuild(gem: &Gem, removed: &[bool], extra: &[Edge]) -> Result<Gem> {
    let mut new_id = vec![usize::MAX; gem.vertex_count()];
    let mut labels = Vec::new();
    for v in 0..gem.vertex_count() {
        if !removed[v] {
            new_id[v] = labels.len();
            labels.push(gem.label(v).clone());
        }
    }
    let kept = gem.edges().into_iter().filter(|e| !removed[e.u] && !removed[e.v]);
    let edges = kept.chain(extra.iter().copied()).map(|e| Edge::new(new_id[e.u], new_id[e.v], e.color));
    Gem::new(gem.dimension(), labels, edges)
}

/// Cancel a dipole. The result has two fewer vertices.
///
/// When one of `u, v` lacks its color-`n` edge, the other's color-`n`
/// neighbor becomes a boundary vertex.
pub fn cancel_dipole(gem: &Gem, spec: &DipoleSpec) -> Result<Gem> {
    validate_dipole(gem, spec)?;
    let mut removed = vec![false; gem.vertex_count()];
    removed[spec.u] = true;
    removed[spec.v] = true;
    let extra: Vec<Edge> = gem
        .colors()
        .without(spec.colors)
        .iter()
        .filter_map(|c| Some(Edge::new(gem.neighbor(spec.u, c)?, gem.neighbor(spec.v, c)?, c)))
        .collect();
    rebuild(gem, &removed, &extra).map_err(|e| Error::InvalidDipole(e.to_string()))
}

fn fresh_label(gem: &Gem, taken: &[VertexLabel]) -> VertexLabel {
    (0..)
        .map(|k| VertexLabel::Named(format!("dipole{k}")))
        .find(|l| gem.find_label(l).is_none() && !taken.contains(l))
        .expect("unbounded")
}

/// Insert an `h`-dipole colored `colors` next to `at`.
///
/// Two vertices `u = V` and `v = V + 1` are appended and joined by the
/// colors of `D`. For every other color `c`, the `c`-edge `at -- w` is split
/// into `at -- u` and `v -- w`. If `at` has no such edge (a boundary vertex and
/// `c = n`), neither new vertex gets one. In the result, `at` and `u` form a
/// whole component of `Γ_{Δ \ D}`, so `(u, v)` is a valid dipole and
/// [`cancel_dipole`] undoes the insertion.
pub fn add_dipole(gem: &Gem, at: usize, colors: ColorSet) -> Result<Gem> {
    gem.check_vertex(at)?;
    let h = colors.len();
    if h == 0 || h > gem.dimension() {
        return Err(Error::BadColors(format!("order {h} outside 1..={}", gem.dimension())));
    }
    if let Some(c) = colors.max().filter(|c| c.index() > gem.dimension()) {
        return Err(Error::BadColors(format!("color {c} exceeds dimension {}", gem.dimension())));
    }
    if let Some(c) = colors.iter().find(|&c| gem.neighbor(at, c).is_none()) {
        return Err(Error::BadColors(format!("vertex {at} has no edge of color {c}")));
    }
    let (u, v) = (gem.vertex_count(), gem.vertex_count() + 1);
    let mut labels = gem.labels().to_vec();
    let first = fresh_label(gem, &[]);
    let second = fresh_label(gem, core::slice::from_ref(&first));
    labels.push(first);
    labels.push(second);

    let complement = gem.colors().without(colors);
    let mut edges: Vec<Edge> =
        gem.edges().into_iter().filter(|e| !(complement.contains(e.color) && (e.u == at || e.v == at))).collect();
    for c in complement.iter() {
        if let Some(w) = gem.neighbor(at, c) {
            edges.push(Edge::new(at, u, c));
            edges.push(Edge::new(v, w, c));
        }
    }
    edges.extend(colors.iter().map(|c| Edge::new(u, v, c)));
    Gem::new(gem.dimension(), labels, edges)
}

/// Check the structural conditions of a glue move: matching `glue_color`
/// edges, `Φ` a color-isomorphism of the induced subgraphs, and `Λ₁`, `Λ₂` in
/// different components of `Γ_î`. Whether the induced subgraphs represent
/// balls is the caller's responsibility.
pub fn validate_glue(gem: &Gem, spec: &GlueMoveSpec) -> Result<()> {
    let invalid = |why: String| Err(Error::InvalidGlueSpec(why));
    let GlueMoveSpec { lambda1, lambda2, glue_color } = spec;
    if lambda1.is_empty() || lambda1.len() != lambda2.len() {
        return invalid(format!("vertex sets of sizes {} and {}", lambda1.len(), lambda2.len()));
    }
    if glue_color.index() > gem.dimension() {
        return invalid(format!("glue color {glue_color} exceeds dimension {}", gem.dimension()));
    }
    // position in Λ₁ (positive) or Λ₂ (negative), 1-based
    let mut slot = vec![0isize; gem.vertex_count()];
    for (side, set) in [(1isize, lambda1), (-1, lambda2)] {
        for (i, &v) in set.iter().enumerate() {
            if v >= gem.vertex_count() {
                return invalid(format!("vertex {v} out of range"));
            }
            if slot[v] != 0 {
                return invalid(format!("vertex {v} listed twice"));
            }
            slot[v] = side * (i as isize + 1);
        }
    }
    for (i, (&a, &b)) in lambda1.iter().zip(lambda2).enumerate() {
        if gem.neighbor(a, *glue_color) != Some(b) {
            return invalid(format!("{a} and {b} are not joined by color {glue_color}"));
        }
        for c in gem.colors().iter() {
            let na = gem.neighbor(a, c).map(|x| slot[x]);
            let nb = gem.neighbor(b, c).map(|x| slot[x]);
            let inside_a = na.filter(|&s| s > 0);
            let inside_b = nb.filter(|&s| s < 0).map(|s| -s);
            if inside_a != inside_b {
                return invalid(format!("the map Λ₁ → Λ₂ breaks the color-{c} edge at position {i}"));
            }
        }
    }
    let (ids, _) = gem.component_ids(gem.colors().without(ColorSet::single(*glue_color)));
    if lambda1.iter().any(|&a| lambda2.iter().any(|&b| ids[a] == ids[b])) {
        return invalid(format!("Λ₁ and Λ₂ share a component of the residue missing color {glue_color}"));
    }
    Ok(())
}

/// Apply a polyhedral glue move. Removes `Λ₁ ∪ Λ₂`; for each `u ∈ Λ₁` and
/// color `j` other than the glue color, the outside `j`-neighbors of `u` and
/// `Φ(u)` become joined by color `j`.
pub fn polyhedral_glue(gem: &Gem, spec: &GlueMoveSpec) -> Result<Gem> {
    validate_glue(gem, spec)?;
    let mut removed = vec![false; gem.vertex_count()];
    for &v in spec.lambda1.iter().chain(&spec.lambda2) {
        removed[v] = true;
    }
    let mut extra = Vec::new();
    for (&a, &b) in spec.lambda1.iter().zip(&spec.lambda2) {
        for j in gem.colors().without(ColorSet::single(spec.glue_color)).iter() {
            if let (Some(p), Some(q)) = (gem.neighbor(a, j), gem.neighbor(b, j)) {
                if !removed[p] && !removed[q] {
                    extra.push(Edge::new(p, q, j));
                }
            }
        }
    }
    rebuild(gem, &removed, &extra).map_err(|e| Error::InvalidGlueSpec(format!("result is not a valid gem: {e}")))
}
