//! The colored multigraph data model.
//!
//! A [`Gem`] of dimension `n` is a loopless multigraph whose edges carry colors
//! in `0..=n`, with at most one edge of each color per vertex. Every vertex has
//! all colors `0..n`; the color-`n` edge is optional, and vertices without it
//! are boundary vertices. Vertex ids are dense `0..V`; [`VertexLabel`]s are
//! metadata that survive moves.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::color::{Color, ColorSet, MAX_DIMENSION};
use crate::{Error, Result};

/// Name of a vertex.
///
/// The constructions use the `v_j^k` scheme: `j` is the column (series) and
/// `k` the row (level). Sphere gems use only one of the two indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    /// `v_j^k`.
    Grid { series: u32, level: u32 },
    /// `v_j`.
    Series(u32),
    /// `v^k`.
    Level(u32),
    /// Anything else.
    Named(String),
}

impl VertexLabel {
    /// Shorthand for [`VertexLabel::Grid`].
    pub const fn grid(series: u32, level: u32) -> Self {
        VertexLabel::Grid { series, level }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Grid { series, level } => write!(f, "v_{series}^{level}"),
            VertexLabel::Series(j) => write!(f, "v_{j}"),
            VertexLabel::Level(k) => write!(f, "v^{k}"),
            VertexLabel::Named(name) => f.write_str(name),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = core::convert::Infallible;

    /// Inverse of `Display`; strings outside the `v_j^k` grammar become
    /// [`VertexLabel::Named`].
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        fn index(s: &str) -> Option<u32> {
            if s.is_empty() || s.starts_with('0') || !s.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            s.parse().ok()
        }
        let structured = s.strip_prefix('v').and_then(|rest| {
            if let Some(level) = rest.strip_prefix('^') {
                return index(level).map(VertexLabel::Level);
            }
            let rest = rest.strip_prefix('_')?;
            match rest.split_once('^') {
                Some((series, level)) => Some(VertexLabel::Grid { series: index(series)?, level: index(level)? }),
                None => index(rest).map(VertexLabel::Series),
            }
        });
        Ok(structured.unwrap_or_else(|| VertexLabel::Named(s.to_string())))
    }
}

/// A colored edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    /// Smaller endpoint.
    pub u: usize,
    /// Larger endpoint.
    pub v: usize,
    /// Color.
    pub color: Color,
}

impl Edge {
    /// Edge with endpoints in canonical order.
    pub fn new(a: usize, b: usize, color: impl Into<Color>) -> Self {
        Edge { u: a.min(b), v: a.max(b), color: color.into() }
    }
}

impl From<(usize, usize, u8)> for Edge {
    fn from((a, b, c): (usize, usize, u8)) -> Self {
        // keep loops visible to validation
        Edge { u: a, v: b, color: Color(c) }
    }
}

/// A validated `(n+1)`-colored graph, closed or with boundary.
///
/// Equality is structural: same dimension, same labels, same edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gem {
    dimension: usize,
    labels: Vec<VertexLabel>,
    // neighbor of v along color c at v * (dimension + 1) + c
    adjacency: Vec<Option<usize>>,
}

/// Connected components of the subgraph spanned by a color set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueReport {
    /// The colors kept.
    pub colors: ColorSet,
    /// Number of components.
    pub component_count: usize,
    /// Components, each sorted, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
}

impl Gem {
    /// Validate and build a gem.
    ///
    /// Checks, in order per edge: color range, vertex range, loops, duplicate
    /// edges and color clashes; then that every vertex carries colors `0..n`,
    /// then label uniqueness.
    pub fn new<E>(dimension: usize, labels: Vec<VertexLabel>, edges: impl IntoIterator<Item = E>) -> Result<Self>
    where
        E: Into<Edge>,
    {
        if dimension == 0 || dimension > MAX_DIMENSION {
            return Err(Error::BadDimension(dimension));
        }
        let vertex_count = labels.len();
        let width = dimension + 1;
        let mut adjacency = vec![None; vertex_count * width];
        for (index, edge) in edges.into_iter().enumerate() {
            let Edge { u, v, color } = edge.into();
            if color.index() > dimension {
                return Err(Error::BadColor { color, dimension });
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { edge: index, vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { edge: index, vertex: u });
            }
            let (su, sv) = (u * width + color.index(), v * width + color.index());
            if adjacency[su] == Some(v) {
                return Err(Error::DuplicateEdge { edge: index });
            }
            for (slot, vertex) in [(su, u), (sv, v)] {
                if adjacency[slot].is_some() {
                    return Err(Error::ColorClash { edge: index, vertex, color });
                }
            }
            adjacency[su] = Some(v);
            adjacency[sv] = Some(u);
        }
        for vertex in 0..vertex_count {
            for c in 0..dimension {
                if adjacency[vertex * width + c].is_none() {
                    return Err(Error::MissingColor { vertex, color: Color(c as u8) });
                }
            }
        }
        let mut seen = BTreeSet::new();
        for (vertex, label) in labels.iter().enumerate() {
            if !seen.insert(label) {
                return Err(Error::DuplicateLabel { vertex });
            }
        }
        Ok(Gem { dimension, labels, adjacency })
    }

    /// Build a gem whose vertices are labeled `Named("0")`, `Named("1")`, ...
    pub fn unlabeled<E: Into<Edge>>(
        dimension: usize,
        vertex_count: usize,
        edges: impl IntoIterator<Item = E>,
    ) -> Result<Self> {
        let labels = (0..vertex_count).map(|v| VertexLabel::Named(v.to_string())).collect();
        Gem::new(dimension, labels, edges)
    }

    /// The dimension `n`; colors are `0..=n`.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of vertices (facets).
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// All colors of the gem.
    pub fn colors(&self) -> ColorSet {
        ColorSet::full(self.dimension)
    }

    /// Label of a vertex.
    pub fn label(&self, vertex: usize) -> &VertexLabel {
        &self.labels[vertex]
    }

    /// All labels, indexed by vertex id.
    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// Id of the vertex carrying `label`.
    pub fn find_label(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The `color`-neighbor of `vertex`.
    #[inline]
    pub fn neighbor(&self, vertex: usize, color: Color) -> Option<usize> {
        if color.index() > self.dimension {
            return None;
        }
        self.adjacency[vertex * (self.dimension + 1) + color.index()]
    }

    /// Edges in canonical order, sorted by `(u, v, color)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            let start = out.len();
            for c in 0..=self.dimension {
                if let Some(v) = self.neighbor(u, Color(c as u8)) {
                    if v > u {
                        out.push(Edge { u, v, color: Color(c as u8) });
                    }
                }
            }
            out[start..].sort_unstable();
        }
        out
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().filter(|n| n.is_some()).count() / 2
    }

    /// Colors joining `u` and `v`.
    pub fn colors_between(&self, u: usize, v: usize) -> ColorSet {
        (0..=self.dimension as u8).map(Color).filter(|&c| self.neighbor(u, c) == Some(v)).collect()
    }

    /// Whether `vertex` lacks its color-`n` edge.
    pub fn is_boundary_vertex(&self, vertex: usize) -> bool {
        self.neighbor(vertex, Color(self.dimension as u8)).is_none()
    }

    /// Boundary vertices in increasing order.
    pub fn boundary_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_boundary_vertex(v)).collect()
    }

    /// Whether every vertex carries all `n+1` colors.
    pub fn is_closed(&self) -> bool {
        (0..self.vertex_count()).all(|v| !self.is_boundary_vertex(v))
    }

    pub(crate) fn require_closed(&self) -> Result<()> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(Error::NotClosed)
        }
    }

    pub(crate) fn check_colors(&self, colors: ColorSet) -> Result<()> {
        match colors.max() {
            Some(c) if c.index() > self.dimension => Err(Error::BadColor { color: c, dimension: self.dimension }),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(vertex))
        }
    }

    /// Component index of every vertex in the subgraph spanned by `colors`,
    /// numbered in order of least vertex, plus the component count.
    pub(crate) fn component_ids(&self, colors: ColorSet) -> (Vec<usize>, usize) {
        let mut ids = vec![usize::MAX; self.vertex_count()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count() {
            if ids[start] != usize::MAX {
                continue;
            }
            ids[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for c in colors.iter() {
                    if let Some(w) = self.neighbor(v, c) {
                        if ids[w] == usize::MAX {
                            ids[w] = count;
                            queue.push_back(w);
                        }
                    }
                }
            }
            count += 1;
        }
        (ids, count)
    }

    /// Number of components of the subgraph spanned by `colors`, `g_C`.
    /// Colors beyond the dimension are ignored.
    pub fn residue_count(&self, colors: ColorSet) -> usize {
        self.component_ids(colors).1
    }

    /// Components of the subgraph spanned by `colors`.
    pub fn residues(&self, colors: ColorSet) -> Result<ResidueReport> {
        self.check_colors(colors)?;
        let (ids, count) = self.component_ids(colors);
        let mut components = vec![Vec::new(); count];
        for (v, &id) in ids.iter().enumerate() {
            components[id].push(v);
        }
        Ok(ResidueReport { colors, component_count: count, components })
    }

    /// Whether the whole graph is connected.
    pub fn is_connected(&self) -> bool {
        self.residue_count(self.colors()) <= 1
    }

    /// Whether every `n`-color residue `Γ_ĵ` is connected.
    pub fn is_contracted(&self) -> Result<bool> {
        self.require_closed()?;
        let all = self.colors();
        Ok(all.iter().all(|j| self.residue_count(all.without(ColorSet::single(j))) == 1))
    }

    /// The boundary graph: one vertex per boundary vertex, with a color-`j`
    /// edge wherever an alternating `(j, n)` path joins two boundary vertices.
    /// The result has dimension `n - 1` and is closed.
    pub fn boundary_graph(&self) -> Result<Gem> {
        let boundary = self.boundary_vertices();
        if boundary.is_empty() {
            return Err(Error::NoBoundary);
        }
        if self.dimension < 2 {
            return Err(Error::BadDimension(self.dimension - 1));
        }
        let top = Color(self.dimension as u8);
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in boundary.iter().enumerate() {
            position[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &start) in boundary.iter().enumerate() {
            for j in 0..self.dimension as u8 {
                let mut at = start;
                let end = loop {
                    // color j < n exists everywhere
                    let next = self.neighbor(at, Color(j)).expect("validated gem");
                    match self.neighbor(next, top) {
                        Some(further) => at = further,
                        None => break next,
                    }
                };
                let k = position[end];
                if i < k {
                    edges.push(Edge::new(i, k, j));
                }
            }
        }
        let labels = boundary.iter().map(|&v| self.labels[v].clone()).collect();
        Gem::new(self.dimension - 1, labels, edges)
    }

    /// The gem spanned by `colors` on a vertex subset closed under those
    /// colors, with colors renumbered by rank. Used to study residues as gems
    /// in their own right.
    pub fn residue_gem(&self, colors: ColorSet, vertices: &[usize]) -> Result<Gem> {
        self.check_colors(colors)?;
        if colors.len() < 2 {
            return Err(Error::BadParam("a residue gem needs at least two colors".into()));
        }
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            position[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for (rank, c) in colors.iter().enumerate() {
                if let Some(w) = self.neighbor(v, c) {
                    let k = position[w];
                    if k == usize::MAX {
                        return Err(Error::BadParam("vertex set is not a union of residues".into()));
                    }
                    if i < k {
                        edges.push(Edge::new(i, k, rank as u8));
                    }
                }
            }
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        Gem::new(colors.len() - 1, labels, edges)
    }

    /// The same gem with vertex `v` renamed to `new_id[v]`.
    pub fn permuted(&self, new_id: &[usize]) -> Result<Gem> {
        let count = self.vertex_count();
        let mut seen = vec![false; count];
        if new_id.len() != count || new_id.iter().any(|&i| i >= count || core::mem::replace(&mut seen[i], true)) {
            return Err(Error::BadParam("not a permutation of the vertex ids".into()));
        }
        let mut labels = vec![VertexLabel::Series(0); count];
        for (v, &i) in new_id.iter().enumerate() {
            labels[i] = self.labels[v].clone();
        }
        let edges = self.edges().into_iter().map(|e| Edge::new(new_id[e.u], new_id[e.v], e.color));
        Gem::new(self.dimension, labels, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cylinder_gem, glued_sphere, product_gem, standard_sphere};

    fn sphere_edges(n: u8) -> Vec<(usize, usize, u8)> {
        (0..=n).map(|c| (0, 1, c)).collect()
    }

    #[test]
    fn two_vertex_sphere_is_valid() {
        let g = Gem::unlabeled(3, 2, sphere_edges(3)).unwrap();
        assert!(g.is_closed());
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn loop_rejected() {
        let err = Gem::unlabeled(1, 2, [(0, 0, 0u8), (0, 1, 1)]).unwrap_err();
        assert_eq!(err, Error::LoopEdge { edge: 0, vertex: 0 });
    }

    #[test]
    fn doubled_color_rejected() {
        let err = Gem::unlabeled(1, 4, [(0, 1, 0u8), (0, 2, 0), (2, 3, 1)]).unwrap_err();
        assert_eq!(err.code(), "ColorClash");
        let err = Gem::unlabeled(1, 2, [(0, 1, 0u8), (1, 0, 0)]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge { edge: 1 });
    }

    #[test]
    fn missing_and_bad_colors() {
        let err = Gem::unlabeled(2, 2, [(0, 1, 0u8)]).unwrap_err();
        assert_eq!(err.code(), "MissingColor");
        let err = Gem::unlabeled(1, 2, [(0, 1, 0u8), (0, 1, 2)]).unwrap_err();
        assert_eq!(err, Error::BadColor { color: Color(2), dimension: 1 });
        // color n may be absent
        assert!(Gem::unlabeled(2, 2, [(0, 1, 0u8), (0, 1, 1)]).is_ok());
    }

    #[test]
    fn duplicate_labels_rejected() {
        let labels = vec![VertexLabel::Series(1), VertexLabel::Series(1)];
        assert_eq!(Gem::new(1, labels, sphere_edges(1)).unwrap_err(), Error::DuplicateLabel { vertex: 1 });
    }

    #[test]
    fn labels_round_trip_through_text() {
        for label in [
            VertexLabel::grid(3, 12),
            VertexLabel::Series(7),
            VertexLabel::Level(2),
            VertexLabel::Named("v_03".into()),
            VertexLabel::Named("a".into()),
        ] {
            let text = alloc::format!("{label}");
            assert_eq!(text.parse::<VertexLabel>().unwrap(), label);
        }
    }

    #[test]
    fn residues_of_edgeless_color_set() {
        let g = product_gem(3, 2).unwrap();
        let r = g.residues(ColorSet::EMPTY).unwrap();
        assert_eq!(r.component_count, g.vertex_count());
        assert!(g.residues(ColorSet::single(Color(4))).is_err());
    }

    #[test]
    fn sphere_pairs_are_single_cycles() {
        let g = standard_sphere(4).unwrap();
        for pair in ColorSet::subsets_of_size(4, 2) {
            assert_eq!(g.residues(pair).unwrap().component_count, 1);
        }
    }

    #[test]
    fn glued_sphere_pair_residue() {
        let g = glued_sphere(3, 2).unwrap();
        let pair: ColorSet = [Color(1), Color(2)].into_iter().collect();
        assert_eq!(g.residues(pair).unwrap().component_count, 2);
    }

    #[test]
    fn contractedness() {
        assert!(crate::constructions::product_standard(3).unwrap().is_contracted().unwrap());
        assert!(!product_gem(3, 2).unwrap().is_contracted().unwrap());
        assert!(standard_sphere(2).unwrap().is_contracted().unwrap());
        assert_eq!(cylinder_gem(3, 1).unwrap().is_contracted(), Err(Error::NotClosed));
    }

    #[test]
    fn boundary_of_closed_gem() {
        assert_eq!(product_gem(3, 2).unwrap().boundary_graph(), Err(Error::NoBoundary));
    }

    #[test]
    fn boundary_of_minimal_cylinder() {
        for n in 2..=6 {
            let b = cylinder_gem(n, 1).unwrap().boundary_graph().unwrap();
            assert_eq!(b.dimension(), n - 1);
            assert_eq!(b.vertex_count(), 4);
            let comps = b.residues(b.colors()).unwrap();
            assert_eq!(comps.component_count, 2);
            assert!(comps.components.iter().all(|c| c.len() == 2));
            assert!(b.is_closed());
            assert_eq!(b.boundary_graph(), Err(Error::NoBoundary));
        }
    }

    #[test]
    fn permuting_twice_restores() {
        let g = product_gem(3, 2).unwrap();
        let n = g.vertex_count();
        let forward: Vec<usize> = (0..n).map(|v| (v * 5 + 3) % n).collect();
        let mut back = vec![0; n];
        for (v, &w) in forward.iter().enumerate() {
            back[w] = v;
        }
        let p = g.permuted(&forward).unwrap();
        assert_ne!(p, g);
        assert_eq!(p.permuted(&back).unwrap(), g);
    }
}
