//! Facet orientations as bipartitions.
//!
//! Adjacent facets of an orientable colored triangulation carry opposite
//! signs, so an orientation of a connected gem is a 2-coloring of its vertices,
//! fixed once one vertex is declared positive.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::gem::{Gem, VertexLabel};
use crate::{Error, Result};

/// A `+1`/`-1` sign per vertex with adjacent vertices of opposite sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    signs: Vec<i8>,
    root: usize,
}

impl Orientation {
    #[cfg(test)]
    pub(crate) fn from_signs_unchecked(signs: Vec<i8>, root: usize) -> Self {
        Orientation { signs, root }
    }

    /// Sign of `vertex`.
    pub fn sign(&self, vertex: usize) -> Result<i8> {
        self.signs.get(vertex).copied().ok_or(Error::UnknownVertex(vertex))
    }

    /// All signs, indexed by vertex id.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// The vertex the orientation was rooted at.
    pub fn root(&self) -> usize {
        self.root
    }

    /// Sign of the root. `+1` unless the orientation was flipped.
    pub fn root_sign(&self) -> i8 {
        self.signs[self.root]
    }

    /// Vertices of the given sign, in id order.
    pub fn vertices_with_sign(&self, sign: i8) -> impl Iterator<Item = usize> + '_ {
        self.signs.iter().enumerate().filter(move |(_, &s)| s == sign).map(|(v, _)| v)
    }

    /// The opposite orientation.
    pub fn flipped(&self) -> Orientation {
        Orientation { signs: self.signs.iter().map(|s| -s).collect(), root: self.root }
    }

    /// Sum of signs over `vertices`: their algebraic number.
    pub fn algebraic_number(&self, vertices: impl IntoIterator<Item = usize>) -> Result<i64> {
        vertices.into_iter().try_fold(0i64, |acc, v| Ok(acc + i64::from(self.sign(v)?)))
    }
}

/// Orient a connected gem with `root` positive.
pub fn orientation(gem: &Gem, root: usize) -> Result<Orientation> {
    gem.check_vertex(root)?;
    let mut signs = vec![0i8; gem.vertex_count()];
    signs[root] = 1;
    let mut queue = VecDeque::from([root]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for c in gem.colors().iter() {
            let Some(w) = gem.neighbor(v, c) else { continue };
            if signs[w] == 0 {
                signs[w] = -signs[v];
                reached += 1;
                queue.push_back(w);
            } else if signs[w] == signs[v] {
                return Err(Error::NotBipartite { vertex: w });
            }
        }
    }
    if reached != gem.vertex_count() {
        return Err(Error::Disconnected);
    }
    Ok(Orientation { signs, root })
}

/// The vertex declared positive by convention: the one labeled `v_1^1` if
/// present, otherwise vertex 0.
pub fn canonical_root(gem: &Gem) -> usize {
    gem.find_label(&VertexLabel::grid(1, 1)).unwrap_or(0)
}

/// [`orientation`] rooted at [`canonical_root`].
pub fn canonical_orientation(gem: &Gem) -> Result<Orientation> {
    orientation(gem, canonical_root(gem))
}

/// Whether the gem is bipartite, component by component.
pub fn is_bipartite(gem: &Gem) -> bool {
    let mut side = vec![0i8; gem.vertex_count()];
    for start in 0..gem.vertex_count() {
        if side[start] != 0 {
            continue;
        }
        side[start] = 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for c in gem.colors().iter() {
                let Some(w) = gem.neighbor(v, c) else { continue };
                if side[w] == 0 {
                    side[w] = -side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}
