//! Color-preserving isomorphism.
//!
//! In a properly colored graph the image of one vertex forces the image of
//! its whole component: the `c`-neighbor of `u` must go to the `c`-neighbor of
//! `φ(u)`. The search therefore only branches on where each component's least
//! vertex goes, and backtracks across components.

use alloc::vec;
use alloc::vec::Vec;

use crate::color::ColorSet;
use crate::gem::Gem;

const UNSET: usize = usize::MAX;

fn profile(g: &Gem, v: usize) -> ColorSet {
    g.colors().iter().filter(|&c| g.neighbor(v, c).is_some()).collect()
}

struct Search<'a> {
    a: &'a Gem,
    b: &'a Gem,
    roots: Vec<usize>,
    forward: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Extend the map from `root -> image` along colored edges. Returns the
    /// vertices assigned, or `None` after undoing a failed attempt.
    fn propagate(&mut self, root: usize, image: usize) -> Option<Vec<usize>> {
        let mut assigned = vec![root];
        self.forward[root] = image;
        self.used[image] = true;
        let mut next = 0;
        while next < assigned.len() {
            let v = assigned[next];
            next += 1;
            let w = self.forward[v];
            for c in self.a.colors().iter() {
                let ok = match (self.a.neighbor(v, c), self.b.neighbor(w, c)) {
                    (None, None) => true,
                    (Some(x), Some(y)) => {
                        if self.forward[x] != UNSET {
                            self.forward[x] == y
                        } else if self.used[y] {
                            false
                        } else {
                            self.forward[x] = y;
                            self.used[y] = true;
                            assigned.push(x);
                            true
                        }
                    }
                    _ => false,
                };
                if !ok {
                    self.undo(&assigned);
                    return None;
                }
            }
        }
        Some(assigned)
    }

    fn undo(&mut self, assigned: &[usize]) {
        for &v in assigned {
            self.used[self.forward[v]] = false;
            self.forward[v] = UNSET;
        }
    }

    fn solve(&mut self, component: usize) -> bool {
        let Some(&root) = self.roots.get(component) else {
            return true;
        };
        let want = profile(self.a, root);
        for image in 0..self.b.vertex_count() {
            if self.used[image] || profile(self.b, image) != want {
                continue;
            }
            if let Some(assigned) = self.propagate(root, image) {
                if self.solve(component + 1) {
                    return true;
                }
                self.undo(&assigned);
            }
        }
        false
    }
}

/// A bijection `φ` (indexed by vertex of `a`) with `(u, v, c)` an edge of `a`
/// exactly when `(φu, φv, c)` is an edge of `b`, if one exists. Colors are
/// fixed pointwise; labels are ignored.
pub fn color_isomorphic(a: &Gem, b: &Gem) -> Option<Vec<usize>> {
    if a.dimension() != b.dimension() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut pa: Vec<_> = (0..a.vertex_count()).map(|v| profile(a, v)).collect();
    let mut pb: Vec<_> = (0..b.vertex_count()).map(|v| profile(b, v)).collect();
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return None;
    }
    let roots = a.residues(a.colors()).ok()?.components.iter().map(|c| c[0]).collect();
    let mut search =
        Search { a, b, roots, forward: vec![UNSET; a.vertex_count()], used: vec![false; b.vertex_count()] };
    search.solve(0).then_some(search.forward)
}

/// Whether `phi` is a color-isomorphism from `a` to `b`.
pub fn is_color_isomorphism(a: &Gem, b: &Gem, phi: &[usize]) -> bool {
    if a.dimension() != b.dimension() || a.vertex_count() != b.vertex_count() || phi.len() != a.vertex_count() {
        return false;
    }
    let mut hit = vec![false; b.vertex_count()];
    for &w in phi {
        if w >= hit.len() || core::mem::replace(&mut hit[w], true) {
            return false;
        }
    }
    (0..a.vertex_count()).all(|v| a.colors().iter().all(|c| a.neighbor(v, c).map(|x| phi[x]) == b.neighbor(phi[v], c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{glued_sphere, necklace_sphere, product_gem, product_standard, standard_sphere};

    fn rotate(g: &Gem, by: usize) -> Gem {
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v + by) % n).collect();
        g.permuted(&perm).unwrap()
    }

    #[test]
    fn relabeled_sphere() {
        let g = standard_sphere(3).unwrap();
        let h = rotate(&g, 1);
        let phi = color_isomorphic(&g, &h).unwrap();
        assert!(is_color_isomorphism(&g, &h, &phi));
    }

    #[test]
    fn product_d1_matches_standard() {
        let phi = color_isomorphic(&product_gem(3, 1).unwrap(), &product_standard(3).unwrap()).unwrap();
        assert!(is_color_isomorphism(&product_gem(3, 1).unwrap(), &product_standard(3).unwrap(), &phi));
    }

    #[test]
    fn different_sizes() {
        assert!(color_isomorphic(&standard_sphere(3).unwrap(), &necklace_sphere(3, 2).unwrap()).is_none());
    }

    #[test]
    fn colors_are_not_permuted() {
        // necklaces whose single-color link is 0 instead of n
        let g = necklace_sphere(2, 2).unwrap();
        let swapped = Gem::unlabeled(2, 4, g.edges().into_iter().map(|e| (e.u, e.v, (2 - e.color.0)))).unwrap();
        assert!(color_isomorphic(&g, &swapped).is_none());
    }

    #[test]
    fn reflexive_and_symmetric() {
        for n in 2..=5 {
            for d in 1..=4 {
                for g in [product_gem(n, d).unwrap(), glued_sphere(n, d).unwrap()] {
                    assert!(color_isomorphic(&g, &g).is_some());
                    let h = rotate(&g, 3);
                    assert!(color_isomorphic(&g, &h).is_some());
                    assert!(color_isomorphic(&h, &g).is_some());
                }
            }
        }
    }

    #[test]
    fn disconnected_with_repeated_components() {
        let g = crate::constructions::cylinder_gem(3, 3).unwrap().boundary_graph().unwrap();
        let h = rotate(&g, 5);
        let phi = color_isomorphic(&g, &h).unwrap();
        assert!(is_color_isomorphism(&g, &h, &phi));
    }
}
