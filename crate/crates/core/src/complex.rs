//! Counts of the simplicial cell complex `K(Γ)` encoded by a closed gem.
//!
//! `K(Γ)` has one `k`-simplex labeled by `C` (with `|C| = k + 1`) per component
//! of the residue `Γ_{Δ \ C}`. The complex itself is never built.

use alloc::vec::Vec;

use crate::color::ColorSet;
use crate::gem::Gem;
use crate::Result;

/// Simplex counts `f_0, ..., f_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    /// `counts[k]` is the number of `k`-simplices.
    pub counts: Vec<u64>,
}

impl FVector {
    /// `Σ (-1)^k f_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts.iter().enumerate().map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }
}

/// The f-vector of `K(Γ)`.
pub fn f_vector(gem: &Gem) -> Result<FVector> {
    gem.require_closed()?;
    let n = gem.dimension();
    let all = gem.colors();
    let mut counts = alloc::vec![0u64; n + 1];
    // one pass over all subsets; labels of size k+1 feed f_k
    for bits in 1..=all.bits() {
        let labels = ColorSet::from_bits(bits);
        counts[labels.len() - 1] += gem.residue_count(all.without(labels)) as u64;
    }
    Ok(FVector { counts })
}

/// Euler characteristic of `|K(Γ)|`.
pub fn euler_characteristic(gem: &Gem) -> Result<i64> {
    f_vector(gem).map(|f| f.euler_characteristic())
}

/// Number of vertices of `K(Γ)`: `Σ_j g(Γ_ĵ)`.
pub fn complex_vertex_count(gem: &Gem) -> Result<usize> {
    gem.require_closed()?;
    let all = gem.colors();
    Ok(all.iter().map(|j| gem.residue_count(all.without(ColorSet::single(j)))).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::Error;
    use alloc::vec;

    /// Glue the faces of the facets explicitly: the face of `σ(v)` spanned by
    /// labels `C` is identified with the same face of `σ(w)` whenever `v -- w`
    /// has a color outside `C`. Counts classes with union-find.
    fn glued_face_counts(g: &Gem) -> Vec<u64> {
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut x = x;
            while parent[x] != root {
                let next = parent[x];
                parent[x] = root;
                x = next;
            }
            root
        }
        let n = g.dimension();
        let subsets = 1usize << (n + 1);
        let mut counts = vec![0u64; n + 1];
        for labels in 1..subsets {
            let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
            for e in g.edges() {
                if labels & (1 << e.color.0) == 0 {
                    let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
                    parent[a] = b;
                }
            }
            let classes = (0..g.vertex_count()).filter(|&v| find(&mut parent, v) == v).count();
            counts[(labels as u32).count_ones() as usize - 1] += classes as u64;
        }
        counts
    }

    #[test]
    fn oracle_two_vertex_two_sphere() {
        let g = standard_sphere(2).unwrap();
        assert_eq!(glued_face_counts(&g), [3, 3, 2]);
        assert_eq!(f_vector(&g).unwrap().counts, [3, 3, 2]);
        assert_eq!(euler_characteristic(&g).unwrap(), 2);
    }

    #[test]
    fn agrees_with_explicit_gluing() {
        for n in 2..=5 {
            for d in 1..=4 {
                for g in [necklace_sphere(n, d).unwrap(), product_gem(n, d).unwrap(), glued_sphere(n, d).unwrap()] {
                    assert_eq!(f_vector(&g).unwrap().counts, glued_face_counts(&g));
                }
            }
        }
    }

    #[test]
    fn named_values() {
        assert_eq!(f_vector(&standard_sphere(5).unwrap()).unwrap().counts[5], 2);
        assert_eq!(f_vector(&product_standard(3).unwrap()).unwrap().counts[3], 8);
        assert_eq!(euler_characteristic(&necklace_sphere(3, 4).unwrap()).unwrap(), 0);
        assert_eq!(euler_characteristic(&product_gem(3, 4).unwrap()).unwrap(), 0);
        assert_eq!(complex_vertex_count(&product_standard(4).unwrap()).unwrap(), 5);
        for n in 1..=6 {
            assert_eq!(complex_vertex_count(&standard_sphere(n).unwrap()).unwrap(), n + 1);
        }
        assert!(complex_vertex_count(&product_gem(3, 2).unwrap()).unwrap() > 4);
    }

    #[test]
    fn boundary_gems_rejected() {
        let g = cylinder_gem(3, 2).unwrap();
        assert_eq!(f_vector(&g), Err(Error::NotClosed));
        assert_eq!(complex_vertex_count(&g), Err(Error::NotClosed));
    }
}
