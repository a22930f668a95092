//! Gem families for `S^n`, `S^{n-1} x I` and `S^{n-1} x S^1`.
//!
//! Grid families use labels `v_j^k` with column `j` in `1..=2d` and row `k` in
//! `1..=n+1`; the vertex id of `v_j^k` is `(k-1) * 2d + (j-1)`.
//!
//! Column pairs `(2j-1, 2j)` form blocks. Inside a block, rows `k` and `k+1`
//! are joined on both columns by color `c_k`, where `c_1 = n-1` and
//! `c_k = k-2` for `2 <= k <= n`. Each row pair also gets every color of
//! `0..n` not used vertically at that row. Blocks are chained by color `n` on
//! the interior rows, closing up with a wrap edge `v_1^k -- v_{2d}^k`.

use alloc::format;
use alloc::vec::Vec;

use crate::color::{Color, MAX_DIMENSION};
use crate::gem::{Edge, Gem, VertexLabel};
use crate::{Error, Result};

fn check_dimension(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_DIMENSION {
        return Err(Error::BadParam(format!("dimension {n} outside {min}..={MAX_DIMENSION}")));
    }
    Ok(())
}

fn check_degree(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::BadParam("degree parameter must be at least 1".into()));
    }
    Ok(())
}

/// The two-vertex crystallization of `S^n`: `v^1` and `v^2` joined by one edge
/// of every color.
pub fn standard_sphere(n: usize) -> Result<Gem> {
    check_dimension(n, 1)?;
    let labels = alloc::vec![VertexLabel::Level(1), VertexLabel::Level(2)];
    Gem::new(n, labels, (0..=n as u8).map(|c| Edge::new(0, 1, c)))
}

/// The `2d`-vertex necklace gem of `S^n`.
///
/// `v_{2j-1}` and `v_{2j}` share colors `0..n`; color `n` joins `v_{2j}` to
/// `v_{2j+1}` and closes the necklace with `v_1 -- v_{2d}`.
pub fn necklace_sphere(n: usize, d: usize) -> Result<Gem> {
    check_dimension(n, 1)?;
    check_degree(d)?;
    let labels = (1..=2 * d as u32).map(VertexLabel::Series).collect();
    let mut edges = Vec::new();
    for j in 0..d {
        edges.extend((0..n as u8).map(|c| Edge::new(2 * j, 2 * j + 1, c)));
    }
    for j in 1..d {
        edges.push(Edge::new(2 * j - 1, 2 * j, n as u8));
    }
    edges.push(Edge::new(0, 2 * d - 1, n as u8));
    Gem::new(n, labels, edges)
}

/// Vertex id of `v_j^k` in a grid family with `2d` columns.
pub fn grid_id(d: usize, j: usize, k: usize) -> usize {
    (k - 1) * 2 * d + (j - 1)
}

/// Color joining rows `k` and `k + 1`.
pub fn vertical_color(n: usize, k: usize) -> u8 {
    if k == 1 {
        (n - 1) as u8
    } else {
        (k - 2) as u8
    }
}

/// Colors joining `v_{2j-1}^k` and `v_{2j}^k` inside a block, not counting
/// the color-`n` wrap used when `d = 1`.
pub fn row_colors(n: usize, k: usize) -> Vec<u8> {
    let above = (k >= 2).then(|| vertical_color(n, k - 1));
    let below = (k <= n).then(|| vertical_color(n, k));
    (0..n as u8).filter(|&c| Some(c) != above && Some(c) != below).collect()
}

fn grid_labels(n: usize, d: usize) -> Vec<VertexLabel> {
    let mut labels = Vec::with_capacity(2 * d * (n + 1));
    for k in 1..=n as u32 + 1 {
        for j in 1..=2 * d as u32 {
            labels.push(VertexLabel::grid(j, k));
        }
    }
    labels
}

fn cylinder_edges(n: usize, d: usize) -> Vec<Edge> {
    let id = |j, k| grid_id(d, j, k);
    let top = n as u8;
    let mut edges = Vec::new();
    for block in 1..=d {
        let (left, right) = (2 * block - 1, 2 * block);
        for k in 1..=n + 1 {
            edges.extend(row_colors(n, k).into_iter().map(|c| Edge::new(id(left, k), id(right, k), c)));
            if k <= n {
                let c = vertical_color(n, k);
                edges.push(Edge::new(id(left, k), id(left, k + 1), c));
                edges.push(Edge::new(id(right, k), id(right, k + 1), c));
            }
        }
    }
    for k in 2..=n {
        for j in 1..d {
            edges.push(Edge::new(id(2 * j, k), id(2 * j + 1, k), top));
        }
        edges.push(Edge::new(id(1, k), id(2 * d, k), top));
    }
    edges
}

/// The `2d(n+1)`-vertex gem of `S^{n-1} x I`. Rows `1` and `n+1` are the
/// boundary vertices.
pub fn cylinder_gem(n: usize, d: usize) -> Result<Gem> {
    check_dimension(n, 2)?;
    check_degree(d)?;
    Gem::new(n, grid_labels(n, d), cylinder_edges(n, d))
}

/// Pairs `(j, j')` such that `v_j^1` is joined to `v_{j'}^{n+1}` by color `n`
/// when the two boundary spheres of the cylinder are identified.
///
/// Odd `n`: `v_1^1 -- v_1^{n+1}` and `v_j^1 -- v_{2d+2-j}^{n+1}`.
/// Even `n`: `v_{2d}^1 -- v_1^{n+1}` and `v_j^1 -- v_{j+1}^{n+1}`.
pub fn boundary_gluing(n: usize, d: usize) -> Vec<(usize, usize)> {
    if n % 2 == 1 {
        core::iter::once((1, 1)).chain((2..=2 * d).map(|j| (j, 2 * d + 2 - j))).collect()
    } else {
        core::iter::once((2 * d, 1)).chain((1..2 * d).map(|j| (j, j + 1))).collect()
    }
}

/// The standard `2(n+1)`-vertex crystallization of `S^{n-1} x S^1`.
pub fn product_standard(n: usize) -> Result<Gem> {
    check_dimension(n, 2)?;
    let mut edges = cylinder_edges(n, 1);
    let top = n as u8;
    let id = |j, k| grid_id(1, j, k);
    if n % 2 == 1 {
        edges.push(Edge::new(id(1, 1), id(1, n + 1), top));
        edges.push(Edge::new(id(2, 1), id(2, n + 1), top));
    } else {
        edges.push(Edge::new(id(1, 1), id(2, n + 1), top));
        edges.push(Edge::new(id(2, 1), id(1, n + 1), top));
    }
    Gem::new(n, grid_labels(n, 1), edges)
}

/// The `2d(n+1)`-vertex gem of `S^{n-1} x S^1` whose projection onto
/// [`product_standard`] has degree `d`.
pub fn product_gem(n: usize, d: usize) -> Result<Gem> {
    check_dimension(n, 2)?;
    check_degree(d)?;
    let mut edges = cylinder_edges(n, d);
    for (j, j2) in boundary_gluing(n, d) {
        edges.push(Edge::new(grid_id(d, j, 1), grid_id(d, j2, n + 1), n as u8));
    }
    Gem::new(n, grid_labels(n, d), edges)
}

/// The `4d`-vertex gem of `S^n` obtained by joining the two boundary
/// components of [`cylinder_gem`] with the color-`n` edges of
/// [`boundary_gluing`].
pub fn glued_sphere(n: usize, d: usize) -> Result<Gem> {
    let boundary = cylinder_gem(n, d)?.boundary_graph()?;
    let find =
        |label| boundary.find_label(&label).ok_or_else(|| Error::Mismatch(format!("boundary vertex {label} missing")));
    let mut edges = boundary.edges();
    for (j, j2) in boundary_gluing(n, d) {
        let top = find(VertexLabel::grid(j as u32, 1))?;
        let bottom = find(VertexLabel::grid(j2 as u32, n as u32 + 1))?;
        edges.push(Edge::new(top, bottom, Color(n as u8)));
    }
    Gem::new(n, boundary.labels().to_vec(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::ColorSet;
    use crate::iso::color_isomorphic;
    use alloc::vec;

    fn horizontal(g: &Gem, d: usize, j: usize, k: usize) -> Vec<u8> {
        g.colors_between(grid_id(d, j, k), grid_id(d, j + 1, k)).iter().map(|c| c.0).collect()
    }

    // Row labels as printed in the standard S^{n-1} x I crystallization for n = 5:
    // "0,...,n-2", "1,...,n-2,n", "2,...,n", "3,...,n,0", "n-1,n,0,...,n-4", "n-1,0,...,n-3".
    #[test]
    fn minimal_cylinder_row_labels_n5() {
        let g = cylinder_gem(5, 1).unwrap();
        assert_eq!(horizontal(&g, 1, 1, 1), [0, 1, 2, 3]);
        assert_eq!(horizontal(&g, 1, 1, 2), [1, 2, 3, 5]);
        assert_eq!(horizontal(&g, 1, 1, 3), [2, 3, 4, 5]);
        assert_eq!(horizontal(&g, 1, 1, 4), [0, 3, 4, 5]);
        assert_eq!(horizontal(&g, 1, 1, 5), [0, 1, 4, 5]);
        assert_eq!(horizontal(&g, 1, 1, 6), [0, 1, 2, 4]);
        let vertical: Vec<u8> = (1..=5).map(|k| vertical_color(5, k)).collect();
        assert_eq!(vertical, [4, 0, 1, 2, 3]);
    }

    #[test]
    fn minimal_cylinder_row_labels_n3_n4() {
        let g = cylinder_gem(3, 1).unwrap();
        assert_eq!(horizontal(&g, 1, 1, 1), [0, 1]);
        assert_eq!(horizontal(&g, 1, 1, 2), [1, 3]);
        assert_eq!(horizontal(&g, 1, 1, 3), [2, 3]);
        assert_eq!(horizontal(&g, 1, 1, 4), [0, 2]);
        let g = cylinder_gem(4, 1).unwrap();
        assert_eq!(horizontal(&g, 1, 1, 1), [0, 1, 2]);
        assert_eq!(horizontal(&g, 1, 1, 2), [1, 2, 4]);
        assert_eq!(horizontal(&g, 1, 1, 3), [2, 3, 4]);
        assert_eq!(horizontal(&g, 1, 1, 4), [0, 3, 4]);
        assert_eq!(horizontal(&g, 1, 1, 5), [0, 1, 3]);
    }

    // For d > 1 the in-block rows drop color n: "1,...,n-2", "2,...,n-1", "3,...,n-1,0".
    #[test]
    fn wide_cylinder_block_rows() {
        let g = cylinder_gem(5, 3).unwrap();
        for block in 1..=3 {
            let j = 2 * block - 1;
            assert_eq!(horizontal(&g, 3, j, 2), [1, 2, 3]);
            assert_eq!(horizontal(&g, 3, j, 3), [2, 3, 4]);
            assert_eq!(horizontal(&g, 3, j, 4), [0, 3, 4]);
        }
        let top = Color(5);
        assert_eq!(g.neighbor(grid_id(3, 2, 3), top), Some(grid_id(3, 3, 3)));
        assert_eq!(g.neighbor(grid_id(3, 1, 3), top), Some(grid_id(3, 6, 3)));
    }

    #[test]
    fn vertex_counts() {
        for n in 2..=8 {
            for d in 1..=6 {
                assert_eq!(cylinder_gem(n, d).unwrap().vertex_count(), 2 * d * (n + 1));
                assert_eq!(product_gem(n, d).unwrap().vertex_count(), 2 * d * (n + 1));
                assert_eq!(necklace_sphere(n, d).unwrap().vertex_count(), 2 * d);
                assert_eq!(glued_sphere(n, d).unwrap().vertex_count(), 4 * d);
            }
            assert_eq!(product_standard(n).unwrap().vertex_count(), 2 * (n + 1));
        }
        assert_eq!(standard_sphere(1).unwrap().vertex_count(), 2);
        assert_eq!(necklace_sphere(1, 3).unwrap().vertex_count(), 6);
    }

    #[test]
    fn bad_parameters() {
        assert_eq!(necklace_sphere(3, 0).unwrap_err().code(), "BadParam");
        assert_eq!(cylinder_gem(1, 1).unwrap_err().code(), "BadParam");
        assert_eq!(product_gem(3, 0).unwrap_err().code(), "BadParam");
        assert_eq!(standard_sphere(0).unwrap_err().code(), "BadParam");
    }

    #[test]
    fn closedness() {
        assert!(standard_sphere(3).unwrap().is_closed());
        assert!(!cylinder_gem(3, 2).unwrap().is_closed());
        assert!(product_gem(3, 2).unwrap().is_closed());
        assert!(glued_sphere(4, 3).unwrap().is_closed());
    }

    #[test]
    fn cylinder_boundary_rows() {
        for n in 2..=6 {
            for d in 1..=4 {
                let g = cylinder_gem(n, d).unwrap();
                let mut expected: Vec<usize> =
                    (1..=2 * d).flat_map(|j| [grid_id(d, j, 1), grid_id(d, j, n + 1)]).collect();
                expected.sort_unstable();
                assert_eq!(g.boundary_vertices(), expected);
            }
        }
    }

    #[test]
    fn product_gem_only_adds_top_color() {
        for n in 2..=6 {
            for d in 1..=5 {
                let lower = ColorSet::full(n - 1);
                let keep =
                    |g: &Gem| -> Vec<Edge> { g.edges().into_iter().filter(|e| lower.contains(e.color)).collect() };
                assert_eq!(keep(&product_gem(n, d).unwrap()), keep(&cylinder_gem(n, d).unwrap()));
            }
        }
    }

    #[test]
    fn glued_sphere_matches_product_gluing() {
        for n in 2..=6 {
            for d in 1..=5 {
                let p = product_gem(n, d).unwrap();
                let s = glued_sphere(n, d).unwrap();
                let top = Color(n as u8);
                for v in 0..s.vertex_count() {
                    let w = s.neighbor(v, top).unwrap();
                    let pv = p.find_label(s.label(v)).unwrap();
                    assert_eq!(p.label(p.neighbor(pv, top).unwrap()), s.label(w));
                }
            }
        }
    }

    #[test]
    fn degenerate_necklace_is_standard_sphere() {
        for n in 1..=6 {
            assert!(color_isomorphic(&necklace_sphere(n, 1).unwrap(), &standard_sphere(n).unwrap()).is_some());
        }
    }

    #[test]
    fn product_standard_matches_d1_gluing() {
        for n in 2..=8 {
            let a = product_gem(n, 1).unwrap();
            let b = product_standard(n).unwrap();
            assert!(color_isomorphic(&a, &b).is_some(), "n = {n}");
        }
    }

    #[test]
    fn gluing_is_a_bijection() {
        for n in 2..=7 {
            for d in 1..=5 {
                let pairs = boundary_gluing(n, d);
                let mut tops: Vec<_> = pairs.iter().map(|p| p.0).collect();
                let mut bottoms: Vec<_> = pairs.iter().map(|p| p.1).collect();
                tops.sort_unstable();
                bottoms.sort_unstable();
                let all: Vec<usize> = (1..=2 * d).collect();
                assert_eq!(tops, all);
                assert_eq!(bottoms, all);
            }
        }
        assert_eq!(boundary_gluing(3, 2), vec![(1, 1), (2, 4), (3, 3), (4, 2)]);
        assert_eq!(boundary_gluing(4, 2), vec![(4, 1), (1, 2), (2, 3), (3, 4)]);
    }
}
