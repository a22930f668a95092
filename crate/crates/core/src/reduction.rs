//! Collapsing the `2d(n+1)`-vertex cylinder gem to the minimal one.
//!
//! For `1 <= j < d`, a glue move along color `n` identifies the interior of
//! column `2j` (rows `2..=n`) with the interior of column `2j+1`. Each glue
//! leaves `v_{2j}^1, v_{2j+1}^1` joined only by color `n-1`, and
//! `v_{2j}^{n+1}, v_{2j+1}^{n+1}` joined only by color `n-2`; cancelling those
//! `2(d-1)` 1-dipoles leaves `2(n+1)` vertices.
//!
//! Moves address vertices by label, so the schedule stays valid while ids are
//! compacted.

use alloc::format;
use alloc::vec::Vec;

use crate::color::{Color, ColorSet};
use crate::gem::{Gem, VertexLabel};
use crate::moves::{cancel_dipole, polyhedral_glue, DipoleSpec, GlueMoveSpec};
use crate::{Error, Result};

/// One move, with vertices named by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScheduledMove {
    /// Glue `lambda1[i]` to `lambda2[i]` across `color`.
    Glue { lambda1: Vec<VertexLabel>, lambda2: Vec<VertexLabel>, color: Color },
    /// Cancel the dipole `u, v` colored `colors`.
    CancelDipole { u: VertexLabel, v: VertexLabel, colors: ColorSet },
}

fn resolve(gem: &Gem, label: &VertexLabel) -> Result<usize> {
    gem.find_label(label).ok_or_else(|| Error::BadParam(format!("no vertex labeled {label}")))
}

impl ScheduledMove {
    /// Apply the move to `gem`.
    pub fn apply(&self, gem: &Gem) -> Result<Gem> {
        match self {
            ScheduledMove::Glue { lambda1, lambda2, color } => {
                let ids = |set: &[VertexLabel]| set.iter().map(|l| resolve(gem, l)).collect::<Result<Vec<_>>>();
                let spec = GlueMoveSpec { lambda1: ids(lambda1)?, lambda2: ids(lambda2)?, glue_color: *color };
                polyhedral_glue(gem, &spec)
            }
            ScheduledMove::CancelDipole { u, v, colors } => {
                let spec = DipoleSpec { u: resolve(gem, u)?, v: resolve(gem, v)?, colors: *colors };
                cancel_dipole(gem, &spec)
            }
        }
    }
}

/// The `d - 1` glue moves followed by the `2(d - 1)` dipole cancellations.
pub fn cylinder_schedule(n: usize, d: usize) -> Vec<ScheduledMove> {
    let label = |j: usize, k: usize| VertexLabel::grid(j as u32, k as u32);
    let mut moves = Vec::new();
    for j in 1..d {
        moves.push(ScheduledMove::Glue {
            lambda1: (2..=n).map(|k| label(2 * j, k)).collect(),
            lambda2: (2..=n).map(|k| label(2 * j + 1, k)).collect(),
            color: Color(n as u8),
        });
    }
    for j in 1..d {
        moves.push(ScheduledMove::CancelDipole {
            u: label(2 * j, 1),
            v: label(2 * j + 1, 1),
            colors: ColorSet::single(Color((n - 1) as u8)),
        });
        moves.push(ScheduledMove::CancelDipole {
            u: label(2 * j, n + 1),
            v: label(2 * j + 1, n + 1),
            colors: ColorSet::single(Color((n - 2) as u8)),
        });
    }
    moves
}

/// Result of [`reduce_cylinder`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// The reduced gem.
    pub gem: Gem,
    /// Moves applied, in order.
    pub moves: Vec<ScheduledMove>,
}

/// Read `(n, d)` off a gem carrying cylinder labels `v_j^k`.
pub fn cylinder_shape(gem: &Gem) -> Result<(usize, usize)> {
    let n = gem.dimension();
    let columns = (1u32..).take_while(|&j| gem.find_label(&VertexLabel::grid(j, 1)).is_some()).count();
    if n < 2 || columns == 0 || columns % 2 == 1 || gem.vertex_count() != columns * (n + 1) {
        return Err(Error::BadParam(format!(
            "expected 2d(n+1) vertices labeled v_j^k, found {} vertices and {columns} columns",
            gem.vertex_count()
        )));
    }
    Ok((n, columns / 2))
}

/// Run [`cylinder_schedule`] on a gem labeled like
/// [`cylinder_gem`](crate::constructions::cylinder_gem).
pub fn reduce_cylinder(gem: &Gem) -> Result<Reduction> {
    let (n, d) = cylinder_shape(gem)?;
    let moves = cylinder_schedule(n, d);
    let mut current = gem.clone();
    for m in &moves {
        current = m.apply(&current)?;
    }
    Ok(Reduction { gem: current, moves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cylinder_gem, necklace_sphere};
    use crate::iso::color_isomorphic;
    use crate::moves::find_dipoles;

    #[test]
    fn schedule_shape() {
        let s = cylinder_schedule(4, 3);
        assert_eq!(s.len(), 2 + 4);
        assert!(matches!(&s[0], ScheduledMove::Glue { lambda1, .. } if lambda1.len() == 3));
        assert!(cylinder_schedule(4, 1).is_empty());
    }

    #[test]
    fn glue_stage_exposes_boundary_dipoles() {
        let (n, d) = (4, 3);
        let mut g = cylinder_gem(n, d).unwrap();
        for m in &cylinder_schedule(n, d)[..d - 1] {
            g = m.apply(&g).unwrap();
        }
        assert_eq!(g.vertex_count(), 2 * d * (n + 1) - 2 * (d - 1) * (n - 1));
        let ones = find_dipoles(&g, 1);
        for j in 1..d {
            let u = g.find_label(&VertexLabel::grid(2 * j as u32, 1)).unwrap();
            let v = g.find_label(&VertexLabel::grid(2 * j as u32 + 1, 1)).unwrap();
            assert!(ones.contains(&DipoleSpec { u, v, colors: ColorSet::single(Color(n as u8 - 1)) }));
        }
    }

    #[test]
    fn reduces_to_minimal_cylinder() {
        for n in 2..=6 {
            for d in 1..=5 {
                let reduced = reduce_cylinder(&cylinder_gem(n, d).unwrap()).unwrap();
                assert_eq!(reduced.moves.len(), 3 * (d - 1));
                assert!(color_isomorphic(&reduced.gem, &cylinder_gem(n, 1).unwrap()).is_some(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn shape_detection() {
        assert_eq!(cylinder_shape(&cylinder_gem(5, 4).unwrap()).unwrap(), (5, 4));
        assert_eq!(cylinder_shape(&necklace_sphere(3, 2).unwrap()).unwrap_err().code(), "BadParam");
    }
}
