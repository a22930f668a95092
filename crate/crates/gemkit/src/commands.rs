//! The library side of each CLI subcommand. Every function returns the exact
//! JSON text the binary prints.

use std::collections::BTreeMap;

use gemkit_core::complex::{complex_vertex_count, f_vector};
use gemkit_core::constructions as build;
use gemkit_core::degree::{self as deg, ColoredVertexMap};
use gemkit_core::genus::regular_genus;
use gemkit_core::iso::color_isomorphic;
use gemkit_core::orientation::is_bipartite;
use gemkit_core::reduction::{reduce_cylinder, ScheduledMove};
use gemkit_core::{Error, Gem};
use serde::Serialize;

use crate::document::{DocumentError, GemDocument};

/// Machine-readable failure, printed to stderr by the binary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub code: String,
    pub message: String,
    pub location: String,
}

impl ErrorRecord {
    pub fn io(path: &str, err: &std::io::Error) -> Self {
        ErrorRecord { code: "IoError".into(), message: err.to_string(), location: path.into() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

impl From<Error> for ErrorRecord {
    fn from(e: Error) -> Self {
        let location = e.edge_index().map(|i| format!("edges[{i}]")).unwrap_or_default();
        ErrorRecord { code: e.code().into(), message: e.to_string(), location }
    }
}

impl From<DocumentError> for ErrorRecord {
    fn from(e: DocumentError) -> Self {
        let message = match &e {
            DocumentError::Invalid { source, .. } => source.to_string(),
            other => other.to_string(),
        };
        ErrorRecord { code: e.code().into(), message, location: e.location() }
    }
}

pub type CommandResult = Result<String, ErrorRecord>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports always serialize");
    text.push('\n');
    text
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Sphere,
    NecklaceSphere,
    Cylinder,
    ProductStandard,
    Product,
    GluedSphere,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Sphere,
        Family::NecklaceSphere,
        Family::Cylinder,
        Family::ProductStandard,
        Family::Product,
        Family::GluedSphere,
    ];

    /// Whether the family takes `--d`.
    pub fn takes_d(self) -> bool {
        !matches!(self, Family::Sphere | Family::ProductStandard)
    }

    pub fn build(self, n: usize, d: Option<usize>) -> Result<Gem, Error> {
        let d = || d.ok_or_else(|| Error::BadParam("this family needs --d".into()));
        match self {
            Family::Sphere => build::standard_sphere(n),
            Family::NecklaceSphere => build::necklace_sphere(n, d()?),
            Family::Cylinder => build::cylinder_gem(n, d()?),
            Family::ProductStandard => build::product_standard(n),
            Family::Product => build::product_gem(n, d()?),
            Family::GluedSphere => build::glued_sphere(n, d()?),
        }
    }
}

pub fn construct(family: Family, n: usize, d: Option<usize>) -> CommandResult {
    Ok(crate::serialize(&family.build(n, d)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MapKind {
    /// `product(n, d)` onto `product-standard(n)`.
    Product,
    /// `necklace-sphere(n, d)` onto `sphere(n)`.
    Sphere,
}

pub fn build_map(kind: MapKind, n: usize, d: usize, reverse: bool) -> Result<ColoredVertexMap, Error> {
    let map = match kind {
        MapKind::Product => deg::build_product_map(n, d)?,
        MapKind::Sphere => deg::build_sphere_map(&build::necklace_sphere(n, d)?, d)?,
    };
    if reverse {
        deg::compose(&deg::orientation_reversal(map.target())?, &map)
    } else {
        Ok(map)
    }
}

pub fn map(kind: MapKind, n: usize, d: usize, reverse: bool) -> CommandResult {
    Ok(crate::serialize_map(&build_map(kind, n, d, reverse)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub dimension: usize,
    pub vertices: usize,
    pub edges: usize,
    pub closed: bool,
    pub connected: bool,
    pub bipartite: bool,
    /// `null` for gems with boundary.
    pub contracted: Option<bool>,
    pub complex_vertices: Option<usize>,
    pub boundary_vertices: usize,
    /// Connected components of the boundary graph; `null` when closed.
    pub boundary_components: Option<usize>,
}

impl VerifyReport {
    pub fn of(gem: &Gem) -> Result<Self, Error> {
        let closed = gem.is_closed();
        let boundary_components = if closed {
            None
        } else {
            let boundary = gem.boundary_graph()?;
            Some(boundary.residue_count(boundary.colors()))
        };
        Ok(VerifyReport {
            dimension: gem.dimension(),
            vertices: gem.vertex_count(),
            edges: gem.edge_count(),
            closed,
            connected: gem.is_connected(),
            bipartite: is_bipartite(gem),
            contracted: if closed { Some(gem.is_contracted()?) } else { None },
            complex_vertices: if closed { Some(complex_vertex_count(gem)?) } else { None },
            boundary_vertices: gem.boundary_vertices().len(),
            boundary_components,
        })
    }
}

pub fn verify(gem: &Gem) -> CommandResult {
    Ok(to_json(&VerifyReport::of(gem)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationGenus {
    pub chi: i64,
    pub rho: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusOutput {
    pub regular_genus: String,
    pub argmin: String,
    pub permutations_scanned: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_permutation: Option<BTreeMap<String, PermutationGenus>>,
}

pub fn genus(gem: &Gem, all_permutations: bool) -> CommandResult {
    let report = regular_genus(gem)?;
    let per_permutation = all_permutations.then(|| {
        report
            .per_permutation
            .iter()
            .map(|(eps, g)| (eps.to_string(), PermutationGenus { chi: g.chi, rho: g.rho.to_string() }))
            .collect()
    });
    Ok(to_json(&GenusOutput {
        regular_genus: report.regular_genus.to_string(),
        argmin: report.argmin.to_string(),
        permutations_scanned: report.per_permutation.len(),
        per_permutation,
    }))
}

#[derive(Serialize)]
struct EulerOutput {
    euler_characteristic: i64,
}

pub fn euler(gem: &Gem) -> CommandResult {
    Ok(to_json(&EulerOutput { euler_characteristic: f_vector(gem)?.euler_characteristic() }))
}

#[derive(Serialize)]
struct FVectorOutput {
    f_vector: Vec<u64>,
}

pub fn fvector(gem: &Gem) -> CommandResult {
    Ok(to_json(&FVectorOutput { f_vector: f_vector(gem)?.counts }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetDegree {
    pub vertex: usize,
    pub label: String,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeOutput {
    pub degree: i64,
    pub surjective: bool,
    pub per_target: Vec<TargetDegree>,
}

pub fn degree(map: &ColoredVertexMap) -> CommandResult {
    let result = deg::canonical_degree(map)?;
    let per_target = result
        .per_target
        .iter()
        .map(|(&vertex, &value)| TargetDegree { vertex, label: map.target().label(vertex).to_string(), value })
        .collect();
    Ok(to_json(&DegreeOutput { degree: result.degree, surjective: result.surjective, per_target }))
}

/// One line of the move log.
pub fn describe_move(m: &ScheduledMove) -> String {
    let join =
        |labels: &[gemkit_core::VertexLabel]| labels.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    match m {
        ScheduledMove::Glue { lambda1, lambda2, color } => {
            format!("glue [{}] onto [{}] along color {color}", join(lambda1), join(lambda2))
        }
        ScheduledMove::CancelDipole { u, v, colors } => format!("cancel dipole {u} {v} colors {colors}"),
    }
}

#[derive(Serialize)]
struct ReduceOutput {
    gem: GemDocument,
    moves: Vec<String>,
}

pub fn reduce(gem: &Gem) -> CommandResult {
    let reduction = reduce_cylinder(gem)?;
    Ok(to_json(&ReduceOutput {
        gem: GemDocument::from_gem(&reduction.gem),
        moves: reduction.moves.iter().map(describe_move).collect(),
    }))
}

/// A vertex bijection as a JSON array, or the string `"none"`.
pub fn iso(a: &Gem, b: &Gem) -> CommandResult {
    Ok(match color_isomorphic(a, b) {
        Some(phi) => to_json(&phi),
        None => to_json(&"none"),
    })
}

pub fn export_dot(gem: &Gem) -> CommandResult {
    Ok(crate::dot::export_dot(gem))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_builds_and_verifies() {
        for family in Family::ALL {
            let gem = family.build(3, Some(2)).unwrap();
            let report = VerifyReport::of(&gem).unwrap();
            assert_eq!(report.vertices, gem.vertex_count());
            assert!(report.connected);
        }
    }

    #[test]
    fn missing_d_is_bad_param() {
        assert_eq!(construct(Family::Product, 3, None).unwrap_err().code, "BadParam");
        assert!(construct(Family::Sphere, 3, None).is_ok());
    }

    #[test]
    fn cylinder_report() {
        let report = VerifyReport::of(&build::cylinder_gem(3, 2).unwrap()).unwrap();
        assert_eq!((report.closed, report.contracted, report.boundary_components), (false, None, Some(2)));
        assert_eq!(report.boundary_vertices, 8);
    }

    #[test]
    fn map_degrees() {
        for (kind, reverse, expected) in [
            (MapKind::Product, false, 3),
            (MapKind::Product, true, -3),
            (MapKind::Sphere, false, 3),
            (MapKind::Sphere, true, -3),
        ] {
            let m = build_map(kind, 4, 3, reverse).unwrap();
            assert_eq!(deg::canonical_degree(&m).unwrap().degree, expected);
        }
    }

    #[test]
    fn iso_none() {
        let a = build::standard_sphere(3).unwrap();
        let b = build::necklace_sphere(3, 2).unwrap();
        assert_eq!(iso(&a, &b).unwrap(), "\"none\"\n");
    }
}
