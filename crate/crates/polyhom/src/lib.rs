//! Finite point configurations, their isometry groups, and homogeneity.
//!
//! This crate builds the vertex sets of a catalog of highly symmetric
//! polytopes, computes the full isometry group of any finite point
//! configuration as a set of vertex permutations realized by orthogonal
//! matrices, decides how strongly the group acts on tuples of vertices
//! (m-point homogeneity), and classifies the 3-dimensional solids that pass
//! the strongest tests. A command-line companion crate exposes the same
//! pipeline on files.
//!
//! The typical pipeline:
//!
//! ```
//! use polyhom::geometry::Tolerance;
//! use polyhom::families::{platonic, PlatonicKind};
//! use polyhom::symmetry::isometry_group;
//! use polyhom::homogeneity::{homogeneity_degree, Verdict};
//!
//! let cube = platonic(PlatonicKind::Cube, Tolerance::default()).normalize()?;
//! let classes = cube.distance_classes()?;
//! let group = isometry_group(&cube, &classes)?;
//! assert_eq!(group.order(), 48);
//!
//! let report = homogeneity_degree(&cube, &classes, &group, 3)?;
//! assert_eq!(report.verdict(3), Verdict::ShortcutInfinite);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod faces;
pub mod families;
pub mod geometry;
pub mod homogeneity;
pub mod hull;
pub mod symmetry;
pub mod verification;


pub use families::{FamilySpec, HypercubeKind, PlatonicKind};
pub use geometry::{DistanceClasses, GeometryError, Tolerance, VertexSet};


pub use symmetry::{IsometryGroup, Permutation};
