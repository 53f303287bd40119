//! Alternative optimal and near-optimal solutions of linear programs.
//!
//! The crate describes alternative solutions through three objects:
//!
//! * the **sublevel set** `S(f, X, τ) = {x ∈ X | f(x) ≤ τ}` of a model, built
//!   with [`make_sublevel_model`];
//! * its **minimal representation**, the finite list of extreme points of the
//!   (bounded) sublevel polytope, produced by [`enumerate_vertices`] and
//!   cross-checked by the hyperplane-intersection oracle [`brute_force_vertices`];
//! * **projections** onto a subset of variables ([`project_point`],
//!   [`project_set`]).
//!
//! A dense two-phase simplex ([`solve`]), a small branch-and-bound for binary
//! programs and a no-good-cut enumerator ([`enumerate_binary`]) back all of
//! the above. The [`power`] module builds DC-OPF, Network Flow and Copper Plate
//! models from a [`Network`], and [`analysis`] checks containment of projected
//! sublevel sets across that relaxation hierarchy.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, JSON and the
//! command line live in the `aos` companion crate.
//!
//! ```
//! use aos_core::{apply_box_bounds, enumerate_vertices, solve, to_standard_form};
//! use aos_core::{LpModel, ObjectiveSense, Role, RowSense, SublevelSpec};
//!
//! // max x1  s.t.  x1 + x2 >= 101,  x1 <= 100,  x2 <= 100
//! let inf = f64::INFINITY;
//! let mut m = LpModel::new(ObjectiveSense::Maximize);
//! let x1 = m.add_variable("x1", -inf, inf, Role::Generic).unwrap();
//! let x2 = m.add_variable("x2", -inf, inf, Role::Generic).unwrap();
//! m.add_constraint("diag", [(x1, 1.0), (x2, 1.0)], RowSense::Ge, 101.0).unwrap();
//! m.add_constraint("right", [(x1, 1.0)], RowSense::Le, 100.0).unwrap();
//! m.add_constraint("top", [(x2, 1.0)], RowSense::Le, 100.0).unwrap();
//! m.set_objective(ObjectiveSense::Maximize, [(x1, 1.0)], 0.0).unwrap();
//!
//! let z = solve(&to_standard_form(&m).unwrap()).z_star;
//! assert!((z - 100.0).abs() < 1e-9);
//!
//! // every optimal point: the segment from (100, 1) to (100, 100)
//! let boxed = apply_box_bounds(&m, 1e4).unwrap().model;
//! let optimal = enumerate_vertices(&boxed, z, SublevelSpec::Absolute(z), 100).unwrap();
//! assert_eq!(optimal.points, [vec![100.0, 1.0], vec![100.0, 100.0]]);
//! ```

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod analysis;
pub mod binary;
mod error;
pub mod linalg;
pub mod model;
pub mod power;
pub mod projection;
pub mod simplex;
pub mod standard;
pub mod sublevel;
pub mod vertex;

pub use analysis::{
    check_containment, compare_projected_sets, is_in_convex_hull, rank_alternatives,
    rank_by_scores, ContainmentReport, RankedAlternatives, SecondaryObjective, SetRelation,
};
pub use binary::{enumerate_binary, solve_binary, BinarySolution, BinarySolutionPool};
pub use error::{Error, NetworkError, Result};
pub use model::{Constraint, LpModel, Objective, ObjectiveSense, Role, RowSense, VarId, Variable};
pub use power::{build_copper_plate, build_dcopf, build_network_flow, Network};
pub use projection::{project_point, project_set, ProjectionSpec};
pub use simplex::{solve, SimplexResult, SolveStatus};
pub use standard::{to_standard_form, StandardForm};
pub use sublevel::{apply_box_bounds, make_sublevel_model, BoxedModel, SublevelModel, SublevelSpec};
pub use vertex::{
    brute_force_vertices, enumerate_vertices, enumerate_vertices_with, is_unique_minimizer,
    EnumerateOptions, UniquenessCertificate, VertexSet,
};

/// Absolute per-coordinate tolerance under which two points are the same point.
pub const DEDUP_TOL: f64 = 1e-6;
/// Constraint satisfaction tolerance.
pub const FEAS_TOL: f64 = 1e-7;
/// Smallest magnitude accepted as a pivot element.
pub const PIVOT_TOL: f64 = 1e-9;
/// Default half-width used to box free variables before enumeration.
pub const DEFAULT_BOX_BOUND: f64 = 1e4;
/// Default cap on the number of distinct vertices an enumeration may report.
pub const DEFAULT_VERTEX_LIMIT: usize = 10_000;
