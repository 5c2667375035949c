//! Isometric sequences of finite metric spaces.
//!
//! A finite metric space is reduced to its *distance configuration*: an edge
//! coloring of the complete graph where two pairs share a color exactly when
//! they share a distance. Everything combinatorial (isometry classes of
//! k-subsets, profile vectors, structure recognition, exhaustive enumeration)
//! works on colors only. Distance values enter when asking whether, and in
//! how few dimensions, a realization embeds in Euclidean space.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and parallel sweeps live in the `isoseq` companion crate.

#![no_std]
#![deny(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod canon;
pub mod classify;
pub mod config;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod generators;
pub mod graph;
pub mod isometry;
pub mod linalg;
pub mod sweep;

pub use classify::{
    classify_a3, classify_a3_eq_2, match_triangle_shape, recognize_graph, recognize_shape,
    thm_a2_window, verify_thm_3, verify_thm_a1, verify_thm_a2, verify_thm_a4, ExampleCatalog,
    ExampleInstance, Shape, ShapeVerdict, ShapeWitness, Theorem, TheoremReport, TriangleShape,
    Witness,
};
pub use config::{
    from_distance_matrix, from_points, make_config, realize, ColorId, DistanceConfiguration,
    MetricRealization, PointSet, DEFAULT_GROUPING_TOL,
};
pub use embed::{
    coordinates, coordinates_from_squared, embeddability, gram, gram_from_squared, ns_bound,
    search_min_dim, DimCandidate, EmbedReport, GramAnalysis, MinDimSearch, DEFAULT_EIGEN_TOL,
};
pub use enumerate::{branch_roots, enumerate_configs, expand_root, for_each_config, EnumSpec};
pub use error::{Error, Result};
pub use family::{construct_family, FamilySpec};
pub use generators::{
    check_embedding, f_table, generate_embedding, EmbeddingCheck, EmbeddingKind, FTableEntry,
};
pub use graph::ColorGraph;
pub use isometry::{
    canonical_form, canonical_key, class_representatives, closed_by_cliques, closed_by_triangles,
    count_classes, find_isomorphism, is_closed, isometric_sequence, m_set, profile, triangle_types,
    ClassInfo, ColorSet, IsometricSequence, Isomorphism, ProfileVector, SubsetKey, MAX_SUBSET_SIZE,
};
pub use linalg::{symmetric_eigen, SymmetricEigen};
pub use sweep::{
    sweep, sweep_config, Check, CheckOutcome, CheckTally, Counterexample, SweepContext, SweepReport,
};
