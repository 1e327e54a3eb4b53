//! Third-type hex-derived networks and their degree-based topological
//! indices.
//!
//! The crate builds HDN3(r), THDN3(r) and RHDN3(r) from first principles
//! (triangular-lattice regions with every unit face replaced by a planar
//! octahedron), computes edge partitions and the usual degree-based indices
//! by direct summation, and checks the closed-form polynomials and
//! partition tables published for these families, reporting exact matches,
//! rounding-level matches, label swaps and outright errata.

pub mod closed_forms;
pub mod construct;
pub mod error;
pub mod graph;
pub mod indices;
pub mod partition;
pub mod poly;
pub mod tables;

pub use closed_forms::{
    evaluate_closed_form, rederive_polynomial, verify, ClosedForm, VerificationRow, Verdict,
};
pub use construct::{
    build_family, build_hx, build_rhombus_mesh, build_triangular_mesh, enumerate_faces,
    octahedral_substitution, Family, FamilyParam,
};
pub use error::{Error, Result};
pub use graph::{FaceKey, Graph, GraphSummary, LatticeCoord, Orientation, VertexId};
pub use indices::{
    class_sum_index, compute_all, edge_sum_index, extended_indices, IndexSpec, IndexValue, Value,
};
pub use partition::{
    compare_partitions, degree_partition, expected_partition, sum_partition, Discrepancy,
    ExpectedTable, PairKey, Partition, PartitionMode,
};
pub use poly::{Poly, Rat};
