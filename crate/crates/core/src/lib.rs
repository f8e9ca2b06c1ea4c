//! Workbench for power-series coefficient representations of classical
//! statistical mechanics: Mayer connected-graph sums, biconnected block
//! sums, rooted-tree sums, Ree-Hoover expansions and ingested frame
//! sums, together with complexity criteria, exact symbolic identity
//! checks, series transforms with operation counting, and Monte Carlo
//! estimation of the underlying integrals for concrete pair potentials.

pub mod blc;
pub mod error;
pub mod graph;
pub mod partitions;
pub mod poly;
pub mod transforms;
pub mod trees;

pub use blc::{
    load_frame_sum, mayer_bn_blc, ree_hoover_blc, tree_sum_an_blc, tree_sum_bn_blc,
    virial_block_blc, BasicLinearCombination, BlcTerm, FrameSumRecord, Provenance,
};
pub use error::{Error, Result};
pub use graph::{is_biconnected, is_connected, CanonicalKey, Edge, MarkedGraph};
pub use partitions::{partition_count, partition_vectors, PartitionVector};
pub use poly::{
    expand_blc, expand_term, partition_identity_check, rh_identity, tree_identity,
    verify_identity, FormalPolynomial, IdentityCheck,
};
pub use transforms::{
    a_from_b, b_from_a, e_coeffs, q_eval, tau_coeffs, virial_from_a, virial_from_b,
    virial_from_e_tau, CoefficientVector, Family, Measured, OpCounter, Scalar, YSpec,
};
pub use trees::{
    admissible_edges, class_size, count_tr, count_tr0, enumerate_tr, enumerate_trees, in_t_n0,
    AdmissibleEdgeSet, AdmissibleScheme, MinimalParentScheme, RootedLabeledTree, TreeClass,
};
