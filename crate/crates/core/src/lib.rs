//! Combinatorics of B-orbits of nilpotent order 2.
//!
//! The B-orbits in the variety of strictly upper-triangular `n x n` matrices
//! squaring to zero are indexed by involutions of `{1..n}`. Each orbit is
//! determined by its rank matrix, and entrywise comparison of rank matrices
//! gives the closure order. This crate computes those rank matrices, orbit
//! dimensions, the irreducible components of pairwise intersections of orbit
//! closures (and of two-column orbital varieties), together with
//! Robinson-Schensted cells and cell graphs.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod cli;
pub mod dot;
pub mod error;
pub mod intersections;
pub mod involutions;
pub mod rankmatrix;
pub mod rscells;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use intersections::{
    closure_set, downset, intersect, intersect_tableaux, maximal_elements, meet, pairwise_table,
    Component, IntersectionReport, PairwiseTable, TableCell,
};
pub use involutions::{
    enumerate_involutions, involution_count, orbit_dim, r_stat, sigma_o, sigma_of_tableau,
    tableau_of_sigma, Involution,
};
pub use rankmatrix::{
    leq, n_matrix, project, project_involution, rank_matrix, reconstruct, restrict,
    sigma_of_rank_matrix, st1_tableau, validate, validate_rows, Condition, UpperMatrix, ValidityReport, Violation,
};
pub use rscells::{
    cell, cell_graph, edge_vs_codim, root_positions, rs, rs_inverse, CellGraph, EdgeCodimReport,
    Permutation, RootPositionSet,
};
pub use tableaux::{
    enumerate_standard, enumerate_two_column, hook_count, partitions, Shape, StandardTableau,
    TwoColumnTableau,
};
