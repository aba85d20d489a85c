//! Quantum-cluster-algebra machinery for tetrahedron-equation solutions:
//! exact scalars, quantum tori, cluster mutation, dilogarithm series,
//! q-Weyl realizations and windowed numeric operators.

pub mod scalar;
pub mod torus;
pub mod cluster;
pub mod series;
pub mod maps;
pub mod paperseq;
pub mod zlists;
pub mod fixtures;
pub mod rhat;
pub mod te16;
pub mod dilog;
pub mod weyl;
pub mod realization;
pub mod rmatrix;
pub mod opchecks;
pub mod ratstate;
