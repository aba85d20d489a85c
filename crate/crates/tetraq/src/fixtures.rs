//! Frozen data shipped with the crate: the validated 16-vertex seed, the
//! published monomial tables, and the dilogarithm golden lists, as JSON
//! files embedded at build time.

use crate::cluster::ExchangeMatrix;
use crate::paperseq::PrintedMonomial;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("fixture {0} is missing or malformed: {1}")]
    FixtureMissing(&'static str, String),
}

/// The validated 16-vertex initial seed: the reduced word whose square
/// quiver realizes it, the label map from canonical builder labels to the
/// published labels (here the identity), the exchange matrix in published
/// labels, and the spectral-parameter slot of each crossing (left to
/// right).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SixteenVertexSeed {
    pub word: Vec<usize>,
    pub label_map: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
    pub crossing_slots: Vec<usize>,
}

impl SixteenVertexSeed {
    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&self.matrix)
    }
}

pub fn sixteen_vertex_seed() -> Result<SixteenVertexSeed, FixtureError> {
    serde_json::from_str(include_str!("../fixtures/b16.json"))
        .map_err(|e| FixtureError::FixtureMissing("b16.json", e.to_string()))
}

/// Monomial golden tables keyed by name. Each row is
/// `(q_power, [[index, exponent], ...])` with 0-based indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonomialTable {
    pub rows: Vec<(i64, Vec<(usize, i64)>)>,
}

impl MonomialTable {
    pub fn printed(&self) -> Vec<PrintedMonomial> {
        self.rows.clone()
    }
}

fn table(name: &'static str, raw: &str) -> Result<MonomialTable, FixtureError> {
    serde_json::from_str(raw).map_err(|e| FixtureError::FixtureMissing(name, e.to_string()))
}

/// The common image of the final-seed generators under both sides of the
/// inhomogeneous tetrahedron equation.
pub fn y21() -> Result<MonomialTable, FixtureError> {
    table("y21.json", include_str!("../fixtures/y21.json"))
}

/// Left and right dilogarithm arguments for the sign choice `(-,-,+,+)`.
pub fn zdl() -> Result<MonomialTable, FixtureError> {
    table("zdl.json", include_str!("../fixtures/zdl.json"))
}

pub fn zdr() -> Result<MonomialTable, FixtureError> {
    table("zdr.json", include_str!("../fixtures/zdr.json"))
}

/// The exponent system of the graded expansion: rows give the powers
/// `p_1..p_8` as integer forms in the sixteen expansion orders.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PneMatrix {
    /// `rows[i][t]` is the coefficient of `n_{t+1}` in `p_{i+1}`.
    pub rows: Vec<Vec<i64>>,
}

pub fn pne() -> Result<PneMatrix, FixtureError> {
    serde_json::from_str(include_str!("../fixtures/pne.json"))
        .map_err(|e| FixtureError::FixtureMissing("pne.json", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::build_square_quiver;

    #[test]
    fn frozen_seed_matches_builder() {
        let fx = sixteen_vertex_seed().unwrap();
        let q = build_square_quiver(&fx.word).unwrap();
        assert_eq!(q.vertex_count(), 16);
        // identity label map: builder matrix is the published matrix
        assert_eq!(fx.label_map, (0..16).collect::<Vec<_>>());
        assert_eq!(q.matrix, fx.exchange_matrix());
        assert!(fx.exchange_matrix().is_skew_symmetric());
    }

    #[test]
    fn pne_golden_rows() {
        let m = pne().unwrap();
        // p_1 = n_7 + n_8
        let mut r1 = vec![0i64; 16];
        r1[6] = 1;
        r1[7] = 1;
        assert_eq!(m.rows[0], r1);
        // p_8 = -n_1 - n_2 - n_9 - n_10
        let mut r8 = vec![0i64; 16];
        r8[0] = -1;
        r8[1] = -1;
        r8[8] = -1;
        r8[9] = -1;
        assert_eq!(m.rows[7], r8);
    }
}
