//! The mutation sequences and golden monomial tables of the two
//! tetrahedron-equation paths on the 16-vertex seed, in 0-based labels.

use crate::cluster::Step;
use crate::maps::{Sign, SignTuple};

/// The five-step path connecting the two 9-vertex seeds:
/// `mu_8, mu_5, mu_4, mu_8, sigma_45` (paper labels), 0-based.
pub fn rank9_steps() -> Vec<Step> {
    vec![
        Step::Mutate(7),
        Step::Mutate(4),
        Step::Mutate(3),
        Step::Mutate(7),
        Step::Transpose(3, 4),
    ]
}

/// Left path on the 16-vertex seed (four blocks of four mutations and a
/// transposition each), 0-based labels.
pub fn left_path_steps() -> Vec<Step> {
    let blocks: [([usize; 4], (usize, usize)); 4] = [
        ([15, 11, 10, 15], (10, 11)),
        ([9, 5, 4, 9], (4, 5)),
        ([14, 11, 8, 14], (8, 11)),
        ([10, 15, 4, 10], (4, 15)),
    ];
    expand_blocks(&blocks)
}

/// Right path on the 16-vertex seed, 0-based labels.
pub fn right_path_steps() -> Vec<Step> {
    let blocks: [([usize; 4], (usize, usize)); 4] = [
        ([14, 9, 8, 14], (8, 9)),
        ([10, 5, 4, 10], (4, 5)),
        ([15, 11, 8, 15], (8, 11)),
        ([9, 5, 14, 9], (5, 14)),
    ];
    expand_blocks(&blocks)
}

fn expand_blocks(blocks: &[([usize; 4], (usize, usize))]) -> Vec<Step> {
    let mut out = Vec::new();
    for (ms, (r, s)) in blocks {
        for &k in ms {
            out.push(Step::Mutate(k - 1));
        }
        out.push(Step::Transpose(r - 1, s - 1));
    }
    out
}

/// Step indices (into the 20-step paths) whose mutation sees a negative
/// tropical sign when both paths start from the positive initial seed.
pub const LEFT_NEGATIVE_STEPS: [usize; 2] = [15, 16];
pub const RIGHT_NEGATIVE_STEPS: [usize; 2] = [13, 16];

/// Per-block sign tuples of the inhomogeneous tetrahedron equation.
pub fn inhomogeneous_left_signs() -> [SignTuple; 4] {
    [
        SignTuple::parse("++++").unwrap(),
        SignTuple::parse("++++").unwrap(),
        SignTuple::parse("++++").unwrap(),
        SignTuple::parse("--++").unwrap(),
    ]
}

pub fn inhomogeneous_right_signs() -> [SignTuple; 4] {
    [
        SignTuple::parse("++++").unwrap(),
        SignTuple::parse("++++").unwrap(),
        SignTuple::parse("+++-").unwrap(),
        SignTuple::parse("+-++").unwrap(),
    ]
}

/// Flattens per-block sign tuples into the per-mutation sign list a
/// 20-step path consumes.
pub fn flatten_signs(blocks: &[SignTuple; 4]) -> Vec<Sign> {
    blocks.iter().flat_map(|t| t.0.into_iter()).collect()
}

/// A monomial printed as `q^p Y_{i_1}^{e_1} ... Y_{i_k}^{e_k}`:
/// `(p, [(index, exponent), ...])` with 0-based indices.
pub type PrintedMonomial = (i64, Vec<(usize, i64)>);

/// The common image of the sixteen final-seed generators under both sides
/// of the inhomogeneous tetrahedron equation, row `i` for generator `i`.
pub fn y21_table() -> Vec<PrintedMonomial> {
    let rows: Vec<(i64, Vec<(usize, i64)>)> = vec![
        (0, vec![(1, 1)]),
        (0, vec![(2, 1), (4, 1), (5, 1), (8, 1), (9, 1)]),
        (-4, vec![(3, 1), (4, 1), (9, 1), (10, 1), (15, 1)]),
        (1, vec![(10, 1), (11, 1)]),
        (-2, vec![(9, -1), (10, -1), (15, -1)]),
        (0, vec![(6, 1)]),
        (-2, vec![(7, 1), (8, 1), (14, 1)]),
        (1, vec![(5, -1), (9, -1), (10, -1), (11, -1)]),
        (0, vec![(4, -1)]),
        (1, vec![(8, -1), (9, -1)]),
        (0, vec![(14, -1)]),
        (0, vec![(12, 1)]),
        (0, vec![(13, 1)]),
        (-1, vec![(9, 1), (10, 1)]),
        (0, vec![(10, -1)]),
        (4, vec![(5, 1), (9, 1), (10, 1), (11, 1), (14, 1), (15, 1), (16, 1)]),
    ];
    rows.into_iter()
        .map(|(p, fs)| (p, fs.into_iter().map(|(i, e)| (i - 1, e)).collect()))
        .collect()
}
