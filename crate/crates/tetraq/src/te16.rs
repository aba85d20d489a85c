//! The sixteen-vertex tetrahedron-equation checks: block composites of
//! the two mutation paths, the homogeneous-sign enumeration, and the
//! inhomogeneous identity with its golden monomial image.

use crate::cluster::ExchangeMatrix;
use crate::fixtures;
use crate::maps::{MapsError, MonomialMap, SeedPath, Sign, SignTuple};
use crate::paperseq::{
    flatten_signs, inhomogeneous_left_signs, inhomogeneous_right_signs, left_path_steps,
    right_path_steps,
};
use crate::torus::{ordered_product, SkewForm, TorusMonomial};

/// Which side of the tetrahedron-equation diagram a block composite
/// belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathSide {
    Left,
    Right,
}

/// Block label: the three tensor slots the block's transformation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockLabel {
    B456,
    B236,
    B135,
    B124,
}

impl BlockLabel {
    /// Block position (0..4) within the path on the given side.
    pub fn position(self, side: PathSide) -> usize {
        match (side, self) {
            (PathSide::Left, BlockLabel::B456) => 0,
            (PathSide::Left, BlockLabel::B236) => 1,
            (PathSide::Left, BlockLabel::B135) => 2,
            (PathSide::Left, BlockLabel::B124) => 3,
            (PathSide::Right, BlockLabel::B124) => 0,
            (PathSide::Right, BlockLabel::B135) => 1,
            (PathSide::Right, BlockLabel::B236) => 2,
            (PathSide::Right, BlockLabel::B456) => 3,
        }
    }
}

/// The frozen initial sixteen-vertex matrix.
pub fn b16() -> ExchangeMatrix {
    fixtures::sixteen_vertex_seed()
        .expect("frozen seed fixture")
        .exchange_matrix()
}

pub fn left_path() -> SeedPath {
    SeedPath::new(b16(), &left_path_steps()).expect("left path")
}

pub fn right_path() -> SeedPath {
    SeedPath::new(b16(), &right_path_steps()).expect("right path")
}

/// The composite monomial map of one five-step block of a path.
pub fn tau_ijk(label: BlockLabel, side: PathSide, sign: SignTuple) -> Result<MonomialMap, MapsError> {
    let path = match side {
        PathSide::Left => left_path(),
        PathSide::Right => right_path(),
    };
    let pos = label.position(side);
    let start = 5 * pos;
    let sub = SeedPath::new(path.matrices[start].clone(), &path.steps[start..start + 5])?;
    sub.composite(&sign.0)
}

/// Composite of a whole path with a homogeneous sign tuple per block.
pub fn path_composite(side: PathSide, signs: &[SignTuple; 4]) -> Result<MonomialMap, MapsError> {
    let path = match side {
        PathSide::Left => left_path(),
        PathSide::Right => right_path(),
    };
    let flat: Vec<Sign> = flatten_signs(signs);
    path.composite(&flat)
}

/// The homogeneous monomial tetrahedron equation: both sides composed
/// with the same sign tuple in every block agree on all 16 generators.
pub fn monomial_te_check(sign: SignTuple) -> Result<bool, MapsError> {
    let signs = [sign; 4];
    let l = path_composite(PathSide::Left, &signs)?;
    let r = path_composite(PathSide::Right, &signs)?;
    Ok(l.source == r.source && l.images == r.images)
}

/// The inhomogeneous tetrahedron equation with tropical-sign blocks:
/// both sides agree and match the golden image table.
pub fn inhomogeneous_te_check() -> Result<bool, MapsError> {
    let l = path_composite(PathSide::Left, &inhomogeneous_left_signs())?;
    let r = path_composite(PathSide::Right, &inhomogeneous_right_signs())?;
    if l.source != r.source || l.images != r.images {
        return Ok(false);
    }
    let table = fixtures::y21().expect("y21 fixture").printed();
    let form = SkewForm::new(b16());
    for (i, (p, fs)) in table.iter().enumerate() {
        let want = ordered_product(&form, *p, fs);
        if l.images[i] != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The image of one golden generator under the inhomogeneous composite.
pub fn inhomogeneous_image(i: usize) -> Result<TorusMonomial, MapsError> {
    let l = path_composite(PathSide::Left, &inhomogeneous_left_signs())?;
    Ok(l.images[i].clone())
}

/// Subset consistency: the block composite acts on its nine participating
/// generators exactly as the nine-vertex monomial part acts on the
/// corresponding role generators, for every embedding of the role pattern
/// present at the block's seeds.
pub fn block_matches_rank9(
    label: BlockLabel,
    side: PathSide,
    sign: SignTuple,
) -> Result<bool, MapsError> {
    let big = tau_ijk(label, side, sign)?;
    let small = crate::rhat::tau_composite(sign)?;
    // locate the embedding via the block's mutation vertices: the first
    // mutated vertex plays role 8, the second role 5, the third role 4.
    let path = match side {
        PathSide::Left => left_path(),
        PathSide::Right => right_path(),
    };
    let pos = label.position(side);
    let ks: Vec<usize> = path.steps[5 * pos..5 * pos + 4]
        .iter()
        .map(|s| match s {
            crate::cluster::Step::Mutate(k) => *k,
            _ => unreachable!("block starts with four mutations"),
        })
        .collect();
    let (r8, r5, r4) = (ks[0], ks[1], ks[2]);
    let b_block = &path.matrices[5 * pos];
    let emb = find_role_embedding(b_block, r4, r5, r8)
        .expect("block seed embeds the nine-vertex pattern");
    // compare images of the nine primed role generators
    let n = 16;
    for role in 0..9 {
        let big_img = &big.images[emb[role]];
        let small_img = &small.images[role];
        // exponent of the big image restricted to embedded coordinates
        let mut want = vec![0i64; n];
        for r2 in 0..9 {
            want[emb[r2]] = small_img.exponent[r2];
        }
        if big_img.exponent != want || big_img.coeff != small_img.coeff {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finds the unique embedding of the 212 role pattern with the given
/// triangle vertices in roles 4, 5, 8 (0-based roles 3, 4, 7).
pub fn find_role_embedding(
    b: &ExchangeMatrix,
    v4: usize,
    v5: usize,
    v8: usize,
) -> Option<[usize; 9]> {
    let pat = crate::cluster::ExchangeMatrix::from_arrows(
        9,
        &[
            (0, 1),
            (1, 4),
            (4, 3),
            (3, 0),
            (3, 7),
            (7, 6),
            (6, 2),
            (2, 3),
            (4, 5),
            (5, 8),
            (8, 7),
            (7, 4),
        ],
    );
    let n = b.rank();
    if b.get(v5, v4) != 1 || b.get(v4, v8) != 1 || b.get(v8, v5) != 1 {
        return None;
    }
    let pick = |to_v: usize, not: usize, incoming: bool| -> Vec<usize> {
        (0..n)
            .filter(|&x| {
                x != not
                    && if incoming {
                        b.get(x, to_v) == 1
                    } else {
                        b.get(to_v, x) == 1
                    }
            })
            .collect()
    };
    for &r3 in &pick(v4, v5, true) {
        for &r1 in &pick(v4, v8, false) {
            for &r2 in &pick(v5, v8, true) {
                for &r6 in &pick(v5, v4, false) {
                    for &r7 in &pick(v8, v5, false) {
                        for &r9 in &pick(v8, v4, true) {
                            let emb = [r1, r2, r3, v4, v5, r6, r7, v8, r9];
                            let mut u = emb.to_vec();
                            u.sort_unstable();
                            u.dedup();
                            if u.len() != 9 {
                                continue;
                            }
                            if (0..9).all(|i| {
                                (0..9).all(|j| b.get(emb[i], emb[j]) == pat.get(i, j))
                            }) {
                                return Some(emb);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
