//! Dilogarithm-argument monomials of the two tetrahedron-equation paths:
//! walking a path and pushing every mutation's dilogarithm argument back
//! to the initial torus yields the `Z`-monomials whose ordered product of
//! dilogarithms forms each side of the identity.

use crate::cluster::{ExchangeMatrix, Step};
use crate::maps::{MapsError, MonomialMap, Sign, SignTuple, SeedPath};
use crate::paperseq::PrintedMonomial;
use crate::torus::TorusMonomial;

/// For a 20-step path (four blocks of four mutations plus a transposition),
/// returns the sixteen monomials `Z_r`: the argument of the `r`-th
/// dilogarithm pushed to the initial torus, using the block-homogeneous
/// sign tuple. `Z_r` carries the sign `eps_{(r-1) mod 4 + 1}` as an
/// exponent flip of the mutated generator.
pub fn z_list(
    initial: &ExchangeMatrix,
    steps: &[Step],
    sign: SignTuple,
) -> Result<Vec<TorusMonomial>, MapsError> {
    let path = SeedPath::new(initial.clone(), steps)?;
    let mut composite = MonomialMap::identity(initial);
    let mut out = Vec::new();
    let mut mut_count = 0usize;
    for (t, &step) in steps.iter().enumerate() {
        let eps = match step {
            Step::Mutate(k) => {
                let eps = sign.0[mut_count % 4];
                mut_count += 1;
                let n = path.matrices[t].rank();
                let gen = TorusMonomial::generator(n, k)
                    .pow(eps.value(), &crate::torus::SkewForm::new(path.matrices[t].clone()));
                out.push(composite.apply_monomial(&gen));
                eps
            }
            Step::Transpose(..) => Sign::Plus,
        };
        let m = path.step_map(t, eps)?;
        composite = composite.compose(&m)?;
    }
    Ok(out)
}

/// Normalizes a printed monomial table over a given exchange matrix.
pub fn printed_to_monomials(
    b: &ExchangeMatrix,
    table: &[PrintedMonomial],
) -> Vec<TorusMonomial> {
    let form = crate::torus::SkewForm::new(b.clone());
    table
        .iter()
        .map(|(p, fs)| crate::torus::ordered_product(&form, *p, fs))
        .collect()
}

/// The printed (zdL) table: arguments of the left-hand dilogarithm product
/// for the sign choice `(-,-,+,+)`, 0-based indices.
pub fn zdl_table() -> Vec<PrintedMonomial> {
    // the second entry carries the q-prefactor that makes it normal-form
    // coefficient 1, as in the corresponding right-hand entry
    convert(vec![
        (0, vec![(15, -1)]),
        (1, vec![(11, -1), (15, -1)]),
        (0, vec![(10, 1)]),
        (1, vec![(10, 1), (11, 1)]),
        (-1, vec![(9, -1), (10, -1)]),
        (0, vec![(5, -1), (9, -1), (10, -1)]),
        (0, vec![(4, 1)]),
        (1, vec![(4, 1), (5, 1)]),
        (1, vec![(14, -1), (15, -1)]),
        (2, vec![(11, -1), (14, -1), (15, -1)]),
        (0, vec![(8, 1), (9, 1), (10, 1)]),
        (1, vec![(8, 1), (9, 1), (10, 1), (11, 1)]),
        (0, vec![(14, -1)]),
        (1, vec![(5, -1), (9, -1), (11, 1), (14, -1)]),
        (0, vec![(5, -1), (8, 1), (11, 1)]),
        (1, vec![(8, 1), (9, 1)]),
    ])
}

/// The printed (zdR) table: right-hand arguments for `(-,-,+,+)`.
pub fn zdr_table() -> Vec<PrintedMonomial> {
    convert(vec![
        (0, vec![(14, -1)]),
        (1, vec![(9, -1), (14, -1)]),
        (0, vec![(8, 1)]),
        (1, vec![(8, 1), (9, 1)]),
        (0, vec![(9, -1), (10, -1), (14, -1)]),
        (1, vec![(5, -1), (9, -1), (10, -1), (14, -1)]),
        (0, vec![(4, 1), (8, 1), (9, 1)]),
        (1, vec![(4, 1), (5, 1), (8, 1), (9, 1)]),
        (0, vec![(15, -1)]),
        (1, vec![(11, -1), (15, -1)]),
        (0, vec![(10, 1)]),
        (1, vec![(10, 1), (11, 1)]),
        (-1, vec![(9, -1), (10, -1)]),
        (0, vec![(5, -1), (9, -1), (10, -1)]),
        (0, vec![(4, 1)]),
        (1, vec![(4, 1), (5, 1)]),
    ])
}

fn convert(rows: Vec<(i64, Vec<(usize, i64)>)>) -> Vec<PrintedMonomial> {
    rows.into_iter()
        .map(|(p, fs)| (p, fs.into_iter().map(|(i, e)| (i - 1, e)).collect()))
        .collect()
}
