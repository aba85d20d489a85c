//! The nine-vertex cluster transformation: its monomial part for every
//! sign choice, the dilogarithm-conjugated images, and the graded-series
//! oracle verifying them against the closed polynomial form.

use crate::cluster::{build_square_quiver, ExchangeMatrix, Step};
use crate::maps::{
    conjugate_by_psi, MapsError, MonomialMap, SeedPath, Sign, SignTuple,
};
use crate::paperseq::{rank9_steps, PrintedMonomial};
use crate::series::{GradedSeries, Grading};
use crate::torus::{ordered_product, SkewForm, TorusElement, TorusMonomial};

/// The initial nine-vertex exchange matrix (word 212).
pub fn rank9_matrix() -> ExchangeMatrix {
    build_square_quiver(&[2, 1, 2]).expect("212 is reduced").matrix
}

/// The mutated partner (word 121): endpoint of the five-step path.
pub fn rank9_path() -> SeedPath {
    SeedPath::new(rank9_matrix(), &rank9_steps()).expect("valid path")
}

/// The monomial part `tau_{e1 e2 e3 e4}` of the cluster transformation:
/// the composite over the five-step path.
pub fn tau_composite(sign: SignTuple) -> Result<MonomialMap, MapsError> {
    rank9_path().composite(&sign.0)
}

/// The four dilogarithm arguments of the right-monomial form of the
/// cluster transformation, as printed monomials over the initial torus.
/// The dilogarithm of argument `t` carries the exponent `eps_t`.
pub fn dilog_arguments(sign: SignTuple) -> [PrintedMonomial; 4] {
    use Sign::{Minus as M, Plus as P};
    let [e1, e2, e3, e4] = sign.0;
    let u1: PrintedMonomial = match e1 {
        P => (0, vec![(7, 1)]),
        M => (0, vec![(7, -1)]),
    };
    let u2: PrintedMonomial = match (e1, e2) {
        (P, P) => (0, vec![(4, 1)]),
        (P, M) => (0, vec![(4, -1)]),
        (M, P) => (1, vec![(4, 1), (7, 1)]),
        (M, M) => (1, vec![(4, -1), (7, -1)]),
    };
    let u3: PrintedMonomial = match e3 {
        P => match e1 {
            P => (-1, vec![(3, 1), (7, 1)]),
            M => (0, vec![(3, 1)]),
        },
        M => match e1 {
            P => (-1, vec![(3, -1), (7, -1)]),
            M => (0, vec![(3, -1)]),
        },
    };
    let u4: PrintedMonomial = match (e1, e2, e3, e4) {
        (P, P, P, P) => (0, vec![(3, 1)]),
        (P, P, P, M) => (0, vec![(3, -1)]),
        (P, P, M, P) => (0, vec![(7, -1)]),
        (P, P, M, M) => (0, vec![(7, 1)]),
        (P, M, P, P) => (1, vec![(3, 1), (4, 1)]),
        (P, M, P, M) => (1, vec![(3, -1), (4, -1)]),
        (P, M, M, P) => (-1, vec![(4, 1), (7, -1)]),
        (P, M, M, M) => (-1, vec![(4, -1), (7, 1)]),
        (M, P, P, P) => (1, vec![(3, 1), (7, -1)]),
        (M, P, P, M) => (1, vec![(3, -1), (7, 1)]),
        (M, P, M, P) => (0, vec![(7, -1)]),
        (M, P, M, M) => (0, vec![(7, 1)]),
        (M, M, P, P) => (1, vec![(3, 1), (4, 1)]),
        (M, M, P, M) => (1, vec![(3, -1), (4, -1)]),
        (M, M, M, P) => (0, vec![(4, 1)]),
        (M, M, M, M) => (0, vec![(4, -1)]),
    };
    [u1, u2, u3, u4]
}

/// The center-monomial form: two dilogarithm arguments over the initial
/// torus and two over the mutated torus, the latter to be pushed through
/// the monomial part.
pub fn dilog_arguments_center(sign: SignTuple) -> ([PrintedMonomial; 2], [PrintedMonomial; 2]) {
    use Sign::{Minus as M, Plus as P};
    let [e1, e2, e3, e4] = sign.0;
    let left: [PrintedMonomial; 2] = match (e1, e2) {
        (P, P) => [(0, vec![(7, 1)]), (0, vec![(4, 1)])],
        (P, M) => [(0, vec![(7, 1)]), (0, vec![(4, -1)])],
        (M, P) => [(0, vec![(7, -1)]), (1, vec![(4, 1), (7, 1)])],
        (M, M) => [(0, vec![(7, -1)]), (1, vec![(4, -1), (7, -1)])],
    };
    let right: [PrintedMonomial; 2] = match (e3, e4) {
        (P, P) => [(1, vec![(4, -1), (7, -1)]), (0, vec![(7, -1)])],
        (P, M) => [(0, vec![(4, -1)]), (0, vec![(7, 1)])],
        (M, P) => [(1, vec![(4, 1), (7, 1)]), (0, vec![(7, -1)])],
        (M, M) => [(0, vec![(4, 1)]), (0, vec![(7, 1)])],
    };
    (left, right)
}

/// One of the three trinomials of the closed form.
pub fn lambda_element(b: &ExchangeMatrix, which: usize) -> TorusElement {
    // Lambda_4 = 1 + q^{-1} Y_4 + Y_4 Y_5, cyclic in (4,5,8)
    let (a, c) = match which {
        4 => (3usize, 4usize),
        5 => (4, 7),
        8 => (7, 3),
        _ => panic!("lambda index"),
    };
    let form = SkewForm::new(b.clone());
    let mut t = TorusElement::one(9);
    let ya = ordered_product(&form, -1, &[(a, 1)]);
    t.add_term(ya.exponent, ya.coeff);
    let yac = ordered_product(&form, 0, &[(a, 1), (c, 1)]);
    t.add_term(yac.exponent, yac.coeff);
    t
}

/// The closed-form image of a mutated generator: a pair
/// `(numerator, optional right-divisor Lambda index)` such that the image
/// equals `numerator . Lambda^{-1}`.
pub fn closed_form_image(b: &ExchangeMatrix, i: usize) -> (TorusElement, Option<usize>) {
    let form = SkewForm::new(b.clone());
    let mono = |p: i64, fs: &[(usize, i64)]| {
        TorusElement::from_monomial(&ordered_product(&form, p, fs))
    };
    let lam = |w: usize| lambda_element(b, w);
    let mul = |x: &TorusElement, y: &TorusElement| x.mul(y, &form).unwrap();
    match i + 1 {
        1 => (mul(&lam(4), &mono(0, &[(0, 1)])), None),
        2 => (mono(0, &[(1, 1), (3, 1), (4, 1)]), Some(4)),
        3 => (mono(0, &[(2, 1), (7, 1), (3, 1)]), Some(8)),
        4 => (mul(&lam(4), &mono(0, &[(4, -1)])), Some(8)),
        5 => (mul(&lam(5), &mono(0, &[(7, -1)])), Some(4)),
        6 => (mul(&lam(5), &mono(0, &[(5, 1)])), None),
        7 => (mul(&lam(8), &mono(0, &[(6, 1)])), None),
        8 => (mul(&lam(8), &mono(0, &[(3, -1)])), Some(5)),
        9 => (mono(0, &[(8, 1), (4, 1), (7, 1)]), Some(5)),
        _ => panic!("generator index"),
    }
}

/// Applies the four-fold dilogarithm conjugation of the right-monomial
/// form to a torus element, as a graded series.
pub fn conjugated_image(
    b: &ExchangeMatrix,
    sign: SignTuple,
    x: &TorusElement,
    grading: Grading,
    cutoff: i64,
) -> GradedSeries {
    let form = SkewForm::new(b.clone());
    let args = dilog_arguments(sign);
    let monos: Vec<TorusMonomial> = args
        .iter()
        .map(|(p, fs)| ordered_product(&form, *p, fs))
        .collect();
    let mut s = GradedSeries::from_element(x, grading, cutoff);
    // innermost conjugation first: Ad(Psi(U1)) ... Ad(Psi(U4)) tau
    for t in (0..4).rev() {
        s = conjugate_by_psi(&form, &monos[t], sign.0[t], &s);
    }
    s
}

/// Outcome of the exact series oracle for one generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOracle {
    /// Expansion ran and the coefficients matched (or not).
    Checked(bool),
    /// The four dilogarithm directions admit no common positive grading;
    /// the identity is left to the operator-window oracle.
    NotGradable,
}

/// True iff the four dilogarithm directions of this sign tuple admit a
/// positive grading, i.e. the exact series oracle applies.
pub fn sign_is_gradable(sign: SignTuple) -> bool {
    let b = rank9_matrix();
    let form = SkewForm::new(b.clone());
    let dirs: Vec<Vec<i64>> = dilog_arguments(sign)
        .iter()
        .map(|(p, fs)| ordered_product(&form, *p, fs).exponent)
        .collect();
    Grading::find(9, &dirs).is_some()
}

/// Checks one generator of one sign tuple against the closed form; exact
/// at every grading level up to the cutoff.
pub fn rhat_matches_closed_form(
    sign: SignTuple,
    generator: usize,
) -> Result<SeriesOracle, MapsError> {
    let b = rank9_matrix();
    let form = SkewForm::new(b.clone());
    let tau = tau_composite(sign)?;
    let x = TorusElement::from_monomial(&tau.images[generator]);
    // grading positive on the four dilogarithm directions
    let args = dilog_arguments(sign);
    let dirs: Vec<Vec<i64>> = args
        .iter()
        .map(|(p, fs)| ordered_product(&form, *p, fs).exponent)
        .collect();
    let grading = match Grading::find(9, &dirs) {
        Some(g) => g,
        None => return Ok(SeriesOracle::NotGradable),
    };
    let (num, den) = closed_form_image(&b, generator);
    let mut level = num
        .terms()
        .map(|(e, _)| grading.degree(e))
        .max()
        .unwrap_or(0);
    let den_elem = den.map(|w| lambda_element(&b, w));
    let mut shift = 0i64;
    if let Some(d) = &den_elem {
        let m = d.terms().map(|(e, _)| grading.degree(e)).max().unwrap_or(0);
        let lo = d.terms().map(|(e, _)| grading.degree(e)).min().unwrap_or(0);
        shift = m.max(-lo);
        level = level.max(
            num.terms().map(|(e, _)| grading.degree(e)).max().unwrap_or(0),
        );
    }
    let margin = 6;
    let cutoff = level + shift + margin;
    let conj = conjugated_image(&b, sign, &x, grading.clone(), cutoff);
    let lhs = match &den_elem {
        Some(d) => conj.mul(d, &form),
        None => conj,
    };
    let rhs = GradedSeries::from_element(&num, grading, cutoff);
    Ok(SeriesOracle::Checked(lhs.agrees_below(&rhs, level + margin)))
}

/// The center-monomial form pushed into a four-factor right form:
/// arguments `(V1, V2, tau(V3'), tau(V4'))`.
pub fn center_form_arguments(sign: SignTuple) -> Result<[TorusMonomial; 4], MapsError> {
    let b = rank9_matrix();
    let form = SkewForm::new(b.clone());
    let tau = tau_composite(sign)?;
    let bp = tau.source.clone();
    let formp = SkewForm::new(bp);
    let (left, right) = dilog_arguments_center(sign);
    let v1 = ordered_product(&form, left[0].0, &left[0].1);
    let v2 = ordered_product(&form, left[1].0, &left[1].1);
    let v3p = ordered_product(&formp, right[0].0, &right[0].1);
    let v4p = ordered_product(&formp, right[1].0, &right[1].1);
    Ok([v1, v2, tau.apply_monomial(&v3p), tau.apply_monomial(&v4p)])
}

/// Verifies that the center-monomial form equals the right-monomial form
/// argumentwise.
pub fn center_form_matches_right_form(sign: SignTuple) -> Result<bool, MapsError> {
    let b = rank9_matrix();
    let form = SkewForm::new(b);
    let args = dilog_arguments(sign);
    let right: Vec<TorusMonomial> = args
        .iter()
        .map(|(p, fs)| ordered_product(&form, *p, fs))
        .collect();
    let center = center_form_arguments(sign)?;
    Ok(center.to_vec() == right)
}

/// The product of the three central generators along a wire, paper labels
/// `(2,4,7)`, `(9,5,1)` or `(3,8,6)`, 1-based.
pub fn center_product(b: &ExchangeMatrix, labels: [usize; 3]) -> TorusMonomial {
    let form = SkewForm::new(b.clone());
    ordered_product(
        &form,
        0,
        &[(labels[0] - 1, 1), (labels[1] - 1, 1), (labels[2] - 1, 1)],
    )
}

/// Remark-level center preservation: the monomial part maps each primed
/// central product to the corresponding unprimed one, and the dilogarithm
/// conjugation fixes it.
pub fn center_is_preserved(sign: SignTuple) -> Result<bool, MapsError> {
    let b = rank9_matrix();
    let tau = tau_composite(sign)?;
    let bp = tau.source.clone();
    let form = SkewForm::new(b.clone());
    for labels in [[9, 5, 1], [3, 8, 6], [2, 4, 7]] {
        let primed = center_product(&bp, labels);
        let image = tau.apply_monomial(&primed);
        let target = center_product(&b, labels);
        if image != target {
            return Ok(false);
        }
        // commutes with every dilogarithm argument
        let args = dilog_arguments(sign);
        for (p, fs) in args {
            let m = ordered_product(&form, p, &fs);
            if crate::maps::comm_exponent(&form, &image.exponent, &m.exponent) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Step data used by the sign-consistency check of the c-vector rule.
pub fn exponent_action_matches_cvectors(
    initial: &ExchangeMatrix,
    steps: &[Step],
) -> Result<bool, MapsError> {
    use crate::cluster::TropicalSeed;
    let mut seed = TropicalSeed::initial(initial.clone());
    let mut b = initial.clone();
    for &s in steps {
        match s {
            Step::Mutate(k) => {
                let eps = if seed.tropical_sign(k)? > 0 { Sign::Plus } else { Sign::Minus };
                let tau = MonomialMap::tau_step(&b, k, eps)?;
                let next_seed = seed.mutate(k)?;
                // c'_i = sum_j tau-exponent(i)_j c_j
                let n = b.rank();
                for i in 0..n {
                    let mut want = vec![0i64; n];
                    for j in 0..n {
                        let coef = tau.images[i].exponent[j];
                        if coef != 0 {
                            for (w, c) in want.iter_mut().zip(&seed.cvecs[j]) {
                                *w += coef * c;
                            }
                        }
                    }
                    if want != next_seed.cvecs[i] {
                        return Ok(false);
                    }
                }
                seed = next_seed;
                b = b.mutate(k)?;
            }
            Step::Transpose(r, t) => {
                seed = seed.transpose_indices(r, t)?;
                b = b.transpose_indices(r, t)?;
            }
        }
    }
    Ok(true)
}

/// Printed golden scalar product: `prefactor . prod Y_i^{e_i}` over a
/// torus, normalized.
pub fn printed(b: &ExchangeMatrix, qpow: i64, factors: &[(usize, i64)]) -> TorusMonomial {
    ordered_product(&SkewForm::new(b.clone()), qpow, factors)
}

impl MonomialMap {
    /// Convenience: image of a 0-based generator.
    pub fn image_of(&self, i: usize) -> &TorusMonomial {
        &self.images[i]
    }
}

