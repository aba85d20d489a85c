//! Golden tests for the monomial parts: the published action tables, the
//! composite transformations, the homogeneous/inhomogeneous tetrahedron
//! equations, and the closed-form conjugation images.

use tetraq::cluster::{ExchangeMatrix, Step, TropicalSeed};
use tetraq::maps::{MonomialMap, Sign, SignTuple};
use tetraq::paperseq::{left_path_steps, right_path_steps, LEFT_NEGATIVE_STEPS, RIGHT_NEGATIVE_STEPS};
use tetraq::rhat::{
    center_form_matches_right_form, center_is_preserved, exponent_action_matches_cvectors,
    printed, rank9_matrix, rank9_path, rhat_matches_closed_form, tau_composite,
};
use tetraq::te16::{
    block_matches_rank9, inhomogeneous_te_check, monomial_te_check, tau_ijk, BlockLabel,
    PathSide,
};

fn arrows(pairs: &[(usize, usize)]) -> ExchangeMatrix {
    let shifted: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    ExchangeMatrix::from_arrows(9, &shifted)
}

/// Intermediate matrices of the five-step path, read off the published
/// quiver drawings.
#[test]
fn intermediate_matrices_match_figures() {
    let path = rank9_path();
    let b2 = arrows(&[
        (1, 2), (2, 5), (5, 6), (6, 9), (9, 5), (5, 8), (8, 9), (9, 7), (7, 8), (8, 4),
        (7, 3), (3, 4), (4, 1), (4, 7),
    ]);
    let b3 = arrows(&[
        (1, 2), (5, 2), (6, 5), (2, 6), (5, 9), (8, 5), (2, 8), (9, 7), (7, 8), (8, 4),
        (7, 3), (3, 4), (4, 1), (4, 7),
    ]);
    let b4 = arrows(&[
        (1, 2), (5, 2), (6, 5), (2, 6), (5, 9), (8, 5), (2, 8), (9, 7), (8, 1), (4, 8),
        (3, 1), (4, 3), (1, 4), (7, 4),
    ]);
    let b5 = arrows(&[
        (4, 5), (6, 5), (2, 6), (5, 9), (5, 8), (8, 2), (9, 7), (1, 8), (8, 4), (3, 1),
        (4, 3), (7, 4),
    ]);
    let b6 = arrows(&[
        (5, 4), (6, 4), (2, 6), (4, 9), (4, 8), (8, 2), (9, 7), (1, 8), (8, 5), (3, 1),
        (5, 3), (7, 5),
    ]);
    assert_eq!(path.matrices[1], b2);
    assert_eq!(path.matrices[2], b3);
    assert_eq!(path.matrices[3], b4);
    assert_eq!(path.matrices[4], b5);
    assert_eq!(path.matrices[5], b6);
}

/// The four published action tables of the per-step monomial parts.
#[test]
fn tau_step_tables() {
    let path = rank9_path();
    type Row = Vec<(i64, Vec<(usize, i64)>)>;
    // (step index, sign, expected images of the nine generators)
    let cases: Vec<(usize, Sign, Row)> = vec![
        // tau_{8,+-}: Y^{(5)} -> Y^{(4)}
        (3, Sign::Plus, vec![
            (0, vec![(1, 1)]), (-1, vec![(2, 1), (8, 1)]), (0, vec![(3, 1)]),
            (-1, vec![(4, 1), (8, 1)]), (0, vec![(5, 1)]), (0, vec![(6, 1)]),
            (0, vec![(7, 1)]), (0, vec![(8, -1)]), (0, vec![(9, 1)]),
        ]),
        (3, Sign::Minus, vec![
            (1, vec![(1, 1), (8, 1)]), (0, vec![(2, 1)]), (0, vec![(3, 1)]),
            (0, vec![(4, 1)]), (1, vec![(5, 1), (8, 1)]), (0, vec![(6, 1)]),
            (0, vec![(7, 1)]), (0, vec![(8, -1)]), (0, vec![(9, 1)]),
        ]),
        // tau_{4,+-}: Y^{(4)} -> Y^{(3)}
        (2, Sign::Plus, vec![
            (0, vec![(1, 1)]), (0, vec![(2, 1)]), (-1, vec![(3, 1), (4, 1)]),
            (0, vec![(4, -1)]), (0, vec![(5, 1)]), (0, vec![(6, 1)]),
            (0, vec![(7, 1)]), (1, vec![(4, 1), (8, 1)]), (0, vec![(9, 1)]),
        ]),
        (2, Sign::Minus, vec![
            (1, vec![(1, 1), (4, 1)]), (0, vec![(2, 1)]), (0, vec![(3, 1)]),
            (0, vec![(4, -1)]), (0, vec![(5, 1)]), (0, vec![(6, 1)]),
            (-1, vec![(4, 1), (7, 1)]), (0, vec![(8, 1)]), (0, vec![(9, 1)]),
        ]),
        // tau_{5,+-}: Y^{(3)} -> Y^{(2)}
        (1, Sign::Plus, vec![
            (0, vec![(1, 1)]), (-1, vec![(2, 1), (5, 1)]), (0, vec![(3, 1)]),
            (0, vec![(4, 1)]), (0, vec![(5, -1)]), (0, vec![(6, 1)]),
            (0, vec![(7, 1)]), (0, vec![(8, 1)]), (1, vec![(5, 1), (9, 1)]),
        ]),
        (1, Sign::Minus, vec![
            (0, vec![(1, 1)]), (0, vec![(2, 1)]), (0, vec![(3, 1)]),
            (0, vec![(4, 1)]), (0, vec![(5, -1)]), (-1, vec![(5, 1), (6, 1)]),
            (0, vec![(7, 1)]), (-1, vec![(5, 1), (8, 1)]), (0, vec![(9, 1)]),
        ]),
        // tau_{8,+-}: Y^{(2)} -> Y^{(1)}
        (0, Sign::Plus, vec![
            (0, vec![(1, 1)]), (0, vec![(2, 1)]), (0, vec![(3, 1)]),
            (-1, vec![(4, 1), (8, 1)]), (0, vec![(5, 1)]), (0, vec![(6, 1)]),
            (0, vec![(7, 1)]), (0, vec![(8, -1)]), (1, vec![(8, 1), (9, 1)]),
        ]),
        (0, Sign::Minus, vec![
            (0, vec![(1, 1)]), (0, vec![(2, 1)]), (0, vec![(3, 1)]),
            (0, vec![(4, 1)]), (1, vec![(5, 1), (8, 1)]), (0, vec![(6, 1)]),
            (1, vec![(7, 1), (8, 1)]), (0, vec![(8, -1)]), (0, vec![(9, 1)]),
        ]),
    ];
    for (t, sign, rows) in cases {
        let tau = path.step_map(t, sign).unwrap();
        let b_target = &path.matrices[t];
        for (i, (p, fs)) in rows.iter().enumerate() {
            let fs0: Vec<(usize, i64)> = fs.iter().map(|&(g, e)| (g - 1, e)).collect();
            let want = printed(b_target, *p, &fs0);
            assert_eq!(
                tau.images[i], want,
                "table mismatch at step {t}, sign {sign:?}, generator {}",
                i + 1
            );
        }
    }
}

fn check_table(map: &MonomialMap, target: &ExchangeMatrix, rows: &[(i64, Vec<(usize, i64)>)]) {
    for (i, (p, fs)) in rows.iter().enumerate() {
        let fs0: Vec<(usize, i64)> = fs.iter().map(|&(g, e)| (g - 1, e)).collect();
        let want = printed(target, *p, &fs0);
        assert_eq!(&map.images[i], &want, "generator {}", i + 1);
    }
}

#[test]
fn tau_composite_example_sequences() {
    let b = rank9_matrix();
    // tau_{--++}
    let t = tau_composite(SignTuple::parse("--++").unwrap()).unwrap();
    check_table(&t, &b, &[
        (0, vec![(1, 1)]),
        (0, vec![(2, 1), (4, 1), (5, 1)]),
        (-1, vec![(3, 1), (4, 1)]),
        (1, vec![(5, -1), (8, -1)]),
        (0, vec![(5, 1)]),
        (0, vec![(5, 1), (6, 1), (8, 1)]),
        (1, vec![(7, 1), (8, 1)]),
        (1, vec![(4, -1), (5, -1)]),
        (0, vec![(9, 1)]),
    ]);
    let ti = t.inverse().unwrap();
    check_table(&ti, &t.source, &[
        (0, vec![(1, 1)]),
        (1, vec![(2, 1), (8, 1)]),
        (0, vec![(5, 1), (3, 1), (8, 1)]),
        (1, vec![(5, -1), (8, -1)]),
        (0, vec![(5, 1)]),
        (1, vec![(4, 1), (6, 1)]),
        (0, vec![(5, 1), (4, 1), (7, 1)]),
        (1, vec![(4, -1), (5, -1)]),
        (0, vec![(9, 1)]),
    ]);
    // tau_{+-+-}
    let t = tau_composite(SignTuple::parse("+-+-").unwrap()).unwrap();
    check_table(&t, &b, &[
        (2, vec![(1, 1), (4, 1), (5, 1)]),
        (0, vec![(2, 1)]),
        (-2, vec![(3, 1), (4, 1), (8, 1)]),
        (0, vec![(4, 1)]),
        (-1, vec![(4, -1), (8, -1)]),
        (-1, vec![(5, 1), (6, 1)]),
        (0, vec![(7, 1)]),
        (1, vec![(4, -1), (5, -1)]),
        (1, vec![(8, 1), (9, 1)]),
    ]);
    let ti = t.inverse().unwrap();
    check_table(&ti, &t.source, &[
        (-1, vec![(1, 1), (8, 1)]),
        (0, vec![(2, 1)]),
        (1, vec![(3, 1), (5, 1)]),
        (0, vec![(4, 1)]),
        (-1, vec![(4, -1), (8, -1)]),
        (0, vec![(4, 1), (6, 1), (8, 1)]),
        (0, vec![(7, 1)]),
        (1, vec![(4, -1), (5, -1)]),
        (0, vec![(4, 1), (5, 1), (9, 1)]),
    ]);
    // tau_{+-++}
    let t = tau_composite(SignTuple::parse("+-++").unwrap()).unwrap();
    check_table(&t, &b, &[
        (0, vec![(1, 1)]),
        (0, vec![(2, 1), (4, 1), (5, 1)]),
        (0, vec![(4, 1), (3, 1), (8, 1)]),
        (0, vec![(5, -1)]),
        (-1, vec![(5, 1), (8, -1)]),
        (-1, vec![(5, 1), (6, 1)]),
        (0, vec![(7, 1)]),
        (1, vec![(4, -1), (5, -1)]),
        (1, vec![(8, 1), (9, 1)]),
    ]);
    let ti = t.inverse().unwrap();
    check_table(&ti, &t.source, &[
        (0, vec![(1, 1)]),
        (1, vec![(2, 1), (8, 1)]),
        (0, vec![(5, 1), (3, 1), (8, 1)]),
        (1, vec![(4, 1), (8, -1)]),
        (0, vec![(4, -1)]),
        (1, vec![(4, 1), (6, 1)]),
        (0, vec![(7, 1)]),
        (1, vec![(4, -1), (5, -1)]),
        (0, vec![(4, 1), (5, 1), (9, 1)]),
    ]);
    // tau_{--+-}
    let t = tau_composite(SignTuple::parse("--+-").unwrap()).unwrap();
    check_table(&t, &b, &[
        (0, vec![(4, 1), (1, 1), (5, 1)]),
        (0, vec![(2, 1)]),
        (-1, vec![(3, 1), (4, 1)]),
        (1, vec![(4, 1), (8, -1)]),
        (0, vec![(4, -1)]),
        (0, vec![(5, 1), (6, 1), (8, 1)]),
        (1, vec![(7, 1), (8, 1)]),
        (1, vec![(4, -1), (5, -1)]),
        (0, vec![(9, 1)]),
    ]);
    let ti = t.inverse().unwrap();
    check_table(&ti, &t.source, &[
        (-1, vec![(1, 1), (8, 1)]),
        (0, vec![(2, 1)]),
        (1, vec![(3, 1), (5, 1)]),
        (0, vec![(5, -1)]),
        (-1, vec![(5, 1), (8, -1)]),
        (0, vec![(4, 1), (6, 1), (8, 1)]),
        (0, vec![(5, 1), (4, 1), (7, 1)]),
        (1, vec![(4, -1), (5, -1)]),
        (0, vec![(9, 1)]),
    ]);
}

#[test]
fn composite_inverse_roundtrip_and_morphism() {
    for sign in SignTuple::all() {
        let t = tau_composite(sign).unwrap();
        assert!(t.is_algebra_morphism());
        let ti = t.inverse().unwrap();
        let id = t.compose(&ti).unwrap();
        let id2 = ti.compose(&t).unwrap();
        for (i, m) in id.images.iter().enumerate() {
            assert_eq!(*m, tetraq::torus::TorusMonomial::generator(9, i));
        }
        for (i, m) in id2.images.iter().enumerate() {
            assert_eq!(*m, tetraq::torus::TorusMonomial::generator(9, i));
        }
    }
}

#[test]
fn minus_plus_minus_plus_equals_plus_plus_minus_minus() {
    let a = tau_composite(SignTuple::parse("-+-+").unwrap()).unwrap();
    let b = tau_composite(SignTuple::parse("++--").unwrap()).unwrap();
    assert_eq!(a.images, b.images);
}

#[test]
fn prop37_exact_sign_set() {
    let expected: Vec<&str> = vec!["+-++", "+-+-", "--++", "--+-"];
    for sign in SignTuple::all() {
        let holds = monomial_te_check(sign).unwrap();
        let should = expected.contains(&sign.to_string().as_str());
        assert_eq!(holds, should, "sign {sign}");
        assert_eq!(sign.is_monomial_te_solution(), should);
    }
}

#[test]
fn inhomogeneous_te_matches_golden_table() {
    assert!(inhomogeneous_te_check().unwrap());
    // spot values
    let b = tetraq::te16::b16();
    let img5 = tetraq::te16::inhomogeneous_image(4).unwrap();
    assert_eq!(img5, printed(&b, -2, &[(8, -1), (9, -1), (14, -1)]));
    let img13 = tetraq::te16::inhomogeneous_image(12).unwrap();
    assert_eq!(img13, printed(&b, 0, &[(12, 1)]));
}

#[test]
fn blocks_adhere_to_rank9_composite() {
    for side in [PathSide::Left, PathSide::Right] {
        for label in [BlockLabel::B456, BlockLabel::B236, BlockLabel::B135, BlockLabel::B124] {
            for sign in ["++++", "--++", "+-+-", "-+-+"] {
                let sign = SignTuple::parse(sign).unwrap();
                assert!(
                    block_matches_rank9(label, side, sign).unwrap(),
                    "block {label:?} {side:?} {sign}"
                );
            }
        }
    }
}

#[test]
fn tropical_signs_along_both_paths() {
    let b = tetraq::te16::b16();
    for (steps, negatives) in [
        (left_path_steps(), LEFT_NEGATIVE_STEPS),
        (right_path_steps(), RIGHT_NEGATIVE_STEPS),
    ] {
        let mut seed = TropicalSeed::initial(b.clone());
        for (t, &s) in steps.iter().enumerate() {
            if let Step::Mutate(k) = s {
                let sig = seed.tropical_sign(k).unwrap();
                let want = if negatives.contains(&t) { -1 } else { 1 };
                assert_eq!(sig, want, "step {t}");
            }
            seed = seed.apply(s).unwrap();
        }
    }
}

#[test]
fn final_tropical_seeds_coincide() {
    let b = tetraq::te16::b16();
    let run = |steps: &[Step]| {
        let mut seed = TropicalSeed::initial(b.clone());
        for &s in steps {
            seed = seed.apply(s).unwrap();
        }
        seed
    };
    assert_eq!(run(&left_path_steps()), run(&right_path_steps()));
}

#[test]
fn tropical_sign_exponent_consistency() {
    // the exponent action of the monomial part at the tropical sign equals
    // the c-vector mutation, along every published sequence
    let b9 = rank9_matrix();
    assert!(exponent_action_matches_cvectors(&b9, &tetraq::paperseq::rank9_steps()).unwrap());
    let b = tetraq::te16::b16();
    assert!(exponent_action_matches_cvectors(&b, &left_path_steps()).unwrap());
    assert!(exponent_action_matches_cvectors(&b, &right_path_steps()).unwrap());
}

#[test]
fn closed_form_holds_for_all_gradable_signs_and_generators() {
    use tetraq::rhat::{sign_is_gradable, SeriesOracle};
    let ungradable = ["++-+", "+--+", "-++-", "-+--"];
    let mut checked = 0;
    for sign in SignTuple::all() {
        let gradable = sign_is_gradable(sign);
        assert_eq!(!gradable, ungradable.contains(&sign.to_string().as_str()), "sign {sign}");
        for gen in 0..9 {
            match rhat_matches_closed_form(sign, gen).unwrap() {
                SeriesOracle::Checked(ok) => {
                    assert!(ok, "sign {sign} generator {}", gen + 1);
                    checked += 1;
                }
                SeriesOracle::NotGradable => assert!(!gradable),
            }
        }
    }
    // twelve tuples, nine generators each
    assert_eq!(checked, 12 * 9);
}

#[test]
fn center_monomial_forms_agree_with_right_forms() {
    for sign in SignTuple::all() {
        assert!(center_form_matches_right_form(sign).unwrap(), "sign {sign}");
    }
}

#[test]
fn center_products_are_preserved() {
    for sign in SignTuple::all() {
        assert!(center_is_preserved(sign).unwrap(), "sign {sign}");
    }
}

#[test]
fn tau_ijk_spot_images() {
    // left-path block 456 for the tropical-homogeneous signs acts on its
    // subset like the nine-vertex map; one non-participating generator
    let sign = SignTuple::parse("--++").unwrap();
    let t = tau_ijk(BlockLabel::B456, PathSide::Left, sign).unwrap();
    assert!(t.is_algebra_morphism());
}
