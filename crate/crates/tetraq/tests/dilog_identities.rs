//! Dilogarithm identity suite: the pentagon and recursion identities to
//! their pinned orders, the golden argument lists, and the sixteen-fold
//! identity by bounded exact enumeration.

use tetraq::dilog::{
    build_z_lists, dilog_exploratory, functional_check, pentagon_check, thm38_check,
    DilogError, SURVIVING_COORDS,
};
use tetraq::fixtures;
use tetraq::maps::SignTuple;
use tetraq::te16::b16;
use tetraq::zlists::printed_to_monomials;

#[test]
fn pentagon_to_order_12() {
    assert!(pentagon_check(12));
}

#[test]
fn functional_to_order_20() {
    assert!(functional_check(20));
}

#[test]
fn z_lists_match_frozen_tables() {
    let b = b16();
    let sign = SignTuple::parse("--++").unwrap();
    let (zl, zr) = build_z_lists(&b, sign).unwrap();
    let want_l = printed_to_monomials(&b, &fixtures::zdl().unwrap().printed());
    let want_r = printed_to_monomials(&b, &fixtures::zdr().unwrap().printed());
    assert_eq!(zl, want_l);
    assert_eq!(zr, want_r);
    // spot values: Z_7 = Y_4 and Z_16 = q Y_8 Y_9; Z'_1 = Y_14^{-1},
    // Z'_8 = q Y_4 Y_5 Y_8 Y_9
    assert_eq!(zl[6], tetraq::rhat::printed(&b, 0, &[(3, 1)]));
    assert_eq!(zl[15], tetraq::rhat::printed(&b, 1, &[(7, 1), (8, 1)]));
    assert_eq!(zr[0], tetraq::rhat::printed(&b, 0, &[(13, -1)]));
    assert_eq!(
        zr[7],
        tetraq::rhat::printed(&b, 1, &[(3, 1), (4, 1), (7, 1), (8, 1)])
    );
}

#[test]
fn z15_is_not_sign_coherent() {
    let b = b16();
    let sign = SignTuple::parse("--++").unwrap();
    let (zl, _) = build_z_lists(&b, sign).unwrap();
    let e = &zl[14].exponent;
    assert!(e.iter().any(|&x| x > 0) && e.iter().any(|&x| x < 0));
}

#[test]
fn inadmissible_signs_rejected() {
    let b = b16();
    assert!(matches!(
        build_z_lists(&b, SignTuple::parse("++++").unwrap()),
        Err(DilogError::InadmissibleSign)
    ));
    assert!(matches!(
        thm38_check(&b, SignTuple::parse("+-++").unwrap(), 1),
        Err(DilogError::InadmissibleSign)
    ));
    assert!(matches!(
        dilog_exploratory(&b, SignTuple::parse("--++").unwrap(), 1),
        Err(DilogError::InadmissibleSign)
    ));
}

#[test]
fn pne_matrix_matches_z_exponents() {
    let b = b16();
    let sign = SignTuple::parse("--++").unwrap();
    let (zl, _) = build_z_lists(&b, sign).unwrap();
    let frozen = fixtures::pne().unwrap();
    for (i, &c) in SURVIVING_COORDS.iter().enumerate() {
        let row: Vec<i64> = zl.iter().map(|m| m.exponent[c]).collect();
        assert_eq!(row, frozen.rows[i], "row p_{}", i + 1);
    }
}

#[test]
fn thm38_small_bound_both_tuples() {
    let b = b16();
    for s in ["--++", "+-+-"] {
        let sign = SignTuple::parse(s).unwrap();
        let report = thm38_check(&b, sign, 1).unwrap();
        assert!(report.passed(), "sign {s}: {report:?}");
        assert!(report.buckets_checked > 100);
    }
}

#[test]
fn negative_p1_has_no_solutions() {
    // p_1 = n_7 + n_8 >= 0: no bucket with negative first coordinate
    let b = b16();
    let sign = SignTuple::parse("--++").unwrap();
    let report = thm38_check(&b, sign, 1).unwrap();
    assert!(report.passed());
}
