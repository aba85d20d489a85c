//! The q-Weyl realization suite: parameterization goldens, the affine
//! transformations, the quadratic-exponential realizations of Table 1,
//! the 384-element search, and the adjoint tetrahedron equation.

use tetraq::maps::SignTuple;
use tetraq::realization::{
    appendix_tau_uw, center_values, p_te_ad_check, p_te_ad_check_transported, phi_initial,
    phi_mutated, search_xl_realization, table1_element, tau_uw,
};
use tetraq::rhat::{center_product, rank9_matrix, tau_composite};
use tetraq::scalar::ScalarQ;
use tetraq::weyl::{duality_transport, rat_from, LinearForm, WeylMonomial};

fn mono(n: usize, us: &[(usize, i64)], ws: &[(usize, i64)], ks: &[(usize, i64)]) -> WeylMonomial {
    let mut m = WeylMonomial::unit(n);
    for &(i, e) in us {
        m.uexp[i - 1] += e;
    }
    for &(i, e) in ws {
        m.wexp[i - 1] += e;
    }
    for &(i, e) in ks {
        m.kexp[i - 1] += e;
    }
    m
}

#[test]
fn weyl_commutation_rules() {
    // e^{u_1} e^{w_1} is already ordered; e^{w_1} e^{u_1} = q^{-2} e^{u_1}e^{w_1}
    let eu = mono(3, &[(1, 1)], &[], &[]);
    let ew = mono(3, &[], &[(1, 1)], &[]);
    let ordered = eu.mul(&ew);
    assert_eq!(ordered.coeff, ScalarQ::one());
    let reversed = ew.mul(&eu);
    assert_eq!(reversed.coeff, ScalarQ::qpow(-2));
    // different slots commute freely
    let ew2 = mono(3, &[], &[(2, 1)], &[]);
    assert_eq!(eu.mul(&ew2).coeff, ScalarQ::one());
    assert_eq!(ew2.mul(&eu).coeff, ScalarQ::one());
}

#[test]
fn phi_images_match_published_tables() {
    let phi = phi_initial();
    // Y_1 = e^{-w_2 - lambda_2}  ...  Y_9 = e^{w_3}
    let want = vec![
        mono(3, &[], &[(2, -1)], &[(2, -1)]),
        mono(3, &[(2, 1)], &[], &[(2, 1)]),
        mono(3, &[], &[(1, -1)], &[(1, -1)]),
        mono(3, &[(1, 1), (2, -1)], &[], &[(1, 1)]),
        mono(3, &[], &[(2, 1), (3, -1)], &[(3, -1)]),
        mono(3, &[(3, 1)], &[], &[(3, 1)]),
        mono(3, &[(1, -1)], &[], &[]),
        mono(3, &[(3, -1)], &[(1, 1)], &[]),
        mono(3, &[], &[(3, 1)], &[]),
    ];
    for (i, w) in want.iter().enumerate() {
        assert_eq!(&phi.images[i], w, "Y_{}", i + 1);
    }
    let phip = phi_mutated();
    let wantp = vec![
        mono(3, &[], &[(3, -1)], &[(3, -1)]),
        mono(3, &[(1, 1)], &[], &[(1, 1)]),
        mono(3, &[(3, -1)], &[], &[]),
        mono(3, &[(2, 1), (1, -1)], &[], &[(2, 1)]),
        mono(3, &[], &[(3, 1), (2, -1)], &[(2, -1)]),
        mono(3, &[], &[(1, 1)], &[]),
        mono(3, &[(2, -1)], &[], &[]),
        mono(3, &[(3, 1)], &[(1, -1)], &[(1, -1), (3, 1)]),
        mono(3, &[], &[(2, 1)], &[]),
    ];
    for (i, w) in wantp.iter().enumerate() {
        assert_eq!(&phip.images[i], w, "Y'_{}", i + 1);
    }
}

#[test]
fn phi_is_a_morphism_on_both_sides() {
    assert!(phi_initial().is_morphism());
    assert!(phi_mutated().is_morphism());
}

#[test]
fn phi_center_values() {
    let phi = phi_initial();
    let b = rank9_matrix();
    for (labels, kexp) in center_values() {
        let m = center_product(&b, [labels[0], labels[1], labels[2]]);
        let img = phi.apply(&m);
        assert_eq!(img.coeff, ScalarQ::one());
        assert!(img.uexp.iter().all(|&e| e == 0));
        assert!(img.wexp.iter().all(|&e| e == 0));
        assert_eq!(img.kexp, kexp);
    }
}

#[test]
fn tau_uw_matches_published_maps() {
    for s in ["----", "--++", "-+-+", "+-+-", "++--", "++++"] {
        let sign = SignTuple::parse(s).unwrap();
        let computed = tau_uw(sign).unwrap();
        let want = appendix_tau_uw(sign).unwrap();
        assert_eq!(computed, want, "sign {s}");
    }
}

#[test]
fn tau_uw_spot_values() {
    // u_2 -> u_1 + u_3 - w_1 and w_3 -> w_2 + lambda_2 - lambda_3
    let m = tau_uw(SignTuple::parse("--++").unwrap()).unwrap();
    let mut want = LinearForm::u_var(3, 0)
        .add(&LinearForm::u_var(3, 2))
        .sub(&LinearForm::w_var(3, 0));
    assert_eq!(m.image_u(1), &want);
    want = LinearForm::w_var(3, 1)
        .add(&LinearForm::lambda_var(3, 1))
        .sub(&LinearForm::lambda_var(3, 2));
    assert_eq!(m.image_w(2), &want);
    // (+,+,+,+): u_3 -> -u_1 + u_2 + u_3
    let m = tau_uw(SignTuple::parse("++++").unwrap()).unwrap();
    let want = LinearForm::u_var(3, 0)
        .scale(&rat_from(-1))
        .add(&LinearForm::u_var(3, 1))
        .add(&LinearForm::u_var(3, 2));
    assert_eq!(m.image_u(2), &want);
}

#[test]
fn tau_uw_preserves_pairing_for_all_16() {
    for sign in SignTuple::all() {
        let m = tau_uw(sign).unwrap();
        assert!(m.preserves_pairing(), "sign {sign}");
    }
}

#[test]
fn table1_realizes_tau_uw() {
    for s in ["----", "--++", "-+-+", "+-+-", "++--", "++++"] {
        let sign = SignTuple::parse(s).unwrap();
        let p = table1_element(sign).unwrap();
        let ad = p.ad().unwrap();
        let want = tau_uw(sign).unwrap();
        assert_eq!(ad, want, "sign {s}");
        // nilpotency order of the quadratic part is at most 3
        let ord = p.x.nilpotency_order(3).unwrap();
        assert!(ord <= 3, "sign {s}: order {ord}");
    }
    // non-realizable tuples are rejected
    assert!(table1_element(SignTuple::parse("+--+").unwrap()).is_err());
}

#[test]
fn identity_element_acts_trivially() {
    use tetraq::weyl::{AffineSymplecticMap, PElement, Quad};
    let p = PElement {
        n: 3,
        x: Quad::zero(),
        rho: AffineSymplecticMap::identity(3),
        l: Quad::zero(),
    };
    assert_eq!(p.ad().unwrap(), AffineSymplecticMap::identity(3));
}

#[test]
fn search_finds_exactly_the_six_realizable_tuples() {
    let realizable = ["----", "--++", "-+-+", "+-+-", "++--", "++++"];
    for sign in SignTuple::all() {
        let found = search_xl_realization(sign).unwrap();
        let should = realizable.contains(&sign.to_string().as_str());
        assert_eq!(found.is_some(), should, "sign {sign}");
        if let Some(p) = found {
            assert_eq!(p.ad().unwrap(), tau_uw(sign).unwrap());
        }
    }
}

#[test]
fn duality_transport_maps_between_rows() {
    let p = table1_element(SignTuple::parse("--++").unwrap()).unwrap();
    let t = duality_transport(&p);
    let want = table1_element(SignTuple::parse("+-+-").unwrap()).unwrap();
    assert_eq!(t.ad().unwrap(), want.ad().unwrap());
    // involution
    let back = duality_transport(&t);
    assert_eq!(back.ad().unwrap(), p.ad().unwrap());
}

#[test]
fn adjoint_tetrahedron_equation() {
    assert!(p_te_ad_check().unwrap());
}

#[test]
fn adjoint_tetrahedron_equation_transported() {
    assert!(p_te_ad_check_transported().unwrap());
}

#[test]
fn pte_spot_coordinates() {
    use tetraq::realization::p_ijk;
    let n = 6;
    let lhs = p_ijk(n, 4, 5, 6)
        .ad()
        .unwrap()
        .compose(&p_ijk(n, 2, 3, 6).ad().unwrap())
        .compose(&p_ijk(n, 1, 3, 5).ad().unwrap())
        .compose(&p_ijk(n, 1, 2, 4).ad().unwrap());
    let rhs = p_ijk(n, 1, 2, 4)
        .ad()
        .unwrap()
        .compose(&p_ijk(n, 1, 3, 5).ad().unwrap())
        .compose(&p_ijk(n, 2, 3, 6).ad().unwrap())
        .compose(&p_ijk(n, 4, 5, 6).ad().unwrap());
    assert_eq!(lhs.image_u(0), rhs.image_u(0));
    assert_eq!(lhs.image_w(5), rhs.image_w(5));
}
