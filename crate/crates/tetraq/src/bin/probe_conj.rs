//! Bisects the conjugation identity: A phi(Y_1) = phi(Lambda_4 Y_1) A.

use tetraq::maps::{Sign, SignTuple};
use tetraq::opchecks::debug_dilog_chain;
use tetraq::realization::phi_initial;
use tetraq::rhat::{lambda_element, rank9_matrix};
use tetraq::rmatrix::*;
use tetraq::torus::{SkewForm, TorusElement, TorusMonomial};

fn main() {
    let p = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
    let w = BasisWindow::new(-2, 2);
    let padded = w.pad(10);
    let sign = SignTuple::parse("--++").unwrap();
    let b = rank9_matrix();
    let form = SkewForm::new(b.clone());
    let phi = phi_initial();
    // X = phi(Y_1), target = phi(Lambda_4 Y_1)
    let y1 = TorusMonomial::generator(9, 0);
    let x_op = MonomialOp::from_weyl(&phi.apply(&y1), &p);
    let lam4 = lambda_element(&b, 4);
    let target: TorusElement = lam4
        .mul(&TorusElement::from_monomial(&y1), &form)
        .unwrap();
    let target_ops: Vec<MonomialOp> = target
        .terms()
        .map(|(e, c)| {
            let m = TorusMonomial { coeff: c.clone(), exponent: e.clone() };
            MonomialOp::from_weyl(&phi.apply(&m), &p)
        })
        .collect();
    let mut worst = 0.0f64;
    for i in w.iter() {
        for j in w.iter() {
            for k in w.iter() {
                let v = SparseState::basis(&[i, j, k]);
                let mut esc = 0.0;
                // lhs: A (X |v>)
                let xv = x_op.apply_state(&v, &p, Rep::Standard, &padded, &mut esc);
                let lhs = debug_dilog_chain(sign, false, &xv, &p, &padded, &mut esc).unwrap();
                // rhs: target (A |v>)
                let av = debug_dilog_chain(sign, false, &v, &p, &padded, &mut esc).unwrap();
                let mut rhs = SparseState::default();
                for op in &target_ops {
                    let part = op.apply_state(&av, &p, Rep::Standard, &padded, &mut esc);
                    for (t, a) in part.amp {
                        rhs.add(t, a);
                    }
                }
                for (t, &a) in &lhs.amp {
                    if t.iter().all(|x| w.contains(*x)) {
                        worst = worst.max(rel_dev(a, rhs.get(t)));
                    }
                }
            }
        }
    }
    println!("A X = target A deviation: {worst:.3e}");
    let _ = Sign::Plus;
}
