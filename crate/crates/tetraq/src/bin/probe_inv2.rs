//! Per-factor dilogarithm roundtrips.

use num_complex::Complex64;
use tetraq::maps::{Sign, SignTuple};
use tetraq::realization::phi_initial;
use tetraq::rhat::{dilog_arguments, rank9_matrix};
use tetraq::rmatrix::*;
use tetraq::torus::{ordered_product, SkewForm};

fn main() {
    let p = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
    let w = BasisWindow::new(-2, 2);
    let padded = w.pad(10);
    let sign = SignTuple::parse("--++").unwrap();
    let b = rank9_matrix();
    let form = SkewForm::new(b.clone());
    let phi = phi_initial();
    let args = dilog_arguments(sign);
    for (t, (pw, fs)) in args.iter().enumerate() {
        let m = ordered_product(&form, *pw, fs);
        let op = MonomialOp::from_weyl(&phi.apply(&m), &p);
        let eps = sign.0[t];
        let neg = match eps {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        let mut worst = 0.0f64;
        for i in w.iter() {
            for j in w.iter() {
                for k in w.iter() {
                    let v = SparseState::basis(&[i, j, k]);
                    let mut esc = 0.0;
                    let a = psi_apply(&op, eps, &v, &p, Rep::Standard, &padded, &mut esc).unwrap();
                    let bb = psi_apply(&op, neg, &a, &p, Rep::Standard, &padded, &mut esc).unwrap();
                    for (tt, &amp) in &bb.amp {
                        if tt.iter().all(|x| w.contains(*x)) {
                            let want = if tt == &vec![i, j, k] {
                                Complex64::new(1.0, 0.0)
                            } else {
                                Complex64::new(0.0, 0.0)
                            };
                            worst = worst.max(rel_dev(amp, want));
                        }
                    }
                }
            }
        }
        println!("factor {} (eps {eps:?}, uexp {:?}, wexp {:?}): roundtrip dev {worst:.3e}", t + 1, op.uexp, op.wexp);
    }
}
