//! Rational single-factor entries against the verified closed form.

use tetraq::ratstate::*;
use tetraq::rmatrix::{r_closed_form, BasisWindow, ModelParams, rel_dev};
use num_complex::Complex64;

fn main() {
    let rp = RatParams::new(1, 3, vec![1, 2, 0]);
    let fp = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
    let w = BasisWindow::new(-2, 2);
    let padded = w.pad(8);
    let mut worst = 0.0f64;
    for i in w.iter() {
        for j in w.iter() {
            for k in w.iter() {
                let v = RatState::basis(&[i, j, k]);
                let mut clip = false;
                let out = rat_r_apply([0, 1, 2], [0, 1, 2], &rp, &v, &padded, &mut clip).unwrap();
                for a in w.iter() {
                    for b in w.iter() {
                        for c in w.iter() {
                            let closed = r_closed_form([a, b, c], [i, j, k], &fp).unwrap();
                            let op = rat_to_f64(&out.get(&[a, b, c]));
                            worst = worst.max(rel_dev(closed, Complex64::new(op, 0.0)));
                        }
                    }
                }
            }
        }
    }
    println!("rational single-R vs closed form: {worst:.3e}");
}
