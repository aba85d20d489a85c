//! Measures agreement between the closed-form matrix elements and the
//! operator routes, and the window behavior of the six-slot check.

use num_complex::Complex64;
use tetraq::rmatrix::{
    r_apply, r_closed_form, rel_dev, BasisWindow, ModelParams, RRoute, SparseState,
};

fn main() {
    let p = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
    let win = BasisWindow::new(-4, 4);
    let pad: i64 = std::env::args().nth(1).unwrap_or("6".into()).parse().unwrap();
    let padded = win.pad(pad);
    let mut max_dev = 0.0f64;
    let mut max_dev0 = 0.0f64;
    let mut worst = ([0i64; 3], [0i64; 3]);
    let mut max_esc = 0.0f64;
    let mut checked = 0u64;
    for i in win.iter() {
        for j in win.iter() {
            for k in win.iter() {
                let s = SparseState::basis(&[i, j, k]);
                let mut esc = 0.0;
                let out = r_apply(RRoute::Split, [0, 1, 2], [0, 1, 2], &p, &s, &padded, &mut esc)
                    .unwrap();
                let mut esc0 = 0.0;
                let out0 = r_apply(RRoute::Front, [0, 1, 2], [0, 1, 2], &p, &s, &padded, &mut esc0)
                    .unwrap();
                max_esc = max_esc.max(esc);
                for a in win.iter() {
                    for b in win.iter() {
                        for c in win.iter() {
                            let closed = r_closed_form([a, b, c], [i, j, k], &p).unwrap();
                            let op = out.get(&[a, b, c]);
                            let d = rel_dev(closed, op);
                            if d > max_dev {
                                max_dev = d;
                                worst = ([a, b, c], [i, j, k]);
                            }
                            let d0 = rel_dev(op, out0.get(&[a, b, c]));
                            max_dev0 = max_dev0.max(d0);
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    println!("entries checked: {checked}");
    println!("max rel deviation closed-vs-split: {max_dev:.3e} at {worst:?}");
    println!("max rel deviation split-vs-front: {max_dev0:.3e}");
    println!("max escaped during split route: {max_esc:.3e}");
}
