//! Traces a single matrix entry through the operator route.

use num_complex::Complex64;
use tetraq::rmatrix::*;

fn main() {
    let p = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
    let padded = BasisWindow::new(-12, 12);
    let inn = [0i64, -1, 4];
    let out = [3i64, -4, -4];
    let s = SparseState::basis(&inn);
    let mut esc = 0.0;
    let r = r_apply(RRoute::Split, [0, 1, 2], [0, 1, 2], &p, &s, &padded, &mut esc).unwrap();
    println!("op entry: {}", r.get(&out));
    println!("closed:   {}", r_closed_form(out, inn, &p).unwrap());
    // a simple small entry: in = (0,0,0): P gives (2,-2,0)
    let s0 = SparseState::basis(&[0, 0, 0]);
    let mut esc0 = 0.0;
    let r0 = r_apply(RRoute::Split, [0, 1, 2], [0, 1, 2], &p, &s0, &padded, &mut esc0).unwrap();
    for (t, a) in r0.amp.iter() {
        if a.norm() > 1e-9 && t.iter().all(|v| v.abs() <= 2) {
            let c = r_closed_form([t[0], t[1], t[2]], [0, 0, 0], &p).unwrap();
            let mark = if rel_dev(*a, c) < 1e-9 { "ok" } else { "BAD" };
            println!("{mark} out {t:?}: op {a:.6e} closed {c:.6e}");
        }
    }
    let _ = Complex64::new(0.0, 0.0);
}
