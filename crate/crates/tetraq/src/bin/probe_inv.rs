//! Checks the roundtrip A^{-1} A = id on window columns.

use tetraq::maps::SignTuple;
use tetraq::opchecks::debug_dilog_chain;
use tetraq::rmatrix::*;
use num_complex::Complex64;

fn main() {
    let p = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
    let w = BasisWindow::new(-2, 2);
    let padded = w.pad(10);
    let sign = SignTuple::parse("--++").unwrap();
    let mut worst = 0.0f64;
    for i in w.iter() {
        for j in w.iter() {
            for k in w.iter() {
                let v = SparseState::basis(&[i, j, k]);
                let mut esc = 0.0;
                let av = debug_dilog_chain(sign, false, &v, &p, &padded, &mut esc).unwrap();
                let back = debug_dilog_chain(sign, true, &av, &p, &padded, &mut esc).unwrap();
                for (t, &a) in &back.amp {
                    if t.iter().all(|x| w.contains(*x)) {
                        let want = if t == &vec![i, j, k] {
                            Complex64::new(1.0, 0.0)
                        } else {
                            Complex64::new(0.0, 0.0)
                        };
                        worst = worst.max(rel_dev(a, want));
                    }
                }
            }
        }
    }
    println!("A^-1 A roundtrip deviation: {worst:.3e}");
}
