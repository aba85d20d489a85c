//! Validates transposed application against forward application.

use tetraq::opchecks::*;
use tetraq::rmatrix::*;

fn main() {
    let p = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
    let w = BasisWindow::new(-3, 3);
    let padded = w.pad(8);
    let mut worst = 0.0f64;
    for i in w.iter() {
        for j in w.iter() {
            for k in w.iter() {
                let ket = SparseState::basis(&[i, j, k]);
                let mut e1 = 0.0;
                let fwd = r_apply(RRoute::Split, [0, 1, 2], [0, 1, 2], &p, &ket, &padded, &mut e1)
                    .unwrap();
                for a in w.iter() {
                    for b in w.iter() {
                        for c in w.iter() {
                            let bra = SparseState::basis(&[a, b, c]);
                            let mut e2 = 0.0;
                            let back = debug_r_bra([0, 1, 2], [0, 1, 2], &p, &bra, &padded, &mut e2)
                                .unwrap();
                            let lhs = fwd.get(&[a, b, c]);
                            let rhs = back.get(&[i, j, k]);
                            worst = worst.max(rel_dev(lhs, rhs));
                        }
                    }
                }
            }
            break;
        }
        break;
    }
    println!("max bra-vs-forward deviation: {worst:.3e}");
}
