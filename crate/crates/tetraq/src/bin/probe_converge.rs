//! Convergence of one central entry of both sides with growing padding.

use tetraq::ratstate::*;
use tetraq::rmatrix::BasisWindow;

fn main() {
    let p = RatParams::new(1, 3, vec![0, 1, 2, 1, 2, 2]);
    let r456 = [3usize, 4, 5];
    let r236 = [1usize, 2, 5];
    let r135 = [0usize, 2, 4];
    let r124 = [0usize, 1, 3];
    let inn = vec![0i64, 1, -1, 0, 1, 0];
    // discover a central nonzero output of the full product at small pad
    let out = {
        let padded = BasisWindow::new(-5, 5);
        let mut clip = false;
        let mut s = RatState::basis(&inn);
        for slots in [r124, r135, r236, r456] {
            s = rat_r_apply(slots, slots, &p, &s, &padded, &mut clip).unwrap();
        }
        let mut best: Option<(i64, Vec<i64>)> = None;
        for (t, a) in &s.amp {
            if t.iter().all(|x| x.abs() <= 3) && !num_traits::Zero::is_zero(a) {
                let r = t.iter().map(|x| x.abs()).max().unwrap();
                if best.as_ref().map(|(br, _)| r < *br).unwrap_or(true) {
                    best = Some((r, t.clone()));
                }
            }
        }
        let (_, t) = best.expect("nonzero central entry");
        println!("chosen out: {t:?}");
        t
    };
    for pad in [2i64, 4, 6, 8] {
        let padded = BasisWindow::new(-3 - pad, 3 + pad);
        let v = RatState::basis(&inn);
        let mut clip = false;
        let k1 = rat_r_apply(r124, r124, &p, &v, &padded, &mut clip).unwrap();
        let ket_l = rat_r_apply(r135, r135, &p, &k1, &padded, &mut clip).unwrap();
        let k2 = rat_r_apply(r456, r456, &p, &v, &padded, &mut clip).unwrap();
        let ket_r = rat_r_apply(r236, r236, &p, &k2, &padded, &mut clip).unwrap();
        let bra = RatState::basis(&out);
        let mut c2 = false;
        let b1 = rat_r_apply_bra(r456, r456, &p, &bra, &padded, &mut c2).unwrap();
        let b_l = rat_r_apply_bra(r236, r236, &p, &b1, &padded, &mut c2).unwrap();
        let b2 = rat_r_apply_bra(r124, r124, &p, &bra, &padded, &mut c2).unwrap();
        let b_r = rat_r_apply_bra(r135, r135, &p, &b2, &padded, &mut c2).unwrap();
        let lhs = rat_dot(&b_l, &ket_l);
        let rhs = rat_dot(&b_r, &ket_r);
        println!(
            "pad {pad}: lhs {:.12e} rhs {:.12e} reldev {:.3e}",
            rat_to_f64(&lhs),
            rat_to_f64(&rhs),
            rat_rel_dev(&lhs, &rhs)
        );
    }
}
