//! Rational bra-vs-forward and full-forward TE on a tiny window.

use num_traits::Zero;
use tetraq::ratstate::*;
use tetraq::rmatrix::BasisWindow;

fn main() {
    let rp = RatParams::new(1, 3, vec![1, 2, 0]);
    let w = BasisWindow::new(-2, 2);
    let padded = w.pad(8);
    let mut worst = 0.0f64;
    for i in w.iter() {
        for j in w.iter() {
            let (i, j, k) = (i, j, 1i64);
            let ket = RatState::basis(&[i, j, k]);
            let mut c1 = false;
            let fwd = rat_r_apply([0, 1, 2], [0, 1, 2], &rp, &ket, &padded, &mut c1).unwrap();
            for a in w.iter() {
                for b in w.iter() {
                    let (a, b, c) = (a, b, 0i64);
                    let bra = RatState::basis(&[a, b, c]);
                    let mut c2 = false;
                    let back =
                        rat_r_apply_bra([0, 1, 2], [0, 1, 2], &rp, &bra, &padded, &mut c2).unwrap();
                    let lhs = fwd.get(&[a, b, c]);
                    let rhs = back.get(&[i, j, k]);
                    worst = worst.max(rat_rel_dev(&lhs, &rhs));
                }
            }
        }
    }
    println!("rational bra vs forward: {worst:.3e}");

    // tiny full-forward six-slot comparison, exact
    let rp6 = RatParams::new(1, 3, vec![0, 0, 0, 0, 0, 0]);
    let w6 = BasisWindow::new(-2, 2);
    let v = RatState::basis(&[0, 0, 0, 0, 0, 0]);
    let apply = |order: &[[usize; 3]]| -> RatState {
        let mut s = v.clone();
        for slots in order {
            let mut clip = false;
            s = rat_r_apply(*slots, *slots, &rp6, &s, &w6, &mut clip).unwrap();
        }
        s
    };
    let lhs = apply(&[[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]]);
    let rhs = apply(&[[3, 4, 5], [1, 2, 5], [0, 2, 4], [0, 1, 3]]);
    let mut diffs = 0usize;
    let mut total = 0usize;
    let mut exact_eq = 0usize;
    for (t, a) in &lhs.amp {
        total += 1;
        let d = a - rhs.get(t);
        if d.is_zero() {
            exact_eq += 1;
        } else {
            diffs += 1;
            if diffs <= 5 {
                println!("diff at {t:?}: lhs {} rhs {}", rat_to_f64(a), rat_to_f64(&rhs.get(t)));
            }
        }
    }
    println!("six-slot forward window [-2,2]: {total} lhs terms, {exact_eq} exactly equal, {diffs} differ");
}
