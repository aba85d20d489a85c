//! Full forward evaluation of both sides of the six-slot equation on one
//! basis vector, for structural debugging.

use tetraq::rmatrix::*;

fn main() {
    let p = ModelParams::new(1.0 / 3.0, vec![0, 1, 2, 1, 2, 2]);
    let pad: i64 = std::env::args().nth(1).unwrap_or("4".into()).parse().unwrap();
    let padded = BasisWindow::new(-3 - pad, 3 + pad);
    let v = SparseState::basis(&[0, 1, -1, 0, 1, 0]);
    let apply = |order: &[[usize; 3]]| -> SparseState {
        let mut s = v.clone();
        for slots in order {
            let mut esc = 0.0;
            s = r_apply(RRoute::Split, *slots, *slots, &p, &s, &padded, &mut esc).unwrap();
            // prune tiny amplitudes to keep states manageable
            s.amp.retain(|_, a| a.norm() > 1e-22);
        }
        s
    };
    let lhs = apply(&[[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]]);
    let rhs = apply(&[[3, 4, 5], [1, 2, 5], [0, 2, 4], [0, 1, 3]]);
    println!("lhs terms {}, rhs terms {}", lhs.amp.len(), rhs.amp.len());
    let window = BasisWindow::new(-3, 3);
    let mut worst = 0.0f64;
    let mut worst_t = Vec::new();
    let mut compared = 0;
    for (t, &a) in &lhs.amp {
        if t.iter().all(|x| window.contains(*x)) {
            let d = rel_dev(a, rhs.get(t));
            compared += 1;
            if d > worst {
                worst = d;
                worst_t = t.clone();
            }
        }
    }
    println!("compared {compared}, worst {worst:.3e} at {worst_t:?}");
    if !worst_t.is_empty() {
        println!("lhs {}", lhs.get(&worst_t));
        println!("rhs {}", rhs.get(&worst_t));
    }
    // a couple of matched spot entries
    for (t, &a) in lhs.amp.iter().take(3) {
        println!("spot {t:?}: lhs {a:.6e} rhs {:.6e}", rhs.get(t));
    }
}
