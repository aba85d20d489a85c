//! Probes the conjugation and tetrahedron checks for tolerances/timing.

use tetraq::maps::SignTuple;
use tetraq::opchecks::*;
use tetraq::rmatrix::{BasisWindow, ModelParams};

fn main() {
    let which = std::env::args().nth(1).unwrap_or("rhat".into());
    match which.as_str() {
        "rhat" => {
            let p = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
            let w = BasisWindow::new(-4, 4);
            let t0 = std::time::Instant::now();
            let mut max = 0.0f64;
            for s in ["--++", "+-+-", "++-+", "----"] {
                let sign = SignTuple::parse(s).unwrap();
                for g in 0..9 {
                    let d = rhat_operator_check(sign, g, &p, &w, 8).unwrap();
                    max = max.max(d);
                    if d > 1e-9 {
                        println!("sign {s} gen {} dev {d:.3e}", g + 1);
                    }
                }
                println!("sign {s} done, running max {max:.3e}, {:?}", t0.elapsed());
            }
        }
        "variant" => {
            let p = ModelParams::new(1.0 / 3.0, vec![1, 2, 0]);
            let w = BasisWindow::new(-3, 3);
            for s in ["--++", "+-+-", "++++", "----", "-+-+"] {
                let sign = SignTuple::parse(s).unwrap();
                let t0 = std::time::Instant::now();
                let d = variant_intertwining_check(sign, &p, &w, 8).unwrap();
                println!("variant {s}: dev {d:.3e}  {:?}", t0.elapsed());
            }
        }
        "tela" => {
            let p = tetraq::ratstate::RatParams::new(1, 3, vec![0, 1, 2, 1, 2, 2]);
            let w = BasisWindow::new(-3, 3);
            let t0 = std::time::Instant::now();
            let pad: i64 = std::env::args().nth(2).unwrap_or("8".into()).parse().unwrap();
            let ni: usize = std::env::args().nth(3).unwrap_or("2".into()).parse().unwrap();
            let no: usize = std::env::args().nth(4).unwrap_or("2".into()).parse().unwrap();
            let rep = tetrahedron_check(&p, &w, pad, ni, no).unwrap();
            println!("{rep:?}  {:?}", t0.elapsed());
        }
        "rank" => {
            println!("rank of the eight-variable sublattice: {}", phi16_rank_report());
        }
        _ => {}
    }
}
