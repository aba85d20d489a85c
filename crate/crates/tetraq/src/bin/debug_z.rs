//! Prints the computed Z-lists of the identity-labeled candidate next to
//! the printed tables, for convention debugging.

use tetraq::cluster::{build_square_quiver, ExchangeMatrix};
use tetraq::maps::SignTuple;
use tetraq::paperseq::{left_path_steps, right_path_steps};
use tetraq::zlists::{printed_to_monomials, z_list, zdl_table, zdr_table};

fn show(m: &tetraq::torus::TorusMonomial) -> String {
    let mut s = format!("[{}] ", m.coeff);
    for (i, e) in m.exponent.iter().enumerate() {
        if *e != 0 {
            s.push_str(&format!("Y{}^{} ", i + 1, e));
        }
    }
    s
}

fn main() {
    let q = build_square_quiver(&[3, 2, 1, 3, 2, 3]).unwrap();
    let b: ExchangeMatrix = q.matrix.clone();
    let sign = SignTuple::parse("--++").unwrap();
    let zl = z_list(&b, &left_path_steps(), sign).unwrap();
    let want = printed_to_monomials(&b, &zdl_table());
    println!("LEFT:");
    for (i, (a, w)) in zl.iter().zip(&want).enumerate() {
        let ok = if a == w { "ok " } else { "BAD" };
        println!("{} Z{:2}: computed {} | printed {}", ok, i + 1, show(a), show(w));
    }
    let zr = z_list(&b, &right_path_steps(), sign).unwrap();
    let wantr = printed_to_monomials(&b, &zdr_table());
    println!("RIGHT:");
    for (i, (a, w)) in zr.iter().zip(&wantr).enumerate() {
        let ok = if a == w { "ok " } else { "BAD" };
        println!("{} Z{:2}: computed {} | printed {}", ok, i + 1, show(a), show(w));
    }
}
