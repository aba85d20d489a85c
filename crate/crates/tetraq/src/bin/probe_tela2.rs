//! TE probe with equal spectral parameters, exact arithmetic.

use tetraq::opchecks::tetrahedron_check;
use tetraq::ratstate::RatParams;
use tetraq::rmatrix::BasisWindow;

fn main() {
    let mvec: Vec<i64> = std::env::args().nth(1).unwrap_or("0,0,0,0,0,0".into())
        .split(',').map(|x| x.parse().unwrap()).collect();
    let p = RatParams::new(1, 3, mvec);
    let w = BasisWindow::new(-1, 1);
    let t0 = std::time::Instant::now();
    let rep = tetrahedron_check(&p, &w, 4, 2, 2).unwrap();
    println!("{rep:?} {:?}", t0.elapsed());
}
