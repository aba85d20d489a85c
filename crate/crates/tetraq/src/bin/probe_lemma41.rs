//! Representation-level adjoint tetrahedron lemma: exact q-power check.

use tetraq::opchecks::lemma41_rep_check;

fn main() {
    let mut tuples = Vec::new();
    let mut seed = 0xACEDu64;
    let mut next = move || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((seed >> 33) as i64).rem_euclid(11) - 5
    };
    for _ in 0..100 {
        let t: [i64; 6] = std::array::from_fn(|_| next());
        tuples.push(t);
    }
    for m in [vec![0, 1, 2, 1, 2, 2], vec![5, 3, 0, 1, 4, 2], vec![0, 0, 0, 0, 0, 0]] {
        let ok = lemma41_rep_check(&m, &tuples);
        println!("m = {m:?}: {}", if ok { "exact agreement" } else { "MISMATCH" });
    }
}
