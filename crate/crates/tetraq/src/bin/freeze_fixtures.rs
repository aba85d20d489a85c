//! Writes the fixture JSON files from the in-code transcriptions and the
//! derived 16-vertex seed. Run from the crate root after re-deriving.

use std::fs;
use tetraq::cluster::build_square_quiver;
use tetraq::paperseq::y21_table;
use tetraq::zlists::{zdl_table, zdr_table};

fn main() {
    let word = vec![3usize, 2, 1, 3, 2, 3];
    let q = build_square_quiver(&word).unwrap();
    let n = q.vertex_count();
    let matrix: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| q.matrix.get(i, j)).collect())
        .collect();
    // crossing slots: wire-pair labeling {12}->1 ... {34}->6, 1-based
    let mut wires: Vec<usize> = (1..=4).collect();
    let mut slots = Vec::new();
    for &letter in &word {
        let (a, b) = (wires[letter - 1].min(wires[letter]), wires[letter - 1].max(wires[letter]));
        let slot = match (a, b) {
            (3, 4) => 1,
            (2, 4) => 2,
            (1, 4) => 3,
            (2, 3) => 4,
            (1, 3) => 5,
            (1, 2) => 6,
            _ => unreachable!(),
        };
        slots.push(slot);
        wires.swap(letter - 1, letter);
    }
    let seed = serde_json::json!({
        "word": word,
        "label_map": (0..16).collect::<Vec<usize>>(),
        "matrix": matrix,
        "crossing_slots": slots,
    });
    fs::write("crates/tetraq/fixtures/b16.json", serde_json::to_string_pretty(&seed).unwrap())
        .unwrap();

    let dump = |name: &str, rows: Vec<(i64, Vec<(usize, i64)>)>| {
        let v = serde_json::json!({ "rows": rows });
        fs::write(
            format!("crates/tetraq/fixtures/{name}.json"),
            serde_json::to_string_pretty(&v).unwrap(),
        )
        .unwrap();
    };
    dump("y21", y21_table());
    dump("zdl", zdl_table());
    dump("zdr", zdr_table());

    // the (pne) matrix: powers of the eight surviving variables in the
    // graded expansion, derived from the frozen zdl exponents
    let b = tetraq::cluster::ExchangeMatrix::from_rows(&matrix);
    let zl = tetraq::zlists::printed_to_monomials(&b, &zdl_table());
    let coords = [3usize, 4, 7, 8, 9, 10, 13, 14]; // Y4,Y5,Y8,Y9,Y10,Y11,Y14,Y15
    let rows: Vec<Vec<i64>> = coords
        .iter()
        .map(|&c| zl.iter().map(|m| m.exponent[c]).collect())
        .collect();
    fs::write(
        "crates/tetraq/fixtures/pne.json",
        serde_json::to_string_pretty(&serde_json::json!({ "rows": rows })).unwrap(),
    )
    .unwrap();
    eprintln!("fixtures written");
}
