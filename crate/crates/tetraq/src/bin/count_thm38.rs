//! Counts the expansion terms of the sixteen-fold dilogarithm product
//! within a target window, to size the identity check.

use tetraq::maps::SignTuple;
use tetraq::paperseq::left_path_steps;
use tetraq::te16::b16;
use tetraq::zlists::z_list;

fn main() {
    let p_max: i64 = std::env::args().nth(1).unwrap_or("3".into()).parse().unwrap();
    let b = b16();
    let sign = SignTuple::parse("--++").unwrap();
    let z = z_list(&b, &left_path_steps(), sign).unwrap();
    let coords = [3usize, 4, 7, 8, 9, 10, 13, 14];
    // a[i][t]: coefficient of n_t in p_i
    let a: Vec<Vec<i64>> = coords
        .iter()
        .map(|&c| z.iter().map(|m| m.exponent[c]).collect())
        .collect();
    // DFS over n_1..n_16 with row-wise feasibility pruning
    let mut total: u64 = 0;
    let mut buckets = std::collections::HashSet::new();
    let mut n = [0i64; 16];
    dfs(0, &a, &mut n, &mut total, &mut buckets, p_max);
    println!("terms: {total}, nonempty buckets: {}", buckets.len());
}

fn dfs(
    t: usize,
    a: &[Vec<i64>],
    n: &mut [i64; 16],
    total: &mut u64,
    buckets: &mut std::collections::HashSet<[i64; 8]>,
    p_max: i64,
) {
    if t == 16 {
        let mut p = [0i64; 8];
        for i in 0..8 {
            p[i] = (0..16).map(|s| a[i][s] * n[s]).sum();
        }
        if p.iter().all(|v| v.abs() <= p_max) {
            *total += 1;
            buckets.insert(p);
        }
        return;
    }
    // bound n_t: rows where all remaining coefficients share one sign
    let mut limit = 64i64;
    for i in 0..8 {
        let partial: i64 = (0..t).map(|s| a[i][s] * n[s]).sum();
        let future_pos: bool = (t..16).all(|s| a[i][s] >= 0);
        let future_neg: bool = (t..16).all(|s| a[i][s] <= 0);
        if future_pos && partial > p_max {
            return;
        }
        if future_neg && partial < -p_max {
            return;
        }
        if a[i][t] > 0 && future_pos {
            limit = limit.min((p_max - partial) / a[i][t]);
        }
        if a[i][t] < 0 && future_neg {
            limit = limit.min((partial + p_max) / (-a[i][t]));
        }
    }
    // generic cap against runaway coordinates
    limit = limit.min(4 * p_max + 12);
    for v in 0..=limit.max(0) {
        n[t] = v;
        dfs(t + 1, a, n, total, buckets, p_max);
        n[t] = 0;
    }
}
