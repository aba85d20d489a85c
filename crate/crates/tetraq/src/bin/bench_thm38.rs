//! Times the full sixteen-fold identity run at a given bound.

use tetraq::dilog::thm38_check;
use tetraq::maps::SignTuple;
use tetraq::te16::b16;

fn main() {
    let p: i64 = std::env::args().nth(1).unwrap_or("3".into()).parse().unwrap();
    let b = b16();
    for s in ["--++", "+-+-"] {
        let t0 = std::time::Instant::now();
        let report = thm38_check(&b, SignTuple::parse(s).unwrap(), p).unwrap();
        println!(
            "sign {s}: buckets {}, mismatches {}, const1 {}, finite {}, {:?}",
            report.buckets_checked,
            report.mismatches,
            report.constant_term_is_one,
            report.all_finite,
            t0.elapsed()
        );
    }
}
