//! Debug printout for the closed-form conjugation oracle.

use tetraq::maps::SignTuple;
use tetraq::rhat::{
    closed_form_image, conjugated_image, dilog_arguments, lambda_element, rank9_matrix,
    tau_composite,
};
use tetraq::series::{GradedSeries, Grading};
use tetraq::torus::{ordered_product, SkewForm, TorusElement};

fn show(t: &TorusElement, g: &Grading, upto: i64) -> String {
    let mut s = String::new();
    for (e, c) in t.terms() {
        if g.degree(e) <= upto {
            s.push_str(&format!("  deg {} [{}] {:?}\n", g.degree(e), c, e));
        }
    }
    s
}

fn main() {
    let sign = SignTuple::parse(&std::env::args().nth(1).unwrap_or("++++".into())).unwrap();
    let gen: usize = std::env::args().nth(2).unwrap_or("0".into()).parse().unwrap();
    let b = rank9_matrix();
    let form = SkewForm::new(b.clone());
    let tau = tau_composite(sign).unwrap();
    let x = TorusElement::from_monomial(&tau.images[gen]);
    println!("tau image: {:?}", tau.images[gen]);
    let args = dilog_arguments(sign);
    let dirs: Vec<Vec<i64>> = args
        .iter()
        .map(|(p, fs)| ordered_product(&form, *p, fs).exponent)
        .collect();
    println!("dirs: {dirs:?}");
    let grading = Grading::find(9, &dirs).unwrap();
    println!("grading: {:?}", grading.0);
    let (num, den) = closed_form_image(&b, gen);
    println!("target numerator:\n{}", show(&num, &grading, 100));
    println!("den: {den:?}");
    let cutoff = 14;
    let conj = conjugated_image(&b, sign, &x, grading.clone(), cutoff);
    let lhs = match den {
        Some(w) => conj.mul(&lambda_element(&b, w), &form),
        None => conj,
    };
    let rhs = GradedSeries::from_element(&num, grading.clone(), cutoff);
    println!("lhs:\n{}", show(&lhs.terms, &grading, 8));
    println!("rhs:\n{}", show(&rhs.terms, &grading, 8));
    // replicate the library check at its own cutoffs
    let level = num.terms().map(|(e, _)| grading.degree(e)).max().unwrap_or(0);
    let margin = 6i64;
    let cut = level + margin;
    let shift = den.map(|w| {
        let d = lambda_element(&b, w);
        let m = d.terms().map(|(e, _)| grading.degree(e)).max().unwrap_or(0);
        let lo = d.terms().map(|(e, _)| grading.degree(e)).min().unwrap_or(0);
        m.max(-lo)
    }).unwrap_or(0);
    let cut = level + shift + margin;
    let conj2raw = conjugated_image(&b, sign, &TorusElement::from_monomial(&tau.images[gen]), grading.clone(), cut);
    let conj2 = match den { Some(w) => conj2raw.mul(&lambda_element(&b, w), &form), None => conj2raw };
    let rhs2 = GradedSeries::from_element(&num, grading.clone(), cut);
    println!("replicated agrees: {}", conj2.agrees_below(&rhs2, level + margin));
    let mut diff = Vec::new();
    for (e, c) in conj2.terms.terms() {
        if rhs2.terms.coeff_of(e) != *c { diff.push((grading.degree(e), e.clone(), format!("{c}"))); }
    }
    for (e, c) in rhs2.terms.terms() {
        if conj2.terms.coeff_of(e) != *c { diff.push((grading.degree(e), e.clone(), format!("want {c}"))); }
    }
    diff.sort();
    for d in diff.iter().take(10) { println!("DIFF {:?}", d); }
}

#[allow(dead_code)]
fn replicate() {}
