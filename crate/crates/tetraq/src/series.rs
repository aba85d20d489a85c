//! Graded truncation for formal series over a quantum torus.
//!
//! Infinite objects (quantum dilogarithms, inverted binomials) are compared
//! through expansions truncated by a positive grading: an integer linear
//! functional on the exponent lattice that is strictly positive on every
//! series direction in play. Coefficients of monomials at or below the
//! cutoff are then exact, so a mismatch refutes an identity and agreement
//! up to the cutoff verifies all coefficients of a polynomial target.

use crate::scalar::ScalarQ;
use crate::torus::{SkewForm, TorusElement, TorusMonomial};

/// Integer grading functional on the exponent lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading(pub Vec<i64>);

impl Grading {
    pub fn degree(&self, exp: &[i64]) -> i64 {
        exp.iter().zip(&self.0).map(|(a, b)| a * b).sum()
    }

    /// Finds an integer functional strictly positive on all given
    /// directions (perceptron iteration; directions must admit one).
    pub fn find(rank: usize, directions: &[Vec<i64>]) -> Option<Grading> {
        let mut l = vec![0i64; rank];
        for _ in 0..100_000 {
            let mut done = true;
            for d in directions {
                let v: i64 = d.iter().zip(&l).map(|(a, b)| a * b).sum();
                if v <= 0 {
                    for (li, di) in l.iter_mut().zip(d) {
                        *li += di;
                    }
                    done = false;
                }
            }
            if done {
                return Some(Grading(l));
            }
        }
        None
    }
}

/// Truncated series: a torus element whose terms all have grading degree
/// at most `cutoff` (all higher terms dropped).
#[derive(Debug, Clone)]
pub struct GradedSeries {
    pub grading: Grading,
    pub cutoff: i64,
    pub terms: TorusElement,
}

impl GradedSeries {
    pub fn from_element(e: &TorusElement, grading: Grading, cutoff: i64) -> Self {
        let mut terms = TorusElement::zero(e.rank());
        for (exp, c) in e.terms() {
            if grading.degree(exp) <= cutoff {
                terms.add_term(exp.clone(), c.clone());
            }
        }
        GradedSeries { grading, cutoff, terms }
    }

    pub fn from_monomial(m: &TorusMonomial, grading: Grading, cutoff: i64) -> Self {
        Self::from_element(&TorusElement::from_monomial(m), grading, cutoff)
    }

    pub fn one(rank: usize, grading: Grading, cutoff: i64) -> Self {
        Self::from_element(&TorusElement::one(rank), grading, cutoff)
    }

    pub fn mul(&self, rhs: &TorusElement, form: &SkewForm) -> GradedSeries {
        let p = self.terms.mul(rhs, form).expect("rank match");
        GradedSeries::from_element(&p, self.grading.clone(), self.cutoff)
    }

    pub fn mul_series(&self, rhs: &GradedSeries, form: &SkewForm) -> GradedSeries {
        self.mul(&rhs.terms, form)
    }

    pub fn add(&self, rhs: &GradedSeries) -> GradedSeries {
        GradedSeries {
            grading: self.grading.clone(),
            cutoff: self.cutoff,
            terms: self.terms.add(&rhs.terms).expect("rank match"),
        }
    }

    /// Multiplies by `(1 + e)^{sign}` where every term of `e` has positive
    /// grading degree; the inverse is the geometric series.
    pub fn mul_one_plus(&self, e: &TorusElement, sign: i64, form: &SkewForm) -> GradedSeries {
        for (exp, _) in e.terms() {
            debug_assert!(self.grading.degree(exp) > 0, "non-positive series direction");
        }
        let rank = e.rank();
        let mut factor = TorusElement::one(rank);
        if sign >= 0 {
            factor = factor.add(e).unwrap();
            return self.mul(&factor, form);
        }
        // geometric series sum_k (-e)^k, run far enough that products with
        // the lowest-degree terms of self still reach the cutoff
        let min_deg = e
            .terms()
            .map(|(exp, _)| self.grading.degree(exp))
            .min()
            .unwrap_or(1)
            .max(1);
        let lower = self
            .terms
            .terms()
            .map(|(exp, _)| self.grading.degree(exp))
            .min()
            .unwrap_or(0)
            .min(0);
        let reach = self.cutoff - lower;
        let kmax = (reach.max(0) / min_deg + 1) as usize;
        let mut acc = TorusElement::one(rank);
        let mut pw = TorusElement::one(rank);
        for _ in 0..=kmax {
            pw = pw.mul(e, form).unwrap().scale(&ScalarQ::from_int(-1));
            // truncate against the reachable window
            let mut t = TorusElement::zero(rank);
            for (exp, c) in pw.terms() {
                if self.grading.degree(exp) <= reach {
                    t.add_term(exp.clone(), c.clone());
                }
            }
            pw = t;
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw).unwrap();
        }
        self.mul(&acc, form)
    }

    pub fn coeff_of(&self, exp: &[i64]) -> ScalarQ {
        self.terms.coeff_of(exp)
    }

    /// Equality of all coefficients up to the cutoff.
    pub fn agrees_with(&self, rhs: &GradedSeries) -> bool {
        self.terms == rhs.terms
    }

    /// Equality of all coefficients of degree at most `level`.
    pub fn agrees_below(&self, rhs: &GradedSeries, level: i64) -> bool {
        let pick = |s: &GradedSeries| {
            let mut t = TorusElement::zero(s.terms.rank());
            for (exp, c) in s.terms.terms() {
                if s.grading.degree(exp) <= level {
                    t.add_term(exp.clone(), c.clone());
                }
            }
            t
        };
        pick(self) == pick(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::ExchangeMatrix;

    #[test]
    fn geometric_inverse_cancels() {
        // (1+qY)^{-1} (1+qY) = 1 in rank 1
        let form = SkewForm::new(ExchangeMatrix::zeros(1));
        let g = Grading(vec![1]);
        let mut e = TorusElement::zero(1);
        e.add_term(vec![1], ScalarQ::qpow(1));
        let one = GradedSeries::one(1, g, 25);
        let s = one.mul_one_plus(&e, -1, &form).mul_one_plus(&e, 1, &form);
        assert!(s.agrees_with(&GradedSeries::one(1, Grading(vec![1]), 25)));
    }

    #[test]
    fn grading_finder_handles_mixed_directions() {
        let dirs = vec![vec![0, 0, 1], vec![0, -1, 0], vec![1, 0, 1], vec![-1, -1, 0]];
        let g = Grading::find(3, &dirs).unwrap();
        for d in &dirs {
            assert!(g.degree(d) > 0);
        }
    }
}
