//! The quantum torus algebra T(B): finite sums of q-commuting Laurent
//! monomials `Y^alpha` over an exponent lattice, with exact scalar
//! coefficients.
//!
//! The defining relation is `q^{<a,b>} Y^a Y^b = Y^{a+b}` where
//! `<a,b> = -a . B b` for the skew form of the exchange matrix, so a
//! product of monomials is a single monomial with a q-power coefficient.

use crate::cluster::ExchangeMatrix;
use crate::scalar::ScalarQ;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("operands live over different index sets or skew forms")]
    ShapeMismatch,
}

/// Exponent vector in Z^I, dense.
pub type Exponent = Vec<i64>;

/// Skew form `<a,b> = -a . B b` attached to an exchange matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewForm {
    matrix: ExchangeMatrix,
}

impl SkewForm {
    pub fn new(matrix: ExchangeMatrix) -> Self {
        SkewForm { matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    /// `<a,b> = -a . B b`; skew-symmetric.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        assert_eq!(a.len(), n);
        assert_eq!(b.len(), n);
        let mut s = 0i64;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] != 0 {
                    s -= a[i] * self.matrix.get(i, j) * b[j];
                }
            }
        }
        s
    }
}

/// A single normal-form monomial `c Y^alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusMonomial {
    pub coeff: ScalarQ,
    pub exponent: Exponent,
}

impl TorusMonomial {
    pub fn unit(n: usize) -> Self {
        TorusMonomial { coeff: ScalarQ::one(), exponent: vec![0; n] }
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0i64; n];
        e[i] = 1;
        TorusMonomial { coeff: ScalarQ::one(), exponent: e }
    }

    /// `Y^alpha . Y^beta = q^{-<alpha,beta>} Y^{alpha+beta}` and the
    /// coefficients multiply.
    pub fn mul(&self, rhs: &TorusMonomial, form: &SkewForm) -> TorusMonomial {
        let p = form.pairing(&self.exponent, &rhs.exponent);
        let exp: Exponent = self
            .exponent
            .iter()
            .zip(&rhs.exponent)
            .map(|(a, b)| a + b)
            .collect();
        TorusMonomial {
            coeff: self.coeff.mul(&rhs.coeff).mul(&ScalarQ::qpow(-p)),
            exponent: exp,
        }
    }

    /// Integer power; `<a,a> = 0` makes this exact.
    pub fn pow(&self, k: i64, _form: &SkewForm) -> TorusMonomial {
        let mut coeff = ScalarQ::one();
        let unit = self.coeff.as_unit();
        match (k, unit) {
            (k, Some((s, e))) => {
                let sign = if s < 0 && k % 2 != 0 { -1 } else { 1 };
                coeff = ScalarQ::qpow(e * k);
                if sign < 0 {
                    coeff = coeff.neg();
                }
            }
            (k, None) if k >= 0 => {
                for _ in 0..k {
                    coeff = coeff.mul(&self.coeff);
                }
            }
            (k, None) => {
                let inv = self.coeff.inv().expect("invertible coefficient");
                for _ in 0..(-k) {
                    coeff = coeff.mul(&inv);
                }
            }
        }
        TorusMonomial {
            coeff,
            exponent: self.exponent.iter().map(|a| a * k).collect(),
        }
    }

    pub fn inv(&self, form: &SkewForm) -> TorusMonomial {
        self.pow(-1, form)
    }
}

/// Finite sum of torus monomials in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElement {
    rank: usize,
    terms: BTreeMap<Exponent, ScalarQ>,
}

impl TorusElement {
    pub fn zero(rank: usize) -> Self {
        TorusElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        TorusElement::from_monomial(&TorusMonomial::unit(rank))
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        TorusElement::from_monomial(&TorusMonomial::generator(rank, i))
    }

    pub fn from_monomial(m: &TorusMonomial) -> Self {
        let mut t = TorusElement::zero(m.exponent.len());
        t.add_term(m.exponent.clone(), m.coeff.clone());
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: ScalarQ) {
        assert_eq!(exp.len(), self.rank);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(ScalarQ::zero);
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            let key: Vec<i64> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_of(&self, exp: &[i64]) -> ScalarQ {
        self.terms.get(exp).cloned().unwrap_or_else(ScalarQ::zero)
    }

    pub fn add(&self, rhs: &TorusElement) -> Result<TorusElement, TorusError> {
        if self.rank != rhs.rank {
            return Err(TorusError::ShapeMismatch);
        }
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ScalarQ) -> TorusElement {
        let mut out = TorusElement::zero(self.rank);
        for (e, k) in self.terms() {
            out.add_term(e.clone(), k.mul(c));
        }
        out
    }

    /// Bilinear product under the skew form.
    pub fn mul(&self, rhs: &TorusElement, form: &SkewForm) -> Result<TorusElement, TorusError> {
        if self.rank != rhs.rank || self.rank != form.rank() {
            return Err(TorusError::ShapeMismatch);
        }
        let mut out = TorusElement::zero(self.rank);
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                let p = form.pairing(ea, eb);
                let exp: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca.mul(cb).mul(&ScalarQ::qpow(-p)));
            }
        }
        Ok(out)
    }

    /// Structural equality of canonical term maps.
    pub fn equal(&self, rhs: &TorusElement) -> bool {
        self == rhs
    }
}

/// True iff `Y^m` q-commutes with every generator, i.e. `B m = 0`.
pub fn check_center(matrix: &ExchangeMatrix, m: &[i64]) -> bool {
    let n = matrix.rank();
    assert_eq!(m.len(), n);
    (0..n).all(|i| (0..n).map(|j| matrix.get(i, j) * m[j]).sum::<i64>() == 0)
}

/// Builds the normal form of an ordered product
/// `q^p Y_{i_1} ... Y_{i_k}` (generators possibly inverted), as printed in
/// the paper's tables.
pub fn ordered_product(
    form: &SkewForm,
    qpower: i64,
    factors: &[(usize, i64)],
) -> TorusMonomial {
    let n = form.rank();
    let mut acc = TorusMonomial::unit(n);
    acc.coeff = ScalarQ::qpow(qpower);
    for &(i, e) in factors {
        let g = TorusMonomial::generator(n, i).pow(e, form);
        acc = acc.mul(&g, form);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::ExchangeMatrix;

    fn rank2_form() -> SkewForm {
        // b_{12} = 1: Y1 Y2 = q^2 Y2 Y1
        SkewForm::new(ExchangeMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]))
    }

    #[test]
    fn generator_commutation() {
        let f = rank2_form();
        let y1 = TorusElement::generator(2, 0);
        let y2 = TorusElement::generator(2, 1);
        let lhs = y1.mul(&y2, &f).unwrap();
        let rhs = y2.mul(&y1, &f).unwrap().scale(&ScalarQ::qpow(2));
        assert!(lhs.equal(&rhs));
    }

    #[test]
    fn monomial_inverse_is_unit() {
        let f = rank2_form();
        let m = TorusMonomial {
            coeff: ScalarQ::qpow(3),
            exponent: vec![2, -1],
        };
        let p = m.mul(&m.inv(&f), &f);
        assert_eq!(p, TorusMonomial::unit(2));
    }

    #[test]
    fn binomial_product_expansion() {
        // (1+qY_4)(1+qY_5) with b_{45} = -1 (rank-2 stand-in, b_{12} = -1)
        let f = SkewForm::new(ExchangeMatrix::from_rows(&[vec![0, -1], vec![1, 0]]));
        let mut a = TorusElement::one(2);
        a.add_term(vec![1, 0], ScalarQ::qpow(1));
        let mut b = TorusElement::one(2);
        b.add_term(vec![0, 1], ScalarQ::qpow(1));
        let p = a.mul(&b, &f).unwrap();
        // q Y_4 . q Y_5 = q^2 q^{-<e1,e2>} Y^{(1,1)}; <e1,e2> = -b_{12} = 1
        assert_eq!(p.coeff_of(&[1, 1]), ScalarQ::qpow(1));
        assert_eq!(p.coeff_of(&[1, 0]), ScalarQ::qpow(1));
        assert_eq!(p.coeff_of(&[0, 0]), ScalarQ::one());
    }

    #[test]
    fn mul_is_associative_on_samples() {
        let f = rank2_form();
        let mut a = TorusElement::generator(2, 0);
        a.add_term(vec![-1, 2], ScalarQ::qpow(-3));
        let mut b = TorusElement::generator(2, 1);
        b.add_term(vec![1, 1], ScalarQ::from_int(2));
        let mut c = TorusElement::one(2);
        c.add_term(vec![0, -1], ScalarQ::qpow(5).neg());
        let ab_c = a.mul(&b, &f).unwrap().mul(&c, &f).unwrap();
        let a_bc = a.mul(&b.mul(&c, &f).unwrap(), &f).unwrap();
        assert!(ab_c.equal(&a_bc));
    }

    #[test]
    fn center_of_unit() {
        let m = ExchangeMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]);
        assert!(check_center(&m, &[0, 0]));
        assert!(!check_center(&m, &[1, 0]));
    }
}
