//! Exact arithmetic in the field of rational functions of the formal
//! variable `q` over the integers.
//!
//! Values are fractions of integer Laurent polynomials in `q`, kept in a
//! canonical form so that equality is structural: the denominator is a
//! genuine polynomial (no negative exponents, constant term nonzero),
//! has positive leading coefficient and content 1, and the fraction is
//! reduced. Only integer powers of `q` are representable; operations that
//! would require a half-integer power signal [`ScalarError::HalfPowerUnsupported`].

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole of the denominator")]
    EvaluationPole,
    #[error("half-integer power of q is not representable")]
    HalfPowerUnsupported,
}

/// Integer Laurent polynomial in `q`: a map from exponent to coefficient,
/// with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: BTreeMap<i64, BigInt>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        PolyQ::qpow(0)
    }

    /// The monomial `q^n`.
    pub fn qpow(n: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(n, BigInt::one());
        PolyQ { coeffs }
    }

    pub fn from_int(c: i64) -> Self {
        let mut p = PolyQ::zero();
        p.add_term(0, BigInt::from(c));
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by `q^n`.
    pub fn shift(&self, n: i64) -> Self {
        PolyQ {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + n, c.clone())).collect(),
        }
    }

    fn leading_coeff(&self) -> BigInt {
        self.max_exp().map(|e| self.coeffs[&e].clone()).unwrap_or_else(BigInt::zero)
    }

    /// Gcd of all coefficients (nonnegative).
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = big_gcd(&g, c);
        }
        g
    }

    fn div_content(&self, g: &BigInt) -> Self {
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c / g)).collect(),
        }
    }

    /// Exact division by another polynomial; panics if not exact.
    /// Both operands are shifted to ordinary polynomials first.
    fn div_exact(&self, d: &PolyQ) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return PolyQ::zero();
        }
        let sa = self.min_exp().unwrap();
        let sd = d.min_exp().unwrap();
        let a = self.shift(-sa);
        let b = d.shift(-sd);
        let mut rem = a;
        let mut quot = PolyQ::zero();
        let db = b.max_exp().unwrap();
        let lb = b.leading_coeff();
        while !rem.is_zero() {
            let dr = rem.max_exp().unwrap();
            assert!(dr >= db, "non-exact polynomial division");
            let lr = rem.leading_coeff();
            let (c, r) = big_divrem(&lr, &lb);
            assert!(r.is_zero(), "non-exact polynomial division");
            let t_exp = dr - db;
            quot.add_term(t_exp, c.clone());
            let mut sub = b.shift(t_exp);
            sub = sub.scale(&c);
            rem = &rem - &sub;
        }
        quot.shift(sa - sd)
    }

    fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn eval(&self, q0: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.coeffs {
            let cf = bigint_to_f64(c);
            acc += cf * q0.powi(*e as i32);
        }
        acc
    }
}

fn big_divrem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    use num_integer::Integer;
    a.div_rem(b)
}

fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.gcd(b)
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        let mut out = PolyQ::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

/// Gcd of two Laurent polynomials as elements of Z[q] (primitive part),
/// ignoring unit factors `±q^k`. Primitive PRS.
fn poly_gcd(a: &PolyQ, b: &PolyQ) -> PolyQ {
    if a.is_zero() {
        return b.shift(-b.min_exp().unwrap_or(0));
    }
    if b.is_zero() {
        return a.shift(-a.min_exp().unwrap_or(0));
    }
    let mut f = a.shift(-a.min_exp().unwrap());
    let mut g = b.shift(-b.min_exp().unwrap());
    f = f.div_content(&f.content());
    g = g.div_content(&g.content());
    if f.max_exp().unwrap() < g.max_exp().unwrap() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        // pseudo-remainder of f by g
        let df = f.max_exp().unwrap();
        let dg = g.max_exp().unwrap();
        if df < dg {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let lg = g.leading_coeff();
        let mut rem = f.scale(&num_traits::pow::pow(lg.clone(), (df - dg + 1) as usize));
        while !rem.is_zero() && rem.max_exp().unwrap() >= dg {
            let dr = rem.max_exp().unwrap();
            let lr = rem.leading_coeff();
            let (c, r) = big_divrem(&lr, &lg);
            debug_assert!(r.is_zero());
            let sub = g.shift(dr - dg).scale(&c);
            rem = &rem - &sub;
        }
        let rem = if rem.is_zero() {
            rem
        } else {
            let rem = rem.shift(-rem.min_exp().unwrap());
            rem.div_content(&rem.content())
        };
        f = g;
        g = rem;
    }
    f.div_content(&f.content())
}

/// Exact rational function of `q`: numerator over denominator, canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: PolyQ,
    den: PolyQ,
}

impl ScalarQ {
    pub fn zero() -> Self {
        ScalarQ { num: PolyQ::zero(), den: PolyQ::one() }
    }

    pub fn one() -> Self {
        ScalarQ { num: PolyQ::one(), den: PolyQ::one() }
    }

    /// `q^n`.
    pub fn qpow(n: i64) -> Self {
        ScalarQ { num: PolyQ::qpow(n), den: PolyQ::one() }
    }

    pub fn from_int(c: i64) -> Self {
        ScalarQ { num: PolyQ::from_int(c), den: PolyQ::one() }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        ScalarQ::new(p, PolyQ::one())
    }

    /// Builds `num/den` in canonical form. Panics if `den` is zero.
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return ScalarQ::zero();
        }
        if den == PolyQ::one() {
            return ScalarQ { num, den };
        }
        // unit denominator +-c q^k: fold into the numerator when c = +-1
        if den.coeffs.len() == 1 {
            let (e, c) = den.coeffs.iter().next().unwrap();
            if c.is_one() {
                return ScalarQ { num: num.shift(-e), den: PolyQ::one() };
            }
            if (-c).is_one() {
                return ScalarQ { num: -&num.shift(-e), den: PolyQ::one() };
            }
        }
        // reduce by gcd (unit-free part)
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.max_exp() == Some(0) && g.content().is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        // shift all q-powers out of the denominator
        let sd = den.min_exp().unwrap();
        den = den.shift(-sd);
        num = num.shift(-sd);
        // integer content of the denominator moves into a rational... we keep
        // content 1 in the denominator by scaling both by it only when exact;
        // otherwise divide both by the common integer content.
        let cg = big_gcd(&num.content(), &den.content());
        if !cg.is_one() {
            num = num.div_content(&cg);
            den = den.div_content(&cg);
        }
        // positive leading coefficient of the denominator
        if den.leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        ScalarQ { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &ScalarQ::one()
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn add(&self, rhs: &ScalarQ) -> ScalarQ {
        ScalarQ::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }

    pub fn sub(&self, rhs: &ScalarQ) -> ScalarQ {
        ScalarQ::new(&(&self.num * &rhs.den) - &(&rhs.num * &self.den), &self.den * &rhs.den)
    }

    pub fn mul(&self, rhs: &ScalarQ) -> ScalarQ {
        ScalarQ::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn neg(&self) -> ScalarQ {
        ScalarQ { num: -&self.num, den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<ScalarQ, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(ScalarQ::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &ScalarQ) -> Result<ScalarQ, ScalarError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// If this scalar is exactly `±q^n`, returns `(sign, n)`.
    pub fn as_unit(&self) -> Option<(i64, i64)> {
        if self.den != PolyQ::one() {
            return None;
        }
        if self.num.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.num.coeffs.iter().next().unwrap();
        if c.is_one() {
            Some((1, *e))
        } else if (-c).is_one() {
            Some((-1, *e))
        } else {
            None
        }
    }

    /// Evaluates at a complex point `q0`.
    pub fn eval_numeric(&self, q0: Complex64) -> Result<Complex64, ScalarError> {
        let d = self.den.eval(q0);
        if d.norm() < 1e-290 {
            return Err(ScalarError::EvaluationPole);
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn fmt_poly(p: &PolyQ) -> String {
            if p.is_zero() {
                return "0".to_string();
            }
            let mut parts = Vec::new();
            for (e, c) in p.terms() {
                let term = match (*e, c.to_string().as_str()) {
                    (0, s) => s.to_string(),
                    (1, "1") => "q".to_string(),
                    (1, "-1") => "-q".to_string(),
                    (1, s) => format!("{s}*q"),
                    (e, "1") => format!("q^{e}"),
                    (e, "-1") => format!("-q^{e}"),
                    (e, s) => format!("{s}*q^{e}"),
                };
                parts.push(term);
            }
            parts.join(" + ").replace("+ -", "- ")
        }
        if self.den == PolyQ::one() {
            write!(f, "{}", fmt_poly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_poly(&self.num), fmt_poly(&self.den))
        }
    }
}

/// Finite q-Pochhammer `(q^2; q^2)_n = prod_{j=1}^{n} (1 - q^{2j})`.
pub fn qfac(n: u32) -> ScalarQ {
    let mut p = PolyQ::one();
    for j in 1..=n as i64 {
        let mut f = PolyQ::one();
        f.add_term(2 * j, BigInt::from(-1i64));
        p = &p * &f;
    }
    ScalarQ::from_poly(p)
}

/// `prod_{j=1}^{n} (1 - z q^{2j})` for a monomial `z = c q^k` given by a scalar.
pub fn qpoch_shifted(z: &ScalarQ, n: u32) -> ScalarQ {
    let mut acc = ScalarQ::one();
    for j in 1..=n as i64 {
        let f = ScalarQ::one().sub(&z.mul(&ScalarQ::qpow(2 * j)));
        acc = acc.mul(&f);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarQ {
        ScalarQ::qpow(1)
    }

    #[test]
    fn add_inverse_cancels() {
        let s = q().add(&q().neg());
        assert!(s.is_zero());
    }

    #[test]
    fn add_with_common_denominator() {
        // 1/(1-q^2) + 1 = (2-q^2)/(1-q^2)
        let mut one_minus_q2 = PolyQ::one();
        one_minus_q2.add_term(2, BigInt::from(-1));
        let a = ScalarQ::new(PolyQ::one(), one_minus_q2.clone());
        let s = a.add(&ScalarQ::one());
        let mut num = PolyQ::from_int(2);
        num.add_term(2, BigInt::from(-1));
        // canonical form flips sign: (2-q^2)/(1-q^2) = (q^2-2)/(q^2-1)
        let expect = ScalarQ::new(num, one_minus_q2);
        assert_eq!(s, expect);
    }

    #[test]
    fn laurent_normalization() {
        // q^{-1} + q = (1+q^2)/q ; canonically num = q^{-1}(1+q^2), den = 1
        let s = ScalarQ::qpow(-1).add(&q());
        let mut num = PolyQ::qpow(-1);
        num.add_term(1, BigInt::one());
        assert_eq!(s, ScalarQ::from_poly(num));
    }

    #[test]
    fn units_and_inverse() {
        assert_eq!(ScalarQ::qpow(3).mul(&ScalarQ::qpow(-3)), ScalarQ::one());
        let mut p = PolyQ::one();
        p.add_term(2, BigInt::from(-1));
        let a = ScalarQ::from_poly(p);
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), ScalarQ::one());
        assert_eq!(ScalarQ::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn qfac_values() {
        assert_eq!(qfac(0), ScalarQ::one());
        let mut p1 = PolyQ::one();
        p1.add_term(2, BigInt::from(-1));
        assert_eq!(qfac(1), ScalarQ::from_poly(p1.clone()));
        let mut p2 = PolyQ::one();
        p2.add_term(4, BigInt::from(-1));
        assert_eq!(qfac(2), ScalarQ::from_poly(&p1 * &p2));
    }

    #[test]
    fn eval_examples() {
        let q0 = Complex64::new(1.0 / 3.0, 0.0);
        let a = ScalarQ::qpow(2);
        assert!((a.eval_numeric(q0).unwrap() - Complex64::new(1.0 / 9.0, 0.0)).norm() < 1e-15);
        let mut p = PolyQ::one();
        p.add_term(2, BigInt::from(-1));
        let b = ScalarQ::new(PolyQ::one(), p);
        assert!((b.eval_numeric(q0).unwrap() - Complex64::new(9.0 / 8.0, 0.0)).norm() < 1e-15);
        assert_eq!(
            b.eval_numeric(Complex64::new(1.0, 0.0)),
            Err(ScalarError::EvaluationPole)
        );
    }

    #[test]
    fn as_unit_detects_q_powers() {
        assert_eq!(q().as_unit(), Some((1, 1)));
        assert_eq!(q().neg().as_unit(), Some((-1, 1)));
        assert_eq!(ScalarQ::from_int(2).as_unit(), None);
    }

    #[test]
    fn normalization_is_idempotent() {
        let mut p = PolyQ::qpow(-3);
        p.add_term(1, BigInt::from(2));
        let mut d = PolyQ::qpow(2);
        d.add_term(5, BigInt::from(-4));
        let s = ScalarQ::new(p.clone(), d.clone());
        let s2 = ScalarQ::new(s.num.clone(), s.den.clone());
        assert_eq!(s, s2);
    }
}
