//! Exact-rational windowed operators at rational `q0`: shift-monomial
//! actions, dilogarithm series, and the front-form three-slot solution,
//! with no floating-point cancellation. Used by the checks whose f64
//! evaluation would lose the exact cancellations between large path
//! amplitudes.

use crate::maps::Sign;
use crate::rmatrix::{BasisWindow, RmatrixError};
use crate::scalar::ScalarQ;
use crate::weyl::WeylMonomial;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

pub type Rat = Ratio<BigInt>;

/// Exact model: rational `q0` and integer spectral parameters.
#[derive(Debug, Clone)]
pub struct RatParams {
    pub q0: Rat,
    pub m: Vec<i64>,
}

impl RatParams {
    pub fn new(num: i64, den: i64, m: Vec<i64>) -> Self {
        RatParams { q0: Ratio::new(BigInt::from(num), BigInt::from(den)), m }
    }

    pub fn qpow(&self, e: i64) -> Rat {
        let mut r = Ratio::from_integer(BigInt::one());
        let base = if e >= 0 { self.q0.clone() } else { self.q0.recip() };
        for _ in 0..e.abs() {
            r *= &base;
        }
        r
    }

    /// Exact evaluation of a rational function of q at `q0`.
    pub fn eval_scalar(&self, s: &ScalarQ) -> Rat {
        let eval_poly = |p: &crate::scalar::PolyQ| -> Rat {
            let mut acc = Ratio::from_integer(BigInt::zero());
            for (e, c) in p.terms() {
                acc += Ratio::from_integer(c.clone()) * self.qpow(*e);
            }
            acc
        };
        eval_poly(s.num()) / eval_poly(s.den())
    }
}

/// Sparse exact state over lattice tuples.
#[derive(Debug, Clone, Default)]
pub struct RatState {
    pub amp: BTreeMap<Vec<i64>, Rat>,
}

impl RatState {
    pub fn basis(t: &[i64]) -> Self {
        let mut amp = BTreeMap::new();
        amp.insert(t.to_vec(), Ratio::from_integer(BigInt::one()));
        RatState { amp }
    }

    pub fn add(&mut self, t: Vec<i64>, a: Rat) {
        if a.is_zero() {
            return;
        }
        let remove = {
            let e = self.amp.entry(t.clone()).or_insert_with(|| Ratio::from_integer(BigInt::zero()));
            *e += a;
            e.is_zero()
        };
        if remove {
            self.amp.remove(&t);
        }
    }

    pub fn get(&self, t: &[i64]) -> Rat {
        self.amp.get(t).cloned().unwrap_or_else(|| Ratio::from_integer(BigInt::zero()))
    }
}

/// Exact lattice monomial operator `scalar . e^{a.u} e^{b.w}`.
#[derive(Debug, Clone)]
pub struct RatMonomialOp {
    pub scalar: Rat,
    pub uexp: Vec<i64>,
    pub wexp: Vec<i64>,
}

impl RatMonomialOp {
    pub fn from_weyl(m: &WeylMonomial, params: &RatParams) -> Self {
        let mut scalar = params.eval_scalar(&m.coeff);
        for (i, &k) in m.kexp.iter().enumerate() {
            scalar *= params.qpow(2 * params.m[i] * k);
        }
        RatMonomialOp { scalar, uexp: m.uexp.clone(), wexp: m.wexp.clone() }
    }

    pub fn is_shift(&self) -> bool {
        self.uexp.iter().any(|&a| a != 0)
    }

    pub fn apply_basis(&self, t: &[i64], params: &RatParams) -> (Vec<i64>, Rat) {
        let mut e = 0i64;
        for (b, v) in self.wexp.iter().zip(t) {
            e += 2 * b * v;
        }
        let out: Vec<i64> = t.iter().zip(&self.uexp).map(|(v, a)| v - a).collect();
        (out, &self.scalar * params.qpow(e))
    }

    pub fn apply_state(
        &self,
        s: &RatState,
        params: &RatParams,
        window: &BasisWindow,
        clipped: &mut bool,
    ) -> RatState {
        let mut out = RatState::default();
        for (t, a) in &s.amp {
            let (tt, c) = self.apply_basis(t, params);
            if tt.iter().all(|v| window.contains(*v)) {
                out.add(tt, a * c);
            } else {
                *clipped = true;
            }
        }
        out
    }
}

/// Exact series coefficient of `Psi_q^{eps}` at order `n`.
pub fn rat_psi_coeff(n: usize, eps: Sign, params: &RatParams) -> Rat {
    let mut den = Ratio::from_integer(BigInt::one());
    for j in 1..=n as i64 {
        den *= Ratio::from_integer(BigInt::one()) - params.qpow(2 * j);
    }
    let num = match eps {
        Sign::Plus => {
            let v = params.qpow(n as i64);
            if n % 2 == 1 {
                -v
            } else {
                v
            }
        }
        Sign::Minus => params.qpow((n * n) as i64),
    };
    num / den
}

/// Applies `Psi_q(M)^{eps}` exactly for a shift monomial: every matrix
/// entry receives exactly one series order within the window.
pub fn rat_psi_apply(
    m: &RatMonomialOp,
    eps: Sign,
    s: &RatState,
    params: &RatParams,
    window: &BasisWindow,
    clipped: &mut bool,
) -> Result<RatState, RmatrixError> {
    if !m.is_shift() {
        return Err(RmatrixError::UnsupportedVariant);
    }
    let span = (window.hi - window.lo + 1) as usize + 2;
    let mut acc = RatState::default();
    let mut cur = s.clone();
    for n in 0..=span {
        let c = rat_psi_coeff(n, eps, params);
        for (t, a) in &cur.amp {
            acc.add(t.clone(), a * &c);
        }
        cur = m.apply_state(&cur, params, window, clipped);
        if cur.amp.is_empty() {
            break;
        }
    }
    Ok(acc)
}

/// Exact front-form application of the three-slot solution:
/// all four dilogarithm arguments are shift monomials.
#[allow(clippy::too_many_arguments)]
pub fn rat_r_apply(
    slots: [usize; 3],
    lam: [usize; 3],
    params: &RatParams,
    s: &RatState,
    window: &BasisWindow,
    clipped: &mut bool,
) -> Result<RatState, RmatrixError> {
    let n = s.amp.keys().next().map(|t| t.len()).unwrap_or(6).max(params.m.len());
    let (si, sj, sk) = (slots[0], slots[1], slots[2]);
    let (li, lj, lk) = (lam[0], lam[1], lam[2]);
    let mono = |us: &[(usize, i64)], ws: &[(usize, i64)], ks: &[(usize, i64)]| -> RatMonomialOp {
        let mut m = WeylMonomial::unit(n);
        for &(p, e) in us {
            m.uexp[p] += e;
        }
        for &(p, e) in ws {
            m.wexp[p] += e;
        }
        for &(p, e) in ks {
            m.kexp[p] += e;
        }
        let ab: i64 = m.uexp.iter().zip(&m.wexp).map(|(a, b)| a * b).sum();
        m.coeff = ScalarQ::qpow(-ab);
        RatMonomialOp::from_weyl(&m, params)
    };
    // P first, then the four shift dilogarithms
    let r = params.m[lj] - params.m[lk];
    let mut p1 = RatState::default();
    for (t, a) in &s.amp {
        let (i, j, k) = (t[si], t[sj], t[sk]);
        let (aa, bb, cc) = (i + j - k + r, k - r, j);
        let phase = (bb - cc) * (bb - cc - 2 * i) - 2 * r * i;
        let mut out = t.clone();
        out[si] = aa;
        out[sj] = bb;
        out[sk] = cc;
        if out.iter().all(|v| window.contains(*v)) {
            p1.add(out, a * params.qpow(phase));
        } else {
            *clipped = true;
        }
    }
    let g4 = mono(&[(si, 1), (sj, -1)], &[(sj, 1), (sk, -1)], &[(li, 1), (lk, -1)]);
    let g3 = mono(&[(si, 1), (sj, -1)], &[], &[(li, 1)]);
    let g2 = mono(&[(sk, 1)], &[(si, -1), (sj, -1), (sk, 1)], &[(lk, 1)]);
    let g1 = mono(&[(sk, 1)], &[(si, -1)], &[]);
    let s1 = rat_psi_apply(&g4, Sign::Plus, &p1, params, window, clipped)?;
    let s2 = rat_psi_apply(&g3, Sign::Plus, &s1, params, window, clipped)?;
    let s3 = rat_psi_apply(&g2, Sign::Minus, &s2, params, window, clipped)?;
    rat_psi_apply(&g1, Sign::Minus, &s3, params, window, clipped)
}

/// Transposed exact application for bra vectors.
pub fn rat_r_apply_bra(
    slots: [usize; 3],
    lam: [usize; 3],
    params: &RatParams,
    s: &RatState,
    window: &BasisWindow,
    clipped: &mut bool,
) -> Result<RatState, RmatrixError> {
    let n = s.amp.keys().next().map(|t| t.len()).unwrap_or(6).max(params.m.len());
    let (si, sj, sk) = (slots[0], slots[1], slots[2]);
    let (li, lj, lk) = (lam[0], lam[1], lam[2]);
    let mono = |us: &[(usize, i64)], ws: &[(usize, i64)], ks: &[(usize, i64)]| -> RatMonomialOp {
        let mut m = WeylMonomial::unit(n);
        for &(p, e) in us {
            m.uexp[p] += e;
        }
        for &(p, e) in ws {
            m.wexp[p] += e;
        }
        for &(p, e) in ks {
            m.kexp[p] += e;
        }
        let ab: i64 = m.uexp.iter().zip(&m.wexp).map(|(a, b)| a * b).sum();
        m.coeff = ScalarQ::qpow(-ab);
        RatMonomialOp::from_weyl(&m, params)
    };
    let transpose = |op: &RatMonomialOp| -> RatMonomialOp {
        let dot: i64 = op.uexp.iter().zip(&op.wexp).map(|(a, b)| a * b).sum();
        RatMonomialOp {
            scalar: &op.scalar * params.qpow(2 * dot),
            uexp: op.uexp.iter().map(|a| -a).collect(),
            wexp: op.wexp.clone(),
        }
    };
    let g4 = mono(&[(si, 1), (sj, -1)], &[(sj, 1), (sk, -1)], &[(li, 1), (lk, -1)]);
    let g3 = mono(&[(si, 1), (sj, -1)], &[], &[(li, 1)]);
    let g2 = mono(&[(sk, 1)], &[(si, -1), (sj, -1), (sk, 1)], &[(lk, 1)]);
    let g1 = mono(&[(sk, 1)], &[(si, -1)], &[]);
    // R = Psi^-(g1) Psi^-(g2) Psi^+(g3) Psi^+(g4) P
    // R^T = P^T Psi^+(g4)^T Psi^+(g3)^T Psi^-(g2)^T Psi^-(g1)^T
    let s1 = rat_psi_apply(&transpose(&g1), Sign::Minus, s, params, window, clipped)?;
    let s2 = rat_psi_apply(&transpose(&g2), Sign::Minus, &s1, params, window, clipped)?;
    let s3 = rat_psi_apply(&transpose(&g3), Sign::Plus, &s2, params, window, clipped)?;
    let s4 = rat_psi_apply(&transpose(&g4), Sign::Plus, &s3, params, window, clipped)?;
    // P^T |a,b,c> = q^{phase(i,j,k)} |i,j,k>, i = a+b-c, j = c, k = b+r
    let r = params.m[lj] - params.m[lk];
    let mut out = RatState::default();
    for (t, amp) in &s4.amp {
        let (a, b, c) = (t[si], t[sj], t[sk]);
        let (i, j, k) = (a + b - c, c, b + r);
        let phase = (b - c) * (b - c - 2 * i) - 2 * r * i;
        let mut o = t.clone();
        o[si] = i;
        o[sj] = j;
        o[sk] = k;
        if o.iter().all(|v| window.contains(*v)) {
            out.add(o, amp * params.qpow(phase));
        } else {
            *clipped = true;
        }
    }
    Ok(out)
}

pub fn rat_dot(bra: &RatState, ket: &RatState) -> Rat {
    let mut s = Ratio::from_integer(BigInt::zero());
    for (t, a) in &bra.amp {
        let k = ket.get(t);
        if !k.is_zero() {
            s += a * k;
        }
    }
    s
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Relative deviation of two exact rationals, as f64.
pub fn rat_rel_dev(a: &Rat, b: &Rat) -> f64 {
    let d = a - b;
    if d.is_zero() {
        return 0.0;
    }
    let denom = [a.abs(), b.abs(), Ratio::from_integer(BigInt::one())]
        .into_iter()
        .max()
        .unwrap();
    rat_to_f64(&(d.abs() / denom))
}

/// Integer-only amplitudes for deep window runs: every amplitude is
/// `num . 3^{e3} / (q^2;q^2)_N^{depth}` with the Pochhammer depth shared
/// by the whole state, so no gcd reduction ever runs.
pub mod q3 {
    use super::*;

    /// Precomputed integer data of `(q^2;q^2)_n` at `q = 1/3`:
    /// `(q^2;q^2)_n = pnum[n] / 3^{pexp[n]}` and the lift cofactors
    /// `(q^2;q^2)_N/(q^2;q^2)_n = lift[n] / 3^{lexp[n]}`.
    pub struct PochTable {
        pub n_max: usize,
        pub lift: Vec<BigInt>,
        pub lexp: Vec<i64>,
    }

    impl PochTable {
        pub fn new(n_max: usize) -> Self {
            // (q^2;q^2)_n = prod_{j=1..n} (1 - 3^{-2j})
            //            = prod (3^{2j} - 1) / 3^{n(n+1)}
            let mut pnum = vec![BigInt::one()];
            for j in 1..=n_max as i64 {
                let f = BigInt::from(3).pow(2 * j as u32) - BigInt::one();
                pnum.push(pnum.last().unwrap() * f);
            }
            // lift[n] = pnum[N]/pnum[n], lexp[n] = -(N(N+1) - n(n+1))
            let nn = n_max as i64;
            let lift: Vec<BigInt> = (0..=n_max).map(|n| &pnum[n_max] / &pnum[n]).collect();
            let lexp: Vec<i64> = (0..=n_max as i64).map(|n| -(nn * (nn + 1) - n * (n + 1))).collect();
            PochTable { n_max, lift, lexp }
        }

        /// The series coefficient of `Psi^{eps}` at order `n`, lifted to
        /// the common denominator: returns `(integer, power of 3)` with
        /// value `coeff . (q^2;q^2)_N`.
        pub fn lifted_psi_coeff(&self, n: usize, eps: Sign) -> (BigInt, i64) {
            // +: (-q)^n / (q^2)_n ; -: q^{n^2} / (q^2)_n
            let (sign, qe) = match eps {
                Sign::Plus => (if n % 2 == 1 { -1 } else { 1 }, n as i64),
                Sign::Minus => (1, (n * n) as i64),
            };
            let num = if sign < 0 { -&self.lift[n] } else { self.lift[n].clone() };
            (num, -qe + self.lexp[n])
        }
    }

    /// Integer amplitude: `num . 3^{e3}` relative to the state's shared
    /// Pochhammer depth.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct Amp {
        pub num: BigInt,
        pub e3: i64,
    }

    impl Amp {
        pub fn zero() -> Self {
            Amp { num: BigInt::zero(), e3: 0 }
        }

        pub fn one() -> Self {
            Amp { num: BigInt::one(), e3: 0 }
        }

        pub fn is_zero(&self) -> bool {
            self.num.is_zero()
        }

        pub fn add_assign(&mut self, rhs: &Amp) {
            if rhs.num.is_zero() {
                return;
            }
            if self.num.is_zero() {
                *self = rhs.clone();
                return;
            }
            // align 3-powers
            if self.e3 <= rhs.e3 {
                let shift = (rhs.e3 - self.e3) as u32;
                self.num += &rhs.num * BigInt::from(3).pow(shift);
            } else {
                let shift = (self.e3 - rhs.e3) as u32;
                self.num = &self.num * BigInt::from(3).pow(shift) + &rhs.num;
                self.e3 = rhs.e3;
            }
        }

        pub fn mul_int(&self, c: &BigInt, e3: i64) -> Amp {
            Amp { num: &self.num * c, e3: self.e3 + e3 }
        }

        pub fn qpow(&self, e: i64) -> Amp {
            Amp { num: self.num.clone(), e3: self.e3 - e }
        }

        /// Value divided by the shared denominator power.
        pub fn to_rat(&self, depth: u32, table: &PochTable) -> Rat {
            let mut den = BigInt::one();
            let mut dexp = 0i64;
            for _ in 0..depth {
                den *= &table.lift[0];
                dexp += table.lexp[0];
            }
            let three = Ratio::from_integer(BigInt::from(3));
            let mut pw = Ratio::from_integer(BigInt::one());
            let e = self.e3 - dexp;
            if e >= 0 {
                for _ in 0..e {
                    pw *= &three;
                }
            } else {
                for _ in 0..(-e) {
                    pw /= &three;
                }
            }
            Ratio::new(self.num.clone(), den) * pw
        }
    }

    /// Sparse integer state with a shared Pochhammer depth.
    #[derive(Debug, Clone, Default)]
    pub struct Q3State {
        pub amp: std::collections::HashMap<Vec<i64>, Amp>,
        pub depth: u32,
    }

    impl Q3State {
        pub fn basis(t: &[i64]) -> Self {
            let mut amp = std::collections::HashMap::new();
            amp.insert(t.to_vec(), Amp::one());
            Q3State { amp, depth: 0 }
        }

        pub fn add(&mut self, t: Vec<i64>, a: Amp) {
            if a.is_zero() {
                return;
            }
            let e = self.amp.entry(t).or_insert_with(Amp::zero);
            e.add_assign(&a);
        }

        pub fn get(&self, t: &[i64]) -> Amp {
            self.amp.get(t).cloned().unwrap_or_else(Amp::zero)
        }
    }

    /// Monomial application with clipping.
    pub fn apply_monomial(
        op: &RatMonomialOp,
        op_num: &BigInt,
        op_e3: i64,
        s: &Q3State,
        window: &BasisWindow,
    ) -> Q3State {
        let mut out = Q3State { amp: Default::default(), depth: s.depth };
        for (t, a) in &s.amp {
            let mut e = 0i64;
            for (b, v) in op.wexp.iter().zip(t) {
                e += 2 * b * v;
            }
            let tt: Vec<i64> = t.iter().zip(&op.uexp).map(|(v, u)| v - u).collect();
            if tt.iter().all(|v| window.contains(*v)) {
                out.add(tt, a.mul_int(op_num, op_e3 - e));
            }
        }
        out
    }

    /// Rationalizes a monomial scalar as `(integer, 3-power)`; the
    /// operator scalars here are plain signed powers of 3.
    pub fn op_scalar(op: &RatMonomialOp) -> (BigInt, i64) {
        let num = op.scalar.numer().clone();
        let den = op.scalar.denom();
        // denominators are powers of three by construction
        let mut d = den.clone();
        let mut k = 0i64;
        let three = BigInt::from(3);
        while (&d % &three).is_zero() {
            d /= &three;
            k += 1;
        }
        assert!(d.abs() == BigInt::one(), "non-3-smooth scalar");
        let mut n = num;
        if d < BigInt::zero() {
            n = -n;
        }
        // pull 3-powers out of the numerator too
        let mut e = -k;
        while !n.is_zero() && (&n % &three).is_zero() {
            n /= &three;
            e += 1;
        }
        (n, e)
    }

    /// `Psi^{eps}(M)` on a state: increments the shared depth.
    pub fn psi_apply(
        m: &RatMonomialOp,
        eps: Sign,
        s: &Q3State,
        window: &BasisWindow,
        table: &PochTable,
    ) -> Q3State {
        assert!(m.uexp.iter().any(|&a| a != 0), "shift monomial expected");
        let (mn, me) = op_scalar(m);
        let span = (window.hi - window.lo + 1) as usize + 2;
        let mut acc = Q3State { amp: Default::default(), depth: s.depth + 1 };
        let mut cur = s.clone();
        for n in 0..=span.min(table.n_max) {
            let (cn, ce) = table.lifted_psi_coeff(n, eps);
            for (t, a) in &cur.amp {
                acc.add(t.clone(), a.mul_int(&cn, ce));
            }
            cur = apply_monomial(m, &mn, me, &cur, window);
            if cur.amp.is_empty() {
                break;
            }
        }
        acc
    }
}
