//! The q-Weyl realization: canonical variables, the graphical
//! parameterization of Y-variables, affine symplectic transformations of
//! the canonical variables, and their realization as adjoint actions of
//! quadratic-exponential elements.

use crate::cluster::SquareQuiver;
use crate::maps::{MapsError, MonomialMap, SignTuple};
use crate::scalar::ScalarQ;
use crate::torus::TorusMonomial;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rat = Ratio<BigInt>;

fn rat(n: i64) -> Rat {
    Ratio::from_integer(BigInt::from(n))
}

/// Rational from an integer.
pub fn rat_from(n: i64) -> Rat {
    rat(n)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("operands live over different ranks")]
    ShapeMismatch,
    #[error("no affine transformation matches the monomial map")]
    NoAffineSolution,
    #[error("the sign tuple admits no quadratic-exponential realization")]
    NotRealizable,
    #[error("the quadratic part is not nilpotent as a derivation")]
    NonNilpotent,
    #[error("a half-integer power of q arose")]
    HalfPowerUnsupported,
    #[error(transparent)]
    Maps(#[from] MapsError),
}

/// Normal-ordered monomial `coeff . kappa^k . e^{a.u} e^{b.w}` over `n`
/// canonical pairs, with central `kappa_i = e^{lambda_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylMonomial {
    pub coeff: ScalarQ,
    pub uexp: Vec<i64>,
    pub wexp: Vec<i64>,
    pub kexp: Vec<i64>,
}

impl WeylMonomial {
    pub fn unit(n: usize) -> Self {
        WeylMonomial {
            coeff: ScalarQ::one(),
            uexp: vec![0; n],
            wexp: vec![0; n],
            kexp: vec![0; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.uexp.len()
    }

    /// `e^{a1 u} e^{b1 w} . e^{a2 u} e^{b2 w} = q^{-2 a2.b1} e^{(a1+a2)u} e^{(b1+b2)w}`.
    pub fn mul(&self, rhs: &WeylMonomial) -> WeylMonomial {
        let cross: i64 = rhs.uexp.iter().zip(&self.wexp).map(|(a, b)| a * b).sum();
        WeylMonomial {
            coeff: self.coeff.mul(&rhs.coeff).mul(&ScalarQ::qpow(-2 * cross)),
            uexp: self.uexp.iter().zip(&rhs.uexp).map(|(x, y)| x + y).collect(),
            wexp: self.wexp.iter().zip(&rhs.wexp).map(|(x, y)| x + y).collect(),
            kexp: self.kexp.iter().zip(&rhs.kexp).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn inv(&self) -> WeylMonomial {
        let cross: i64 = self.uexp.iter().zip(&self.wexp).map(|(a, b)| a * b).sum();
        WeylMonomial {
            coeff: self.coeff.inv().expect("unit coefficient").mul(&ScalarQ::qpow(-2 * cross)),
            uexp: self.uexp.iter().map(|x| -x).collect(),
            wexp: self.wexp.iter().map(|x| -x).collect(),
            kexp: self.kexp.iter().map(|x| -x).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> WeylMonomial {
        let mut acc = WeylMonomial::unit(self.rank());
        let base = if k >= 0 { self.clone() } else { self.inv() };
        for _ in 0..k.abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

/// Finite sum of normal-ordered monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub rank: usize,
    pub terms: Vec<WeylMonomial>,
}

impl WeylElement {
    pub fn from_monomial(m: &WeylMonomial) -> Self {
        WeylElement { rank: m.rank(), terms: vec![m.clone()] }
    }

    pub fn mul(&self, rhs: &WeylElement) -> Result<WeylElement, WeylError> {
        if self.rank != rhs.rank {
            return Err(WeylError::ShapeMismatch);
        }
        let mut terms: Vec<WeylMonomial> = Vec::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let m = a.mul(b);
                if let Some(t) = terms
                    .iter_mut()
                    .find(|t| t.uexp == m.uexp && t.wexp == m.wexp && t.kexp == m.kexp)
                {
                    t.coeff = t.coeff.add(&m.coeff);
                } else {
                    terms.push(m);
                }
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Ok(WeylElement { rank: self.rank, terms })
    }
}

/// The graphical parameterization: the image of each quiver vertex as a
/// q-Weyl monomial, from the crossing adjacency and the per-crossing
/// spectral slot (0-based).
pub fn phi_images(quiver: &SquareQuiver, slots: &[usize], n: usize) -> Vec<WeylMonomial> {
    use crate::cluster::Role;
    let mut out = Vec::new();
    for v in 0..quiver.vertex_count() {
        let mut m = WeylMonomial::unit(n);
        for (c, role) in quiver.crossings_of(v) {
            let i = slots[c];
            match role {
                Role::NW => {
                    m.wexp[i] -= 1;
                    m.kexp[i] -= 1;
                }
                Role::NE => {
                    m.uexp[i] += 1;
                    m.kexp[i] += 1;
                }
                Role::SW => {
                    m.uexp[i] -= 1;
                }
                Role::SE => {
                    m.wexp[i] += 1;
                }
            }
        }
        out.push(m);
    }
    out
}

/// The morphism from a torus to the q-Weyl algebra defined by generator
/// images.
#[derive(Debug, Clone)]
pub struct PhiMap {
    pub images: Vec<WeylMonomial>,
    pub source: crate::cluster::ExchangeMatrix,
}

impl PhiMap {
    /// Image of a torus monomial: ordered product of generator images
    /// with the source normal-ordering correction.
    pub fn apply(&self, m: &TorusMonomial) -> WeylMonomial {
        let form = crate::torus::SkewForm::new(self.source.clone());
        let nn = self.source.rank();
        let mut npow = 0i64;
        for i in 0..nn {
            for j in (i + 1)..nn {
                if m.exponent[i] != 0 && m.exponent[j] != 0 {
                    let mut ei = vec![0i64; nn];
                    ei[i] = 1;
                    let mut ej = vec![0i64; nn];
                    ej[j] = 1;
                    npow += m.exponent[i] * m.exponent[j] * form.pairing(&ei, &ej);
                }
            }
        }
        let n = self.images[0].rank();
        let mut acc = WeylMonomial::unit(n);
        acc.coeff = m.coeff.mul(&ScalarQ::qpow(npow));
        for (i, img) in self.images.iter().enumerate() {
            if m.exponent[i] != 0 {
                acc = acc.mul(&img.pow(m.exponent[i]));
            }
        }
        acc
    }

    /// Checks the morphism property against the source q-commutations.
    pub fn is_morphism(&self) -> bool {
        let nn = self.source.rank();
        for i in 0..nn {
            for j in 0..nn {
                let ab = self.images[i].mul(&self.images[j]);
                let mut ba = self.images[j].mul(&self.images[i]);
                ba.coeff = ba.coeff.mul(&ScalarQ::qpow(2 * self.source.get(i, j)));
                if ab != ba {
                    return false;
                }
            }
        }
        true
    }
}

/// A scalar that is affine in the spectral parameters:
/// `sum_i c_i lambda_i + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineScalar {
    pub lambda: Vec<Rat>,
    pub constant: Rat,
}

impl AffineScalar {
    pub fn zero(n: usize) -> Self {
        AffineScalar { lambda: vec![rat(0); n], constant: rat(0) }
    }

    pub fn lambda_unit(n: usize, i: usize) -> Self {
        let mut s = AffineScalar::zero(n);
        s.lambda[i] = rat(1);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.iter().all(|c| c.is_zero()) && self.constant.is_zero()
    }

    pub fn add(&self, rhs: &AffineScalar) -> AffineScalar {
        AffineScalar {
            lambda: self.lambda.iter().zip(&rhs.lambda).map(|(a, b)| a + b).collect(),
            constant: &self.constant + &rhs.constant,
        }
    }

    pub fn scale(&self, c: &Rat) -> AffineScalar {
        AffineScalar {
            lambda: self.lambda.iter().map(|a| a * c).collect(),
            constant: &self.constant * c,
        }
    }
}

/// Linear form in the canonical variables with a lambda-affine part:
/// `sum (u_i coeff) u_i + sum (w_i coeff) w_i + scalar`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub u: Vec<Rat>,
    pub w: Vec<Rat>,
    pub scalar: AffineScalar,
}

impl LinearForm {
    pub fn zero(n: usize) -> Self {
        LinearForm { u: vec![rat(0); n], w: vec![rat(0); n], scalar: AffineScalar::zero(n) }
    }

    pub fn u_var(n: usize, i: usize) -> Self {
        let mut f = LinearForm::zero(n);
        f.u[i] = rat(1);
        f
    }

    pub fn w_var(n: usize, i: usize) -> Self {
        let mut f = LinearForm::zero(n);
        f.w[i] = rat(1);
        f
    }

    pub fn lambda_var(n: usize, i: usize) -> Self {
        let mut f = LinearForm::zero(n);
        f.scalar = AffineScalar::lambda_unit(n, i);
        f
    }

    pub fn rank(&self) -> usize {
        self.u.len()
    }

    pub fn add(&self, rhs: &LinearForm) -> LinearForm {
        LinearForm {
            u: self.u.iter().zip(&rhs.u).map(|(a, b)| a + b).collect(),
            w: self.w.iter().zip(&rhs.w).map(|(a, b)| a + b).collect(),
            scalar: self.scalar.add(&rhs.scalar),
        }
    }

    pub fn sub(&self, rhs: &LinearForm) -> LinearForm {
        self.add(&rhs.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> LinearForm {
        LinearForm {
            u: self.u.iter().map(|a| a * c).collect(),
            w: self.w.iter().map(|a| a * c).collect(),
            scalar: self.scalar.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(|c| c.is_zero())
            && self.w.iter().all(|c| c.is_zero())
            && self.scalar.is_zero()
    }

    /// Symplectic pairing `[f, g]/2hbar`, a rational number
    /// (`[u_i, w_j] = 2hbar delta_{ij}`; lambda and constants are central).
    pub fn pairing(&self, rhs: &LinearForm) -> Rat {
        let mut s = rat(0);
        for i in 0..self.rank() {
            s += &self.u[i] * &rhs.w[i];
            s -= &self.w[i] * &rhs.u[i];
        }
        s
    }
}

/// Affine transformation of the canonical variables: each `u_i`, `w_i`
/// maps to a linear form (whose scalar part is the lambda-affine shift).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSymplecticMap {
    pub n: usize,
    /// images of `u_1..u_n` then `w_1..w_n`
    pub images: Vec<LinearForm>,
}

impl AffineSymplecticMap {
    pub fn identity(n: usize) -> Self {
        let mut images = Vec::new();
        for i in 0..n {
            images.push(LinearForm::u_var(n, i));
        }
        for i in 0..n {
            images.push(LinearForm::w_var(n, i));
        }
        AffineSymplecticMap { n, images }
    }

    pub fn image_u(&self, i: usize) -> &LinearForm {
        &self.images[i]
    }

    pub fn image_w(&self, i: usize) -> &LinearForm {
        &self.images[self.n + i]
    }

    /// Applies the map to a linear form.
    pub fn apply(&self, f: &LinearForm) -> LinearForm {
        let mut out = LinearForm::zero(self.n);
        out.scalar = f.scalar.clone();
        for i in 0..self.n {
            if !f.u[i].is_zero() {
                out = out.add(&self.images[i].scale(&f.u[i]));
            }
            if !f.w[i].is_zero() {
                out = out.add(&self.images[self.n + i].scale(&f.w[i]));
            }
        }
        out
    }

    /// `self . inner` (apply `inner` first).
    pub fn compose(&self, inner: &AffineSymplecticMap) -> AffineSymplecticMap {
        AffineSymplecticMap {
            n: self.n,
            images: inner.images.iter().map(|f| self.apply(f)).collect(),
        }
    }

    /// The commutation pairing is preserved exactly.
    pub fn preserves_pairing(&self) -> bool {
        for i in 0..2 * self.n {
            for j in 0..2 * self.n {
                let fi = &self.images[i];
                let fj = &self.images[j];
                let want = if j == i + self.n && i < self.n {
                    rat(1)
                } else if i == j + self.n && j < self.n {
                    rat(-1)
                } else {
                    rat(0)
                };
                if fi.pairing(fj) != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Solves for the affine map `F` with `phi . tau = F . phi` on all
/// generators, given the generator exponents on both sides.
pub fn solve_affine_from_phi(
    phi_src: &PhiMap,
    phi_tgt: &PhiMap,
    tau: &MonomialMap,
    n: usize,
) -> Result<AffineSymplecticMap, WeylError> {
    // each source generator r gives: sum_j a'_rj F(u_j) + b'_rj F(w_j)
    //   = (uw-part of phi_tgt(tau(Y'_r))) + (m_r - m'_r) lambda
    let gens = tau.rank();
    let mut rows: Vec<Vec<Rat>> = Vec::new(); // gens x 2n
    let mut rhs: Vec<LinearForm> = Vec::new();
    for r in 0..gens {
        let src = &phi_src.images[r];
        let img = phi_tgt.apply(&tau.images[r]);
        let mut row = Vec::with_capacity(2 * n);
        for j in 0..n {
            row.push(rat(src.uexp[j]));
        }
        for j in 0..n {
            row.push(rat(src.wexp[j]));
        }
        rows.push(row);
        let mut f = LinearForm::zero(n);
        for j in 0..n {
            f.u[j] = rat(img.uexp[j]);
            f.w[j] = rat(img.wexp[j]);
            f.scalar.lambda[j] = rat(img.kexp[j] - src.kexp[j]);
        }
        rhs.push(f);
    }
    // solve rows . X = rhs for the 2n unknown linear forms X_k
    let unknowns = solve_linear_forms(&rows, &rhs, 2 * n, n)?;
    Ok(AffineSymplecticMap { n, images: unknowns })
}

/// Gaussian solve of an overdetermined rational system whose unknowns are
/// linear forms.
fn solve_linear_forms(
    rows: &[Vec<Rat>],
    rhs: &[LinearForm],
    k: usize,
    n: usize,
) -> Result<Vec<LinearForm>, WeylError> {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut b: Vec<LinearForm> = rhs.to_vec();
    let m = a.len();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..k {
        let p = (row..m).find(|&r| !a[r][col].is_zero());
        let Some(p) = p else { continue };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].clone();
        for c in 0..k {
            a[row][c] = &a[row][c] / &inv;
        }
        b[row] = b[row].scale(&(rat(1) / inv));
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..k {
                    let v = &a[row][c] * &f;
                    a[r][c] = &a[r][c] - &v;
                }
                let v = b[row].scale(&f);
                b[r] = b[r].sub(&v);
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == m {
            break;
        }
    }
    if pivots.len() < k {
        return Err(WeylError::NoAffineSolution);
    }
    // consistency: remaining rows must have zero rhs
    for r in row..m {
        if !b[r].is_zero() {
            return Err(WeylError::NoAffineSolution);
        }
    }
    let mut out = vec![LinearForm::zero(n); k];
    for (r, c) in pivots {
        out[c] = b[r].clone();
    }
    Ok(out)
}

/// Quadratic element: a weighted sum of products of two linear forms,
/// divided by `2 hbar` inside the exponential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad {
    pub terms: Vec<(LinearForm, LinearForm, Rat)>,
}

impl Quad {
    pub fn zero() -> Self {
        Quad { terms: Vec::new() }
    }

    /// The derivation `v -> [X/2hbar, v]` on linear forms.
    pub fn derive(&self, v: &LinearForm) -> LinearForm {
        let n = v.rank();
        let mut out = LinearForm::zero(n);
        for (f, g, wgt) in &self.terms {
            let a = g.pairing(v); // [g, v]/2hbar
            if !a.is_zero() {
                out = out.add(&f.scale(&(&a * wgt)));
            }
            let b = f.pairing(v);
            if !b.is_zero() {
                out = out.add(&g.scale(&(&b * wgt)));
            }
        }
        out
    }

    /// `exp(ad(X/2hbar))` as an affine map; errors if the derivation is
    /// not nilpotent within `2n + 1` steps.
    pub fn exp_ad(&self, n: usize) -> Result<AffineSymplecticMap, WeylError> {
        let mut images = Vec::new();
        let basis: Vec<LinearForm> = (0..n)
            .map(|i| LinearForm::u_var(n, i))
            .chain((0..n).map(|i| LinearForm::w_var(n, i)))
            .collect();
        for v in &basis {
            let mut total = v.clone();
            let mut cur = v.clone();
            let mut fact = rat(1);
            let mut converged = false;
            for k in 1..=(2 * n as i64 + 2) {
                cur = self.derive(&cur);
                fact *= rat(k);
                if cur.is_zero() {
                    converged = true;
                    break;
                }
                total = total.add(&cur.scale(&(rat(1) / fact.clone())));
            }
            if !converged {
                return Err(WeylError::NonNilpotent);
            }
            images.push(total);
        }
        Ok(AffineSymplecticMap { n, images })
    }

    /// Largest `k` with `ad^k != 0` on the canonical span.
    pub fn nilpotency_order(&self, n: usize) -> Option<u32> {
        let basis: Vec<LinearForm> = (0..n)
            .map(|i| LinearForm::u_var(n, i))
            .chain((0..n).map(|i| LinearForm::w_var(n, i)))
            .collect();
        let mut order = 0u32;
        for v in &basis {
            let mut cur = v.clone();
            let mut k = 0u32;
            loop {
                cur = self.derive(&cur);
                if cur.is_zero() {
                    break;
                }
                k += 1;
                if k > 2 * n as u32 + 2 {
                    return None;
                }
            }
            order = order.max(k);
        }
        Some(order)
    }
}

/// Quadratic-exponential x signed-permutation x linear-exponential
/// element, acting by conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PElement {
    pub n: usize,
    pub x: Quad,
    pub rho: AffineSymplecticMap,
    pub l: Quad,
}

impl PElement {
    pub fn identity(n: usize) -> Self {
        PElement {
            n,
            x: Quad::zero(),
            rho: AffineSymplecticMap::identity(n),
            l: Quad::zero(),
        }
    }

    /// The induced affine action `Ad(e^{X/2h}) . Ad(rho) . Ad(e^{L/2h})`.
    pub fn ad(&self) -> Result<AffineSymplecticMap, WeylError> {
        let ex = self.x.exp_ad(self.n)?;
        let el = self.l.exp_ad(self.n)?;
        Ok(ex.compose(&self.rho).compose(&el))
    }
}

/// One of the four per-slot moves preserving the commutation relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotMove {
    /// (u, w) -> (u, w)
    Id,
    /// (u, w) -> (w, -u)
    WU,
    /// (u, w) -> (-w, u)
    NwU,
    /// (u, w) -> (-u, -w)
    Neg,
}

impl SlotMove {
    pub const ALL: [SlotMove; 4] = [SlotMove::Id, SlotMove::WU, SlotMove::NwU, SlotMove::Neg];
}

/// Builds the signed-permutation automorphism: slot `i` maps onto slot
/// `perm[i]` after the per-slot move.
pub fn signed_permutation(n: usize, perm: &[usize], moves: &[SlotMove]) -> AffineSymplecticMap {
    let mut images = vec![LinearForm::zero(n); 2 * n];
    for i in 0..n {
        let j = perm[i];
        let (iu, iw) = match moves[i] {
            SlotMove::Id => (LinearForm::u_var(n, j), LinearForm::w_var(n, j)),
            SlotMove::WU => (
                LinearForm::w_var(n, j),
                LinearForm::u_var(n, j).scale(&rat(-1)),
            ),
            SlotMove::NwU => (
                LinearForm::w_var(n, j).scale(&rat(-1)),
                LinearForm::u_var(n, j),
            ),
            SlotMove::Neg => (
                LinearForm::u_var(n, j).scale(&rat(-1)),
                LinearForm::w_var(n, j).scale(&rat(-1)),
            ),
        };
        images[i] = iu;
        images[n + i] = iw;
    }
    AffineSymplecticMap { n, images }
}

/// All 384 elements of the search group for rank 3.
pub fn search_group(n: usize) -> Vec<AffineSymplecticMap> {
    let mut perms = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    permute(&mut idx, 0, &mut perms);
    let mut out = Vec::new();
    for p in &perms {
        let mut stack = vec![Vec::<SlotMove>::new()];
        while let Some(cur) = stack.pop() {
            if cur.len() == n {
                out.push(signed_permutation(n, p, &cur));
                continue;
            }
            for m in SlotMove::ALL {
                let mut nx = cur.clone();
                nx.push(m);
                stack.push(nx);
            }
        }
    }
    out
}

fn permute(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == idx.len() {
        out.push(idx.clone());
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, out);
        idx.swap(k, i);
    }
}

/// Attempts to realize a (shiftless-composable) affine map as
/// `Ad(e^{X/2h} rho e^{L/2h})` with `X` in the off-diagonal quadratic
/// ansatz. Returns the realizing element if one exists for this `rho`.
pub fn realize_with_rho(
    target: &AffineSymplecticMap,
    rho: &AffineSymplecticMap,
) -> Option<PElement> {
    let n = target.n;
    // linear parts only: N := T . rho^{-1} must be unipotent with
    // log N in the allowed span
    let t = linear_matrix(target);
    let r = linear_matrix(rho);
    let rinv = invert(&r)?;
    let nmat = mat_mul(&t, &rinv);
    // log of a unipotent matrix
    let dim = 2 * n;
    let mut nm = nmat.clone();
    for (i, row) in nm.iter_mut().enumerate() {
        row[i] = &row[i] - &rat(1);
    }
    // nilpotency of N - I
    let mut pw = nm.clone();
    let mut logm = nm.clone();
    let mut k = 1i64;
    loop {
        pw = mat_mul(&pw, &nm);
        if pw.iter().all(|row| row.iter().all(|v| v.is_zero())) {
            break;
        }
        k += 1;
        if k > dim as i64 {
            return None;
        }
        let sign = if k % 2 == 0 { rat(-1) } else { rat(1) };
        let c = &sign / &rat(k);
        for i in 0..dim {
            for j in 0..dim {
                let v = &pw[i][j] * &c;
                logm[i][j] = &logm[i][j] + &v;
            }
        }
    }
    // match logm against the ansatz: X = sum alpha u_iu_j + beta w_iw_j
    // (i<j) + gamma u_iw_j (i != j)
    let mut basis: Vec<Quad> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            basis.push(Quad {
                terms: vec![(LinearForm::u_var(n, i), LinearForm::u_var(n, j), rat(1))],
            });
            basis.push(Quad {
                terms: vec![(LinearForm::w_var(n, i), LinearForm::w_var(n, j), rat(1))],
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(Quad {
                    terms: vec![(LinearForm::u_var(n, i), LinearForm::w_var(n, j), rat(1))],
                });
            }
        }
    }
    // ad-matrices of the basis elements
    let ad_mats: Vec<Vec<Vec<Rat>>> = basis
        .iter()
        .map(|q| {
            let mut m = vec![vec![rat(0); dim]; dim];
            for (col, v) in basis_forms(n).iter().enumerate() {
                let img = q.derive(v);
                for rix in 0..n {
                    m[rix][col] = img.u[rix].clone();
                    m[n + rix][col] = img.w[rix].clone();
                }
            }
            m
        })
        .collect();
    // solve sum_t c_t ad_mats[t] = logm
    let cells: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for &(i, j) in &cells {
        rows.push(ad_mats.iter().map(|m| m[i][j].clone()).collect());
        rhs.push(logm[i][j].clone());
    }
    let coeffs = solve_rational(&rows, &rhs, basis.len())?;
    let mut x = Quad::zero();
    for (q, c) in basis.iter().zip(&coeffs) {
        if !c.is_zero() {
            let (f, g, w) = &q.terms[0];
            x.terms.push((f.clone(), g.clone(), w * c));
        }
    }
    // confirm the exponential reproduces N exactly
    let ex = x.exp_ad(n).ok()?;
    if linear_matrix(&ex) != nmat {
        return None;
    }
    // lambda shifts: [L/2h, v] must equal the target shift on v
    let mut l = Quad::zero();
    for j in 0..n {
        // delta_j u_j contributes shift on w_j; delta'_j w_j on u_j
        let su = target.image_u(j).scalar.clone(); // shift on u_j
        let sw = target.image_w(j).scalar.clone();
        // [delta u_j, w_j]/2h = delta ; [delta' w_j, u_j]/2h = -delta'
        if !sw.is_zero() {
            let mut f = LinearForm::zero(n);
            f.scalar = sw;
            l.terms.push((f, LinearForm::u_var(n, j), rat(1)));
        }
        if !su.is_zero() {
            let mut f = LinearForm::zero(n);
            f.scalar = su.scale(&rat(-1));
            l.terms.push((f, LinearForm::w_var(n, j), rat(1)));
        }
    }
    let p = PElement { n, x, rho: rho.clone(), l };
    // final verification
    match p.ad() {
        Ok(m) if m == *target => Some(p),
        _ => None,
    }
}

fn basis_forms(n: usize) -> Vec<LinearForm> {
    (0..n)
        .map(|i| LinearForm::u_var(n, i))
        .chain((0..n).map(|i| LinearForm::w_var(n, i)))
        .collect()
}

fn linear_matrix(m: &AffineSymplecticMap) -> Vec<Vec<Rat>> {
    let n = m.n;
    let dim = 2 * n;
    let mut out = vec![vec![rat(0); dim]; dim];
    for (col, f) in m.images.iter().enumerate() {
        for i in 0..n {
            out[i][col] = f.u[i].clone();
            out[n + i][col] = f.w[i].clone();
        }
    }
    out
}

fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![rat(0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let v = &a[i][k] * &b[k][j];
                out[i][j] = &out[i][j] + &v;
            }
        }
    }
    out
}

fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m = a.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        inv.swap(col, p);
        let d = m[col][col].clone();
        for j in 0..n {
            m[col][j] = &m[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let v = &m[col][j] * &f;
                    m[r][j] = &m[r][j] - &v;
                    let v2 = &inv[col][j] * &f;
                    inv[r][j] = &inv[r][j] - &v2;
                }
            }
        }
    }
    Some(inv)
}

fn solve_rational(rows: &[Vec<Rat>], rhs: &[Rat], k: usize) -> Option<Vec<Rat>> {
    let mut a = rows.to_vec();
    let mut b = rhs.to_vec();
    let m = a.len();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..k {
        let p = (row..m).find(|&r| !a[r][col].is_zero());
        let Some(p) = p else { continue };
        a.swap(row, p);
        b.swap(row, p);
        let d = a[row][col].clone();
        for c in 0..k {
            a[row][c] = &a[row][c] / &d;
        }
        b[row] = &b[row] / &d;
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..k {
                    let v = &a[row][c] * &f;
                    a[r][c] = &a[r][c] - &v;
                }
                let v = &b[row] * &f;
                b[r] = &b[r] - &v;
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == m {
            break;
        }
    }
    // consistency
    for r in row..m {
        if !b[r].is_zero() {
            return None;
        }
    }
    let mut out = vec![rat(0); k];
    for (r, c) in pivots {
        out[c] = b[r].clone();
    }
    Some(out)
}

/// The duality transport `(u_i, w_i, lambda_i, hbar) ->
/// (w_{n+1-i}, u_{n+1-i}, lambda_{n+1-i}, -hbar)` applied to the data of
/// an element.
pub fn duality_transport(p: &PElement) -> PElement {
    let n = p.n;
    let tf = |f: &LinearForm| -> LinearForm {
        let mut out = LinearForm::zero(n);
        for i in 0..n {
            out.w[n - 1 - i] = f.u[i].clone();
            out.u[n - 1 - i] = f.w[i].clone();
            out.scalar.lambda[n - 1 - i] = f.scalar.lambda[i].clone();
        }
        out.scalar.constant = f.scalar.constant.clone();
        out
    };
    let tq = |q: &Quad| -> Quad {
        Quad {
            terms: q
                .terms
                .iter()
                // the 1/2hbar prefactor flips sign with hbar
                .map(|(f, g, w)| (tf(f), tf(g), -w.clone()))
                .collect(),
        }
    };
    let rho = AffineSymplecticMap {
        n,
        images: {
            // conjugate: theta . rho . theta^{-1}
            let theta = AffineSymplecticMap {
                n,
                images: (0..n)
                    .map(|i| LinearForm::w_var(n, n - 1 - i))
                    .chain((0..n).map(|i| LinearForm::u_var(n, n - 1 - i)))
                    .collect(),
            };
            // theta is an involution
            theta.compose(&p.rho).compose(&theta).images
        },
    };
    PElement { n, x: tq(&p.x), rho, l: tq(&p.l) }
}

/// The duality transport restricted to three active slots of a larger
/// rank: `(u, w, lambda, hbar) -> (w, u, lambda, -hbar)` with the active
/// slots reversed; other slots are untouched.
pub fn duality_on_slots(p: &PElement, slots: &[usize; 3]) -> PElement {
    let n = p.n;
    let mate = |i: usize| -> usize {
        match slots.iter().position(|&s| s == i) {
            Some(k) => slots[2 - k],
            None => i,
        }
    };
    let tf = |f: &LinearForm| -> LinearForm {
        let mut out = LinearForm::zero(n);
        for i in 0..n {
            if slots.contains(&i) {
                out.w[mate(i)] = f.u[i].clone();
                out.u[mate(i)] = f.w[i].clone();
                out.scalar.lambda[mate(i)] = f.scalar.lambda[i].clone();
            } else {
                out.u[i] = f.u[i].clone();
                out.w[i] = f.w[i].clone();
                out.scalar.lambda[i] = f.scalar.lambda[i].clone();
            }
        }
        out.scalar.constant = f.scalar.constant.clone();
        out
    };
    let tq = |q: &Quad| -> Quad {
        Quad {
            terms: q
                .terms
                .iter()
                .map(|(f, g, wgt)| (tf(f), tf(g), -wgt.clone()))
                .collect(),
        }
    };
    let theta = AffineSymplecticMap {
        n,
        images: (0..n)
            .map(|i| {
                if slots.contains(&i) {
                    LinearForm::w_var(n, mate(i))
                } else {
                    LinearForm::u_var(n, i)
                }
            })
            .chain((0..n).map(|i| {
                if slots.contains(&i) {
                    LinearForm::u_var(n, mate(i))
                } else {
                    LinearForm::w_var(n, i)
                }
            }))
            .collect(),
    };
    let rho = AffineSymplecticMap {
        n,
        images: theta.compose(&p.rho).compose(&theta).images,
    };
    PElement { n, x: tq(&p.x), rho, l: tq(&p.l) }
}
