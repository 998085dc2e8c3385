//! The chart β: P₊(F^ℂ) → H², membership of SL₂(ℤ) elements in Aut(F),
//! the level-13 extension test and the norm-3 conjugacy.
//!
//! Column convention throughout: (u, v) stands for u·w_P + v·w_L.

use num_complex::Complex64;
use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactnum::{crt13, Cyclo12, EisMatrix, Eisenstein, ExactError, Residue13};
use crate::leechlat::{FixedLattice, Lattice, LatticeVector, Sigma};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("determinant is {0}, expected 1")]
    BadDeterminant(i64),
    #[error("point is on the boundary or degenerate")]
    Degenerate,
    #[error("g is not in Aut(F)")]
    NotInAutF,
    #[error("vector has norm {0}, expected {1}")]
    WrongNorm(String, i64),
    #[error("vector is not in F")]
    NotInF,
}

impl From<ExactError> for ModularError {
    fn from(_: ExactError) -> Self {
        ModularError::Degenerate
    }
}

/// An element of SL₂(ℤ) acting by fractional linear maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnimodularMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UnimodularMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ModularError> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(ModularError::BadDeterminant(det));
        }
        Ok(UnimodularMatrix { a, b, c, d })
    }

    pub const IDENTITY: UnimodularMatrix = UnimodularMatrix { a: 1, b: 0, c: 0, d: 1 };
    pub const S: UnimodularMatrix = UnimodularMatrix { a: 0, b: -1, c: 1, d: 0 };
    pub const T: UnimodularMatrix = UnimodularMatrix { a: 1, b: 1, c: 0, d: 1 };
    pub const T_INV: UnimodularMatrix = UnimodularMatrix { a: 1, b: -1, c: 0, d: 1 };
    /// ν = (0 1; −1 5).
    pub const NU: UnimodularMatrix = UnimodularMatrix { a: 0, b: 1, c: -1, d: 5 };

    pub fn mul(&self, o: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inv(&self) -> UnimodularMatrix {
        UnimodularMatrix { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn neg(&self) -> UnimodularMatrix {
        UnimodularMatrix { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_projective_identity(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d
    }

    pub fn apply(&self, tau: Complex64) -> Complex64 {
        (tau * self.a as f64 + self.b as f64) / (tau * self.c as f64 + self.d as f64)
    }

    pub fn apply_exact(&self, tau: &Cyclo12) -> Result<Cyclo12, ModularError> {
        let num = &tau.scale_int(self.a) + &Cyclo12::from_int(self.b);
        let den = &tau.scale_int(self.c) + &Cyclo12::from_int(self.d);
        Ok(num.div(&den)?)
    }

    /// cτ + d.
    pub fn cocycle(&self, tau: &Cyclo12) -> Cyclo12 {
        &tau.scale_int(self.c) + &Cyclo12::from_int(self.d)
    }

    /// ν g ν⁻¹.
    pub fn nu_conjugate(&self) -> UnimodularMatrix {
        Self::NU.mul(self).mul(&Self::NU.inv())
    }

    pub fn in_gamma0(&self, n: i64) -> bool {
        self.c.rem_euclid(n) == 0
    }

    pub fn in_gamma(&self, n: i64) -> bool {
        self.a.rem_euclid(n) == 1 % n
            && self.d.rem_euclid(n) == 1 % n
            && self.b.rem_euclid(n) == 0
            && self.c.rem_euclid(n) == 0
    }

    fn as_eis(&self) -> EisMatrix {
        let e = Eisenstein::from_int;
        EisMatrix::from_rows(&[vec![e(self.a), e(self.b)], vec![e(self.c), e(self.d)]])
    }
}

fn w() -> Eisenstein {
    Eisenstein::OMEGA
}

/// β = (p ω; 1 p̄).
pub fn beta() -> EisMatrix {
    EisMatrix::from_rows(&[vec![Eisenstein::P, w()], vec![Eisenstein::ONE, Eisenstein::P_BAR]])
}

/// adj β = (p̄ −ω; −1 p), so β·adj β = p₁.
pub fn beta_adj() -> EisMatrix {
    EisMatrix::from_rows(&[vec![Eisenstein::P_BAR, -w()], vec![-Eisenstein::ONE, Eisenstein::P]])
}

pub fn beta_det() -> Eisenstein {
    Eisenstein::P * Eisenstein::P_BAR - w()
}

/// J_F = (3 4p; 4p̄ 3).
pub fn j_f() -> EisMatrix {
    EisMatrix::from_rows(&[
        vec![Eisenstein::from_int(3), Eisenstein::P * 4],
        vec![Eisenstein::P_BAR * 4, Eisenstein::from_int(3)],
    ])
}

/// θ̄·β*·S·β == J_F.
pub fn check_jf_identity() -> bool {
    let s = UnimodularMatrix::S.as_eis();
    (&(&beta().adjoint() * &s) * &beta()).scale(Eisenstein::THETA.conj()) == j_f()
}

fn ce(x: Eisenstein) -> Cyclo12 {
    Cyclo12::from(x)
}

/// β applied to a column, without projectivizing.
pub fn beta_column(a: &Cyclo12, b: &Cyclo12) -> (Cyclo12, Cyclo12) {
    let t1 = &(&ce(Eisenstein::P) * a) + &(&ce(w()) * b);
    let t2 = a + &(&ce(Eisenstein::P_BAR) * b);
    (t1, t2)
}

/// β[a w_P + b w_L] = (pa + ωb)/(a + p̄b).
pub fn beta_fwd(a: &Cyclo12, b: &Cyclo12) -> Result<Cyclo12, ModularError> {
    let (t1, t2) = beta_column(a, b);
    let tau = t1.div(&t2)?;
    if !tau.im().is_positive() {
        return Err(ModularError::Degenerate);
    }
    Ok(tau)
}

pub fn beta_fwd_c(a: Complex64, b: Complex64) -> Result<Complex64, ModularError> {
    let p = Eisenstein::P.to_complex();
    let t = (p * a + w().to_complex() * b) / (a + p.conj() * b);
    if !(t.im > 0.0) || !t.is_finite() {
        return Err(ModularError::Degenerate);
    }
    Ok(t)
}

/// β⁻¹(τ) = (1 + pτ) w_P + ω²(τ − p) w_L.
pub fn beta_inv(tau: &Cyclo12) -> Result<(Cyclo12, Cyclo12), ModularError> {
    if !tau.im().is_positive() {
        return Err(ModularError::Degenerate);
    }
    let p = ce(Eisenstein::P);
    let a = &Cyclo12::one() + &(&p * tau);
    let b = &ce(w() * w()) * &(tau - &p);
    Ok((a, b))
}

pub fn beta_inv_c(tau: Complex64) -> Result<(Complex64, Complex64), ModularError> {
    if !(tau.im > 0.0) {
        return Err(ModularError::Degenerate);
    }
    let p = Eisenstein::P.to_complex();
    Ok((1.0 + p * tau, (w() * w()).to_complex() * (tau - p)))
}

/// ⟨z, z′⟩ = θ̄(τ₁′τ̄₂ − τ₂′τ̄₁) with (τ₁, τ₂) = βz.
pub fn inner_product_via_beta(z: (&Cyclo12, &Cyclo12), zp: (&Cyclo12, &Cyclo12)) -> Cyclo12 {
    let (t1, t2) = beta_column(z.0, z.1);
    let (u1, u2) = beta_column(zp.0, zp.1);
    &ce(Eisenstein::THETA.conj()) * &(&(&u1 * &t2.conj()) - &(&u2 * &t1.conj()))
}

/// Direct ⟨z, z′⟩ = z*·J_F·z′.
pub fn inner_product_direct(z: (&Cyclo12, &Cyclo12), zp: (&Cyclo12, &Cyclo12)) -> Cyclo12 {
    let j = j_f();
    let zs = [z.0.conj(), z.1.conj()];
    let zq = [zp.0, zp.1];
    let mut acc = Cyclo12::zero();
    for i in 0..2 {
        for k in 0..2 {
            acc += &(&(&zs[i] * &ce(j[(i, k)])) * zq[k]);
        }
    }
    acc
}

/// Points of P₊(F^ℂ): cosh d = |⟨z,z′⟩|/(|z||z′|).
pub fn dist_f(z: (Complex64, Complex64), zp: (Complex64, Complex64)) -> f64 {
    let j = j_f();
    let ip = |x: (Complex64, Complex64), y: (Complex64, Complex64)| {
        let xs = [x.0.conj(), x.1.conj()];
        let ys = [y.0, y.1];
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..2 {
            for k in 0..2 {
                acc += xs[i] * j[(i, k)].to_complex() * ys[k];
            }
        }
        acc
    };
    let c = ip(z, zp).norm() / (ip(z, z).re * ip(zp, zp).re).sqrt();
    c.max(1.0).acosh()
}

/// Hyperbolic distance in the upper half-plane (curvature −1).
pub fn dist_h2(t: Complex64, u: Complex64) -> f64 {
    (1.0 + (t - u).norm_sqr() / (2.0 * t.im * u.im)).acosh()
}

#[derive(Clone, Debug, Serialize)]
pub struct AutFVerdict {
    /// p₁ | p(a − d) + (b + c).
    pub divisible: bool,
    /// νgν⁻¹ ∈ Γ0(13).
    pub gamma0: bool,
    /// β⁻¹gβ over ℰ when integral.
    pub g1: Option<EisMatrix>,
    /// g₁*J_F g₁ = J_F.
    pub isometry: Option<bool>,
}

impl AutFVerdict {
    pub fn member(&self) -> bool {
        self.divisible
    }

    pub fn consistent(&self) -> bool {
        self.divisible == self.gamma0 && self.divisible == self.g1.is_some() && self.isometry != Some(false)
    }
}

/// g₁ = β⁻¹gβ = adj(β)·g·β/p₁ if it has entries in ℰ.
pub fn conjugate_by_beta(g: &UnimodularMatrix) -> Option<EisMatrix> {
    let m = &(&beta_adj() * &g.as_eis()) * &beta();
    let p1 = beta_det();
    let mut out = EisMatrix::zeros(2, 2);
    for i in 0..2 {
        for k in 0..2 {
            out[(i, k)] = m[(i, k)].div_exact(&p1)?;
        }
    }
    Some(out)
}

pub fn in_aut_f(g: &UnimodularMatrix) -> Result<AutFVerdict, ModularError> {
    if g.det() != 1 {
        return Err(ModularError::BadDeterminant(g.det()));
    }
    let s = g.a - g.d;
    let t = g.b + g.c;
    let x = Eisenstein::P * s + Eisenstein::from_int(t);
    let divisible = Eisenstein::P1.divides(&x);
    let gamma0 = g.nu_conjugate().in_gamma0(13);
    let g1 = conjugate_by_beta(g);
    let isometry = g1.as_ref().map(|m| &(&m.adjoint() * &j_f()) * m == j_f());
    Ok(AutFVerdict { divisible, gamma0, g1, isometry })
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaReport {
    pub k: i64,
    /// λ = 3k(4 + 3ω) + d + 3pω̄b reduced mod 13.
    pub lambda: Eisenstein,
    pub phi: Residue13,
    /// (d + 5b, 2k + d + 8b).
    pub phi_formula: Residue13,
    /// From g₁Σ_P ≡ λΣ_P mod 13F.
    pub phi_direct: Residue13,
    pub extends: bool,
}

impl LambdaReport {
    pub fn consistent(&self) -> bool {
        self.phi == self.phi_formula && self.phi == self.phi_direct
    }
}

fn inv13(x: u8) -> u8 {
    Residue13::new(x as i64, 1).pow(11).u
}

pub fn extension_lambda(g: &UnimodularMatrix) -> Result<LambdaReport, ModularError> {
    let v = in_aut_f(g)?;
    let g1 = v.g1.ok_or(ModularError::NotInAutF)?;
    // g ≡ ((2k + d, b), (3k − b, d)) mod 13
    let k = (7 * (g.a - g.d)).rem_euclid(13);
    let (b, d) = (g.b.rem_euclid(13), g.d.rem_euclid(13));
    debug_assert_eq!((3 * k - b - g.c).rem_euclid(13), 0);
    let lam = Eisenstein::new(4, 3) * (3 * k) + Eisenstein::from_int(d) + Eisenstein::P * w().conj() * (3 * b);
    let lambda = crt13(&lam).lift();
    let phi = crt13(&lambda);
    let phi_formula = Residue13::new(d + 5 * b, 2 * k + d + 8 * b);
    // Σ_P = (4, −p̄)
    let x = g1[(0, 0)] * 4 - g1[(0, 1)] * Eisenstein::P_BAR;
    let y = g1[(1, 0)] * 4 - g1[(1, 1)] * Eisenstein::P_BAR;
    let four_inv = inv13(4) as i64;
    let phi_direct = crt13(&x) * Residue13::new(four_inv, four_inv);
    let second_ok = crt13(&y) == phi_direct * crt13(&-Eisenstein::P_BAR);
    let phi_direct = if second_ok { phi_direct } else { Residue13::new(0, 0) };
    let extends = (phi.u as u32 * phi.v as u32) % 13 == 1;
    Ok(LambdaReport { k, lambda, phi, phi_formula, phi_direct, extends })
}

/// The automorphism of L restricting to g₁ on F and to a power of σ on F⊥,
/// as images of the echelon basis. `None` if no power of σ glues.
pub fn explicit_extension(lat: &Lattice, sigma: &Sigma, g: &UnimodularMatrix) -> Option<Vec<LatticeVector>> {
    let g1 = conjugate_by_beta(g)?;
    let f = lat.fixed_lattice();
    let lam = extension_lambda(g).ok()?;
    // σ acts on the glue of F⊥ by 3p̄ ↦ (7, 2) = (2⁻¹, 2); solve 7^j ≡ u
    let j = (0..12u32).find(|&j| Residue13::new(7, 2).pow(j) == lam.phi)?;
    let images: Vec<LatticeVector> = lat
        .basis()
        .iter()
        .map(|b| {
            let v = LatticeVector::from_e(b);
            let (a, bb) = f.pi_f_coeffs(&v);
            let perp = &v - &f.from_f_coords(&a, &bb);
            let a1 = &(&ce(g1[(0, 0)]) * &a) + &(&ce(g1[(0, 1)]) * &bb);
            let b1 = &(&ce(g1[(1, 0)]) * &a) + &(&ce(g1[(1, 1)]) * &bb);
            let mut s = perp;
            for _ in 0..j {
                s = sigma.apply(&s);
            }
            &f.from_f_coords(&a1, &b1) + &s
        })
        .collect();
    images.iter().all(|v| lat.membership(v)).then_some(images)
}

/// Input for the ω-conjugacy: a norm-3 vector of F, or z ⊥ r with r a root of F.
#[derive(Clone, Debug)]
pub enum GzInput {
    Norm3 { z: (Eisenstein, Eisenstein) },
    Orthogonal { z: (Eisenstein, Eisenstein), r: (Eisenstein, Eisenstein) },
}

pub fn f_norm(z: (Eisenstein, Eisenstein)) -> i64 {
    let v = [z.0, z.1];
    let j = j_f();
    let mut acc = Eisenstein::ZERO;
    for i in 0..2 {
        for k in 0..2 {
            acc += v[i].conj() * j[(i, k)] * v[k];
        }
    }
    debug_assert_eq!(acc.b, 0);
    acc.a
}

fn f_ip(z: (Eisenstein, Eisenstein), y: (Eisenstein, Eisenstein)) -> Eisenstein {
    let (zs, ys) = ([z.0, z.1], [y.0, y.1]);
    let j = j_f();
    let mut acc = Eisenstein::ZERO;
    for i in 0..2 {
        for k in 0..2 {
            acc += zs[i].conj() * j[(i, k)] * ys[k];
        }
    }
    acc
}

fn beta_e(z: (Eisenstein, Eisenstein)) -> (Eisenstein, Eisenstein) {
    (Eisenstein::P * z.0 + w() * z.1, z.0 + Eisenstein::P_BAR * z.1)
}

/// g_z with β(z) = g_z(ω).
pub fn gz_for(input: &GzInput) -> Result<UnimodularMatrix, ModularError> {
    let (g, z) = match input {
        GzInput::Norm3 { z } => {
            let n = f_norm(*z);
            if n != 3 {
                return Err(ModularError::WrongNorm(n.to_string(), 3));
            }
            // βz = (s₁ω + s₂, t₁ω + t₂)
            let (s, t) = beta_e(*z);
            (UnimodularMatrix { a: s.b, b: s.a, c: t.b, d: t.a }, *z)
        }
        GzInput::Orthogonal { z, r } => {
            let n = f_norm(*r);
            if n != -3 {
                return Err(ModularError::WrongNorm(n.to_string(), -3));
            }
            if !f_ip(*r, *z).is_zero() || f_norm(*z) <= 0 {
                return Err(ModularError::Degenerate);
            }
            // β(z) = s̄/t̄ with βr = (s, t); s̄ = −s₁ω + (s₂ − s₁)
            let (s, t) = beta_e(*r);
            (UnimodularMatrix { a: -s.b, b: s.a - s.b, c: -t.b, d: t.a - t.b }, *z)
        }
    };
    if g.det() != 1 {
        return Err(ModularError::BadDeterminant(g.det()));
    }
    let want = beta_fwd(&ce(z.0), &ce(z.1))?;
    if g.apply_exact(&Cyclo12::omega())? != want {
        return Err(ModularError::Degenerate);
    }
    Ok(g)
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaOnH2 {
    /// σ|_F on columns.
    pub on_f: EisMatrix,
    /// β σ|_F adj β = μ·S.
    pub scalar: Option<Eisenstein>,
    pub mobius: UnimodularMatrix,
    pub swaps_p_and_minus_p_inv: bool,
    pub fixes_i: bool,
    /// (τ, σ-image, −1/τ agrees) at sample points.
    pub samples: Vec<(Cyclo12, bool)>,
}

impl SigmaOnH2 {
    pub fn is_s(&self) -> bool {
        self.scalar.is_some() && self.swaps_p_and_minus_p_inv && self.fixes_i && self.samples.iter().all(|s| s.1)
    }
}

pub fn sigma_on_h2(lat: &Lattice, sigma: &Sigma) -> Result<SigmaOnH2, ModularError> {
    let f = lat.fixed_lattice();
    let col = |v: &LatticeVector| -> Result<Vec<Eisenstein>, ModularError> {
        let (a, b) = f.f_coords(&sigma.apply(v)).ok_or(ModularError::NotInF)?;
        Ok(vec![a.to_eisenstein().ok_or(ModularError::NotInF)?, b.to_eisenstein().ok_or(ModularError::NotInF)?])
    };
    let on_f = EisMatrix::from_cols(&[col(&f.w_p)?, col(&f.w_l)?]);
    let m = &(&beta() * &on_f) * &beta_adj();
    let scalar = (m[(0, 0)].is_zero() && m[(1, 1)].is_zero() && m[(0, 1)] == -m[(1, 0)]).then_some(m[(1, 0)]);
    let act = |tau: &Cyclo12| -> Result<Cyclo12, ModularError> {
        let (a, b) = beta_inv(tau)?;
        let a1 = &(&ce(on_f[(0, 0)]) * &a) + &(&ce(on_f[(0, 1)]) * &b);
        let b1 = &(&ce(on_f[(1, 0)]) * &a) + &(&ce(on_f[(1, 1)]) * &b);
        beta_fwd(&a1, &b1)
    };
    let p = ce(Eisenstein::P);
    let minus_p_inv = -p.inv()?;
    let swaps = act(&p)? == minus_p_inv && act(&minus_p_inv)? == p;
    let i = Cyclo12::i();
    let fixes_i = act(&i)? == i;
    let s = UnimodularMatrix::S;
    let mut samples = Vec::new();
    for tau in [i.clone(), i.scale_int(2), &Cyclo12::from_int(1) + &i, &Cyclo12::omega() + &i.scale_int(3)] {
        let ok = act(&tau)? == s.apply_exact(&tau)?;
        samples.push((tau, ok));
    }
    Ok(SigmaOnH2 { on_f, scalar, mobius: s, swaps_p_and_minus_p_inv: swaps, fixes_i, samples })
}

// ---------------------------------------------------------------- sampling

/// Uniform word in {S, T, T⁻¹} of length ≤ `max_len`.
pub fn random_sl2<R: Rng>(rng: &mut R, max_len: usize) -> UnimodularMatrix {
    let len = rng.gen_range(0..=max_len);
    let gens = [UnimodularMatrix::S, UnimodularMatrix::T, UnimodularMatrix::T_INV];
    (0..len).fold(UnimodularMatrix::IDENTITY, |acc, _| acc.mul(&gens[rng.gen_range(0..3)]))
}

/// A product of conjugates of T¹³ and its transpose: an element of Γ(13).
pub fn random_gamma13<R: Rng>(rng: &mut R) -> UnimodularMatrix {
    let t13 = UnimodularMatrix { a: 1, b: 13, c: 0, d: 1 };
    let u13 = UnimodularMatrix { a: 1, b: 0, c: 13, d: 1 };
    let mut g = UnimodularMatrix::IDENTITY;
    for _ in 0..rng.gen_range(1..=2) {
        let h = if rng.gen_bool(0.5) { t13 } else { u13 };
        let h = if rng.gen_bool(0.5) { h } else { h.inv() };
        let w = random_sl2(rng, 4);
        g = g.mul(&w.mul(&h).mul(&w.inv()));
    }
    g
}

/// ν⁻¹hν for a random h ∈ Γ0(13).
pub fn random_autf<R: Rng>(rng: &mut R) -> UnimodularMatrix {
    let h = loop {
        let c = rng.gen_range(-4i64..=4);
        if c == 0 {
            let d = if rng.gen_bool(0.5) { 1 } else { -1 };
            break UnimodularMatrix { a: d, b: rng.gen_range(-6..=6), c: 0, d };
        }
        let d = rng.gen_range(-40i64..=40);
        let e = (13 * c).extended_gcd(&d);
        if e.gcd != 1 {
            continue;
        }
        // x·13c + y·d = 1 ⇒ h = (y, −x; 13c, d)
        let shift = rng.gen_range(-3i64..=3);
        let (a, b) = (e.y + shift * 13 * c, -e.x + shift * d);
        break UnimodularMatrix { a, b, c: 13 * c, d };
    };
    UnimodularMatrix::NU.inv().mul(&h).mul(&UnimodularMatrix::NU)
}

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub seed: u64,
    pub samples: usize,
    pub members: usize,
    /// Disagreements among the divisibility test, the Γ0(13) test and integrality of g₁.
    pub mismatches: Vec<UnimodularMatrix>,
    pub isometry_failures: Vec<UnimodularMatrix>,
    /// max |d_H²(τ,τ′) − 2·d_F(β⁻¹τ, β⁻¹τ′)| over the samples.
    pub chart_distance_defect: f64,
    pub jf_identity: bool,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.isometry_failures.is_empty()
            && self.jf_identity
            && self.chart_distance_defect < 1e-10
    }
}

/// Random words of length ≤ 12; a third of the samples are drawn from ν⁻¹Γ0(13)ν
/// so both outcomes occur.
pub fn check_membership(n: usize, seed: u64) -> MembershipReport {
    let mut rng = rng_for(seed, 1);
    let mut members = 0;
    let mut mismatches = Vec::new();
    let mut isometry_failures = Vec::new();
    let mut defect: f64 = 0.0;
    for i in 0..n {
        let g = if i % 3 == 2 { random_autf(&mut rng) } else { random_sl2(&mut rng, 12) };
        let v = in_aut_f(&g).expect("det 1");
        if v.member() {
            members += 1;
        }
        if !v.consistent() {
            mismatches.push(g);
        }
        if v.isometry == Some(false) {
            isometry_failures.push(g);
        }
        let t = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.2..3.0));
        let u = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.2..3.0));
        let (zt, zu) = (beta_inv_c(t).expect("Im > 0"), beta_inv_c(u).expect("Im > 0"));
        defect = defect.max((dist_h2(t, u) - 2.0 * dist_f(zt, zu)).abs());
    }
    MembershipReport {
        seed,
        samples: n,
        members,
        mismatches,
        isometry_failures,
        chart_distance_defect: defect,
        jf_identity: check_jf_identity(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionReport {
    pub seed: u64,
    pub autf_samples: usize,
    pub autf_extend: usize,
    pub gamma13_samples: usize,
    pub gamma13_extend: usize,
    /// λ from the closed formula vs. the action on Σ_P.
    pub lambda_mismatches: Vec<UnimodularMatrix>,
    /// Samples whose explicit lift to L failed to be integral.
    pub lift_failures: Vec<UnimodularMatrix>,
    pub lifts_checked: usize,
    pub multiplicativity_pairs: usize,
    pub multiplicativity_failures: usize,
}

impl ExtensionReport {
    pub fn passed(&self) -> bool {
        self.autf_extend == self.autf_samples
            && self.gamma13_extend == self.gamma13_samples
            && self.lambda_mismatches.is_empty()
            && self.lift_failures.is_empty()
    }
}

/// `n` samples from ν⁻¹Γ0(13)ν, `n_gamma13` from Γ(13), the first `lifts`
/// of each lifted explicitly to L, and 50 multiplicativity pairs.
pub fn check_extension(lat: &Lattice, n: usize, n_gamma13: usize, lifts: usize, seed: u64) -> ExtensionReport {
    let mut rng = rng_for(seed, 2);
    let sigma = Sigma::new(lat).expect("σ exists for q = 3");
    let mut lambda_mismatches = Vec::new();
    let mut lift_failures = Vec::new();
    let mut lifts_checked = 0;
    let mut tally = |g: UnimodularMatrix, lift: bool| -> bool {
        let rep = extension_lambda(&g).expect("sample lies in Aut(F)");
        if !rep.consistent() {
            lambda_mismatches.push(g);
        }
        if lift {
            lifts_checked += 1;
            if explicit_extension(lat, &sigma, &g).is_none() {
                lift_failures.push(g);
            }
        }
        rep.extends
    };
    let autf: Vec<UnimodularMatrix> = (0..n).map(|_| random_autf(&mut rng)).collect();
    let g13: Vec<UnimodularMatrix> = (0..n_gamma13).map(|_| random_gamma13(&mut rng)).collect();
    let autf_extend = autf.iter().enumerate().filter(|(i, g)| tally(**g, *i < lifts)).count();
    let gamma13_extend = g13.iter().enumerate().filter(|(i, g)| g.in_gamma(13) && tally(**g, *i < lifts)).count();
    let pairs = 50;
    let mut multiplicativity_failures = 0;
    for _ in 0..pairs {
        let (g, h) = (random_autf(&mut rng), random_autf(&mut rng));
        let l = |m: &UnimodularMatrix| extension_lambda(m).expect("in Aut(F)").phi;
        if l(&g.mul(&h)) != l(&g) * l(&h) {
            multiplicativity_failures += 1;
        }
    }
    ExtensionReport {
        seed,
        autf_samples: n,
        autf_extend,
        gamma13_samples: n_gamma13,
        gamma13_extend,
        lambda_mismatches,
        lift_failures,
        lifts_checked,
        multiplicativity_pairs: pairs,
        multiplicativity_failures,
    }
}

/// Norm-3 vectors g₁·w_P for random g ∈ Aut(F).
pub fn random_norm3<R: Rng>(rng: &mut R) -> (Eisenstein, Eisenstein) {
    let g1 = conjugate_by_beta(&random_autf(rng)).expect("in Aut(F)");
    (g1[(0, 0)], g1[(1, 0)])
}

/// Roots of F with small coordinates.
pub fn small_f_roots(bound: i64) -> Vec<(Eisenstein, Eisenstein)> {
    let mut out = Vec::new();
    let range = || (-bound..=bound).flat_map(|a| (-bound..=bound).map(move |b| Eisenstein::new(a, b)));
    for x in range() {
        for y in range() {
            if f_norm((x, y)) == -3 {
                out.push((x, y));
            }
        }
    }
    out
}

/// A primitive generator of F ∩ r⊥.
pub fn orthogonal_generator(r: (Eisenstein, Eisenstein)) -> (Eisenstein, Eisenstein) {
    // (c₁, c₂) = r*J_F; z = (c₂, −c₁)/gcd
    let j = j_f();
    let c1 = r.0.conj() * j[(0, 0)] + r.1.conj() * j[(1, 0)];
    let c2 = r.0.conj() * j[(0, 1)] + r.1.conj() * j[(1, 1)];
    let g = c1.gcd(&c2);
    (c2.div_exact(&g).expect("gcd divides"), (-c1).div_exact(&g).expect("gcd divides"))
}

pub fn apply_f(m: &EisMatrix, z: (Eisenstein, Eisenstein)) -> (Eisenstein, Eisenstein) {
    (m[(0, 0)] * z.0 + m[(0, 1)] * z.1, m[(1, 0)] * z.0 + m[(1, 1)] * z.1)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyReport {
    pub norm3_samples: usize,
    pub norm3_ok: usize,
    pub orthogonal_samples: usize,
    pub orthogonal_ok: usize,
}

impl ConjugacyReport {
    pub fn passed(&self) -> bool {
        self.norm3_ok == self.norm3_samples && self.orthogonal_ok == self.orthogonal_samples
    }
}

pub fn check_conjugacy(n_norm3: usize, n_orth: usize, seed: u64) -> ConjugacyReport {
    let mut rng = rng_for(seed, 3);
    let mut norm3_ok = 0;
    for i in 0..n_norm3 {
        let z = if i == 0 { (Eisenstein::ONE, Eisenstein::ZERO) } else { random_norm3(&mut rng) };
        if gz_for(&GzInput::Norm3 { z }).is_ok() {
            norm3_ok += 1;
        }
    }
    let roots = small_f_roots(2);
    let mut orthogonal_ok = 0;
    for i in 0..n_orth {
        let r0 = roots[i % roots.len()];
        let g1 = conjugate_by_beta(&random_autf(&mut rng)).expect("in Aut(F)");
        let r = apply_f(&g1, r0);
        let z = orthogonal_generator(r);
        if gz_for(&GzInput::Orthogonal { z, r }).is_ok() {
            orthogonal_ok += 1;
        }
    }
    ConjugacyReport { norm3_samples: n_norm3, norm3_ok, orthogonal_samples: n_orth, orthogonal_ok }
}

// ---------------------------------------------------------------- exact helpers for the lift

/// F-coordinates (a, b) of an exact vector, as f64 complex numbers.
pub fn f_coords_c(f: &FixedLattice, v: &LatticeVector) -> Option<(Complex64, Complex64)> {
    f.f_coords(v).map(|(a, b)| (a.to_complex(), b.to_complex()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leechlat::build_default;

    #[test]
    fn chart_named_points() {
        let lat = build_default();
        let f = lat.fixed_lattice();
        let (a, b) = f.f_coords(&lat.rho_bar()).unwrap();
        assert_eq!(beta_fwd(&a, &b).unwrap(), Cyclo12::i());
        let p = ce(Eisenstein::P);
        assert_eq!(beta_fwd(&Cyclo12::one(), &Cyclo12::zero()).unwrap(), p);
        assert_eq!(beta_fwd(&Cyclo12::zero(), &Cyclo12::one()).unwrap(), -p.inv().unwrap());
        // z₀ ↦ 0 lies on the boundary
        let (t1, _) = beta_column(&Cyclo12::one(), &ce(Eisenstein::THETA));
        assert!(t1.is_zero());
        assert!(check_jf_identity());
        assert_eq!(beta_det(), Eisenstein::P1);
    }

    #[test]
    fn beta_inverse_round_trip() {
        for tau in [Cyclo12::i(), &Cyclo12::omega() + &Cyclo12::i().scale_int(2), Cyclo12::i().scale_int(5)] {
            let (a, b) = beta_inv(&tau).unwrap();
            assert_eq!(beta_fwd(&a, &b).unwrap(), tau);
        }
    }

    #[test]
    fn inner_products() {
        let one = Cyclo12::one();
        let zero = Cyclo12::zero();
        assert_eq!(inner_product_via_beta((&one, &zero), (&one, &zero)), Cyclo12::from_int(3));
        assert_eq!(inner_product_via_beta((&one, &zero), (&zero, &one)), ce(Eisenstein::P * 4));
        let z = (Cyclo12::from_ints(1, 2, 0, -1), Cyclo12::from_ints(0, 0, 3, 1));
        let y = (Cyclo12::from_ints(-2, 1, 1, 0), Cyclo12::from_ints(5, 0, 0, 1));
        assert_eq!(
            inner_product_via_beta((&z.0, &z.1), (&y.0, &y.1)),
            inner_product_direct((&z.0, &z.1), (&y.0, &y.1))
        );
        // |z|² = 2√3·Im(τ₁τ̄₂)
        let (t1, t2) = beta_column(&z.0, &z.1);
        let lhs = inner_product_direct((&z.0, &z.1), (&z.0, &z.1)).to_real().unwrap();
        let rhs = &(&t1 * &t2.conj()).im() * &crate::exactnum::RealQ3::from_ints(0, 2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_examples() {
        assert!(in_aut_f(&UnimodularMatrix::IDENTITY).unwrap().member());
        let g = UnimodularMatrix::new(2, 1, -3, -1).unwrap();
        assert_eq!((g.a - g.d, g.b + g.c), (3, -2));
        let v = in_aut_f(&g).unwrap();
        assert!(v.member() && v.consistent());
        let t = in_aut_f(&UnimodularMatrix::T).unwrap();
        assert!(!t.member() && t.consistent());
        assert!(UnimodularMatrix::new(2, 0, 0, 1).is_err());
    }

    #[test]
    fn lambda_identity() {
        let r = extension_lambda(&UnimodularMatrix::IDENTITY).unwrap();
        assert_eq!(r.phi, Residue13::ONE);
        assert!(r.extends && r.consistent());
        assert!(extension_lambda(&UnimodularMatrix::T).is_err());
    }

    #[test]
    fn gz_examples() {
        let g = gz_for(&GzInput::Norm3 { z: (Eisenstein::ONE, Eisenstein::ZERO) }).unwrap();
        assert_eq!(g.apply_exact(&Cyclo12::omega()).unwrap(), ce(Eisenstein::P));
        assert!(gz_for(&GzInput::Norm3 { z: (Eisenstein::ONE, Eisenstein::ONE) }).is_err());
        let roots = small_f_roots(2);
        assert!(!roots.is_empty());
        let r = roots[0];
        let z = orthogonal_generator(r);
        assert_eq!(gz_for(&GzInput::Orthogonal { z, r }).unwrap().det(), 1);
    }

    #[test]
    fn sigma_is_s() {
        let lat = build_default();
        let sigma = Sigma::new(&lat).unwrap();
        let s = sigma_on_h2(&lat, &sigma).unwrap();
        assert!(s.is_s(), "{s:?}");
        let s2 = UnimodularMatrix::S.mul(&UnimodularMatrix::S);
        assert_eq!(s2, UnimodularMatrix::IDENTITY.neg());
        assert!(s2.is_projective_identity());
    }
}
