//! Truncations of the Aut(L)-invariant series E_m(z) = Σ_r ⟨r, z⟩^{−6m} and
//! their restriction to F through the β chart.
//!
//! A shell around a positive vector c is the set of roots with
//! |⟨c, r⟩|²/|c|² ≤ B²|ρ̄|², i.e. height ≤ B measured from c (for c = ρ̄ this
//! is the usual height). Shells are found by enumerating short vectors of the
//! majorant Q_c(v) = 2|⟨c,v⟩|²/|c|² − ⟨v,v⟩, which is positive definite and
//! equals 3 + 2|⟨c,r⟩|²/|c|² on roots.

mod shortvec;

use std::collections::HashSet;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::FromPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::projective_key;
use crate::exactnum::{Cyclo12, Eisenstein, RealQ3};
use crate::leechlat::{ip_c, norm_e, EVec, Lattice, LatticeVector, Sigma};
use crate::modular::{beta_inv, conjugate_by_beta, extension_lambda, ModularError, UnimodularMatrix};

pub use shortvec::{enumerate as short_vectors, lll};

/// Resource cap on the height bound.
pub const MAX_BOUND: f64 = 4.0;
/// Width of the shells used for the truncation estimate.
pub const SHELL_STEP: f64 = 0.5;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum AutoformError {
    #[error("bound {0} exceeds the cap {MAX_BOUND}")]
    CapExceeded(f64),
    #[error("bound must be positive")]
    BadBound,
    #[error("center does not have positive norm")]
    NotPositive,
    #[error("z lies on the mirror of an enumerated root (pole)")]
    Pole,
    #[error("m must be at least 1")]
    BadExponent,
    #[error("|F(τ)| = {0:e} is too small to compare")]
    NearPole(f64),
    #[error("g does not extend to L")]
    NoExtension,
    #[error(transparent)]
    Modular(#[from] ModularError),
}

#[derive(Clone, Debug, Serialize)]
pub struct ShellRoot {
    /// Canonical projective representative.
    pub root: EVec,
    /// ⟨r, center⟩.
    pub ip: Cyclo12,
    /// Height relative to the center, squared.
    pub height_sq: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootShell {
    pub center: LatticeVector,
    pub bound: f64,
    /// Sorted by height, then lexicographically.
    pub roots: Vec<ShellRoot>,
}

fn rho_bar_norm(lat: &Lattice) -> RealQ3 {
    lat.rho_bar().norm()
}

fn real_basis(lat: &Lattice) -> Vec<Vec<Complex64>> {
    let w = Eisenstein::OMEGA;
    lat.basis()
        .iter()
        .flat_map(|b| {
            let v: Vec<Complex64> = b.iter().map(|x| x.to_complex()).collect();
            let wv: Vec<Complex64> = b.iter().map(|x| (w * *x).to_complex()).collect();
            [v, wv]
        })
        .collect()
}

/// All roots within height `bound` of `center`.
pub fn shell_around(lat: &Lattice, center: &LatticeVector, bound: f64) -> Result<RootShell, AutoformError> {
    if !(bound > 0.0) {
        return Err(AutoformError::BadBound);
    }
    if bound > MAX_BOUND {
        return Err(AutoformError::CapExceeded(bound));
    }
    let cn = center.norm();
    if !cn.is_positive() {
        return Err(AutoformError::NotPositive);
    }
    let rb2 = rho_bar_norm(lat);
    // exact threshold |⟨c,r⟩|² ≤ B²|ρ̄|²|c|²
    let b = BigRational::from_f64(bound).ok_or(AutoformError::BadBound)?;
    let thresh = (&rb2 * &cn).scale(&(&b * &b));
    let t = thresh.to_f64();
    let c = center.to_complex();
    let cnf = cn.to_f64();
    let basis = real_basis(lat);
    let n = basis.len();
    // Re of the Hermitian majorant M(u,v) = 2⟨u,c⟩⟨c,v⟩/|c|² − ⟨u,v⟩
    let ucs: Vec<Complex64> = basis.iter().map(|u| ip_c(u, &c)).collect();
    let mut g = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let m = 2.0 * ucs[i] * ucs[j].conj() / cnf - ip_c(&basis[i], &basis[j]);
            g[i][j] = m.re;
        }
    }
    let radius = 3.0 + 2.0 * t / cnf;
    let xs = short_vectors(&g, radius * (1.0 + 1e-9) + 1e-9);
    let dim = lat.dim();
    let cands: Vec<EVec> = xs
        .par_iter()
        .filter_map(|x| {
            let coef: Vec<Eisenstein> = (0..dim).map(|k| Eisenstein::new(x[2 * k], x[2 * k + 1])).collect();
            let r = lat.from_coords(&coef);
            (norm_e(&r) == -3).then(|| projective_key(&r))
        })
        .collect();
    let mut seen = HashSet::new();
    let uniq: Vec<EVec> = cands.into_iter().filter(|r| seen.insert(r.clone())).collect();
    let denom = (&rb2 * &cn).to_f64();
    let mut roots: Vec<ShellRoot> = uniq
        .into_par_iter()
        .filter_map(|r| {
            let ip = LatticeVector::from_e(&r).ip(center);
            let n2 = ip.norm2();
            (n2 <= thresh).then(|| ShellRoot { height_sq: n2.to_f64() / denom, ip, root: r })
        })
        .collect();
    roots.sort_by(|a, b| a.height_sq.total_cmp(&b.height_sq).then_with(|| cmp_e(&a.root, &b.root)));
    Ok(RootShell { center: center.clone(), bound, roots })
}

fn cmp_e(a: &[Eisenstein], b: &[Eisenstein]) -> std::cmp::Ordering {
    a.iter().map(|x| (x.a, x.b)).cmp(b.iter().map(|x| (x.a, x.b)))
}

/// Roots of height ≤ `bound` (relative to ρ̄).
pub fn enumerate_roots(lat: &Lattice, bound: f64) -> Result<RootShell, AutoformError> {
    shell_around(lat, &lat.rho_bar(), bound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CenterChoice {
    /// Shells measured from ρ̄.
    RhoBar,
    /// Shells measured from the evaluation point.
    Point,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SeriesParams {
    pub m: u32,
    pub bound: f64,
    pub center: CenterChoice,
}

impl Default for SeriesParams {
    fn default() -> Self {
        SeriesParams { m: 2, bound: 3.0, center: CenterChoice::Point }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShellContribution {
    /// Heights in (upto − SHELL_STEP, upto].
    pub upto: f64,
    pub roots: usize,
    pub contribution: Complex64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesValue {
    pub value: Complex64,
    /// |contribution of the last shell|.
    pub truncation_error: f64,
    pub roots: usize,
    pub shells: Vec<ShellContribution>,
}

/// Σ over the shell of 6·⟨r, z⟩^{−6m}; each representative stands for its six unit multiples.
pub fn e_m_on_shell(shell: &RootShell, z: &LatticeVector, m: u32) -> Result<SeriesValue, AutoformError> {
    if m == 0 {
        return Err(AutoformError::BadExponent);
    }
    let zc = z.to_complex();
    let same_center = *z == shell.center;
    let nsh = (shell.bound / SHELL_STEP).ceil().max(1.0) as usize;
    let mut shells: Vec<ShellContribution> = (1..=nsh)
        .map(|k| ShellContribution {
            upto: (k as f64 * SHELL_STEP).min(shell.bound),
            roots: 0,
            contribution: Complex64::new(0.0, 0.0),
        })
        .collect();
    let mut total = Complex64::new(0.0, 0.0);
    for sr in &shell.roots {
        let ip = if same_center {
            if sr.ip.is_zero() {
                return Err(AutoformError::Pole);
            }
            sr.ip.to_complex()
        } else {
            let rc: Vec<Complex64> = sr.root.iter().map(|x| x.to_complex()).collect();
            ip_c(&rc, &zc)
        };
        if ip.norm() == 0.0 {
            return Err(AutoformError::Pole);
        }
        let term = 6.0 * ip.powi(-(6 * m as i32));
        total += term;
        let h = sr.height_sq.sqrt();
        let k = (((h / SHELL_STEP) - 1e-12).ceil().max(1.0) as usize - 1).min(nsh - 1);
        shells[k].roots += 1;
        shells[k].contribution += term;
    }
    let truncation_error = shells.last().map(|s| s.contribution.norm()).unwrap_or(0.0);
    Ok(SeriesValue { value: total, truncation_error, roots: shell.roots.len(), shells })
}

pub fn e_m(lat: &Lattice, z: &LatticeVector, params: &SeriesParams) -> Result<SeriesValue, AutoformError> {
    let center = match params.center {
        CenterChoice::RhoBar => lat.rho_bar(),
        CenterChoice::Point => z.clone(),
    };
    let shell = shell_around(lat, &center, params.bound)?;
    e_m_on_shell(&shell, z, params.m)
}

/// z(τ) = (1 + pτ) w_P + ω²(τ − p) w_L.
pub fn lift(lat: &Lattice, tau: &Cyclo12) -> Result<LatticeVector, AutoformError> {
    let (a, b) = beta_inv(tau)?;
    Ok(lat.fixed_lattice().from_f_coords(&a, &b))
}

pub fn restrict_to_f(lat: &Lattice, tau: &Cyclo12, params: &SeriesParams) -> Result<SeriesValue, AutoformError> {
    e_m(lat, &lift(lat, tau)?, params)
}

#[derive(Clone, Debug, Serialize)]
pub struct AutomorphyReport {
    pub g: UnimodularMatrix,
    pub tau: Cyclo12,
    pub g_tau: Cyclo12,
    /// z(gτ)·j = g₁·z(τ).
    pub j: Cyclo12,
    /// j = cτ + d.
    pub j_is_cocycle: bool,
    pub f_tau: Complex64,
    pub f_g_tau: Complex64,
    pub roots_tau: usize,
    pub roots_g_tau: usize,
    /// Both sides, the gτ side rescaled by |j|^{−6m}.
    pub truncation_error: f64,
    /// |j^{−6m}F(gτ) − F(τ)|/|F(τ)|.
    pub defect: f64,
}

fn ratio(u: (&Cyclo12, &Cyclo12), v: (&Cyclo12, &Cyclo12)) -> Option<Cyclo12> {
    // u = j·v
    let j = if !v.0.is_zero() { u.0.div(v.0).ok()? } else { u.1.div(v.1).ok()? };
    (&(&j * v.0) == u.0 && &(&j * v.1) == u.1).then_some(j)
}

fn compare(
    lat: &Lattice,
    tau: &Cyclo12,
    image: &Cyclo12,
    j: &Cyclo12,
    params: &SeriesParams,
) -> Result<(SeriesValue, SeriesValue, f64), AutoformError> {
    let f = restrict_to_f(lat, tau, params)?;
    let fg = restrict_to_f(lat, image, params)?;
    let scale = f.value.norm();
    if scale < 1e-300 {
        return Err(AutoformError::NearPole(scale));
    }
    // relative to |j^{6m} F(τ)|, so the defect does not scale with |j|
    let jf = j.to_complex().powi(-(6 * params.m as i32));
    let defect = (jf * fg.value - f.value).norm() / scale;
    Ok((f, fg, defect))
}

/// Compares F(gτ) with j(g,τ)^{6m}F(τ), each side from its own shell.
pub fn automorphy_check(
    lat: &Lattice,
    g: &UnimodularMatrix,
    tau: &Cyclo12,
    params: &SeriesParams,
) -> Result<AutomorphyReport, AutoformError> {
    if !extension_lambda(g)?.extends {
        return Err(AutoformError::NoExtension);
    }
    let g1 = conjugate_by_beta(g).ok_or(ModularError::NotInAutF)?;
    let g_tau = g.apply_exact(tau)?;
    let (a, b) = beta_inv(tau)?;
    let ce = |x: Eisenstein| Cyclo12::from(x);
    let a1 = &(&ce(g1[(0, 0)]) * &a) + &(&ce(g1[(0, 1)]) * &b);
    let b1 = &(&ce(g1[(1, 0)]) * &a) + &(&ce(g1[(1, 1)]) * &b);
    let (ga, gb) = beta_inv(&g_tau)?;
    let j = ratio((&a1, &b1), (&ga, &gb)).ok_or(AutoformError::Modular(ModularError::Degenerate))?;
    let j_is_cocycle = j == g.cocycle(tau);
    let (f, fg, defect) = compare(lat, tau, &g_tau, &j, params)?;
    let jscale = j.to_complex().norm().powi(-(6 * params.m as i32));
    Ok(AutomorphyReport {
        g: *g,
        tau: tau.clone(),
        g_tau,
        j,
        j_is_cocycle,
        f_tau: f.value,
        f_g_tau: fg.value,
        roots_tau: f.roots,
        roots_g_tau: fg.roots,
        truncation_error: f.truncation_error.max(fg.truncation_error * jscale),
        defect,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaAutomorphy {
    pub tau: Cyclo12,
    pub image: Cyclo12,
    /// z(−1/τ)·j = σ·z(τ).
    pub j: Cyclo12,
    pub f_tau: Complex64,
    pub f_image: Complex64,
    pub defect: f64,
}

/// The same comparison for σ, which acts on H² as τ ↦ −1/τ.
pub fn sigma_automorphy(
    lat: &Lattice,
    sigma: &Sigma,
    tau: &Cyclo12,
    params: &SeriesParams,
) -> Result<SigmaAutomorphy, AutoformError> {
    let z = lift(lat, tau)?;
    let sz = sigma.apply(&z);
    let image = UnimodularMatrix::S.apply_exact(tau)?;
    let zi = lift(lat, &image)?;
    let f = lat.fixed_lattice();
    let (sa, sb) = f.f_coords(&sz).ok_or(ModularError::NotInF)?;
    let (ia, ib) = f.f_coords(&zi).ok_or(ModularError::NotInF)?;
    let j = ratio((&sa, &sb), (&ia, &ib)).ok_or(AutoformError::Modular(ModularError::Degenerate))?;
    let (fv, fi, defect) = compare(lat, tau, &image, &j, params)?;
    Ok(SigmaAutomorphy { tau: tau.clone(), image, j, f_tau: fv.value, f_image: fi.value, defect })
}

#[derive(Clone, Debug, Serialize)]
pub struct ShellStability {
    pub tau: Cyclo12,
    pub m: u32,
    pub shells: Vec<ShellContribution>,
    /// |contribution| strictly decreasing over the last `steps` shells.
    pub steps: usize,
    pub decreasing: bool,
}

/// Shell contributions at z(τ) up to `bound`, checked over the last `steps` shell steps.
pub fn shell_stability(
    lat: &Lattice,
    tau: &Cyclo12,
    m: u32,
    bound: f64,
    steps: usize,
) -> Result<ShellStability, AutoformError> {
    let v = restrict_to_f(lat, tau, &SeriesParams { m, bound, center: CenterChoice::Point })?;
    let tail: Vec<f64> = v.shells.iter().rev().take(steps + 1).map(|s| s.contribution.norm()).collect();
    let decreasing = tail.len() == steps + 1 && tail.windows(2).all(|w| w[0] < w[1]);
    Ok(ShellStability { tau: tau.clone(), m, shells: v.shells, steps, decreasing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leechlat::build_default;

    #[test]
    fn simple_roots_are_the_closest() {
        let lat = build_default();
        let s = enumerate_roots(&lat, 1.01).unwrap();
        assert_eq!(s.roots.len(), 26);
        let want: HashSet<EVec> = lat.roots().iter().map(|r| projective_key(r)).collect();
        assert!(s.roots.iter().all(|r| want.contains(&r.root)));
    }

    #[test]
    fn cap_enforced() {
        let lat = build_default();
        assert_eq!(enumerate_roots(&lat, 4.5).unwrap_err(), AutoformError::CapExceeded(4.5));
    }
}
