//! The lattice L built from D, its simple roots, w_P, w_L, ρ̄, the fixed
//! lattice F and its complement, discriminant groups and σ.

mod disc;
mod fixed;
mod hnf;
mod vector;

use std::collections::HashSet;

use serde::Serialize;

use crate::exactnum::{Cyclo12, EisMatrix, Eisenstein, RealQ3};
use crate::plane::IncidencePlane;

pub use disc::{disc_group, realify, smith_diagonal, DiscGroup};
pub use fixed::{fperp_generators, gram_of, pi_f_x0_is_sigma_p_over_13, sigma_discriminant_check, FixedLattice, Sigma};
pub use hnf::{det_cyclo, hnf, inverse_cyclo, solve_echelon, to_cyclo};
pub use vector::{add_e, ip_c, ip_e, norm_e, scale_e, sub_e, unit_ratio, EVec, LatticeVector};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("|p|² = {norm} but q = {q}")]
    PrimeNorm { norm: i64, q: usize },
    #[error("degenerate Gram matrix")]
    Degenerate,
    #[error("basis validation failed: {0}")]
    Basis(String),
    #[error("σ construction failed: {0}")]
    Sigma(String),
    #[error("vector is not in the lattice")]
    NotInLattice,
    #[error("unsupported for q = {0}")]
    Unsupported(usize),
}

/// The ambient space with its 2n simple roots and an integral basis of L.
#[derive(Clone, Debug)]
pub struct Lattice {
    plane: IncidencePlane,
    p: Eisenstein,
    roots: Vec<EVec>,
    w_p: EVec,
    w_l: EVec,
    basis: Vec<EVec>,
    /// Residues mod p̄ of L, when p̄ℰ^{n+1} ⊆ L has been verified.
    code: Option<HashSet<Vec<u8>>>,
    code_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IpdReport {
    pub pairs_checked: usize,
    pub mismatches: Vec<(usize, usize)>,
    pub w_p_norm: Eisenstein,
    pub gram_f: [[Eisenstein; 2]; 2],
    pub wl_identities_ok: bool,
    pub eq_ipwpwl_ok: bool,
}

impl IpdReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.w_p_norm == Eisenstein::from_int(3)
            && self.wl_identities_ok
            && self.eq_ipwpwl_ok
            && self.gram_f
                == [[Eisenstein::from_int(3), Eisenstein::P * 4], [Eisenstein::P_BAR * 4, Eisenstein::from_int(3)]]
    }
}

/// Builds L from the incidence plane and a prime `p` with |p|² = q.
pub fn build_l(plane: &IncidencePlane, p: Eisenstein) -> Result<Lattice, LatticeError> {
    let q = plane.q();
    if p.norm() != q as i64 {
        return Err(LatticeError::PrimeNorm { norm: p.norm(), q });
    }
    let n = plane.n();
    let dim = n + 1;
    let pbar = p.conj();
    let mut roots = Vec::with_capacity(2 * n);
    for x in 0..n {
        let mut v = vec![Eisenstein::ZERO; dim];
        v[x + 1] = pbar;
        roots.push(v);
    }
    for l in n..2 * n {
        let mut v = vec![Eisenstein::ZERO; dim];
        v[0] = Eisenstein::ONE;
        for x in plane.points_on(l) {
            v[x + 1] = -Eisenstein::ONE;
        }
        roots.push(v);
    }
    let mut w_p = vec![Eisenstein::ZERO; dim];
    w_p[0] = pbar;
    let mut w_l = vec![-Eisenstein::ONE; dim];
    w_l[0] = Eisenstein::from_int(q as i64 + 1);

    let basis = hnf(&roots);
    if basis.len() != dim {
        return Err(LatticeError::Basis(format!("rank {} ≠ {}", basis.len(), dim)));
    }
    let mut lat = Lattice { plane: plane.clone(), p, roots, w_p, w_l, basis, code: None, code_dim: 0 };
    if lat.gram_det().is_zero() {
        return Err(LatticeError::Degenerate);
    }
    for v in [&lat.w_p, &lat.w_l] {
        if lat.coords(v).is_none() {
            return Err(LatticeError::Basis("w_P or w_L outside L".into()));
        }
    }
    if q == 3 {
        lat.install_code()?;
    }
    Ok(lat)
}

/// Builds L for q = 3, p = 2 + ω.
pub fn build_default() -> Lattice {
    let plane = crate::plane::build_plane(3).expect("q = 3 is supported");
    build_l(&plane, Eisenstein::P).expect("q = 3 lattice builds")
}

impl Lattice {
    fn install_code(&mut self) -> Result<(), LatticeError> {
        let dim = self.dim();
        let pbar = self.p.conj();
        for i in 0..dim {
            let mut v = vec![Eisenstein::ZERO; dim];
            v[i] = pbar;
            if self.coords(&v).is_none() {
                return Err(LatticeError::Basis(format!("p̄·e_{i} ∉ L")));
            }
        }
        // F₃-row reduction of the root residues
        let mut rows: Vec<Vec<u8>> =
            self.roots.iter().map(|r| r.iter().map(|x| x.residue_mod_pbar()).collect()).collect();
        let mut basis: Vec<Vec<u8>> = Vec::new();
        for j in 0..dim {
            let Some(pi) = rows.iter().position(|r| r[j] != 0) else { continue };
            let mut piv = rows.swap_remove(pi);
            let s = if piv[j] == 1 { 1 } else { 2 };
            for x in piv.iter_mut() {
                *x = (*x * s) % 3;
            }
            for r in rows.iter_mut() {
                let c = r[j];
                if c != 0 {
                    for (x, y) in r.iter_mut().zip(&piv) {
                        *x = (*x + 3 * 3 - c * y) % 3;
                    }
                }
            }
            basis.push(piv);
        }
        let k = basis.len();
        let mut code = HashSet::new();
        for idx in 0..3usize.pow(k as u32) {
            let mut w = vec![0u8; dim];
            let mut t = idx;
            for b in &basis {
                let c = (t % 3) as u8;
                t /= 3;
                for (x, y) in w.iter_mut().zip(b) {
                    *x = (*x + c * y) % 3;
                }
            }
            code.insert(w);
        }
        self.code = Some(code);
        self.code_dim = k;
        Ok(())
    }

    pub fn plane(&self) -> &IncidencePlane {
        &self.plane
    }

    pub fn p(&self) -> Eisenstein {
        self.p
    }

    /// Dimension n + 1 of the ambient space.
    pub fn dim(&self) -> usize {
        self.plane.n() + 1
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Simple root of vertex `v` (points first, then lines).
    pub fn root(&self, v: usize) -> &EVec {
        &self.roots[v]
    }

    pub fn roots(&self) -> &[EVec] {
        &self.roots
    }

    pub fn w_p(&self) -> &EVec {
        &self.w_p
    }

    pub fn w_l(&self) -> &EVec {
        &self.w_l
    }

    /// Echelon ℰ-basis of L.
    pub fn basis(&self) -> &[EVec] {
        &self.basis
    }

    /// Dimension of the F₃-code L/p̄ℰ^{n+1} (q = 3).
    pub fn code_dim(&self) -> usize {
        self.code_dim
    }

    /// Coordinates in the echelon basis.
    pub fn coords(&self, v: &[Eisenstein]) -> Option<Vec<Eisenstein>> {
        solve_echelon(&self.basis, v)
    }

    /// Vector from basis coordinates.
    pub fn from_coords(&self, c: &[Eisenstein]) -> EVec {
        let mut v = vec![Eisenstein::ZERO; self.dim()];
        for (ci, b) in c.iter().zip(&self.basis) {
            if !ci.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += *ci * *y;
                }
            }
        }
        v
    }

    /// Membership by solving in the echelon basis.
    pub fn contains_e(&self, v: &[Eisenstein]) -> bool {
        self.coords(v).is_some()
    }

    /// Membership by residues mod p̄ (q = 3); falls back to the basis solve.
    pub fn contains_fast(&self, v: &[Eisenstein]) -> bool {
        match &self.code {
            Some(code) => {
                let r: Vec<u8> = v.iter().map(|x| x.residue_mod_pbar()).collect();
                code.contains(&r)
            }
            None => self.contains_e(v),
        }
    }

    /// Membership for an exact vector with arbitrary ℚ(ζ₁₂) coordinates.
    pub fn membership(&self, v: &LatticeVector) -> bool {
        match v.to_e() {
            Some(e) => self.contains_e(&e),
            None => false,
        }
    }

    pub fn gram(&self) -> EisMatrix {
        let n = self.basis.len();
        let mut g = EisMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = ip_e(&self.basis[i], &self.basis[j]);
            }
        }
        g
    }

    pub fn gram_det(&self) -> Cyclo12 {
        det_cyclo(&to_cyclo(&self.gram()))
    }

    /// Whether p·Gram⁻¹ has all entries in ℰ.
    pub fn dual_scaling_integral(&self) -> bool {
        let inv = inverse_cyclo(&to_cyclo(&self.gram())).expect("nondegenerate");
        let p = Cyclo12::from(self.p);
        inv.iter().flatten().all(|x| (&p * x).to_eisenstein().is_some())
    }

    /// ρ_v: the root itself for points, ξ·root for lines.
    pub fn rho(&self, v: usize) -> LatticeVector {
        let r = LatticeVector::from_e(&self.roots[v]);
        if self.plane.is_point(v) {
            r
        } else {
            r.scale(&Cyclo12::xi())
        }
    }

    pub fn rho_scalar(&self, v: usize) -> Cyclo12 {
        if self.plane.is_point(v) {
            Cyclo12::one()
        } else {
            Cyclo12::xi()
        }
    }

    /// ρ̄ = (Σ_v ρ_v)/2n.
    pub fn rho_bar(&self) -> LatticeVector {
        let mut acc = LatticeVector::zero(self.dim());
        for v in 0..self.num_roots() {
            acc = &acc + &self.rho(v);
        }
        let k = num_rational::BigRational::new(1.into(), (self.num_roots() as i64).into());
        LatticeVector { s: acc.s.iter().map(|x| x.scale(&k)).collect() }
    }

    /// (w_P + ξ w_L)/(2(4 + √3)).
    pub fn rho_bar_closed_form(&self) -> LatticeVector {
        let wp = LatticeVector::from_e(&self.w_p);
        let wl = LatticeVector::from_e(&self.w_l).scale(&Cyclo12::xi());
        let denom = Cyclo12::from_ints(8, 4, 0, -2).inv().expect("nonzero"); // 2(4 + √3)
        (&wp + &wl).scale(&denom)
    }

    /// Exact ht(r)² = |⟨ρ̄, r⟩|²/|ρ̄|⁴ for an integral vector (q = 3).
    ///
    /// ht(r) = |(4 + √3) r₀ + S|/√3 with S the sum of the other coordinates.
    pub fn height_sq(&self, r: &[Eisenstein]) -> RealQ3 {
        height_sq_e(r)
    }

    /// Exact ht² through ρ̄, for any exact vector.
    pub fn height_sq_general(&self, r: &LatticeVector) -> RealQ3 {
        let rb = self.rho_bar();
        let nr = rb.norm();
        let num = rb.ip(r).norm2();
        num.div(&(&nr * &nr)).expect("|ρ̄|² ≠ 0")
    }

    /// Checks the inner products among simple roots, w_P and w_L.
    pub fn check_ipd(&self) -> IpdReport {
        let n = self.plane.n();
        let m = self.num_roots();
        let p = self.p;
        let mut mismatches = Vec::new();
        let mut count = 0;
        for u in 0..m {
            for v in u..m {
                count += 1;
                let expected = if u == v {
                    Eisenstein::from_int(-(self.plane.q() as i64))
                } else if self.plane.incident(u, v) {
                    if u < n {
                        p
                    } else {
                        p.conj()
                    }
                } else {
                    Eisenstein::ZERO
                };
                if ip_e(&self.roots[u], &self.roots[v]) != expected {
                    mismatches.push((u, v));
                }
            }
        }
        let wl_identities_ok = (0..n).all(|x| ip_e(&self.roots[x], &self.w_p).is_zero())
            && (n..m).all(|l| ip_e(&self.roots[l], &self.w_p) == p.conj());
        let eq_ipwpwl_ok = (0..n)
            .all(|x| ip_e(&self.w_p, &self.roots[x]).is_zero() && ip_e(&self.roots[x], &self.w_l) == p)
            && (n..m).all(|l| ip_e(&self.w_l, &self.roots[l]).is_zero() && ip_e(&self.w_p, &self.roots[l]) == p);
        IpdReport {
            pairs_checked: count,
            mismatches,
            w_p_norm: ip_e(&self.w_p, &self.w_p),
            gram_f: [
                [ip_e(&self.w_p, &self.w_p), ip_e(&self.w_p, &self.w_l)],
                [ip_e(&self.w_l, &self.w_p), ip_e(&self.w_l, &self.w_l)],
            ],
            wl_identities_ok,
            eq_ipwpwl_ok,
        }
    }

    /// The root is primitive: gcd of its basis coordinates is a unit.
    pub fn is_primitive(&self, r: &[Eisenstein]) -> bool {
        match self.coords(r) {
            Some(c) => c.iter().fold(Eisenstein::ZERO, |g, x| g.gcd(x)).is_unit(),
            None => false,
        }
    }

    /// Gram matrix of the reference basis (w_P, x₁, …, x_n).
    pub fn reference_gram(&self) -> EisMatrix {
        let mut vs = vec![self.w_p.clone()];
        vs.extend(self.roots[..self.plane.n()].iter().cloned());
        let k = vs.len();
        let mut g = EisMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                g[(i, j)] = ip_e(&vs[i], &vs[j]);
            }
        }
        g
    }
}

/// ht(r)² = |X + √3 Y|²/3 with X = 4r₀ + S, Y = r₀, S = Σ_{i≥1} rᵢ, expanded
/// as (N(X) + 3N(Y) + 2√3·Re(X Ȳ))/3.
pub fn height_sq_e(r: &[Eisenstein]) -> RealQ3 {
    let (a, b) = height_sq_times3_parts(r);
    let third = num_rational::BigRational::new(1.into(), 3.into());
    RealQ3::from_ints(a, b).scale(&third)
}

/// Integers (a, b) with 3·ht(r)² = a + b√3.
pub fn height_sq_times3_parts(r: &[Eisenstein]) -> (i64, i64) {
    let s: Eisenstein = r[1..].iter().copied().sum();
    let y = r[0];
    let x = y * 4 + s;
    let xy = x * y.conj();
    (x.norm() + 3 * y.norm(), 2 * xy.a - xy.b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_lattice_builds() {
        let l = build_default();
        assert_eq!(l.dim(), 14);
        assert_eq!(l.code_dim(), 7);
        assert!(l.check_ipd().passed());
        assert_eq!(l.check_ipd().pairs_checked, 351);
    }

    #[test]
    fn wrong_prime_rejected() {
        let pl = crate::plane::build_plane(3).unwrap();
        assert!(build_l(&pl, Eisenstein::P1).is_err());
    }

    #[test]
    fn rho_bar_matches_closed_form() {
        let l = build_default();
        assert_eq!(l.rho_bar(), l.rho_bar_closed_form());
        // |ρ̄|² = √3/(2(4 + √3))
        let want = RealQ3::sqrt3().div(&RealQ3::from_ints(8, 2)).unwrap();
        assert_eq!(l.rho_bar().norm(), want);
    }

    #[test]
    fn simple_roots_have_height_one() {
        let l = build_default();
        for v in 0..26 {
            assert!(l.height_sq(l.root(v)).is_one());
            assert_eq!(l.height_sq_general(&LatticeVector::from_e(l.root(v))), l.height_sq(l.root(v)));
        }
    }
}
