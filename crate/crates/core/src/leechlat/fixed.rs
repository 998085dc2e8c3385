//! The fixed lattice F = ℰw_P ⊕ ℰw_L, its orthogonal complement, projections
//! and the point–line swapping automorphism σ.

use num_rational::BigRational;
use serde::Serialize;

use crate::exactnum::{Cyclo12, EisMatrix, Eisenstein};

use super::{hnf, ip_e, solve_echelon, sub_e, EVec, Lattice, LatticeError, LatticeVector};

#[derive(Clone, Debug, Serialize)]
pub struct FixedLattice {
    pub w_p: LatticeVector,
    pub w_l: LatticeVector,
    pub gram: EisMatrix,
    pub rho_bar: LatticeVector,
    pub rho_plus: LatticeVector,
    pub rho_minus: LatticeVector,
    /// z₀ = w_P + θ w_L.
    pub z0: LatticeVector,
    /// Σ_P = 4w_P − p̄ w_L.
    pub sigma_p: LatticeVector,
}

impl FixedLattice {
    pub fn new(lat: &Lattice) -> Self {
        let w_p = LatticeVector::from_e(lat.w_p());
        let w_l = LatticeVector::from_e(lat.w_l());
        let mut gram = EisMatrix::zeros(2, 2);
        let ws = [lat.w_p(), lat.w_l()];
        for i in 0..2 {
            for j in 0..2 {
                gram[(i, j)] = ip_e(ws[i], ws[j]);
            }
        }
        let xi_wl = w_l.scale(&Cyclo12::xi());
        let plus = Cyclo12::from_ints(8, 4, 0, -2).inv().expect("2(4+√3) ≠ 0");
        let minus = Cyclo12::from_ints(8, -4, 0, 2).inv().expect("2(4−√3) ≠ 0");
        let rho_plus = (&w_p + &xi_wl).scale(&plus);
        let rho_minus = (&w_p - &xi_wl).scale(&minus);
        let z0 = &w_p + &w_l.scale(&Cyclo12::theta());
        let sigma_p = &w_p.scale(&Cyclo12::from_int(4)) - &w_l.scale(&Cyclo12::from(Eisenstein::P_BAR));
        FixedLattice { rho_bar: rho_plus.clone(), w_p, w_l, gram, rho_plus, rho_minus, z0, sigma_p }
    }

    /// Coefficients (a, b) with π_F(v) = a w_P + b w_L.
    pub fn pi_f_coeffs(&self, v: &LatticeVector) -> (Cyclo12, Cyclo12) {
        // J_F (a, b)ᵀ = (⟨w_P, v⟩, ⟨w_L, v⟩)ᵀ, J_F⁻¹ = adj(J_F)/det
        let g = |i, j| Cyclo12::from(self.gram[(i, j)]);
        let det = &(&g(0, 0) * &g(1, 1)) - &(&g(0, 1) * &g(1, 0));
        let dinv = det.inv().expect("F is nondegenerate");
        let s = self.w_p.ip(v);
        let t = self.w_l.ip(v);
        let a = &(&(&g(1, 1) * &s) - &(&g(0, 1) * &t)) * &dinv;
        let b = &(&(&g(0, 0) * &t) - &(&g(1, 0) * &s)) * &dinv;
        (a, b)
    }

    pub fn pi_f(&self, v: &LatticeVector) -> LatticeVector {
        let (a, b) = self.pi_f_coeffs(v);
        &self.w_p.scale(&a) + &self.w_l.scale(&b)
    }

    pub fn pi_fperp(&self, v: &LatticeVector) -> LatticeVector {
        v - &self.pi_f(v)
    }

    /// Column vector (u, v) for u w_P + v w_L; errors if v ∉ F^ℂ.
    pub fn f_coords(&self, v: &LatticeVector) -> Option<(Cyclo12, Cyclo12)> {
        let (a, b) = self.pi_f_coeffs(v);
        let back = &self.w_p.scale(&a) + &self.w_l.scale(&b);
        (back == *v).then_some((a, b))
    }

    pub fn from_f_coords(&self, a: &Cyclo12, b: &Cyclo12) -> LatticeVector {
        &self.w_p.scale(a) + &self.w_l.scale(b)
    }
}

/// Echelon ℰ-basis of span{x − x₀, l − l₀}, with x₀ the first point and
/// l₀ = d(x₀) the line with the same coordinates.
pub fn fperp_generators(lat: &Lattice) -> Vec<EVec> {
    let n = lat.plane().n();
    let x0 = lat.root(0).clone();
    let l0 = lat.root(lat.plane().dual_vertex(0)).clone();
    let mut gens = Vec::new();
    for x in 1..n {
        gens.push(sub_e(lat.root(x), &x0));
    }
    for l in n..2 * n {
        if l != lat.plane().dual_vertex(0) {
            gens.push(sub_e(lat.root(l), &l0));
        }
    }
    gens
}

impl Lattice {
    pub fn fixed_lattice(&self) -> FixedLattice {
        FixedLattice::new(self)
    }

    pub fn fperp_basis(&self) -> Vec<EVec> {
        hnf(&fperp_generators(self))
    }

    pub fn fperp_gram(&self) -> EisMatrix {
        gram_of(&self.fperp_basis())
    }

    pub fn f_gram(&self) -> EisMatrix {
        gram_of(&[self.w_p().clone(), self.w_l().clone()])
    }

    /// Whether α·x₀ ∈ F ⊕ F⊥.
    pub fn in_f_plus_fperp(&self, v: &[Eisenstein]) -> bool {
        let mut gens = vec![self.w_p().clone(), self.w_l().clone()];
        gens.extend(self.fperp_basis());
        let b = hnf(&gens);
        solve_echelon(&b, v).is_some()
    }
}

pub fn gram_of(vs: &[EVec]) -> EisMatrix {
    let k = vs.len();
    let mut g = EisMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = ip_e(&vs[i], &vs[j]);
        }
    }
    g
}

/// σ as a linear map, in the scaled frame (matrix over ℚ(ω) acting on
/// columns) and in the echelon basis of L (matrix over ℰ).
#[derive(Clone, Debug)]
pub struct Sigma {
    frame: Vec<Vec<Cyclo12>>,
    basis_matrix: EisMatrix,
}

impl Sigma {
    /// σ(x) = −ω·l_{d(x)}, σ(l) = x_{d⁻¹(l)}, with d the dot-product polarity.
    /// Built on the frame (w_P, x₁..x_n) via σ(w_P) = −ω w_L, then checked on
    /// all simple roots and for preservation of the form.
    pub fn new(lat: &Lattice) -> Result<Self, LatticeError> {
        let plane = lat.plane();
        let n = plane.n();
        let dim = n + 1;
        let pbar_inv = Cyclo12::from(lat.p().conj()).inv().expect("p̄ ≠ 0");
        let minus_omega = Cyclo12::from(-Eisenstein::OMEGA);
        let factor = &minus_omega * &pbar_inv;
        // columns: images of the frame vectors f_i = e_i
        let mut cols: Vec<Vec<Cyclo12>> = Vec::with_capacity(dim);
        cols.push(lat.w_l().iter().map(|x| &Cyclo12::from(*x) * &factor).collect());
        for x in 0..n {
            let l = plane.dual_vertex(x);
            cols.push(lat.root(l).iter().map(|c| &Cyclo12::from(*c) * &factor).collect());
        }
        let frame: Vec<Vec<Cyclo12>> = (0..dim).map(|i| (0..dim).map(|j| cols[j][i].clone()).collect()).collect();
        let mut s = Sigma { frame, basis_matrix: EisMatrix::zeros(0, 0) };

        for v in 0..2 * n {
            let img = s.apply_e(lat.root(v));
            let want = if plane.is_point(v) {
                crate::leechlat::scale_e(-Eisenstein::OMEGA, lat.root(plane.dual_vertex(v)))
            } else {
                lat.root(plane.dual_vertex(v)).clone()
            };
            if img.to_e().as_ref() != Some(&want) {
                return Err(LatticeError::Sigma(format!("wrong image of vertex {v}")));
            }
        }
        // σ*Jσ = J, J = diag(1, −1, …, −1)
        for i in 0..dim {
            for j in 0..dim {
                let ci = LatticeVector { s: s.frame.iter().map(|r| r[i].clone()).collect() };
                let cj = LatticeVector { s: s.frame.iter().map(|r| r[j].clone()).collect() };
                let want = if i != j {
                    0
                } else if i == 0 {
                    1
                } else {
                    -1
                };
                if ci.ip(&cj) != Cyclo12::from_int(want) {
                    return Err(LatticeError::Sigma("form not preserved".into()));
                }
            }
        }
        let mut bm_cols = Vec::with_capacity(dim);
        for b in lat.basis() {
            let img = s.apply_e(b).to_e().ok_or_else(|| LatticeError::Sigma("non-integral image".into()))?;
            bm_cols.push(lat.coords(&img).ok_or_else(|| LatticeError::Sigma("image outside L".into()))?);
        }
        s.basis_matrix = EisMatrix::from_cols(&bm_cols);
        Ok(s)
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector {
            s: self
                .frame
                .iter()
                .map(|row| row.iter().zip(&v.s).filter(|(_, b)| !b.is_zero()).map(|(a, b)| a * b).sum())
                .collect(),
        }
    }

    pub fn apply_e(&self, v: &[Eisenstein]) -> LatticeVector {
        self.apply(&LatticeVector::from_e(v))
    }

    /// Matrix over ℰ in the echelon basis of L (columns are images).
    pub fn basis_matrix(&self) -> &EisMatrix {
        &self.basis_matrix
    }

    pub fn frame_matrix(&self) -> &[Vec<Cyclo12>] {
        &self.frame
    }
}

/// x̄ = π_F(x₀) and the FFp(f) residue σ(x₀ − x̄) − 3p̄(x₀ − x̄), which must lie in F⊥.
pub fn sigma_discriminant_check(lat: &Lattice, sigma: &Sigma) -> bool {
    let f = lat.fixed_lattice();
    let x0 = LatticeVector::from_e(lat.root(0));
    let xbar = f.pi_f(&x0);
    let d = &x0 - &xbar;
    let lhs = sigma.apply(&d);
    let rhs = d.scale(&Cyclo12::from(Eisenstein::P_BAR * 3));
    let diff = &lhs - &rhs;
    match diff.to_e() {
        Some(e) => solve_echelon(&lat.fperp_basis(), &e).is_some(),
        None => false,
    }
}

/// π_F(x₀) = Σ_P/13.
pub fn pi_f_x0_is_sigma_p_over_13(lat: &Lattice) -> bool {
    let f = lat.fixed_lattice();
    let x0 = LatticeVector::from_e(lat.root(0));
    let thirteenth = BigRational::new(1.into(), 13.into());
    f.pi_f(&x0) == LatticeVector { s: f.sigma_p.s.iter().map(|c| c.scale(&thirteenth)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leechlat::{build_default, disc_group};
    use num_bigint::BigInt;

    #[test]
    fn fixed_lattice_identities() {
        let lat = build_default();
        let f = lat.fixed_lattice();
        assert!(f.z0.norm().is_zero());
        assert_eq!(f.rho_bar, lat.rho_bar());
        assert!(pi_f_x0_is_sigma_p_over_13(&lat));
        // |ρ̄₋|² = −√3/(2(4 − √3))
        let want = -crate::exactnum::RealQ3::sqrt3().div(&crate::exactnum::RealQ3::from_ints(8, -2)).unwrap();
        assert_eq!(f.rho_minus.norm(), want);
    }

    #[test]
    fn discriminants() {
        let lat = build_default();
        assert_eq!(lat.fperp_basis().len(), 12);
        assert_eq!(disc_group(&lat.f_gram()).unwrap().order, BigInt::from(39u64 * 39));
        assert_eq!(disc_group(&lat.fperp_gram()).unwrap().order, BigInt::from(169u64) * BigInt::from(3u64.pow(12)));
    }

    #[test]
    fn sigma_properties() {
        let lat = build_default();
        let s = Sigma::new(&lat).unwrap();
        assert_eq!(s.basis_matrix().pow(2).as_scalar(), Some(-Eisenstein::OMEGA));
        assert!(sigma_discriminant_check(&lat, &s));
        let rb = lat.rho_bar();
        assert_eq!(s.apply(&rb), rb.scale(&Cyclo12::xi()));
    }

    #[test]
    fn thirteen_x0_in_f_plus_fperp() {
        let lat = build_default();
        let x0 = lat.root(0).clone();
        for a in 1..13 {
            assert!(!lat.in_f_plus_fperp(&crate::leechlat::scale_e(Eisenstein::from_int(a), &x0)));
        }
        assert!(lat.in_f_plus_fperp(&crate::leechlat::scale_e(Eisenstein::from_int(13), &x0)));
        assert!(!lat.in_f_plus_fperp(&crate::leechlat::scale_e(Eisenstein::P1, &x0)));
    }
}
