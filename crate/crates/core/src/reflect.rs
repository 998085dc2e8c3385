//! Complex reflections of L, the braid/commute table, deflation and heights.

use rayon::prelude::*;
use serde::Serialize;

use crate::exactnum::{Cyclo12, EisMatrix, Eisenstein, RealQ3};
use crate::leechlat::{ip_e, norm_e, scale_e, unit_ratio, EVec, Lattice, LatticeVector};
use crate::plane::TwelveGon;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ReflectError {
    #[error("root has norm {0}, expected −3")]
    BadNorm(i64),
    #[error("reflection does not preserve L")]
    NotIntegral,
    #[error("α must be a unit ≠ 1")]
    BadAlpha,
}

/// φ_r^α(v) = v − (1 − α)(⟨r,v⟩/⟨r,r⟩) r = v + (1 − α)⟨r,v⟩ r/3.
pub fn reflect_e(r: &[Eisenstein], alpha: Eisenstein, v: &[Eisenstein]) -> Result<EVec, ReflectError> {
    let c = (Eisenstein::ONE - alpha) * ip_e(r, v);
    let k = c.div_exact(&Eisenstein::from_int(3)).ok_or(ReflectError::NotIntegral)?;
    if k.is_zero() {
        return Ok(v.to_vec());
    }
    Ok(v.iter().zip(r).map(|(a, b)| *a + k * *b).collect())
}

/// Same map on exact vectors with arbitrary coefficients.
pub fn reflect_apply(r: &LatticeVector, alpha: &Cyclo12, v: &LatticeVector) -> LatticeVector {
    let rr = r.ip(r);
    let k = &(&(&Cyclo12::one() - alpha) * &r.ip(v)) * &rr.inv().expect("nonzero root norm");
    v - &r.scale(&k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reflection {
    pub root: EVec,
    pub alpha: Eisenstein,
    /// Matrix in the echelon basis of L (columns are images of basis vectors).
    pub matrix: EisMatrix,
}

impl Reflection {
    pub fn new(lat: &Lattice, root: &[Eisenstein], alpha: Eisenstein) -> Result<Self, ReflectError> {
        let n = norm_e(root);
        if n != -3 {
            return Err(ReflectError::BadNorm(n));
        }
        if !alpha.is_unit() || alpha == Eisenstein::ONE {
            return Err(ReflectError::BadAlpha);
        }
        let mut cols = Vec::with_capacity(lat.dim());
        for b in lat.basis() {
            let img = reflect_e(root, alpha, b)?;
            cols.push(lat.coords(&img).ok_or(ReflectError::NotIntegral)?);
        }
        Ok(Reflection { root: root.to_vec(), alpha, matrix: EisMatrix::from_cols(&cols) })
    }

    /// The ω-reflection in simple root `v`.
    pub fn simple(lat: &Lattice, v: usize) -> Self {
        Reflection::new(lat, lat.root(v), Eisenstein::OMEGA).expect("simple roots give reflections")
    }

    pub fn apply(&self, v: &[Eisenstein]) -> EVec {
        reflect_e(&self.root, self.alpha, v).expect("integral on L")
    }

    pub fn inverse(&self) -> Self {
        Reflection { root: self.root.clone(), alpha: self.alpha.conj(), matrix: self.matrix.pow(2) }
    }
}

/// Matrices of the 2n simple ω-reflections.
pub fn simple_reflections(lat: &Lattice) -> Vec<EisMatrix> {
    (0..lat.num_roots()).into_par_iter().map(|v| Reflection::simple(lat, v).matrix).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    Braid,
    Commute,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationEntry {
    pub u: usize,
    pub v: usize,
    pub kind: RelationKind,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationsReport {
    pub pairs: usize,
    pub braid: usize,
    pub commute: usize,
    pub failures: usize,
    pub entries: Vec<RelationEntry>,
}

impl RelationsReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Checks φ_rφ_sφ_r = φ_sφ_rφ_s on edges of D and φ_rφ_s = φ_sφ_r otherwise.
pub fn verify_relations(lat: &Lattice) -> RelationsReport {
    let mats = simple_reflections(lat);
    let m = lat.num_roots();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| ((u + 1)..m).map(move |v| (u, v))).collect();
    let entries: Vec<RelationEntry> = pairs
        .par_iter()
        .map(|&(u, v)| {
            let (a, b) = (&mats[u], &mats[v]);
            let ab = a * b;
            let ba = b * a;
            if lat.plane().adjacent(u, v) {
                let holds = &ab * a == &ba * b;
                RelationEntry { u, v, kind: RelationKind::Braid, holds }
            } else {
                RelationEntry { u, v, kind: RelationKind::Commute, holds: ab == ba }
            }
        })
        .collect();
    let braid = entries.iter().filter(|e| e.kind == RelationKind::Braid).count();
    let failures = entries.iter().filter(|e| !e.holds).count();
    RelationsReport { pairs: entries.len(), braid, commute: entries.len() - braid, failures, entries }
}

/// A word in the simple reflections: (vertex, ±1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordOverD(pub Vec<(usize, i8)>);

impl WordOverD {
    pub fn evaluate(&self, mats: &[EisMatrix]) -> EisMatrix {
        let dim = mats[0].rows();
        let mut acc = EisMatrix::identity(dim);
        for &(v, e) in &self.0 {
            let m = if e >= 0 { mats[v].clone() } else { mats[v].pow(2) };
            acc = &acc * &m;
        }
        acc
    }

    pub fn inverse(&self) -> WordOverD {
        WordOverD(self.0.iter().rev().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn concat(&self, o: &WordOverD) -> WordOverD {
        let mut w = self.0.clone();
        w.extend_from_slice(&o.0);
        WordOverD(w)
    }

    fn of(vs: impl IntoIterator<Item = usize>) -> WordOverD {
        WordOverD(vs.into_iter().map(|v| (v, 1)).collect())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeflateResult {
    pub gon: [usize; 12],
    /// φ_{y₁} φ_{y₂} ⋯ φ_{y₁₀}(y₁₁).
    pub vector: EVec,
    /// u with vector = u·y₁₂, if any.
    pub unit: Option<Eisenstein>,
}

pub fn deflate_check(lat: &Lattice, gon: &TwelveGon) -> DeflateResult {
    let mut v = lat.root(gon.y(11)).clone();
    for k in (1..=10).rev() {
        v = reflect_e(lat.root(gon.y(k)), Eisenstein::OMEGA, &v).expect("simple reflection");
    }
    let unit = unit_ratio(lat.root(gon.y(12)), &v);
    DeflateResult { gon: gon.vertices, vector: v, unit }
}

/// (y₁₁⋯y₃) y₂⁻¹ y₁ y₂ (y₁₁⋯y₃)⁻¹ = (y₂⋯y₁₀) y₁₁ (y₂⋯y₁₀)⁻¹ as matrices.
pub fn min_generation_identity(lat: &Lattice, gon: &TwelveGon, mats: &[EisMatrix]) -> bool {
    let _ = lat;
    let y = |k: usize| gon.y(k);
    let a = WordOverD::of((3..=11).rev().map(y));
    let mid = WordOverD(vec![(y(2), -1), (y(1), 1), (y(2), 1)]);
    let lhs = a.concat(&mid).concat(&a.inverse());
    let b = WordOverD::of((2..=10).map(y));
    let rhs = b.concat(&WordOverD(vec![(y(11), 1)])).concat(&b.inverse());
    lhs.evaluate(mats) == rhs.evaluate(mats)
}

/// Exact ht(r)² and its float square root.
pub fn height(lat: &Lattice, r: &[Eisenstein]) -> (RealQ3, f64) {
    let h2 = lat.height_sq(r);
    let f = h2.to_f64().sqrt();
    (h2, f)
}

/// |1 + ξ|² = 2 + √3.
pub fn one_plus_xi_sq() -> RealQ3 {
    RealQ3::from_ints(2, 1)
}

/// The 104 roots φ_x^{±1}(l) over incident pairs (x, l), in (x, l, ±) order.
pub fn incident_pair_roots(lat: &Lattice) -> Vec<(usize, usize, i8, EVec)> {
    let plane = lat.plane();
    let n = plane.n();
    let mut out = Vec::new();
    for x in 0..n {
        for l in plane.lines_through(x) {
            for (e, alpha) in [(1i8, Eisenstein::OMEGA), (-1i8, Eisenstein::OMEGA_BAR)] {
                let r = reflect_e(lat.root(x), alpha, lat.root(l)).expect("simple reflection");
                out.push((x, l, e, r));
            }
        }
    }
    out
}

/// Whether some unit multiple of `u` equals `v`.
pub fn projectively_equal(u: &[Eisenstein], v: &[Eisenstein]) -> bool {
    unit_ratio(u, v).is_some()
}

pub fn scale_root(u: Eisenstein, r: &[Eisenstein]) -> EVec {
    scale_e(u, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leechlat::build_default;

    #[test]
    fn eigen_and_order() {
        let lat = build_default();
        let r = lat.root(0);
        assert_eq!(reflect_e(r, Eisenstein::OMEGA, r).unwrap(), scale_e(Eisenstein::OMEGA, r));
        let phi = Reflection::simple(&lat, 0);
        assert!(phi.matrix.pow(3).is_identity());
        assert_eq!(phi.inverse().matrix, Reflection::new(&lat, r, Eisenstein::OMEGA_BAR).unwrap().matrix);
        // a root orthogonal to r is fixed
        assert_eq!(reflect_e(r, Eisenstein::OMEGA, lat.root(1)).unwrap(), lat.root(1).clone());
    }

    #[test]
    fn reflections_preserve_gram() {
        let lat = build_default();
        let g = lat.gram();
        for m in simple_reflections(&lat) {
            assert_eq!(&(&m.adjoint() * &g) * &m, g);
        }
    }

    #[test]
    fn bad_norm_rejected() {
        let lat = build_default();
        assert!(Reflection::new(&lat, lat.w_p(), Eisenstein::OMEGA).is_err());
    }

    #[test]
    fn incident_pair_heights() {
        let lat = build_default();
        let rs = incident_pair_roots(&lat);
        assert_eq!(rs.len(), 104);
        for (_, _, _, r) in &rs {
            assert_eq!(norm_e(r), -3);
            assert_eq!(lat.height_sq(r), one_plus_xi_sq());
        }
        for i in 0..rs.len() {
            for j in (i + 1)..rs.len() {
                assert!(!projectively_equal(&rs[i].3, &rs[j].3));
            }
        }
    }

    #[test]
    fn general_reflection_matches_integral_one() {
        let lat = build_default();
        let r = LatticeVector::from_e(lat.root(14));
        let v = LatticeVector::from_e(lat.root(0));
        let got = reflect_apply(&r, &Cyclo12::omega(), &v);
        let want = reflect_e(lat.root(14), Eisenstein::OMEGA, lat.root(0)).unwrap();
        assert_eq!(got, LatticeVector::from_e(&want));
    }
}
