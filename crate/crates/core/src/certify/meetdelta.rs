//! Certificates that the 2-cells bounded by the braid paths avoid all mirrors
//! except the expected ones.

use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::chgeom::{
    cosh2_dist, fdist, fmidpoint, md_triangle_bound, triangle_mirror_intersect, zero_convex_combination, GeoTriangle,
    Intersection, Target, ZeroCombination,
};
use crate::exactnum::{Cyclo12, Eisenstein, RealQ3};
use crate::leechlat::{Lattice, LatticeVector};
use crate::reflect::{projectively_equal, reflect_apply, reflect_e};

use super::table1::{candidate_mirrors, Table1};
use super::table2::braid_path;
use super::{CertifyError, RootPair};

/// Safety margin for float comparisons against the certified bounds.
pub const MARGIN: f64 = 0.05;
/// The height bound on roots whose mirror meets Δ₁.
pub const HT_BOUND: f64 = 2.18;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[derive(Clone, Debug, Serialize)]
pub struct MirrorVerdict {
    pub origin: String,
    pub intersection: Intersection,
    /// Meets Δ₁ somewhere other than p₁.
    pub touching: bool,
    pub expected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub pair: String,
    pub vertices: (usize, usize),
    pub alpha: RealQ3,
    pub c: f64,
    pub ht_bound_sq: RealQ3,
    pub ht_bound: f64,
    pub ht_bound_ok: bool,
    /// Least of the row 5–7 minimum heights, and its gap over the bound.
    pub types_5_7_min_height: f64,
    pub types_5_7_gap: f64,
    pub types_5_7_excluded: bool,
    pub types_2_3_empty: bool,
    /// 9cosh² bounds on |⟨ρᵢ,r⟩|² for the 26 simple roots.
    pub rho_bounds: Vec<f64>,
    /// Indices with bound ≥ 12 − margin.
    pub rho_exceptions: Vec<usize>,
    pub rho_bounds_ok: bool,
    /// 9sinh² bound on |⟨w_P,r⟩|².
    pub wp_bound: f64,
    pub wp_bound_ok: bool,
    pub low_type4_covered: bool,
    pub mirrors: Vec<MirrorVerdict>,
    pub touching: usize,
    pub unexpected: Vec<String>,
    pub pass: bool,
}

fn is_vertex(t: &[RealQ3; 3], k: usize) -> bool {
    t.iter().enumerate().all(|(i, x)| if i == k { x.is_one() } else { x.is_zero() })
}

/// Checks Δ₁ = Conv(ρ̄, p₁, q) against the candidate mirrors, after the
/// distance bounds that reduce all mirrors to the candidates.
pub fn meetdelta_certificate(
    lat: &Lattice,
    pair: &RootPair,
    table1: &Table1,
) -> Result<CertificateReport, CertifyError> {
    let rb = lat.rho_bar();
    let nb = rb.norm();
    let pr = crate::chgeom::projections(&rb, &pair.rho1, &pair.rho2)?;

    // ht(r)² ≤ (|r|²/|ρ̄|²) sinh² d(ρ̄, q)
    let sinh2 = &cosh2_dist(&rb, &pr.q)? - &RealQ3::one();
    let ht_bound_sq = sinh2.scale(&rat(3, 1)).div(&nb).expect("nonzero");
    let ht_bound = ht_bound_sq.to_f64().sqrt();
    let ht_bound_ok = ht_bound_sq <= RealQ3::from_rational(rat(218 * 218, 100 * 100));
    let high = table1.rows.iter().filter(|r| r.j >= 5);
    let types_5_7_min_height = high.clone().map(|r| r.min_height).fold(f64::INFINITY, f64::min);
    let types_5_7_gap = types_5_7_min_height - HT_BOUND;
    let types_5_7_excluded = high.clone().all(|r| r.min_height_sq > ht_bound_sq) && types_5_7_gap >= MARGIN;
    let types_2_3_empty = table1.rows.iter().filter(|r| r.j == 2 || r.j == 3).all(|r| !r.exists);

    // the region that can still meet a mirror: Δ = Conv(p₁, q, s), split at the midpoint of [p₁, q]
    let (p1f, qf) = (pr.p1.to_complex(), pr.q.to_complex());
    let m = fmidpoint(&p1f, &qf);
    let tri_a = GeoTriangle::from_floats([p1f.clone(), m.clone(), pr.s.clone()])?;
    let tri_b = GeoTriangle::from_floats([m, qf.clone(), pr.s.clone()])?;
    let rho_bounds: Vec<f64> = (0..lat.num_roots())
        .map(|i| {
            let h = Target::Mirror(lat.rho(i).to_complex());
            let d = md_triangle_bound(&h, &tri_a).bound.max(md_triangle_bound(&h, &tri_b).bound);
            9.0 * d.cosh().powi(2)
        })
        .collect();
    let rho_exceptions: Vec<usize> = (0..rho_bounds.len()).filter(|&i| rho_bounds[i] >= 12.0 - MARGIN).collect();
    let expected_exceptions = if pair.kind.braids() { 3 } else { 0 };
    let rho_bounds_ok =
        rho_exceptions.len() == expected_exceptions && rho_exceptions.iter().all(|&i| !lat.plane().is_point(i));
    let wp = lat.w_p();
    let wpf = LatticeVector::from_e(wp).to_complex();
    let d_wp = [&p1f, &qf, &pr.s].iter().map(|x| fdist(&wpf, x)).fold(0.0, f64::max);
    let wp_bound = 9.0 * d_wp.sinh().powi(2);
    let wp_bound_ok = wp_bound < 10.0 - MARGIN;

    // the candidates against Δ₁
    let r1 = &pair.r1;
    let r2 = &pair.r2;
    let phis: Vec<_> = if pair.kind.braids() {
        [Eisenstein::OMEGA, Eisenstein::OMEGA_BAR].iter().map(|&a| reflect_e(r1, a, r2).expect("reflection")).collect()
    } else {
        vec![]
    };
    let cands = candidate_mirrors(lat);
    let mirrors: Vec<MirrorVerdict> = cands
        .par_iter()
        .map(|c| {
            let r = LatticeVector::from_e(&c.root);
            let x = triangle_mirror_intersect(&r, [&rb, &pr.p1, &pr.q]);
            let touching = match &x {
                Intersection::Empty => false,
                Intersection::Point { t } => !is_vertex(t, 1),
                _ => true,
            };
            let expected = match &x {
                Intersection::Empty => true,
                Intersection::Point { t } if is_vertex(t, 1) => true,
                Intersection::Edge { from, to } => {
                    projectively_equal(&c.root, r1)
                        && ((is_vertex(from, 1) && is_vertex(to, 2)) || (is_vertex(from, 2) && is_vertex(to, 1)))
                }
                Intersection::Point { t } => {
                    is_vertex(t, 2)
                        && (projectively_equal(&c.root, r2) || phis.iter().any(|p| projectively_equal(&c.root, p)))
                }
                Intersection::Face => false,
            };
            MirrorVerdict { origin: c.origin.clone(), intersection: x, touching, expected }
        })
        .collect();
    let touching = mirrors.iter().filter(|m| m.touching).count();
    let unexpected: Vec<String> = mirrors.iter().filter(|m| !m.expected).map(|m| m.origin.clone()).collect();
    let expected_touching = if pair.kind.braids() { 4 } else { 2 };
    let pass = ht_bound_ok
        && types_5_7_excluded
        && types_2_3_empty
        && rho_bounds_ok
        && wp_bound_ok
        && table1.low_type4_covered
        && unexpected.is_empty()
        && touching == expected_touching;
    Ok(CertificateReport {
        pair: pair.kind.name().into(),
        vertices: (pair.u, pair.v),
        alpha: pr.alpha.clone(),
        c: pr.c,
        ht_bound_sq,
        ht_bound,
        ht_bound_ok,
        types_5_7_min_height,
        types_5_7_gap,
        types_5_7_excluded,
        types_2_3_empty,
        rho_bounds,
        rho_exceptions,
        rho_bounds_ok,
        wp_bound,
        wp_bound_ok,
        low_type4_covered: table1.low_type4_covered,
        mirrors,
        touching,
        unexpected,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HalfPlaneCheck {
    /// 1 for σ₁′ (φ_{r₁} first), 2 for σ₂′.
    pub side: u8,
    /// "outer" for Conv(q′, z_{k−1}, z_k), "inner" for Conv(q′, z_k⁻, z_k⁺).
    pub triangle: String,
    pub k: usize,
    /// 1-based mirror index.
    pub j: usize,
    pub verdict: ZeroCombination,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PerturbReport {
    pub pair: String,
    pub epsilon: String,
    pub checks: Vec<HalfPlaneCheck>,
    /// (side, k, j) where a z_k lies on r_j⊥.
    pub vertex_zeros: Vec<(u8, usize, usize)>,
    pub failures: usize,
    pub pass: bool,
}

/// Checks that Conv(q′, σ₁′ ∪ σ₂′) meets none of the mirrors r_j, with
/// q′ = q + ερ̄ and z_k^∓ = z_k + εz_{k∓1}.
pub fn perturb_certificate(lat: &Lattice, pair: &RootPair, eps: &BigRational) -> Result<PerturbReport, CertifyError> {
    if !eps.is_positive() {
        return Err(CertifyError::BadEpsilon);
    }
    let e = Cyclo12::from_rational(eps.clone());
    let rb = lat.rho_bar();
    let mut checks = Vec::new();
    for (side, swap) in [(1u8, false), (2u8, true)] {
        let path = braid_path(lat, pair, swap)?;
        let qp = &path.proj.q + &rb.scale(&e);
        let z = &path.z;
        for (j, r) in path.roots.iter().enumerate() {
            let ipq = qp.ip(r);
            let ipz: Vec<Cyclo12> = z.iter().map(|x| x.ip(r)).collect();
            for k in 1..z.len() {
                let verdict = zero_convex_combination(&[ipq.clone(), ipz[k - 1].clone(), ipz[k].clone()]);
                let ok = match &verdict {
                    ZeroCombination::None => true,
                    ZeroCombination::VertexOnly { indices } => {
                        let zk = match indices[0] {
                            2 => Some(k - 1),
                            3 => Some(k),
                            _ => None,
                        };
                        zk.is_some_and(|zk| path.allowed.contains(&(zk, j)))
                    }
                    ZeroCombination::Nontrivial => false,
                };
                checks.push(HalfPlaneCheck { side, triangle: "outer".into(), k, j: j + 1, verdict, ok });
            }
            for k in (1..z.len()).step_by(2) {
                if k + 1 >= z.len() {
                    break;
                }
                let minus = &ipz[k] + &(&e * &ipz[k - 1]);
                let plus = &ipz[k] + &(&e * &ipz[k + 1]);
                let verdict = zero_convex_combination(&[ipq.clone(), minus, plus]);
                let ok = verdict == ZeroCombination::None;
                checks.push(HalfPlaneCheck { side, triangle: "inner".into(), k, j: j + 1, verdict, ok });
            }
        }
    }
    let mut vertex_zeros: Vec<(u8, usize, usize)> = checks
        .iter()
        .filter_map(|c| match &c.verdict {
            ZeroCombination::VertexOnly { indices } => Some((c.side, if indices[0] == 2 { c.k - 1 } else { c.k }, c.j)),
            _ => None,
        })
        .collect();
    vertex_zeros.sort();
    vertex_zeros.dedup();
    let failures = checks.iter().filter(|c| !c.ok).count();
    Ok(PerturbReport {
        pair: pair.kind.name().into(),
        epsilon: crate::exactnum::fmt_rational(eps),
        checks,
        vertex_zeros,
        failures,
        pass: failures == 0,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaRReport {
    pub vertex: usize,
    /// cosh² d(ρ̄, p_r), which must equal 1 + |ρ̄|²/3.
    pub cosh2_d0: RealQ3,
    pub d0_matches: bool,
    /// (2cosh²d₀ − 1)² versus cosh² d(ρ̄, φ_r ρ̄) = |⟨ρ̄,φ_r ρ̄⟩|²/|ρ̄|⁴.
    pub lhs: RealQ3,
    pub rhs: RealQ3,
    pub holds: bool,
}

/// d(ρ̄, p_r) > d(ρ̄, M) with M the midpoint of ρ̄ and φ_r(ρ̄), exactly.
pub fn delta_r_certificate(lat: &Lattice, v: usize) -> DeltaRReport {
    let rb = lat.rho_bar();
    let nb = rb.norm();
    let rho = lat.rho(v);
    let p = &rb + &rho.scale(&Cyclo12::from_real(&nb.scale(&rat(1, 3))));
    let cosh2_d0 = cosh2_dist(&rb, &p).expect("positive");
    let d0_matches = cosh2_d0 == &RealQ3::one() + &nb.scale(&rat(1, 3));
    let two_c = &cosh2_d0.scale(&rat(2, 1)) - &RealQ3::one();
    let lhs = &two_c * &two_c;
    let r = LatticeVector::from_e(lat.root(v));
    let img = reflect_apply(&r, &Cyclo12::omega(), &rb);
    let rhs = cosh2_dist(&rb, &img).expect("positive");
    let holds = lhs > rhs;
    DeltaRReport { vertex: v, cosh2_d0, d0_matches, lhs, rhs, holds }
}

pub fn delta_r_all(lat: &Lattice) -> Vec<DeltaRReport> {
    (0..lat.num_roots()).into_par_iter().map(|v| delta_r_certificate(lat, v)).collect()
}
