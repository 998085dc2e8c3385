//! Complex hyperbolic geometry on P₊(V): distances, projections, hull bounds
//! and exact mirror/triangle intersection.

use num_complex::Complex64;
use serde::Serialize;

use crate::exactnum::{Cyclo12, RealQ3};
use crate::leechlat::{ip_c, LatticeVector};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("expected a vector of positive norm")]
    NotPositive,
    #[error("expected a vector of negative norm")]
    NotNegative,
    #[error("triangle is not totally real")]
    NotReal,
    #[error("coincident inputs")]
    Coincident,
}

/// cosh² d([x],[y]) = |⟨x,y⟩|² / (|x|²|y|²), exactly.
pub fn cosh2_dist(x: &LatticeVector, y: &LatticeVector) -> Result<RealQ3, GeomError> {
    let (nx, ny) = (x.norm(), y.norm());
    if !nx.is_positive() || !ny.is_positive() {
        return Err(GeomError::NotPositive);
    }
    Ok(x.ip(y).norm2().div(&(&nx * &ny)).expect("positive"))
}

pub fn dist(x: &LatticeVector, y: &LatticeVector) -> Result<f64, GeomError> {
    Ok(acosh_sq(cosh2_dist(x, y)?.to_f64()))
}

/// sinh² d(x, r⊥) = |⟨r,x⟩|² / (−|r|²|x|²), exactly.
pub fn sinh2_point_mirror(x: &LatticeVector, r: &LatticeVector) -> Result<RealQ3, GeomError> {
    let (nx, nr) = (x.norm(), r.norm());
    if !nx.is_positive() {
        return Err(GeomError::NotPositive);
    }
    if !nr.is_negative() {
        return Err(GeomError::NotNegative);
    }
    Ok(r.ip(x).norm2().div(&(&nx * &(-nr))).expect("nonzero"))
}

pub fn dist_point_mirror(x: &LatticeVector, r: &LatticeVector) -> Result<f64, GeomError> {
    Ok(sinh2_point_mirror(x, r)?.to_f64().max(0.0).sqrt().asinh())
}

fn acosh_sq(c2: f64) -> f64 {
    c2.max(1.0).sqrt().acosh()
}

// ---- float views ----

pub type FVec = Vec<Complex64>;

fn fnorm(x: &[Complex64]) -> f64 {
    ip_c(x, x).re
}

pub fn fdist(x: &[Complex64], y: &[Complex64]) -> f64 {
    let c2 = ip_c(x, y).norm_sqr() / (fnorm(x) * fnorm(y));
    acosh_sq(c2)
}

pub fn fdist_point_mirror(x: &[Complex64], r: &[Complex64]) -> f64 {
    let s2 = ip_c(r, x).norm_sqr() / (fnorm(x) * -fnorm(r));
    s2.max(0.0).sqrt().asinh()
}

/// Geodesic midpoint of [x],[y] when ⟨x,y⟩ is real and positive.
pub fn fmidpoint(x: &[Complex64], y: &[Complex64]) -> FVec {
    let (a, b) = (fnorm(x).sqrt(), fnorm(y).sqrt());
    x.iter().zip(y).map(|(u, v)| u / a + v / b).collect()
}

/// A point or a mirror, as the target H of an md bound.
#[derive(Clone, Debug)]
pub enum Target {
    Point(FVec),
    Mirror(FVec),
}

impl Target {
    pub fn dist_to(&self, x: &[Complex64]) -> f64 {
        match self {
            Target::Point(z) => fdist(z, x),
            Target::Mirror(r) => fdist_point_mirror(x, r),
        }
    }
}

/// Three positive vectors whose pairwise inner products are real and positive.
#[derive(Clone, Debug)]
pub struct GeoTriangle {
    pub v: [FVec; 3],
}

impl GeoTriangle {
    pub fn new(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> Result<Self, GeomError> {
        for (x, y) in [(a, b), (b, c), (a, c)] {
            let g = x.ip(y);
            match g.to_real() {
                Some(t) if t.is_positive() => {}
                _ => return Err(GeomError::NotReal),
            }
        }
        for x in [a, b, c] {
            if !x.norm().is_positive() {
                return Err(GeomError::NotPositive);
            }
        }
        Ok(GeoTriangle { v: [a.to_complex(), b.to_complex(), c.to_complex()] })
    }

    /// Float vertices, trusted to span a totally real triangle.
    pub fn from_floats(v: [FVec; 3]) -> Result<Self, GeomError> {
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let g = ip_c(&v[i], &v[j]);
            if g.re <= 0.0 || g.im.abs() > 1e-9 * g.re.max(1.0) {
                return Err(GeomError::NotReal);
            }
        }
        Ok(GeoTriangle { v })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MdBound {
    /// min over i of d(xᵢ,H) + max of the two sides at xᵢ.
    pub bound: f64,
    /// For a point H, the exact max over the vertices.
    pub vertex_max: Option<f64>,
}

pub fn md_triangle_bound(h: &Target, t: &GeoTriangle) -> MdBound {
    let d = |i: usize, j: usize| fdist(&t.v[i], &t.v[j]);
    let bound = (0..3)
        .map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            h.dist_to(&t.v[i]) + d(i, j).max(d(i, k))
        })
        .fold(f64::INFINITY, f64::min);
    let vertex_max = match h {
        Target::Point(_) => Some(t.v.iter().map(|x| h.dist_to(x)).fold(0.0, f64::max)),
        Target::Mirror(_) => None,
    };
    MdBound { bound, vertex_max }
}

/// ρ̄ and its projections onto ρ₁⊥, ρ₂⊥ and ρ₁⊥ ∩ ρ₂⊥.
#[derive(Clone, Debug)]
pub struct Projections {
    pub p1: LatticeVector,
    pub p2: LatticeVector,
    pub q: LatticeVector,
    /// 3 if ⟨ρ₁,ρ₂⟩ = 0, 3 − √3 if ⟨ρ₁,ρ₂⟩ = √3.
    pub alpha: RealQ3,
    /// Positive root c with d(ρ̄ + c(ρ₁+ρ₂), ρ̄) = d₀.
    pub c: f64,
    pub s: FVec,
}

pub fn projections(
    rho_bar: &LatticeVector,
    rho1: &LatticeVector,
    rho2: &LatticeVector,
) -> Result<Projections, GeomError> {
    if rho1 == rho2 {
        return Err(GeomError::Coincident);
    }
    let nb = rho_bar.norm();
    let third = Cyclo12::from_real(&nb.scale(&num_rational::BigRational::new(1.into(), 3.into())));
    let p1 = rho_bar + &rho1.scale(&third);
    let p2 = rho_bar + &rho2.scale(&third);
    let g12 = rho1.ip(rho2).to_real().ok_or(GeomError::NotReal)?;
    let alpha = if g12.is_zero() {
        RealQ3::from_ints(3, 0)
    } else if g12 == RealQ3::sqrt3() {
        RealQ3::from_ints(3, -1)
    } else {
        return Err(GeomError::NotReal);
    };
    let k = Cyclo12::from_real(&nb.div(&alpha).expect("nonzero"));
    let q = rho_bar + &(rho1 + rho2).scale(&k);

    // (4 + (2α/|ρ̄|²)(1 + |ρ̄|²/3)) c² − (4/3)|ρ̄|² c − |ρ̄|²/3 = 0
    let b = nb.to_f64();
    let al = alpha.to_f64();
    let qa = 4.0 + (2.0 * al / b) * (1.0 + b / 3.0);
    let qb = -(4.0 / 3.0) * b;
    let qc = -b / 3.0;
    let c = (-qb + (qb * qb - 4.0 * qa * qc).sqrt()) / (2.0 * qa);
    let (rb, r1, r2) = (rho_bar.to_complex(), rho1.to_complex(), rho2.to_complex());
    let s = rb.iter().zip(r1.iter().zip(&r2)).map(|(x, (y, z))| x + (y + z) * c).collect();
    Ok(Projections { p1, p2, q, alpha, c, s })
}

/// Vertices of the polytope {t ≥ 0, Σt = 1, Σ tₖvₖ = 0}, exactly.
pub fn convex_zero_vertices(v: &[Cyclo12; 3]) -> Vec<[RealQ3; 3]> {
    let re: Vec<RealQ3> = v.iter().map(|x| x.re()).collect();
    let im: Vec<RealQ3> = v.iter().map(|x| x.im()).collect();
    let one = RealQ3::one();
    let zero = RealQ3::zero();
    let det3 = |c0: [&RealQ3; 3], c1: [&RealQ3; 3], c2: [&RealQ3; 3]| -> RealQ3 {
        &(&(c0[0] * &(&(c1[1] * c2[2]) - &(c1[2] * c2[1]))) - &(c1[0] * &(&(c0[1] * c2[2]) - &(c0[2] * c2[1]))))
            + &(c2[0] * &(&(c0[1] * c1[2]) - &(c0[2] * c1[1])))
    };
    let cols: Vec<[&RealQ3; 3]> = (0..3).map(|k| [&re[k], &im[k], &one]).collect();
    let rhs = [&zero, &zero, &one];
    let det = det3(cols[0], cols[1], cols[2]);
    if !det.is_zero() {
        let t = [
            det3(rhs, cols[1], cols[2]).div(&det).unwrap(),
            det3(cols[0], rhs, cols[2]).div(&det).unwrap(),
            det3(cols[0], cols[1], rhs).div(&det).unwrap(),
        ];
        return if t.iter().all(|x| !x.is_negative()) { vec![t] } else { vec![] };
    }
    let mut out: Vec<[RealQ3; 3]> = Vec::new();
    let mut push = |t: [RealQ3; 3]| {
        if !out.contains(&t) {
            out.push(t);
        }
    };
    for k in 0..3 {
        if v[k].is_zero() {
            let mut t = [RealQ3::zero(), RealQ3::zero(), RealQ3::zero()];
            t[k] = RealQ3::one();
            push(t);
        }
    }
    for k in 0..3 {
        for l in (k + 1)..3 {
            if v[k].is_zero() || v[l].is_zero() {
                continue;
            }
            // t_k v_k + t_l v_l = 0 with t_k/t_l = μ = −v_l v̄_k / |v_k|² > 0
            let Some(m) = (&v[l] * &v[k].conj()).to_real() else { continue };
            if !m.is_negative() {
                continue;
            }
            let mu = (-m).div(&v[k].norm2()).unwrap();
            let denom = &one + &mu;
            let mut t = [RealQ3::zero(), RealQ3::zero(), RealQ3::zero()];
            t[k] = mu.div(&denom).unwrap();
            t[l] = one.div(&denom).unwrap();
            push(t);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Intersection {
    Empty,
    /// Barycentric weights of the unique common point.
    Point {
        t: [RealQ3; 3],
    },
    /// The mirror contains a segment of the triangle; its endpoints.
    Edge {
        from: [RealQ3; 3],
        to: [RealQ3; 3],
    },
    Face,
}

/// Where the mirror r⊥ meets Conv(v_a, v_b, v_c) ⊂ V.
pub fn triangle_mirror_intersect(r: &LatticeVector, tri: [&LatticeVector; 3]) -> Intersection {
    let ips = [r.ip(tri[0]), r.ip(tri[1]), r.ip(tri[2])];
    // all three share an argument: nothing to solve
    let same_arg = ips.iter().all(|x| !x.is_zero())
        && (1..3).all(|k| (&ips[0] * &ips[k].conj()).to_real().is_some_and(|t| t.is_positive()));
    if same_arg {
        return Intersection::Empty;
    }
    let mut vs = convex_zero_vertices(&ips);
    match vs.len() {
        0 => Intersection::Empty,
        1 => Intersection::Point { t: vs.pop().unwrap() },
        2 => {
            let to = vs.pop().unwrap();
            Intersection::Edge { from: vs.pop().unwrap(), to }
        }
        _ => Intersection::Face,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ZeroCombination {
    None,
    /// 1-based positions of the single zero entry that is the only solution.
    VertexOnly {
        indices: Vec<usize>,
    },
    Nontrivial,
}

pub fn zero_convex_combination(values: &[Cyclo12; 3]) -> ZeroCombination {
    let vs = convex_zero_vertices(values);
    match vs.as_slice() {
        [] => ZeroCombination::None,
        [t] => match t.iter().position(|x| x.is_one()) {
            Some(k) => ZeroCombination::VertexOnly { indices: vec![k + 1] },
            None => ZeroCombination::Nontrivial,
        },
        _ => ZeroCombination::Nontrivial,
    }
}

/// Whether the nonzero entries lie in a common open half-plane.
pub fn open_half_plane(values: &[Cyclo12]) -> bool {
    let nz: Vec<&Cyclo12> = values.iter().filter(|x| !x.is_zero()).collect();
    // by Carathéodory it suffices that 0 avoids the hull of every triple
    for i in 0..nz.len() {
        for j in i..nz.len() {
            for k in j..nz.len() {
                if !convex_zero_vertices(&[nz[i].clone(), nz[j].clone(), nz[k].clone()]).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leechlat::build_default;

    #[test]
    fn zero_combination_cases() {
        let w_bar = Cyclo12::omega().conj();
        let cc = &Cyclo12::one() + &Cyclo12::sqrt3().inv().unwrap();
        let vals = [Cyclo12::one(), w_bar.clone(), &w_bar * &cc];
        assert_eq!(zero_convex_combination(&vals), ZeroCombination::None);
        assert_eq!(
            zero_convex_combination(&[Cyclo12::one(), Cyclo12::zero(), w_bar]),
            ZeroCombination::VertexOnly { indices: vec![2] }
        );
        assert_eq!(
            zero_convex_combination(&[Cyclo12::one(), Cyclo12::from_int(-1), Cyclo12::i()]),
            ZeroCombination::Nontrivial
        );
        // 0 strictly inside: 1, ω, ω²
        let third = || RealQ3::from_rational(num_rational::BigRational::new(1.into(), 3.into()));
        assert_eq!(
            convex_zero_vertices(&[Cyclo12::one(), Cyclo12::omega(), Cyclo12::omega().conj()]),
            vec![[third(), third(), third()]]
        );
    }

    #[test]
    fn dist_basics() {
        let lat = build_default();
        let rb = lat.rho_bar();
        assert!(dist(&rb, &rb).unwrap().abs() < 1e-12);
        let wp = LatticeVector::from_e(lat.w_p());
        let wl = LatticeVector::from_e(lat.w_l());
        let d1 = dist(&wp, &wl).unwrap();
        let d2 = dist(&wp, &rb).unwrap();
        assert!((d1 - 2.0 * d2).abs() < 1e-10);
        let r = LatticeVector::from_e(lat.root(0));
        assert!(dist_point_mirror(&r, &r).is_err());
    }

    #[test]
    fn rho_bar_equidistant() {
        let lat = build_default();
        let rb = lat.rho_bar();
        let expect = rb.norm().scale(&num_rational::BigRational::new(1.into(), 3.into()));
        for v in 0..26 {
            let r = LatticeVector::from_e(lat.root(v));
            assert_eq!(sinh2_point_mirror(&rb, &r).unwrap(), expect);
        }
    }
}
