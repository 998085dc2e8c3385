//! The points z₀, z₁, … along the boundary paths and their inner products
//! with the mirrors met by the 2-cell.

use serde::Serialize;

use crate::chgeom::{open_half_plane, projections, Projections};
use crate::exactnum::Cyclo12;
use crate::leechlat::{Lattice, LatticeVector};
use crate::reflect::reflect_apply;

use super::{CertifyError, RootPair};

/// One boundary path σ and the mirrors r_j to test along it.
#[derive(Clone, Debug)]
pub struct ZPath {
    pub z: Vec<LatticeVector>,
    pub roots: Vec<LatticeVector>,
    /// (k, j): z_k may lie on r_j⊥ (0-based j).
    pub allowed: Vec<(usize, usize)>,
    pub proj: Projections,
}

/// The path starting with φ_{r₁} (or with φ_{r₂} when `swap`).
pub fn braid_path(lat: &Lattice, pair: &RootPair, swap: bool) -> Result<ZPath, CertifyError> {
    let rb = lat.rho_bar();
    let proj = projections(&rb, &pair.rho1, &pair.rho2)?;
    let r1 = LatticeVector::from_e(&pair.r1);
    let r2 = LatticeVector::from_e(&pair.r2);
    let w = Cyclo12::omega();
    let (ra, rb_, pa, pb) = if swap { (&r2, &r1, &proj.p2, &proj.p1) } else { (&r1, &r2, &proj.p1, &proj.p2) };
    let fa = |v: &LatticeVector| reflect_apply(ra, &w, v);
    let fb = |v: &LatticeVector| reflect_apply(rb_, &w, v);
    let mut z = vec![rb.clone(), pa.clone(), fa(&rb), fa(pb), fa(&fb(&rb))];
    let (roots, allowed) = if pair.kind.braids() {
        z.push(fa(&fb(pa)));
        z.push(fb(&fa(&fb(&rb))));
        let r3 = &r1 + &r2;
        let r4 = &r1 - &r2.scale(&w);
        let allowed = if swap { vec![(1, 1), (3, 3), (5, 0)] } else { vec![(1, 0), (3, 2), (5, 1)] };
        (vec![r1, r2, r3, r4], allowed)
    } else {
        let allowed = if swap { vec![(1, 1), (3, 0)] } else { vec![(1, 0), (3, 1)] };
        (vec![r1, r2], allowed)
    };
    Ok(ZPath { z, roots, allowed, proj })
}

#[derive(Clone, Debug, Serialize)]
pub struct Table2 {
    /// entries[j][k] = ⟨z_k, r_j⟩/|ρ̄|².
    pub entries: Vec<Vec<Cyclo12>>,
    pub c0_nonzero: bool,
    pub at_most_one_zero_per_row: bool,
    pub re_xi_nonneg: bool,
    /// Same with ξ̄ in place of ξ.
    pub re_xibar_nonneg: bool,
    /// Each row's nonzero entries lie in an open half-plane.
    pub rows_in_half_planes: bool,
    /// Each column's nonzero entries lie in an open half-plane.
    pub columns_in_half_planes: bool,
}

pub fn table2_values(lat: &Lattice, pair: &RootPair) -> Result<Table2, CertifyError> {
    if !pair.kind.braids() {
        return Err(CertifyError::NotBraiding);
    }
    let path = braid_path(lat, pair, false)?;
    let nb = Cyclo12::from_real(&lat.rho_bar().norm()).inv().expect("|ρ̄|² ≠ 0");
    let entries: Vec<Vec<Cyclo12>> =
        path.roots.iter().map(|r| path.z.iter().map(|z| &z.ip(r) * &nb).collect()).collect();
    let xi = Cyclo12::xi();
    let c0_nonzero = entries.iter().all(|row| !row[0].is_zero());
    let at_most_one_zero_per_row = entries.iter().all(|row| row.iter().filter(|c| c.is_zero()).count() <= 1);
    let re_xi_nonneg = entries.iter().flatten().all(|c| !(&xi * c).re().is_negative());
    let xib = xi.conj();
    let re_xibar_nonneg = entries.iter().flatten().all(|c| !(&xib * c).re().is_negative());
    let rows_in_half_planes = entries.iter().all(|row| open_half_plane(row));
    let columns_in_half_planes =
        (0..entries[0].len()).all(|k| open_half_plane(&entries.iter().map(|row| row[k].clone()).collect::<Vec<_>>()));
    Ok(Table2 {
        entries,
        c0_nonzero,
        at_most_one_zero_per_row,
        re_xi_nonneg,
        re_xibar_nonneg,
        rows_in_half_planes,
        columns_in_half_planes,
    })
}
