//! Root types by their inner products with w_P and x₁..x₁₃, and the mirrors
//! low enough to matter.

use rayon::prelude::*;
use serde::Serialize;

use crate::exactnum::{Cyclo12, Eisenstein, RealQ3};
use crate::leechlat::{norm_e, scale_e, EVec, Lattice};
use crate::reflect::incident_pair_roots;

const THREE: Eisenstein = Eisenstein { a: 3, b: 0 };
const THETA: Eisenstein = Eisenstein::THETA;

/// ⟨w_P,r⟩ and the nonzero ⟨xᵢ,r⟩ as (coefficient, multiplicity); each
/// entry is the coefficient times a free sixth root of unity.
#[derive(Clone, Copy, Debug)]
pub struct RowSpec {
    pub j: u8,
    pub w: Eisenstein,
    pub groups: &'static [(Eisenstein, usize)],
    pub w_label: &'static str,
    pub x_label: &'static str,
    pub formula: &'static str,
}

pub const ROWS: [RowSpec; 7] = [
    RowSpec { j: 1, w: Eisenstein::ZERO, groups: &[(THREE, 1)], w_label: "0", x_label: "(3u1, 0^12)", formula: "-u1" },
    RowSpec {
        j: 2,
        w: Eisenstein::ZERO,
        groups: &[(THETA, 3)],
        w_label: "0",
        x_label: "θ(u1,u2,u3, 0^10)",
        formula: "(1/θ) Σ u",
    },
    RowSpec {
        j: 3,
        w: THETA,
        groups: &[(THREE, 1), (THETA, 1)],
        w_label: "θ",
        x_label: "(3u1, θu2, 0^11)",
        formula: "(1/θ)(-4-√3+u1-θu2)",
    },
    RowSpec {
        j: 4,
        w: THETA,
        groups: &[(THETA, 4)],
        w_label: "θ",
        x_label: "θ(u1..u4, 0^9)",
        formula: "(1/θ)(-4-√3+Σu)",
    },
    RowSpec { j: 5, w: THREE, groups: &[(THREE, 2)], w_label: "3", x_label: "3(u1,u2, 0^11)", formula: "4+√3-u1-u2" },
    RowSpec {
        j: 6,
        w: THREE,
        groups: &[(THREE, 1), (THETA, 3)],
        w_label: "3",
        x_label: "(3u1, θu2, θu3, θu4, 0^9)",
        formula: "4+√3-u1+(1/θ)Σ_{2..4} u",
    },
    RowSpec {
        j: 7, w: THREE, groups: &[(THETA, 6)], w_label: "3", x_label: "θ(u1..u6, 0^7)", formula: "4+√3+(1/θ)Σu"
    },
];

impl RowSpec {
    pub fn arity(&self) -> usize {
        self.groups.iter().map(|g| g.1).sum()
    }

    /// Σ|⟨xᵢ,r⟩|² − |⟨w_P,r⟩|², which must be 9 for a root.
    pub fn norm_defect(&self) -> i64 {
        self.groups.iter().map(|(c, m)| c.norm() * *m as i64).sum::<i64>() - self.w.norm()
    }
}

/// h̃t(r) = ⟨ρ̄,r⟩/|ρ̄|² from W = ⟨w_P,r⟩ and S = Σ⟨xᵢ,r⟩: W/√3 + (4W − S)/3.
pub fn ht_tilde(w: Eisenstein, s: Eisenstein) -> Cyclo12 {
    let third = num_rational::BigRational::new(1.into(), 3.into());
    let w = Cyclo12::from(w);
    let s = Cyclo12::from(s);
    let a = &w * &Cyclo12::sqrt3();
    let b = &w.scale_int(4) - &s;
    (&a + &b).scale(&third)
}

/// The closed forms of the fourth column, with `u` listed group by group.
pub fn closed_form_ht_tilde(j: u8, u: &[Eisenstein]) -> Cyclo12 {
    let cu: Vec<Cyclo12> = u.iter().map(|x| Cyclo12::from(*x)).collect();
    let sum = |s: &[Cyclo12]| s.iter().cloned().sum::<Cyclo12>();
    let inv_theta = Cyclo12::theta().inv().unwrap();
    let base = &Cyclo12::from_int(4) + &Cyclo12::sqrt3(); // 4 + √3
    match j {
        1 => -cu[0].clone(),
        2 => &inv_theta * &sum(&cu),
        3 => &inv_theta * &(&(&(-base) + &cu[0]) - &(&Cyclo12::theta() * &cu[1])),
        4 => &inv_theta * &(&(-base) + &sum(&cu)),
        5 => &(&base - &cu[0]) - &cu[1],
        6 => &(&base - &cu[0]) + &(&inv_theta * &sum(&cu[1..])),
        7 => &base + &(&inv_theta * &sum(&cu)),
        _ => panic!("row {j} out of range"),
    }
}

fn multisets(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..6 {
            cur.push(i);
            rec(k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 0, &mut Vec::new(), &mut out);
    out
}

/// All unit patterns up to permutation within each group.
fn unit_patterns(spec: &RowSpec) -> Vec<Vec<Eisenstein>> {
    let units = Eisenstein::units();
    let mut acc: Vec<Vec<Eisenstein>> = vec![vec![]];
    for &(_, m) in spec.groups {
        let ms = multisets(m);
        acc = acc
            .iter()
            .flat_map(|prefix| {
                ms.iter().map(move |idx| {
                    let mut v = prefix.clone();
                    v.extend(idx.iter().map(|&i| units[i]));
                    v
                })
            })
            .collect();
    }
    acc
}

fn pattern_sum(spec: &RowSpec, u: &[Eisenstein]) -> Eisenstein {
    let mut s = Eisenstein::ZERO;
    let mut k = 0;
    for &(c, m) in spec.groups {
        for _ in 0..m {
            s += c * u[k];
            k += 1;
        }
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct RootTypeRow {
    pub j: u8,
    pub w_pattern: String,
    pub x_pattern: String,
    pub formula: String,
    /// Σ|⟨xᵢ,r⟩|² = 9 + |⟨w_P,r⟩|² for the pattern.
    pub norm_identity: bool,
    pub patterns: usize,
    pub min_height_sq: RealQ3,
    pub min_height: f64,
    /// Same minimum computed from the closed form of the fourth column.
    pub formula_agrees: bool,
    pub exists: bool,
    /// Number of roots of this type with ⟨w_P,r⟩ normalised, when the scan is exhaustive.
    pub roots: Option<usize>,
    /// Least height among actual roots, when the scan is exhaustive and nonempty.
    pub min_root_height_sq: Option<RealQ3>,
}

/// Roots r ∈ L of a given type with ⟨w_P,r⟩ = spec.w exactly. With `first_only`
/// the scan stops at the first hit.
pub fn enumerate_type_roots(lat: &Lattice, spec: &RowSpec, first_only: bool) -> Vec<EVec> {
    let n = lat.plane().n();
    let arity = spec.arity();
    let coefs: Vec<Eisenstein> = spec.groups.iter().flat_map(|&(c, m)| std::iter::repeat_n(c, m)).collect();
    // position tuples: increasing within a group, disjoint across groups
    let mut placements: Vec<Vec<usize>> = vec![vec![]];
    for &(_, m) in spec.groups {
        let mut next = Vec::new();
        for pl in &placements {
            let free: Vec<usize> = (0..n).filter(|i| !pl.contains(i)).collect();
            for comb in combinations(&free, m) {
                let mut v = pl.clone();
                v.extend(comb);
                next.push(v);
            }
        }
        placements = next;
    }
    let units = Eisenstein::units();
    let three = Eisenstein::from_int(3);
    let base: EVec = scale_e(spec.w, lat.w_p());
    let test = |pl: &Vec<usize>, idx: &[usize]| -> Option<EVec> {
        let mut num = base.clone();
        for k in 0..arity {
            let x = coefs[k] * units[idx[k]];
            for (a, b) in num.iter_mut().zip(lat.root(pl[k])) {
                *a -= x * *b;
            }
        }
        let r: Option<EVec> = num.iter().map(|c| c.div_exact(&three)).collect();
        let r = r?;
        lat.contains_fast(&r).then_some(r)
    };
    let scan = |pl: &Vec<usize>| -> Vec<EVec> {
        let mut out = Vec::new();
        let mut idx = vec![0usize; arity];
        loop {
            if let Some(r) = test(pl, &idx) {
                out.push(r);
                if first_only {
                    return out;
                }
            }
            let mut k = 0;
            while k < arity {
                idx[k] += 1;
                if idx[k] < 6 {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == arity {
                return out;
            }
        }
    };
    if first_only {
        placements.par_iter().find_map_any(|pl| scan(pl).pop()).into_iter().collect()
    } else {
        placements.par_iter().flat_map_iter(|pl| scan(pl)).collect()
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn min_by_exact(vals: impl Iterator<Item = RealQ3>) -> Option<RealQ3> {
    vals.min()
}

/// Scans one row: minimum height over unit patterns and existence in L.
pub fn scan_row(lat: &Lattice, spec: &RowSpec) -> RootTypeRow {
    scan_row_with_roots(lat, spec).0
}

fn scan_row_with_roots(lat: &Lattice, spec: &RowSpec) -> (RootTypeRow, Vec<EVec>) {
    let pats = unit_patterns(spec);
    let min_sq = min_by_exact(pats.iter().map(|u| ht_tilde(spec.w, pattern_sum(spec, u)).norm2())).unwrap();
    let closed_min = min_by_exact(pats.iter().map(|u| closed_form_ht_tilde(spec.j, u).norm2())).unwrap();
    // rows 1–6 are cheap enough to scan exhaustively
    let exhaustive = spec.j <= 6;
    let roots = enumerate_type_roots(lat, spec, !exhaustive);
    debug_assert!(roots.iter().all(|r| norm_e(r) == -3));
    let min_root = if exhaustive { roots.iter().map(|r| lat.height_sq(r)).min() } else { None };
    let row = RootTypeRow {
        j: spec.j,
        w_pattern: spec.w_label.into(),
        x_pattern: spec.x_label.into(),
        formula: spec.formula.into(),
        norm_identity: spec.norm_defect() == 9,
        patterns: pats.len(),
        min_height: min_sq.to_f64().sqrt(),
        formula_agrees: closed_min == min_sq,
        min_height_sq: min_sq,
        exists: !roots.is_empty(),
        roots: exhaustive.then_some(roots.len()),
        min_root_height_sq: min_root,
    };
    (row, roots)
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1 {
    pub rows: Vec<RootTypeRow>,
    /// Type 4 roots (⟨w_P,r⟩ = θ) with ht(r) < 2.2.
    pub low_type4: usize,
    /// Each of them is a candidate mirror, up to units.
    pub low_type4_covered: bool,
}

pub fn table1_scan(lat: &Lattice) -> Table1 {
    let mut rows = Vec::new();
    let mut low = Vec::new();
    let bound = RealQ3::from_rational(num_rational::BigRational::new(121.into(), 25.into()));
    for spec in &ROWS {
        let (row, roots) = scan_row_with_roots(lat, spec);
        if spec.j == 4 {
            low = roots.into_iter().filter(|r| lat.height_sq(r) < bound).collect();
        }
        rows.push(row);
    }
    let keys: std::collections::HashSet<EVec> =
        candidate_mirrors(lat).iter().map(|c| projective_key(&c.root)).collect();
    let low_type4_covered = low.iter().all(|r| keys.contains(&projective_key(r)));
    Table1 { rows, low_type4: low.len(), low_type4_covered }
}

/// The representative of r up to units: first nonzero entry in the sector 0 ≤ b < a.
pub fn projective_key(r: &[Eisenstein]) -> EVec {
    let first = r.iter().find(|x| !x.is_zero()).copied().unwrap_or(Eisenstein::ONE);
    let (_, u) = first.canonical_associate();
    scale_e(u, r)
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateMirror {
    pub root: EVec,
    pub origin: String,
    pub height_sq: RealQ3,
}

/// Simple point roots, simple line roots and φ_x^{±1}(l) for incident (x, l),
/// deduplicated up to units.
pub fn candidate_mirrors(lat: &Lattice) -> Vec<CandidateMirror> {
    let plane = lat.plane();
    let mut out: Vec<CandidateMirror> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |root: EVec, origin: String| {
        if seen.insert(projective_key(&root)) {
            let height_sq = lat.height_sq(&root);
            out.push(CandidateMirror { root, origin, height_sq });
        }
    };
    for v in 0..lat.num_roots() {
        let kind = if plane.is_point(v) { "point" } else { "line" };
        push(lat.root(v).clone(), format!("{kind} {v}"));
    }
    for (x, l, e, r) in incident_pair_roots(lat) {
        let sign = if e > 0 { '+' } else { '-' };
        push(r, format!("phi_{x}^{sign}({l})"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leechlat::build_default;

    #[test]
    fn norm_identity_holds_for_every_row() {
        for r in ROWS {
            assert_eq!(r.norm_defect(), 9, "row {}", r.j);
        }
    }

    #[test]
    fn ht_tilde_matches_lattice_heights() {
        let lat = build_default();
        let x = lat.root(0);
        // a point root: W = 0, S = ⟨x,x⟩ = −3
        let h = ht_tilde(Eisenstein::ZERO, Eisenstein::from_int(-3));
        assert!(h.is_one());
        assert_eq!(lat.height_sq(x), RealQ3::one());
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(1).len(), 6);
        assert_eq!(multisets(3).len(), 56);
        assert_eq!(multisets(6).len(), 462);
    }

    #[test]
    fn candidates_count() {
        let lat = build_default();
        let c = candidate_mirrors(&lat);
        assert_eq!(c.len(), 130);
    }
}
