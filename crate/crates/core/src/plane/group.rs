use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{normalize, GaloisField, IncidencePlane};

/// Permutation of the vertices of D; `p[v]` is the image of `v`.
pub type Perm = Vec<u8>;

/// Invertible 3×3 matrix over F_q (up to scalars), optionally followed by the
/// dot-product polarity, which swaps points and lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collineation {
    pub matrix: [[u8; 3]; 3],
    pub swaps_types: bool,
}

fn mat_vec(f: &GaloisField, m: &[[u8; 3]; 3], v: &[u8; 3]) -> [u8; 3] {
    let mut out = [0u8; 3];
    for (i, row) in m.iter().enumerate() {
        out[i] = f.dot(row, v);
    }
    out
}

fn det3(f: &GaloisField, m: &[[u8; 3]; 3]) -> u8 {
    let minor = |i: usize, j: usize, k: usize, l: usize| f.sub(f.mul(m[1][i], m[2][j]), f.mul(m[1][k], m[2][l]));
    let t0 = f.mul(m[0][0], minor(1, 2, 2, 1));
    let t1 = f.mul(m[0][1], minor(0, 2, 2, 0));
    let t2 = f.mul(m[0][2], minor(0, 1, 1, 0));
    f.add(f.sub(t0, t1), t2)
}

/// (M⁻¹)ᵀ via the cofactor matrix: (M⁻¹)ᵀ = cof(M)/det M.
fn inverse_transpose(f: &GaloisField, m: &[[u8; 3]; 3]) -> [[u8; 3]; 3] {
    let d = det3(f, m);
    assert!(d != 0, "singular collineation matrix");
    let di = f.inv(d);
    let mut out = [[0u8; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let r: Vec<usize> = (0..3).filter(|&r| r != i).collect();
            let c: Vec<usize> = (0..3).filter(|&c| c != j).collect();
            let mut cof = f.sub(f.mul(m[r[0]][c[0]], m[r[1]][c[1]]), f.mul(m[r[0]][c[1]], m[r[1]][c[0]]));
            if (i + j) % 2 == 1 {
                cof = f.neg(cof);
            }
            *x = f.mul(cof, di);
        }
    }
    out
}

impl Collineation {
    pub fn identity() -> Self {
        Collineation { matrix: [[1, 0, 0], [0, 1, 0], [0, 0, 1]], swaps_types: false }
    }

    /// Induced permutation of the 2n vertices of D.
    pub fn permutation(&self, plane: &IncidencePlane) -> Perm {
        let f = plane.field();
        let n = plane.n();
        let mit = inverse_transpose(f, &self.matrix);
        let mut perm = vec![0u8; 2 * n];
        for (x, t) in plane.points().iter().enumerate() {
            let img = normalize(f, mat_vec(f, &self.matrix, t));
            let v = plane.point_index(img);
            perm[x] = if self.swaps_types { v + n } else { v } as u8;
        }
        for (l, t) in plane.lines().iter().enumerate() {
            let img = normalize(f, mat_vec(f, &mit, t));
            let v = plane.line_vertex(img);
            perm[n + l] = if self.swaps_types { v - n } else { v } as u8;
        }
        perm
    }
}

/// Generators of PGL₃(F_q): elementary transvections E_ij(t) for t in an
/// F_p-basis of F_q, plus diag(g, 1, 1) for a primitive g.
pub fn collineation_generators(plane: &IncidencePlane) -> Vec<Collineation> {
    let f = plane.field();
    let g = f.primitive_element();
    let mut k = 0;
    let mut qq = 1;
    while qq < f.order() {
        qq *= f.characteristic();
        k += 1;
    }
    let mut ts = vec![1u8];
    for _ in 1..k {
        let last = *ts.last().unwrap();
        ts.push(f.mul(last, g));
    }
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for &t in &ts {
                let mut m = Collineation::identity().matrix;
                m[i][j] = t;
                gens.push(Collineation { matrix: m, swaps_types: false });
            }
        }
    }
    let mut d = Collineation::identity().matrix;
    d[0][0] = g;
    gens.push(Collineation { matrix: d, swaps_types: false });
    gens
}

pub fn polarity(_plane: &IncidencePlane) -> Collineation {
    Collineation { matrix: Collineation::identity().matrix, swaps_types: true }
}

pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn preserves_incidence(plane: &IncidencePlane, p: &Perm) -> bool {
    let m = plane.num_vertices();
    (0..m).all(|u| (0..m).all(|v| plane.adjacent(u, v) == plane.adjacent(p[u] as usize, p[v] as usize)))
}

/// A permutation group on the vertices of D, given by generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), degree);
        }
        PermGroup { degree, generators }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// All elements, by breadth-first closure. Panics past `cap` elements.
    pub fn elements(&self, cap: usize) -> Vec<Perm> {
        let id: Perm = (0..self.degree as u8).collect();
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut out = vec![id.clone()];
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = compose(g, &x);
                if seen.insert(y.clone()) {
                    assert!(seen.len() <= cap, "group larger than cap {cap}");
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn order(&self, cap: usize) -> usize {
        self.elements(cap).len()
    }
}

/// The collineation group (optionally extended by the polarity) acting on D.
pub fn full_group(plane: &IncidencePlane, with_polarity: bool) -> PermGroup {
    let mut gens: Vec<Perm> = collineation_generators(plane).iter().map(|c| c.permutation(plane)).collect();
    if with_polarity {
        gens.push(polarity(plane).permutation(plane));
    }
    PermGroup::new(plane.num_vertices(), gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairOrbit {
    /// Lexicographically least ordered pair in the orbit.
    pub rep: (usize, usize),
    pub size: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbits of `group` on ordered pairs of distinct vertices of D.
pub fn pair_orbits(plane: &IncidencePlane, group: &PermGroup) -> Vec<PairOrbit> {
    let m = plane.num_vertices();
    let idx = |u: usize, v: usize| u * m + v;
    let mut parent: Vec<usize> = (0..m * m).collect();
    for g in group.generators() {
        for u in 0..m {
            for v in 0..m {
                if u == v {
                    continue;
                }
                let a = find(&mut parent, idx(u, v));
                let b = find(&mut parent, idx(g[u] as usize, g[v] as usize));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
            }
        }
    }
    let mut orbits: std::collections::BTreeMap<usize, usize> = Default::default();
    for u in 0..m {
        for v in 0..m {
            if u != v {
                let r = find(&mut parent, idx(u, v));
                *orbits.entry(r).or_default() += 1;
            }
        }
    }
    // union by smaller index keeps the least pair as root
    orbits.into_iter().map(|(r, size)| PairOrbit { rep: (r / m, r % m), size }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::build_plane;

    #[test]
    fn generators_preserve_incidence() {
        let pl = build_plane(3).unwrap();
        for g in full_group(&pl, true).generators() {
            assert!(preserves_incidence(&pl, g));
        }
        let pl4 = build_plane(4).unwrap();
        for g in full_group(&pl4, true).generators() {
            assert!(preserves_incidence(&pl4, g));
        }
    }

    #[test]
    fn group_orders_q3() {
        let pl = build_plane(3).unwrap();
        assert_eq!(full_group(&pl, false).order(20000), 5616);
        assert_eq!(full_group(&pl, true).order(20000), 11232);
    }

    #[test]
    fn fano_group_order() {
        let pl = build_plane(2).unwrap();
        assert_eq!(full_group(&pl, false).order(1000), 168);
    }

    #[test]
    fn polarity_is_an_involution() {
        let pl = build_plane(3).unwrap();
        let d = polarity(&pl).permutation(&pl);
        let id: Perm = (0..26).collect();
        assert_eq!(compose(&d, &d), id);
    }
}
