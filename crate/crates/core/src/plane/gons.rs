use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{IncidencePlane, PermGroup, PlaneError};

/// A marked 12-gon: the successive vertices (y₁, …, y₁₂) of an induced
/// 12-cycle of D. The marking is the choice of y₁ and of the direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwelveGon {
    pub vertices: [usize; 12],
}

impl TwelveGon {
    pub fn new(plane: &IncidencePlane, vertices: [usize; 12]) -> Result<Self, PlaneError> {
        let g = TwelveGon { vertices };
        if g.is_induced_cycle(plane) {
            Ok(g)
        } else {
            Err(PlaneError::NotAGon(format!("{vertices:?}")))
        }
    }

    pub fn is_induced_cycle(&self, plane: &IncidencePlane) -> bool {
        let v = &self.vertices;
        let mut sorted = v.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != 12 {
            return false;
        }
        for i in 0..12 {
            for j in (i + 1)..12 {
                let consecutive = j == i + 1 || (i == 0 && j == 11);
                if plane.adjacent(v[i], v[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// y_k, 1-based as in the usual naming.
    pub fn y(&self, k: usize) -> usize {
        self.vertices[k - 1]
    }

    pub fn rotated(&self, k: usize) -> TwelveGon {
        let mut out = [0; 12];
        for (i, x) in out.iter_mut().enumerate() {
            *x = self.vertices[(i + k) % 12];
        }
        TwelveGon { vertices: out }
    }

    pub fn reversed(&self) -> TwelveGon {
        let mut out = self.vertices;
        out.reverse();
        TwelveGon { vertices: out }
    }

    /// The 24 markings of the underlying unmarked 12-gon.
    pub fn markings(&self) -> Vec<TwelveGon> {
        let mut out = Vec::with_capacity(24);
        for k in 0..12 {
            out.push(self.rotated(k));
            out.push(self.reversed().rotated(k));
        }
        out
    }

    /// Least marking: unmarked canonical form.
    pub fn canonical(&self) -> TwelveGon {
        self.markings().into_iter().min().expect("24 markings")
    }

    pub fn image(&self, perm: &[u8]) -> TwelveGon {
        let mut out = [0; 12];
        for (o, v) in out.iter_mut().zip(self.vertices.iter()) {
            *o = perm[*v] as usize;
        }
        TwelveGon { vertices: out }
    }
}

fn extend(plane: &IncidencePlane, path: &mut Vec<usize>, out: &mut Vec<TwelveGon>) {
    let last = *path.last().unwrap();
    let start = path[0];
    let k = path.len();
    for &w in plane.neighbors(last) {
        if w <= start || path.contains(&w) {
            continue;
        }
        // no chords to earlier vertices (except the closing edge at the end)
        let chord = path[..k - 1].iter().enumerate().any(|(i, &u)| plane.adjacent(u, w) && !(i == 0 && k == 11));
        if chord {
            continue;
        }
        if k == 11 {
            if plane.adjacent(start, w) && path[1] < w {
                let mut v = [0; 12];
                v[..11].copy_from_slice(path);
                v[11] = w;
                out.push(TwelveGon { vertices: v });
            }
        } else {
            path.push(w);
            extend(plane, path, out);
            path.pop();
        }
    }
}

/// All induced 12-cycles of D, each once, in canonical (least-marking) form.
pub fn enumerate_12gons(plane: &IncidencePlane) -> Vec<TwelveGon> {
    let mut all: Vec<TwelveGon> = (0..plane.num_vertices())
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut out = Vec::new();
            let mut path = vec![s];
            extend(plane, &mut path, &mut out);
            out
        })
        .map(|g| g.canonical())
        .collect();
    all.sort_unstable();
    all.dedup();
    all
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MarkedGonReport {
    pub unmarked: usize,
    pub marked: usize,
    pub orbits: usize,
    pub transitive: bool,
}

/// Number of orbits of `group` on marked 12-gons.
pub fn marked_12gon_orbits(plane: &IncidencePlane, group: &PermGroup) -> MarkedGonReport {
    let gons = enumerate_12gons(plane);
    let marked: Vec<TwelveGon> = gons.iter().flat_map(|g| g.markings()).collect();
    let index: HashMap<TwelveGon, usize> = marked.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    let mut parent: Vec<usize> = (0..marked.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in group.generators() {
        for (i, m) in marked.iter().enumerate() {
            let j = index[&m.image(g)];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let orbits = (0..marked.len()).filter(|&i| find(&mut parent, i) == i).count();
    MarkedGonReport { unmarked: gons.len(), marked: marked.len(), orbits, transitive: orbits == 1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::build_plane;

    #[test]
    fn gons_alternate_types() {
        let pl = build_plane(3).unwrap();
        let gons = enumerate_12gons(&pl);
        assert!(!gons.is_empty());
        for g in &gons {
            assert!(g.is_induced_cycle(&pl));
            for i in 0..12 {
                assert_ne!(pl.is_point(g.vertices[i]), pl.is_point(g.vertices[(i + 1) % 12]));
            }
        }
    }
}
