//! P²(F_q), its incidence graph D, collineations, the polarity and 12-gons.
//!
//! Vertices of D are numbered `0..n` for points and `n..2n` for lines, each
//! block in lexicographic order of normalized triples.

mod field;
mod gons;
mod group;
mod labels;

use serde::Serialize;

pub use field::GaloisField;
pub use gons::{enumerate_12gons, marked_12gon_orbits, MarkedGonReport, TwelveGon};
pub use group::{
    collineation_generators, full_group, pair_orbits, polarity, preserves_incidence, Collineation, PairOrbit, Perm,
    PermGroup,
};
pub use labels::{ccs_gon, CcsLabels};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("unsupported field order {0}")]
    UnsupportedOrder(usize),
    #[error("tables for q = {0} do not form a field")]
    NotAField(usize),
    #[error("{0} is not an induced 12-cycle of D")]
    NotAGon(String),
    #[error("label table: {0}")]
    Labels(String),
}

#[derive(Clone, Debug)]
pub struct IncidencePlane {
    q: usize,
    field: GaloisField,
    points: Vec<[u8; 3]>,
    lines: Vec<[u8; 3]>,
    incidence: Vec<Vec<u8>>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct PlaneExport {
    pub q: usize,
    pub points: Vec<[u8; 3]>,
    pub lines: Vec<[u8; 3]>,
    pub incidence: Vec<Vec<u8>>,
}

/// Scales a nonzero triple so its first nonzero coordinate is 1.
pub fn normalize(f: &GaloisField, t: [u8; 3]) -> [u8; 3] {
    let lead = t.iter().copied().find(|&x| x != 0).expect("zero triple is not projective");
    let s = f.inv(lead);
    [f.mul(t[0], s), f.mul(t[1], s), f.mul(t[2], s)]
}

pub fn build_plane(q: usize) -> Result<IncidencePlane, PlaneError> {
    let field = GaloisField::new(q)?;
    let mut triples = Vec::new();
    for a in 0..q as u8 {
        for b in 0..q as u8 {
            for c in 0..q as u8 {
                let t = [a, b, c];
                if t != [0, 0, 0] && normalize(&field, t) == t {
                    triples.push(t);
                }
            }
        }
    }
    triples.sort();
    let n = triples.len();
    debug_assert_eq!(n, q * q + q + 1);
    let points = triples.clone();
    let lines = triples;
    let incidence: Vec<Vec<u8>> =
        points.iter().map(|x| lines.iter().map(|l| u8::from(field.dot(x, l) == 0)).collect()).collect();
    let mut adjacency = vec![Vec::new(); 2 * n];
    for i in 0..n {
        for j in 0..n {
            if incidence[i][j] == 1 {
                adjacency[i].push(n + j);
                adjacency[n + j].push(i);
            }
        }
    }
    Ok(IncidencePlane { q, field, points, lines, incidence, adjacency })
}

impl IncidencePlane {
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    /// Number of points (= number of lines).
    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn num_vertices(&self) -> usize {
        2 * self.points.len()
    }

    pub fn points(&self) -> &[[u8; 3]] {
        &self.points
    }

    pub fn lines(&self) -> &[[u8; 3]] {
        &self.lines
    }

    pub fn incidence(&self) -> &[Vec<u8>] {
        &self.incidence
    }

    pub fn is_point(&self, v: usize) -> bool {
        v < self.n()
    }

    /// Triple of a vertex (point or line).
    pub fn triple(&self, v: usize) -> [u8; 3] {
        if self.is_point(v) {
            self.points[v]
        } else {
            self.lines[v - self.n()]
        }
    }

    pub fn point_index(&self, t: [u8; 3]) -> usize {
        let t = normalize(&self.field, t);
        self.points.binary_search(&t).expect("normalized triple is a point")
    }

    /// Vertex index (≥ n) of the line with coordinates `t`.
    pub fn line_vertex(&self, t: [u8; 3]) -> usize {
        let t = normalize(&self.field, t);
        self.n() + self.lines.binary_search(&t).expect("normalized triple is a line")
    }

    pub fn incident(&self, x: usize, l: usize) -> bool {
        let n = self.n();
        match (x < n, l < n) {
            (true, false) => self.incidence[x][l - n] == 1,
            (false, true) => self.incidence[l][x - n] == 1,
            _ => false,
        }
    }

    /// Adjacency in D (incidence between a point and a line).
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.incident(u, v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn points_on(&self, l: usize) -> Vec<usize> {
        self.adjacency[l].clone()
    }

    pub fn lines_through(&self, x: usize) -> Vec<usize> {
        self.adjacency[x].clone()
    }

    /// The dot-product polarity: vertex with the same triple, other type.
    pub fn dual_vertex(&self, v: usize) -> usize {
        let n = self.n();
        if v < n {
            v + n
        } else {
            v - n
        }
    }

    pub fn export(&self) -> PlaneExport {
        PlaneExport {
            q: self.q,
            points: self.points.clone(),
            lines: self.lines.clone(),
            incidence: self.incidence.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_counts() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let pl = build_plane(q).unwrap();
            let n = q * q + q + 1;
            assert_eq!(pl.n(), n);
            for j in 0..n {
                let on: usize = (0..n).map(|i| pl.incidence()[i][j] as usize).sum();
                assert_eq!(on, q + 1);
            }
            for i in 0..n {
                let through: usize = pl.incidence()[i].iter().map(|&x| x as usize).sum();
                assert_eq!(through, q + 1);
            }
        }
        assert!(build_plane(6).is_err());
    }

    #[test]
    fn two_lines_meet_once() {
        let pl = build_plane(3).unwrap();
        let n = pl.n();
        for l in 0..n {
            for m in (l + 1)..n {
                let common = (0..n).filter(|&x| pl.incidence()[x][l] == 1 && pl.incidence()[x][m] == 1).count();
                assert_eq!(common, 1);
            }
        }
    }
}
