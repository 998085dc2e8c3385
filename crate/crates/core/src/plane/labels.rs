//! Frozen names for some vertices of D (a, b_i, …, f_i, f, a_i).
//!
//! The table lives in `data/ccs_labels.json`. It is one choice in its
//! 2.L₃(3)-orbit; only graph-theoretic properties of it are used.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::{IncidencePlane, PlaneError, TwelveGon};

const TABLE: &str = include_str!("../../data/ccs_labels.json");

#[derive(Deserialize)]
struct Entry {
    vertex: usize,
    kind: String,
    triple: [u8; 3],
}

#[derive(Clone, Debug)]
pub struct CcsLabels {
    map: BTreeMap<String, usize>,
}

impl CcsLabels {
    /// Loads the table and checks it against the q = 3 plane.
    pub fn load(plane: &IncidencePlane) -> Result<Self, PlaneError> {
        let raw: BTreeMap<String, Entry> =
            serde_json::from_str(TABLE).map_err(|e| PlaneError::Labels(e.to_string()))?;
        let mut map = BTreeMap::new();
        for (name, e) in raw {
            let is_point = e.kind == "point";
            if e.vertex >= plane.num_vertices()
                || plane.is_point(e.vertex) != is_point
                || plane.triple(e.vertex) != e.triple
            {
                return Err(PlaneError::Labels(format!("entry {name} does not match the plane")));
            }
            map.insert(name, e.vertex);
        }
        let labels = CcsLabels { map };
        labels.check_shape(plane)?;
        Ok(labels)
    }

    /// a is a point; a–b_i–c_i–d_i–e_i–f_i are paths (the three arms), f is the
    /// fourth line through a.
    fn check_shape(&self, plane: &IncidencePlane) -> Result<(), PlaneError> {
        let bad = |m: &str| Err(PlaneError::Labels(m.to_string()));
        if !plane.is_point(self.get("a")) {
            return bad("a must be a point");
        }
        for i in 1..=3 {
            let arm: Vec<usize> = ["a", "b", "c", "d", "e", "f"]
                .iter()
                .map(|s| self.get(&if *s == "a" { "a".to_string() } else { format!("{s}{i}") }))
                .collect();
            for w in arm.windows(2) {
                if !plane.adjacent(w[0], w[1]) {
                    return bad("arm is not a path");
                }
            }
        }
        if !plane.adjacent(self.get("a"), self.get("f")) {
            return bad("f must pass through a");
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> usize {
        *self.map.get(name).unwrap_or_else(|| panic!("unknown vertex name {name}"))
    }

    pub fn try_get(&self, name: &str) -> Option<usize> {
        self.map.get(name).copied()
    }

    pub fn name_of(&self, v: usize) -> Option<&str> {
        self.map.iter().find(|(_, &x)| x == v).map(|(k, _)| k.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.map.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

/// (f₂, e₂, d₂, c₂, b₂, a, b₁, c₁, d₁, e₁, f₁, a₃).
pub fn ccs_gon(plane: &IncidencePlane) -> Result<TwelveGon, PlaneError> {
    let l = CcsLabels::load(plane)?;
    let names = ["f2", "e2", "d2", "c2", "b2", "a", "b1", "c1", "d1", "e1", "f1", "a3"];
    let mut v = [0; 12];
    for (x, n) in v.iter_mut().zip(names) {
        *x = l.get(n);
    }
    TwelveGon::new(plane, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::build_plane;

    #[test]
    fn table_is_consistent() {
        let pl = build_plane(3).unwrap();
        let l = CcsLabels::load(&pl).unwrap();
        assert_eq!(l.get("a"), 0);
        assert!(ccs_gon(&pl).is_ok());
    }
}
