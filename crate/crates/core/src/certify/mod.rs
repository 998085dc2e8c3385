//! Mirror-avoidance certificates: the root-type scan, candidate mirrors,
//! the inner-product table along the braid path, and the triangle checks.

mod meetdelta;
mod table1;
mod table2;

pub use meetdelta::{
    delta_r_all, delta_r_certificate, meetdelta_certificate, perturb_certificate, CertificateReport, DeltaRReport,
    HalfPlaneCheck, MirrorVerdict, PerturbReport, HT_BOUND, MARGIN,
};
pub use table1::{
    candidate_mirrors, closed_form_ht_tilde, enumerate_type_roots, ht_tilde, projective_key, scan_row, table1_scan,
    CandidateMirror, RootTypeRow, RowSpec, Table1, ROWS,
};
pub use table2::{braid_path, table2_values, Table2, ZPath};

use serde::Serialize;

use crate::leechlat::{EVec, Lattice, LatticeVector};
use crate::plane::CcsLabels;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("unknown pair '{0}' (expected incident, orthogonal or point-point)")]
    UnknownPair(String),
    #[error("the pair does not braid")]
    NotBraiding,
    #[error("ε must be a positive rational")]
    BadEpsilon,
    #[error("geometry: {0}")]
    Geometry(#[from] crate::chgeom::GeomError),
}

/// The three 2.L₃(3)-orbits on ordered pairs of distinct simple roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairKind {
    /// point and line, incident: ⟨ρ₁,ρ₂⟩ = √3.
    Incident,
    /// point and line, not incident.
    Orthogonal,
    PointPoint,
}

impl PairKind {
    pub const ALL: [PairKind; 3] = [PairKind::Incident, PairKind::Orthogonal, PairKind::PointPoint];

    pub fn parse(s: &str) -> Result<Self, CertifyError> {
        match s {
            "incident" => Ok(PairKind::Incident),
            "orthogonal" => Ok(PairKind::Orthogonal),
            "point-point" => Ok(PairKind::PointPoint),
            _ => Err(CertifyError::UnknownPair(s.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairKind::Incident => "incident",
            PairKind::Orthogonal => "orthogonal",
            PairKind::PointPoint => "point-point",
        }
    }

    /// Representative vertices: (a, f), (a, d₁), (a, c₁).
    pub fn representative(self, labels: &CcsLabels) -> (usize, usize) {
        let other = match self {
            PairKind::Incident => "f",
            PairKind::Orthogonal => "d1",
            PairKind::PointPoint => "c1",
        };
        (labels.get("a"), labels.get(other))
    }

    pub fn braids(self) -> bool {
        self == PairKind::Incident
    }

    pub fn of(lat: &Lattice, u: usize, v: usize) -> Self {
        let plane = lat.plane();
        if plane.is_point(u) == plane.is_point(v) {
            PairKind::PointPoint
        } else if plane.adjacent(u, v) {
            PairKind::Incident
        } else {
            PairKind::Orthogonal
        }
    }
}

/// A pair of simple roots with the point (if any) first.
#[derive(Clone, Debug)]
pub struct RootPair {
    pub kind: PairKind,
    pub u: usize,
    pub v: usize,
    pub r1: EVec,
    pub r2: EVec,
    pub rho1: LatticeVector,
    pub rho2: LatticeVector,
}

impl RootPair {
    pub fn new(lat: &Lattice, u: usize, v: usize) -> Self {
        let (u, v) = if !lat.plane().is_point(u) && lat.plane().is_point(v) { (v, u) } else { (u, v) };
        RootPair {
            kind: PairKind::of(lat, u, v),
            u,
            v,
            r1: lat.root(u).clone(),
            r2: lat.root(v).clone(),
            rho1: lat.rho(u),
            rho2: lat.rho(v),
        }
    }

    pub fn representative(lat: &Lattice, kind: PairKind) -> Self {
        let labels = CcsLabels::load(lat.plane()).expect("frozen labels");
        let (u, v) = kind.representative(&labels);
        RootPair::new(lat, u, v)
    }
}
