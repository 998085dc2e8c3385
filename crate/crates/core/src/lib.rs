//! Exact verification toolkit for the Eisenstein Lorentzian lattice built
//! from the incidence graph of P²(F₃): reflections, root shells, mirror
//! avoidance certificates and the level-13 modular chart.

pub mod autoform;
pub mod certify;
pub mod chgeom;
pub mod exactnum;
pub mod leechlat;
pub mod modular;
pub mod plane;
pub mod reflect;
pub mod report;
