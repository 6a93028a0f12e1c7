//! Exact decision procedures for canonical-degree bounds of curves on
//! surfaces, the Miyaoka inequalities they rest on, the Nagata-type region on
//! blow-ups of the plane, Seshadri lower bounds and the Vojta-type invariant
//! lower bound, plus a brute-force enumerator used as an independent oracle.

pub mod blowup;
pub mod curvedata;
pub mod error;
pub mod exactmath;
pub mod explorer;
pub mod inequalities;
pub mod vojta;

pub use error::{Error, Result};
pub use exactmath::{QuadSurd, Rational};
