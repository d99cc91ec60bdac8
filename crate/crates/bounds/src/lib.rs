//! Interval reports for the seven cover numbers of a graph. Every bound
//! carries the rule that produced it and how far it can be trusted.

mod certificates;
mod report;
mod rules;

pub use certificates::{certificate_params, standard_certificates, Certificate};
pub use report::{BoundReport, Entry, ParamBounds, Side, Trust, Value};
pub use rules::{
    bound_report, bound_report_with, fort_hedlund_triples, schonheim_k4, ReportOptions, Rule, KN_ASSERTED_LOWER,
};

use std::fmt;

use serde::{Serialize, Serializer};

/// The cover numbers tracked by a [`BoundReport`]: `Pi` counts objects that
/// carry the vertices, `Rho` objects that carry the whole drawing, `PiBar13`
/// uses pairwise parallel lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Pi12,
    Pi13,
    PiBar13,
    Pi23,
    Rho12,
    Rho13,
    Rho23,
}

impl Param {
    pub const ALL: [Param; 7] =
        [Param::Pi12, Param::Pi13, Param::PiBar13, Param::Pi23, Param::Rho12, Param::Rho13, Param::Rho23];

    pub fn name(self) -> &'static str {
        match self {
            Param::Pi12 => "pi^1_2",
            Param::Pi13 => "pi^1_3",
            Param::PiBar13 => "pibar^1_3",
            Param::Pi23 => "pi^2_3",
            Param::Rho12 => "rho^1_2",
            Param::Rho13 => "rho^1_3",
            Param::Rho23 => "rho^2_3",
        }
    }

    pub fn is_planar_param(self) -> bool {
        matches!(self, Param::Pi12 | Param::Rho12)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
