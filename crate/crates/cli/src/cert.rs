use affcover_core::io::{parse_graph6, to_graph6};
use affcover_core::Graph;
use affcover_drawing::{verify_crossing_free, CoverKind, CoverObject, CoverWitness, Drawing};
use affcover_geometry::{CanonLine, CanonPlane, QPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const CERT_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// An exact rational as `[numerator, denominator]` decimal strings.
pub type RatJson = [String; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub version: u32,
    /// The graph in graph6.
    pub graph: String,
    /// One coordinate list per vertex.
    pub drawing: Vec<Vec<RatJson>>,
    pub witness: WitnessJson,
    pub meta: MetaJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    pub kind: String,
    pub objects: Vec<ObjectJson>,
    pub assignment: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ObjectJson {
    Line { base: Vec<RatJson>, direction: Vec<String> },
    Plane { normal: [String; 3], offset: RatJson },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetaJson {
    pub construction: String,
    pub seed: Option<u64>,
    pub tool_version: String,
    pub claimed_bound: Option<usize>,
    pub note: String,
}

impl MetaJson {
    pub fn new(construction: impl Into<String>, seed: Option<u64>, claimed_bound: Option<usize>) -> Self {
        MetaJson {
            construction: construction.into(),
            seed,
            tool_version: TOOL_VERSION.to_string(),
            claimed_bound,
            note: String::new(),
        }
    }
}

/// A certificate whose drawing passed the crossing check and whose witness validated.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub drawing: Drawing,
    pub witness: CoverWitness,
    pub meta: MetaJson,
}

fn rat(r: &BigRational) -> RatJson {
    [r.numer().to_string(), r.denom().to_string()]
}

fn parse_int(s: &str) -> Result<BigInt, CliError> {
    s.parse().map_err(|_| CliError::Format(format!("not an integer: {s:?}")))
}

fn parse_rat(r: &RatJson) -> Result<BigRational, CliError> {
    let (n, d) = (parse_int(&r[0])?, parse_int(&r[1])?);
    if d.is_zero() {
        return Err(CliError::Format(format!("zero denominator in {r:?}")));
    }
    Ok(BigRational::new(n, d))
}

fn object_json(o: &CoverObject) -> ObjectJson {
    match o {
        CoverObject::Line(l) => ObjectJson::Line {
            base: l.base().iter().map(rat).collect(),
            direction: l.direction().iter().map(|c| c.to_string()).collect(),
        },
        CoverObject::Plane(h) => {
            let n = h.normal();
            ObjectJson::Plane { normal: [0, 1, 2].map(|i| n[i].to_string()), offset: rat(h.offset()) }
        }
    }
}

fn object_from_json(o: &ObjectJson) -> Result<CoverObject, CliError> {
    let geo = |e: affcover_geometry::GeometryError| CliError::Format(e.to_string());
    match o {
        ObjectJson::Line { base, direction } => {
            let base = QPoint::new(base.iter().map(parse_rat).collect::<Result<_, _>>()?).map_err(geo)?;
            let dir: Vec<BigRational> =
                direction.iter().map(|s| parse_int(s).map(BigRational::from_integer)).collect::<Result<_, _>>()?;
            Ok(CoverObject::Line(CanonLine::from_parts(&base, &dir).map_err(geo)?))
        }
        ObjectJson::Plane { normal, offset } => {
            let mut nv = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
            for (slot, s) in nv.iter_mut().zip(normal) {
                *slot = BigRational::from_integer(parse_int(s)?);
            }
            Ok(CoverObject::Plane(CanonPlane::from_equation(&nv, &parse_rat(offset)?).map_err(geo)?))
        }
    }
}

impl CertificateFile {
    pub fn from_parts(drawing: &Drawing, witness: &CoverWitness, mut meta: MetaJson) -> Self {
        if meta.note.is_empty() {
            meta.note = drawing.meta().to_string();
        }
        CertificateFile {
            version: CERT_VERSION,
            graph: to_graph6(drawing.graph()),
            drawing: drawing.points().iter().map(|p| p.coords().iter().map(rat).collect()).collect(),
            witness: WitnessJson {
                kind: witness.kind.name().to_string(),
                objects: witness.objects.iter().map(object_json).collect(),
                assignment: witness.assignment.clone(),
            },
            meta,
        }
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates always serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let c: CertificateFile = serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))?;
        if c.version != CERT_VERSION {
            return Err(CliError::Format(format!("unsupported certificate version {}", c.version)));
        }
        Ok(c)
    }

    pub fn graph(&self) -> Result<Graph, CliError> {
        parse_graph6(self.graph.as_bytes()).map_err(|e| CliError::Format(e.to_string()))
    }

    /// The drawing before any check.
    pub fn raw_drawing(&self) -> Result<Drawing, CliError> {
        let g = self.graph()?;
        let mut points = Vec::with_capacity(self.drawing.len());
        for c in &self.drawing {
            let coords = c.iter().map(parse_rat).collect::<Result<Vec<_>, _>>()?;
            points.push(QPoint::new(coords).map_err(|e| CliError::Format(e.to_string()))?);
        }
        Drawing::new(g, points, self.meta.note.clone()).map_err(|e| CliError::Format(e.to_string()))
    }

    /// Re-verifies the drawing and the witness.
    pub fn load(&self) -> Result<Loaded, CliError> {
        let d = self.raw_drawing()?;
        let d = verify_crossing_free(d).map_err(CliError::Crossing)?;
        let kind = CoverKind::from_name(&self.witness.kind)
            .ok_or_else(|| CliError::Format(format!("unknown witness kind {:?}", self.witness.kind)))?;
        let objects = self.witness.objects.iter().map(object_from_json).collect::<Result<Vec<_>, _>>()?;
        let witness = CoverWitness { kind, objects, assignment: self.witness.assignment.clone() };
        witness.validate(&d).map_err(|e| CliError::Witness(e.to_string()))?;
        Ok(Loaded { drawing: d, witness, meta: self.meta.clone() })
    }
}

impl Loaded {
    pub fn to_file(&self) -> CertificateFile {
        CertificateFile::from_parts(&self.drawing, &self.witness, self.meta.clone())
    }
}
