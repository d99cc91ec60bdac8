use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::rules::Rule;
use crate::Param;

/// A nonnegative rational or infinity; `Infinite` sorts above every finite value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Finite(BigRational),
    Infinite,
}

impl Value {
    pub fn int(v: usize) -> Self {
        Value::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn as_usize(&self) -> Option<usize> {
        match self {
            Value::Finite(r) if r.is_integer() => usize::try_from(r.to_integer()).ok(),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Value::Finite(_))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(r) => write!(f, "{r}"),
            Value::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// `Certified`: a checked witness or an exhaustive computation.
/// `Theorem`: a published bound applied to exactly computed inputs.
/// `Asserted`: a published value whose proof is not reproduced here; such
/// entries only tighten intervals when the report is built to trust them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trust {
    Certified,
    Theorem,
    Asserted,
}

impl fmt::Display for Trust {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trust::Certified => "certified",
            Trust::Theorem => "theorem",
            Trust::Asserted => "asserted",
        })
    }
}

/// One bound contributed by one rule. `exact` is false when the value came
/// from a solver that ran out of budget (it is still a valid bound).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub side: Side,
    pub value: Value,
    pub rule: Rule,
    pub exact: bool,
    pub trust: Trust,
    /// Whether the entry took part in the interval.
    pub counted: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamBounds {
    pub lower: Value,
    pub upper: Value,
    pub provenance: Vec<Entry>,
}

impl Default for ParamBounds {
    fn default() -> Self {
        ParamBounds { lower: Value::int(0), upper: Value::Infinite, provenance: Vec::new() }
    }
}

impl ParamBounds {
    fn best(&self, side: Side) -> Option<&Entry> {
        let target = match side {
            Side::Lower => &self.lower,
            Side::Upper => &self.upper,
        };
        self.provenance.iter().find(|e| e.counted && e.side == side && &e.value == target)
    }

    pub fn best_lower(&self) -> Option<&Entry> {
        self.best(Side::Lower)
    }

    pub fn best_upper(&self) -> Option<&Entry> {
        self.best(Side::Upper)
    }

    pub fn is_consistent(&self) -> bool {
        self.lower <= self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub trust_asserted: bool,
    pub params: BTreeMap<Param, ParamBounds>,
}

/// Pairs `(a, b)` with `a <= b` for every graph.
const ORDER: [(Param, Param); 8] = [
    (Param::Pi12, Param::Rho12),
    (Param::Pi13, Param::Rho13),
    (Param::Pi23, Param::Rho23),
    (Param::Pi13, Param::Pi12),
    (Param::Rho13, Param::Rho12),
    (Param::Pi13, Param::PiBar13),
    (Param::Pi23, Param::Pi13),
    (Param::Rho23, Param::Rho13),
];

impl BoundReport {
    pub(crate) fn new(n: usize, m: usize, trust_asserted: bool) -> Self {
        BoundReport {
            n,
            m,
            trust_asserted,
            params: Param::ALL.into_iter().map(|p| (p, ParamBounds::default())).collect(),
        }
    }

    pub fn get(&self, p: Param) -> &ParamBounds {
        &self.params[&p]
    }

    pub fn lower(&self, p: Param) -> &Value {
        &self.params[&p].lower
    }

    pub fn upper(&self, p: Param) -> &Value {
        &self.params[&p].upper
    }

    /// Records a bound; returns whether it tightened the interval.
    pub fn add(&mut self, p: Param, mut entry: Entry) -> bool {
        entry.counted = entry.trust != Trust::Asserted || self.trust_asserted;
        let b = self.params.get_mut(&p).expect("all parameters are present");
        let improved = entry.counted
            && match entry.side {
                Side::Lower => entry.value > b.lower,
                Side::Upper => entry.value < b.upper,
            };
        if improved {
            match entry.side {
                Side::Lower => b.lower = entry.value.clone(),
                Side::Upper => b.upper = entry.value.clone(),
            }
        }
        b.provenance.push(entry);
        improved
    }

    /// Propagates bounds along the parameter order until nothing changes.
    pub fn close(&mut self) {
        loop {
            let mut changed = false;
            for (a, b) in ORDER {
                let (lo, hi) = (self.get(a).clone(), self.get(b).clone());
                if lo.lower > hi.lower {
                    let src = lo.best_lower().expect("a raised lower bound has an entry");
                    changed |= self.add(b, derived(Side::Lower, &lo.lower, src, a));
                }
                if hi.upper < lo.upper {
                    let src = hi.best_upper().expect("a lowered upper bound has an entry");
                    changed |= self.add(a, derived(Side::Upper, &hi.upper, src, b));
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Parameters whose interval is empty; always empty unless a rule is wrong.
    pub fn inconsistencies(&self) -> Vec<Param> {
        Param::ALL.into_iter().filter(|&p| !self.get(p).is_consistent()).collect()
    }
}

fn derived(side: Side, value: &Value, src: &Entry, from: Param) -> Entry {
    Entry {
        side,
        value: value.clone(),
        rule: Rule::L15,
        exact: src.exact,
        trust: src.trust,
        counted: true,
        note: format!("from {from} ({})", src.rule.id()),
    }
}
