//! Two-component bouquet-graph diagrams and their linking numbers.
//!
//! A diagram file lists two components, the oriented loops of each, and the
//! signed crossings between loops:
//!
//! ```text
//! # Hopf pair
//! component h1
//! loop a
//! component h2
//! loop b
//! crossing a b +
//! crossing b a +
//! ```
//!
//! The linking number of two loops is half the signed count of all crossings
//! between them, regardless of which strand is on top.

use std::collections::HashMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactla::IntMatrix;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseDiagramError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate loop id `{id}`")]
    DuplicateLoop { line: usize, id: String },
    #[error("line {line}: crossing references unknown loop `{id}`")]
    UnknownLoop { line: usize, id: String },
    #[error("expected exactly 2 components, found {0}")]
    ComponentCount(usize),
    #[error("component `{0}` declares no loops")]
    EmptyComponent(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LinkingError {
    #[error("unknown loop `{0}`")]
    UnknownLoop(String),
    #[error("loops `{0}` and `{1}` belong to the same component")]
    SameComponent(String, String),
    #[error("loop id `{0}` is already in use")]
    DuplicateLoop(String),
    #[error("crossings between `{a}` and `{b}` have odd signed sum {sum}")]
    OddCrossingSum { a: String, b: String, sum: i64 },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Loop {
    pub id: String,
    pub component: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub over: String,
    pub under: String,
    pub sign: Sign,
}

impl Crossing {
    fn joins(&self, a: &str, b: &str) -> bool {
        (self.over == a && self.under == b) || (self.over == b && self.under == a)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    component_names: [String; 2],
    loops: Vec<Loop>,
    crossings: Vec<Crossing>,
    index: HashMap<String, usize>,
}

impl Diagram {
    /// Validates and assembles a diagram. Loops keep the given order within
    /// each component.
    pub fn new(
        component_names: [String; 2],
        loops: Vec<Loop>,
        crossings: Vec<Crossing>,
    ) -> Result<Self, ParseDiagramError> {
        let mut index = HashMap::with_capacity(loops.len());
        for (i, l) in loops.iter().enumerate() {
            if l.component > 1 {
                return Err(ParseDiagramError::ComponentCount(l.component + 1));
            }
            if index.insert(l.id.clone(), i).is_some() {
                return Err(ParseDiagramError::DuplicateLoop {
                    line: 0,
                    id: l.id.clone(),
                });
            }
        }
        for (c, name) in component_names.iter().enumerate() {
            if !loops.iter().any(|l| l.component == c) {
                return Err(ParseDiagramError::EmptyComponent(name.clone()));
            }
        }
        for x in &crossings {
            for id in [&x.over, &x.under] {
                if !index.contains_key(id) {
                    return Err(ParseDiagramError::UnknownLoop {
                        line: 0,
                        id: id.clone(),
                    });
                }
            }
        }
        Ok(Diagram {
            component_names,
            loops,
            crossings,
            index,
        })
    }

    pub fn component_names(&self) -> &[String; 2] {
        &self.component_names
    }

    pub fn loops(&self) -> &[Loop] {
        &self.loops
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn loop_by_id(&self, id: &str) -> Option<&Loop> {
        self.index.get(id).map(|&i| &self.loops[i])
    }

    /// Loops of one component, in declaration order.
    pub fn component_loops(&self, component: usize) -> impl Iterator<Item = &Loop> {
        self.loops.iter().filter(move |l| l.component == component)
    }

    /// Genus of a component, i.e. its number of loops.
    pub fn genus(&self, component: usize) -> usize {
        self.component_loops(component).count()
    }

    /// Replaces loops `a` and `b` (same component) by one loop `merged` carrying
    /// the union of their crossings, placed where `a` was. This is the diagram
    /// of the homology class `a + b`. Crossings between `a` and `b` become
    /// self-crossings of the merged loop.
    pub fn merge_loops(&self, a: &str, b: &str, merged: &str) -> Result<Diagram, LinkingError> {
        let la = self.lookup(a)?;
        let lb = self.lookup(b)?;
        if la.component != lb.component || a == b {
            return Err(LinkingError::SameComponent(a.into(), b.into()));
        }
        let loops = self
            .loops
            .iter()
            .filter(|l| l.id != b)
            .map(|l| {
                if l.id == a {
                    Loop {
                        id: merged.into(),
                        component: l.component,
                    }
                } else {
                    l.clone()
                }
            })
            .collect();
        let rename = |id: &String| {
            if id == a || id == b {
                merged.to_string()
            } else {
                id.clone()
            }
        };
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing {
                over: rename(&x.over),
                under: rename(&x.under),
                sign: x.sign,
            })
            .collect();
        Diagram::new(self.component_names.clone(), loops, crossings).map_err(|e| match e {
            ParseDiagramError::DuplicateLoop { id, .. } => LinkingError::DuplicateLoop(id),
            other => unreachable!("merging valid loops cannot produce {other}"),
        })
    }

    fn lookup(&self, id: &str) -> Result<&Loop, LinkingError> {
        self.loop_by_id(id)
            .ok_or_else(|| LinkingError::UnknownLoop(id.to_string()))
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseDiagramError {
    ParseDiagramError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn parse_diagram(text: &str) -> Result<Diagram, ParseDiagramError> {
    let mut names: Vec<String> = Vec::new();
    let mut loops: Vec<Loop> = Vec::new();
    let mut crossings = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let raw = raw.trim_end_matches('\r');
        let toks: Vec<&str> = raw.split(' ').filter(|t| !t.is_empty()).collect();
        let Some(&keyword) = toks.first() else {
            continue;
        };
        if keyword.starts_with('#') {
            continue;
        }
        match (keyword, &toks[1..]) {
            ("component", [name]) => {
                if names.len() == 2 {
                    return Err(ParseDiagramError::ComponentCount(3));
                }
                names.push(name.to_string());
            }
            ("loop", [id]) => {
                let Some(component) = names.len().checked_sub(1) else {
                    return Err(syntax(line, "`loop` before any `component`"));
                };
                if seen.insert(id.to_string(), component).is_some() {
                    return Err(ParseDiagramError::DuplicateLoop {
                        line,
                        id: id.to_string(),
                    });
                }
                loops.push(Loop {
                    id: id.to_string(),
                    component,
                });
            }
            ("crossing", [over, under, sign]) => {
                let sign = match *sign {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return Err(syntax(line, format!("sign must be `+` or `-`, got `{other}`"))),
                };
                for id in [over, under] {
                    if !seen.contains_key(*id) {
                        return Err(ParseDiagramError::UnknownLoop {
                            line,
                            id: id.to_string(),
                        });
                    }
                }
                crossings.push(Crossing {
                    over: over.to_string(),
                    under: under.to_string(),
                    sign,
                });
            }
            ("component", _) => return Err(syntax(line, "expected `component <name>`")),
            ("loop", _) => return Err(syntax(line, "expected `loop <id>`")),
            ("crossing", _) => return Err(syntax(line, "expected `crossing <over> <under> <sign>`")),
            (other, _) => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }

    let names: [String; 2] = names
        .try_into()
        .map_err(|v: Vec<String>| ParseDiagramError::ComponentCount(v.len()))?;
    Diagram::new(names, loops, crossings)
}

/// Half the signed sum of all crossings between `a` and `b`, in either
/// over/under order. Intra-component crossings never enter.
pub fn linking_number(d: &Diagram, a: &str, b: &str) -> Result<i64, LinkingError> {
    let la = d.lookup(a)?;
    let lb = d.lookup(b)?;
    if la.component == lb.component {
        return Err(LinkingError::SameComponent(a.into(), b.into()));
    }
    let sum: i64 = d
        .crossings
        .iter()
        .filter(|x| x.joins(a, b))
        .map(|x| x.sign.value())
        .sum();
    if sum % 2 != 0 {
        return Err(LinkingError::OddCrossingSum {
            a: a.into(),
            b: b.into(),
            sum,
        });
    }
    Ok(sum / 2)
}

/// Rows follow the loops of the first component, columns those of the
/// second, both in declaration order.
pub fn linking_matrix(d: &Diagram) -> Result<IntMatrix, LinkingError> {
    let rows: Vec<&Loop> = d.component_loops(0).collect();
    let cols: Vec<&Loop> = d.component_loops(1).collect();
    let mut entries = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            entries.push(BigInt::from(linking_number(d, &r.id, &c.id)?));
        }
    }
    Ok(IntMatrix::from_vec(rows.len(), cols.len(), entries).expect("shape is rows x cols"))
}
