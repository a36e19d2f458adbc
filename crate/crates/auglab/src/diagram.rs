//! PD codes and the 4-regular plane graphs they encode.
//!
//! A crossing is written `X(a,b,c,d)`: the four edge labels around the
//! crossing in counterclockwise order starting at the incoming understrand.
//! Slots 0 and 2 therefore carry the understrand, slots 1 and 3 the
//! overstrand. Edge labels are opaque positive integers; each label must
//! occur exactly twice across the whole code.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PdError {
    #[error("malformed PD code on line {line}: {reason}")]
    MalformedSyntax { line: usize, reason: String },

    #[error("edge label {label} occurs {count} times, expected exactly 2")]
    BadEdgeMultiplicity { label: u32, count: usize },

    #[error("diagram has no crossings")]
    EmptyDiagram,
}

/// One edge-end: a crossing together with a slot in `{0,1,2,3}`.
///
/// Slots are counterclockwise, slot 0 is the incoming understrand, so a
/// dart is on the understrand exactly when its slot is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Dart {
    pub crossing: usize,
    pub slot: u8,
}

impl Dart {
    pub fn new(crossing: usize, slot: u8) -> Self {
        debug_assert!(slot < 4);
        Dart { crossing, slot }
    }

    /// Dense index in `0..4C`, used for per-dart tables.
    pub fn id(self) -> usize {
        self.crossing * 4 + self.slot as usize
    }

    pub fn from_id(id: usize) -> Self {
        Dart::new(id / 4, (id % 4) as u8)
    }

    /// The dart one slot counterclockwise at the same crossing.
    pub fn rotated_ccw(self) -> Self {
        Dart::new(self.crossing, (self.slot + 1) % 4)
    }

    /// The dart one slot clockwise at the same crossing.
    pub fn rotated_cw(self) -> Self {
        Dart::new(self.crossing, (self.slot + 3) % 4)
    }

    /// The diagonally opposite dart; a strand entering here exits there.
    pub fn opposite(self) -> Self {
        Dart::new(self.crossing, (self.slot + 2) % 4)
    }

    pub fn is_under(self) -> bool {
        self.slot % 2 == 0
    }
}

/// A validated PD code: crossing tuples plus the induced edge pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    edges: BTreeMap<u32, (Dart, Dart)>,
}

impl LinkDiagram {
    /// Parse a PD-code string.
    ///
    /// Grammar: `diagram := crossing (WS crossing)*`,
    /// `crossing := "X(" INT "," INT "," INT "," INT ")"`, with lines
    /// starting with `#` ignored as comments. Crossing tuples are kept in
    /// input order with their original labels.
    pub fn parse_pd(text: &str) -> Result<Self, PdError> {
        let mut crossings = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            if line.trim_start().starts_with('#') {
                continue;
            }
            for token in line.split_whitespace() {
                crossings.push(parse_crossing(token, lineno)?);
            }
        }
        Self::from_crossings(crossings)
    }

    /// Build from explicit tuples, enforcing the edge-pairing invariants.
    pub fn from_crossings(crossings: Vec<[u32; 4]>) -> Result<Self, PdError> {
        if crossings.is_empty() {
            return Err(PdError::EmptyDiagram);
        }
        let mut ends: BTreeMap<u32, Vec<Dart>> = BTreeMap::new();
        for (c, tuple) in crossings.iter().enumerate() {
            for (s, &label) in tuple.iter().enumerate() {
                ends.entry(label).or_default().push(Dart::new(c, s as u8));
            }
        }
        let mut edges = BTreeMap::new();
        for (label, darts) in ends {
            if darts.len() != 2 {
                return Err(PdError::BadEdgeMultiplicity {
                    label,
                    count: darts.len(),
                });
            }
            edges.insert(label, (darts[0], darts[1]));
        }
        Ok(LinkDiagram { crossings, edges })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn dart_count(&self) -> usize {
        self.crossings.len() * 4
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.edges.keys().copied()
    }

    /// The two ends of an edge, in (crossing, slot) order.
    pub fn edge_darts(&self, label: u32) -> (Dart, Dart) {
        self.edges[&label]
    }

    pub fn edge_label(&self, d: Dart) -> u32 {
        self.crossings[d.crossing][d.slot as usize]
    }

    /// The other end of the edge carrying `d`.
    pub fn other_end(&self, d: Dart) -> Dart {
        let (a, b) = self.edges[&self.edge_label(d)];
        if a == d {
            b
        } else {
            a
        }
    }

    /// Follow the strand through the crossing and along the next edge:
    /// exit at the opposite slot, then hop to the far end of that edge.
    pub fn strand_next(&self, d: Dart) -> Dart {
        self.other_end(d.opposite())
    }

    /// Orbits of `strand_next`, each starting at its smallest dart.
    ///
    /// Every unoriented link component appears as exactly two orbits, one
    /// per traversal direction.
    pub fn strands(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.dart_count()];
        let mut orbits = Vec::new();
        for id in 0..self.dart_count() {
            if seen[id] {
                continue;
            }
            let start = Dart::from_id(id);
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                seen[d.id()] = true;
                orbit.push(d);
                d = self.strand_next(d);
                if d == start {
                    break;
                }
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Partition of edge labels into link components.
    pub fn link_components(&self) -> Vec<Vec<u32>> {
        let mut parts: Vec<Vec<u32>> = Vec::new();
        for orbit in self.strands() {
            let mut labels: Vec<u32> = orbit.iter().map(|&d| self.edge_label(d)).collect();
            labels.sort_unstable();
            if !parts.contains(&labels) {
                parts.push(labels);
            }
        }
        parts
    }

    /// True iff along every strand consecutive passages alternate
    /// under/over; equivalently, every edge has one under end and one
    /// over end.
    pub fn is_alternating(&self) -> bool {
        self.alternation_witness().is_none()
    }

    /// An edge whose two ends have the same under/over role, if any.
    pub fn alternation_witness(&self) -> Option<u32> {
        self.edges
            .iter()
            .find(|(_, (a, b))| a.is_under() == b.is_under())
            .map(|(&label, _)| label)
    }

    /// Number of connected components of the underlying 4-regular graph.
    pub fn projection_components(&self) -> usize {
        self.projection_component_partition().len()
    }

    /// Crossings grouped by connected component, each group sorted.
    pub fn projection_component_partition(&self) -> Vec<Vec<usize>> {
        let n = self.crossing_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for (a, b) in self.edges.values() {
            let (ra, rb) = (find(&mut parent, a.crossing), find(&mut parent, b.crossing));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            let root = find(&mut parent, c);
            groups.entry(root).or_default().push(c);
        }
        groups.into_values().collect()
    }

    /// Canonical text form: labels renumbered 1.. in first-appearance
    /// order, crossings joined by single spaces.
    pub fn serialize(&self) -> String {
        let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
        let mut next = 1u32;
        let mut out = String::new();
        for (i, tuple) in self.crossings.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let mapped: Vec<u32> = tuple
                .iter()
                .map(|&label| {
                    *relabel.entry(label).or_insert_with(|| {
                        let v = next;
                        next += 1;
                        v
                    })
                })
                .collect();
            write!(
                out,
                "X({},{},{},{})",
                mapped[0], mapped[1], mapped[2], mapped[3]
            )
            .unwrap();
        }
        out
    }

    /// Mirror image: reverse the rotation at every crossing, keeping
    /// slot 0 on the understrand.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| [a, d, c, b])
            .collect();
        LinkDiagram::from_crossings(crossings).expect("mirror preserves validity")
    }
}

/// `serialize(parse_pd(text))`: the canonical form of a PD-code string.
pub fn canonicalize(text: &str) -> Result<String, PdError> {
    Ok(LinkDiagram::parse_pd(text)?.serialize())
}

fn parse_crossing(token: &str, line: usize) -> Result<[u32; 4], PdError> {
    let err = |reason: &str| PdError::MalformedSyntax {
        line,
        reason: format!("{reason} in {token:?}"),
    };
    let body = token
        .strip_prefix("X(")
        .ok_or_else(|| err("expected \"X(\""))?;
    let body = body.strip_suffix(')').ok_or_else(|| err("expected \")\""))?;
    let fields: Vec<&str> = body.split(',').collect();
    if fields.len() != 4 {
        return Err(err("expected four comma-separated labels"));
    }
    let mut tuple = [0u32; 4];
    for (i, field) in fields.iter().enumerate() {
        if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("labels must be positive decimal integers"));
        }
        let value: u32 = field
            .parse()
            .map_err(|_| err("label out of range"))?;
        if value == 0 {
            return Err(err("labels must be positive"));
        }
        tuple[i] = value;
    }
    Ok(tuple)
}
