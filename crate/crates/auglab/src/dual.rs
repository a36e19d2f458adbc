//! Dual graph of the face map and shortest-route planning for vertical
//! components.
//!
//! A vertical component projects to an arc between two non-adjacent faces;
//! its minimal representative crosses the link as few times as possible,
//! which is the dual-graph distance between the endpoint faces. Routes are
//! simple dual paths reported as the ordered list of diagram edges crossed,
//! with ties broken lexicographically on that label sequence.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::faces::FaceMap;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RouteError {
    #[error("no dual path between faces {from} and {to}")]
    NoPath { from: usize, to: usize },
    #[error("faces {0} and {1} are not a candidate pair")]
    NotCandidatePair(usize, usize),
}

/// One dual edge per diagram edge, joining the faces on its two sides.
#[derive(Debug, Clone)]
pub struct DualGraph {
    face_count: usize,
    /// Sorted by diagram edge label; `sides` may coincide only on
    /// degenerate (disconnected) inputs.
    edges: Vec<DualEdge>,
    /// Incident dual edges per face, ascending by label.
    adjacency: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy)]
pub struct DualEdge {
    pub label: u32,
    pub sides: (usize, usize),
}

impl DualGraph {
    pub fn face_count(&self) -> usize {
        self.face_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[DualEdge] {
        &self.edges
    }

    /// Faces reachable across one edge from `face`, with the edge label.
    pub fn neighbors(&self, face: usize) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.adjacency[face].iter().map(move |&i| {
            let e = self.edges[i];
            let other = if e.sides.0 == face { e.sides.1 } else { e.sides.0 };
            (e.label, other)
        })
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors(a).any(|(_, other)| other == b)
    }

    /// BFS distances from `from` to every face.
    pub fn distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.face_count];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for (_, w) in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Build the dual graph: one node per face, one edge per diagram edge.
pub fn build_dual(d: &LinkDiagram, f: &FaceMap) -> DualGraph {
    let mut edges: Vec<DualEdge> = d
        .edge_labels()
        .map(|label| DualEdge {
            label,
            sides: f.edge_sides(d, label),
        })
        .collect();
    edges.sort_by_key(|e| e.label);
    let mut adjacency = vec![Vec::new(); f.face_count()];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e.sides.0].push(i);
        if e.sides.1 != e.sides.0 {
            adjacency[e.sides.1].push(i);
        }
    }
    DualGraph {
        face_count: f.face_count(),
        edges,
        adjacency,
    }
}

/// An unordered face pair eligible for a vertical component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CandidatePair {
    pub faces: (usize, usize),
    pub distance: usize,
}

/// All unordered face pairs that share no edge (dual distance at least
/// two), sorted by face indices.
pub fn candidate_pairs(dual: &DualGraph) -> Vec<CandidatePair> {
    let mut pairs = Vec::new();
    for a in 0..dual.face_count() {
        let dist = dual.distances(a);
        for b in a + 1..dual.face_count() {
            match dist[b] {
                Some(n) if n >= 2 => pairs.push(CandidatePair {
                    faces: (a, b),
                    distance: n,
                }),
                _ => {}
            }
        }
    }
    pairs
}

/// The projection of one vertical component: endpoint faces plus the
/// ordered diagram edges its arc crosses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentationArc {
    pub endpoints: (usize, usize),
    /// Diagram edges crossed, in order from `endpoints.0` to `endpoints.1`.
    pub route: Vec<u32>,
    /// Faces visited, starting at `endpoints.0` and ending at
    /// `endpoints.1`; one longer than `route`.
    pub faces: Vec<usize>,
}

impl AugmentationArc {
    /// Number of times the vertical disk is punctured by the link.
    pub fn punctures(&self) -> usize {
        self.route.len()
    }

    pub fn is_classical(&self) -> bool {
        self.punctures() == 2
    }
}

/// Shortest routes between a candidate pair, lexicographically ordered by
/// the crossed-edge label sequence.
#[derive(Debug, Clone)]
pub struct ShortestRoutes {
    pub routes: Vec<AugmentationArc>,
    /// True when more shortest routes exist beyond the enumeration cap.
    pub truncated: bool,
}

/// Enumerate up to `cap` shortest dual paths from `a` to `b`.
///
/// Shortest paths in an unweighted graph are automatically simple, so no
/// arc revisits a face. Requires `a != b` and the pair non-adjacent.
pub fn enumerate_shortest_routes(
    dual: &DualGraph,
    a: usize,
    b: usize,
    cap: usize,
) -> Result<ShortestRoutes, RouteError> {
    if a == b || dual.are_adjacent(a, b) {
        return Err(RouteError::NotCandidatePair(a, b));
    }
    let dist_to_b = dual.distances(b);
    if dist_to_b[a].is_none() {
        return Err(RouteError::NoPath { from: a, to: b });
    }
    let mut routes = Vec::new();
    let mut truncated = false;
    let mut route = Vec::new();
    let mut faces = vec![a];
    descend(
        dual, &dist_to_b, a, b, cap, &mut route, &mut faces, &mut routes, &mut truncated,
    );
    Ok(ShortestRoutes { routes, truncated })
}

#[allow(clippy::too_many_arguments)]
fn descend(
    dual: &DualGraph,
    dist_to_b: &[Option<usize>],
    current: usize,
    b: usize,
    cap: usize,
    route: &mut Vec<u32>,
    faces: &mut Vec<usize>,
    routes: &mut Vec<AugmentationArc>,
    truncated: &mut bool,
) {
    if *truncated {
        return;
    }
    if current == b {
        if routes.len() == cap {
            *truncated = true;
            return;
        }
        routes.push(AugmentationArc {
            endpoints: (faces[0], b),
            route: route.clone(),
            faces: faces.clone(),
        });
        return;
    }
    let here = dist_to_b[current].unwrap();
    // Neighbors come back ascending by edge label, so routes appear in
    // lexicographic order of their label sequences.
    for (label, next) in dual.neighbors(current) {
        if dist_to_b[next] == Some(here - 1) {
            route.push(label);
            faces.push(next);
            descend(dual, dist_to_b, next, b, cap, route, faces, routes, truncated);
            route.pop();
            faces.pop();
            if *truncated {
                return;
            }
        }
    }
}

/// The lexicographically first shortest route between a candidate pair.
pub fn min_puncture_route(
    dual: &DualGraph,
    a: usize,
    b: usize,
) -> Result<AugmentationArc, RouteError> {
    let found = enumerate_shortest_routes(dual, a, b, 1)?;
    Ok(found.routes.into_iter().next().expect("path exists"))
}
