//! Disjoint planar realization of arc systems.
//!
//! Inside a face, every arc appears as a single chord between two
//! attachment points on the boundary circle: a crossing point on an edge,
//! or the arc's own endpoint. Two chords of a disk can be drawn disjointly
//! exactly when their endpoints do not interleave around the boundary, so a
//! system of arcs is realizable iff there is a choice of shortest route per
//! arc and a linear order of strands along every crossed edge such that no
//! face contains an interleaving chord pair. Edge orders couple the two
//! faces bordering an edge: one face reads the order forward, the other
//! reversed.
//!
//! Arc endpoints are interior points of their faces. An endpoint is placed
//! on the boundary circle immediately next to its own anchor crossing: the
//! resulting chord spans an empty boundary interval, so it can never
//! interleave with anything, and any system realizable with some endpoint
//! placement is realizable with this one. The search therefore branches
//! only over routes and per-edge insertion positions, and it is exhaustive
//! within the route-enumeration cap.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::dual::{
    candidate_pairs, enumerate_shortest_routes, AugmentationArc, DualGraph, RouteError,
};
use crate::faces::FaceMap;

/// Default bound on enumerated shortest routes per pair.
pub const DEFAULT_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlanError {
    #[error("face index {0} out of range (diagram has {1} faces)")]
    BadFaceIndex(usize, usize),
    #[error("faces {0} and {1} are not a candidate pair (they share an edge or coincide)")]
    NotCandidatePair(usize, usize),
    #[error("pair ({0}, {1}) requested more than once")]
    DuplicatePair(usize, usize),
    #[error("no dual path between faces {0} and {1}")]
    NoPath(usize, usize),
}

/// One attachment point on a face boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Attachment {
    /// The strand of `arc` crossing `edge`.
    Cross { edge: u32, arc: usize },
    /// The interior endpoint of `arc`, placed next to its anchor.
    End { arc: usize },
}

impl Attachment {
    pub fn arc(self) -> usize {
        match self {
            Attachment::Cross { arc, .. } | Attachment::End { arc } => arc,
        }
    }
}

/// A realized system: routes plus the planar data that witnesses
/// disjointness.
#[derive(Debug, Clone)]
pub struct ArcSystem {
    pub arcs: Vec<AugmentationArc>,
    /// Strand order along each crossed edge, read from the edge's smaller
    /// dart towards its larger dart.
    pub edge_orders: BTreeMap<u32, Vec<usize>>,
    /// Cyclic attachment sequences of every face that meets an arc.
    pub face_layouts: BTreeMap<usize, Vec<Attachment>>,
}

/// Why a request has no realization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Infeasibility {
    /// Two requested pairs that cannot coexist under any combination of
    /// shortest routes within the cap.
    ConflictingPair {
        pair_a: (usize, usize),
        pair_b: (usize, usize),
    },
    /// The exhaustive search failed but every two arcs alone are
    /// compatible; the obstruction needs three or more arcs.
    Exhausted,
}

#[derive(Debug, Clone)]
pub enum Realization {
    Feasible(Box<ArcSystem>),
    /// No realization exists among shortest routes within the cap, and no
    /// enumeration was truncated.
    Infeasible {
        certificate: Infeasibility,
        cap: usize,
    },
    /// The search space was truncated by the cap, so infeasibility cannot
    /// be certified.
    Unknown { cap: usize },
}

impl Realization {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Realization::Feasible(_))
    }
}

/// Search for a disjoint realization of one arc per requested face pair.
pub fn realize_disjoint_system(
    d: &LinkDiagram,
    f: &FaceMap,
    dual: &DualGraph,
    pairs: &[(usize, usize)],
    cap: usize,
) -> Result<Realization, PlanError> {
    assert!(cap >= 1);
    let mut normalized = Vec::new();
    for &(a, b) in pairs {
        if a >= f.face_count() {
            return Err(PlanError::BadFaceIndex(a, f.face_count()));
        }
        if b >= f.face_count() {
            return Err(PlanError::BadFaceIndex(b, f.face_count()));
        }
        if a == b {
            return Err(PlanError::NotCandidatePair(a, b));
        }
        let key = (a.min(b), a.max(b));
        if normalized.contains(&key) {
            return Err(PlanError::DuplicatePair(key.0, key.1));
        }
        normalized.push(key);
    }

    let mut truncated = false;
    let mut routes = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        let found = enumerate_shortest_routes(dual, a, b, cap).map_err(|e| match e {
            RouteError::NotCandidatePair(x, y) => PlanError::NotCandidatePair(x, y),
            RouteError::NoPath { from, to } => PlanError::NoPath(from, to),
        })?;
        truncated |= found.truncated;
        routes.push(found.routes);
    }

    let mut search = Search::new(d, f, &routes);
    if search.run(0) {
        return Ok(Realization::Feasible(Box::new(search.into_system())));
    }
    if truncated {
        return Ok(Realization::Unknown { cap });
    }

    // Certify: look for two arcs that conflict on their own.
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let sub = [routes[i].clone(), routes[j].clone()];
            let mut pair_search = Search::new(d, f, &sub);
            if !pair_search.run(0) {
                return Ok(Realization::Infeasible {
                    certificate: Infeasibility::ConflictingPair {
                        pair_a: pairs[i],
                        pair_b: pairs[j],
                    },
                    cap,
                });
            }
        }
    }
    Ok(Realization::Infeasible {
        certificate: Infeasibility::Exhausted,
        cap,
    })
}

/// A maximal feasible system grown greedily over all candidate pairs, in
/// canonical pair order.
#[derive(Debug)]
pub struct MaximalSystem {
    pub accepted: Vec<(usize, usize)>,
    pub system: ArcSystem,
    /// Candidate pairs that could not be added, with the outcome of
    /// re-attempting each one on top of the final system.
    pub rejected: Vec<((usize, usize), Realization)>,
}

/// Grow a maximal augmentation on `d`: add candidate pairs one at a time,
/// keeping each that stays realizable. Adding constraints can only shrink
/// the solution set, so pairs rejected against a prefix stay infeasible
/// against the final system; `rejected` re-checks each against the full
/// system so callers can verify maximality directly.
pub fn maximal_system(
    d: &LinkDiagram,
    f: &FaceMap,
    dual: &DualGraph,
    cap: usize,
) -> MaximalSystem {
    let all = candidate_pairs(dual);
    let mut accepted: Vec<(usize, usize)> = Vec::new();
    for p in &all {
        let mut trial = accepted.clone();
        trial.push(p.faces);
        if realize_disjoint_system(d, f, dual, &trial, cap)
            .expect("candidate pairs are valid requests")
            .is_feasible()
        {
            accepted = trial;
        }
    }
    let system = match realize_disjoint_system(d, f, dual, &accepted, cap).unwrap() {
        Realization::Feasible(sys) => *sys,
        _ => unreachable!("accepted set was feasible when grown"),
    };
    let rejected = all
        .iter()
        .map(|p| p.faces)
        .filter(|faces| !accepted.contains(faces))
        .map(|faces| {
            let mut trial = accepted.clone();
            trial.push(faces);
            let outcome = realize_disjoint_system(d, f, dual, &trial, cap).unwrap();
            (faces, outcome)
        })
        .collect();
    MaximalSystem {
        accepted,
        system,
        rejected,
    }
}

struct Search<'a> {
    d: &'a LinkDiagram,
    f: &'a FaceMap,
    routes: &'a [Vec<AugmentationArc>],
    chosen: Vec<usize>,
    edge_orders: BTreeMap<u32, Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(d: &'a LinkDiagram, f: &'a FaceMap, routes: &'a [Vec<AugmentationArc>]) -> Self {
        Search {
            d,
            f,
            routes,
            chosen: Vec::new(),
            edge_orders: BTreeMap::new(),
        }
    }

    /// Place arcs `k..` on top of the current state. Routes are tried in
    /// lexicographic order and insertion positions in ascending order, so
    /// the first realization found is canonical.
    fn run(&mut self, k: usize) -> bool {
        if k == self.routes.len() {
            return true;
        }
        for ri in 0..self.routes[k].len() {
            self.chosen.push(ri);
            if self.insert_from(k, ri, 0) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }

    fn insert_from(&mut self, k: usize, ri: usize, i: usize) -> bool {
        let arc = &self.routes[k][ri];
        if i == arc.route.len() {
            // Placing new points never reorders existing ones, so only
            // chords of the new arc need checking.
            return arc.faces.iter().all(|&face| self.face_ok(face, k)) && self.run(k + 1);
        }
        let edge = arc.route[i];
        let len = self.edge_orders.get(&edge).map_or(0, Vec::len);
        for pos in 0..=len {
            self.edge_orders.entry(edge).or_default().insert(pos, k);
            if self.insert_from(k, ri, i + 1) {
                return true;
            }
            let order = self.edge_orders.get_mut(&edge).unwrap();
            order.remove(pos);
            if order.is_empty() {
                self.edge_orders.remove(&edge);
            }
        }
        false
    }

    /// Attachment sequence of a face under the current partial placement.
    fn face_sequence(&self, face: usize) -> Vec<Attachment> {
        let mut seq = Vec::new();
        for &dart in self.f.face(face).darts() {
            let edge = self.d.edge_label(dart);
            let Some(order) = self.edge_orders.get(&edge) else {
                continue;
            };
            let (first, _) = self.d.edge_darts(edge);
            let forward = dart == first;
            let mut emit = |&arc: &usize| {
                seq.push(Attachment::Cross { edge, arc });
                if self.arc_ends_here(arc, face, edge) {
                    seq.push(Attachment::End { arc });
                }
            };
            if forward {
                order.iter().for_each(&mut emit);
            } else {
                order.iter().rev().for_each(&mut emit);
            }
        }
        seq
    }

    fn arc_ends_here(&self, arc: usize, face: usize, edge: u32) -> bool {
        let route = &self.routes[arc][self.chosen[arc]];
        (route.faces[0] == face && route.route[0] == edge)
            || (*route.faces.last().unwrap() == face && *route.route.last().unwrap() == edge)
    }

    fn face_ok(&self, face: usize, k: usize) -> bool {
        let seq = self.face_sequence(face);
        let mut spans: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (i, att) in seq.iter().enumerate() {
            spans
                .entry(att.arc())
                .and_modify(|span| span.1 = i)
                .or_insert((i, i));
        }
        let new = spans[&k];
        spans
            .iter()
            .all(|(&arc, &span)| arc == k || !interleaved(new, span))
    }

    fn into_system(self) -> ArcSystem {
        let arcs: Vec<AugmentationArc> = self
            .chosen
            .iter()
            .enumerate()
            .map(|(k, &ri)| self.routes[k][ri].clone())
            .collect();
        let mut face_layouts = BTreeMap::new();
        for face in 0..self.f.face_count() {
            let seq = self.face_sequence(face);
            if !seq.is_empty() {
                face_layouts.insert(face, seq);
            }
        }
        ArcSystem {
            arcs,
            edge_orders: self.edge_orders,
            face_layouts,
        }
    }
}

/// Chord interleaving on a boundary circle, with chords given by their
/// attachment positions in the linearized cyclic order.
fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize| a.0 < x && x < a.1;
    inside(b.0) != inside(b.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::dual::build_dual;

    fn setup(d: &LinkDiagram) -> (FaceMap, DualGraph) {
        let f = FaceMap::build(d);
        let dual = build_dual(d, &f);
        (f, dual)
    }

    #[test]
    fn empty_request_is_feasible() {
        let d = corpus::figure_eight();
        let (f, dual) = setup(&d);
        let r = realize_disjoint_system(&d, &f, &dual, &[], DEFAULT_CAP).unwrap();
        match r {
            Realization::Feasible(sys) => {
                assert!(sys.arcs.is_empty());
                assert!(sys.edge_orders.is_empty());
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn single_arc_always_feasible() {
        let d = corpus::figure_eight();
        let (f, dual) = setup(&d);
        for p in candidate_pairs(&dual) {
            let r = realize_disjoint_system(&d, &f, &dual, &[p.faces], DEFAULT_CAP).unwrap();
            assert!(r.is_feasible(), "pair {:?}", p.faces);
        }
    }

    #[test]
    fn duplicate_pair_rejected() {
        let d = corpus::figure_eight();
        let (f, dual) = setup(&d);
        let p = candidate_pairs(&dual)[0].faces;
        let flipped = (p.1, p.0);
        let err = realize_disjoint_system(&d, &f, &dual, &[p, flipped], DEFAULT_CAP).unwrap_err();
        assert_eq!(err, PlanError::DuplicatePair(p.0, p.1));
    }

    #[test]
    fn adjacent_pair_rejected() {
        let d = corpus::trefoil();
        let (f, dual) = setup(&d);
        let err = realize_disjoint_system(&d, &f, &dual, &[(0, 1)], DEFAULT_CAP).unwrap_err();
        assert_eq!(err, PlanError::NotCandidatePair(0, 1));
    }

    #[test]
    fn grid_cross_pairs_are_infeasible() {
        // Two arcs forced through the same central cell, one west-east and
        // one south-north: their chords interleave whatever the orders.
        let m = 6;
        let d = corpus::grid_weave(m, 6);
        let (f, dual) = setup(&d);
        let cell = |x, y| corpus::grid_cell_face(&d, &f, m, x, y);
        let horizontal = (cell(1, 2), cell(3, 2));
        let vertical = (cell(2, 1), cell(2, 3));
        let r =
            realize_disjoint_system(&d, &f, &dual, &[horizontal, vertical], DEFAULT_CAP).unwrap();
        match r {
            Realization::Infeasible { certificate, .. } => assert_eq!(
                certificate,
                Infeasibility::ConflictingPair {
                    pair_a: horizontal,
                    pair_b: vertical,
                }
            ),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn grid_cross_pairs_have_unique_routes() {
        let m = 6;
        let d = corpus::grid_weave(m, 6);
        let (f, dual) = setup(&d);
        let cell = |x, y| corpus::grid_cell_face(&d, &f, m, x, y);
        for (a, b) in [(cell(1, 2), cell(3, 2)), (cell(2, 1), cell(2, 3))] {
            let found = enumerate_shortest_routes(&dual, a, b, DEFAULT_CAP).unwrap();
            assert_eq!(found.routes.len(), 1);
            assert_eq!(found.routes[0].punctures(), 2);
        }
    }

    #[test]
    fn figure_eight_maximal_system() {
        let d = corpus::figure_eight();
        let (f, dual) = setup(&d);
        let max = maximal_system(&d, &f, &dual, DEFAULT_CAP);
        assert!(!max.accepted.is_empty());
        for (pair, outcome) in &max.rejected {
            assert!(
                matches!(outcome, Realization::Infeasible { .. }),
                "pair {pair:?} should be infeasible to add"
            );
        }
        assert_eq!(max.system.arcs.len(), max.accepted.len());
    }
}
