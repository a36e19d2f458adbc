//! Independent verification of realized arc systems.
//!
//! The planner certifies disjointness combinatorially; this module checks
//! it again by explicit geometry. Every face is drawn as a convex polygon
//! (attachment points placed on the parabola `y = x^2`, which keeps them in
//! convex position with integer coordinates), each arc segment becomes a
//! straight chord, and crossings are detected with exact integer
//! orientation predicates. It also re-derives each face's attachment
//! sequence from the per-edge strand orders, so inconsistencies between the
//! two stored views of a system are caught rather than trusted.

use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::faces::FaceMap;
use crate::realize::{ArcSystem, Attachment};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("arc {arc} route does not run between its endpoint faces")]
    BrokenRoute { arc: usize },
    #[error("arc {arc} crosses edge {edge} but the edge order disagrees")]
    EdgeOrderMismatch { arc: usize, edge: u32 },
    #[error("face {face} layout disagrees with the per-edge strand orders")]
    LayoutMismatch { face: usize },
    #[error("arc {arc} has {count} attachment points in face {face}, expected 2")]
    BadAttachmentCount { arc: usize, face: usize, count: usize },
    #[error("arcs {a} and {b} cross inside face {face}")]
    SegmentsCross { face: usize, a: usize, b: usize },
}

/// Check that a system is internally consistent and planar.
pub fn check_arc_system(
    d: &LinkDiagram,
    f: &FaceMap,
    sys: &ArcSystem,
) -> Result<(), VerifyError> {
    check_routes(d, f, sys)?;
    check_edge_orders(sys)?;
    check_layouts(d, f, sys)?;
    check_geometry(sys)
}

/// Each route must be a dual walk from one endpoint face to the other.
fn check_routes(d: &LinkDiagram, f: &FaceMap, sys: &ArcSystem) -> Result<(), VerifyError> {
    for (k, arc) in sys.arcs.iter().enumerate() {
        let broken = VerifyError::BrokenRoute { arc: k };
        if arc.route.len() < 2 || arc.faces.len() != arc.route.len() + 1 {
            return Err(broken);
        }
        if arc.faces[0] != arc.endpoints.0 || *arc.faces.last().unwrap() != arc.endpoints.1 {
            return Err(broken);
        }
        for (i, &edge) in arc.route.iter().enumerate() {
            let (a, b) = f.edge_sides(d, edge);
            let step = (arc.faces[i], arc.faces[i + 1]);
            if step != (a, b) && step != (b, a) {
                return Err(broken);
            }
        }
    }
    Ok(())
}

/// Edge orders must list exactly the arcs routed across each edge.
fn check_edge_orders(sys: &ArcSystem) -> Result<(), VerifyError> {
    for (k, arc) in sys.arcs.iter().enumerate() {
        for &edge in &arc.route {
            let hits = sys
                .edge_orders
                .get(&edge)
                .map_or(0, |order| order.iter().filter(|&&a| a == k).count());
            if hits != 1 {
                return Err(VerifyError::EdgeOrderMismatch { arc: k, edge });
            }
        }
    }
    for (&edge, order) in &sys.edge_orders {
        for &k in order {
            if !sys.arcs[k].route.contains(&edge) {
                return Err(VerifyError::EdgeOrderMismatch { arc: k, edge });
            }
        }
    }
    Ok(())
}

/// Re-derive each face's crossing sequence from the edge orders and the
/// face traversal direction, and require the stored layout to match it
/// once endpoint attachments are dropped. Endpoints must appear exactly
/// once in each of their arc's two endpoint faces.
fn check_layouts(d: &LinkDiagram, f: &FaceMap, sys: &ArcSystem) -> Result<(), VerifyError> {
    for (&face, layout) in &sys.face_layouts {
        let mut derived = Vec::new();
        for &dart in f.face(face).darts() {
            let edge = d.edge_label(dart);
            let Some(order) = sys.edge_orders.get(&edge) else {
                continue;
            };
            let (first, _) = d.edge_darts(edge);
            if dart == first {
                derived.extend(order.iter().map(|&arc| Attachment::Cross { edge, arc }));
            } else {
                derived.extend(order.iter().rev().map(|&arc| Attachment::Cross { edge, arc }));
            }
        }
        let stored: Vec<Attachment> = layout
            .iter()
            .copied()
            .filter(|att| matches!(att, Attachment::Cross { .. }))
            .collect();
        if !cyclically_equal(&stored, &derived) {
            return Err(VerifyError::LayoutMismatch { face });
        }
    }
    for (k, arc) in sys.arcs.iter().enumerate() {
        for face in [arc.endpoints.0, arc.endpoints.1] {
            let count = sys.face_layouts.get(&face).map_or(0, |layout| {
                layout
                    .iter()
                    .filter(|att| **att == Attachment::End { arc: k })
                    .count()
            });
            if count != 1 {
                return Err(VerifyError::LayoutMismatch { face });
            }
        }
    }
    Ok(())
}

fn cyclically_equal(a: &[Attachment], b: &[Attachment]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
}

/// Draw every face as a convex polygon and count straight-chord crossings.
fn check_geometry(sys: &ArcSystem) -> Result<(), VerifyError> {
    for (&face, layout) in &sys.face_layouts {
        // Point i of the layout sits at (i, i^2): convex position, so the
        // boundary cyclic order is the layout order.
        let point = |i: usize| (i as i128, (i as i128) * (i as i128));
        let mut segments: Vec<(usize, (usize, usize))> = Vec::new();
        {
            let mut spans: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for (i, att) in layout.iter().enumerate() {
                spans.entry(att.arc()).or_default().push(i);
            }
            for (arc, positions) in spans {
                if positions.len() != 2 {
                    return Err(VerifyError::BadAttachmentCount {
                        arc,
                        face,
                        count: positions.len(),
                    });
                }
                segments.push((arc, (positions[0], positions[1])));
            }
        }
        for (i, &(arc_a, seg_a)) in segments.iter().enumerate() {
            for &(arc_b, seg_b) in &segments[i + 1..] {
                let (p1, q1) = (point(seg_a.0), point(seg_a.1));
                let (p2, q2) = (point(seg_b.0), point(seg_b.1));
                if segments_cross(p1, q1, p2, q2) {
                    return Err(VerifyError::SegmentsCross {
                        face,
                        a: arc_a,
                        b: arc_b,
                    });
                }
            }
        }
    }
    Ok(())
}

type Pt = (i128, i128);

fn orient(p: Pt, q: Pt, r: Pt) -> i128 {
    let v = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
    v.signum()
}

/// Proper crossing test; endpoints are distinct points on a parabola, so
/// no three are collinear.
fn segments_cross(p1: Pt, q1: Pt, p2: Pt, q2: Pt) -> bool {
    orient(p1, q1, p2) != orient(p1, q1, q2) && orient(p2, q2, p1) != orient(p2, q2, q1)
}
