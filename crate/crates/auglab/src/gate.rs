//! Hypothesis gate: connected, alternating, reduced, obviously prime,
//! and not a 2-braid.
//!
//! A passing report certifies that any valid augmentation of the diagram
//! yields a hyperbolic link. Every failing flag carries a witness that can
//! be replayed against the diagram; [`Witness::replay`] does exactly that
//! and is used by the test suite.

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::faces::FaceMap;

/// Outcome of [`check_hypotheses`].
///
/// `reduced`, `obviously_prime` and `two_braid` are computed from the
/// combinatorial map regardless of the other flags; their topological
/// reading assumes `connected` (and for `two_braid`, `alternating` and
/// `reduced`) as stated in the corresponding predicates.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub connected: bool,
    pub alternating: bool,
    pub reduced: bool,
    pub obviously_prime: bool,
    pub two_braid: bool,
    pub passes: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Crossings grouped by connected component (more than one group).
    Disconnected { components: Vec<Vec<usize>> },
    /// An edge whose two ends have the same under/over role.
    NotAlternating { edge: u32 },
    /// A crossing with diagonally opposite corners on the same face.
    Nugatory { crossing: usize },
    /// Two edges whose removal disconnects the projection.
    TwoEdgeCut { edges: [u32; 2] },
    /// The face census matches the closed 2-braid pattern.
    TwoBraid { crossings: usize, face_sizes: Vec<usize> },
}

impl Witness {
    /// Re-establish the failure directly from the diagram.
    pub fn replay(&self, d: &LinkDiagram) -> bool {
        let f = FaceMap::build(d);
        match self {
            Witness::Disconnected { components } => {
                components.len() > 1 && *components == d.projection_component_partition()
            }
            Witness::NotAlternating { edge } => {
                let (a, b) = d.edge_darts(*edge);
                a.is_under() == b.is_under()
            }
            Witness::Nugatory { crossing } => {
                let c = *crossing;
                f.corner_face(c, 0) == f.corner_face(c, 2)
                    || f.corner_face(c, 1) == f.corner_face(c, 3)
            }
            Witness::TwoEdgeCut { edges } => {
                cut_disconnects(d, edges[0], edges[1])
            }
            Witness::TwoBraid { crossings, face_sizes } => {
                *crossings == d.crossing_count()
                    && *face_sizes == f.sizes_sorted()
                    && census_is_two_braid(*crossings, face_sizes)
            }
        }
    }
}

/// The nugatory crossing of smallest index, if any.
///
/// A crossing is nugatory iff two diagonally opposite corners lie on the
/// same face; with the fixed traversal convention, corner `i` of crossing
/// `c` is the face of dart `(c, i)`.
pub fn nugatory_crossing(d: &LinkDiagram, f: &FaceMap) -> Option<usize> {
    (0..d.crossing_count()).find(|&c| {
        f.corner_face(c, 0) == f.corner_face(c, 2) || f.corner_face(c, 1) == f.corner_face(c, 3)
    })
}

/// True iff no crossing is nugatory. Assumes `d` connected.
pub fn is_reduced(d: &LinkDiagram, f: &FaceMap) -> bool {
    nugatory_crossing(d, f).is_none()
}

/// The lexicographically smallest 2-edge cut, if any.
///
/// Two distinct edges form a cut exactly when they border the same pair
/// of faces: their dual edges then form a 2-cycle, and in a 4-regular
/// graph (no bridges, all cuts even) every 2-edge cut is minimal, so the
/// dual-cycle correspondence is complete. Both sides of such a cut always
/// contain a crossing. Assumes `d` connected and reduced.
pub fn two_edge_cut(d: &LinkDiagram, f: &FaceMap) -> Option<(u32, u32)> {
    let mut by_sides: std::collections::BTreeMap<(usize, usize), Vec<u32>> =
        std::collections::BTreeMap::new();
    for label in d.edge_labels() {
        let (a, b) = f.edge_sides(d, label);
        let key = (a.min(b), a.max(b));
        by_sides.entry(key).or_default().push(label);
    }
    by_sides
        .values()
        .filter(|group| group.len() >= 2)
        .map(|group| (group[0], group[1]))
        .min()
}

/// True iff the projection has no 2-edge cut with crossings on both
/// sides, i.e. no simple closed curve meets it transversely twice with
/// crossings to either side.
pub fn is_obviously_prime(d: &LinkDiagram, f: &FaceMap) -> bool {
    two_edge_cut(d, f).is_none()
}

fn census_is_two_braid(crossings: usize, sizes_sorted: &[usize]) -> bool {
    if crossings < 2 {
        return false;
    }
    if crossings == 2 {
        // Degenerate (2,2)-torus pattern: all four faces are bigons.
        return sizes_sorted == [2, 2, 2, 2];
    }
    let bigons = sizes_sorted.iter().filter(|&&s| s == 2).count();
    let large = sizes_sorted.iter().filter(|&&s| s == crossings).count();
    bigons == crossings && large == 2 && sizes_sorted.len() == crossings + 2
}

/// True iff the face census matches the standard closed 2-braid pattern:
/// C bigons plus two faces of size C. Assumes `d` connected, reduced and
/// alternating.
pub fn is_two_braid(d: &LinkDiagram, f: &FaceMap) -> bool {
    census_is_two_braid(d.crossing_count(), &f.sizes_sorted())
}

/// Check all hypotheses of the hyperbolicity theorem for `d`.
pub fn check_hypotheses(d: &LinkDiagram) -> HypothesisReport {
    let f = FaceMap::build(d);
    let connected = d.projection_components() == 1;
    let alternating = d.is_alternating();
    let nugatory = nugatory_crossing(d, &f);
    let reduced = nugatory.is_none();
    let cut = two_edge_cut(d, &f);
    let obviously_prime = cut.is_none();
    let two_braid = is_two_braid(d, &f);
    let passes = connected && alternating && reduced && obviously_prime && !two_braid;

    let mut witnesses = Vec::new();
    if !connected {
        witnesses.push(Witness::Disconnected {
            components: d.projection_component_partition(),
        });
    }
    if let Some(edge) = d.alternation_witness() {
        witnesses.push(Witness::NotAlternating { edge });
    }
    if let Some(crossing) = nugatory {
        witnesses.push(Witness::Nugatory { crossing });
    }
    if let Some((e1, e2)) = cut {
        witnesses.push(Witness::TwoEdgeCut { edges: [e1, e2] });
    }
    if two_braid {
        witnesses.push(Witness::TwoBraid {
            crossings: d.crossing_count(),
            face_sizes: f.sizes_sorted(),
        });
    }

    HypothesisReport {
        connected,
        alternating,
        reduced,
        obviously_prime,
        two_braid,
        passes,
        witnesses,
    }
}

/// True iff removing both edges disconnects the projection graph (or
/// splits one of its components). Used to replay cut witnesses.
pub fn cut_disconnects(d: &LinkDiagram, e1: u32, e2: u32) -> bool {
    if e1 == e2 {
        return false;
    }
    let before = d.projection_components();
    let n = d.crossing_count();
    let mut adj = vec![Vec::new(); n];
    for label in d.edge_labels() {
        if label == e1 || label == e2 {
            continue;
        }
        let (a, b) = d.edge_darts(label);
        adj[a.crossing].push(b.crossing);
        adj[b.crossing].push(a.crossing);
    }
    let mut seen = vec![false; n];
    let mut parts = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        parts += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    parts > before
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const KINK: &str = "X(1,2,2,1)";

    fn gate(text: &str) -> HypothesisReport {
        check_hypotheses(&LinkDiagram::parse_pd(text).unwrap())
    }

    #[test]
    fn trefoil_fails_only_two_braid() {
        let r = gate(TREFOIL);
        assert!(r.connected && r.alternating && r.reduced && r.obviously_prime);
        assert!(r.two_braid);
        assert!(!r.passes);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn kink_is_nugatory() {
        let d = LinkDiagram::parse_pd(KINK).unwrap();
        let f = FaceMap::build(&d);
        assert_eq!(nugatory_crossing(&d, &f), Some(0));
        let r = gate(KINK);
        assert!(!r.reduced && !r.passes);
        assert!(r.witnesses.iter().all(|w| w.replay(&d)));
    }

    #[test]
    fn witnesses_replay() {
        for text in [TREFOIL, KINK] {
            let d = LinkDiagram::parse_pd(text).unwrap();
            for w in check_hypotheses(&d).witnesses {
                assert!(w.replay(&d), "witness {w:?} failed to replay on {text}");
            }
        }
    }

    #[test]
    fn mirror_leaves_flags_unchanged() {
        let d = LinkDiagram::parse_pd(TREFOIL).unwrap();
        let (a, b) = (check_hypotheses(&d), check_hypotheses(&d.mirror()));
        assert_eq!(
            (a.connected, a.alternating, a.reduced, a.obviously_prime, a.two_braid),
            (b.connected, b.alternating, b.reduced, b.obviously_prime, b.two_braid)
        );
    }
}
