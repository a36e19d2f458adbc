//! Complementary regions of the projection sphere.
//!
//! Faces are orbits of the next-dart rule: hop to the far end of the
//! current dart's edge, then rotate one slot clockwise. This fixes one of
//! the two mirror traversal conventions; under it, the corner of crossing
//! `c` between slots `i` and `i+1` belongs to the face containing dart
//! `(c, i)`, which is what the nugatory-crossing test relies on.

use serde::Serialize;

use crate::diagram::{Dart, LinkDiagram};

/// One complementary region, as its boundary darts in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Boundary edge labels in traversal order (a multiset; an edge can
    /// occur twice on a disconnected diagram's face).
    pub fn edge_labels(&self, d: &LinkDiagram) -> Vec<u32> {
        self.darts.iter().map(|&dart| d.edge_label(dart)).collect()
    }
}

/// All faces of a diagram plus the dart-to-face table.
#[derive(Debug, Clone)]
pub struct FaceMap {
    faces: Vec<Face>,
    dart_to_face: Vec<usize>,
}

impl FaceMap {
    /// Canonical face census: darts are scanned in id order and each
    /// unvisited dart starts a new face, so indices are stable.
    pub fn build(d: &LinkDiagram) -> FaceMap {
        let total = d.dart_count();
        let mut dart_to_face = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for id in 0..total {
            if dart_to_face[id] != usize::MAX {
                continue;
            }
            let index = faces.len();
            let start = Dart::from_id(id);
            let mut darts = Vec::new();
            let mut cur = start;
            loop {
                dart_to_face[cur.id()] = index;
                darts.push(cur);
                cur = next_dart(d, cur);
                if cur == start {
                    break;
                }
            }
            faces.push(Face { darts });
        }
        FaceMap {
            faces,
            dart_to_face,
        }
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, index: usize) -> &Face {
        &self.faces[index]
    }

    pub fn face_of(&self, dart: Dart) -> usize {
        self.dart_to_face[dart.id()]
    }

    /// Face filling the corner between slots `corner` and `corner+1`.
    pub fn corner_face(&self, crossing: usize, corner: u8) -> usize {
        self.face_of(Dart::new(crossing, corner))
    }

    /// Face sizes as a sorted census.
    pub fn sizes_sorted(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.faces.iter().map(Face::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// The two faces on either side of an edge, in (smaller dart, larger
    /// dart) order. They coincide only if the edge is a bridge, which a
    /// 4-regular graph cannot have.
    pub fn edge_sides(&self, d: &LinkDiagram, label: u32) -> (usize, usize) {
        let (a, b) = d.edge_darts(label);
        (self.face_of(a), self.face_of(b))
    }
}

/// The face-traversal successor: clockwise rotation of the co-dart.
pub fn next_dart(d: &LinkDiagram, dart: Dart) -> Dart {
    d.other_end(dart).rotated_cw()
}

/// Spec operation name for [`FaceMap::build`].
pub fn build_faces(d: &LinkDiagram) -> FaceMap {
    FaceMap::build(d)
}
