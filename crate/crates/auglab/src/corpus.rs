//! Constructors for families of test diagrams: standard knots, closed
//! 2-braids, plat-closed grid weaves, connect sums and disjoint unions.

use crate::diagram::{Dart, LinkDiagram};
use crate::faces::FaceMap;

pub const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
pub const KINK: &str = "X(1,2,2,1)";

pub fn trefoil() -> LinkDiagram {
    LinkDiagram::parse_pd(TREFOIL).unwrap()
}

pub fn figure_eight() -> LinkDiagram {
    LinkDiagram::parse_pd(FIGURE_EIGHT).unwrap()
}

pub fn kink() -> LinkDiagram {
    LinkDiagram::parse_pd(KINK).unwrap()
}

/// The standard alternating closure of the 2-braid with `k` crossings:
/// the (2,k) torus diagram. Crossing `i` sits between strand edges
/// `a_i, a_{i+1}` (left) and `b_i, b_{i+1}` (right), indices mod `k`.
pub fn two_braid(k: usize) -> LinkDiagram {
    assert!(k >= 1);
    let a = |i: usize| (i % k) as u32 + 1;
    let b = |i: usize| (i % k) as u32 + 1 + k as u32;
    let crossings = (0..k)
        .map(|i| [a(i), a(i + 1), b(i + 1), b(i)])
        .collect();
    LinkDiagram::from_crossings(crossings).unwrap()
}

/// An alternating weave of `m` vertical and `n` horizontal strands,
/// plat-closed along each side. `m` and `n` must be even so the closure
/// arcs pair ports within one side and never loop at a corner.
///
/// Crossings sit at grid points `(x, y)`, `x < m`, `y < n`, indexed
/// row-major. The horizontal strand is over exactly when `x + y` is odd.
pub fn grid_weave(m: usize, n: usize) -> LinkDiagram {
    assert!(m >= 2 && n >= 2 && m % 2 == 0 && n % 2 == 0);
    let mut next_label = 0u32;
    let mut fresh = || {
        next_label += 1;
        next_label
    };

    // Interior edges.
    let mut horizontal = vec![vec![0u32; n]; m - 1]; // between (x,y) and (x+1,y)
    let mut vertical = vec![vec![0u32; n - 1]; m]; // between (x,y) and (x,y+1)
    for y in 0..n {
        for x in 0..m - 1 {
            horizontal[x][y] = fresh();
        }
    }
    for y in 0..n - 1 {
        for x in 0..m {
            vertical[x][y] = fresh();
        }
    }

    // Closure arcs pair adjacent outward ports along each side.
    let mut south = vec![0u32; m];
    let mut north = vec![0u32; m];
    let mut west = vec![0u32; n];
    let mut east = vec![0u32; n];
    for x in (0..m).step_by(2) {
        let s = fresh();
        south[x] = s;
        south[x + 1] = s;
        let t = fresh();
        north[x] = t;
        north[x + 1] = t;
    }
    for y in (0..n).step_by(2) {
        let w = fresh();
        west[y] = w;
        west[y + 1] = w;
        let e = fresh();
        east[y] = e;
        east[y + 1] = e;
    }

    let port = |x: usize, y: usize, dir: char| -> u32 {
        match dir {
            'E' => {
                if x + 1 < m {
                    horizontal[x][y]
                } else {
                    east[y]
                }
            }
            'W' => {
                if x > 0 {
                    horizontal[x - 1][y]
                } else {
                    west[y]
                }
            }
            'N' => {
                if y + 1 < n {
                    vertical[x][y]
                } else {
                    north[x]
                }
            }
            'S' => {
                if y > 0 {
                    vertical[x][y - 1]
                } else {
                    south[x]
                }
            }
            _ => unreachable!(),
        }
    };

    let mut crossings = Vec::with_capacity(m * n);
    for y in 0..n {
        for x in 0..m {
            // Counterclockwise port order is E, N, W, S; start the tuple
            // on the understrand.
            let tuple = if (x + y) % 2 == 0 {
                // Horizontal strand under: start at W.
                ['W', 'S', 'E', 'N']
            } else {
                // Vertical strand under: start at S.
                ['S', 'E', 'N', 'W']
            };
            crossings.push([
                port(x, y, tuple[0]),
                port(x, y, tuple[1]),
                port(x, y, tuple[2]),
                port(x, y, tuple[3]),
            ]);
        }
    }
    LinkDiagram::from_crossings(crossings).unwrap()
}

/// The face index of the square cell whose southwest crossing is `(x, y)`
/// in a grid weave built by [`grid_weave`]. The cell is the face on the
/// north side of the horizontal edge from `(x, y)` to `(x+1, y)`.
pub fn grid_cell_face(d: &LinkDiagram, f: &FaceMap, m: usize, x: usize, y: usize) -> usize {
    let sw = y * m + x;
    let se = y * m + x + 1;
    let nw = (y + 1) * m + x;
    let ne = (y + 1) * m + x + 1;
    // Darts carried by the cell's four boundary edges at its four corner
    // crossings; the cell is the unique face containing one dart of each.
    let corners = [sw, se, nw, ne];
    for face_idx in 0..f.face_count() {
        let face = f.face(face_idx);
        if face.len() != 4 {
            continue;
        }
        let mut cs: Vec<usize> = face.darts().iter().map(|dart| dart.crossing).collect();
        cs.sort_unstable();
        let mut want = corners.to_vec();
        want.sort_unstable();
        if cs == want {
            let _ = d;
            return face_idx;
        }
    }
    panic!("no face for cell ({x},{y})");
}

/// Connect sum of two diagrams along the edges `e1` of `d1` and `e2` of
/// `d2`. Labels of `d2` are shifted past those of `d1`; the two splice
/// edges keep (shifted) labels `e1` and `e2`, and the reconnection is
/// chosen so the result stays alternating whenever both inputs are.
pub fn splice(d1: &LinkDiagram, e1: u32, d2: &LinkDiagram, e2: u32) -> LinkDiagram {
    let shift: u32 = d1.edge_labels().max().unwrap();
    let mut crossings: Vec<[u32; 4]> = d1.crossings().to_vec();
    for tuple in d2.crossings() {
        crossings.push([
            tuple[0] + shift,
            tuple[1] + shift,
            tuple[2] + shift,
            tuple[3] + shift,
        ]);
    }
    let offset = d1.crossing_count();
    let (x1, y1) = d1.edge_darts(e1);
    let (x2, y2) = d2.edge_darts(e2);
    let x2 = Dart::new(x2.crossing + offset, x2.slot);
    let y2 = Dart::new(y2.crossing + offset, y2.slot);
    let e2 = e2 + shift;

    // Pair ends of opposite under/over role so every new edge keeps one
    // under end and one over end.
    let (p2, q2) = if x1.is_under() != x2.is_under() {
        (x2, y2)
    } else {
        (y2, x2)
    };
    // New edge e1 joins x1 with p2; new edge e2 joins y1 with q2.
    crossings[p2.crossing][p2.slot as usize] = e1;
    crossings[q2.crossing][q2.slot as usize] = e2;
    crossings[y1.crossing][y1.slot as usize] = e2;
    LinkDiagram::from_crossings(crossings).unwrap()
}

/// Disjoint union (a split diagram); labels of `d2` are shifted.
pub fn disjoint_union(d1: &LinkDiagram, d2: &LinkDiagram) -> LinkDiagram {
    let shift: u32 = d1.edge_labels().max().unwrap();
    let mut crossings: Vec<[u32; 4]> = d1.crossings().to_vec();
    for tuple in d2.crossings() {
        crossings.push([
            tuple[0] + shift,
            tuple[1] + shift,
            tuple[2] + shift,
            tuple[3] + shift,
        ]);
    }
    LinkDiagram::from_crossings(crossings).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::check_hypotheses;

    #[test]
    fn two_braid_family() {
        for k in 2..=7 {
            let d = two_braid(k);
            let f = FaceMap::build(&d);
            assert_eq!(d.projection_components(), 1);
            assert!(d.is_alternating(), "k={k}");
            assert_eq!(f.face_count(), k + 2);
            let r = check_hypotheses(&d);
            assert!(r.two_braid, "k={k} must match the 2-braid census");
            assert!(!r.passes);
        }
        assert_eq!(two_braid(2).link_components().len(), 2);
        assert_eq!(two_braid(3).link_components().len(), 1);
    }

    #[test]
    fn figure_eight_passes_gate() {
        let d = figure_eight();
        let f = FaceMap::build(&d);
        assert_eq!(f.face_count(), 6);
        assert_eq!(f.sizes_sorted(), vec![2, 2, 3, 3, 3, 3]);
        let r = check_hypotheses(&d);
        assert!(r.passes, "report: {r:?}");
    }

    #[test]
    fn grid_weave_is_alternating_and_connected() {
        for (m, n) in [(4, 4), (6, 6), (4, 6)] {
            let d = grid_weave(m, n);
            assert_eq!(d.crossing_count(), m * n);
            assert!(d.is_alternating(), "{m}x{n}");
            assert_eq!(d.projection_components(), 1);
            let f = FaceMap::build(&d);
            assert_eq!(f.face_count(), m * n + 2);
        }
    }

    #[test]
    fn grid_cells_are_squares() {
        let m = 6;
        let d = grid_weave(m, 6);
        let f = FaceMap::build(&d);
        let center = grid_cell_face(&d, &f, m, 2, 2);
        assert_eq!(f.face(center).len(), 4);
    }

    #[test]
    fn splice_of_trefoils_is_composite() {
        let t = trefoil();
        let sum = splice(&t, 6, &t, 6);
        assert_eq!(sum.crossing_count(), 6);
        assert!(sum.is_alternating());
        assert_eq!(sum.projection_components(), 1);
        let r = check_hypotheses(&sum);
        assert!(!r.obviously_prime);
        assert!(r.witnesses.iter().any(|w| w.replay(&sum)));
    }

    #[test]
    fn disjoint_union_is_split() {
        let t = trefoil();
        let d = disjoint_union(&t, &t);
        assert_eq!(d.projection_components(), 2);
        let r = check_hypotheses(&d);
        assert!(!r.connected && !r.passes);
    }
}
