//! Brute-force oracles shared by the integration and acceptance suites.
//!
//! Everything here recomputes results from first principles, independently
//! of the library's implementation paths, so the two can be compared.

// Each test binary compiles this module and uses a different subset.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::fs;
use std::path::PathBuf;

use auglab::diagram::{Dart, LinkDiagram};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn data_path(name: &str) -> PathBuf {
    data_dir().join(name)
}

/// All corpus diagrams (the `.pd` files that parse), sorted by file name.
pub fn load_corpus() -> Vec<(String, LinkDiagram)> {
    let mut out = Vec::new();
    let mut names: Vec<PathBuf> = fs::read_dir(data_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "pd"))
        .collect();
    names.sort();
    for path in names {
        let text = fs::read_to_string(&path).unwrap();
        if let Ok(d) = LinkDiagram::parse_pd(&text) {
            out.push((path.file_name().unwrap().to_string_lossy().into_owned(), d));
        }
    }
    out
}

/// Oracle: alternation by listing each strand's under/over sequence.
pub fn alternating_by_traversal(d: &LinkDiagram) -> bool {
    d.strands().iter().all(|orbit| {
        let seq: Vec<bool> = orbit.iter().map(|dart| dart.is_under()).collect();
        (0..seq.len()).all(|i| seq[i] != seq[(i + 1) % seq.len()])
    })
}

/// Oracle: face census by the mirror traversal convention (rotate the
/// co-dart counterclockwise). Orbit structure is recomputed from scratch;
/// the census must agree with the library's convention.
pub struct MirrorFaces {
    pub dart_to_face: Vec<usize>,
    pub count: usize,
    pub sizes: Vec<usize>,
}

pub fn faces_by_mirror_traversal(d: &LinkDiagram) -> MirrorFaces {
    let total = d.dart_count();
    let mut dart_to_face = vec![usize::MAX; total];
    let mut sizes = Vec::new();
    for id in 0..total {
        if dart_to_face[id] != usize::MAX {
            continue;
        }
        let index = sizes.len();
        let start = Dart::from_id(id);
        let mut cur = start;
        let mut size = 0;
        loop {
            dart_to_face[cur.id()] = index;
            size += 1;
            cur = d.other_end(cur).rotated_ccw();
            if cur == start {
                break;
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    MirrorFaces {
        count: sizes.len(),
        dart_to_face,
        sizes,
    }
}

/// Oracle: nugatory crossings via the mirror face traversal. Under that
/// convention the corner between slots `i` and `i+1` belongs to the face
/// of dart `(c, i+1)`.
pub fn nugatory_by_mirror_corners(d: &LinkDiagram) -> Option<usize> {
    let faces = faces_by_mirror_traversal(d);
    let corner = |c: usize, i: u8| faces.dart_to_face[Dart::new(c, (i + 1) % 4).id()];
    (0..d.crossing_count())
        .find(|&c| corner(c, 0) == corner(c, 2) || corner(c, 1) == corner(c, 3))
}

/// Oracle: the lexicographically smallest pair of edges whose removal
/// disconnects the projection, by exhaustive pair enumeration and flood
/// fill.
pub fn two_cut_by_enumeration(d: &LinkDiagram) -> Option<(u32, u32)> {
    let labels: Vec<u32> = d.edge_labels().collect();
    let before = components_without(d, None);
    for (i, &e1) in labels.iter().enumerate() {
        for &e2 in &labels[i + 1..] {
            if components_without(d, Some((e1, e2))) > before {
                return Some((e1, e2));
            }
        }
    }
    None
}

fn components_without(d: &LinkDiagram, skip: Option<(u32, u32)>) -> usize {
    let n = d.crossing_count();
    let mut adj = vec![Vec::new(); n];
    for label in d.edge_labels() {
        if let Some((e1, e2)) = skip {
            if label == e1 || label == e2 {
                continue;
            }
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
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    parts
}

/// Oracle: dual-graph distance by a plain BFS over an adjacency structure
/// rebuilt from the face map.
pub fn dual_distance_by_bfs(
    d: &LinkDiagram,
    f: &auglab::faces::FaceMap,
    from: usize,
    to: usize,
) -> Option<usize> {
    let mut adj = vec![Vec::new(); f.face_count()];
    for label in d.edge_labels() {
        let (a, b) = f.edge_sides(d, label);
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut dist = vec![None; f.face_count()];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            return dist[v];
        }
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist[to]
}

/// Oracle: the octahedron volume as 8 Λ(π/4), with the Lobachevsky
/// function evaluated by its Fourier series Λ(θ) = ½ Σ sin(2kθ)/k².
/// At θ = π/4 the series is alternating over odd k; terms are summed in
/// pairs from the tail for stability.
pub fn v_oct_by_lobachevsky_series() -> f64 {
    let terms: i64 = 2_000_000;
    let mut sum = 0.0f64;
    for i in (0..terms).rev() {
        let k1 = (4 * i + 1) as f64;
        let k2 = (4 * i + 3) as f64;
        sum += 1.0 / (k1 * k1) - 1.0 / (k2 * k2);
    }
    let lambda_quarter_pi = 0.5 * sum;
    8.0 * lambda_quarter_pi
}

/// One golden CLI invocation: arguments relative to `tests/data`, the
/// expected exit code, and the frozen stdout under `tests/golden`.
pub struct GoldenCase {
    pub args: Vec<String>,
    pub exit: i32,
    pub golden: &'static str,
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let case = |args: &[&str], exit: i32, golden: &'static str| GoldenCase {
        args: args.iter().map(|s| s.to_string()).collect(),
        exit,
        golden,
    };
    let p = |name: &str| data_path(name).to_string_lossy().into_owned();
    vec![
        case(&["check", &p("trefoil.pd")], 1, "check_trefoil.json"),
        case(&["check", &p("figure_eight.pd")], 0, "check_figure_eight.json"),
        case(&["check", &p("torus_2_4.pd")], 1, "check_torus_2_4.json"),
        case(&["check", &p("kinked_trefoil.pd")], 1, "check_kinked_trefoil.json"),
        case(&["check", &p("granny.pd")], 1, "check_granny.json"),
        case(&["check", &p("split_trefoils.pd")], 1, "check_split_trefoils.json"),
        case(&["faces", &p("trefoil.pd")], 0, "faces_trefoil.json"),
        case(&["faces", &p("figure_eight.pd")], 0, "faces_figure_eight.json"),
        case(&["faces", &p("kink.pd")], 0, "faces_kink.json"),
        case(
            &["faces", &p("trefoil.pd"), "--format", "text"],
            0,
            "faces_trefoil.txt",
        ),
        case(
            &["augment", &p("fig8_classical.json")],
            0,
            "augment_fig8_classical.json",
        ),
        case(
            &["augment", &p("fig8_generalized.json")],
            0,
            "augment_fig8_generalized.json",
        ),
        case(&["augment", &p("fig8_empty.json")], 0, "augment_fig8_empty.json"),
        case(
            &["augment", &p("fig8_maximal.json")],
            0,
            "augment_fig8_maximal.json",
        ),
        case(
            &["augment", &p("grid_conflict.json")],
            3,
            "augment_grid_conflict.json",
        ),
        case(&["volume", &p("figure9.json")], 0, "volume_figure9.json"),
        case(
            &["volume", &p("figure9_bound.json")],
            0,
            "volume_figure9_bound.json",
        ),
        case(
            &["volume", &p("figure9_opaque.json")],
            0,
            "volume_figure9_opaque.json",
        ),
        case(&["volume", &p("n3_sum.json")], 0, "volume_n3_sum.json"),
        case(
            &["volume", &p("unbound_leaf.json")],
            0,
            "volume_unbound_leaf.json",
        ),
        case(
            &["volume", &p("figure9_bound.json"), "--format", "text"],
            0,
            "volume_figure9_bound.txt",
        ),
    ]
}

/// Run the built `auglab` binary, returning the exit code and raw stdout.
pub fn run_cli(args: &[String]) -> (i32, Vec<u8>) {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_auglab"))
        .args(args)
        .env_remove("AUGLAB_CAP")
        .output()
        .expect("run auglab binary");
    (output.status.code().unwrap_or(-1), output.stdout)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}
