use std::fs;
use std::path::Path;

use auglab::corpus;
use auglab::diagram::LinkDiagram;

fn main() {
    let dir = Path::new("crates/auglab/tests/data");
    fs::create_dir_all(dir).unwrap();
    let t = corpus::trefoil();
    let f8 = corpus::figure_eight();
    let kinked = LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,7,3) X(6,7,8,8)").unwrap();

    let entries: Vec<(&str, String, &str)> = vec![
        ("kink.pd", corpus::KINK.to_string(), "one-crossing unknot kink"),
        ("hopf.pd", corpus::two_braid(2).serialize(), "(2,2)-torus link, standard Hopf diagram"),
        ("trefoil.pd", corpus::TREFOIL.to_string(), "trefoil, standard PD code"),
        (
            "figure_eight.pd",
            corpus::FIGURE_EIGHT.to_string(),
            "figure-eight knot, standard PD code",
        ),
        ("torus_2_4.pd", corpus::two_braid(4).serialize(), "(2,4)-torus link"),
        (
            "kinked_trefoil.pd",
            kinked.serialize(),
            "trefoil with a Reidemeister-I kink appended on one edge",
        ),
        ("torus_2_5.pd", corpus::two_braid(5).serialize(), "(2,5)-torus knot"),
        ("torus_2_6.pd", corpus::two_braid(6).serialize(), "(2,6)-torus link"),
        (
            "granny.pd",
            corpus::splice(&t, 6, &t, 6).serialize(),
            "connect sum of two trefoils",
        ),
        (
            "square.pd",
            corpus::splice(&t, 6, &t.mirror(), 6).serialize(),
            "connect sum of a trefoil and its mirror",
        ),
        (
            "fig8_sum_trefoil.pd",
            corpus::splice(&f8, 8, &t, 6).serialize(),
            "connect sum of the figure-eight knot and a trefoil",
        ),
        (
            "split_trefoils.pd",
            corpus::disjoint_union(&t, &t).serialize(),
            "split diagram: two disjoint trefoils",
        ),
        (
            "grid_weave_6.pd",
            corpus::grid_weave(6, 6).serialize(),
            "6x6 alternating grid weave, plat-closed along each side",
        ),
    ];
    for (name, pd, comment) in &entries {
        let content = format!("# {comment}\n{pd}\n");
        // Round-trip sanity before freezing.
        LinkDiagram::parse_pd(&content).unwrap();
        fs::write(dir.join(name), content).unwrap();
        println!("wrote {name}");
    }
}
