//! Property tests for the exact arithmetic and the PD-code layer.

mod common;

use std::collections::BTreeMap;

use num_rational::Rational64;
use proptest::prelude::*;

use auglab::corpus;
use auglab::diagram::{canonicalize, LinkDiagram};
use auglab::faces::FaceMap;
use auglab::gate::check_hypotheses;
use auglab::volume::{approx_eq, belted_sum, VolumeExpr, VolumeSymbol, V_OCT};

fn rational() -> impl Strategy<Value = Rational64> {
    (-40i64..=40, 1i64..=12).prop_map(|(num, den)| Rational64::new(num, den))
}

fn volume_expr() -> impl Strategy<Value = VolumeExpr> {
    proptest::collection::vec((0usize..4, rational()), 0..5).prop_map(|terms| {
        let names = ["K", "L", "W"];
        let mut expr = VolumeExpr::zero();
        for (which, coeff) in terms {
            let symbol = if which == 0 {
                VolumeSymbol::Oct
            } else {
                VolumeSymbol::named(names[which - 1])
            };
            expr.add_term(symbol, coeff);
        }
        expr
    })
}

fn bindings() -> BTreeMap<String, f64> {
    let mut b = BTreeMap::new();
    b.insert("K".to_string(), 5.137941);
    b.insert("L".to_string(), 2.029883);
    b.insert("W".to_string(), V_OCT);
    b
}

proptest! {
    #[test]
    fn belted_sum_is_commutative(a in volume_expr(), b in volume_expr(), n in 2u32..8) {
        prop_assert_eq!(belted_sum(&a, &b, n).unwrap(), belted_sum(&b, &a, n).unwrap());
    }

    #[test]
    fn belted_sum_n2_is_neutral(a in volume_expr(), b in volume_expr()) {
        prop_assert_eq!(belted_sum(&a, &b, 2).unwrap(), a.clone() + b.clone());
    }

    #[test]
    fn belted_sum_corrections_accumulate(
        a in volume_expr(),
        b in volume_expr(),
        c in volume_expr(),
        n in 2u32..8,
        m in 2u32..8,
    ) {
        // Sum(Sum(a,b,n),c,m) drops 4(n-2)+4(m-2) octahedra off a+b+c.
        let nested = belted_sum(&belted_sum(&a, &b, n).unwrap(), &c, m).unwrap();
        let mut flat = a.clone() + b.clone() + c.clone();
        flat.add_term(
            VolumeSymbol::Oct,
            Rational64::from_integer(-4 * (i64::from(n) - 2 + i64::from(m) - 2)),
        );
        prop_assert_eq!(nested, flat);
    }

    #[test]
    fn numeric_is_consistent_with_symbolic(a in volume_expr(), b in volume_expr(), n in 2u32..8) {
        let bindings = bindings();
        let sum = belted_sum(&a, &b, n).unwrap();
        let lhs = sum.numeric(&bindings).unwrap();
        let rhs = a.numeric(&bindings).unwrap() + b.numeric(&bindings).unwrap()
            - 4.0 * (f64::from(n) - 2.0) * V_OCT;
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        prop_assert!(approx_eq(lhs, rhs, 1e-12 * scale));
    }

    #[test]
    fn canonical_form_is_label_invariant(scale in 1u32..1000, offset in 0u32..1000) {
        // Injective relabeling never changes the canonical form.
        for (_, d) in common::load_corpus() {
            let relabeled: Vec<[u32; 4]> = d
                .crossings()
                .iter()
                .map(|t| t.map(|x| x * scale + offset * scale))
                .collect();
            let r = LinkDiagram::from_crossings(relabeled).unwrap();
            prop_assert_eq!(r.serialize(), d.serialize());
        }
    }
}

#[test]
fn canonicalize_is_idempotent_over_corpus() {
    for (name, d) in common::load_corpus() {
        let once = d.serialize();
        let twice = canonicalize(&once).unwrap();
        assert_eq!(once, twice, "{name}");
    }
}

#[test]
fn two_braid_family_census() {
    for k in 2..=20 {
        let d = corpus::two_braid(k);
        let f = FaceMap::build(&d);
        assert_eq!(f.face_count(), k + 2);
        let report = check_hypotheses(&d);
        assert!(report.two_braid, "k={k}");
        assert!(report.alternating && report.reduced && report.obviously_prime);
    }
}

#[test]
fn grid_family_invariants() {
    for (m, n) in [(2, 2), (2, 4), (4, 4), (4, 6), (6, 6), (8, 4)] {
        let d = corpus::grid_weave(m, n);
        let f = FaceMap::build(&d);
        assert_eq!(f.face_count(), m * n + 2, "{m}x{n}");
        assert!(d.is_alternating(), "{m}x{n}");
        assert_eq!(d.projection_components(), 1, "{m}x{n}");
    }
}
