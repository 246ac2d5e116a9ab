mod common;

use flagquot::builders::{
    self, data, elongated_square_bicupola, from_spec, full_truncate, oriented_rhombification,
    platonic, rhombify, snub, to_spec, torus_44, truncate, truncate_full_truncate, LatticeBasis,
    OperationKind, Orientation, PolyhedronSpec,
};
use flagquot::{Error, FlagGraph, VertexSymbol};

const SEEDS: [&str; 5] = [
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
];

fn seed(name: &str) -> FlagGraph {
    platonic(name).unwrap()
}

fn fixture(text: &str) -> FlagGraph {
    from_spec(&data::spec(text)).unwrap()
}

fn symbol(g: &FlagGraph) -> String {
    let all = g.vertex_symbols().unwrap();
    assert!(
        all.iter().all(|s| *s == all[0]),
        "not vertex-transitive in symbol"
    );
    all[0].to_string()
}

#[test]
fn seeds_have_expected_counts() {
    let flags = [24, 48, 48, 120, 120];
    let symbols = ["3.3.3", "4.4.4", "3.3.3.3", "5.5.5", "3.3.3.3.3"];
    for ((name, n), sym) in SEEDS.iter().zip(flags).zip(symbols) {
        let g = seed(name);
        assert_eq!(g.n_flags(), n, "{name}");
        assert_eq!(symbol(&g), sym, "{name}");
        assert!(g.validate().is_valid());
    }
}

#[test]
fn flag_count_laws() {
    for name in SEEDS {
        let g = seed(name);
        for kind in OperationKind::ALL {
            if kind == OperationKind::Snub && !matches!(name, "cube" | "dodecahedron") {
                continue;
            }
            let d = kind.apply(&g).unwrap();
            assert_eq!(
                d.n_flags(),
                kind.flag_factor() * g.n_flags(),
                "{kind} {name}"
            );
            assert!(d.validate().is_valid(), "{kind} {name}");
            assert_eq!(d.euler_characteristic(), 2, "{kind} {name}");
        }
    }
}

#[test]
fn derived_symbols() {
    let cases = [
        ("tetrahedron", OperationKind::Truncate, "3.6.6"),
        ("cube", OperationKind::Truncate, "3.8.8"),
        ("icosahedron", OperationKind::Truncate, "5.6.6"),
        ("cube", OperationKind::FullTruncate, "3.4.3.4"),
        ("dodecahedron", OperationKind::FullTruncate, "3.5.3.5"),
        ("cube", OperationKind::Rhombify, "3.4.4.4"),
        ("dodecahedron", OperationKind::Rhombify, "3.4.5.4"),
        ("cube", OperationKind::TruncateFullTruncate, "4.6.8"),
        (
            "dodecahedron",
            OperationKind::TruncateFullTruncate,
            "4.6.10",
        ),
        ("cube", OperationKind::Snub, "3.3.3.3.4"),
        ("dodecahedron", OperationKind::Snub, "3.3.3.3.5"),
    ];
    for (name, kind, want) in cases {
        let d = kind.apply(&seed(name)).unwrap();
        assert_eq!(symbol(&d), want, "{kind} {name}");
        // 2k flags at each vertex for a k-term symbol
        let k = want.split('.').count();
        assert!(d.faces(0).unwrap().sizes.iter().all(|&s| s == 2 * k));
    }
}

#[test]
fn operation_identities() {
    let tet = seed("tetrahedron");
    let cube = seed("cube");
    let oct = seed("octahedron");
    assert!(full_truncate(&tet).unwrap().is_isomorphic(&oct));
    assert!(rhombify(&tet)
        .unwrap()
        .is_isomorphic(&full_truncate(&cube).unwrap()));
    assert!(truncate_full_truncate(&tet)
        .unwrap()
        .is_isomorphic(&truncate(&oct).unwrap()));
    assert!(rhombify(&cube)
        .unwrap()
        .is_isomorphic(&full_truncate(&full_truncate(&cube).unwrap()).unwrap()));
    // duals give the same derived solids
    assert!(full_truncate(&cube)
        .unwrap()
        .is_isomorphic(&full_truncate(&oct).unwrap()));
    assert!(rhombify(&cube)
        .unwrap()
        .is_isomorphic(&rhombify(&oct).unwrap()));
    assert!(!truncate(&cube)
        .unwrap()
        .is_isomorphic(&truncate(&oct).unwrap()));
}

#[test]
fn snubs_match_hull_fixtures() {
    let sc = snub(&seed("cube"), Orientation::Left).unwrap();
    let sd = snub(&seed("dodecahedron"), Orientation::Left).unwrap();
    assert!(sc.is_isomorphic(&fixture(data::SNUB_CUBE)));
    assert!(sd.is_isomorphic(&fixture(data::SNUB_DODECAHEDRON)));
}

#[test]
fn snub_mirror_images_are_isomorphic() {
    for name in ["cube", "dodecahedron"] {
        let g = seed(name);
        let l = snub(&g, Orientation::Left).unwrap();
        let r = snub(&g, Orientation::Right).unwrap();
        assert!(l.is_isomorphic(&r), "{name}");
    }
}

#[test]
fn snub_splits_rhombification_squares() {
    let g = seed("cube");
    let (spec, squares) = oriented_rhombification(&g, Orientation::Left).unwrap();
    assert_eq!(squares.len(), 12);
    assert!(from_spec(&spec)
        .unwrap()
        .is_isomorphic(&rhombify(&g).unwrap()));
    // the same split done by hand
    let mut faces: Vec<Vec<usize>> = spec
        .faces
        .iter()
        .filter(|f| f.len() != 4 || !squares.iter().any(|s| same_cycle(f, s)))
        .cloned()
        .collect();
    for [a, b, c, d] in &squares {
        faces.push(vec![*a, *b, *c]);
        faces.push(vec![*a, *c, *d]);
    }
    let manual = from_spec(&PolyhedronSpec::new("manual", faces)).unwrap();
    assert!(manual.is_isomorphic(&snub(&g, Orientation::Left).unwrap()));
}

fn same_cycle(f: &[usize], s: &[usize; 4]) -> bool {
    let mut a = f.to_vec();
    let mut b = s.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

#[test]
fn snub_rejects_non_orientable() {
    let h = builders::hemi(&seed("cube")).unwrap();
    assert!(matches!(
        snub(&h, Orientation::Left),
        Err(Error::NonOrientable)
    ));
}

#[test]
fn bicupolas() {
    let ortho = from_spec(&elongated_square_bicupola(false)).unwrap();
    let gyro = from_spec(&elongated_square_bicupola(true)).unwrap();
    assert!(ortho.is_isomorphic(&rhombify(&seed("cube")).unwrap()));
    assert!(gyro.is_isomorphic(&fixture(data::PSEUDORHOMBICUBOCTAHEDRON)));
    assert!(!gyro.is_isomorphic(&ortho));
    assert_eq!(gyro.n_flags(), 192);
    assert_eq!(symbol(&gyro), "3.4.4.4");
}

#[test]
fn spec_round_trip() {
    for name in ["cube", "icosahedron"] {
        let g = truncate(&seed(name)).unwrap();
        let spec = to_spec(&g, "t").unwrap();
        let text = spec.to_string();
        let back: PolyhedronSpec = text.parse().unwrap();
        assert!(from_spec(&back).unwrap().is_isomorphic(&g));
    }
}

#[test]
fn torus_examples() {
    let t = torus_44(LatticeBasis::new([3, 0], [0, 3])).unwrap();
    assert_eq!(t.n_flags(), 72);
    assert_eq!(t.faces(0).unwrap().count(), 9);
    assert_eq!(t.euler_characteristic(), 0);
    assert!(torus_44(LatticeBasis::new([2, 0], [0, 1])).is_err());
    assert!(matches!(
        torus_44(LatticeBasis::new([2, 4], [1, 2])),
        Err(Error::DegenerateBasis)
    ));
    let basis = LatticeBasis::petrie_counterexample();
    assert_eq!(basis.det().abs(), 30);
    let p = torus_44(basis).unwrap();
    assert_eq!(p.n_flags(), 240);
    assert_eq!(symbol(&p), "4.4.4.4");
}

#[test]
fn vertex_symbol_parsing() {
    let s: VertexSymbol = "4.6.8".parse().unwrap();
    let r: VertexSymbol = "8.6.4".parse().unwrap();
    assert_eq!(s, r);
    assert!("4..6".parse::<VertexSymbol>().is_err());
}
