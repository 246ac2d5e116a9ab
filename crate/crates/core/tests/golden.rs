use flagquot::builders::{full_truncate, hemi, platonic, OperationKind};
use flagquot::catalog::{self, TABLE1, TABLE2};
use flagquot::petrie::{coxeter_elements, scheme, scheme_lengths, sigma_order_in_cover};
use flagquot::quotient::{
    cover_report, verify_psi, verify_psi_auto, word_permutation, PsiMap, SchlafliType,
    CUBE_IDENTITY_WORDS, CUBOCTAHEDRON_FACE_WORDS,
};
use flagquot::{BigCount, Word};

#[test]
fn published_rows_that_match() {
    for row in TABLE1
        .iter()
        .filter(|r| !r.published_suspect && r.name != "truncated_octahedron")
    {
        let g = catalog::build(row.name).unwrap();
        let r = cover_report(&g, row.name).unwrap();
        assert_eq!(
            r.vertex_symbol.as_ref(),
            Some(&row.vertex_symbol()),
            "{}",
            row.name
        );
        assert_eq!(r.schlafli, row.schlafli(), "{}", row.name);
        assert_eq!(r.cover_order, row.cover_order(), "{}", row.name);
        assert_eq!(r.stabilizer_order, row.stabilizer_order(), "{}", row.name);
    }
}

#[test]
fn pseudorhombicuboctahedron_order() {
    let g = catalog::build("pseudorhombicuboctahedron").unwrap();
    let r = cover_report(&g, "pseudorhombicuboctahedron").unwrap();
    assert_eq!(r.cover_order.to_string(), "16072626615091200");
    assert_eq!(r.cover_order.factored(), "2^35·3^5·5^2·7·11");
    assert_eq!(r.orbit_count, 12);
}

#[test]
fn truncated_octahedron_type() {
    // faces 4, 6, 6 force p = lcm(4, 6) = 12
    let g = catalog::build("truncated_octahedron").unwrap();
    let r = cover_report(&g, "truncated_octahedron").unwrap();
    assert_eq!(r.schlafli, SchlafliType { p: 12, q: 3 });
    assert_eq!(r.cover_order, BigCount::from(6912));
    assert_eq!(r.stabilizer_order, BigCount::from(48));
}

#[test]
fn icosidodecahedron_values() {
    let g = catalog::build("icosidodecahedron").unwrap();
    let r = cover_report(&g, "icosidodecahedron").unwrap();
    assert_eq!(r.n_flags, 240);
    assert_eq!(r.cover_order, BigCount::from(14400));
    assert_eq!(r.stabilizer_order, BigCount::from(60));
    assert_eq!(r.schlafli, SchlafliType { p: 15, q: 4 });
}

#[test]
fn great_rhombicuboctahedron_values() {
    let g = catalog::build("great_rhombicuboctahedron").unwrap();
    let r = cover_report(&g, "great_rhombicuboctahedron").unwrap();
    assert_eq!(r.vertex_symbol.unwrap().to_string(), "4.6.8");
    assert_eq!(r.schlafli, SchlafliType { p: 24, q: 3 });
    assert_eq!(r.cover_order, BigCount::from(5308416));
    assert_eq!(r.stabilizer_order, BigCount::from(18432));
}

#[test]
fn acoptic_table() {
    for row in TABLE2 {
        let g = catalog::build(row.name).unwrap();
        assert_eq!(
            cover_report(&g, row.name).unwrap().acoptic_ranks,
            row.ranks,
            "{}",
            row.name
        );
    }
}

#[test]
fn regular_seeds_have_one_orbit() {
    for name in [
        "tetrahedron",
        "cube",
        "octahedron",
        "dodecahedron",
        "icosahedron",
        "torus_44_3x3",
    ] {
        let g = catalog::build(name).unwrap();
        assert_eq!(g.flag_orbits().unwrap().count(), 1, "{name}");
    }
}

fn cuboctahedron_pairs() -> Vec<(bool, Word, Word)> {
    let co = full_truncate(&platonic("cube").unwrap()).unwrap();
    let psi = PsiMap::for_kind(OperationKind::FullTruncate);
    CUBOCTAHEDRON_FACE_WORDS
        .iter()
        .zip(CUBE_IDENTITY_WORDS)
        .map(|(a, b)| {
            let target = Word::parse_abc(a).unwrap();
            let image = psi.apply(&Word::parse(b, "stu").unwrap()).unwrap();
            let same =
                word_permutation(&co, &target).unwrap() == word_permutation(&co, &image).unwrap();
            (same, target, image)
        })
        .collect()
}

#[test]
fn face_words_correspond_except_eleventh() {
    let pairs = cuboctahedron_pairs();
    let mismatched: Vec<usize> = pairs
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.0)
        .map(|(k, _)| k + 1)
        .collect();
    assert_eq!(mismatched, [11]);
}

#[test]
fn eleventh_word_with_one_more_letter() {
    let co = full_truncate(&platonic("cube").unwrap()).unwrap();
    let psi = PsiMap::for_kind(OperationKind::FullTruncate);
    let image = psi
        .apply(&Word::parse("((ut)^3)^{stust}", "stu").unwrap())
        .unwrap();
    let target = Word::parse_abc(CUBOCTAHEDRON_FACE_WORDS[10]).unwrap();
    assert_eq!(
        word_permutation(&co, &image).unwrap(),
        word_permutation(&co, &target).unwrap()
    );
}

#[test]
fn cuboctahedron_face_words_generate_the_stabilizer() {
    let co = full_truncate(&platonic("cube").unwrap()).unwrap();
    let mut sub = flagquot::PermGroup::new(co.n_flags(), Vec::new()).unwrap();
    for w in CUBOCTAHEDRON_FACE_WORDS {
        let p = word_permutation(&co, &Word::parse_abc(w).unwrap()).unwrap();
        assert_eq!(p.image(0), 0);
        sub.add_generator(p);
    }
    assert_eq!(sub.order(), BigCount::from(24));
}

#[test]
fn cube_words_are_identities() {
    let cube = platonic("cube").unwrap();
    for w in CUBE_IDENTITY_WORDS {
        assert!(
            word_permutation(&cube, &Word::parse(w, "stu").unwrap())
                .unwrap()
                .is_identity(),
            "{w}"
        );
    }
}

#[test]
fn cube_word_images_fix_a_square_flag() {
    let cube = platonic("cube").unwrap();
    let co = full_truncate(&cube).unwrap();
    let r = verify_psi(OperationKind::FullTruncate, &cube, &co, 0).unwrap();
    assert!(r.passed(), "{r:?}");
    let psi = PsiMap::for_kind(OperationKind::FullTruncate);
    for w in CUBE_IDENTITY_WORDS {
        let image = psi.apply(&Word::parse(w, "stu").unwrap()).unwrap();
        assert_eq!(co.apply_word(0, &image).unwrap(), 0, "{w}");
    }
}

#[test]
fn psi_maps_hold_for_every_operation() {
    for (kind, seeds) in [
        (
            OperationKind::Truncate,
            &[
                "tetrahedron",
                "cube",
                "octahedron",
                "dodecahedron",
                "icosahedron",
            ][..],
        ),
        (OperationKind::FullTruncate, &["cube", "dodecahedron"][..]),
        (OperationKind::Rhombify, &["cube", "dodecahedron"][..]),
        (
            OperationKind::TruncateFullTruncate,
            &["cube", "dodecahedron"][..],
        ),
        (OperationKind::Snub, &["cube", "dodecahedron"][..]),
    ] {
        for name in seeds {
            let seed = platonic(name).unwrap();
            let derived = kind.apply(&seed).unwrap();
            let group_seed = if kind == OperationKind::Snub {
                hemi(&seed).unwrap()
            } else {
                seed
            };
            let r = verify_psi_auto(kind, &group_seed, &derived).unwrap();
            assert!(r.passed(), "{kind} {name}: {r:?}");
        }
    }
}

#[test]
fn torus_counterexample() {
    let g = catalog::build("torus_44_petrie").unwrap();
    let maps = coxeter_elements(&g).unwrap();
    assert_eq!(maps.len(), 2);
    for m in &maps {
        assert_eq!(sigma_order_in_cover(&g, m), 30);
        for f in g.flags() {
            let s = scheme(&g, f, m).unwrap();
            assert!(s.len() == 6 || s.len() == 10);
            for i in 0..3 {
                assert!(s.is_acoptic_at(&g, i).unwrap());
            }
        }
    }
    assert_eq!(scheme_lengths(&g).unwrap(), [vec![6, 10], vec![6, 10]]);
}

#[test]
fn petrie_lengths_divide_sigma_order() {
    for e in catalog::entries() {
        let g = e.build().unwrap();
        for (m, lens) in coxeter_elements(&g)
            .unwrap()
            .iter()
            .zip(scheme_lengths(&g).unwrap())
        {
            let order = sigma_order_in_cover(&g, m) as usize;
            assert!(lens.iter().all(|l| order.is_multiple_of(*l)), "{}", e.name);
        }
    }
}
