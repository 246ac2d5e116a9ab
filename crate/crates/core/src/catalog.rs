//! Named solids and the published cover data they are compared against.

use std::str::FromStr;

use serde::Serialize;

use crate::builders::{self, LatticeBasis, OperationKind, Orientation};
use crate::error::{Error, Result};
use crate::flagcore::{FlagGraph, VertexSymbol};
use crate::permgrp::BigCount;
use crate::quotient::SchlafliType;

/// How a catalog entry is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Recipe {
    Seed(&'static str),
    Op(OperationKind, &'static str),
    Pseudorhombicuboctahedron,
    Torus([i64; 2], [i64; 2]),
    PetrieTorus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    Platonic,
    Archimedean,
    Torus,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Entry {
    pub name: &'static str,
    pub family: Family,
    pub recipe: Recipe,
}

impl Entry {
    pub fn build(&self) -> Result<FlagGraph> {
        match self.recipe {
            Recipe::Seed(name) => builders::platonic(name)
                .ok_or_else(|| Error::MalformedGraph(format!("unknown seed {name}"))),
            Recipe::Op(kind, seed) => {
                let g = builders::platonic(seed)
                    .ok_or_else(|| Error::MalformedGraph(format!("unknown seed {seed}")))?;
                match kind {
                    OperationKind::Snub => builders::snub(&g, Orientation::Left),
                    k => k.apply(&g),
                }
            }
            Recipe::Pseudorhombicuboctahedron => builders::pseudorhombicuboctahedron(),
            Recipe::Torus(v1, v2) => builders::torus_44(LatticeBasis::new(v1, v2)),
            Recipe::PetrieTorus => builders::torus_44(LatticeBasis::petrie_counterexample()),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        match self.family {
            Family::Torus => 0,
            _ => 2,
        }
    }
}

const fn arch(name: &'static str, kind: OperationKind, seed: &'static str) -> Entry {
    Entry {
        name,
        family: Family::Archimedean,
        recipe: Recipe::Op(kind, seed),
    }
}

const fn seed(name: &'static str) -> Entry {
    Entry {
        name,
        family: Family::Platonic,
        recipe: Recipe::Seed(name),
    }
}

use OperationKind::*;

pub const ENTRIES: &[Entry] = &[
    seed("tetrahedron"),
    seed("cube"),
    seed("octahedron"),
    seed("dodecahedron"),
    seed("icosahedron"),
    arch("truncated_tetrahedron", Truncate, "tetrahedron"),
    arch("truncated_octahedron", Truncate, "octahedron"),
    arch("cuboctahedron", FullTruncate, "cube"),
    arch("truncated_cube", Truncate, "cube"),
    arch("icosidodecahedron", FullTruncate, "dodecahedron"),
    arch("truncated_icosahedron", Truncate, "icosahedron"),
    arch("small_rhombicuboctahedron", Rhombify, "cube"),
    Entry {
        name: "pseudorhombicuboctahedron",
        family: Family::Archimedean,
        recipe: Recipe::Pseudorhombicuboctahedron,
    },
    arch("snub_cube", Snub, "cube"),
    arch("small_rhombicosidodecahedron", Rhombify, "dodecahedron"),
    arch(
        "great_rhombicosidodecahedron",
        TruncateFullTruncate,
        "dodecahedron",
    ),
    arch("snub_dodecahedron", Snub, "dodecahedron"),
    arch("truncated_dodecahedron", Truncate, "dodecahedron"),
    arch("great_rhombicuboctahedron", TruncateFullTruncate, "cube"),
    Entry {
        name: "torus_44_3x3",
        family: Family::Torus,
        recipe: Recipe::Torus([3, 0], [0, 3]),
    },
    Entry {
        name: "torus_44_petrie",
        family: Family::Torus,
        recipe: Recipe::PetrieTorus,
    },
];

pub fn entries() -> &'static [Entry] {
    ENTRIES
}

pub fn lookup(name: &str) -> Option<&'static Entry> {
    let key = name.trim().to_ascii_lowercase().replace(['-', ' '], "_");
    ENTRIES.iter().find(|e| e.name == key)
}

pub fn build(name: &str) -> Result<FlagGraph> {
    lookup(name)
        .ok_or_else(|| Error::MalformedGraph(format!("unknown solid {name}")))?
        .build()
}

/// The fourteen sporadic Archimedean solids in published table order.
pub fn archimedean() -> impl Iterator<Item = &'static Entry> {
    TABLE1
        .iter()
        .map(|row| lookup(row.name).expect("table rows name catalog entries"))
}

/// A row of the published minimal-cover table.
#[derive(Debug, Clone, Copy)]
pub struct PublishedCover {
    pub name: &'static str,
    pub label: &'static str,
    pub vertex_symbol: &'static str,
    pub schlafli: (usize, usize),
    pub cover_order: &'static str,
    pub stabilizer_order: &'static str,
    /// Known-inconsistent printed row; compared but reported separately.
    pub published_suspect: bool,
}

impl PublishedCover {
    pub fn vertex_symbol(&self) -> VertexSymbol {
        VertexSymbol::from_str(self.vertex_symbol).expect("static symbol")
    }

    pub fn schlafli(&self) -> SchlafliType {
        SchlafliType {
            p: self.schlafli.0,
            q: self.schlafli.1,
        }
    }

    pub fn cover_order(&self) -> BigCount {
        BigCount::from_str(self.cover_order).expect("static order")
    }

    pub fn stabilizer_order(&self) -> BigCount {
        BigCount::from_str(self.stabilizer_order).expect("static order")
    }
}

const fn row(
    name: &'static str,
    label: &'static str,
    vertex_symbol: &'static str,
    schlafli: (usize, usize),
    cover_order: &'static str,
    stabilizer_order: &'static str,
) -> PublishedCover {
    PublishedCover {
        name,
        label,
        vertex_symbol,
        schlafli,
        cover_order,
        stabilizer_order,
        published_suspect: false,
    }
}

const fn suspect(mut r: PublishedCover) -> PublishedCover {
    r.published_suspect = true;
    r
}

pub const TABLE1: [PublishedCover; 14] = [
    row(
        "truncated_tetrahedron",
        "Trunc. Tetrahedron",
        "3.6.6",
        (6, 3),
        "144",
        "2",
    ),
    row(
        "truncated_octahedron",
        "Trunc. Octahedron",
        "4.6.6",
        (8, 3),
        "6912",
        "48",
    ),
    row(
        "cuboctahedron",
        "Cuboctahedron",
        "3.4.3.4",
        (12, 4),
        "2304",
        "24",
    ),
    row(
        "truncated_cube",
        "Trunc. Cube",
        "3.8.8",
        (24, 3),
        "82944",
        "576",
    ),
    suspect(row(
        "icosidodecahedron",
        "Icosidodecahedron",
        "3.5.3.5",
        (15, 4),
        "14400",
        "120",
    )),
    row(
        "truncated_icosahedron",
        "Trunc. Icosahedron",
        "5.6.6",
        (30, 3),
        "2592000",
        "7200",
    ),
    row(
        "small_rhombicuboctahedron",
        "Sm. Rhombicuboctahedron",
        "3.4.4.4",
        (12, 4),
        "1327104",
        "6912",
    ),
    row(
        "pseudorhombicuboctahedron",
        "Pseudorhombicuboctahedron",
        "3.4.4.4",
        (12, 4),
        "2^35·3^5·5^2·7·11",
        "2^29·3^4·5^2·7·11",
    ),
    row(
        "snub_cube",
        "Snub Cube",
        "3.3.3.3.4",
        (12, 5),
        "2^32·3^11·5",
        "2^28·3^10",
    ),
    row(
        "small_rhombicosidodecahedron",
        "Sm. Rhombicosidodecahedron",
        "3.4.5.4",
        (60, 4),
        "207360000",
        "432000",
    ),
    row(
        "great_rhombicosidodecahedron",
        "Gt. Rhombicosidodecahedron",
        "4.6.10",
        (60, 3),
        "559872000000",
        "777600000",
    ),
    row(
        "snub_dodecahedron",
        "Snub Dodecahedron",
        "3.3.3.3.5",
        (15, 5),
        "2^23·3^11·5^11",
        "2^20·3^10·5^9",
    ),
    row(
        "truncated_dodecahedron",
        "Trunc. Dodecahedron",
        "3.10.10",
        (30, 3),
        "2592000",
        "7200",
    ),
    suspect(row(
        "great_rhombicuboctahedron",
        "Gt. Rhombicuboctahedron",
        "4.6.4.8",
        (24, 4),
        "5308416",
        "18432",
    )),
];

/// A row of the published acoptic-rank table.
#[derive(Debug, Clone, Copy)]
pub struct PublishedAcoptic {
    pub name: &'static str,
    pub label: &'static str,
    pub ranks: &'static [usize],
}

const ALL: &[usize] = &[0, 1, 2];
const LOW: &[usize] = &[0, 1];
const NONE: &[usize] = &[];

pub const TABLE2: [PublishedAcoptic; 14] = [
    PublishedAcoptic {
        name: "cuboctahedron",
        label: "Cuboctahedron",
        ranks: ALL,
    },
    PublishedAcoptic {
        name: "great_rhombicosidodecahedron",
        label: "Great Rhombicosidodecahedron",
        ranks: ALL,
    },
    PublishedAcoptic {
        name: "great_rhombicuboctahedron",
        label: "Great Rhombicuboctahedron",
        ranks: ALL,
    },
    PublishedAcoptic {
        name: "icosidodecahedron",
        label: "Icosadodecahedron",
        ranks: ALL,
    },
    PublishedAcoptic {
        name: "small_rhombicosidodecahedron",
        label: "Small Rhombicosidodecahedron",
        ranks: ALL,
    },
    PublishedAcoptic {
        name: "small_rhombicuboctahedron",
        label: "Small Rhombicuboctahedron",
        ranks: ALL,
    },
    PublishedAcoptic {
        name: "pseudorhombicuboctahedron",
        label: "Pseudorhombicuboctahedron",
        ranks: NONE,
    },
    PublishedAcoptic {
        name: "snub_cube",
        label: "Snub Cube",
        ranks: NONE,
    },
    PublishedAcoptic {
        name: "snub_dodecahedron",
        label: "Snub Dodecahedron",
        ranks: NONE,
    },
    PublishedAcoptic {
        name: "truncated_cube",
        label: "Truncated Cube",
        ranks: LOW,
    },
    PublishedAcoptic {
        name: "truncated_dodecahedron",
        label: "Truncated Dodecahedron",
        ranks: LOW,
    },
    PublishedAcoptic {
        name: "truncated_icosahedron",
        label: "Truncated Icosahedron",
        ranks: ALL,
    },
    PublishedAcoptic {
        name: "truncated_octahedron",
        label: "Truncated Octahedron",
        ranks: ALL,
    },
    PublishedAcoptic {
        name: "truncated_tetrahedron",
        label: "Truncated Tetrahedron",
        ranks: LOW,
    },
];

pub fn published_cover(name: &str) -> Option<&'static PublishedCover> {
    TABLE1.iter().find(|r| r.name == name)
}

pub fn published_acoptic(name: &str) -> Option<&'static PublishedAcoptic> {
    TABLE2.iter().find(|r| r.name == name)
}
