//! Construction of flag graphs: explicit face lists, the Platonic seeds,
//! the truncation family of map operations, snubbing, and {4,4} tori.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flagcore::{Flag, FlagGraph};
use crate::word::Word;

/// A polyhedron given by its faces, each a cyclic list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedronSpec {
    pub name: String,
    pub faces: Vec<Vec<usize>>,
    pub expected_flags: Option<usize>,
}

impl PolyhedronSpec {
    pub fn new(name: impl Into<String>, faces: Vec<Vec<usize>>) -> Self {
        PolyhedronSpec {
            name: name.into(),
            faces,
            expected_flags: None,
        }
    }

    pub fn with_expected_flags(mut self, n: usize) -> Self {
        self.expected_flags = Some(n);
        self
    }

    /// Check the face-list invariants: no degenerate faces, every edge in
    /// exactly two faces, faces connected through shared edges.
    pub fn check(&self) -> Result<()> {
        for (i, face) in self.faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::DegenerateFace {
                    face: i,
                    reason: format!("{} vertices", face.len()),
                });
            }
            let mut sorted = face.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DegenerateFace {
                    face: i,
                    reason: format!("vertex {} repeated", w[0]),
                });
            }
        }
        let edges = self.edge_occurrences();
        let mut keys: Vec<_> = edges.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let occ = &edges[&key];
            if occ.len() != 2 {
                return Err(Error::NonManifoldEdge {
                    u: key.0,
                    w: key.1,
                    count: occ.len(),
                });
            }
        }
        if self.faces.is_empty() {
            return Err(Error::DisconnectedSpec);
        }
        let mut seen = vec![false; self.faces.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(f) = queue.pop_front() {
            let face = &self.faces[f];
            for k in 0..face.len() {
                let key = edge_key(face[k], face[(k + 1) % face.len()]);
                for &(g, _) in &edges[&key] {
                    if !seen[g] {
                        seen[g] = true;
                        queue.push_back(g);
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::DisconnectedSpec);
        }
        Ok(())
    }

    /// For each undirected edge, the (face, position) pairs where it occurs
    /// as `face[pos]..face[pos+1]`.
    fn edge_occurrences(&self) -> HashMap<(usize, usize), Vec<(usize, usize)>> {
        let mut edges: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            for k in 0..face.len() {
                let key = edge_key(face[k], face[(k + 1) % face.len()]);
                edges.entry(key).or_default().push((f, k));
            }
        }
        edges
    }

    /// Flip face cycles so that every edge is traversed in opposite
    /// directions by its two faces. Returns `false` (leaving the remaining
    /// faces untouched) when the surface is non-orientable.
    pub fn orient(&mut self) -> bool {
        if self.faces.is_empty() {
            return true;
        }
        let edges = self.edge_occurrences();
        let directed = |face: &[usize], u: usize, w: usize| {
            let k = face.iter().position(|&x| x == u).unwrap();
            face[(k + 1) % face.len()] == w
        };
        let mut state = vec![None::<bool>; self.faces.len()];
        let mut ok = true;
        for root in 0..self.faces.len() {
            if state[root].is_some() {
                continue;
            }
            state[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(f) = queue.pop_front() {
                let flip_f = state[f].unwrap();
                let face = &self.faces[f];
                for k in 0..face.len() {
                    let (u, w) = (face[k], face[(k + 1) % face.len()]);
                    // direction of u→w in f after its flip
                    let fwd_f = !flip_f;
                    for &(g, _) in &edges[&edge_key(u, w)] {
                        if g == f {
                            continue;
                        }
                        let fwd_g = directed(&self.faces[g], u, w);
                        // g must traverse u→w opposite to f
                        let need_flip = fwd_g == fwd_f;
                        match state[g] {
                            None => {
                                state[g] = Some(need_flip);
                                queue.push_back(g);
                            }
                            Some(s) if s != need_flip => ok = false,
                            _ => {}
                        }
                    }
                }
            }
        }
        if ok {
            for (face, s) in self.faces.iter_mut().zip(&state) {
                if *s == Some(true) {
                    face.reverse();
                    face.rotate_right(1);
                }
            }
        }
        ok
    }

    pub fn n_vertices(&self) -> usize {
        self.faces
            .iter()
            .flatten()
            .copied()
            .max()
            .map_or(0, |m| m + 1)
    }
}

fn edge_key(u: usize, w: usize) -> (usize, usize) {
    if u < w {
        (u, w)
    } else {
        (w, u)
    }
}

impl fmt::Display for PolyhedronSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        if let Some(n) = self.expected_flags {
            writeln!(f, "expected_flags: {n}")?;
        }
        writeln!(f, "faces:")?;
        for face in &self.faces {
            let row: Vec<String> = face.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for PolyhedronSpec {
    type Err = Error;

    /// Text format:
    ///
    /// ```text
    /// # comment
    /// name: cube
    /// expected_flags: 48
    /// faces:
    /// 0 1 2 3
    /// ...
    /// ```
    fn from_str(s: &str) -> Result<Self> {
        let mut name = None;
        let mut expected_flags = None;
        let mut faces = Vec::new();
        let mut in_faces = false;
        for (i, raw) in s.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: String| Error::Parse { line: line_no, msg };
            if !in_faces {
                let (key, value) = line
                    .split_once(':')
                    .ok_or_else(|| parse_err(format!("expected 'key: value', got {line:?}")))?;
                let value = value.trim();
                match key.trim() {
                    "name" => name = Some(value.to_string()),
                    "expected_flags" => {
                        expected_flags = Some(
                            value
                                .parse()
                                .map_err(|e| parse_err(format!("expected_flags: {e}")))?,
                        )
                    }
                    "faces" => {
                        if !value.is_empty() {
                            return Err(parse_err("face rows start on the next line".into()));
                        }
                        in_faces = true;
                    }
                    other => return Err(parse_err(format!("unknown key {other:?}"))),
                }
            } else {
                let row = line
                    .split_whitespace()
                    .map(|t| t.parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| parse_err(format!("face row: {e}")))?;
                faces.push(row);
            }
        }
        let name = name.ok_or(Error::Parse {
            line: 0,
            msg: "missing 'name'".into(),
        })?;
        if !in_faces {
            return Err(Error::Parse {
                line: 0,
                msg: "missing 'faces:' section".into(),
            });
        }
        Ok(PolyhedronSpec {
            name,
            faces,
            expected_flags,
        })
    }
}

/// Build the flag graph of a face list.
///
/// Flag `(face, k, side)` has vertex `face[k]`; side 0 takes the edge to
/// `face[k+1]`, side 1 the edge to `face[k-1]`. Flags are numbered
/// lexicographically by `(face, k, side)`.
pub fn from_spec(spec: &PolyhedronSpec) -> Result<FlagGraph> {
    spec.check()?;
    let mut offset = Vec::with_capacity(spec.faces.len());
    let mut n = 0;
    for face in &spec.faces {
        offset.push(n);
        n += 2 * face.len();
    }
    let id = |f: usize, k: usize, side: usize| offset[f] + 2 * k + side;
    let edges = spec.edge_occurrences();
    let mut ex = vec![vec![usize::MAX; n]; 3];
    for (f, face) in spec.faces.iter().enumerate() {
        let p = face.len();
        for k in 0..p {
            let next = (k + 1) % p;
            ex[1][id(f, k, 0)] = id(f, k, 1);
            ex[1][id(f, k, 1)] = id(f, k, 0);
            ex[0][id(f, k, 0)] = id(f, next, 1);
            ex[0][id(f, next, 1)] = id(f, k, 0);
            // edge face[k]..face[next], seen from both of its ends
            let occ = &edges[&edge_key(face[k], face[next])];
            let &(g, j) = occ.iter().find(|&&(g, j)| (g, j) != (f, k)).unwrap();
            let gface = &spec.faces[g];
            let gnext = (j + 1) % gface.len();
            for (pos, side, vertex) in [(k, 0, face[k]), (next, 1, face[next])] {
                let other = if gface[j] == vertex {
                    id(g, j, 0)
                } else {
                    id(g, gnext, 1)
                };
                ex[2][id(f, pos, side)] = other;
            }
        }
    }
    let g = FlagGraph::new(ex)?;
    if let Some(expected) = spec.expected_flags {
        if expected != g.n_flags() {
            return Err(Error::FlagCountMismatch {
                expected,
                got: g.n_flags(),
            });
        }
    }
    Ok(g)
}

/// Reads faces back off a rank-3 flag graph. Vertex numbers are rank-0
/// orbit indices; each face cycle starts at its smallest flag and follows
/// `exchange[0]·exchange[1]`.
pub fn to_spec(g: &FlagGraph, name: &str) -> Result<PolyhedronSpec> {
    let verts = g.faces(0)?;
    let faces = g.faces(2)?;
    let cycles = (0..faces.count())
        .map(|k| {
            let start = faces.members(k)[0];
            walk(g, start, 0, 1, faces.sizes[k] / 2)
                .into_iter()
                .map(|f| verts.orbit_of[f])
                .collect()
        })
        .collect();
    Ok(PolyhedronSpec::new(name, cycles))
}

/// `count` flags starting at `start`, stepping by `exchange[i]·exchange[j]`.
fn walk(g: &FlagGraph, start: Flag, i: usize, j: usize, count: usize) -> Vec<Flag> {
    let mut out = Vec::with_capacity(count);
    let mut f = start;
    for _ in 0..count {
        out.push(f);
        f = g.exchange(j, g.exchange(i, f));
    }
    out
}

/// Assigns dense ids to class labels in order of first use.
struct Renumber {
    ids: HashMap<usize, usize>,
}

impl Renumber {
    fn new() -> Self {
        Renumber {
            ids: HashMap::new(),
        }
    }

    fn id(&mut self, class: usize) -> usize {
        let next = self.ids.len();
        *self.ids.entry(class).or_insert(next)
    }
}

fn require_rank3(g: &FlagGraph) -> Result<()> {
    if g.rank() != 3 {
        return Err(Error::RankOutOfRange {
            index: 3,
            rank: g.rank(),
        });
    }
    Ok(())
}

fn finish(mut spec: PolyhedronSpec) -> Result<FlagGraph> {
    spec.orient();
    from_spec(&spec)
}

/// Truncation: every p-gon becomes a 2p-gon and every degree-k vertex a
/// new k-gon. New vertices are the (vertex, edge) incidences.
pub fn truncate(g: &FlagGraph) -> Result<FlagGraph> {
    Ok(truncate_spec(g)?.1)
}

fn truncate_spec(g: &FlagGraph) -> Result<(PolyhedronSpec, FlagGraph)> {
    require_rank3(g)?;
    // (vertex, edge) incidences are <exchange[2]>-orbits
    let class = |f: Flag| f.min(g.exchange(2, f));
    let mut ren = Renumber::new();
    let mut faces = Vec::new();
    let old_faces = g.faces(2)?;
    for k in 0..old_faces.count() {
        let start = old_faces.members(k)[0];
        let p = old_faces.sizes[k] / 2;
        let mut cycle = Vec::with_capacity(2 * p);
        let mut f = start;
        for step in 0..2 * p {
            cycle.push(ren.id(class(f)));
            f = g.exchange(step % 2, f);
        }
        faces.push(cycle);
    }
    let verts = g.faces(0)?;
    for k in 0..verts.count() {
        let start = verts.members(k)[0];
        let cycle = walk(g, start, 1, 2, verts.sizes[k] / 2)
            .into_iter()
            .map(|f| ren.id(class(f)))
            .collect();
        faces.push(cycle);
    }
    let spec = PolyhedronSpec::new("truncation", faces).with_expected_flags(3 * g.n_flags());
    let out = finish(spec.clone())?;
    Ok((spec, out))
}

/// Full truncation: vertices become the old edges; faces are the old faces
/// plus one face per old vertex.
pub fn full_truncate(g: &FlagGraph) -> Result<FlagGraph> {
    require_rank3(g)?;
    let edges = g.faces(1)?;
    let mut ren = Renumber::new();
    let mut faces = Vec::new();
    let old_faces = g.faces(2)?;
    for k in 0..old_faces.count() {
        let start = old_faces.members(k)[0];
        let cycle = walk(g, start, 0, 1, old_faces.sizes[k] / 2)
            .into_iter()
            .map(|f| ren.id(edges.orbit_of[f]))
            .collect();
        faces.push(cycle);
    }
    let verts = g.faces(0)?;
    for k in 0..verts.count() {
        let start = verts.members(k)[0];
        let cycle = walk(g, start, 1, 2, verts.sizes[k] / 2)
            .into_iter()
            .map(|f| ren.id(edges.orbit_of[f]))
            .collect();
        faces.push(cycle);
    }
    finish(PolyhedronSpec::new("full truncation", faces).with_expected_flags(2 * g.n_flags()))
}

/// Rhombification, combinatorially two full truncations.
pub fn rhombify(g: &FlagGraph) -> Result<FlagGraph> {
    full_truncate(&full_truncate(g)?)
}

pub fn truncate_full_truncate(g: &FlagGraph) -> Result<FlagGraph> {
    truncate(&full_truncate(g)?)
}

/// Which of the two mirror-image snubs to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Left,
    Right,
}

/// Rhombification of `g` built directly from its flags, with every square
/// that comes from an edge of `g` recorded as `(a, b, c, d)` where `a`–`c`
/// is the diagonal selected by `orientation`.
///
/// The vertices are the corners (vertex, face) of `g`, i.e. the
/// `<exchange[1]>`-orbits. The square of an edge has corners
/// `(v,F), (v,F'), (w,F'), (w,F)`; its two diagonals join the corners of
/// flags of equal orientation parity, and `orientation` picks the parity.
pub fn oriented_rhombification(
    g: &FlagGraph,
    orientation: Orientation,
) -> Result<(PolyhedronSpec, Vec<[usize; 4]>)> {
    require_rank3(g)?;
    let parity = g.orientation().ok_or(Error::NonOrientable)?;
    let want = match orientation {
        Orientation::Left => 0,
        Orientation::Right => 1,
    };
    let corner = |f: Flag| f.min(g.exchange(1, f));
    let mut ren = Renumber::new();
    let mut faces = Vec::new();
    for (rank, (i, j)) in [(2, (0, 1)), (0, (1, 2))] {
        let part = g.faces(rank)?;
        for k in 0..part.count() {
            let start = part.members(k)[0];
            let cycle = walk(g, start, i, j, part.sizes[k] / 2)
                .into_iter()
                .map(|f| ren.id(corner(f)))
                .collect();
            faces.push(cycle);
        }
    }
    let edges = g.faces(1)?;
    let mut squares = Vec::with_capacity(edges.count());
    for k in 0..edges.count() {
        let phi = *edges
            .members(k)
            .iter()
            .find(|&&f| parity[f] == want)
            .expect("every edge carries flags of both parities");
        let a = ren.id(corner(phi));
        let b = ren.id(corner(g.exchange(2, phi)));
        let c = ren.id(corner(g.exchange(2, g.exchange(0, phi))));
        let d = ren.id(corner(g.exchange(0, phi)));
        faces.push(vec![a, b, c, d]);
        squares.push([a, b, c, d]);
    }
    Ok((PolyhedronSpec::new("rhombification", faces), squares))
}

/// Snub: rhombify, then cut each square coming from an edge of `g` into two
/// triangles along the diagonal chosen by `orientation`.
pub fn snub(g: &FlagGraph, orientation: Orientation) -> Result<FlagGraph> {
    let (spec, squares) = oriented_rhombification(g, orientation)?;
    let n_squares = squares.len();
    let mut faces = spec.faces;
    faces.truncate(faces.len() - n_squares);
    for [a, b, c, d] in squares {
        faces.push(vec![a, b, c]);
        faces.push(vec![a, c, d]);
    }
    finish(PolyhedronSpec::new("snub", faces).with_expected_flags(5 * g.n_flags()))
}

/// The map operations that derive the sporadic Archimedean solids from
/// Platonic seeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperationKind {
    Truncate,
    FullTruncate,
    Rhombify,
    TruncateFullTruncate,
    Snub,
}

impl OperationKind {
    pub const ALL: [OperationKind; 5] = [
        OperationKind::Truncate,
        OperationKind::FullTruncate,
        OperationKind::Rhombify,
        OperationKind::TruncateFullTruncate,
        OperationKind::Snub,
    ];

    /// Apply to `g`; snubs are built with [`Orientation::Left`].
    pub fn apply(self, g: &FlagGraph) -> Result<FlagGraph> {
        match self {
            OperationKind::Truncate => truncate(g),
            OperationKind::FullTruncate => full_truncate(g),
            OperationKind::Rhombify => rhombify(g),
            OperationKind::TruncateFullTruncate => truncate_full_truncate(g),
            OperationKind::Snub => snub(g, Orientation::Left),
        }
    }

    /// Flag-count multiplier.
    pub fn flag_factor(self) -> usize {
        match self {
            OperationKind::Truncate => 3,
            OperationKind::FullTruncate => 2,
            OperationKind::Rhombify => 4,
            OperationKind::TruncateFullTruncate => 6,
            OperationKind::Snub => 5,
        }
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperationKind::Truncate => "truncate",
            OperationKind::FullTruncate => "full-truncate",
            OperationKind::Rhombify => "rhombify",
            OperationKind::TruncateFullTruncate => "truncate-full-truncate",
            OperationKind::Snub => "snub",
        })
    }
}

/// Two integer vectors spanning a sublattice of Z².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub v1: [i64; 2],
    pub v2: [i64; 2],
}

impl LatticeBasis {
    pub fn new(v1: [i64; 2], v2: [i64; 2]) -> Self {
        LatticeBasis { v1, v2 }
    }

    pub fn det(&self) -> i64 {
        self.v1[0] * self.v2[1] - self.v1[1] * self.v2[0]
    }

    /// Translation vectors of two words of `[4,4]`, evaluated in the
    /// affine model of the square tiling. Fails unless both words are
    /// pure translations.
    pub fn from_translation_words(w1: &Word, w2: &Word) -> Result<Self> {
        let t1 = Affine::of_word(w1)?.translation()?;
        let t2 = Affine::of_word(w2)?.translation()?;
        Ok(LatticeBasis::new(t1, t2))
    }

    /// Lattice of the toroidal map `[4,4]/N` with
    /// `N = ⟨(ν₁ν₂)³, (ν₁ν₂⁻¹)⁵⟩`, `ν₁ = s₀s₁s₂s₁`, `ν₂ = s₁s₀s₁s₂`.
    pub fn petrie_counterexample() -> Self {
        let nu1 = Word::new(vec![0, 1, 2, 1]);
        let nu2 = Word::new(vec![1, 0, 1, 2]);
        let w1 = nu1.concat(&nu2).pow(3);
        let w2 = nu1.concat(&nu2.reversed()).pow(5);
        LatticeBasis::from_translation_words(&w1, &w2)
            .expect("ν₁ν₂ and ν₁ν₂⁻¹ are translations of the square tiling")
    }

    /// Basis `(a, 0), (b, c)` with `a, c > 0` and `0 ≤ b < a`.
    fn hermite(&self) -> Result<(i64, i64, i64)> {
        if self.det() == 0 {
            return Err(Error::DegenerateBasis);
        }
        let (mut p, mut q) = (self.v1, self.v2);
        while q[1] != 0 {
            let k = p[1].div_euclid(q[1]);
            p = [p[0] - k * q[0], p[1] - k * q[1]];
            std::mem::swap(&mut p, &mut q);
        }
        // now q = (a, 0), p = (b, c)
        let a = q[0].abs();
        let (mut b, mut c) = (p[0], p[1]);
        if c < 0 {
            b = -b;
            c = -c;
        }
        Ok((a, b.rem_euclid(a), c))
    }
}

/// Affine map of the plane, `x ↦ m·x + t`, for the symmetry group `[4,4]`
/// of the unit square tiling with base flag (vertex (0,0), edge to (1,0),
/// face `[0,1]²`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Affine {
    m: [[i64; 2]; 2],
    t: [i64; 2],
}

impl Affine {
    const IDENTITY: Affine = Affine {
        m: [[1, 0], [0, 1]],
        t: [0, 0],
    };

    fn generator(i: usize) -> Result<Affine> {
        Ok(match i {
            // x ↦ 1 - x
            0 => Affine {
                m: [[-1, 0], [0, 1]],
                t: [1, 0],
            },
            // swap x and y
            1 => Affine {
                m: [[0, 1], [1, 0]],
                t: [0, 0],
            },
            // y ↦ -y
            2 => Affine {
                m: [[1, 0], [0, -1]],
                t: [0, 0],
            },
            l => return Err(Error::LetterOutOfRange { letter: l, rank: 3 }),
        })
    }

    fn apply(&self, p: [i64; 2]) -> [i64; 2] {
        [
            self.m[0][0] * p[0] + self.m[0][1] * p[1] + self.t[0],
            self.m[1][0] * p[0] + self.m[1][1] * p[1] + self.t[1],
        ]
    }

    /// `self` first, then `other`.
    fn then(&self, other: &Affine) -> Affine {
        let m = [
            [
                other.m[0][0] * self.m[0][0] + other.m[0][1] * self.m[1][0],
                other.m[0][0] * self.m[0][1] + other.m[0][1] * self.m[1][1],
            ],
            [
                other.m[1][0] * self.m[0][0] + other.m[1][1] * self.m[1][0],
                other.m[1][0] * self.m[0][1] + other.m[1][1] * self.m[1][1],
            ],
        ];
        Affine {
            m,
            t: other.apply(self.t),
        }
    }

    fn of_word(w: &Word) -> Result<Affine> {
        w.letters().iter().try_fold(Affine::IDENTITY, |acc, &l| {
            Ok(acc.then(&Affine::generator(l)?))
        })
    }

    fn translation(&self) -> Result<[i64; 2]> {
        if self.m != Affine::IDENTITY.m {
            return Err(Error::NonPolytopal("word is not a translation".into()));
        }
        Ok(self.t)
    }
}

/// Toroidal map `{4,4}` modulo the translations in `basis`.
pub fn torus_44(basis: LatticeBasis) -> Result<FlagGraph> {
    let (a, b, c) = basis.hermite()?;
    let n = (a * c) as usize;
    // canonical representative (x mod a after removing y multiples)
    let index = |x: i64, y: i64| -> usize {
        let k = y.div_euclid(c);
        let (x, y) = (x - k * b, y - k * c);
        (y * a + x.rem_euclid(a)) as usize
    };
    let mut faces = Vec::with_capacity(n);
    for y in 0..c {
        for x in 0..a {
            faces.push(vec![
                index(x, y),
                index(x + 1, y),
                index(x + 1, y + 1),
                index(x, y + 1),
            ]);
        }
    }
    let det = basis.det().abs();
    let spec =
        PolyhedronSpec::new(format!("torus {{4,4}} / det {det}"), faces).with_expected_flags(8 * n);
    let g = from_spec(&spec).map_err(|e| Error::NonPolytopal(e.to_string()))?;
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::NonPolytopal(report.to_string()));
    }
    Ok(g)
}

/// Elongated square gyrobicupola (`gyro = true`) or orthobicupola
/// (`gyro = false`, the small rhombicuboctahedron): two square cupolas on
/// an octagonal prism, the lower one optionally turned by an eighth.
pub fn elongated_square_bicupola(gyro: bool) -> PolyhedronSpec {
    // top square 0..4, upper octagon 4..12, lower octagon 12..20, bottom 20..24
    let t = |j: usize| j % 4;
    let u = |i: usize| 4 + i % 8;
    let l = |i: usize| 12 + i % 8;
    let bq = |j: usize| 20 + j % 4;
    let shift = usize::from(gyro);
    let mut faces = vec![(0..4).map(t).collect::<Vec<_>>()];
    for j in 0..4 {
        faces.push(vec![t(j), u(2 * j), u(2 * j + 1)]);
        faces.push(vec![t(j), u(2 * j + 1), u(2 * j + 2), t(j + 1)]);
    }
    for i in 0..8 {
        faces.push(vec![u(i), l(i), l(i + 1), u(i + 1)]);
    }
    for j in 0..4 {
        let s = 2 * j + shift;
        faces.push(vec![bq(j), l(s + 1), l(s)]);
        faces.push(vec![bq(j), bq(j + 1), l(s + 2), l(s + 1)]);
    }
    faces.push((0..4).rev().map(bq).collect());
    let name = if gyro {
        "pseudorhombicuboctahedron"
    } else {
        "small rhombicuboctahedron"
    };
    let mut spec = PolyhedronSpec::new(name, faces).with_expected_flags(192);
    spec.orient();
    spec
}

pub fn pseudorhombicuboctahedron() -> Result<FlagGraph> {
    from_spec(&elongated_square_bicupola(true))
}

/// Face-list data for the Platonic seeds and the cross-check fixtures.
pub mod data {
    use super::PolyhedronSpec;

    pub const TETRAHEDRON: &str = include_str!("../fixtures/tetrahedron.poly");
    pub const CUBE: &str = include_str!("../fixtures/cube.poly");
    pub const OCTAHEDRON: &str = include_str!("../fixtures/octahedron.poly");
    pub const DODECAHEDRON: &str = include_str!("../fixtures/dodecahedron.poly");
    pub const ICOSAHEDRON: &str = include_str!("../fixtures/icosahedron.poly");
    pub const SNUB_CUBE: &str = include_str!("../fixtures/snub_cube.poly");
    pub const SNUB_DODECAHEDRON: &str = include_str!("../fixtures/snub_dodecahedron.poly");
    pub const PSEUDORHOMBICUBOCTAHEDRON: &str =
        include_str!("../fixtures/pseudorhombicuboctahedron.poly");

    pub fn spec(text: &str) -> PolyhedronSpec {
        text.parse().expect("bundled fixture parses")
    }
}

/// A Platonic solid by name.
pub fn platonic(name: &str) -> Option<FlagGraph> {
    let text = match name {
        "tetrahedron" => data::TETRAHEDRON,
        "cube" => data::CUBE,
        "octahedron" => data::OCTAHEDRON,
        "dodecahedron" => data::DODECAHEDRON,
        "icosahedron" => data::ICOSAHEDRON,
        _ => return None,
    };
    Some(from_spec(&data::spec(text)).expect("bundled Platonic solid is valid"))
}

/// Antipodal quotient of a centrally symmetric regular polyhedron: the
/// central element is the Petrie element raised to half its period, which
/// as a central monodromy element is an automorphism.
pub fn hemi(g: &FlagGraph) -> Result<FlagGraph> {
    require_rank3(g)?;
    let petrie = [0usize, 1, 2];
    let mut f = 0;
    let mut period = 0;
    loop {
        f = g.apply_letters(f, &petrie);
        period += 1;
        if f == 0 {
            break;
        }
    }
    if period % 2 != 0 {
        return Err(Error::MalformedGraph(
            "Petrie period is odd; no central inversion".into(),
        ));
    }
    let half: Vec<usize> = petrie
        .iter()
        .copied()
        .cycle()
        .take(3 * period / 2)
        .collect();
    let tau: Vec<Flag> = g.flags().map(|f| g.apply_letters(f, &half)).collect();
    let q = g.quotient_by_involution(&tau)?;
    let report = q.validate();
    if !report.is_valid() {
        return Err(Error::NonPolytopal(report.to_string()));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> FlagGraph {
        platonic("cube").unwrap()
    }

    #[test]
    fn spec_text_round_trips() {
        let spec = data::spec(data::CUBE);
        let again: PolyhedronSpec = spec.to_string().parse().unwrap();
        assert_eq!(spec, again);
        assert_eq!(spec.expected_flags, Some(48));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = "name: x\nfaces:\n0 1 two\n"
            .parse::<PolyhedronSpec>()
            .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!("faces:\n0 1 2\n".parse::<PolyhedronSpec>().is_err());
        assert!("name: x\ncolour: red\n".parse::<PolyhedronSpec>().is_err());
    }

    #[test]
    fn non_manifold_edge_is_named() {
        let spec = PolyhedronSpec::new("bad", vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 2, 4]]);
        assert_eq!(
            from_spec(&spec),
            Err(Error::NonManifoldEdge {
                u: 0,
                w: 1,
                count: 1
            })
        );
    }

    #[test]
    fn degenerate_faces_are_rejected() {
        let spec = PolyhedronSpec::new("bad", vec![vec![0, 1]]);
        assert!(matches!(
            from_spec(&spec),
            Err(Error::DegenerateFace { face: 0, .. })
        ));
        let spec = PolyhedronSpec::new("bad", vec![vec![0, 1, 0, 2]]);
        assert!(matches!(
            from_spec(&spec),
            Err(Error::DegenerateFace { face: 0, .. })
        ));
    }

    #[test]
    fn disconnected_spec_is_rejected() {
        let tet = data::spec(data::TETRAHEDRON);
        let mut faces = tet.faces.clone();
        faces.extend(
            tet.faces
                .iter()
                .map(|f| f.iter().map(|v| v + 4).collect::<Vec<_>>()),
        );
        assert_eq!(
            from_spec(&PolyhedronSpec::new("two", faces)),
            Err(Error::DisconnectedSpec)
        );
    }

    #[test]
    fn expected_flag_count_is_enforced() {
        let spec = data::spec(data::CUBE).with_expected_flags(40);
        assert_eq!(
            from_spec(&spec),
            Err(Error::FlagCountMismatch {
                expected: 40,
                got: 48
            })
        );
    }

    #[test]
    fn orient_fixes_flipped_faces() {
        let mut spec = data::spec(data::CUBE);
        spec.faces[2].reverse();
        spec.faces[4].reverse();
        assert!(spec.orient());
        let fresh = data::spec(data::CUBE);
        let dir = |s: &PolyhedronSpec| {
            s.faces
                .iter()
                .flat_map(|f| (0..f.len()).map(move |k| (f[k], f[(k + 1) % f.len()])))
                .collect::<std::collections::BTreeSet<_>>()
        };
        let d = dir(&spec);
        assert!(d == dir(&fresh) || d.iter().all(|&(u, w)| dir(&fresh).contains(&(w, u))));
    }

    #[test]
    fn hemicube_is_regular_projective() {
        let h = hemi(&cube()).unwrap();
        assert_eq!(h.n_flags(), 24);
        assert_eq!(h.euler_characteristic(), 1);
        assert_eq!(h.flag_orbits().unwrap().count(), 1);
        assert!(h.orientation().is_none());
        assert!(matches!(
            snub(&h, Orientation::Left),
            Err(Error::NonOrientable)
        ));
    }

    #[test]
    fn affine_generators_are_involutions() {
        for i in 0..3 {
            let s = Affine::generator(i).unwrap();
            assert_eq!(s.then(&s), Affine::IDENTITY);
        }
        let s0 = Affine::generator(0).unwrap();
        let s2 = Affine::generator(2).unwrap();
        assert_eq!(s0.then(&s2), s2.then(&s0));
    }

    #[test]
    fn hermite_form_counts_cosets() {
        for (v1, v2) in [
            ([3, 0], [0, 3]),
            ([3, 3], [5, -5]),
            ([2, 1], [-1, 4]),
            ([0, 5], [4, 2]),
        ] {
            let basis = LatticeBasis::new(v1, v2);
            let (a, b, c) = basis.hermite().unwrap();
            assert_eq!(a * c, basis.det().abs());
            assert!(a > 0 && c > 0 && (0..a).contains(&b));
        }
        assert_eq!(
            LatticeBasis::new([1, 2], [2, 4]).hermite(),
            Err(Error::DegenerateBasis)
        );
    }
}
