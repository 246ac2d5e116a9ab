//! Flag graphs: an abstract polytope stored as its set of flags together
//! with the rank-indexed exchange involutions.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

/// Flags are dense indices `0..n_flags`.
pub type Flag = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagGraph {
    rank: usize,
    exchange: Vec<Vec<Flag>>,
}

impl FlagGraph {
    /// Wrap exchange tables. Only shape is checked here; polytopality is the
    /// job of [`FlagGraph::validate`].
    pub fn new(exchange: Vec<Vec<Flag>>) -> Result<Self> {
        let rank = exchange.len();
        if rank == 0 {
            return Err(Error::MalformedGraph("rank 0".into()));
        }
        let n = exchange[0].len();
        if n == 0 {
            return Err(Error::MalformedGraph("no flags".into()));
        }
        for (i, ex) in exchange.iter().enumerate() {
            if ex.len() != n {
                return Err(Error::MalformedGraph(format!(
                    "exchange[{i}] has {} entries, expected {n}",
                    ex.len()
                )));
            }
            if let Some(&bad) = ex.iter().find(|&&f| f >= n) {
                return Err(Error::MalformedGraph(format!(
                    "exchange[{i}] maps to flag {bad} >= {n}"
                )));
            }
        }
        Ok(FlagGraph { rank, exchange })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n_flags(&self) -> usize {
        self.exchange[0].len()
    }

    #[inline]
    pub fn exchange(&self, i: usize, f: Flag) -> Flag {
        self.exchange[i][f]
    }

    pub fn exchange_table(&self, i: usize) -> &[Flag] {
        &self.exchange[i]
    }

    pub fn flags(&self) -> std::ops::Range<Flag> {
        0..self.n_flags()
    }

    fn check_rank(&self, i: usize) -> Result<()> {
        if i >= self.rank {
            return Err(Error::RankOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(())
    }

    fn check_flag(&self, f: Flag) -> Result<()> {
        if f >= self.n_flags() {
            return Err(Error::FlagOutOfRange {
                flag: f,
                n_flags: self.n_flags(),
            });
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&l| l >= self.rank) {
            Some(&l) => Err(Error::LetterOutOfRange {
                letter: l,
                rank: self.rank,
            }),
            None => Ok(()),
        }
    }

    /// Act on `f` by `w`, letters applied left to right: `f^{uv} = (f^u)^v`.
    pub fn apply_word(&self, f: Flag, w: &Word) -> Result<Flag> {
        self.check_flag(f)?;
        self.check_word(w)?;
        Ok(self.apply_letters(f, w.letters()))
    }

    /// Unchecked variant of [`FlagGraph::apply_word`].
    #[inline]
    pub fn apply_letters(&self, f: Flag, letters: &[usize]) -> Flag {
        letters.iter().fold(f, |f, &l| self.exchange[l][f])
    }

    /// Check every polytopality invariant; an empty report means the graph
    /// is a valid flag graph of an abstract polytope.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n_flags();
        let mut violations = Vec::new();
        for i in 0..self.rank {
            let ex = &self.exchange[i];
            if let Some(f) = (0..n).find(|&f| ex[f] == f) {
                violations.push(Violation::FixedPoint { rank: i, flag: f });
            }
            if let Some(f) = (0..n).find(|&f| ex[ex[f]] != f) {
                violations.push(Violation::NotInvolution { rank: i, flag: f });
            }
        }
        for i in 0..self.rank {
            for j in i + 2..self.rank {
                let (a, b) = (&self.exchange[i], &self.exchange[j]);
                if let Some(f) = (0..n).find(|&f| a[b[f]] != b[a[f]]) {
                    violations.push(Violation::StringCondition {
                        ranks: (i, j),
                        flag: f,
                    });
                }
                let orbits = self.orbit_labels(&[i, j]);
                if let Some((f, size)) = first_bad_orbit(&orbits, 4) {
                    violations.push(Violation::Diamond {
                        ranks: (i, j),
                        flag: f,
                        orbit_size: size,
                    });
                }
            }
        }
        let all: Vec<usize> = (0..self.rank).collect();
        let comps = self.orbit_labels(&all);
        if let Some(f) = (0..n).find(|&f| comps.label[f] != 0) {
            violations.push(Violation::Disconnected { flag: f });
        }
        ValidationReport { violations }
    }

    /// Label each flag by its orbit under the exchange maps named in
    /// `ranks`. Orbit labels are assigned in order of smallest member.
    pub(crate) fn orbit_labels(&self, ranks: &[usize]) -> Labels {
        let n = self.n_flags();
        let mut label = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            label[start] = id;
            queue.push_back(start);
            let mut size = 0;
            while let Some(f) = queue.pop_front() {
                size += 1;
                for &r in ranks {
                    let g = self.exchange[r][f];
                    if label[g] == usize::MAX {
                        label[g] = id;
                        queue.push_back(g);
                    }
                }
            }
            sizes.push(size);
        }
        Labels { label, sizes }
    }

    /// Faces of rank `i`: orbits of `⟨exchange[j] : j ≠ i⟩`.
    pub fn faces(&self, i: usize) -> Result<Faces> {
        self.check_rank(i)?;
        let others: Vec<usize> = (0..self.rank).filter(|&j| j != i).collect();
        let labels = self.orbit_labels(&others);
        Ok(Faces {
            rank_index: i,
            orbit_of: labels.label,
            sizes: labels.sizes,
        })
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.rank).collect();
        self.orbit_labels(&all).sizes.len() == 1
    }

    /// Try to extend `0 ↦ image` to a colour-preserving automorphism.
    /// Returns the full flag mapping when consistent.
    pub fn automorphism_from(&self, image: Flag) -> Option<Vec<Flag>> {
        self.isomorphism_to(self, 0, image)
    }

    /// Try to extend `from ↦ to` to an isomorphism `self → other` of
    /// connected flag graphs.
    pub fn isomorphism_to(&self, other: &FlagGraph, from: Flag, to: Flag) -> Option<Vec<Flag>> {
        if self.rank != other.rank || self.n_flags() != other.n_flags() {
            return None;
        }
        let n = self.n_flags();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[from] = to;
        used[to] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(f) = queue.pop_front() {
            for i in 0..self.rank {
                let g = self.exchange[i][f];
                let h = other.exchange[i][map[f]];
                if map[g] == usize::MAX {
                    if used[h] {
                        return None;
                    }
                    map[g] = h;
                    used[h] = true;
                    queue.push_back(g);
                } else if map[g] != h {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        Some(map)
    }

    /// Orbits of flags under the automorphism group.
    ///
    /// Automorphisms of a connected flag graph act freely, so each one is
    /// pinned down by the image of flag 0. Every candidate image is
    /// propagated; the consistent ones form the orbit of flag 0, and the
    /// remaining orbits are found by transporting with the accepted maps.
    pub fn flag_orbits(&self) -> Result<FlagOrbits> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.n_flags();
        let automorphisms: Vec<Vec<Flag>> =
            (0..n).filter_map(|t| self.automorphism_from(t)).collect();
        let mut orbit_of = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        for f in 0..n {
            if orbit_of[f] != usize::MAX {
                continue;
            }
            let id = representatives.len();
            representatives.push(f);
            for a in &automorphisms {
                orbit_of[a[f]] = id;
            }
        }
        Ok(FlagOrbits {
            representatives,
            orbit_of,
            automorphism_count: automorphisms.len(),
        })
    }

    /// Cyclic sequence of face sizes around a vertex.
    pub fn vertex_symbol(&self, v: FaceId) -> Result<VertexSymbol> {
        if self.rank != 3 {
            return Err(Error::RankOutOfRange {
                index: 3,
                rank: self.rank,
            });
        }
        if v.rank_index != 0 {
            return Err(Error::MalformedGraph(format!("{v} is not a vertex")));
        }
        let verts = self.faces(0)?;
        let start = verts
            .orbit_of
            .iter()
            .position(|&o| o == v.orbit_index)
            .ok_or_else(|| Error::MalformedGraph(format!("no vertex {v}")))?;
        let face_sizes = self.faces(2)?;
        let degree = verts.sizes[v.orbit_index] / 2;
        let mut cycle = Vec::with_capacity(degree);
        let mut f = start;
        for _ in 0..degree {
            cycle.push(face_sizes.sizes[face_sizes.orbit_of[f]] / 2);
            f = self.exchange[2][self.exchange[1][f]];
        }
        Ok(VertexSymbol::new(cycle))
    }

    /// Vertex symbols of all vertices, in vertex order.
    pub fn vertex_symbols(&self) -> Result<Vec<VertexSymbol>> {
        let nv = self.faces(0)?.count();
        (0..nv)
            .map(|k| self.vertex_symbol(FaceId::new(0, k)))
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..self.rank)
            .map(|i| {
                let c = self.faces(i).map(|f| f.count()).unwrap_or(0) as i64;
                if i % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    /// Two-colouring of flags by word-length parity; `None` when the flag
    /// graph is not bipartite (non-orientable).
    pub fn orientation(&self) -> Option<Vec<u8>> {
        let n = self.n_flags();
        let mut colour = vec![u8::MAX; n];
        for start in 0..n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                for i in 0..self.rank {
                    let g = self.exchange[i][f];
                    if colour[g] == u8::MAX {
                        colour[g] = 1 - colour[f];
                        queue.push_back(g);
                    } else if colour[g] == colour[f] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// Canonical form of a connected flag graph: the lexicographically
    /// least exchange table over all breadth-first relabellings. Two
    /// connected flag graphs are isomorphic iff their canonical forms agree.
    pub fn canonical_form(&self) -> Vec<usize> {
        let n = self.n_flags();
        let mut best: Option<Vec<usize>> = None;
        let mut order = Vec::with_capacity(n);
        let mut label = vec![usize::MAX; n];
        for start in 0..n {
            order.clear();
            label.iter_mut().for_each(|l| *l = usize::MAX);
            label[start] = 0;
            order.push(start);
            let mut head = 0;
            while head < order.len() {
                let f = order[head];
                head += 1;
                for i in 0..self.rank {
                    let g = self.exchange[i][f];
                    if label[g] == usize::MAX {
                        label[g] = order.len();
                        order.push(g);
                    }
                }
            }
            let table: Vec<usize> = order
                .iter()
                .flat_map(|&f| (0..self.rank).map(move |i| (f, i)))
                .map(|(f, i)| label[self.exchange[i][f]])
                .collect();
            if best.as_ref().is_none_or(|b| table < *b) {
                best = Some(table);
            }
        }
        best.unwrap_or_default()
    }

    pub fn is_isomorphic(&self, other: &FlagGraph) -> bool {
        if self.rank != other.rank || self.n_flags() != other.n_flags() {
            return false;
        }
        (0..other.n_flags()).any(|t| self.isomorphism_to(other, 0, t).is_some())
    }

    /// Quotient by a fixed-point-free automorphism of order two, given as a
    /// flag mapping. Flags are renumbered by the smaller member of each pair.
    pub fn quotient_by_involution(&self, tau: &[Flag]) -> Result<FlagGraph> {
        let n = self.n_flags();
        if tau.len() != n || (0..n).any(|f| tau[f] == f || tau[tau[f]] != f) {
            return Err(Error::MalformedGraph(
                "not a fixed-point-free involution".into(),
            ));
        }
        let mut index = vec![usize::MAX; n];
        let mut count = 0;
        for f in 0..n {
            if index[f] == usize::MAX {
                index[f] = count;
                index[tau[f]] = count;
                count += 1;
            }
        }
        let mut exchange = vec![vec![usize::MAX; count]; self.rank];
        for i in 0..self.rank {
            for f in 0..n {
                let img = index[self.exchange[i][f]];
                let slot = &mut exchange[i][index[f]];
                if *slot != usize::MAX && *slot != img {
                    return Err(Error::MalformedGraph(
                        "involution does not commute with the exchange maps".into(),
                    ));
                }
                *slot = img;
            }
        }
        FlagGraph::new(exchange)
    }
}

fn first_bad_orbit(labels: &Labels, want: usize) -> Option<(Flag, usize)> {
    labels
        .label
        .iter()
        .enumerate()
        .find(|&(_, &l)| labels.sizes[l] != want)
        .map(|(f, &l)| (f, labels.sizes[l]))
}

#[derive(Debug, Clone)]
pub(crate) struct Labels {
    pub label: Vec<usize>,
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    FixedPoint {
        rank: usize,
        flag: Flag,
    },
    NotInvolution {
        rank: usize,
        flag: Flag,
    },
    StringCondition {
        ranks: (usize, usize),
        flag: Flag,
    },
    Diamond {
        ranks: (usize, usize),
        flag: Flag,
        orbit_size: usize,
    },
    Disconnected {
        flag: Flag,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FixedPoint { rank, flag } => {
                write!(f, "fixed-point: exchange[{rank}] fixes flag {flag}")
            }
            Violation::NotInvolution { rank, flag } => {
                write!(f, "not-involution: exchange[{rank}] squared moves flag {flag}")
            }
            Violation::StringCondition { ranks: (i, j), flag } => {
                write!(f, "string-condition: exchange[{i}] and exchange[{j}] do not commute at flag {flag}")
            }
            Violation::Diamond { ranks: (i, j), flag, orbit_size } => write!(
                f,
                "diamond: <exchange[{i}], exchange[{j}]> orbit of flag {flag} has size {orbit_size}, expected 4"
            ),
            Violation::Disconnected { flag } => {
                write!(f, "disconnected: flag {flag} unreachable from flag 0")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A face, named by rank and by its orbit index among the faces of that rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceId {
    pub rank_index: usize,
    pub orbit_index: usize,
}

impl FaceId {
    pub fn new(rank_index: usize, orbit_index: usize) -> Self {
        FaceId {
            rank_index,
            orbit_index,
        }
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-face #{}", self.rank_index, self.orbit_index)
    }
}

/// Partition of the flags into faces of one rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    pub rank_index: usize,
    /// Orbit index of each flag.
    pub orbit_of: Vec<usize>,
    /// Number of flags in each orbit.
    pub sizes: Vec<usize>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn face_of(&self, f: Flag) -> FaceId {
        FaceId::new(self.rank_index, self.orbit_of[f])
    }

    /// Flags of orbit `k`, ascending.
    pub fn members(&self, k: usize) -> Vec<Flag> {
        (0..self.orbit_of.len())
            .filter(|&f| self.orbit_of[f] == k)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagOrbits {
    /// Smallest flag of each orbit, ascending.
    pub representatives: Vec<Flag>,
    pub orbit_of: Vec<usize>,
    /// Order of the automorphism group (size of the orbit of flag 0).
    pub automorphism_count: usize,
}

impl FlagOrbits {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Cyclic sequence of face sizes around a vertex, compared up to rotation
/// and reflection. Stored in its lexicographically least arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSymbol(Vec<usize>);

impl VertexSymbol {
    pub fn new(cycle: Vec<usize>) -> Self {
        let k = cycle.len();
        let mut best = cycle.clone();
        let rev: Vec<usize> = cycle.iter().rev().copied().collect();
        for seq in [&cycle, &rev] {
            for r in 0..k {
                let cand: Vec<usize> = seq[r..].iter().chain(&seq[..r]).copied().collect();
                if cand < best {
                    best = cand;
                }
            }
        }
        VertexSymbol(best)
    }

    pub fn cycle(&self) -> &[usize] {
        &self.0
    }

    /// Vertex degree.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::str::FromStr for VertexSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycle = s
            .split('.')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line: 0,
                msg: format!("vertex symbol {s:?}: {e}"),
            })?;
        if cycle.is_empty() || cycle.iter().any(|&p| p < 3) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("vertex symbol {s:?}"),
            });
        }
        Ok(VertexSymbol::new(cycle))
    }
}

impl fmt::Display for VertexSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}
