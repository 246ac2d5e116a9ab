//! Quotient presentations `P(W)/N`: monodromy groups, Schläfli types of
//! the minimal regular cover, base-flag stabilizer words, and the
//! substitution maps ψ attached to the map operations.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::builders::OperationKind;
use crate::error::{Error, Result};
use crate::flagcore::{FaceId, Flag, FlagGraph, VertexSymbol};
use crate::permgrp::{BigCount, Perm, PermGroup};
use crate::petrie;
use crate::word::Word;

/// Permutation of the flags induced by a word.
pub fn word_permutation(g: &FlagGraph, w: &Word) -> Result<Perm> {
    g.check_word(w)?;
    Perm::from_images(g.flags().map(|f| g.apply_letters(f, w.letters())).collect())
}

/// The exchange maps as permutations and the group they generate, which
/// is `W/Core(W,N)` for any string C-group `W` acting on the flags.
#[derive(Debug, Clone)]
pub struct MonodromyRep {
    pub source: FlagGraph,
    pub gens: Vec<Perm>,
    pub group: PermGroup,
}

pub fn monodromy(g: &FlagGraph) -> Result<MonodromyRep> {
    let gens: Vec<Perm> = (0..g.rank())
        .map(|i| Perm::from_images(g.exchange_table(i).to_vec()))
        .collect::<Result<_>>()?;
    let group = PermGroup::new(g.n_flags(), gens.clone())?;
    Ok(MonodromyRep {
        source: g.clone(),
        gens,
        group,
    })
}

impl MonodromyRep {
    pub fn order(&self) -> BigCount {
        self.group.order()
    }

    /// Order of the stabilizer of `base`, i.e. `|N / Core(W,N)|`.
    pub fn stabilizer_order(&self, base: Flag) -> Result<BigCount> {
        Ok(self.group.point_stabilizer(base)?.order())
    }
}

/// Type `{p, q}` of the minimal regular cover of a polyhedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SchlafliType {
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for SchlafliType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

/// `p` = lcm of face sizes, `q` = lcm of vertex degrees.
pub fn schlafli_type(g: &FlagGraph) -> Result<SchlafliType> {
    if g.rank() != 3 {
        return Err(Error::RankOutOfRange {
            index: 3,
            rank: g.rank(),
        });
    }
    let lcm_half = |sizes: &[usize]| sizes.iter().fold(1usize, |acc, s| acc.lcm(&(s / 2)));
    Ok(SchlafliType {
        p: lcm_half(&g.faces(2)?.sizes),
        q: lcm_half(&g.faces(0)?.sizes),
    })
}

/// Shortest flag path from `base` to each flag, as words; `None` where
/// unreachable.
fn flag_paths(g: &FlagGraph, base: Flag) -> Vec<Option<Word>> {
    let mut paths: Vec<Option<Word>> = vec![None; g.n_flags()];
    paths[base] = Some(Word::empty());
    let mut queue = std::collections::VecDeque::from([base]);
    while let Some(f) = queue.pop_front() {
        for i in 0..g.rank() {
            let h = g.exchange(i, f);
            if paths[h].is_none() {
                let mut w = paths[f].clone().unwrap();
                w.push(i);
                paths[h] = Some(w);
                queue.push_back(h);
            }
        }
    }
    paths
}

/// Walk from `base` to the nearest flag of `target` (a 2-face), run once
/// round it with `(ab)^p`, and walk back: `(path)·(ab)^p·(path)⁻¹`.
pub fn face_circuit_word(g: &FlagGraph, base: Flag, target: FaceId) -> Result<Word> {
    if target.rank_index != 2 || g.rank() != 3 {
        return Err(Error::RankOutOfRange {
            index: target.rank_index,
            rank: g.rank(),
        });
    }
    if base >= g.n_flags() {
        return Err(Error::FlagOutOfRange {
            flag: base,
            n_flags: g.n_flags(),
        });
    }
    let faces = g.faces(2)?;
    if target.orbit_index >= faces.count() {
        return Err(Error::MalformedGraph(format!("no face {target}")));
    }
    circuit_word(
        g,
        &flag_paths(g, base),
        &faces.orbit_of,
        target.orbit_index,
        faces.sizes[target.orbit_index] / 2,
    )
}

fn circuit_word(
    g: &FlagGraph,
    paths: &[Option<Word>],
    face_of: &[usize],
    face: usize,
    sides: usize,
) -> Result<Word> {
    // flags in breadth-first order from the base: first hit is nearest
    let mut best: Option<&Word> = None;
    for f in g.flags() {
        if face_of[f] == face {
            if let Some(p) = paths[f].as_ref() {
                if best.is_none_or(|b| p.len() < b.len()) {
                    best = Some(p);
                }
            }
        }
    }
    let path = best.ok_or(Error::Disconnected)?;
    let circuit = Word::new(vec![0, 1]).pow(sides);
    Ok(circuit.conjugate_by(&path.reversed()))
}

/// Words fixing a base flag: one face circuit per 2-face, topped up with
/// Schreier generators when the circuits alone do not generate the full
/// stabilizer.
#[derive(Debug, Clone)]
pub struct StabilizerWords {
    pub base: Flag,
    pub words: Vec<Word>,
    /// Number of leading entries of `words` that are face circuits.
    pub face_words: usize,
    /// Whether the face circuits alone generate the stabilizer.
    pub complete_from_faces: bool,
    pub stabilizer_order: BigCount,
}

pub fn stabilizer_words(g: &FlagGraph, base: Flag) -> Result<StabilizerWords> {
    if base >= g.n_flags() {
        return Err(Error::FlagOutOfRange {
            flag: base,
            n_flags: g.n_flags(),
        });
    }
    let mono = monodromy(g)?;
    let target = mono.stabilizer_order(base)?;
    let faces = g.faces(2)?;
    let paths = flag_paths(g, base);
    let mut words = Vec::with_capacity(faces.count());
    for k in 0..faces.count() {
        words.push(circuit_word(
            g,
            &paths,
            &faces.orbit_of,
            k,
            faces.sizes[k] / 2,
        )?);
    }
    let face_words = words.len();
    let mut sub = PermGroup::new(g.n_flags(), Vec::new())?;
    for w in &words {
        sub.add_generator(word_permutation(g, w)?);
    }
    let complete_from_faces = sub.order() == target;
    if !complete_from_faces {
        // Schreier generators t_f · s_i · t_{f s_i}⁻¹ of the base stabilizer
        'fill: for f in g.flags() {
            for i in 0..g.rank() {
                let h = g.exchange(i, f);
                let (Some(tf), Some(th)) = (&paths[f], &paths[h]) else {
                    continue;
                };
                let mut w = tf.clone();
                w.push(i);
                let w = w.concat(&th.reversed());
                let p = word_permutation(g, &w)?;
                if !sub.contains(&p)? {
                    sub.add_generator(p);
                    words.push(w);
                    if sub.order() == target {
                        break 'fill;
                    }
                }
            }
        }
    }
    Ok(StabilizerWords {
        base,
        words,
        face_words,
        complete_from_faces,
        stabilizer_order: sub.order(),
    })
}

/// Generators of the base-flag stabilizer of the cuboctahedron, one per
/// face, as face circuits in `a, b, c`.
pub const CUBOCTAHEDRON_FACE_WORDS: [&str; 14] = [
    "(ab)^4",
    "((ab)^3)^{c}",
    "((ab)^4)^{cbabc}",
    "((ab)^3)^{cba}",
    "((ab)^4)^{cbcabab}",
    "((ab)^3)^{cbab}",
    "((ab)^4)^{cbacb}",
    "((ab)^3)^{cb}",
    "((ab)^4)^{cbc}",
    "((ab)^3)^{cbcabc}",
    "((ab)^3)^{cbcabcba}",
    "((ab)^3)^{cbcabcabab}",
    "((ab)^3)^{cbabacbc}",
    "((ab)^4)^{cbacbacbc}",
];

/// Identity words of the cube's group `⟨s,t,u⟩` (face circuits and vertex
/// stars), listed so that their ψ-images under full truncation match
/// [`CUBOCTAHEDRON_FACE_WORDS`] entry by entry.
pub const CUBE_IDENTITY_WORDS: [&str; 14] = [
    "(st)^4",
    "(ut)^3",
    "((st)^4)^{utu}",
    "((ut)^3)^{st}",
    "((st)^4)^{utsts}",
    "((ut)^3)^{sts}",
    "((st)^4)^{uts}",
    "((ut)^3)^{s}",
    "((st)^4)^{u}",
    "((ut)^3)^{stu}",
    "((ut)^3)^{stus}",
    "((ut)^3)^{stutsts}",
    "((ut)^3)^{ststu}",
    "((st)^4)^{utstu}",
];

/// Substitution map ψ for an operation: the image `ν_i` of each generator
/// of the seed's group as a word in `a, b, c`.
///
/// For reflective kinds the letters are `ρ₀, ρ₁, ρ₂`. For [`OperationKind::Snub`]
/// the letters are the rotations `ρ₁ρ₀` (letter 0) and `ρ₂ρ₁` (letter 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiMap {
    pub kind: OperationKind,
    pub images: Vec<Word>,
}

impl PsiMap {
    pub fn for_kind(kind: OperationKind) -> PsiMap {
        let images: &[&str] = match kind {
            OperationKind::Truncate => &["a", "bab", "c"],
            OperationKind::FullTruncate => &["b", "a", "cbc"],
            OperationKind::Rhombify => &["a", "b", "cbabc"],
            OperationKind::TruncateFullTruncate => &["a", "bab", "cbabc"],
            OperationKind::Snub => &["ab", "bcbabcbc"],
        };
        PsiMap {
            kind,
            images: images
                .iter()
                .map(|s| Word::parse_abc(s).expect("static word"))
                .collect(),
        }
    }

    /// `(ρ_{i₁}…ρ_{i_k})ψ = ν_{i_k}…ν_{i₁}`: images concatenated in reverse
    /// letter order.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Word::empty();
        for &l in w.letters().iter().rev() {
            let img = self.images.get(l).ok_or_else(|| {
                Error::InvalidWord(format!(
                    "letter {l} not in the domain of ψ for {}",
                    self.kind
                ))
            })?;
            out = out.concat(img);
        }
        Ok(out)
    }

    /// A domain word spelled in the reflections `ρ_i` of the seed.
    pub fn expand(&self, w: &Word) -> Result<Word> {
        let mut out = Word::empty();
        for &l in w.letters() {
            match (self.kind, l) {
                (OperationKind::Snub, 0) => out = out.concat(&Word::new(vec![1, 0])),
                (OperationKind::Snub, 1) => out = out.concat(&Word::new(vec![2, 1])),
                (OperationKind::Snub, _) => {
                    return Err(Error::InvalidWord(format!("rotation letter {l}")))
                }
                (_, l) if l < 3 => out.push(l),
                _ => return Err(Error::InvalidWord(format!("letter {l}"))),
            }
        }
        Ok(out)
    }

    pub fn n_letters(&self) -> usize {
        self.images.len()
    }
}

pub fn psi_apply(m: &PsiMap, w: &Word) -> Result<Word> {
    m.apply(w)
}

/// Outcome of checking a ψ map against a seed and its derived solid.
#[derive(Debug, Clone, Serialize)]
pub struct PsiReport {
    pub kind: OperationKind,
    pub base: Flag,
    pub relators_checked: usize,
    /// Relators of the seed whose ψ-image moves the base flag.
    #[serde(serialize_with = "ser_words")]
    pub failures: Vec<Word>,
    /// Words checked that turned out not to be relators of the seed.
    #[serde(serialize_with = "ser_words")]
    pub not_relators: Vec<Word>,
    /// Distinct seed elements send the base flag to distinct flags: the
    /// converse direction (a ψ-image fixing the base comes from the identity).
    pub orbit_injective: bool,
    /// The images of the base flag form its automorphism orbit.
    pub orbit_is_automorphism_orbit: bool,
}

fn ser_words<S: serde::Serializer>(w: &[Word], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(w.iter().map(|w| w.to_string()))
}

impl PsiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.not_relators.is_empty()
            && self.orbit_injective
            && self.orbit_is_automorphism_orbit
    }
}

/// Group elements of a regular seed, one word per flag reached from flag 0
/// by the domain letters of `m`, plus the inverse of each letter.
struct SeedElements {
    words: Vec<Option<Word>>,
    letter_inverse: Vec<Word>,
}

fn seed_elements(m: &PsiMap, seed: &FlagGraph) -> Result<SeedElements> {
    let letters: Vec<Word> = (0..m.n_letters())
        .map(|l| m.expand(&Word::new(vec![l])))
        .collect::<Result<_>>()?;
    let mut words: Vec<Option<Word>> = vec![None; seed.n_flags()];
    words[0] = Some(Word::empty());
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for (l, lw) in letters.iter().enumerate() {
            let h = seed.apply_letters(f, lw.letters());
            if words[h].is_none() {
                let mut w = words[f].clone().unwrap();
                w.push(l);
                words[h] = Some(w);
                queue.push_back(h);
            }
        }
    }
    let letter_inverse = letters
        .iter()
        .enumerate()
        .map(|(l, lw)| {
            let order = word_permutation(seed, lw)?.order();
            let order: usize = order.try_into().unwrap_or(1);
            Ok(Word::new(vec![l]).pow(order - 1))
        })
        .collect::<Result<_>>()?;
    Ok(SeedElements {
        words,
        letter_inverse,
    })
}

impl SeedElements {
    fn inverse(&self, w: &Word) -> Word {
        w.letters()
            .iter()
            .rev()
            .fold(Word::empty(), |acc, &l| acc.concat(&self.letter_inverse[l]))
    }
}

/// Relators of the seed group in the domain letters of `m`: powers of the
/// letters and of products of letter pairs, every Schreier relator
/// `t_f · l · t_{f·l}⁻¹`, and conjugates of the short relators by all words
/// of length up to three.
pub fn seed_relators(m: &PsiMap, seed: &FlagGraph) -> Result<Vec<Word>> {
    let el = seed_elements(m, seed)?;
    let k = m.n_letters();
    let mut short = Vec::new();
    for l in 0..k {
        let order: usize = word_permutation(seed, &m.expand(&Word::new(vec![l]))?)?
            .order()
            .try_into()
            .unwrap_or(1);
        short.push(Word::new(vec![l]).pow(order));
        for l2 in l + 1..k {
            let pair = Word::new(vec![l, l2]);
            let order: usize = word_permutation(seed, &m.expand(&pair)?)?
                .order()
                .try_into()
                .unwrap_or(1);
            short.push(pair.pow(order));
        }
    }
    let mut out: Vec<Word> = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |w: Word, out: &mut Vec<Word>| {
        if seen.insert(w.clone()) {
            out.push(w);
        }
    };
    for r in &short {
        push(r.clone(), &mut out);
    }
    let mut conjugators = vec![Word::empty()];
    for len in 1..=3 {
        let mut layer = Vec::new();
        for c in conjugators.iter().filter(|c| c.len() == len - 1) {
            for l in 0..k {
                let mut w = c.clone();
                w.push(l);
                layer.push(w);
            }
        }
        conjugators.extend(layer);
    }
    for c in conjugators.iter().skip(1) {
        for r in &short {
            push(el.inverse(c).concat(r).concat(c), &mut out);
        }
    }
    let letters: Vec<Word> = (0..k)
        .map(|l| m.expand(&Word::new(vec![l])))
        .collect::<Result<_>>()?;
    for f in seed.flags() {
        let Some(tf) = &el.words[f] else { continue };
        for (l, lw) in letters.iter().enumerate() {
            let h = seed.apply_letters(f, lw.letters());
            let Some(th) = &el.words[h] else { continue };
            let mut w = tf.clone();
            w.push(l);
            push(w.concat(&el.inverse(th)), &mut out);
        }
    }
    Ok(out)
}

/// Check ψ for `kind` with `seed` (a regular polyhedron whose group is the
/// automorphism group of `derived`) at base flag `base` of `derived`.
pub fn verify_psi(
    kind: OperationKind,
    seed: &FlagGraph,
    derived: &FlagGraph,
    base: Flag,
) -> Result<PsiReport> {
    if base >= derived.n_flags() {
        return Err(Error::FlagOutOfRange {
            flag: base,
            n_flags: derived.n_flags(),
        });
    }
    let m = PsiMap::for_kind(kind);
    let relators = seed_relators(&m, seed)?;
    let mut failures = Vec::new();
    let mut not_relators = Vec::new();
    for r in &relators {
        let expanded = m.expand(r)?;
        if seed
            .flags()
            .any(|f| seed.apply_letters(f, expanded.letters()) != f)
        {
            not_relators.push(r.clone());
            continue;
        }
        let image = m.apply(r)?;
        if derived.apply_word(base, &image)? != base {
            failures.push(r.clone());
        }
    }
    let el = seed_elements(&m, seed)?;
    let mut images = Vec::new();
    for w in el.words.iter().flatten() {
        images.push(derived.apply_word(base, &m.apply(w)?)?);
    }
    let distinct: HashSet<Flag> = images.iter().copied().collect();
    let orbit_injective = distinct.len() == images.len();
    let orbits = derived.flag_orbits()?;
    let aut_orbit: HashSet<Flag> = derived
        .flags()
        .filter(|&f| orbits.orbit_of[f] == orbits.orbit_of[base])
        .collect();
    Ok(PsiReport {
        kind,
        base,
        relators_checked: relators.len(),
        failures,
        not_relators,
        orbit_injective,
        orbit_is_automorphism_orbit: distinct == aut_orbit,
    })
}

/// Candidate base flags for `kind`, following the usual conventions: on a
/// large face sharing its edge with another large face (truncation), on a
/// face of the seed's type (full truncation, snub), on a seed-type face
/// whose edge meets a new square (rhombification), or on the doubled face
/// with an edge on a square (truncation of full truncation).
pub fn base_flag_candidates(
    kind: OperationKind,
    seed: &FlagGraph,
    derived: &FlagGraph,
) -> Result<Vec<Flag>> {
    let faces = derived.faces(2)?;
    let size = |f: Flag| faces.sizes[faces.orbit_of[f]] / 2;
    let seed_faces = seed.faces(2)?;
    let p = seed_faces.sizes[0] / 2;
    let largest = faces.sizes.iter().max().copied().unwrap_or(0) / 2;
    let across = |f: Flag| size(derived.exchange(2, f));
    let keep = |f: Flag| match kind {
        OperationKind::Truncate => size(f) == largest && across(f) == largest,
        OperationKind::FullTruncate | OperationKind::Snub => size(f) == p,
        OperationKind::Rhombify => size(f) == p && across(f) == 4,
        OperationKind::TruncateFullTruncate => size(f) == 2 * p && across(f) == 4,
    };
    Ok(derived.flags().filter(|&f| keep(f)).collect())
}

/// Try one rule-selected candidate per automorphism class (results are
/// constant on classes) and return the first passing report, or the
/// report for the first candidate if none pass.
pub fn verify_psi_auto(
    kind: OperationKind,
    seed: &FlagGraph,
    derived: &FlagGraph,
) -> Result<PsiReport> {
    let candidates = base_flag_candidates(kind, seed, derived)?;
    let orbits = derived.flag_orbits()?;
    let mut tried = HashSet::new();
    let mut first = None;
    for f in candidates {
        if !tried.insert(orbits.orbit_of[f]) {
            continue;
        }
        let report = verify_psi(kind, seed, derived, f)?;
        if report.passed() {
            return Ok(report);
        }
        first.get_or_insert(report);
    }
    first.ok_or_else(|| Error::MalformedGraph(format!("no base flag candidates for {kind}")))
}

/// Per-solid summary of the quotient presentation.
#[derive(Debug, Clone, Serialize)]
pub struct CoverReport {
    pub name: String,
    /// Common vertex symbol; `None` when vertices differ.
    pub vertex_symbol: Option<VertexSymbol>,
    pub schlafli: SchlafliType,
    /// `|W/Core(W,N)|`, the order of the monodromy group.
    pub cover_order: BigCount,
    /// `|N/Core(W,N)|`, the order of the base-flag stabilizer.
    pub stabilizer_order: BigCount,
    pub n_flags: usize,
    pub orbit_count: usize,
    pub acoptic_ranks: Vec<usize>,
    pub base_flag: Flag,
    pub euler_characteristic: i64,
}

impl CoverReport {
    /// `cover_order = stabilizer_order × n_flags`.
    pub fn is_consistent(&self) -> bool {
        self.cover_order.value() == &(self.stabilizer_order.value() * self.n_flags)
            && self.n_flags.is_multiple_of(self.orbit_count)
    }
}

pub fn cover_report(g: &FlagGraph, name: &str) -> Result<CoverReport> {
    cover_report_at(g, name, 0)
}

pub fn cover_report_at(g: &FlagGraph, name: &str, base: Flag) -> Result<CoverReport> {
    if base >= g.n_flags() {
        return Err(Error::FlagOutOfRange {
            flag: base,
            n_flags: g.n_flags(),
        });
    }
    let mono = monodromy(g)?;
    let symbols = g.vertex_symbols()?;
    let vertex_symbol = symbols
        .first()
        .filter(|s| symbols.iter().all(|t| t == *s))
        .cloned();
    Ok(CoverReport {
        name: name.to_string(),
        vertex_symbol,
        schlafli: schlafli_type(g)?,
        cover_order: mono.order(),
        stabilizer_order: mono.stabilizer_order(base)?,
        n_flags: g.n_flags(),
        orbit_count: g.flag_orbits()?.count(),
        acoptic_ranks: petrie::acoptic_ranks(g)?,
        base_flag: base,
        euler_characteristic: g.euler_characteristic(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{full_truncate, hemi, platonic, snub, truncate, Orientation};

    fn cube() -> FlagGraph {
        platonic("cube").unwrap()
    }

    #[test]
    fn regular_solids_have_trivial_stabilizers() {
        let g = cube();
        let mono = monodromy(&g).unwrap();
        assert_eq!(mono.order(), BigCount::from(48));
        assert_eq!(mono.stabilizer_order(5).unwrap(), BigCount::from(1));
        let sw = stabilizer_words(&g, 0).unwrap();
        assert_eq!(sw.words.len(), 6);
        assert!(sw.complete_from_faces);
        for w in &sw.words {
            assert!(word_permutation(&g, w).unwrap().is_identity());
        }
    }

    #[test]
    fn circuit_of_own_face_is_unconjugated() {
        let g = cube();
        let face = g.faces(2).unwrap().face_of(0);
        let w = face_circuit_word(&g, 0, face).unwrap();
        assert_eq!(w, Word::parse_abc("(ab)^4").unwrap());
        assert!(face_circuit_word(&g, 0, FaceId::new(1, 0)).is_err());
        assert!(face_circuit_word(&g, 99, face).is_err());
    }

    #[test]
    fn schlafli_is_lcm_of_sizes() {
        let co = full_truncate(&cube()).unwrap();
        assert_eq!(schlafli_type(&co).unwrap(), SchlafliType { p: 12, q: 4 });
        assert_eq!(schlafli_type(&co).unwrap().to_string(), "{12,4}");
    }

    #[test]
    fn psi_reverses_letters() {
        let m = PsiMap::for_kind(OperationKind::FullTruncate);
        assert_eq!(m.apply(&Word::empty()).unwrap(), Word::empty());
        let w = Word::parse("((ut)^3)^{sts}", "stu").unwrap();
        assert_eq!(m.apply(&w).unwrap().to_string(), "babacbcacbcacbcbab");
        assert!(m.apply(&Word::new(vec![3])).is_err());
        let s = PsiMap::for_kind(OperationKind::Snub);
        assert!(s.apply(&Word::new(vec![2])).is_err());
        assert_eq!(
            s.expand(&Word::new(vec![0, 1])).unwrap(),
            Word::new(vec![1, 0, 2, 1])
        );
    }

    #[test]
    fn sixth_word_as_desired() {
        let co = full_truncate(&cube()).unwrap();
        let m = PsiMap::for_kind(OperationKind::FullTruncate);
        let img = m
            .apply(&Word::parse("((ut)^3)^{sts}", "stu").unwrap())
            .unwrap();
        let want = Word::parse_abc("((ab)^3)^{cbab}").unwrap();
        assert_eq!(
            word_permutation(&co, &img).unwrap(),
            word_permutation(&co, &want).unwrap()
        );
    }

    #[test]
    fn truncation_psi_holds_on_cube() {
        let g = cube();
        let t = truncate(&g).unwrap();
        let r = verify_psi_auto(OperationKind::Truncate, &g, &t).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.relators_checked > 0);
    }

    #[test]
    fn snub_psi_holds_on_hemicube() {
        let g = cube();
        let s = snub(&g, Orientation::Left).unwrap();
        let r = verify_psi_auto(OperationKind::Snub, &hemi(&g).unwrap(), &s).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn wrong_base_flag_is_caught() {
        // a flag on a triangle of the cuboctahedron is not fixed by the
        // images of the cube's face circuits
        let g = cube();
        let co = full_truncate(&g).unwrap();
        let faces = co.faces(2).unwrap();
        let tri = co
            .flags()
            .find(|&f| faces.sizes[faces.orbit_of[f]] == 6)
            .unwrap();
        let r = verify_psi(OperationKind::FullTruncate, &g, &co, tri).unwrap();
        assert!(!r.failures.is_empty());
    }

    #[test]
    fn cover_report_is_consistent() {
        let co = full_truncate(&cube()).unwrap();
        let r = cover_report(&co, "cuboctahedron").unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.cover_order, BigCount::from(2304));
        assert_eq!(r.stabilizer_order, BigCount::from(24));
        assert_eq!(r.orbit_count, 2);
        assert_eq!(r.vertex_symbol.unwrap().to_string(), "3.4.3.4");
    }
}
