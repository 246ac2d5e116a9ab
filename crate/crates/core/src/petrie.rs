//! Petrie maps (Coxeter elements acting on flags), Petrie schemes, and
//! acoptic ranks.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flagcore::{Flag, FlagGraph};
use crate::permgrp::Perm;
use crate::quotient::word_permutation;
use crate::word::Word;

/// A product of all exchange maps, each used once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PetrieMap {
    #[serde(serialize_with = "ser_word")]
    pub word: Word,
    #[serde(skip)]
    pub perm: Perm,
}

fn ser_word<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

impl PetrieMap {
    pub fn new(g: &FlagGraph, word: Word) -> Result<PetrieMap> {
        let mut letters = word.letters().to_vec();
        letters.sort_unstable();
        if letters != (0..g.rank()).collect::<Vec<_>>() {
            return Err(Error::InvalidWord(format!(
                "{word} is not an ordering of the {} exchange maps",
                g.rank()
            )));
        }
        let perm = word_permutation(g, &word)?;
        Ok(PetrieMap { word, perm })
    }

    /// `σ⁻¹`, the reversed word.
    pub fn inverse(&self) -> PetrieMap {
        PetrieMap {
            word: self.word.reversed(),
            perm: self.perm.inverse(),
        }
    }

    pub fn order(&self) -> u64 {
        self.perm
            .order()
            .try_into()
            .expect("permutation order fits in u64")
    }
}

/// Distinct Coxeter elements up to inversion, in lexicographic order of
/// their words.
pub fn coxeter_elements(g: &FlagGraph) -> Result<Vec<PetrieMap>> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut out = Vec::new();
    for order in (0..g.rank()).permutations(g.rank()) {
        let m = PetrieMap::new(g, Word::new(order))?;
        if seen.contains(&m.perm) {
            continue;
        }
        seen.insert(m.perm.inverse());
        seen.insert(m.perm.clone());
        out.push(m);
    }
    Ok(out)
}

/// The `⟨σ⟩`-orbit of a flag in `σ` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PetrieScheme {
    pub flags: Vec<Flag>,
}

impl PetrieScheme {
    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Whether no rank-`i` face occurs twice along the cycle.
    pub fn is_acoptic_at(&self, g: &FlagGraph, i: usize) -> Result<bool> {
        let faces = g.faces(i)?;
        let mut seen = HashSet::new();
        Ok(self.flags.iter().all(|&f| seen.insert(faces.orbit_of[f])))
    }
}

pub fn scheme(g: &FlagGraph, f: Flag, m: &PetrieMap) -> Result<PetrieScheme> {
    if f >= g.n_flags() {
        return Err(Error::FlagOutOfRange {
            flag: f,
            n_flags: g.n_flags(),
        });
    }
    let mut flags = vec![f];
    let mut x = m.perm.image(f);
    while x != f {
        flags.push(x);
        x = m.perm.image(x);
    }
    Ok(PetrieScheme { flags })
}

/// Ranks `i` at which every Petrie scheme is acoptic, using one
/// representative per automorphism class of flags.
pub fn acoptic_ranks(g: &FlagGraph) -> Result<Vec<usize>> {
    let reps = g.flag_orbits()?.representatives;
    acoptic_ranks_with(g, &reps)
}

/// As [`acoptic_ranks`], with explicit representatives (one per class).
pub fn acoptic_ranks_with(g: &FlagGraph, reps: &[Flag]) -> Result<Vec<usize>> {
    let maps = coxeter_elements(g)?;
    let mut schemes = Vec::new();
    for &r in reps {
        for m in &maps {
            schemes.push(scheme(g, r, m)?);
        }
    }
    let mut ranks = Vec::new();
    for i in 0..g.rank() {
        let faces = g.faces(i)?;
        let ok = schemes.iter().all(|s| {
            let mut seen = HashSet::new();
            s.flags.iter().all(|&f| seen.insert(faces.orbit_of[f]))
        });
        if ok {
            ranks.push(i);
        }
    }
    Ok(ranks)
}

/// Order of `σ` in the monodromy group, i.e. as a flag permutation.
pub fn sigma_order_in_cover(_g: &FlagGraph, m: &PetrieMap) -> u64 {
    m.order()
}

/// Distinct scheme lengths `m_{j,l}` over all flags, for each Coxeter
/// element in order.
pub fn scheme_lengths(g: &FlagGraph) -> Result<Vec<Vec<usize>>> {
    let maps = coxeter_elements(g)?;
    Ok(maps
        .iter()
        .map(|m| {
            let mut lens = m.perm.cycle_lengths();
            lens.sort_unstable();
            lens.dedup();
            lens
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{platonic, truncate};

    #[test]
    fn two_coxeter_classes_in_rank_three() {
        let g = platonic("cube").unwrap();
        let maps = coxeter_elements(&g).unwrap();
        let words: Vec<String> = maps.iter().map(|m| m.word.to_string()).collect();
        assert_eq!(words, ["abc", "acb"]);
    }

    #[test]
    fn petrie_map_needs_every_letter_once() {
        let g = platonic("cube").unwrap();
        assert!(PetrieMap::new(&g, Word::new(vec![0, 1, 1])).is_err());
        assert!(PetrieMap::new(&g, Word::new(vec![0, 1])).is_err());
    }

    #[test]
    fn cube_petrie_polygon() {
        let g = platonic("cube").unwrap();
        let sigma = &coxeter_elements(&g).unwrap()[0];
        let s = scheme(&g, 0, sigma).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(sigma_order_in_cover(&g, sigma), 6);
        assert_eq!(sigma.perm.image(*s.flags.last().unwrap()), s.flags[0]);
        for i in 0..3 {
            assert!(s.is_acoptic_at(&g, i).unwrap());
        }
        let back = scheme(&g, 0, &sigma.inverse()).unwrap();
        let mut a = s.flags.clone();
        let mut b = back.flags.clone();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn truncated_cube_repeats_faces() {
        let g = truncate(&platonic("cube").unwrap()).unwrap();
        assert_eq!(acoptic_ranks(&g).unwrap(), [0, 1]);
    }
}
