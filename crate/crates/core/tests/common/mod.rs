//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use flagquot::{Flag, FlagGraph, Word};
use rand::Rng;

/// Every element of the group generated by `gens`, by breadth-first
/// closure under right multiplication. Only for small groups.
pub fn enumerate_group(gens: &[Vec<usize>], limit: usize) -> HashSet<Vec<usize>> {
    let n = gens.first().map_or(0, |g| g.len());
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Vec<usize> = p.iter().map(|&x| g[x]).collect();
            if seen.insert(q.clone()) {
                assert!(seen.len() <= limit, "group larger than {limit}");
                queue.push_back(q);
            }
        }
    }
    seen
}

pub fn exchange_images(g: &FlagGraph) -> Vec<Vec<usize>> {
    (0..g.rank())
        .map(|i| g.exchange_table(i).to_vec())
        .collect()
}

pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(0..rank)).collect())
}

/// Apply a word one exchange at a time, directly from the tables.
pub fn walk(g: &FlagGraph, f: Flag, w: &Word) -> Flag {
    w.letters().iter().fold(f, |x, &i| g.exchange_table(i)[x])
}

/// Connected components of the graph on flags with edges from the given
/// exchange maps, found by depth-first search.
pub fn components(g: &FlagGraph, ranks: &[usize]) -> usize {
    let mut seen = vec![false; g.n_flags()];
    let mut count = 0;
    for s in g.flags() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &i in ranks {
                let y = g.exchange_table(i)[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}
