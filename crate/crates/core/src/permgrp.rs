//! Permutation groups on flag sets: base and strong generating set by
//! deterministic Schreier–Sims, exact orders, membership, stabilizers.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `0..n`, acting on the right: `x·(p∘q) = (x·p)·q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!(
                    "image {x} repeated or out of range"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm(images.into_iter().map(|x| x as u32).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    #[inline]
    fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Cycle lengths, in order of smallest point.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.cycle_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn largest_moved_point(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .rev()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }
}

/// Unbounded non-negative integer, printable in decimal or factored form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn new(value: BigUint) -> Self {
        BigCount(value)
    }

    pub fn from_factors(factors: &[(u64, u32)]) -> Self {
        BigCount(
            factors
                .iter()
                .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e)),
        )
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Prime factorization by trial division with primes below `2^16`; any
    /// leftover cofactor is reported as a final entry with exponent 1.
    pub fn factorization(&self) -> Vec<(BigUint, u32)> {
        let mut n = self.0.clone();
        let mut out = Vec::new();
        if n.is_zero() {
            return out;
        }
        let mut d: u64 = 2;
        while d < 1 << 16 && !n.is_one() {
            let big = BigUint::from(d);
            if &big * &big > n {
                break;
            }
            let mut e = 0;
            while (&n % &big).is_zero() {
                n /= &big;
                e += 1;
            }
            if e > 0 {
                out.push((big, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if !n.is_one() {
            out.push((n, 1));
        }
        out
    }

    /// e.g. `2^35·3^5·5^2·7·11`; `1` for one.
    pub fn factored(&self) -> String {
        let f = self.factorization();
        if f.is_empty() {
            return self.0.to_string();
        }
        f.iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl std::str::FromStr for BigCount {
    type Err = Error;

    /// Decimal (`2304`) or factored (`2^35·3^5·7·11`, `*` also accepted).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("bad count {s:?}"),
        };
        let s = s.trim();
        if s.chars().all(|c| c.is_ascii_digit()) && !s.is_empty() {
            return s.parse::<BigUint>().map(BigCount).map_err(|_| bad());
        }
        let mut acc = BigUint::one();
        for part in s.split(['·', '*']) {
            let (b, e) = part.split_once('^').unwrap_or((part, "1"));
            let b: BigUint = b.trim().parse().map_err(|_| bad())?;
            let e: u32 = e.trim().parse().map_err(|_| bad())?;
            acc *= b.pow(e);
        }
        Ok(BigCount(acc))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// How new base points are picked when a strong generator fixes the
/// current base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseRule {
    #[default]
    SmallestMoved,
    LargestMoved,
}

impl BaseRule {
    fn pick(self, p: &Perm) -> Option<usize> {
        match self {
            BaseRule::SmallestMoved => p.smallest_moved_point(),
            BaseRule::LargestMoved => p.largest_moved_point(),
        }
    }
}

const NONE: u32 = u32::MAX;

/// One level of the stabilizer chain.
#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    /// Indices into the strong generating set; all fix earlier base points.
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// Position of each point in `orbit`, or `NONE`.
    position: Vec<u32>,
    /// `transversal[k]` maps the base point to `orbit[k]`.
    transversal: Vec<Perm>,
    inverse: Vec<Perm>,
    /// Number of generators already checked for each orbit point.
    checked: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut position = vec![NONE; degree];
        position[base_point] = 0;
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point as u32],
            position,
            transversal: vec![Perm::identity(degree)],
            inverse: vec![Perm::identity(degree)],
            checked: vec![0],
        }
    }

    /// Grow the orbit with the current generators; existing transversal
    /// entries never change.
    fn extend_orbit(&mut self, strong: &[Perm]) {
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head] as usize;
            for &gi in &self.gens {
                let y = strong[gi].image(x);
                if self.position[y] == NONE {
                    let t = self.transversal[head].then(&strong[gi]);
                    self.position[y] = self.orbit.len() as u32;
                    self.orbit.push(y as u32);
                    self.inverse.push(t.inverse());
                    self.transversal.push(t);
                    self.checked.push(0);
                }
            }
            head += 1;
        }
    }
}

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
    rule: BaseRule,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        PermGroup::with_base(degree, generators, &[], BaseRule::default())
    }

    /// Build with `prefix` as the first base points, then extend with
    /// `rule`.
    pub fn with_base(
        degree: usize,
        generators: Vec<Perm>,
        prefix: &[usize],
        rule: BaseRule,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        if let Some(&x) = prefix.iter().find(|&&x| x >= degree) {
            return Err(Error::PointOutOfRange { point: x, degree });
        }
        let mut group = PermGroup {
            degree,
            generators: generators.clone(),
            strong: Vec::new(),
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
            rule,
        };
        for g in generators {
            group.add_generator(g);
        }
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigCount {
        BigCount(
            self.levels
                .iter()
                .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len())),
        )
    }

    /// Add `g` to the group and restore the BSGS.
    pub fn add_generator(&mut self, g: Perm) {
        if g.is_identity() {
            return;
        }
        let (h, depth) = self.strip(&g, 0);
        if depth == self.levels.len() && h.is_identity() {
            return;
        }
        if !self.generators.contains(&g) {
            self.generators.push(g.clone());
        }
        // g fixes base[..first] where `first` is the first level it moves
        let first = self
            .levels
            .iter()
            .position(|l| g.image(l.base_point) != l.base_point)
            .unwrap_or(self.levels.len());
        self.insert_strong(g, 0, first);
        self.complete(first);
    }

    /// Register a strong generator at levels `from..=to`, appending a new
    /// base point when `to` is past the end of the chain.
    fn insert_strong(&mut self, h: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let point = self.rule.pick(&h).expect("non-identity strong generator");
            self.levels.push(Level::new(point, self.degree));
        }
        let idx = self.strong.len();
        self.strong.push(h);
        for l in from..=to {
            self.levels[l].gens.push(idx);
            self.levels[l].extend_orbit(&self.strong);
        }
    }

    /// Schreier–Sims from level `start` downward to level 0. Each
    /// (orbit point, generator) pair is sifted once; the chain only grows,
    /// so a pair that sifted to the identity stays verified.
    fn complete(&mut self, start: usize) {
        let mut i = start.min(self.levels.len().saturating_sub(1)) as isize;
        'outer: while i >= 0 {
            let lv = i as usize;
            let mut k = 0;
            while k < self.levels[lv].orbit.len() {
                while self.levels[lv].checked[k] < self.levels[lv].gens.len() {
                    let level = &self.levels[lv];
                    let gi = level.gens[level.checked[k]];
                    let s = &self.strong[gi];
                    let beta = level.orbit[k] as usize;
                    let target = level.position[s.image(beta)] as usize;
                    let prod = level.transversal[k].then(s);
                    if prod == level.transversal[target] {
                        self.levels[lv].checked[k] += 1;
                        continue;
                    }
                    let schreier = prod.then(&level.inverse[target]);
                    let (h, depth) = self.strip(&schreier, lv + 1);
                    if depth == self.levels.len() && h.is_identity() {
                        self.levels[lv].checked[k] += 1;
                        continue;
                    }
                    self.insert_strong(h, lv + 1, depth);
                    i = depth as isize;
                    continue 'outer;
                }
                k += 1;
            }
            i -= 1;
        }
    }

    /// Sift `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.image(level.base_point);
            let pos = level.position[beta];
            if pos == NONE {
                return (h, l);
            }
            h = h.then(&level.inverse[pos as usize]);
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let (h, depth) = self.strip(p, 0);
        Ok(depth == self.levels.len() && h.is_identity())
    }

    /// Subgroup fixing `x`, read off a stabilizer chain whose first base
    /// point is `x`.
    pub fn point_stabilizer(&self, x: usize) -> Result<PermGroup> {
        if x >= self.degree {
            return Err(Error::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        let chain = if self.levels.first().map(|l| l.base_point) == Some(x) {
            self.clone()
        } else {
            PermGroup::with_base(self.degree, self.strong.clone(), &[x], self.rule)?
        };
        // strong generators at level 1 fix x and, with the lower levels,
        // form a BSGS of the stabilizer
        if chain.levels.len() < 2 {
            return Ok(PermGroup {
                degree: self.degree,
                generators: Vec::new(),
                strong: Vec::new(),
                levels: Vec::new(),
                rule: self.rule,
            });
        };
        // deeper levels may hold generators that level 1 does not list
        let mut keep: Vec<usize> = chain.levels[1..]
            .iter()
            .flat_map(|l| l.gens.iter().copied())
            .collect();
        keep.sort_unstable();
        keep.dedup();
        let remap: std::collections::HashMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let strong: Vec<Perm> = keep.iter().map(|&g| chain.strong[g].clone()).collect();
        let levels = chain.levels[1..]
            .iter()
            .map(|l| {
                let mut l = l.clone();
                l.gens = l.gens.iter().map(|g| remap[g]).collect();
                l
            })
            .collect();
        Ok(PermGroup {
            degree: self.degree,
            generators: strong.clone(),
            strong,
            levels,
            rule: self.rule,
        })
    }

    /// Orbit of `x` under the generators, with a word (generator indices)
    /// carrying `x` to each orbit point.
    pub fn orbit(&self, x: usize) -> Result<Orbit> {
        orbit_of(self.degree, &self.generators, x)
    }
}

/// Orbit with transversal words, for any list of generators.
pub fn orbit_of(degree: usize, generators: &[Perm], x: usize) -> Result<Orbit> {
    if x >= degree {
        return Err(Error::PointOutOfRange { point: x, degree });
    }
    let mut words: Vec<Option<Vec<usize>>> = vec![None; degree];
    words[x] = Some(Vec::new());
    let mut points = vec![x];
    let mut queue = VecDeque::from([x]);
    while let Some(p) = queue.pop_front() {
        for (gi, g) in generators.iter().enumerate() {
            let q = g.image(p);
            if words[q].is_none() {
                let mut w = words[p].clone().unwrap();
                w.push(gi);
                words[q] = Some(w);
                points.push(q);
                queue.push_back(q);
            }
        }
    }
    let words = points.iter().map(|&p| words[p].clone().unwrap()).collect();
    Ok(Orbit { points, words })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Breadth-first order, starting with the seed point.
    pub points: Vec<usize>,
    /// `words[k]` carries the seed to `points[k]`.
    pub words: Vec<Vec<usize>>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Perm {
        Perm::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        let p = perm(&[1, 2, 0]);
        let q = perm(&[0, 2, 1]);
        // 0 -p-> 1 -q-> 2
        assert_eq!(p.compose(&q).unwrap().image(0), 2);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.compose(&perm(&[0, 1])).is_err());
    }

    #[test]
    fn symmetric_groups_have_factorial_order() {
        for n in 2..9usize {
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            let g = PermGroup::new(n, vec![perm(&cycle), perm(&swap)]).unwrap();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(g.order(), BigCount::from(fact));
        }
    }

    #[test]
    fn alternating_group_excludes_transpositions() {
        let a5 = PermGroup::new(
            5,
            vec![
                perm(&[1, 2, 0, 3, 4]),
                perm(&[0, 1, 3, 4, 2]),
                perm(&[0, 2, 3, 1, 4]),
            ],
        )
        .unwrap();
        assert_eq!(a5.order(), BigCount::from(60));
        assert!(!a5.contains(&perm(&[1, 0, 2, 3, 4])).unwrap());
        assert!(a5.contains(&perm(&[1, 0, 3, 2, 4])).unwrap());
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::new(4, vec![Perm::identity(4)]).unwrap();
        assert_eq!(g.order(), BigCount::from(1));
        assert!(g.contains(&Perm::identity(4)).unwrap());
        assert_eq!(g.point_stabilizer(2).unwrap().order(), BigCount::from(1));
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![0, 2]).is_err());
        assert!(PermGroup::new(3, vec![perm(&[1, 0])]).is_err());
        let g = PermGroup::new(3, vec![perm(&[1, 2, 0])]).unwrap();
        assert!(g.point_stabilizer(3).is_err());
        assert!(g.orbit(5).is_err());
    }

    #[test]
    fn big_count_factors_and_parses() {
        let c: BigCount = "2^35·3^5·5^2·7·11".parse().unwrap();
        assert_eq!(c.to_string(), "16072626615091200");
        assert_eq!(c.factored(), "2^35·3^5·5^2·7·11");
        assert_eq!("2304".parse::<BigCount>().unwrap().factored(), "2^8·3^2");
        assert_eq!(BigCount::from(1).factored(), "1");
        assert_eq!(BigCount::from(1_000_003).factored(), "1000003");
    }

    #[test]
    fn perm_order_is_lcm_of_cycles() {
        let p = perm(&[1, 2, 0, 4, 3, 5]);
        assert_eq!(p.cycle_lengths(), vec![3, 2, 1]);
        assert_eq!(p.order(), BigUint::from(6u32));
    }
}
