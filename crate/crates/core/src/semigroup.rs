//! Numerical semigroups: membership, gaps, Frobenius number, Apéry sets,
//! pseudo-Frobenius numbers and the lattice of oversemigroups.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A numerical semigroup `H ⊆ ℤ≥0` with finite complement.
///
/// Cheap to clone; the data is shared and immutable. Two values compare equal
/// when they describe the same set, regardless of the generators they were
/// built from.
#[derive(Clone)]
pub struct NumericalSemigroup(Arc<Inner>);

struct Inner {
    raw_generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    /// Membership on `[0, frobenius + 1]`.
    membership: BitSet,
}

/// The numerical invariants reported for every semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicInvariants {
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub cm_type: usize,
    pub frobenius: i64,
    pub genus: usize,
    pub is_symmetric: bool,
    pub has_minimal_multiplicity: bool,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw_generators`.
    ///
    /// Redundant generators are dropped from the minimal generating set but
    /// kept in [`raw_generators`](Self::raw_generators).
    pub fn new(raw_generators: &[i64]) -> Result<Self> {
        if raw_generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = raw_generators.iter().find(|&&a| a <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let g = raw_generators.iter().fold(0, |acc, &a| gcd(acc, a));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let mut distinct = raw_generators.to_vec();
        distinct.sort_unstable();
        distinct.dedup();

        let apery = apery_by_shortest_paths(&distinct);
        let e = distinct[0];
        let frobenius = apery.iter().max().copied().unwrap_or(0) - e;
        let contains = |z: i64| z >= 0 && z >= apery[(z % e) as usize];
        let membership = BitSet::from_fn((frobenius + 2) as usize, |z| contains(z as i64));
        let gaps = (1..=frobenius).filter(|&z| !contains(z)).collect();

        let minimal_generators = distinct
            .iter()
            .copied()
            .filter(|&a| !(1..=a / 2).any(|x| contains(x) && contains(a - x)))
            .collect();

        Ok(NumericalSemigroup(Arc::new(Inner {
            raw_generators: raw_generators.to_vec(),
            minimal_generators,
            frobenius,
            gaps,
            membership,
        })))
    }

    /// The semigroup `ℤ≥0`.
    pub fn naturals() -> Self {
        Self::from_sorted_gaps_unchecked(Vec::new())
    }

    /// Builds a semigroup from its set of gaps, checking that the complement
    /// is closed under addition.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        let mut gaps = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first().is_some_and(|&g| g <= 0) {
            return Err(Error::PreconditionFailed(
                "gaps must be positive integers".into(),
            ));
        }
        let f = gaps.last().copied().unwrap_or(-1);
        let gap_bits = BitSet::from_fn((f + 1).max(0) as usize, |z| gaps.binary_search(&(z as i64)).is_ok());
        let member = |z: i64| z >= 0 && (z > f || !gap_bits.get(z as usize));
        for &g in &gaps {
            if (1..=g / 2).any(|x| member(x) && member(g - x)) {
                return Err(Error::PreconditionFailed(format!(
                    "{g} is listed as a gap but is a sum of two elements"
                )));
            }
        }
        Ok(Self::from_sorted_gaps_unchecked(gaps))
    }

    pub(crate) fn from_sorted_gaps_unchecked(gaps: Vec<i64>) -> Self {
        let frobenius = gaps.last().copied().unwrap_or(-1);
        let mut membership = BitSet::new((frobenius + 2) as usize);
        {
            let mut it = gaps.iter().peekable();
            for z in 0..=frobenius + 1 {
                if it.peek() == Some(&&z) {
                    it.next();
                } else {
                    membership.set(z as usize);
                }
            }
        }
        let contains = |z: i64| z >= 0 && (z > frobenius || membership.get(z as usize));
        let minimal_generators: Vec<i64> = if frobenius < 0 {
            vec![1]
        } else {
            let e = (1..).find(|&z| contains(z)).unwrap();
            (1..=frobenius + e)
                .filter(|&z| contains(z) && !(1..=z / 2).any(|x| contains(x) && contains(z - x)))
                .collect()
        };
        NumericalSemigroup(Arc::new(Inner {
            raw_generators: minimal_generators.clone(),
            minimal_generators,
            frobenius,
            gaps,
            membership,
        }))
    }

    pub fn raw_generators(&self) -> &[i64] {
        &self.0.raw_generators
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.0.minimal_generators
    }

    /// Largest integer outside `H`; `-1` for `ℤ≥0`.
    pub fn frobenius(&self) -> i64 {
        self.0.frobenius
    }

    /// Least `c` with `c + ℤ≥0 ⊆ H`.
    pub fn conductor(&self) -> i64 {
        self.0.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.0.gaps
    }

    pub fn genus(&self) -> usize {
        self.0.gaps.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.0.minimal_generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.0.minimal_generators.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.0.frobenius < 0
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z > self.0.frobenius {
            true
        } else {
            self.0.membership.get(z as usize)
        }
    }

    /// Elements of `H` in `[0, bound]`.
    pub fn elements_up_to(&self, bound: i64) -> Vec<i64> {
        (0..=bound).filter(|&z| self.contains(z)).collect()
    }

    /// `H ⊆ other`.
    pub fn is_subset_of(&self, other: &NumericalSemigroup) -> bool {
        self.minimal_generators().iter().all(|&a| other.contains(a))
    }

    /// The least element of `H` in each residue class modulo `e`, indexed by
    /// residue.
    pub fn apery_set(&self, e: i64) -> Result<Vec<i64>> {
        if e <= 0 || !self.contains(e) {
            return Err(Error::NotAMember(e));
        }
        Ok((0..e)
            .map(|r| {
                let mut z = r;
                while !self.contains(z) {
                    z += e;
                }
                z
            })
            .collect())
    }

    /// Gaps `z` with `z + (H \ {0}) ⊆ H`, ascending. For `ℤ≥0` this is `[-1]`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_naturals() {
            return vec![-1];
        }
        self.gaps()
            .iter()
            .copied()
            .filter(|&z| self.minimal_generators().iter().all(|&a| self.contains(z + a)))
            .collect()
    }

    /// Cohen–Macaulay type of `k[[H]]`, the number of pseudo-Frobenius numbers.
    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.cm_type() == 1
    }

    pub fn has_minimal_multiplicity(&self) -> bool {
        self.embedding_dimension() as i64 == self.multiplicity()
    }

    pub fn basic_invariants(&self) -> BasicInvariants {
        let cm_type = self.cm_type();
        BasicInvariants {
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            cm_type,
            frobenius: self.frobenius(),
            genus: self.genus(),
            is_symmetric: cm_type == 1,
            has_minimal_multiplicity: self.has_minimal_multiplicity(),
        }
    }

    /// Every numerical semigroup `T` with `H ⊆ T ⊆ ℤ≥0`, including `H` and
    /// `ℤ≥0`, ordered by genus descending and then lexicographically by gaps.
    ///
    /// Each proper oversemigroup arises from a smaller one by adjoining a
    /// single gap `x` with `x + T ⊆ T ∪ {x}` (take `x = max(T' \ T)` for the
    /// target `T'`), so a depth-first walk over such adjunctions reaches all
    /// of them.
    pub fn overrings(&self) -> Vec<NumericalSemigroup> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut stack = vec![self.gaps().to_vec()];
        seen.insert(self.gaps().to_vec());
        while let Some(gaps) = stack.pop() {
            let f = gaps.last().copied().unwrap_or(-1);
            let mut is_gap = vec![false; (f + 1).max(0) as usize];
            for &g in &gaps {
                is_gap[g as usize] = true;
            }
            let member = |z: i64| z >= 0 && (z > f || !is_gap[z as usize]);
            for &x in &gaps {
                let special = member(2 * x) && (1..=f - x).all(|t| !member(t) || member(x + t));
                if special {
                    let child: Vec<i64> = gaps.iter().copied().filter(|&g| g != x).collect();
                    if seen.insert(child.clone()) {
                        stack.push(child);
                    }
                }
            }
        }
        let mut all: Vec<Vec<i64>> = seen.into_iter().collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.into_iter()
            .map(NumericalSemigroup::from_sorted_gaps_unchecked)
            .collect()
    }
}

/// Least element in each residue class modulo the smallest generator, by
/// Dijkstra on the residue graph.
fn apery_by_shortest_paths(sorted_generators: &[i64]) -> Vec<i64> {
    let e = sorted_generators[0];
    let mut dist = vec![i64::MAX; e as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &a in &sorted_generators[1..] {
            let nd = d + a;
            let nr = ((r as i64 + a) % e) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minimal_generators == other.0.minimal_generators
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.minimal_generators.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, a) in self.minimal_generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    /// Membership by the coin-problem recursion, independent of the
    /// shortest-path construction.
    fn sieve(gens: &[i64], bound: i64) -> Vec<bool> {
        let mut mem = vec![false; bound as usize + 1];
        mem[0] = true;
        for z in 1..=bound {
            mem[z as usize] = gens.iter().any(|&a| a <= z && mem[(z - a) as usize]);
        }
        mem
    }

    #[test]
    fn five_six_eight() {
        let h = sg(&[5, 6, 8]);
        assert_eq!(h.minimal_generators(), &[5, 6, 8]);
        assert_eq!(h.frobenius(), 9);
        assert_eq!(h.gaps(), &[1, 2, 3, 4, 7, 9]);
        assert_eq!(h.genus(), 6);
        let mem = sieve(&[5, 6, 8], 2 * 8 * 8);
        for z in 0..=128 {
            assert_eq!(h.contains(z), mem[z as usize], "z = {z}");
        }
        assert!(!h.contains(7));
        assert!(h.contains(10));
        assert!(!h.contains(-3));
    }

    #[test]
    fn naturals_conventions() {
        let h = sg(&[1]);
        assert_eq!(h.minimal_generators(), &[1]);
        assert_eq!(h.frobenius(), -1);
        assert!(h.gaps().is_empty());
        assert!(h.contains(0));
        assert_eq!(h.pseudo_frobenius(), vec![-1]);
        assert_eq!(h.cm_type(), 1);
        assert!(h.is_symmetric());
        assert_eq!(h.apery_set(1).unwrap(), vec![0]);
        assert_eq!(h.overrings().len(), 1);
        assert_eq!(NumericalSemigroup::naturals(), h);
        assert_eq!(sg(&[1, 7, 3]).minimal_generators(), &[1]);
    }

    #[test]
    fn redundant_generators_are_dropped_but_kept_raw() {
        let h = sg(&[4, 13, 14, 15, 19]);
        assert_eq!(h.minimal_generators(), &[4, 13, 14, 15]);
        assert_eq!(h.raw_generators(), &[4, 13, 14, 15, 19]);
        assert_eq!(sg(&[6, 5, 5, 8]).minimal_generators(), &[5, 6, 8]);
    }

    #[test]
    fn input_errors() {
        assert_eq!(NumericalSemigroup::new(&[4, 6]).unwrap_err(), Error::GcdNotOne(2));
        assert_eq!(NumericalSemigroup::new(&[]).unwrap_err(), Error::EmptyGenerators);
        assert_eq!(
            NumericalSemigroup::new(&[3, 0, 4]).unwrap_err(),
            Error::NonPositiveGenerator(0)
        );
    }

    #[test]
    fn apery_sets() {
        assert_eq!(sg(&[5, 6, 8]).apery_set(5).unwrap(), vec![0, 6, 12, 8, 14]);
        assert_eq!(sg(&[3, 7, 8]).apery_set(3).unwrap(), vec![0, 7, 8]);
        assert_eq!(sg(&[5, 6, 8]).apery_set(7), Err(Error::NotAMember(7)));
        assert_eq!(sg(&[5, 6, 8]).apery_set(0), Err(Error::NotAMember(0)));
    }

    #[test]
    fn pseudo_frobenius_numbers() {
        assert_eq!(sg(&[5, 6, 8]).pseudo_frobenius(), vec![7, 9]);
        assert_eq!(sg(&[4, 7, 9, 10]).pseudo_frobenius(), vec![3, 5, 6]);
        assert_eq!(sg(&[2, 3]).pseudo_frobenius(), vec![1]);
    }

    #[test]
    fn invariants() {
        let inv = sg(&[5, 6, 8]).basic_invariants();
        assert_eq!((inv.multiplicity, inv.embedding_dimension, inv.cm_type), (5, 3, 2));
        assert!(!inv.is_symmetric && !inv.has_minimal_multiplicity);
        let inv = sg(&[3, 7, 8]).basic_invariants();
        assert_eq!((inv.multiplicity, inv.embedding_dimension, inv.cm_type), (3, 3, 2));
        assert!(inv.has_minimal_multiplicity);
        let inv = sg(&[2, 3]).basic_invariants();
        assert_eq!(inv.cm_type, 1);
        assert!(inv.is_symmetric && inv.has_minimal_multiplicity);
    }

    #[test]
    fn overring_lists() {
        let ov = sg(&[2, 3]).overrings();
        assert_eq!(ov, vec![sg(&[2, 3]), sg(&[1])]);
        let ov = sg(&[3, 4, 5]).overrings();
        assert_eq!(ov, vec![sg(&[3, 4, 5]), sg(&[2, 3]), sg(&[1])]);
        // Brute force: every subset of the gaps of <3,7,8> whose complement
        // is additively closed.
        let h = sg(&[3, 7, 8]);
        let gaps = h.gaps().to_vec();
        let mut expected = 0;
        for mask in 0u32..(1 << gaps.len()) {
            let kept: Vec<i64> = (0..gaps.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| gaps[i])
                .collect();
            if NumericalSemigroup::from_gaps(&kept).is_ok() {
                expected += 1;
            }
        }
        let ov = h.overrings();
        assert_eq!(ov.len(), expected);
        assert!(ov.iter().all(|t| h.is_subset_of(t)));
        assert!(ov.windows(2).all(|w| w[0].genus() >= w[1].genus()));
    }

    #[test]
    fn from_gaps_rejects_non_closed_complements() {
        assert!(NumericalSemigroup::from_gaps(&[2]).is_err());
        assert!(NumericalSemigroup::from_gaps(&[1, 4]).is_err());
        assert_eq!(
            NumericalSemigroup::from_gaps(&[1, 2, 3, 4, 7, 9]).unwrap(),
            sg(&[5, 6, 8])
        );
    }
}
