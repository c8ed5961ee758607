//! Relative ideals: subsets `E ⊆ ℤ` bounded below with `E + H ⊆ E`.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A relative ideal of a numerical semigroup, stored as a membership window.
///
/// Every integer below `min_element` is outside, every integer at or above
/// `conductor` is inside, and the bits cover `[min_element, conductor)`.
/// The representation is canonical, so structural equality is set equality.
#[derive(Clone)]
pub struct RelativeIdeal {
    base: NumericalSemigroup,
    min: i64,
    conductor: i64,
    bits: BitSet,
    generators: Vec<i64>,
}

impl RelativeIdeal {
    /// Builds the ideal from a membership predicate that is false below `lo`
    /// and true from `hi` on.
    fn from_window(
        base: &NumericalSemigroup,
        lo: i64,
        hi: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let hi = hi.max(lo);
        let min = (lo..hi).find(|&z| member(z)).unwrap_or(hi);
        let mut conductor = hi;
        while conductor > min && member(conductor - 1) {
            conductor -= 1;
        }
        let bits = BitSet::from_fn((conductor - min) as usize, |i| member(min + i as i64));
        let mut ideal = RelativeIdeal {
            base: base.clone(),
            min,
            conductor,
            bits,
            generators: Vec::new(),
        };
        let e = base.multiplicity();
        let gens = base.minimal_generators();
        ideal.generators = (min..conductor + e)
            .filter(|&z| ideal.contains(z) && gens.iter().all(|&a| !ideal.contains(z - a)))
            .collect();
        ideal
    }

    /// `⋃ (g + H)` over the given generators.
    pub fn from_generators(base: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        let (Some(&lo), Some(&top)) = (gens.iter().min(), gens.iter().max()) else {
            return Err(Error::EmptyGenerators);
        };
        Ok(Self::from_window(base, lo, top + base.conductor(), |z| {
            gens.iter().any(|&g| base.contains(z - g))
        }))
    }

    /// `R` itself, i.e. the ideal `H`.
    pub fn ring(base: &NumericalSemigroup) -> Self {
        Self::from_window(base, 0, base.conductor(), |z| base.contains(z))
    }

    /// The maximal ideal `H \ {0}`.
    pub fn maximal_ideal(base: &NumericalSemigroup) -> Self {
        Self::from_window(base, 1, base.conductor().max(1), |z| z > 0 && base.contains(z))
    }

    /// An overring `T ⊇ H` viewed as an `H`-module.
    pub fn from_semigroup(base: &NumericalSemigroup, t: &NumericalSemigroup) -> Result<Self> {
        if !base.is_subset_of(t) {
            return Err(Error::NotContained);
        }
        Ok(Self::from_window(base, 0, t.conductor(), |z| t.contains(z)))
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn min_element(&self) -> i64 {
        self.min
    }

    /// Least `c` with `c + ℤ≥0 ⊆ E`.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Minimal generating set `E \ ((H \ {0}) + E)`, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            false
        } else if z >= self.conductor {
            true
        } else {
            self.bits.get((z - self.min) as usize)
        }
    }

    /// Members in `[lo, hi)`.
    pub fn members_between(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..hi).filter(|&z| self.contains(z)).collect()
    }

    fn same_base(&self, other: &RelativeIdeal) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    pub fn sum(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_base(other)?;
        Ok(Self::from_window(
            &self.base,
            self.min.min(other.min),
            self.conductor.min(other.conductor),
            |z| self.contains(z) || other.contains(z),
        ))
    }

    /// Minkowski sum `I + J`.
    pub fn product(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_base(other)?;
        let hi = (self.min + other.conductor).min(other.min + self.conductor);
        Ok(Self::from_window(&self.base, self.min + other.min, hi, |z| {
            self.generators.iter().any(|&g| other.contains(z - g))
        }))
    }

    /// `I : J = {z : z + J ⊆ I}`.
    pub fn colon(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_base(other)?;
        Ok(Self::from_window(
            &self.base,
            self.min - other.min,
            self.conductor - other.min,
            |z| other.generators.iter().all(|&g| self.contains(z + g)),
        ))
    }

    /// `I^n`, with `I^0 = R`.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::ring(&self.base);
        for _ in 0..n {
            acc = acc.product(self).expect("same base");
        }
        acc
    }

    /// The union of the powers of `I` for `R ⊆ I ⊆ ℤ≥0`, together with the
    /// least `n ≥ 1` such that `I^(n+1) = I^n`.
    pub fn ring_closure(&self) -> Result<(Self, u32)> {
        if self.min != 0 {
            return Err(Error::NotUnitary);
        }
        let mut current = self.clone();
        let mut n = 1;
        loop {
            let next = current.product(self)?;
            if next == current {
                return Ok((current, n));
            }
            current = next;
            n += 1;
        }
    }

    /// `J ⊆ I`, written `other.is_subset(self)` as `J.is_subset(I)`.
    pub fn is_subset(&self, other: &RelativeIdeal) -> bool {
        self.generators.iter().all(|&g| other.contains(g))
    }

    /// Whether `E ⊆ H`, i.e. `E` is an ideal of `R`.
    pub fn is_integral(&self) -> bool {
        self.min >= 0 && self.generators.iter().all(|&g| self.base.contains(g))
    }

    /// `ℓ_R(I/J) = |I \ J|` for `J ⊆ I`.
    pub fn length_quotient(&self, sub: &RelativeIdeal) -> Result<usize> {
        self.same_base(sub)?;
        if !sub.is_subset(self) {
            return Err(Error::NotContained);
        }
        let hi = self.conductor.max(sub.conductor);
        Ok((self.min..hi)
            .filter(|&z| self.contains(z) && !sub.contains(z))
            .count())
    }

    /// `ℓ_R(R/I)` for an ideal `I ⊆ H`.
    pub fn colength(&self) -> Result<usize> {
        Self::ring(&self.base).length_quotient(self)
    }

    /// `μ_R(I)`.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    /// `μ_R(I/J)`: generators of `I` that are not in `J`.
    pub fn mu_quotient(&self, sub: &RelativeIdeal) -> Result<usize> {
        self.same_base(sub)?;
        if !sub.is_subset(self) {
            return Err(Error::NotContained);
        }
        Ok(self.generators.iter().filter(|&&g| !sub.contains(g)).count())
    }

    /// Whether `I/J` is free over `R/a`, decided by
    /// `ℓ(I/J) = μ(I/J)·ℓ(R/a)` once `a` is known to annihilate `I/J`.
    pub fn is_free_quotient(&self, sub: &RelativeIdeal, a: &RelativeIdeal) -> Result<bool> {
        self.same_base(sub)?;
        self.same_base(a)?;
        if !sub.is_subset(self) || !a.is_integral() {
            return Err(Error::NotContained);
        }
        if !a.product(self)?.is_subset(sub) {
            return Err(Error::DoesNotAnnihilate);
        }
        let len = self.length_quotient(sub)?;
        let mu = self.mu_quotient(sub)?;
        Ok(len == mu * a.colength()?)
    }

    /// `k + E`.
    pub fn shift(&self, k: i64) -> Self {
        RelativeIdeal {
            base: self.base.clone(),
            min: self.min + k,
            conductor: self.conductor + k,
            bits: self.bits.clone(),
            generators: self.generators.iter().map(|g| g + k).collect(),
        }
    }

    /// Reads `E` as a numerical semigroup; requires `min = 0` and `E + E ⊆ E`.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        if self.min != 0 {
            return Err(Error::NotUnitary);
        }
        let closed = self
            .generators
            .iter()
            .all(|&g| self.generators.iter().all(|&h| self.contains(g + h)));
        if !closed {
            return Err(Error::PreconditionFailed(
                "the ideal is not closed under addition".into(),
            ));
        }
        let gaps = (1..self.conductor).filter(|&z| !self.contains(z)).collect();
        Ok(NumericalSemigroup::from_sorted_gaps_unchecked(gaps))
    }
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.min == other.min
            && self.conductor == other.conductor
            && self.bits == other.bits
    }
}

impl Eq for RelativeIdeal {}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal({:?} over {})", self.generators, self.base)
    }
}
