//! Monomial Ulrich ideals.
//!
//! For a monomial ideal `I` and any `x` of valuation `v`, `ℓ(R/xI) = v + ℓ(R/I)`,
//! so `I² = xI` holds for some principal reduction `(x)` iff it holds for the
//! monomial `t^a₀` with `a₀ = min I`: both sides have the same colength and one
//! contains the other. Only that reduction is tried.
//!
//! Enumeration writes an Ulrich ideal as `I = a₀ + T` with `T = I - a₀` an
//! oversemigroup of `H`. Then `I² = a₀ + I` is automatic, `ℓ(I/I²) = a₀` and
//! `ℓ(R/I) = a₀ + g(T) - g(H)`, so freeness of `I/I²` pins down
//! `a₀ = μ(g(H) - g(T)) / (μ - 1)` where `μ = μ_R(T)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::CanonicalData;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UlrichFailure {
    Principal,
    ReductionNumberExceedsOne,
    QuotientNotFree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UlrichCertificate {
    pub generators: Vec<i64>,
    /// Exponent of the monomial reduction `t^a₀`.
    pub a0: i64,
    pub mu: usize,
    /// `ℓ(R/I)`.
    pub colength: usize,
    pub verdict: bool,
    pub failure_reason: Option<UlrichFailure>,
}

/// Tests `I ⊆ H \ {0}` for the Ulrich property with respect to `t^a₀`.
pub fn is_ulrich(h: &NumericalSemigroup, ideal: &RelativeIdeal) -> Result<UlrichCertificate> {
    if ideal.base() != h {
        return Err(Error::BaseMismatch);
    }
    if !ideal.is_integral() || ideal.contains(0) {
        return Err(Error::NotProperIdeal);
    }
    let a0 = ideal.min_element();
    let mu = ideal.mu();
    let colength = ideal.colength()?;
    let failure = if mu == 1 {
        Some(UlrichFailure::Principal)
    } else {
        let square = ideal.product(ideal)?;
        if square != ideal.shift(a0) {
            Some(UlrichFailure::ReductionNumberExceedsOne)
        } else if ideal.length_quotient(&square)? != mu * colength {
            Some(UlrichFailure::QuotientNotFree)
        } else {
            None
        }
    };
    Ok(UlrichCertificate {
        generators: ideal.generators().to_vec(),
        a0,
        mu,
        colength,
        verdict: failure.is_none(),
        failure_reason: failure,
    })
}

/// All monomial Ulrich ideals of `k[[H]]`, sorted by generator list.
pub fn enumerate_ulrich(h: &NumericalSemigroup) -> Vec<UlrichCertificate> {
    let genus = h.genus() as i64;
    let overrings = h.overrings();
    let mut found: Vec<UlrichCertificate> = overrings
        .par_iter()
        .filter(|t| *t != h)
        .filter_map(|t| {
            let as_ideal = RelativeIdeal::from_semigroup(h, t).expect("H ⊆ T");
            let mu = as_ideal.mu() as i64;
            let num = mu * (genus - t.genus() as i64);
            if mu < 2 || num % (mu - 1) != 0 {
                return None;
            }
            let a0 = num / (mu - 1);
            let ideal = as_ideal.shift(a0);
            if a0 <= 0 || !ideal.is_integral() {
                return None;
            }
            let cert = is_ulrich(h, &ideal).expect("proper ideal");
            cert.verdict.then_some(cert)
        })
        .collect();
    found.sort_by(|a, b| a.generators.cmp(&b.generators));
    found
}

/// The same list by trying every shift `a₀ ≤ 2·genus(H)` of every proper
/// oversemigroup. Much slower; kept as a cross-check.
pub fn enumerate_ulrich_exhaustive(h: &NumericalSemigroup) -> Vec<UlrichCertificate> {
    let bound = 2 * h.genus() as i64;
    let margin = if cfg!(debug_assertions) {
        h.multiplicity()
    } else {
        0
    };
    let overrings = h.overrings();
    let mut found: Vec<UlrichCertificate> = overrings
        .par_iter()
        .filter(|t| *t != h)
        .flat_map_iter(|t| {
            let as_ideal = RelativeIdeal::from_semigroup(h, t).expect("H ⊆ T");
            (1..=bound + margin).filter_map(move |a0| {
                let ideal = as_ideal.shift(a0);
                if !ideal.is_integral() {
                    return None;
                }
                let cert = is_ulrich(h, &ideal).expect("proper ideal");
                if cert.verdict {
                    assert!(a0 <= bound, "Ulrich ideal with a0 = {a0} beyond 2·genus");
                }
                cert.verdict.then_some(cert)
            })
        })
        .collect();
    found.sort_by(|a, b| a.generators.cmp(&b.generators));
    found
}

/// `{(i·e, x₂, …, x_v) : 1 ≤ i ≤ n}` with `n = ℓ(R/tr)`, for a non-symmetric
/// GGL semigroup of minimal multiplicity. Each entry is the minimal
/// generating set of the ideal.
pub fn ulrich_set_minmult_ggl(h: &NumericalSemigroup) -> Result<Vec<Vec<i64>>> {
    let data = CanonicalData::compute(h)?;
    if data.is_gorenstein() || !h.has_minimal_multiplicity() || !data.is_ggl() {
        return Err(Error::PreconditionFailed(
            "expected a non-symmetric GGL semigroup of minimal multiplicity".into(),
        ));
    }
    let e = h.multiplicity();
    let n = data.colength_trace() as i64;
    (1..=n)
        .map(|i| {
            let gens: Vec<i64> = std::iter::once(i * e)
                .chain(h.minimal_generators()[1..].iter().copied())
                .collect();
            Ok(RelativeIdeal::from_generators(h, &gens)?.generators().to_vec())
        })
        .collect()
}

/// Whether `tr(K)` is an Ulrich ideal, checked against
/// "GGL with symmetric `S`" and, when true, `μ(tr) = r + 1`.
pub fn trace_is_ulrich(h: &NumericalSemigroup) -> Result<bool> {
    let data = CanonicalData::compute(h)?;
    trace_is_ulrich_with(&data)
}

pub fn trace_is_ulrich_with(data: &CanonicalData) -> Result<bool> {
    let h = &data.semigroup;
    if data.is_gorenstein() {
        return Err(Error::PreconditionFailed(
            "the trace of a symmetric semigroup is the whole ring".into(),
        ));
    }
    let verdict = is_ulrich(h, &data.trace)?.verdict;
    let predicted = data.is_ggl() && data.blowup_semigroup.is_symmetric();
    if verdict != predicted {
        return Err(Error::consistency(
            "tr Ulrich ⇔ GGL ∧ S symmetric",
            format!("{h}: Ulrich {verdict}, GGL ∧ S symmetric {predicted}"),
        ));
    }
    if verdict && data.trace.mu() != data.cm_type() + 1 {
        return Err(Error::consistency(
            "μ(tr) = r + 1",
            format!("{h}: μ(tr) = {}, r = {}", data.trace.mu(), data.cm_type()),
        ));
    }
    Ok(verdict)
}
