//! GGL test for the idealization `R ⋉ 𝔞` with `𝔞 = R:T` for an overring `T`.
//!
//! The canonical module of `R ⋉ 𝔞` is `L = (K:𝔞) ⊕ K`, so everything reduces
//! to colons and products of rank-one ideals computed componentwise.

use serde::{Deserialize, Serialize};

use crate::classify::CanonicalData;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Component ideals of `L`, `L²` and `A:L`, as generator lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairComponents {
    /// `K:𝔞`
    pub k_colon_a: Vec<i64>,
    /// `(K:𝔞)²`
    pub k_colon_a_squared: Vec<i64>,
    /// `(K:𝔞)K`
    pub k_colon_a_times_k: Vec<i64>,
    /// `𝔞:K`
    pub a_colon_k: Vec<i64>,
    /// `𝔞:(K:𝔞)`
    pub a_colon_k_colon_a: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealizationReport {
    pub semigroup: Vec<i64>,
    pub overring: Vec<i64>,
    /// `𝔞 = R:T`
    pub ideal: Vec<i64>,
    /// `R` is GGL and `S = T`.
    pub route1: bool,
    /// `ℓ(T/R) = μ(T/R)·ℓ(R/𝔞)`.
    pub route2: bool,
    pub verdict: bool,
    pub components: PairComponents,
}

pub fn canonical_pair_components(
    h: &NumericalSemigroup,
    a: &RelativeIdeal,
) -> Result<PairComponents> {
    let k = crate::classify::canonical_ideal(h);
    pair_components_with(&k, a)
}

fn pair_components_with(k: &RelativeIdeal, a: &RelativeIdeal) -> Result<PairComponents> {
    if a.base() != k.base() || !a.is_integral() {
        return Err(Error::NotMPrimary);
    }
    let k_colon_a = k.colon(a)?;
    let gens = |i: &RelativeIdeal| i.generators().to_vec();
    Ok(PairComponents {
        k_colon_a_squared: gens(&k_colon_a.product(&k_colon_a)?),
        k_colon_a_times_k: gens(&k_colon_a.product(k)?),
        a_colon_k: gens(&a.colon(k)?),
        a_colon_k_colon_a: gens(&a.colon(&k_colon_a)?),
        k_colon_a: gens(&k_colon_a),
    })
}

/// Decides whether `R ⋉ (R:T)` is GGL, by "`R` is GGL with `S = T`" and by
/// freeness of `T/R` over `R/𝔞`. Both characterizations need `K ⊆ T`.
pub fn idealization_is_ggl(
    h: &NumericalSemigroup,
    t: &NumericalSemigroup,
) -> Result<IdealizationReport> {
    let data = CanonicalData::compute(h)?;
    idealization_is_ggl_with(&data, t)
}

pub fn idealization_is_ggl_with(
    data: &CanonicalData,
    t: &NumericalSemigroup,
) -> Result<IdealizationReport> {
    let h = &data.semigroup;
    if t == h || !h.is_subset_of(t) {
        return Err(Error::PreconditionFailed(format!(
            "{t} is not a proper oversemigroup of {h}"
        )));
    }
    if data.is_gorenstein() {
        return Err(Error::PreconditionFailed(format!("{h} is symmetric")));
    }
    let t_ideal = RelativeIdeal::from_semigroup(h, t)?;
    if !data.canonical.is_subset(&t_ideal) {
        return Err(Error::PreconditionFailed(format!(
            "{t} does not contain the canonical ideal of {h}"
        )));
    }
    let a = data.ring.colon(&t_ideal)?;
    let route1 = data.is_ggl() && data.blowup_semigroup == *t;
    let route2 = t_ideal.is_free_quotient(&data.ring, &a)?;
    if route1 != route2 {
        return Err(Error::consistency(
            "idealization routes agree",
            format!("{h} with T = {t}: route1 {route1}, route2 {route2}"),
        ));
    }
    if route1 && a != data.conductor {
        return Err(Error::consistency(
            "R:T = 𝔠",
            format!("{h} with T = {t}"),
        ));
    }
    Ok(IdealizationReport {
        semigroup: h.minimal_generators().to_vec(),
        overring: t.minimal_generators().to_vec(),
        ideal: a.generators().to_vec(),
        route1,
        route2,
        verdict: route1,
        components: pair_components_with(&data.canonical, &a)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn verdicts() {
        let r = idealization_is_ggl(&sg(&[3, 7, 8]), &sg(&[1])).unwrap();
        assert!(r.verdict && r.route2);
        assert_eq!(r.ideal, vec![6, 7, 8]);

        let r = idealization_is_ggl(&sg(&[6, 7, 8, 9]), &sg(&[1])).unwrap();
        assert!(!r.verdict && !r.route2);

        let r = idealization_is_ggl(&sg(&[3, 4, 5]), &sg(&[1])).unwrap();
        assert!(r.verdict);
    }

    #[test]
    fn preconditions() {
        let h = sg(&[5, 6, 8]);
        assert!(idealization_is_ggl(&h, &h).is_err());
        assert!(idealization_is_ggl(&sg(&[2, 3]), &sg(&[1])).is_err());
        // <5,6,7,8> does not contain 2 ∈ K.
        assert!(matches!(
            idealization_is_ggl(&h, &sg(&[5, 6, 7, 8])),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn components() {
        let h = sg(&[3, 7, 8]);
        let c = crate::classify::conductor_ideal(&h).unwrap();
        let p = canonical_pair_components(&h, &c).unwrap();
        assert_eq!(p.k_colon_a, vec![0, 1, 2]);
        assert_eq!(p.a_colon_k, vec![6, 7, 8]);
        assert_eq!(p.a_colon_k_colon_a, vec![6, 7, 8]);

        let h = sg(&[5, 6, 8]);
        let c = crate::classify::conductor_ideal(&h).unwrap();
        assert_eq!(canonical_pair_components(&h, &c).unwrap().k_colon_a, vec![0, 2, 4]);

        let h = sg(&[2, 3]);
        let m = RelativeIdeal::maximal_ideal(&h);
        let p = canonical_pair_components(&h, &m).unwrap();
        assert_eq!(p.k_colon_a, vec![0, 1]);
        assert!(canonical_pair_components(&h, &RelativeIdeal::from_generators(&h, &[-1]).unwrap()).is_err());
    }
}
