//! The endomorphism algebra `B = 𝔪:𝔪` and the chain `R ⊆ B ⊆ B' ⊆ …`
//! ending at a symmetric semigroup.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::CanonicalData;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_STEP_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub step: usize,
    pub generators: Vec<i64>,
    pub ggl: bool,
    pub agl: bool,
    pub gorenstein: bool,
    pub minmult: bool,
    pub e: i64,
    pub v: usize,
    /// `ℓ(R/tr)`.
    pub n: usize,
    /// Checks on the step from this ring to the next; empty when the
    /// step hypotheses (minimal multiplicity, GGL, not Gorenstein) fail here.
    pub assertions: BTreeMap<String, bool>,
}

/// `B = {z : z + 𝔪 ⊆ 𝔪}`, checked to equal `H ∪ PF(H)`.
pub fn endomorphism_semigroup(h: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if h.is_naturals() {
        return Err(Error::Trivial);
    }
    let m = RelativeIdeal::maximal_ideal(h);
    let b = m.colon(&m)?.to_semigroup()?;
    let pf = h.pseudo_frobenius();
    let gaps: Vec<i64> = h
        .gaps()
        .iter()
        .copied()
        .filter(|g| !pf.contains(g))
        .collect();
    if b.gaps() != gaps.as_slice() {
        return Err(Error::consistency(
            "𝔪:𝔪 = H ∪ PF(H)",
            format!("{h}: 𝔪:𝔪 = {b}"),
        ));
    }
    Ok(b)
}

pub fn blowup_chain(h: &NumericalSemigroup) -> Result<Vec<ChainRecord>> {
    blowup_chain_with_cap(h, DEFAULT_STEP_CAP)
}

/// Iterates `H ↦ 𝔪:𝔪` until a symmetric semigroup is reached, failing after
/// `cap` steps.
pub fn blowup_chain_with_cap(h: &NumericalSemigroup, cap: usize) -> Result<Vec<ChainRecord>> {
    let mut records: Vec<ChainRecord> = Vec::new();
    let mut current = CanonicalData::compute(h)?;
    let start_n = current.colength_trace();
    let start_hyp = start_hypothesis(&current);
    loop {
        let step = records.len();
        let hs = current.semigroup.clone();
        let mut record = ChainRecord {
            step,
            generators: hs.minimal_generators().to_vec(),
            ggl: current.is_ggl(),
            agl: current.is_agl(),
            gorenstein: current.is_gorenstein(),
            minmult: hs.has_minimal_multiplicity(),
            e: hs.multiplicity(),
            v: hs.embedding_dimension(),
            n: current.colength_trace(),
            assertions: BTreeMap::new(),
        };
        if record.gorenstein {
            records.push(record);
            break;
        }
        if step == cap {
            return Err(Error::StepCapExceeded(cap));
        }
        let b = endomorphism_semigroup(&hs)?;
        let next = CanonicalData::compute(&b)?;
        step_assertions(&current, &next, &mut record.assertions);
        records.push(record);
        current = next;
    }
    if start_hyp {
        let steps = records.len() - 1;
        records[0]
            .assertions
            .insert("gorenstein_after_n_steps".into(), steps == start_n);
    }
    Ok(records)
}

/// Minimal multiplicity, GGL, not symmetric.
fn start_hypothesis(data: &CanonicalData) -> bool {
    data.semigroup.has_minimal_multiplicity() && data.is_ggl() && !data.is_gorenstein()
}

fn step_assertions(
    current: &CanonicalData,
    next: &CanonicalData,
    out: &mut BTreeMap<String, bool>,
) {
    if !start_hypothesis(current) {
        return;
    }
    let h = &current.semigroup;
    let b = &next.semigroup;
    let e = h.multiplicity();
    if current.is_agl() {
        out.insert(
            "agl_blowup_is_symmetric_s".into(),
            b == &current.blowup_semigroup && b.is_symmetric(),
        );
        return;
    }
    out.insert(
        "blowup_ggl_not_gorenstein".into(),
        next.is_ggl() && !next.is_gorenstein(),
    );
    out.insert(
        "blowup_minmult_same_e".into(),
        b.multiplicity() == e && b.embedding_dimension() as i64 == e,
    );
    out.insert(
        "trace_colength_drops_by_one".into(),
        next.colength_trace() + 1 == current.colength_trace(),
    );
    let n = &next.maximal;
    out.insert(
        "square_of_maximal_is_shift".into(),
        n.product(n).expect("same base") == n.shift(e),
    );
    let m = &current.maximal;
    let shifted = m.shift(-e);
    out.insert(
        "blowup_is_shifted_maximal".into(),
        RelativeIdeal::from_semigroup(h, b).is_ok_and(|bi| bi == shifted),
    );
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reconstruction {
    /// `ℓ(R/𝔠)`.
    pub n: usize,
    pub base: Vec<i64>,
    pub is_symmetric: bool,
    pub apery_match: bool,
}

/// `H' = ⟨e, h_i - n·e⟩` for a non-symmetric GGL `H = ⟨e, h₁, …, h_(e-1)⟩` of
/// minimal multiplicity, with `n = ℓ(R/𝔠)`.
pub fn reconstruct_base(h: &NumericalSemigroup) -> Result<Reconstruction> {
    let data = CanonicalData::compute(h)?;
    if !start_hypothesis(&data) {
        return Err(Error::PreconditionFailed(
            "expected a non-symmetric GGL semigroup of minimal multiplicity".into(),
        ));
    }
    let e = h.multiplicity();
    let n = data.colength_conductor();
    let lowered: Vec<i64> = h.minimal_generators()[1..]
        .iter()
        .map(|x| x - n as i64 * e)
        .collect();
    if let Some(&bad) = lowered.iter().find(|&&x| x <= 0) {
        return Err(Error::consistency(
            "h_i - n·e > 0",
            format!("{h}: got {bad} with n = {n}"),
        ));
    }
    let gens: Vec<i64> = std::iter::once(e).chain(lowered.iter().copied()).collect();
    let base = NumericalSemigroup::new(&gens)?;
    let mut apery = base.apery_set(e)?;
    apery.sort_unstable();
    let mut expected: Vec<i64> = std::iter::once(0).chain(lowered).collect();
    expected.sort_unstable();
    Ok(Reconstruction {
        n,
        base: base.minimal_generators().to_vec(),
        is_symmetric: base.is_symmetric(),
        apery_match: apery == expected,
    })
}

/// `⟨e, (Ap_e(H') \ {0}) + n·e⟩`.
pub fn expand_from_symmetric(
    base: &NumericalSemigroup,
    e: i64,
    n: usize,
) -> Result<NumericalSemigroup> {
    let gens: Vec<i64> = std::iter::once(e)
        .chain(
            base.apery_set(e)?
                .into_iter()
                .filter(|&w| w != 0)
                .map(|w| w + n as i64 * e),
        )
        .collect();
    NumericalSemigroup::new(&gens)
}
