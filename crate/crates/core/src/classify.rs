//! The canonical ideal and everything derived from it, and the
//! Gorenstein / AGL / GGL / 2-AGL / NGL classification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::{BasicInvariants, NumericalSemigroup};

/// The ideals attached to `K`, computed once and shared by the other modules.
#[derive(Clone, Debug)]
pub struct CanonicalData {
    pub semigroup: NumericalSemigroup,
    pub pseudo_frobenius: Vec<i64>,
    pub ring: RelativeIdeal,
    pub maximal: RelativeIdeal,
    pub canonical: RelativeIdeal,
    pub canonical_squared: RelativeIdeal,
    pub canonical_cubed: RelativeIdeal,
    /// `S = R[K]` as an ideal of `R`.
    pub blowup: RelativeIdeal,
    pub blowup_semigroup: NumericalSemigroup,
    /// Least `n ≥ 1` with `K^(n+1) = K^n`.
    pub reduction_number: u32,
    /// `R : S`.
    pub conductor: RelativeIdeal,
    /// `K : S`, which must coincide with the conductor.
    pub canonical_colon_blowup: RelativeIdeal,
    /// `R : K`.
    pub ring_colon_canonical: RelativeIdeal,
    /// `(R : K) K`.
    pub trace: RelativeIdeal,
}

impl CanonicalData {
    pub fn compute(h: &NumericalSemigroup) -> Result<Self> {
        let pf = h.pseudo_frobenius();
        let ring = RelativeIdeal::ring(h);
        let canonical = canonical_ideal(h);
        let (blowup, reduction_number) = canonical.ring_closure()?;
        let blowup_semigroup = blowup.to_semigroup()?;
        let conductor = ring.colon(&blowup)?;
        let canonical_colon_blowup = canonical.colon(&blowup)?;
        let ring_colon_canonical = ring.colon(&canonical)?;
        let trace = ring_colon_canonical.product(&canonical)?;
        let canonical_squared = canonical.product(&canonical)?;
        let canonical_cubed = canonical_squared.product(&canonical)?;
        Ok(CanonicalData {
            semigroup: h.clone(),
            pseudo_frobenius: pf,
            maximal: RelativeIdeal::maximal_ideal(h),
            ring,
            canonical,
            canonical_squared,
            canonical_cubed,
            blowup,
            blowup_semigroup,
            reduction_number,
            conductor,
            canonical_colon_blowup,
            ring_colon_canonical,
            trace,
        })
    }

    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.cm_type() == 1
    }

    /// `ℓ(R/𝔠)`.
    pub fn colength_conductor(&self) -> usize {
        self.conductor.colength().expect("conductor is an ideal of R")
    }

    /// `ℓ(R/tr)`.
    pub fn colength_trace(&self) -> usize {
        self.trace.colength().expect("trace is an ideal of R")
    }

    /// `e¹ = ℓ(S/R)`.
    pub fn e1(&self) -> usize {
        self.blowup.length_quotient(&self.ring).expect("R ⊆ S")
    }

    pub fn is_agl(&self) -> bool {
        self.is_gorenstein()
            || self
                .maximal
                .product(&self.canonical)
                .expect("same base")
                .is_subset(&self.ring)
    }

    pub fn is_two_agl(&self) -> bool {
        self.canonical_squared == self.canonical_cubed && self.length_k2_over_k() == 2
    }

    pub fn is_ngl(&self) -> bool {
        self.maximal.is_subset(&self.trace)
    }

    pub fn length_k2_over_k(&self) -> usize {
        self.canonical_squared
            .length_quotient(&self.canonical)
            .expect("K ⊆ K²")
    }

    /// GGL route A: `K/R` is free over `R/𝔠`.
    pub fn route_free(&self) -> bool {
        self.canonical
            .is_free_quotient(&self.ring, &self.conductor)
            .expect("𝔠 annihilates K/R")
    }

    /// GGL route B: `ℓ(S/R) = ℓ(R/𝔠)·r`.
    pub fn route_lengths(&self) -> bool {
        self.e1() == self.colength_conductor() * self.cm_type()
    }

    /// GGL route C: `R/𝔠` is Gorenstein with socle exponent `b`, and
    /// `f + b = c_i + c_(r-i)` for `1 ≤ i ≤ r-1`.
    pub fn route_pseudo_frobenius(&self) -> bool {
        let socle = socle_exponents(&self.semigroup, &self.conductor).expect("𝔠 ⊆ R");
        let [b] = socle[..] else {
            return false;
        };
        let f = self.semigroup.frobenius();
        let pf = &self.pseudo_frobenius;
        let r = pf.len();
        (1..r).all(|i| f + b == pf[i - 1] + pf[r - i - 1])
    }

    pub fn is_ggl(&self) -> bool {
        self.is_gorenstein() || self.route_free()
    }
}

/// `K`, generated by `f - c` for `c ∈ PF(H)`.
pub fn canonical_ideal(h: &NumericalSemigroup) -> RelativeIdeal {
    let f = h.frobenius();
    let gens: Vec<i64> = h.pseudo_frobenius().iter().map(|c| f - c).collect();
    RelativeIdeal::from_generators(h, &gens).expect("PF is nonempty")
}

/// `S = R[K]` and the reduction number of `K`.
pub fn blowup_algebra(h: &NumericalSemigroup) -> Result<(NumericalSemigroup, u32)> {
    let (s, n) = canonical_ideal(h).ring_closure()?;
    Ok((s.to_semigroup()?, n))
}

/// `𝔠 = R : S`, checked against `K : S`.
pub fn conductor_ideal(h: &NumericalSemigroup) -> Result<RelativeIdeal> {
    let data = CanonicalData::compute(h)?;
    if data.conductor != data.canonical_colon_blowup {
        return Err(Error::consistency(
            "R:S = K:S",
            format!(
                "R:S = {:?}, K:S = {:?}",
                data.conductor.generators(),
                data.canonical_colon_blowup.generators()
            ),
        ));
    }
    Ok(data.conductor)
}

/// `tr(K) = (R:K)K`.
pub fn trace_of_canonical(h: &NumericalSemigroup) -> RelativeIdeal {
    let ring = RelativeIdeal::ring(h);
    let k = canonical_ideal(h);
    ring.colon(&k).and_then(|c| c.product(&k)).expect("same base")
}

/// Exponents `x ∈ H \ a` with `x + (H \ {0}) ⊆ a`: the monomial socle of `R/a`.
pub fn socle_exponents(h: &NumericalSemigroup, a: &RelativeIdeal) -> Result<Vec<i64>> {
    if a.base() != h || !a.is_integral() {
        return Err(Error::NotMPrimary);
    }
    let gens = h.minimal_generators();
    Ok((0..a.conductor())
        .filter(|&x| h.contains(x) && !a.contains(x))
        .filter(|&x| gens.iter().all(|&g| a.contains(x + g)))
        .collect())
}

/// Data certifying the GGL property of a non-Gorenstein ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GglWitness {
    pub conductor: Vec<i64>,
    /// `f - c_i` for `i < r`: a free basis of `K/R` over `R/𝔠`.
    pub basis_exponents: Vec<i64>,
    pub socle: i64,
    /// `f + b = c_i + c_(r-i)` for every `1 ≤ i ≤ r-1`.
    pub pf_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub generators: Vec<i64>,
    pub raw_generators: Vec<i64>,
    pub invariants: BasicInvariants,
    pub pseudo_frobenius: Vec<i64>,
    pub canonical: Vec<i64>,
    pub reduction_number: u32,
    pub blowup: Vec<i64>,
    pub conductor: Vec<i64>,
    pub colength_conductor: usize,
    pub trace: Vec<i64>,
    pub colength_trace: usize,
    pub e1: usize,
    pub length_k2_over_k: usize,
    pub gorenstein: bool,
    pub agl: bool,
    pub ggl: bool,
    pub two_agl: bool,
    pub ngl: bool,
    pub minimal_multiplicity: bool,
    /// Outcomes of GGL routes A, B, C; absent for Gorenstein rings.
    pub ggl_routes: Option<[bool; 3]>,
    pub ggl_witness: Option<GglWitness>,
    pub route_consistency: BTreeMap<String, bool>,
}

impl ClassificationReport {
    pub fn consistent(&self) -> bool {
        self.route_consistency.values().all(|&v| v)
    }

    /// Names of the failed cross-checks.
    pub fn failures(&self) -> Vec<&str> {
        self.route_consistency
            .iter()
            .filter(|(_, &v)| !v)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

fn all_equal(values: &[bool]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// The GGL witness, present iff `H` is GGL and not symmetric.
pub fn ggl_witness(data: &CanonicalData) -> Option<GglWitness> {
    if data.is_gorenstein() || !data.is_ggl() {
        return None;
    }
    let socle = socle_exponents(&data.semigroup, &data.conductor).ok()?;
    let f = data.semigroup.frobenius();
    let pf = &data.pseudo_frobenius;
    let r = pf.len();
    Some(GglWitness {
        conductor: data.conductor.generators().to_vec(),
        basis_exponents: pf[..r - 1].iter().map(|c| f - c).collect(),
        socle: *socle.first()?,
        pf_identity: data.route_pseudo_frobenius(),
    })
}

/// Classifies `H` and records every cross-check without failing on them.
pub fn analyze(h: &NumericalSemigroup) -> Result<ClassificationReport> {
    let data = CanonicalData::compute(h)?;
    Ok(report_from(&data))
}

/// Like [`analyze`], but a failed cross-check is an error.
pub fn classify(h: &NumericalSemigroup) -> Result<ClassificationReport> {
    let report = analyze(h)?;
    if let Some(name) = report.failures().first() {
        return Err(Error::consistency(
            name,
            format!("while classifying {h}"),
        ));
    }
    Ok(report)
}

pub fn report_from(data: &CanonicalData) -> ClassificationReport {
    let h = &data.semigroup;
    let invariants = h.basic_invariants();
    let gorenstein = data.is_gorenstein();
    let agl = data.is_agl();
    let ggl = data.is_ggl();
    let two_agl = data.is_two_agl();
    let ngl = data.is_ngl();
    let minmult = invariants.has_minimal_multiplicity;
    let e1 = data.e1();
    let colength_conductor = data.colength_conductor();
    let k2_eq_k3 = data.canonical_squared == data.canonical_cubed;

    let ggl_routes = (!gorenstein).then(|| {
        [
            data.route_free(),
            data.route_lengths(),
            data.route_pseudo_frobenius(),
        ]
    });

    let mut checks = BTreeMap::new();
    let mut check = |name: &str, ok: bool| {
        checks.insert(name.to_string(), ok);
    };
    check(
        "ggl_routes_agree",
        ggl_routes.is_none_or(|routes| all_equal(&routes)),
    );
    check(
        "conductor_colons_agree",
        data.conductor == data.canonical_colon_blowup,
    );
    check(
        "gorenstein_equivalences",
        all_equal(&[
            gorenstein,
            data.canonical == data.ring,
            data.canonical == data.canonical_squared,
            data.conductor == data.ring,
            e1 == 0,
        ]),
    );
    check(
        "stable_square_equivalences",
        all_equal(&[
            data.trace == data.ring_colon_canonical,
            data.ring_colon_canonical == data.conductor,
            k2_eq_k3,
        ]),
    );
    check("implication_chain", (!gorenstein || agl) && (!agl || ggl));
    check("agl_iff_ggl_and_ngl", agl == (ggl && ngl));
    let mut ggl_structure = true;
    if ggl && !gorenstein {
        let socle = socle_exponents(h, &data.conductor).unwrap_or_default();
        let s_over_k = data.blowup.length_quotient(&data.canonical).ok();
        ggl_structure = data.trace == data.conductor
            && data.ring_colon_canonical == data.conductor
            && s_over_k == Some(colength_conductor)
            && socle.len() == 1;
    }
    check("ggl_trace_structure", ggl_structure);
    check(
        "type_two_stable_square",
        invariants.cm_type != 2 || ggl == k2_eq_k3,
    );
    check("small_multiplicity_ggl", invariants.multiplicity > 3 || ggl);
    check(
        "minmult_ggl_blowup_symmetric",
        !(minmult && ggl && !gorenstein) || data.blowup_semigroup.is_symmetric(),
    );
    check("minmult_apery", minmult == apery_is_generators(h));
    check("minmult_square", minmult == maximal_square_is_shift(data));
    check("symmetric_gap_pairing", gorenstein == gap_pairing(h));

    ClassificationReport {
        generators: h.minimal_generators().to_vec(),
        raw_generators: h.raw_generators().to_vec(),
        pseudo_frobenius: data.pseudo_frobenius.clone(),
        canonical: data.canonical.generators().to_vec(),
        reduction_number: data.reduction_number,
        blowup: data.blowup_semigroup.minimal_generators().to_vec(),
        conductor: data.conductor.generators().to_vec(),
        colength_conductor,
        trace: data.trace.generators().to_vec(),
        colength_trace: data.colength_trace(),
        e1,
        length_k2_over_k: data.length_k2_over_k(),
        gorenstein,
        agl,
        ggl,
        two_agl,
        ngl,
        minimal_multiplicity: minmult,
        ggl_routes,
        ggl_witness: ggl_witness(data),
        route_consistency: checks,
        invariants,
    }
}

/// `Ap_e(H) = {0} ∪ (minimal generators \ {e})`.
fn apery_is_generators(h: &NumericalSemigroup) -> bool {
    let e = h.multiplicity();
    let mut apery = h.apery_set(e).expect("e ∈ H");
    apery.sort_unstable();
    let mut expected: Vec<i64> = std::iter::once(0)
        .chain(h.minimal_generators().iter().copied().filter(|&a| a != e))
        .collect();
    expected.sort_unstable();
    apery == expected
}

/// `𝔪² = e + 𝔪`.
fn maximal_square_is_shift(data: &CanonicalData) -> bool {
    let e = data.semigroup.multiplicity();
    data.maximal.product(&data.maximal).expect("same base") == data.maximal.shift(e)
}

/// `z ∈ H` xor `f - z ∈ H` for every `z` in `[0, f]`.
fn gap_pairing(h: &NumericalSemigroup) -> bool {
    let f = h.frobenius();
    (0..=f).all(|z| h.contains(z) != h.contains(f - z))
}
