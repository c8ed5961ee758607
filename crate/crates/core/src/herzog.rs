//! Three-generated non-symmetric semigroups through the exponents of the
//! 2×3 determinantal presentation of their defining ideal.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::CanonicalData;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Exponents and degrees of `⟨a₁, a₂, a₃⟩`, oriented so that `n > m`.
///
/// The relations are `c₁a₁ = β'a₂ + γa₃`, `c₂a₂ = αa₁ + γ'a₃` and
/// `c₃a₃ = α'a₁ + βa₂` with `c₁ = α+α'`, `c₂ = β+β'`, `c₃ = γ+γ'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HerzogData {
    pub generators: [i64; 3],
    /// Whether `a₂` and `a₃` were exchanged relative to the input.
    pub swapped: bool,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_p: i64,
    pub beta_p: i64,
    pub gamma_p: i64,
    pub c: [i64; 3],
    pub degrees: [i64; 3],
    pub m: i64,
    pub n: i64,
    pub a: i64,
    pub d: i64,
    pub pseudo_frobenius: [i64; 2],
}

impl HerzogData {
    pub fn exponents(&self) -> [i64; 6] {
        [
            self.alpha,
            self.beta,
            self.gamma,
            self.alpha_p,
            self.beta_p,
            self.gamma_p,
        ]
    }
}

/// Representations `k·target = x·u + y·w` with `x, y ≥ 0`.
fn representations(k: i64, target: i64, u: i64, w: i64) -> Vec<(i64, i64)> {
    let total = k * target;
    (0..=total / u)
        .filter_map(|x| {
            let rest = total - x * u;
            (rest % w == 0).then_some((x, rest / w))
        })
        .collect()
}

/// Least `c > 0` with `c·target ∈ ⟨u, w⟩` and its unique representation.
fn relation(target: i64, u: i64, w: i64) -> Result<(i64, i64, i64)> {
    let mut k = 1;
    loop {
        let reps = representations(k, target, u, w);
        match reps.len() {
            0 => k += 1,
            1 => return Ok((k, reps[0].0, reps[0].1)),
            count => {
                return Err(Error::NonUniqueRepresentation {
                    generator: target,
                    multiple: k,
                    count,
                })
            }
        }
    }
}

/// Checks that `gens` are the three minimal generators of a semigroup.
pub fn check_three_generated(gens: &[i64]) -> Result<NumericalSemigroup> {
    let h = NumericalSemigroup::new(gens)?;
    if gens.len() != 3 || h.embedding_dimension() != 3 {
        return Err(Error::NotThreeGenerated(h.embedding_dimension()));
    }
    Ok(h)
}

pub fn herzog_data(a1: i64, a2: i64, a3: i64) -> Result<HerzogData> {
    let input = [a1, a2, a3];
    let h = check_three_generated(&input)?;
    if h.is_symmetric() {
        return Err(Error::SymmetricInput);
    }
    let lo = input.iter().position(|&x| x == h.multiplicity()).expect("present");
    let rest: Vec<i64> = (0..3).filter(|&i| i != lo).map(|i| input[i]).collect();
    let first = oriented(&h, [input[lo], rest[0], rest[1]], false)?;
    let data = if first.n < first.m {
        oriented(&h, [input[lo], rest[1], rest[0]], true)?
    } else {
        first
    };
    if data.a <= 0 {
        return Err(Error::consistency(
            "a = n - m > 0",
            format!("{h}: m = {}, n = {}", data.m, data.n),
        ));
    }
    Ok(data)
}

fn oriented(h: &NumericalSemigroup, g: [i64; 3], swapped: bool) -> Result<HerzogData> {
    let [a1, a2, a3] = g;
    let (c1, beta_p, gamma) = relation(a1, a2, a3)?;
    let (c2, alpha, gamma_p) = relation(a2, a1, a3)?;
    let (c3, alpha_p, beta) = relation(a3, a1, a2)?;
    let exps = [alpha, beta, gamma, alpha_p, beta_p, gamma_p];
    if exps.iter().any(|&x| x <= 0) {
        return Err(Error::consistency(
            "positive exponents",
            format!("{h}: {exps:?}"),
        ));
    }
    if alpha + alpha_p != c1 || beta + beta_p != c2 || gamma + gamma_p != c3 {
        return Err(Error::consistency(
            "c_i = exponent sums",
            format!("{h}: c = {:?}, exponents {exps:?}", [c1, c2, c3]),
        ));
    }
    let degrees = [a3 * c3, a1 * c1, a2 * c2];
    let [d1, d2, d3] = degrees;
    let m = a1 * alpha + d1;
    let n = a1 * alpha_p + d3;
    if a2 * beta + d2 != m || a3 * gamma + d3 != m {
        return Err(Error::consistency("three expressions for m", h.to_string()));
    }
    if a2 * beta_p + d1 != n || a3 * gamma_p + d2 != n {
        return Err(Error::consistency("three expressions for n", h.to_string()));
    }
    let a = n - m;
    if a2 * beta_p - a1 * alpha != a || a3 * gamma_p - a2 * beta != a || a1 * alpha_p - a3 * gamma != a
    {
        return Err(Error::consistency("three expressions for a", h.to_string()));
    }
    let identities = [
        a1 == beta * gamma + beta_p * gamma_p + beta_p * gamma,
        a2 == alpha * gamma + alpha * gamma_p + alpha_p * gamma_p,
        a3 == alpha_p * beta_p + alpha_p * beta + alpha * beta,
    ];
    if identities.contains(&false) {
        return Err(Error::consistency(
            "generators as 2×2 minors",
            format!("{h}: {exps:?}"),
        ));
    }
    let d = a1 + a2 + a3;
    let mut pf = [m - d, n - d];
    pf.sort_unstable();
    if h.pseudo_frobenius() != pf {
        return Err(Error::consistency(
            "PF = {m - d, n - d}",
            format!("{h}: PF = {:?}, predicted {pf:?}", h.pseudo_frobenius()),
        ));
    }
    Ok(HerzogData {
        generators: g,
        swapped,
        alpha,
        beta,
        gamma,
        alpha_p,
        beta_p,
        gamma_p,
        c: [c1, c2, c3],
        degrees,
        m,
        n,
        a,
        d,
        pseudo_frobenius: pf,
    })
}

/// The exponent-side GGL criteria next to the direct computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GglByExponents {
    /// `α ≤ α'`, `β ≤ β'`, `γ ≤ γ'`.
    pub exp_criterion: bool,
    pub three_a_in_h: bool,
    /// `{αa₁, βa₂, γa₃}` when the exponent criterion holds.
    pub conductor_pred: Option<Vec<i64>>,
    /// `αβγ` when the exponent criterion holds.
    pub colength_pred: Option<usize>,
    pub direct_ggl: bool,
    pub direct_conductor: Vec<i64>,
    pub direct_colength: usize,
    /// All of the above agree.
    pub consistent: bool,
}

pub fn ggl_by_exponents(hd: &HerzogData, h: &NumericalSemigroup) -> Result<GglByExponents> {
    let data = CanonicalData::compute(h)?;
    Ok(ggl_by_exponents_with(hd, &data))
}

pub fn ggl_by_exponents_with(hd: &HerzogData, data: &CanonicalData) -> GglByExponents {
    let h = &data.semigroup;
    let exp_criterion = hd.alpha <= hd.alpha_p && hd.beta <= hd.beta_p && hd.gamma <= hd.gamma_p;
    let three_a_in_h = h.contains(3 * hd.a);
    let [a1, a2, a3] = hd.generators;
    let (conductor_pred, colength_pred) = if exp_criterion {
        let mut gens = vec![hd.alpha * a1, hd.beta * a2, hd.gamma * a3];
        gens.sort_unstable();
        (Some(gens), Some((hd.alpha * hd.beta * hd.gamma) as usize))
    } else {
        (None, None)
    };
    let direct_ggl = data.is_ggl();
    let direct_colength = data.colength_conductor();
    let mut consistent = exp_criterion == three_a_in_h && exp_criterion == direct_ggl;
    if let (Some(gens), Some(len)) = (&conductor_pred, colength_pred) {
        let pred = RelativeIdeal::from_generators(h, gens).expect("nonempty");
        consistent &= pred == data.conductor && len == direct_colength;
    }
    GglByExponents {
        exp_criterion,
        three_a_in_h,
        conductor_pred,
        colength_pred,
        direct_ggl,
        direct_conductor: data.conductor.generators().to_vec(),
        direct_colength,
        consistent,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TracePairs {
    /// At least two of `(α,α')`, `(β,β')`, `(γ,γ')` are equal pairs.
    pub verdict: bool,
    pub equal_pairs: usize,
    /// Generators rotated so the unequal pair comes first, and
    /// `(3βγ, γ(2α+α'), β(2α'+α))` in the rotated exponents.
    pub rotated: Option<[i64; 3]>,
    pub predicted: Option<[i64; 3]>,
}

impl TracePairs {
    pub fn shape_holds(&self) -> bool {
        self.rotated == self.predicted
    }
}

pub fn trace_ulrich_by_pairs(hd: &HerzogData) -> TracePairs {
    let unprimed = [hd.alpha, hd.beta, hd.gamma];
    let primed = [hd.alpha_p, hd.beta_p, hd.gamma_p];
    let equal: Vec<bool> = (0..3).map(|i| unprimed[i] == primed[i]).collect();
    let equal_pairs = equal.iter().filter(|&&x| x).count();
    if equal_pairs < 2 {
        return TracePairs {
            verdict: false,
            equal_pairs,
            rotated: None,
            predicted: None,
        };
    }
    let k = equal.iter().position(|&x| !x).unwrap_or(0);
    let rot = |v: [i64; 3]| [v[k], v[(k + 1) % 3], v[(k + 2) % 3]];
    let [al, be, ga] = rot(unprimed);
    let [al_p, _, _] = rot(primed);
    TracePairs {
        verdict: true,
        equal_pairs,
        rotated: Some(rot(hd.generators)),
        predicted: Some([3 * be * ga, ga * (2 * al + al_p), be * (2 * al_p + al)]),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyCase {
    Mult4,
    Mult5I,
    Mult5Ii,
}

impl FromStr for FamilyCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mult4" => Ok(FamilyCase::Mult4),
            "mult5_i" => Ok(FamilyCase::Mult5I),
            "mult5_ii" => Ok(FamilyCase::Mult5Ii),
            other => Err(Error::ParameterOutOfRange(format!("unknown case {other}"))),
        }
    }
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyCase::Mult4 => "mult4",
            FamilyCase::Mult5I => "mult5_i",
            FamilyCase::Mult5Ii => "mult5_ii",
        })
    }
}

/// Generators of the non-AGL GGL families of multiplicity 4 and 5.
pub fn family_mult_le5(case: FamilyCase, alpha: i64, alpha_p: i64) -> Result<[i64; 3]> {
    let out_of_range = |why: &str| Err(Error::ParameterOutOfRange(format!("{case}: {why}")));
    match case {
        FamilyCase::Mult4 => {
            if !(alpha_p >= alpha && alpha >= 3 && alpha % 2 == 1) {
                return out_of_range("need α' ≥ α ≥ 3 with α odd");
            }
            Ok([4, 3 * alpha + 2 * alpha_p, alpha + 2 * alpha_p])
        }
        FamilyCase::Mult5I => {
            if !(alpha_p >= alpha && alpha >= 2 && (2 * alpha + alpha_p) % 5 != 0) {
                return out_of_range("need α' ≥ α ≥ 2 with 2α + α' prime to 5");
            }
            Ok([5, 2 * alpha + alpha_p, alpha + 3 * alpha_p])
        }
        FamilyCase::Mult5Ii => {
            if !(alpha_p >= alpha && alpha >= 2 && (alpha + 2 * alpha_p) % 5 != 0) {
                return out_of_range("need α' ≥ α ≥ 2 with α + 2α' prime to 5");
            }
            Ok([5, 4 * alpha + 3 * alpha_p, alpha + 2 * alpha_p])
        }
    }
}
