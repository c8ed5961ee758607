//! Runs every cross-check the library knows about on one semigroup.

use serde::{Deserialize, Serialize};

use crate::chain::{self, DEFAULT_STEP_CAP};
use crate::classify::{report_from, CanonicalData};
use crate::error::{Error, Result};
use crate::herzog;
use crate::ideal::RelativeIdeal;
use crate::idealization;
use crate::semigroup::NumericalSemigroup;
use crate::ulrich;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub generators: Vec<i64>,
    pub checks: Vec<Check>,
    /// Checks not run, with the reason.
    pub skipped: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Checks that walk every oversemigroup run only up to this genus.
    pub overring_genus_limit: usize,
    pub max_steps: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            overring_genus_limit: 40,
            max_steps: DEFAULT_STEP_CAP,
        }
    }
}

struct Recorder {
    checks: Vec<Check>,
    skipped: Vec<String>,
}

impl Recorder {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records an operation that signals a broken invariant through an error.
    fn outcome<T>(&mut self, name: &str, result: Result<T>) -> Option<T> {
        match result {
            Ok(v) => {
                self.check(name, true, "");
                Some(v)
            }
            Err(err) => {
                self.check(name, false, err.to_string());
                None
            }
        }
    }
}

pub fn verify(h: &NumericalSemigroup) -> Result<VerifyReport> {
    verify_with(h, VerifyOptions::default())
}

pub fn verify_with(h: &NumericalSemigroup, options: VerifyOptions) -> Result<VerifyReport> {
    let data = CanonicalData::compute(h)?;
    let report = report_from(&data);
    let mut rec = Recorder {
        checks: Vec::new(),
        skipped: Vec::new(),
    };
    for (name, &ok) in &report.route_consistency {
        rec.check(name, ok, "");
    }
    let gorenstein = report.gorenstein;

    if !gorenstein {
        rec.outcome("trace_ulrich_iff_ggl_and_symmetric_s", ulrich::trace_is_ulrich_with(&data));
        let ideal_report = idealization::idealization_is_ggl_with(&data, &data.blowup_semigroup);
        if let Some(r) = rec.outcome("idealization_routes_agree", ideal_report) {
            rec.check(
                "idealization_ggl_iff_ggl",
                r.verdict == report.ggl,
                format!("verdict {}, ggl {}", r.verdict, report.ggl),
            );
        }
    }

    if h.embedding_dimension() == 3 && !gorenstein {
        check_three_generated(h, &data, &mut rec);
    }

    match chain::blowup_chain_with_cap(h, options.max_steps) {
        Ok(records) => {
            let bad: Vec<String> = records
                .iter()
                .flat_map(|r| {
                    r.assertions
                        .iter()
                        .filter(|(_, &v)| !v)
                        .map(move |(k, _)| format!("step {}: {k}", r.step))
                })
                .collect();
            rec.check("blowup_chain", bad.is_empty(), bad.join(", "));
        }
        Err(Error::StepCapExceeded(cap)) => rec
            .skipped
            .push(format!("blowup_chain: more than {cap} steps")),
        Err(err) => rec.check("blowup_chain", false, err.to_string()),
    }

    let minmult_ggl = report.minimal_multiplicity && report.ggl && !gorenstein;
    if minmult_ggl {
        match chain::reconstruct_base(h) {
            Ok(r) => {
                rec.check(
                    "reconstruction_symmetric",
                    r.is_symmetric && r.apery_match,
                    format!("{:?}", r.base),
                );
                let round = NumericalSemigroup::new(&r.base)
                    .and_then(|b| chain::expand_from_symmetric(&b, h.multiplicity(), r.n));
                rec.check(
                    "reconstruction_round_trip",
                    round.as_ref() == Ok(h),
                    format!("{round:?}"),
                );
            }
            Err(err) => rec.check("reconstruction_symmetric", false, err.to_string()),
        }
    }

    if h.genus() <= options.overring_genus_limit {
        check_overrings(h, &data, minmult_ggl, &mut rec);
    } else {
        rec.skipped.push(format!(
            "oversemigroup checks: genus {} above limit {}",
            h.genus(),
            options.overring_genus_limit
        ));
    }

    Ok(VerifyReport {
        generators: h.minimal_generators().to_vec(),
        checks: rec.checks,
        skipped: rec.skipped,
    })
}

fn check_three_generated(h: &NumericalSemigroup, data: &CanonicalData, rec: &mut Recorder) {
    let g = h.minimal_generators();
    let Some(hd) = rec.outcome("herzog_data", herzog::herzog_data(g[0], g[1], g[2])) else {
        return;
    };
    let by_exp = herzog::ggl_by_exponents_with(&hd, data);
    rec.check(
        "three_generated_ggl_criteria",
        by_exp.consistent,
        format!("{by_exp:?}"),
    );
    let pairs = herzog::trace_ulrich_by_pairs(&hd);
    let direct = ulrich::is_ulrich(h, &data.trace).map(|c| c.verdict);
    rec.check(
        "three_generated_trace_pairs",
        direct == Ok(pairs.verdict) && (!pairs.verdict || pairs.shape_holds()),
        format!("pairs {pairs:?}, direct {direct:?}"),
    );
}

fn check_overrings(
    h: &NumericalSemigroup,
    data: &CanonicalData,
    minmult_ggl: bool,
    rec: &mut Recorder,
) {
    let found = ulrich::enumerate_ulrich(h);
    let gorenstein = data.is_gorenstein();

    let mut bad = Vec::new();
    for cert in &found {
        let ideal = RelativeIdeal::from_generators(h, &cert.generators).expect("nonempty");
        if cert.a0 as usize != cert.mu * cert.colength {
            bad.push(format!("{:?}: a0 ≠ μ·ℓ(R/I)", cert.generators));
        }
        if !gorenstein && cert.mu >= 3 && !data.trace.is_subset(&ideal) {
            bad.push(format!("{:?}: tr ⊄ I", cert.generators));
        }
        if !gorenstein && ideal.is_subset(&data.conductor) && ideal != data.conductor {
            bad.push(format!("{:?}: I ⊊ 𝔠", cert.generators));
        }
    }
    rec.check("ulrich_ideal_properties", bad.is_empty(), bad.join(", "));

    if minmult_ggl {
        let formula = ulrich::ulrich_set_minmult_ggl(h).unwrap_or_default();
        let listed: Vec<Vec<i64>> = found.iter().map(|c| c.generators.clone()).collect();
        let mut expected = formula.clone();
        expected.sort();
        let n = data.colength_trace();
        let chain_ok = (1..formula.len()).all(|i| {
            let bigger = RelativeIdeal::from_generators(h, &formula[i - 1]).expect("nonempty");
            let smaller = RelativeIdeal::from_generators(h, &formula[i]).expect("nonempty");
            smaller.is_subset(&bigger) && smaller != bigger
        });
        rec.check(
            "ulrich_set_formula",
            listed == expected && formula.len() == n && chain_ok,
            format!("enumerated {listed:?}, formula {formula:?}, n = {n}"),
        );
    }

    if !gorenstein {
        let mut bad = Vec::new();
        for t in h.overrings() {
            if t == *h {
                continue;
            }
            let t_ideal = RelativeIdeal::from_semigroup(h, &t).expect("H ⊆ T");
            if !data.canonical.is_subset(&t_ideal) {
                continue;
            }
            match idealization::idealization_is_ggl_with(data, &t) {
                Ok(r) => {
                    let a = data.ring.colon(&t_ideal).expect("same base");
                    let ulrich = ulrich::is_ulrich(h, &a).map(|c| c.verdict);
                    if ulrich != Ok(t.is_symmetric() && r.route2) {
                        bad.push(format!("T = {t}: Ulrich {ulrich:?}, route2 {}", r.route2));
                    }
                }
                Err(err) => bad.push(format!("T = {t}: {err}")),
            }
        }
        rec.check("idealization_over_overrings", bad.is_empty(), bad.join(", "));
    }
}
