use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::fit::fit_polynomial;
use super::{
    moment_reports, verify_assoc_legendre, verify_family, verify_first_moment_route, verify_gegenbauer_forms, verify_genfun_series,
    verify_genfun_t4, verify_normalization,
};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::hyper::{f32_reduce_check, f32_unit_closed_form, f43_reduce_check, legendre_2f1_check};
use crate::modecoeff::{distribution, ModeIndex};
use crate::report::{ParamValue, Params, Status, VerifyReport};
use crate::statistics::entropy_decomposition_check;

/// Every identity id the suite knows, sorted.
pub const CATALOG: &[&str] = &[
    "A1",
    "A2",
    "A3",
    "A3_closed",
    "A4",
    "eq17",
    "eq18",
    "eq18_cancellation",
    "eq19",
    "eq20",
    "eq21",
    "eq22",
    "eq23",
    "eq23_corrected",
    "eq24",
    "eq27",
    "eq29",
    "eq31",
    "eq31_binomial",
    "eq31_gegenbauer",
    "eq32",
    "eq34",
    "eq35",
    "eq37",
    "eq38",
    "eq39",
    "eq6",
    "f32_reduce",
    "f32_unit",
    "f43_reduce",
    "family",
    "family_cross",
    "legendre_2f1",
    "skewness",
    "variance",
];

/// Largest `a`, `b` for the power-series check, whose cost grows like
/// `(a+b)^3` big-rational products.
pub const EQ35_MAX: u64 = 8;
/// `(x, y)` points of the power-series check, as `(num, den)` pairs.
pub const EQ35_POINTS: [((i64, i64), (i64, i64)); 3] = [((0, 1), (0, 1)), ((1, 3), (-1, 5)), ((1, 2), (1, 2))];
/// Arguments of the 3F2 / 4F3 reductions and the family sums.
pub const HYPER_POINTS: [(i64, i64); 4] = [(1, 1), (1, 2), (-1, 1), (1, 3)];
/// Arguments of the Legendre-2F1 relation (rational squares).
pub const LEGENDRE_POINTS: [(i64, i64); 4] = [(1, 1), (4, 1), (1, 4), (9, 1)];
/// Orders `k` of the family sums.
pub const FAMILY_ORDERS: std::ops::RangeInclusive<u32> = 1..=6;

/// Highest degree tried when fitting residuals.
const FIT_DEGREE: u32 = 3;
/// Minimum nonzero residuals before a pattern counts as an erratum.
const MIN_ERRATUM_POINTS: usize = 3;
/// Parameters treated as the variables of a residual fit.
const FIT_VARIABLES: [&str; 4] = ["a", "b", "m", "n"];

/// Which identities to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Only(BTreeSet<String>),
}

impl Selection {
    /// Parses ids (comma lists allowed); `all` selects everything.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let mut ids = BTreeSet::new();
        for item in items {
            for id in item.as_ref().split(',').map(str::trim).filter(|s| !s.is_empty()) {
                if id == "all" {
                    return Ok(Selection::All);
                }
                if !CATALOG.contains(&id) {
                    return Err(Error::Parse(format!("unknown identity id `{id}`")));
                }
                ids.insert(id.to_string());
            }
        }
        Ok(Selection::Only(ids))
    }

    pub fn wants(&self, id: &str) -> bool {
        match self {
            Selection::All => true,
            Selection::Only(ids) => ids.contains(id),
        }
    }

    fn wants_any(&self, ids: &[&str]) -> bool {
        ids.iter().any(|id| self.wants(id))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// An identity whose residuals over a sweep follow one exact polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Erratum {
    pub id: String,
    /// Parameters held fixed across the fitted points.
    pub params: Params,
    pub points: usize,
    pub nonzero: usize,
    /// The residual `lhs - rhs` as a polynomial in the swept parameters.
    pub fit: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub summary: Summary,
    pub errata: Vec<Erratum>,
    pub reports: Vec<VerifyReport>,
}

impl SuiteResult {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

#[derive(Clone, Copy, Debug)]
enum Job {
    Pair(u64, u64),
    Degree(u64),
    Legendre(u64),
}

const PAIR_DIST_IDS: &[&str] = &[
    "eq18",
    "eq20",
    "eq21",
    "eq22",
    "eq23",
    "eq24",
    "eq23_corrected",
    "variance",
    "skewness",
    "eq17",
    "eq18_cancellation",
    "eq19",
];

fn rat((num, den): (i64, i64)) -> Rat {
    Rat::frac(num, den)
}

fn run_job(job: Job, sel: &Selection) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    match job {
        Job::Pair(n, m) => {
            if sel.wants("eq6") {
                out.push(verify_normalization(n, m));
            }
            if sel.wants_any(PAIR_DIST_IDS) {
                let index = ModeIndex::new(n, m);
                out.extend(moment_reports(&distribution(index))?);
                out.extend(entropy_decomposition_check(index));
            }
            if sel.wants("eq37") {
                out.push(verify_genfun_t4(n, m));
            }
            if sel.wants_any(&["eq38", "eq39"]) && n + m > 0 {
                out.extend(verify_first_moment_route(n, m)?);
            }
            if sel.wants("eq35") && n <= EQ35_MAX && m <= EQ35_MAX {
                for (x, y) in EQ35_POINTS {
                    out.push(verify_genfun_series(n, m, &rat(x), &rat(y))?);
                }
            }
        }
        Job::Degree(n) => {
            if sel.wants_any(&["eq27", "eq29", "eq31", "eq31_binomial", "eq31_gegenbauer"]) {
                out.extend(verify_gegenbauer_forms(n)?);
            }
            if sel.wants_any(&["eq32", "family", "family_cross"]) {
                for z in HYPER_POINTS {
                    for order in FAMILY_ORDERS {
                        out.extend(verify_family(n, order, &rat(z))?);
                    }
                }
            }
            if sel.wants_any(&["eq34", "A1", "A2", "A3", "A3_closed", "A4"]) {
                out.extend(verify_assoc_legendre(n)?);
            }
            if sel.wants("f32_unit") {
                out.push(f32_unit_closed_form(n)?);
            }
            for z in HYPER_POINTS {
                if sel.wants("f32_reduce") {
                    out.push(f32_reduce_check(n, &rat(z))?);
                }
                if sel.wants("f43_reduce") {
                    out.push(f43_reduce_check(n, &rat(z))?);
                }
            }
        }
        Job::Legendre(n) => {
            for z in LEGENDRE_POINTS {
                out.push(legendre_2f1_check(n, &rat(z))?);
            }
        }
    }
    out.retain(|r| sel.wants(&r.identity_id));
    Ok(out)
}

fn jobs_for(max_nm: u64, sel: &Selection) -> Vec<Job> {
    let mut jobs: Vec<Job> = (0..=max_nm).flat_map(|n| (0..=max_nm).map(move |m| Job::Pair(n, m))).collect();
    jobs.extend((1..=max_nm).map(Job::Degree));
    if sel.wants("legendre_2f1") {
        jobs.extend((0..=max_nm).map(Job::Legendre));
    }
    jobs
}

/// Runs the selected identities over `0 <= n, m <= max_nm` (and
/// `1 <= n <= max_nm` for single-index identities) on `jobs` threads
/// (`0` = all cores). Reports are sorted by id then parameters, so the
/// result does not depend on scheduling.
pub fn run_suite(max_nm: u64, sel: &Selection, jobs: usize) -> Result<SuiteResult> {
    if matches!(sel, Selection::Only(ids) if ids.is_empty()) {
        return Ok(SuiteResult { summary: Summary::default(), errata: Vec::new(), reports: Vec::new() });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let batches: Vec<Vec<VerifyReport>> =
        pool.install(|| jobs_for(max_nm, sel).into_par_iter().map(|job| run_job(job, sel)).collect::<Result<_>>())?;
    let mut reports: Vec<VerifyReport> = batches.into_iter().flatten().collect();
    reports.sort_by(|a, b| (&a.identity_id, &a.params).cmp(&(&b.identity_id, &b.params)));
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    let summary = Summary { pass, fail: reports.len() - pass };
    let errata = find_errata(&reports);
    Ok(SuiteResult { summary, errata, reports })
}

/// Groups exact reports by id and non-swept parameters, and keeps the
/// groups whose residuals are nonzero at enough points and follow a single
/// low-degree polynomial in the swept parameters.
fn find_errata(reports: &[VerifyReport]) -> Vec<Erratum> {
    type Key = (String, Params, Vec<String>);
    let mut groups: BTreeMap<Key, Vec<(Vec<i64>, Rat)>> = BTreeMap::new();
    for r in reports {
        let Some(residual) = r.exact_residual() else { continue };
        let mut fixed = Params::new();
        let mut vars = Vec::new();
        let mut point = Vec::new();
        for (name, value) in r.params.iter() {
            match (FIT_VARIABLES.contains(&name.as_str()), value) {
                (true, ParamValue::Int(v)) => {
                    vars.push(name.clone());
                    point.push(*v);
                }
                _ => fixed = fixed.with(name, value.clone()),
            }
        }
        groups.entry((r.identity_id.clone(), fixed, vars)).or_default().push((point, residual.clone()));
    }
    groups
        .into_iter()
        .filter_map(|((id, params, vars), points)| {
            let nonzero = points.iter().filter(|(_, r)| !r.is_zero()).count();
            if nonzero < MIN_ERRATUM_POINTS {
                return None;
            }
            let fit = fit_polynomial(&vars, &points, FIT_DEGREE)?;
            Some(Erratum { id, params, points: points.len(), nonzero, fit: fit.to_string() })
        })
        .collect()
}
