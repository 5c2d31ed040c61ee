//! Acceptance gate. Runs every criterion, prints one `PASS`/`FAIL` line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use vortex_coherence::beamfield::{gamma_direct, gamma_mercer, orthonormality_check, purity_integral, WaistFrame};
use vortex_coherence::cli;
use vortex_coherence::exactnum::Rat;
use vortex_coherence::hyper::{f32_reduce_check, f32_unit_closed_form, f43_reduce_check, legendre_2f1_check};
use vortex_coherence::identities::{
    fit_polynomial, moment_reports, verify_assoc_legendre, verify_family, verify_first_moment_route, verify_gegenbauer_forms,
    verify_genfun_series, verify_genfun_t4, verify_normalization, EQ35_MAX, EQ35_POINTS, HYPER_POINTS, LEGENDRE_POINTS,
};
use vortex_coherence::modecoeff::{b_derivative_route, b_hyper_route, b_jacobi_route, distribution, ModeIndex};
use vortex_coherence::report::VerifyReport;
use vortex_coherence::statistics::{purity, renyi_entropy, variance};
use vortex_coherence::Error;

const NORMALIZATION_MAX: u64 = 40;
const NORMALIZATION_BUDGET: Duration = Duration::from_secs(30);
const ROUTES_MAX: u64 = 25;
const ROUTES_BUDGET: Duration = Duration::from_secs(30);
const MOMENTS_MAX: u64 = 30;
const MIN_FIFTH_MOMENT_POINTS: usize = 10;
const CURVE_SYMMETRY_TOL: f64 = 1e-12;
const FLATNESS_RATIO: f64 = 3.0;
const GEGENBAUER_MAX: u64 = 30;
const A4_MAX: u64 = 20;
const T4_MAX: u64 = 30;
const FIRST_MOMENT_MAX: u64 = 20;
const HYPER_MAX: u64 = 25;
const LEGENDRE_2F1_MAX: u64 = 15;
const ORTHO_MAX: usize = 15;
const GAMMA_TOL: f64 = 1e-10;
const GAMMA_TOTAL_MAX: u64 = 8;
const PURITY_INTEGRAL_TOL: f64 = 1e-8;
const PURITY_INTEGRAL_MAX: u64 = 5;
const RENYI_TOL: f64 = 1e-12;
const RENYI_MAX: u64 = 20;

/// Outcome of one criterion: verdict plus a one-line summary of the evidence.
struct Verdict {
    ok: bool,
    detail: String,
}

impl Verdict {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Verdict { ok, detail: detail.into() }
    }
}

/// Collects failing reports so the verdict can name the first one.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, report: &VerifyReport) {
        self.checked += 1;
        if !report.passed() {
            self.failures.push(report.to_string());
        }
    }

    fn extend<'a>(&mut self, reports: impl IntoIterator<Item = &'a VerifyReport>) {
        for r in reports {
            self.add(r);
        }
    }

    fn ok(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn summary(&self) -> String {
        match self.failures.first() {
            None => format!("{} reports, all exact", self.checked),
            Some(first) => format!("{} of {} reports fail, first: {first}", self.failures.len(), self.checked),
        }
    }
}

fn pairs(max: u64) -> impl Iterator<Item = (u64, u64)> {
    (0..=max).flat_map(move |n| (0..=max).map(move |m| (n, m)))
}

fn rat(p: (i64, i64)) -> Rat {
    Rat::frac(p.0, p.1)
}

fn cli_output(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("vortex").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

/// Rows of an emitted figure table, header dropped.
fn figure_rows(id: &str) -> Vec<Vec<String>> {
    let (code, body) = cli_output(&["figure", id]);
    assert_eq!(code, cli::EXIT_OK, "figure {id} exited with {code}");
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(body.as_slice())
        .records()
        .map(|r| r.expect("well-formed CSV").iter().map(str::to_string).collect())
        .collect()
}

fn float_column(rows: &[Vec<String>], col: usize) -> Vec<f64> {
    rows.iter().map(|r| r[col].parse().expect("float cell")).collect()
}

fn normalization() -> Verdict {
    let start = Instant::now();
    let mut tally = Tally::default();
    for (n, m) in pairs(NORMALIZATION_MAX) {
        tally.add(&verify_normalization(n, m));
    }
    let elapsed = start.elapsed();
    Verdict::new(
        tally.ok() && tally.checked == 1681 && elapsed < NORMALIZATION_BUDGET,
        format!("{} pairs n,m <= {NORMALIZATION_MAX} in {:.1}s; {}", tally.checked, elapsed.as_secs_f64(), tally.summary()),
    )
}

fn route_agreement() -> Verdict {
    let start = Instant::now();
    let (mut compared, mut unavailable, mut mismatches) = (0usize, 0usize, Vec::new());
    for (n, m) in pairs(ROUTES_MAX) {
        for k in 0..=n + m {
            let canonical = b_derivative_route(n, m, k).expect("k in range");
            let jacobi = b_jacobi_route(n, m, k).expect("k in range");
            compared += 1;
            if jacobi != canonical {
                mismatches.push(format!("jacobi b({n},{m},{k})"));
            }
            match b_hyper_route(n, m, k) {
                Ok(hyper) if hyper != canonical => mismatches.push(format!("hyper b({n},{m},{k})")),
                Ok(_) => {}
                Err(Error::RouteUnavailable(_)) => unavailable += 1,
                Err(e) => mismatches.push(format!("hyper b({n},{m},{k}): {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    Verdict::new(
        mismatches.is_empty() && elapsed < ROUTES_BUDGET,
        format!(
            "{compared} coefficients, {} mismatches, Gauss forms undefined at {unavailable} (k > max(n,m)), {:.1}s",
            mismatches.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn moment_identities() -> Verdict {
    let mut tally = Tally::default();
    let mut fifth_points = Vec::new();
    for (n, m) in pairs(MOMENTS_MAX) {
        for report in moment_reports(&distribution(ModeIndex::new(n, m))).expect("orders in range") {
            if report.identity_id == "eq23" {
                let residual = report.exact_residual().expect("exact").clone();
                fifth_points.push((vec![m as i64, n as i64], residual));
            } else {
                tally.add(&report);
            }
        }
    }
    let vars = ["m".to_string(), "n".to_string()];
    let nonzero = fifth_points.iter().filter(|(_, r)| !r.is_zero()).count();
    let fit = fit_polynomial(&vars, &fifth_points, 3).map(|f| f.to_string());
    let fit_ok = fit.as_deref() == Some("5/4*m*n") && nonzero >= MIN_FIFTH_MOMENT_POINTS;
    Verdict::new(
        tally.ok() && fit_ok,
        format!(
            "orders 1-4, 6, corrected 5th, variance, skewness: {}; printed 5th-moment residual = {} over {nonzero} nonzero points",
            tally.summary(),
            fit.unwrap_or_else(|| "no polynomial fit".into())
        ),
    )
}

fn entropy_curve_minimum() -> Verdict {
    let curve = float_column(&figure_rows("1"), 1);
    let symmetric = curve.len() == 21 && (0..21).all(|n| (curve[n] - curve[20 - n]).abs() <= CURVE_SYMMETRY_TOL);
    let dip = curve[10] < curve[9] && (curve[9] - curve[11]).abs() <= CURVE_SYMMETRY_TOL;
    Verdict::new(
        symmetric && dip,
        format!("I(10,10) = {}, I(9,11) = {}, I(11,9) = {}, symmetric: {symmetric}", curve[10], curve[9], curve[11]),
    )
}

fn alternating_zeros_and_flatness() -> Verdict {
    let rows = figure_rows("2");
    let zero_iff_odd = rows.iter().all(|r| {
        let k: u64 = r[0].parse().expect("k");
        let float: f64 = r[2].parse().expect("prob_float");
        (r[1] == "0/1") == (k % 2 == 1) && (float == 0.0) == (k % 2 == 1)
    });
    // oracle: brute-force distribution, independent of the emitted table
    let probs = distribution(ModeIndex::new(25, 25)).probs_f64();
    let even: Vec<f64> = (10..=40).step_by(2).map(|k| probs[k]).collect();
    let ratio = even.iter().cloned().fold(f64::MIN, f64::max) / even.iter().cloned().fold(f64::MAX, f64::min);
    Verdict::new(
        rows.len() == 51 && zero_iff_odd && ratio < FLATNESS_RATIO,
        format!("{} rows, zero exactly at odd k: {zero_iff_odd}, even-k max/min on [10,40] = {ratio:.4}", rows.len()),
    )
}

fn single_zero() -> Verdict {
    let rows = figure_rows("3");
    let zeros: Vec<&str> = rows.iter().filter(|r| r[1] == "0/1").map(|r| r[0].as_str()).collect();
    Verdict::new(rows.len() == 33 && zeros.len() == 1, format!("{} rows, zero entries at k = {zeros:?}", rows.len()))
}

fn variance_maximum() -> Verdict {
    let rows = figure_rows("4");
    let exact: Vec<Rat> = (0..=25).map(|n| variance(ModeIndex::new(n, 25 - n)).expect("consistent")).collect();
    let emitted_match = rows.iter().zip(&exact).all(|(r, v)| r[1] == v.to_string());
    let max = exact.iter().max().expect("nonempty").clone();
    let argmax: Vec<usize> = (0..exact.len()).filter(|&n| exact[n] == max).collect();
    Verdict::new(
        emitted_match && max == Rat::frac(337, 4) && argmax == [12, 13],
        format!("max variance {max} at n = {argmax:?}, emitted table matches: {emitted_match}"),
    )
}

fn renyi_minimum() -> Verdict {
    let shannon = float_column(&figure_rows("1"), 1);
    let renyi = float_column(&figure_rows("5"), 1);
    let dip = renyi[10] < renyi[9];
    let shallower = shannon[9] - shannon[10] > renyi[9] - renyi[10];
    Verdict::new(
        dip && shallower,
        format!(
            "I2(10,10) = {}, I2(9,11) = {}; Renyi dip {:.3e} vs Shannon dip {:.3e}",
            renyi[10],
            renyi[9],
            renyi[9] - renyi[10],
            shannon[9] - shannon[10]
        ),
    )
}

fn gegenbauer_legendre_chain() -> Verdict {
    let mut tally = Tally::default();
    for n in 1..=GEGENBAUER_MAX {
        tally.extend(&verify_gegenbauer_forms(n).expect("n >= 1"));
        let legendre = verify_assoc_legendre(n).expect("n >= 1");
        tally.extend(legendre.iter().filter(|r| r.identity_id != "A4" || n <= A4_MAX));
    }
    Verdict::new(tally.ok(), tally.summary())
}

fn generating_function() -> Verdict {
    let mut tally = Tally::default();
    for (a, b) in pairs(T4_MAX) {
        tally.add(&verify_genfun_t4(a, b));
    }
    for (a, b) in pairs(EQ35_MAX) {
        for (x, y) in EQ35_POINTS {
            tally.add(&verify_genfun_series(a, b, &rat(x), &rat(y)).expect("valid point"));
        }
    }
    for (a, b) in pairs(FIRST_MOMENT_MAX).filter(|&(a, b)| a + b > 0) {
        tally.extend(&verify_first_moment_route(a, b).expect("a + b > 0"));
    }
    Verdict::new(tally.ok(), tally.summary())
}

fn hypergeometric_reductions() -> Verdict {
    let mut tally = Tally::default();
    for n in 1..=HYPER_MAX {
        tally.add(&f32_unit_closed_form(n).expect("n >= 1"));
        for z in HYPER_POINTS.map(rat) {
            tally.add(&f32_reduce_check(n, &z).expect("n >= 1"));
            tally.add(&f43_reduce_check(n, &z).expect("n >= 1"));
            tally.extend(&verify_family(n, 2, &z).expect("n >= 1"));
        }
    }
    for n in 0..=LEGENDRE_2F1_MAX {
        for z in LEGENDRE_POINTS.map(rat) {
            tally.add(&legendre_2f1_check(n, &z).expect("rational square"));
        }
    }
    Verdict::new(tally.ok(), tally.summary())
}

fn numerics() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;

    let frame = WaistFrame::unit();
    let mut worst_ortho = 0.0f64;
    for n in 0..=ORTHO_MAX {
        for m in 0..=ORTHO_MAX {
            let r = orthonormality_check(n, m, frame).expect("valid rule");
            ok &= r.passed();
            worst_ortho = worst_ortho.max(r.residual.to_f64().abs());
        }
    }
    notes.push(format!("orthonormality worst {worst_ortho:.1e}"));

    let xs = [-1.3, -0.4, 0.0, 0.55, 1.7];
    let mut worst_gamma = 0.0f64;
    for (n, m) in pairs(GAMMA_TOTAL_MAX).filter(|&(n, m)| n + m <= GAMMA_TOTAL_MAX) {
        let index = ModeIndex::new(n, m);
        for &x in &xs {
            for &xp in &xs {
                let d = gamma_direct(index, x, xp, frame);
                let diff = (d.re - gamma_mercer(index, x, xp, frame)).hypot(d.im);
                worst_gamma = worst_gamma.max(diff);
            }
        }
    }
    ok &= worst_gamma <= GAMMA_TOL;
    notes.push(format!("direct vs Mercer worst {worst_gamma:.1e} over 25 point pairs"));

    let mut worst_purity = 0.0f64;
    for (n, m) in pairs(PURITY_INTEGRAL_MAX) {
        let index = ModeIndex::new(n, m);
        let exact = purity(&distribution(index)).to_f64();
        worst_purity = worst_purity.max((purity_integral(index, frame) - exact).abs());
    }
    ok &= worst_purity <= PURITY_INTEGRAL_TOL;
    notes.push(format!("purity integral worst {worst_purity:.1e}"));

    let mut worst_renyi = 0.0f64;
    for (n, m) in pairs(RENYI_MAX) {
        let dist = distribution(ModeIndex::new(n, m));
        let renyi = renyi_entropy(&dist, 2.0).expect("alpha = 2").nats;
        let from_purity = -purity(&dist).ln().expect("positive");
        worst_renyi = worst_renyi.max((renyi - from_purity).abs());
    }
    ok &= worst_renyi <= RENYI_TOL;
    notes.push(format!("Renyi(2) vs -ln purity worst {worst_renyi:.1e}"));

    Verdict::new(ok, notes.join("; "))
}

fn determinism() -> Verdict {
    let runs: [&[&str]; 6] = [
        &["verify", "all", "--max-nm", "3"],
        &["figure", "1"],
        &["figure", "2"],
        &["figure", "3"],
        &["figure", "4"],
        &["figure", "5", "--alpha", "3"],
    ];
    let mut differing = Vec::new();
    for args in runs {
        if cli_output(args) != cli_output(args) {
            differing.push(args.join(" "));
        }
    }
    let serial = cli_output(&["verify", "all", "--max-nm", "3", "--jobs", "1"]);
    let parallel = cli_output(&["verify", "all", "--max-nm", "3", "--jobs", "4"]);
    if serial != parallel {
        differing.push("verify with 1 vs 4 jobs".into());
    }
    Verdict::new(differing.is_empty(), format!("7 comparisons, differing: {differing:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 13] = [
        ("normalization, n,m <= 40", normalization),
        ("three coefficient routes agree, n,m <= 25", route_agreement),
        ("moment identities and the fifth-moment erratum", moment_identities),
        ("Shannon entropy minimum at n = N/2", entropy_curve_minimum),
        ("b^2(25,25,k): alternating zeros, flat middle", alternating_zeros_and_flatness),
        ("b^2(7,25,k): exactly one zero", single_zero),
        ("variance maximum 337/4 at n = 12, 13", variance_maximum),
        ("Renyi-2 minimum shallower than Shannon", renyi_minimum),
        ("Gegenbauer and associated Legendre chain", gegenbauer_legendre_chain),
        ("generating function identities", generating_function),
        ("hypergeometric reductions", hypergeometric_reductions),
        ("double-precision field numerics", numerics),
        ("byte-identical CLI output", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let tag = if verdict.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2} {name} ({:.1}s): {}", i + 1, start.elapsed().as_secs_f64(), verdict.detail);
        failed += usize::from(!verdict.ok);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
