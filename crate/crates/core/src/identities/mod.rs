//! Exact checks of the summation identities satisfied by the connection
//! coefficients, and a suite that sweeps them over parameter ranges.
//!
//! Every check returns [`VerifyReport`]s whose residual is `lhs - rhs`.
//! Closed forms are evaluated as published; a failing report is a finding,
//! not an error.

mod fit;
mod suite;

pub use fit::{fit_polynomial, PolyFit};
pub use suite::{run_suite, Erratum, Selection, SuiteResult, Summary, CATALOG, EQ35_MAX, EQ35_POINTS, FAMILY_ORDERS, HYPER_POINTS, LEGENDRE_POINTS};

use crate::error::{Error, Result};
use crate::exactnum::{binom_int, binomial, factorial, gamma_half, pochhammer, FSeries, PiRadical, Rat};
use crate::hyper::{pfq_of, HyperSpec};
use crate::modecoeff::{b_derivative_route, b_hyper_route, b_jacobi_route, distribution, CoeffDist, ModeIndex};
use crate::orthopoly::{assoc_legendre_zero, gegenbauer_zero, jacobi_shifted_at, jacobi_shifted_zero, legendre};
use crate::report::{Params, VerifyReport};
use crate::statistics::{fifth_moment_corrected, moment_closed_form, moments_direct, MomentTable, MAX_MOMENT};

fn fact(n: i64) -> Rat {
    factorial(n).expect("nonnegative argument")
}

fn pow(base: i64, e: i64) -> Rat {
    Rat::from(base).pow(e).expect("nonzero base")
}

fn sign(e: i64) -> Rat {
    if e.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn nm(n: u64, m: u64) -> Params {
    Params::new().with("n", n).with("m", m)
}

/// Sum of pi-radical terms that must all share the same pi content.
fn radical_sum(terms: impl IntoIterator<Item = PiRadical>) -> Result<PiRadical> {
    terms.into_iter().try_fold(PiRadical::rational(Rat::zero()), |acc, t| acc.checked_add(&t))
}

/// A pi-radical expected to reduce to a rational.
fn rational(value: PiRadical, what: &str) -> Result<Rat> {
    value
        .to_rat()
        .ok_or_else(|| Error::Invariant(format!("{what} keeps pi content: {value}")))
}

/// `sum_k b^2(n, m, k) = 1` by every route: coefficient extraction, the
/// Jacobi form, the Gauss-function forms (where they exist) and the
/// `k!/(-m-n)_k` rewriting. The left side is the first route that misses.
pub fn verify_normalization(n: u64, m: u64) -> VerifyReport {
    let total = n + m;
    let routes: [&dyn Fn(u64) -> Rat; 3] = [
        &|k| b_derivative_route(n, m, k).expect("k in range").squared().clone(),
        &|k| b_jacobi_route(n, m, k).expect("k in range").squared().clone(),
        &|k| match b_hyper_route(n, m, k) {
            Ok(b) => b.squared().clone(),
            Err(_) => b_derivative_route(n, m, k).expect("k in range").squared().clone(),
        },
    ];
    let mut sums: Vec<Rat> = routes.iter().map(|route| (0..=total).map(|k| route(k)).sum()).collect();
    let (ni, mi) = (n as i64, m as i64);
    let neg_total = Rat::from(-(ni + mi));
    let rewritten: Rat = (0..=total)
        .map(|k| {
            let p = jacobi_shifted_zero(k, n, m);
            fact(k as i64) * sign(k as i64) / pochhammer(&neg_total, k) * pow(4, k as i64) * &p * &p
        })
        .sum();
    sums.push(binom_int(ni + mi, mi) / pow(2, ni + mi) * rewritten);
    let lhs = sums.into_iter().find(|s| !s.is_one()).unwrap_or_else(Rat::one);
    VerifyReport::exact("eq6", nm(n, m), lhs, Rat::one())
}

const MOMENT_IDS: [&str; MAX_MOMENT] = ["eq18", "eq20", "eq21", "eq22", "eq23", "eq24"];

/// Identity id of the published closed form for `<k^j>`.
pub fn moment_identity_id(j: usize) -> Option<&'static str> {
    MOMENT_IDS.get(j.checked_sub(1)?).copied()
}

/// Published closed form for `<k^j>` against direct summation. The
/// residual is on the `<k^j>` scale.
pub fn verify_moments(n: u64, m: u64, j: usize) -> Result<VerifyReport> {
    let table = moments_direct(&distribution(ModeIndex::new(n, m)), MAX_MOMENT)?;
    moment_report(&table, j)
}

fn moment_report(table: &MomentTable, j: usize) -> Result<VerifyReport> {
    let id = moment_identity_id(j).ok_or_else(|| Error::Domain(format!("moment order {j} outside 1..={MAX_MOMENT}")))?;
    let index = table.index;
    Ok(VerifyReport::exact(id, nm(index.n, index.m), moment_closed_form(index, j)?, table.raw[j].clone()))
}

/// The fifth-moment form with its last term read as `-(5/2) mn`.
pub fn verify_fifth_moment_corrected(table: &MomentTable) -> VerifyReport {
    let index = table.index;
    VerifyReport::exact("eq23_corrected", nm(index.n, index.m), fifth_moment_corrected(index), table.raw[5].clone())
}

/// `(2mn + m + n)/4` against the direct central moment, and the skewness
/// `<k^3> - 3<k^2><k> + 2<k>^3` against zero.
pub fn verify_variance_skewness(table: &MomentTable) -> Vec<VerifyReport> {
    let index = table.index;
    let (n, m) = (Rat::from(index.n), Rat::from(index.m));
    let closed = (Rat::from(2) * &n * &m + &n + &m) / Rat::from(4);
    let raw = &table.raw;
    let skew = &raw[3] - Rat::from(3) * &raw[2] * &raw[1] + Rat::from(2) * &raw[1] * &raw[1] * &raw[1];
    vec![
        VerifyReport::exact("variance", nm(index.n, index.m), closed, table.central[2].clone()),
        VerifyReport::exact("skewness", nm(index.n, index.m), skew, Rat::zero()),
    ]
}

/// `(2n-2k)!/(n-k)!` continued past `k = n` as `4^(n-k) Gamma(n-k+1/2)/sqrt(pi)`.
fn duplication_ratio(j: i64) -> Rat {
    pow(4, j) * gamma_half(j).coeff()
}

fn gegenbauer_shifted(n: i64, k: i64) -> Rat {
    gegenbauer_zero(k as u64, &(Rat::from(n - k) + Rat::frac(1, 2)))
}

/// The `n = m` second-moment sum in Gegenbauer form, its Gamma rewriting,
/// and the even-index reductions, each against `(3n+1)n`.
pub fn verify_gegenbauer_forms(n: u64) -> Result<Vec<VerifyReport>> {
    if n == 0 {
        return Err(Error::Domain("Gegenbauer forms need n >= 1".into()));
    }
    let ni = n as i64;
    let target = Rat::from((3 * ni + 1) * ni);
    let params = || Params::new().with("n", n);

    let ks = 1..=2 * ni;
    let eq27: Rat = ks
        .clone()
        .map(|k| {
            let c = gegenbauer_shifted(ni, k);
            let r = duplication_ratio(ni - k);
            Rat::from(2) * pow(4, k - ni) * Rat::from(k * k) * fact(k) / fact(2 * ni - k) * &r * &r * &c * &c
        })
        .sum();

    let two_over_pi = PiRadical::new(Rat::from(2), -1, 0);
    let eq29 = radical_sum(ks.map(|k| {
        let c = gegenbauer_shifted(ni, k);
        let coeff = pow(4, ni - k) * Rat::from(k * k) * fact(k) / fact(2 * ni - k) * &c * &c;
        &two_over_pi * &gamma_half(ni - k).square().scale(&coeff)
    }))?;

    let eight_over_pi = PiRadical::new(Rat::from(8), -1, 0);
    let even_term = |mm: i64, squared_factor: Rat| {
        let coeff = pow(4, ni - 2 * mm) * Rat::from(mm * mm) * fact(2 * mm) / fact(2 * ni - 2 * mm) * squared_factor;
        &eight_over_pi * &gamma_half(ni - 2 * mm).square().scale(&coeff)
    };
    let eq31_gegenbauer = radical_sum((1..=ni).map(|mm| {
        let c = gegenbauer_zero(2 * mm as u64, &(Rat::from(ni - 2 * mm) + Rat::frac(1, 2)));
        even_term(mm, &c * &c)
    }))?;
    let eq31_binomial = radical_sum((1..=ni).map(|mm| {
        let b = binomial(&(Rat::from(2 * mm - ni) - Rat::frac(1, 2)), mm);
        even_term(mm, &b * &b)
    }))?;
    let eq31 = radical_sum((1..=ni).map(|mm| {
        let ratio = gamma_half(mm).checked_div(&gamma_half(mm - ni)).expect("gamma at half-integers is nonzero");
        ratio.scale(&(Rat::from(8) * sign(ni + mm) * Rat::from(mm) / (fact(mm - 1) * fact(ni - mm))))
    }))?;

    Ok(vec![
        VerifyReport::exact("eq27", params(), eq27, target.clone()),
        VerifyReport::exact("eq29", params(), rational(eq29, "eq29")?, target.clone()),
        VerifyReport::exact("eq31_gegenbauer", params(), rational(eq31_gegenbauer, "eq31_gegenbauer")?, target.clone()),
        VerifyReport::exact("eq31_binomial", params(), rational(eq31_binomial, "eq31_binomial")?, target.clone()),
        VerifyReport::exact("eq31", params(), rational(eq31, "eq31")?, target),
    ])
}

/// `4 z Gamma(n-1/2) / (sqrt(pi) (n-1)!)`.
fn family_prefactor(ni: i64, z: &Rat) -> Rat {
    Rat::from(4) * z * gamma_half(ni - 1).coeff() / fact(ni - 1)
}

fn family_lhs(ni: i64, order: u32, z: &Rat) -> Result<Rat> {
    let eight_over_pi = PiRadical::new(Rat::from(8), -1, 0);
    let sum = radical_sum((1..=ni).map(|mm| {
        let coeff = Rat::from(mm).pow(order as i64).expect("positive base") * fact(2 * mm) * pow(4, ni - 2 * mm)
            / (fact(2 * ni - 2 * mm) * fact(mm) * fact(mm))
            * z.pow(mm).expect("z nonzero or positive power");
        &eight_over_pi * &gamma_half(ni - mm).square().scale(&coeff)
    }))?;
    rational(sum, "family")
}

fn eq32_lhs(ni: i64, z: &Rat) -> Result<Rat> {
    let eight_over_pi = PiRadical::new(Rat::from(8), -1, 0);
    let sum = radical_sum((1..=ni).map(|mm| {
        let b = binomial(&(Rat::from(2 * mm - ni) - Rat::frac(1, 2)), mm);
        let coeff = pow(4, ni - 2 * mm) * Rat::from(mm * mm) * fact(2 * mm) / fact(2 * ni - 2 * mm)
            * &b
            * &b
            * z.pow(mm).expect("positive power");
        &eight_over_pi * &gamma_half(ni - 2 * mm).square().scale(&coeff)
    }))?;
    rational(sum, "eq32")
}

/// The weighted even-index sums and their generalized hypergeometric
/// closed forms:
///
/// * `eq32` (order 2 only): the binomial form against `3F2(2, 3/2, 1-n; 1, 3/2-n; z)`.
/// * `family`: the `m^k` form against `(k+1)F(k)(3/2, 1-n, 2, ..; 3/2-n, 1, ..; z)`.
/// * `family_cross` (order 2 only): the two left sides against each other.
pub fn verify_family(n: u64, order: u32, z: &Rat) -> Result<Vec<VerifyReport>> {
    if n == 0 || !(1..=6).contains(&order) {
        return Err(Error::Domain(format!("family check needs n >= 1 and order in 1..=6, got n={n}, order={order}")));
    }
    let ni = n as i64;
    let params = || Params::new().with("n", n).with("k", order as u64).with("z", z);
    let extra = (order - 1) as usize;
    let mut tops = vec![Rat::frac(3, 2), Rat::from(1 - ni)];
    tops.extend(std::iter::repeat_n(Rat::from(2), extra));
    let mut bottoms = vec![Rat::frac(3, 2) - Rat::from(ni)];
    bottoms.extend(std::iter::repeat_n(Rat::one(), extra));
    let family_rhs = family_prefactor(ni, z) * pfq_of(&tops, &bottoms, z)?;
    let family = family_lhs(ni, order, z)?;

    let mut out = Vec::new();
    if order == 2 {
        let f32 = pfq_of(&[Rat::from(2), Rat::frac(3, 2), Rat::from(1 - ni)], &[Rat::one(), Rat::frac(3, 2) - Rat::from(ni)], z)?;
        let eq32 = eq32_lhs(ni, z)?;
        out.push(VerifyReport::exact("eq32", Params::new().with("n", n).with("z", z), eq32.clone(), family_prefactor(ni, z) * f32));
        out.push(VerifyReport::exact("family_cross", Params::new().with("n", n).with("z", z), eq32, family.clone()));
    }
    out.push(VerifyReport::exact("family", params(), family, family_rhs));
    Ok(out)
}

/// `P_n^mu(0)` from the derivatives of the Legendre polynomial, with the
/// negative-superscript conversion factor.
pub fn assoc_legendre_by_derivative(n: u64, mu: i64) -> Result<Rat> {
    let order = mu.unsigned_abs();
    if order > n {
        return Err(Error::Domain(format!("|mu| = {order} exceeds n = {n}")));
    }
    let positive = sign(order as i64) * legendre(n as usize).nth_derivative(order as usize).eval(&Rat::zero());
    if mu >= 0 {
        Ok(positive)
    } else {
        let (ni, oi) = (n as i64, order as i64);
        Ok(sign(oi) * fact(ni - oi) / fact(ni + oi) * positive)
    }
}

/// The associated-Legendre forms at `x = 0`:
///
/// * `eq34`: `2 sum_{k>=1} k^2 k!/(2n-k)! [P_n^(n-k)(0)]^2 = (3n+1)n`.
/// * `A1`: `sum_k k!/(2n-k)! [P_n^(n-k)(0)]^2 = 1`.
/// * `A3`: `sum_k k! [P_n^(n-k)(0)]^2 / ((2n-k)! (2n-k+2)) = (2n+2)! [P_n^(-n-2)(0)]^2`.
/// * `A3_closed`: `(2n+2)! [P_n^(-n-2)(0)]^2 = binom(2n+2, n+1) / 4^(n+1)`.
/// * `A4`: the closed form of `P_n^(n-k)(0)` against Legendre derivatives, per `k`.
/// * `A2`: `P_n^(mu+1)(0) = -(n+mu) P_(n-1)^mu(0)`, per `mu`.
pub fn verify_assoc_legendre(n: u64) -> Result<Vec<VerifyReport>> {
    if n == 0 {
        return Err(Error::Domain("associated Legendre sums need n >= 1".into()));
    }
    let ni = n as i64;
    let params = || Params::new().with("n", n);
    let values: Vec<Rat> = (0..=2 * ni).map(|k| assoc_legendre_zero(n, ni - k)).collect::<Result<_>>()?;
    let weighted = |w: &dyn Fn(i64) -> Rat| -> Rat {
        values.iter().enumerate().map(|(k, p)| w(k as i64) * fact(k as i64) / fact(2 * ni - k as i64) * p * p).sum()
    };
    let eq34 = Rat::from(2) * weighted(&|k| Rat::from(k * k));
    let a1 = weighted(&|_| Rat::one());
    let a3 = weighted(&|k| Rat::from(2 * ni - k + 2).recip().expect("positive"));
    let tail = assoc_legendre_zero(n, -ni - 2)?;
    let tail_sq = fact(2 * ni + 2) * &tail * &tail;

    let mut out = vec![
        VerifyReport::exact("eq34", params(), eq34, Rat::from((3 * ni + 1) * ni)),
        VerifyReport::exact("A1", params(), a1, Rat::one()),
        VerifyReport::exact("A3", params(), a3, tail_sq.clone()),
        VerifyReport::exact("A3_closed", params(), tail_sq, binom_int(2 * ni + 2, ni + 1) / pow(4, ni + 1)),
    ];
    for (k, value) in values.iter().enumerate() {
        let mu = ni - k as i64;
        out.push(VerifyReport::exact(
            "A4",
            Params::new().with("n", n).with("k", k as u64),
            value.clone(),
            assoc_legendre_by_derivative(n, mu)?,
        ));
    }
    for mu in -(ni - 1)..=(ni - 1) {
        let lhs = assoc_legendre_zero(n, mu + 1)?;
        let rhs = -Rat::from(ni + mu) * assoc_legendre_zero(n - 1, mu)?;
        out.push(VerifyReport::exact("A2", Params::new().with("n", n).with("mu", mu), lhs, rhs));
    }
    Ok(out)
}

/// `sum_k k! (-4)^k / (-a-b)_k [P_k^(a-k, b-k)(0)]^2 = 2^(a+b) / binom(a+b, a)`.
pub fn verify_genfun_t4(a: u64, b: u64) -> VerifyReport {
    let total = a + b;
    let neg_total = Rat::from(-(total as i64));
    let lhs: Rat = (0..=total)
        .map(|k| {
            let p = jacobi_shifted_zero(k, a, b);
            fact(k as i64) * pow(-4, k as i64) / pochhammer(&neg_total, k) * &p * &p
        })
        .sum();
    let rhs = pow(2, total as i64) / binom_int(total as i64, a as i64);
    VerifyReport::exact("eq37", Params::new().with("a", a).with("b", b), lhs, rhs)
}

/// Bilinear generating function as a power series in `t`: the left side's
/// coefficients `k!/(-a-b)_k P_k(x) P_k(y)` against the expansion of
/// `A^a B^b 2F1(-a, -b; -a-b; -t/(AB))`, `A = 1 - (x+1)(y+1)t/4`,
/// `B = 1 - (x-1)(y-1)t/4`, through `t^(a+b)`.
///
/// The report carries the first mismatching coefficient, or `t^(a+b)` when
/// all agree, with its index as parameter `k`.
pub fn verify_genfun_series(a: u64, b: u64, x: &Rat, y: &Rat) -> Result<VerifyReport> {
    let total = a + b;
    let order = total as usize + 1;
    let t = FSeries::variable(order);
    let one = FSeries::constant(Rat::one(), order);
    let quarter = Rat::frac(1, 4);
    let ca = (x + Rat::one()) * (y + Rat::one()) * &quarter;
    let cb = (x - Rat::one()) * (y - Rat::one()) * &quarter;
    let big_a = one.sub(&t.scalar_mul(&ca));
    let big_b = one.sub(&t.scalar_mul(&cb));
    let prefactor = big_a.int_pow(a as i64)?.mul(&big_b.int_pow(b as i64)?);
    let inner = t.scalar_mul(&-Rat::one()).mul(&big_a.mul(&big_b).inverse()?);
    let (ai, bi) = (a as i64, b as i64);
    let gauss = HyperSpec::gauss(Rat::from(-ai), Rat::from(-bi), Rat::from(-ai - bi), Rat::zero())?;
    let rhs = prefactor.mul(&FSeries::compose_poly(&gauss.poly_coeffs(), &inner)?);

    let neg_total = Rat::from(-(total as i64));
    let lhs_coeff = |k: u64| fact(k as i64) / pochhammer(&neg_total, k) * jacobi_shifted_at(k, a, b, x) * jacobi_shifted_at(k, a, b, y);
    let mut pick = (total, lhs_coeff(total), rhs.coefficient(total as usize)?.clone());
    for k in 0..=total {
        let l = lhs_coeff(k);
        let r = rhs.coefficient(k as usize)?;
        if &l != r {
            pick = (k, l, r.clone());
            break;
        }
    }
    let params = Params::new().with("a", a).with("b", b).with("x", x).with("y", y).with("k", pick.0);
    Ok(VerifyReport::exact("eq35", params, pick.1, pick.2))
}

/// First moment through the generating function at `x = y = 0`:
/// `f(t) = sum_k (-t)^k / binom(a+b, k) [P_k(0)]^2`, differentiated at
/// `t = -4`.
///
/// * `eq38`: `binom(a+b, a) / 2^(a+b) (-4) f'(-4) = (a+b)/2`.
/// * `eq39`: `f'(-4) = -(1/4)(a+b) 2^(a+b-1) / binom(a+b, a)`.
pub fn verify_first_moment_route(a: u64, b: u64) -> Result<Vec<VerifyReport>> {
    let total = a + b;
    if total == 0 {
        return Err(Error::Domain("first-moment route needs a + b >= 1".into()));
    }
    let ti = total as i64;
    let f_prime: Rat = (1..=total)
        .map(|k| {
            let ki = k as i64;
            let p = jacobi_shifted_zero(k, a, b);
            // d/dt (-t)^k = -k (-t)^(k-1), at t = -4
            -Rat::from(ki) * pow(4, ki - 1) / binom_int(ti, ki) * &p * &p
        })
        .sum();
    let binom = binom_int(ti, a as i64);
    let moment = &binom / pow(2, ti) * Rat::from(-4) * &f_prime;
    let params = || Params::new().with("a", a).with("b", b);
    let intermediate = Rat::frac(-1, 4) * Rat::from(ti) * pow(2, ti - 1) / &binom;
    Ok(vec![
        VerifyReport::exact("eq38", params(), moment, Rat::from(ti) / Rat::from(2)),
        VerifyReport::exact("eq39", params(), f_prime, intermediate),
    ])
}

/// All moment-derived reports for one distribution: the six published
/// closed forms, the corrected fifth moment, variance and skewness.
pub fn moment_reports(dist: &CoeffDist) -> Result<Vec<VerifyReport>> {
    let table = moments_direct(dist, MAX_MOMENT)?;
    let mut out = (1..=MAX_MOMENT).map(|j| moment_report(&table, j)).collect::<Result<Vec<_>>>()?;
    out.push(verify_fifth_moment_corrected(&table));
    out.extend(verify_variance_skewness(&table));
    Ok(out)
}
