//! Moments, variance, skewness, Shannon and Renyi entropies and purity of
//! the distribution `p_k = b^2(n, m, k)`.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exactnum::{binom_int, factorial, Rat};
use crate::modecoeff::{distribution, CoeffDist, ModeIndex};
use crate::report::{Params, VerifyReport};

/// Highest moment order carried by a [`MomentTable`].
pub const MAX_MOMENT: usize = 6;

/// Tolerance for the floating-point entropy identities.
pub const ENTROPY_TOLERANCE: f64 = 1e-12;

/// Raw moments `<k^j>` and central moments `<(k - <k>)^j>`, `j = 0..=order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentTable {
    pub index: ModeIndex,
    pub raw: Vec<Rat>,
    pub central: Vec<Rat>,
}

impl MomentTable {
    pub fn mean(&self) -> &Rat {
        &self.raw[1]
    }
}

/// Direct summation `sum_k p_k k^j` for `j <= max_order`.
pub fn moments_direct(dist: &CoeffDist, max_order: usize) -> Result<MomentTable> {
    if max_order == 0 || max_order > MAX_MOMENT {
        return Err(domain(format!("moment order {max_order} outside 1..={MAX_MOMENT}")));
    }
    let mut raw = vec![Rat::zero(); max_order + 1];
    for (k, p) in dist.probs().iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let kr = Rat::from(k);
        let mut term = p.clone();
        for slot in raw.iter_mut() {
            *slot += &term;
            term *= &kr;
        }
    }
    let mean = raw[1].clone();
    let central = (0..=max_order)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let shift = (-&mean).pow((j - i) as i64).expect("nonnegative power");
                    binom_int(j as i64, i as i64) * &raw[i] * shift
                })
                .sum()
        })
        .collect();
    Ok(MomentTable { index: dist.index(), raw, central })
}

fn poly(terms: &[(i64, i64, u32, u32)], n: &Rat, m: &Rat) -> Rat {
    terms
        .iter()
        .map(|&(num, den, en, em)| {
            Rat::frac(num, den) * n.pow(en as i64).expect("small power") * m.pow(em as i64).expect("small power")
        })
        .sum()
}

/// Symmetric sum `c (n^a m^b + n^b m^a)`, or `c n^a m^a` when `a = b`.
fn sym(num: i64, den: i64, a: u32, b: u32) -> Vec<(i64, i64, u32, u32)> {
    if a == b {
        vec![(num, den, a, b)]
    } else {
        vec![(num, den, a, b), (num, den, b, a)]
    }
}

fn printed_terms(j: usize) -> (Vec<(i64, i64, u32, u32)>, i64) {
    let spec: (&[(i64, i64, u32, u32)], i64) = match j {
        1 => (&[(1, 2, 1, 0)], 1),
        2 => (&[(1, 2, 2, 0), (2, 1, 1, 1), (1, 2, 1, 0)], 2),
        3 => (&[(1, 2, 3, 0), (9, 2, 2, 1), (3, 2, 2, 0), (3, 1, 1, 1)], 4),
        4 => (
            &[(1, 8, 4, 0), (2, 1, 3, 1), (9, 2, 2, 2), (3, 4, 3, 0), (3, 1, 2, 1), (3, 8, 2, 0), (-1, 2, 1, 1), (-1, 4, 1, 0)],
            2,
        ),
        5 => (
            &[
                (1, 8, 5, 0),
                (25, 8, 4, 1),
                (25, 2, 3, 2),
                (5, 4, 4, 0),
                (35, 4, 3, 1),
                (15, 1, 2, 2),
                (15, 8, 3, 0),
                (-5, 8, 2, 1),
                (-5, 4, 2, 0),
                (5, 2, 1, 1),
            ],
            4,
        ),
        6 => (
            &[
                (1, 16, 6, 0),
                (9, 4, 5, 1),
                (225, 16, 4, 2),
                (25, 1, 3, 3),
                (225, 8, 3, 2),
                (15, 16, 5, 0),
                (165, 16, 4, 1),
                (45, 16, 4, 0),
                (35, 8, 3, 1),
                (-45, 8, 2, 2),
                (-15, 16, 3, 0),
                (-135, 16, 2, 1),
                (-15, 8, 2, 0),
                (13, 4, 1, 1),
                (1, 1, 1, 0),
            ],
            4,
        ),
        _ => unreachable!("checked by caller"),
    };
    let terms = spec.0.iter().flat_map(|&(num, den, a, b)| sym(num, den, a, b)).collect();
    (terms, spec.1)
}

/// The published closed form for `<k^j>`, `1 <= j <= 6`, exactly as
/// printed, including the sign slip in the last term of the `j = 5` form.
pub fn moment_closed_form(index: ModeIndex, j: usize) -> Result<Rat> {
    if !(1..=MAX_MOMENT).contains(&j) {
        return Err(domain(format!("moment order {j} outside 1..={MAX_MOMENT}")));
    }
    let (terms, prefactor) = printed_terms(j);
    let (n, m) = (Rat::from(index.n), Rat::from(index.m));
    Ok(poly(&terms, &n, &m) / Rat::from(prefactor))
}

/// The `j = 5` closed form with its final term read as `-(5/2) mn`.
pub fn fifth_moment_corrected(index: ModeIndex) -> Rat {
    let printed = moment_closed_form(index, 5).expect("order in range");
    // printed RHS carries +(5/2)mn over a prefactor of 4
    printed - Rat::frac(5, 4) * Rat::from(index.n) * Rat::from(index.m)
}

/// `(2mn + m + n) / 4`, confirmed against direct summation.
pub fn variance(index: ModeIndex) -> Result<Rat> {
    let (n, m) = (Rat::from(index.n), Rat::from(index.m));
    let closed = (Rat::from(2) * &n * &m + &n + &m) / Rat::from(4);
    let table = moments_direct(&distribution(index), 2)?;
    if table.central[2] != closed {
        return Err(Error::Invariant(format!("variance of {index:?}: direct {} vs closed form {closed}", table.central[2])));
    }
    Ok(closed)
}

/// `<k^3> - 3<k^2><k> + 2<k>^3`, always zero by the symmetry of `p_k`.
pub fn skewness(index: ModeIndex) -> Rat {
    let t = moments_direct(&distribution(index), 3).expect("order in range");
    let three = Rat::from(3);
    let two = Rat::from(2);
    &t.raw[3] - three * &t.raw[2] * &t.raw[1] + two * t.raw[1].pow(3).expect("small power")
}

/// An entropy in nats.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
pub struct EntropyValue {
    pub nats: f64,
}

/// `-sum p_k ln p_k`, skipping zero entries.
pub fn shannon_entropy(dist: &CoeffDist) -> EntropyValue {
    let nats = -dist
        .probs()
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.to_f64() * p.ln().expect("positive"))
        .sum::<f64>();
    EntropyValue { nats: nats.max(0.0) }
}

/// `ln(sum p_k^alpha) / (1 - alpha)`; the inner sum is exact for integer
/// `alpha`.
pub fn renyi_entropy(dist: &CoeffDist, alpha: f64) -> Result<EntropyValue> {
    if !(alpha > 0.0) || alpha == 1.0 || !alpha.is_finite() {
        return Err(domain(format!("Renyi order must be positive, finite and not 1, got {alpha}")));
    }
    let log_sum = if alpha.fract() == 0.0 && alpha <= 64.0 {
        let e = alpha as i64;
        let s: Rat = dist.probs().iter().map(|p| p.pow(e).expect("positive power")).sum();
        s.ln()?
    } else {
        dist.probs()
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| (alpha * p.ln().expect("positive")).exp())
            .sum::<f64>()
            .ln()
    };
    Ok(EntropyValue { nats: (log_sum / (1.0 - alpha)).max(0.0) })
}

/// `mu = sum p_k^2`.
pub fn purity(dist: &CoeffDist) -> Rat {
    dist.probs().iter().map(|p| p * p).sum()
}

/// Checks the expansion of the entropy through the Jacobi form of `b`:
///
/// * `eq17`: `(n+m) ln 2 + ln n! + ln m! - sum p_k ln(p_k 2^(n+m) n! m!)`
///   reproduces the entropy (floating point).
/// * `eq18_cancellation`: `sum p_k k = (n+m)/2`, so the `(n+m) ln 2` term cancels (exact).
/// * `eq19`: `sum p_k ln (n+m-k)! = sum p_k ln k!` (floating point).
pub fn entropy_decomposition_check(index: ModeIndex) -> Vec<VerifyReport> {
    let dist = distribution(index);
    let params = || Params::new().with("n", index.n).with("m", index.m);
    let (n, m) = (index.n as i64, index.m as i64);
    let total = index.total() as i64;
    let fact = |k: i64| factorial(k).expect("nonnegative");
    let scale = Rat::from(2).pow(total).expect("small power") * fact(n) * fact(m);

    let nonzero = || dist.probs().iter().enumerate().filter(|(_, p)| !p.is_zero());
    let shannon = shannon_entropy(&dist).nats;
    let expanded = total as f64 * std::f64::consts::LN_2 + fact(n).ln().expect("positive") + fact(m).ln().expect("positive")
        - nonzero().map(|(_, p)| p.to_f64() * (p * &scale).ln().expect("positive")).sum::<f64>();

    let mean: Rat = nonzero().map(|(k, p)| p * Rat::from(k)).sum();

    let ln_fact = |k: i64| fact(k).ln().expect("positive");
    let left: f64 = nonzero().map(|(k, p)| p.to_f64() * ln_fact(total - k as i64)).sum();
    let right: f64 = nonzero().map(|(k, p)| p.to_f64() * ln_fact(k as i64)).sum();

    vec![
        VerifyReport::approx("eq17", params(), expanded, shannon, ENTROPY_TOLERANCE),
        VerifyReport::exact("eq18_cancellation", params(), mean, Rat::from(total) / Rat::from(2)),
        VerifyReport::approx("eq19", params(), left, right, ENTROPY_TOLERANCE),
    ]
}
