//! Connection coefficients `b(n, m, k)` expressing a Laguerre-Gaussian
//! mode as a sum of Hermite-Gaussian modes, computed three ways, and the
//! probability distribution `b^2` they induce.
//!
//! The coefficient-extraction route is canonical; the hypergeometric and
//! Jacobi routes exist to cross-check it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, Rat, SqrtRat};
use crate::hyper::{pfq, HyperSpec};
use crate::orthopoly::{generating_coeff, jacobi_shifted_zero};
use crate::report::csv_table;

/// Mode orders `(n, m)` of an LG mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModeIndex {
    pub n: u64,
    pub m: u64,
}

impl ModeIndex {
    pub fn new(n: u64, m: u64) -> Self {
        ModeIndex { n, m }
    }

    /// `n + m`, the largest HG index that appears.
    pub fn total(&self) -> u64 {
        self.n + self.m
    }

    pub fn swapped(&self) -> Self {
        ModeIndex { n: self.m, m: self.n }
    }
}

/// Exact `b(n, m, k)` together with its square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BCoeff {
    value: SqrtRat,
    squared: Rat,
}

impl BCoeff {
    pub fn new(value: SqrtRat) -> Self {
        let squared = value.square();
        BCoeff { value, squared }
    }

    pub fn value(&self) -> &SqrtRat {
        &self.value
    }

    pub fn squared(&self) -> &Rat {
        &self.squared
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// Coefficient of `t^k` in `(1-t)^n (1+t)^m`.
pub fn poly_coeff(n: u64, m: u64, k: i64) -> Rat {
    generating_coeff(n, m, k)
}

fn check_k(index: ModeIndex, k: u64) -> Result<()> {
    if k > index.total() {
        return Err(Error::Domain(format!("k = {k} outside 0..={} for {index:?}", index.total())));
    }
    Ok(())
}

fn two_pow(e: u64) -> Rat {
    Rat::from(2).pow(e as i64).expect("small power")
}

fn fact(n: u64) -> Rat {
    factorial(n as i64).expect("nonnegative")
}

/// `(n+m-k)! k! / (2^(n+m) n! m!)`, the square of the common prefactor.
fn prefactor_sq(n: u64, m: u64, k: u64) -> Rat {
    fact(n + m - k) * fact(k) / (two_pow(n + m) * fact(n) * fact(m))
}

/// `b = sqrt((n+m-k)! k! / (2^(n+m) n! m!)) c_k`.
pub fn b_derivative_route(n: u64, m: u64, k: u64) -> Result<BCoeff> {
    check_k(ModeIndex::new(n, m), k)?;
    let root = SqrtRat::sqrt_of(prefactor_sq(n, m, k))?;
    Ok(BCoeff::new(&root * &SqrtRat::from_rat(&poly_coeff(n, m, k as i64))))
}

/// Gauss-function forms of `b`.
///
/// For `k <= n`:
/// `sqrt((n+m-k)! n! / (2^(n+m) k! m!)) (-1)^k/(n-k)! 2F1(-k, -m; n-k+1; -1)`.
/// For `n < k <= m`, the product-rule form with the roles of the factors
/// exchanged: `sqrt((n+m-k)! m! / (2^(n+m) n! k!)) / (m-k)! 2F1(-k, -n; m-k+1; -1)`.
/// When `k` exceeds both `n` and `m` both forms degenerate and the route
/// reports itself unavailable.
pub fn b_hyper_route(n: u64, m: u64, k: u64) -> Result<BCoeff> {
    check_k(ModeIndex::new(n, m), k)?;
    let (ni, mi, ki) = (n as i64, m as i64, k as i64);
    if k <= n {
        let root = SqrtRat::sqrt_of(fact(n + m - k) * fact(n) / (two_pow(n + m) * fact(k) * fact(m)))?;
        let f = pfq(&HyperSpec::gauss(Rat::from(-ki), Rat::from(-mi), Rat::from(ni - ki + 1), Rat::from(-1))?);
        let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
        let factor = sign * f / fact(n - k);
        Ok(BCoeff::new(&root * &SqrtRat::from_rat(&factor)))
    } else if k <= m {
        let root = SqrtRat::sqrt_of(fact(n + m - k) * fact(m) / (two_pow(n + m) * fact(n) * fact(k)))?;
        let f = pfq(&HyperSpec::gauss(Rat::from(-ki), Rat::from(-ni), Rat::from(mi - ki + 1), Rat::from(-1))?);
        let factor = f / fact(m - k);
        Ok(BCoeff::new(&root * &SqrtRat::from_rat(&factor)))
    } else {
        Err(Error::RouteUnavailable(format!("no Gauss-function form for b({n},{m},{k})")))
    }
}

/// `b = sqrt((n+m-k)! k! / (2^(n+m) n! m!)) 2^k (-1)^k P_k^(n-k, m-k)(0)`.
pub fn b_jacobi_route(n: u64, m: u64, k: u64) -> Result<BCoeff> {
    check_k(ModeIndex::new(n, m), k)?;
    let root = SqrtRat::sqrt_of(prefactor_sq(n, m, k))?;
    let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
    let factor = sign * two_pow(k) * jacobi_shifted_zero(k, n, m);
    Ok(BCoeff::new(&root * &SqrtRat::from_rat(&factor)))
}

/// All `b(n, m, k)`, `k = 0..=n+m`, by the canonical route.
pub fn coefficients(index: ModeIndex) -> Vec<BCoeff> {
    (0..=index.total())
        .map(|k| b_derivative_route(index.n, index.m, k).expect("k in range"))
        .collect()
}

/// The distribution `p_k = b^2(n, m, k)`.
///
/// Normalization, the `k <-> n+m-k` symmetry, nonnegativity and the
/// vanishing of odd entries when `n = m` are checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffDist {
    #[serde(flatten)]
    index: ModeIndex,
    probs: Vec<Rat>,
}

impl CoeffDist {
    pub fn new(index: ModeIndex, probs: Vec<Rat>) -> Result<Self> {
        let len = index.total() as usize + 1;
        if probs.len() != len {
            return Err(Error::Invariant(format!("{} probabilities for {index:?}, expected {len}", probs.len())));
        }
        let total: Rat = probs.iter().sum();
        if !total.is_one() {
            return Err(Error::Invariant(format!("probabilities for {index:?} sum to {total}")));
        }
        if let Some(p) = probs.iter().find(|p| p.is_negative()) {
            return Err(Error::Invariant(format!("negative probability {p} for {index:?}")));
        }
        if (0..len).any(|k| probs[k] != probs[len - 1 - k]) {
            return Err(Error::Invariant(format!("distribution for {index:?} is not symmetric")));
        }
        if index.n == index.m && probs.iter().skip(1).step_by(2).any(|p| !p.is_zero()) {
            return Err(Error::Invariant(format!("odd entries of {index:?} do not vanish")));
        }
        Ok(CoeffDist { index, probs })
    }

    pub fn index(&self) -> ModeIndex {
        self.index
    }

    pub fn probs(&self) -> &[Rat] {
        &self.probs
    }

    pub fn probs_f64(&self) -> Vec<f64> {
        self.probs.iter().map(Rat::to_f64).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// CSV with columns `k, b2_exact, b2_float`.
    pub fn to_csv(&self) -> String {
        let rows = self.probs.iter().enumerate().map(|(k, p)| vec![k.to_string(), p.to_string(), p.to_f64().to_string()]);
        csv_table(&["k", "b2_exact", "b2_float"], rows)
    }
}

/// `b^2(n, m, k)` for all `k` via the canonical route.
pub fn distribution(index: ModeIndex) -> CoeffDist {
    let probs = coefficients(index).into_iter().map(|b| b.squared).collect();
    CoeffDist::new(index, probs).expect("coefficient distribution invariants are theorems")
}
