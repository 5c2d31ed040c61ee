//! Terminating generalized hypergeometric series and the reductions of
//! the 3F2 / 4F3 sums to Gauss functions.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{binom_int, factorial, gamma_half, pochhammer, Rat};
use crate::orthopoly::legendre;
use crate::report::{Params, VerifyReport};

/// Parameters of a terminating `pFq(tops; bottoms; argument)`.
///
/// Construction requires a nonpositive-integer top (the series stops at
/// `K`, the smallest such magnitude) and rejects any bottom whose
/// Pochhammer symbol vanishes at or before `K`.
#[derive(Clone, PartialEq, Eq)]
pub struct HyperSpec {
    tops: Vec<Rat>,
    bottoms: Vec<Rat>,
    argument: Rat,
    length: u64,
}

impl HyperSpec {
    pub fn new(tops: Vec<Rat>, bottoms: Vec<Rat>, argument: Rat) -> Result<Self> {
        let length = tops
            .iter()
            .filter_map(Rat::nonpositive_integer)
            .min()
            .ok_or_else(|| Error::Degenerate(format!("no terminating top parameter in {tops:?}")))?;
        // (b)_k = 0 as soon as k > |b| for a nonpositive integer b
        if let Some(b) = bottoms.iter().find(|b| b.nonpositive_integer().is_some_and(|mag| mag < length)) {
            return Err(Error::Degenerate(format!("bottom parameter {b} vanishes before the series terminates at k = {length}")));
        }
        Ok(HyperSpec { tops, bottoms, argument, length })
    }

    /// Shorthand for `2F1(a, b; c; z)`.
    pub fn gauss(a: Rat, b: Rat, c: Rat, z: Rat) -> Result<Self> {
        HyperSpec::new(vec![a, b], vec![c], z)
    }

    pub fn tops(&self) -> &[Rat] {
        &self.tops
    }

    pub fn bottoms(&self) -> &[Rat] {
        &self.bottoms
    }

    pub fn argument(&self) -> &Rat {
        &self.argument
    }

    /// Index of the last term.
    pub fn length(&self) -> u64 {
        self.length
    }

    /// Coefficients `c_k` of `z^k`, `k = 0..=K`.
    pub fn poly_coeffs(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.length as usize + 1);
        let mut term = Rat::one();
        out.push(term.clone());
        for k in 0..self.length {
            let kr = Rat::from(k);
            let mut num = Rat::one();
            for a in &self.tops {
                num *= a + &kr;
            }
            let mut den = Rat::from(k + 1);
            for b in &self.bottoms {
                den *= b + &kr;
            }
            term = term * num / den;
            out.push(term.clone());
        }
        out
    }

    /// `d/dz pFq = (prod a / prod b) pFq(a+1; b+1; z)`, returned as the
    /// prefactor and shifted spec. `None` when the prefactor vanishes (a
    /// zero top: the function is the constant 1).
    pub fn derivative(&self) -> Result<Option<(Rat, HyperSpec)>> {
        let num: Rat = self.tops.iter().cloned().product();
        if num.is_zero() {
            return Ok(None);
        }
        let den: Rat = self.bottoms.iter().cloned().product();
        let factor = num.checked_div(&den)?;
        let one = Rat::one();
        let shifted = HyperSpec::new(
            self.tops.iter().map(|a| a + &one).collect(),
            self.bottoms.iter().map(|b| b + &one).collect(),
            self.argument.clone(),
        )?;
        Ok(Some((factor, shifted)))
    }
}

impl fmt::Debug for HyperSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rat]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "{}F{}({}; {}; {})", self.tops.len(), self.bottoms.len(), join(&self.tops), join(&self.bottoms), self.argument)
    }
}

/// Exact value of the terminating series.
pub fn pfq(spec: &HyperSpec) -> Rat {
    spec.poly_coeffs().iter().rev().fold(Rat::zero(), |acc, c| acc * &spec.argument + c)
}

/// Convenience: builds the spec and evaluates it.
pub fn pfq_of(tops: &[Rat], bottoms: &[Rat], z: &Rat) -> Result<Rat> {
    Ok(pfq(&HyperSpec::new(tops.to_vec(), bottoms.to_vec(), z.clone())?))
}

/// `2F1(-a, -b; -a-b; 1)`, checked against `1 / binom(a+b, a)`.
pub fn gauss_unit(a: u64, b: u64) -> Result<Rat> {
    let (a, b) = (a as i64, b as i64);
    let v = pfq(&HyperSpec::gauss(Rat::from(-a), Rat::from(-b), Rat::from(-a - b), Rat::one())?);
    let closed = binom_int(a + b, a).recip()?;
    if v != closed {
        return Err(Error::Invariant(format!("2F1(-{a},-{b};-{};1) = {v}, expected {closed}", a + b)));
    }
    Ok(v)
}

fn half(n: i64) -> Rat {
    Rat::frac(n, 2)
}

/// The `(3/2)(n-1)/(n-3/2)`-style prefactors `prod_{i<j} (n-1-i)/(n-3/2-i)`.
fn ratio_chain(n: i64, j: i64) -> Rat {
    (0..j).map(|i| Rat::from(n - 1 - i) / (Rat::from(n - 1 - i) - half(1))).product()
}

/// `2F1(3/2 + j, 1 - n + j; 3/2 - n + j; z)`, the building block of the
/// reductions. Only evaluated when its prefactor is nonzero (`j < n`).
fn gauss_block(n: i64, j: i64, z: &Rat) -> Result<Rat> {
    pfq_of(&[half(3) + Rat::from(j), Rat::from(1 - n + j)], &[half(3) - Rat::from(n) + Rat::from(j)], z)
}

fn f32_lhs(n: i64, z: &Rat) -> Result<Rat> {
    pfq_of(&[Rat::from(2), half(3), Rat::from(1 - n)], &[Rat::one(), half(3) - Rat::from(n)], z)
}

/// Sum of `weights[j] * chain_j * z^j * block_j` over the Gauss blocks.
fn gauss_decomposition(n: i64, z: &Rat, weights: &[Rat]) -> Result<Rat> {
    let mut acc = Rat::zero();
    for (j, w) in weights.iter().enumerate() {
        let j = j as i64;
        // the chain contains the factor (n-1-j') for j' < j, zero once j >= n
        if j >= n {
            break;
        }
        acc += w * ratio_chain(n, j) * z.pow(j)? * gauss_block(n, j, z)?;
    }
    Ok(acc)
}

/// `3F2(2, 3/2, 1-n; 1, 3/2-n; z) = 2F1(3/2, 1-n; 3/2-n; z)
///  + (3/2)(n-1)/(n-3/2) z 2F1(5/2, 2-n; 5/2-n; z)`.
pub fn f32_reduce_check(n: u64, z: &Rat) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::Domain("3F2 reduction needs n >= 1".into()));
    }
    let n_i = n as i64;
    let lhs = f32_lhs(n_i, z)?;
    let rhs = gauss_decomposition(n_i, z, &[Rat::one(), half(3)])?;
    Ok(VerifyReport::exact("f32_reduce", Params::new().with("n", n).with("z", z), lhs, rhs))
}

/// `3F2(2, 3/2, 1-n; 1, 3/2-n; 1) = (n!/sqrt(pi)) (-1)^(n-1) (3n+1)/4 Gamma(3/2-n)`.
pub fn f32_unit_closed_form(n: u64) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::Domain("3F2 closed form needs n >= 1".into()));
    }
    let n_i = n as i64;
    let lhs = f32_lhs(n_i, &Rat::one())?;
    // Gamma(3/2 - n) / sqrt(pi) is the rational coefficient of gamma_half(1 - n)
    let gamma_ratio = gamma_half(1 - n_i).coeff().clone();
    let sign = if (n_i - 1) % 2 == 0 { Rat::one() } else { -Rat::one() };
    let rhs = factorial(n_i)? * sign * Rat::from(3 * n_i + 1) / Rat::from(4) * gamma_ratio;
    Ok(VerifyReport::exact("f32_unit", Params::new().with("n", n), lhs, rhs))
}

/// `4F3(2, 2, 3/2, 1-n; 1, 1, 3/2-n; z)` as the three-term Gauss sum with
/// weights 1, 9/2, 15/4.
pub fn f43_reduce_check(n: u64, z: &Rat) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::Domain("4F3 reduction needs n >= 1".into()));
    }
    let n_i = n as i64;
    let lhs = pfq_of(
        &[Rat::from(2), Rat::from(2), half(3), Rat::from(1 - n_i)],
        &[Rat::one(), Rat::one(), half(3) - Rat::from(n_i)],
        z,
    )?;
    let rhs = gauss_decomposition(n_i, z, &[Rat::one(), half(9), Rat::frac(15, 4)])?;
    Ok(VerifyReport::exact("f43_reduce", Params::new().with("n", n).with("z", z), lhs, rhs))
}

/// `2F1(1/2, -n; 1/2-n; z) = n! z^(n/2) / (1/2)_n P_n((1+z)/(2 sqrt z))`
/// for `z` a positive rational square.
pub fn legendre_2f1_check(n: u64, z: &Rat) -> Result<VerifyReport> {
    let root = match z.exact_sqrt() {
        Some(r) if !r.is_zero() => r,
        _ => return Err(Error::Domain(format!("z = {z} is not a positive rational square"))),
    };
    let n_i = n as i64;
    let lhs = pfq_of(&[half(1), Rat::from(-n_i)], &[half(1) - Rat::from(n_i)], z)?;
    let x = (Rat::one() + z) / (root.clone() * Rat::from(2));
    let rhs = factorial(n_i)? * root.pow(n_i)? / pochhammer(&half(1), n) * legendre(n as usize).eval(&x);
    Ok(VerifyReport::exact("legendre_2f1", Params::new().with("n", n).with("z", z), lhs, rhs))
}
