//! Factorials, Pochhammer symbols and Gamma at half-integers.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{domain, Result};
use crate::exactnum::{PiRadical, Rat};

pub fn factorial(n: i64) -> Result<Rat> {
    if n < 0 {
        return Err(domain(format!("factorial of negative integer {n}")));
    }
    Ok(Rat::from_bigint(factorial_big(n as u64)))
}

pub(crate) fn factorial_big(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n!!` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<Rat> {
    if n < -1 {
        return Err(domain(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(Rat::from_bigint(acc))
}

/// Rising factorial `z (z+1) ... (z+n-1)`; empty product for `n = 0`.
pub fn pochhammer(z: &Rat, n: u64) -> Rat {
    let mut acc = Rat::one();
    let mut term = z.clone();
    let one = Rat::one();
    for _ in 0..n {
        if term.is_zero() {
            return Rat::zero();
        }
        acc *= &term;
        term += &one;
    }
    acc
}

/// Binomial coefficient with a rational upper argument,
/// `binom(z, j) = z (z-1) ... (z-j+1) / j!`.
pub fn binomial(z: &Rat, j: i64) -> Rat {
    if j < 0 {
        return Rat::zero();
    }
    let top = pochhammer(&(z - Rat::from(j) + Rat::one()), j as u64);
    top / Rat::from_bigint(factorial_big(j as u64))
}

/// Integer binomial `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binom_int(n: i64, k: i64) -> Rat {
    Rat::from_bigint(binom_big(n, k))
}

/// `binom(n, k)` over the integers; each partial product `binom(n, i+1)` is
/// an integer, so the division is exact.
pub(crate) fn binom_big(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `Gamma(k + 1/2)` as an exact multiple of `sqrt(pi)`.
///
/// For `k >= 0` the coefficient is `(2k-1)!!/2^k`; negative `k` goes
/// through the reflection formula, which at half-integers reads
/// `Gamma(1/2 - j) = (-1)^j pi / Gamma(j + 1/2)`.
pub fn gamma_half(k: i64) -> PiRadical {
    if k >= 0 {
        let coeff = double_factorial(2 * k - 1).expect("k >= 0") / Rat::from(2).pow(k).expect("small power");
        PiRadical::sqrt_pi_times(coeff)
    } else {
        let j = -k;
        let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
        let positive = gamma_half(j);
        PiRadical::pi_pow(1).scale(&sign).checked_div(&positive).expect("Gamma(j+1/2) is nonzero")
    }
}
