//! Exact orthogonal polynomials: Hermite, Laguerre, Jacobi, Gegenbauer,
//! Legendre, plus the special values at `x = 0` the mode coefficients need.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{domain, Result};
use crate::exactnum::binom_big;
use crate::exactnum::{binom_int, binomial, factorial, gamma_half, pochhammer, Rat};

/// Dense polynomial over the rationals, coefficient `i` multiplying `x^i`.
/// Trailing zeros are trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        PolyQ::new(vec![c])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        PolyQ::new(v.iter().map(|&c| Rat::from(c)).collect())
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: Rat, c1: Rat) -> Self {
        PolyQ::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation on doubles after converting each coefficient.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn add(&self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }

    pub fn sub(&self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }

    pub fn scale(&self, c: &Rat) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }

    pub fn pow(&self, e: u32) -> PolyQ {
        (0..e).fold(PolyQ::constant(Rat::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from(i as u64)).collect())
    }

    pub fn nth_derivative(&self, k: usize) -> PolyQ {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// `p(q(x))`.
    pub fn compose(&self, inner: &PolyQ) -> PolyQ {
        self.coeffs.iter().rev().fold(PolyQ::zero(), |acc, c| acc.mul(inner).add(&PolyQ::constant(c.clone())))
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})x^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn x_poly() -> PolyQ {
    PolyQ::from_ints(&[0, 1])
}

/// Physicists' Hermite polynomial `H_n`.
pub fn hermite(n: usize) -> PolyQ {
    let mut prev = PolyQ::from_ints(&[1]);
    if n == 0 {
        return prev;
    }
    let mut cur = PolyQ::from_ints(&[0, 2]);
    let two_x = PolyQ::from_ints(&[0, 2]);
    for k in 1..n {
        let next = two_x.mul(&cur).sub(&prev.scale(&Rat::from(2 * k as u64)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized Laguerre polynomial from its explicit sum
/// `sum_j (-1)^j binom(n+alpha, n-j) x^j / j!`.
pub fn laguerre(n: usize, alpha: &Rat) -> PolyQ {
    let top = Rat::from(n as u64) + alpha;
    PolyQ::new(
        (0..=n as i64)
            .map(|j| {
                let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
                sign * binomial(&top, n as i64 - j) / factorial(j).expect("j >= 0")
            })
            .collect(),
    )
}

/// Jacobi polynomial from the finite sum
/// `sum_s binom(n+a, n-s) binom(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)`,
/// which is polynomial in the parameters and so valid for all of them.
pub fn jacobi(n: usize, alpha: &Rat, beta: &Rat) -> PolyQ {
    let half = Rat::frac(1, 2);
    let xm = PolyQ::linear(-&half, half.clone());
    let xp = PolyQ::linear(half.clone(), half);
    let na = Rat::from(n as u64) + alpha;
    let nb = Rat::from(n as u64) + beta;
    let mut acc = PolyQ::zero();
    for s in 0..=n {
        let c = binomial(&na, (n - s) as i64) * binomial(&nb, s as i64);
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&xm.pow(s as u32).mul(&xp.pow((n - s) as u32)).scale(&c));
    }
    acc
}

/// Legendre polynomial `P_n`.
pub fn legendre(n: usize) -> PolyQ {
    jacobi(n, &Rat::zero(), &Rat::zero())
}

/// Coefficient of `t^k` in `(1-t)^n (1+t)^m`; zero outside `0..=n+m`.
pub fn generating_coeff(n: u64, m: u64, k: i64) -> Rat {
    if k < 0 || k as u64 > n + m {
        return Rat::zero();
    }
    let (n, m) = (n as i64, m as i64);
    let lo = (k - m).max(0);
    let hi = k.min(n);
    let mut acc = BigInt::from(0);
    for l in lo..=hi {
        let term = binom_big(n, l) * binom_big(m, k - l);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Rat::from_bigint(acc)
}

/// `P_k^{(n-k, m-k)}(0) = (-1)^k c_k(n, m) / 2^k`, the Rodrigues value,
/// defined even when a shifted parameter is negative.
pub fn jacobi_shifted_zero(k: u64, n: u64, m: u64) -> Rat {
    if k > n + m {
        return Rat::zero();
    }
    let c = generating_coeff(n, m, k as i64);
    let scale = Rat::from(2).pow(k as i64).expect("small power");
    let v = c / scale;
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `P_k^{(n-k, m-k)}(x)` from the Rodrigues formula
/// `(-1)^k / (2^k k!) (1-x)^(k-n) (1+x)^(k-m) D^k[(1-x)^n (1+x)^m]`.
///
/// Expanding the derivative by Leibniz cancels the outer powers term by
/// term, leaving
/// `(-1)^k/(2^k k!) sum_j binom(k,j) (-1)^(k-j) n^(k-j) m^(j) (1-x)^j (1+x)^(k-j)`
/// with falling factorials, so the value is finite at `x = +-1` as well.
pub fn jacobi_shifted_at(k: u64, n: u64, m: u64, x: &Rat) -> Rat {
    if k > n + m {
        return Rat::zero();
    }
    let one = Rat::one();
    let one_minus = &one - x;
    let one_plus = &one + x;
    let falling = |top: u64, len: u64| -> Rat {
        if len > top {
            Rat::zero()
        } else {
            (0..len).map(|i| Rat::from(top - i)).product()
        }
    };
    let mut acc = Rat::zero();
    for j in 0..=k {
        let c = falling(n, k - j) * falling(m, j);
        if c.is_zero() {
            continue;
        }
        let mut term = binom_int(k as i64, j as i64)
            * c
            * one_minus.pow(j as i64).expect("nonnegative power")
            * one_plus.pow((k - j) as i64).expect("nonnegative power");
        if (k - j) % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    let pref = Rat::from(2).pow(k as i64).expect("small power") * factorial(k as i64).expect("k >= 0");
    let v = acc / pref;
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `C_n^lambda(0)`: zero for odd `n`, `(-1)^(n/2) (lambda)_(n/2) / (n/2)!`
/// otherwise.
pub fn gegenbauer_zero(n: u64, lambda: &Rat) -> Rat {
    if n % 2 == 1 {
        return Rat::zero();
    }
    let h = n / 2;
    let v = pochhammer(lambda, h) / factorial(h as i64).expect("h >= 0");
    if h % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Gegenbauer polynomial by its three-term recurrence
/// `n C_n = 2x (n+lambda-1) C_{n-1} - (n+2lambda-2) C_{n-2}`.
pub fn gegenbauer(n: usize, lambda: &Rat) -> PolyQ {
    let mut prev = PolyQ::from_ints(&[1]);
    if n == 0 {
        return prev;
    }
    let mut cur = PolyQ::linear(Rat::zero(), lambda * Rat::from(2));
    let x = x_poly();
    for k in 2..=n {
        let kr = Rat::from(k as u64);
        let a = (&kr + lambda - Rat::one()) * Rat::from(2);
        let b = &kr + lambda * Rat::from(2) - Rat::from(2);
        let next = x.mul(&cur).scale(&a).sub(&prev.scale(&b)).scale(&kr.recip().expect("k >= 2"));
        prev = cur;
        cur = next;
    }
    cur
}

/// Associated Legendre value `P_n^mu(0)` for `-(n+2) <= mu <= n`.
///
/// With `mu = n - k`, this is
/// `2^(n-k)/sqrt(pi) cos((2n-k) pi/2) Gamma((2n-k+1)/2) / Gamma(k/2+1)`.
/// At `k = 2n+1` that expression is a removable 0 * pole and the limit
/// `1/(2n+1)!!` is returned instead.
pub fn assoc_legendre_zero(n: u64, mu: i64) -> Result<Rat> {
    let n_i = n as i64;
    if mu > n_i || mu < -(n_i + 2) {
        return Err(domain(format!("P_{n}^{mu}(0) outside the supported superscript range")));
    }
    let k = n_i - mu;
    let top = 2 * n_i - k;
    if top == -1 {
        return Ok(crate::exactnum::double_factorial(2 * n_i + 1)?.recip()?);
    }
    if top.rem_euclid(2) == 1 {
        return Ok(Rat::zero());
    }
    let j = top / 2;
    let cos = if j.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
    // Gamma(j + 1/2) / sqrt(pi) is the rational coefficient of gamma_half.
    let g = gamma_half(j).coeff().clone();
    let denom = factorial(k / 2)?;
    Ok(Rat::from(2).pow(n_i - k)? * cos * g / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polyq_trims_and_evaluates() {
        let p = PolyQ::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(PolyQ::from_ints(&[0, 0]).degree(), None);
        assert_eq!(p.eval(&Rat::frac(1, 2)), Rat::from(2));
        assert_eq!(p.compose(&PolyQ::from_ints(&[0, 0, 1])), PolyQ::from_ints(&[1, 0, 2]));
    }

    #[test]
    fn hermite_values() {
        assert_eq!(hermite(0), PolyQ::from_ints(&[1]));
        assert_eq!(hermite(2), PolyQ::from_ints(&[-2, 0, 4]));
        assert_eq!(hermite(4).eval(&Rat::zero()), Rat::from(12));
        for n in 0..=12u64 {
            let at0 = hermite(n as usize).eval(&Rat::zero());
            if n % 2 == 1 {
                assert!(at0.is_zero());
            } else {
                let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
                let expect = Rat::from(sign) * factorial(n as i64).unwrap() / factorial((n / 2) as i64).unwrap();
                assert_eq!(at0, expect);
            }
        }
    }

    #[test]
    fn laguerre_values() {
        let a = Rat::frac(3, 7);
        assert_eq!(laguerre(0, &a), PolyQ::from_ints(&[1]));
        assert_eq!(laguerre(1, &a), PolyQ::linear(Rat::one() + &a, -Rat::one()));
        // L_2^a = ((a+1)(a+2) - 2(a+2)x + x^2)/2
        let l2 = PolyQ::new(vec![
            (&a + Rat::one()) * (&a + Rat::from(2)) / Rat::from(2),
            -(&a + Rat::from(2)),
            Rat::frac(1, 2),
        ]);
        assert_eq!(laguerre(2, &a), l2);
    }

    #[test]
    fn hermite_laguerre_relation() {
        let x2 = PolyQ::from_ints(&[0, 0, 1]);
        for n in 0..=10usize {
            let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
            let f = factorial(n as i64).unwrap();
            let even = laguerre(n, &Rat::frac(-1, 2))
                .compose(&x2)
                .scale(&(&sign * Rat::from(4).pow(n as i64).unwrap() * &f));
            assert_eq!(hermite(2 * n), even, "H_{}", 2 * n);
            let odd = laguerre(n, &Rat::frac(1, 2))
                .compose(&x2)
                .mul(&x_poly())
                .scale(&(&sign * Rat::from(2).pow(2 * n as i64 + 1).unwrap() * &f));
            assert_eq!(hermite(2 * n + 1), odd, "H_{}", 2 * n + 1);
        }
    }

    #[test]
    fn jacobi_low_orders() {
        assert_eq!(jacobi(0, &Rat::from(3), &Rat::frac(1, 2)), PolyQ::from_ints(&[1]));
        assert_eq!(jacobi(1, &Rat::zero(), &Rat::zero()), x_poly());
        assert_eq!(legendre(2), PolyQ::new(vec![Rat::frac(-1, 2), Rat::zero(), Rat::frac(3, 2)]));
    }

    #[test]
    fn gegenbauer_recurrence_and_conversion() {
        assert_eq!(gegenbauer(0, &Rat::from(5)), PolyQ::from_ints(&[1]));
        assert_eq!(gegenbauer(2, &Rat::one()), PolyQ::from_ints(&[-1, 0, 4]));
        // C_n^lambda = (2lambda)_n / (lambda+1/2)_n P_n^(lambda-1/2, lambda-1/2)
        for lambda in [Rat::from(2), Rat::one(), Rat::frac(3, 2), Rat::frac(1, 3)] {
            let shift = &lambda - Rat::frac(1, 2);
            for n in 0..=8usize {
                let ratio = pochhammer(&(&lambda * Rat::from(2)), n as u64)
                    / pochhammer(&(&lambda + Rat::frac(1, 2)), n as u64);
                assert_eq!(gegenbauer(n, &lambda), jacobi(n, &shift, &shift).scale(&ratio), "n={n} lambda={lambda}");
            }
        }
        // Legendre specialisation lambda = 1/2
        for n in 0..=8usize {
            assert_eq!(gegenbauer(n, &Rat::frac(1, 2)), legendre(n));
        }
    }

    #[test]
    fn gegenbauer_zero_values() {
        assert_eq!(gegenbauer_zero(1, &Rat::frac(3, 2)), Rat::zero());
        assert_eq!(gegenbauer_zero(0, &Rat::frac(3, 2)), Rat::one());
        assert_eq!(gegenbauer_zero(2, &Rat::frac(3, 2)), Rat::frac(-3, 2));
        for lambda in [Rat::frac(1, 2), Rat::from(3), Rat::frac(-5, 2), Rat::zero()] {
            for n in 0..=12u64 {
                assert_eq!(gegenbauer_zero(n, &lambda), gegenbauer(n as usize, &lambda).eval(&Rat::zero()));
            }
        }
    }

    #[test]
    fn gegenbauer_parameter_shift_at_zero() {
        for twice in 1..=12i64 {
            let lambda = Rat::frac(twice, 2);
            for n in 0..=20u64 {
                let factor = Rat::one() + Rat::from(n) / (&lambda * Rat::from(2));
                assert_eq!(gegenbauer_zero(n, &(&lambda + Rat::one())), factor * gegenbauer_zero(n, &lambda));
            }
        }
    }

    #[test]
    fn shifted_jacobi_zero_values() {
        assert_eq!(jacobi_shifted_zero(0, 4, 2), Rat::one());
        for n in 0..6 {
            assert!(jacobi_shifted_zero(1, n, n).is_zero());
        }
        assert_eq!(jacobi_shifted_zero(2, 1, 1), Rat::frac(-1, 4));
        assert!(jacobi_shifted_zero(9, 2, 3).is_zero());
    }

    #[test]
    fn shifted_jacobi_matches_explicit_sum() {
        // The explicit sum is polynomial in the parameters, so it agrees
        // with the Rodrigues value on degenerate parameters too.
        for n in 0..=8u64 {
            for m in 0..=8u64 {
                for k in 0..=n + m {
                    let a = Rat::from(n as i64 - k as i64);
                    let b = Rat::from(m as i64 - k as i64);
                    assert_eq!(
                        jacobi(k as usize, &a, &b).eval(&Rat::zero()),
                        jacobi_shifted_zero(k, n, m),
                        "k={k} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn shifted_jacobi_reflection() {
        for n in 0..=10u64 {
            for m in 0..=10u64 {
                for k in 0..=n + m {
                    let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
                    assert_eq!(jacobi_shifted_zero(k, n, m), sign * jacobi_shifted_zero(k, m, n));
                }
            }
        }
    }

    /// Rodrigues evaluated literally: differentiate the polynomial, then
    /// multiply by the outer (possibly negative) powers. Needs `x != +-1`.
    fn rodrigues_oracle(k: u64, n: u64, m: u64, x: &Rat) -> Rat {
        let base = PolyQ::from_ints(&[1, -1]).pow(n as u32).mul(&PolyQ::from_ints(&[1, 1]).pow(m as u32));
        let d = base.nth_derivative(k as usize).eval(x);
        let one = Rat::one();
        let outer = (&one - x).pow(k as i64 - n as i64).unwrap() * (&one + x).pow(k as i64 - m as i64).unwrap();
        let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
        sign * d * outer / (Rat::from(2).pow(k as i64).unwrap() * factorial(k as i64).unwrap())
    }

    #[test]
    fn shifted_jacobi_at_points() {
        for n in 0..=12u64 {
            for m in 0..=12u64 {
                for k in 0..=n + m {
                    assert_eq!(jacobi_shifted_at(k, n, m, &Rat::zero()), jacobi_shifted_zero(k, n, m));
                }
            }
        }
        for x in [Rat::frac(1, 3), Rat::frac(-1, 5), Rat::frac(1, 2), Rat::from(3)] {
            for n in 0..=6u64 {
                for m in 0..=6u64 {
                    for k in 0..=n + m {
                        assert_eq!(jacobi_shifted_at(k, n, m, &x), rodrigues_oracle(k, n, m, &x), "k={k} n={n} m={m} x={x}");
                    }
                }
            }
        }
        assert_eq!(jacobi_shifted_at(0, 3, 1, &Rat::frac(2, 7)), Rat::one());
        // P_1^(0,-1)(x): D[(1-x)] = -1, so (-1/2)(1+x)(-1) = (1+x)/2
        assert_eq!(jacobi_shifted_at(1, 1, 0, &Rat::frac(1, 2)), Rat::frac(3, 4));
        assert_eq!(
            jacobi_shifted_at(1, 1, 0, &Rat::frac(1, 2)),
            jacobi(1, &Rat::zero(), &Rat::from(-1)).eval(&Rat::frac(1, 2))
        );
        // finite at the endpoints: agrees with the explicit sum there
        for x in [Rat::one(), Rat::from(-1)] {
            for (k, n, m) in [(3u64, 1u64, 2u64), (2, 4, 0), (4, 2, 2)] {
                let a = Rat::from(n as i64 - k as i64);
                let b = Rat::from(m as i64 - k as i64);
                assert_eq!(jacobi_shifted_at(k, n, m, &x), jacobi(k as usize, &a, &b).eval(&x));
            }
        }
    }

    /// `P_n^mu(0)` from Legendre derivatives: `(-1)^mu P_n^(mu)(0)` for
    /// `mu >= 0`, and `(-1)^mu (n-mu)!/(n+mu)! P_n^mu(0)` for the negative
    /// superscript.
    fn legendre_recurrence_oracle(n: u64, mu: i64) -> Rat {
        let m = mu.unsigned_abs();
        let d = legendre(n as usize).nth_derivative(m as usize).eval(&Rat::zero());
        let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
        let pos = sign.clone() * d;
        if mu >= 0 {
            pos
        } else {
            sign * factorial(n as i64 - m as i64).unwrap() / factorial(n as i64 + m as i64).unwrap() * pos
        }
    }

    #[test]
    fn assoc_legendre_against_derivative_oracle() {
        for n in 0..=20u64 {
            for k in 0..=2 * n as i64 {
                let mu = n as i64 - k;
                assert_eq!(assoc_legendre_zero(n, mu).unwrap(), legendre_recurrence_oracle(n, mu), "n={n} mu={mu}");
            }
        }
    }

    #[test]
    fn assoc_legendre_special_values() {
        assert_eq!(assoc_legendre_zero(1, 0).unwrap(), Rat::zero());
        assert_eq!(assoc_legendre_zero(1, 1).unwrap(), Rat::from(-1));
        assert_eq!(assoc_legendre_zero(1, -1).unwrap(), Rat::frac(1, 2));
        for n in 0..=10u64 {
            let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
            let dfact = crate::exactnum::double_factorial(2 * n as i64 - 1).unwrap();
            assert_eq!(assoc_legendre_zero(n, n as i64).unwrap(), sign * dfact);
            let expect = Rat::from(2).pow(-(n as i64) - 1).unwrap() / factorial(n as i64 + 1).unwrap();
            assert_eq!(assoc_legendre_zero(n, -(n as i64) - 2).unwrap(), expect);
            let dfact1 = crate::exactnum::double_factorial(2 * n as i64 + 1).unwrap();
            assert_eq!(assoc_legendre_zero(n, -(n as i64) - 1).unwrap(), dfact1.recip().unwrap());
        }
        assert!(assoc_legendre_zero(2, 3).is_err());
        assert!(assoc_legendre_zero(2, -5).is_err());
    }

    #[test]
    fn assoc_legendre_superscript_shift() {
        // P_nu^(mu+1)(0) = -(nu+mu) P_(nu-1)^mu(0)
        for nu in 1..=15u64 {
            for mu in -(nu as i64) - 1..=nu as i64 - 1 {
                let lhs = assoc_legendre_zero(nu, mu + 1).unwrap();
                let rhs = -Rat::from(nu as i64 + mu) * assoc_legendre_zero(nu - 1, mu).unwrap();
                assert_eq!(lhs, rhs, "nu={nu} mu={mu}");
            }
        }
    }

    #[test]
    fn gegenbauer_assoc_legendre_link_at_zero() {
        // C_(n-m)^(m+1/2)(0) = (-1)^m 2^m m!/(2m)! P_n^m(0)
        for n in 0..=15u64 {
            for m in 0..=n {
                let lhs = gegenbauer_zero(n - m, &(Rat::from(m) + Rat::frac(1, 2)));
                let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
                let rhs = sign
                    * Rat::from(2).pow(m as i64).unwrap()
                    * factorial(m as i64).unwrap()
                    / factorial(2 * m as i64).unwrap()
                    * assoc_legendre_zero(n, m as i64).unwrap();
                assert_eq!(lhs, rhs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn equal_index_jacobi_as_gegenbauer() {
        // P_k^(n-k,n-k)(0) = n!/(n-k)! (2n-2k)!/(2n-k)! C_k^(n-k+1/2)(0), k <= n
        for n in 0..=15u64 {
            for k in 0..=n {
                let (ni, ki) = (n as i64, k as i64);
                let factor = factorial(ni).unwrap() / factorial(ni - ki).unwrap() * factorial(2 * ni - 2 * ki).unwrap()
                    / factorial(2 * ni - ki).unwrap();
                let rhs = factor * gegenbauer_zero(k, &(Rat::from(ni - ki) + Rat::frac(1, 2)));
                assert_eq!(jacobi_shifted_zero(k, n, n), rhs, "n={n} k={k}");
                // middle form with Pochhammer ratio
                let mid = pochhammer(&Rat::from(ni - ki + 1), k) / pochhammer(&Rat::from(2 * ni - 2 * ki + 1), k)
                    * gegenbauer_zero(k, &(Rat::from(ni - ki) + Rat::frac(1, 2)));
                assert_eq!(jacobi_shifted_zero(k, n, n), mid);
            }
        }
    }
}
