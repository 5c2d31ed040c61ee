//! Waist-plane mode functions and the two-point correlation of an LG mode,
//! in double precision.
//!
//! Every integral substitutes `u = sqrt(2) x / w`, which turns products of
//! mode functions into polynomials times `exp(-u^2)`; Gauss-Hermite rules
//! of sufficient size then integrate them exactly up to rounding.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::modecoeff::{coefficients, ModeIndex};
use crate::orthopoly::hermite;
use crate::report::{csv_table, Params, VerifyReport};

/// Complex field amplitude.
pub type ComplexAmp = Complex64;

/// Tolerance of the orthonormality check.
pub const ORTHONORMALITY_TOLERANCE: f64 = 1e-12;

/// Beam waist `w > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaistFrame {
    w: f64,
}

impl WaistFrame {
    pub fn new(w: f64) -> Result<Self> {
        if w > 0.0 && w.is_finite() {
            Ok(WaistFrame { w })
        } else {
            Err(domain(format!("beam waist must be positive and finite, got {w}")))
        }
    }

    pub fn unit() -> Self {
        WaistFrame { w: 1.0 }
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    fn to_u(&self, x: f64) -> f64 {
        SQRT_2 * x / self.w
    }

    fn to_x(&self, u: f64) -> f64 {
        u * self.w / SQRT_2
    }

    /// `dx = jacobian du`.
    fn jacobian(&self) -> f64 {
        self.w / SQRT_2
    }
}

/// Hermite polynomials `H_0..=H_max` with coefficients converted from the
/// exact ones, and the mode normalizations `[sqrt 2 / (sqrt pi 2^j w j!)]^(1/2)`.
#[derive(Clone, Debug)]
struct ModeBasis {
    coeffs: Vec<Vec<f64>>,
    norms: Vec<f64>,
    frame: WaistFrame,
}

impl ModeBasis {
    fn new(max: usize, frame: WaistFrame) -> Self {
        let coeffs = (0..=max).map(|j| hermite(j).coeffs().iter().map(|c| c.to_f64()).collect()).collect();
        let mut norms = Vec::with_capacity(max + 1);
        let mut norm = (SQRT_2 / (PI.sqrt() * frame.w)).sqrt();
        for j in 0..=max {
            if j > 0 {
                norm /= (2.0 * j as f64).sqrt();
            }
            norms.push(norm);
        }
        ModeBasis { coeffs, norms, frame }
    }

    fn hermite(&self, j: usize, u: f64) -> f64 {
        self.coeffs[j].iter().rev().fold(0.0, |acc, c| acc * u + c)
    }

    /// `Phi_j` without the Gaussian factor, as a function of `u`.
    fn poly_part(&self, j: usize, u: f64) -> f64 {
        self.norms[j] * self.hermite(j, u)
    }

    fn phi(&self, j: usize, x: f64) -> f64 {
        let u = self.frame.to_u(x);
        self.poly_part(j, u) * (-u * u / 2.0).exp()
    }
}

/// `Phi_n(x) = [sqrt 2 / (sqrt pi 2^n w n!)]^(1/2) H_n(sqrt 2 x / w) exp(-x^2/w^2)`.
pub fn phi(n: usize, x: f64, frame: WaistFrame) -> f64 {
    ModeBasis::new(n, frame).phi(n, x)
}

/// Gauss-Hermite rule for the weight `exp(-x^2)`, nodes ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn count(&self) -> usize {
        self.nodes.len()
    }

    /// `integral f(x) exp(-x^2) dx`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

const MAX_NEWTON_STEPS: usize = 100;

/// Nodes are roots of the orthonormal Hermite recurrence found by Newton
/// iteration from asymptotic initial guesses.
pub fn gauss_hermite(count: usize) -> Result<QuadratureRule> {
    if count == 0 {
        return Err(domain("quadrature needs at least one node"));
    }
    let n = count;
    let pi_m4 = PI.powf(-0.25);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut z = 0.0f64;
    for i in 0..n.div_ceil(2) {
        z = match i {
            0 => (2.0 * n as f64 + 1.0).sqrt() - 1.85575 * (2.0 * n as f64 + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * (n as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut derivative = 0.0;
        let mut converged = false;
        for _ in 0..MAX_NEWTON_STEPS {
            let (mut p1, mut p2) = (pi_m4, 0.0);
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            derivative = (2.0 * n as f64).sqrt() * p2;
            let step = p1 / derivative;
            z -= step;
            if step.abs() <= 3e-14 * z.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Invariant(format!("Gauss-Hermite node {i} of {n} did not converge")));
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (derivative * derivative);
        w[n - 1 - i] = w[i];
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    x.reverse();
    w.reverse();
    Ok(QuadratureRule { nodes: x, weights: w })
}

/// `integral Phi_n Phi_m dx` against `delta_nm`, tolerance `1e-12`.
pub fn orthonormality_check(n: usize, m: usize, frame: WaistFrame) -> Result<VerifyReport> {
    let rule = gauss_hermite(n + m + 2)?;
    let basis = ModeBasis::new(n.max(m), frame);
    let integral = frame.jacobian() * rule.integrate(|u| basis.poly_part(n, u) * basis.poly_part(m, u));
    let expect = if n == m { 1.0 } else { 0.0 };
    let params = Params::new().with("n", n as u64).with("m", m as u64);
    Ok(VerifyReport::approx("eq3", params, integral, expect, ORTHONORMALITY_TOLERANCE))
}

/// Powers of `i`.
fn i_pow(k: usize) -> ComplexAmp {
    match k % 4 {
        0 => ComplexAmp::new(1.0, 0.0),
        1 => ComplexAmp::new(0.0, 1.0),
        2 => ComplexAmp::new(-1.0, 0.0),
        _ => ComplexAmp::new(0.0, -1.0),
    }
}

/// Shared state for evaluating one LG mode: basis plus `b` as doubles.
struct LgMode {
    b: Vec<f64>,
    basis: ModeBasis,
    total: usize,
}

impl LgMode {
    fn new(index: ModeIndex, frame: WaistFrame) -> Self {
        let b = coefficients(index).iter().map(|c| c.to_f64()).collect();
        let total = index.total() as usize;
        LgMode { b, basis: ModeBasis::new(total, frame), total }
    }

    /// `sum_k i^k b_k Phi_{n+m-k}(x) q_k`, where `q_k` is the `y` factor.
    fn combine(&self, x: f64, y_factor: impl Fn(usize) -> f64) -> ComplexAmp {
        (0..=self.total)
            .filter(|&k| self.b[k] != 0.0)
            .map(|k| i_pow(k) * (self.b[k] * self.basis.phi(self.total - k, x) * y_factor(k)))
            .sum()
    }

    fn u_lg(&self, x: f64, y: f64) -> ComplexAmp {
        self.combine(x, |k| self.basis.phi(k, y))
    }

    fn gamma_direct(&self, rule: &QuadratureRule, x: f64, xprime: f64) -> ComplexAmp {
        let jac = self.basis.frame.jacobian();
        rule.nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&u, &wt)| {
                let left = self.combine(x, |k| self.basis.poly_part(k, u));
                let right = self.combine(xprime, |k| self.basis.poly_part(k, u));
                left.conj() * right * wt
            })
            .sum::<ComplexAmp>()
            * jac
    }

    fn gamma_mercer(&self, x: f64, xprime: f64) -> f64 {
        (0..=self.total)
            .map(|j| {
                let b = self.b[self.total - j];
                b * b * self.basis.phi(j, x) * self.basis.phi(j, xprime)
            })
            .sum()
    }
}

/// `u^LG_{n,m}(x, y) = sum_k i^k b(n,m,k) Phi_{n+m-k}(x) Phi_k(y)`.
pub fn u_lg(index: ModeIndex, x: f64, y: f64, frame: WaistFrame) -> ComplexAmp {
    LgMode::new(index, frame).u_lg(x, y)
}

/// `Gamma(x, x') = sum_j b^2(n, m, n+m-j) Phi_j(x) Phi_j(x')`.
pub fn gamma_mercer(index: ModeIndex, x: f64, xprime: f64, frame: WaistFrame) -> f64 {
    LgMode::new(index, frame).gamma_mercer(x, xprime)
}

fn direct_rule(index: ModeIndex) -> QuadratureRule {
    gauss_hermite(2 * index.total() as usize + 2).expect("small rule converges")
}

/// `Gamma(x, x') = integral conj(u^LG(x, y)) u^LG(x', y) dy` by quadrature
/// in `y`. The imaginary part is returned rather than assumed zero.
pub fn gamma_direct(index: ModeIndex, x: f64, xprime: f64, frame: WaistFrame) -> ComplexAmp {
    LgMode::new(index, frame).gamma_direct(&direct_rule(index), x, xprime)
}

/// `integral integral |Gamma(x, x')|^2 dx dx'`, with `Gamma` from the
/// direct integral, by a tensor Gauss-Hermite rule.
pub fn purity_integral(index: ModeIndex, frame: WaistFrame) -> f64 {
    let mode = LgMode::new(index, frame);
    let inner = direct_rule(index);
    let outer = gauss_hermite(index.total() as usize + 2).expect("small rule converges");
    let jac = frame.jacobian();
    let mut acc = 0.0;
    for (&u, &wu) in outer.nodes.iter().zip(&outer.weights) {
        for (&v, &wv) in outer.nodes.iter().zip(&outer.weights) {
            let g = mode.gamma_direct(&inner, frame.to_x(u), frame.to_x(v));
            // undo the Gaussian the rule weight supplies
            acc += wu * wv * g.norm_sqr() * (u * u + v * v).exp();
        }
    }
    acc * jac * jac
}

/// One sampled value of the correlation function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrSample {
    pub x: f64,
    pub xprime: f64,
    pub gamma: ComplexAmp,
}

/// Samples `Gamma` on every pair from `xs` x `xs`, direct integral.
pub fn correlation_grid(index: ModeIndex, xs: &[f64], frame: WaistFrame) -> Vec<CorrSample> {
    let mode = LgMode::new(index, frame);
    let rule = direct_rule(index);
    xs.iter()
        .flat_map(|&x| xs.iter().map(move |&xprime| (x, xprime)))
        .map(|(x, xprime)| CorrSample { x, xprime, gamma: mode.gamma_direct(&rule, x, xprime) })
        .collect()
}

/// CSV with columns `x, xprime, gamma_re, gamma_im`.
pub fn samples_to_csv(samples: &[CorrSample]) -> String {
    let rows = samples.iter().map(|s| vec![s.x.to_string(), s.xprime.to_string(), s.gamma.re.to_string(), s.gamma.im.to_string()]);
    csv_table(&["x", "xprime", "gamma_re", "gamma_im"], rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::double_factorial;
    use crate::modecoeff::distribution;
    use crate::statistics::purity;

    fn idx(n: u64, m: u64) -> ModeIndex {
        ModeIndex::new(n, m)
    }

    #[test]
    fn phi_examples() {
        let f = WaistFrame::unit();
        assert_eq!(phi(1, 0.0, f), 0.0);
        assert!((phi(0, 0.0, f) - (2.0 / PI).powf(0.25)).abs() < 1e-15);
        let expect = (SQRT_2 / (PI.sqrt() * 16.0 * 24.0)).sqrt() * 12.0;
        assert!((phi(4, 0.0, f) - expect).abs() < 1e-15);
        assert!(WaistFrame::new(0.0).is_err());
        assert!(WaistFrame::new(-1.0).is_err());
    }

    #[test]
    fn small_rules() {
        let r = gauss_hermite(1).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert!((r.weights()[0] - PI.sqrt()).abs() < 1e-14);
        let r = gauss_hermite(2).unwrap();
        assert!((r.nodes()[1] - 1.0 / SQRT_2).abs() < 1e-15);
        assert!((r.nodes()[0] + r.nodes()[1]).abs() == 0.0);
        assert!((r.weights()[0] - PI.sqrt() / 2.0).abs() < 1e-14);
        assert!(gauss_hermite(0).is_err());
    }

    #[test]
    fn rule_exactness() {
        for count in [3usize, 10, 20, 41, 80] {
            let r = gauss_hermite(count).unwrap();
            assert!(r.weights().iter().all(|&w| w > 0.0));
            assert!(r.nodes().windows(2).all(|p| p[0] < p[1]));
            for j in (0..2 * count).step_by(2) {
                // integral x^j exp(-x^2) = (j-1)!! sqrt(pi) / 2^(j/2)
                let exact = double_factorial(j as i64 - 1).unwrap().to_f64() * PI.sqrt() / 2f64.powi(j as i32 / 2);
                let got = r.integrate(|x| x.powi(j as i32));
                let rel = ((got - exact) / exact).abs();
                let tol = if count <= 20 { 1e-13 } else { 1e-11 };
                assert!(rel < tol, "count={count} j={j} rel={rel:e}");
            }
        }
        assert!(gauss_hermite(200).is_ok());
    }

    #[test]
    fn orthonormality() {
        for w in [0.5, 1.0, 2.0] {
            let f = WaistFrame::new(w).unwrap();
            for n in 0..=15 {
                for m in 0..=15 {
                    let r = orthonormality_check(n, m, f).unwrap();
                    assert!(r.passed(), "{r}");
                }
            }
        }
    }

    #[test]
    fn lg_field() {
        let f = WaistFrame::unit();
        let z = u_lg(idx(0, 0), 0.4, -0.7, f);
        assert_eq!(z.im, 0.0);
        assert!((z.re - phi(0, 0.4, f) * phi(0, -0.7, f)).abs() < 1e-15);
        // radial mode: both surviving terms add at the origin
        let centre = u_lg(idx(1, 1), 0.0, 0.0, f);
        assert!((centre.re - SQRT_2 * phi(2, 0.0, f) * phi(0, 0.0, f)).abs() < 1e-15);
        assert_eq!(centre.im, 0.0);
        // odd total order vanishes at the origin
        assert!(u_lg(idx(2, 1), 0.0, 0.0, f).norm() < 1e-15);
        // normalization of |u|^2 over the plane
        let index = idx(1, 1);
        let rule = gauss_hermite(12).unwrap();
        let mode = LgMode::new(index, f);
        let mut total = 0.0;
        for (&u, &wu) in rule.nodes().iter().zip(rule.weights()) {
            for (&v, &wv) in rule.nodes().iter().zip(rule.weights()) {
                let val = mode.u_lg(f.to_x(u), f.to_x(v)).norm_sqr();
                total += wu * wv * val * (u * u + v * v).exp();
            }
        }
        assert!((total * f.jacobian() * f.jacobian() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn correlation_routes_agree() {
        let cases = [(idx(1, 1), 0.3, -0.2, 1.0), (idx(2, 1), 0.5, 0.5, 1.0), (idx(1, 1), 1.0, -1.0, 2.0), (idx(0, 0), 0.1, 0.9, 1.0)];
        for (index, x, xp, w) in cases {
            let f = WaistFrame::new(w).unwrap();
            let d = gamma_direct(index, x, xp, f);
            assert!(d.im.abs() <= 1e-10);
            assert!((d.re - gamma_mercer(index, x, xp, f)).abs() <= 1e-10, "{index:?}");
            let back = gamma_direct(index, xp, x, f);
            assert!((d - back.conj()).norm() <= 1e-10);
        }
        let f = WaistFrame::unit();
        let g = gamma_mercer(idx(0, 0), 0.2, -0.4, f);
        assert!((g - phi(0, 0.2, f) * phi(0, -0.4, f)).abs() < 1e-15);
    }

    #[test]
    fn mercer_trace_and_positivity() {
        let f = WaistFrame::new(1.5).unwrap();
        for index in [idx(0, 0), idx(3, 2), idx(4, 4)] {
            let rule = gauss_hermite(index.total() as usize + 2).unwrap();
            let trace = f.jacobian() * rule.integrate(|u| gamma_mercer(index, f.to_x(u), f.to_x(u), f) * (u * u).exp());
            assert!((trace - 1.0).abs() < 1e-10);
            for i in -20..=20 {
                assert!(gamma_mercer(index, i as f64 * 0.2, i as f64 * 0.2, f) >= -1e-12);
            }
        }
    }

    #[test]
    fn purity_from_double_integral() {
        for (n, m) in [(0, 0), (1, 0), (2, 0), (2, 3)] {
            let exact = purity(&distribution(idx(n, m))).to_f64();
            for w in [0.5, 1.0, 2.0] {
                let got = purity_integral(idx(n, m), WaistFrame::new(w).unwrap());
                assert!((got - exact).abs() < 1e-8, "n={n} m={m} w={w}: {got} vs {exact}");
            }
        }
    }

    #[test]
    fn doubling_the_rule_changes_nothing() {
        let f = WaistFrame::unit();
        let index = idx(3, 2);
        let mode = LgMode::new(index, f);
        let small = direct_rule(index);
        let big = gauss_hermite(2 * small.count()).unwrap();
        let a = mode.gamma_direct(&small, 0.3, -0.6);
        let b = mode.gamma_direct(&big, 0.3, -0.6);
        assert!((a - b).norm() <= 1e-12);
    }

    #[test]
    fn grid_csv() {
        let s = correlation_grid(idx(0, 0), &[0.0], WaistFrame::unit());
        let csv = samples_to_csv(&s);
        assert!(csv.starts_with("x,xprime,gamma_re,gamma_im\n0,0,0.79788456080286"));
    }
}
