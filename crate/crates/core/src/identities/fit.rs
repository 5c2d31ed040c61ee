use std::fmt;

use crate::exactnum::Rat;

/// Exact polynomial in a few integer variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFit {
    vars: Vec<String>,
    /// `(exponents, coefficient)`, one exponent per variable.
    terms: Vec<(Vec<u32>, Rat)>,
}

impl PolyFit {
    pub fn eval(&self, point: &[i64]) -> Rat {
        self.terms.iter().map(|(exps, c)| c * monomial(exps, point)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_zero())
    }
}

fn monomial(exps: &[u32], point: &[i64]) -> Rat {
    exps.iter().zip(point).map(|(&e, &x)| Rat::from(x).pow(e as i64).expect("nonnegative power")).product()
}

/// Exponent vectors of total degree `<= degree`, lowest degree first.
fn exponents(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(vars: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == vars {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            rec(vars, budget - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, degree, &mut Vec::new(), &mut out);
    out.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse(e.clone())));
    out
}

/// Solves the overdetermined system exactly. `None` when inconsistent or
/// rank deficient.
fn solve(mut rows: Vec<Vec<Rat>>, unknowns: usize) -> Option<Vec<Rat>> {
    let mut pivot_row = 0;
    for col in 0..unknowns {
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip().ok()?;
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v -= &(&factor * p);
                }
            }
        }
        pivot_row += 1;
    }
    if rows[unknowns..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    Some(rows[..unknowns].iter().map(|row| row[unknowns].clone()).collect())
}

/// Lowest-degree polynomial (degree `<= max_degree`) through every point,
/// using only degrees with strictly more points than monomials, so a fit
/// is always a nontrivial statement about the data.
pub fn fit_polynomial(vars: &[String], points: &[(Vec<i64>, Rat)], max_degree: u32) -> Option<PolyFit> {
    for degree in 0..=max_degree {
        let exps = exponents(vars.len(), degree);
        if points.len() <= exps.len() {
            continue;
        }
        let rows = points
            .iter()
            .map(|(x, y)| exps.iter().map(|e| monomial(e, x)).chain(std::iter::once(y.clone())).collect())
            .collect();
        if let Some(coeffs) = solve(rows, exps.len()) {
            let terms = exps.into_iter().zip(coeffs).collect();
            return Some(PolyFit { vars: vars.to_vec(), terms });
        }
    }
    None
}

impl fmt::Display for PolyFit {
    /// Highest degree first, variables alphabetical: `5/4*m*n - 1/2*n^2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut order: Vec<usize> = (0..self.vars.len()).collect();
        order.sort_by(|&a, &b| self.vars[a].cmp(&self.vars[b]));
        let mut first = true;
        for (exps, c) in self.terms.iter().rev().filter(|(_, c)| !c.is_zero()) {
            let factors: Vec<String> = order
                .iter()
                .filter(|&&i| exps[i] > 0)
                .map(|&i| if exps[i] == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], exps[i]) })
                .collect();
            let magnitude = c.abs();
            let mut body = Vec::new();
            if !magnitude.is_one() || factors.is_empty() {
                body.push(if magnitude.is_integer() { magnitude.numer().to_string() } else { magnitude.to_string() });
            }
            body.extend(factors);
            let body = body.join("*");
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
