use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::{PolyY, Rational};

/// A class in `H_*(P^n)[y]`, written in the basis `[P^0] = [pt], [P^1], ..., [P^n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedProjClass {
    n: usize,
    coeffs: Vec<PolyY>,
}

impl GradedProjClass {
    pub fn zero(n: usize) -> Self {
        GradedProjClass {
            n,
            coeffs: vec![PolyY::zero(); n + 1],
        }
    }

    /// `coeffs[d]` is the coefficient of `[P^d]`; missing entries are zero.
    pub fn from_coeffs(n: usize, mut coeffs: Vec<PolyY>) -> Self {
        assert!(
            coeffs.len() <= n + 1,
            "class has more than n + 1 coefficients"
        );
        coeffs.resize(n + 1, PolyY::zero());
        GradedProjClass { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, d: usize) -> &PolyY {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[PolyY] {
        &self.coeffs
    }

    pub fn set(&mut self, d: usize, p: PolyY) {
        self.coeffs[d] = p;
    }

    pub fn add_to(&mut self, d: usize, p: &PolyY) {
        self.coeffs[d] = &self.coeffs[d] + p;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(PolyY::is_zero)
    }

    /// Pushforward along a linear embedding `P^n -> P^k`.
    pub fn embed(&self, k: usize) -> Self {
        assert!(k >= self.n, "cannot embed P^{} into P^{k}", self.n);
        GradedProjClass::from_coeffs(k, self.coeffs.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GradedProjClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Coefficients after substituting a value for `y`.
    pub fn eval(&self, y: &Rational) -> Vec<Rational> {
        self.coeffs.iter().map(|p| p.eval(y)).collect()
    }

    /// Highest `d` with a nonzero coefficient.
    pub fn top_dim(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|p| !p.is_zero())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&PolyY, &PolyY) -> PolyY) -> Self {
        assert_eq!(self.n, other.n, "classes live in different ambient spaces");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        GradedProjClass { n: self.n, coeffs }
    }
}

pub fn basis_label(d: usize) -> String {
    if d == 0 {
        "[pt]".to_string()
    } else {
        format!("[P^{d}]")
    }
}

/// Renders a coefficient so that it can be followed directly by a basis symbol.
pub fn coefficient_prefix(p: &PolyY) -> String {
    if *p == PolyY::one() {
        return String::new();
    }
    if -p == PolyY::one() {
        return "-".to_string();
    }
    let constant_fraction = p.degree() == Some(0) && !p.coeff(0).is_integer();
    if p.term_count() > 1 || constant_fraction {
        format!("({})", p.render())
    } else {
        p.render()
    }
}

/// Joins rendered terms with ` + `, or ` - ` before a term with a leading minus.
pub fn join_terms(terms: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

impl fmt::Display for GradedProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..=self.n)
            .rev()
            .filter(|&d| !self.coeffs[d].is_zero())
            .map(|d| format!("{}{}", coefficient_prefix(&self.coeffs[d]), basis_label(d)))
            .collect();
        f.write_str(&join_terms(&terms))
    }
}

impl Add for &GradedProjClass {
    type Output = GradedProjClass;
    fn add(self, rhs: &GradedProjClass) -> GradedProjClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &GradedProjClass {
    type Output = GradedProjClass;
    fn sub(self, rhs: &GradedProjClass) -> GradedProjClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &GradedProjClass {
    type Output = GradedProjClass;
    fn neg(self) -> GradedProjClass {
        GradedProjClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn display_matches_report_format() {
        let c = GradedProjClass::from_coeffs(
            3,
            vec![PolyY::from_ints(&[1, -21, -2]), PolyY::from_ints(&[-1, 6])],
        );
        assert_eq!(c.to_string(), "(6y-1)[P^1] + (-2y^2-21y+1)[pt]");
        let t = GradedProjClass::from_coeffs(
            2,
            vec![
                PolyY::from_ints(&[1, -1, 1]),
                PolyY::new(vec![rat(3, 2), rat(-3, 2)]),
                PolyY::one(),
            ],
        );
        assert_eq!(t.to_string(), "[P^2] + (-(3/2)y+3/2)[P^1] + (y^2-y+1)[pt]");
        assert_eq!(GradedProjClass::zero(2).to_string(), "0");
        let c = GradedProjClass::from_coeffs(1, vec![PolyY::constant(rat(1, 2)), PolyY::from(-1)]);
        assert_eq!(c.to_string(), "-[P^1] + (1/2)[pt]");
        let c = GradedProjClass::from_coeffs(3, vec![PolyY::from_ints(&[0, -50]), PolyY::y()]);
        assert_eq!(c.to_string(), "y[P^1] - 50y[pt]");
    }

    #[test]
    fn arithmetic_is_componentwise() {
        let a = GradedProjClass::from_coeffs(2, vec![PolyY::y(), PolyY::one()]);
        let b = GradedProjClass::from_coeffs(2, vec![PolyY::one()]);
        let s = &a + &b;
        assert_eq!(s.coeff(0), &PolyY::from_ints(&[1, 1]));
        assert_eq!(&s - &b, a);
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(a.top_dim(), Some(1));
        assert_eq!(a.embed(3).n(), 3);
    }
}
