//! Rational functions of one variable x with poles only at x = 0 and x = 1.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use crate::param::ParamScalar;
use crate::ExactError;

/// numerator(x) / (x^pole_at_0 * (1 - x)^pole_at_1)
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XRationalFn {
    numerator: Vec<ParamScalar>,
    pole_at_0: u32,
    pole_at_1: u32,
}

fn trim(v: &mut Vec<ParamScalar>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// (1 - x)^m as a dense coefficient list.
fn one_minus_x_pow(m: u32) -> Vec<ParamScalar> {
    (0..=m as i64)
        .map(|k| {
            let c = binomial(BigInt::from(m), BigInt::from(k));
            let c = if k % 2 == 0 { c } else { -c };
            ParamScalar::rational(BigRational::from_integer(c))
        })
        .collect()
}

fn poly_mul(a: &[ParamScalar], b: &[ParamScalar]) -> Vec<ParamScalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ParamScalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul(x, y);
        }
    }
    trim(&mut out);
    out
}

fn poly_add(a: &[ParamScalar], b: &[ParamScalar]) -> Vec<ParamScalar> {
    let mut out: Vec<ParamScalar> = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), ParamScalar::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i].add_assign_ref(y);
    }
    trim(&mut out);
    out
}

impl XRationalFn {
    pub fn new(numerator: Vec<ParamScalar>, pole_at_0: u32, pole_at_1: u32) -> Self {
        let mut f = XRationalFn { numerator, pole_at_0, pole_at_1 };
        f.canonicalize();
        f
    }

    pub fn zero() -> Self {
        XRationalFn::default()
    }

    pub fn constant(c: ParamScalar) -> Self {
        Self::new(vec![c], 0, 0)
    }

    /// c / x
    pub fn inv_x(c: ParamScalar) -> Self {
        Self::new(vec![c], 1, 0)
    }

    pub fn numerator(&self) -> &[ParamScalar] {
        &self.numerator
    }

    pub fn pole_at_0(&self) -> u32 {
        self.pole_at_0
    }

    pub fn pole_at_1(&self) -> u32 {
        self.pole_at_1
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.numerator.len().checked_sub(1)
    }

    pub fn num_at_zero(&self) -> ParamScalar {
        self.numerator.first().cloned().unwrap_or_default()
    }

    pub fn num_at_one(&self) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for c in &self.numerator {
            acc.add_assign_ref(c);
        }
        acc
    }

    /// Cancel common factors of x and (1 - x) between numerator and denominator.
    pub fn canonicalize(&mut self) {
        trim(&mut self.numerator);
        if self.numerator.is_empty() {
            self.pole_at_0 = 0;
            self.pole_at_1 = 0;
            return;
        }
        while self.pole_at_0 > 0 && self.numerator[0].is_zero() {
            self.numerator.remove(0);
            self.pole_at_0 -= 1;
        }
        while self.pole_at_1 > 0 && self.num_at_one().is_zero() {
            // N(x) = (1 - x) Q(x); synthetic division by (x - 1), then negate.
            let n = self.numerator.len();
            let mut q = vec![ParamScalar::zero(); n - 1];
            let mut carry = ParamScalar::zero();
            for i in (1..n).rev() {
                carry = &carry + &self.numerator[i];
                q[i - 1] = -&carry;
            }
            self.numerator = q;
            self.pole_at_1 -= 1;
        }
    }

    pub fn is_canonical(&self) -> bool {
        let mut c = self.clone();
        c.canonicalize();
        c == *self
    }

    fn raised(&self, a: u32, b: u32) -> Vec<ParamScalar> {
        let mut n = self.numerator.clone();
        if a > self.pole_at_0 {
            let mut shifted = vec![ParamScalar::zero(); (a - self.pole_at_0) as usize];
            shifted.extend(n);
            n = shifted;
        }
        if b > self.pole_at_1 {
            n = poly_mul(&n, &one_minus_x_pow(b - self.pole_at_1));
        }
        n
    }

    pub fn add(&self, rhs: &XRationalFn) -> XRationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let a = self.pole_at_0.max(rhs.pole_at_0);
        let b = self.pole_at_1.max(rhs.pole_at_1);
        Self::new(poly_add(&self.raised(a, b), &rhs.raised(a, b)), a, b)
    }

    pub fn neg(&self) -> XRationalFn {
        XRationalFn {
            numerator: self.numerator.iter().map(|c| -c).collect(),
            pole_at_0: self.pole_at_0,
            pole_at_1: self.pole_at_1,
        }
    }

    pub fn sub(&self, rhs: &XRationalFn) -> XRationalFn {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &XRationalFn) -> XRationalFn {
        Self::new(
            poly_mul(&self.numerator, &rhs.numerator),
            self.pole_at_0 + rhs.pole_at_0,
            self.pole_at_1 + rhs.pole_at_1,
        )
    }

    pub fn scale(&self, c: &ParamScalar) -> XRationalFn {
        Self::new(self.numerator.iter().map(|x| x * c).collect(), self.pole_at_0, self.pole_at_1)
    }

    /// Multiply by x^a (1 - x)^b, with negative exponents adding poles.
    pub fn mul_x_factors(&self, a: i32, b: i32) -> XRationalFn {
        let mut n = self.numerator.clone();
        let mut pa = self.pole_at_0 as i32 - a;
        let mut pb = self.pole_at_1 as i32 - b;
        if pa < 0 {
            let mut shifted = vec![ParamScalar::zero(); (-pa) as usize];
            shifted.extend(n);
            n = shifted;
            pa = 0;
        }
        if pb < 0 {
            n = poly_mul(&n, &one_minus_x_pow((-pb) as u32));
            pb = 0;
        }
        Self::new(n, pa as u32, pb as u32)
    }

    pub fn derivative(&self) -> XRationalFn {
        // (N/(x^a (1-x)^b))' = (N' x (1-x) - a N (1-x) + b N x) / (x^{a+1} (1-x)^{b+1})
        let n = &self.numerator;
        if n.is_empty() {
            return Self::zero();
        }
        let a = self.pole_at_0 as i64;
        let b = self.pole_at_1 as i64;
        let mut out = vec![ParamScalar::zero(); n.len() + 1];
        for (i, c) in n.iter().enumerate() {
            let i64i = i as i64;
            // i c x^{i-1} * (x - x^2)
            if i > 0 {
                out[i].add_assign_ref(&c.scale_int(i64i));
                out[i + 1].add_assign_ref(&c.scale_int(-i64i));
            }
            // -a c x^i (1 - x)
            out[i].add_assign_ref(&c.scale_int(-a));
            out[i + 1].add_assign_ref(&c.scale_int(a));
            // b c x^{i+1}
            out[i + 1].add_assign_ref(&c.scale_int(b));
        }
        Self::new(out, self.pole_at_0 + 1, self.pole_at_1 + 1)
    }

    /// True when f = O(1/x) at infinity.
    pub fn decays(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => (d as u32) < self.pole_at_0 + self.pole_at_1,
        }
    }

    /// Coefficient of x^{-k-1} in the large-x expansion.
    pub fn inverse_x_coefficient(&self, k: u32) -> Result<ParamScalar, ExactError> {
        if !self.decays() {
            return Err(ExactError::NotDecaying);
        }
        let a = self.pole_at_0 as i64;
        let b = self.pole_at_1 as i64;
        let k = k as i64;
        let mut acc = ParamScalar::zero();
        for (i, c) in self.numerator.iter().enumerate() {
            let i = i as i64;
            if b == 0 {
                if i - a == -k - 1 {
                    acc.add_assign_ref(c);
                }
                continue;
            }
            // x^{i-a} (1-x)^{-b} = (-1)^b sum_m C(m+b-1, b-1) x^{i-a-b-m}
            let m = k + 1 + i - a - b;
            if m < 0 {
                continue;
            }
            let binom = binomial(BigInt::from(m + b - 1), BigInt::from(b - 1));
            let sign = if b % 2 == 0 { 1 } else { -1 };
            acc.add_assign_ref(&c.scale_rational(&(BigRational::from_integer(binom) * int(sign))));
        }
        Ok(acc)
    }

    /// Substitute kappa, p, q in every coefficient.
    pub fn map_coeffs<F: Fn(&ParamScalar) -> ParamScalar>(&self, f: F) -> XRationalFn {
        Self::new(self.numerator.iter().map(f).collect(), self.pole_at_0, self.pole_at_1)
    }
}

impl fmt::Display for XRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write!(f, " ({c})*x^{i}")?;
        }
        write!(f, " ] / (x^{} (1-x)^{})", self.pole_at_0, self.pole_at_1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> ParamScalar {
        ParamScalar::from_int(n)
    }

    #[test]
    fn spec_inverse_x_examples() {
        let f = XRationalFn::new(vec![c(1)], 1, 1);
        assert_eq!(f.inverse_x_coefficient(3).unwrap(), c(-1));
        let g = XRationalFn::new(vec![c(1)], 1, 0);
        assert_eq!(g.inverse_x_coefficient(1).unwrap(), c(0));
        assert_eq!(g.inverse_x_coefficient(0).unwrap(), c(1));
        let h = XRationalFn::new(vec![c(1)], 0, 2);
        assert_eq!(h.inverse_x_coefficient(1).unwrap(), c(1));
    }

    #[test]
    fn rejects_growth() {
        let f = XRationalFn::new(vec![c(0), c(0), c(1)], 1, 0);
        assert!(matches!(f.inverse_x_coefficient(1), Err(ExactError::NotDecaying)));
        let g = XRationalFn::new(vec![c(1)], 0, 0);
        assert!(g.inverse_x_coefficient(1).is_err());
    }

    #[test]
    fn canonical_cancels() {
        // (x - x^2) / (x^2 (1-x)^2) = 1 / (x (1 - x))
        let f = XRationalFn::new(vec![c(0), c(1), c(-1)], 2, 2);
        assert_eq!(f, XRationalFn::new(vec![c(1)], 1, 1));
    }

    #[test]
    fn add_and_derivative() {
        // 1/x + 1/(1-x) = 1/(x(1-x))
        let s = XRationalFn::new(vec![c(1)], 1, 0).add(&XRationalFn::new(vec![c(1)], 0, 1));
        assert_eq!(s, XRationalFn::new(vec![c(1)], 1, 1));
        // d/dx 1/x = -1/x^2
        let d = XRationalFn::new(vec![c(1)], 1, 0).derivative();
        assert_eq!(d, XRationalFn::new(vec![c(-1)], 2, 0));
        // d/dx 1/(1-x) = 1/(1-x)^2
        let d = XRationalFn::new(vec![c(1)], 0, 1).derivative();
        assert_eq!(d, XRationalFn::new(vec![c(1)], 0, 2));
    }
}
