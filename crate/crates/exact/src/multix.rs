//! Sparse polynomials in x_1..x_n over ParamScalar, and rational functions
//! of several x-variables with poles only at x_i = 0 and x_i = 1.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use crate::param::ParamScalar;
use crate::xrational::XRationalFn;
use crate::ExactError;

/// Sparse polynomial; keys are exponent vectors of length `nvars`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, ParamScalar>,
}

impl XPoly {
    pub fn zero(nvars: usize) -> Self {
        XPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: ParamScalar) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<u32>, c: ParamScalar) -> Self {
        let mut out = XPoly::zero(exps.len());
        out.add_term(exps, &c);
        out
    }

    /// x_j (0-based)
    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Self::monomial(e, ParamScalar::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, ParamScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &ParamScalar) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> XPoly {
        XPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn mul(&self, rhs: &XPoly) -> XPoly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut acc: BTreeMap<Vec<u32>, ParamScalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                acc.entry(e).or_default().add_mul(ca, cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        XPoly { nvars: self.nvars, terms: acc }
    }

    pub fn scale(&self, c: &ParamScalar) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &(v * c));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> XPoly {
        self.scale(&ParamScalar::from_int(n))
    }

    /// Multiply by x_j^m.
    pub fn shift(&self, j: usize, m: u32) -> XPoly {
        XPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[j] += m;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Multiply by (1 - x_j)^m.
    pub fn mul_one_minus(&self, j: usize, m: u32) -> XPoly {
        if m == 0 {
            return self.clone();
        }
        let mut acc = XPoly::zero(self.nvars);
        for k in 0..=m {
            let b = binomial(BigInt::from(m), BigInt::from(k));
            let b = if k % 2 == 0 { b } else { -b };
            let c = ParamScalar::rational(BigRational::from_integer(b));
            let part = self.shift(j, k).scale(&c);
            acc = acc.add(&part);
        }
        acc
    }

    pub fn partial(&self, j: usize) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[j] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[j] -= 1;
            out.add_term(e2, &c.scale_int(e[j] as i64));
        }
        out
    }

    /// Group terms by the power of x_j: result[d] holds the coefficient of x_j^d
    /// with the j-th exponent zeroed.
    fn split_by(&self, j: usize) -> Vec<XPoly> {
        let mut out: Vec<XPoly> = Vec::new();
        for (e, c) in &self.terms {
            let d = e[j] as usize;
            if out.len() <= d {
                out.resize(d + 1, XPoly::zero(self.nvars));
            }
            let mut e2 = e.clone();
            e2[j] = 0;
            out[d].add_term(e2, c);
        }
        out
    }

    /// True when the polynomial vanishes identically at x_j = 0.
    pub fn vanishes_at_zero(&self, j: usize) -> bool {
        self.terms.keys().all(|e| e[j] > 0)
    }

    /// Value at x_j = 1 as a polynomial (exponent j zeroed).
    pub fn at_one(&self, j: usize) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[j] = 0;
            out.add_term(e2, c);
        }
        out
    }

    /// Divide by x_j; caller ensures divisibility.
    fn unshift(&self, j: usize) -> XPoly {
        XPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[j] -= 1;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient by (x_j - r) where r is x_k (Some(k)) or the constant 1 (None).
    fn synthetic_div(&self, j: usize, k: Option<usize>) -> Result<XPoly, ExactError> {
        let coeffs = self.split_by(j);
        if coeffs.is_empty() {
            return Ok(XPoly::zero(self.nvars));
        }
        let mul_r = |p: &XPoly| match k {
            Some(k) => p.shift(k, 1),
            None => p.clone(),
        };
        let d = coeffs.len() - 1;
        let mut quot = XPoly::zero(self.nvars);
        let mut carry = XPoly::zero(self.nvars);
        for i in (1..=d).rev() {
            carry = coeffs[i].add(&mul_r(&carry));
            quot = quot.add(&carry.shift(j, (i - 1) as u32));
        }
        let rem = coeffs[0].add(&mul_r(&carry));
        if !rem.is_zero() {
            let what = match k {
                Some(k) => format!("x{} - x{}", j + 1, k + 1),
                None => format!("x{} - 1", j + 1),
            };
            return Err(ExactError::NonzeroRemainder(what));
        }
        Ok(quot)
    }

    /// Substitute x_k := x_j and drop variable k (later variables shift down).
    pub fn identify(&self, j: usize, k: usize) -> XPoly {
        assert!(j != k);
        let mut out = XPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[j] += e2[k];
            e2.remove(k);
            out.add_term(e2, c);
        }
        out
    }

    /// Place variable i of self at position map[i] of a polynomial in `nvars` variables.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> XPoly {
        let mut out = XPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, d) in e.iter().enumerate() {
                e2[map[i]] += d;
            }
            out.add_term(e2, c);
        }
        out
    }

    pub fn map_coeffs<F: Fn(&ParamScalar) -> ParamScalar>(&self, f: F) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &f(c));
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, j: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[j]).max()
    }
}

/// f / (x_j - x_k), exact; `j`, `k` are 0-based.
pub fn exact_divide_difference(f: &XPoly, j: usize, k: usize) -> Result<XPoly, ExactError> {
    if j == k || j >= f.nvars || k >= f.nvars {
        return Err(ExactError::BadIndex(j, k));
    }
    f.synthetic_div(j, Some(k))
}

/// numerator / prod_i (x_i^pole_at_0[i] (1 - x_i)^pole_at_1[i])
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiXRationalFn {
    numerator: XPoly,
    pole_at_0: Vec<u32>,
    pole_at_1: Vec<u32>,
}

impl MultiXRationalFn {
    pub fn new(numerator: XPoly, pole_at_0: Vec<u32>, pole_at_1: Vec<u32>) -> Self {
        assert_eq!(pole_at_0.len(), numerator.nvars());
        assert_eq!(pole_at_1.len(), numerator.nvars());
        let mut f = MultiXRationalFn { numerator, pole_at_0, pole_at_1 };
        f.canonicalize();
        f
    }

    pub fn zero(nvars: usize) -> Self {
        MultiXRationalFn {
            numerator: XPoly::zero(nvars),
            pole_at_0: vec![0; nvars],
            pole_at_1: vec![0; nvars],
        }
    }

    pub fn constant(nvars: usize, c: ParamScalar) -> Self {
        Self::new(XPoly::constant(nvars, c), vec![0; nvars], vec![0; nvars])
    }

    pub fn from_poly(p: XPoly) -> Self {
        let n = p.nvars();
        Self::new(p, vec![0; n], vec![0; n])
    }

    pub fn from_single(f: &XRationalFn) -> Self {
        let mut num = XPoly::zero(1);
        for (i, c) in f.numerator().iter().enumerate() {
            num.add_term(vec![i as u32], c);
        }
        Self::new(num, vec![f.pole_at_0()], vec![f.pole_at_1()])
    }

    pub fn to_single(&self) -> Option<XRationalFn> {
        if self.nvars() != 1 {
            return None;
        }
        let deg = self.numerator.degree_in(0).unwrap_or(0) as usize;
        let mut n = vec![ParamScalar::zero(); deg + 1];
        for (e, c) in self.numerator.terms() {
            n[e[0] as usize] = c.clone();
        }
        Some(XRationalFn::new(n, self.pole_at_0[0], self.pole_at_1[0]))
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn numerator(&self) -> &XPoly {
        &self.numerator
    }

    pub fn pole_at_0(&self) -> &[u32] {
        &self.pole_at_0
    }

    pub fn pole_at_1(&self) -> &[u32] {
        &self.pole_at_1
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.pole_at_0.iter_mut().for_each(|a| *a = 0);
            self.pole_at_1.iter_mut().for_each(|b| *b = 0);
            return;
        }
        for j in 0..self.nvars() {
            while self.pole_at_0[j] > 0 && self.numerator.vanishes_at_zero(j) {
                self.numerator = self.numerator.unshift(j);
                self.pole_at_0[j] -= 1;
            }
            while self.pole_at_1[j] > 0 && self.numerator.at_one(j).is_zero() {
                self.numerator = self
                    .numerator
                    .synthetic_div(j, None)
                    .expect("vanishing at x = 1 implies divisibility")
                    .neg();
                self.pole_at_1[j] -= 1;
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        let mut c = self.clone();
        c.canonicalize();
        c == *self
    }

    fn raised(&self, a: &[u32], b: &[u32]) -> XPoly {
        let mut n = self.numerator.clone();
        for j in 0..self.nvars() {
            if a[j] > self.pole_at_0[j] {
                n = n.shift(j, a[j] - self.pole_at_0[j]);
            }
            if b[j] > self.pole_at_1[j] {
                n = n.mul_one_minus(j, b[j] - self.pole_at_1[j]);
            }
        }
        n
    }

    pub fn add(&self, rhs: &MultiXRationalFn) -> MultiXRationalFn {
        assert_eq!(self.nvars(), rhs.nvars());
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let a: Vec<u32> = self.pole_at_0.iter().zip(&rhs.pole_at_0).map(|(x, y)| *x.max(y)).collect();
        let b: Vec<u32> = self.pole_at_1.iter().zip(&rhs.pole_at_1).map(|(x, y)| *x.max(y)).collect();
        let n = self.raised(&a, &b).add(&rhs.raised(&a, &b));
        Self::new(n, a, b)
    }

    pub fn neg(&self) -> MultiXRationalFn {
        MultiXRationalFn {
            numerator: self.numerator.neg(),
            pole_at_0: self.pole_at_0.clone(),
            pole_at_1: self.pole_at_1.clone(),
        }
    }

    pub fn sub(&self, rhs: &MultiXRationalFn) -> MultiXRationalFn {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &MultiXRationalFn) -> MultiXRationalFn {
        assert_eq!(self.nvars(), rhs.nvars());
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.nvars());
        }
        let a = self.pole_at_0.iter().zip(&rhs.pole_at_0).map(|(x, y)| x + y).collect();
        let b = self.pole_at_1.iter().zip(&rhs.pole_at_1).map(|(x, y)| x + y).collect();
        Self::new(self.numerator.mul(&rhs.numerator), a, b)
    }

    pub fn scale(&self, c: &ParamScalar) -> MultiXRationalFn {
        Self::new(self.numerator.scale(c), self.pole_at_0.clone(), self.pole_at_1.clone())
    }

    /// Multiply by x_j^a (1 - x_j)^b; negative exponents add poles.
    pub fn mul_x_factors(&self, j: usize, a: i32, b: i32) -> MultiXRationalFn {
        if self.is_zero() {
            return self.clone();
        }
        let mut n = self.numerator.clone();
        let mut pa = self.pole_at_0.clone();
        let mut pb = self.pole_at_1.clone();
        let na = pa[j] as i32 - a;
        let nb = pb[j] as i32 - b;
        if na < 0 {
            n = n.shift(j, (-na) as u32);
            pa[j] = 0;
        } else {
            pa[j] = na as u32;
        }
        if nb < 0 {
            n = n.mul_one_minus(j, (-nb) as u32);
            pb[j] = 0;
        } else {
            pb[j] = nb as u32;
        }
        Self::new(n, pa, pb)
    }

    /// Multiply by x_k (a polynomial factor, no poles involved).
    pub fn mul_var(&self, k: usize) -> MultiXRationalFn {
        self.mul_x_factors(k, 1, 0)
    }

    pub fn partial(&self, j: usize) -> MultiXRationalFn {
        if self.is_zero() {
            return self.clone();
        }
        // d/dx (N x^-a (1-x)^-b) = (N' x(1-x) - a N (1-x) + b N x) / (x^{a+1} (1-x)^{b+1})
        let n = &self.numerator;
        let a = self.pole_at_0[j] as i64;
        let b = self.pole_at_1[j] as i64;
        let x = XPoly::var(self.nvars(), j);
        let one_minus_x = XPoly::constant(self.nvars(), ParamScalar::one()).sub(&x);
        let t1 = n.partial(j).mul(&x).mul(&one_minus_x);
        let t2 = n.mul(&one_minus_x).scale_int(-a);
        let t3 = n.mul(&x).scale_int(b);
        let mut pa = self.pole_at_0.clone();
        let mut pb = self.pole_at_1.clone();
        pa[j] += 1;
        pb[j] += 1;
        Self::new(t1.add(&t2).add(&t3), pa, pb)
    }

    /// Substitute x_k := x_j and drop variable k.
    pub fn identify(&self, j: usize, k: usize) -> MultiXRationalFn {
        let n = self.numerator.identify(j, k);
        let mut pa = self.pole_at_0.clone();
        let mut pb = self.pole_at_1.clone();
        pa[j] += pa[k];
        pb[j] += pb[k];
        pa.remove(k);
        pb.remove(k);
        Self::new(n, pa, pb)
    }

    /// Variable i of self becomes variable map[i] of the result; `map` is injective.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MultiXRationalFn {
        let mut pa = vec![0; nvars];
        let mut pb = vec![0; nvars];
        for (i, &m) in map.iter().enumerate() {
            pa[m] = self.pole_at_0[i];
            pb[m] = self.pole_at_1[i];
        }
        Self::new(self.numerator.embed(nvars, map), pa, pb)
    }

    /// (a - b) / (x_j - x_k); the difference must vanish on x_j = x_k.
    pub fn difference_quotient(a: &MultiXRationalFn, b: &MultiXRationalFn, j: usize, k: usize) -> Result<MultiXRationalFn, ExactError> {
        let diff = a.sub(b);
        if diff.is_zero() {
            return Ok(diff);
        }
        let q = exact_divide_difference(&diff.numerator, j, k)?;
        Ok(Self::new(q, diff.pole_at_0.clone(), diff.pole_at_1.clone()))
    }

    /// Swap variables i and j.
    pub fn swap(&self, i: usize, j: usize) -> MultiXRationalFn {
        let mut map: Vec<usize> = (0..self.nvars()).collect();
        map.swap(i, j);
        self.embed(self.nvars(), &map)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.nvars();
        (0..n).all(|i| (i + 1..n).all(|j| self.swap(i, j) == *self))
    }

    pub fn map_coeffs<F: Fn(&ParamScalar) -> ParamScalar>(&self, f: F) -> MultiXRationalFn {
        Self::new(self.numerator.map_coeffs(f), self.pole_at_0.clone(), self.pole_at_1.clone())
    }
}

impl fmt::Display for MultiXRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (e, c) in self.numerator.terms() {
            write!(f, " ({c})")?;
            for (i, d) in e.iter().enumerate() {
                if *d > 0 {
                    write!(f, "*x{}^{}", i + 1, d)?;
                }
            }
        }
        write!(f, " ] / (")?;
        for i in 0..self.nvars() {
            write!(f, " x{0}^{1} (1-x{0})^{2}", i + 1, self.pole_at_0[i], self.pole_at_1[i])?;
        }
        write!(f, " )")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> ParamScalar {
        ParamScalar::from_int(n)
    }

    fn x(j: usize) -> XPoly {
        XPoly::var(2, j)
    }

    #[test]
    fn divide_difference_examples() {
        let f = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(exact_divide_difference(&f, 0, 1).unwrap(), x(0).add(&x(1)));
        let g = x(0).sub(&x(1));
        assert_eq!(exact_divide_difference(&g, 0, 1).unwrap(), XPoly::constant(2, c(1)));
        let bad = x(0).add(&x(1));
        assert!(matches!(exact_divide_difference(&bad, 0, 1), Err(ExactError::NonzeroRemainder(_))));
    }

    #[test]
    fn canonical_cancellation() {
        // x1 (1 - x2) / (x1^2 (1-x2)^3) = 1 / (x1 (1-x2)^2)
        let n = x(0).mul_one_minus(1, 1);
        let f = MultiXRationalFn::new(n, vec![2, 0], vec![0, 3]);
        assert_eq!(f.pole_at_0(), &[1, 0]);
        assert_eq!(f.pole_at_1(), &[0, 2]);
        assert!(f.is_canonical());
    }

    #[test]
    fn identify_and_symmetry() {
        let f = MultiXRationalFn::new(x(0).mul(&x(1)), vec![1, 1], vec![1, 1]);
        assert!(f.is_symmetric());
        let d = f.identify(0, 1);
        assert_eq!(d.nvars(), 1);
        let single = d.to_single().unwrap();
        assert_eq!(single, XRationalFn::new(vec![c(1)], 0, 2));
        let g = MultiXRationalFn::new(x(0), vec![0, 1], vec![0, 0]);
        assert!(!g.is_symmetric());
    }

    #[test]
    fn partial_matches_single() {
        let s = XRationalFn::new(vec![c(2), c(-3), c(5)], 2, 3);
        let m = MultiXRationalFn::from_single(&s);
        assert_eq!(m.partial(0).to_single().unwrap(), s.derivative());
    }
}
