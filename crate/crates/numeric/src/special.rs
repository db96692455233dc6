//! Riccati-Bessel polynomials, the confluent hypergeometric series,
//! Gauss-Legendre rules and the generalized exponential integral.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::NumericError;
use crate::jet::{Jet, Scalar};
use crate::real::{working_bits, Complex, Real};

/// u_n(z) = A_n(w) sin z + B_n(w) cos z with w = 1/z, where
/// u_{-1} = cos z, u_0 = sin z and u_{n+1} = (2n+1) w u_n - u_{n-1}.
/// Coefficients are ascending in w.
#[derive(Clone, Debug, PartialEq)]
pub struct RiccatiPoly {
    pub n: i64,
    pub sin: Vec<BigRational>,
    pub cos: Vec<BigRational>,
}

fn poly_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn shift_scale(v: &[BigRational], s: i64) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero()];
    out.extend(v.iter().map(|c| c * BigRational::from_integer(BigInt::from(s))));
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    poly_trim((0..n).map(|k| a.get(k).unwrap_or(&z) - b.get(k).unwrap_or(&z)).collect())
}

pub fn riccati_poly(n: i64) -> RiccatiPoly {
    assert!(n >= -1, "riccati_poly needs n >= -1");
    let zero = vec![BigRational::zero()];
    let one = vec![BigRational::one()];
    let mut prev = RiccatiPoly { n: -1, sin: zero.clone(), cos: one.clone() };
    let mut cur = RiccatiPoly { n: 0, sin: one, cos: zero };
    if n == -1 {
        return prev;
    }
    for m in 0..n {
        let next = RiccatiPoly {
            n: m + 1,
            sin: poly_sub(&shift_scale(&cur.sin, 2 * m + 1), &prev.sin),
            cos: poly_sub(&shift_scale(&cur.cos, 2 * m + 1), &prev.cos),
        };
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Horner evaluation of a rational polynomial at a jet.
pub fn poly_at_jet(coeffs: &[BigRational], w: &Jet<Real>) -> Jet<Real> {
    let order = w.order();
    let mut acc = Jet::constant(Real::zero(), order);
    for c in coeffs.iter().rev() {
        acc = acc.mul(w).add_const(&Real::from_rational(c));
    }
    acc
}

/// Riccati-Bessel functions u_{n-1}(z), u_n(z) as jets, for a jet z with
/// nonzero value.
pub fn riccati_pair_jet(n: i64, z: &Jet<Real>) -> (Jet<Real>, Jet<Real>) {
    let w = z.recip();
    let (s, c) = z.sin_cos();
    let eval = |m: i64| {
        let rp = riccati_poly(m);
        poly_at_jet(&rp.sin, &w).mul(&s).add(&poly_at_jet(&rp.cos, &w).mul(&c))
    };
    (eval(n - 1), eval(n))
}

/// 1F1(a; b; y) with y a jet, summed term by term until the remaining
/// terms are below 2^-bits relative to the sum and decay geometrically.
pub fn hyp1f1_jet(a: &Complex, b: &Complex, y: &Jet<Complex>) -> Result<Jet<Complex>, NumericError> {
    let order = y.order();
    let bits = working_bits();
    let eps = Real::one() / Real::from_i64(2).powi(bits);
    let ymag = y.c.iter().map(|c| c.abs().to_f64()).sum::<f64>();
    let amag = a.abs().to_f64();
    let k_safe = (2.0 * ymag + amag + 2.0 * order as f64 + 4.0).ceil() as usize;
    let mut term = Jet::constant(Complex::one(), order);
    let mut sum = term.clone();
    let mut small = 0;
    for k in 0..200_000usize {
        let kr = Real::from_i64(k as i64);
        let num = a.plus(&Complex::real(kr.clone()));
        let den = b.plus(&Complex::real(kr.clone())).times_real(&(kr + Real::one()));
        if den.abs().is_zero() {
            return Err(NumericError::Domain("1F1 with nonpositive integer b".into()));
        }
        term = term.mul(y).scale(&num.over(&den));
        sum = sum.add(&term);
        let tmax = term.c.iter().map(|c| c.magnitude()).fold(Real::zero(), |m, v| m.max(&v));
        let smax = sum.c.iter().map(|c| c.magnitude()).fold(Real::one(), |m, v| m.max(&v));
        if tmax <= &eps * &smax {
            small += 1;
        } else {
            small = 0;
        }
        if k >= k_safe && small >= 2 {
            return Ok(sum);
        }
    }
    Err(NumericError::Convergence("1F1 series did not converge".into()))
}

thread_local! {
    static GL_CACHE: RefCell<HashMap<(usize, usize), (Vec<Real>, Vec<Real>)>> = RefCell::new(HashMap::new());
}

/// Legendre P_n(x) and P_n'(x).
fn legendre(n: usize, x: &Real) -> (Real, Real) {
    let mut p0 = Real::one();
    let mut p1 = x.clone();
    for k in 2..=n {
        let kr = Real::from_i64(k as i64);
        let p2 = (Real::from_i64(2 * k as i64 - 1) * x * &p1 - Real::from_i64(k as i64 - 1) * &p0) / kr;
        p0 = p1;
        p1 = p2;
    }
    let dp = Real::from_i64(n as i64) * (x * &p1 - &p0) / (x * x - Real::one());
    (p1, dp)
}

/// Gauss-Legendre nodes and weights on [-1, 1] at the working precision.
pub fn gauss_legendre(n: usize) -> (Vec<Real>, Vec<Real>) {
    let bits = working_bits();
    if let Some(v) = GL_CACHE.with(|c| c.borrow().get(&(n, bits)).cloned()) {
        return v;
    }
    let eps = Real::one() / Real::from_i64(2).powi(bits.saturating_sub(8));
    let mut xs = Vec::with_capacity(n);
    let mut ws = Vec::with_capacity(n);
    for i in 1..=n {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = Real::from_f64(guess);
        for _ in 0..100 {
            let (p, dp) = legendre(n, &x);
            let dx = &p / &dp;
            x = &x - &dx;
            if dx.abs() < eps {
                break;
            }
        }
        let (_, dp) = legendre(n, &x);
        let w = Real::from_i64(2) / ((Real::one() - &x * &x) * &dp * &dp);
        xs.push(x);
        ws.push(w);
    }
    GL_CACHE.with(|c| c.borrow_mut().insert((n, bits), (xs.clone(), ws.clone())));
    (xs, ws)
}

/// E_n(z) = int_1^inf e^{-zt} t^{-n} dt by the modified Lentz continued
/// fraction, valid off the negative real axis (here Re z >= 0, z != 0).
pub fn expint_e(n: u32, z: &Complex) -> Result<Complex, NumericError> {
    if z.abs().is_zero() {
        return Err(NumericError::Domain("E_n at z = 0".into()));
    }
    let bits = working_bits();
    let eps = Real::one() / Real::from_i64(2).powi(bits.saturating_sub(4));
    let tiny = Complex::real(Real::one() / Real::from_i64(2).powi(bits * 2));
    let nr = Real::from_i64(n as i64);
    let mut b = z.plus(&Complex::real(nr.clone()));
    let mut c = tiny.recip();
    let mut d = b.recip();
    let mut h = d.clone();
    for i in 1..1_000_000i64 {
        let an = Complex::real(-(Real::from_i64(i) * (&nr - Real::one() + Real::from_i64(i))));
        b = b.plus(&Complex::real(Real::from_i64(2)));
        d = an.times(&d).plus(&b);
        if d.abs().is_zero() {
            d = tiny.clone();
        }
        d = d.recip();
        c = b.plus(&an.over(&c));
        if c.abs().is_zero() {
            c = tiny.clone();
        }
        let del = c.times(&d);
        h = h.times(&del);
        if del.minus(&Complex::one()).abs() < eps {
            return Ok(h.times(&z.negate().exp()));
        }
    }
    Err(NumericError::Convergence(format!("E_{n} continued fraction did not converge")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::Precision;

    #[test]
    fn riccati_low_orders() {
        let r = |n, d| BigRational::new(BigInt::from(n), BigInt::from(d));
        // u_1 = w sin z - cos z
        let u1 = riccati_poly(1);
        assert_eq!(u1.sin, vec![r(0, 1), r(1, 1)]);
        assert_eq!(u1.cos, vec![r(-1, 1)]);
        // u_2 = (3w^2 - 1) sin z - 3w cos z
        let u2 = riccati_poly(2);
        assert_eq!(u2.sin, vec![r(-1, 1), r(0, 1), r(3, 1)]);
        assert_eq!(u2.cos, vec![r(0, 1), r(-3, 1)]);
    }

    #[test]
    fn gauss_legendre_exact_on_polynomials() {
        let _g = Precision::enter(192);
        let (x, w) = gauss_legendre(10);
        // int_{-1}^{1} x^18 = 2/19
        let s = x.iter().zip(&w).fold(Real::zero(), |acc, (x, w)| acc + w * x.powi(18));
        assert!((s - Real::frac(2, 19)).abs().to_f64() < 1e-50);
    }

    #[test]
    fn expint_values() {
        let _g = Precision::enter(192);
        // E_1(1) = 0.219383934395520273677163775460...
        let e1 = expint_e(1, &Complex::real(Real::one())).unwrap();
        assert!((e1.re - Real::parse("0.21938393439552027367716377546012164903").unwrap()).abs().to_f64() < 1e-35);
        // E_2(2i): mpmath expint(2, 2j)
        let e2 = expint_e(2, &Complex::new(Real::zero(), Real::from_i64(2))).unwrap();
        assert!((e2.re.to_f64() - (-0.346_913_536_531_545_94)).abs() < 1e-13, "{}", e2.re);
        assert!((e2.im.to_f64() - (-0.063_335_769_275_951_7)).abs() < 1e-13, "{}", e2.im);
    }

    #[test]
    fn hyp1f1_matches_exponential() {
        let _g = Precision::enter(192);
        // 1F1(a; a; y) = e^y
        let a = Complex::real(Real::frac(3, 2));
        let y = Jet::var(Complex::new(Real::zero(), Real::from_i64(5)), 2);
        let f = hyp1f1_jet(&a, &a, &y).unwrap();
        let want = y.exp();
        for k in 0..=2 {
            assert!(f.c[k].minus(&want.c[k]).abs().to_f64() < 1e-45);
        }
    }
}
