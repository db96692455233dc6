//! Arbitrary precision reals and complex numbers over astro-float.
//!
//! Arithmetic runs at a thread-local working precision, set for a scope by
//! [`Precision::enter`].

use std::cell::{Cell, RefCell};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as BSign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static BITS: Cell<usize> = const { Cell::new(256) };
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

/// Current working precision in bits.
pub fn working_bits() -> usize {
    BITS.with(|b| b.get())
}

/// Restores the previous working precision on drop.
pub struct Precision {
    prev: usize,
}

impl Precision {
    pub fn enter(bits: usize) -> Precision {
        let bits = bits.div_ceil(64) * 64;
        let prev = BITS.with(|b| b.replace(bits));
        Precision { prev }
    }

    /// Raise the precision by `extra` bits for the scope.
    pub fn extra(extra: usize) -> Precision {
        Self::enter(working_bits() + extra)
    }
}

impl Drop for Precision {
    fn drop(&mut self) {
        BITS.with(|b| b.set(self.prev));
    }
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone, Debug)]
pub struct Real(pub BigFloat);

impl Real {
    pub fn zero() -> Real {
        Real(BigFloat::from_i64(0, working_bits()))
    }

    pub fn one() -> Real {
        Real::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Real {
        Real(BigFloat::from_i64(n, working_bits()))
    }

    pub fn from_f64(x: f64) -> Real {
        Real(BigFloat::from_f64(x, working_bits()))
    }

    pub fn from_bigint(n: &BigInt) -> Real {
        let p = working_bits();
        with_cc(|cc| Real(BigFloat::parse(&n.to_string(), astro_float::Radix::Dec, p, RM, cc)))
    }

    pub fn from_rational(r: &BigRational) -> Real {
        Real::from_bigint(r.numer()) / Real::from_bigint(r.denom())
    }

    pub fn frac(n: i64, d: i64) -> Real {
        Real::from_i64(n) / Real::from_i64(d)
    }

    /// Parse a decimal string such as "-1.25e-3".
    pub fn parse(s: &str) -> Option<Real> {
        let p = working_bits();
        let v = with_cc(|cc| BigFloat::parse(s.trim(), astro_float::Radix::Dec, p, RM, cc));
        if v.is_nan() {
            None
        } else {
            Some(Real(v))
        }
    }

    pub fn pi() -> Real {
        let p = working_bits();
        with_cc(|cc| Real(cc.pi(p, RM)))
    }

    pub fn sin(&self) -> Real {
        let p = working_bits();
        with_cc(|cc| Real(self.0.sin(p, RM, cc)))
    }

    pub fn cos(&self) -> Real {
        let p = working_bits();
        with_cc(|cc| Real(self.0.cos(p, RM, cc)))
    }

    pub fn exp(&self) -> Real {
        let p = working_bits();
        with_cc(|cc| Real(self.0.exp(p, RM, cc)))
    }

    pub fn sinh(&self) -> Real {
        let p = working_bits();
        with_cc(|cc| Real(self.0.sinh(p, RM, cc)))
    }

    pub fn sqrt(&self) -> Real {
        Real(self.0.sqrt(working_bits(), RM))
    }

    pub fn abs(&self) -> Real {
        Real(self.0.abs())
    }

    pub fn recip(&self) -> Real {
        Real(self.0.reciprocal(working_bits(), RM))
    }

    pub fn powi(&self, n: usize) -> Real {
        Real(self.0.powi(n, working_bits(), RM))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Exact value as m * 2^e.
    pub fn to_scaled_int(&self) -> Option<(BigInt, i64)> {
        if self.0.is_zero() {
            return Some((BigInt::zero(), 0));
        }
        let (words, _n, sign, e, _) = self.0.as_raw_parts()?;
        let mut digits = Vec::with_capacity(words.len() * 2);
        for w in words {
            let w = *w;
            digits.push(w as u32);
            digits.push((w >> 32) as u32);
        }
        let s = if sign == Sign::Neg { BSign::Minus } else { BSign::Plus };
        let m = BigInt::from_slice(s, &digits);
        Some((m, e as i64 - 64 * words.len() as i64))
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        let (m, e) = self.to_scaled_int()?;
        let one = BigInt::from(1);
        Some(if e >= 0 {
            BigRational::from_integer(m << e as usize)
        } else {
            BigRational::new(m, one << (-e) as usize)
        })
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf() {
            return if self.0.is_inf_pos() { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        let Some((m, e)) = self.to_scaled_int() else { return f64::NAN };
        let bits = m.bits() as i64;
        let shift = (bits - 64).max(0);
        let top = (&m >> shift as usize).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi((e + shift).clamp(-2000, 2000) as i32)
    }

    /// Decimal string with `digits` significant digits, e.g. "-1.234e-5".
    pub fn to_decimal(&self, digits: usize) -> String {
        if !self.is_finite() {
            return format!("{}", self.to_f64());
        }
        let Some(r) = self.to_rational() else { return "nan".into() };
        if r.is_zero() {
            return "0".into();
        }
        let neg = r.is_negative();
        let r = r.abs();
        let ten = BigRational::from_integer(10.into());
        // decimal exponent: 10^k <= r < 10^{k+1}
        let mut k = (self.abs().to_f64().log10().floor()) as i64;
        let pow = |k: i64| -> BigRational {
            if k >= 0 {
                BigRational::from_integer(BigInt::from(10).pow(k as u32))
            } else {
                BigRational::new(1.into(), BigInt::from(10).pow((-k) as u32))
            }
        };
        while r < pow(k) {
            k -= 1;
        }
        while r >= pow(k + 1) {
            k += 1;
        }
        let scaled = &r / pow(k) * pow(digits as i64 - 1);
        let mut m = (scaled + BigRational::new(1.into(), 2.into())).floor().to_integer();
        if m >= BigInt::from(10).pow(digits as u32) {
            m /= 10;
            k += 1;
        }
        let _ = ten;
        let s = m.to_string();
        let (head, tail) = s.split_at(1);
        let tail = tail.trim_end_matches('0');
        let mant = if tail.is_empty() { head.to_string() } else { format!("{head}.{tail}") };
        let sign = if neg { "-" } else { "" };
        if k == 0 {
            format!("{sign}{mant}")
        } else {
            format!("{sign}{mant}e{k}")
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((working_bits() as f64) * std::f64::consts::LOG10_2) as usize - 2);
        write!(f, "{}", self.to_decimal(digits.max(1)))
    }
}

macro_rules! real_binop {
    ($tr:ident, $f:ident, $m:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $f(self, rhs: &Real) -> Real {
                Real(self.0.$m(&rhs.0, working_bits(), RM))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $f(self, rhs: Real) -> Real {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $f(self, rhs: &Real) -> Real {
                (&self).$f(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $f(self, rhs: Real) -> Real {
                self.$f(&rhs)
            }
        }
    };
}

real_binop!(Add, add, add);
real_binop!(Sub, sub, sub);
real_binop!(Mul, mul, mul);
real_binop!(Div, div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Complex {
        Complex { re, im }
    }

    pub fn real(re: Real) -> Complex {
        Complex { re, im: Real::zero() }
    }

    pub fn zero() -> Complex {
        Complex::real(Real::zero())
    }

    pub fn one() -> Complex {
        Complex::real(Real::one())
    }

    pub fn i() -> Complex {
        Complex::new(Real::zero(), Real::one())
    }

    /// e^{i t}
    pub fn cis(t: &Real) -> Complex {
        Complex::new(t.cos(), t.sin())
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, r: &Real) -> Complex {
        Complex::new(&self.re * r, &self.im * r)
    }

    pub fn recip(&self) -> Complex {
        let n = self.norm_sqr();
        Complex::new(&self.re / &n, -(&self.im / &n))
    }

    pub fn exp(&self) -> Complex {
        Complex::cis(&self.im).scale(&self.re.exp())
    }

    /// Argument in (-pi, pi].
    pub fn arg(&self) -> Real {
        let p = working_bits();
        let pi = Real::pi();
        if self.re.is_zero() {
            let h = &pi / Real::from_i64(2);
            return if self.im.is_negative() { -h } else { h };
        }
        let t = with_cc(|cc| Real((&self.im / &self.re).0.atan(p, RM, cc)));
        if self.re.is_negative() {
            if self.im.is_negative() {
                t - pi
            } else {
                t + pi
            }
        } else {
            t
        }
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        self * &rhs.recip()
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_output() {
        let _g = Precision::enter(200);
        assert_eq!(Real::frac(1, 4).to_decimal(10), "2.5e-1");
        assert_eq!(Real::from_i64(-1234).to_decimal(3), "-1.23e3");
        assert_eq!(Real::from_i64(999).to_decimal(2), "1e3");
        let pi = Real::pi().to_decimal(30);
        assert_eq!(pi, "3.14159265358979323846264338328");
        assert!((Real::pi().to_f64() - std::f64::consts::PI).abs() < 1e-15);
        assert_eq!(Real::parse("-1.5e-3").unwrap().to_decimal(5), "-1.5e-3");
    }

    #[test]
    fn rational_round_trip() {
        let _g = Precision::enter(128);
        let x = Real::frac(-7, 8);
        assert_eq!(x.to_rational().unwrap(), BigRational::new((-7).into(), 8.into()));
        assert_eq!(Real::zero().to_decimal(5), "0");
    }

    #[test]
    fn complex_basics() {
        let _g = Precision::enter(128);
        let z = Complex::new(Real::from_i64(-1), Real::zero());
        assert!((z.arg().to_f64() - std::f64::consts::PI).abs() < 1e-15);
        let w = &Complex::i() * &Complex::i();
        assert_eq!(w.re, Real::from_i64(-1));
    }
}
