//! Scaled densities near the singularity.
//!
//! beta = 2: elementary Riccati-Bessel form for integer p and q = 0, and the
//! confluent hypergeometric form for p in (1/2)Z, p >= 1/2, any rational q.
//! beta = 4, q = 0: elementary form for integer p with the Bessel integral
//! summed as a series.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::NumericError;
use crate::jet::{Jet, Scalar};
use crate::real::{working_bits, Complex, Precision, Real};
use crate::special::{hyp1f1_jet, riccati_pair_jet};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrecisionContext {
    /// Working precision in decimal digits.
    pub digits: u32,
    /// Largest |x| accepted by the density evaluators.
    pub x_max: f64,
    /// Cut between quadrature and analytic tails in the transforms.
    pub tail_cut: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext { digits: 40, x_max: 400.0, tail_cut: 40 }
    }
}

impl PrecisionContext {
    pub fn with_digits(digits: u32) -> Result<Self, NumericError> {
        if digits < 20 {
            return Err(NumericError::Precision(format!("need at least 20 digits, got {digits}")));
        }
        Ok(PrecisionContext { digits, ..Default::default() })
    }

    pub fn bits(&self) -> usize {
        (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
    }

    /// Set the working precision for the current scope.
    pub fn enter(&self) -> Precision {
        Precision::enter(self.bits())
    }

    /// 10^-digits at the working precision.
    pub fn eps(&self) -> Real {
        Real::one() / Real::from_i64(10).powi(self.digits as usize)
    }

    fn check_x(&self, x: &Real) -> Result<(), NumericError> {
        if !x.is_finite() || x.abs().to_f64() > self.x_max {
            return Err(NumericError::Precision(format!("|x| = {} exceeds x_max = {}", x.to_decimal(8), self.x_max)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    /// p = q = 0, rho = 1.
    Uniform,
    Beta2Elementary,
    Beta2Hypergeometric,
    Beta4Elementary,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensitySpec {
    pub beta: u32,
    pub p: BigRational,
    pub q: BigRational,
}

impl DensitySpec {
    pub fn beta2(p: i64, q: i64) -> Self {
        DensitySpec { beta: 2, p: BigRational::from_integer(p.into()), q: BigRational::from_integer(q.into()) }
    }

    pub fn beta4(p: i64) -> Self {
        DensitySpec { beta: 4, p: BigRational::from_integer(p.into()), q: BigRational::zero() }
    }

    /// Integer p >= 0 with q = 0.
    pub fn integer_p_q0(&self) -> Option<u32> {
        if self.q.is_zero() && self.p.is_integer() && !self.p.is_negative() {
            self.p.to_integer().to_u32()
        } else {
            None
        }
    }

    pub fn formula(&self) -> Result<FormulaId, NumericError> {
        match self.beta {
            2 => match self.integer_p_q0() {
                Some(0) => Ok(FormulaId::Uniform),
                Some(_) => Ok(FormulaId::Beta2Elementary),
                None => {
                    half_integer_p(&self.p)?;
                    Ok(FormulaId::Beta2Hypergeometric)
                }
            },
            4 => match self.integer_p_q0() {
                Some(0) => Ok(FormulaId::Uniform),
                Some(_) => Ok(FormulaId::Beta4Elementary),
                None => Err(NumericError::Unsupported("beta = 4 needs integer p >= 0 and q = 0".into())),
            },
            b => Err(NumericError::Unsupported(format!("beta = {b}"))),
        }
    }
}

/// 2p as an integer >= 1, when p is a positive multiple of 1/2.
fn half_integer_p(p: &BigRational) -> Result<u32, NumericError> {
    let two_p = p * BigRational::from_integer(2.into());
    if two_p.is_integer() && two_p.is_positive() {
        if let Some(n) = two_p.to_integer().to_u32() {
            return Ok(n);
        }
    }
    Err(NumericError::Unsupported(format!("hypergeometric route needs p in {{1/2, 1, 3/2, ...}}, got {p}")))
}

/// Guard bits lost to cancellation near the origin and to argument
/// reduction at large |z|.
fn elementary_guard(z: f64, p: u32) -> usize {
    let small = if z < 1.0 { ((2 * p + 2) as f64 * (1.0 / z).log2()).ceil() as usize } else { 0 };
    small + (z.abs() + 1.0).log2().ceil() as usize + 24
}

fn jet_x(x: &Real, order: usize) -> Jet<Real> {
    Jet::var(x.clone(), order)
}

fn reflect(j: Jet<Real>) -> Jet<Real> {
    Jet { c: j.c.into_iter().enumerate().map(|(k, v)| if k % 2 == 1 { -v } else { v }).collect() }
}

/// u_{p-1}^2 + u_p^2 - 2p w u_{p-1} u_p at z = pi x (beta = 2, q = 0).
pub fn density_beta2_elementary_jet(x: &Real, p: u32, order: usize) -> Result<Jet<Real>, NumericError> {
    if p == 0 {
        return Ok(Jet::constant(Real::one(), order));
    }
    if x.is_zero() {
        if order > 0 {
            return Err(NumericError::Domain("derivatives at x = 0".into()));
        }
        return Ok(Jet::constant(Real::zero(), 0));
    }
    let xf = x.abs().to_f64();
    let out_bits = working_bits();
    let res = {
        let _g = Precision::extra(elementary_guard(std::f64::consts::PI * xf, p));
        let z = jet_x(x, order).scale_real(&Real::pi());
        beta2_core(&z, p)
    };
    Ok(round_jet(res, out_bits))
}

fn beta2_core(z: &Jet<Real>, p: u32) -> Jet<Real> {
    let (a, b) = riccati_pair_jet(p as i64, z);
    let w = z.recip();
    let cross = a.mul(&b).mul(&w).scale_real(&Real::from_i64(2 * p as i64));
    a.mul(&a).add(&b.mul(&b)).sub(&cross)
}

fn round_jet(j: Jet<Real>, bits: usize) -> Jet<Real> {
    let _g = Precision::enter(bits);
    Jet { c: j.c.into_iter().map(|v| &v + &Real::zero()).collect() }
}

fn real_from_big(r: &BigRational) -> Real {
    Real::from_rational(r)
}

fn cosh(x: &Real) -> Real {
    let e = x.exp();
    (&e + e.recip()) / Real::from_i64(2)
}

/// |Gamma(p + 1 - iq)|^2 for 2p a nonnegative integer.
fn gamma_abs2(two_p: u32, q: &Real) -> Real {
    let pi = Real::pi();
    let piq = &pi * q;
    if two_p.is_multiple_of(2) {
        let base = if q.is_zero() { Real::one() } else { &piq / piq.sinh() };
        (1..=two_p / 2).fold(base, |acc, k| {
            let k = Real::from_i64(k as i64);
            acc * (&k * &k + q * q)
        })
    } else {
        let m = (two_p - 1) / 2;
        let base = &pi / cosh(&piq);
        (0..=m).fold(base, |acc, k| {
            let k = Real::frac(2 * k as i64 + 1, 2);
            acc * (&k * &k + q * q)
        })
    }
}

fn factorial(n: u32) -> Real {
    (2..=n as i64).fold(Real::one(), |a, k| a * Real::from_i64(k))
}

/// Confluent hypergeometric form,
/// rho = C e^{-2i pi x - q pi sgn x} |x|^{2p} [ (x F1)' F2 - x F1 F2' ],
/// F1 = 1F1(p+1-iq; 2p+2; 2i pi x), F2 = 1F1(p-iq; 2p; 2i pi x),
/// C = (2 pi)^{2p} |Gamma(p+1-iq)|^2 / ((2p+1)! (2p)!).
pub fn density_beta2_hypergeometric_jet(
    x: &Real,
    p: &BigRational,
    q: &BigRational,
    order: usize,
) -> Result<Jet<Real>, NumericError> {
    let two_p = half_integer_p(p)?;
    if x.is_zero() {
        if order > 0 {
            return Err(NumericError::Domain("derivatives at x = 0".into()));
        }
        return Ok(Jet::constant(Real::zero(), 0));
    }
    let out_bits = working_bits();
    let xf = x.abs().to_f64();
    let guard = (2.0 * std::f64::consts::PI * xf * std::f64::consts::LOG2_E).ceil() as usize
        + (q.abs().to_f64().unwrap_or(0.0) * 5.0).ceil() as usize
        + 32;
    let res = {
        let _g = Precision::extra(guard);
        let pi = Real::pi();
        let pr = real_from_big(p);
        let qr = real_from_big(q);
        let xj = Jet::var(Complex::real(x.clone()), order + 1);
        let y = xj.scale(&Complex::new(Real::zero(), &pi * Real::from_i64(2)));
        let a1 = Complex::new(&pr + Real::one(), -&qr);
        let b1 = Complex::real(Real::from_i64(two_p as i64 + 2));
        let a2 = Complex::new(pr.clone(), -&qr);
        let b2 = Complex::real(Real::from_i64(two_p as i64));
        let f1 = hyp1f1_jet(&a1, &b1, &y)?;
        let f2 = hyp1f1_jet(&a2, &b2, &y)?;
        let a = xj.mul(&f1);
        let bracket = differentiate(&a).mul(&truncate(&f2)).sub(&truncate(&a).mul(&differentiate(&f2)));
        let xo = Jet::var(Complex::real(x.clone()), order);
        let sgn = if x.is_negative() { -Real::one() } else { Real::one() };
        let ax = xo.scale_real(&sgn);
        let pow = (0..two_p).fold(Jet::constant(Complex::one(), order), |acc, _| acc.mul(&ax));
        let phase = xo.scale(&Complex::new(Real::zero(), -(&pi * Real::from_i64(2)))).exp();
        let c = (&pi * Real::from_i64(2)).powi(two_p as usize) * gamma_abs2(two_p, &qr)
            / (factorial(two_p + 1) * factorial(two_p))
            * (-(&qr * &pi * &sgn)).exp();
        let full = bracket.mul(&phase).mul(&pow).scale_real(&c);
        // imaginary part vanishes analytically
        let im = full.c.iter().map(|z| z.im.abs()).fold(Real::zero(), |m, v| m.max(&v));
        let re = full.c.iter().map(|z| z.re.abs()).fold(Real::one(), |m, v| m.max(&v));
        let tol = Real::one() / Real::from_i64(2).powi(out_bits.saturating_sub(8));
        if im > &tol * &re {
            return Err(NumericError::Precision(format!("imaginary residue {} in 1F1 density", im.to_decimal(5))));
        }
        full.re()
    };
    Ok(round_jet(res, out_bits))
}

fn differentiate<T: Scalar>(j: &Jet<T>) -> Jet<T> {
    Jet { c: (1..j.c.len()).map(|k| j.c[k].times_real(&Real::from_i64(k as i64))).collect() }
}

fn truncate<T: Scalar>(j: &Jet<T>) -> Jet<T> {
    Jet { c: j.c[..j.c.len() - 1].to_vec() }
}

/// int_0^Z j_n(t) dt = sum_k (-1/2)^k Z^{n+2k+1} / (k! (2n+2k+1)!! (n+2k+1)).
pub fn spherical_bessel_integral(n: u32, z: &Real) -> Real {
    let out_bits = working_bits();
    let zf = z.abs().to_f64();
    let res = {
        let _g = Precision::extra((zf * std::f64::consts::LOG2_E).ceil() as usize + 32);
        let eps = Real::one() / Real::from_i64(2).powi(working_bits());
        let z2 = z * z;
        let mut dfact = Real::one();
        for m in (1..=2 * n as i64 + 1).step_by(2) {
            dfact = dfact * Real::from_i64(m);
        }
        // t_k = (-1/2)^k Z^{n+2k+1} / (k! (2n+2k+1)!!)
        let mut t = z.powi(n as usize + 1) / dfact;
        let mut sum = Real::zero();
        let mut k = 0i64;
        loop {
            let term = &t / Real::from_i64(n as i64 + 2 * k + 1);
            sum = sum + &term;
            if k as f64 > zf && term.abs() <= &eps * sum.abs().max(&Real::one()) {
                break;
            }
            k += 1;
            t = -(&t * &z2) / Real::from_i64(2 * k * (2 * n as i64 + 2 * k + 1));
        }
        sum
    };
    let _g = Precision::enter(out_bits);
    res + Real::zero()
}

/// beta = 4, q = 0, integer p, x > 0, Z = 2 pi x, n = 2p:
/// rho = u_{n-1}^2 + u_n^2 - (2n/Z) u_{n-1} u_n - (2p/Z) u_{n-1} I(Z), with
/// I = int_0^Z j_n. x < 0 is taken by evenness.
pub fn density_beta4_q0_jet(x: &Real, p: u32, order: usize) -> Result<Jet<Real>, NumericError> {
    if p == 0 {
        return Ok(Jet::constant(Real::one(), order));
    }
    if x.is_zero() {
        if order > 0 {
            return Err(NumericError::Domain("derivatives at x = 0".into()));
        }
        return Ok(Jet::constant(Real::zero(), 0));
    }
    if x.is_negative() {
        return Ok(reflect(density_beta4_q0_jet(&x.abs(), p, order)?));
    }
    let n = 2 * p;
    let out_bits = working_bits();
    let zf = 2.0 * std::f64::consts::PI * x.to_f64();
    let res = {
        let _g = Precision::extra(elementary_guard(zf, n));
        let two_pi = Real::pi() * Real::from_i64(2);
        let z = jet_x(x, order).scale_real(&two_pi);
        let (a, b) = riccati_pair_jet(n as i64, &z);
        let w = z.recip();
        let base = a.mul(&a).add(&b.mul(&b)).sub(&a.mul(&b).mul(&w).scale_real(&Real::from_i64(2 * n as i64)));
        // dI/dx = j_n(Z) Z' = u_n(Z) w 2 pi
        let i0 = spherical_bessel_integral(n, &z.c[0]);
        let di = b.mul(&w).scale_real(&two_pi);
        let ij = Jet { c: di.c[..order].to_vec() }.integrate(i0);
        let corr = w.mul(&a).mul(&ij).scale_real(&Real::from_i64(2 * p as i64));
        base.sub(&corr)
    };
    Ok(round_jet(res, out_bits))
}

/// Density jet of the given order at x for any supported spec.
pub fn density_jet(spec: &DensitySpec, x: &Real, order: usize, ctx: &PrecisionContext) -> Result<Jet<Real>, NumericError> {
    ctx.check_x(x)?;
    let _g = ctx.enter();
    match spec.formula()? {
        FormulaId::Uniform => Ok(Jet::constant(Real::one(), order)),
        FormulaId::Beta2Elementary => density_beta2_elementary_jet(x, spec.integer_p_q0().unwrap_or(0), order),
        FormulaId::Beta2Hypergeometric => density_beta2_hypergeometric_jet(x, &spec.p, &spec.q, order),
        FormulaId::Beta4Elementary => density_beta4_q0_jet(x, spec.integer_p_q0().unwrap_or(0), order),
    }
}

/// beta = 2 density: elementary for integer p >= 0 with q = 0, otherwise
/// the hypergeometric series.
pub fn density_beta2(x: &Real, p: &BigRational, q: &BigRational, ctx: &PrecisionContext) -> Result<Real, NumericError> {
    let spec = DensitySpec { beta: 2, p: p.clone(), q: q.clone() };
    Ok(density_jet(&spec, x, 0, ctx)?.c.swap_remove(0))
}

/// beta = 2 density through the hypergeometric series regardless of p, q.
pub fn density_beta2_series(x: &Real, p: &BigRational, q: &BigRational, ctx: &PrecisionContext) -> Result<Real, NumericError> {
    ctx.check_x(x)?;
    let _g = ctx.enter();
    Ok(density_beta2_hypergeometric_jet(x, p, q, 0)?.c.swap_remove(0))
}

pub fn density_beta4_q0(x: &Real, p: u32, ctx: &PrecisionContext) -> Result<Real, NumericError> {
    density_jet(&DensitySpec::beta4(p as i64), x, 0, ctx).map(|mut j| j.c.swap_remove(0))
}

/// max |rho(x; p, q) - rho(-x; p, -q)| over the sample points.
pub fn kummer_symmetry_defect(xs: &[Real], p: &BigRational, q: &BigRational, ctx: &PrecisionContext) -> Result<Real, NumericError> {
    let mut worst = Real::zero();
    for x in xs {
        let a = density_beta2(x, p, q, ctx)?;
        let b = density_beta2(&-x, p, &-q, ctx)?;
        let _g = ctx.enter();
        worst = worst.max(&(a - b).abs());
    }
    Ok(worst)
}

#[derive(Clone, Debug)]
pub struct DensityProfile {
    pub beta: u32,
    pub p: BigRational,
    pub q: BigRational,
    pub formula: FormulaId,
    pub digits: u32,
    pub grid: Vec<Real>,
    pub values: Vec<Real>,
}

impl DensityProfile {
    pub fn sample(spec: &DensitySpec, grid: Vec<Real>, ctx: &PrecisionContext) -> Result<Self, NumericError> {
        let formula = spec.formula()?;
        let values = grid.iter().map(|x| density_jet(spec, x, 0, ctx).map(|mut j| j.c.swap_remove(0))).collect::<Result<_, _>>()?;
        Ok(DensityProfile { beta: spec.beta, p: spec.p.clone(), q: spec.q.clone(), formula, digits: ctx.digits, grid, values })
    }

    /// n + 1 equally spaced points on [-x_max, x_max], or [0, x_max] when
    /// `half` is set.
    pub fn uniform_grid(x_max: &BigRational, n: usize, half: bool) -> Vec<Real> {
        let n = n.max(1);
        let lo = if half { BigRational::zero() } else { -x_max.clone() };
        let step = (x_max - &lo) / BigRational::from_integer(BigInt::from(n));
        (0..=n).map(|k| Real::from_rational(&(&lo + &step * BigRational::from_integer(BigInt::from(k))))).collect()
    }
}
