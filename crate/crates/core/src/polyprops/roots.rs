//! Zeros of the u-polynomials at high precision and the interlacing test.

use cjft_numeric::{Complex, PrecisionContext, Real};
use serde_json::{json, Value};

use super::upoly::UPoly;
use crate::error::CoreError;

#[derive(Clone, Debug)]
pub struct ZeroReport {
    pub degree: usize,
    /// Repeated according to multiplicity.
    pub roots: Vec<Complex>,
    pub multiplicity: Vec<usize>,
    pub modulus_deviation: Vec<Real>,
    pub on_unit_circle: Vec<bool>,
    /// |P(root)| for the square-free factor the root came from.
    pub residuals: Vec<Real>,
    /// Root arguments in (-pi, pi], sorted.
    pub arguments: Vec<Real>,
    pub tol: Real,
    pub digits: u32,
}

impl ZeroReport {
    pub fn all_on_circle(&self) -> bool {
        self.on_unit_circle.iter().all(|b| *b)
    }

    pub fn max_deviation(&self) -> Real {
        self.modulus_deviation.iter().fold(Real::zero(), |m, v| m.max(v))
    }

    pub fn to_json(&self) -> Value {
        let d = self.digits as usize;
        json!({
            "degree": self.degree,
            "tol": self.tol.to_decimal(3),
            "roots": self.roots.iter().zip(&self.multiplicity).zip(&self.modulus_deviation).zip(&self.on_unit_circle).zip(&self.residuals)
                .map(|((((z, m), dev), on), res)| json!({
                    "re": z.re.to_decimal(d),
                    "im": z.im.to_decimal(d),
                    "multiplicity": m,
                    "modulus_deviation": dev.to_decimal(5),
                    "on_unit_circle": on,
                    "residual": res.to_decimal(5),
                }))
                .collect::<Vec<_>>(),
            "arguments": self.arguments.iter().map(|a| a.to_decimal(d)).collect::<Vec<_>>(),
        })
    }
}

fn horner(c: &[Complex], z: &Complex) -> (Complex, Complex) {
    let mut p = Complex::zero();
    let mut dp = Complex::zero();
    for a in c.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + a;
    }
    (p, dp)
}

/// Aberth-Ehrlich iteration on a square-free polynomial.
fn aberth(f: &UPoly) -> Result<Vec<Complex>, CoreError> {
    let n = f.degree().unwrap_or(0);
    let c: Vec<Complex> = f.coefficients.iter().map(|r| Complex::real(Real::from_rational(r))).collect();
    if n == 1 {
        return Ok(vec![(&c[0] / &c[1]).scale(&Real::from_i64(-1))]);
    }
    let lead = c[n].abs();
    let radius = Real::from_f64((c[0].abs() / lead).to_f64().abs().powf(1.0 / n as f64).max(1e-3));
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let t = Real::from_f64(2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4);
            Complex::cis(&t).scale(&radius)
        })
        .collect();
    let bits = cjft_numeric::real::working_bits();
    let eps = Real::one() / Real::from_i64(2).powi(bits.saturating_sub(16));
    for _ in 0..2000 {
        let mut worst = Real::zero();
        for k in 0..n {
            let (p, dp) = horner(&c, &z[k]);
            if p.abs().is_zero() {
                continue;
            }
            let ratio = &p / &dp;
            let mut s = Complex::zero();
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    s = &s + &(&z[k] - zj).recip();
                }
            }
            let w = &ratio / &(&Complex::one() - &(&ratio * &s));
            worst = worst.max(&w.abs());
            z[k] = &z[k] - &w;
        }
        if worst < eps {
            return Ok(z);
        }
    }
    Err(CoreError::Shape(format!("root finding did not converge for degree {n}")))
}

/// All zeros of P with ||root| - 1| < tol flags. A nonzero constant gives
/// an empty report.
pub fn zeros_on_unit_circle(p: &UPoly, tol: &str, ctx: &PrecisionContext) -> Result<ZeroReport, CoreError> {
    let degree = p.degree().ok_or_else(|| CoreError::Shape("zeros of the zero polynomial".into()))?;
    let _g = ctx.enter();
    let tol = Real::parse(tol).ok_or_else(|| CoreError::Shape(format!("bad tolerance {tol}")))?;
    let mut roots = Vec::new();
    let mut mult = Vec::new();
    let mut residuals = Vec::new();
    for (f, m) in p.square_free() {
        let c: Vec<Complex> = f.coefficients.iter().map(|r| Complex::real(Real::from_rational(r))).collect();
        for z in aberth(&f)? {
            let res = horner(&c, &z).0.abs();
            for _ in 0..m {
                roots.push(z.clone());
                mult.push(m);
                residuals.push(res.clone());
            }
        }
    }
    if roots.len() != degree {
        return Err(CoreError::Shape(format!("found {} roots for degree {degree}", roots.len())));
    }
    let modulus_deviation: Vec<Real> = roots.iter().map(|z| (z.abs() - Real::one()).abs()).collect();
    let on_unit_circle = modulus_deviation.iter().map(|d| d < &tol).collect();
    let mut arguments: Vec<Real> = roots.iter().map(|z| z.arg()).collect();
    arguments.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    Ok(ZeroReport {
        degree,
        roots,
        multiplicity: mult,
        modulus_deviation,
        on_unit_circle,
        residuals,
        arguments,
        tol,
        digits: ctx.digits,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interlacing {
    /// Zeros with argument in (0, pi), real zeros u = +-1 excluded, alternate.
    pub upper_half: bool,
    /// All arguments in (-pi, pi] alternate when merged; reported only.
    pub full_circle: bool,
}

fn alternates(a: &[Real], b: &[Real], tol: &Real) -> bool {
    let mut all: Vec<(&Real, u8)> = a.iter().map(|x| (x, 0u8)).chain(b.iter().map(|x| (x, 1u8))).collect();
    all.sort_by(|x, y| x.0.partial_cmp(y.0).unwrap_or(std::cmp::Ordering::Equal));
    for w in all.windows(2) {
        if w[0].1 == w[1].1 || (w[1].0 - w[0].0).abs() < *tol {
            return false;
        }
    }
    true
}

/// Interlacing of each adjacent pair of reports.
pub fn check_interlacing(reports: &[ZeroReport], ctx: &PrecisionContext) -> Result<Vec<Interlacing>, CoreError> {
    if let Some(r) = reports.iter().find(|r| !r.all_on_circle()) {
        return Err(CoreError::Shape(format!("degree {} polynomial has zeros off the unit circle", r.degree)));
    }
    let _g = ctx.enter();
    let pi = Real::pi();
    let upper = |r: &ZeroReport| -> Vec<Real> {
        r.arguments.iter().filter(|a| **a > r.tol && (&pi - *a) > r.tol).cloned().collect()
    };
    Ok(reports
        .windows(2)
        .map(|w| {
            let tol = w[0].tol.max(&w[1].tol);
            Interlacing {
                upper_half: alternates(&upper(&w[0]), &upper(&w[1]), &tol),
                full_circle: alternates(&w[0].arguments, &w[1].arguments, &tol),
            }
        })
        .collect())
}
