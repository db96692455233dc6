//! Fourier transform of rho - 1 for beta = 2, integer p, q = 0.
//!
//! FT(tau) = 2 int_0^inf (rho - 1) cos(tau x) dx. The range [0, X] is done
//! by composite Gauss-Legendre on unit panels. Beyond X the density is
//! expanded exactly as
//!   rho - 1 = sum_k w^k (a_k + b_k cos 2 pi x + c_k sin 2 pi x), w = 1/(pi x),
//! a finite sum, and each term is integrated with
//!   int_X^inf x^-k e^{i omega x} dx = X^{1-k} E_k(-i omega X).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::density::{density_jet, DensitySpec, FormulaId, PrecisionContext};
use crate::error::NumericError;
use crate::real::{Complex, Real};
use crate::special::{expint_e, gauss_legendre, riccati_poly};

const GL_HIGH: usize = 30;
const GL_LOW: usize = 20;

#[derive(Clone, Debug)]
pub struct FTResult {
    pub tau: Real,
    pub value: Real,
    pub error_estimate: Real,
    pub tail_model: String,
}

/// Exact large-x form of rho - 1, coefficients ascending in w = 1/(pi x).
#[derive(Clone, Debug, PartialEq)]
pub struct TailModel {
    pub p: u32,
    pub smooth: Vec<BigRational>,
    pub cos2: Vec<BigRational>,
    pub sin2: Vec<BigRational>,
}

type Poly = Vec<BigRational>;

fn pmul(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn padd(a: &[BigRational], b: &[BigRational], s: i64) -> Poly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    let s = BigRational::from_integer(BigInt::from(s));
    (0..n).map(|k| a.get(k).unwrap_or(&z) + &s * b.get(k).unwrap_or(&z)).collect()
}

fn pscale(a: &[BigRational], s: BigRational) -> Poly {
    a.iter().map(|c| c * &s).collect()
}

fn shift_w(a: &[BigRational]) -> Poly {
    let mut v = vec![BigRational::zero()];
    v.extend_from_slice(a);
    v
}

fn trim(mut v: Poly) -> Poly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl TailModel {
    pub fn beta2(p: u32) -> TailModel {
        let u = riccati_poly(p as i64 - 1);
        let v = riccati_poly(p as i64);
        let tp = -2 * p as i64;
        // coefficients of sin^2, cos^2 and sin cos
        let ss = padd(&padd(&pmul(&u.sin, &u.sin), &pmul(&v.sin, &v.sin), 1), &shift_w(&pmul(&u.sin, &v.sin)), tp);
        let cc = padd(&padd(&pmul(&u.cos, &u.cos), &pmul(&v.cos, &v.cos), 1), &shift_w(&pmul(&u.cos, &v.cos)), tp);
        let mixed = padd(&pmul(&u.sin, &v.cos), &pmul(&u.cos, &v.sin), 1);
        let sc = padd(
            &pscale(&padd(&pmul(&u.sin, &u.cos), &pmul(&v.sin, &v.cos), 1), BigRational::from_integer(2.into())),
            &shift_w(&mixed),
            tp,
        );
        let half = BigRational::new(1.into(), 2.into());
        let mut smooth = pscale(&padd(&ss, &cc, 1), half.clone());
        smooth[0] -= BigRational::from_integer(1.into());
        TailModel {
            p,
            smooth: trim(smooth),
            cos2: trim(pscale(&padd(&cc, &ss, -1), half.clone())),
            sin2: trim(pscale(&sc, half)),
        }
    }

    pub fn describe(&self) -> String {
        let k = self.smooth.len().max(self.cos2.len()).max(self.sin2.len()).saturating_sub(1);
        format!(
            "exact finite expansion rho - 1 = sum_(k<={k}) (pi x)^-k (a_k + b_k cos 2 pi x + c_k sin 2 pi x), tails by E_k continued fraction"
        )
    }

    /// rho - 1 from the expansion, for checking against the density.
    pub fn eval(&self, x: &Real) -> Real {
        let pi = Real::pi();
        let w = (&pi * x).recip();
        let z2 = &pi * x * Real::from_i64(2);
        let horner = |c: &[BigRational]| c.iter().rev().fold(Real::zero(), |acc, a| acc * &w + Real::from_rational(a));
        horner(&self.smooth) + horner(&self.cos2) * z2.cos() + horner(&self.sin2) * z2.sin()
    }

    /// 2 int_X^inf (rho - 1) cos(tau x) dx.
    fn tail(&self, tau: &Real, x_cut: &Real) -> Result<Real, NumericError> {
        let pi = Real::pi();
        let two_pi = &pi * Real::from_i64(2);
        // J_k(omega) = int_X^inf x^-k e^{i omega x} dx
        let j = |k: usize, omega: &Real| -> Result<Complex, NumericError> {
            let xk = x_cut.powi(k - 1).recip();
            if omega.is_zero() {
                if k < 2 {
                    return Err(NumericError::Unsupported("divergent 1/x tail at zero frequency".into()));
                }
                return Ok(Complex::real(xk / Real::from_i64(k as i64 - 1)));
            }
            if (omega * x_cut).abs().to_f64() < 1.0 {
                return Err(NumericError::Unsupported(format!(
                    "frequency {} too close to 0 or 2 pi for the tail cut",
                    omega.to_decimal(6)
                )));
            }
            let z = Complex::new(Real::zero(), -(omega * x_cut));
            Ok(expint_e(k as u32, &z)?.scale(&xk))
        };
        let mut total = Real::zero();
        let plus = &two_pi + tau;
        let minus = &two_pi - tau;
        for (k, a) in self.smooth.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let wk = pi.powi(k).recip() * Real::from_rational(a);
            total = total + &wk * j(k, tau)?.re * Real::from_i64(2);
        }
        for (k, b) in self.cos2.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let wk = pi.powi(k).recip() * Real::from_rational(b);
            total = total + &wk * (j(k, &plus)?.re + j(k, &minus)?.re);
        }
        for (k, c) in self.sin2.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let wk = pi.powi(k).recip() * Real::from_rational(c);
            let im = |o: &Real| -> Result<Real, NumericError> {
                if o.is_zero() {
                    Ok(Real::zero())
                } else {
                    Ok(j(k, o)?.im)
                }
            };
            total = total + &wk * (im(&plus)? + im(&minus)?);
        }
        Ok(total)
    }
}

struct Rule {
    x: Vec<Real>,
    w: Vec<Real>,
    f: Vec<Real>,
}

/// Density samples on the quadrature nodes, reused across tau.
pub struct FourierOracle {
    spec: DensitySpec,
    ctx: PrecisionContext,
    x_cut: Real,
    model: TailModel,
    high: Rule,
    low: Rule,
}

impl FourierOracle {
    pub fn new(spec: &DensitySpec, ctx: &PrecisionContext) -> Result<Self, NumericError> {
        let p = match (spec.beta, spec.formula()?) {
            (2, FormulaId::Beta2Elementary | FormulaId::Uniform) => spec.integer_p_q0().unwrap_or(0),
            _ => {
                return Err(NumericError::Unsupported(format!(
                    "numeric transform needs beta = 2, integer p, q = 0 (got beta = {}, p = {}, q = {})",
                    spec.beta, spec.p, spec.q
                )))
            }
        };
        if (ctx.tail_cut as f64) > ctx.x_max || ctx.tail_cut == 0 {
            return Err(NumericError::Precision(format!("tail cut {} outside (0, x_max]", ctx.tail_cut)));
        }
        let _g = ctx.enter();
        let rule = |n: usize| -> Result<Rule, NumericError> {
            let (t, w) = gauss_legendre(n);
            let mut xs = Vec::new();
            let mut ws = Vec::new();
            let mut fs = Vec::new();
            let half = Real::frac(1, 2);
            for m in 0..ctx.tail_cut {
                for (ti, wi) in t.iter().zip(&w) {
                    let x = Real::from_i64(m as i64) + (ti + Real::one()) * &half;
                    let rho = density_jet(spec, &x, 0, ctx)?.c.swap_remove(0);
                    fs.push(rho - Real::one());
                    xs.push(x);
                    ws.push(wi * &half);
                }
            }
            Ok(Rule { x: xs, w: ws, f: fs })
        };
        Ok(FourierOracle {
            spec: spec.clone(),
            ctx: ctx.clone(),
            x_cut: Real::from_i64(ctx.tail_cut as i64),
            model: TailModel::beta2(p),
            high: rule(GL_HIGH)?,
            low: rule(GL_LOW)?,
        })
    }

    pub fn spec(&self) -> &DensitySpec {
        &self.spec
    }

    pub fn tail_model(&self) -> &TailModel {
        &self.model
    }

    fn quad(rule: &Rule, tau: &Real) -> Real {
        let mut s = Real::zero();
        for ((x, w), f) in rule.x.iter().zip(&rule.w).zip(&rule.f) {
            s = s + w * f * (tau * x).cos();
        }
        s * Real::from_i64(2)
    }

    pub fn transform(&self, tau: &Real) -> Result<FTResult, NumericError> {
        let _g = self.ctx.enter();
        let tau_abs = tau.abs();
        let qh = Self::quad(&self.high, &tau_abs);
        let ql = Self::quad(&self.low, &tau_abs);
        let tail = self.model.tail(&tau_abs, &self.x_cut)?;
        let n = Real::from_i64((self.high.x.len() + 16) as i64);
        let err = (&qh - &ql).abs() + self.ctx.eps() * n;
        Ok(FTResult { tau: tau.clone(), value: qh + tail, error_estimate: err, tail_model: self.model.describe() })
    }
}

/// FT of rho - 1 at tau (beta = 2, integer p, q = 0).
pub fn fourier_transform(tau: &Real, spec: &DensitySpec, ctx: &PrecisionContext) -> Result<FTResult, NumericError> {
    FourierOracle::new(spec, ctx)?.transform(tau)
}

/// int (rho - 1) dx, the zero frequency limit; -p for q = 0.
pub fn screening_integral(spec: &DensitySpec, ctx: &PrecisionContext) -> Result<FTResult, NumericError> {
    let _g = ctx.enter();
    fourier_transform(&Real::zero(), spec, ctx)
}

/// Smallest |tau| accepted by the tail model at the given cut, other than 0.
pub fn min_tau(ctx: &PrecisionContext) -> f64 {
    1.0 / ctx.tail_cut.to_f64().unwrap_or(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_model_p1() {
        // rho - 1 = -w^2 sin^2(pi x) = -w^2/2 + w^2/2 cos 2 pi x
        let m = TailModel::beta2(1);
        let h = BigRational::new(1.into(), 2.into());
        assert_eq!(m.smooth, vec![BigRational::zero(), BigRational::zero(), -h.clone()]);
        assert_eq!(m.cos2, vec![BigRational::zero(), BigRational::zero(), h]);
        assert!(m.sin2.is_empty());
    }

    #[test]
    fn tail_model_matches_density() {
        let ctx = PrecisionContext::default();
        let _g = ctx.enter();
        for p in 1..=3 {
            let m = TailModel::beta2(p);
            let x = Real::frac(37, 3);
            let rho = density_jet(&DensitySpec::beta2(p as i64, 0), &x, 0, &ctx).unwrap().c.swap_remove(0);
            assert!((m.eval(&x) - (rho - Real::one())).abs() < Real::parse("1e-38").unwrap(), "p = {p}");
        }
    }
}
