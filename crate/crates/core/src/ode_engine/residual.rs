//! Numeric residuals of the x-space equations on densities from the
//! numeric oracle, with derivatives from Taylor jets.

use cjft_exact::{BigRational, GaussianRational};
use cjft_numeric::{density_jet, DensitySpec, PrecisionContext, Real};
use num_traits::Zero;

use super::operator::LinearOde;
use crate::error::CoreError;

#[derive(Clone, Debug)]
pub struct ResidualReport {
    pub ode: String,
    /// (X, residual) per grid point, X in the equation's variable.
    pub points: Vec<(Real, Real)>,
    pub max_abs: Real,
}

impl ResidualReport {
    pub fn below(&self, tol: &Real) -> bool {
        self.max_abs < *tol
    }
}

/// Residual of `ode` on R(X) = rho(X/pi) at each X of the grid; the 1/pi
/// normalization of R drops out of the linear equation.
pub fn ode_residual(
    ode: &LinearOde,
    spec: &DensitySpec,
    grid: &[Real],
    ctx: &PrecisionContext,
) -> Result<ResidualReport, CoreError> {
    if grid.is_empty() {
        return Err(CoreError::Shape("empty residual grid".into()));
    }
    let pg = GaussianRational::real(spec.p.clone());
    let qg = GaussianRational::real(spec.q.clone());
    let order = ode.terms.iter().map(|t| t.deriv as usize).max().unwrap_or(0);
    let mut coeffs = Vec::new();
    for t in &ode.terms {
        let c = t.coeff.eval(&pg, &qg);
        if !c.im.is_zero() {
            return Err(CoreError::Shape(format!("complex coefficient in {}", ode.name)));
        }
        coeffs.push((c.re, t.x_power as usize, t.deriv as usize));
    }
    let mut points = Vec::with_capacity(grid.len());
    let _g = ctx.enter();
    let mut max_abs = Real::zero();
    for xx in grid {
        let pi = Real::pi();
        let jet = density_jet(spec, &(xx / &pi), order, ctx)?;
        let _g = ctx.enter();
        let derivs: Vec<Real> = (0..=order).map(|k| jet.derivative(k) / pi.powi(k)).collect();
        let mut r = Real::zero();
        for (c, a, b) in &coeffs {
            if c.is_zero() {
                continue;
            }
            r = r + Real::from_rational(c) * xx.powi(*a) * &derivs[*b];
        }
        max_abs = max_abs.max(&r.abs());
        points.push((xx.clone(), r));
    }
    Ok(ResidualReport { ode: ode.name.clone(), points, max_abs })
}

/// Third order beta = 2 equation against the beta = 2 density.
pub fn ode_residual_beta2(
    p: &BigRational,
    q: &BigRational,
    grid: &[Real],
    ctx: &PrecisionContext,
) -> Result<ResidualReport, CoreError> {
    let spec = DensitySpec { beta: 2, p: p.clone(), q: q.clone() };
    ode_residual(&LinearOde::beta2(), &spec, grid, ctx)
}

/// Fifth order beta = 4 equation against the q = 0 beta = 4 density.
pub fn ode_residual_beta4(p: u32, grid: &[Real], ctx: &PrecisionContext) -> Result<ResidualReport, CoreError> {
    ode_residual(&LinearOde::beta4(), &DensitySpec::beta4(p as i64), grid, ctx)
}

/// n + 1 equally spaced points on [a, b].
pub fn residual_grid(a: &BigRational, b: &BigRational, n: usize, ctx: &PrecisionContext) -> Vec<Real> {
    let _g = ctx.enter();
    let n = n.max(1);
    let step = (b - a) / BigRational::from_integer((n as i64).into());
    (0..=n).map(|k| Real::from_rational(&(a + &step * BigRational::from_integer((k as i64).into())))).collect()
}
