//! The identity suite run by `cjft verify` and the acceptance test.

use cjft_exact::{BigRational, GaussianRational};
use num_traits::Zero;
use cjft_numeric::{screening_integral, DensitySpec, FourierOracle, PrecisionContext, Real};

use crate::error::CoreError;
use crate::loop_engine::{
    compute_table, verify_duality, verify_linear_response, verify_q_parity, verify_reality_split, verify_trivial_point,
    CoefficientTable,
};
use crate::ode_engine::{
    alpha_ratio_closed, alpha_ratio_of, bessel_asymptotic_c2n, c2n_closed_form, cross_check_beta1, cross_check_beta2,
    cross_check_beta4, cross_check_e_beta2, d_series_beta2, g_series_beta4, ode_residual_beta2, residual_grid,
    verify_d_solves_ode, verify_d_structure, verify_d_vs_closed_form, verify_g_solves_ode,
};
use crate::polyprops::{h5_reference_ladder, ladder_report, p_ladder, proportional, verify_pj_shapes, verify_pure_monomials};
use crate::report::Report;

/// Check ids accepted by [`Suite::run`], in run order.
pub const CHECKS: &[&str] = &[
    "duality",
    "linear-response",
    "q-parity",
    "reality",
    "trivial-point",
    "d-series",
    "alpha-ratios",
    "bessel",
    "cross-beta2",
    "cross-e-beta2",
    "g-series",
    "cross-beta4",
    "beta1",
    "pj-shapes",
    "h5-ladder",
    "pure-monomials",
    "ode-residual",
    "ft",
];

/// Largest order the suite accepts.
pub const MAX_ORDER: usize = 6;

/// Loop table and precision shared by the checks.
pub struct Suite {
    pub order: usize,
    pub table: CoefficientTable,
    pub ctx: PrecisionContext,
}

impl Suite {
    /// Solves the loop hierarchy one order past `order`, which the linear
    /// response and structure function checks need.
    pub fn new(order: usize, ctx: PrecisionContext) -> Result<Self, CoreError> {
        if order == 0 || order > MAX_ORDER {
            return Err(CoreError::Shape(format!("verify order must be in 1..={MAX_ORDER}, got {order}")));
        }
        Ok(Suite { order, table: compute_table(order + 1)?, ctx })
    }

    pub fn run(&self, id: &str) -> Result<Report, CoreError> {
        let t = &self.table;
        let j = self.order;
        match id {
            "duality" => verify_duality(t, j),
            "linear-response" => verify_linear_response(t, j),
            "q-parity" => Ok(verify_q_parity(t)),
            "reality" => Ok(verify_reality_split(t)),
            "trivial-point" => Ok(verify_trivial_point(t)),
            "d-series" => {
                let d = d_series_beta2(20);
                let mut r = Report::new("d-series");
                r.extend(verify_d_structure(&d));
                r.extend(verify_d_vs_closed_form(&d));
                r.extend(verify_d_solves_ode(&d));
                Ok(r)
            }
            "alpha-ratios" => {
                let want = [(1, 2), (1, 8), (1, 16), (5, 128), (7, 256), (21, 1024)];
                let mut r = Report::new("alpha-ratios");
                for (k, (a, b)) in want.iter().enumerate() {
                    let n = k + 1;
                    let w = BigRational::new((*a).into(), (*b).into());
                    r.push(
                        format!("n = {n}"),
                        alpha_ratio_closed(n) == w && alpha_ratio_of(&c2n_closed_form(n), n).as_ref() == Some(&w),
                        format!("{a}/{b}"),
                    );
                }
                Ok(r)
            }
            "bessel" => {
                let mut r = Report::new("bessel");
                for n in 1..=6 {
                    r.check(format!("c_{}", 2 * n), bessel_asymptotic_c2n(n) == c2n_closed_form(n));
                }
                Ok(r)
            }
            "cross-beta2" => cross_check_beta2(t, j.min(5)),
            "cross-e-beta2" => cross_check_e_beta2(t, j.min(5)),
            "g-series" => Ok(verify_g_solves_ode(&g_series_beta4(12))),
            "cross-beta4" => cross_check_beta4(t, j.min(5)),
            "beta1" => cross_check_beta1(t, 6),
            "pj-shapes" => verify_pj_shapes(t, j),
            "h5-ladder" => {
                t.require(5)?;
                let ladder = p_ladder(t, 5, 5)?;
                let mut r = ladder_report("h5-ladder", &ladder, &self.ctx, "1e-20")?;
                for (k, (got, want)) in ladder.iter().zip(h5_reference_ladder()).enumerate() {
                    r.check(format!("p^{} matches listed polynomial", k + 1), proportional(got, &want));
                }
                Ok(r)
            }
            "pure-monomials" => verify_pure_monomials(t, j.min(5)),
            "ode-residual" => ode_residual_check(&self.ctx),
            "ft" => ft_check(t, &self.ctx),
            other => Err(CoreError::Shape(format!("unknown check {other:?}; known: {}", CHECKS.join(", ")))),
        }
    }

    pub fn run_all(&self) -> Result<Vec<Report>, CoreError> {
        CHECKS.iter().map(|id| self.run(id)).collect()
    }
}

fn ode_residual_check(ctx: &PrecisionContext) -> Result<Report, CoreError> {
    let mut r = Report::new("ode-residual");
    let grid = residual_grid(&BigRational::new(1.into(), 2.into()), &BigRational::from_integer(10.into()), 40, ctx);
    let _g = ctx.enter();
    let tol = Real::parse("1e-20").expect("literal");
    for p in [1, 2] {
        let rep = ode_residual_beta2(&BigRational::from_integer(p.into()), &BigRational::from_integer(0.into()), &grid, ctx)?;
        let _g = ctx.enter();
        r.push(format!("beta = 2, p = {p}, x in [0.5, 10]"), rep.below(&tol), format!("max {}", rep.max_abs.to_decimal(3)));
    }
    Ok(r)
}

/// Truncated small-tau series sum_j (h_j sgn tau + h~_j) tau^j at kappa = 1.
/// Returns the sum and the size of the last included term.
pub fn small_tau_series(table: &CoefficientTable, p: i64, tau: &Real) -> Result<(Real, Real), CoreError> {
    let one = GaussianRational::from_int(1);
    let pg = GaussianRational::from_int(p);
    let zero = GaussianRational::from_int(0);
    let two_pi = Real::pi() * Real::from_i64(2);
    let sgn = if tau.is_negative() { -1 } else { 1 };
    let mut sum = Real::zero();
    let mut last = Real::zero();
    for j in 0..=table.order() {
        let h = table.h[j].value.eval(&one, &pg, &zero)?;
        let ht = table.h_tilde[j].value.eval(&one, &pg, &zero)?;
        if !h.im.is_zero() || !ht.im.is_zero() {
            return Err(CoreError::Shape(format!("complex coefficient at j = {j} for real p, q = 0")));
        }
        let c = Real::from_rational(&h.re) * Real::from_i64(sgn) + Real::from_rational(&ht.re);
        let scale = if table.h[j].pi_power >= 0 {
            two_pi.powi(table.h[j].pi_power as usize)
        } else {
            two_pi.powi((-table.h[j].pi_power) as usize).recip()
        };
        let term = c * scale * tau.powi(j);
        last = term.abs();
        sum = sum + term;
    }
    Ok((sum, last))
}

fn ft_check(table: &CoefficientTable, ctx: &PrecisionContext) -> Result<Report, CoreError> {
    let mut r = Report::new("ft");
    let _g = ctx.enter();
    let pi = Real::pi();
    let oracle = FourierOracle::new(&DensitySpec::beta2(1, 0), ctx)?;
    let tol = Real::parse("1e-8").expect("literal");
    for k in 1..=3 {
        let tau = &pi * Real::frac(k, 2);
        let got = oracle.transform(&tau)?;
        let want = Real::from_i64(-1) + &tau / (&pi * Real::from_i64(2));
        let err = (&got.value - &want).abs();
        r.push(format!("p = 1, tau = {k} pi/2"), err < tol, format!("|diff| {}", err.to_decimal(3)));
    }
    let s = screening_integral(&DensitySpec::beta2(1, 0), ctx)?;
    let err = (&s.value + Real::one()).abs();
    r.push("p = 1 screening", err < Real::parse("1e-6").expect("literal"), format!("|diff| {}", err.to_decimal(3)));
    let tau = Real::frac(1, 2);
    let got = FourierOracle::new(&DensitySpec::beta2(2, 0), ctx)?.transform(&tau)?;
    let (series, last) = small_tau_series(table, 2, &tau)?;
    let bound = &got.error_estimate + &last;
    let err = (&got.value - &series).abs();
    r.push(
        "p = 2, tau = 1/2 against the series",
        err <= bound,
        format!("|diff| {}, bound {}", err.to_decimal(3), bound.to_decimal(3)),
    );
    Ok(r)
}
