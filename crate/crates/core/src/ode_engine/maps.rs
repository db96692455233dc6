//! From ODE series to h_j, h~_j, and the cross-checks against the loop engine.

use cjft_exact::{BigRational, GaussianRational, ParamScalar};
use num_traits::One;

use super::beta2::{d_series_beta2, e_from_d, e_series_beta2};
use super::beta4::{beta1_from_beta4, g_series_beta4, g_tilde_series_beta4};
use super::operator::LinearOde;
use super::series::{RecurrenceSeries, SeriesKind};
use crate::error::CoreError;
use crate::loop_engine::{CoefficientTable, Scaled};
use crate::report::Report;

/// (2 pi)^{n-1} h_{n-1} = 2^{n-1} i^{n + shift} s_n / (n-1)!, where s_n is the
/// pi-free series entry. shift = 0 is the sgn(tau) map for d and g; the
/// analytic companions g~ carry one more power of i.
fn scaled_map(series: &RecurrenceSeries, shift: i64) -> Vec<(usize, Scaled)> {
    let mut out = Vec::new();
    for (k, v) in series.values.iter().enumerate() {
        let n = series.first_index + k;
        if n == 0 {
            continue;
        }
        let mut fact = BigRational::one();
        for m in 2..n {
            fact *= BigRational::from_integer((m as i64).into());
        }
        let two = BigRational::from_integer(num_bigint::BigInt::from(2).pow((n - 1) as u32));
        let f = GaussianRational::i_pow(n as i64 + shift).scale(&(two / fact));
        out.push((n - 1, Scaled { value: ParamScalar::from_poly(v.scale(&f), 0), pi_power: -((n - 1) as i32) }));
    }
    out
}

/// h_{n-1} = pi s_n i^n/(n-1)! for the d (beta = 2) and g (beta = 4) series,
/// returned in the loop-table convention (power of 2 pi). Index j of the
/// result is h_j.
pub fn map_to_h(series: &RecurrenceSeries) -> Result<Vec<Scaled>, CoreError> {
    match series.kind {
        SeriesKind::D | SeriesKind::G => Ok(scaled_map(series, 0).into_iter().map(|(_, s)| s).collect()),
        k => Err(CoreError::Shape(format!("map_to_h needs a d or g series, got {k:?}"))),
    }
}

/// h~_{n-1} = pi g~_n i^{n+1}/(n-1)! for the beta = 4 companions; the
/// result is keyed by j = n - 1 starting at j = 1.
pub fn map_to_h_tilde(series: &RecurrenceSeries) -> Result<Vec<(usize, Scaled)>, CoreError> {
    match series.kind {
        SeriesKind::GTilde => Ok(scaled_map(series, 1)),
        k => Err(CoreError::Shape(format!("map_to_h_tilde needs a g~ series, got {k:?}"))),
    }
}

fn at_kappa(x: &ParamScalar, num: i64, den: i64) -> ParamScalar {
    x.at_kappa(&BigRational::new(num.into(), den.into()))
}

/// beta = 2: h_j from the d-series equals the loop value at kappa = 1, and
/// h~_j vanishes there for j >= 1.
pub fn cross_check_beta2(table: &CoefficientTable, order: usize) -> Result<Report, CoreError> {
    table.require(order)?;
    let mut r = Report::new("cross-beta2");
    let d = d_series_beta2(order + 1);
    let h = map_to_h(&d)?;
    for j in 0..=order {
        let lp = at_kappa(&table.h[j].value, 1, 1);
        r.check(format!("h_{j}"), h[j].value == lp && h[j].pi_power == table.h[j].pi_power);
    }
    for j in 1..=order {
        r.check(format!("h~_{j} = 0"), at_kappa(&table.h_tilde[j].value, 1, 1).is_zero());
    }
    Ok(r)
}

/// beta = 2 Fourier side: the e-series seeded from d reproduces
/// e_n = delta_{n+1} i^{n+1}/n!, and the e-series seeded from the loop value
/// of h~_1 (zero) vanishes beyond e_0.
pub fn cross_check_e_beta2(table: &CoefficientTable, order: usize) -> Result<Report, CoreError> {
    table.require(order.max(1))?;
    let mut r = Report::new("e-beta2");
    let d = d_series_beta2(order + 1);
    let want = e_from_d(&d);
    let e = e_series_beta2(order, want[0].clone(), want[1].clone(), "e_0, e_1 from d_1, d_2");
    for n in 0..=order {
        r.check(format!("e_{n} = delta_{} i^{}/{n}!", n + 1, n + 1), e.values[n] == want[n]);
    }
    // pi h~_1 = (2 pi) h~_1 / 2, read from the loop table at kappa = 1
    let e1 = at_kappa(&table.h_tilde[1].value, 1, 1)
        .as_poly()
        .ok_or_else(|| CoreError::Shape("h~_1 at kappa = 1 is not a polynomial".into()))?
        .scale(&GaussianRational::from_frac(1, 2));
    let e0 = at_kappa(&table.h_tilde[0].value, 1, 1)
        .as_poly()
        .ok_or_else(|| CoreError::Shape("h~_0 at kappa = 1 is not a polynomial".into()))?;
    let et = e_series_beta2(order, e0, e1, "e_0 = h~_0, e_1 = pi h~_1 from the loop engine at kappa = 1");
    for n in 1..=order {
        r.check(format!("analytic e_{n} = 0"), et.values[n].is_zero());
    }
    // full transform on tau > 0 solves the Fourier image of the x-space equation
    let op = LinearOde::beta2().fourier();
    let full: Vec<_> = (0..=order).map(|n| &e.values[n] + &et.values[n]).collect();
    let res = op.power_series_residual(&full);
    r.check(format!("Fourier equation through s^{}", res.len().saturating_sub(1)), res.iter().all(|c| c.is_zero()));
    Ok(r)
}

/// beta = 4: h_j from g and h~_j from g~ equal the loop values at kappa = 2.
pub fn cross_check_beta4(table: &CoefficientTable, order: usize) -> Result<Report, CoreError> {
    table.require(order)?;
    let mut r = Report::new("cross-beta4");
    let g = g_series_beta4((order + 1).max(4));
    let h = map_to_h(&g)?;
    for j in 0..=order {
        let lp = at_kappa(&table.h[j].value, 2, 1);
        r.check(format!("h_{j}"), h[j].value == lp && h[j].pi_power == table.h[j].pi_power);
    }
    let gt = g_tilde_series_beta4((order + 1).max(4));
    for (j, v) in map_to_h_tilde(&gt)? {
        if j > order {
            break;
        }
        let lp = at_kappa(&table.h_tilde[j].value, 2, 1);
        r.check(format!("h~_{j}"), v.value == lp && v.pi_power == table.h_tilde[j].pi_power);
    }
    Ok(r)
}

/// beta = 1 relation g_n(1,p,q) = (-2)^n g_n(4,-p/2,-2q), with the
/// beta = 1 side read from the loop engine at kappa = 1/2.
pub fn cross_check_beta1(table: &CoefficientTable, n_max: usize) -> Result<Report, CoreError> {
    table.require(n_max - 1)?;
    let mut r = Report::new("beta1-relation");
    let g4 = g_series_beta4(n_max.max(4));
    let g1 = beta1_from_beta4(&g4);
    let h = map_to_h(&g1)?;
    for n in 1..=n_max {
        let j = n - 1;
        let lp = at_kappa(&table.h[j].value, 1, 2);
        r.check(format!("g_{n}"), h[j].value == lp);
    }
    Ok(r)
}
