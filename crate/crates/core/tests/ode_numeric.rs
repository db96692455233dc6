use cjft_core::ode_engine::*;
use cjft_exact::{BigRational, GaussianRational};
use cjft_numeric::{density_beta2, PrecisionContext, Real};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ctx() -> PrecisionContext {
    PrecisionContext::default()
}

#[test]
fn beta2_closed_form_residual() {
    let c = ctx();
    let grid = residual_grid(&rat(1, 2), &rat(10, 1), 38, &c);
    for p in [1, 2] {
        let r = ode_residual_beta2(&rat(p, 1), &rat(0, 1), &grid, &c).unwrap();
        let _g = c.enter();
        assert!(r.below(&Real::parse("1e-20").unwrap()), "p = {p}: {}", r.max_abs.to_decimal(5));
    }
}

#[test]
fn beta2_trivial_residual() {
    let c = ctx();
    let grid = residual_grid(&rat(1, 2), &rat(3, 1), 5, &c);
    let r = ode_residual_beta2(&rat(0, 1), &rat(0, 1), &grid, &c).unwrap();
    assert!(r.max_abs.is_zero());
}

#[test]
fn beta2_hypergeometric_residual() {
    let c = ctx();
    let grid = residual_grid(&rat(1, 2), &rat(8, 1), 6, &c);
    for (p, q) in [(rat(1, 1), rat(1, 3)), (rat(3, 2), rat(-2, 5)), (rat(1, 2), rat(0, 1))] {
        let r = ode_residual_beta2(&p, &q, &grid, &c).unwrap();
        let _g = c.enter();
        assert!(r.below(&Real::parse("1e-20").unwrap()), "p = {p}, q = {q}: {}", r.max_abs.to_decimal(5));
    }
}

#[test]
fn beta4_residual() {
    let c = ctx();
    let grid = residual_grid(&rat(1, 2), &rat(10, 1), 19, &c);
    for p in [1, 2] {
        let r = ode_residual_beta4(p, &grid, &c).unwrap();
        let _g = c.enter();
        assert!(r.below(&Real::parse("1e-20").unwrap()), "p = {p}: {}", r.max_abs.to_decimal(5));
    }
}

#[test]
fn tail_average_matches_d_series() {
    // mean of rho over [20, 21] against 1 + d_2/x^2 + d_4/x^4 integrated
    // over the same period; the oscillating remainder is O(x^-3)
    let c = ctx();
    let _g = c.enter();
    let d = d_series_beta2(4);
    for p in [1i64, 2] {
        let pg = GaussianRational::from_int(p);
        let zero = GaussianRational::from_int(0);
        let pi = Real::pi();
        let dn = |n: usize| Real::from_rational(&d.get(n).unwrap().eval(&pg, &zero).re) / pi.powi(n);
        let n = 400;
        let mut mean = Real::zero();
        for k in 0..n {
            let x = Real::from_i64(20) + Real::frac(2 * k + 1, 2 * n);
            mean = mean + density_beta2(&x, &rat(p, 1), &rat(0, 1), &c).unwrap();
        }
        let mean = mean / Real::from_i64(n);
        // int_20^21 x^-2 = 1/420, int x^-4 = (1/20^3 - 1/21^3)/3
        let smooth = Real::one() + dn(2) * Real::frac(1, 420)
            + dn(4) * (Real::frac(1, 8000) - Real::frac(1, 9261)) / Real::from_i64(3);
        let bound = dn(2).abs() / Real::from_i64(20 * 20 * 20);
        assert!((&mean - &smooth).abs() < bound, "p = {p}: {} vs {}", mean.to_decimal(12), smooth.to_decimal(12));
    }
}
