//! Palindromic structure, unit-circle zeros and interlacing of the
//! coefficient polynomials in u = 1/kappa.

mod roots;
mod upoly;

pub use roots::{check_interlacing, zeros_on_unit_circle, Interlacing, ZeroReport};
pub use upoly::{
    classify_palindrome, extract_upoly, pj_shape_holds, proportional, strip_one_minus_u, PalindromeClass, Phase,
    Provenance, Source, Symmetry, UPoly,
};

use cjft_numeric::PrecisionContext;

use crate::error::CoreError;
use crate::loop_engine::{structure_function_series, CoefficientTable};
use crate::report::Report;

/// Coefficients of p, p^2, ... p^m_max in (2 pi)^j h_j at q = 0.
pub fn p_ladder(table: &CoefficientTable, j: usize, m_max: u32) -> Result<Vec<UPoly>, CoreError> {
    (1..=m_max).map(|m| extract_upoly(table, Source::H, j, m, 0, false)).collect()
}

/// The ladder for h_5 at q = 0 as listed, up to proportionality, for the
/// coefficients of p, ..., p^5.
pub fn h5_reference_ladder() -> Vec<UPoly> {
    let um1 = UPoly::from_ints(&[-1, 1]);
    vec![
        um1.mul(&UPoly::from_ints(&[30, -91, 124, -91, 30])),
        UPoly::from_ints(&[32, -75, 90, -75, 32]),
        um1.mul(&UPoly::from_ints(&[11, -20, 11])),
        UPoly::from_ints(&[5, -9, 5]),
        um1,
    ]
}

/// Classification, unit-circle location and interlacing for a ladder.
pub fn ladder_report(id: &str, ladder: &[UPoly], ctx: &PrecisionContext, tol: &str) -> Result<Report, CoreError> {
    let mut r = Report::new(id);
    let mut zeros = Vec::new();
    for (k, p) in ladder.iter().enumerate() {
        let c = classify_palindrome(p)?;
        r.push(format!("#{} {}", k + 1, c.label()), c.is_structured(), "");
        let z = zeros_on_unit_circle(p, tol, ctx)?;
        let _g = ctx.enter();
        r.push(format!("#{} zeros on |u| = 1", k + 1), z.all_on_circle(), format!("max dev {}", z.max_deviation().to_decimal(3)));
        zeros.push(z);
    }
    if zeros.iter().all(|z| z.all_on_circle()) {
        for (k, i) in check_interlacing(&zeros, ctx)?.iter().enumerate() {
            r.check(format!("#{} / #{} interlace", k + 1, k + 2), i.upper_half);
        }
    }
    Ok(r)
}

/// p_j(u) for j = 1..=order from the structure function series, with the
/// (1-u)^k palindrome shape.
pub fn verify_pj_shapes(table: &CoefficientTable, order: usize) -> Result<Report, CoreError> {
    let mut r = Report::new("pj-shape");
    let pj = structure_function_series(table, order)?;
    for (j, c) in pj.iter().enumerate().skip(1) {
        r.check(format!("p_{j}"), pj_shape_holds(j, &UPoly::new(c.clone())));
    }
    Ok(r)
}

/// Every p^m (q = 0) and q^m (p = 0, q -> kappa q) coefficient of h_j and
/// h~_j for j <= order is palindromic or (1-u)-factored palindromic.
pub fn verify_pure_monomials(table: &CoefficientTable, order: usize) -> Result<Report, CoreError> {
    let mut r = Report::new("pure-monomials");
    for source in [Source::H, Source::HTilde] {
        for j in 0..=order {
            for m in 1..=(j as u32 + 2) {
                for (dp, dq, qs) in [(m, 0, false), (0, m, true)] {
                    let p = extract_upoly(table, source, j, dp, dq, qs)?;
                    if p.is_zero() {
                        continue;
                    }
                    let c = classify_palindrome(&p)?;
                    r.push(format!("{source:?}_{j} p^{dp} q^{dq}"), c.is_structured(), c.label());
                }
            }
        }
    }
    Ok(r)
}

/// Mixed p^a q^b coefficients (a, b >= 1, q -> kappa q): classification and
/// unit-circle status, reported without a pass criterion.
pub fn survey_mixed_monomials(
    table: &CoefficientTable,
    order: usize,
    ctx: &PrecisionContext,
) -> Result<Vec<(Source, usize, u32, u32, String, Option<bool>)>, CoreError> {
    let mut out = Vec::new();
    for source in [Source::H, Source::HTilde] {
        for j in 0..=order {
            for a in 1..=(j as u32 + 1) {
                for b in 1..=(j as u32 + 1) {
                    let p = extract_upoly(table, source, j, a, b, true)?;
                    if p.is_zero() {
                        continue;
                    }
                    let label = classify_palindrome(&p)?.label();
                    let circle = if p.degree().unwrap_or(0) >= 1 {
                        Some(zeros_on_unit_circle(&p, "1e-20", ctx)?.all_on_circle())
                    } else {
                        None
                    };
                    out.push((source, j, a, b, label, circle));
                }
            }
        }
    }
    Ok(out)
}
