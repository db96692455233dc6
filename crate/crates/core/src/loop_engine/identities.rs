//! Symbolic identities satisfied by the coefficient table.

use cjft_exact::{BigRational, GaussianRational, KappaMap, ParamPoly, ParamScalar};

use super::table::CoefficientTable;
use crate::error::CoreError;
use crate::report::Report;

/// alpha_j at p = 1, q = 0 (kappa symbolic).
pub fn at_p1_q0(a: &ParamScalar) -> ParamScalar {
    a.at_pq(&GaussianRational::from_int(1), &GaussianRational::from_int(0))
}

/// Set q = 0, keeping kappa and p symbolic.
pub fn at_q0(a: &ParamScalar) -> ParamScalar {
    a.substitute(&KappaMap::identity(), &ParamScalar::p(), &ParamScalar::zero())
}

/// Set p = 0, keeping kappa and q symbolic.
pub fn at_p0(a: &ParamScalar) -> ParamScalar {
    a.substitute(&KappaMap::identity(), &ParamScalar::zero(), &ParamScalar::q())
}

/// Image of x under kappa -> 1/kappa, p -> -kappa p, q -> -q/kappa, times (-1/kappa)^{j+1}.
pub fn dual(x: &ParamScalar, j: usize) -> ParamScalar {
    let p_img = (&ParamScalar::kappa() * &ParamScalar::p()).scale_int(-1);
    let q_img = ParamScalar::q().mul_kappa_pow(-1).scale_int(-1);
    let s = x.substitute(&KappaMap::inverse(), &p_img, &q_img);
    let e = j as i32 + 1;
    let sign = if e % 2 == 0 { 1 } else { -1 };
    s.mul_kappa_pow(-e).scale_int(sign)
}

/// h_j(kappa,p,q) = (-1/kappa)^{j+1} h_j(1/kappa, -kappa p, -q/kappa), same for h~_j.
/// The (2 pi)^{-j} scale is common to both sides and drops out.
pub fn verify_duality(table: &CoefficientTable, order: usize) -> Result<Report, CoreError> {
    table.require(order)?;
    let mut r = Report::new("duality");
    for j in 0..=order {
        r.check(format!("h_{j}"), dual(&table.h[j].value, j) == table.h[j].value);
        r.check(format!("h~_{j}"), dual(&table.h_tilde[j].value, j) == table.h_tilde[j].value);
    }
    Ok(r)
}

/// Coefficient of p (or q) at p = q = 0, kappa symbolic.
pub fn linear_coefficient(a: &ParamScalar, in_p: bool) -> ParamScalar {
    let mut out = ParamScalar::zero();
    for (e, poly) in a.laurent() {
        let c = if in_p { poly.coeff(1, 0) } else { poly.coeff(0, 1) };
        out.add_assign_ref(&ParamScalar::monomial(c, *e, 0, 0));
    }
    out
}

/// Linear response in p and in q, with t = tau/(2 pi) and tau > 0:
///   d/dp alpha_l |_{p=q=0} = -kappa alpha_{l+1}(kappa, 1, 0),
///   d/dq alpha_l |_{p=q=0} = -i alpha_{l+1}(kappa, 1, 0),
/// for l = 0..order, together with 1 + alpha_0(kappa, 1, 0) = 0.
pub fn verify_linear_response(table: &CoefficientTable, order: usize) -> Result<Report, CoreError> {
    table.require(order + 1)?;
    let mut r = Report::new("linear-response");
    let lead = &ParamScalar::one() + &at_p1_q0(&table.alphas[0]);
    r.check("1 + alpha_0(p=1,q=0) = 0", lead.is_zero());
    for l in 0..=order {
        let rhs = at_p1_q0(&table.alphas[l + 1]);
        let want_p = (&ParamScalar::kappa() * &rhs).scale_int(-1);
        let want_q = (&ParamScalar::i() * &rhs).scale_int(-1);
        r.check(format!("p-response tau^{l}"), linear_coefficient(&table.alphas[l], true) == want_p);
        r.check(format!("q-response tau^{l}"), linear_coefficient(&table.alphas[l], false) == want_q);
    }
    Ok(r)
}

/// Rational polynomial in u = 1/kappa, ascending coefficients.
pub type UCoeffs = Vec<BigRational>;

/// Read a kappa-Laurent scalar with no p, q dependence and no positive kappa
/// powers as a real polynomial in u = 1/kappa.
pub fn as_u_polynomial(x: &ParamScalar) -> Result<UCoeffs, CoreError> {
    let mut out: UCoeffs = Vec::new();
    for (e, a, b, c) in x.terms() {
        if a != 0 || b != 0 || e > 0 || !c.is_real() {
            return Err(CoreError::Shape(format!("not a real polynomial in 1/kappa: {x}")));
        }
        let m = (-e) as usize;
        if out.len() <= m {
            out.resize(m + 1, BigRational::from_integer(0.into()));
        }
        out[m] = c.re.clone();
    }
    Ok(out)
}

/// p_j(u) with f(tau; beta) = (pi beta/|tau|)(1 + c(tau; beta, 1, 0)) = 1 + sum_j p_j(u) (tau/2pi)^j.
/// Since 1 + alpha_0(1,0) = 0, p_j(u) = kappa alpha_{j+1}(kappa, 1, 0).
/// Returns p_0..p_order; needs alpha_{order+1}.
pub fn structure_function_series(table: &CoefficientTable, order: usize) -> Result<Vec<UCoeffs>, CoreError> {
    table.require(order + 1)?;
    let lead = &ParamScalar::one() + &at_p1_q0(&table.alphas[0]);
    if !lead.is_zero() {
        return Err(CoreError::SingularStructureFunction(lead.to_string()));
    }
    (0..=order)
        .map(|j| as_u_polynomial(&(&ParamScalar::kappa() * &at_p1_q0(&table.alphas[j + 1]))))
        .collect()
}

/// Rewrite a polynomial in p invariant under p -> 1 - p as a polynomial in
/// pt = p (p - 1). None if no such rewriting exists.
pub fn in_terms_of_p_tilde(poly: &ParamPoly) -> Option<Vec<GaussianRational>> {
    if poly.deg_q().unwrap_or(0) > 0 {
        return None;
    }
    let pt = &(&ParamPoly::p() * &ParamPoly::p()) - &ParamPoly::p();
    let mut rem = poly.clone();
    let mut out: Vec<GaussianRational> = Vec::new();
    while let Some(d) = rem.deg_p() {
        if d % 2 == 1 {
            return None;
        }
        let m = (d / 2) as usize;
        let c = rem.coeff(d, 0);
        if out.len() <= m {
            out.resize(m + 1, GaussianRational::from_int(0));
        }
        out[m] = c.clone();
        rem = &rem - &pt.pow(m as u32).scale(&c);
    }
    Some(out)
}

#[derive(Clone, Debug)]
pub struct LowTemperatureSeries {
    /// Coefficient of (tau/2pi)^l, l = 1..order, as ascending coefficients in pt = p(p-1);
    /// index 0 is left empty (the constant term is -p).
    pub coefficients: Vec<Option<Vec<GaussianRational>>>,
    pub report: Report,
}

/// kappa -> infinity at q = 0: keep the kappa^0 part of alpha_l(kappa, p, 0).
pub fn low_temperature_limit(table: &CoefficientTable, order: usize) -> Result<LowTemperatureSeries, CoreError> {
    table.require(order)?;
    let mut r = Report::new("low-temperature");
    let mut coeffs = Vec::new();
    for l in 0..=order {
        let a = at_q0(&table.alphas[l]);
        r.check(format!("tau^{l}: bounded as kappa -> infinity"), a.max_kappa().is_none_or(|m| m <= 0));
        let limit = a.kappa_coeff(0);
        if l == 0 {
            r.check("tau^0 = -p", limit == -&ParamPoly::p());
            coeffs.push(None);
            continue;
        }
        let pt = in_terms_of_p_tilde(&limit);
        match &pt {
            None => r.push(format!("tau^{l}: polynomial in p(p-1)"), false, limit.to_string()),
            Some(c) => {
                let zero = GaussianRational::from_int(0);
                r.check(format!("tau^{l}: polynomial in p(p-1)"), true);
                r.check(format!("tau^{l}: divisible by p(p-1)"), c.first().is_none_or(|c0| *c0 == zero));
                r.check(
                    format!("tau^{l}: linear part matches geometric series"),
                    c.get(1).is_some_and(|c1| *c1 == GaussianRational::from_int(1)),
                );
            }
        }
        coeffs.push(pt);
    }
    Ok(LowTemperatureSeries { coefficients: coeffs, report: r })
}

/// q -> -q sends h_j -> (-1)^{j+1} h_j and h~_j -> (-1)^j h~_j; both follow from
/// alpha_j(p, -q) being the complex conjugate of alpha_j(p, q).
pub fn verify_q_parity(table: &CoefficientTable) -> Report {
    let mut r = Report::new("q-parity");
    for j in 0..table.alphas.len() {
        let sh = if j % 2 == 0 { -1 } else { 1 };
        let h = &table.h[j].value;
        let ht = &table.h_tilde[j].value;
        r.check(format!("h_{j}"), h.flip_q() == h.scale_int(sh));
        r.check(format!("h~_{j}"), ht.flip_q() == ht.scale_int(-sh));
        r.check(format!("alpha_{j}(p,-q) = conj alpha_{j}(p,q)"), table.alphas[j].flip_q() == table.alphas[j].conj());
    }
    r
}

/// h_j imaginary for even j and real for odd j, h~_j the other way round, and h_j + h~_j = alpha_j.
pub fn verify_reality_split(table: &CoefficientTable) -> Report {
    let mut r = Report::new("reality-split");
    for j in 0..table.alphas.len() {
        let h = &table.h[j].value;
        let ht = &table.h_tilde[j].value;
        let (h_ok, ht_ok) = if j % 2 == 0 { (h.is_imaginary(), ht.is_real()) } else { (h.is_real(), ht.is_imaginary()) };
        r.check(format!("h_{j}"), h_ok);
        r.check(format!("h~_{j}"), ht_ok);
        r.check(format!("h_{j} + h~_{j} = alpha_{j}"), (h + ht) == table.alphas[j]);
    }
    r
}

/// alpha_j vanishes identically at p = q = 0.
pub fn verify_trivial_point(table: &CoefficientTable) -> Report {
    let mut r = Report::new("p=q=0");
    let z = GaussianRational::from_int(0);
    for (j, a) in table.alphas.iter().enumerate() {
        r.check(format!("alpha_{j}"), a.at_pq(&z, &z).is_zero());
    }
    r
}
