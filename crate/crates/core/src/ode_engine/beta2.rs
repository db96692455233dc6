//! beta = 2: asymptotic coefficients d_n, the q = 0 closed form, the Bessel
//! asymptotics oracle, and the Fourier-side series e_n and b_n.

use cjft_exact::{BigRational, GaussianRational, ParamPoly};
use num_traits::One;

use super::operator::{q_zero, FourierOperator, LinearOde};
use super::series::{compose, cp, s, PiPoly, RecurrenceSeries, SeriesKind};
use crate::report::Report;

/// d_1 .. d_{n_max}, stored as delta_n = pi^n d_n:
/// delta_1 = -q, delta_2 = -(p^2+q^2)/2,
/// (n+2) delta_{n+2} = (2n+1) q delta_{n+1} + (n-1)(p^2 - n^2/4) delta_n.
pub fn d_series_beta2(n_max: usize) -> RecurrenceSeries {
    let p = ParamPoly::p();
    let q = ParamPoly::q();
    let p2 = &p * &p;
    let mut v = vec![-&q, s(&(&p2 + &(&q * &q)), -1, 2)];
    let mut n = 1i64;
    while v.len() < n_max {
        let a = &q * &v[n as usize];
        let b = &p2 - &cp(n * n, 4);
        let b = &b * &v[n as usize - 1];
        let next = &s(&a, 2 * n + 1, n + 2) + &s(&b, n - 1, n + 2);
        v.push(next);
        n += 1;
    }
    v.truncate(n_max.max(1));
    let pi_power = (1..=v.len()).map(|n| -(n as i32)).collect();
    RecurrenceSeries {
        kind: SeriesKind::D,
        engine: "ode-beta2".into(),
        first_index: 1,
        values: v,
        pi_power,
        seeds: "d_1 = -q/pi, d_2 = -(p^2+q^2)/(2 pi^2)".into(),
    }
}

fn double_factorial(n: i64) -> BigRational {
    let mut acc = BigRational::one();
    let mut k = n;
    while k > 1 {
        acc *= BigRational::from_integer(k.into());
        k -= 2;
    }
    acc
}

/// prod_{l=0}^{n-1} (p^2 - l^2)
pub fn vanishing_product(n: usize) -> ParamPoly {
    let p2 = &ParamPoly::p() * &ParamPoly::p();
    (0..n as i64).fold(cp(1, 1), |acc, l| &acc * &(&p2 - &cp(l * l, 1)))
}

/// The ratio alpha_n with c_{2n} = -alpha_n pi^{-2n} prod_{l<n}(p^2 - l^2).
pub fn alpha_ratio_closed(n: usize) -> BigRational {
    if n == 1 {
        return BigRational::new(1.into(), 2.into());
    }
    let n = n as i64;
    double_factorial(2 * n - 3) / double_factorial(2 * n)
}

/// c_{2n}(p) in closed form, n >= 1.
pub fn c2n_closed_form(n: usize) -> PiPoly {
    assert!(n >= 1, "c_{{2n}} is defined for n >= 1");
    let a = GaussianRational::real(-alpha_ratio_closed(n));
    PiPoly { value: vanishing_product(n).scale(&a), pi_power: -2 * n as i32 }
}

/// c_2, c_4, ..., c_{2 n_max}.
pub fn c_even_series(n_max: usize) -> RecurrenceSeries {
    let entries: Vec<PiPoly> = (1..=n_max).map(c2n_closed_form).collect();
    RecurrenceSeries {
        kind: SeriesKind::CEven,
        engine: "ode-beta2".into(),
        first_index: 1,
        pi_power: entries.iter().map(|e| e.pi_power).collect(),
        values: entries.into_iter().map(|e| e.value).collect(),
        seeds: "closed form, q = 0".into(),
    }
}

/// Recover alpha_n from a computed c_{2n} by exact division.
pub fn alpha_ratio_of(c2n: &PiPoly, n: usize) -> Option<BigRational> {
    let quot = c2n.value.exact_div(&vanishing_product(n)).ok()?;
    if quot.terms().len() != 1 {
        return None;
    }
    let g = quot.coeff(0, 0);
    if !g.is_real() || quot.terms().keys().next() != Some(&(0, 0)) {
        return None;
    }
    Some(-g.re)
}

/// Coefficients a_k(nu) of the large-argument Bessel expansion, as
/// polynomials in nu (stored in the p slot):
/// a_k(nu) = (1/2 - nu)_k (1/2 + nu)_k / ((-2)^k k!), rising factorials.
#[derive(Clone, Debug)]
pub struct BesselAsymCoeffs {
    pub a: Vec<ParamPoly>,
}

impl BesselAsymCoeffs {
    pub fn new(k_max: usize) -> Self {
        let nu = ParamPoly::p();
        let mut a = vec![cp(1, 1)];
        let mut num = cp(1, 1);
        let mut den = BigRational::one();
        for k in 1..=k_max as i64 {
            let j = k - 1;
            let left = &(&cp(1, 2) - &nu) + &cp(j, 1);
            let right = &(&cp(1, 2) + &nu) + &cp(j, 1);
            num = &num * &(&left * &right);
            den *= BigRational::from_integer((-2 * k).into());
            a.push(num.scale(&GaussianRational::real(den.recip())));
        }
        BesselAsymCoeffs { a }
    }

    /// a_k(p + shift) as a polynomial in p.
    pub fn at_shift(&self, k: usize, shift: &BigRational) -> ParamPoly {
        let img = &ParamPoly::p() + &ParamPoly::constant(GaussianRational::real(shift.clone()));
        compose(&self.a[k], &img, &ParamPoly::q())
    }
}

/// c_{2n}(p) from products of the Bessel expansion coefficients at
/// nu = p -/+ 1/2, keeping only the non-oscillatory part.
pub fn bessel_asymptotic_c2n(n: usize) -> PiPoly {
    assert!(n >= 1);
    let t = BesselAsymCoeffs::new(2 * n);
    let half = BigRational::new(1.into(), 2.into());
    let a: Vec<ParamPoly> = (0..=2 * n).map(|k| t.at_shift(k, &-half.clone())).collect();
    let b: Vec<ParamPoly> = (0..=2 * n).map(|k| t.at_shift(k, &half)).collect();
    let mut even = ParamPoly::zero();
    for r in 0..=n {
        even.add_mul(&a[2 * r], &a[2 * (n - r)]);
        even.add_mul(&b[2 * r], &b[2 * (n - r)]);
    }
    let mut odd = ParamPoly::zero();
    let mut cross = ParamPoly::zero();
    for r in 0..n {
        odd.add_mul(&a[2 * r + 1], &a[2 * (n - r) - 1]);
        odd.add_mul(&b[2 * r + 1], &b[2 * (n - r) - 1]);
        cross.add_mul(&a[2 * r], &b[2 * (n - r) - 1]);
        cross.sub_assign_ref(&(&a[2 * r + 1] * &b[2 * (n - r) - 2]));
    }
    let mut total = s(&even, 1, 2);
    total.sub_assign_ref(&s(&odd, 1, 2));
    total.add_assign_ref(&(&ParamPoly::p() * &cross));
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    PiPoly { value: s(&total, sign, 1), pi_power: -2 * n as i32 }
}

/// Fourier-side series e_0 .. e_{n_max} (pi-free, coefficients of (tau/pi)^n):
/// (m+3)(m+2)(m+1) e_{m+2} - i q (2m+3)(m+1) e_{m+1} + m (p^2 - (m+1)^2/4) e_m = 0.
/// The q term carries the sign fixed by the kernel e^{i tau x}.
pub fn e_series_beta2(n_max: usize, e0: ParamPoly, e1: ParamPoly, seeds: &str) -> RecurrenceSeries {
    let p2 = &ParamPoly::p() * &ParamPoly::p();
    let iq = ParamPoly::q().scale(&GaussianRational::i());
    let mut v = vec![e0, e1];
    let mut m = 0i64;
    while v.len() <= n_max {
        let mi = m as usize;
        let lead = (m + 3) * (m + 2) * (m + 1);
        let t1 = s(&(&iq * &v[mi + 1]), (2 * m + 3) * (m + 1), lead);
        let f = &p2 - &cp((m + 1) * (m + 1), 4);
        let t0 = s(&(&f * &v[mi]), -m, lead);
        v.push(&t1 + &t0);
        m += 1;
    }
    v.truncate(n_max + 1);
    RecurrenceSeries {
        kind: SeriesKind::E,
        engine: "ode-beta2".into(),
        first_index: 0,
        pi_power: vec![0; v.len()],
        values: v,
        seeds: seeds.into(),
    }
}

/// e-series seeded from the d-series: e_n = delta_{n+1} i^{n+1} / n!.
pub fn e_from_d(d: &RecurrenceSeries) -> Vec<ParamPoly> {
    let mut out = Vec::new();
    let mut fact = BigRational::one();
    for n in 0..d.values.len() {
        if n > 0 {
            fact *= BigRational::from_integer((n as i64).into());
        }
        let k = GaussianRational::i_pow(n as i64 + 1).scale(&fact.recip());
        out.push(d.values[n].scale(&k));
    }
    out
}

/// b_0 .. b_{n_max} of rhat(s) = sum b_n (pi s)^n at q = 0, stored as
/// pi^n b_n: b_0 = -p, b_{2n-1} = pi (-1)^n c_{2n}/(2n-1)!, b_{2n} = 0.
pub fn b_series(n_max: usize) -> RecurrenceSeries {
    let mut v = vec![-ParamPoly::p()];
    let mut fact = BigRational::one();
    for k in 1..=n_max {
        fact *= BigRational::from_integer((k as i64).into());
        if k % 2 == 0 {
            v.push(ParamPoly::zero());
            continue;
        }
        let n = k.div_ceil(2);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let cn = c2n_closed_form(n);
        let f = GaussianRational::real(BigRational::from_integer(sign.into()) / fact.clone());
        v.push(cn.value.scale(&f));
    }
    RecurrenceSeries {
        kind: SeriesKind::B,
        engine: "ode-beta2".into(),
        first_index: 0,
        pi_power: (0..v.len()).map(|k| -(k as i32)).collect(),
        values: v,
        seeds: "b_0 = -p (screening), b_1 = p^2/(2 pi)".into(),
    }
}

/// Checks that the b-series solves the transformed q = 0 equation exactly,
/// and that the closed-form transformed operator is the Fourier image of the
/// x-space equation.
pub fn fourier_ode_beta2_residual(n_max: usize) -> Report {
    let mut r = Report::new("fourier-ode-beta2");
    let b = b_series(n_max);
    r.check("b_0 = -p", b.values[0] == -ParamPoly::p());
    r.check("b_1 = p^2/(2 pi)", b.values[1] == s(&(&ParamPoly::p() * &ParamPoly::p()), 1, 2));
    for k in (2..=n_max).step_by(2) {
        r.check(format!("b_{k} = 0"), b.values[k].is_zero());
    }
    let closed = FourierOperator::beta2_q0_closed();
    let derived = LinearOde::beta2_q0().fourier();
    r.check("closed-form operator = transform of x-space operator", closed.canonical_terms() == derived.canonical_terms());
    let res = closed.power_series_residual(&b.values);
    for (m, c) in res.iter().enumerate() {
        r.check(format!("residual s^{m}"), c.is_zero());
    }
    r
}

/// d_{2n} = (p^2+q^2) x (poly in p^2, q^2 of degree n-1);
/// d_{2n-1} = q (p^2+q^2) x (degree n-2), n >= 2.
pub fn verify_d_structure(d: &RecurrenceSeries) -> Report {
    let mut r = Report::new("d-structure");
    let p = ParamPoly::p();
    let q = ParamPoly::q();
    let base = &(&p * &p) + &(&q * &q);
    for n in d.first_index..=d.last_index() {
        let v = d.get(n).unwrap();
        let (div, deg) = if n % 2 == 0 {
            (base.clone(), (n / 2 - 1) as u32)
        } else if n >= 3 {
            (&q * &base, (n.div_ceil(2) - 2) as u32)
        } else {
            continue;
        };
        let ok = match v.exact_div(&div) {
            Ok(quot) => {
                let even = quot.terms().keys().all(|&(a, b)| a % 2 == 0 && b % 2 == 0);
                even && quot.total_degree() == Some(2 * deg)
            }
            Err(_) => false,
        };
        r.check(format!("d_{n}"), ok);
    }
    r
}

/// q -> 0 of d reproduces the closed form and kills odd entries.
pub fn verify_d_vs_closed_form(d: &RecurrenceSeries) -> Report {
    let mut r = Report::new("d-vs-closed-form");
    for n in d.first_index..=d.last_index() {
        let v = q_zero(d.get(n).unwrap());
        if n % 2 == 1 {
            r.check(format!("d_{n}|q=0 = 0"), v.is_zero());
        } else {
            let cf = c2n_closed_form(n / 2);
            r.check(
                format!("d_{n}|q=0 = c_{n}"),
                v == cf.value && d.pi_power_of(n) == Some(cf.pi_power),
            );
        }
    }
    r
}

/// The d-series solves the x-space equation as a series in 1/x.
pub fn verify_d_solves_ode(d: &RecurrenceSeries) -> Report {
    let mut r = Report::new("d-solves-ode");
    let mut coeffs = vec![cp(1, 1)];
    coeffs.extend(d.values.iter().cloned());
    for (k, c) in LinearOde::beta2().laurent_residual(&coeffs).iter().enumerate() {
        r.check(format!("x^(top-{k})"), c.is_zero());
    }
    r
}
