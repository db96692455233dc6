//! Hand-encoded reference values shared by the integration tests.
#![allow(dead_code)]

use cjft_exact::ParamScalar;

pub fn k() -> ParamScalar {
    ParamScalar::kappa()
}
pub fn p() -> ParamScalar {
    ParamScalar::p()
}
pub fn q() -> ParamScalar {
    ParamScalar::q()
}
pub fn i() -> ParamScalar {
    ParamScalar::i()
}
pub fn n(v: i64) -> ParamScalar {
    ParamScalar::from_int(v)
}
pub fn frac(a: i64, b: i64) -> ParamScalar {
    ParamScalar::from_frac(a, b)
}
pub fn inv_k(e: i32) -> ParamScalar {
    ParamScalar::kappa_pow(-e)
}

/// kappa p + i q
pub fn a() -> ParamScalar {
    &(&k() * &p()) + &(&i() * &q())
}
/// kappa p - i q
pub fn ab() -> ParamScalar {
    &(&k() * &p()) - &(&i() * &q())
}

/// Sum of terms, each a product of factors.
pub fn sum(terms: &[ParamScalar]) -> ParamScalar {
    terms.iter().fold(ParamScalar::zero(), |acc, t| &acc + t)
}
pub fn prod(factors: &[ParamScalar]) -> ParamScalar {
    factors.iter().fold(ParamScalar::one(), |acc, t| &acc * t)
}

/// The common factor alpha (1 + alpha-bar - kappa).
fn pre() -> ParamScalar {
    prod(&[a(), sum(&[n(1), ab(), -k()])])
}

pub fn alpha0() -> ParamScalar {
    sum(&[-p(), -prod(&[i(), q(), inv_k(1)])])
}

/// p^2 - p + p/kappa + q^2/kappa^2 + i q (1 - kappa)/kappa^2
pub fn alpha1() -> ParamScalar {
    sum(&[
        prod(&[p(), p()]),
        -p(),
        prod(&[p(), inv_k(1)]),
        prod(&[q(), q(), inv_k(2)]),
        prod(&[i(), q(), sum(&[n(1), -k()]), inv_k(2)]),
    ])
}

pub fn alpha2() -> ParamScalar {
    let f = sum(&[n(-2), a(), -ab(), k().scale_int(2)]);
    prod(&[pre(), f, frac(1, 2), inv_k(3)])
}

pub fn alpha3() -> ParamScalar {
    let (a, b, k) = (a(), ab(), k());
    let f = sum(&[
        n(6),
        prod(&[a.clone(), a.clone()]),
        prod(&[b.clone(), b.clone()]),
        prod(&[n(-3), a.clone(), sum(&[n(2), b.clone(), k.scale_int(-2)])]),
        prod(&[n(-5), b.clone(), sum(&[k.clone(), n(-1)])]),
        k.scale_int(-11),
        prod(&[n(6), k.clone(), k.clone()]),
    ]);
    prod(&[pre(), f, frac(1, 6), inv_k(4)])
}

pub fn alpha4() -> ParamScalar {
    let (a, b, k) = (a(), ab(), k());
    let a2 = prod(&[a.clone(), a.clone()]);
    let b2 = prod(&[b.clone(), b.clone()]);
    let k2 = prod(&[k.clone(), k.clone()]);
    let k3 = prod(&[k2.clone(), k.clone()]);
    let f = sum(&[
        prod(&[a2.clone(), a.clone()]),
        -prod(&[b2.clone(), b.clone()]),
        prod(&[n(-6), a2.clone(), sum(&[n(2), b.clone(), k.scale_int(-2)])]),
        prod(&[n(9), b2.clone(), sum(&[k.clone(), n(-1)])]),
        prod(&[b.clone(), sum(&[n(-26), k.scale_int(47), k2.scale_int(-26)])]),
        prod(&[
            a.clone(),
            sum(&[n(34), b2.scale_int(6), prod(&[n(-29), b.clone(), sum(&[k.clone(), n(-1)])]), k.scale_int(-63), k2.scale_int(34)]),
        ]),
        prod(&[n(12), sum(&[n(-2), k.scale_int(5), k2.scale_int(-5), k3.scale_int(2)])]),
    ]);
    prod(&[pre(), f, frac(1, 24), inv_k(5)])
}

pub fn alpha5() -> ParamScalar {
    let (a, b, k) = (a(), ab(), k());
    let pw = |x: &ParamScalar, e: u32| x.pow(e);
    let km1 = sum(&[k.clone(), n(-1)]);
    let f = sum(&[
        pw(&a, 4),
        pw(&b, 4),
        prod(&[n(-10), pw(&a, 3), sum(&[n(2), b.clone(), k.scale_int(-2)])]),
        prod(&[n(-14), pw(&b, 3), km1.clone()]),
        prod(&[
            n(5),
            pw(&a, 2),
            sum(&[n(22), pw(&b, 2).scale_int(4), prod(&[n(-19), b.clone(), km1.clone()]), k.scale_int(-41), pw(&k, 2).scale_int(22)]),
        ]),
        prod(&[pw(&b, 2), sum(&[n(71), k.scale_int(-127), pw(&k, 2).scale_int(71)])]),
        prod(&[b.clone(), sum(&[n(154), k.scale_int(-377), pw(&k, 2).scale_int(377), pw(&k, 3).scale_int(-154)])]),
        prod(&[n(4), sum(&[n(30), k.scale_int(-91), pw(&k, 2).scale_int(124), pw(&k, 3).scale_int(-91), pw(&k, 4).scale_int(30)])]),
        prod(&[
            n(-5),
            a.clone(),
            sum(&[
                n(42),
                pw(&b, 3).scale_int(2),
                prod(&[n(-17), pw(&b, 2), km1.clone()]),
                k.scale_int(-107),
                pw(&k, 2).scale_int(107),
                pw(&k, 3).scale_int(-42),
                prod(&[b.clone(), sum(&[n(47), k.scale_int(-86), pw(&k, 2).scale_int(47)])]),
            ]),
        ]),
    ]);
    prod(&[pre(), f, frac(1, 120), inv_k(6)])
}

pub fn alphas() -> Vec<ParamScalar> {
    vec![alpha0(), alpha1(), alpha2(), alpha3(), alpha4(), alpha5()]
}

/// (h_j, h~_j) for j = 0..3, times (2 pi)^j.
pub fn h_through_three() -> Vec<(ParamScalar, ParamScalar)> {
    let (k, p, q, i) = (k(), p(), q(), i());
    let k2 = prod(&[k.clone(), k.clone()]);
    let k3 = prod(&[k2.clone(), k.clone()]);
    let k4 = prod(&[k3.clone(), k.clone()]);
    let p2 = prod(&[p.clone(), p.clone()]);
    let q2 = prod(&[q.clone(), q.clone()]);
    let one_minus_k = sum(&[n(1), -k.clone()]);

    let h0 = -prod(&[i.clone(), q.clone(), inv_k(1)]);
    let h1 = prod(&[sum(&[q2.clone(), prod(&[k.clone(), p.clone()]), prod(&[k2.clone(), sum(&[n(-1), p.clone()]), p.clone()])]), inv_k(2)]);
    let h2 = prod(&[
        i.clone(),
        q.clone(),
        inv_k(3),
        sum(&[n(-1), q2.clone(), prod(&[k.clone(), sum(&[n(2), p.clone()])]), prod(&[k2.clone(), sum(&[n(-1), -p.clone(), p2.clone()])])]),
    ]);
    let q4 = prod(&[q2.clone(), q2.clone()]);
    let p3 = prod(&[p2.clone(), p.clone()]);
    let h3 = prod(&[
        frac(1, 6),
        inv_k(4),
        sum(&[
            q2.scale_int(17),
            q4.scale_int(-5),
            prod(&[k.clone(), sum(&[q2.scale_int(-33), prod(&[n(-6), p.clone(), sum(&[n(-1), q2.clone()])])])]),
            prod(&[
                k2.clone(),
                sum(&[
                    q2.scale_int(17),
                    prod(&[p2.clone(), sum(&[n(5), q2.scale_int(-6)])]),
                    prod(&[p.clone(), sum(&[n(-17), q2.scale_int(6)])]),
                ]),
            ]),
            prod(&[k3.clone(), p.clone(), sum(&[n(17), p.scale_int(-9), p2.scale_int(-2)])]),
            -prod(&[k4.clone(), p.clone(), sum(&[n(6), p.scale_int(-5), p2.scale_int(-2), p3.clone()])]),
        ]),
    ]);
    let ht0 = -p.clone();
    let ht1 = prod(&[i.clone(), q.clone(), one_minus_k.clone(), inv_k(2)]);
    let ht2 = -prod(&[
        one_minus_k.clone(),
        inv_k(3),
        sum(&[q2.scale_int(2), prod(&[k.clone(), p.clone()]), prod(&[k2.clone(), sum(&[n(-1), p.clone()]), p.clone()])]),
    ]);
    let ht3 = -prod(&[
        i.clone(),
        q.clone(),
        one_minus_k,
        frac(1, 6),
        inv_k(4),
        sum(&[n(-6), q2.scale_int(16), prod(&[k.clone(), sum(&[n(11), p.scale_int(12)])]), prod(&[k2.scale_int(6), sum(&[n(-1), p.scale_int(-2), p2.scale_int(2)])])]),
    ]);
    vec![(h0, ht0), (h1, ht1), (h2, ht2), (h3, ht3)]
}
