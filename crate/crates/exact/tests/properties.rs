use cjft_exact::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn gauss() -> impl Strategy<Value = GaussianRational> {
    (rat(), rat()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), gauss()), 0..5).prop_map(ParamPoly::from_terms)
}

fn scalar() -> impl Strategy<Value = ParamScalar> {
    prop::collection::vec((-2i32..=2, poly()), 0..3).prop_map(|v| {
        let mut s = ParamScalar::zero();
        for (e, p) in v {
            s.add_poly(e, &p);
        }
        s
    })
}

fn small_scalar() -> impl Strategy<Value = ParamScalar> {
    (-1i32..=1, 0u32..2, 0u32..2, gauss()).prop_map(|(e, a, b, c)| ParamScalar::monomial(c, e, a, b))
}

fn xfn() -> impl Strategy<Value = XRationalFn> {
    (prop::collection::vec(small_scalar(), 0..5), 0u32..=4, 0u32..=4)
        .prop_map(|(n, a, b)| XRationalFn::new(n, a, b))
}

fn decaying_xfn() -> impl Strategy<Value = XRationalFn> {
    (1u32..=4, 0u32..=4, prop::collection::vec(-5i64..=5, 1..9)).prop_map(|(a, b, coeffs)| {
        let m = (a + b) as usize;
        let n: Vec<ParamScalar> = coeffs.into_iter().take(m).map(ParamScalar::from_int).collect();
        XRationalFn::new(n, a, b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gaussian_field_axioms(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &GaussianRational::zero(), a.clone());
        prop_assert_eq!(&a * &GaussianRational::one(), a.clone());
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn param_poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &ParamPoly::constant(GaussianRational::one()), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().values().all(|v| !v.is_zero()));
    }

    #[test]
    fn param_scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &ParamScalar::zero(), a.clone());
        prop_assert_eq!(&a * &ParamScalar::one(), a.clone());
        prop_assert!(a.laurent().values().all(|p| !p.is_zero()));
        let k3 = ParamScalar::kappa_pow(3).scale_int(-5);
        prop_assert_eq!((&a * &k3).checked_div(&k3).unwrap(), a.clone());
        prop_assert_eq!(&a.re_part() + &(&ParamScalar::i() * &a.im_part()), a.clone());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in scalar(), b in scalar(), kn in 1i64..5, pn in -4i64..5, qn in -4i64..5) {
        let k = GaussianRational::from_frac(kn, 3);
        let p = GaussianRational::from_frac(pn, 2);
        let q = GaussianRational::from_int(qn);
        let ev = |s: &ParamScalar| s.eval(&k, &p, &q).unwrap();
        prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        // symbolic substitution kappa -> 1/kappa, p -> -kappa p, q -> -q/kappa
        let pi = ParamScalar::p().mul_kappa_pow(1).scale_int(-1);
        let qi = ParamScalar::q().mul_kappa_pow(-1).scale_int(-1);
        let s = |x: &ParamScalar| x.substitute(&KappaMap::inverse(), &pi, &qi);
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
    }

    #[test]
    fn xrational_canonical_idempotent(f in xfn(), g in xfn()) {
        prop_assert!(f.is_canonical());
        let s = f.add(&g);
        prop_assert!(s.is_canonical());
        let m = f.mul(&g);
        prop_assert!(m.is_canonical());
        prop_assert_eq!(f.add(&g).sub(&g), f.clone());
        let mf = MultiXRationalFn::from_single(&f);
        prop_assert!(mf.is_canonical());
        prop_assert_eq!(mf.to_single().unwrap(), f.clone());
    }

    #[test]
    fn inverse_x_matches_long_division(f in decaying_xfn(), kmax in 1u32..=12) {
        let series = brute_force_series(&f, kmax as usize + 2);
        for k in 1..=kmax {
            prop_assert_eq!(f.inverse_x_coefficient(k).unwrap(), series[k as usize + 1].clone());
        }
    }

    #[test]
    fn divide_difference_inverts_multiplication(c1 in -5i64..5, c2 in -5i64..5, e1 in 0u32..3, e2 in 0u32..3, e3 in 0u32..3) {
        let mut q = XPoly::zero(3);
        q.add_term(vec![e1, e2, e3], &ParamScalar::from_int(c1));
        q.add_term(vec![e3, 0, e1], &ParamScalar::from_int(c2));
        let d = XPoly::var(3, 0).sub(&XPoly::var(3, 2));
        let f = q.mul(&d);
        prop_assert_eq!(exact_divide_difference(&f, 0, 2).unwrap(), q);
    }
}

/// Coefficients of y^0..y^K in f = sum_m s_m y^m with y = 1/x, by long division.
fn brute_force_series(f: &XRationalFn, kmax: usize) -> Vec<ParamScalar> {
    let a = f.pole_at_0() as usize;
    let b = f.pole_at_1() as usize;
    let m = a + b;
    // denominator x^a (1-x)^b in powers of x
    let mut den = vec![ParamScalar::one()];
    for _ in 0..b {
        let mut next = vec![ParamScalar::zero(); den.len() + 1];
        for (i, c) in den.iter().enumerate() {
            next[i] = &next[i] + c;
            next[i + 1] = &next[i + 1] - c;
        }
        den = next;
    }
    let mut shifted = vec![ParamScalar::zero(); a];
    shifted.extend(den);
    let den = shifted;
    let num = f.numerator();
    let mut out = vec![ParamScalar::zero(); kmax + 1];
    if num.is_empty() {
        return out;
    }
    let d = num.len() - 1;
    // reversed polynomials in y
    let nrev: Vec<ParamScalar> = (0..=d).map(|i| num[d - i].clone()).collect();
    let drev: Vec<ParamScalar> = (0..=m).map(|i| den[m - i].clone()).collect();
    let lead = drev[0].as_constant().unwrap();
    // series s = nrev / drev
    let mut s: Vec<ParamScalar> = Vec::new();
    for n in 0..=kmax {
        let mut acc = nrev.get(n).cloned().unwrap_or_default();
        for j in 1..=n.min(m) {
            acc = &acc - &(&drev[j] * &s[n - j]);
        }
        s.push(acc.checked_div(&ParamScalar::constant(lead.clone())).unwrap());
    }
    // f = y^{m-d} s(y)
    let off = m - d;
    for (i, c) in s.into_iter().enumerate() {
        if i + off <= kmax {
            out[i + off] = c;
        }
    }
    out
}
