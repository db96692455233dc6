use std::sync::OnceLock;

use cjft_core::loop_engine::{compute_table, structure_function_series, CoefficientTable};
use cjft_core::polyprops::*;
use cjft_exact::BigRational;
use cjft_numeric::{PrecisionContext, Real};
use proptest::prelude::*;

fn table() -> &'static CoefficientTable {
    static T: OnceLock<CoefficientTable> = OnceLock::new();
    T.get_or_init(|| compute_table(6).expect("loop table"))
}

fn ctx() -> PrecisionContext {
    PrecisionContext::default()
}

fn up(c: &[i64]) -> UPoly {
    UPoly::from_ints(c)
}

#[test]
fn extract_examples() {
    let t = table();
    let p4 = extract_upoly(t, Source::H, 5, 4, 0, false).unwrap();
    assert!(proportional(&p4, &up(&[5, -9, 5])), "{:?}", p4.coefficients);
    let p5 = extract_upoly(t, Source::H, 5, 5, 0, false).unwrap();
    assert!(proportional(&p5, &up(&[-1, 1])));
    let h1 = extract_upoly(t, Source::H, 1, 1, 0, false).unwrap();
    assert_eq!(h1, {
        let mut u = up(&[-1, 1]);
        u.provenance = h1.provenance.clone();
        u
    });
    // absent monomial
    assert!(extract_upoly(t, Source::H, 1, 3, 0, false).unwrap().is_zero());
    // h~_0 = -i q / kappa: imaginary phase
    let ht = extract_upoly(t, Source::H, 0, 0, 1, true).unwrap();
    assert_eq!(ht.provenance.unwrap().phase, Phase::Imaginary);
}

#[test]
fn h5_ladder_matches_listed_polynomials() {
    let ladder = p_ladder(table(), 5, 5).unwrap();
    for (k, (got, want)) in ladder.iter().zip(h5_reference_ladder()).enumerate() {
        assert!(proportional(got, &want), "p^{}: {:?}", k + 1, got.coefficients);
    }
    let r = ladder_report("h5-ladder", &ladder, &ctx(), "1e-20").unwrap();
    print!("{r}");
    assert!(r.passed());
}

#[test]
fn classification_examples() {
    let c = classify_palindrome(&up(&[5, -9, 5])).unwrap();
    assert_eq!((c.direct, c.one_minus_u, c.quotient), (Symmetry::Palindromic, 0, Symmetry::Palindromic));
    let f = up(&[-1, 1]).mul(&up(&[11, -20, 11]));
    let c = classify_palindrome(&f).unwrap();
    assert_eq!((c.direct, c.one_minus_u, c.quotient), (Symmetry::AntiPalindromic, 1, Symmetry::Palindromic));
    assert_eq!(c.label(), "(1-u) x palindromic");
    assert_eq!(classify_palindrome(&up(&[1])).unwrap().direct, Symmetry::Palindromic);
    let c = classify_palindrome(&up(&[1, 2, 5])).unwrap();
    assert!(!c.is_structured());
    assert!(classify_palindrome(&up(&[])).is_err());
}

#[test]
fn zeros_examples() {
    let c = ctx();
    let z = zeros_on_unit_circle(&up(&[-1, 1]), "1e-20", &c).unwrap();
    let _g = c.enter();
    assert_eq!(z.roots.len(), 1);
    assert_eq!(z.roots[0].re, Real::one());
    let z = zeros_on_unit_circle(&up(&[5, -9, 5]), "1e-20", &c).unwrap();
    // (9 +- i sqrt 19)/10
    let s19 = Real::from_i64(19).sqrt() / Real::from_i64(10);
    for r in &z.roots {
        assert!((&r.re - Real::frac(9, 10)).abs() < Real::parse("1e-35").unwrap());
        assert!((r.im.abs() - &s19).abs() < Real::parse("1e-35").unwrap());
    }
    let z = zeros_on_unit_circle(&up(&[32, -75, 90, -75, 32]), "1e-20", &c).unwrap();
    assert_eq!(z.roots.len(), 4);
    assert!(z.all_on_circle());
    // double root from (1 - u)^2
    let z = zeros_on_unit_circle(&up(&[1, -2, 1]), "1e-20", &c).unwrap();
    assert_eq!(z.multiplicity, vec![2, 2]);
    assert!(z.all_on_circle());
    // off the circle
    let z = zeros_on_unit_circle(&up(&[1, -3, 1]), "1e-20", &c).unwrap();
    assert!(!z.all_on_circle());
    let j = z.to_json();
    assert_eq!(j["roots"].as_array().unwrap().len(), 2);
    assert!(check_interlacing(&[z], &c).is_err());
}

#[test]
fn interlacing_examples() {
    let c = ctx();
    let a = zeros_on_unit_circle(&up(&[-1, 1]), "1e-20", &c).unwrap();
    let b = zeros_on_unit_circle(&up(&[3]), "1e-20", &c).unwrap();
    assert!(check_interlacing(&[a, b], &c).unwrap()[0].upper_half);
    // the listed ladder interlaces on the upper half circle, not over the
    // full circle with the real zeros kept
    let zs: Vec<_> = h5_reference_ladder().iter().map(|p| zeros_on_unit_circle(p, "1e-20", &c).unwrap()).collect();
    let il = check_interlacing(&zs, &c).unwrap();
    assert!(il.iter().all(|i| i.upper_half));
    assert!(!il[0].full_circle);
}

#[test]
fn structure_function_ladder() {
    let t = table();
    let r = verify_pj_shapes(t, 5).unwrap();
    print!("{r}");
    assert!(r.passed());
    let pj: Vec<UPoly> = structure_function_series(t, 5).unwrap().into_iter().skip(1).map(UPoly::new).collect();
    let r = ladder_report("pj-ladder", &pj, &ctx(), "1e-20").unwrap();
    print!("{r}");
    assert!(r.passed());
}

#[test]
fn pure_monomials_structured() {
    let r = verify_pure_monomials(table(), 5).unwrap();
    print!("{r}");
    assert!(r.passed());
}

#[test]
fn pure_monomials_on_circle() {
    let c = ctx();
    let t = table();
    for j in 1..=5 {
        for m in 1..=(j as u32 + 1) {
            for (dp, dq, qs) in [(m, 0, false), (0, m, true)] {
                for src in [Source::H, Source::HTilde] {
                    let p = extract_upoly(t, src, j, dp, dq, qs).unwrap();
                    if p.degree().unwrap_or(0) == 0 {
                        continue;
                    }
                    let z = zeros_on_unit_circle(&p, "1e-20", &c).unwrap();
                    assert!(z.all_on_circle(), "{src:?}_{j} p^{dp} q^{dq}: {:?}", p.coefficients);
                }
            }
        }
    }
}

#[test]
fn mixed_monomials_reported() {
    let s = survey_mixed_monomials(table(), 4, &ctx()).unwrap();
    assert!(!s.is_empty());
    for (src, j, a, b, label, circle) in s {
        println!("{src:?}_{j} p^{a} q^{b}: {label}, on circle: {circle:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classification_scale_invariant(c in proptest::collection::vec(-9i64..9, 1..7), n in -20i64..20, d in 1i64..9) {
        prop_assume!(n != 0 && c.iter().any(|x| *x != 0));
        let p = up(&c);
        let s = p.scale(&BigRational::new(n.into(), d.into()));
        prop_assert_eq!(classify_palindrome(&p).unwrap(), classify_palindrome(&s).unwrap());
    }

    #[test]
    fn square_free_multiplicities(r in proptest::collection::vec(-4i64..5, 1..5)) {
        // product of (u - r_k): multiplicities add up to the degree
        let p = r.iter().fold(up(&[1]), |acc, x| acc.mul(&up(&[-x, 1])));
        let total: usize = p.square_free().iter().map(|(f, m)| f.degree().unwrap() * m).sum();
        prop_assert_eq!(total, r.len());
    }
}
