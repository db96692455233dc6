//! One line per acceptance criterion. Run with `--nocapture` to see them.

mod common;

use cjft_core::loop_engine::*;
use cjft_core::suite::Suite;
use cjft_core::Report;
use cjft_exact::{GaussianRational, MultiXRationalFn, ParamScalar, XRationalFn};
use cjft_numeric::PrecisionContext;
use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Tally {
    failed: Vec<usize>,
}

impl Tally {
    fn line(&mut self, n: usize, what: &str, pass: bool, detail: String) {
        let mark = if pass { "ok  " } else { "FAIL" };
        println!("[{mark}] criterion {n:>2}: {what}{}", if detail.is_empty() { String::new() } else { format!(" ({detail})") });
        if !pass {
            self.failed.push(n);
        }
    }
}

fn failures(reports: &[Report]) -> String {
    let f: Vec<String> =
        reports.iter().flat_map(|r| r.failures().map(move |i| format!("{}: {}", r.id, i.label))).collect();
    f.join("; ")
}

fn all(suite: &Suite, ids: &[&str]) -> (bool, String) {
    let mut reps = Vec::new();
    for id in ids {
        match suite.run(id) {
            Ok(r) => reps.push(r),
            Err(e) => return (false, format!("{id}: {e}")),
        }
    }
    let n: usize = reps.iter().map(|r| r.items.len()).sum();
    let ok = reps.iter().all(|r| r.passed());
    (ok, if ok { format!("{n} checks") } else { failures(&reps) })
}

fn scalar() -> impl Strategy<Value = ParamScalar> {
    let term = (-5i64..=5, 1i64..=4, -2i32..=2, 0u32..=2, 0u32..=2, any::<bool>());
    proptest::collection::vec(term, 0..4).prop_map(|ts| {
        ts.into_iter().fold(ParamScalar::zero(), |acc, (n, d, e, dp, dq, im)| {
            let c = GaussianRational::from_frac(n, d);
            let c = if im { &c * &GaussianRational::i() } else { c };
            &acc + &ParamScalar::monomial(c, e, dp, dq)
        })
    })
}

fn ring_axioms(cases: u32) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, ..Config::default() });
    runner
        .run(&(scalar(), scalar(), scalar()), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &ParamScalar::one(), a.clone());
            prop_assert!((&a + &(-&a)).is_zero());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

#[test]
fn acceptance() {
    let mut t = Tally { failed: Vec::new() };
    let suite = Suite::new(5, PrecisionContext::default()).expect("loop table");
    let table = &suite.table;

    // 1
    let st = solve_hierarchy(5, None).expect("hierarchy");
    let w10 = *st.w1(0).unwrap() == XRationalFn::inv_x(n(1));
    let w11 = *st.w1(1).unwrap() == XRationalFn::new(vec![prod(&[a(), inv_k(1)])], 1, 1);
    let w12 = *st.w1(2).unwrap() == XRationalFn::new(vec![prod(&[sum(&[ab(), -k(), n(1)]), a(), inv_k(2)])], 0, 2);
    let vanish = st.get(2, 0).unwrap().is_zero() && st.get(2, 1).unwrap().is_zero() && st.get(3, 0).unwrap().is_zero();
    let w22 = st.get(2, 2).unwrap()
        == MultiXRationalFn::constant(2, -prod(&[a(), sum(&[ab(), -k(), n(1)]), inv_k(3)]))
            .mul_x_factors(0, 0, -2)
            .mul_x_factors(1, 0, -2);
    let alpha_bad: Vec<usize> = alphas().iter().enumerate().filter(|(j, w)| table.alphas[*j] != **w).map(|(j, _)| j).collect();
    t.line(
        1,
        "loop engine: W_1^{0,1,2}, vanishing W_2^{0,1}, W_3^0, alpha_0..alpha_5",
        w10 && w11 && w12 && vanish && w22 && alpha_bad.is_empty(),
        if alpha_bad.is_empty() { String::new() } else { format!("alpha mismatch at {alpha_bad:?}") },
    );

    // 2
    let bad: Vec<usize> = h_through_three()
        .iter()
        .enumerate()
        .filter(|(j, (h, ht))| table.h[*j].value != *h || table.h_tilde[*j].value != *ht || table.h[*j].pi_power != -(*j as i32))
        .map(|(j, _)| j)
        .collect();
    t.line(2, "h_0..h_3 and h~_0..h~_3 exact", bad.is_empty(), if bad.is_empty() { String::new() } else { format!("{bad:?}") });

    // 3
    let (ok, d) = all(&suite, &["duality"]);
    t.line(3, "duality for h and h~, j <= 5", ok, d);

    // 4
    let (ok, d) = match verify_linear_response(table, 4) {
        Ok(r) => (r.passed(), if r.passed() { format!("{} checks", r.items.len()) } else { failures(&[r]) }),
        Err(e) => (false, e.to_string()),
    };
    t.line(4, "linear response in p and q through tau^4", ok, d);

    // 5
    let (ok, d) = all(&suite, &["d-series", "alpha-ratios", "bessel", "cross-beta2", "cross-e-beta2"]);
    t.line(5, "beta = 2 recurrence route against the loop engine", ok, d);

    // 6
    let (ok, d) = all(&suite, &["g-series", "cross-beta4", "beta1"]);
    t.line(6, "beta = 4 recurrence route and the beta = 1 relation", ok, d);

    // 7
    let (ok, d) = all(&suite, &["ft"]);
    t.line(7, "numeric Fourier transform, screening, p = 2 series", ok, d);

    // 8
    let (ok, d) = all(&suite, &["ode-residual"]);
    t.line(8, "ODE residuals of the beta = 2 densities below 1e-20", ok, d);

    // 9
    let (ok, d) = all(&suite, &["h5-ladder", "pj-shapes"]);
    t.line(9, "palindromic ladder, unit circle zeros, interlacing, p_j shapes", ok, d);

    // 10
    let ring = ring_axioms(1000);
    let (ok, d) = all(&suite, &["q-parity", "reality", "trivial-point"]);
    t.line(
        10,
        "ring axioms (1000 cases), q parity, reality split, alpha_j(p = q = 0) = 0",
        ok && ring.is_ok(),
        match ring {
            Ok(()) => d,
            Err(e) => format!("ring axioms: {e}; {d}"),
        },
    );

    assert!(t.failed.is_empty(), "failed criteria: {:?}", t.failed);
}
