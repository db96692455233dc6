use std::process::{Command, Output};

use cjft_cli::{parse_grid, parse_number, CoeffFile};
use cjft_core::loop_engine::compute_table;
use cjft_exact::{BigRational, ParamScalar};

fn cjft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cjft")).args(args).env_remove("CJFT_DIGITS").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn number_grammar() {
    assert_eq!(parse_number("0.1").unwrap(), rat(1, 10));
    assert_eq!(parse_number("-2/6").unwrap(), rat(-1, 3));
    assert_eq!(parse_number("1.5e-3").unwrap(), rat(3, 2000));
    assert_eq!(parse_number("-0.25").unwrap(), rat(-1, 4));
    assert_eq!(parse_number("2E2").unwrap(), rat(200, 1));
    assert!(parse_number("1.-5").is_err());
    assert!(parse_number("abc").is_err());
    assert!(parse_number("1/0").is_err());
    let g = parse_grid("0.1:3.0:0.1").unwrap();
    assert_eq!(g.len(), 30);
    assert_eq!(g[29], rat(3, 1));
    assert!(parse_grid("1:0:1").is_err());
}

#[test]
fn coeffs_numeric_h1() {
    let o = cjft(&["coeffs", "--order", "1", "--beta", "2", "--p", "1", "--q", "0"]);
    assert!(o.status.success());
    let f: CoeffFile = serde_json::from_str(&stdout(&o)).unwrap();
    let e = &f.entries[1];
    assert_eq!(e.h, ParamScalar::one());
    assert_eq!(e.pi_power, -1);
    // 1/(2 pi)
    assert!(e.numeric.as_ref().unwrap().h.re.starts_with("1.59154943091895335768883763372514362034"));
}

#[test]
fn coeffs_order0_screening() {
    let o = cjft(&["coeffs", "--order", "0"]);
    assert!(o.status.success());
    let f: CoeffFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(f.entries.len(), 1);
    assert_eq!(f.entries[0].h_tilde, -&ParamScalar::p());
    assert!(f.entries[0].numeric.is_none());
}

#[test]
fn coeffs_symbolic_round_trip() {
    let o = cjft(&["coeffs", "--order", "3", "--symbolic"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let f: CoeffFile = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&f).unwrap() + "\n", text);
    let t = compute_table(3).unwrap();
    for (j, e) in f.entries.iter().enumerate() {
        assert_eq!(e.alpha, t.alphas[j]);
        assert_eq!(e.h, t.h[j].value);
        assert_eq!(e.h_tilde, t.h_tilde[j].value);
    }
    // h_1 (2 pi) = (q^2 + kappa p + kappa^2 (p - 1) p) / kappa^2
    let (k, p, q) = (ParamScalar::kappa(), ParamScalar::p(), ParamScalar::q());
    let num = &(&(&q * &q) + &(&k * &p)) + &(&(&k * &k) * &(&(&p - &ParamScalar::one()) * &p));
    assert_eq!(f.entries[1].h, &num * &ParamScalar::kappa_pow(-2));
}

#[test]
fn coeffs_rejects_bad_input() {
    assert_eq!(cjft(&["coeffs", "--order", "9"]).status.code(), Some(2));
    assert_eq!(cjft(&["coeffs", "--beta", "x"]).status.code(), Some(2));
    assert_eq!(cjft(&["coeffs", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(cjft(&["coeffs", "--symbolic", "--p", "1"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = cjft(&["verify", "--only", "duality", "--order", "5"]);
    assert!(o.status.success());
    let s = stdout(&o);
    for j in 0..=5 {
        assert!(s.contains(&format!("[ok  ] duality h_{j}\n")), "{s}");
    }
    let o = cjft(&["verify", "--only", "cross-beta2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(cjft(&["verify", "--only", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_default_run() {
    let o = cjft(&["verify"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.ends_with(", 0 failed\n"));
}

#[test]
fn density_uniform_and_p1() {
    let o = cjft(&["density", "--beta", "2", "--p", "0", "--q", "0", "--n", "4"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().skip(2).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.split(',').nth(1) == Some("1")));
    let o = cjft(&["density", "--p", "1", "--xmax", "1/2", "--n", "1", "--half", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["meta"]["formula"], "beta2_elementary");
    // 1 - 4/pi^2
    assert!(v["rows"][1]["value"].as_str().unwrap().starts_with("5.9471526543064891422448214716108"));
}

#[test]
fn ft_triangle_data() {
    let o = cjft(&["ft", "--beta", "2", "--p", "1", "--q", "0", "--tau", "0.1:3.0:0.1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let mut n = 0;
    for line in s.lines().filter(|l| !l.starts_with('#') && !l.starts_with("tau")) {
        let f: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert!((f[1] - (-1.0 + f[0] / (2.0 * std::f64::consts::PI))).abs() < 1e-8, "{line}");
        n += 1;
    }
    assert_eq!(n, 30);
    // outside the supported region
    assert_eq!(cjft(&["ft", "--p", "1/2", "--tau", "1"]).status.code(), Some(2));
    assert_eq!(cjft(&["density", "--p", "sym"]).status.code(), Some(2));
}

#[test]
fn digits_env_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_cjft"))
        .args(["density", "--n", "2", "--out", path.to_str().unwrap()])
        .env("CJFT_DIGITS", "25")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# beta=2,p=1,q=0,formula=beta2_elementary,digits=25\n"));
    assert_eq!(cjft(&["density", "--digits", "10"]).status.code(), Some(2));
}
