//! Linear differential operators with polynomial coefficients, their
//! Fourier images, and exact residuals on truncated series.

use cjft_exact::{GaussianRational, ParamPoly};

/// `coeff * x^x_power * R^{(deriv)}`.
#[derive(Clone, Debug)]
pub struct OdeTerm {
    pub coeff: ParamPoly,
    pub x_power: u32,
    pub deriv: u32,
}

#[derive(Clone, Debug)]
pub struct LinearOde {
    pub name: String,
    pub terms: Vec<OdeTerm>,
}

/// `coeff * d^k/ds^k ( s^power * rhat(s) )`.
#[derive(Clone, Debug)]
pub struct FourierTerm {
    pub coeff: ParamPoly,
    pub outer_deriv: u32,
    pub power: u32,
}

#[derive(Clone, Debug)]
pub struct FourierOperator {
    pub name: String,
    pub terms: Vec<FourierTerm>,
}

fn cr(n: i64, d: i64) -> ParamPoly {
    ParamPoly::constant(GaussianRational::from_frac(n, d))
}

pub(crate) fn q_zero(c: &ParamPoly) -> ParamPoly {
    ParamPoly::from_terms(c.terms().iter().filter(|(k, _)| k.1 == 0).map(|(k, v)| (*k, v.clone())))
}

fn falling(top: i64, k: u32) -> i64 {
    (0..k as i64).map(|j| top - j).product()
}

impl LinearOde {
    fn push(&mut self, coeff: ParamPoly, x_power: u32, deriv: u32) {
        self.terms.push(OdeTerm { coeff, x_power, deriv });
    }

    /// Third order equation for the scaled beta = 2 density R(x) = rho(x/pi)/pi:
    /// x^3 R''' + 4x^2 R'' + 2x(1 - 2p^2 - 4qx + 2x^2) R' - 4(p^2 + qx) R = 0.
    pub fn beta2() -> Self {
        let p = ParamPoly::p();
        let q = ParamPoly::q();
        let p2 = &p * &p;
        let mut o = LinearOde { name: "beta2".into(), terms: Vec::new() };
        o.push(cr(1, 1), 3, 3);
        o.push(cr(4, 1), 2, 2);
        o.push(&cr(2, 1) - &p2.scale(&GaussianRational::from_int(4)), 1, 1);
        o.push(q.scale(&GaussianRational::from_int(-8)), 2, 1);
        o.push(cr(4, 1), 3, 1);
        o.push(p2.scale(&GaussianRational::from_int(-4)), 0, 0);
        o.push(q.scale(&GaussianRational::from_int(-4)), 1, 0);
        o
    }

    /// The q = 0 equation multiplied through by x, which is `beta2` at q = 0.
    pub fn beta2_q0() -> Self {
        let mut o = Self::beta2();
        o.name = "beta2_q0".into();
        for t in &mut o.terms {
            t.coeff = q_zero(&t.coeff);
        }
        o.terms.retain(|t| !t.coeff.is_zero());
        o
    }

    /// Fifth order equation for the scaled beta = 4 density, pt = p - 2p^2.
    pub fn beta4() -> Self {
        let p = ParamPoly::p();
        let q = ParamPoly::q();
        let pt = &p - &(&p * &p).scale(&GaussianRational::from_int(2));
        let pt2 = &pt * &pt;
        let q2 = &q * &q;
        let s = |x: &ParamPoly, n: i64| x.scale(&GaussianRational::from_int(n));
        let mut o = LinearOde { name: "beta4".into(), terms: Vec::new() };
        o.push(cr(1, 1), 5, 5);
        o.push(cr(10, 1), 4, 4);
        o.push(cr(20, 1), 5, 3);
        o.push(s(&q, -20), 4, 3);
        o.push(&cr(22, 1) + &s(&pt, 10), 3, 3);
        o.push(cr(64, 1), 4, 2);
        o.push(s(&q, -76), 3, 2);
        o.push(&cr(4, 1) + &s(&pt, 44), 2, 2);
        o.push(cr(64, 1), 5, 1);
        o.push(s(&q, -128), 4, 1);
        o.push(s(&(&(&s(&q2, 4) + &s(&pt, 4)) + &cr(1, 1)), 16), 3, 1);
        o.push(s(&(&q * &(&cr(6, 1) + &s(&pt, 16))), -4), 2, 1);
        o.push(s(&(&(&s(&pt2, 4) + &s(&pt, 7)) - &cr(1, 1)), 4), 1, 1);
        o.push(s(&q, -32), 3, 0);
        o.push(s(&(&q2 + &pt), 32), 2, 0);
        o.push(s(&(&q * &(&s(&pt, 6) - &cr(1, 1))), -8), 1, 0);
        o.push(s(&pt2, 16), 0, 0);
        o
    }

    /// Largest x-exponent shift a - b over the terms.
    fn top_shift(&self) -> i64 {
        self.terms.iter().map(|t| t.x_power as i64 - t.deriv as i64).max().unwrap_or(0)
    }

    /// Residual of the operator on R = sum_{n=0}^{N} c_n x^{-n}, returned as
    /// the coefficients of x^{top}, x^{top-1}, ..., x^{top-N}: exactly those
    /// powers which the truncation does not affect.
    pub fn laurent_residual(&self, c: &[ParamPoly]) -> Vec<ParamPoly> {
        let top = self.top_shift();
        let nmax = c.len() as i64 - 1;
        let mut out = Vec::new();
        for e in (top - nmax..=top).rev() {
            let mut acc = ParamPoly::zero();
            for t in &self.terms {
                let n = t.x_power as i64 - t.deriv as i64 - e;
                if n < 0 || n > nmax {
                    continue;
                }
                // d^b x^{-n} = (-n)(-n-1)...(-n-b+1) x^{-n-b}
                let f = falling(-n, t.deriv);
                if f == 0 {
                    continue;
                }
                acc.add_mul(&t.coeff.scale(&GaussianRational::from_int(f)), &c[n as usize]);
            }
            out.push(acc);
        }
        out
    }

    /// Fourier image under f-hat(s) = int f(x) e^{isx} dx:
    /// x^a f^{(b)} -> (-i)^{a+b} d^a/ds^a (s^b f-hat).
    pub fn fourier(&self) -> FourierOperator {
        let terms = self
            .terms
            .iter()
            .map(|t| FourierTerm {
                coeff: t.coeff.scale(&GaussianRational::i_pow(-((t.x_power + t.deriv) as i64))),
                outer_deriv: t.x_power,
                power: t.deriv,
            })
            .collect();
        FourierOperator { name: format!("fourier[{}]", self.name), terms }
    }
}

impl FourierOperator {
    /// The beta = 2, q = 0 transformed equation in closed form:
    /// -d^3((s^3 - 4s) r) + 4 d^2(s^2 r) - 2(1 - 2p^2) d(s r) - 4p^2 r = 0.
    pub fn beta2_q0_closed() -> Self {
        let p2 = &ParamPoly::p() * &ParamPoly::p();
        let terms = vec![
            FourierTerm { coeff: cr(-1, 1), outer_deriv: 3, power: 3 },
            FourierTerm { coeff: cr(4, 1), outer_deriv: 3, power: 1 },
            FourierTerm { coeff: cr(4, 1), outer_deriv: 2, power: 2 },
            FourierTerm {
                coeff: (&cr(1, 1) - &p2.scale(&GaussianRational::from_int(2))).scale(&GaussianRational::from_int(-2)),
                outer_deriv: 1,
                power: 1,
            },
            FourierTerm { coeff: p2.scale(&GaussianRational::from_int(-4)), outer_deriv: 0, power: 0 },
        ];
        FourierOperator { name: "fourier[beta2_q0] closed".into(), terms }
    }

    /// Residual on rhat = sum_{n=0}^{N} f_n s^n: coefficients of s^0 ..
    /// s^{M} for the largest M not affected by truncation.
    pub fn power_series_residual(&self, f: &[ParamPoly]) -> Vec<ParamPoly> {
        let nmax = f.len() as i64 - 1;
        let shift = self.terms.iter().map(|t| t.power as i64 - t.outer_deriv as i64).min().unwrap_or(0);
        let mut out = Vec::new();
        for m in 0..=(nmax + shift) {
            let mut acc = ParamPoly::zero();
            for t in &self.terms {
                let n = m + t.outer_deriv as i64 - t.power as i64;
                if n < 0 || n > nmax {
                    continue;
                }
                let fac = falling(n + t.power as i64, t.outer_deriv);
                if fac == 0 {
                    continue;
                }
                acc.add_mul(&t.coeff.scale(&GaussianRational::from_int(fac)), &f[n as usize]);
            }
            out.push(acc);
        }
        out
    }

    /// Coefficients keyed by (outer derivative, power), like terms merged.
    pub fn canonical_terms(&self) -> Vec<((u32, u32), ParamPoly)> {
        let mut m: std::collections::BTreeMap<(u32, u32), ParamPoly> = Default::default();
        for t in &self.terms {
            m.entry((t.outer_deriv, t.power)).or_insert_with(ParamPoly::zero).add_assign_ref(&t.coeff);
        }
        m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}
