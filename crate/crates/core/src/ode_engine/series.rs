//! Recurrence series with pi bookkeeping.

use cjft_exact::{GaussianRational, ParamPoly};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    D,
    E,
    G,
    GTilde,
    CEven,
    B,
}

/// Entry n is `values[n - first_index] * pi^{pi_power[n - first_index]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceSeries {
    pub kind: SeriesKind,
    pub engine: String,
    pub first_index: usize,
    pub values: Vec<ParamPoly>,
    pub pi_power: Vec<i32>,
    /// Where the seeds came from.
    pub seeds: String,
}

impl RecurrenceSeries {
    pub fn last_index(&self) -> usize {
        self.first_index + self.values.len() - 1
    }

    /// pi-free numerator of entry n.
    pub fn get(&self, n: usize) -> Option<&ParamPoly> {
        n.checked_sub(self.first_index).and_then(|k| self.values.get(k))
    }

    pub fn pi_power_of(&self, n: usize) -> Option<i32> {
        n.checked_sub(self.first_index).and_then(|k| self.pi_power.get(k).copied())
    }

    /// Numerators from index 0 up, with zero filled in below `first_index`.
    pub fn dense(&self) -> Vec<ParamPoly> {
        let mut v = vec![ParamPoly::zero(); self.first_index];
        v.extend(self.values.iter().cloned());
        v
    }
}

pub(crate) fn c(n: i64, d: i64) -> GaussianRational {
    GaussianRational::from_frac(n, d)
}

pub(crate) fn cp(n: i64, d: i64) -> ParamPoly {
    ParamPoly::constant(c(n, d))
}

pub(crate) fn s(x: &ParamPoly, n: i64, d: i64) -> ParamPoly {
    x.scale(&c(n, d))
}

/// p(1 - 2p), the shifted parameter of the beta = 4 formulas.
pub fn p_tilde_beta4() -> ParamPoly {
    let p = ParamPoly::p();
    &p - &s(&(&p * &p), 2, 1)
}

/// Substitute p -> p_img, q -> q_img in a polynomial.
pub fn compose(f: &ParamPoly, p_img: &ParamPoly, q_img: &ParamPoly) -> ParamPoly {
    let mut out = ParamPoly::zero();
    for (&(a, b), v) in f.terms() {
        let t = &p_img.pow(a) * &q_img.pow(b);
        out.add_assign_ref(&t.scale(v));
    }
    out
}

/// `value * pi^{pi_power}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiPoly {
    pub value: ParamPoly,
    pub pi_power: i32,
}
