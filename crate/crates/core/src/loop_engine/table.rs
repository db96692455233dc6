//! Extraction of alpha_j and the split into h_j, h~_j.

use cjft_exact::{fit_polynomial_in_k, ParamScalar};
use serde::{Deserialize, Serialize};

use super::hierarchy::HierarchyState;
use crate::error::CoreError;

/// alpha_j: leading coefficient of the degree-j polynomial in k giving the
/// coefficient of x^{-k-1} in W_1^{j+1}, sampled at k = 1..j+2.
/// The N/x term of W_1^0 never enters, which is the c_0 subtraction.
pub fn extract_alpha(state: &HierarchyState, j: usize) -> Result<ParamScalar, CoreError> {
    let w = state.w1(j + 1)?;
    let mut samples = Vec::with_capacity(j + 2);
    for k in 1..=(j as u32 + 2) {
        let c = w.inverse_x_coefficient(k).map_err(|source| CoreError::Extraction { j, source })?;
        samples.push((k as i64, c));
    }
    let poly = fit_polynomial_in_k(&samples, j).map_err(|source| CoreError::Extraction { j, source })?;
    Ok(poly.leading())
}

/// (2 pi)^{two_pi_power} * value
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scaled {
    pub value: ParamScalar,
    /// Power of 2 pi multiplying `value`.
    pub pi_power: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub alphas: Vec<ParamScalar>,
    pub h: Vec<Scaled>,
    pub h_tilde: Vec<Scaled>,
}

impl CoefficientTable {
    pub fn order(&self) -> usize {
        self.alphas.len().saturating_sub(1)
    }

    pub fn require(&self, j: usize) -> Result<(), CoreError> {
        if self.alphas.len() <= j {
            return Err(CoreError::OrderTooLow { needed: j, have: self.order() });
        }
        Ok(())
    }

    /// Apply a map to every stored exact value.
    pub fn map<F: Fn(&ParamScalar) -> ParamScalar>(&self, f: F) -> CoefficientTable {
        let sc = |s: &Scaled| Scaled { value: f(&s.value), pi_power: s.pi_power };
        CoefficientTable {
            alphas: self.alphas.iter().map(&f).collect(),
            h: self.h.iter().map(sc).collect(),
            h_tilde: self.h_tilde.iter().map(sc).collect(),
        }
    }
}

/// h_j = i Im(alpha_j) (j even), Re(alpha_j) (j odd); h~_j the other half,
/// both times (2 pi)^{-j}.
pub fn split_alpha(alphas: &[ParamScalar]) -> CoefficientTable {
    let mut h = Vec::new();
    let mut ht = Vec::new();
    for (j, a) in alphas.iter().enumerate() {
        let re = a.re_part();
        let im = &ParamScalar::i() * &a.im_part();
        let (hj, htj) = if j % 2 == 0 { (im, re) } else { (re, im) };
        h.push(Scaled { value: hj, pi_power: -(j as i32) });
        ht.push(Scaled { value: htj, pi_power: -(j as i32) });
    }
    CoefficientTable { alphas: alphas.to_vec(), h, h_tilde: ht }
}

/// alpha_0..alpha_order and the split table.
pub fn coefficient_table(state: &HierarchyState, order: usize) -> Result<CoefficientTable, CoreError> {
    let alphas = (0..=order).map(|j| extract_alpha(state, j)).collect::<Result<Vec<_>, _>>()?;
    Ok(split_alpha(&alphas))
}

/// Solve the hierarchy and extract alpha_0..alpha_order.
pub fn compute_table(order: usize) -> Result<CoefficientTable, CoreError> {
    let state = super::hierarchy::solve_hierarchy(order + 1, None)?;
    coefficient_table(&state, order)
}
