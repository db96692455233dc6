//! Exact interpolation of a polynomial in an integer index k.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::param::ParamScalar;
use crate::ExactError;

/// Polynomial in k with ParamScalar coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPoly {
    pub coeffs: Vec<ParamScalar>,
}

impl KPoly {
    pub fn eval(&self, k: i64) -> ParamScalar {
        let kk = ParamScalar::from_int(k);
        let mut acc = ParamScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &kk) + c;
        }
        acc
    }

    pub fn leading(&self) -> ParamScalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Interpolate through the first `degree + 1` samples (Newton form), then
/// require every remaining sample to lie on the same polynomial.
pub fn fit_polynomial_in_k(samples: &[(i64, ParamScalar)], degree: usize) -> Result<KPoly, ExactError> {
    if samples.len() < degree + 2 {
        return Err(ExactError::InsufficientSamples { needed: degree + 2, got: samples.len() });
    }
    let mut ks: Vec<i64> = samples.iter().map(|s| s.0).collect();
    ks.sort_unstable();
    ks.dedup();
    if ks.len() != samples.len() {
        return Err(ExactError::InsufficientSamples { needed: degree + 2, got: ks.len() });
    }
    let used = &samples[..=degree];
    // divided differences
    let mut dd: Vec<ParamScalar> = used.iter().map(|s| s.1.clone()).collect();
    for level in 1..=degree {
        for i in (level..=degree).rev() {
            let den = used[i].0 - used[i - level].0;
            let diff = &dd[i] - &dd[i - 1];
            dd[i] = diff.scale_rational(&(r(1) / r(den)));
        }
    }
    // expand Newton form to monomial basis
    let mut coeffs = vec![ParamScalar::zero(); degree + 1];
    for i in (0..=degree).rev() {
        // coeffs = coeffs * (k - k_i) + dd[i]
        let ki = used[i].0;
        let mut next = vec![ParamScalar::zero(); degree + 1];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < degree {
                next[j + 1].add_assign_ref(c);
            }
            next[j].add_assign_ref(&c.scale_int(-ki));
        }
        next[0].add_assign_ref(&dd[i]);
        coeffs = next;
    }
    let poly = KPoly { coeffs };
    for (k, v) in &samples[degree + 1..] {
        if poly.eval(*k) != *v {
            return Err(ExactError::FitInconsistent { k: *k, degree });
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xrational::XRationalFn;

    fn c(n: i64) -> ParamScalar {
        ParamScalar::from_int(n)
    }

    #[test]
    fn constant_and_linear() {
        let s: Vec<_> = (1..=3).map(|k| (k, c(-1))).collect();
        assert_eq!(fit_polynomial_in_k(&s, 0).unwrap().coeffs, vec![c(-1)]);
        let s = vec![(1, c(1)), (2, c(3)), (3, c(5)), (4, c(7))];
        assert_eq!(fit_polynomial_in_k(&s, 1).unwrap().coeffs, vec![c(-1), c(2)]);
    }

    #[test]
    fn inconsistent_data_is_rejected() {
        let s = vec![(1, c(1)), (2, c(4)), (3, c(9))];
        assert!(matches!(fit_polynomial_in_k(&s, 1), Err(ExactError::FitInconsistent { .. })));
        assert!(fit_polynomial_in_k(&s[..2], 1).is_err());
    }

    #[test]
    fn fit_on_series_of_double_pole() {
        // 1/(x (1-x)^2) = sum_{m>=0} (m+1) x^{-m-3}: coefficient of x^{-k-1} is k - 1
        let f = XRationalFn::new(vec![c(1)], 1, 2);
        let s: Vec<_> = (1..=4).map(|k| (k as i64, f.inverse_x_coefficient(k).unwrap())).collect();
        let poly = fit_polynomial_in_k(&s, 1).unwrap();
        assert_eq!(poly.coeffs, vec![c(-1), c(1)]);
    }
}
