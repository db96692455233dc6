//! Triangular solution of the loop equation hierarchy in the 1/N expansion.
//!
//! W_1 = sum_l N^{1-l} A_l with A_0 = 1/x, and W_n = sum_l N^{2-n-l} W_n^l.
//! Every equation has the form (kappa/x_1) W + rest = 0, solved as
//! W = -(x_1/kappa) rest.

use std::collections::BTreeMap;

use cjft_exact::{ExactError, MultiXRationalFn, ParamScalar, XRationalFn};

use crate::error::CoreError;

/// lambda_1 shifted by its O(N) part: kappa - 1 - kappa p - i q.
pub fn lambda1_tilde() -> ParamScalar {
    let k = ParamScalar::kappa();
    let kp = &k * &ParamScalar::p();
    let iq = &ParamScalar::i() * &ParamScalar::q();
    &(&(&k - &ParamScalar::one()) - &kp) - &iq
}

/// lambda_2 = 2 kappa p.
pub fn lambda2_tilde() -> ParamScalar {
    (&ParamScalar::kappa() * &ParamScalar::p()).scale_int(2)
}

/// alpha = kappa p + i q.
pub fn alpha_symbol() -> ParamScalar {
    &(&ParamScalar::kappa() * &ParamScalar::p()) + &(&ParamScalar::i() * &ParamScalar::q())
}

#[derive(Clone, Debug)]
pub struct HierarchyState {
    w1: Vec<XRationalFn>,
    multi: BTreeMap<(usize, usize), MultiXRationalFn>,
    max_order: usize,
}

/// Largest arity entering the solution up to W_1^order.
pub fn required_arity(order: usize) -> usize {
    order / 2 + 1
}

impl HierarchyState {
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// W_1^l as a one-variable function.
    pub fn w1(&self, l: usize) -> Result<&XRationalFn, CoreError> {
        self.w1.get(l).ok_or(CoreError::Missing { n: 1, l, order: self.max_order })
    }

    /// W_n^l for any arity (n = 1 converted to the multi-variable form).
    pub fn get(&self, n: usize, l: usize) -> Result<MultiXRationalFn, CoreError> {
        if n == 1 {
            return Ok(MultiXRationalFn::from_single(self.w1(l)?));
        }
        self.multi.get(&(n, l)).cloned().ok_or(CoreError::Missing { n, l, order: self.max_order })
    }

    /// All stored (n, l) keys with n >= 2.
    pub fn multi_keys(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.multi.keys()
    }
}

/// The operator (kappa - 1) d/dx_1 + lambda1~/x_1 - lambda2~/(1 - x_1).
fn d1(f: &MultiXRationalFn) -> MultiXRationalFn {
    if f.is_zero() {
        return f.clone();
    }
    let km1 = &ParamScalar::kappa() - &ParamScalar::one();
    let a = f.partial(0).scale(&km1);
    let b = f.scale(&lambda1_tilde()).mul_x_factors(0, -1, 0);
    let c = f.scale(&lambda2_tilde()).mul_x_factors(0, 0, -1);
    a.add(&b).sub(&c)
}

/// -(x_1/kappa) * rest
fn finish(rest: &MultiXRationalFn) -> Result<MultiXRationalFn, ExactError> {
    Ok(rest.mul_var(0).scale(&ParamScalar::kappa_pow(-1).scale_int(-1)))
}

struct Solver<'a> {
    state: &'a HierarchyState,
}

impl Solver<'_> {
    fn get(&self, n: usize, l: usize) -> MultiXRationalFn {
        self.state.get(n, l).expect("triangular order guarantees presence")
    }

    fn one_point(&self, l: usize) -> Result<MultiXRationalFn, ExactError> {
        let mut rest = MultiXRationalFn::zero(1);
        let kappa = ParamScalar::kappa();
        for a in 1..l {
            let b = l - a;
            let t = self.get(1, a).mul(&self.get(1, b)).scale(&kappa);
            rest = rest.add(&t);
        }
        rest = rest.add(&d1(&self.get(1, l - 1)));
        if l >= 2 {
            let w2 = self.get(2, l - 2);
            if !w2.is_zero() {
                rest = rest.add(&w2.identify(0, 1).scale(&kappa));
            }
        }
        if l == 1 {
            let kp = &kappa * &ParamScalar::p();
            let iq = &ParamScalar::i() * &ParamScalar::q();
            let c = &kp - &iq;
            rest = rest.add(&MultiXRationalFn::constant(1, c).mul_x_factors(0, -1, -1));
        }
        finish(&rest)
    }

    fn multi_point(&self, n: usize, l: usize) -> Result<MultiXRationalFn, ExactError> {
        let kappa = ParamScalar::kappa();
        let mut rest = MultiXRationalFn::zero(n);
        let tail: Vec<usize> = (1..n).collect();

        // 2 kappa sum_{a>=1} A_a(x_1) W_n^{l-a}
        for a in 1..=l {
            let w = self.get(n, l - a);
            if w.is_zero() {
                continue;
            }
            let aa = self.get(1, a).embed(n, &[0]);
            rest = rest.add(&aa.mul(&w).scale(&kappa.scale_int(2)));
        }

        // kappa sum over proper nonempty J subset of {x_2..x_n}
        if n >= 3 {
            for mask in 1u32..(1 << (n - 1)) - 1 {
                let inside: Vec<usize> = tail.iter().copied().filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let outside: Vec<usize> = tail.iter().copied().filter(|i| mask & (1 << (i - 1)) == 0).collect();
                let mut map1 = vec![0];
                map1.extend(&inside);
                let mut map2 = vec![0];
                map2.extend(&outside);
                for a in 0..=l {
                    let f = self.get(inside.len() + 1, a);
                    if f.is_zero() {
                        continue;
                    }
                    let g = self.get(outside.len() + 1, l - a);
                    if g.is_zero() {
                        continue;
                    }
                    let t = f.embed(n, &map1).mul(&g.embed(n, &map2)).scale(&kappa);
                    rest = rest.add(&t);
                }
            }
        }

        // kappa W_{n+1}^{l-2}(x_1, x_1, J_n)
        if l >= 2 {
            let w = self.get(n + 1, l - 2);
            if !w.is_zero() {
                rest = rest.add(&w.identify(0, 1).scale(&kappa));
            }
        }

        // D1 W_n^{l-1}
        if l >= 1 {
            rest = rest.add(&d1(&self.get(n, l - 1)));
        }

        // terms built from W_{n-1}^l
        let lower = self.get(n - 1, l);
        if !lower.is_zero() {
            let on_tail = lower.embed(n, &tail);
            let inv_x1_1mx1 = |f: &MultiXRationalFn| f.mul_x_factors(0, -1, -1);
            rest = rest.sub(&inv_x1_1mx1(&on_tail.scale(&ParamScalar::from_int(n as i64 - 1))));
            let mut euler = MultiXRationalFn::zero(n);
            for &k in &tail {
                euler = euler.add(&on_tail.partial(k).mul_var(k));
            }
            rest = rest.sub(&inv_x1_1mx1(&euler));
            for &k in &tail {
                let mut map = vec![0];
                map.extend(tail.iter().copied().filter(|&i| i != k));
                let moved = lower.embed(n, &map);
                let dq = MultiXRationalFn::difference_quotient(&moved, &on_tail, 0, k)?;
                let bracket = dq.add(&on_tail.mul_x_factors(0, -1, 0));
                rest = rest.add(&bracket.partial(k));
            }
        }
        finish(&rest)
    }
}

/// Solve for W_1^0..W_1^order together with every W_n^l it depends on.
/// `arity_cap` bounds n; `None` means the automatically required bound.
pub fn solve_hierarchy(order: usize, arity_cap: Option<usize>) -> Result<HierarchyState, CoreError> {
    let needed = required_arity(order);
    if let Some(cap) = arity_cap {
        if cap < needed {
            return Err(CoreError::ArityTooSmall { given: cap, needed, order });
        }
    }
    let mut state = HierarchyState {
        w1: vec![XRationalFn::inv_x(ParamScalar::one())],
        multi: BTreeMap::new(),
        max_order: order,
    };
    // (n, l) is needed iff l + 2(n - 1) <= order; dependencies strictly lower n + l.
    for g in 2..=order + 1 {
        for n in (1..=g).rev() {
            let l = g - n;
            if l + 2 * (n - 1) > order || (n == 1 && l == 0) {
                continue;
            }
            let solver = Solver { state: &state };
            let res = if n == 1 { solver.one_point(l) } else { solver.multi_point(n, l) };
            let w = res.map_err(|source| CoreError::Hierarchy { n, l, source })?;
            if n == 1 {
                let single = w.to_single().expect("one variable");
                debug_assert_eq!(state.w1.len(), l);
                state.w1.push(single);
            } else {
                if !w.is_symmetric() {
                    return Err(CoreError::NotSymmetric { n, l });
                }
                state.multi.insert((n, l), w);
            }
        }
    }
    Ok(state)
}
