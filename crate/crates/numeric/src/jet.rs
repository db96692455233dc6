//! Truncated Taylor series f(x0 + t) = sum_k c_k t^k, used to carry exact
//! derivatives through the density formulas.

use crate::real::{Complex, Real};

/// Arithmetic needed by [`Jet`].
pub trait Scalar: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(r: &Real) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn over(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times_real(&self, r: &Real) -> Self;
    /// Size used for truncation tests.
    fn magnitude(&self) -> Real;
}

impl Scalar for Real {
    fn zero() -> Self {
        Real::zero()
    }
    fn one() -> Self {
        Real::one()
    }
    fn from_real(r: &Real) -> Self {
        r.clone()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn over(&self, o: &Self) -> Self {
        self / o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times_real(&self, r: &Real) -> Self {
        self * r
    }
    fn magnitude(&self) -> Real {
        self.abs()
    }
}

impl Scalar for Complex {
    fn zero() -> Self {
        Complex::zero()
    }
    fn one() -> Self {
        Complex::one()
    }
    fn from_real(r: &Real) -> Self {
        Complex::real(r.clone())
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn over(&self, o: &Self) -> Self {
        self / o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times_real(&self, r: &Real) -> Self {
        self.scale(r)
    }
    fn magnitude(&self) -> Real {
        self.re.abs().max(&self.im.abs())
    }
}

#[derive(Clone, Debug)]
pub struct Jet<T> {
    pub c: Vec<T>,
}

impl<T: Scalar> Jet<T> {
    pub fn constant(v: T, order: usize) -> Self {
        let mut c = vec![T::zero(); order + 1];
        c[0] = v;
        Jet { c }
    }

    /// The independent variable at x0.
    pub fn var(x0: T, order: usize) -> Self {
        let mut j = Self::constant(x0, order);
        if order > 0 {
            j.c[1] = T::one();
        }
        j
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn value(&self) -> &T {
        &self.c[0]
    }

    /// k-th derivative at x0.
    pub fn derivative(&self, k: usize) -> T {
        let mut f = Real::one();
        for m in 2..=k {
            f = f * Real::from_i64(m as i64);
        }
        self.c[k].times_real(&f)
    }

    pub fn add(&self, o: &Self) -> Self {
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a.minus(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        Jet { c: self.c.iter().map(|a| a.negate()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.c.len().min(o.c.len());
        let mut c = vec![T::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                c[i + j] = c[i + j].plus(&self.c[i].times(&o.c[j]));
            }
        }
        Jet { c }
    }

    pub fn scale(&self, s: &T) -> Self {
        Jet { c: self.c.iter().map(|a| a.times(s)).collect() }
    }

    pub fn scale_real(&self, s: &Real) -> Self {
        Jet { c: self.c.iter().map(|a| a.times_real(s)).collect() }
    }

    pub fn add_const(&self, s: &T) -> Self {
        let mut j = self.clone();
        j.c[0] = j.c[0].plus(s);
        j
    }

    pub fn recip(&self) -> Self {
        let n = self.c.len();
        let inv0 = T::one().over(&self.c[0]);
        let mut r: Vec<T> = Vec::with_capacity(n);
        r.push(inv0.clone());
        for k in 1..n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc.plus(&self.c[j].times(&r[k - j]));
            }
            r.push(acc.times(&inv0).negate());
        }
        Jet { c: r }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    /// sum_k a_k h^k for a jet h without constant term.
    fn compose_nilpotent(&self, a: &[T]) -> Self {
        let order = self.order();
        let mut out = Self::constant(a[0].clone(), order);
        let mut pow = Self::constant(T::one(), order);
        for ak in a.iter().skip(1).take(order) {
            pow = pow.mul(self);
            out = out.add(&pow.scale(ak));
        }
        out
    }

    fn nilpotent_part(&self) -> Self {
        let mut h = self.clone();
        h.c[0] = T::zero();
        h
    }

    /// Antiderivative with the given value at x0, one order higher.
    pub fn integrate(&self, c0: T) -> Self {
        let mut c = Vec::with_capacity(self.c.len() + 1);
        c.push(c0);
        for k in 1..=self.c.len() {
            c.push(self.c[k - 1].times_real(&Real::frac(1, k as i64)));
        }
        Jet { c }
    }
}

impl Jet<Real> {
    /// (sin f, cos f).
    pub fn sin_cos(&self) -> (Self, Self) {
        let order = self.order();
        let (s0, c0) = (self.c[0].sin(), self.c[0].cos());
        let h = self.nilpotent_part();
        // Taylor coefficients of sin h and cos h
        let mut sa = vec![Real::zero(); order + 1];
        let mut ca = vec![Real::zero(); order + 1];
        let mut f = Real::one();
        for k in 0..=order {
            if k > 0 {
                f = f / Real::from_i64(k as i64);
            }
            let sgn = if (k / 2) % 2 == 0 { f.clone() } else { -&f };
            if k % 2 == 0 {
                ca[k] = sgn;
            } else {
                sa[k] = sgn;
            }
        }
        let sh = h.compose_nilpotent(&sa);
        let ch = h.compose_nilpotent(&ca);
        let sin = sh.scale(&c0).add(&ch.scale(&s0));
        let cos = ch.scale(&c0).sub(&sh.scale(&s0));
        (sin, cos)
    }

    pub fn to_complex(&self) -> Jet<Complex> {
        Jet { c: self.c.iter().map(|r| Complex::real(r.clone())).collect() }
    }
}

impl Jet<Complex> {
    pub fn exp(&self) -> Self {
        let order = self.order();
        let mut a = vec![Complex::one(); order + 1];
        let mut f = Real::one();
        for (k, ak) in a.iter_mut().enumerate().skip(1) {
            f = f / Real::from_i64(k as i64);
            *ak = Complex::real(f.clone());
        }
        self.nilpotent_part().compose_nilpotent(&a).scale(&self.c[0].exp())
    }

    pub fn re(&self) -> Jet<Real> {
        Jet { c: self.c.iter().map(|z| z.re.clone()).collect() }
    }

    pub fn im(&self) -> Jet<Real> {
        Jet { c: self.c.iter().map(|z| z.im.clone()).collect() }
    }
}
