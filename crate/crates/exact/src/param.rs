//! Sparse polynomials in p, q and Laurent polynomials in kappa over them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gaussian::GaussianRational;
use crate::ExactError;

/// Polynomial in p and q; keys are (deg_p, deg_q).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<(u32, u32), GaussianRational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: GaussianRational, dp: u32, dq: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dp, dq), c);
        }
        ParamPoly { terms }
    }

    pub fn p() -> Self {
        Self::monomial(GaussianRational::one(), 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(GaussianRational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), GaussianRational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), GaussianRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dp: u32, dq: u32) -> GaussianRational {
        self.terms.get(&(dp, dq)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, key: (u32, u32), c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &ParamPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }

    pub fn sub_assign_ref(&mut self, rhs: &ParamPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c);
        }
    }

    /// self += a * b
    pub fn add_mul(&mut self, a: &ParamPoly, b: &ParamPoly) {
        for ((ap, aq), ac) in &a.terms {
            for ((bp, bq), bc) in &b.terms {
                self.add_term((ap + bp, aq + bq), &(ac * bc));
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> ParamPoly {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = Self::constant(GaussianRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn deg_p(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn deg_q(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Complex conjugate with p, q treated as real symbols.
    pub fn conj(&self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(k, v)| (*k, v.conj())).collect() }
    }

    pub fn re_part(&self) -> ParamPoly {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, GaussianRational::real(v.re.clone()))))
    }

    /// Imaginary part as a real polynomial, so that self = re + i*im.
    pub fn im_part(&self) -> ParamPoly {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, GaussianRational::real(v.im.clone()))))
    }

    pub fn eval(&self, p: &GaussianRational, q: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for ((dp, dq), c) in &self.terms {
            acc += &(&(c * &p.pow(*dp)) * &q.pow(*dq));
        }
        acc
    }

    /// Map q -> -q.
    pub fn flip_q(&self) -> ParamPoly {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, if k.1 % 2 == 1 { -v } else { v.clone() }))
                .collect(),
        }
    }

    /// Exact division by a nonzero polynomial; errors when the remainder is nonzero.
    /// Division is carried out in lex order with p first.
    pub fn exact_div(&self, d: &ParamPoly) -> Result<ParamPoly, ExactError> {
        let (lead_key, lead_c) = d.lead_lex().ok_or(ExactError::DivisionByZero)?;
        let inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        while let Some((k, c)) = rem.lead_lex() {
            if k.0 < lead_key.0 || k.1 < lead_key.1 {
                return Err(ExactError::NonzeroRemainder(
                    "parameter polynomial division".into(),
                ));
            }
            let t = ParamPoly::monomial(&c * &inv, k.0 - lead_key.0, k.1 - lead_key.1);
            rem.sub_assign_ref(&(&t * d));
            quot.add_assign_ref(&t);
        }
        Ok(quot)
    }

    fn lead_lex(&self) -> Option<((u32, u32), GaussianRational)> {
        self.terms.iter().next_back().map(|(k, v)| (*k, v.clone()))
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

/// A kappa substitution kappa -> c * kappa^e with c nonzero.
#[derive(Clone, Debug)]
pub struct KappaMap {
    pub coeff: GaussianRational,
    pub exp: i32,
}

impl KappaMap {
    pub fn identity() -> Self {
        KappaMap { coeff: GaussianRational::one(), exp: 1 }
    }

    pub fn inverse() -> Self {
        KappaMap { coeff: GaussianRational::one(), exp: -1 }
    }

    pub fn value(r: BigRational) -> Self {
        KappaMap { coeff: GaussianRational::real(r), exp: 0 }
    }
}

/// Element of Q(i)[p,q][kappa, 1/kappa]; keys are kappa exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamScalar {
    laurent: BTreeMap<i32, ParamPoly>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar { laurent: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::constant(GaussianRational::from_frac(n, d))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(ParamPoly::constant(c), 0)
    }

    pub fn rational(r: BigRational) -> Self {
        Self::constant(GaussianRational::real(r))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn p() -> Self {
        Self::from_poly(ParamPoly::p(), 0)
    }

    pub fn q() -> Self {
        Self::from_poly(ParamPoly::q(), 0)
    }

    pub fn kappa() -> Self {
        Self::kappa_pow(1)
    }

    pub fn kappa_pow(e: i32) -> Self {
        Self::from_poly(ParamPoly::constant(GaussianRational::one()), e)
    }

    pub fn from_poly(poly: ParamPoly, kexp: i32) -> Self {
        let mut laurent = BTreeMap::new();
        if !poly.is_zero() {
            laurent.insert(kexp, poly);
        }
        ParamScalar { laurent }
    }

    pub fn monomial(c: GaussianRational, kexp: i32, dp: u32, dq: u32) -> Self {
        Self::from_poly(ParamPoly::monomial(c, dp, dq), kexp)
    }

    pub fn laurent(&self) -> &BTreeMap<i32, ParamPoly> {
        &self.laurent
    }

    pub fn is_zero(&self) -> bool {
        self.laurent.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Coefficient of kappa^e.
    pub fn kappa_coeff(&self, e: i32) -> ParamPoly {
        self.laurent.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_kappa(&self) -> Option<i32> {
        self.laurent.keys().next().copied()
    }

    pub fn max_kappa(&self) -> Option<i32> {
        self.laurent.keys().next_back().copied()
    }

    /// Iterate over all (kappa_exp, p_deg, q_deg, coefficient) terms in sorted order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, u32, u32, &GaussianRational)> {
        self.laurent
            .iter()
            .flat_map(|(e, poly)| poly.terms().iter().map(move |((a, b), c)| (*e, *a, *b, c)))
    }

    pub fn num_terms(&self) -> usize {
        self.laurent.values().map(|p| p.terms().len()).sum()
    }

    pub fn add_poly(&mut self, kexp: i32, poly: &ParamPoly) {
        if poly.is_zero() {
            return;
        }
        let entry = self.laurent.entry(kexp).or_default();
        entry.add_assign_ref(poly);
        if entry.is_zero() {
            self.laurent.remove(&kexp);
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &ParamScalar) {
        for (e, poly) in &rhs.laurent {
            self.add_poly(*e, poly);
        }
    }

    pub fn sub_assign_ref(&mut self, rhs: &ParamScalar) {
        for (e, poly) in &rhs.laurent {
            self.add_poly(*e, &-poly);
        }
    }

    /// self += a * b
    pub fn add_mul(&mut self, a: &ParamScalar, b: &ParamScalar) {
        for (ea, pa) in &a.laurent {
            for (eb, pb) in &b.laurent {
                let entry = self.laurent.entry(ea + eb).or_default();
                entry.add_mul(pa, pb);
                if entry.is_zero() {
                    self.laurent.remove(&(ea + eb));
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> ParamScalar {
        if c.is_zero() {
            return Self::zero();
        }
        ParamScalar { laurent: self.laurent.iter().map(|(e, p)| (*e, p.scale(c))).collect() }
    }

    pub fn scale_int(&self, n: i64) -> ParamScalar {
        self.scale(&GaussianRational::from_int(n))
    }

    pub fn scale_rational(&self, r: &BigRational) -> ParamScalar {
        self.scale(&GaussianRational::real(r.clone()))
    }

    pub fn mul_kappa_pow(&self, m: i32) -> ParamScalar {
        ParamScalar { laurent: self.laurent.iter().map(|(e, p)| (e + m, p.clone())).collect() }
    }

    /// Division by c * kappa^m, the only division the ring supports.
    pub fn div_monomial(&self, c: &GaussianRational, m: i32) -> Result<ParamScalar, ExactError> {
        Ok(self.scale(&c.inv()?).mul_kappa_pow(-m))
    }

    /// Division by an element that must be a monomial c * kappa^m.
    pub fn checked_div(&self, d: &ParamScalar) -> Result<ParamScalar, ExactError> {
        let (c, m) = d.as_kappa_monomial().ok_or(ExactError::NonMonomialDivision)?;
        self.div_monomial(&c, m)
    }

    /// Returns (c, m) when self = c * kappa^m.
    pub fn as_kappa_monomial(&self) -> Option<(GaussianRational, i32)> {
        if self.laurent.len() != 1 {
            return None;
        }
        let (e, poly) = self.laurent.iter().next()?;
        if poly.terms().len() != 1 {
            return None;
        }
        let ((dp, dq), c) = poly.terms().iter().next()?;
        if *dp != 0 || *dq != 0 {
            return None;
        }
        Some((c.clone(), *e))
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.as_kappa_monomial() {
            Some((c, 0)) => Some(c),
            None if self.is_zero() => Some(GaussianRational::zero()),
            _ => None,
        }
    }

    pub fn pow(&self, e: u32) -> ParamScalar {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn conj(&self) -> ParamScalar {
        ParamScalar { laurent: self.laurent.iter().map(|(e, p)| (*e, p.conj())).collect() }
    }

    /// Real part with kappa, p, q treated as real symbols.
    pub fn re_part(&self) -> ParamScalar {
        let mut out = Self::zero();
        for (e, p) in &self.laurent {
            out.add_poly(*e, &p.re_part());
        }
        out
    }

    /// Imaginary part, so that self = re_part + i * im_part.
    pub fn im_part(&self) -> ParamScalar {
        let mut out = Self::zero();
        for (e, p) in &self.laurent {
            out.add_poly(*e, &p.im_part());
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.terms().all(|(_, _, _, c)| c.is_real())
    }

    pub fn is_imaginary(&self) -> bool {
        self.terms().all(|(_, _, _, c)| c.is_imaginary())
    }

    pub fn flip_q(&self) -> ParamScalar {
        ParamScalar { laurent: self.laurent.iter().map(|(e, p)| (*e, p.flip_q())).collect() }
    }

    /// Ring homomorphism kappa -> kmap, p -> p_img, q -> q_img.
    pub fn substitute(&self, kmap: &KappaMap, p_img: &ParamScalar, q_img: &ParamScalar) -> ParamScalar {
        let mut p_pows: Vec<ParamScalar> = vec![Self::one()];
        let mut q_pows: Vec<ParamScalar> = vec![Self::one()];
        let mut out = Self::zero();
        for (e, poly) in &self.laurent {
            let kfac = ParamScalar::monomial(kmap.coeff.pow(e.unsigned_abs()), 0, 0, 0);
            let kfac = if *e >= 0 {
                kfac
            } else {
                Self::one().checked_div(&kfac).expect("kappa image coefficient is nonzero")
            };
            let kfac = kfac.mul_kappa_pow(kmap.exp * e);
            let mut inner = Self::zero();
            for ((dp, dq), c) in poly.terms() {
                while p_pows.len() <= *dp as usize {
                    let next = p_pows.last().unwrap() * p_img;
                    p_pows.push(next);
                }
                while q_pows.len() <= *dq as usize {
                    let next = q_pows.last().unwrap() * q_img;
                    q_pows.push(next);
                }
                let t = (&p_pows[*dp as usize] * &q_pows[*dq as usize]).scale(c);
                inner.add_assign_ref(&t);
            }
            out.add_mul(&kfac, &inner);
        }
        out
    }

    /// Substitute numeric kappa, p, q; kappa must be nonzero when negative powers occur.
    pub fn eval(
        &self,
        kappa: &GaussianRational,
        p: &GaussianRational,
        q: &GaussianRational,
    ) -> Result<GaussianRational, ExactError> {
        let mut acc = GaussianRational::zero();
        for (e, poly) in &self.laurent {
            let k = if *e >= 0 { kappa.pow(*e as u32) } else { kappa.inv()?.pow(e.unsigned_abs()) };
            acc += &(&k * &poly.eval(p, q));
        }
        Ok(acc)
    }

    /// Specialise kappa to a nonzero rational, leaving a kappa-free scalar.
    pub fn at_kappa(&self, kappa: &BigRational) -> ParamScalar {
        self.substitute(&KappaMap::value(kappa.clone()), &Self::p(), &Self::q())
    }

    /// Specialise p and q to numbers, keeping kappa symbolic.
    pub fn at_pq(&self, p: &GaussianRational, q: &GaussianRational) -> ParamScalar {
        self.substitute(&KappaMap::identity(), &Self::constant(p.clone()), &Self::constant(q.clone()))
    }

    /// Flatten a kappa-free scalar to its polynomial in p, q.
    pub fn as_poly(&self) -> Option<ParamPoly> {
        match self.laurent.len() {
            0 => Some(ParamPoly::zero()),
            1 => self.laurent.get(&0).cloned(),
            _ => None,
        }
    }
}

impl From<ParamPoly> for ParamScalar {
    fn from(p: ParamPoly) -> Self {
        ParamScalar::from_poly(p, 0)
    }
}

impl From<GaussianRational> for ParamScalar {
    fn from(c: GaussianRational) -> Self {
        ParamScalar::constant(c)
    }
}

impl<'a> Add<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<'a> Mul<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        let mut out = ParamScalar::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar { laurent: self.laurent.iter().map(|(e, p)| (*e, -p)).collect() }
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(ParamPoly, Add, add);
forward_owned!(ParamPoly, Sub, sub);
forward_owned!(ParamPoly, Mul, mul);
forward_owned!(ParamScalar, Add, add);
forward_owned!(ParamScalar, Sub, sub);
forward_owned!(ParamScalar, Mul, mul);

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, name: &str, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "*{name}"),
        _ => write!(f, "*{name}^{e}"),
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, a, b, c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            fmt_monomial(f, "kappa", e as i64)?;
            fmt_monomial(f, "p", a as i64)?;
            fmt_monomial(f, "q", b as i64)?;
        }
        Ok(())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        ParamScalar::from_poly(self.clone(), 0).fmt(f)
    }
}
