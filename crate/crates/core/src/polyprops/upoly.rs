//! Exact polynomials in u = 1/kappa read off the coefficient table, and
//! their palindromic structure.

use cjft_exact::{BigRational, GaussianRational};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::CoreError;
use crate::loop_engine::CoefficientTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    H,
    HTilde,
}

/// Whether the extracted coefficients were real or i times real.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Real,
    Imaginary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Provenance {
    pub source: Source,
    pub j: usize,
    pub p_power: u32,
    pub q_power: u32,
    pub q_scaled: bool,
    pub phase: Phase,
    /// The polynomial is u^shift times the kappa-Laurent coefficient.
    pub u_shift: i32,
}

/// Ascending coefficients in u.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UPoly {
    #[serde(serialize_with = "ser_rats")]
    pub coefficients: Vec<BigRational>,
    pub provenance: Option<Provenance>,
}

fn ser_rats<S: serde::Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub(crate) fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl UPoly {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        UPoly { coefficients: trim(coefficients), provenance: None }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| rat(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        UPoly { coefficients: trim(self.coefficients.iter().map(|c| c * s).collect()), provenance: self.provenance.clone() }
    }

    /// Leading coefficient normalized to 1.
    pub fn monic(&self) -> Self {
        match self.coefficients.last() {
            Some(l) => self.scale(&(BigRational::one() / l)),
            None => self.clone(),
        }
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::new(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len() + o.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in o.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coefficients.len().max(o.coefficients.len());
        let z = BigRational::zero();
        UPoly::new((0..n).map(|k| self.coefficients.get(k).unwrap_or(&z) - o.coefficients.get(k).unwrap_or(&z)).collect())
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.coefficients.iter().enumerate().skip(1).map(|(k, c)| c * rat(k as i64)).collect())
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coefficients[dd].clone();
        let mut r = self.coefficients.clone();
        if r.len() <= dd {
            return (UPoly::new(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (i, dc) in d.coefficients.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun square-free decomposition: (factor, multiplicity), factors monic.
    pub fn square_free(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let c = fp.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.divrem(&a).0;
            let nc = d.divrem(&a).0;
            d = nc.sub(&nb.derivative());
            b = nb;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    pub fn reversed(&self) -> Vec<BigRational> {
        let mut v = self.coefficients.clone();
        v.reverse();
        v
    }
}

/// Symmetry of the coefficient list under u^deg P(1/u).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Palindromic,
    AntiPalindromic,
    Neither,
}

fn symmetry(p: &UPoly) -> Symmetry {
    let rev = p.reversed();
    if rev == p.coefficients {
        Symmetry::Palindromic
    } else if rev.iter().zip(&p.coefficients).all(|(a, b)| a == &-b.clone()) {
        Symmetry::AntiPalindromic
    } else {
        Symmetry::Neither
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PalindromeClass {
    /// Symmetry of P itself.
    pub direct: Symmetry,
    /// Multiplicity of the factor (1 - u).
    pub one_minus_u: usize,
    /// Symmetry of P / (1 - u)^one_minus_u.
    pub quotient: Symmetry,
}

impl PalindromeClass {
    pub fn is_structured(&self) -> bool {
        self.direct != Symmetry::Neither || self.quotient != Symmetry::Neither
    }

    pub fn label(&self) -> String {
        let q = match self.quotient {
            Symmetry::Palindromic => "palindromic",
            Symmetry::AntiPalindromic => "anti-palindromic",
            Symmetry::Neither => "unstructured",
        };
        match self.one_minus_u {
            0 => q.to_string(),
            1 => format!("(1-u) x {q}"),
            k => format!("(1-u)^{k} x {q}"),
        }
    }
}

/// Divide out (1 - u) as often as it goes.
pub fn strip_one_minus_u(p: &UPoly) -> (UPoly, usize) {
    let f = UPoly::from_ints(&[1, -1]);
    let mut cur = p.clone();
    let mut k = 0;
    while !cur.is_zero() {
        let (q, r) = cur.divrem(&f);
        if !r.is_zero() {
            break;
        }
        cur = q;
        k += 1;
    }
    (cur, k)
}

pub fn classify_palindrome(p: &UPoly) -> Result<PalindromeClass, CoreError> {
    if p.is_zero() {
        return Err(CoreError::Shape("classify_palindrome on the zero polynomial".into()));
    }
    let (q, k) = strip_one_minus_u(p);
    Ok(PalindromeClass { direct: symmetry(p), one_minus_u: k, quotient: symmetry(&q) })
}

/// Coefficient of p^p_power q^q_power in (2 pi)^j h_j (or h~_j) as a
/// polynomial in u = 1/kappa. With `q_scaled`, q -> kappa q first. An absent
/// monomial gives the zero polynomial.
pub fn extract_upoly(
    table: &CoefficientTable,
    source: Source,
    j: usize,
    p_power: u32,
    q_power: u32,
    q_scaled: bool,
) -> Result<UPoly, CoreError> {
    table.require(j)?;
    let x = match source {
        Source::H => &table.h[j].value,
        Source::HTilde => &table.h_tilde[j].value,
    };
    let mut by_exp: Vec<(i32, GaussianRational)> = Vec::new();
    for (e, a, b, c) in x.terms() {
        if a == p_power && b == q_power {
            let e = if q_scaled { e + b as i32 } else { e };
            by_exp.push((e, c.clone()));
        }
    }
    let phase = if by_exp.iter().all(|(_, c)| c.im.is_zero()) {
        Phase::Real
    } else if by_exp.iter().all(|(_, c)| c.re.is_zero()) {
        Phase::Imaginary
    } else {
        return Err(CoreError::Shape(format!("mixed real and imaginary coefficients for p^{p_power} q^{q_power} in j = {j}")));
    };
    let e_max = by_exp.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let e_min = by_exp.iter().map(|(e, _)| *e).min().unwrap_or(0);
    let mut coeffs = vec![BigRational::zero(); (e_max - e_min + 1) as usize];
    for (e, c) in by_exp {
        let v = if phase == Phase::Real { c.re } else { c.im };
        coeffs[(e_max - e) as usize] += v;
    }
    let mut up = UPoly::new(coeffs);
    up.provenance = Some(Provenance { source, j, p_power, q_power, q_scaled, phase, u_shift: e_max });
    Ok(up)
}

/// p_j(u) shape: j even gives (1-u)^2 times a palindrome of degree j - 2,
/// j odd gives (1-u) times a palindrome of degree j - 1, constant term 1.
pub fn pj_shape_holds(j: usize, pj: &UPoly) -> bool {
    if pj.degree() != Some(j) {
        return false;
    }
    let k = if j.is_multiple_of(2) { 2 } else { 1 };
    let f = UPoly::from_ints(&[1, -1]);
    let mut cur = pj.clone();
    for _ in 0..k {
        let (q, r) = cur.divrem(&f);
        if !r.is_zero() {
            return false;
        }
        cur = q;
    }
    symmetry(&cur) == Symmetry::Palindromic && cur.coefficients.first().is_some_and(|c| c.is_one())
}

/// Equal up to a nonzero rational factor.
pub fn proportional(a: &UPoly, b: &UPoly) -> bool {
    !a.is_zero() && !b.is_zero() && a.monic().coefficients == b.monic().coefficients
}
