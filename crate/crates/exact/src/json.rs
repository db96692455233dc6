//! Canonical JSON form: sorted term lists, rationals as "num/den" strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::gaussian::{parse_rational, rational_to_string, GaussianRational};
use crate::param::{ParamPoly, ParamScalar};
use crate::xrational::XRationalFn;

#[derive(Serialize, Deserialize)]
struct TermJson {
    kappa: i32,
    p: u32,
    q: u32,
    re: String,
    im: String,
}

impl Serialize for ParamScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(e, a, b, c)| TermJson {
                kappa: e,
                p: a,
                q: b,
                re: rational_to_string(&c.re),
                im: rational_to_string(&c.im),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParamScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut out = ParamScalar::zero();
        for t in terms {
            let re = parse_rational(&t.re).map_err(D::Error::custom)?;
            let im = parse_rational(&t.im).map_err(D::Error::custom)?;
            out.add_assign_ref(&ParamScalar::monomial(GaussianRational::new(re, im), t.kappa, t.p, t.q));
        }
        Ok(out)
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ParamScalar::from_poly(self.clone(), 0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParamPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = ParamScalar::deserialize(d)?;
        s.as_poly().ok_or_else(|| D::Error::custom("kappa-dependent value where a p,q polynomial was expected"))
    }
}

#[derive(Serialize, Deserialize)]
struct XRationalJson {
    numerator: Vec<ParamScalar>,
    pole_at_0: u32,
    pole_at_1: u32,
}

impl Serialize for XRationalFn {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        XRationalJson {
            numerator: self.numerator().to_vec(),
            pole_at_0: self.pole_at_0(),
            pole_at_1: self.pole_at_1(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for XRationalFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = XRationalJson::deserialize(d)?;
        Ok(XRationalFn::new(j.numerator, j.pole_at_0, j.pole_at_1))
    }
}
