//! CSV and JSON dumps. All numbers are decimal strings at the working
//! precision.

use serde::Serialize;

use crate::density::{DensityProfile, FormulaId};
use crate::fourier::FTResult;

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub beta: u32,
    pub p: String,
    pub q: String,
    pub formula: FormulaId,
    pub digits: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_model: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    pub value: String,
    pub error_estimate: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Dump {
    pub meta: Meta,
    pub rows: Vec<Row>,
}

impl Dump {
    pub fn density(profile: &DensityProfile) -> Dump {
        let d = profile.digits as usize;
        let err = format!("1e-{}", profile.digits.saturating_sub(2));
        Dump {
            meta: Meta {
                beta: profile.beta,
                p: profile.p.to_string(),
                q: profile.q.to_string(),
                formula: profile.formula,
                digits: profile.digits,
                tail_model: None,
            },
            rows: profile
                .grid
                .iter()
                .zip(&profile.values)
                .map(|(x, v)| Row { x: Some(x.to_decimal(d)), tau: None, value: v.to_decimal(d), error_estimate: err.clone() })
                .collect(),
        }
    }

    pub fn transform(meta: Meta, results: &[FTResult]) -> Dump {
        let d = meta.digits as usize;
        let mut meta = meta;
        meta.tail_model = results.first().map(|r| r.tail_model.clone());
        Dump {
            meta,
            rows: results
                .iter()
                .map(|r| Row {
                    x: None,
                    tau: Some(r.tau.to_decimal(d)),
                    value: r.value.to_decimal(d),
                    error_estimate: r.error_estimate.to_decimal(6),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes")
    }

    pub fn to_csv(&self) -> String {
        let m = &self.meta;
        let formula = serde_json::to_value(m.formula).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        let mut out = format!("# beta={},p={},q={},formula={},digits={}\n", m.beta, m.p, m.q, formula, m.digits);
        if let Some(t) = &m.tail_model {
            out.push_str(&format!("# tail_model={t}\n"));
        }
        let key = if self.rows.first().is_some_and(|r| r.tau.is_some()) { "tau" } else { "x" };
        out.push_str(&format!("{key},value,error_estimate\n"));
        for r in &self.rows {
            let k = r.x.as_deref().or(r.tau.as_deref()).unwrap_or("");
            out.push_str(&format!("{k},{},{}\n", r.value, r.error_estimate));
        }
        out
    }
}
