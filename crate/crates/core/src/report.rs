//! Pass/fail reports shared by the verification routines.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub label: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(id: impl Into<String>) -> Self {
        Report { id: id.into(), items: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { label: label.into(), pass, detail: detail.into() });
    }

    pub fn check(&mut self, label: impl Into<String>, pass: bool) {
        self.push(label, pass, "");
    }

    pub fn passed(&self) -> bool {
        !self.items.is_empty() && self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn extend(&mut self, other: Report) {
        for mut it in other.items {
            it.label = format!("{}: {}", other.id, it.label);
            self.items.push(it);
        }
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for it in &self.items {
            let mark = if it.pass { "ok  " } else { "FAIL" };
            write!(f, "[{mark}] {} {}", self.id, it.label)?;
            if !it.detail.is_empty() {
                write!(f, " ({})", it.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
