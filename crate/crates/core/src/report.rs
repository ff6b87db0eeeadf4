//! JSON records for classifier verdicts, search reports and factor tables.
//!
//! Big integers are written as decimal strings. Field order is fixed by the
//! struct definitions, so identical inputs serialize identically.

use serde::{Deserialize, Serialize};

use crate::factorization::Factorization;
use crate::fermat::{form_of, FactorForm, FormKind};
use crate::proth::{ProthCandidate, Verdict};
use crate::search::SearchReport;
use crate::Natural;

/// One classified candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub p: String,
    pub n: u32,
    #[serde(rename = "R")]
    pub r: String,
    pub verdict: String,
    pub evidence: String,
    pub witness: Option<String>,
    /// Omitted from search output so that it stays reproducible.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl ResultRecord {
    pub fn new(p: &Natural, n: u32, r: &Natural, verdict: &Verdict) -> Self {
        ResultRecord {
            p: p.to_string(),
            n,
            r: r.to_string(),
            verdict: verdict.outcome().as_str().to_string(),
            evidence: verdict.evidence().tag().to_string(),
            witness: verdict.evidence().witness().map(|w| w.to_string()),
            elapsed_ms: None,
        }
    }

    pub fn for_candidate(c: &ProthCandidate, verdict: &Verdict) -> Self {
        Self::new(c.p(), c.n(), c.r(), verdict)
    }

    pub fn with_elapsed_ms(mut self, ms: u64) -> Self {
        self.elapsed_ms = Some(ms);
        self
    }
}

/// Verdict for one exponent inside a search line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub n: u32,
    pub verdict: String,
    pub evidence: String,
    pub witness: Option<String>,
}

/// One line of search output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLine {
    pub p: String,
    pub n_max: u32,
    pub min_n: Option<u32>,
    #[serde(rename = "R_at_min")]
    pub r_at_min: Option<String>,
    pub survivor: bool,
    pub primover_n: Vec<u32>,
    pub result: Option<ResultRecord>,
    pub verdicts: Vec<StepRecord>,
}

impl From<&SearchReport> for SearchLine {
    fn from(rep: &SearchReport) -> Self {
        let result = match (rep.min_n, &rep.r_at_min, rep.verdict_at_min()) {
            (Some(n), Some(r), Some(v)) => Some(ResultRecord::new(&rep.p, n, r, v)),
            _ => None,
        };
        SearchLine {
            p: rep.p.to_string(),
            n_max: rep.n_max,
            min_n: rep.min_n,
            r_at_min: rep.r_at_min.as_ref().map(|r| r.to_string()),
            survivor: rep.survivor,
            primover_n: rep.primover_exponents(),
            result,
            verdicts: rep
                .verdicts
                .iter()
                .map(|(n, v)| StepRecord {
                    n: *n,
                    verdict: v.outcome().as_str().to_string(),
                    evidence: v.evidence().tag().to_string(),
                    witness: v.evidence().witness().map(|w| w.to_string()),
                })
                .collect(),
        }
    }
}

/// Writes reports as JSON lines, one per multiplier.
pub fn to_jsonl(reports: &[SearchReport]) -> String {
    let mut out = String::new();
    for rep in reports {
        let line = serde_json::to_string(&SearchLine::from(rep)).expect("records serialize");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "form")]
pub enum FormRecord {
    #[serde(rename = "A")]
    A { k: String },
    #[serde(rename = "B")]
    B { m: String },
}

impl From<&FactorForm> for FormRecord {
    fn from(form: &FactorForm) -> Self {
        match &form.kind {
            FormKind::FormA { k } => FormRecord::A { k: k.to_string() },
            FormKind::FormB { m } => FormRecord::B { m: m.to_string() },
        }
    }
}

impl std::fmt::Display for FormRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormRecord::A { k } => write!(f, "FormA(k={k})"),
            FormRecord::B { m } => write!(f, "FormB(m={m})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub factor: String,
    pub multiplicity: u32,
    pub form: Option<FormRecord>,
}

/// Factor table for `GF(3, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gf3Table {
    pub n: u32,
    pub value: String,
    pub complete: bool,
    pub unfactored: String,
    pub factors: Vec<FactorEntry>,
}

impl Gf3Table {
    pub fn new(n: u32, fac: &Factorization) -> Self {
        let factors = fac
            .prime_factors
            .iter()
            .map(|(q, e)| FactorEntry {
                factor: q.to_string(),
                multiplicity: *e,
                form: if *q == Natural::from(2u32) {
                    None
                } else {
                    form_of(q, n).ok().flatten().as_ref().map(FormRecord::from)
                },
            })
            .collect();
        Gf3Table {
            n,
            value: fac.target.to_string(),
            complete: fac.complete,
            unfactored: fac.unfactored.to_string(),
            factors,
        }
    }

    /// `6562 = 2 · 17 · 193; 17 = FormA(k=1); 193 = FormB(m=2)`
    pub fn summary(&self, fac: &Factorization) -> String {
        let mut out = fac.to_string();
        for entry in self.factors.iter().filter(|e| e.factor != "2") {
            match &entry.form {
                Some(form) => out.push_str(&format!("; {} = {}", entry.factor, form)),
                None => out.push_str(&format!("; {} = no form", entry.factor)),
            }
        }
        out
    }
}
