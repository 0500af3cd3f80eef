//! Serializable views of verification results.

use serde::Serialize;

use crate::presentation::{FamilyReport, RelationReport, StructuralCheck, VerifySummary};
use crate::rootdata::AlgebraSpec;
use crate::toroidal::{ToroidalAlgebra, ToroidalElem};

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraInfo {
    pub family: String,
    pub n: usize,
    pub r: u8,
    #[serde(rename = "N")]
    pub rank: usize,
    pub folded_type: String,
}

impl From<&AlgebraSpec> for AlgebraInfo {
    fn from(spec: &AlgebraSpec) -> Self {
        AlgebraInfo {
            family: spec.family().to_string(),
            n: spec.n(),
            r: spec.r(),
            rank: spec.rank(),
            folded_type: spec.folded_type(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopTerm {
    pub basis: String,
    pub s: i64,
    pub t: i64,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralTerm {
    pub symbol: String,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElemJson {
    pub text: String,
    pub loop_terms: Vec<LoopTerm>,
    pub central_terms: Vec<CentralTerm>,
}

impl ElemJson {
    pub fn new(alg: &ToroidalAlgebra, x: &ToroidalElem) -> Self {
        let lie = alg.lie();
        let loop_terms = x
            .loop_part
            .terms()
            .flat_map(|(m, u)| {
                u.terms().map(move |(i, c)| LoopTerm {
                    basis: lie.basis_label(i).to_string(),
                    s: m.s,
                    t: m.t,
                    coeff: c.to_string(),
                })
            })
            .collect();
        let central_terms = x
            .central
            .terms()
            .map(|(s, c)| CentralTerm {
                symbol: s.to_string(),
                coeff: c.to_string(),
            })
            .collect();
        ElemJson {
            text: alg.render(x),
            loop_terms,
            central_terms,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FailureJson {
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
    pub degrees: Vec<i64>,
    pub difference: ElemJson,
}

impl FailureJson {
    fn new(alg: &ToroidalAlgebra, c: &RelationReport) -> Self {
        FailureJson {
            indices: c.id.indices.clone(),
            sign: match c.id.sign {
                0 => None,
                s if s > 0 => Some("+".into()),
                _ => Some("-".into()),
            },
            degrees: c.id.degrees.clone(),
            difference: ElemJson::new(alg, &c.difference),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyJson {
    pub id: String,
    pub applicable_cases: usize,
    pub passed_cases: usize,
    pub not_applicable_cases: usize,
    pub failures: Vec<FailureJson>,
}

impl FamilyJson {
    pub fn new(alg: &ToroidalAlgebra, f: &FamilyReport) -> Self {
        FamilyJson {
            id: f.id.to_string(),
            applicable_cases: f.applicable(),
            passed_cases: f.passed(),
            not_applicable_cases: f.not_applicable,
            failures: f.failures().map(|c| FailureJson::new(alg, c)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyJson {
    pub algebra: AlgebraInfo,
    pub window: i64,
    pub serre_cap: i64,
    pub families: Vec<FamilyJson>,
    pub checks: Vec<StructuralCheck>,
    pub passed: bool,
}

impl VerifyJson {
    pub fn new(alg: &ToroidalAlgebra, s: &VerifySummary) -> Self {
        VerifyJson {
            algebra: AlgebraInfo::from(&s.spec),
            window: s.window,
            serre_cap: s.serre_cap,
            families: s.families.iter().map(|f| FamilyJson::new(alg, f)).collect(),
            checks: s.checks.clone(),
            passed: s.passed(),
        }
    }
}

/// Plain-text rendering, one line per family followed by failure details.
pub fn render_text(alg: &ToroidalAlgebra, s: &VerifySummary) -> String {
    let mut out = format!(
        "{} r={} ({}), window {}, serre_cap {}\n",
        s.spec.name(),
        s.spec.r(),
        s.spec.folded_type(),
        s.window,
        s.serre_cap
    );
    for f in &s.families {
        out += &format!(
            "family {:>8}: {:>5}/{:<5} passed ({} not applicable)\n",
            f.id.to_string(),
            f.passed(),
            f.applicable(),
            f.not_applicable
        );
        for c in f.failures() {
            out += &format!(
                "  FAIL {}: lhs - rhs = {}\n",
                c.id,
                alg.render(&c.difference)
            );
        }
    }
    for c in &s.checks {
        out += &format!(
            "check {}: {} ({})\n",
            c.name,
            if c.pass { "ok" } else { "FAILED" },
            c.detail
        );
    }
    out += &format!(
        "total: {}/{} cases passed; {}\n",
        s.total_passed(),
        s.total_cases(),
        if s.passed() { "PASSED" } else { "FAILED" }
    );
    out
}
