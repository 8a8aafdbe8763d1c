//! Command results: one serializable value per subcommand plus its text
//! rendering.

use std::fmt::Write as _;

use eulerlab_core::bounds::BoundReport;
use eulerlab_core::polyring::FieldTag;
use eulerlab_core::repmod::doc::{GroupKind, ModuleSpec};
use eulerlab_core::report::VerificationReport;
use eulerlab_core::sympow::Embedding;
use eulerlab_core::torusmaps::{CircleExampleParams, MapSummary};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceOutput {
    pub field: FieldTag,
    pub relations: Vec<String>,
    pub degrees: Vec<u32>,
    pub polynomial: String,
    pub normal_form: String,
    pub in_ideal: bool,
    pub quotient_dimension: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCheckOutput {
    pub group: GroupKind,
    pub flag: Vec<Vec<i64>>,
    pub relations: Vec<String>,
    pub euler_class: String,
    pub nonzero: bool,
    pub certificate: String,
    pub u_dims: Vec<u64>,
    pub v_dims: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagFindOutput {
    pub group: GroupKind,
    /// Basis of `F` (elementary abelian groups only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<Vec<i64>>>,
    /// Flag of `E/F` in the coordinates of `quotient_basis`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_flag: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_basis: Option<Vec<Vec<i64>>>,
    /// Adapted dual basis in `E*` (or `L*`).
    pub dual_basis: Vec<Vec<i64>>,
    pub u_dims: Vec<u64>,
    pub v_dims: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagRingOutput {
    pub n: usize,
    pub l: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<usize>>,
    pub relations: Vec<String>,
    pub degrees: Vec<u32>,
    pub quotient_dimension: u64,
    pub top_degree: u32,
    pub hilbert_series: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SympowOutput {
    pub d: u64,
    /// `S^d(U*)` when no target is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<ModuleSpec>,
    /// Least `k` when a target `V` is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Embedding>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBlock {
    pub line: Vec<i64>,
    pub dim: u64,
    pub module: ModuleSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusDecomposeOutput {
    pub fixed_dim: u64,
    pub lines: Vec<LineBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusExampleOutput {
    pub params: CircleExampleParams,
    pub map: MapSummary,
    pub verification: VerificationReport,
}

/// Result of one invocation; machine mode prints it as a single JSON line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Output {
    Reduce(ReduceOutput),
    EulerCheck(EulerCheckOutput),
    FlagFind(FlagFindOutput),
    Bound(BoundReport),
    FlagRing(FlagRingOutput),
    Sympow(SympowOutput),
    TorusDecompose(TorusDecomposeOutput),
    TorusExample(TorusExampleOutput),
}

impl Output {
    /// First failed item, for results that carry a checklist.
    pub fn failure(&self) -> Option<String> {
        let from_report = |r: &VerificationReport| {
            r.items
                .iter()
                .find(|i| !i.passed())
                .map(|i| format!("{}: {} ({})", i.item, i.status, i.evidence))
        };
        match self {
            Output::Bound(r) => r
                .first_failure()
                .map(|i| format!("{}: {} ({})", i.item, i.status, i.evidence)),
            Output::FlagRing(f) => f.verification.as_ref().and_then(from_report),
            Output::TorusExample(t) => from_report(&t.verification),
            _ => None,
        }
    }

    pub fn to_machine(&self) -> String {
        serde_json::to_string(self).expect("outputs serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write_text(&mut s, self);
        s
    }
}

fn list<T: std::fmt::Debug>(xs: &[T]) -> String {
    format!("{xs:?}").replace(' ', "")
}

fn write_text(s: &mut String, out: &Output) -> std::fmt::Result {
    match out {
        Output::Reduce(r) => {
            writeln!(s, "field: {}", r.field)?;
            for (j, g) in r.relations.iter().enumerate() {
                writeln!(s, "g{}: {g}", j + 1)?;
            }
            writeln!(s, "degrees: {}", list(&r.degrees))?;
            writeln!(s, "quotient dimension: {}", r.quotient_dimension)?;
            writeln!(s, "normal form of {}: {}", r.polynomial, r.normal_form)?;
            writeln!(s, "in ideal: {}", r.in_ideal)?;
        }
        Output::EulerCheck(r) => {
            writeln!(s, "flag dual basis: {}", list(&r.flag))?;
            writeln!(s, "dim U_i: {}", list(&r.u_dims))?;
            writeln!(s, "dim V_i: {}", list(&r.v_dims))?;
            for (j, g) in r.relations.iter().enumerate() {
                writeln!(s, "e(U_{}): {g}", j + 1)?;
            }
            writeln!(s, "e(V): {}", r.euler_class)?;
            writeln!(s, "normal form: {}", r.certificate)?;
            writeln!(s, "nonzero: {}", r.nonzero)?;
        }
        Output::FlagFind(r) => {
            if let Some(f) = &r.subgroup {
                writeln!(s, "subgroup F: {}", list(f))?;
            }
            if let Some(q) = &r.quotient_flag {
                writeln!(s, "flag of E/F: {}", list(q))?;
            }
            writeln!(s, "dual basis: {}", list(&r.dual_basis))?;
            writeln!(s, "dim U_i: {}", list(&r.u_dims))?;
            writeln!(s, "dim V_i: {}", list(&r.v_dims))?;
        }
        Output::Bound(r) => write!(s, "{r}")?,
        Output::FlagRing(r) => {
            writeln!(s, "flag ring n = {}, l = {}", r.n, r.l)?;
            if let Some(b) = &r.bounds {
                writeln!(s, "bounds: {}", list(b))?;
            }
            for (j, g) in r.relations.iter().enumerate() {
                writeln!(s, "e{}: {g}", j + 1)?;
            }
            writeln!(s, "quotient dimension: {}", r.quotient_dimension)?;
            writeln!(s, "top degree: {}", r.top_degree)?;
            writeln!(s, "hilbert series: {}", list(&r.hilbert_series))?;
            if let Some(v) = &r.verification {
                write!(s, "{v}")?;
            }
        }
        Output::Sympow(r) => {
            if let Some(t) = &r.table {
                writeln!(s, "S^{}(U*):", r.d)?;
                for e in &t.entries {
                    writeln!(s, "  {} x{}", list(&e.label), e.mult)?;
                }
            }
            if let Some(e) = &r.embedding {
                writeln!(s, "k: {}", e.k)?;
                writeln!(s, "flag dual basis: {}", list(&e.flag))?;
                writeln!(s, "dim U[k] = {}, dim V = {}, d = {}", e.dim_uk, e.dim_v, e.d)?;
                for row in &e.rows {
                    writeln!(
                        s,
                        "i = {}: U_i {}, V_i {}, U[k]_i {}, P[j]_i {}",
                        row.i,
                        row.u_i,
                        row.v_i,
                        row.uk_i,
                        list(&row.p_i)
                    )?;
                }
                for c in &e.claims {
                    writeln!(s, "{}: {}", c.item, c.status)?;
                }
            }
        }
        Output::TorusDecompose(r) => {
            writeln!(s, "fixed dimension: {}", r.fixed_dim)?;
            for b in &r.lines {
                let ws: Vec<String> = b
                    .module
                    .entries
                    .iter()
                    .map(|e| format!("{}x{}", list(&e.label), e.mult))
                    .collect();
                writeln!(s, "line {}: dim {} ({})", list(&b.line), b.dim, ws.join(", "))?;
            }
        }
        Output::TorusExample(r) => {
            let p = &r.params;
            writeln!(
                s,
                "a = {}, b = {}, c = {}, a' = {}, b' = {}",
                p.a, p.b, p.c, p.a_prime, p.b_prime
            )?;
            writeln!(
                s,
                "f(x, y) = (x^{} + y^{}, x^{} * conj(y)^{})",
                p.b, p.a, p.a_prime, p.b_prime
            )?;
            writeln!(s, "source weights: {}", list(&r.map.source))?;
            writeln!(s, "target weights: {}", list(&r.map.target))?;
            write!(s, "{}", r.verification)?;
        }
    }
    Ok(())
}
