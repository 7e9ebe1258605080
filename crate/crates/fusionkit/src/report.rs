//! JSON reports and DOT output.

use std::time::Duration;

use fusionkit_core::pointed::CenterClass;
use fusionkit_core::ring::{fp_dims, SubringLattice};
use fusionkit_core::{FusionRing, Result};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

/// What a command computed. Every field except `timing_ms` is a pure
/// function of the command line and its input files.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub command: String,
    pub inputs: Value,
    pub verdicts: Vec<Verdict>,
    pub witnesses: Value,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>, inputs: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            verdicts: Vec::new(),
            witnesses: json!({}),
            timing_ms: 0,
        }
    }

    pub fn verdict(&mut self, name: impl Into<String>, pass: bool, detail: Value) -> &mut Self {
        self.verdicts.push(Verdict {
            name: name.into(),
            pass,
            detail,
        });
        self
    }

    pub fn witness(&mut self, key: &str, value: Value) -> &mut Self {
        self.witnesses[key] = value;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn finish(&mut self, elapsed: Duration) {
        self.timing_ms = u64::try_from(elapsed.as_millis()).unwrap_or(u64::MAX);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn labels(ring: &FusionRing, xs: &[usize]) -> Value {
    json!(xs.iter().map(|&x| ring.label(x)).collect::<Vec<_>>())
}

/// A basis bijection as `[[label in r1, label in r2], ...]`, plus the raw
/// index map for re-checking.
pub fn bijection(r1: &FusionRing, r2: &FusionRing, phi: &[usize]) -> Value {
    let pairs: Vec<[&str; 2]> = phi
        .iter()
        .enumerate()
        .map(|(i, &j)| [r1.label(i), r2.label(j)])
        .collect();
    json!({ "map": phi, "labels": pairs })
}

/// Center class with witnesses resolved to labels through `label`.
pub fn center_class(class: &CenterClass, label: impl Fn(usize) -> String) -> Value {
    match *class {
        CenterClass::NonDegenerate => json!({ "verdict": "NonDegenerate" }),
        CenterClass::SlightlyDegenerate { u } => json!({ "verdict": "SlightlyDegenerate", "u": label(u) }),
        CenterClass::ContainsTannakian { witness } => {
            json!({ "verdict": "ContainsTannakian", "witness": label(witness) })
        }
        CenterClass::SymmetricOther => json!({ "verdict": "SymmetricOther" }),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The subring lattice as a DOT digraph with one edge per covering pair,
/// nodes in lattice order.
pub fn lattice_dot(ring: &FusionRing, lattice: &SubringLattice) -> Result<String> {
    let dims = fp_dims(ring)?;
    let mut out = String::from("digraph subrings {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, s) in lattice.subrings.iter().enumerate() {
        let members: Vec<&str> = s.simples().iter().map(|&x| ring.label(x)).collect();
        let kind = if s.is_pointed(ring) { "pointed" } else { "non-pointed" };
        out.push_str(&format!(
            "  n{i} [label=\"rank {}\\nFPdim {}\\n{kind}\\n{{{}}}\"{}];\n",
            s.len(),
            dims.total_of(s.simples()),
            escape(&members.join(", ")),
            if s.is_pointed(ring) { "" } else { ", style=bold" },
        ));
    }
    for &(i, j) in &lattice.covers {
        out.push_str(&format!("  n{i} -> n{j};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}
