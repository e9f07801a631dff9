use indexmap::IndexMap;
use serde_json::{json, Value};

use super::Verdict;
use crate::dim::Dimension;

#[derive(Debug, Clone, PartialEq)]
pub struct EquationReport {
    pub name: String,
    pub line: usize,
    pub verdict: Verdict,
}

/// Verdicts for every equation of a model, in declaration order, plus the
/// dimensions solved for `infer` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub model: String,
    pub equations: Vec<EquationReport>,
    pub inferred: IndexMap<String, Dimension>,
}

const GREEN: &str = "\x1b[32m";
const RED: &str = "\x1b[31m";
const BOLD: &str = "\x1b[1m";
const RESET: &str = "\x1b[0m";

impl Report {
    pub fn homogeneous_count(&self) -> usize {
        self.equations
            .iter()
            .filter(|e| e.verdict.is_homogeneous())
            .count()
    }

    pub fn inhomogeneous_count(&self) -> usize {
        self.equations.len() - self.homogeneous_count()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inhomogeneous_count() == 0
    }

    pub fn violation_count(&self) -> usize {
        self.equations
            .iter()
            .map(|e| e.verdict.violations().len())
            .sum()
    }

    pub fn equation(&self, name: &str) -> Option<&EquationReport> {
        self.equations.iter().find(|e| e.name == name)
    }

    pub fn to_json(&self) -> Value {
        let equations: Vec<Value> = self
            .equations
            .iter()
            .map(|eq| {
                let violations: Vec<Value> = eq
                    .verdict
                    .violations()
                    .iter()
                    .map(|v| {
                        json!({
                            "rule": v.rule.as_str(),
                            "span": v.span,
                            "expected": v.expected.to_string(),
                            "found": v.found.to_string(),
                        })
                    })
                    .collect();
                json!({
                    "name": eq.name,
                    "verdict": if eq.verdict.is_homogeneous() { "homogeneous" } else { "inhomogeneous" },
                    "violations": violations,
                })
            })
            .collect();
        let inferred: serde_json::Map<String, Value> = self
            .inferred
            .iter()
            .map(|(k, d)| (k.clone(), Value::String(d.to_string())))
            .collect();
        json!({
            "model": self.model,
            "equations": equations,
            "inferred": inferred,
            "summary": {
                "equations": self.equations.len(),
                "homogeneous": self.homogeneous_count(),
                "inhomogeneous": self.inhomogeneous_count(),
            },
        })
    }

    /// Human-readable report. With `source`, each violation is followed by
    /// the offending line and a caret underline of its span.
    pub fn render_text(&self, source: Option<&str>, color: bool) -> String {
        let paint = |code: &str, s: &str| {
            if color {
                format!("{code}{s}{RESET}")
            } else {
                s.to_string()
            }
        };
        let lines: Vec<&str> = source.map(|s| s.lines().collect()).unwrap_or_default();
        let mut out = format!("model: {}\n", self.model);
        for eq in &self.equations {
            match &eq.verdict {
                Verdict::Homogeneous { dimension } => {
                    out.push_str(&format!(
                        "eq {} (line {}): {} [{}]\n",
                        eq.name,
                        eq.line,
                        paint(GREEN, "homogeneous"),
                        dimension
                    ));
                }
                Verdict::Inhomogeneous(vs) => {
                    out.push_str(&format!(
                        "eq {} (line {}): {}\n",
                        eq.name,
                        eq.line,
                        paint(RED, "inhomogeneous")
                    ));
                    for v in vs {
                        out.push_str(&format!(
                            "  {}: expected {}, found {}\n",
                            paint(BOLD, v.rule.as_str()),
                            v.expected,
                            v.found
                        ));
                        if let Some(text) = lines.get(v.span.line.wrapping_sub(1)) {
                            let gutter = v.span.line.to_string();
                            let pad = " ".repeat(gutter.len());
                            let width = v.span.col_end.saturating_sub(v.span.col_start).max(1);
                            out.push_str(&format!("  {gutter} | {text}\n"));
                            out.push_str(&format!(
                                "  {pad} | {}{}\n",
                                " ".repeat(v.span.col_start),
                                paint(RED, &"^".repeat(width))
                            ));
                        }
                    }
                }
            }
        }
        if !self.inferred.is_empty() {
            out.push_str("inferred:\n");
            for (name, d) in &self.inferred {
                out.push_str(&format!("  {name} : {d}\n"));
            }
        }
        out.push_str(&format!(
            "summary: {} equations, {} homogeneous, {} inhomogeneous\n",
            self.equations.len(),
            self.homogeneous_count(),
            self.inhomogeneous_count()
        ));
        out
    }
}
