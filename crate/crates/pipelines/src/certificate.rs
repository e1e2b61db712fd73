//! Structured record of a verification run.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use qary_search::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Inapplicable,
}

impl Verdict {
    /// 0 verified, 1 refuted, 2 inapplicable.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Refuted => 1,
            Verdict::Inapplicable => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Input {
    pub name: String,
    pub value: Value,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub id: String,
    pub desc: String,
    pub op: String,
    pub data: Value,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub generator: String,
    pub version: String,
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem_id: String,
    pub inputs: Vec<Input>,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
    pub bound: Option<u64>,
    pub environment: Environment,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub limits: Limits,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            limits: Limits::standard(),
        }
    }
}

impl Certificate {
    pub fn new(theorem_id: &str, opts: &PipelineOptions) -> Self {
        Self {
            theorem_id: theorem_id.to_string(),
            inputs: Vec::new(),
            steps: Vec::new(),
            verdict: Verdict::Verified,
            bound: None,
            environment: Environment {
                generator: "qary".into(),
                version: env!("CARGO_PKG_VERSION").into(),
                max_nodes: opts.limits.max_nodes,
                max_seconds: opts.limits.max_time.map(|t| t.as_secs()),
            },
        }
    }

    pub fn input(&mut self, name: &str, value: impl Serialize, provenance: &str) {
        self.inputs.push(Input {
            name: name.into(),
            value: serde_json::to_value(value).expect("serializable input"),
            provenance: provenance.into(),
        });
    }

    /// Records a step; a failed step refutes the certificate.
    pub fn step(&mut self, id: &str, desc: &str, op: &str, data: Value, ok: bool) -> bool {
        self.steps.push(Step {
            id: id.into(),
            desc: desc.into(),
            op: op.into(),
            data,
            ok,
        });
        if !ok && self.verdict == Verdict::Verified {
            self.verdict = Verdict::Refuted;
        }
        ok
    }

    /// Records a step that could not be carried out (missing input, budget).
    pub fn inapplicable(&mut self, id: &str, desc: &str, op: &str, data: Value) {
        self.step(id, desc, op, data, false);
        self.verdict = Verdict::Inapplicable;
    }

    /// Sets the bound when every step passed.
    pub fn conclude(&mut self, bound: u64) {
        if self.verdict == Verdict::Verified && self.steps.iter().all(|s| s.ok) {
            self.bound = Some(bound);
        } else {
            self.bound = None;
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "theorem {}", self.theorem_id);
        let _ = writeln!(s, "verdict {:?}", self.verdict);
        match self.bound {
            Some(b) => _ = writeln!(s, "bound   {b}"),
            None => _ = writeln!(s, "bound   none"),
        }
        if !self.inputs.is_empty() {
            let _ = writeln!(s, "\ninputs");
            for i in &self.inputs {
                let _ = writeln!(s, "  {} = {}", i.name, i.value);
                let _ = writeln!(s, "      source: {}", i.provenance);
            }
        }
        let _ = writeln!(s, "\nsteps");
        for st in &self.steps {
            let mark = if st.ok { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "  [{mark}] {} {}: {}", st.id, st.op, st.desc);
            let _ = writeln!(s, "         {}", st.data);
        }
        let e = &self.environment;
        let _ = writeln!(
            s,
            "\n{} {} (node budget {}, time budget {})",
            e.generator,
            e.version,
            e.max_nodes.map_or("none".into(), |n| n.to_string()),
            e.max_seconds.map_or("none".into(), |t| format!("{t}s")),
        );
        s
    }

    /// The JSON with the environment block removed, for reproducibility checks.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("certificate serializes");
        if let Value::Object(m) = &mut v {
            m.remove("environment");
        }
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn verdict_follows_steps() {
        let opts = PipelineOptions::default();
        let mut c = Certificate::new("t", &opts);
        c.step("1", "fine", "noop", json!(1), true);
        c.conclude(5);
        assert_eq!((c.verdict, c.bound), (Verdict::Verified, Some(5)));

        c.step("2", "broken", "noop", json!(null), false);
        c.conclude(5);
        assert_eq!((c.verdict, c.bound), (Verdict::Refuted, None));

        let mut d = Certificate::new("t", &opts);
        d.inapplicable("1", "missing", "lookup", json!(null));
        d.step("2", "later failure", "noop", json!(null), false);
        assert_eq!(d.verdict, Verdict::Inapplicable);
        assert_eq!(d.verdict.exit_code(), 2);
    }

    #[test]
    fn json_round_trip() {
        let mut c = Certificate::new("t", &PipelineOptions::default());
        c.input("x", 3, "test");
        c.step("1", "d", "op", json!({"a": [1, 2]}), true);
        c.conclude(1);
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert!(c.to_json().contains("\"verdict\": \"verified\""));
        assert!(!c.stable_json().contains("environment"));
        assert!(c.to_text().contains("[ok  ] 1 op: d"));
    }
}
