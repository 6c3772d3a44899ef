use super::params::CaseParams;
use serde::{Deserialize, Serialize};

pub const ENGINE: &str = concat!("torcert ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertMode {
    Enumeration,
    Counting,
}

/// One line of the constraint log. Counts are in configurations: a rule that
/// fires early is credited with every configuration it rules out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogEntry {
    pub name: String,
    /// The rule the stage applies, stated briefly.
    pub anchor: String,
    pub applied: u64,
    pub eliminated: u64,
}

/// Outcome of one case. `survivors == 0` asserts the case is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCertificate {
    pub engine: String,
    pub params: CaseParams,
    pub mode: CertMode,
    /// True when the search ran with the roles of `S` and `T` exchanged.
    pub swapped: bool,
    pub survivors: u64,
    /// Largest distance the counting argument allows; `None` when every
    /// configuration is ruled out or in enumeration mode.
    pub delta_bound: Option<u32>,
    pub constraint_log: Vec<LogEntry>,
    /// Wall time; the only field that varies between identical runs.
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub survivor_samples: Vec<String>,
}

impl CaseCertificate {
    pub fn asserts_empty(&self) -> bool {
        self.survivors == 0
    }

    pub fn entry(&self, name: &str) -> Option<&LogEntry> {
        self.constraint_log.iter().find(|e| e.name == name)
    }

    /// JSON with `elapsed_ms` zeroed, byte-identical across runs and worker
    /// counts.
    pub fn deterministic_json(&self) -> String {
        let mut c = self.clone();
        c.elapsed_ms = 0;
        serde_json::to_string_pretty(&c).expect("certificate serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// A plain-text table derived from the JSON form.
    pub fn render_table(&self) -> String {
        let v: serde_json::Value = serde_json::from_str(&self.to_json()).expect("round trip");
        let mut out = String::new();
        let p = &v["params"];
        out.push_str(&format!(
            "case s={} t={} delta={} mode={}{}\n",
            p["s"],
            p["t"],
            p["delta"],
            v["mode"].as_str().unwrap_or("?"),
            if v["swapped"].as_bool() == Some(true) { " (roles swapped)" } else { "" }
        ));
        out.push_str(&format!("{:<36} {:>14} {:>14}\n", "constraint", "applied", "eliminated"));
        for e in v["constraint_log"].as_array().into_iter().flatten() {
            out.push_str(&format!(
                "{:<36} {:>14} {:>14}\n",
                e["name"].as_str().unwrap_or("?"),
                e["applied"].as_u64().unwrap_or(0),
                e["eliminated"].as_u64().unwrap_or(0)
            ));
        }
        out.push_str(&format!("survivors: {}\n", v["survivors"]));
        if let Some(b) = v["delta_bound"].as_u64() {
            out.push_str(&format!("delta bound: {b}\n"));
        }
        out
    }
}
