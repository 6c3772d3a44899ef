use crate::error::CertifyError;
use crate::graph::Sign;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Parity class of a surface's boundary circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    /// All boundary circles have the same parity.
    Polarized,
    /// Equally many circles of each parity.
    Neutral,
}

impl Polarity {
    pub fn admits(self, parities: &[Sign]) -> bool {
        let plus = parities.iter().filter(|p| p.is_plus()).count();
        match self {
            Polarity::Polarized => plus == 0 || plus == parities.len(),
            Polarity::Neutral => 2 * plus == parities.len(),
        }
    }
}

impl FromStr for Polarity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "polarized" => Ok(Polarity::Polarized),
            "neutral" => Ok(Polarity::Neutral),
            _ => Err(format!("unknown polarity '{s}' (expected polarized or neutral)")),
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Polarized => "polarized",
            Polarity::Neutral => "neutral",
        })
    }
}

/// One case: boundary counts `s = |∂S|`, `t = |∂T|` and the slope distance.
/// A polarity of `None` admits every parity assignment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CaseParams {
    pub s: u32,
    pub t: u32,
    pub delta: u32,
    pub s_polarity: Option<Polarity>,
    pub t_polarity: Option<Polarity>,
}

impl CaseParams {
    pub fn new(s: u32, t: u32, delta: u32) -> Self {
        Self {
            s,
            t,
            delta,
            s_polarity: None,
            t_polarity: None,
        }
    }

    pub fn with_polarities(mut self, s: Option<Polarity>, t: Option<Polarity>) -> Self {
        self.s_polarity = s;
        self.t_polarity = t;
        self
    }

    /// The same case with the roles of `S` and `T` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            s: self.t,
            t: self.s,
            delta: self.delta,
            s_polarity: self.t_polarity,
            t_polarity: self.s_polarity,
        }
    }

    pub fn validate(&self) -> Result<(), CertifyError> {
        if self.s == 0 || self.t == 0 {
            return Err(CertifyError::InvalidParams("s and t must be positive".into()));
        }
        if self.delta == 0 {
            return Err(CertifyError::InvalidParams("delta must be positive".into()));
        }
        for (n, p, side) in [(self.s, self.s_polarity, "S"), (self.t, self.t_polarity, "T")] {
            if p == Some(Polarity::Neutral) && n % 2 == 1 {
                return Err(CertifyError::InvalidParams(format!(
                    "{side} has {n} boundary circles and cannot be neutral"
                )));
            }
        }
        Ok(())
    }
}

/// Search mode requested for a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Auto,
    Enumerate,
    Count,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Mode::Auto),
            "enumerate" => Ok(Mode::Enumerate),
            "count" => Ok(Mode::Count),
            _ => Err(format!("unknown mode '{s}' (expected auto, enumerate or count)")),
        }
    }
}

/// Resource limits and parallelism for the search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub max_s: u32,
    pub max_t: u32,
    pub workers: usize,
    /// Stage names left out of the search, for ablation and fault injection.
    #[serde(default)]
    pub disabled_stages: Vec<String>,
}

impl CertifyConfig {
    pub const DEFAULT_MAX_S: u32 = 4;
    pub const DEFAULT_MAX_T: u32 = 6;
}

impl Default for CertifyConfig {
    fn default() -> Self {
        Self {
            max_s: Self::DEFAULT_MAX_S,
            max_t: Self::DEFAULT_MAX_T,
            workers: 1,
            disabled_stages: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polarity_classes() {
        use Sign::*;
        assert!(Polarity::Polarized.admits(&[Minus, Minus]));
        assert!(!Polarity::Polarized.admits(&[Plus, Minus]));
        assert!(Polarity::Neutral.admits(&[Plus, Minus, Minus, Plus]));
        assert!(!Polarity::Neutral.admits(&[Plus, Plus, Plus, Minus]));
    }

    #[test]
    fn validation() {
        assert!(CaseParams::new(2, 4, 6).validate().is_ok());
        assert!(CaseParams::new(0, 4, 6).validate().is_err());
        let odd_neutral = CaseParams::new(3, 4, 6).with_polarities(Some(Polarity::Neutral), None);
        assert!(odd_neutral.validate().is_err());
        let p = CaseParams::new(1, 2, 6).with_polarities(Some(Polarity::Polarized), None);
        assert_eq!(p.swapped().s, 2);
        assert_eq!(p.swapped().t_polarity, Some(Polarity::Polarized));
    }
}
