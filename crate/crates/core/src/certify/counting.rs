//! Distance bounds for `s, t ≤ 2` by counting edge ends at one vertex.
//!
//! A vertex of either graph has degree `Δ` times the partner's vertex
//! count. Bounding the number of local edges of the reduced graph and the
//! size of each bounds `Δ`.

use super::certificate::{CaseCertificate, CertMode, LogEntry, ENGINE};
use super::params::{CaseParams, Polarity};
use crate::constraints::negative_size_bound;
use crate::error::CertifyError;

/// One counting argument: at a vertex whose graph has degree `partner · Δ`,
/// `positive` positive local edges of size at most `positive_size` and
/// `negative` negative ones of size at most `negative_size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountingArgument {
    pub name: &'static str,
    pub partner: u32,
    pub positive: u32,
    pub positive_size: u32,
    pub negative: u32,
    pub negative_size: u32,
}

impl CountingArgument {
    pub fn degree_bound(&self) -> u32 {
        self.positive * self.positive_size + self.negative * self.negative_size
    }

    pub fn delta_bound(&self) -> u32 {
        self.degree_bound() / self.partner
    }

    pub fn describe(&self) -> String {
        format!(
            "{}: {}·Δ ≤ {}·{} + {}·{} = {}, so Δ ≤ {}",
            self.name,
            self.partner,
            self.positive,
            self.positive_size,
            self.negative,
            self.negative_size,
            self.degree_bound(),
            self.delta_bound()
        )
    }
}

/// Two circles on each side with `S` polarized: every `T` edge is negative,
/// the reduced two-vertex bipartite torus graph has at most 4 edges, and
/// each has size at most `s + 1`.
fn polarized_pair() -> CountingArgument {
    CountingArgument {
        name: "two-two-polarized",
        partner: 2,
        positive: 0,
        positive_size: 0,
        negative: 4,
        negative_size: negative_size_bound(2, false).bound,
    }
}

/// Two circles on each side, both neutral: at `u_1` there are at most 2
/// positive and 4 negative local edges. A family cannot have two edges
/// parallel in `G_T`, so positive families are at most the 4 negative
/// classes of the partner and negative families at most its 2 positive ones.
fn neutral_pair() -> CountingArgument {
    CountingArgument {
        name: "two-two-neutral",
        partner: 2,
        positive: 2,
        positive_size: 4,
        negative: 4,
        negative_size: 2,
    }
}

/// One `S` circle and two `T` circles: `S` is polarized, so every `T` edge
/// is negative; at most 4 of them, each of size at most `s + 1`.
fn one_two() -> CountingArgument {
    CountingArgument {
        name: "one-two",
        partner: 1,
        positive: 0,
        positive_size: 0,
        negative: 4,
        negative_size: negative_size_bound(1, false).bound,
    }
}

/// Counting arguments that apply to the parameters, after normalizing so
/// that `s ≤ t`. An empty list means the parity rule rules the case out.
pub fn counting_arguments(params: &CaseParams) -> Result<Vec<CountingArgument>, CertifyError> {
    let p = if params.s > params.t { params.swapped() } else { *params };
    use Polarity::*;
    match (p.s, p.t) {
        (1, 1) => Ok(Vec::new()),
        (1, 2) => Ok(if p.t_polarity == Some(Polarized) {
            Vec::new()
        } else {
            vec![one_two()]
        }),
        (2, 2) => {
            let mut out = Vec::new();
            let options = |x: Option<Polarity>| match x {
                Some(v) => vec![v],
                None => vec![Polarized, Neutral],
            };
            for a in options(p.s_polarity) {
                for b in options(p.t_polarity) {
                    let arg = match (a, b) {
                        // A polarized side makes every partner edge negative,
                        // which forces the partner to be neutral.
                        (Polarized, Polarized) => continue,
                        (Neutral, Neutral) => neutral_pair(),
                        _ => polarized_pair(),
                    };
                    if !out.contains(&arg) {
                        out.push(arg);
                    }
                }
            }
            Ok(out)
        }
        _ => Err(CertifyError::InvalidParams(format!(
            "counting mode needs s, t ≤ 2 (got s = {}, t = {})",
            params.s, params.t
        ))),
    }
}

/// The counting-mode certificate: the largest `Δ` any applicable argument
/// allows.
pub fn derive_delta_bound(params: &CaseParams) -> Result<CaseCertificate, CertifyError> {
    params.validate()?;
    let args = counting_arguments(params)?;
    let bound = args.iter().map(CountingArgument::delta_bound).max();
    let mut log = Vec::new();
    if args.is_empty() {
        log.push(LogEntry {
            name: "parity-rule".into(),
            anchor: "a polarized side makes every partner edge negative".into(),
            applied: 1,
            eliminated: 1,
        });
    }
    for a in &args {
        log.push(LogEntry {
            name: format!("counting-{}", a.name),
            anchor: a.describe(),
            applied: 1,
            eliminated: u64::from(params.delta > a.delta_bound()),
        });
    }
    let survivors = u64::from(bound.is_some_and(|b| params.delta <= b));
    Ok(CaseCertificate {
        engine: ENGINE.into(),
        params: *params,
        mode: CertMode::Counting,
        swapped: params.s > params.t,
        survivors,
        delta_bound: bound,
        constraint_log: log,
        elapsed_ms: 0,
        survivor_samples: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polarized_two_two_gives_six() {
        let p = CaseParams::new(2, 2, 6).with_polarities(Some(Polarity::Polarized), None);
        let c = derive_delta_bound(&p).unwrap();
        assert_eq!(c.delta_bound, Some(6));
        assert_eq!(polarized_pair().degree_bound(), 12);
    }

    #[test]
    fn neutral_two_two_gives_eight() {
        let p = CaseParams::new(2, 2, 8).with_polarities(Some(Polarity::Neutral), Some(Polarity::Neutral));
        let c = derive_delta_bound(&p).unwrap();
        assert_eq!(c.delta_bound, Some(8));
        assert_eq!(c.survivors, 1);
        assert_eq!(neutral_pair().degree_bound(), 16);
    }

    #[test]
    fn one_two_gives_eight() {
        for p in [CaseParams::new(1, 2, 6), CaseParams::new(2, 1, 6)] {
            assert_eq!(derive_delta_bound(&p).unwrap().delta_bound, Some(8));
        }
    }

    #[test]
    fn impossible_cases() {
        let c = derive_delta_bound(&CaseParams::new(1, 1, 6)).unwrap();
        assert_eq!(c.delta_bound, None);
        assert!(c.asserts_empty());
        let both = CaseParams::new(2, 2, 6).with_polarities(Some(Polarity::Polarized), Some(Polarity::Polarized));
        assert!(derive_delta_bound(&both).unwrap().asserts_empty());
        assert_eq!(derive_delta_bound(&CaseParams::new(2, 2, 6)).unwrap().delta_bound, Some(8));
    }

    #[test]
    fn too_large_distance_is_eliminated() {
        let p = CaseParams::new(2, 2, 7).with_polarities(Some(Polarity::Polarized), None);
        assert!(derive_delta_bound(&p).unwrap().asserts_empty());
        assert!(derive_delta_bound(&CaseParams::new(3, 2, 6)).is_err());
    }
}
