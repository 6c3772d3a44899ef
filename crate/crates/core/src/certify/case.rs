use super::certificate::{CaseCertificate, CertMode, LogEntry, ENGINE};
use super::counting::derive_delta_bound;
use super::enumerate::{enumerate_reduced_graphs, DegreeSpec};
use super::lesst::lesst_precondition;
use super::params::{CaseParams, CertifyConfig, Mode};
use super::pipeline::{jobs, plan, Runner, Stats};
use crate::error::CertifyError;
use rayon::prelude::*;
use std::time::Instant;

fn check_caps(params: &CaseParams, config: &CertifyConfig) -> Result<(), CertifyError> {
    for (which, value, cap) in [("s", params.s, config.max_s), ("t", params.t, config.max_t)] {
        if value > cap {
            return Err(CertifyError::ScaleLimit { which, value, cap });
        }
    }
    Ok(())
}

/// Certifies one case, by exhaustive search when some side has at least
/// three circles and by counting otherwise.
pub fn certify_case(params: &CaseParams, mode: Mode, config: &CertifyConfig) -> Result<CaseCertificate, CertifyError> {
    params.validate()?;
    check_caps(params, config)?;
    let small = params.s <= 2 && params.t <= 2;
    match (mode, small) {
        (Mode::Enumerate, true) => Err(CertifyError::InvalidParams(
            "enumeration needs a side with at least three circles".into(),
        )),
        (Mode::Count, false) => Err(CertifyError::InvalidParams("counting mode needs s, t ≤ 2".into())),
        (_, true) => {
            let start = Instant::now();
            let mut c = derive_delta_bound(params)?;
            c.elapsed_ms = start.elapsed().as_millis() as u64;
            Ok(c)
        }
        (_, false) => enumerate_case(params, config),
    }
}

fn enumerate_case(params: &CaseParams, config: &CertifyConfig) -> Result<CaseCertificate, CertifyError> {
    let start = Instant::now();
    if params.delta < 6 {
        return Err(CertifyError::InvalidParams(format!(
            "enumeration covers Δ ≥ 6 (got {})",
            params.delta
        )));
    }
    // The search expands the side whose partner has at least three circles.
    let swapped = params.t < 3;
    let p = if swapped { params.swapped() } else { *params };
    let forcing = lesst_precondition(p.t, p.delta);
    let mut cert = CaseCertificate {
        engine: ENGINE.into(),
        params: *params,
        mode: CertMode::Enumeration,
        swapped,
        survivors: 0,
        delta_bound: None,
        constraint_log: Vec::new(),
        elapsed_ms: 0,
        survivor_samples: Vec::new(),
    };
    if !forcing.satisfied {
        cert.constraint_log.push(LogEntry {
            name: "size-forcing".into(),
            anchor: forcing.witness.unwrap_or_default(),
            applied: 1,
            eliminated: 1,
        });
        cert.elapsed_ms = start.elapsed().as_millis() as u64;
        return Ok(cert);
    }
    let classes = enumerate_reduced_graphs(p.s as usize, &DegreeSpec::Regular(6), config.max_s as usize)?;
    let mut stages = plan(p.s, p.t);
    stages.retain(|st| !config.disabled_stages.iter().any(|d| d == st.name));
    let work = jobs(&classes, &p);
    let runner = Runner {
        params: p,
        stages: &stages,
        classes: &classes,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| CertifyError::InvalidParams(format!("worker pool: {e}")))?;
    let parts: Vec<Stats> = pool.install(|| work.par_iter().map(|j| runner.run(j)).collect());
    let mut total = parts.first().cloned().unwrap_or_default();
    for part in parts.iter().skip(1) {
        total.merge(part);
    }
    let space = total.space;
    cert.constraint_log.push(LogEntry {
        name: "size-forcing".into(),
        anchor: format!(
            "reduced S graph is a 6-regular torus triangulation ({} classes) with every family of size {}",
            classes.len(),
            p.t
        ),
        applied: space,
        eliminated: 0,
    });
    for (i, st) in stages.iter().enumerate() {
        cert.constraint_log.push(LogEntry {
            name: st.name.into(),
            anchor: st.anchor.into(),
            applied: total.applied.get(i).copied().unwrap_or(0),
            eliminated: total.eliminated.get(i).copied().unwrap_or(0),
        });
    }
    cert.survivors = total.survivors;
    cert.survivor_samples = total.samples;
    cert.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(cert)
}
