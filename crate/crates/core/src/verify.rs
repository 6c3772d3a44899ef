//! The acceptance suite: each criterion recomputes its facts from the engine
//! and compares them with independently stated expectations.

use crate::certify::{
    certify_case, derive_delta_bound, enumerate_reduced_graphs, CaseCertificate, CaseParams, CertifyConfig,
    DegreeSpec, Mode, Polarity, ENGINE,
};
use crate::constraints::lemma_3v_check;
use crate::graph::{Dart, EmbeddedGraph, RotationSystem, Sign};
use crate::homology::{apply_gluing, klein_scan, slope_distance, Frame, GluingMatrix, HomologyClass};
use crate::perms::InducedPermutation;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

/// The enumeration cases of the first criterion.
pub const EMPTY_CASES: [(u32, u32); 5] = [(1, 3), (2, 4), (2, 6), (3, 3), (4, 4)];

/// Stages whose eliminations the `s = 2` cases must show.
pub const SIGMA_BRANCHES: [&str; 3] = ["sigma-equals-loop-permutations", "sigma-identity", "sigma-generic"];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub config: CertifyConfig,
    /// Criteria to run, by number; empty means all.
    pub only: Vec<u8>,
    /// Number of random rotation systems for the Euler criterion.
    pub euler_samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            config: CertifyConfig::default(),
            only: Vec::new(),
            euler_samples: 10_000,
            seed: 0x746f_7263,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {}. {} ({} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.detail
        )
    }
}

/// Outcome of the suite. The JSON form leaves out every timing, so it is
/// byte-identical across runs and worker counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub engine: String,
    pub criteria: Vec<CriterionResult>,
    pub certificates: Vec<CaseCertificate>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut r = self.clone();
        for c in &mut r.certificates {
            c.elapsed_ms = 0;
        }
        serde_json::to_string_pretty(&r).expect("report serializes")
    }
}

/// Runs the selected criteria, calling `progress` after each.
pub fn verify_all(opts: &VerifyOptions, mut progress: impl FnMut(&CriterionResult)) -> VerifyReport {
    let wanted = |id: u8| opts.only.is_empty() || opts.only.contains(&id);
    let mut criteria = Vec::new();
    let mut certificates = Vec::new();
    let mut record = |id: u8, name: &str, f: &mut dyn FnMut() -> Result<String, String>| {
        let start = Instant::now();
        let out = f();
        let r = CriterionResult {
            id,
            name: name.into(),
            passed: out.is_ok(),
            detail: out.unwrap_or_else(|e| e),
            elapsed_ms: start.elapsed().as_millis() as u64,
        };
        progress(&r);
        criteria.push(r);
    };
    if wanted(1) {
        record(1, "emptiness certificates", &mut || {
            let certs = emptiness_certificates(&opts.config)?;
            let detail = check_emptiness(&certs);
            certificates.extend(certs);
            detail
        });
    }
    if wanted(2) {
        record(2, "counting-mode bounds", &mut counting_bounds);
    }
    if wanted(3) {
        record(3, "Klein slope classification", &mut klein_classification);
    }
    if wanted(4) {
        record(4, "orbit count formulas", &mut orbit_formulas);
    }
    if wanted(5) {
        record(5, "reduced torus graph degrees", &mut reduced_degree_facts);
    }
    if wanted(6) {
        let (n, seed) = (opts.euler_samples, opts.seed);
        record(6, "Euler and face invariants", &mut || euler_invariants(n, seed));
    }
    if wanted(7) {
        record(7, "gluing algebra", &mut gluing_algebra);
    }
    if wanted(8) {
        record(8, "determinism across worker counts", &mut || determinism(&opts.config));
    }
    VerifyReport {
        engine: ENGINE.into(),
        criteria,
        certificates,
    }
}

fn emptiness_certificates(config: &CertifyConfig) -> Result<Vec<CaseCertificate>, String> {
    EMPTY_CASES
        .iter()
        .map(|&(s, t)| {
            certify_case(&CaseParams::new(s, t, 6), Mode::Enumerate, config).map_err(|e| format!("({s},{t}): {e}"))
        })
        .collect()
}

/// Survivors must be zero everywhere, the `s = 2` cases must show every
/// branch eliminating, and `(1, 3)` must fall to the negative size bound.
pub fn check_emptiness(certs: &[CaseCertificate]) -> Result<String, String> {
    let mut notes = Vec::new();
    let mut errors = Vec::new();
    for c in certs {
        let (s, t) = (c.params.s, c.params.t);
        if c.survivors != 0 {
            errors.push(format!("({s},{t}) has {} survivors", c.survivors));
        }
        if s == 2 {
            for b in SIGMA_BRANCHES {
                match c.entry(b) {
                    Some(e) if e.eliminated > 0 => {}
                    _ => errors.push(format!("({s},{t}) shows no eliminations at {b}")),
                }
            }
        }
        if s == 1 {
            let space = c.entry("size-forcing").map_or(0, |e| e.applied);
            match c.entry("negative-size-bound") {
                Some(e) if e.eliminated == space && space > 0 => {}
                _ => errors.push(format!("({s},{t}) is not eliminated by negative-size-bound")),
            }
        }
        notes.push(format!("({s},{t}) survivors {}", c.survivors));
    }
    if errors.is_empty() {
        Ok(notes.join(", "))
    } else {
        Err(errors.join("; "))
    }
}

fn counting_bounds() -> Result<String, String> {
    let polarized = CaseParams::new(2, 2, 6).with_polarities(Some(Polarity::Polarized), None);
    let neutral = CaseParams::new(2, 2, 6).with_polarities(Some(Polarity::Neutral), Some(Polarity::Neutral));
    let one_two = CaseParams::new(1, 2, 6);
    let mut out = Vec::new();
    for (name, p, want) in [("(2,2) polarized", polarized, 6), ("(2,2) neutral", neutral, 8), ("(1,2)", one_two, 8)] {
        let got = derive_delta_bound(&p).map_err(|e| e.to_string())?.delta_bound;
        if got != Some(want) {
            return Err(format!("{name}: bound {got:?}, expected {want}"));
        }
        out.push(format!("{name} Δ ≤ {want}"));
    }
    Ok(out.join(", "))
}

fn klein_classification() -> Result<String, String> {
    let found: Vec<(i64, i64, u64)> = klein_scan(100)
        .into_iter()
        .filter_map(|(m, s)| s.map(|s| (m, s.q, s.distance)))
        .collect();
    let want = vec![(1, 1, 4), (2, 1, 2), (4, 2, 1)];
    if found != want {
        return Err(format!("solutions (m, q, Δ) = {found:?}, expected {want:?}"));
    }
    for (m, _, _) in &found {
        let s = crate::homology::solve_klein_slopes(*m).expect("listed");
        let d = slope_distance(&s.alpha, &HomologyClass::lambda(Frame::T0)).map_err(|e| e.to_string())?;
        if d != 1 {
            return Err(format!("m = {m}: Δ(α, λ0) = {d}"));
        }
    }
    Ok("solutions exactly at m = 1, 2, 4 with (q, Δ) = (1, 4), (1, 2), (2, 1)".into())
}

/// Cycle count of `x ↦ α − ε·x` on `1..=n` by following every point.
fn brute_orbits(n: u32, alpha: u32, eps: Sign) -> usize {
    let n = n as i64;
    let f = |x: i64| (alpha as i64 - eps.to_int() * x).rem_euclid(n);
    let mut seen = vec![false; n as usize];
    let mut count = 0;
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = f(x);
        }
    }
    count
}

fn orbit_formulas() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=24u32 {
        for alpha in 0..n {
            for eps in [Sign::Plus, Sign::Minus] {
                let p = InducedPermutation::new(n, alpha as i64, eps).map_err(|e| e.to_string())?;
                let brute = brute_orbits(n, alpha, eps);
                if p.formula_orbit_count() != brute || p.orbits().count != brute {
                    return Err(format!("n = {n}, α = {alpha}, ε = {eps:?}: formula {} vs {brute}", p.formula_orbit_count()));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} permutations agree"))
}

fn reduced_degree_facts() -> Result<String, String> {
    let mut total = 0;
    for v in 1..=3 {
        let graphs = enumerate_reduced_graphs(v, &DegreeSpec::UpToEdges(12), 3).map_err(|e| e.to_string())?;
        for g in &graphs {
            let eg = EmbeddedGraph::from_rotation(g.clone(), &vec![Sign::Plus; v]);
            let verdict = lemma_3v_check(&eg).map_err(|e| e.to_string())?;
            if !verdict.satisfied {
                return Err(verdict.witness.unwrap_or_default());
            }
        }
        total += graphs.len();
    }
    Ok(format!("{total} reduced torus graphs with at most 3 vertices and 12 edges"))
}

/// A random rotation system with between 1 and `max_v` vertices and 1 and
/// `max_e` edges; every vertex gets at least one dart when possible.
pub fn random_rotation_system(rng: &mut impl Rng, max_v: usize, max_e: usize) -> RotationSystem {
    let e = rng.gen_range(1..=max_e);
    let v = rng.gen_range(1..=max_v.min(2 * e));
    let mut darts: Vec<Dart> = (0..2 * e).collect();
    darts.shuffle(rng);
    let mut rots = vec![Vec::new(); v];
    for (i, d) in darts.into_iter().enumerate() {
        let target = if i < v { i } else { rng.gen_range(0..v) };
        rots[target].push(d);
    }
    RotationSystem::from_rotations(rots).expect("every dart placed once")
}

/// Faces as orbits of `d ↦ succ(twin(d))`, traced from the raw rotations.
fn oracle_faces(m: &RotationSystem) -> Vec<Vec<Dart>> {
    let n = m.dart_count();
    let mut next = vec![0; n];
    for rot in m.rotations() {
        for (k, &d) in rot.iter().enumerate() {
            next[d] = rot[(k + 1) % rot.len()];
        }
    }
    let mut seen = vec![false; n];
    let mut faces = Vec::new();
    for start in 0..n {
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = next[d ^ 1];
        }
        if !face.is_empty() {
            faces.push(face);
        }
    }
    faces
}

fn euler_invariants(samples: usize, seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let m = random_rotation_system(&mut rng, 6, 12);
        let faces = m.faces();
        let sides: usize = faces.iter().map(Vec::len).sum();
        if sides != 2 * m.edge_count() {
            return Err(format!("sample {k}: face sides {sides} ≠ 2E = {}", 2 * m.edge_count()));
        }
        if faces.len() != oracle_faces(&m).len() {
            return Err(format!("sample {k}: face count differs from the oracle"));
        }
        for c in m.surface().components {
            if c.euler != 2 - 2 * c.genus || c.genus < 0 {
                return Err(format!("sample {k}: component with χ = {} and genus {}", c.euler, c.genus));
            }
        }
    }
    Ok(format!("{samples} random rotation systems"))
}

fn gluing_algebra() -> Result<String, String> {
    let r = 10i64;
    let mut pairs = 0u64;
    for m in -4..=4 {
        let g = GluingMatrix::new(m);
        if g.determinant() != -1 {
            return Err(format!("det [φ] = {} for m = {m}", g.determinant()));
        }
        let classes: Vec<HomologyClass> = (-r..=r)
            .flat_map(|a| (-r..=r).map(move |b| HomologyClass::new(Frame::T1, a, b)))
            .collect();
        let images: Vec<HomologyClass> = classes
            .iter()
            .map(|c| apply_gluing(&g, c).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        for (c, pc) in classes.iter().zip(&images) {
            for (d, pd) in classes.iter().zip(&images) {
                if pc.intersection(pd) != -c.intersection(d) {
                    return Err(format!("m = {m}: φ does not reverse {c:?} · {d:?}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("det = −1 and sign reversal on {pairs} pairs, m in −4..=4"))
}

fn determinism(config: &CertifyConfig) -> Result<String, String> {
    let run = |workers: usize| -> Result<Vec<String>, String> {
        let cfg = CertifyConfig {
            workers,
            ..config.clone()
        };
        let mut out: Vec<String> = emptiness_certificates(&cfg)?
            .iter()
            .map(CaseCertificate::deterministic_json)
            .collect();
        out.push(counting_bounds()?);
        Ok(out)
    };
    let base = run(1)?;
    for w in [2, 8] {
        if run(w)? != base {
            return Err(format!("output with {w} workers differs from 1 worker"));
        }
    }
    Ok("identical certificates with 1, 2 and 8 workers".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_orbits_small_cases() {
        assert_eq!(brute_orbits(6, 1, Sign::Minus), 1);
        assert_eq!(brute_orbits(6, 4, Sign::Minus), 2);
        assert_eq!(brute_orbits(4, 1, Sign::Plus), 2);
    }

    #[test]
    fn oracle_faces_on_the_hexagonal_map() {
        let m = RotationSystem::from_word("abcabc").unwrap();
        assert_eq!(oracle_faces(&m).len(), 2);
    }

    #[test]
    fn cheap_criteria_pass() {
        let opts = VerifyOptions {
            only: vec![2, 3, 4, 7],
            ..VerifyOptions::default()
        };
        let r = verify_all(&opts, |_| {});
        assert!(r.passed(), "{:?}", r.criteria);
        assert_eq!(r.criteria.len(), 4);
    }

    #[test]
    fn emptiness_check_flags_missing_branches() {
        let mut c = derive_delta_bound(&CaseParams::new(1, 2, 6)).unwrap();
        c.params = CaseParams::new(2, 4, 6);
        assert!(check_emptiness(&[c]).is_err());
    }
}
