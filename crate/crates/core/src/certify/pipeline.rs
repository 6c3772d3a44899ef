//! The staged search over configurations of one case.
//!
//! A configuration is a reduced `G_S` class (or its mirror), an assignment
//! of its vertices to `u_1..u_s`, the parities of the `u_i`, the offset of
//! each `u_i` in the crossing order, the crossing sign `ρ` and the parities
//! of the `v_j`. Three symmetries are fixed: `u_1` has parity `+` and offset
//! 0 (reversing the orientation of `S` swaps a class with its mirror, and
//! translating along the torus shifts all offsets together), and `v_1` has
//! parity `+` (reversing the orientation of `T` mirrors `G_T`).
//!
//! Offsets split into a label part (mod `t`) and a block part. Stages that
//! only need the `S` side or the labels run before the block part is
//! enumerated and are credited with every configuration below them.

use super::analysis::{Context, Realization, Rule};
use super::model::Layout;
use super::params::{CaseParams, Polarity};
use crate::constraints::{check_jn1, check_type_uniformity, negative_size_bound, positive_size_bound};
use crate::graph::{EmbeddedGraph, RotationSystem, Sign};
use crate::perms::InducedPermutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Branch {
    /// The connecting families induce the same permutation as both loops.
    LoopPermutations,
    /// The connecting families induce the identity.
    Identity,
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Check {
    /// Positive `S` families have size `t`, which must be even.
    PositiveSizeS,
    UniformTypeS,
    Parity,
    Embedding,
    Jn1,
    /// `G_T` is a cellular torus map whose reduced graph is 6-regular with
    /// every family of size `s`.
    TForcing,
    UniformTypeT,
    Family(Rule),
    PositiveStructure,
    Branch(Branch, Vec<Rule>),
}

#[derive(Clone, Debug)]
pub(crate) struct Stage {
    pub name: &'static str,
    pub anchor: &'static str,
    pub check: Check,
}

impl Check {
    fn level(&self) -> u8 {
        match self {
            Check::PositiveSizeS | Check::UniformTypeS => 0,
            _ => 2,
        }
    }
}

fn stage(name: &'static str, anchor: &'static str, check: Check) -> Stage {
    Stage { name, anchor, check }
}

/// Stage order for a case. Cheap `S`-side checks come first, then the
/// parity rule, then checks on `G_T`. With one `S` circle the size bound on
/// `G_T` runs before the parity rule.
pub(crate) fn plan(s: u32, t: u32) -> Vec<Stage> {
    let positive_s = stage(
        "positive-size-bound",
        "positive S families: size at most t, and t even at equality",
        Check::PositiveSizeS,
    );
    let mut out = Vec::new();
    if s > 1 {
        out.push(positive_s.clone());
    }
    if s >= 3 && t >= 3 {
        out.push(stage(
            "uniform-vertex-type",
            "all vertices of the reduced S graph have one type (p, n)",
            Check::UniformTypeS,
        ));
    }
    let parity = stage(
        "parity-rule",
        "an edge is positive in one graph iff negative in the other",
        Check::Parity,
    );
    let negative = stage(
        "negative-size-bound",
        "negative T families: size at most s + 1 away from the exceptional gluings",
        Check::Family(Rule::NegativeSize),
    );
    if s == 1 {
        // The T side is checked first so its size bound is not masked by
        // the S side, which rejects every odd t outright.
        out.push(negative);
        out.push(parity);
        out.push(positive_s);
        out.push(stage(
            "torus-embedding",
            "G_T lies on the torus",
            Check::Embedding,
        ));
        out.push(stage(
            "jumping-number-one",
            "the six points of a vertex pair keep their cyclic order",
            Check::Jn1,
        ));
    } else {
        out.push(parity);
        if s == 2 {
            out.push(stage(
                "sigma-equals-loop-permutations",
                "connecting families induce the loop permutations: T families exceed s + 1",
                Check::Branch(Branch::LoopPermutations, vec![Rule::NegativeSize]),
            ));
            out.push(stage(
                "sigma-identity",
                "connecting families induce the identity: no consistent T side",
                Check::Branch(
                    Branch::Identity,
                    vec![Rule::NegativeSize, Rule::DoubleParallel],
                ),
            ));
            out.push(stage(
                "sigma-generic",
                "other permutations: T size bound and the Klein bottle rule",
                Check::Branch(Branch::Generic, vec![Rule::NegativeSize, Rule::Klein]),
            ));
        }
        out.push(stage(
            "torus-embedding",
            "G_T lies on the torus",
            Check::Embedding,
        ));
        out.push(stage(
            "jumping-number-one",
            "the six points of a vertex pair keep their cyclic order",
            Check::Jn1,
        ));
        if s >= 3 {
            out.push(stage(
                "t-side-size-forcing",
                "reduced T graph is 6-regular with every family of size s",
                Check::TForcing,
            ));
            if t >= 3 {
                out.push(stage(
                    "uniform-vertex-type-t",
                    "all vertices of the reduced T graph have one type",
                    Check::UniformTypeT,
                ));
            }
        }
        out.push(negative);
    }
    if s >= 3 {
        out.push(stage(
            "positive-size-bound-t",
            "positive T families: size at most s, and s even at equality",
            Check::Family(Rule::PositiveSize),
        ));
    }
    out.push(stage(
        "no-double-parallel",
        "no two edges parallel in both graphs",
        Check::Family(Rule::DoubleParallel),
    ));
    out.push(stage(
        "negative-family-polarization",
        "a negative T family of size s + 1 needs S polarized and a single orbit",
        Check::Family(Rule::Polarization),
    ));
    if s == 2 {
        out.push(stage(
            "klein-bottle-rule",
            "two same-side S-cycles force identity permutations on negative S families",
            Check::Family(Rule::Klein),
        ));
    }
    out.push(stage(
        "positive-family-structure",
        "a positive family of full size has 2-cycle orbits and a sparse partner vertex",
        Check::PositiveStructure,
    ));
    out
}

/// Applied and eliminated counts per stage, plus survivors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Stats {
    /// Configurations in the search space.
    pub space: u64,
    pub applied: Vec<u64>,
    pub eliminated: Vec<u64>,
    pub survivors: u64,
    pub samples: Vec<String>,
}

impl Stats {
    fn new(n: usize) -> Self {
        Self {
            space: 0,
            applied: vec![0; n],
            eliminated: vec![0; n],
            survivors: 0,
            samples: Vec::new(),
        }
    }

    pub fn merge(&mut self, other: &Stats) {
        self.space += other.space;
        for (a, b) in self.applied.iter_mut().zip(&other.applied) {
            *a += b;
        }
        for (a, b) in self.eliminated.iter_mut().zip(&other.eliminated) {
            *a += b;
        }
        self.survivors += other.survivors;
        for s in &other.samples {
            if self.samples.len() < MAX_SAMPLES {
                self.samples.push(s.clone());
            }
        }
    }

    /// Runs stages in order with weight `w`; false once one eliminates.
    fn run(&mut self, stages: std::ops::Range<usize>, w: u64, mut outcome: impl FnMut(usize) -> Outcome) -> bool {
        for i in stages {
            match outcome(i) {
                Outcome::Skip => {}
                Outcome::Pass => self.applied[i] += w,
                Outcome::Fail => {
                    self.applied[i] += w;
                    self.eliminated[i] += w;
                    return false;
                }
            }
        }
        true
    }
}

/// Result of one stage on one configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// The stage does not concern this configuration.
    Skip,
    Pass,
    Fail,
}

impl Outcome {
    fn fail_if(b: bool) -> Self {
        if b {
            Outcome::Fail
        } else {
            Outcome::Pass
        }
    }
}

const MAX_SAMPLES: usize = 3;

/// One unit of parallel work: a reduced class with fixed orientation,
/// vertex order and parities.
#[derive(Clone, Debug)]
pub(crate) struct Job {
    pub class: usize,
    pub mirrored: bool,
    pub order: Vec<usize>,
    pub parity: Vec<Sign>,
}

pub(crate) fn jobs(classes: &[RotationSystem], params: &CaseParams) -> Vec<Job> {
    let s = params.s as usize;
    let orders = permutations(s);
    let mut out = Vec::new();
    for class in 0..classes.len() {
        for mirrored in [false, true] {
            for order in &orders {
                for bits in 0..(1u32 << (s - 1)) {
                    let parity: Vec<Sign> = (0..s)
                        .map(|i| if i > 0 && bits >> (i - 1) & 1 == 1 { Sign::Minus } else { Sign::Plus })
                        .collect();
                    if params.s_polarity.is_none_or(|p| p.admits(&parity)) {
                        out.push(Job {
                            class,
                            mirrored,
                            order: order.clone(),
                            parity,
                        });
                    }
                }
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All parity assignments of the `T` circles with `v_1` positive.
fn t_parities(t: usize, polarity: Option<Polarity>) -> Vec<Vec<Sign>> {
    (0..1u32 << (t - 1))
        .map(|bits| {
            (0..t)
                .map(|j| if j > 0 && bits >> (j - 1) & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect::<Vec<_>>()
        })
        .filter(|p| polarity.is_none_or(|pol| pol.admits(p)))
        .collect()
}

/// Union-find over `T` circles with a parity bit towards the parent.
struct ParityUf {
    parent: Vec<usize>,
    odd: Vec<bool>,
}

impl ParityUf {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            odd: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (r, o) = self.find(self.parent[x]);
        self.parent[x] = r;
        self.odd[x] ^= o;
        (r, self.odd[x])
    }

    /// Records that `a` and `b` have different parities iff `differ`;
    /// false on contradiction.
    fn relate(&mut self, a: usize, b: usize, differ: bool) -> bool {
        let (ra, oa) = self.find(a);
        let (rb, ob) = self.find(b);
        if ra == rb {
            return (oa ^ ob) == differ;
        }
        self.parent[rb] = ra;
        self.odd[rb] = oa ^ ob ^ differ;
        true
    }
}

/// `T` parities compatible with the parity rule for the given endpoints.
fn parity_solutions(lay: &Layout, ends: &[(usize, usize)], candidates: &[Vec<Sign>]) -> Vec<usize> {
    let mut uf = ParityUf::new(lay.t);
    for (e, &(a, b)) in ends.iter().enumerate() {
        if !uf.relate(a, b, lay.sign[e].is_plus()) {
            return Vec::new();
        }
    }
    candidates
        .iter()
        .enumerate()
        .filter(|(_, p)| {
            (0..lay.t).all(|j| {
                let (r, o) = uf.find(j);
                (p[j] != p[r]) == o
            })
        })
        .map(|(i, _)| i)
        .collect()
}

fn parity_consistent(lay: &Layout, ends: &[(usize, usize)], p: &[Sign]) -> bool {
    ends.iter()
        .enumerate()
        .all(|(e, &(a, b))| p[a] * p[b] == -lay.sign[e])
}

/// Which branch of the two-circle analysis the label offsets fall in.
fn branch(lay: &Layout, perms: &[InducedPermutation]) -> Option<Branch> {
    if lay.s != 2 {
        return None;
    }
    let (mut loops, mut links) = (Vec::new(), Vec::new());
    for (r, perm) in perms.iter().enumerate().take(lay.reduced.edge_count()) {
        if lay.reduced.is_loop(r) {
            loops.push(perm);
        } else {
            links.push(perm);
        }
    }
    Some(if links.iter().all(|p| loops.iter().all(|q| q == p)) && !loops.is_empty() {
        Branch::LoopPermutations
    } else if links.iter().all(|p| p.is_identity()) {
        Branch::Identity
    } else {
        Branch::Generic
    })
}

fn reduced_types_uniform(g: &EmbeddedGraph) -> bool {
    check_type_uniformity(g).satisfied
}

/// Reduced graph of the `S` side with its family sizes.
fn reduced_s(lay: &Layout) -> EmbeddedGraph {
    EmbeddedGraph::from_rotation(lay.reduced.clone(), &lay.parity).with_sizes(&vec![lay.t as u32; lay.reduced.edge_count()])
}

pub(crate) struct Runner<'a> {
    pub params: CaseParams,
    pub stages: &'a [Stage],
    pub classes: &'a [RotationSystem],
}

impl Runner<'_> {
    pub fn run(&self, job: &Job) -> Stats {
        let (s, t) = (self.params.s as usize, self.params.t as usize);
        let n = self.stages.len();
        let mut stats = Stats::new(n);
        let base = &self.classes[job.class];
        let oriented = if job.mirrored { base.mirror() } else { base.clone() };
        let reduced = oriented.relabel_vertices(&job.order);
        let lay = Layout::new(reduced, t, job.parity.clone());
        let tpar = t_parities(t, self.params.t_polarity);
        let blocks = 6u64.pow(s as u32 - 1) * 2;
        let per_label = blocks * tpar.len() as u64;
        let labels_total = (t as u64).pow(s as u32 - 1) * per_label;
        stats.space = labels_total;

        let first_c = self.stages.iter().position(|st| st.check.level() > 0).unwrap_or(n);
        let parity_idx = self.stages.iter().position(|st| st.check == Check::Parity);
        let parity_early = parity_idx == Some(first_c);

        let red_s = reduced_s(&lay);
        let s_families = lay.gs(&vec![0; s]).parallel_families();
        // S-side checks depend only on the job; later stages look them up.
        let s_fail: Vec<bool> = self
            .stages
            .iter()
            .map(|st| match st.check {
                Check::PositiveSizeS => (0..lay.reduced.edge_count()).any(|r| {
                    lay.sign[r * t].is_plus() && !positive_size_bound(t as u32).check_size(t as u32).satisfied
                }),
                Check::UniformTypeS => !reduced_types_uniform(&red_s),
                _ => false,
            })
            .collect();
        if !stats.run(0..first_c, labels_total, |i| Outcome::fail_if(s_fail[i])) {
            return stats;
        }
        let s_polarized = lay.parity.iter().all(|&p| p == lay.parity[0]);

        for lo_code in 0..(t as u64).pow(s as u32 - 1) {
            let mut label_offsets = vec![0usize; s];
            let mut c = lo_code as usize;
            for lo in label_offsets.iter_mut().skip(1) {
                *lo = c % t;
                c /= t;
            }
            let ends = lay.t_endpoints(&label_offsets);
            let mut c_from = first_c;
            let sols: Vec<usize> = if parity_early {
                let sols = parity_solutions(&lay, &ends, &tpar);
                let pi = parity_idx.expect("present");
                stats.applied[pi] += per_label;
                stats.eliminated[pi] += (tpar.len() - sols.len()) as u64 * blocks;
                c_from = pi + 1;
                sols
            } else {
                (0..tpar.len()).collect()
            };
            if sols.is_empty() {
                continue;
            }
            let perms: Vec<InducedPermutation> =
                (0..lay.reduced.edge_count()).map(|r| lay.family_permutation(r, &label_offsets)).collect();
            let br = branch(&lay, &perms);
            let ctx = Context {
                s: s as u32,
                delta: self.params.delta,
                s_polarized,
                klein_applies: (0..lay.reduced.edge_count())
                    .any(|r| !lay.sign[r * t].is_plus() && !perms[r].is_identity()),
            };
            for bo_code in 0..6u64.pow(s as u32 - 1) {
                let mut offsets = label_offsets.clone();
                let mut c = bo_code as usize;
                for o in offsets.iter_mut().skip(1) {
                    *o += (c % 6) * t;
                    c /= 6;
                }
                for rho in [1i8, -1] {
                    for &pi in &sols {
                        let tp = &tpar[pi];
                        let leaf = Leaf::new(&lay, &offsets, rho, tp, &s_families);
                        let mut active: Vec<Rule> = Vec::new();
                        let survived = stats.run(c_from..n, 1, |i| {
                            let out = if s_fail[i] {
                                Outcome::Fail
                            } else {
                                leaf.outcome(&self.stages[i].check, &ends, &active, br, &ctx)
                            };
                            if let Check::Family(r) = self.stages[i].check {
                                active.push(r);
                            }
                            out
                        });
                        if survived {
                            stats.survivors += 1;
                            if stats.samples.len() < MAX_SAMPLES {
                                stats.samples.push(format!(
                                    "class {} mirrored {} order {:?} parity {} offsets {:?} rho {} t-parity {}",
                                    job.class,
                                    job.mirrored,
                                    job.order,
                                    signs(&job.parity),
                                    offsets,
                                    rho,
                                    signs(tp)
                                ));
                            }
                        }
                    }
                }
            }
        }
        stats
    }
}

fn signs(p: &[Sign]) -> String {
    p.iter().map(|s| s.symbol()).collect()
}

/// `G_T` for one full configuration and what the checks need from it.
struct Leaf<'a> {
    lay: &'a Layout,
    offsets: &'a [usize],
    rho: i8,
    t_parity: &'a [Sign],
    gt: EmbeddedGraph,
    real: Realization,
    s_families: &'a [crate::graph::ParallelFamily],
}

impl<'a> Leaf<'a> {
    fn new(
        lay: &'a Layout,
        offsets: &'a [usize],
        rho: i8,
        t_parity: &'a [Sign],
        s_families: &'a [crate::graph::ParallelFamily],
    ) -> Self {
        let t_sign: Vec<Sign> = lay.sign.iter().map(|&x| -x).collect();
        let gt = lay.gt(offsets, rho, t_parity, &t_sign);
        let real = Realization::new(&gt, |e| lay.family_of(e));
        Self {
            lay,
            offsets,
            rho,
            t_parity,
            gt,
            real,
            s_families,
        }
    }

    fn outcome(
        &self,
        check: &Check,
        ends: &[(usize, usize)],
        active: &[Rule],
        br: Option<Branch>,
        ctx: &Context,
    ) -> Outcome {
        match check {
            Check::PositiveSizeS | Check::UniformTypeS => Outcome::Pass,
            Check::Parity => Outcome::fail_if(!parity_consistent(self.lay, ends, self.t_parity)),
            Check::Embedding => Outcome::fail_if(!self.real.embeds()),
            Check::Jn1 => Outcome::fail_if(!self.jn1_holds()),
            Check::TForcing => Outcome::fail_if(!self.t_forced()),
            Check::UniformTypeT => {
                Outcome::fail_if(self.real.exact && !reduced_types_uniform(&self.gt.reduce()))
            }
            Check::Family(Rule::NegativeSize) if self.orbit_family_too_large(ctx) => Outcome::Fail,
            Check::Family(r) => {
                let mut rules = active.to_vec();
                rules.push(*r);
                Outcome::fail_if(self.real.violation(&rules, ctx).is_some())
            }
            Check::Branch(b, rules) if br == Some(*b) => Outcome::fail_if(
                (rules.contains(&Rule::NegativeSize) && self.orbit_family_too_large(ctx))
                    || !self.real.embeds()
                    || self.real.violation(rules, ctx).is_some(),
            ),
            Check::Branch(..) => Outcome::Skip,
            Check::PositiveStructure => Outcome::fail_if(self.real.exact && !self.positive_structure()),
        }
    }

    /// With one or two `S` circles, when every family is positive and all
    /// induce the same permutation, each edge of the reduced `G_T` takes one
    /// orbit edge from every `S` family and is negative. This holds whatever
    /// surface the derived rotation system traces.
    fn orbit_family_too_large(&self, ctx: &Context) -> bool {
        let lay = self.lay;
        if lay.s > 2 || !lay.sign.iter().all(|e| e.is_plus()) {
            return false;
        }
        let k = lay.reduced.edge_count();
        let first = lay.family_permutation(0, self.offsets);
        (1..k).all(|r| lay.family_permutation(r, self.offsets) == first)
            && !negative_size_bound(ctx.s, true).check(k as u32, ctx.delta).satisfied
    }

    fn jn1_holds(&self) -> bool {
        let (s, t) = (self.lay.s, self.lay.t);
        let gs = self.lay.gs(self.offsets);
        let mut inc: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![Vec::new(); t]; s];
        for (e, ends) in self.lay.ends.iter().enumerate() {
            for (k, &(i, q)) in ends.iter().enumerate() {
                let (j, slot) = self.lay.t_slot(i, q, self.offsets[i], self.rho, self.t_parity);
                debug_assert_eq!(self.gt.map().slot_of(2 * e + k), slot);
                inc[i][j].push((q, slot));
            }
        }
        (0..s).all(|i| {
            (0..t).all(|j| {
                check_jn1(6, &gs.vertices()[i], &self.gt.vertices()[j], &inc[i][j])
                    .map(|v| v.satisfied)
                    .unwrap_or(false)
            })
        })
    }

    fn t_forced(&self) -> bool {
        if !self.real.exact {
            return false;
        }
        let red = self.gt.reduce();
        let s = self.lay.s as u32;
        red.map().degrees().iter().all(|&d| d == 6) && red.edges().iter().all(|e| e.size == s)
    }

    fn positive_structure(&self) -> bool {
        let (s, t) = (self.lay.s as u32, self.lay.t as u32);
        let gs = self.lay.gs(self.offsets);
        let s_ok = self
            .s_families
            .iter()
            .filter(|f| f.sign.is_plus())
            .all(|f| positive_size_bound(t).check_family(f, &self.gt).satisfied);
        s_ok && self
            .gt
            .parallel_families()
            .iter()
            .filter(|f| f.sign.is_plus())
            .all(|f| positive_size_bound(s).check_family(f, &gs).satisfied)
    }
}

