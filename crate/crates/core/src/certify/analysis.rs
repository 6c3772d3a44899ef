//! Family rules on `G_T` when its derived surface need not be the torus.
//!
//! A graph on the torus whose rotation system traces a surface with several
//! components, or with planar components, still embeds; some derived faces
//! are then not disks and some derived bigons are not real parallelisms.
//! The number of such faces per component is bounded (`budget`), so a
//! configuration is ruled out once every way of discounting that many bigons
//! leaves a family that breaks a rule.

use crate::constraints::{negative_size_bound, positive_size_bound};
use crate::graph::{normalize_label, EmbeddedGraph, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rule {
    NegativeSize,
    PositiveSize,
    DoubleParallel,
    Polarization,
    Klein,
}

/// A derived parallel family of `G_T`.
#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub component: usize,
    pub sign: Sign,
    pub cyclic: bool,
    pub edges: Vec<usize>,
    /// Labels (`S` circles) at the two ends of each member.
    pub labels: Vec<(u32, u32)>,
    /// `S` family of each member.
    pub s_family: Vec<usize>,
    /// String of the S-cycle formed by members `k` and `k + 1`, if any.
    /// Cyclic chains also have the bigon closing the cycle.
    pub bigons: Vec<Option<u32>>,
}

/// What the rules need to know about the `S` side.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Context {
    pub s: u32,
    pub delta: u32,
    pub s_polarized: bool,
    /// True when some negative `S` family induces a non-identity permutation.
    pub klein_applies: bool,
}

/// Surface data of `G_T` and the derived families.
#[derive(Clone, Debug)]
pub(crate) struct Realization {
    /// `Err` with a reason when the graph cannot lie on the torus at all.
    pub budgets: Result<Vec<usize>, String>,
    /// Bound on non-disk faces summed over all components.
    pub total_budget: usize,
    pub exact: bool,
    pub monogons: Vec<usize>,
    pub chains: Vec<Chain>,
}

impl Realization {
    pub fn new(gt: &EmbeddedGraph, family_of: impl Fn(usize) -> usize) -> Self {
        let surface = gt.surface();
        let comps = &surface.components;
        let mut comp_of = vec![0usize; gt.vertex_count()];
        for (c, comp) in comps.iter().enumerate() {
            for &v in &comp.vertices {
                comp_of[v] = c;
            }
        }
        let k = comps.len();
        let total: i64 = comps.iter().map(|c| c.genus).sum();
        let budgets = if let Some(c) = comps.iter().find(|c| c.genus > 1) {
            Err(format!("a component has genus {}", c.genus))
        } else if total > 1 {
            Err(format!("components have total genus {total}"))
        } else if total == 1 {
            // The other components sit in disk faces of the torus component.
            Ok(vec![k - 1; k])
        } else {
            // Each planar component leaves at most two non-disk faces of its
            // own, plus one per other component.
            Ok(vec![k + 1; k])
        };
        // Regions of the torus cut along G_T have total Euler characteristic
        // F - 2k + 2g; the non-disk ones contribute at most 0 each.
        let total_budget = (2 * k).saturating_sub(2 * total.max(0) as usize);
        let exact = k == 1 && total == 1;
        let map = gt.map();
        let mut monogons = vec![0usize; k];
        for f in map.faces() {
            if f.len() == 1 {
                monogons[comp_of[map.vertex_of(f[0])]] += 1;
            }
        }
        let mut real = Self {
            budgets,
            total_budget,
            exact,
            monogons,
            chains: Vec::new(),
        };
        // Without an embedding every rule check is moot, so skip the chains.
        if !real.embeds() {
            return real;
        }
        real.chains = gt
            .parallel_families()
            .into_iter()
            .map(|fam| {
                let m = fam.edges.len();
                let labels = fam.label_pairs().expect("G_T is fully labeled");
                let nb = if fam.cyclic { m } else { m.saturating_sub(1) };
                let bigons = (0..nb)
                    .map(|k| {
                        if fam.sign != Sign::Plus {
                            return None;
                        }
                        let (d, d1) = (fam.darts[k], fam.darts[(k + 1) % m]);
                        s_cycle_string(gt, d, d1, labels[k], labels[(k + 1) % m])
                    })
                    .collect();
                Chain {
                    component: comp_of[fam.endpoints.0],
                    sign: fam.sign,
                    cyclic: fam.cyclic,
                    s_family: fam.edges.iter().map(|&e| family_of(e)).collect(),
                    edges: fam.edges,
                    labels,
                    bigons,
                }
            })
            .collect();
        real
    }

    /// `None` when some choice of non-disk faces within the budgets leaves
    /// every real family within the rules; otherwise a witness.
    pub fn violation(&self, rules: &[Rule], ctx: &Context) -> Option<String> {
        let budgets = self.budgets.as_ref().ok()?;
        let mut need = self.monogons.clone();
        for ch in &self.chains {
            need[ch.component] += min_removals(ch, rules, ctx);
        }
        if let Some((c, (n, b))) = need.iter().zip(budgets).enumerate().find(|(_, (n, b))| n > b) {
            return Some(format!("component {c} needs {n} non-disk faces but at most {b} are possible"));
        }
        let sum: usize = need.iter().sum();
        (sum > self.total_budget)
            .then(|| format!("{sum} non-disk faces needed but at most {} are possible", self.total_budget))
    }

    /// Whether `G_T` fits on the torus with its monogons non-disk.
    pub fn embeds(&self) -> bool {
        match &self.budgets {
            Err(_) => false,
            Ok(b) => {
                self.monogons.iter().zip(b).all(|(m, b)| m <= b)
                    && self.monogons.iter().sum::<usize>() <= self.total_budget
            }
        }
    }
}

/// The string `j` when the bigon between consecutive darts `d`, `d1` at the
/// first endpoint is an S-cycle.
fn s_cycle_string(gt: &EmbeddedGraph, d: usize, d1: usize, la: (u32, u32), lb: (u32, u32)) -> Option<u32> {
    let n = gt.frame()?.modulus;
    let j = gt.corner_string(d)?;
    if gt.corner_string(gt.map().twin(d1)) != Some(j) {
        return None;
    }
    let next = normalize_label(i64::from(j) + 1, n);
    if next == j {
        return None;
    }
    let want = (j.min(next), j.max(next));
    let sorted = |(a, b): (u32, u32)| (a.min(b), a.max(b));
    (sorted(la) == want && sorted(lb) == want).then_some(j)
}

/// Fewest bigons to discount so every remaining piece of the chain obeys
/// the rules. The rules are hereditary, so greedy cutting is optimal on a
/// path.
pub(crate) fn min_removals(ch: &Chain, rules: &[Rule], ctx: &Context) -> usize {
    let m = ch.edges.len();
    if m == 0 || rules.is_empty() {
        return 0;
    }
    if !ch.cyclic {
        return greedy(ch, 0, m, rules, ctx);
    }
    if piece_ok(ch, 0, m, true, rules, ctx) {
        return 0;
    }
    (0..m)
        .map(|c| 1 + greedy(ch, (c + 1) % m, m, rules, ctx))
        .min()
        .expect("nonempty")
}

fn greedy(ch: &Chain, start: usize, m: usize, rules: &[Rule], ctx: &Context) -> usize {
    let mut cuts = 0;
    let mut piece = 0;
    for k in 1..m {
        if !piece_ok(ch, start + piece, k - piece + 1, false, rules, ctx) {
            cuts += 1;
            piece = k;
        }
    }
    cuts
}

/// Whether the `len` members starting at `start` (cyclically) may form one
/// real family. `whole` marks the full cycle of a cyclic chain.
pub(crate) fn piece_ok(ch: &Chain, start: usize, len: usize, whole: bool, rules: &[Rule], ctx: &Context) -> bool {
    let m = ch.edges.len();
    let at = |k: usize| (start + k) % m;
    let s = ctx.s as usize;
    rules.iter().all(|rule| match rule {
        Rule::NegativeSize => {
            ch.sign.is_plus() || negative_size_bound(ctx.s, true).check(len as u32, ctx.delta).satisfied
        }
        Rule::PositiveSize => {
            !ch.sign.is_plus() || positive_size_bound(ctx.s).check_size(len as u32).satisfied
        }
        Rule::DoubleParallel => {
            let mut seen: Vec<usize> = (0..len).map(|k| ch.s_family[at(k)]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        }
        Rule::Polarization => {
            if ch.sign.is_plus() || len < s + 1 {
                return true;
            }
            if !ctx.s_polarized {
                return false;
            }
            let windows = if whole { m } else { len - s + 1 };
            (0..windows).all(|w| single_orbit((0..s).map(|k| ch.labels[at(w + k)]), s))
        }
        Rule::Klein => {
            if !ctx.klein_applies || !ch.sign.is_plus() {
                return true;
            }
            let nb = if whole { m } else { len - 1 };
            let mut strings: Vec<u32> = (0..nb).filter_map(|k| ch.bigons[at(k)]).collect();
            strings.sort_unstable();
            strings.windows(2).all(|w| w[0] != w[1])
        }
    })
}

/// True when the label pairs form a permutation of `1..=n` with one cycle.
fn single_orbit(pairs: impl Iterator<Item = (u32, u32)>, n: usize) -> bool {
    let mut map = vec![usize::MAX; n];
    for (a, b) in pairs {
        let (a, b) = (a as usize - 1, b as usize - 1);
        if map[a] != usize::MAX {
            return false;
        }
        map[a] = b;
    }
    if map.contains(&usize::MAX) {
        return false;
    }
    let mut x = 0;
    for step in 1..=n {
        x = map[x];
        if x == 0 {
            return step == n;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(sign: Sign, cyclic: bool, fams: &[usize]) -> Chain {
        let m = fams.len();
        Chain {
            component: 0,
            sign,
            cyclic,
            edges: (0..m).collect(),
            labels: vec![(1, 1); m],
            s_family: fams.to_vec(),
            bigons: vec![None; if cyclic { m } else { m - 1 }],
        }
    }

    fn ctx(s: u32) -> Context {
        Context {
            s,
            delta: 6,
            s_polarized: true,
            klein_applies: false,
        }
    }

    /// Brute force over all sets of discounted bigons.
    fn brute(ch: &Chain, rules: &[Rule], c: &Context) -> usize {
        let m = ch.edges.len();
        let nb = ch.bigons.len();
        let mut best = usize::MAX;
        for mask in 0u32..(1 << nb) {
            let cuts: Vec<usize> = (0..nb).filter(|k| mask >> k & 1 == 1).collect();
            let ok = if cuts.is_empty() {
                piece_ok(ch, 0, m, ch.cyclic, rules, c)
            } else if ch.cyclic {
                (0..cuts.len()).all(|i| {
                    let a = cuts[i];
                    let b = cuts[(i + 1) % cuts.len()];
                    let len = (b + m - a - 1) % m + 1;
                    piece_ok(ch, a + 1, len, false, rules, c)
                })
            } else {
                let mut bounds = vec![0];
                bounds.extend(cuts.iter().map(|k| k + 1));
                bounds.push(m);
                bounds.windows(2).all(|w| piece_ok(ch, w[0], w[1] - w[0], false, rules, c))
            };
            if ok {
                best = best.min(cuts.len());
            }
        }
        best
    }

    #[test]
    fn greedy_matches_brute_force() {
        let rules = [Rule::NegativeSize, Rule::DoubleParallel];
        for m in 1..=8usize {
            for cyclic in [false, true] {
                for seed in 0..6usize {
                    let fams: Vec<usize> = (0..m).map(|k| (k * (seed + 1) + seed) % 4).collect();
                    let ch = chain(Sign::Minus, cyclic, &fams);
                    let c = ctx(1);
                    assert_eq!(min_removals(&ch, &rules, &c), brute(&ch, &rules, &c), "{fams:?} {cyclic}");
                }
            }
        }
    }

    #[test]
    fn negative_bound_cuts() {
        // Six negative members with s = 1 must split into pieces of at most two.
        let ch = chain(Sign::Minus, false, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(min_removals(&ch, &[Rule::NegativeSize], &ctx(1)), 2);
        let cyc = chain(Sign::Minus, true, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(min_removals(&cyc, &[Rule::NegativeSize], &ctx(1)), 3);
    }

    #[test]
    fn orbits() {
        assert!(single_orbit([(1, 2), (2, 3), (3, 1)].into_iter(), 3));
        assert!(!single_orbit([(1, 1), (2, 3), (3, 2)].into_iter(), 3));
        assert!(!single_orbit([(1, 2), (2, 2)].into_iter(), 2));
    }
}
