//! Predicates for the combinatorial rules that intersection graph pairs obey.
//!
//! Each check returns a [`ConstraintVerdict`]; a violated verdict carries a
//! human-readable witness. The certifier uses the same predicates as
//! pruning rules, so every rule here is also exercised by the search.

use crate::error::ConstraintError;
use crate::graph::{Dart, EmbeddedGraph, FatVertex, ParallelFamily, Sign};
use crate::homology;
use crate::perms::{edge_orbit_subgraph, induced_permutation, orbit_count};
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintVerdict {
    pub name: String,
    pub satisfied: bool,
    /// Present exactly when the constraint is violated.
    pub witness: Option<String>,
}

impl ConstraintVerdict {
    pub fn satisfied(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            satisfied: true,
            witness: None,
        }
    }

    pub fn violated(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            satisfied: false,
            witness: Some(witness.into()),
        }
    }

    /// Satisfied when `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::satisfied(name),
            Some(w) => Self::violated(name, w),
        }
    }
}

/// An edge is positive in one graph iff it is negative in the other.
pub fn check_parity_rule(edge: usize, sign_in_s: Sign, sign_in_t: Sign) -> ConstraintVerdict {
    const NAME: &str = "parity-rule";
    if sign_in_s == -sign_in_t {
        ConstraintVerdict::satisfied(NAME)
    } else {
        ConstraintVerdict::violated(
            NAME,
            format!("edge {edge} has sign {sign_in_s} in S and {sign_in_t} in T"),
        )
    }
}

/// The parity rule over every edge of a pair of graphs sharing edge ids.
/// A single bad edge rejects the whole pairing.
pub fn check_parity_pairing(gs: &EmbeddedGraph, gt: &EmbeddedGraph) -> ConstraintVerdict {
    if gs.edge_count() != gt.edge_count() {
        return ConstraintVerdict::violated(
            "parity-rule",
            format!("{} edges in S but {} in T", gs.edge_count(), gt.edge_count()),
        );
    }
    (0..gs.edge_count())
        .map(|e| check_parity_rule(e, gs.sign(e), gt.sign(e)))
        .find(|v| !v.satisfied)
        .unwrap_or_else(|| ConstraintVerdict::satisfied("parity-rule"))
}

/// No two edges lie in a common parallel family in both graphs. Edge ids are
/// shared between `gs` and `gt`.
pub fn check_no_double_parallel(gs: &EmbeddedGraph, gt: &EmbeddedGraph) -> ConstraintVerdict {
    family_pairs_disjoint(&gs.parallel_families(), &gt.parallel_families())
}

/// Same as [`check_no_double_parallel`] on precomputed families.
pub fn family_pairs_disjoint(s_families: &[ParallelFamily], t_families: &[ParallelFamily]) -> ConstraintVerdict {
    const NAME: &str = "no-double-parallel";
    let mut s_of: HashMap<usize, usize> = HashMap::new();
    for (i, f) in s_families.iter().enumerate() {
        for &e in &f.edges {
            s_of.insert(e, i);
        }
    }
    for (j, f) in t_families.iter().enumerate() {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for &e in &f.edges {
            if let Some(&i) = s_of.get(&e) {
                if let Some(prev) = seen.insert(i, e) {
                    return ConstraintVerdict::violated(
                        NAME,
                        format!("edges {prev} and {e} share S family {i} and T family {j}"),
                    );
                }
            }
        }
    }
    ConstraintVerdict::satisfied(NAME)
}

/// Size limit for positive families when the partner has `t ≥ 3` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveBound {
    pub t: u32,
    /// `None` when `t < 3` and no bound applies.
    pub bound: Option<u32>,
}

pub fn positive_size_bound(t: u32) -> PositiveBound {
    PositiveBound {
        t,
        bound: (t >= 3).then_some(t),
    }
}

impl PositiveBound {
    /// The size part of the rule: at most `t`, and `t` even at equality.
    pub fn check_size(&self, size: u32) -> ConstraintVerdict {
        const NAME: &str = "positive-size-bound";
        match self.bound {
            None => ConstraintVerdict::satisfied(NAME),
            Some(b) if size > b => {
                ConstraintVerdict::violated(NAME, format!("positive family of size {size} exceeds {b}"))
            }
            Some(b) if size == b && b % 2 == 1 => ConstraintVerdict::violated(
                NAME,
                format!("positive family of size {size} = t with t odd"),
            ),
            Some(_) => ConstraintVerdict::satisfied(NAME),
        }
    }

    /// The full rule for a positive family of `own` against its partner
    /// graph: the size check, and at size `t` the edge orbits form `t/2`
    /// disjoint 2-cycles and some vertex of the reduced partner has at most
    /// two incident positive nonloop edges.
    pub fn check_family(&self, family: &ParallelFamily, partner: &EmbeddedGraph) -> ConstraintVerdict {
        const NAME: &str = "positive-size-bound";
        let v = self.check_size(family.size);
        if !v.satisfied || self.bound != Some(family.size) {
            return v;
        }
        let orbits = edge_orbit_subgraph(family, partner.map());
        let t = self.t as usize;
        let two_cycles = orbits.len() == t / 2
            && orbits
                .iter()
                .all(|o| o.vertices.len() == 2 && o.edges.len() == 2);
        if !two_cycles {
            return ConstraintVerdict::violated(
                NAME,
                format!("edge orbits of a positive family of size {t} are not {} two-cycles", t / 2),
            );
        }
        let reduced = partner.reduce();
        let mut counts = vec![0usize; reduced.vertex_count()];
        for e in reduced.edges() {
            if e.sign.is_plus() && !e.is_loop() {
                counts[e.ends[0].vertex] += 1;
                counts[e.ends[1].vertex] += 1;
            }
        }
        if counts.iter().any(|&c| c <= 2) {
            ConstraintVerdict::satisfied(NAME)
        } else {
            ConstraintVerdict::violated(
                NAME,
                "every reduced partner vertex has three or more positive nonloop edges",
            )
        }
    }
}

/// Size limit for negative families: at most `t + 1` unless the manifold is
/// one of the exceptional gluings, which is then decided by homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeBound {
    pub t: u32,
    pub bound: u32,
    pub allow_exceptional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NegativeSize {
    Within,
    /// Size at least `t + 2`; only the exceptional gluings allow it, and
    /// those realize exactly these distances.
    Exceptional { distances: Vec<u64> },
}

pub fn negative_size_bound(t: u32, allow_exceptional: bool) -> NegativeBound {
    NegativeBound {
        t,
        bound: t + 1,
        allow_exceptional,
    }
}

impl NegativeBound {
    pub fn classify(&self, size: u32) -> NegativeSize {
        if size <= self.bound {
            NegativeSize::Within
        } else {
            NegativeSize::Exceptional {
                distances: homology::exceptional_distances(),
            }
        }
    }

    /// Verdict for a family of `size` when the slopes are at distance
    /// `delta`.
    pub fn check(&self, size: u32, delta: u32) -> ConstraintVerdict {
        const NAME: &str = "negative-size-bound";
        match self.classify(size) {
            NegativeSize::Within => ConstraintVerdict::satisfied(NAME),
            NegativeSize::Exceptional { .. } if !self.allow_exceptional => ConstraintVerdict::violated(
                NAME,
                format!(
                    "negative family of size {size} > {}; only exceptional gluings allow this",
                    self.bound
                ),
            ),
            NegativeSize::Exceptional { distances } => {
                if distances.contains(&u64::from(delta)) {
                    ConstraintVerdict::satisfied(NAME)
                } else {
                    ConstraintVerdict::violated(
                        NAME,
                        format!(
                            "negative family of size {size} > {} needs an exceptional gluing, \
                             whose distances {distances:?} exclude {delta}",
                            self.bound
                        ),
                    )
                }
            }
        }
    }
}

/// Consequences of a negative family of size at least `t + 1`: the partner
/// is polarized, any `t` consecutive edges have a single edge orbit, and
/// every disk face of the graph carrying the family is even sided.
///
/// The face condition is checked when `own` is a cellular torus map (so all
/// faces are disks); polarization when `partner` is given.
pub fn polarization_consequences(
    family: &ParallelFamily,
    t: u32,
    own: Option<&EmbeddedGraph>,
    partner: Option<&EmbeddedGraph>,
) -> ConstraintVerdict {
    const NAME: &str = "negative-family-polarization";
    if family.sign.is_plus() || family.size < t + 1 {
        return ConstraintVerdict::satisfied(NAME);
    }
    if let Some(p) = partner {
        if !p.is_polarized() {
            return ConstraintVerdict::violated(
                NAME,
                format!("negative family of size {} but the partner is not polarized", family.size),
            );
        }
    }
    if t >= 2 {
        match induced_permutation(family, t) {
            Ok(p) => {
                let n = orbit_count(&p).count;
                if n != 1 {
                    return ConstraintVerdict::violated(
                        NAME,
                        format!(
                            "induced permutation x ↦ x + {} mod {t} has {n} orbits, not one",
                            p.alpha()
                        ),
                    );
                }
            }
            Err(e) => return ConstraintVerdict::violated(NAME, e.to_string()),
        }
    }
    if let Some(g) = own {
        if g.surface().is_cellular_torus() {
            if let Some(f) = g.faces().iter().find(|f| f.sides() % 2 == 1) {
                return ConstraintVerdict::violated(
                    NAME,
                    format!("face with {} sides is not even sided", f.sides()),
                );
            }
        }
    }
    ConstraintVerdict::satisfied(NAME)
}

/// A bigon between two consecutive positive parallel edges whose endpoints
/// carry the labels `j` and `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SCycle {
    /// Index into [`EmbeddedGraph::faces`].
    pub face: usize,
    pub darts: [Dart; 2],
    /// The type `{j, j+1}`, reported as `j`: the string holding its corners.
    pub string: u32,
}

pub fn detect_s_cycles(g: &EmbeddedGraph) -> Vec<SCycle> {
    let Some(frame) = g.frame() else {
        return Vec::new();
    };
    let n = frame.modulus;
    let map = g.map();
    let mut out = Vec::new();
    for (i, face) in g.faces().iter().enumerate() {
        let [x, y] = face.darts[..] else { continue };
        let (ex, ey) = (map.edge_of(x), map.edge_of(y));
        if ex == ey || !g.sign(ex).is_plus() || !g.sign(ey).is_plus() {
            continue;
        }
        let ends = |d: Dart| -> Option<(u32, u32)> {
            let (a, b) = (g.label_at(d)?, g.label_at(map.twin(d))?);
            Some((a.min(b), a.max(b)))
        };
        let (Some(lx), Some(ly)) = (ends(x), ends(y)) else { continue };
        let Some(j) = face.corners[0].string else { continue };
        let next = crate::graph::normalize_label(i64::from(j) + 1, n);
        let want = (j.min(next), j.max(next));
        if j != next && lx == want && ly == want && face.corners[1].string == Some(j) {
            out.push(SCycle {
                face: i,
                darts: [x, y],
                string: j,
            });
        }
    }
    out
}

/// For `Δ = 6`: the `Δ` points shared by a vertex pair appear in the same
/// cyclic order around both vertices, up to reflection.
///
/// `incidence` lists, for each shared point, its slot at `u` and at `v`.
pub fn check_jn1(
    delta: u32,
    u: &FatVertex,
    v: &FatVertex,
    incidence: &[(usize, usize)],
) -> Result<ConstraintVerdict, ConstraintError> {
    const NAME: &str = "jumping-number-one";
    if delta != 6 {
        return Err(ConstraintError::WrongDelta(delta));
    }
    let k = incidence.len();
    if k != 6 {
        return Ok(ConstraintVerdict::violated(NAME, format!("{k} shared points instead of 6")));
    }
    if incidence
        .iter()
        .any(|&(a, b)| a >= u.degree() || b >= v.degree())
    {
        return Ok(ConstraintVerdict::violated(NAME, "slot out of range"));
    }
    let mut pts = incidence.to_vec();
    pts.sort_unstable();
    let mut v_slots: Vec<usize> = pts.iter().map(|p| p.1).collect();
    v_slots.sort_unstable();
    let rank: Vec<usize> = pts
        .iter()
        .map(|p| v_slots.binary_search(&p.1).expect("present"))
        .collect();
    let shift_ok = |dir: isize| {
        let c = rank[0] as isize;
        (0..k).all(|i| rank[i] as isize == (c + dir * i as isize).rem_euclid(k as isize))
    };
    Ok(if shift_ok(1) || shift_ok(-1) {
        ConstraintVerdict::satisfied(NAME)
    } else {
        ConstraintVerdict::violated(NAME, format!("order around v is {rank:?}"))
    })
}

/// Degree and face facts for reduced cellular torus graphs: (a) minimum
/// degree at least 6 forces every degree to be 6 and every face a
/// triangle; (b) with no triangles some vertex has degree at most 4.
pub fn lemma_3v_check(g: &EmbeddedGraph) -> Result<ConstraintVerdict, ConstraintError> {
    const NAME: &str = "reduced-torus-degrees";
    g.check_torus()?;
    let map = g.map();
    let degrees = map.degrees();
    let min = degrees.iter().copied().min().unwrap_or(0);
    let faces = map.faces();
    if min >= 6 {
        if let Some(v) = degrees.iter().position(|&d| d != 6) {
            return Ok(ConstraintVerdict::violated(
                NAME,
                format!("min degree ≥ 6 but vertex {v} has degree {}", degrees[v]),
            ));
        }
        if let Some(f) = faces.iter().find(|f| f.len() != 3) {
            return Ok(ConstraintVerdict::violated(
                NAME,
                format!("min degree ≥ 6 but a face has {} sides", f.len()),
            ));
        }
    }
    if faces.iter().all(|f| f.len() != 3) && min > 4 {
        return Ok(ConstraintVerdict::violated(
            NAME,
            format!("no triangle faces but min degree is {min}"),
        ));
    }
    Ok(ConstraintVerdict::satisfied(NAME))
}

/// Number of positive and negative local edges at each vertex of a graph.
pub fn vertex_types(g: &EmbeddedGraph) -> Vec<(usize, usize)> {
    let map = g.map();
    (0..g.vertex_count())
        .map(|v| {
            let p = map
                .rotation(v)
                .iter()
                .filter(|&&d| g.sign(map.edge_of(d)).is_plus())
                .count();
            (p, map.degree(v) - p)
        })
        .collect()
}

/// All vertices of a reduced graph share one type `(p, n)`.
pub fn check_type_uniformity(g: &EmbeddedGraph) -> ConstraintVerdict {
    const NAME: &str = "uniform-vertex-type";
    let types = vertex_types(g);
    match types.iter().position(|t| *t != types[0]) {
        None => ConstraintVerdict::satisfied(NAME),
        Some(v) => ConstraintVerdict::violated(
            NAME,
            format!("vertex 0 has type {:?} but vertex {v} has type {:?}", types[0], types[v]),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, EdgeSpec, LabelFrame, RotationSystem};
    use crate::perms::InducedPermutation;

    #[test]
    fn parity_rule() {
        assert!(check_parity_rule(0, Sign::Plus, Sign::Minus).satisfied);
        // A loop in S is positive, so a positive T sign breaks the rule.
        let v = check_parity_rule(3, Sign::Plus, Sign::Plus);
        assert!(!v.satisfied);
        assert!(v.witness.unwrap().contains("edge 3"));
    }

    #[test]
    fn parity_pairing_is_all_or_nothing() {
        let gs = EmbeddedGraph::polarized(RotationSystem::from_word("abab").unwrap());
        let good = EmbeddedGraph::from_rotation(
            RotationSystem::from_words(&["ab", "ab"]).unwrap(),
            &[Sign::Plus, Sign::Minus],
        );
        assert!(check_parity_pairing(&gs, &good).satisfied);
        let bad = EmbeddedGraph::from_rotation(
            RotationSystem::from_rotations(vec![vec![0, 2], vec![1, 3]]).unwrap(),
            &[Sign::Plus, Sign::Plus],
        );
        assert!(!check_parity_pairing(&gs, &bad).satisfied);
    }

    fn two_vertex_family(n: usize) -> EmbeddedGraph {
        // n parallel edges between two vertices on a sphere.
        let a: Vec<usize> = (0..n).map(|k| 2 * k).collect();
        let b: Vec<usize> = (0..n).rev().map(|k| 2 * k + 1).collect();
        EmbeddedGraph::polarized(RotationSystem::from_rotations(vec![a, b]).unwrap())
    }

    #[test]
    fn double_parallel() {
        let single = EmbeddedGraph::polarized(RotationSystem::from_word("aa").unwrap());
        assert!(check_no_double_parallel(&single, &single).satisfied);
        // Parallel in S; in T the two edges join different vertex pairs.
        let gs = two_vertex_family(2);
        let gt = EmbeddedGraph::polarized(
            RotationSystem::from_rotations(vec![vec![0], vec![1, 2], vec![3]]).unwrap(),
        );
        assert_eq!(gs.parallel_families().len(), 1);
        assert!(check_no_double_parallel(&gs, &gt).satisfied);
        let both = two_vertex_family(3);
        assert!(!check_no_double_parallel(&both, &both).satisfied);
    }

    #[test]
    fn positive_bound() {
        let b = positive_size_bound(4);
        assert!(b.check_size(4).satisfied);
        assert!(!b.check_size(5).satisfied);
        assert!(!positive_size_bound(5).check_size(5).satisfied);
        assert!(positive_size_bound(5).check_size(4).satisfied);
        assert_eq!(positive_size_bound(2).bound, None);
        for t in 3..10 {
            assert!(positive_size_bound(t).bound <= positive_size_bound(t + 1).bound);
        }
    }

    #[test]
    fn positive_family_structure() {
        // Partner: four vertices, the family's edges forming two 2-cycles
        // {1,4} and {2,3} under x ↦ 1 − x mod 4.
        let p = InducedPermutation::reflection(4, 1).unwrap();
        let mut rots = vec![Vec::new(); 4];
        for x in 1..=4u32 {
            let k = (x - 1) as usize;
            rots[k].push(2 * k);
            rots[(p.apply(x) - 1) as usize].push(2 * k + 1);
        }
        let partner = EmbeddedGraph::from_rotation(
            RotationSystem::from_rotations(rots).unwrap(),
            &[Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus],
        );
        let family = ParallelFamily {
            edges: vec![0, 1, 2, 3],
            darts: vec![0, 2, 4, 6],
            size: 4,
            sign: Sign::Plus,
            endpoints: (0, 0),
            cyclic: false,
            label_seq_a: (1..=4).map(Some).collect(),
            label_seq_b: (1..=4).map(|x| Some(p.apply(x))).collect(),
        };
        let orbits = edge_orbit_subgraph(&family, partner.map());
        assert_eq!(orbits.len(), 2);
        assert!(positive_size_bound(4).check_family(&family, &partner).satisfied);
    }

    #[test]
    fn negative_bound() {
        let b = negative_size_bound(2, false);
        assert!(b.check(3, 6).satisfied);
        assert!(!b.check(4, 6).satisfied);
        assert!(matches!(b.classify(4), NegativeSize::Exceptional { .. }));
        let ex = negative_size_bound(2, true);
        assert!(!ex.check(4, 6).satisfied);
        assert!(ex.check(4, 4).satisfied);
        assert!(negative_size_bound(1, false).check(2, 6).satisfied);
    }

    fn negative_family(t: u32, alpha: u32, size: u32) -> ParallelFamily {
        let p = InducedPermutation::translation(t, i64::from(alpha)).unwrap();
        let a: Vec<u32> = (0..size).map(|k| k % t + 1).collect();
        ParallelFamily {
            edges: (0..size as usize).collect(),
            darts: (0..size as usize).map(|k| 2 * k).collect(),
            size,
            sign: Sign::Minus,
            endpoints: (0, 1),
            cyclic: false,
            label_seq_b: a.iter().map(|&x| Some(p.apply(x))).collect(),
            label_seq_a: a.into_iter().map(Some).collect(),
        }
    }

    #[test]
    fn polarization() {
        assert!(!polarization_consequences(&negative_family(6, 4, 7), 6, None, None).satisfied);
        assert!(polarization_consequences(&negative_family(6, 1, 7), 6, None, None).satisfied);
        assert!(polarization_consequences(&negative_family(1, 0, 2), 1, None, None).satisfied);
        let neutral = EmbeddedGraph::from_rotation(
            RotationSystem::from_words(&["a", "a"]).unwrap(),
            &[Sign::Plus, Sign::Minus],
        );
        assert!(
            !polarization_consequences(&negative_family(6, 1, 7), 6, None, Some(&neutral)).satisfied
        );
    }

    fn labeled_family(t: u32, seq: &[(u32, u32)]) -> EmbeddedGraph {
        // Two vertices, the given label pairs on parallel edges, closing up
        // on a sphere. Both vertices have the same parity, so the edges are
        // positive.
        let n = seq.len();
        let u = FatVertex::new(Sign::Plus, seq.iter().map(|p| Some(p.0)).collect());
        let v = FatVertex::new(Sign::Plus, seq.iter().rev().map(|p| Some(p.1)).collect());
        let edges = (0..n)
            .map(|k| EdgeSpec::between((0, k), (1, n - 1 - k)))
            .collect();
        let frame = LabelFrame {
            delta: (n as u32) / t,
            modulus: t,
        };
        build_graph(vec![u, v], edges, Some(frame)).unwrap()
    }

    #[test]
    fn s_cycles() {
        let g = labeled_family(2, &[(1, 2), (2, 1), (1, 2), (2, 1)]);
        let found = detect_s_cycles(&g);
        // The family closes up into four bigons; all have type {1,2} or
        // {2,1} as strings.
        assert_eq!(found.len(), 4);
        let g = labeled_family(4, &[(1, 2), (2, 1), (3, 4), (4, 3)]);
        assert_eq!(detect_s_cycles(&g).len(), 2);
    }

    #[test]
    fn s_cycles_need_consecutive_labels() {
        let g = labeled_family(4, &[(1, 3), (2, 4), (3, 1), (4, 2)]);
        assert!(detect_s_cycles(&g).is_empty());
    }

    #[test]
    fn jn1() {
        let u = FatVertex::unlabeled(Sign::Plus, 12);
        let v = FatVertex::unlabeled(Sign::Plus, 12);
        let same: Vec<(usize, usize)> = (0..6).map(|k| (2 * k, 2 * k + 1)).collect();
        assert!(check_jn1(6, &u, &v, &same).unwrap().satisfied);
        let rev: Vec<(usize, usize)> = (0..6).map(|k| (2 * k, 11 - 2 * k)).collect();
        assert!(check_jn1(6, &u, &v, &rev).unwrap().satisfied);
        let shifted: Vec<(usize, usize)> = (0..6).map(|k| (2 * k, (2 * k + 6) % 12)).collect();
        assert!(check_jn1(6, &u, &v, &shifted).unwrap().satisfied);
        let order = [0, 2, 1, 3, 4, 5];
        let scrambled: Vec<(usize, usize)> = (0..6).map(|k| (2 * k, 2 * order[k])).collect();
        assert!(!check_jn1(6, &u, &v, &scrambled).unwrap().satisfied);
        assert_eq!(check_jn1(5, &u, &v, &same), Err(ConstraintError::WrongDelta(5)));
    }

    #[test]
    fn three_vertex_facts() {
        let tri = EmbeddedGraph::polarized(RotationSystem::from_word("abcabc").unwrap());
        assert!(lemma_3v_check(&tri).unwrap().satisfied);
        let sq = EmbeddedGraph::polarized(RotationSystem::from_word("abab").unwrap());
        assert!(lemma_3v_check(&sq).unwrap().satisfied);
        let sphere = EmbeddedGraph::polarized(RotationSystem::from_word("aabb").unwrap());
        assert!(matches!(lemma_3v_check(&sphere), Err(ConstraintError::Graph(_))));
    }

    #[test]
    fn types() {
        let g = EmbeddedGraph::from_rotation(
            RotationSystem::from_words(&["abac", "bc"]).unwrap(),
            &[Sign::Plus, Sign::Minus],
        );
        assert_eq!(vertex_types(&g), vec![(2, 2), (0, 2)]);
        assert!(!check_type_uniformity(&g).satisfied);
    }
}
