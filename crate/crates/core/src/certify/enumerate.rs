//! Enumeration of reduced cellular torus maps.
//!
//! A map with a fixed degree sequence is a perfect matching on the vertex
//! slots. The search matches one slot at a time, always extending the
//! longest partially traced face, and prunes as soon as a face closes with
//! fewer than three sides, grows past the longest length the Euler relation
//! allows, or the closed faces outnumber `E − V`. Survivors are deduplicated
//! by canonical key.

use crate::error::CertifyError;
use crate::graph::{map_key, CanonicalKey, RotationSystem, SlotRef};
use std::collections::BTreeMap;

/// Which degree sequences to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeSpec {
    /// Every vertex has this degree.
    Regular(usize),
    /// Exactly this multiset of degrees.
    Sequence(Vec<usize>),
    /// All degree sequences with at most this many edges.
    UpToEdges(usize),
}

/// One representative per isomorphism class of connected maps whose faces
/// all have at least three sides and which cellularly embed in the torus,
/// sorted by canonical key.
pub fn enumerate_reduced_graphs(
    vertices: usize,
    spec: &DegreeSpec,
    max_vertices: usize,
) -> Result<Vec<RotationSystem>, CertifyError> {
    if vertices > max_vertices {
        return Err(CertifyError::ScaleLimit {
            which: "s",
            value: vertices as u32,
            cap: max_vertices as u32,
        });
    }
    if vertices == 0 {
        return Ok(Vec::new());
    }
    let sequences: Vec<Vec<usize>> = match spec {
        DegreeSpec::Regular(d) => vec![vec![*d; vertices]],
        DegreeSpec::Sequence(seq) => {
            if seq.len() != vertices {
                return Err(CertifyError::InvalidParams(format!(
                    "degree sequence has {} entries for {vertices} vertices",
                    seq.len()
                )));
            }
            let mut s = seq.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            vec![s]
        }
        DegreeSpec::UpToEdges(max_e) => {
            let mut all = Vec::new();
            for e in 1..=*max_e {
                partitions(2 * e, vertices, 2 * e, &mut Vec::new(), &mut all);
            }
            all
        }
    };
    let mut found: BTreeMap<CanonicalKey, RotationSystem> = BTreeMap::new();
    for seq in sequences {
        for m in search(&seq) {
            found.entry(map_key(&m)).or_insert(m);
        }
    }
    Ok(found.into_values().collect())
}

/// Nonincreasing sequences of `parts` positive integers summing to `total`,
/// each at most `max`.
fn partitions(total: usize, parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 0 {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let hi = max.min(total.saturating_sub(parts - 1));
    for d in (1..=hi).rev() {
        if d * parts < total {
            break;
        }
        cur.push(d);
        partitions(total - d, parts - 1, d, cur, out);
        cur.pop();
    }
}

const NONE: usize = usize::MAX;

struct Search {
    vertex: Vec<usize>,
    offset: Vec<usize>,
    degree: Vec<usize>,
    mate: Vec<usize>,
    faces_needed: usize,
    max_face: usize,
    closed: usize,
    out: Vec<RotationSystem>,
}

impl Search {
    fn succ(&self, x: usize) -> usize {
        let v = self.vertex[x];
        let o = self.offset[v];
        o + (x - o + 1) % self.degree[v]
    }

    fn pred(&self, x: usize) -> usize {
        let v = self.vertex[x];
        let o = self.offset[v];
        o + (x - o + self.degree[v] - 1) % self.degree[v]
    }

    /// Length of the traced face through `x` and whether it is closed.
    fn trace(&self, x: usize) -> (usize, bool) {
        let mut len = 1;
        let mut d = x;
        while self.mate[d] != NONE {
            d = self.succ(self.mate[d]);
            if d == x {
                return (len, true);
            }
            len += 1;
        }
        // Walk backwards from x as well.
        let mut d = x;
        loop {
            let p = self.pred(d);
            if self.mate[p] == NONE {
                break;
            }
            d = self.mate[p];
            len += 1;
        }
        (len, false)
    }

    /// Number of matched darts leading into the unmatched dart `x`.
    fn back_len(&self, x: usize) -> usize {
        let mut len = 0;
        let mut d = x;
        loop {
            let p = self.pred(d);
            if self.mate[p] == NONE {
                return len;
            }
            d = self.mate[p];
            len += 1;
            if d == x {
                return len;
            }
        }
    }

    /// Faces through newly matched darts; `None` when a bound is broken,
    /// otherwise the number of faces closed by this step.
    fn check(&self, a: usize, b: usize) -> Option<usize> {
        let mut newly = 0;
        let mut seen_closed: Vec<usize> = Vec::new();
        for x in [a, b, self.succ(a), self.succ(b)] {
            let (len, closed) = self.trace(x);
            if closed {
                if len < 3 || len > self.max_face {
                    return None;
                }
                // Identify the face by its smallest dart to avoid double counts.
                let mut m = x;
                let mut d = self.succ(self.mate[x]);
                while d != x {
                    m = m.min(d);
                    d = self.succ(self.mate[d]);
                }
                if !seen_closed.contains(&m) {
                    seen_closed.push(m);
                    newly += 1;
                }
            } else if len > self.max_face {
                return None;
            }
        }
        Some(newly)
    }

    fn run(&mut self) {
        let n = self.mate.len();
        let pick = (0..n)
            .filter(|&x| self.mate[x] == NONE)
            .max_by_key(|&x| (self.back_len(x), std::cmp::Reverse(x)));
        let Some(a) = pick else {
            self.leaf();
            return;
        };
        for b in 0..n {
            if b == a || self.mate[b] != NONE {
                continue;
            }
            self.mate[a] = b;
            self.mate[b] = a;
            if let Some(k) = self.check(a, b) {
                if self.closed + k <= self.faces_needed {
                    self.closed += k;
                    self.run();
                    self.closed -= k;
                }
            }
            self.mate[a] = NONE;
            self.mate[b] = NONE;
        }
    }

    fn leaf(&mut self) {
        if self.closed != self.faces_needed {
            return;
        }
        let map = self.to_map();
        if map.components().len() == 1 {
            self.out.push(map);
        }
    }

    fn to_map(&self) -> RotationSystem {
        let slot = |x: usize| SlotRef::new(self.vertex[x], x - self.offset[self.vertex[x]]);
        let pairs: Vec<(SlotRef, SlotRef)> = (0..self.mate.len())
            .filter(|&x| x < self.mate[x])
            .map(|x| (slot(x), slot(self.mate[x])))
            .collect();
        RotationSystem::from_slot_pairs(&self.degree, &pairs).expect("complete matching")
    }
}

fn setup(degrees: &[usize]) -> Option<Search> {
    let total: usize = degrees.iter().sum();
    if total % 2 == 1 || degrees.contains(&0) {
        return None;
    }
    let (v, e) = (degrees.len(), total / 2);
    // Genus one: V − E + F = 0, and every face has at least three sides.
    if e < v + 1 || 3 * (e - v) > 2 * e {
        return None;
    }
    let f = e - v;
    let mut vertex = Vec::with_capacity(total);
    let mut offset = Vec::with_capacity(v);
    for (i, &d) in degrees.iter().enumerate() {
        offset.push(vertex.len());
        vertex.extend(std::iter::repeat_n(i, d));
    }
    Some(Search {
        vertex,
        offset,
        degree: degrees.to_vec(),
        mate: vec![NONE; total],
        faces_needed: f,
        max_face: 2 * e - 3 * (f - 1),
        closed: 0,
        out: Vec::new(),
    })
}

fn search(degrees: &[usize]) -> Vec<RotationSystem> {
    match setup(degrees) {
        Some(mut s) => {
            s.run();
            s.out
        }
        None => Vec::new(),
    }
}

/// True for connected maps on the torus whose faces all have at least three
/// sides.
pub fn is_reduced_torus_map(m: &RotationSystem) -> bool {
    m.surface().is_cellular_torus() && m.faces().iter().all(|f| f.len() >= 3)
}
