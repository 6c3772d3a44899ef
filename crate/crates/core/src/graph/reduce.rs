//! Parallel families and reduced graphs.
//!
//! Two distinct edges are parallel when they cobound a bigon face. Chains of
//! such bigons form maximal families; the reduced graph keeps one edge per
//! family and records the family size on it.

use super::embedded::{Edge, EdgeEnd, EmbeddedGraph, FatVertex};
use super::rotation::{Dart, RotationSystem};
use super::Sign;
use serde::Serialize;

/// A maximal family of mutually parallel, consecutive edges.
///
/// Orientation: `darts[i]` is the end of the `i`-th member at the first
/// endpoint; consecutive entries are consecutive in that vertex's rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParallelFamily {
    /// Member edges (indices in the graph the family was computed from).
    pub edges: Vec<usize>,
    pub darts: Vec<Dart>,
    /// Total size: the sum of member sizes.
    pub size: u32,
    pub sign: Sign,
    pub endpoints: (usize, usize),
    /// True when the bigons close up into a full cycle around both endpoints.
    pub cyclic: bool,
    /// Labels at the first endpoint, in rotation order.
    pub label_seq_a: Vec<Option<u32>>,
    /// Labels at the second endpoint, index-aligned with `label_seq_a`.
    pub label_seq_b: Vec<Option<u32>>,
}

impl ParallelFamily {
    pub fn is_loop(&self) -> bool {
        self.endpoints.0 == self.endpoints.1
    }

    /// Label pairs `(a, b)` of the individual parallel edges, when all known.
    pub fn label_pairs(&self) -> Option<Vec<(u32, u32)>> {
        self.label_seq_a
            .iter()
            .zip(&self.label_seq_b)
            .map(|(a, b)| Some(((*a)?, (*b)?)))
            .collect()
    }
}

/// Successor links between parallel darts: `next[d] = d'` when `d` and `d'`
/// are consecutive at a vertex and their edges cobound a bigon.
fn bigon_links(map: &RotationSystem) -> Vec<Option<Dart>> {
    let mut next = vec![None; map.dart_count()];
    for face in map.faces() {
        if let [x, y] = face[..] {
            if map.edge_of(x) != map.edge_of(y) {
                next[map.twin(x)] = Some(y);
                next[map.twin(y)] = Some(x);
            }
        }
    }
    next
}

/// Computes all maximal parallel families, ordered by their first dart.
///
/// On a reduced graph, member edges and darts refer to the graph the
/// reduction started from.
pub fn families(g: &EmbeddedGraph) -> Vec<ParallelFamily> {
    chains(g).into_iter().map(|(_, f)| f).collect()
}

/// Families paired with their first dart in `g` itself.
fn chains(g: &EmbeddedGraph) -> Vec<(Dart, ParallelFamily)> {
    let map = g.map();
    let next = bigon_links(map);
    let mut has_prev = vec![false; map.dart_count()];
    for d in next.iter().flatten() {
        has_prev[*d] = true;
    }
    let mut taken = vec![false; map.edge_count()];
    // Linear chains first start at a dart without predecessor; any edge left
    // over lies in a cyclic family.
    let starts = (0..map.dart_count())
        .filter(|&d| !has_prev[d])
        .chain(0..map.dart_count());
    let mut raw: Vec<(Dart, Vec<Dart>, bool)> = Vec::new();
    for start in starts {
        if taken[map.edge_of(start)] {
            continue;
        }
        let cyclic = has_prev[start];
        let mut chain = Vec::new();
        let mut d = start;
        loop {
            if taken[map.edge_of(d)] {
                break;
            }
            taken[map.edge_of(d)] = true;
            chain.push(d);
            match next[d] {
                Some(n) if n != start => d = n,
                _ => break,
            }
        }
        raw.push((start, chain, cyclic));
    }
    raw.sort_by_key(|(start, _, _)| *start);
    raw.into_iter()
        .map(|(start, darts, cyclic)| (start, build_family(g, darts, cyclic)))
        .collect()
}

fn build_family(g: &EmbeddedGraph, chain: Vec<Dart>, cyclic: bool) -> ParallelFamily {
    let map = g.map();
    let mut edges = Vec::new();
    let mut darts = Vec::new();
    let mut seq_a = Vec::new();
    let mut seq_b = Vec::new();
    let mut cyclic = cyclic;
    for &d in &chain {
        let e = map.edge_of(d);
        // Members that already stand for a family expand into the edges of
        // the graph the first reduction started from.
        match g.edges()[e].family.and_then(|f| g.families().get(f)) {
            Some(inner) if d == 2 * e => {
                edges.extend_from_slice(&inner.edges);
                darts.extend_from_slice(&inner.darts);
                seq_a.extend_from_slice(&inner.label_seq_a);
                seq_b.extend_from_slice(&inner.label_seq_b);
                cyclic |= chain.len() == 1 && inner.cyclic;
            }
            Some(inner) => {
                edges.extend(inner.edges.iter().rev());
                darts.extend(inner.darts.iter().rev().map(|&x| x ^ 1));
                seq_a.extend(inner.label_seq_b.iter().rev());
                seq_b.extend(inner.label_seq_a.iter().rev());
                cyclic |= chain.len() == 1 && inner.cyclic;
            }
            None => {
                edges.push(e);
                darts.push(d);
                seq_a.push(g.label_at(d));
                seq_b.push(g.label_at(map.twin(d)));
            }
        }
    }
    let first = chain[0];
    ParallelFamily {
        size: chain.iter().map(|&d| g.size(map.edge_of(d))).sum(),
        sign: g.sign(map.edge_of(first)),
        endpoints: (map.vertex_of(first), map.vertex_of(map.twin(first))),
        edges,
        darts,
        cyclic,
        label_seq_a: seq_a,
        label_seq_b: seq_b,
    }
}

fn reduce_once(g: &EmbeddedGraph) -> EmbeddedGraph {
    let map = g.map();
    let fams = chains(g);
    let mut new_dart = vec![usize::MAX; map.dart_count()];
    for (i, (first, _)) in fams.iter().enumerate() {
        new_dart[*first] = 2 * i;
        new_dart[map.twin(*first)] = 2 * i + 1;
    }
    let rotations: Vec<Vec<Dart>> = map
        .rotations()
        .iter()
        .map(|r| {
            r.iter()
                .filter_map(|&d| (new_dart[d] != usize::MAX).then_some(new_dart[d]))
                .collect()
        })
        .collect();
    let new_map = RotationSystem::from_rotations(rotations).expect("reduction keeps whole edges");
    let vertices: Vec<FatVertex> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(v, fv)| FatVertex::unlabeled(fv.parity, new_map.degree(v)))
        .collect();
    let edges: Vec<Edge> = fams
        .iter()
        .enumerate()
        .map(|(i, (_, f))| {
            let (a, b) = (2 * i, 2 * i + 1);
            Edge {
                ends: [
                    EdgeEnd::new(new_map.vertex_of(a), new_map.slot_of(a), None),
                    EdgeEnd::new(new_map.vertex_of(b), new_map.slot_of(b), None),
                ],
                sign: f.sign,
                size: f.size,
                family: Some(i),
            }
        })
        .collect();
    EmbeddedGraph {
        map: new_map,
        vertices,
        edges,
        frame: None,
        families: fams.into_iter().map(|(_, f)| f).collect(),
        label_dir: g.label_dir.clone(),
    }
}

fn has_parallel_edges(map: &RotationSystem) -> bool {
    map.faces()
        .iter()
        .any(|f| f.len() == 2 && map.edge_of(f[0]) != map.edge_of(f[1]))
}

/// Amalgamates every maximal parallel family into a single edge carrying
/// the family size. Repeats until no two distinct edges cobound a bigon,
/// so the result is a fixed point and reduction is idempotent.
pub fn reduce_graph(g: &EmbeddedGraph) -> EmbeddedGraph {
    let mut cur = reduce_once(g);
    while has_parallel_edges(cur.map()) {
        cur = reduce_once(&cur);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::embedded::{build_graph, EdgeSpec, LabelFrame};

    fn polarized(words: &[&str]) -> EmbeddedGraph {
        EmbeddedGraph::polarized(RotationSystem::from_words(words).unwrap())
    }

    #[test]
    fn triangulation_is_already_reduced() {
        let g = polarized(&["abcabc"]);
        let r = reduce_graph(&g);
        assert_eq!(r.map(), g.map());
        assert!(r.edges().iter().all(|e| e.size == 1));
    }

    #[test]
    fn parallel_loops_collapse_to_one_family() {
        // Three parallel copies of each loop of the square torus map:
        // rotation a1 a2 a3 b1 b2 b3 a3 a2 a1 b3 b2 b1.
        let g = polarized(&["abcdefcbafed"]);
        let r = reduce_graph(&g);
        assert_eq!(r.edge_count(), 2);
        assert_eq!(r.families().len(), 2);
        assert!(r.families().iter().all(|f| f.size == 3));
        assert_eq!(r.torus_euler_characteristic(), Ok(0));
        assert_eq!(reduce_graph(&r), r);
    }

    #[test]
    fn family_label_sequences() {
        // Two vertices joined by three parallel edges and one loop at each
        // vertex, labeled so the family reads 1,2,3 at u.
        let frame = LabelFrame {
            delta: 1,
            modulus: 4,
        };
        let u = FatVertex::new(Sign::Plus, [1, 2, 3, 4].map(Some).to_vec());
        let v = FatVertex::new(Sign::Plus, [1, 2, 3, 4].map(Some).to_vec());
        // u slots 0,1,2 go to v slots 2,1,0 (parallel); slot 3 of each is
        // joined across as a fourth edge.
        let edges = vec![
            EdgeSpec::between((0, 0), (1, 2)),
            EdgeSpec::between((0, 1), (1, 1)),
            EdgeSpec::between((0, 2), (1, 0)),
            EdgeSpec::between((0, 3), (1, 3)),
        ];
        let g = build_graph(vec![u, v], edges, Some(frame)).unwrap();
        let fams = families(&g);
        let big = fams.iter().find(|f| f.size == 4).expect("one cyclic family");
        assert!(big.cyclic);
        assert_eq!(big.label_pairs().unwrap().len(), 4);
        let r = reduce_graph(&g);
        assert_eq!(r.edge_count(), 1);
        assert_eq!(r.edges()[0].size, 4);
    }

    #[test]
    fn nested_reduction_keeps_labels() {
        let g = polarized(&["abcdefcbafed"]);
        let once = reduce_once(&g);
        let twice = reduce_graph(&once);
        assert_eq!(twice, reduce_graph(&g));
    }
}
