//! Canonical keys for isomorph rejection.
//!
//! Two rotation systems get the same key exactly when one is obtained from
//! the other by renaming vertices and edges, cyclically shifting rotations,
//! and possibly reversing every rotation at once. The key of a connected
//! component is the lexicographically least code of a breadth-first
//! traversal over all root darts and both orientations; the code records the
//! traversal numbers of each dart's twin and rotation successor, so it
//! determines the map up to isomorphism. Components are sorted.

use super::embedded::EmbeddedGraph;
use super::rotation::{Dart, RotationSystem};
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey(pub Vec<u32>);

/// Per-vertex, per-edge and per-dart integer decorations to include in a key.
#[derive(Clone, Copy, Debug)]
pub struct Tags<'a> {
    pub vertex: &'a [u32],
    pub edge: &'a [u32],
    pub dart: &'a [u32],
}

const FIELDS: usize = 5;

struct Traversal<'a> {
    map: &'a RotationSystem,
    tags: Tags<'a>,
    number: Vec<u32>,
    order: Vec<Dart>,
}

impl<'a> Traversal<'a> {
    fn new(map: &'a RotationSystem, tags: Tags<'a>) -> Self {
        Self {
            map,
            tags,
            number: vec![u32::MAX; map.dart_count()],
            order: Vec::with_capacity(map.dart_count()),
        }
    }

    fn visit(&mut self, d: Dart) -> u32 {
        if self.number[d] == u32::MAX {
            self.number[d] = self.order.len() as u32;
            self.order.push(d);
        }
        self.number[d]
    }

    /// Writes the code rooted at `root` into `out`, stopping early once it is
    /// known to exceed `best`. Returns the comparison with `best`.
    fn run(&mut self, root: Dart, reflect: bool, best: Option<&[u32]>, out: &mut Vec<u32>) -> Ordering {
        for &d in &self.order {
            self.number[d] = u32::MAX;
        }
        self.order.clear();
        out.clear();
        self.visit(root);
        let mut state = Ordering::Equal;
        let mut i = 0;
        while i < self.order.len() {
            let d = self.order[i];
            let rot = if reflect { self.map.pred(d) } else { self.map.succ(d) };
            let t = self.visit(self.map.twin(d));
            let r = self.visit(rot);
            let fields = [
                t,
                r,
                self.tags.dart[d],
                self.tags.edge[self.map.edge_of(d)],
                self.tags.vertex[self.map.vertex_of(d)],
            ];
            for f in fields {
                if state == Ordering::Equal {
                    if let Some(b) = best {
                        state = f.cmp(&b[out.len()]);
                        if state == Ordering::Greater {
                            return state;
                        }
                    }
                }
                out.push(f);
            }
            i += 1;
        }
        if best.is_none() {
            Ordering::Less
        } else {
            state
        }
    }
}

/// Canonical key of a decorated rotation system.
pub fn canonical_key(map: &RotationSystem, tags: Tags<'_>) -> CanonicalKey {
    let mut codes: Vec<Vec<u32>> = Vec::new();
    let mut trav = Traversal::new(map, tags);
    for comp in map.components() {
        let darts: Vec<Dart> = comp
            .iter()
            .flat_map(|&v| map.rotation(v).iter().copied())
            .collect();
        if darts.is_empty() {
            codes.push(vec![0, tags.vertex[comp[0]]]);
            continue;
        }
        let mut best: Vec<u32> = Vec::new();
        let mut scratch = Vec::with_capacity(darts.len() * FIELDS);
        for &root in &darts {
            for reflect in [false, true] {
                let cmp = trav.run(
                    root,
                    reflect,
                    (!best.is_empty()).then_some(best.as_slice()),
                    &mut scratch,
                );
                if cmp == Ordering::Less {
                    std::mem::swap(&mut best, &mut scratch);
                }
            }
        }
        let mut code = vec![1, darts.len() as u32];
        code.extend(best);
        codes.push(code);
    }
    codes.sort();
    let mut key = vec![codes.len() as u32];
    for c in codes {
        key.push(c.len() as u32);
        key.extend(c);
    }
    CanonicalKey(key)
}

/// Key of an undecorated rotation system.
pub fn map_key(map: &RotationSystem) -> CanonicalKey {
    let v = vec![0; map.vertex_count()];
    let e = vec![0; map.edge_count()];
    let d = vec![0; map.dart_count()];
    canonical_key(
        map,
        Tags {
            vertex: &v,
            edge: &e,
            dart: &d,
        },
    )
}

/// Key of a labeled graph: includes parities, edge signs and sizes, dart
/// labels and the label frame.
pub fn graph_key(g: &EmbeddedGraph) -> CanonicalKey {
    let map = g.map();
    let v: Vec<u32> = g
        .vertices()
        .iter()
        .map(|x| u32::from(!x.parity.is_plus()))
        .collect();
    let e: Vec<u32> = g
        .edges()
        .iter()
        .map(|x| 2 * x.size + u32::from(!x.sign.is_plus()))
        .collect();
    let d: Vec<u32> = (0..map.dart_count())
        .map(|x| g.label_at(x).unwrap_or(0))
        .collect();
    let CanonicalKey(body) = canonical_key(
        map,
        Tags {
            vertex: &v,
            edge: &e,
            dart: &d,
        },
    );
    let (delta, modulus) = g.frame().map_or((0, 0), |f| (f.delta, f.modulus));
    let mut key = vec![delta, modulus];
    key.extend(body);
    CanonicalKey(key)
}
