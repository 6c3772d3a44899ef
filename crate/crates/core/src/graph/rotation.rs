//! Rotation systems.
//!
//! A rotation system is the purely combinatorial description of a graph
//! cellularly embedded in a closed orientable surface: every vertex carries a
//! cyclic order of the edge ends ("darts") incident to it. Edge `e` owns the
//! two darts `2e` and `2e + 1`, so the involution pairing the two ends of an
//! edge is `d ^ 1`.
//!
//! Faces are the orbits of `d ↦ succ(twin(d))`, and the genus of the derived
//! surface follows from Euler's relation on each connected component.

use crate::error::GraphError;

/// An edge end. Edge `e` owns darts `2e` and `2e + 1`.
pub type Dart = usize;

/// A `(vertex, slot)` position in a rotation system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlotRef {
    pub vertex: usize,
    pub slot: usize,
}

impl SlotRef {
    pub fn new(vertex: usize, slot: usize) -> Self {
        Self { vertex, slot }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    rotations: Vec<Vec<Dart>>,
    dart_vertex: Vec<usize>,
    dart_slot: Vec<usize>,
}

/// Euler data of one connected component of a rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSurface {
    pub vertices: Vec<usize>,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub genus: i64,
}

/// Euler data of the whole derived surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSummary {
    pub components: Vec<ComponentSurface>,
}

impl SurfaceSummary {
    pub fn euler(&self) -> i64 {
        self.components.iter().map(|c| c.euler).sum()
    }

    /// Total genus: the genus of the connected sum of the component surfaces.
    pub fn genus(&self) -> i64 {
        self.components.iter().map(|c| c.genus).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Connected with a genus-one derived surface, i.e. a cellular torus embedding.
    pub fn is_cellular_torus(&self) -> bool {
        self.is_connected() && self.components[0].genus == 1
    }
}

impl RotationSystem {
    /// Builds a rotation system from explicit cyclic dart orders.
    ///
    /// Every dart `0..2E` must occur exactly once, where `E` is half the total
    /// number of listed darts.
    pub fn from_rotations(rotations: Vec<Vec<Dart>>) -> Result<Self, GraphError> {
        let darts: usize = rotations.iter().map(Vec::len).sum();
        if !darts.is_multiple_of(2) {
            return Err(GraphError::OddDartCount(darts));
        }
        let mut dart_vertex = vec![usize::MAX; darts];
        let mut dart_slot = vec![usize::MAX; darts];
        for (v, rot) in rotations.iter().enumerate() {
            for (slot, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(GraphError::DartOutOfRange { dart: d, darts });
                }
                if dart_vertex[d] != usize::MAX {
                    return Err(GraphError::SlotCollision {
                        vertex: v,
                        slot,
                    });
                }
                dart_vertex[d] = v;
                dart_slot[d] = slot;
            }
        }
        Ok(Self {
            rotations,
            dart_vertex,
            dart_slot,
        })
    }

    /// Builds a rotation system from vertex degrees and edges given as pairs
    /// of slot positions. Edge `i` of `edges` becomes edge `i` of the result,
    /// with dart `2i` at the first position.
    pub fn from_slot_pairs(
        degrees: &[usize],
        edges: &[(SlotRef, SlotRef)],
    ) -> Result<Self, GraphError> {
        let mut rotations: Vec<Vec<Dart>> = degrees.iter().map(|&d| vec![usize::MAX; d]).collect();
        for (e, (a, b)) in edges.iter().enumerate() {
            for (end, pos) in [a, b].into_iter().enumerate() {
                let rot = rotations
                    .get_mut(pos.vertex)
                    .ok_or(GraphError::VertexOutOfRange(pos.vertex))?;
                let cell = rot.get_mut(pos.slot).ok_or(GraphError::SlotOutOfRange {
                    vertex: pos.vertex,
                    slot: pos.slot,
                })?;
                if *cell != usize::MAX {
                    return Err(GraphError::SlotCollision {
                        vertex: pos.vertex,
                        slot: pos.slot,
                    });
                }
                *cell = 2 * e + end;
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            if let Some(slot) = rot.iter().position(|&d| d == usize::MAX) {
                return Err(GraphError::SlotUnused { vertex: v, slot });
            }
        }
        Self::from_rotations(rotations)
    }

    /// Builds a rotation system from a one-vertex word such as `"abcabc"`:
    /// each letter names an edge and must occur exactly twice.
    pub fn from_word(word: &str) -> Result<Self, GraphError> {
        Self::from_words(&[word])
    }

    /// Multi-vertex version of [`RotationSystem::from_word`]; letters name
    /// edges across all vertices.
    pub fn from_words(words: &[&str]) -> Result<Self, GraphError> {
        let mut names: Vec<char> = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        let mut rotations = Vec::with_capacity(words.len());
        for word in words {
            let mut rot = Vec::new();
            for ch in word.chars().filter(|c| !c.is_whitespace()) {
                let e = match names.iter().position(|&n| n == ch) {
                    Some(e) => e,
                    None => {
                        names.push(ch);
                        seen.push(0);
                        names.len() - 1
                    }
                };
                if seen[e] >= 2 {
                    return Err(GraphError::BadWord(format!("edge '{ch}' occurs more than twice")));
                }
                rot.push(2 * e + seen[e]);
                seen[e] += 1;
            }
            rotations.push(rot);
        }
        if let Some(e) = seen.iter().position(|&c| c != 2) {
            return Err(GraphError::BadWord(format!("edge '{}' occurs once", names[e])));
        }
        Self::from_rotations(rotations)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.dart_vertex.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.dart_vertex.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rotations.iter().map(Vec::len).collect()
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    #[inline]
    pub fn twin(&self, d: Dart) -> Dart {
        d ^ 1
    }

    #[inline]
    pub fn edge_of(&self, d: Dart) -> usize {
        d / 2
    }

    #[inline]
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.dart_vertex[d]
    }

    #[inline]
    pub fn slot_of(&self, d: Dart) -> usize {
        self.dart_slot[d]
    }

    pub fn dart_at(&self, pos: SlotRef) -> Dart {
        self.rotations[pos.vertex][pos.slot]
    }

    pub fn slot_ref(&self, d: Dart) -> SlotRef {
        SlotRef::new(self.dart_vertex[d], self.dart_slot[d])
    }

    /// Next dart counter-clockwise around the same vertex.
    #[inline]
    pub fn succ(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.dart_vertex[d]];
        rot[(self.dart_slot[d] + 1) % rot.len()]
    }

    #[inline]
    pub fn pred(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.dart_vertex[d]];
        rot[(self.dart_slot[d] + rot.len() - 1) % rot.len()]
    }

    /// The face permutation `d ↦ succ(twin(d))`.
    #[inline]
    pub fn face_step(&self, d: Dart) -> Dart {
        self.succ(d ^ 1)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.dart_vertex[2 * e] == self.dart_vertex[2 * e + 1]
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.dart_vertex[2 * e], self.dart_vertex[2 * e + 1])
    }

    /// Face boundary walks, each listed from its smallest dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = self.face_step(d);
            }
            faces.push(walk);
        }
        faces
    }

    /// Face index of every dart, plus the number of faces.
    pub fn face_labels(&self) -> (Vec<usize>, usize) {
        let mut face_of = vec![usize::MAX; self.dart_count()];
        let mut count = 0;
        for start in 0..self.dart_count() {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = count;
                d = self.face_step(d);
            }
            count += 1;
        }
        (face_of, count)
    }

    pub fn face_count(&self) -> usize {
        self.face_labels().1
    }

    /// `V − E + F` over the whole derived surface. Isolated vertices count as
    /// spheres (one vertex, one face).
    pub fn euler_characteristic(&self) -> i64 {
        self.surface().euler()
    }

    /// Connected components as vertex sets, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![root];
            comp[root] = id;
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for &d in &self.rotations[v] {
                    let w = self.dart_vertex[d ^ 1];
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Per-component Euler characteristic and genus of the derived surface.
    pub fn surface(&self) -> SurfaceSummary {
        let (face_of, _) = self.face_labels();
        let components = self
            .components()
            .into_iter()
            .map(|vertices| {
                let mut darts = 0usize;
                let mut faces: Vec<usize> = Vec::new();
                for &v in &vertices {
                    for &d in &self.rotations[v] {
                        darts += 1;
                        faces.push(face_of[d]);
                    }
                }
                faces.sort_unstable();
                faces.dedup();
                let edges = darts / 2;
                // An isolated vertex is a sphere with a single face.
                let face_count = if darts == 0 { 1 } else { faces.len() };
                let euler = vertices.len() as i64 - edges as i64 + face_count as i64;
                ComponentSurface {
                    vertices,
                    edges,
                    faces: face_count,
                    euler,
                    genus: (2 - euler) / 2,
                }
            })
            .collect();
        SurfaceSummary { components }
    }

    /// Genus of the derived surface (summed over components).
    pub fn genus(&self) -> i64 {
        self.surface().genus()
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> Self {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        Self::from_rotations(rotations).expect("mirror preserves validity")
    }

    /// Renames vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Self {
        let mut rotations = vec![Vec::new(); self.vertex_count()];
        for (v, rot) in self.rotations.iter().enumerate() {
            rotations[perm[v]] = rot.clone();
        }
        Self::from_rotations(rotations).expect("relabelling preserves validity")
    }

    /// Cyclically shifts the rotation at `v` so that slot `start` becomes slot 0.
    pub fn rotate_vertex(&self, v: usize, start: usize) -> Self {
        let mut rotations = self.rotations.clone();
        let len = rotations[v].len();
        if len > 0 {
            rotations[v].rotate_left(start % len);
        }
        Self::from_rotations(rotations).expect("rotation preserves validity")
    }

    /// Renumbers edges: old edge `e` becomes `perm[e]`, optionally swapping its ends.
    pub fn relabel_edges(&self, perm: &[usize], flip: &[bool]) -> Self {
        let map = |d: Dart| 2 * perm[d / 2] + ((d & 1) ^ usize::from(flip[d / 2]));
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().map(|&d| map(d)).collect())
            .collect();
        Self::from_rotations(rotations).expect("edge relabelling preserves validity")
    }
}
