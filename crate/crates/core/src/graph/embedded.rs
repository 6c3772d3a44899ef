//! Labeled fat graphs: a rotation system plus vertex parities, endpoint
//! labels, edge signs and family sizes.

use super::reduce::{self, ParallelFamily};
use super::rotation::{Dart, RotationSystem, SlotRef, SurfaceSummary};
use super::{canonical, Sign};
use crate::error::GraphError;
use serde::{Deserialize, Serialize};

/// The label frame of one side: every vertex has `delta * modulus` slots and
/// labels in `1..=modulus`, where `modulus` is the vertex count of the
/// partner graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelFrame {
    pub delta: u32,
    pub modulus: u32,
}

/// A boundary circle of the surface, drawn as a fat vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FatVertex {
    pub parity: Sign,
    /// Label of each slot in rotation order; `None` when unlabeled.
    pub labels: Vec<Option<u32>>,
}

impl FatVertex {
    pub fn new(parity: Sign, labels: Vec<Option<u32>>) -> Self {
        Self { parity, labels }
    }

    pub fn unlabeled(parity: Sign, degree: usize) -> Self {
        Self {
            parity,
            labels: vec![None; degree],
        }
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeEnd {
    pub vertex: usize,
    pub slot: usize,
    pub label: Option<u32>,
}

impl EdgeEnd {
    pub fn new(vertex: usize, slot: usize, label: Option<u32>) -> Self {
        Self {
            vertex,
            slot,
            label,
        }
    }
}

/// Input description of an edge. A missing sign is derived from parities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub ends: [EdgeEnd; 2],
    pub sign: Option<Sign>,
    pub size: u32,
}

impl EdgeSpec {
    pub fn new(a: EdgeEnd, b: EdgeEnd) -> Self {
        Self {
            ends: [a, b],
            sign: None,
            size: 1,
        }
    }

    pub fn between(a: (usize, usize), b: (usize, usize)) -> Self {
        Self::new(EdgeEnd::new(a.0, a.1, None), EdgeEnd::new(b.0, b.1, None))
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = Some(sign);
        self
    }

    pub fn with_size(mut self, size: u32) -> Self {
        self.size = size;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub ends: [EdgeEnd; 2],
    pub sign: Sign,
    /// Number of parallel edges this edge stands for (1 in unreduced graphs).
    pub size: u32,
    /// Index into [`EmbeddedGraph::families`] for reduced graphs.
    pub family: Option<usize>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends[0].vertex == self.ends[1].vertex
    }
}

/// A corner of a face: the arc of a fat vertex between two consecutive edge
/// ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corner {
    pub vertex: usize,
    pub from: Dart,
    pub to: Dart,
    /// The string `I_{j,j+1}` the corner lies in, reported as `j`, when labels
    /// are known.
    pub string: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Edge sides in walk order.
    pub darts: Vec<Dart>,
    /// `corners[i]` sits between `darts[i]` and `darts[i + 1]`.
    pub corners: Vec<Corner>,
}

impl Face {
    pub fn sides(&self) -> usize {
        self.darts.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    pub(crate) map: RotationSystem,
    pub(crate) vertices: Vec<FatVertex>,
    pub(crate) edges: Vec<Edge>,
    pub(crate) frame: Option<LabelFrame>,
    pub(crate) families: Vec<ParallelFamily>,
    /// +1 when labels increase along the rotation at a vertex, −1 otherwise.
    pub(crate) label_dir: Vec<i8>,
}

/// Validates vertex and edge data and assembles an [`EmbeddedGraph`].
///
/// With a frame, every vertex must have `delta * modulus` fully labeled
/// slots whose labels read as consecutive runs in one direction. Edge signs
/// are derived from parities; a declared sign must agree, and loops are
/// always positive.
pub fn build_graph(
    vertices: Vec<FatVertex>,
    edges: Vec<EdgeSpec>,
    frame: Option<LabelFrame>,
) -> Result<EmbeddedGraph, GraphError> {
    let mut vertices = vertices;
    let degrees: Vec<usize> = vertices.iter().map(FatVertex::degree).collect();
    let pairs: Vec<(SlotRef, SlotRef)> = edges
        .iter()
        .map(|e| {
            (
                SlotRef::new(e.ends[0].vertex, e.ends[0].slot),
                SlotRef::new(e.ends[1].vertex, e.ends[1].slot),
            )
        })
        .collect();
    let map = RotationSystem::from_slot_pairs(&degrees, &pairs)?;

    // Merge end labels into vertex slot labels.
    for (i, e) in edges.iter().enumerate() {
        for end in &e.ends {
            let cell = &mut vertices[end.vertex].labels[end.slot];
            match (*cell, end.label) {
                (Some(v), Some(l)) if v != l => {
                    return Err(GraphError::LabelMismatch {
                        edge: i,
                        vertex: end.vertex,
                        slot: end.slot,
                        edge_label: l,
                        vertex_label: v,
                    })
                }
                (None, Some(l)) => *cell = Some(l),
                _ => {}
            }
        }
    }

    let mut label_dir: Vec<i8> = vertices
        .iter()
        .map(|v| if v.parity.is_plus() { 1 } else { -1 })
        .collect();
    match frame {
        Some(fr) => {
            if fr.modulus == 0 || fr.delta == 0 {
                return Err(GraphError::Parse {
                    line: 0,
                    message: "label frame needs positive delta and modulus".into(),
                });
            }
            let expected = (fr.delta * fr.modulus) as usize;
            for (v, vert) in vertices.iter().enumerate() {
                if vert.degree() != expected {
                    return Err(GraphError::DegreeMismatch {
                        vertex: v,
                        expected,
                        found: vert.degree(),
                    });
                }
                if let Some(dir) = label_direction(v, &vert.labels, fr)? {
                    label_dir[v] = dir;
                }
            }
        }
        None => {
            if let Some((v, slot)) = vertices.iter().enumerate().find_map(|(v, vert)| {
                vert.labels.iter().position(Option::is_some).map(|s| (v, s))
            }) {
                return Err(GraphError::LabelOutOfRange {
                    vertex: v,
                    slot,
                    label: vertices[v].labels[slot].unwrap_or(0),
                    modulus: 0,
                });
            }
        }
    }

    let mut out_edges = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let [a, b] = e.ends;
        let derived = Sign::of_edge(vertices[a.vertex].parity, vertices[b.vertex].parity);
        if let Some(s) = e.sign {
            if s != derived {
                return Err(GraphError::ParityContradiction { edge: i });
            }
        }
        let ends = [
            EdgeEnd::new(a.vertex, a.slot, vertices[a.vertex].labels[a.slot]),
            EdgeEnd::new(b.vertex, b.slot, vertices[b.vertex].labels[b.slot]),
        ];
        out_edges.push(Edge {
            ends,
            sign: derived,
            size: e.size.max(1),
            family: None,
        });
    }

    Ok(EmbeddedGraph {
        map,
        vertices,
        edges: out_edges,
        frame,
        families: Vec::new(),
        label_dir,
    })
}

/// Checks that a label cycle is `delta` consecutive runs of `1..=modulus`
/// in a single direction and returns that direction (`None` when the
/// modulus is too small for the direction to be visible in the labels).
fn label_direction(
    vertex: usize,
    labels: &[Option<u32>],
    fr: LabelFrame,
) -> Result<Option<i8>, GraphError> {
    let n = fr.modulus;
    let violation = GraphError::LabelBlockViolation {
        vertex,
        delta: fr.delta,
        modulus: n,
    };
    let mut vals = Vec::with_capacity(labels.len());
    for (slot, l) in labels.iter().enumerate() {
        let l = l.ok_or_else(|| violation.clone())?;
        if l == 0 || l > n {
            return Err(GraphError::LabelOutOfRange {
                vertex,
                slot,
                label: l,
                modulus: n,
            });
        }
        vals.push(l);
    }
    if n == 1 {
        return Ok(None);
    }
    let step = |i: usize| (vals[(i + 1) % vals.len()] + n - vals[i]) % n;
    let first = step(0);
    let dir = if first == 1 {
        1
    } else if first == n - 1 {
        -1
    } else {
        return Err(violation);
    };
    if (0..vals.len()).any(|i| step(i) != first) {
        return Err(violation);
    }
    Ok(if n == 2 { None } else { Some(dir) })
}

impl EmbeddedGraph {
    /// Assembles a graph from a rotation system and per-vertex parities,
    /// without labels. Signs follow the parities.
    pub fn from_rotation(map: RotationSystem, parities: &[Sign]) -> Self {
        let vertices: Vec<FatVertex> = (0..map.vertex_count())
            .map(|v| FatVertex::unlabeled(parities[v], map.degree(v)))
            .collect();
        let edges = (0..map.edge_count())
            .map(|e| {
                let (a, b) = (2 * e, 2 * e + 1);
                let (va, vb) = (map.vertex_of(a), map.vertex_of(b));
                Edge {
                    ends: [
                        EdgeEnd::new(va, map.slot_of(a), None),
                        EdgeEnd::new(vb, map.slot_of(b), None),
                    ],
                    sign: Sign::of_edge(parities[va], parities[vb]),
                    size: 1,
                    family: None,
                }
            })
            .collect();
        let label_dir = parities
            .iter()
            .map(|p| if p.is_plus() { 1 } else { -1 })
            .collect();
        Self {
            map,
            vertices,
            edges,
            frame: None,
            families: Vec::new(),
            label_dir,
        }
    }

    /// Assembles a labeled graph without validation. Edge signs are taken as
    /// given; the label direction at each vertex follows its parity.
    pub(crate) fn assemble(
        map: RotationSystem,
        vertices: Vec<FatVertex>,
        signs: &[Sign],
        frame: Option<LabelFrame>,
    ) -> Self {
        let edges = (0..map.edge_count())
            .map(|e| {
                let end = |d: Dart| {
                    let r = map.slot_ref(d);
                    EdgeEnd::new(r.vertex, r.slot, vertices[r.vertex].labels[r.slot])
                };
                Edge {
                    ends: [end(2 * e), end(2 * e + 1)],
                    sign: signs[e],
                    size: 1,
                    family: None,
                }
            })
            .collect();
        let label_dir = vertices
            .iter()
            .map(|v| if v.parity.is_plus() { 1 } else { -1 })
            .collect();
        Self {
            map,
            vertices,
            edges,
            frame,
            families: Vec::new(),
            label_dir,
        }
    }

    /// Same as [`EmbeddedGraph::from_rotation`] with all vertices positive.
    pub fn polarized(map: RotationSystem) -> Self {
        let parities = vec![Sign::Plus; map.vertex_count()];
        Self::from_rotation(map, &parities)
    }

    /// Replaces edge sizes (used for reduced graphs given directly).
    pub fn with_sizes(mut self, sizes: &[u32]) -> Self {
        for (e, &s) in self.edges.iter_mut().zip(sizes) {
            e.size = s;
        }
        self
    }

    pub fn map(&self) -> &RotationSystem {
        &self.map
    }

    pub fn vertices(&self) -> &[FatVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn frame(&self) -> Option<LabelFrame> {
        self.frame
    }

    /// Family annotations; nonempty only for graphs produced by reduction.
    pub fn families(&self) -> &[ParallelFamily] {
        &self.families
    }

    pub fn parity(&self, v: usize) -> Sign {
        self.vertices[v].parity
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.edges[e].sign
    }

    pub fn size(&self, e: usize) -> u32 {
        self.edges[e].size
    }

    pub fn label_at(&self, d: Dart) -> Option<u32> {
        let r = self.map.slot_ref(d);
        self.vertices[r.vertex].labels[r.slot]
    }

    pub fn label_direction(&self, v: usize) -> i8 {
        self.label_dir[v]
    }

    pub fn is_polarized(&self) -> bool {
        self.vertices.windows(2).all(|w| w[0].parity == w[1].parity)
    }

    pub fn is_neutral(&self) -> bool {
        let plus = self.vertices.iter().filter(|v| v.parity.is_plus()).count();
        2 * plus == self.vertices.len()
    }

    /// The string containing the corner that starts at dart `from` and ends
    /// at `succ(from)`.
    pub fn corner_string(&self, from: Dart) -> Option<u32> {
        let to = self.map.succ(from);
        let (lx, ly) = (self.label_at(from)?, self.label_at(to)?);
        let n = self.frame?.modulus;
        let v = self.map.vertex_of(from);
        let (lo, hi) = if self.label_dir[v] > 0 { (lx, ly) } else { (ly, lx) };
        (super::normalize_label(i64::from(lo) + 1, n) == hi).then_some(lo)
    }

    /// Traces every face. Each edge side appears in exactly one walk.
    pub fn faces(&self) -> Vec<Face> {
        self.map
            .faces()
            .into_iter()
            .map(|darts| {
                let corners = (0..darts.len())
                    .map(|i| {
                        let from = self.map.twin(darts[i]);
                        let to = darts[(i + 1) % darts.len()];
                        Corner {
                            vertex: self.map.vertex_of(to),
                            from,
                            to,
                            string: self.corner_string(from),
                        }
                    })
                    .collect();
                Face { darts, corners }
            })
            .collect()
    }

    pub fn surface(&self) -> SurfaceSummary {
        self.map.surface()
    }

    /// `V − E + F` of the derived surface.
    pub fn euler_characteristic(&self) -> i64 {
        self.map.euler_characteristic()
    }

    /// `Ok(())` when the derived surface is a connected torus.
    pub fn check_torus(&self) -> Result<(), GraphError> {
        let s = self.surface();
        if s.is_cellular_torus() {
            Ok(())
        } else {
            Err(GraphError::NotCellular {
                genus: s.genus(),
                components: s.components.len(),
            })
        }
    }

    /// Euler characteristic of a graph required to be a cellular torus map.
    pub fn torus_euler_characteristic(&self) -> Result<i64, GraphError> {
        self.check_torus()?;
        Ok(self.euler_characteristic())
    }

    /// Maximal parallel families (see [`reduce::families`]).
    pub fn parallel_families(&self) -> Vec<ParallelFamily> {
        reduce::families(self)
    }

    pub fn reduce(&self) -> EmbeddedGraph {
        reduce::reduce_graph(self)
    }

    pub fn canonical_form(&self) -> canonical::CanonicalKey {
        canonical::graph_key(self)
    }

    pub fn min_degree(&self) -> usize {
        self.map.degrees().into_iter().min().unwrap_or(0)
    }
}
