//! The intersection pattern of the two boundary families when `Δ = 6`.
//!
//! On the common torus both families of boundary circles are parallel
//! straight lines. Circle `u_i` of `∂S` meets circle `v_j` of `∂T` in six
//! points `P(i, j, k)`, `k = 0..6`, numbered along `v_j`. Along `v_j` the
//! points come in the cyclic order `k·s + i`; along `u_i` they come in the
//! order `((ρ·k) mod 6)·t + j` for a sign `ρ` shared by all circles. A
//! labeled `G_S` fixes where each vertex's slots sit in that order, and with
//! the directions of the `v_j` this determines `G_T`. Edge ids are shared
//! between the two graphs.

use crate::graph::{EmbeddedGraph, FatVertex, LabelFrame, RotationSystem, Sign};
use crate::perms::InducedPermutation;

/// `G_S` expanded from a reduced graph whose every edge has size `t`, with
/// vertex `i` of the reduced graph playing `u_{i+1}`.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub s: usize,
    pub t: usize,
    pub reduced: RotationSystem,
    pub parity: Vec<Sign>,
    /// `(vertex, slot)` of both ends of every `G_S` edge. Edge `r·t + p` is
    /// copy `p` of reduced edge `r`.
    pub ends: Vec<[(usize, usize); 2]>,
    pub sign: Vec<Sign>,
}

impl Layout {
    pub fn new(reduced: RotationSystem, t: usize, parity: Vec<Sign>) -> Self {
        let s = reduced.vertex_count();
        let mut ends = Vec::with_capacity(reduced.edge_count() * t);
        let mut sign = Vec::with_capacity(reduced.edge_count() * t);
        for r in 0..reduced.edge_count() {
            let (a, b) = (reduced.slot_ref(2 * r), reduced.slot_ref(2 * r + 1));
            let sg = parity[a.vertex] * parity[b.vertex];
            for p in 0..t {
                // Parallel copies run in opposite rotational order at the two ends.
                ends.push([(a.vertex, a.slot * t + p), (b.vertex, b.slot * t + (t - 1 - p))]);
                sign.push(sg);
            }
        }
        Self {
            s,
            t,
            reduced,
            parity,
            ends,
            sign,
        }
    }

    pub fn degree(&self) -> usize {
        6 * self.t
    }

    /// Reduced edge (S family) an edge belongs to.
    pub fn family_of(&self, e: usize) -> usize {
        e / self.t
    }

    /// Position of slot `q` of `u_i` in the order along the circle.
    pub fn position(&self, i: usize, q: usize, offset: usize) -> usize {
        let n = self.degree();
        if self.parity[i].is_plus() {
            (offset + q) % n
        } else {
            (offset + n - q) % n
        }
    }

    /// 0-based label of slot `q` of `u_i`: the index of the `T` circle.
    pub fn label(&self, i: usize, q: usize, label_offset: usize) -> usize {
        self.position(i, q, label_offset) % self.t
    }

    /// The `T` circles joined by each edge, under the given label offsets.
    pub fn t_endpoints(&self, label_offsets: &[usize]) -> Vec<(usize, usize)> {
        self.ends
            .iter()
            .map(|[(ia, qa), (ib, qb)]| {
                (
                    self.label(*ia, *qa, label_offsets[*ia]),
                    self.label(*ib, *qb, label_offsets[*ib]),
                )
            })
            .collect()
    }

    /// Permutation of `1..=t` induced by reduced edge `r`, read from its
    /// first end to its second.
    pub fn family_permutation(&self, r: usize, label_offsets: &[usize]) -> InducedPermutation {
        let t = self.t as u32;
        let e = r * self.t;
        let [(ia, qa), (ib, qb)] = self.ends[e];
        let a = self.label(ia, qa, label_offsets[ia]) as i64 + 1;
        let b = self.label(ib, qb, label_offsets[ib]) as i64 + 1;
        let eps = self.sign[e];
        InducedPermutation::new(t, b + eps.to_int() * a, eps).expect("t is positive")
    }

    /// `G_S` with labels under the given offsets.
    pub fn gs(&self, offsets: &[usize]) -> EmbeddedGraph {
        let n = self.degree();
        let mut rot = vec![vec![0usize; n]; self.s];
        for (e, ends) in self.ends.iter().enumerate() {
            for (k, &(i, q)) in ends.iter().enumerate() {
                rot[i][q] = 2 * e + k;
            }
        }
        let vertices = (0..self.s)
            .map(|i| {
                let labels = (0..n)
                    .map(|q| Some(self.label(i, q, offsets[i]) as u32 + 1))
                    .collect();
                FatVertex::new(self.parity[i], labels)
            })
            .collect();
        let map = RotationSystem::from_rotations(rot).expect("expansion is a valid map");
        EmbeddedGraph::assemble(
            map,
            vertices,
            &self.sign,
            Some(LabelFrame {
                delta: 6,
                modulus: self.t as u32,
            }),
        )
    }

    /// Where the end `(i, q)` lands on the `T` side: circle `j` and slot.
    pub fn t_slot(&self, i: usize, q: usize, offset: usize, rho: i8, t_parity: &[Sign]) -> (usize, usize) {
        let z = self.position(i, q, offset);
        let (j, block) = (z % self.t, z / self.t);
        let k = if rho > 0 { block } else { (6 - block) % 6 };
        let zt = k * self.s + i;
        let n = 6 * self.s;
        let slot = if t_parity[j].is_plus() { zt } else { (n - zt) % n };
        (j, slot)
    }

    /// `G_T` for full offsets, the crossing sign `rho` and the directions of
    /// the `T` circles. Edge signs in `G_T` are supplied by the caller.
    pub fn gt(&self, offsets: &[usize], rho: i8, t_parity: &[Sign], t_sign: &[Sign]) -> EmbeddedGraph {
        let n = 6 * self.s;
        let mut rot = vec![vec![0usize; n]; self.t];
        let mut labels = vec![vec![None; n]; self.t];
        for (e, ends) in self.ends.iter().enumerate() {
            for (k, &(i, q)) in ends.iter().enumerate() {
                let (j, slot) = self.t_slot(i, q, offsets[i], rho, t_parity);
                rot[j][slot] = 2 * e + k;
                labels[j][slot] = Some(i as u32 + 1);
            }
        }
        let vertices = labels
            .into_iter()
            .zip(t_parity)
            .map(|(l, &p)| FatVertex::new(p, l))
            .collect();
        let map = RotationSystem::from_rotations(rot).expect("every point lies on one T circle");
        EmbeddedGraph::assemble(
            map,
            vertices,
            t_sign,
            Some(LabelFrame {
                delta: 6,
                modulus: self.s as u32,
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::check_jn1;
    use crate::graph::build_graph;
    use crate::graph::{EdgeEnd, EdgeSpec};

    fn hexagonal() -> RotationSystem {
        RotationSystem::from_word("abcabc").unwrap()
    }

    #[test]
    fn expanded_graph_has_bigons_and_the_reduced_triangles() {
        let lay = Layout::new(hexagonal(), 3, vec![Sign::Plus]);
        let gs = lay.gs(&[0]);
        assert!(gs.surface().is_cellular_torus());
        let reduced = gs.reduce();
        assert_eq!(reduced.edge_count(), 3);
        assert!(reduced.edges().iter().all(|e| e.size == 3));
    }

    #[test]
    fn labels_pass_validation() {
        let lay = Layout::new(hexagonal(), 4, vec![Sign::Minus]);
        let gs = lay.gs(&[5]);
        let vertices = gs.vertices().to_vec();
        let edges = lay
            .ends
            .iter()
            .map(|&[(ia, qa), (ib, qb)]| EdgeSpec::new(EdgeEnd::new(ia, qa, None), EdgeEnd::new(ib, qb, None)))
            .collect();
        let frame = LabelFrame { delta: 6, modulus: 4 };
        assert!(build_graph(vertices, edges, Some(frame)).is_ok());
    }

    #[test]
    fn every_t_slot_is_used_once_and_labels_form_blocks() {
        let two = crate::certify::enumerate_reduced_graphs(2, &crate::certify::DegreeSpec::Regular(6), 4)
            .unwrap()
            .remove(0);
        let lay = Layout::new(two, 4, vec![Sign::Plus, Sign::Minus]);
        let tp = [Sign::Plus, Sign::Minus, Sign::Minus, Sign::Plus];
        for rho in [1, -1] {
            let gt = lay.gt(&[0, 7], rho, &tp, &vec![Sign::Plus; lay.ends.len()]);
            let frame = LabelFrame { delta: 6, modulus: 2 };
            let edges = (0..gt.edge_count())
                .map(|e| {
                    let [a, b] = gt.edges()[e].ends;
                    EdgeSpec::new(a, b)
                })
                .collect();
            assert!(build_graph(gt.vertices().to_vec(), edges, Some(frame)).is_ok());
        }
    }

    #[test]
    fn each_vertex_pair_meets_in_the_same_cyclic_order() {
        let lay = Layout::new(hexagonal(), 3, vec![Sign::Plus]);
        let tp = [Sign::Plus, Sign::Minus, Sign::Plus];
        for rho in [1i8, -1] {
            let offsets = [0];
            let gs = lay.gs(&offsets);
            let gt = lay.gt(&offsets, rho, &tp, &vec![Sign::Plus; lay.ends.len()]);
            for j in 0..3 {
                let mut inc = Vec::new();
                for (e, ends) in lay.ends.iter().enumerate() {
                    for (k, &(i, q)) in ends.iter().enumerate() {
                        let (jj, _) = lay.t_slot(i, q, offsets[i], rho, &tp);
                        if jj == j {
                            inc.push((q, gt.map().slot_of(2 * e + k)));
                        }
                    }
                }
                let v = check_jn1(6, &gs.vertices()[0], &gt.vertices()[j], &inc).unwrap();
                assert!(v.satisfied, "{v:?}");
            }
        }
    }

    #[test]
    fn family_permutation_matches_the_labels() {
        let lay = Layout::new(hexagonal(), 4, vec![Sign::Plus]);
        let lo = [2];
        let ends = lay.t_endpoints(&lo);
        for r in 0..3 {
            let p = lay.family_permutation(r, &lo);
            for c in 0..4 {
                let (a, b) = ends[r * 4 + c];
                assert_eq!(p.apply(a as u32 + 1), b as u32 + 1);
            }
        }
    }
}
