//! Affine label permutations induced by parallel families.
//!
//! A run of `n` consecutive parallel edges, where `n` is the vertex count of
//! the partner graph, matches the labels at its two ends by a permutation
//! `σ(x) ≡ α − ε·x (mod n)` with `ε` the sign of the edges. Labels are
//! 1-based; residue 0 is written as `n`.

use crate::error::PermError;
use crate::graph::{normalize_label, ParallelFamily, RotationSystem, Sign};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InducedPermutation {
    modulus: u32,
    alpha: u32,
    epsilon: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    /// Each orbit listed from its smallest label, orbits sorted by that label.
    pub orbits: Vec<Vec<u32>>,
    pub count: usize,
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl InducedPermutation {
    /// `x ↦ α − ε·x (mod n)`; `alpha` is reduced into `0..n`.
    pub fn new(modulus: u32, alpha: i64, epsilon: Sign) -> Result<Self, PermError> {
        if modulus == 0 {
            return Err(PermError::ZeroModulus);
        }
        Ok(Self {
            modulus,
            alpha: alpha.rem_euclid(i64::from(modulus)) as u32,
            epsilon,
        })
    }

    /// The translation `x ↦ x + shift`.
    pub fn translation(modulus: u32, shift: i64) -> Result<Self, PermError> {
        Self::new(modulus, shift, Sign::Minus)
    }

    /// The reflection `x ↦ alpha − x`.
    pub fn reflection(modulus: u32, alpha: i64) -> Result<Self, PermError> {
        Self::new(modulus, alpha, Sign::Plus)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    /// Image of the label `x ∈ 1..=n`.
    pub fn apply(&self, x: u32) -> u32 {
        let v = i64::from(self.alpha) - self.epsilon.to_int() * i64::from(x);
        normalize_label(v, self.modulus)
    }

    /// The permutation as a table: entry `x − 1` holds `σ(x)`.
    pub fn table(&self) -> Vec<u32> {
        (1..=self.modulus).map(|x| self.apply(x)).collect()
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.modulus).all(|x| self.apply(x) == x)
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (1..=self.modulus).filter(|&x| self.apply(x) == x).collect()
    }

    /// The permutation obtained by reading the family in the opposite
    /// direction.
    pub fn inverse(&self) -> Self {
        match self.epsilon {
            // Reflections are involutions.
            Sign::Plus => *self,
            Sign::Minus => Self {
                modulus: self.modulus,
                alpha: (self.modulus - self.alpha) % self.modulus,
                epsilon: Sign::Minus,
            },
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        // α₁ − ε₁(α₂ − ε₂x) = (α₁ − ε₁α₂) + ε₁ε₂x
        let e1 = self.epsilon.to_int();
        let alpha = i64::from(self.alpha) - e1 * i64::from(other.alpha);
        let epsilon = -(self.epsilon * other.epsilon);
        Self::new(self.modulus, alpha, epsilon).expect("nonzero modulus")
    }

    /// Whether the partner surface's orientability forbids this matching: a
    /// fixed point `x` of a positive family is an edge whose two ends both sit
    /// on vertex `x` of the partner graph, a loop there, and loops in an
    /// orientable surface are positive, so the parity rule would make the edge
    /// negative on this side.
    pub fn parity_obstructed(&self) -> bool {
        self.epsilon == Sign::Plus && !self.fixed_points().is_empty()
    }

    /// Orbits by direct cycle extraction.
    pub fn orbits(&self) -> OrbitDecomposition {
        let n = self.modulus as usize;
        let mut seen = vec![false; n + 1];
        let mut orbits = Vec::new();
        for start in 1..=self.modulus {
            if seen[start as usize] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            orbits.push(cyc);
        }
        OrbitDecomposition {
            count: orbits.len(),
            orbits,
        }
    }

    /// Orbit count from the closed forms: `gcd(n, α)` for translations
    /// (with `gcd(n, 0) = n`), and `f + (n − f)/2` for reflections with `f`
    /// fixed points, which is `n/2` when there are none.
    pub fn formula_orbit_count(&self) -> usize {
        let n = u64::from(self.modulus);
        match self.epsilon {
            Sign::Minus => gcd(n, u64::from(self.alpha)) as usize,
            Sign::Plus => {
                // 2x ≡ α (mod n): one solution for odd n, two or none for even n.
                let f = if n % 2 == 1 {
                    1
                } else if self.alpha.is_multiple_of(2) {
                    2
                } else {
                    0
                };
                let f = f.min(n);
                (f + (n - f) / 2) as usize
            }
        }
    }
}

/// Orbits of an induced permutation, cross-checked against the closed form.
pub fn orbit_count(p: &InducedPermutation) -> OrbitDecomposition {
    let dec = p.orbits();
    debug_assert_eq!(dec.count, p.formula_orbit_count());
    dec
}

/// The permutation induced by a family on the labels `1..=n`.
///
/// Every edge of the family must follow the same affine rule, which is what
/// makes any `n` consecutive edges induce the same permutation.
pub fn induced_permutation(family: &ParallelFamily, n: u32) -> Result<InducedPermutation, PermError> {
    if n == 0 {
        return Err(PermError::ZeroModulus);
    }
    if family.size < n {
        return Err(PermError::FamilyTooSmall {
            size: family.size,
            modulus: n,
        });
    }
    let pairs = family.label_pairs().ok_or(PermError::MissingLabels)?;
    let (a, b) = *pairs.first().ok_or(PermError::MissingLabels)?;
    let eps = family.sign;
    let alpha = i64::from(b) + eps.to_int() * i64::from(a);
    let p = InducedPermutation::new(n, alpha, eps)?;
    if pairs.iter().all(|&(x, y)| p.apply(x) == y) {
        Ok(p)
    } else {
        Err(PermError::NotAffine { modulus: n })
    }
}

/// One component of the subgraph of the partner graph spanned by the first
/// `n` edges of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeOrbit {
    /// Partner vertices, sorted.
    pub vertices: Vec<usize>,
    /// Edge ids, sorted.
    pub edges: Vec<usize>,
}

impl EdgeOrbit {
    /// Vertex labels (1-based) of the orbit.
    pub fn labels(&self) -> Vec<u32> {
        self.vertices.iter().map(|&v| v as u32 + 1).collect()
    }

    /// True when the orbit is a single cycle through its vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() == self.edges.len()
    }
}

/// The edge orbits of the first `n` edges of `family` in the partner graph,
/// where `n` is the partner's vertex count (all edges when the family is
/// smaller). Edge ids are shared between the two graphs, and partner vertex
/// `v` carries label `v + 1`.
pub fn edge_orbit_subgraph(family: &ParallelFamily, partner: &RotationSystem) -> Vec<EdgeOrbit> {
    let n = partner.vertex_count();
    let edges: Vec<usize> = family.edges.iter().copied().take(n.max(1)).collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    let mut touched = vec![false; n];
    for &e in &edges {
        let (a, b) = partner.endpoints(e);
        touched[a] = true;
        touched[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut comps: std::collections::BTreeMap<usize, EdgeOrbit> = Default::default();
    for v in (0..n).filter(|&v| touched[v]) {
        let r = find(&mut parent, v);
        comps
            .entry(r)
            .or_insert_with(|| EdgeOrbit {
                vertices: Vec::new(),
                edges: Vec::new(),
            })
            .vertices
            .push(v);
    }
    for &e in &edges {
        let r = find(&mut parent, partner.endpoints(e).0);
        comps.get_mut(&r).expect("touched").edges.push(e);
    }
    comps
        .into_values()
        .map(|mut o| {
            o.edges.sort_unstable();
            o
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeSpec, FatVertex, LabelFrame};

    #[test]
    fn translation_orbits() {
        let p = InducedPermutation::translation(6, 1).unwrap();
        assert_eq!(orbit_count(&p).count, 1);
        let p = InducedPermutation::translation(6, 4).unwrap();
        let d = orbit_count(&p);
        assert_eq!(d.count, 2);
        assert_eq!(d.orbits, vec![vec![1, 5, 3], vec![2, 6, 4]]);
    }

    #[test]
    fn reflection_orbits() {
        let p = InducedPermutation::reflection(4, 1).unwrap();
        assert_eq!(p.table(), vec![4, 3, 2, 1]);
        let d = orbit_count(&p);
        assert_eq!(d.count, 2);
        assert!(d.orbits.iter().all(|o| o.len() == 2));
        assert!(!p.parity_obstructed());
    }

    #[test]
    fn zero_shift_is_identity_but_not_parity_obstructed() {
        let p = InducedPermutation::translation(5, 0).unwrap();
        assert!(p.is_identity());
        assert!(!p.parity_obstructed());
        // A reflection with a fixed point is obstructed.
        assert!(InducedPermutation::reflection(3, 1).unwrap().parity_obstructed());
    }

    #[test]
    fn formula_matches_cycles_small() {
        for n in 1..=24 {
            for a in 0..n {
                for eps in [Sign::Plus, Sign::Minus] {
                    let p = InducedPermutation::new(n, i64::from(a), eps).unwrap();
                    assert_eq!(p.orbits().count, p.formula_orbit_count(), "n={n} a={a} {eps}");
                }
            }
        }
    }

    #[test]
    fn inverse_and_compose() {
        let p = InducedPermutation::translation(7, 3).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        let r = InducedPermutation::reflection(8, 5).unwrap();
        assert!(r.compose(&r).is_identity());
    }

    /// Two vertices joined by `n` parallel edges; edge `k` carries label
    /// `k + 1` at the first vertex and `σ(k + 1)` at the second.
    fn family_graph(n: u32, eps: Sign, alpha: i64) -> crate::graph::EmbeddedGraph {
        let p = InducedPermutation::new(n, alpha, eps).unwrap();
        let nn = n as usize;
        let frame = LabelFrame {
            delta: 1,
            modulus: n,
        };
        let u = FatVertex::new(Sign::Plus, (1..=n).map(Some).collect());
        let mut labels = vec![None; nn];
        for k in 0..nn {
            labels[nn - 1 - k] = Some(p.apply(k as u32 + 1));
        }
        let v = FatVertex::new(eps, labels);
        let edges = (0..nn)
            .map(|k| EdgeSpec::between((0, k), (1, nn - 1 - k)))
            .collect();
        crate::graph::build_graph(vec![u, v], edges, Some(frame)).unwrap()
    }

    #[test]
    fn reads_permutation_from_family() {
        for (eps, alpha) in [(Sign::Plus, 1), (Sign::Minus, 2), (Sign::Minus, 0)] {
            let g = family_graph(4, eps, alpha);
            let fams = g.parallel_families();
            assert_eq!(fams.len(), 1);
            let p = induced_permutation(&fams[0], 4).unwrap();
            assert_eq!(p.epsilon(), eps);
            let expect = InducedPermutation::new(4, alpha, eps).unwrap();
            // The family may be read from either end.
            assert!(p == expect || p == expect.inverse(), "{p:?} vs {expect:?}");
        }
    }

    #[test]
    fn small_family_is_rejected() {
        let g = family_graph(4, Sign::Plus, 1);
        let mut fam = g.parallel_families().remove(0);
        fam.size = 3;
        assert_eq!(
            induced_permutation(&fam, 4),
            Err(PermError::FamilyTooSmall { size: 3, modulus: 4 })
        );
    }

    /// Partner rotation system in which edge `k` of a family runs from
    /// vertex `x_k − 1` to `σ(x_k) − 1`.
    fn partner_for(p: &InducedPermutation, fam_labels: &[u32]) -> RotationSystem {
        let n = p.modulus() as usize;
        let mut rots = vec![Vec::new(); n];
        for (k, &x) in fam_labels.iter().enumerate() {
            rots[(x - 1) as usize].push(2 * k);
            rots[(p.apply(x) - 1) as usize].push(2 * k + 1);
        }
        RotationSystem::from_rotations(rots).unwrap()
    }

    fn fake_family(n: u32, sign: Sign) -> ParallelFamily {
        ParallelFamily {
            edges: (0..n as usize).collect(),
            darts: (0..n as usize).map(|k| 2 * k).collect(),
            size: n,
            sign,
            endpoints: (0, 1),
            cyclic: false,
            label_seq_a: (1..=n).map(Some).collect(),
            label_seq_b: vec![None; n as usize],
        }
    }

    #[test]
    fn positive_family_orbits_are_two_cycles() {
        let p = InducedPermutation::reflection(6, 1).unwrap();
        let labels: Vec<u32> = (1..=6).collect();
        let partner = partner_for(&p, &labels);
        let orbits = edge_orbit_subgraph(&fake_family(6, Sign::Plus), &partner);
        assert_eq!(orbits.len(), 3);
        for o in &orbits {
            assert_eq!(o.vertices.len(), 2);
            assert_eq!(o.edges.len(), 2);
            assert!(o.is_cycle());
            let mut labs = o.labels();
            labs.sort_unstable();
            let img: Vec<u32> = labs.iter().map(|&x| p.apply(x)).collect();
            assert!(img.iter().all(|y| labs.contains(y)));
        }
    }

    #[test]
    fn coprime_negative_family_has_one_orbit() {
        let p = InducedPermutation::translation(5, 2).unwrap();
        let labels: Vec<u32> = (1..=5).collect();
        let partner = partner_for(&p, &labels);
        let orbits = edge_orbit_subgraph(&fake_family(5, Sign::Minus), &partner);
        assert_eq!(orbits.len(), 1);
        assert!(orbits[0].is_cycle());
        assert_eq!(orbits[0].vertices.len(), 5);
    }

    #[test]
    fn single_edge_orbit() {
        let p = InducedPermutation::translation(3, 1).unwrap();
        let partner = partner_for(&p, &[1, 2, 3]);
        let mut fam = fake_family(3, Sign::Minus);
        fam.edges.truncate(1);
        fam.size = 1;
        let orbits = edge_orbit_subgraph(&fam, &partner);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].edges, vec![0]);
    }
}
