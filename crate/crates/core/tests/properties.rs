use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torcert::certify::{certify_case, CaseParams, CertifyConfig, Mode};
use torcert::constraints::{negative_size_bound, positive_size_bound};
use torcert::graph::{map_key, EmbeddedGraph, RotationSystem, Sign};
use torcert::homology::{apply_gluing, Frame, GluingMatrix, HomologyClass};
use torcert::perms::InducedPermutation;
use torcert::verify::random_rotation_system;

fn map(seed: u64, max_v: usize, max_e: usize) -> RotationSystem {
    random_rotation_system(&mut ChaCha8Rng::seed_from_u64(seed), max_v, max_e)
}

fn sign(plus: bool) -> Sign {
    if plus {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

proptest! {
    #[test]
    fn face_sides_cover_every_dart(seed in any::<u64>()) {
        let m = map(seed, 6, 14);
        let faces = m.faces();
        prop_assert_eq!(faces.iter().map(Vec::len).sum::<usize>(), 2 * m.edge_count());
        let mut seen = vec![false; m.dart_count()];
        for d in faces.into_iter().flatten() {
            prop_assert!(!seen[d]);
            seen[d] = true;
        }
    }

    #[test]
    fn component_euler_characteristics_are_even(seed in any::<u64>()) {
        let s = map(seed, 6, 14).surface();
        for c in &s.components {
            prop_assert!(c.euler <= 2);
            prop_assert_eq!(c.euler, 2 - 2 * c.genus);
        }
    }

    #[test]
    fn map_key_ignores_relabeling_rotation_and_reflection(seed in any::<u64>(), shift in 0usize..8, flip in any::<bool>()) {
        let m = map(seed, 4, 12);
        let n = m.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
        let mut img = m.relabel_vertices(&perm);
        for v in 0..n {
            let d = img.degree(v);
            img = img.rotate_vertex(v, shift % d);
        }
        if flip {
            img = img.mirror();
        }
        prop_assert_eq!(map_key(&m), map_key(&img));
    }

    #[test]
    fn reduction_is_idempotent(seed in any::<u64>()) {
        let m = map(seed, 4, 12);
        let parities: Vec<Sign> = (0..m.vertex_count()).map(|v| sign(v % 2 == 0)).collect();
        let g = EmbeddedGraph::from_rotation(m, &parities);
        let once = g.reduce();
        let twice = once.reduce();
        prop_assert_eq!(once.map(), twice.map());
        let sizes = |h: &EmbeddedGraph| (0..h.edge_count()).map(|e| h.size(e)).collect::<Vec<_>>();
        prop_assert_eq!(sizes(&once), sizes(&twice));
        prop_assert_eq!(sizes(&once).iter().sum::<u32>() as usize, g.edge_count());
    }

    #[test]
    fn positive_permutations_are_involutions(n in 1u32..30, alpha in -40i64..40) {
        let p = InducedPermutation::new(n, alpha, Sign::Plus).unwrap();
        prop_assert!(p.compose(&p).is_identity());
    }

    #[test]
    fn inverse_undoes_the_permutation(n in 1u32..30, alpha in -40i64..40, plus in any::<bool>()) {
        let p = InducedPermutation::new(n, alpha, sign(plus)).unwrap();
        for x in 1..=n {
            prop_assert_eq!(p.inverse().apply(p.apply(x)), x);
        }
        prop_assert_eq!(p.formula_orbit_count(), p.orbits().count);
    }

    #[test]
    fn gluing_reverses_intersections(m in -20i64..20, a in -10i64..=10, b in -10i64..=10, c in -10i64..=10, d in -10i64..=10) {
        let g = GluingMatrix::new(m);
        let x = HomologyClass::new(Frame::T1, a, b);
        let y = HomologyClass::new(Frame::T1, c, d);
        let (px, py) = (apply_gluing(&g, &x).unwrap(), apply_gluing(&g, &y).unwrap());
        prop_assert_eq!(px.intersection(&py), -x.intersection(&y));
        prop_assert_eq!(g.determinant(), -1);
    }

    #[test]
    fn size_bounds_are_monotone_in_t(t in 1u32..40) {
        prop_assert!(negative_size_bound(t, false).bound <= negative_size_bound(t + 1, false).bound);
        prop_assert!(positive_size_bound(t).bound <= positive_size_bound(t + 1).bound);
    }
}

/// Removing a stage can only let more configurations through.
#[test]
fn dropping_a_stage_never_lowers_survivors() {
    let p = CaseParams::new(2, 4, 6);
    let full = certify_case(&p, Mode::Enumerate, &CertifyConfig::default()).unwrap();
    for entry in &full.constraint_log {
        let config = CertifyConfig {
            disabled_stages: vec![entry.name.clone()],
            ..CertifyConfig::default()
        };
        let ablated = certify_case(&p, Mode::Enumerate, &config).unwrap();
        assert!(ablated.survivors >= full.survivors, "{}", entry.name);
        if entry.name != "size-forcing" {
            assert!(ablated.entry(&entry.name).is_none());
        }
    }
}

/// Certificates agree byte for byte across worker counts.
#[test]
fn certificates_are_deterministic() {
    let p = CaseParams::new(2, 6, 6);
    let run = |workers| {
        let config = CertifyConfig {
            workers,
            ..CertifyConfig::default()
        };
        certify_case(&p, Mode::Enumerate, &config).unwrap().deterministic_json()
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
}
