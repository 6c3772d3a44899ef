//! Integer homology of the boundary tori of `P × S¹/[m]`.
//!
//! `P` is a pair of pants with boundary tori `T0, T1, T2` in `P × S¹`; the
//! manifold is closed up by gluing `T1` to `T2` with an orientation reversing
//! map `φ` acting on homology by `((−1, m), (0, 1))` in the frames
//! `(μ₁, λ₁) → (μ₂, λ₂)`. `H₁(P × S¹)` is free on `μ₁, μ₂, λ₀` with
//! `μ₀ + μ₁ + μ₂ = 0` and `λ₀ = λ₁ = λ₂`.

use crate::constraints::ConstraintVerdict;
use crate::error::HomologyError;
use crate::perms::gcd;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Frame {
    T0,
    T1,
    T2,
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Frame::T0 => "T0",
            Frame::T1 => "T1",
            Frame::T2 => "T2",
        };
        f.write_str(s)
    }
}

/// The class `mu·μᵢ + lambda·λᵢ` on the torus `Tᵢ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyClass {
    pub frame: Frame,
    pub mu: i64,
    pub lambda: i64,
}

impl HomologyClass {
    pub fn new(frame: Frame, mu: i64, lambda: i64) -> Self {
        Self { frame, mu, lambda }
    }

    pub fn mu(frame: Frame) -> Self {
        Self::new(frame, 1, 0)
    }

    pub fn lambda(frame: Frame) -> Self {
        Self::new(frame, 0, 1)
    }

    pub fn is_primitive(&self) -> bool {
        gcd(self.mu.unsigned_abs(), self.lambda.unsigned_abs()) == 1
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.frame, k * self.mu, k * self.lambda)
    }

    /// Algebraic intersection number on a common torus, with `μᵢ·λᵢ = +1`.
    pub fn intersection(&self, other: &Self) -> i64 {
        self.mu * other.lambda - self.lambda * other.mu
    }

    /// Coordinates in the free basis `(μ₁, μ₂, λ₀)` of `H₁(P × S¹)`.
    pub fn in_pants_basis(&self) -> [i64; 3] {
        match self.frame {
            // μ₀ = −μ₁ − μ₂
            Frame::T0 => [-self.mu, -self.mu, self.lambda],
            Frame::T1 => [self.mu, 0, self.lambda],
            Frame::T2 => [0, self.mu, self.lambda],
        }
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self.frame {
            Frame::T0 => 0,
            Frame::T1 => 1,
            Frame::T2 => 2,
        };
        write!(f, "{}·μ{i} {:+}·λ{i}", self.mu, self.lambda)
    }
}

/// The gluing `φ: T1 → T2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GluingMatrix {
    m: i64,
}

impl GluingMatrix {
    /// `P × S¹/[m]` and `P × S¹/[−m]` are homeomorphic, so `m` is stored as
    /// `|m|`.
    pub fn new(m: i64) -> Self {
        Self { m: m.abs() }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Columns are the images of `μ₁` and `λ₁`.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[-1, self.m], [0, 1]]
    }

    pub fn determinant(&self) -> i64 {
        let a = self.matrix();
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    }
}

/// `φ(c)` for a class on `T1`.
pub fn apply_gluing(g: &GluingMatrix, c: &HomologyClass) -> Result<HomologyClass, HomologyError> {
    if c.frame != Frame::T1 {
        return Err(HomologyError::WrongFrame {
            expected: Frame::T1.to_string(),
            found: c.frame.to_string(),
        });
    }
    let a = g.matrix();
    Ok(HomologyClass::new(
        Frame::T2,
        a[0][0] * c.mu + a[0][1] * c.lambda,
        a[1][0] * c.mu + a[1][1] * c.lambda,
    ))
}

/// Geometric distance between two primitive slopes on the same torus.
pub fn slope_distance(a: &HomologyClass, b: &HomologyClass) -> Result<u64, HomologyError> {
    if a.frame != b.frame {
        return Err(HomologyError::WrongFrame {
            expected: a.frame.to_string(),
            found: b.frame.to_string(),
        });
    }
    for c in [a, b] {
        if !c.is_primitive() {
            return Err(HomologyError::NonPrimitive {
                mu: c.mu,
                lambda: c.lambda,
            });
        }
    }
    Ok(a.intersection(b).unsigned_abs())
}

/// Boundary of a punctured annulus `Q ⊂ P × S¹`: its total class on `T0`
/// and its two boundary circles on `T1` and `T2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AnnulusBoundary {
    pub on_t0: HomologyClass,
    pub on_t1: HomologyClass,
    pub on_t2: HomologyClass,
}

/// Checks that the boundary of `Q` vanishes in `H₁(P × S¹)`. Writing the
/// `T0` part as `q·(μ₀ + b₀λ₀)`, this is `a₁ = a₂ = q` and
/// `q·b₀ = −(b₁ + b₂)`.
pub fn verify_relations(b: &AnnulusBoundary) -> ConstraintVerdict {
    const NAME: &str = "annulus-boundary-relation";
    let frames_ok =
        b.on_t0.frame == Frame::T0 && b.on_t1.frame == Frame::T1 && b.on_t2.frame == Frame::T2;
    if !frames_ok {
        return ConstraintVerdict::violated(NAME, "boundary classes must lie on T0, T1, T2 in that order");
    }
    let mut sum = [0i64; 3];
    for c in [b.on_t0, b.on_t1, b.on_t2] {
        for (s, x) in sum.iter_mut().zip(c.in_pants_basis()) {
            *s += x;
        }
    }
    if sum == [0, 0, 0] {
        ConstraintVerdict::satisfied(NAME)
    } else {
        ConstraintVerdict::violated(
            NAME,
            format!(
                "boundary sums to {}·μ1 {:+}·μ2 {:+}·λ0, not zero",
                sum[0], sum[1], sum[2]
            ),
        )
    }
}

/// The boundary slope classification for one gluing parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KleinSolution {
    pub m: i64,
    /// Number of boundary components of `Q` on `T0`.
    pub q: i64,
    pub b0: i64,
    pub b1: i64,
    pub b2: i64,
    /// The boundary slope `μ₀ + b₀λ₀` on `T0`.
    pub alpha: HomologyClass,
    /// `Δ(α, μ₀)`.
    pub distance: u64,
}

impl KleinSolution {
    pub fn boundary_t1(&self) -> HomologyClass {
        HomologyClass::new(Frame::T1, self.q, self.b1)
    }

    pub fn boundary_t2(&self) -> HomologyClass {
        HomologyClass::new(Frame::T2, self.q, self.b2)
    }
}

/// Solves for punctured annuli `Q` whose boundary classes on `T1` and `T2`
/// are matched by the gluing, `φ(∂₁Q) = ε·∂₂Q`.
///
/// From `∂₁Q = qμ₁ + b₁λ₁` and `∂₂Q = qμ₂ + b₂λ₂`, matching coefficients
/// gives `b₁m = (1 + ε)q` and `b₁ = εb₂`. With `ε = −1` the relation
/// `qb₀ = −(b₁ + b₂)` forces `b₀ = 0`, i.e. `α = μ₀`, which is excluded.
/// With `ε = +1`, `b₁ = b₂ = 2q/m` and `b₀ = −4/m`; the boundary circles are
/// primitive exactly when `gcd(q, 2q/m) = 1`.
pub fn solve_klein_slopes(m: i64) -> Option<KleinSolution> {
    let m = m.abs();
    if m == 0 {
        // b₁·0 = 2q forces q = 0.
        return None;
    }
    // q = m/2 for even m and q = m for odd m are the only candidates with
    // gcd(q, 2q/m) = 1, so scanning up to m suffices.
    for q in 1..=m {
        if (2 * q) % m != 0 {
            continue;
        }
        let b1 = 2 * q / m;
        let b2 = b1;
        if gcd(q as u64, b1 as u64) != 1 {
            continue;
        }
        // q·b₀ = −(b₁ + b₂) must have an integer solution.
        if (b1 + b2) % q != 0 {
            continue;
        }
        let b0 = -(b1 + b2) / q;
        if b0 == 0 {
            continue;
        }
        let alpha = HomologyClass::new(Frame::T0, 1, b0);
        let distance = slope_distance(&alpha, &HomologyClass::mu(Frame::T0)).ok()?;
        return Some(KleinSolution {
            m,
            q,
            b0,
            b1,
            b2,
            alpha,
            distance,
        });
    }
    None
}

/// Solutions for every `m` in `0..=max`.
pub fn klein_scan(max: i64) -> Vec<(i64, Option<KleinSolution>)> {
    (0..=max).map(|m| (m, solve_klein_slopes(m))).collect()
}

/// The set of slope distances `Δ(α, μ₀)` realizable over all `m`. Every
/// solution has `m | 4`, so `m ≤ 4` covers them all.
pub fn exceptional_distances() -> Vec<u64> {
    let mut d: Vec<u64> = (0..=4)
        .filter_map(solve_klein_slopes)
        .map(|s| s.distance)
        .collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// `Δ(α, λ₀)·q = q` must hold, so `Δ(α, λ₀) = 1`.
pub fn claim_c4_check(delta_alpha_lambda: i64, q: i64) -> ConstraintVerdict {
    const NAME: &str = "single-crossing-with-fiber";
    if q >= 1 && delta_alpha_lambda * q == q {
        ConstraintVerdict::satisfied(NAME)
    } else {
        ConstraintVerdict::violated(
            NAME,
            format!("Δ(α, λ0)·q = {} differs from q = {q}", delta_alpha_lambda * q),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gluing_images() {
        let g = GluingMatrix::new(3);
        assert_eq!(
            apply_gluing(&g, &HomologyClass::mu(Frame::T1)).unwrap(),
            HomologyClass::new(Frame::T2, -1, 0)
        );
        assert_eq!(
            apply_gluing(&g, &HomologyClass::lambda(Frame::T1)).unwrap(),
            HomologyClass::new(Frame::T2, 3, 1)
        );
        assert!(matches!(
            apply_gluing(&g, &HomologyClass::mu(Frame::T0)),
            Err(HomologyError::WrongFrame { .. })
        ));
        assert_eq!(GluingMatrix::new(-5).m(), 5);
    }

    #[test]
    fn klein_classification() {
        let s1 = solve_klein_slopes(1).unwrap();
        assert_eq!((s1.q, s1.distance, s1.alpha.lambda), (1, 4, -4));
        let s2 = solve_klein_slopes(2).unwrap();
        assert_eq!((s2.q, s2.distance), (1, 2));
        let s4 = solve_klein_slopes(4).unwrap();
        assert_eq!((s4.q, s4.distance, s4.alpha.lambda), (2, 1, -1));
        assert!(solve_klein_slopes(3).is_none());
        assert!(solve_klein_slopes(0).is_none());
        assert_eq!(exceptional_distances(), vec![1, 2, 4]);
    }

    #[test]
    fn solutions_close_up_under_the_gluing() {
        for m in [1, 2, 4] {
            let s = solve_klein_slopes(m).unwrap();
            let g = GluingMatrix::new(m);
            let img = apply_gluing(&g, &s.boundary_t1()).unwrap();
            assert_eq!(img, s.boundary_t2());
            let boundary = AnnulusBoundary {
                on_t0: s.alpha.scale(s.q),
                on_t1: s.boundary_t1(),
                on_t2: s.boundary_t2(),
            };
            assert!(verify_relations(&boundary).satisfied);
            assert_eq!(
                slope_distance(&s.alpha, &HomologyClass::lambda(Frame::T0)).unwrap(),
                1
            );
        }
    }

    #[test]
    fn gluing_reverses_intersections() {
        for m in 0..=6 {
            let g = GluingMatrix::new(m);
            assert_eq!(g.determinant(), -1);
            for a in -10..=10 {
                for b in -10..=10 {
                    let c = HomologyClass::new(Frame::T1, a, b);
                    let fc = apply_gluing(&g, &c).unwrap();
                    for (x, y) in [(1, 0), (0, 1), (3, -2), (-7, 5)] {
                        let d = HomologyClass::new(Frame::T1, x, y);
                        let fd = apply_gluing(&g, &d).unwrap();
                        assert_eq!(fc.intersection(&fd), -c.intersection(&d));
                    }
                }
            }
        }
    }

    #[test]
    fn scan_finds_exactly_three_gluings() {
        let found: Vec<i64> = klein_scan(100)
            .into_iter()
            .filter_map(|(m, s)| s.map(|_| m))
            .collect();
        assert_eq!(found, vec![1, 2, 4]);
        for m in [1, 2, 4] {
            let s = solve_klein_slopes(m).unwrap();
            assert_eq!(s.distance, (4 / m) as u64);
        }
    }

    #[test]
    fn boundary_relations() {
        let q = 2;
        let (b1, b2) = (3, 5);
        let b0 = -(b1 + b2) / q;
        let ok = AnnulusBoundary {
            on_t0: HomologyClass::new(Frame::T0, q, q * b0),
            on_t1: HomologyClass::new(Frame::T1, q, b1),
            on_t2: HomologyClass::new(Frame::T2, q, b2),
        };
        assert!(verify_relations(&ok).satisfied);
        let bad = AnnulusBoundary {
            on_t1: HomologyClass::new(Frame::T1, q + 1, b1),
            ..ok
        };
        assert!(!verify_relations(&bad).satisfied);
        let zero = AnnulusBoundary {
            on_t0: HomologyClass::new(Frame::T0, 0, 0),
            on_t1: HomologyClass::new(Frame::T1, 0, 0),
            on_t2: HomologyClass::new(Frame::T2, 0, 0),
        };
        assert!(verify_relations(&zero).satisfied);
    }

    #[test]
    fn distances() {
        let mu0 = HomologyClass::mu(Frame::T0);
        assert_eq!(slope_distance(&HomologyClass::new(Frame::T0, 1, -4), &mu0), Ok(4));
        assert_eq!(slope_distance(&mu0, &mu0), Ok(0));
        assert_eq!(slope_distance(&HomologyClass::new(Frame::T0, 1, -2), &mu0), Ok(2));
        assert!(matches!(
            slope_distance(&HomologyClass::new(Frame::T0, 2, 4), &mu0),
            Err(HomologyError::NonPrimitive { mu: 2, lambda: 4 })
        ));
    }

    #[test]
    fn c4() {
        assert!(claim_c4_check(1, 2).satisfied);
        assert!(!claim_c4_check(2, 1).satisfied);
        assert!(claim_c4_check(1, 1).satisfied);
    }
}
