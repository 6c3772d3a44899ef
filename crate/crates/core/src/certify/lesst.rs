//! Size forcing: with `Δ ≥ 6` and at least three partner circles, every
//! family has size exactly `t` and the reduced graph is 6-regular.

use crate::constraints::{negative_size_bound, positive_size_bound, ConstraintVerdict};
use crate::graph::Sign;

const NAME: &str = "size-forcing";

/// The shape forced on the reduced graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcedShape {
    pub degree: u32,
    pub family_size: u32,
}

/// `None` when the rule does not apply (`t < 3` or `Δ < 6`) or when it
/// rules the distance out.
pub fn forced_shape(t: u32, delta: u32) -> Option<ForcedShape> {
    (t >= 3 && delta == 6).then_some(ForcedShape {
        degree: 6,
        family_size: t,
    })
}

/// Satisfied when the rule is out of its domain or forces a shape;
/// violated for `Δ > 6`, where the forced degree `Δ` contradicts
/// 6-regularity of a reduced torus triangulation.
pub fn lesst_precondition(t: u32, delta: u32) -> ConstraintVerdict {
    if t < 3 || delta < 6 {
        return ConstraintVerdict::from_witness(NAME, None);
    }
    if delta > 6 {
        return ConstraintVerdict::violated(
            NAME,
            format!("families of size at most {t} give reduced degree at least {delta} > 6"),
        );
    }
    ConstraintVerdict::satisfied(NAME)
}

/// True when `lesst_precondition` has something to say.
pub fn lesst_applies(t: u32, delta: u32) -> bool {
    t >= 3 && delta >= 6
}

/// Checks one hypothetical family against the forcing argument.
///
/// A negative family of size `t + 1` makes every face even sided, so the
/// reduced graph has no triangles and a vertex of reduced degree at most 4.
/// Its degree is then at most `4(t + 1)`, below `Δ·t` once `t ≥ 3`.
pub fn lesst_family_check(t: u32, delta: u32, sign: Sign, size: u32) -> ConstraintVerdict {
    if !lesst_applies(t, delta) {
        return ConstraintVerdict::satisfied(NAME);
    }
    if sign.is_plus() {
        let v = positive_size_bound(t).check_size(size);
        return ConstraintVerdict::from_witness(NAME, v.witness);
    }
    let bound = negative_size_bound(t, true);
    if size > bound.bound {
        let v = bound.check(size, delta);
        return ConstraintVerdict::from_witness(NAME, v.witness);
    }
    if size == t + 1 && delta * t > 4 * (t + 1) {
        return ConstraintVerdict::violated(
            NAME,
            format!(
                "a negative family of size {} forces a vertex of degree at most {} < {}, whence t ≤ 2",
                t + 1,
                4 * (t + 1),
                delta * t
            ),
        );
    }
    ConstraintVerdict::satisfied(NAME)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forcing() {
        assert_eq!(
            forced_shape(3, 6),
            Some(ForcedShape {
                degree: 6,
                family_size: 3
            })
        );
        assert!(lesst_precondition(3, 6).satisfied);
        assert!(!lesst_precondition(4, 7).satisfied);
        assert_eq!(forced_shape(2, 6), None);
        assert!(!lesst_applies(2, 6));
    }

    #[test]
    fn hypothetical_families() {
        assert!(!lesst_family_check(3, 6, Sign::Minus, 4).satisfied);
        assert!(lesst_family_check(3, 6, Sign::Minus, 3).satisfied);
        assert!(!lesst_family_check(3, 6, Sign::Minus, 5).satisfied);
        assert!(!lesst_family_check(3, 6, Sign::Plus, 3).satisfied);
        assert!(lesst_family_check(4, 6, Sign::Plus, 4).satisfied);
        // With two partner circles the inequality no longer bites.
        assert!(lesst_family_check(2, 6, Sign::Minus, 3).satisfied);
    }
}
