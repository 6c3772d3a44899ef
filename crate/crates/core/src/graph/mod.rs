//! Labeled fat graphs on a torus.

pub mod canonical;
pub mod embedded;
pub mod reduce;
pub mod rotation;
pub mod text;

pub use canonical::{canonical_key, graph_key, map_key, CanonicalKey, Tags};
pub use embedded::{
    build_graph, Corner, Edge, EdgeEnd, EdgeSpec, EmbeddedGraph, Face, FatVertex, LabelFrame,
};
pub use reduce::{reduce_graph, ParallelFamily};
pub use rotation::{Dart, RotationSystem, SlotRef, SurfaceSummary};
pub use text::{format_graph, parse_graph};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Mul, Neg};

/// A sign in `{+1, −1}`: vertex parity, edge sign, or permutation epsilon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn from_int(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    /// Sign of an edge joining vertices of the given parities: positive iff
    /// the parities agree.
    pub fn of_edge(a: Sign, b: Sign) -> Sign {
        a * b
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Reduces `x` into the label range `1..=n`, mapping residue 0 to `n`.
pub fn normalize_label(x: i64, n: u32) -> u32 {
    let n = i64::from(n);
    let r = x.rem_euclid(n);
    (if r == 0 { n } else { r }) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::from_int(-1), Some(Sign::Minus));
        assert_eq!(Sign::from_int(0), None);
    }

    #[test]
    fn labels_are_one_based() {
        assert_eq!(normalize_label(0, 6), 6);
        assert_eq!(normalize_label(7, 6), 1);
        assert_eq!(normalize_label(-1, 6), 5);
        assert_eq!(normalize_label(5, 1), 1);
    }
}
