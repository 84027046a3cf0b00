use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CompactGroupData;
use crate::algebra::AlgebraMorphism;
use crate::error::{Error, Result};
use crate::models::{cohomology_betti, formal_dimension, homogeneous_model_auto};

/// Rational type of a homogeneous fiber `K/H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FiberType {
    RationalOddSphere(u32),
    W7Type,
    B13Type,
    EvenType,
    Unknown,
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::RationalOddSphere(n) => write!(f, "RationalOddSphere({n})"),
            FiberType::W7Type => write!(f, "W7Type"),
            FiberType::B13Type => write!(f, "B13Type"),
            FiberType::EvenType => write!(f, "EvenType"),
            FiberType::Unknown => write!(f, "Unknown"),
        }
    }
}

impl FromStr for FiberType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "W7Type" => FiberType::W7Type,
            "B13Type" => FiberType::B13Type,
            "EvenType" => FiberType::EvenType,
            "Unknown" => FiberType::Unknown,
            _ => {
                let n = s
                    .strip_prefix("RationalOddSphere(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| Error::InvalidDiagram(format!("unknown fiber type `{s}`")))?;
                FiberType::RationalOddSphere(n)
            }
        })
    }
}

impl FiberType {
    /// Whether this type can contribute to a non-Cohen–Macaulay join.
    pub fn is_join_obstruction(&self) -> bool {
        matches!(self, FiberType::W7Type | FiberType::B13Type | FiberType::EvenType)
    }
}

/// Classifies a betti sequence running through the top degree `dim`.
pub fn classify_betti(betti: &[usize], dim: u32) -> FiberType {
    let nonzero: Vec<usize> = (0..betti.len()).filter(|&n| betti[n] != 0).collect();
    if dim % 2 == 1 && nonzero == [0, dim as usize] && betti[dim as usize] == 1 {
        return FiberType::RationalOddSphere(dim);
    }
    if dim == 7 && betti == [1, 0, 1, 0, 0, 1, 0, 1] {
        return FiberType::W7Type;
    }
    if dim == 13 && nonzero == [0, 2, 4, 9, 11, 13] && nonzero.iter().all(|&n| betti[n] == 1) {
        return FiberType::B13Type;
    }
    if dim.is_multiple_of(2) && betti.iter().skip(1).step_by(2).all(|&b| b == 0) {
        return FiberType::EvenType;
    }
    FiberType::Unknown
}

/// Rational type of `K/H` from the cohomology of its homogeneous model,
/// computed through the dimension of `K/H`.
pub fn fiber_type(k: &CompactGroupData, h: &CompactGroupData, iota: &AlgebraMorphism) -> FiberType {
    let dim = match (k.dim, h.dim) {
        (Some(a), Some(b)) if a >= b => (a - b) as i64,
        _ => formal_dimension(iota),
    };
    if dim <= 0 {
        return FiberType::Unknown;
    }
    let model = match homogeneous_model_auto(iota) {
        Ok(m) => m,
        Err(_) => return FiberType::Unknown,
    };
    classify_betti(&cohomology_betti(&model, dim as u32), dim as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_patterns() {
        assert_eq!(classify_betti(&[1, 0, 0, 0, 0, 1], 5), FiberType::RationalOddSphere(5));
        assert_eq!(classify_betti(&[1, 0, 1, 0, 0, 1, 0, 1], 7), FiberType::W7Type);
        let mut b13 = vec![0; 14];
        for n in [0, 2, 4, 9, 11, 13] {
            b13[n] = 1;
        }
        assert_eq!(classify_betti(&b13, 13), FiberType::B13Type);
        assert_eq!(classify_betti(&[1, 0, 2, 0, 2, 0, 1], 6), FiberType::EvenType);
        assert_eq!(classify_betti(&[1, 1, 0, 1], 3), FiberType::Unknown);
    }

    #[test]
    fn display_round_trip() {
        for t in [
            FiberType::RationalOddSphere(7),
            FiberType::W7Type,
            FiberType::B13Type,
            FiberType::EvenType,
            FiberType::Unknown,
        ] {
            assert_eq!(t.to_string().parse::<FiberType>().unwrap(), t);
        }
        assert!("Sphere".parse::<FiberType>().is_err());
    }
}
