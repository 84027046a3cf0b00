use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    depth_report, is_regular_sequence_in_even_part, krull_dimension, zero_divisor_witness, DepthReport,
    ZeroDivisorWitness,
};
use crate::diagrams::GroupDiagram;
use crate::error::Result;
use crate::models::{CylinderAlgebra, TruncatedRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Decision {
    CohenMacaulay,
    NotCohenMacaulay,
    UnknownUpTo(u32),
}

impl Decision {
    pub fn is_definite(&self) -> bool {
        !matches!(self, Decision::UnknownUpTo(_))
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::CohenMacaulay => f.write_str("CohenMacaulay"),
            Decision::NotCohenMacaulay => f.write_str("NotCohenMacaulay"),
            Decision::UnknownUpTo(d) => write!(f, "UnknownUpTo({d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum VerdictBasis {
    /// `rank H = rank K⁻ = rank K⁺`.
    RankEquality { rank: u32 },
    SumSurjective { bound: u32 },
    /// Exact failure of `im φ + im ψ` in `degree`.
    SumFailure { degree: u32, missing: String },
    /// Even-degree zero divisor that is regular on the even part.
    ZeroDivisorGap { krull_dimension: u32, witness: ZeroDivisorWitness },
    DirectComputation { krull_dimension: u32, depth: DepthReport },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CMVerdict {
    pub decision: Decision,
    pub basis: VerdictBasis,
    /// Truncation degree used for the computation.
    pub bound: u32,
    /// Set when the conclusion rests on checks through `bound` only.
    pub bounded: bool,
    pub assumptions: Vec<String>,
}

impl fmt::Display for CMVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.decision, &self.basis) {
            (d, VerdictBasis::RankEquality { rank }) => write!(f, "{d} (equal ranks {rank})"),
            (d, VerdictBasis::SumSurjective { bound }) => {
                write!(f, "{d} (corank ≤ 1, sum surjective through {bound})")
            }
            (d, VerdictBasis::SumFailure { degree, missing }) => {
                write!(f, "{d}: sum-of-images fails at degree {degree}, missing class {missing}")
            }
            (d, VerdictBasis::ZeroDivisorGap { krull_dimension, witness }) => write!(
                f,
                "{d}: {} kills {} in degree {} with Krull dimension {krull_dimension}",
                witness.alpha.class, witness.beta.class, witness.product_degree
            ),
            (d, VerdictBasis::DirectComputation { krull_dimension, depth }) => {
                let depth = match depth.exact_depth() {
                    Some(e) => format!("depth {e}"),
                    None => format!("depth ≥ {}", depth.lower_bound),
                };
                write!(f, "{d} (Krull dimension {krull_dimension}, {depth}, through {})", self.bound)
            }
        }
    }
}

/// Verdict from the Krull dimension of the diagram and direct depth data of
/// the truncated ring.
///
/// A depth lower bound equal to the Krull dimension gives CohenMacaulay; a
/// socle class modulo a shorter regular sequence, or a zero divisor of even
/// degree that is regular on the even part, gives NotCohenMacaulay.
pub fn cm_from_invariants(
    ring: &TruncatedRing,
    cylinder: &CylinderAlgebra,
    diagram: &GroupDiagram,
    seed: u64,
) -> Result<CMVerdict> {
    let kdim = krull_dimension(diagram);
    let bound = ring.bound();
    let depth = depth_report(ring, kdim, seed);
    let verdict = |decision, basis| CMVerdict { decision, basis, bound, bounded: true, assumptions: Vec::new() };
    if depth.lower_bound == kdim {
        return Ok(verdict(Decision::CohenMacaulay, VerdictBasis::DirectComputation { krull_dimension: kdim, depth }));
    }
    if depth.socle.is_some() {
        return Ok(verdict(
            Decision::NotCohenMacaulay,
            VerdictBasis::DirectComputation { krull_dimension: kdim, depth },
        ));
    }
    if kdim >= 1 {
        if let Some(w) = zero_divisor_witness(ring, cylinder, diagram)? {
            let alpha = w.alpha.to_class();
            if is_regular_sequence_in_even_part(ring, &[alpha])?.is_regular() {
                return Ok(verdict(
                    Decision::NotCohenMacaulay,
                    VerdictBasis::ZeroDivisorGap { krull_dimension: kdim, witness: w },
                ));
            }
        }
    }
    Ok(verdict(Decision::UnknownUpTo(bound), VerdictBasis::DirectComputation { krull_dimension: kdim, depth }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Catalog;
    use crate::invariants::DEFAULT_SEED;
    use crate::models::{borel_model, ring_truncation};

    fn verdict(name: &str, bound: u32) -> CMVerdict {
        let d = Catalog::example(name).unwrap();
        let cyl = borel_model(&d, bound).unwrap();
        let ring = ring_truncation(&cyl, bound);
        cm_from_invariants(&ring, &cyl, &d, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn corank_example_is_not_cm() {
        let v = verdict("corank", 16);
        assert_eq!(v.decision, Decision::NotCohenMacaulay);
        match v.basis {
            VerdictBasis::DirectComputation { krull_dimension, depth } => {
                assert_eq!(krull_dimension, 2);
                assert_eq!(depth.lower_bound, 1);
            }
            other => panic!("unexpected basis {other:?}"),
        }
    }

    #[test]
    fn suspension_is_not_cm() {
        let v = verdict("susp_w711", 16);
        assert_eq!(v.decision, Decision::NotCohenMacaulay);
    }

    #[test]
    fn display_forms() {
        let v = CMVerdict {
            decision: Decision::NotCohenMacaulay,
            basis: VerdictBasis::SumFailure { degree: 2, missing: "t".into() },
            bound: 20,
            bounded: false,
            assumptions: vec![],
        };
        assert_eq!(v.to_string(), "NotCohenMacaulay: sum-of-images fails at degree 2, missing class t");
    }
}
