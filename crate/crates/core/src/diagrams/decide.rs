use serde::{Deserialize, Serialize};

use super::{fiber_type, join_diagram, Catalog, FiberType, GroupDiagram, HomogeneousPair};
use crate::algebra::{sum_image_report, surjectivity_report, SumImageReport, SurjectivityReport};
use crate::error::{Error, Result};
use crate::invariants::{cm_from_invariants, CMVerdict, Decision, VerdictBasis};
use crate::models::{borel_model, ring_truncation};

const SULLIVAN_ASSUMED: &str = "Sullivan hypothesis assumed for identity-component data";

fn exact(decision: Decision, basis: VerdictBasis, bound: u32) -> CMVerdict {
    CMVerdict { decision, basis, bound, bounded: false, assumptions: vec![SULLIVAN_ASSUMED.to_string()] }
}

/// Rank test, then the sum-of-images criterion when the corank is at most
/// one, otherwise direct depth and dimension computation on the Borel model.
///
/// `bound` defaults to the diagram's own bound.
pub fn cm_decide(diagram: &GroupDiagram, bound: Option<u32>, seed: u64) -> Result<CMVerdict> {
    let bound = bound.unwrap_or_else(|| diagram.default_bound());
    if diagram.options.sullivan {
        let rh = diagram.h().rank;
        if diagram.kminus().rank == rh && diagram.kplus().rank == rh {
            return Ok(exact(Decision::CohenMacaulay, VerdictBasis::RankEquality { rank: rh }, bound));
        }
        if diagram.max_corank() <= 1 {
            return Ok(match sum_image_report(diagram.iota_minus(), diagram.iota_plus(), bound)? {
                SumImageReport::SumSurjectiveUpTo(b) => CMVerdict {
                    bounded: true,
                    ..exact(Decision::CohenMacaulay, VerdictBasis::SumSurjective { bound: b }, bound)
                },
                SumImageReport::FailsAt { degree, missing } => exact(
                    Decision::NotCohenMacaulay,
                    VerdictBasis::SumFailure { degree, missing: missing.to_string() },
                    bound,
                ),
            });
        }
    }
    let cylinder = borel_model(diagram, bound)?;
    let ring = ring_truncation(&cylinder, bound);
    cm_from_invariants(&ring, &cylinder, diagram, seed)
}

/// Result of asking for a non-Cohen–Macaulay join of two catalog fibers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinOutcome {
    Diagram(Box<GroupDiagram>),
    Refused { left: FiberType, right: FiberType, reason: String },
}

impl JoinOutcome {
    pub fn diagram(&self) -> Option<&GroupDiagram> {
        match self {
            JoinOutcome::Diagram(d) => Some(d),
            JoinOutcome::Refused { .. } => None,
        }
    }
}

fn checked_type(annotated: FiberType, computed: FiberType) -> Result<FiberType> {
    if annotated != computed {
        return Err(Error::InconsistentFiber { annotated: annotated.to_string(), computed: computed.to_string() });
    }
    Ok(computed)
}

/// Join of two catalog fibers whose induced maps are both non-surjective
/// and not both of equal rank; refuses every other combination with the
/// reason the join would be Cohen–Macaulay or unclassified.
pub fn noncm_join_generator(catalog: &Catalog, left: &str, right: &str) -> Result<JoinOutcome> {
    noncm_join(&catalog.pair(left)?, &catalog.pair(right)?)
}

/// [`noncm_join_generator`] on explicit realizing pairs.
pub fn noncm_join(l: &HomogeneousPair, r: &HomogeneousPair) -> Result<JoinOutcome> {
    let lt = checked_type(l.annotated, fiber_type(&l.k, &l.h, &l.iota))?;
    let rt = checked_type(r.annotated, fiber_type(&r.k, &r.h, &r.iota))?;
    let refuse = |reason: &str| Ok(JoinOutcome::Refused { left: lt, right: rt, reason: reason.to_string() });
    for t in [lt, rt] {
        match t {
            FiberType::RationalOddSphere(_) => {
                return refuse("an odd-sphere fiber has surjective induced map, so the join is Cohen–Macaulay")
            }
            FiberType::Unknown => return refuse("fiber type outside the classification"),
            _ => {}
        }
    }
    if l.k.rank == l.h.rank && r.k.rank == r.h.rank {
        return refuse("both fibers have equal rank, so the join has rank H = rank K± and is Cohen–Macaulay");
    }
    let mut d = join_diagram((&l.k, &l.h, &l.iota), (&r.k, &r.h, &r.iota))?;
    d.options.positively_curved = true;
    d.options.fiber_minus = Some(lt.to_string());
    d.options.fiber_plus = Some(rt.to_string());
    Ok(JoinOutcome::Diagram(Box::new(d.with_name(format!("{} * {}", l.name, r.name)))))
}

/// Decision for a diagram whose fibers are spherical space forms.
///
/// Fiber annotations, when present, must agree with the computed types.
/// Both fibers must be odd spheres or even-type with equal rank; the result
/// is always CohenMacaulay, by rank equality or by surjectivity of an
/// odd-sphere side.
pub fn orbifold_check(diagram: &GroupDiagram, bound: Option<u32>) -> Result<CMVerdict> {
    let bound = bound.unwrap_or_else(|| diagram.default_bound());
    let sides = [
        (diagram.kminus(), diagram.iota_minus(), &diagram.options.fiber_minus),
        (diagram.kplus(), diagram.iota_plus(), &diagram.options.fiber_plus),
    ];
    let mut types = Vec::new();
    for (k, iota, annotation) in sides {
        let computed = fiber_type(k, diagram.h(), iota);
        if let Some(a) = annotation {
            checked_type(a.parse()?, computed)?;
        }
        match computed {
            FiberType::RationalOddSphere(_) => {}
            FiberType::EvenType if k.rank == diagram.h().rank => {}
            other => return Err(Error::NotOrbifold(format!("fiber {}/{} has type {other}", k.name, diagram.h().name))),
        }
        types.push(computed);
    }
    let rh = diagram.h().rank;
    if diagram.kminus().rank == rh && diagram.kplus().rank == rh {
        return Ok(exact(Decision::CohenMacaulay, VerdictBasis::RankEquality { rank: rh }, bound));
    }
    let sphere_side = if matches!(types[0], FiberType::RationalOddSphere(_)) {
        diagram.iota_minus()
    } else {
        diagram.iota_plus()
    };
    match surjectivity_report(sphere_side, bound) {
        SurjectivityReport::SurjectiveUpTo(b) => Ok(CMVerdict {
            bounded: true,
            ..exact(Decision::CohenMacaulay, VerdictBasis::SumSurjective { bound: b }, bound)
        }),
        SurjectivityReport::FailsAt { degree, .. } => Err(Error::NotOrbifold(format!(
            "odd-sphere side fails to be surjective in degree {degree}"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedFibers {
    pub minus: FiberType,
    pub plus: FiberType,
}

/// Computed rational types of `K⁻/H` and `K⁺/H`.
pub fn classify_fibers(diagram: &GroupDiagram) -> ClassifiedFibers {
    ClassifiedFibers {
        minus: fiber_type(diagram.kminus(), diagram.h(), diagram.iota_minus()),
        plus: fiber_type(diagram.kplus(), diagram.h(), diagram.iota_plus()),
    }
}
