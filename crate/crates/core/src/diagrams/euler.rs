use std::cmp::Ordering;

use super::{CompactGroupData, GroupDiagram};
use crate::error::{Error, Result};

/// `χ(G/K)`: `weyl(G)/weyl(K)` when the ranks agree, otherwise 0.
pub fn homogeneous_euler(g: &CompactGroupData, k: &CompactGroupData) -> Result<i64> {
    if g.rank != k.rank {
        return Ok(0);
    }
    if !g.weyl_order.is_multiple_of(k.weyl_order) {
        return Err(Error::WeylNotDivisible { numerator: g.weyl_order, denominator: k.weyl_order });
    }
    Ok((g.weyl_order / k.weyl_order) as i64)
}

/// `χ(X) = χ(G/K⁻) + χ(G/K⁺) − χ(G/H)`.
pub fn euler_characteristic(d: &GroupDiagram) -> Result<i64> {
    Ok(homogeneous_euler(d.g(), d.kminus())? + homogeneous_euler(d.g(), d.kplus())? - homogeneous_euler(d.g(), d.h())?)
}

/// Sign of `χ(X)` forced by the corank case analysis for spaces with
/// curvature bounded below by one. `None` when the diagram's dimension is
/// unknown or its coranks fall outside the cases allowed for such spaces.
pub fn predicted_euler_sign(d: &GroupDiagram) -> Result<Option<Ordering>> {
    let Some(dim) = d.dimension() else { return Ok(None) };
    if dim % 2 == 0 {
        return Ok(Some(Ordering::Greater));
    }
    let g = d.g().rank;
    let (h, km, kp) = (d.h().rank, d.kminus().rank, d.kplus().rank);
    if h == g && km == g && kp == g {
        let chi_m = homogeneous_euler(d.kminus(), d.h())?;
        let chi_p = homogeneous_euler(d.kplus(), d.h())?;
        return Ok(Some(if chi_m == 1 || chi_p == 1 {
            Ordering::Greater
        } else if chi_m == 2 && chi_p == 2 {
            Ordering::Equal
        } else {
            Ordering::Less
        }));
    }
    if g - h == 2 && (g - km == 1 || g - kp == 1) {
        return Ok(Some(Ordering::Equal));
    }
    Ok(None)
}
