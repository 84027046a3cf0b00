use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::ClassJson;
use crate::algebra::{
    injectivity_report, sum_image_report, AlgebraMorphism, InjectivityReport, Polynomial, SumImageReport,
};
use crate::diagrams::GroupDiagram;
use crate::error::Result;
use crate::linalg::Echelon;
use crate::models::{CylinderAlgebra, TruncatedRing};

/// Nonzero classes `α`, `β` with `α·β = 0`, built from a gap in
/// `im φ + im ψ` and kernel elements of the maps of larger rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroDivisorWitness {
    /// First degree where the sum of images misses the target.
    pub gap_degree: u32,
    /// Target class outside `im φ + im ψ`, hit by the added generator `w`.
    pub missing: String,
    pub w: String,
    pub alpha: ClassJson,
    pub beta: ClassJson,
    pub product_degree: u32,
}

fn first_kernel(m: &AlgebraMorphism, bound: u32) -> Option<(u32, Polynomial)> {
    match injectivity_report(m, bound) {
        InjectivityReport::KernelAt { degree, element } => Some((degree, element)),
        InjectivityReport::InjectiveUpTo(_) => None,
    }
}

/// Searches for a zero-divisor pair in the cylinder cohomology.
///
/// `β` is the class of `(dw, 0)` for an added pair whose value lies outside
/// `im φ + im ψ`; `α` is assembled from kernel elements on the side(s) whose
/// rank exceeds `rank H`. Returns `None` when the sum of images is onto, the
/// ranks agree, or the product falls above the ring's bound.
pub fn zero_divisor_witness(
    ring: &TruncatedRing,
    cylinder: &CylinderAlgebra,
    diagram: &GroupDiagram,
) -> Result<Option<ZeroDivisorWitness>> {
    let bound = ring.bound();
    let phi = cylinder.extension().base_morphism();
    let psi = cylinder.psi();
    let SumImageReport::FailsAt { degree: d0, .. } = sum_image_report(phi, psi, bound)? else {
        return Ok(None);
    };
    let target = cylinder.target();
    let tb = target.basis(d0);
    let mut sum = Echelon::from_vectors(&phi.slice_columns(d0));
    for c in psi.slice_columns(d0) {
        sum.insert(c);
    }
    let ext = cylinder.extension();
    let Some(k) = (0..ext.pairs().len()).find(|&k| {
        let p = &ext.pairs()[k];
        p.w.degree == d0 && !sum.contains(&p.value.to_coords(&tb).expect("value has the pair's degree"))
    }) else {
        return Ok(None);
    };
    let pair = &ext.pairs()[k];
    let left = cylinder.left_algebra();
    let right = cylinder.right_algebra();
    let (_, dw_index) = ext.pair_indices(k);

    let rh = diagram.h().rank;
    let (rm, rp) = (diagram.kminus().rank, diagram.kplus().rank);
    let ker_m = if rm > rh { first_kernel(phi, bound) } else { None };
    let ker_p = if rp > rh { first_kernel(psi, bound) } else { None };
    let base_index: Vec<usize> = (0..phi.source().len()).collect();
    let (deg, a1, a2) = match (ker_m, ker_p) {
        (Some((a, k1)), Some((b, k2))) => {
            let l = a.lcm(&b);
            (l, k1.pow(l / a).transport(left, &base_index), k2.pow(l / b))
        }
        (Some((a, k1)), None) => (a, k1.transport(left, &base_index), Polynomial::zero(right)),
        (None, Some((b, k2))) => (b, Polynomial::zero(left), k2),
        (None, None) => return Ok(None),
    };
    let beta_deg = d0 + 1;
    if deg + beta_deg > bound {
        return Ok(None);
    }
    let alpha_vec = cylinder.join(deg, &a1, &a2)?;
    let beta_vec = cylinder.join(beta_deg, &Polynomial::generator(left, dw_index), &Polynomial::zero(right))?;
    let (Some(alpha), Some(beta)) = (ring.class_of(deg, &alpha_vec), ring.class_of(beta_deg, &beta_vec)) else {
        return Ok(None);
    };
    if alpha.is_zero() || beta.is_zero() {
        return Ok(None);
    }
    let product = ring.multiply(&alpha, &beta).expect("within bound");
    if !product.is_zero() {
        return Ok(None);
    }
    Ok(Some(ZeroDivisorWitness {
        gap_degree: d0,
        missing: pair.value.to_string(),
        w: pair.w.name.clone(),
        alpha: ClassJson::new(ring, &alpha),
        beta: ClassJson::new(ring, &beta),
        product_degree: deg + beta_deg,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{suspension_diagram, Catalog};
    use crate::models::{borel_model, ring_truncation};

    #[test]
    fn suspension_of_aloff_wallach() {
        let w7 = Catalog::builtin().pair("W7").unwrap();
        let d = suspension_diagram(&w7.k, &w7.h, &w7.iota).unwrap();
        let cyl = borel_model(&d, 16).unwrap();
        let ring = ring_truncation(&cyl, 16);
        let w = zero_divisor_witness(&ring, &cyl, &d).unwrap().unwrap();
        assert_eq!(w.gap_degree, 2);
        assert_eq!(w.alpha.degree, 12);
        assert_eq!(w.beta.degree, 3);
        assert_eq!(w.product_degree, 15);
        assert!(w.alpha.representative.contains("27"));
    }

    #[test]
    fn too_small_bound_gives_nothing() {
        let w7 = Catalog::builtin().pair("W7").unwrap();
        let d = suspension_diagram(&w7.k, &w7.h, &w7.iota).unwrap();
        let cyl = borel_model(&d, 12).unwrap();
        let ring = ring_truncation(&cyl, 12);
        assert_eq!(zero_divisor_witness(&ring, &cyl, &d).unwrap(), None);
    }
}
