use serde::{Deserialize, Serialize};

use crate::diagrams::GroupDiagram;
use crate::linalg::{Echelon, Quotient, SparseVec};
use crate::models::{Class, TruncatedRing};

/// `max(rank K⁻, rank K⁺)`.
pub fn krull_dimension(d: &GroupDiagram) -> u32 {
    d.kminus().rank.max(d.kplus().rank)
}

/// Indecomposable classes per degree `1..=bound`: a complement of the span of
/// products of positive-degree classes. With `even_only`, only even degrees
/// and products of even classes are considered.
pub fn indecomposables(ring: &TruncatedRing, even_only: bool) -> Vec<Class> {
    let bound = ring.bound();
    let mut out = Vec::new();
    for n in 1..=bound {
        if even_only && n % 2 == 1 {
            continue;
        }
        let mut dec = Echelon::new();
        for a in 1..=n / 2 {
            if even_only && a % 2 == 1 {
                continue;
            }
            for i in 0..ring.dim(a) {
                if let Some(cols) = ring.multiplication_columns(&Class::basis(a, i), n - a) {
                    for c in cols {
                        dec.insert(c);
                    }
                }
            }
        }
        let all: Vec<SparseVec> = (0..ring.dim(n)).map(SparseVec::unit).collect();
        let q = Quotient::new(dec, &all);
        out.extend(q.representatives().iter().map(|r| Class::new(n, r.clone())));
    }
    out
}

/// Result of the Hilbert-series cross-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthEstimate {
    /// Set when the numerator of the Hilbert series stabilised inside the truncation.
    pub estimate: Option<u32>,
    /// Plausible range for the dimension when no estimate is available.
    pub window: (u32, u32),
    /// Degrees of the indecomposables of the even part.
    pub generator_degrees: Vec<u32>,
    /// Coefficients of `H_even(t) · Π(1 − t^g)` through the bound.
    pub numerator: Vec<i128>,
}

impl GrowthEstimate {
    pub fn is_conclusive(&self) -> bool {
        self.estimate.is_some()
    }

    /// Lower end of what the estimate supports.
    pub fn lower(&self) -> u32 {
        self.estimate.unwrap_or(self.window.0)
    }
}

/// Multiplicity of `t = 1` as a root of an integer polynomial.
fn order_at_one(coeffs: &[i128]) -> u32 {
    let mut p: Vec<i128> = coeffs.to_vec();
    while p.last() == Some(&0) {
        p.pop();
    }
    let mut order = 0;
    while !p.is_empty() && p.iter().sum::<i128>() == 0 {
        // divide by (t - 1): synthetic division from the top
        let n = p.len() - 1;
        let mut q = vec![0i128; n];
        let mut carry = 0i128;
        for k in (1..=n).rev() {
            carry += p[k];
            q[k - 1] = carry;
        }
        p = q;
        order += 1;
    }
    order
}

/// Estimates the Krull dimension of the even part from its Hilbert function.
///
/// The even part is generated by its indecomposables of degrees `g_i`, so
/// `H_even(t) = N(t) / Π(1 − t^{g_i})` with `N` a polynomial. When the
/// computed numerator vanishes over the last `2·max g_i` degrees of the
/// truncation it is taken as final and the dimension is the pole order at
/// `t = 1`. Otherwise the window runs from the growth exponent of the
/// cumulative dimension between `D/2` and `D` to the number of generators.
pub fn hilbert_growth_dimension(ring: &TruncatedRing) -> GrowthEstimate {
    let bound = ring.bound() as usize;
    let gens = indecomposables(ring, true);
    let degrees: Vec<u32> = gens.iter().map(|c| c.degree).collect();
    let mut num: Vec<i128> = (0..=bound).map(|n| if n % 2 == 0 { ring.dim(n as u32) as i128 } else { 0 }).collect();
    for &g in &degrees {
        let g = g as usize;
        for n in (g..=bound).rev() {
            num[n] -= num[n - g];
        }
    }
    let m = degrees.len() as u32;
    let g_max = degrees.iter().copied().max().unwrap_or(0) as usize;
    let last = (0..=bound).rev().find(|&n| num[n] != 0).unwrap_or(0);
    if bound - last >= 2 * g_max {
        let k = m - order_at_one(&num[..=last]).min(m);
        return GrowthEstimate { estimate: Some(k), window: (k, k), generator_degrees: degrees, numerator: num };
    }
    let cumulative = |upto: usize| -> f64 { (0..=upto).step_by(2).map(|n| ring.dim(n as u32) as f64).sum() };
    let (lo_sum, hi_sum) = (cumulative(bound / 2), cumulative(bound));
    let lo = if lo_sum > 0.0 && hi_sum > lo_sum { ((hi_sum / lo_sum).ln() / 2f64.ln()).floor() as u32 } else { 0 };
    GrowthEstimate { estimate: None, window: (lo.min(m), m), generator_degrees: degrees, numerator: num }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FreeGCAlgebra;
    use crate::models::{ring_truncation, Cdga};

    #[test]
    fn order_at_one_examples() {
        assert_eq!(order_at_one(&[1]), 0);
        assert_eq!(order_at_one(&[1, -1]), 1);
        assert_eq!(order_at_one(&[1, -2, 1]), 2);
        assert_eq!(order_at_one(&[1, 0, -2, 1]), 1);
    }

    #[test]
    fn polynomial_ring_three() {
        let a = FreeGCAlgebra::from_pairs(&[("t", 4), ("v", 4), ("w", 6)]).unwrap();
        let r = ring_truncation(&Cdga::zero(&a), 24);
        let g = hilbert_growth_dimension(&r);
        assert_eq!(g.estimate, Some(3));
        assert_eq!(g.generator_degrees, vec![4, 4, 6]);
    }

    #[test]
    fn point_is_zero_dimensional() {
        let a = FreeGCAlgebra::from_pairs(&[]).unwrap();
        let r = ring_truncation(&Cdga::zero(&a), 10);
        assert_eq!(hilbert_growth_dimension(&r).estimate, Some(0));
    }

    #[test]
    fn exterior_generators_are_indecomposable() {
        let a = FreeGCAlgebra::from_pairs(&[("u", 3), ("t", 2)]).unwrap();
        let r = ring_truncation(&Cdga::zero(&a), 8);
        let degs: Vec<u32> = indecomposables(&r, false).iter().map(|c| c.degree).collect();
        assert_eq!(degs, vec![2, 3]);
    }
}
