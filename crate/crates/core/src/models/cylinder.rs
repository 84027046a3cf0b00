use std::sync::{Arc, OnceLock};

use super::{Cdga, CochainModel};
use crate::algebra::{surjective_trick, AlgebraMorphism, ContractibleExtension, FreeGCAlgebra, Polynomial};
use crate::diagrams::GroupDiagram;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, SparseVec};

/// The fiber product `{(a1, a2) : Φ(a1) = ψ(a2)}` inside `E ⊕ A2`, where
/// `E = A1 ⊗ Λ(w, dw)` carries the surjective extension `Φ` of `phi`.
///
/// Elements of degree `n` are stored as vectors over the concatenated
/// monomial bases of `E_n` and `A2_n`.
#[derive(Debug)]
pub struct CylinderAlgebra {
    ext: ContractibleExtension,
    psi: AlgebraMorphism,
    e: Cdga,
    bound: u32,
    slices: Vec<OnceLock<Arc<Vec<SparseVec>>>>,
}

pub fn build_cylinder(phi: &AlgebraMorphism, psi: &AlgebraMorphism, bound: u32) -> Result<CylinderAlgebra> {
    if phi.target() != psi.target() {
        return Err(Error::TargetMismatch);
    }
    let ext = surjective_trick(phi, bound);
    let e = super::make_cdga(ext.algebra(), ext.differential())?;
    let slices = (0..=bound + 1).map(|_| OnceLock::new()).collect();
    Ok(CylinderAlgebra { ext, psi: psi.clone(), e, bound, slices })
}

/// Cylinder on the two classifying-space morphisms of a diagram.
pub fn borel_model(diagram: &GroupDiagram, bound: u32) -> Result<CylinderAlgebra> {
    build_cylinder(diagram.iota_minus(), diagram.iota_plus(), bound)
}

impl CylinderAlgebra {
    pub fn extension(&self) -> &ContractibleExtension {
        &self.ext
    }

    pub fn phi(&self) -> &AlgebraMorphism {
        self.ext.phi()
    }

    pub fn psi(&self) -> &AlgebraMorphism {
        &self.psi
    }

    pub fn left_cdga(&self) -> &Cdga {
        &self.e
    }

    pub fn left_algebra(&self) -> &FreeGCAlgebra {
        self.ext.algebra()
    }

    pub fn right_algebra(&self) -> &FreeGCAlgebra {
        self.psi.source()
    }

    pub fn target(&self) -> &FreeGCAlgebra {
        self.psi.target()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    fn left_dim(&self, n: u32) -> usize {
        self.ext.algebra().slice_dim(n)
    }

    fn compute_slice(&self, n: u32) -> Vec<SparseVec> {
        let target_basis = self.target().basis(n);
        let mut columns: Vec<SparseVec> = self.phi().slice_columns(n);
        columns.extend(self.psi.slice_columns(n).into_iter().map(|c| c.neg()));
        debug_assert!(columns.iter().all(|c| c.iter().all(|(i, _)| i < target_basis.len())));
        nullspace(&columns)
    }

    /// Basis of the degree-`n` slice, computed on first use.
    pub fn slice(&self, n: u32) -> Arc<Vec<SparseVec>> {
        match self.slices.get(n as usize) {
            Some(cell) => cell.get_or_init(|| Arc::new(self.compute_slice(n))).clone(),
            None => Arc::new(self.compute_slice(n)),
        }
    }

    pub fn slice_dim(&self, n: u32) -> usize {
        self.slice(n).len()
    }

    /// Splits an ambient vector into its two components.
    pub fn split(&self, n: u32, v: &SparseVec) -> (Polynomial, Polynomial) {
        let split = self.left_dim(n);
        let left = self.ext.algebra();
        let right = self.right_algebra();
        let a1 = Polynomial::from_coords(left, &left.basis(n), &v.window(0..split));
        let a2 = Polynomial::from_coords(right, &right.basis(n), &v.window(split..usize::MAX));
        (a1, a2)
    }

    /// Ambient vector of a pair of homogeneous degree-`n` polynomials.
    pub fn join(&self, n: u32, a1: &Polynomial, a2: &Polynomial) -> Result<SparseVec> {
        let left = self.ext.algebra();
        let right = self.right_algebra();
        let u = a1.to_coords(&left.basis(n))?;
        let v = a2.to_coords(&right.basis(n))?;
        Ok(u.add(&v.shifted(self.left_dim(n))))
    }

    /// Whether the pair satisfies `Φ(a1) = ψ(a2)`.
    pub fn is_pair(&self, n: u32, v: &SparseVec) -> bool {
        let (a1, a2) = self.split(n, v);
        self.phi().apply(&a1).expect("left component") == self.psi.apply(&a2).expect("right component")
    }
}

impl CochainModel for CylinderAlgebra {
    fn ambient_dim(&self, n: u32) -> usize {
        self.left_dim(n) + self.right_algebra().slice_dim(n)
    }

    fn cochains(&self, n: u32) -> Vec<SparseVec> {
        self.slice(n).as_ref().clone()
    }

    fn differential(&self, n: u32, v: &SparseVec) -> SparseVec {
        let split = self.left_dim(n);
        self.e.differential(n, &v.window(0..split))
    }

    fn product(&self, p: u32, u: &SparseVec, q: u32, v: &SparseVec) -> SparseVec {
        let (a1, a2) = self.split(p, u);
        let (b1, b2) = self.split(q, v);
        self.join(p + q, &(&a1 * &b1), &(&a2 * &b2)).expect("product is homogeneous")
    }

    fn describe(&self, n: u32, v: &SparseVec) -> String {
        let (a1, a2) = self.split(n, v);
        format!("({a1}, {a2})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::cohomology_betti;

    fn susp_w7() -> CylinderAlgebra {
        let k = FreeGCAlgebra::from_pairs(&[("x", 4), ("y", 6)]).unwrap();
        let h = FreeGCAlgebra::from_pairs(&[("t", 2)]).unwrap();
        let phi = AlgebraMorphism::from_exprs(&k, &h, &[("x", "-3*t^2"), ("y", "-2*t^3")]).unwrap();
        let k2 = k.renamed("_2");
        let psi = phi.relabel(&k2, &h).unwrap();
        build_cylinder(&phi, &psi, 12).unwrap()
    }

    #[test]
    fn low_slices() {
        let c = susp_w7();
        assert_eq!(c.slice_dim(0), 1);
        assert_eq!(c.slice_dim(2), 0);
        let s3 = c.slice(3);
        assert_eq!(s3.len(), 1);
        assert_eq!(c.describe(3, &s3[0]), "(dc2, 0)");
    }

    #[test]
    fn slices_are_pairs_and_closed_under_d() {
        let c = susp_w7();
        for n in 0..12 {
            for v in c.slice(n).iter() {
                assert!(c.is_pair(n, v));
                let dv = c.differential(n, v);
                assert!(c.is_pair(n + 1, &dv));
            }
        }
    }

    #[test]
    fn betti_of_suspension() {
        assert_eq!(cohomology_betti(&susp_w7(), 4), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn target_mismatch() {
        let a = FreeGCAlgebra::from_pairs(&[("t", 2)]).unwrap();
        let b = FreeGCAlgebra::from_pairs(&[("s", 2)]).unwrap();
        let r = build_cylinder(&AlgebraMorphism::identity(&a), &AlgebraMorphism::identity(&b), 4);
        assert!(matches!(r, Err(Error::TargetMismatch)));
    }
}
