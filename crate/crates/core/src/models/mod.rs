//! Cochain models: CDGAs, homogeneous spaces, the double mapping cylinder,
//! and their truncated cohomology rings.

use rayon::prelude::*;

use crate::linalg::{rank, SparseVec};

mod cdga;
mod cylinder;
mod homogeneous;
mod ring;

pub use cdga::{make_cdga, Cdga};
pub use cylinder::{borel_model, build_cylinder, CylinderAlgebra};
pub use homogeneous::{formal_dimension, homogeneous_model, homogeneous_model_auto};
pub use ring::{ring_truncation, Class, ProductEntry, RingClass, RingJson, TruncatedRing};

/// A cochain complex with a product, presented degreewise inside an ambient
/// coordinate space.
pub trait CochainModel: Sync {
    /// Dimension of the ambient coordinate space in degree `n`.
    fn ambient_dim(&self, n: u32) -> usize;

    /// Basis of the cochains of degree `n`, as ambient vectors.
    fn cochains(&self, n: u32) -> Vec<SparseVec>;

    /// Differential from ambient degree `n` to ambient degree `n + 1`.
    fn differential(&self, n: u32, v: &SparseVec) -> SparseVec;

    fn product(&self, p: u32, u: &SparseVec, q: u32, v: &SparseVec) -> SparseVec;

    /// Human-readable form of an ambient vector.
    fn describe(&self, n: u32, v: &SparseVec) -> String;
}

/// `betti[n] = dim ker d_n − rank d_{n−1}` for `n = 0..=bound`.
pub fn cohomology_betti<M: CochainModel + ?Sized>(model: &M, bound: u32) -> Vec<usize> {
    let data: Vec<(usize, usize)> = (0..=bound)
        .into_par_iter()
        .map(|n| {
            let cochains = model.cochains(n);
            let images: Vec<SparseVec> = cochains.iter().map(|c| model.differential(n, c)).collect();
            (cochains.len(), rank(&images))
        })
        .collect();
    (0..=bound as usize)
        .map(|n| {
            let (dim, r) = data[n];
            let incoming = if n == 0 { 0 } else { data[n - 1].1 };
            dim - r - incoming
        })
        .collect()
}
