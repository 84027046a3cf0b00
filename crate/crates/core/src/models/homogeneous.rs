use std::collections::HashSet;

use super::{make_cdga, Cdga};
use crate::algebra::{AlgebraMorphism, FreeGCAlgebra, Generator, Polynomial};
use crate::error::{Error, Result};

/// Model `(H*(BH) ⊗ Λ(v_1, …, v_k), d)` of `G/H` with `d v_i = iota(x_i)`,
/// where `iota: H*(BG) → H*(BH)` and `exterior[i]` has degree `deg x_i − 1`.
pub fn homogeneous_model(iota: &AlgebraMorphism, exterior: &[Generator]) -> Result<Cdga> {
    let bg = iota.source();
    if exterior.len() != bg.len() {
        return Err(Error::InvalidDiagram(format!(
            "{} exterior generators for {} classifying-space generators",
            exterior.len(),
            bg.len()
        )));
    }
    for (v, x) in exterior.iter().zip(bg.generators()) {
        if v.degree + 1 != x.degree {
            return Err(Error::DegreeMismatch { what: v.name.clone(), expected: x.degree - 1, found: v.degree });
        }
    }
    let bh = iota.target();
    let algebra = bh.tensor(&FreeGCAlgebra::new(exterior.to_vec())?)?;
    let ident: Vec<usize> = (0..bh.len()).collect();
    let mut d: Vec<Polynomial> = (0..bh.len()).map(|_| Polynomial::zero(&algebra)).collect();
    d.extend(iota.images().iter().map(|p| p.transport(&algebra, &ident)));
    make_cdga(&algebra, d)
}

/// Same as [`homogeneous_model`] with exterior generators named `v{degree}`.
pub fn homogeneous_model_auto(iota: &AlgebraMorphism) -> Result<Cdga> {
    let mut taken: HashSet<String> = iota.target().generators().iter().map(|g| g.name.clone()).collect();
    let exterior: Vec<Generator> = iota
        .source()
        .generators()
        .iter()
        .map(|x| {
            let mut name = format!("v{}", x.degree - 1);
            while taken.contains(&name) {
                name.push('_');
            }
            taken.insert(name.clone());
            Generator::new(name, x.degree - 1)
        })
        .collect();
    homogeneous_model(iota, &exterior)
}

/// Formal dimension of the homogeneous space: `Σ(deg x − 1) − Σ(deg y − 1)`.
pub fn formal_dimension(iota: &AlgebraMorphism) -> i64 {
    let g: i64 = iota.source().generators().iter().map(|x| x.degree as i64 - 1).sum();
    let h: i64 = iota.target().generators().iter().map(|y| y.degree as i64 - 1).sum();
    g - h
}
