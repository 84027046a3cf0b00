use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CochainModel;
use crate::linalg::{combine, fmt_rat, nullspace, rat, Echelon, Quotient, Rational, SparseVec};

/// A homogeneous cohomology class given by coordinates over the chosen
/// representatives of its degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Class {
    pub degree: u32,
    pub coords: SparseVec,
}

impl Class {
    pub fn new(degree: u32, coords: SparseVec) -> Self {
        Self { degree, coords }
    }

    pub fn basis(degree: u32, index: usize) -> Self {
        Self { degree, coords: SparseVec::unit(index) }
    }

    pub fn zero(degree: u32) -> Self {
        Self { degree, coords: SparseVec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { degree: self.degree, coords: self.coords.scale(c) }
    }

    pub fn add(&self, other: &Class) -> Self {
        assert_eq!(self.degree, other.degree, "adding classes of different degrees");
        Self { degree: self.degree, coords: self.coords.add(&other.coords) }
    }
}

/// Cohomology of a cochain model through degree `bound`, with chosen cocycle
/// representatives and the product table between them.
#[derive(Clone, Debug)]
pub struct TruncatedRing {
    bound: u32,
    betti: Vec<usize>,
    quotients: Vec<Quotient>,
    descriptions: Vec<Vec<String>>,
    table: HashMap<(u32, usize, u32, usize), SparseVec>,
}

/// Computes cocycles, coboundaries and representatives in every degree
/// `0..=bound`, then tabulates all products of representatives landing in
/// degree `≤ bound`.
pub fn ring_truncation<M: CochainModel + ?Sized>(model: &M, bound: u32) -> TruncatedRing {
    let per_degree: Vec<(Vec<SparseVec>, Vec<SparseVec>)> = (0..=bound)
        .into_par_iter()
        .map(|n| {
            let cochains = model.cochains(n);
            let images: Vec<SparseVec> = cochains.iter().map(|c| model.differential(n, c)).collect();
            let cocycles = nullspace(&images).iter().map(|k| combine(&cochains, k)).collect();
            (cocycles, images)
        })
        .collect();
    let quotients: Vec<Quotient> = (0..=bound as usize)
        .into_par_iter()
        .map(|n| {
            let boundaries = if n == 0 { Echelon::new() } else { Echelon::from_vectors(&per_degree[n - 1].1) };
            Quotient::new(boundaries, &per_degree[n].0)
        })
        .collect();
    let betti = quotients.iter().map(Quotient::dim).collect();
    let descriptions = quotients
        .iter()
        .enumerate()
        .map(|(n, q)| q.representatives().iter().map(|r| model.describe(n as u32, r)).collect())
        .collect();

    let mut keys = Vec::new();
    for p in 0..=bound {
        for q in p..=bound - p {
            for i in 0..quotients[p as usize].dim() {
                let start = if p == q { i } else { 0 };
                for j in start..quotients[q as usize].dim() {
                    keys.push((p, i, q, j));
                }
            }
        }
    }
    let table = keys
        .into_par_iter()
        .map(|(p, i, q, j)| {
            let u = &quotients[p as usize].representatives()[i];
            let v = &quotients[q as usize].representatives()[j];
            let prod = model.product(p, u, q, v);
            let coords = quotients[(p + q) as usize]
                .coordinates(&prod)
                .expect("product of cocycles is a cocycle");
            ((p, i, q, j), coords)
        })
        .collect();
    TruncatedRing { bound, betti, quotients, descriptions, table }
}

impl TruncatedRing {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn dim(&self, n: u32) -> usize {
        self.betti.get(n as usize).copied().unwrap_or(0)
    }

    pub fn label(&self, n: u32, i: usize) -> String {
        format!("h{n}_{}", i + 1)
    }

    /// Cocycle representatives of degree `n` in the model's ambient coordinates.
    pub fn representatives(&self, n: u32) -> &[SparseVec] {
        self.quotients[n as usize].representatives()
    }

    pub fn description(&self, n: u32, i: usize) -> &str {
        &self.descriptions[n as usize][i]
    }

    /// Class of an ambient cocycle, or `None` when `v` is not a cocycle.
    pub fn class_of(&self, n: u32, v: &SparseVec) -> Option<Class> {
        self.quotients.get(n as usize)?.coordinates(v).map(|c| Class::new(n, c))
    }

    pub fn one(&self) -> Class {
        Class::basis(0, 0)
    }

    fn basis_product(&self, p: u32, i: usize, q: u32, j: usize) -> SparseVec {
        if (p, i) <= (q, j) {
            self.table[&(p, i, q, j)].clone()
        } else {
            let v = &self.table[&(q, j, p, i)];
            if (p * q) % 2 == 1 {
                v.neg()
            } else {
                v.clone()
            }
        }
    }

    /// Product of two classes, or `None` when it lands above the bound.
    pub fn multiply(&self, a: &Class, b: &Class) -> Option<Class> {
        let n = a.degree + b.degree;
        if n > self.bound {
            return None;
        }
        let mut out = SparseVec::new();
        for (i, x) in a.coords.iter() {
            for (j, y) in b.coords.iter() {
                out = out.add_scaled(&self.basis_product(a.degree, i, b.degree, j), &(x * y));
            }
        }
        Some(Class::new(n, out))
    }

    /// Images of the degree-`n` basis classes under multiplication by `f`.
    pub fn multiplication_columns(&self, f: &Class, n: u32) -> Option<Vec<SparseVec>> {
        if n + f.degree > self.bound {
            return None;
        }
        Some(
            (0..self.dim(n))
                .map(|i| self.multiply(f, &Class::basis(n, i)).expect("within bound").coords)
                .collect(),
        )
    }

    /// `2*h4_1 - h4_2` style rendering.
    pub fn format_class(&self, c: &Class) -> String {
        if c.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, x)) in c.coords.iter().enumerate() {
            let neg = x < &rat(0);
            let abs = if neg { -x.clone() } else { x.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if abs != rat(1) {
                out.push_str(&fmt_rat(&abs));
                out.push('*');
            }
            out.push_str(&self.label(c.degree, i));
        }
        out
    }

    pub fn to_json(&self) -> RingJson {
        let mut classes = Vec::new();
        for n in 0..=self.bound {
            for i in 0..self.dim(n) {
                classes.push(RingClass {
                    label: self.label(n, i),
                    degree: n,
                    representative: self.descriptions[n as usize][i].clone(),
                });
            }
        }
        let mut keys: Vec<_> = self.table.keys().copied().collect();
        keys.sort();
        let products = keys
            .into_iter()
            .map(|(p, i, q, j)| ProductEntry {
                left: self.label(p, i),
                right: self.label(q, j),
                result: self.format_class(&Class::new(p + q, self.table[&(p, i, q, j)].clone())),
            })
            .collect();
        RingJson { bound: self.bound, betti: self.betti.clone(), classes, products }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingClass {
    pub label: String,
    pub degree: u32,
    pub representative: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub bound: u32,
    pub betti: Vec<usize>,
    pub classes: Vec<RingClass>,
    pub products: Vec<ProductEntry>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FreeGCAlgebra;
    use crate::models::Cdga;

    #[test]
    fn polynomial_ring_table() {
        let a = FreeGCAlgebra::from_pairs(&[("t", 4), ("v", 4), ("w", 6)]).unwrap();
        let r = ring_truncation(&Cdga::zero(&a), 12);
        assert_eq!(r.betti()[..9], [1, 0, 0, 0, 2, 0, 1, 0, 3]);
        let t = Class::basis(4, 0);
        let v = Class::basis(4, 1);
        let tv = r.multiply(&t, &v).unwrap();
        assert_eq!(r.format_class(&tv), "h8_2");
        assert_eq!(r.description(8, 1), "t*v");
        assert!(r.multiply(&Class::basis(6, 0), &Class::basis(8, 0)).is_none());
    }

    #[test]
    fn odd_classes_anticommute() {
        let a = FreeGCAlgebra::from_pairs(&[("u", 3), ("v", 5)]).unwrap();
        let r = ring_truncation(&Cdga::zero(&a), 8);
        let u = Class::basis(3, 0);
        let v = Class::basis(5, 0);
        let uv = r.multiply(&u, &v).unwrap();
        let vu = r.multiply(&v, &u).unwrap();
        assert_eq!(uv.coords, vu.coords.neg());
        assert!(r.multiply(&u, &u).unwrap().is_zero());
    }

    #[test]
    fn unit_acts_trivially_and_json_lists_classes() {
        let a = FreeGCAlgebra::from_pairs(&[("t", 2)]).unwrap();
        let r = ring_truncation(&Cdga::zero(&a), 6);
        let t2 = Class::basis(4, 0);
        assert_eq!(r.multiply(&r.one(), &t2).unwrap(), t2);
        let json = r.to_json();
        assert_eq!(json.classes.len(), 4);
        assert_eq!(json.classes[1].label, "h2_1");
        assert!(json.products.iter().any(|p| p.left == "h2_1" && p.right == "h2_1" && p.result == "h4_1"));
    }
}
