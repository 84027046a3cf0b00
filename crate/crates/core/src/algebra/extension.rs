use std::collections::HashSet;

use super::{AlgebraMorphism, FreeGCAlgebra, Generator, Polynomial};
use crate::linalg::{rat, Echelon, SparseVec};

/// One added pair `(w, dw)` with `Φ(w) = value` and `Φ(dw) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrickPair {
    pub w: Generator,
    pub dw: Generator,
    pub value: Polynomial,
}

/// `A1 ⊗ Λ(w_i, dw_i)` together with the extended map `Φ` into the target.
#[derive(Clone, Debug)]
pub struct ContractibleExtension {
    base: AlgebraMorphism,
    pairs: Vec<TrickPair>,
    algebra: FreeGCAlgebra,
    phi: AlgebraMorphism,
    bound: u32,
}

impl ContractibleExtension {
    pub fn base(&self) -> &FreeGCAlgebra {
        self.base.source()
    }

    pub fn base_morphism(&self) -> &AlgebraMorphism {
        &self.base
    }

    pub fn pairs(&self) -> &[TrickPair] {
        &self.pairs
    }

    /// The extended algebra: base generators, then `w_1, dw_1, w_2, dw_2, …`.
    pub fn algebra(&self) -> &FreeGCAlgebra {
        &self.algebra
    }

    pub fn phi(&self) -> &AlgebraMorphism {
        &self.phi
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Differential images on the extended algebra: zero on the base,
    /// `w ↦ dw`, `dw ↦ 0`.
    pub fn differential(&self) -> Vec<Polynomial> {
        let n = self.base().len();
        let mut out: Vec<Polynomial> = (0..n).map(|_| Polynomial::zero(&self.algebra)).collect();
        for k in 0..self.pairs.len() {
            out.push(Polynomial::generator(&self.algebra, n + 2 * k + 1));
            out.push(Polynomial::zero(&self.algebra));
        }
        out
    }

    /// Position of pair `k`'s `w` and `dw` among the extended generators.
    pub fn pair_indices(&self, k: usize) -> (usize, usize) {
        let n = self.base().len();
        (n + 2 * k, n + 2 * k + 1)
    }
}

fn fresh(candidate: String, taken: &mut HashSet<String>) -> String {
    let mut name = candidate;
    while taken.contains(&name) {
        name.push('_');
    }
    taken.insert(name.clone());
    name
}

/// Adds one contractible pair for every target basis class missing from the
/// image of `phi` in degrees `1..=bound`. Missing classes are the target
/// monomials outside the image, taken in basis order.
pub fn surjective_trick(phi: &AlgebraMorphism, bound: u32) -> ContractibleExtension {
    let target = phi.target();
    let mut taken: HashSet<String> = phi.source().generators().iter().map(|g| g.name.clone()).collect();
    let mut missing: Vec<(u32, Polynomial)> = Vec::new();
    for d in 1..=bound {
        let tb = target.basis(d);
        if tb.is_empty() {
            continue;
        }
        let mut span = Echelon::from_vectors(&phi.slice_columns(d));
        for (i, m) in tb.monomials().iter().enumerate() {
            if span.rank() == tb.len() {
                break;
            }
            if span.insert(SparseVec::unit(i)) {
                missing.push((d, Polynomial::monomial(target, m.clone(), rat(1))));
            }
        }
    }
    let mut per_degree: std::collections::BTreeMap<u32, usize> = Default::default();
    for (d, _) in &missing {
        *per_degree.entry(*d).or_default() += 1;
    }
    let mut seen: std::collections::BTreeMap<u32, usize> = Default::default();
    let mut pairs = Vec::with_capacity(missing.len());
    for (d, value) in missing {
        let k = seen.entry(d).or_default();
        *k += 1;
        let stem = if per_degree[&d] == 1 { format!("c{d}") } else { format!("c{d}_{k}") };
        let w = Generator::new(fresh(stem.clone(), &mut taken), d);
        let dw = Generator::new(fresh(format!("d{stem}"), &mut taken), d + 1);
        pairs.push(TrickPair { w, dw, value });
    }

    let mut gens = phi.source().generators().to_vec();
    for p in &pairs {
        gens.push(p.w.clone());
        gens.push(p.dw.clone());
    }
    let algebra = FreeGCAlgebra::new(gens).expect("fresh names are distinct");
    let mut images = phi.images().to_vec();
    for p in &pairs {
        images.push(p.value.clone());
        images.push(Polynomial::zero(target));
    }
    let extended = AlgebraMorphism::new(&algebra, target, images).expect("values have the pair degree");
    ContractibleExtension { base: phi.clone(), pairs, algebra, phi: extended, bound }
}
