use std::fmt;

use super::{FreeGCAlgebra, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, Echelon, SparseVec};

/// Degree-preserving algebra map given by the images of the source generators.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: FreeGCAlgebra,
    target: FreeGCAlgebra,
    images: Vec<Polynomial>,
}

impl fmt::Debug for AlgebraMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .source
            .generators()
            .iter()
            .zip(&self.images)
            .map(|(g, p)| format!("{} -> {}", g.name, p))
            .collect();
        write!(f, "AlgebraMorphism({})", parts.join(", "))
    }
}

impl AlgebraMorphism {
    pub fn new(source: &FreeGCAlgebra, target: &FreeGCAlgebra, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.len() {
            let missing = source.generator(images.len().min(source.len().saturating_sub(1))).name.clone();
            return Err(Error::MissingImage(missing));
        }
        for (g, img) in source.generators().iter().zip(&images) {
            if img.algebra() != target {
                return Err(Error::AlgebraMismatch.in_field(g.name.clone()));
            }
            match img.homogeneous_degree().map_err(|e| e.in_field(g.name.clone()))? {
                Some(d) if d != g.degree => {
                    return Err(Error::DegreeMismatch {
                        what: format!("image of {}", g.name),
                        expected: g.degree,
                        found: d,
                    })
                }
                _ => {}
            }
        }
        Ok(Self { source: source.clone(), target: target.clone(), images })
    }

    /// Builds a morphism from `(generator, expression)` pairs. Every source
    /// generator needs an image.
    pub fn from_exprs(source: &FreeGCAlgebra, target: &FreeGCAlgebra, exprs: &[(&str, &str)]) -> Result<Self> {
        let mut images: Vec<Option<Polynomial>> = vec![None; source.len()];
        for (name, expr) in exprs {
            let i = source.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            images[i] = Some(super::parse_polynomial(target, expr).map_err(|e| e.in_field(*name))?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::MissingImage(source.generator(i).name.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(algebra: &FreeGCAlgebra) -> Self {
        let images = (0..algebra.len()).map(|i| Polynomial::generator(algebra, i)).collect();
        Self { source: algebra.clone(), target: algebra.clone(), images }
    }

    pub fn zero(source: &FreeGCAlgebra, target: &FreeGCAlgebra) -> Self {
        let images = (0..source.len()).map(|_| Polynomial::zero(target)).collect();
        Self { source: source.clone(), target: target.clone(), images }
    }

    pub fn source(&self) -> &FreeGCAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FreeGCAlgebra {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image_of(&self, name: &str) -> Option<&Polynomial> {
        self.source.index_of(name).map(|i| &self.images[i])
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Polynomial {
        let mut acc = Polynomial::one(&self.target);
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                acc = &acc * &self.images[i];
            }
        }
        acc
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.algebra() != &self.source {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = Polynomial::zero(&self.target);
        for (m, c) in p.terms() {
            out = &out + &self.apply_monomial(m).scale(c);
        }
        Ok(out)
    }

    /// Images of the degree-`d` source monomials as coordinate vectors in the
    /// target's degree-`d` basis.
    pub fn slice_columns(&self, d: u32) -> Vec<SparseVec> {
        let tb = self.target.basis(d);
        self.source
            .basis(d)
            .monomials()
            .iter()
            .map(|m| self.apply_monomial(m).to_coords(&tb).expect("morphism preserves degree"))
            .collect()
    }

    fn image_echelon(&self, d: u32) -> Echelon {
        Echelon::from_vectors(&self.slice_columns(d))
    }

    /// Tensor product of two morphisms on concatenated generator lists.
    pub fn tensor(&self, other: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        let source = self.source.tensor(&other.source)?;
        let target = self.target.tensor(&other.target)?;
        let left: Vec<usize> = (0..self.target.len()).collect();
        let right: Vec<usize> = (self.target.len()..target.len()).collect();
        let mut images: Vec<Polynomial> = self.images.iter().map(|p| p.transport(&target, &left)).collect();
        images.extend(other.images.iter().map(|p| p.transport(&target, &right)));
        AlgebraMorphism::new(&source, &target, images)
    }

    /// Re-expresses the morphism over renamed copies of source and target.
    pub fn relabel(&self, source: &FreeGCAlgebra, target: &FreeGCAlgebra) -> Result<AlgebraMorphism> {
        let ident: Vec<usize> = (0..self.target.len()).collect();
        let images = self.images.iter().map(|p| p.transport(target, &ident)).collect();
        AlgebraMorphism::new(source, target, images)
    }
}

/// Basis of the image of the degree-`d` slice, as reduced target polynomials.
pub fn image_slice(m: &AlgebraMorphism, d: u32) -> Vec<Polynomial> {
    let tb = m.target.basis(d);
    m.image_echelon(d).rref().iter().map(|v| Polynomial::from_coords(&m.target, &tb, v)).collect()
}

/// First target monomial outside the span, in basis order.
fn first_missing(span: &Echelon, target: &FreeGCAlgebra, d: u32) -> Option<Polynomial> {
    let tb = target.basis(d);
    (0..tb.len()).find(|&i| !span.contains(&SparseVec::unit(i))).map(|i| {
        Polynomial::monomial(target, tb.monomials()[i].clone(), crate::linalg::rat(1))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurjectivityReport {
    /// Every degree `1..=D` is hit; a bounded certificate.
    SurjectiveUpTo(u32),
    /// Exact: `missing` is not in the image in `degree`.
    FailsAt { degree: u32, missing: Polynomial },
}

impl SurjectivityReport {
    pub fn is_surjective(&self) -> bool {
        matches!(self, SurjectivityReport::SurjectiveUpTo(_))
    }
}

pub fn surjectivity_report(m: &AlgebraMorphism, bound: u32) -> SurjectivityReport {
    for d in 1..=bound {
        let target_dim = m.target.slice_dim(d);
        if target_dim == 0 {
            continue;
        }
        let span = m.image_echelon(d);
        if span.rank() < target_dim {
            let missing = first_missing(&span, &m.target, d).expect("deficient span misses a monomial");
            return SurjectivityReport::FailsAt { degree: d, missing };
        }
    }
    SurjectivityReport::SurjectiveUpTo(bound)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InjectivityReport {
    InjectiveUpTo(u32),
    /// `element` is a nonzero source polynomial of `degree` mapping to zero.
    KernelAt { degree: u32, element: Polynomial },
}

impl InjectivityReport {
    pub fn is_injective(&self) -> bool {
        matches!(self, InjectivityReport::InjectiveUpTo(_))
    }
}

pub fn injectivity_report(m: &AlgebraMorphism, bound: u32) -> InjectivityReport {
    for d in 1..=bound {
        let sb = m.source.basis(d);
        if sb.is_empty() {
            continue;
        }
        if let Some(k) = nullspace(&m.slice_columns(d)).into_iter().next() {
            let element = Polynomial::from_coords(&m.source, &sb, &k.primitive());
            return InjectivityReport::KernelAt { degree: d, element };
        }
    }
    InjectivityReport::InjectiveUpTo(bound)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumImageReport {
    SumSurjectiveUpTo(u32),
    FailsAt { degree: u32, missing: Polynomial },
}

impl SumImageReport {
    pub fn is_surjective(&self) -> bool {
        matches!(self, SumImageReport::SumSurjectiveUpTo(_))
    }
}

/// Degreewise check of `im phi + im psi = target` through `bound`.
pub fn sum_image_report(phi: &AlgebraMorphism, psi: &AlgebraMorphism, bound: u32) -> Result<SumImageReport> {
    if phi.target != psi.target {
        return Err(Error::TargetMismatch);
    }
    for d in 1..=bound {
        let target_dim = phi.target.slice_dim(d);
        if target_dim == 0 {
            continue;
        }
        let mut span = phi.image_echelon(d);
        for c in psi.slice_columns(d) {
            span.insert(c);
        }
        if span.rank() < target_dim {
            let missing = first_missing(&span, &phi.target, d).expect("deficient span misses a monomial");
            return Ok(SumImageReport::FailsAt { degree: d, missing });
        }
    }
    Ok(SumImageReport::SumSurjectiveUpTo(bound))
}
