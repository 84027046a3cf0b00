//! Free graded-commutative algebras over ℚ.
//!
//! Even-degree generators are polynomial, odd-degree generators are exterior.
//! Monomials store exponent vectors in generator order; products of odd
//! generators pick up the Koszul sign of sorting them back into that order.

mod extension;
mod morphism;
pub mod parse;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{fmt_rat, Rational, SparseVec};

pub use extension::{surjective_trick, ContractibleExtension, TrickPair};
pub use morphism::{
    image_slice, injectivity_report, sum_image_report, surjectivity_report, AlgebraMorphism,
    InjectivityReport, SumImageReport, SurjectivityReport,
};
pub use parse::parse_polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Self { name: name.into(), degree }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Exponent vector over an algebra's generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn unit(n: usize) -> Self {
        Monomial(vec![0; n].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Graded order: higher degree first, then lexicographically larger exponents first.
    pub fn cmp_grlex(&self, other: &Monomial, alg: &FreeGCAlgebra) -> Ordering {
        alg.monomial_degree(other)
            .cmp(&alg.monomial_degree(self))
            .then_with(|| other.0.cmp(&self.0))
    }
}

/// All monomials of one degree, in basis order, with a reverse index.
#[derive(Debug)]
pub struct DegreeBasis {
    pub degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

struct Inner {
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
    bases: RwLock<HashMap<u32, Arc<DegreeBasis>>>,
}

/// A free graded-commutative algebra ΛV over ℚ on named generators.
///
/// Cloning is cheap; clones share the per-degree basis cache.
#[derive(Clone)]
pub struct FreeGCAlgebra(Arc<Inner>);

impl fmt::Debug for FreeGCAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeGCAlgebra{:?}", self.0.generators)
    }
}

impl PartialEq for FreeGCAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.generators == other.0.generators
    }
}

impl Eq for FreeGCAlgebra {}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FreeGCAlgebra {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(Error::InvalidGenerator(format!("`{}` has degree 0", g.name)));
            }
            if !valid_identifier(&g.name) {
                return Err(Error::InvalidGenerator(format!("`{}` is not an identifier", g.name)));
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::InvalidGenerator(format!("duplicate name `{}`", g.name)));
            }
        }
        Ok(Self(Arc::new(Inner { generators, index, bases: RwLock::new(HashMap::new()) })))
    }

    /// Convenience constructor from `(name, degree)` pairs.
    pub fn from_pairs(pairs: &[(&str, u32)]) -> Result<Self> {
        Self::new(pairs.iter().map(|(n, d)| Generator::new(*n, *d)).collect())
    }

    /// The ground field ℚ (no generators).
    pub fn ground() -> Self {
        Self::new(Vec::new()).expect("empty generator list is valid")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0.generators
    }

    pub fn len(&self) -> usize {
        self.0.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.generators.is_empty()
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.0.generators[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.0.generators[i].is_odd()
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.0.generators).map(|(e, g)| e * g.degree).sum()
    }

    /// Sum of generator degrees.
    pub fn degree_sum(&self) -> u32 {
        self.0.generators.iter().map(|g| g.degree).sum()
    }

    /// Monomial basis of degree `d`, cached per degree.
    pub fn basis(&self, d: u32) -> Arc<DegreeBasis> {
        if let Some(b) = self.0.bases.read().expect("basis cache poisoned").get(&d) {
            return b.clone();
        }
        let mut monomials = Vec::new();
        let mut exps = vec![0u32; self.len()];
        self.enumerate(0, d, &mut exps, &mut monomials);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let basis = Arc::new(DegreeBasis { degree: d, monomials, index });
        self.0
            .bases
            .write()
            .expect("basis cache poisoned")
            .entry(d)
            .or_insert(basis)
            .clone()
    }

    fn enumerate(&self, i: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.len() {
            if remaining == 0 {
                out.push(Monomial::from_exponents(exps.clone()));
            }
            return;
        }
        let g = &self.0.generators[i];
        let max = if g.is_odd() { (remaining / g.degree).min(1) } else { remaining / g.degree };
        for e in (0..=max).rev() {
            exps[i] = e;
            self.enumerate(i + 1, remaining - e * g.degree, exps, out);
        }
        exps[i] = 0;
    }

    /// Canonical monomials of total degree `d` in graded-lexicographic order.
    pub fn monomial_basis(&self, d: u32) -> Vec<Monomial> {
        self.basis(d).monomials.clone()
    }

    pub fn slice_dim(&self, d: u32) -> usize {
        self.basis(d).len()
    }

    /// Product of two monomials with its Koszul sign, or `None` when an odd
    /// generator appears twice.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let gens = &self.0.generators;
        let mut negative = false;
        let mut odd_in_a_after = 0u32;
        // walk from the end so `odd_in_a_after` counts odd factors of `a` to the right of j
        for j in (0..gens.len()).rev() {
            if gens[j].is_odd() {
                if b.0[j] == 1 {
                    if a.0[j] == 1 {
                        return None;
                    }
                    if odd_in_a_after % 2 == 1 {
                        negative = !negative;
                    }
                }
                if a.0[j] == 1 {
                    odd_in_a_after += 1;
                }
            }
        }
        let exps: Vec<u32> = a.0.iter().zip(b.0.iter()).map(|(x, y)| x + y).collect();
        Some((Monomial::from_exponents(exps), negative))
    }

    pub fn monomial_name(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".to_string();
        }
        let parts: Vec<String> = m
            .0
            .iter()
            .zip(&self.0.generators)
            .filter(|(e, _)| **e > 0)
            .map(|(e, g)| if *e == 1 { g.name.clone() } else { format!("{}^{}", g.name, e) })
            .collect();
        parts.join("*")
    }

    /// Tensor product: generators of `self` followed by those of `other`.
    pub fn tensor(&self, other: &FreeGCAlgebra) -> Result<FreeGCAlgebra> {
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().cloned());
        FreeGCAlgebra::new(gens)
    }

    /// Same algebra with every generator name suffixed.
    pub fn renamed(&self, suffix: &str) -> FreeGCAlgebra {
        FreeGCAlgebra::new(
            self.generators()
                .iter()
                .map(|g| Generator::new(format!("{}{}", g.name, suffix), g.degree))
                .collect(),
        )
        .expect("suffixing keeps names valid and distinct")
    }
}

/// A finite ℚ-linear combination of monomials in a fixed algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    algebra: FreeGCAlgebra,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl Polynomial {
    pub fn zero(algebra: &FreeGCAlgebra) -> Self {
        Self { algebra: algebra.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(algebra: &FreeGCAlgebra, c: Rational) -> Self {
        Self::monomial(algebra, Monomial::unit(algebra.len()), c)
    }

    pub fn one(algebra: &FreeGCAlgebra) -> Self {
        Self::constant(algebra, Rational::one())
    }

    pub fn monomial(algebra: &FreeGCAlgebra, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { algebra: algebra.clone(), terms }
    }

    pub fn generator(algebra: &FreeGCAlgebra, i: usize) -> Self {
        let mut exps = vec![0; algebra.len()];
        exps[i] = 1;
        Self::monomial(algebra, Monomial::from_exponents(exps), Rational::one())
    }

    pub fn named(algebra: &FreeGCAlgebra, name: &str) -> Result<Self> {
        let i = algebra.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Self::generator(algebra, i))
    }

    pub fn algebra(&self) -> &FreeGCAlgebra {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Common degree of all terms; `Ok(None)` for zero, error for mixed degree.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degs = self.terms.keys().map(|m| self.algebra.monomial_degree(m));
        let Some(first) = degs.next() else { return Ok(None) };
        if degs.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::NotHomogeneous(self.to_string()))
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.algebra);
        }
        Polynomial {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Graded-commutative product.
    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = Polynomial::zero(&self.algebra);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((m, negative)) = self.algebra.mul_monomials(a, b) {
                    let c = x * y;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.algebra);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coordinates in the monomial basis of this polynomial's degree slice.
    /// Terms of other degrees are rejected.
    pub fn to_coords(&self, basis: &DegreeBasis) -> Result<SparseVec> {
        let mut entries = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let i = basis.index_of(m).ok_or_else(|| Error::DegreeMismatch {
                what: self.algebra.monomial_name(m),
                expected: basis.degree,
                found: self.algebra.monomial_degree(m),
            })?;
            entries.push((i, c.clone()));
        }
        Ok(SparseVec::from_entries(entries))
    }

    pub fn from_coords(algebra: &FreeGCAlgebra, basis: &DegreeBasis, v: &SparseVec) -> Polynomial {
        let mut out = Polynomial::zero(algebra);
        for (i, c) in v.iter() {
            out.add_term(basis.monomials[i].clone(), c.clone());
        }
        out
    }

    /// Re-expresses the polynomial in `target`, sending generator `i` to
    /// generator `index_map[i]`. Generator degrees must agree.
    pub fn transport(&self, target: &FreeGCAlgebra, index_map: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[index_map[i]] += e;
            }
            // relabelling can reorder odd generators
            let mut term = Polynomial::one(target);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = &term * &Polynomial::generator(target, index_map[i]);
                }
            }
            out = &out + &term.scale(c);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.cmp_grlex(b.0, &self.algebra));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            if m.is_unit() {
                write!(f, "{}", fmt_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", self.algebra.monomial_name(m))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&abs), self.algebra.monomial_name(m))?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials over different algebras")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs).expect("polynomials over different algebras")
    }
}
