use super::CochainModel;
use crate::algebra::{FreeGCAlgebra, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;

/// Free graded-commutative algebra with a degree +1 derivation squaring to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cdga {
    algebra: FreeGCAlgebra,
    differential: Vec<Polynomial>,
}

/// Validates degrees and `d² = 0` on generators.
pub fn make_cdga(algebra: &FreeGCAlgebra, differential: Vec<Polynomial>) -> Result<Cdga> {
    if differential.len() != algebra.len() {
        let i = differential.len().min(algebra.len().saturating_sub(1));
        return Err(Error::MissingImage(algebra.generator(i).name.clone()));
    }
    for (g, dg) in algebra.generators().iter().zip(&differential) {
        if dg.algebra() != algebra {
            return Err(Error::AlgebraMismatch.in_field(format!("d({})", g.name)));
        }
        if let Some(found) = dg.homogeneous_degree().map_err(|e| e.in_field(format!("d({})", g.name)))? {
            if found != g.degree + 1 {
                return Err(Error::DegreeMismatch { what: format!("d({})", g.name), expected: g.degree + 1, found });
            }
        }
    }
    let cdga = Cdga { algebra: algebra.clone(), differential };
    for (i, g) in algebra.generators().iter().enumerate() {
        if !cdga.d(&cdga.differential[i]).is_zero() {
            return Err(Error::DifferentialNotSquareZero(g.name.clone()));
        }
    }
    Ok(cdga)
}

impl Cdga {
    pub fn from_exprs(algebra: &FreeGCAlgebra, exprs: &[(&str, &str)]) -> Result<Cdga> {
        let mut images: Vec<Polynomial> = (0..algebra.len()).map(|_| Polynomial::zero(algebra)).collect();
        for (name, expr) in exprs {
            let i = algebra.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            images[i] = crate::algebra::parse_polynomial(algebra, expr).map_err(|e| e.in_field(*name))?;
        }
        make_cdga(algebra, images)
    }

    pub fn zero(algebra: &FreeGCAlgebra) -> Cdga {
        let images = (0..algebra.len()).map(|_| Polynomial::zero(algebra)).collect();
        Cdga { algebra: algebra.clone(), differential: images }
    }

    pub fn algebra(&self) -> &FreeGCAlgebra {
        &self.algebra
    }

    pub fn differential_images(&self) -> &[Polynomial] {
        &self.differential
    }

    /// Derivation rule `d(ab) = d(a)b + (-1)^{|a|} a d(b)` applied factor by factor.
    pub fn d_monomial(&self, m: &Monomial) -> Polynomial {
        let alg = &self.algebra;
        let exps = m.exponents();
        let mut out = Polynomial::zero(alg);
        for i in 0..exps.len() {
            let e = exps[i];
            if e == 0 || self.differential[i].is_zero() {
                continue;
            }
            let mut prefix = exps.to_vec();
            prefix[i..].iter_mut().for_each(|x| *x = 0);
            let mut suffix = exps.to_vec();
            suffix[..=i].iter_mut().for_each(|x| *x = 0);
            let prefix = Monomial::from_exponents(prefix);
            let suffix = Monomial::from_exponents(suffix);
            let mut middle = Polynomial::generator(alg, i).pow(e - 1);
            middle = &middle * &self.differential[i];
            middle = middle.scale(&crate::linalg::rat(e as i64));
            let mut term = &Polynomial::monomial(alg, prefix.clone(), crate::linalg::rat(1)) * &middle;
            term = &term * &Polynomial::monomial(alg, suffix, crate::linalg::rat(1));
            if alg.monomial_degree(&prefix) % 2 == 1 {
                term = -&term;
            }
            out = &out + &term;
        }
        out
    }

    pub fn d(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.algebra);
        for (m, c) in p.terms() {
            out = &out + &self.d_monomial(m).scale(c);
        }
        out
    }
}

impl CochainModel for Cdga {
    fn ambient_dim(&self, n: u32) -> usize {
        self.algebra.slice_dim(n)
    }

    fn cochains(&self, n: u32) -> Vec<SparseVec> {
        (0..self.algebra.slice_dim(n)).map(SparseVec::unit).collect()
    }

    fn differential(&self, n: u32, v: &SparseVec) -> SparseVec {
        let basis = self.algebra.basis(n);
        let p = Polynomial::from_coords(&self.algebra, &basis, v);
        self.d(&p).to_coords(&self.algebra.basis(n + 1)).expect("differential raises degree by one")
    }

    fn product(&self, p: u32, u: &SparseVec, q: u32, v: &SparseVec) -> SparseVec {
        let a = Polynomial::from_coords(&self.algebra, &self.algebra.basis(p), u);
        let b = Polynomial::from_coords(&self.algebra, &self.algebra.basis(q), v);
        (&a * &b).to_coords(&self.algebra.basis(p + q)).expect("product is homogeneous")
    }

    fn describe(&self, n: u32, v: &SparseVec) -> String {
        Polynomial::from_coords(&self.algebra, &self.algebra.basis(n), v).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::cohomology_betti;

    fn w7() -> Cdga {
        let a = FreeGCAlgebra::from_pairs(&[("t", 2), ("v3", 3), ("v5", 5)]).unwrap();
        Cdga::from_exprs(&a, &[("v3", "-3*t^2"), ("v5", "-2*t^3")]).unwrap()
    }

    #[test]
    fn accepts_aloff_wallach_model() {
        let m = w7();
        assert_eq!(cohomology_betti(&m, 7), vec![1, 0, 1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn zero_differential_betti_is_slice_dimension() {
        let a = FreeGCAlgebra::from_pairs(&[("a", 2), ("u", 3), ("b", 4)]).unwrap();
        let m = Cdga::zero(&a);
        let dims: Vec<usize> = (0..=12).map(|d| a.slice_dim(d)).collect();
        assert_eq!(cohomology_betti(&m, 12), dims);
    }

    #[test]
    fn rejects_wrong_degree() {
        let a = FreeGCAlgebra::from_pairs(&[("t", 2), ("v3", 3)]).unwrap();
        let err = Cdga::from_exprs(&a, &[("v3", "t*v3")]).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { what: "d(v3)".into(), expected: 4, found: 5 });
    }

    #[test]
    fn rejects_nonzero_square() {
        // d(z) = y, d(y) = x^2, so d²(z) ≠ 0
        let b = FreeGCAlgebra::from_pairs(&[("x", 2), ("y", 3), ("z", 2)]).unwrap();
        let err = Cdga::from_exprs(&b, &[("z", "y"), ("y", "x^2")]).unwrap_err();
        assert_eq!(err, Error::DifferentialNotSquareZero("z".into()));
    }

    #[test]
    fn leibniz_with_signs() {
        let m = w7();
        let a = m.algebra();
        let p = crate::algebra::parse_polynomial(a, "v3*v5").unwrap();
        // d(v3 v5) = d(v3) v5 - v3 d(v5)
        let expected = crate::algebra::parse_polynomial(a, "-3*t^2*v5 + 2*t^3*v3").unwrap();
        assert_eq!(m.d(&p), expected);
        assert!(m.d(&m.d(&p)).is_zero());
    }
}
