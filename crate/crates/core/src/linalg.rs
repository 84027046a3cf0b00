//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are sorted `(index, coefficient)` lists with no stored zeros. The
//! [`Echelon`] type keeps a semi-echelon basis (every row has coefficient one
//! at its pivot and no entries left of it) and supports incremental insertion,
//! membership tests, and kernel extraction by tracking row combinations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rat(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        Self { entries: vec![(index, Rational::one())] }
    }

    /// Builds a vector from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries(mut entries: Vec<(usize, Rational)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { entries: out }
    }

    pub fn from_dense(dense: &[Rational]) -> Self {
        Self {
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, index: usize) -> Option<&Rational> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// Returns `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Rational) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        Self { entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect() }
    }

    /// Keeps the entries with index in `range`, re-based to start at zero.
    pub fn window(&self, range: std::ops::Range<usize>) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| range.contains(i))
                .map(|(i, c)| (i - range.start, c.clone()))
                .collect(),
        }
    }

    /// Multiplies through by the lcm of denominators and divides by the gcd of
    /// numerators, making the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        for (_, c) in &self.entries {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.entries {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut factor = Rational::new(l, g);
        if self.entries[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

/// Linear combination `sum c_k * vectors[k]` for sparse coefficient vector `comb`.
pub fn combine(vectors: &[SparseVec], comb: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (k, c) in comb.iter() {
        out = out.add_scaled(&vectors[k], c);
    }
    out
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    comb: SparseVec,
}

/// Incrementally built semi-echelon basis of a subspace.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivot_of: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Self::new();
        for v in vectors {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, column: usize) -> bool {
        self.pivot_of.contains_key(&column)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.vec.leading().expect("rows are nonzero").0)
    }

    /// Basis vectors in insertion order.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|r| &r.vec)
    }

    fn reduce_inner(&self, mut v: SparseVec, mut comb: Option<&mut SparseVec>) -> SparseVec {
        let mut pos = 0;
        while pos < v.entries.len() {
            let (col, coeff) = {
                let (c, x) = &v.entries[pos];
                (*c, x.clone())
            };
            match self.pivot_of.get(&col) {
                Some(&r) => {
                    let row = &self.rows[r];
                    let factor = -coeff;
                    v = v.add_scaled(&row.vec, &factor);
                    if let Some(c) = comb.as_deref_mut() {
                        *c = c.add_scaled(&row.comb, &factor);
                    }
                    // entries before `pos` are untouched because the row starts at `col`
                }
                None => pos += 1,
            }
        }
        v
    }

    /// Reduces `v` modulo the span, eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_inner(v.clone(), None)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.insert_tracked(v, SparseVec::new()).is_none()
    }

    /// Inserts `v` carrying combination `comb`. When `v` is dependent, returns the
    /// combination that reduces to zero (a kernel relation).
    pub fn insert_tracked(&mut self, v: SparseVec, mut comb: SparseVec) -> Option<SparseVec> {
        let r = self.reduce_inner(v, Some(&mut comb));
        match r.leading() {
            None => Some(comb),
            Some((col, lead)) => {
                let inv = lead.recip();
                let row = Row { vec: r.scale(&inv), comb: comb.scale(&inv) };
                self.pivot_of.insert(col, self.rows.len());
                self.rows.push(row);
                None
            }
        }
    }

    /// Expresses `v` in terms of the inserted tracked combinations, if `v` lies in the span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut comb = SparseVec::new();
        let r = self.reduce_inner(v.clone(), Some(&mut comb));
        r.is_zero().then(|| comb.neg())
    }

    /// Fully reduced row echelon basis, sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r].vec.leading().unwrap().0);
        let mut rows: Vec<SparseVec> = order.iter().map(|&r| self.rows[r].vec.clone()).collect();
        for i in (0..rows.len()).rev() {
            let pivot = rows[i].leading().unwrap().0;
            for j in 0..i {
                if let Some(c) = rows[j].get(pivot).cloned() {
                    rows[j] = rows[j].add_scaled(&rows[i], &(-c));
                }
            }
        }
        rows
    }
}

/// Rank of a family of vectors.
pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    Echelon::from_vectors(vectors).rank()
}

/// Kernel of the linear map sending basis vector `k` to `columns[k]`, as sparse
/// coefficient vectors over the domain basis.
pub fn nullspace(columns: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    let mut kernel = Vec::new();
    for (k, col) in columns.iter().enumerate() {
        if let Some(rel) = e.insert_tracked(col.clone(), SparseVec::unit(k)) {
            kernel.push(rel);
        }
    }
    kernel
}

/// Canonical complement of a subspace `sub` inside a subspace `sup`, given
/// `sub ⊆ sup`: vectors of `sup` reduced modulo `sub` and brought to reduced
/// row echelon form. Coordinates of an element of `sup` modulo `sub` read off
/// at the complement pivots.
#[derive(Clone, Debug, Default)]
pub struct Quotient {
    sub: Echelon,
    reps: Vec<SparseVec>,
    rep_pivots: Vec<usize>,
}

impl Quotient {
    pub fn new<'a>(sub: Echelon, sup: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut comp = Echelon::new();
        for v in sup {
            comp.insert(sub.reduce(v));
        }
        let reps = comp.rref();
        let rep_pivots = reps.iter().map(|r| r.leading().unwrap().0).collect();
        Self { sub, reps, rep_pivots }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[SparseVec] {
        &self.reps
    }

    pub fn sub(&self) -> &Echelon {
        &self.sub
    }

    /// Coordinates of `v` modulo `sub` over the representatives, or `None` when
    /// `v` is outside `sup`.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut r = self.sub.reduce(v);
        let mut coords = Vec::new();
        for (k, (rep, &p)) in self.reps.iter().zip(&self.rep_pivots).enumerate() {
            if let Some(c) = r.get(p).cloned() {
                r = r.add_scaled(rep, &(-c.clone()));
                coords.push((k, c));
            }
        }
        r.is_zero().then(|| SparseVec::from_entries(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = [v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn nullspace_relation() {
        // columns c0 = (1,0), c1 = (0,1), c2 = (1,1): kernel spanned by c0 + c1 - c2
        let cols = [v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        let ker = nullspace(&cols);
        assert_eq!(ker.len(), 1);
        assert!(combine(&cols, &ker[0]).is_zero());
    }

    #[test]
    fn solve_recovers_combination() {
        let mut e = Echelon::new();
        e.insert_tracked(v(&[1, 1, 0]), SparseVec::unit(0));
        e.insert_tracked(v(&[0, 1, 1]), SparseVec::unit(1));
        let target = v(&[2, 5, 3]);
        let comb = e.solve(&target).unwrap();
        assert_eq!(comb, SparseVec::from_entries(vec![(0, rat(2)), (1, rat(3))]));
        assert!(e.solve(&v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn quotient_coordinates() {
        let sub = Echelon::from_vectors(&[v(&[1, 1, 0])]);
        let q = Quotient::new(sub, &[v(&[1, 0, 0]), v(&[0, 0, 1]), v(&[0, 1, 0])]);
        assert_eq!(q.dim(), 2);
        // (1,0,0) ≡ -(0,1,0) modulo the subspace
        let c = q.coordinates(&v(&[1, 0, 0])).unwrap();
        assert_eq!(c, SparseVec::from_entries(vec![(0, rat(-1))]));
    }

    #[test]
    fn primitive_clears_denominators() {
        let x = SparseVec::from_entries(vec![(0, ratio(-1, 2)), (3, ratio(3, 4))]);
        assert_eq!(x.primitive(), SparseVec::from_entries(vec![(0, rat(2)), (3, rat(-3))]));
    }
}
