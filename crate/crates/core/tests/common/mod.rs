#![allow(dead_code)]

use equicm::algebra::{AlgebraMorphism, FreeGCAlgebra};
use equicm::diagrams::{join_diagram, noncm_join_generator, suspension_diagram, Catalog, GroupDiagram};
use equicm::linalg::{rat, Rational};

/// Rank of a dense rational matrix by plain Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let zero = rat(0);
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != zero) else { continue };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != zero {
                let f = row[col].clone() / pivot_row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= p.clone() * f.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Matrix (rows = target monomials) of `φ ⊕ −ψ` in degree `n`.
fn difference_matrix(phi: &AlgebraMorphism, psi: &AlgebraMorphism, n: u32) -> Vec<Vec<Rational>> {
    let target = phi.target();
    let tb = target.basis(n);
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for (m, sign) in [(phi, 1), (psi, -1)] {
        for mono in m.source().basis(n).monomials() {
            let mut col = vec![rat(0); tb.len()];
            for (tm, c) in m.apply_monomial(mono).terms() {
                col[tb.index_of(tm).unwrap()] += c.clone() * rat(sign);
            }
            cols.push(col);
        }
    }
    (0..tb.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

/// Betti numbers of the pullback from the Mayer–Vietoris sequence of
/// even-degree polynomial algebras: `b_n = dim ker δ_n + dim coker δ_{n−1}`.
pub fn mayer_vietoris_betti(phi: &AlgebraMorphism, psi: &AlgebraMorphism, bound: u32) -> Vec<usize> {
    let dims = |a: &FreeGCAlgebra, n: u32| a.basis(n).len();
    let rank = |n: u32| dense_rank(difference_matrix(phi, psi, n));
    (0..=bound)
        .map(|n| {
            let domain = dims(phi.source(), n) + dims(psi.source(), n);
            let ker = domain - rank(n);
            let coker = if n == 0 { 0 } else { dims(phi.target(), n - 1) - rank(n - 1) };
            ker + coker
        })
        .collect()
}

/// Number of monomials of degree `n` in a polynomial ring on even generators.
pub fn monomial_count(degrees: &[u32], n: u32) -> usize {
    let mut ways = vec![0usize; n as usize + 1];
    ways[0] = 1;
    for &d in degrees {
        for k in d as usize..=n as usize {
            ways[k] += ways[k - d as usize];
        }
    }
    ways[n as usize]
}

/// Shipped examples, suspensions of every catalog fiber, and a handful of joins.
pub fn catalog_diagrams() -> Vec<(String, GroupDiagram)> {
    let c = Catalog::builtin();
    let mut out: Vec<(String, GroupDiagram)> =
        Catalog::examples().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    for p in c.pairs() {
        let mut d = suspension_diagram(&p.k, &p.h, &p.iota).unwrap();
        d.options.positively_curved = true;
        out.push((format!("Susp({})", p.name), d));
    }
    for (l, r) in [("W7", "W7"), ("W7", "W6"), ("B13", "S2"), ("CP2", "W7_1_2")] {
        let d = noncm_join_generator(c, l, r).unwrap().diagram().unwrap().clone();
        out.push((format!("{l} * {r}"), d));
    }
    for (l, r) in [("S2", "S2"), ("S3", "S2"), ("S5", "W7")] {
        let (a, b) = (c.pair(l).unwrap(), c.pair(r).unwrap());
        let d = join_diagram((&a.k, &a.h, &a.iota), (&b.k, &b.h, &b.iota)).unwrap();
        out.push((format!("{l} * {r}"), d));
    }
    out
}
