//! Krull dimension, depth bounds, regular sequences, zero-divisor witnesses
//! and Cohen–Macaulay verdicts for truncated cohomology rings.

use serde::{Deserialize, Serialize};

use crate::linalg::{fmt_rat, Echelon};
use crate::models::{Class, TruncatedRing};

mod dimension;
mod regular;
mod verdict;
mod witness;

pub use dimension::{hilbert_growth_dimension, indecomposables, krull_dimension, GrowthEstimate};
pub use regular::{
    depth_report, is_regular_sequence, is_regular_sequence_in_even_part, DepthReport, ElementStatus,
    RegularSequenceCertificate, SocleCertificate, DEFAULT_SEED,
};
pub use verdict::{cm_from_invariants, CMVerdict, Decision, VerdictBasis};
pub use witness::{zero_divisor_witness, ZeroDivisorWitness};

/// A class written out for certificates: sparse coordinates over the
/// degree's representatives plus a readable representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub degree: u32,
    pub coordinates: Vec<(usize, String)>,
    pub class: String,
    pub representative: String,
}

impl ClassJson {
    pub fn new(ring: &TruncatedRing, c: &Class) -> Self {
        let representative = if c.coords.len() == 1 {
            let (i, x) = c.coords.leading().unwrap();
            let d = ring.description(c.degree, i);
            if x == &crate::linalg::rat(1) {
                d.to_string()
            } else {
                format!("{}·{}", fmt_rat(x), d)
            }
        } else {
            ring.format_class(c)
        };
        Self {
            degree: c.degree,
            coordinates: c.coords.iter().map(|(i, x)| (i, fmt_rat(x))).collect(),
            class: ring.format_class(c),
            representative,
        }
    }

    /// The class back from its coordinates.
    pub fn to_class(&self) -> Class {
        let entries = self
            .coordinates
            .iter()
            .map(|(i, x)| (*i, x.parse::<crate::linalg::Rational>().expect("coordinates are written by fmt_rat")))
            .collect();
        Class::new(self.degree, crate::linalg::SparseVec::from_entries(entries))
    }
}

/// Span of `Σ f_i · R_{n − deg f_i}` in degree `n`.
pub(crate) fn ideal_slice(ring: &TruncatedRing, gens: &[Class], n: u32, even_only: bool) -> Echelon {
    let mut e = Echelon::new();
    for f in gens {
        if f.degree > n {
            continue;
        }
        let m = n - f.degree;
        if even_only && m % 2 == 1 {
            continue;
        }
        if let Some(cols) = ring.multiplication_columns(f, m) {
            for c in cols {
                e.insert(c);
            }
        }
    }
    e
}
