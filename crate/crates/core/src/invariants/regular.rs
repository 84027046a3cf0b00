use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{ideal_slice, indecomposables, ClassJson};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rat, SparseVec};
use crate::models::{Class, TruncatedRing};

/// Seed used for random candidate combinations unless one is supplied.
pub const DEFAULT_SEED: u64 = 20_160_509;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementStatus {
    /// Multiplication is injective modulo the earlier elements in every
    /// degree `n` with `n + deg ≤ D`.
    RegularUpTo(u32),
    /// `element · witness` lies in the ideal of the earlier elements while
    /// `witness` does not.
    ZeroDivisor(Class),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSequenceCertificate {
    pub elements: Vec<Class>,
    pub bound: u32,
    pub status: Vec<ElementStatus>,
}

impl RegularSequenceCertificate {
    pub fn is_regular(&self) -> bool {
        self.status.iter().all(|s| matches!(s, ElementStatus::RegularUpTo(_)))
    }
}

/// Witness that `f` is a zero divisor on `R / (earlier)`, if any.
fn zero_divisor_mod(ring: &TruncatedRing, earlier: &[Class], f: &Class, even_only: bool) -> Option<Class> {
    let bound = ring.bound();
    for n in 0..=bound.saturating_sub(f.degree) {
        if even_only && n % 2 == 1 {
            continue;
        }
        if ring.dim(n) == 0 {
            continue;
        }
        let target = ideal_slice(ring, earlier, n + f.degree, even_only);
        let cols: Vec<SparseVec> = ring
            .multiplication_columns(f, n)
            .expect("within bound")
            .iter()
            .map(|c| target.reduce(c))
            .collect();
        let here = ideal_slice(ring, earlier, n, even_only);
        for k in nullspace(&cols) {
            if !here.contains(&k) {
                return Some(Class::new(n, k.primitive()));
            }
        }
    }
    None
}

fn check_even(classes: &[Class]) -> Result<()> {
    match classes.iter().find(|c| c.degree % 2 == 1) {
        Some(c) => Err(Error::OddDegreeClass(c.degree)),
        None => match classes.iter().find(|c| c.degree == 0) {
            Some(_) => Err(Error::NonPositiveDegree(0)),
            None => Ok(()),
        },
    }
}

fn certify(ring: &TruncatedRing, classes: &[Class], even_only: bool) -> Result<RegularSequenceCertificate> {
    check_even(classes)?;
    let status = (0..classes.len())
        .map(|k| match zero_divisor_mod(ring, &classes[..k], &classes[k], even_only) {
            Some(w) => ElementStatus::ZeroDivisor(w),
            None => ElementStatus::RegularUpTo(ring.bound()),
        })
        .collect();
    Ok(RegularSequenceCertificate { elements: classes.to_vec(), bound: ring.bound(), status })
}

/// Checks each element for injectivity modulo its predecessors, degreewise
/// through the truncation.
pub fn is_regular_sequence(ring: &TruncatedRing, classes: &[Class]) -> Result<RegularSequenceCertificate> {
    certify(ring, classes, false)
}

/// Same check on the even-degree part of the ring only.
pub fn is_regular_sequence_in_even_part(
    ring: &TruncatedRing,
    classes: &[Class],
) -> Result<RegularSequenceCertificate> {
    certify(ring, classes, true)
}

/// A class outside `(sequence)` that multiplies every ring generator into it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleCertificate {
    pub class: ClassJson,
    /// Largest degree of an indecomposable seen through the bound.
    pub max_generator_degree: u32,
    /// Length of the regular sequence the socle class lives modulo.
    pub modulo_sequence: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub bound: u32,
    pub seed: u64,
    pub krull_dimension: u32,
    /// Greedy regular sequence; its length is a depth lower bound valid through the bound.
    pub sequence: Vec<ClassJson>,
    pub lower_bound: u32,
    /// Present when `R/(sequence)` has a socle class, pinning the depth to `lower_bound`.
    pub socle: Option<SocleCertificate>,
    /// Candidates tried and rejected when trying to extend the final sequence.
    pub failed_extensions: usize,
}

impl DepthReport {
    pub fn exact_depth(&self) -> Option<u32> {
        self.socle.as_ref().map(|_| self.lower_bound)
    }
}

fn random_combination(rng: &mut ChaCha8Rng, degree: u32, dim: usize, width: i64) -> Class {
    loop {
        let entries: Vec<(usize, _)> = (0..dim).map(|i| (i, rat(rng.gen_range(-width..=width)))).collect();
        let v = SparseVec::from_entries(entries);
        if !v.is_zero() {
            return Class::new(degree, v);
        }
    }
}

/// Candidate elements of degree `e`: basis classes first, then seeded random
/// combinations with coefficients in `{−2..2}`, widening to `{−7..7}` and `{−30..30}`.
fn candidates(ring: &TruncatedRing, e: u32, rng: &mut ChaCha8Rng) -> Vec<Class> {
    let dim = ring.dim(e);
    let mut out: Vec<Class> = (0..dim).map(|i| Class::basis(e, i)).collect();
    if dim > 1 {
        for width in [2, 7, 30] {
            for _ in 0..4 {
                out.push(random_combination(rng, e, dim, width));
            }
        }
    }
    out
}

/// Class of degree `n` outside the ideal `I` whose products with every
/// generator land in `I`, for `n + max generator degree ≤ D`.
fn find_socle(ring: &TruncatedRing, seq: &[Class], generators: &[Class]) -> Option<(Class, u32)> {
    let g_max = generators.iter().map(|g| g.degree).max().unwrap_or(0);
    let bound = ring.bound();
    if generators.is_empty() {
        return None;
    }
    for n in 0..=bound.saturating_sub(g_max) {
        let dim = ring.dim(n);
        if dim == 0 {
            continue;
        }
        let here = ideal_slice(ring, seq, n, false);
        if here.rank() == dim {
            continue;
        }
        // columns: for each basis class v of R_n, the stacked residues of v·g mod I
        let mut columns: Vec<SparseVec> = vec![SparseVec::new(); dim];
        let mut offset = 0;
        for g in generators {
            let m = n + g.degree;
            let target = ideal_slice(ring, seq, m, false);
            let cols = ring.multiplication_columns(g, n).expect("within bound");
            for (i, c) in cols.iter().enumerate() {
                columns[i] = columns[i].add(&target.reduce(c).shifted(offset));
            }
            offset += ring.dim(m);
        }
        for k in nullspace(&columns) {
            if !here.contains(&k) {
                return Some((Class::new(n, here.reduce(&k).primitive()), g_max));
            }
        }
    }
    None
}

/// Greedy regular-sequence search plus socle detection.
///
/// Candidates are tried by ascending degree (even degrees up to `D/2`), basis
/// classes before random combinations; the search stops at `kdim`.
pub fn depth_report(ring: &TruncatedRing, kdim: u32, seed: u64) -> DepthReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = ring.bound();
    let mut seq: Vec<Class> = Vec::new();
    let mut failed = 0;
    while (seq.len() as u32) < kdim {
        failed = 0;
        let mut found = None;
        'degrees: for e in (2..=bound / 2).step_by(2) {
            for c in candidates(ring, e, &mut rng) {
                if zero_divisor_mod(ring, &seq, &c, false).is_none() {
                    found = Some(c);
                    break 'degrees;
                }
                failed += 1;
            }
        }
        match found {
            Some(c) => seq.push(c),
            None => break,
        }
    }
    let lower_bound = seq.len() as u32;
    assert!(lower_bound <= kdim, "depth lower bound exceeds Krull dimension");
    let generators = indecomposables(ring, false);
    let socle = find_socle(ring, &seq, &generators).map(|(c, g_max)| SocleCertificate {
        class: ClassJson::new(ring, &c),
        max_generator_degree: g_max,
        modulo_sequence: seq.len(),
    });
    DepthReport {
        bound,
        seed,
        krull_dimension: kdim,
        sequence: seq.iter().map(|c| ClassJson::new(ring, c)).collect(),
        lower_bound,
        socle,
        failed_extensions: failed,
    }
}
