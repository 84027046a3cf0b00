use serde::{Deserialize, Serialize};

use crate::algebra::{FreeGCAlgebra, Generator};
use crate::error::{Error, Result};

/// Rank, classifying-space generators and Weyl order of a compact group.
///
/// For a non-connected group the generators describe `H*(BK₀)` or the
/// supplied invariant ring, and `weyl_order` already includes the component
/// group, so that `χ(G/K) = weyl(G) / weyl(K)` in the equal-rank case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactGroupData {
    pub name: String,
    pub rank: u32,
    pub generators: Vec<Generator>,
    pub weyl_order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u32>,
}

impl CompactGroupData {
    pub fn new(name: &str, rank: u32, generators: &[(&str, u32)], weyl_order: u64, dim: Option<u32>) -> Result<Self> {
        let g = Self {
            name: name.to_string(),
            rank,
            generators: generators.iter().map(|(n, d)| Generator::new(*n, *d)).collect(),
            weyl_order,
            dim,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.generators.len() != self.rank as usize {
            return Err(Error::InvalidDiagram(format!(
                "{} has rank {} but {} generators",
                self.name,
                self.rank,
                self.generators.len()
            )));
        }
        if let Some(g) = self.generators.iter().find(|g| g.degree < 2 || g.degree % 2 == 1) {
            return Err(Error::InvalidDiagram(format!(
                "generator {} of {} has degree {}; classifying-space generators need even degree ≥ 2",
                g.name, self.name, g.degree
            )));
        }
        if self.weyl_order == 0 {
            return Err(Error::InvalidDiagram(format!("{} has Weyl order 0", self.name)));
        }
        FreeGCAlgebra::new(self.generators.clone())?;
        Ok(())
    }

    /// `H*(BK; ℚ)` as a polynomial algebra.
    pub fn algebra(&self) -> FreeGCAlgebra {
        FreeGCAlgebra::new(self.generators.clone()).expect("validated generators")
    }

    /// Copy with every generator name suffixed.
    pub fn renamed(&self, suffix: &str) -> Self {
        let mut out = self.clone();
        for g in &mut out.generators {
            g.name.push_str(suffix);
        }
        out
    }

    /// Product group; generator lists are concatenated.
    pub fn product(&self, other: &CompactGroupData) -> Result<Self> {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        let g = Self {
            name: format!("{}×{}", self.name, other.name),
            rank: self.rank + other.rank,
            generators,
            weyl_order: self.weyl_order * other.weyl_order,
            dim: self.dim.zip(other.dim).map(|(a, b)| a + b),
        };
        g.validate()?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_rank_and_degrees() {
        assert!(CompactGroupData::new("SU(3)", 2, &[("x", 4), ("y", 6)], 6, Some(8)).is_ok());
        assert!(CompactGroupData::new("bad", 2, &[("x", 4)], 6, None).is_err());
        assert!(CompactGroupData::new("bad", 1, &[("x", 3)], 1, None).is_err());
        assert!(CompactGroupData::new("bad", 1, &[("x", 2)], 0, None).is_err());
    }

    #[test]
    fn product_adds_and_multiplies() {
        let a = CompactGroupData::new("SU(3)", 2, &[("x", 4), ("y", 6)], 6, Some(8)).unwrap();
        let b = CompactGroupData::new("S1", 1, &[("t", 2)], 1, Some(1)).unwrap();
        let p = a.renamed("_1").product(&b.renamed("_2")).unwrap();
        assert_eq!(p.rank, 3);
        assert_eq!(p.weyl_order, 6);
        assert_eq!(p.dim, Some(9));
        assert_eq!(p.generators[2].name, "t_2");
    }
}
