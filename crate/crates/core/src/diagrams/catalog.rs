use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{CompactGroupData, FiberType, GroupDiagram};
use crate::algebra::AlgebraMorphism;
use crate::error::{Error, Result};

const CATALOG_JSON: &str = include_str!("../../data/catalog.json");

const EXAMPLES: &[(&str, &str)] = &[
    ("susp_w711", include_str!("../../data/diagrams/susp_w711.json")),
    ("corank", include_str!("../../data/diagrams/corank.json")),
    ("sp1cubed", include_str!("../../data/diagrams/sp1cubed.json")),
    ("rp2_join_w7", include_str!("../../data/diagrams/rp2_join_w7.json")),
    ("susp_cp3_z2", include_str!("../../data/diagrams/susp_cp3_z2.json")),
    ("susp_s5", include_str!("../../data/diagrams/susp_s5.json")),
];

/// A homogeneous fiber `group/subgroup` with its isotropy map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub name: String,
    pub group: String,
    pub subgroup: String,
    pub images: BTreeMap<String, String>,
    pub rational_type: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CatalogFile {
    groups: Vec<CompactGroupData>,
    fibers: Vec<FiberEntry>,
}

/// A realizing pair `(K, H, H*(BK) → H*(BH))` for a catalog fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPair {
    pub name: String,
    pub k: CompactGroupData,
    pub h: CompactGroupData,
    pub iota: AlgebraMorphism,
    pub annotated: FiberType,
}

/// On-disk form of a homogeneous pair: `{name, G, H, iota}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "G")]
    pub g: CompactGroupData,
    #[serde(rename = "H")]
    pub h: CompactGroupData,
    pub iota: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rational_type: Option<String>,
}

impl HomogeneousPair {
    /// Reads a pair file; without a `rational_type` the computed type is used.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: PairFile = serde_json::from_str(s)?;
        file.g.validate().map_err(|e| e.in_field("G"))?;
        file.h.validate().map_err(|e| e.in_field("H"))?;
        let iota = super::diagram::morphism_from_map("iota", &file.g, &file.h, &file.iota)?;
        let computed = super::fiber_type(&file.g, &file.h, &iota);
        let annotated = match &file.rational_type {
            Some(t) => t.parse().map_err(|e: Error| e.in_field("rational_type"))?,
            None => computed,
        };
        let name = file.name.unwrap_or_else(|| format!("{}/{}", file.g.name, file.h.name));
        Ok(HomogeneousPair { name, k: file.g, h: file.h, iota, annotated })
    }
}

/// Read-only group and fiber data.
#[derive(Clone, Debug)]
pub struct Catalog {
    groups: Vec<CompactGroupData>,
    fibers: Vec<FiberEntry>,
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::from_json_str(CATALOG_JSON).expect("shipped catalog is valid"))
    }

    pub fn from_json_str(s: &str) -> Result<Catalog> {
        let file: CatalogFile = serde_json::from_str(s)?;
        for g in &file.groups {
            g.validate().map_err(|e| e.in_field(format!("groups.{}", g.name)))?;
        }
        let catalog = Catalog { groups: file.groups, fibers: file.fibers };
        for f in &catalog.fibers {
            catalog.pair(&f.name)?;
        }
        Ok(catalog)
    }

    pub fn groups(&self) -> &[CompactGroupData] {
        &self.groups
    }

    pub fn group(&self, name: &str) -> Option<&CompactGroupData> {
        self.groups.iter().find(|g| g.name == name)
    }

    pub fn fibers(&self) -> &[FiberEntry] {
        &self.fibers
    }

    pub fn fiber_names(&self) -> Vec<&str> {
        self.fibers.iter().map(|f| f.name.as_str()).collect()
    }

    /// Realizing pair of a named fiber.
    pub fn pair(&self, name: &str) -> Result<HomogeneousPair> {
        let f = self
            .fibers
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| Error::UnknownFiber(name.to_string()))?;
        let field = format!("fibers.{name}");
        let lookup = |g: &str| {
            self.group(g)
                .cloned()
                .ok_or_else(|| Error::InvalidDiagram(format!("unknown group `{g}`")).in_field(field.clone()))
        };
        let k = lookup(&f.group)?;
        let h = lookup(&f.subgroup)?;
        let exprs: Vec<(&str, &str)> = f.images.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let iota = AlgebraMorphism::from_exprs(&k.algebra(), &h.algebra(), &exprs).map_err(|e| e.in_field(field.clone()))?;
        let annotated = f.rational_type.parse().map_err(|e: Error| e.in_field(field.clone()))?;
        Ok(HomogeneousPair { name: f.name.clone(), k, h, iota, annotated })
    }

    pub fn pairs(&self) -> Vec<HomogeneousPair> {
        self.fibers.iter().map(|f| self.pair(&f.name).expect("validated on load")).collect()
    }

    /// The example diagrams shipped with the crate, by file stem.
    pub fn examples() -> Vec<(&'static str, GroupDiagram)> {
        EXAMPLES
            .iter()
            .map(|(name, json)| (*name, GroupDiagram::from_json_str(json).expect("shipped example is valid")))
            .collect()
    }

    pub fn example(name: &str) -> Option<GroupDiagram> {
        Self::examples().into_iter().find(|(n, _)| *n == name).map(|(_, d)| d)
    }
}
