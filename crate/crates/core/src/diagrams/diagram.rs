use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::CompactGroupData;
use crate::algebra::AlgebraMorphism;
use crate::error::{Error, Result};

/// Flags and annotations carried alongside a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    /// `false` when the classifying-space data are supplied invariant rings of
    /// non-connected groups rather than identity-component Sullivan data.
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub sullivan: bool,
    /// The diagram belongs to a space with curvature bounded below by one.
    #[serde(default, skip_serializing_if = "is_false")]
    pub positively_curved: bool,
    /// Optional rational-type annotations of `K⁻/H` and `K⁺/H`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber_minus: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber_plus: Option<String>,
}

impl Default for DiagramOptions {
    fn default() -> Self {
        Self { max_degree: None, sullivan: true, positively_curved: false, fiber_minus: None, fiber_plus: None }
    }
}

fn yes() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// `(G, H, K⁻, K⁺)` with the induced maps `H*(BK±) → H*(BH)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDiagram {
    pub name: Option<String>,
    g: CompactGroupData,
    h: CompactGroupData,
    kminus: CompactGroupData,
    kplus: CompactGroupData,
    iota_minus: AlgebraMorphism,
    iota_plus: AlgebraMorphism,
    pub options: DiagramOptions,
}

/// On-disk form of a diagram.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "G")]
    pub g: CompactGroupData,
    #[serde(rename = "H")]
    pub h: CompactGroupData,
    #[serde(rename = "Kminus")]
    pub kminus: CompactGroupData,
    #[serde(rename = "Kplus")]
    pub kplus: CompactGroupData,
    pub iota_minus: BTreeMap<String, String>,
    pub iota_plus: BTreeMap<String, String>,
    #[serde(default)]
    pub options: DiagramOptions,
}

pub(crate) fn morphism_from_map(
    field: &str,
    source: &CompactGroupData,
    target: &CompactGroupData,
    map: &BTreeMap<String, String>,
) -> Result<AlgebraMorphism> {
    let src = source.algebra();
    let tgt = target.algebra();
    for name in map.keys() {
        if src.index_of(name).is_none() {
            return Err(Error::UnknownGenerator(name.clone()).in_field(format!("{field}.{name}")));
        }
    }
    let mut images = Vec::with_capacity(src.len());
    for g in src.generators() {
        let expr = map
            .get(&g.name)
            .ok_or_else(|| Error::MissingImage(g.name.clone()).in_field(field.to_string()))?;
        let p = crate::algebra::parse_polynomial(&tgt, expr).map_err(|e| e.in_field(format!("{field}.{}", g.name)))?;
        images.push(p);
    }
    AlgebraMorphism::new(&src, &tgt, images).map_err(|e| e.in_field(field.to_string()))
}

fn morphism_to_map(m: &AlgebraMorphism) -> BTreeMap<String, String> {
    m.source().generators().iter().zip(m.images()).map(|(g, p)| (g.name.clone(), p.to_string())).collect()
}

impl GroupDiagram {
    pub fn new(
        g: CompactGroupData,
        h: CompactGroupData,
        kminus: CompactGroupData,
        kplus: CompactGroupData,
        iota_minus: AlgebraMorphism,
        iota_plus: AlgebraMorphism,
        options: DiagramOptions,
    ) -> Result<Self> {
        for (field, grp) in [("G", &g), ("H", &h), ("Kminus", &kminus), ("Kplus", &kplus)] {
            grp.validate().map_err(|e| e.in_field(field))?;
        }
        for (field, k) in [("Kminus", &kminus), ("Kplus", &kplus)] {
            if h.rank > k.rank || k.rank > g.rank {
                return Err(Error::InvalidDiagram(format!(
                    "ranks must satisfy rank H ≤ rank K ≤ rank G, got H={}, {}={}, G={}",
                    h.rank, field, k.rank, g.rank
                )));
            }
        }
        for (field, k, m) in [("iota_minus", &kminus, &iota_minus), ("iota_plus", &kplus, &iota_plus)] {
            if m.source() != &k.algebra() || m.target() != &h.algebra() {
                return Err(Error::AlgebraMismatch.in_field(field));
            }
        }
        if let Some(d) = options.max_degree {
            if d < 2 {
                return Err(Error::InvalidDiagram("options.max_degree must be at least 2".into()));
            }
        }
        Ok(Self { name: None, g, h, kminus, kplus, iota_minus, iota_plus, options })
    }

    pub fn from_file(file: DiagramFile) -> Result<Self> {
        for (field, grp) in [("G", &file.g), ("H", &file.h), ("Kminus", &file.kminus), ("Kplus", &file.kplus)] {
            grp.validate().map_err(|e| e.in_field(field))?;
        }
        let iota_minus = morphism_from_map("iota_minus", &file.kminus, &file.h, &file.iota_minus)?;
        let iota_plus = morphism_from_map("iota_plus", &file.kplus, &file.h, &file.iota_plus)?;
        let mut d = Self::new(file.g, file.h, file.kminus, file.kplus, iota_minus, iota_plus, file.options)?;
        d.name = file.name;
        Ok(d)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: DiagramFile = serde_json::from_str(s)?;
        Self::from_file(file)
    }

    pub fn to_file(&self) -> DiagramFile {
        DiagramFile {
            name: self.name.clone(),
            g: self.g.clone(),
            h: self.h.clone(),
            kminus: self.kminus.clone(),
            kplus: self.kplus.clone(),
            iota_minus: morphism_to_map(&self.iota_minus),
            iota_plus: morphism_to_map(&self.iota_plus),
            options: self.options.clone(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("diagram serializes")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn g(&self) -> &CompactGroupData {
        &self.g
    }

    pub fn h(&self) -> &CompactGroupData {
        &self.h
    }

    pub fn kminus(&self) -> &CompactGroupData {
        &self.kminus
    }

    pub fn kplus(&self) -> &CompactGroupData {
        &self.kplus
    }

    pub fn iota_minus(&self) -> &AlgebraMorphism {
        &self.iota_minus
    }

    pub fn iota_plus(&self) -> &AlgebraMorphism {
        &self.iota_plus
    }

    /// The diagram's own bound, or twice the sum of the `H*(BH)` generator degrees.
    pub fn default_bound(&self) -> u32 {
        self.options.max_degree.unwrap_or_else(|| (2 * self.h.algebra().degree_sum()).max(2))
    }

    pub fn max_corank(&self) -> u32 {
        self.kminus.rank.max(self.kplus.rank) - self.h.rank
    }

    /// `dim G − dim H + 1`, when both dimensions are known.
    pub fn dimension(&self) -> Option<u32> {
        match (self.g.dim, self.h.dim) {
            (Some(g), Some(h)) if g >= h => Some(g - h + 1),
            _ => None,
        }
    }
}
