use super::{CompactGroupData, DiagramOptions, GroupDiagram};
use crate::algebra::AlgebraMorphism;
use crate::error::{Error, Result};
use crate::models::formal_dimension;

fn check_proper(g: &CompactGroupData, h: &CompactGroupData, iota: &AlgebraMorphism) -> Result<()> {
    let proper = match (g.dim, h.dim) {
        (Some(a), Some(b)) => b < a,
        _ => formal_dimension(iota) > 0,
    };
    if proper {
        Ok(())
    } else {
        Err(Error::InvalidDiagram(format!("{} must be a proper subgroup of {}", h.name, g.name)))
    }
}

fn check_iota(g: &CompactGroupData, h: &CompactGroupData, iota: &AlgebraMorphism) -> Result<()> {
    if iota.source() != &g.algebra() || iota.target() != &h.algebra() {
        return Err(Error::AlgebraMismatch.in_field("iota"));
    }
    Ok(())
}

/// `(G, H, G, G)`: both singular isotropy groups are `G` and both induced
/// maps equal `iota`. Generators of the two copies of `G` get suffixes `m`
/// and `p`.
pub fn suspension_diagram(g: &CompactGroupData, h: &CompactGroupData, iota: &AlgebraMorphism) -> Result<GroupDiagram> {
    check_iota(g, h, iota)?;
    check_proper(g, h, iota)?;
    let kminus = g.renamed("m");
    let kplus = g.renamed("p");
    let hal = h.algebra();
    let iota_minus = iota.relabel(&kminus.algebra(), &hal)?;
    let iota_plus = iota.relabel(&kplus.algebra(), &hal)?;
    let d = GroupDiagram::new(g.clone(), h.clone(), kminus, kplus, iota_minus, iota_plus, DiagramOptions::default())?;
    Ok(d.with_name(format!("Susp({}/{})", g.name, h.name)))
}

/// `(G1×G2, H1×H2, G1×H2, H1×G2)` with tensor-product induced maps.
/// Generators of the left factor get suffix `_1`, the right `_2`.
pub fn join_diagram(
    left: (&CompactGroupData, &CompactGroupData, &AlgebraMorphism),
    right: (&CompactGroupData, &CompactGroupData, &AlgebraMorphism),
) -> Result<GroupDiagram> {
    let (g1, h1, i1) = left;
    let (g2, h2, i2) = right;
    check_iota(g1, h1, i1).map_err(|e| e.in_field("left"))?;
    check_iota(g2, h2, i2).map_err(|e| e.in_field("right"))?;
    check_proper(g1, h1, i1).map_err(|e| e.in_field("left"))?;
    check_proper(g2, h2, i2).map_err(|e| e.in_field("right"))?;
    let (g1, h1) = (g1.renamed("_1"), h1.renamed("_1"));
    let (g2, h2) = (g2.renamed("_2"), h2.renamed("_2"));
    let i1 = i1.relabel(&g1.algebra(), &h1.algebra())?;
    let i2 = i2.relabel(&g2.algebra(), &h2.algebra())?;
    let g = g1.product(&g2)?;
    let h = h1.product(&h2)?;
    let kminus = g1.product(&h2)?;
    let kplus = h1.product(&g2)?;
    let iota_minus = i1.tensor(&AlgebraMorphism::identity(&h2.algebra()))?;
    let iota_plus = AlgebraMorphism::identity(&h1.algebra()).tensor(&i2)?;
    let name = format!("{}/{} * {}/{}", left.0.name, left.1.name, right.0.name, right.1.name);
    let d = GroupDiagram::new(g, h, kminus, kplus, iota_minus, iota_plus, DiagramOptions::default())?;
    Ok(d.with_name(name))
}
