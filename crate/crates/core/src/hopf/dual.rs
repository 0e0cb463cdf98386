//! Opposite and coopposite Hopf π-coalgebras.

use crate::tensor::{inverse, DenseTensor};

use super::{HopfParts, HopfPiCoalgebra, StructureError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualKind {
    Opposite,
    Coopposite,
}

pub fn dual_variant(h: &HopfPiCoalgebra, kind: DualKind) -> Result<HopfPiCoalgebra, StructureError> {
    match kind {
        DualKind::Opposite => opposite(h),
        DualKind::Coopposite => coopposite(h),
    }
}

fn invert(t: &DenseTensor, label: impl FnOnce() -> String) -> Result<DenseTensor, StructureError> {
    if t.is_empty() {
        return Ok(t.permute(&[1, 0]));
    }
    inverse(t).map_err(|_| StructureError::SingularAntipode(label()))
}

/// `H^op`: reversed products, `S^op_α = S_{α⁻¹}⁻¹`.
pub fn opposite(h: &HopfPiCoalgebra) -> Result<HopfPiCoalgebra, StructureError> {
    let g = h.pi();
    let p = h.parts();
    let mul = p.mul.iter().map(|m| m.permute(&[1, 0, 2])).collect();
    let antipode = g
        .elements()
        .map(|a| invert(h.antipode(g.inv(a)), || g.name(g.inv(a)).to_string()))
        .collect::<Result<_, _>>()?;
    HopfPiCoalgebra::from_parts(HopfParts {
        name: format!("{}^op", p.name),
        mul,
        antipode,
        ..p.clone()
    })
}

/// `H^cop`: `H^cop_α = H_{α⁻¹}`, `Δ^cop_{α,β} = σ Δ_{β⁻¹,α⁻¹}`, `S^cop_α = S_α⁻¹`.
pub fn coopposite(h: &HopfPiCoalgebra) -> Result<HopfPiCoalgebra, StructureError> {
    let g = h.pi();
    let p = h.parts();
    let inv = |a| g.inv(a);
    let dim = g.elements().map(|a| p.dim[inv(a)]).collect();
    let mul = g.elements().map(|a| p.mul[inv(a)].clone()).collect();
    let unit = g.elements().map(|a| p.unit[inv(a)].clone()).collect();
    let delta = g
        .elements()
        .map(|a| g.elements().map(|b| p.delta[inv(b)][inv(a)].permute(&[0, 2, 1])).collect())
        .collect();
    let antipode = g
        .elements()
        .map(|a| invert(&p.antipode[a], || g.name(a).to_string()))
        .collect::<Result<_, _>>()?;
    let crossing = p.crossing.as_ref().map(|cr| {
        g.elements()
            .map(|b| g.elements().map(|a| cr[b][inv(a)].clone()).collect())
            .collect()
    });
    let name = match p.name.strip_suffix("^cop") {
        Some(base) => base.to_string(),
        None => format!("{}^cop", p.name),
    };
    HopfPiCoalgebra::from_parts(HopfParts {
        name,
        pi: p.pi.clone(),
        dim,
        mul,
        unit,
        delta,
        counit: p.counit.clone(),
        antipode,
        crossing,
    })
}
