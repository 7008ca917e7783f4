use super::{convert, BasisTag, PolyElement};
use crate::error::Result;

/// The independent ways of computing Ω: rewrite in one basis, apply Ω there
/// by its action on that basis, and convert back.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OmegaRoute {
    /// `E⁺_τ ↦ H⁺_τ`.
    EPlus,
    /// `H_τ ↦ E_τ`.
    H,
    /// `E_τ ↦ H_τ`.
    E,
    /// `H⁺_τ ↦ E⁺_τ`.
    HPlus,
    /// `P_τ ↦ (−1)^{ℓ(τ)} P_τ`.
    P,
}

impl OmegaRoute {
    pub const ALL: [OmegaRoute; 5] = [
        OmegaRoute::EPlus,
        OmegaRoute::H,
        OmegaRoute::E,
        OmegaRoute::HPlus,
        OmegaRoute::P,
    ];

    fn bases(self) -> (BasisTag, BasisTag) {
        match self {
            OmegaRoute::EPlus => (BasisTag::EPlus, BasisTag::HPlus),
            OmegaRoute::H => (BasisTag::H, BasisTag::E),
            OmegaRoute::E => (BasisTag::E, BasisTag::H),
            OmegaRoute::HPlus => (BasisTag::HPlus, BasisTag::EPlus),
            OmegaRoute::P => (BasisTag::P, BasisTag::P),
        }
    }
}

/// Ω computed through the E⁺ basis, returned in the basis of `x`.
pub fn omega(x: &PolyElement) -> Result<PolyElement> {
    omega_via(x, OmegaRoute::EPlus)
}

pub fn omega_via(x: &PolyElement, route: OmegaRoute) -> Result<PolyElement> {
    let (source, image) = route.bases();
    let y = convert(x, source)?;
    let swapped = if route == OmegaRoute::P {
        y.map_coefficients(
            BasisTag::P,
            |tau, c| {
                if tau.len() % 2 == 1 {
                    -c
                } else {
                    c.clone()
                }
            },
        )
    } else {
        y.relabel(image)
    };
    convert(&swapped, x.basis())
}
