use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// The six bases of each graded piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    /// Monomial.
    M,
    /// Complete homogeneous.
    H,
    /// Signed elementary.
    E,
    /// Unsigned elementary.
    EPlus,
    /// Signed complete homogeneous.
    HPlus,
    /// Power.
    P,
}

impl BasisTag {
    pub const ALL: [BasisTag; 6] = [
        BasisTag::M,
        BasisTag::H,
        BasisTag::E,
        BasisTag::EPlus,
        BasisTag::HPlus,
        BasisTag::P,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasisTag::M => "M",
            BasisTag::H => "H",
            BasisTag::E => "E",
            BasisTag::EPlus => "E+",
            BasisTag::HPlus => "H+",
            BasisTag::P => "P",
        }
    }

    /// True for the bases with `F_α F_β = F_{α ∪ β}`, i.e. all but M.
    pub fn is_multiplicative(self) -> bool {
        self != BasisTag::M
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    /// Accepts `M H E P`, `E+`/`EP`/`E_PLUS` and `H+`/`HP`/`H_PLUS`, in any case.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        match key.as_str() {
            "M" => Ok(BasisTag::M),
            "H" => Ok(BasisTag::H),
            "E" => Ok(BasisTag::E),
            "P" => Ok(BasisTag::P),
            "E+" | "EP" | "E_PLUS" | "EPLUS" => Ok(BasisTag::EPlus),
            "H+" | "HP" | "H_PLUS" | "HPLUS" => Ok(BasisTag::HPlus),
            _ => Err(Error::UnknownBasis(s.to_string())),
        }
    }
}

impl Serialize for BasisTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for BasisTag {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
