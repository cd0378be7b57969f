//! ADE labels and the resolution data of the corresponding du Val points.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeKind {
    A,
    D,
    E,
}

/// A du Val type.
///
/// The parameter is the family parameter of the group, not the Dynkin index:
/// `A_{n-1}` is stored with `n >= 1` (cyclic group of order `n`), `D_{n+2}` with
/// `n >= 2` (binary dihedral group of order `4n`), and `E_6`, `E_7`, `E_8`
/// with `6`, `7`, `8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdeLabel {
    kind: AdeKind,
    parameter: u32,
}

impl AdeLabel {
    pub fn new(kind: AdeKind, parameter: u32) -> Result<Self> {
        let ok = match kind {
            AdeKind::A => parameter >= 1,
            AdeKind::D => parameter >= 2,
            AdeKind::E => (6..=8).contains(&parameter),
        };
        if ok {
            Ok(AdeLabel { kind, parameter })
        } else {
            let what = match kind {
                AdeKind::A => format!("A with group order {parameter} (need n >= 1)"),
                AdeKind::D => format!("D with n = {parameter} (need n >= 2, i.e. D4 or higher)"),
                AdeKind::E => format!("E{parameter} (need 6, 7 or 8)"),
            };
            Err(Error::InvalidLabel(what))
        }
    }

    /// `A_{n-1}`, the cyclic group of order `n`.
    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(AdeKind::A, n)
    }

    /// `D_{n+2}`, the binary dihedral group of order `4n`.
    pub fn binary_dihedral(n: u32) -> Result<Self> {
        Self::new(AdeKind::D, n)
    }

    pub fn e(rank: u32) -> Result<Self> {
        Self::new(AdeKind::E, rank)
    }

    pub fn kind(&self) -> AdeKind {
        self.kind
    }

    pub fn parameter(&self) -> u32 {
        self.parameter
    }

    /// Subscript of the Dynkin diagram, i.e. its number of nodes.
    pub fn rank(&self) -> u32 {
        match self.kind {
            AdeKind::A => self.parameter - 1,
            AdeKind::D => self.parameter + 2,
            AdeKind::E => self.parameter,
        }
    }

    pub fn group_order(&self) -> u64 {
        let n = u64::from(self.parameter);
        match (self.kind, self.parameter) {
            (AdeKind::A, _) => n,
            (AdeKind::D, _) => 4 * n,
            (AdeKind::E, 6) => 24,
            (AdeKind::E, 7) => 48,
            (AdeKind::E, _) => 120,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == AdeKind::A && self.parameter == 1
    }
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            AdeKind::A => 'A',
            AdeKind::D => 'D',
            AdeKind::E => 'E',
        };
        write!(f, "{k}{}", self.rank())
    }
}

/// Parses Dynkin notation: `A0`, `A5`, `D4`, `E8`, ...
impl FromStr for AdeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(format!("{s:?}: expected A<k>, D<k> or E<k>"));
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => AdeKind::A,
            Some('D') => AdeKind::D,
            Some('E') => AdeKind::E,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: u32 = digits.parse().map_err(|_| bad())?;
        match kind {
            AdeKind::A => AdeLabel::cyclic(rank.checked_add(1).ok_or_else(bad)?),
            AdeKind::D => {
                if rank < 4 {
                    return Err(Error::InvalidLabel(format!("{s}: D needs rank >= 4")));
                }
                AdeLabel::binary_dihedral(rank - 2)
            }
            AdeKind::E => AdeLabel::e(rank),
        }
    }
}

impl Serialize for AdeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AdeLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Minimal-resolution data of `C^2 / G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdeResolutionData {
    pub label: AdeLabel,
    /// Exceptional curves, one per Dynkin node.
    pub node_count: u32,
    pub group_order: u64,
    /// Euler characteristic of the exceptional divisor, a tree of rational curves.
    pub chi_exceptional: u32,
}

pub fn resolution_data(label: AdeLabel) -> AdeResolutionData {
    let node_count = label.rank();
    AdeResolutionData {
        label,
        node_count,
        group_order: label.group_order(),
        chi_exceptional: node_count + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_examples() {
        let a4 = resolution_data(AdeLabel::cyclic(5).unwrap());
        assert_eq!((a4.node_count, a4.chi_exceptional, a4.group_order), (4, 5, 5));
        let d4 = resolution_data(AdeLabel::binary_dihedral(2).unwrap());
        assert_eq!((d4.node_count, d4.chi_exceptional, d4.group_order), (4, 5, 8));
        let e8 = resolution_data(AdeLabel::e(8).unwrap());
        assert_eq!((e8.node_count, e8.chi_exceptional, e8.group_order), (8, 9, 120));
        let e6 = resolution_data(AdeLabel::e(6).unwrap());
        assert_eq!((e6.chi_exceptional, e6.group_order), (7, 24));
        let e7 = resolution_data(AdeLabel::e(7).unwrap());
        assert_eq!((e7.chi_exceptional, e7.group_order), (8, 48));
    }

    #[test]
    fn smooth_point() {
        let a0 = resolution_data(AdeLabel::cyclic(1).unwrap());
        assert_eq!((a0.node_count, a0.chi_exceptional, a0.group_order), (0, 1, 1));
        assert!(a0.label.is_trivial());
    }

    #[test]
    fn chi_is_nodes_plus_one() {
        for n in 1..50 {
            for l in [AdeLabel::cyclic(n), AdeLabel::binary_dihedral(n + 1)] {
                let r = resolution_data(l.unwrap());
                assert_eq!(r.chi_exceptional, r.node_count + 1);
            }
        }
    }

    #[test]
    fn invalid_labels() {
        assert!(AdeLabel::cyclic(0).is_err());
        assert!(AdeLabel::binary_dihedral(1).is_err());
        assert!(AdeLabel::e(5).is_err());
        for s in ["D3", "E9", "B2", "A", "A-1", "", "E 6"] {
            assert!(s.parse::<AdeLabel>().is_err(), "{s}");
        }
    }

    #[test]
    fn parse_and_display() {
        for s in ["A0", "A1", "A5", "D4", "D6", "E6", "E7", "E8"] {
            let l: AdeLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert_eq!("A5".parse::<AdeLabel>().unwrap().parameter(), 6);
        assert_eq!("D6".parse::<AdeLabel>().unwrap().parameter(), 4);
    }
}
