//! Chern numbers and the BMY check for orbifold surfaces.
//!
//! Two kinds of input are supported: a surface with a simple normal crossing
//! divisor `D = Σ (1 - 1/r_i) D_i` (stack structure along curves), and a
//! surface with isolated Gorenstein stacky points of ADE type.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ade_data::{resolution_data, AdeLabel};
use crate::error::{Error, Result};
use crate::exact_arith::rational::serde_str;
use crate::exact_arith::{int, rat, Rational};
use crate::todd::closed_form_contribution;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SncDivisor {
    /// `r_i >= 2`; the divisor appears in `D` with coefficient `1 - 1/r_i`.
    pub ramification: u32,
    /// `χ(D_i)`.
    pub chi_divisor: i64,
    /// `K_X · D_i`.
    #[serde(with = "serde_str")]
    pub k_dot: Rational,
    /// `D_i²`.
    #[serde(with = "serde_str")]
    pub self_int: Rational,
}

/// `count` transverse intersection points of `D_i` and `D_j`, so `D_i · D_j = count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SncCrossing {
    pub i: usize,
    pub j: usize,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SncPairDescription {
    /// Topological Euler characteristic `χ(X)` of the coarse surface.
    pub chi_coarse: i64,
    /// `K_X²`.
    #[serde(with = "serde_str")]
    pub k_squared: Rational,
    #[serde(default)]
    pub divisors: Vec<SncDivisor>,
    #[serde(default)]
    pub crossings: Vec<SncCrossing>,
    pub canonical_nef_asserted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsolatedPointsDescription {
    /// `χ(O_X)` of the coarse space, equal to that of the stack.
    pub chi_structure_sheaf: i64,
    /// `c₁(K_X)²`.
    #[serde(with = "serde_str")]
    pub c1_squared: Rational,
    #[serde(default)]
    pub points: Vec<AdeLabel>,
    pub canonical_nef_asserted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    HoldsWithEquality,
    Fails,
    /// `K` was not asserted nef, so the inequality makes no claim.
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "Holds",
            Verdict::HoldsWithEquality => "HoldsWithEquality",
            Verdict::Fails => "Fails",
            Verdict::NotApplicable => "NotApplicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointContribution {
    pub label: AdeLabel,
    /// Twisted-sector Todd contribution `(χ(E) - 1/|G|)/12`.
    #[serde(with = "serde_str")]
    pub contribution: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantReport {
    #[serde(with = "serde_str")]
    pub c1_squared: Rational,
    #[serde(with = "serde_str")]
    pub c2: Rational,
    /// `3 c₂ - c₁²`.
    #[serde(with = "serde_str")]
    pub margin: Rational,
    pub verdict: Verdict,
    pub per_point: Vec<PointContribution>,
    pub notes: String,
}

impl SncPairDescription {
    /// Checks ramification indices and crossing records.
    pub fn validate(&self) -> Result<()> {
        for (idx, d) in self.divisors.iter().enumerate() {
            if d.ramification < 2 {
                return Err(Error::Parse(format!(
                    "divisors[{idx}].ramification: ramification must be ≥ 2, got {}",
                    d.ramification
                )));
            }
        }
        let mut seen = HashSet::new();
        for (idx, c) in self.crossings.iter().enumerate() {
            if c.i >= c.j {
                return Err(Error::Parse(format!(
                    "crossings[{idx}]: need i < j (no self-crossings), got i={} j={}",
                    c.i, c.j
                )));
            }
            if c.j >= self.divisors.len() {
                return Err(Error::Parse(format!(
                    "crossings[{idx}].j: index {} out of range for {} divisors",
                    c.j,
                    self.divisors.len()
                )));
            }
            if !seen.insert((c.i, c.j)) {
                return Err(Error::Parse(format!(
                    "crossings[{idx}]: duplicate pair ({}, {})",
                    c.i, c.j
                )));
            }
        }
        Ok(())
    }

    fn coefficient(&self, i: usize) -> Rational {
        Rational::one() - rat(1, i64::from(self.divisors[i].ramification))
    }

    /// Number of crossing points lying on `D_i`.
    fn points_on(&self, i: usize) -> u64 {
        self.crossings
            .iter()
            .filter(|c| c.i == i || c.j == i)
            .map(|c| c.count)
            .sum()
    }
}

/// `(K_X + D)²` expanded in the intersection data.
pub fn pair_c1_squared(desc: &SncPairDescription) -> Rational {
    let mut total = desc.k_squared.clone();
    for (i, d) in desc.divisors.iter().enumerate() {
        let a = desc.coefficient(i);
        total += int(2) * &a * &d.k_dot + &a * &a * &d.self_int;
    }
    for c in &desc.crossings {
        total += int(2) * desc.coefficient(c.i) * desc.coefficient(c.j) * int(c.count as i64);
    }
    total
}

/// Orbifold Euler characteristic of the root stack:
/// `χ(X) - Σ (1 - 1/r_i) χ(D_i°) + Σ_{crossing points} (1/(r_i r_j) - 1)`,
/// with `χ(D_i°) = χ(D_i) - #{crossing points on D_i}`.
pub fn pair_orbifold_euler(desc: &SncPairDescription) -> Rational {
    let mut total = int(desc.chi_coarse);
    for (i, d) in desc.divisors.iter().enumerate() {
        let open_chi = d.chi_divisor - desc.points_on(i) as i64;
        total -= desc.coefficient(i) * int(open_chi);
    }
    for c in &desc.crossings {
        let ri = i64::from(desc.divisors[c.i].ramification);
        let rj = i64::from(desc.divisors[c.j].ramification);
        total += (rat(1, ri * rj) - Rational::one()) * int(c.count as i64);
    }
    total
}

fn euler_defect(label: AdeLabel) -> Rational {
    let data = resolution_data(label);
    int(i64::from(data.chi_exceptional)) - rat(1, data.group_order as i64)
}

/// `c₂ = 12 χ(O_X) - c₁² - Σ (χ(E_i) - 1/|G_i|)`.
pub fn codim2_c2(desc: &IsolatedPointsDescription) -> Rational {
    let defects: Rational = desc.points.iter().map(|&l| euler_defect(l)).sum();
    int(12 * desc.chi_structure_sheaf) - &desc.c1_squared - defects
}

/// Margin `3c₂ - c₁²` and its verdict; per-point data and notes left empty.
pub fn bmy_verdict(c1_squared: Rational, c2: Rational, nef_asserted: bool) -> InvariantReport {
    let margin = int(3) * &c2 - &c1_squared;
    let verdict = if !nef_asserted {
        Verdict::NotApplicable
    } else if margin.is_positive() {
        Verdict::Holds
    } else if margin.is_zero() {
        Verdict::HoldsWithEquality
    } else {
        Verdict::Fails
    };
    InvariantReport {
        c1_squared,
        c2,
        margin,
        verdict,
        per_point: vec![],
        notes: String::new(),
    }
}

/// Compares `3c₂ ≥ c₁²` with `12 χ(O_X) ≥ (4/3) c₁² + Σ (χ(E_i) - 1/|G_i|)`,
/// each evaluated on its own; true iff their truth values agree.
pub fn codim2_equivalence_check(desc: &IsolatedPointsDescription) -> bool {
    let via_c2 = int(3) * codim2_c2(desc) >= desc.c1_squared;
    let defects: Rational = desc.points.iter().map(|&l| euler_defect(l)).sum();
    let direct = int(12 * desc.chi_structure_sheaf) >= rat(4, 3) * &desc.c1_squared + defects;
    via_c2 == direct
}

pub fn snc_report(desc: &SncPairDescription) -> Result<InvariantReport> {
    desc.validate()?;
    let mut report = bmy_verdict(
        pair_c1_squared(desc),
        pair_orbifold_euler(desc),
        desc.canonical_nef_asserted,
    );
    report.notes = "c1^2 = (K_X + D)^2; c2 = orbifold Euler characteristic of the root stack \
                    (Gauss-Bonnet)"
        .into();
    if !desc.canonical_nef_asserted {
        report.notes.push_str("; K not asserted nef");
    }
    Ok(report)
}

pub fn isolated_report(desc: &IsolatedPointsDescription) -> InvariantReport {
    let mut report = bmy_verdict(
        desc.c1_squared.clone(),
        codim2_c2(desc),
        desc.canonical_nef_asserted,
    );
    report.per_point = desc
        .points
        .iter()
        .map(|&label| PointContribution {
            label,
            contribution: closed_form_contribution(label),
        })
        .collect();
    report.notes = "c2 = 12 chi(O_X) - c1^2 - sum(chi(E_i) - 1/|G_i|)".into();
    if !desc.canonical_nef_asserted {
        report.notes.push_str("; K not asserted nef");
    }
    report
}

/// Invariants of a gerbe of order `gerbe_order` over the described stack:
/// every global number divides by the order, the verdict is unchanged.
pub fn gerbe_scale(report: &InvariantReport, gerbe_order: u64) -> Result<InvariantReport> {
    if gerbe_order == 0 {
        return Err(Error::InvalidArgument("gerbe order must be >= 1".into()));
    }
    if gerbe_order == 1 {
        return Ok(report.clone());
    }
    let k = int(gerbe_order as i64);
    let mut out = report.clone();
    out.c1_squared = &report.c1_squared / &k;
    out.c2 = &report.c2 / &k;
    out.margin = &report.margin / &k;
    if !out.notes.is_empty() {
        out.notes.push_str("; ");
    }
    out.notes
        .push_str(&format!("scaled by 1/{gerbe_order} for a gerbe of order {gerbe_order}"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn triangle(nef: bool) -> SncPairDescription {
        let line = SncDivisor {
            ramification: 2,
            chi_divisor: 2,
            k_dot: int(-3),
            self_int: int(1),
        };
        SncPairDescription {
            chi_coarse: 3,
            k_squared: int(9),
            divisors: vec![line.clone(), line.clone(), line],
            crossings: vec![
                SncCrossing { i: 0, j: 1, count: 1 },
                SncCrossing { i: 0, j: 2, count: 1 },
                SncCrossing { i: 1, j: 2, count: 1 },
            ],
            canonical_nef_asserted: nef,
        }
    }

    fn isolated(chi: i64, c1: Rational, points: &[&str]) -> IsolatedPointsDescription {
        IsolatedPointsDescription {
            chi_structure_sheaf: chi,
            c1_squared: c1,
            points: points.iter().map(|p| p.parse().unwrap()).collect(),
            canonical_nef_asserted: true,
        }
    }

    #[test]
    fn no_divisors_degenerates() {
        let d = SncPairDescription {
            chi_coarse: 7,
            k_squared: rat(5, 1),
            divisors: vec![],
            crossings: vec![],
            canonical_nef_asserted: true,
        };
        assert_eq!(pair_c1_squared(&d), int(5));
        assert_eq!(pair_orbifold_euler(&d), int(7));
    }

    #[test]
    fn triangle_values() {
        let d = triangle(false);
        assert_eq!(pair_c1_squared(&d), rat(9, 4));
        assert_eq!(pair_orbifold_euler(&d), rat(3, 4));
        let r = snc_report(&d).unwrap();
        assert_eq!(r.margin, Rational::zero());
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn single_divisor() {
        let d = SncPairDescription {
            chi_coarse: 4,
            k_squared: int(8),
            divisors: vec![SncDivisor {
                ramification: 3,
                chi_divisor: 2,
                k_dot: int(2),
                self_int: int(4),
            }],
            crossings: vec![],
            canonical_nef_asserted: true,
        };
        assert_eq!(pair_c1_squared(&d), rat(112, 9));
        assert_eq!(pair_orbifold_euler(&d), int(4) - rat(2, 3) * int(2));
    }

    #[test]
    fn validation_errors() {
        let mut d = triangle(true);
        d.divisors[1].ramification = 1;
        let e = d.validate().unwrap_err().to_string();
        assert!(e.contains("divisors[1].ramification") && e.contains("ramification must be ≥ 2"));
        let mut d = triangle(true);
        d.crossings[0] = SncCrossing { i: 1, j: 1, count: 1 };
        assert!(d.validate().is_err());
        let mut d = triangle(true);
        d.crossings[2] = SncCrossing { i: 1, j: 3, count: 1 };
        assert!(d.validate().is_err());
        let mut d = triangle(true);
        d.crossings[2] = SncCrossing { i: 0, j: 1, count: 2 };
        assert!(d.validate().unwrap_err().to_string().contains("duplicate"));
    }

    #[test]
    fn codim2_examples() {
        assert_eq!(codim2_c2(&isolated(2, int(0), &[])), int(24));
        let kummer = isolated(2, int(0), &["A1"; 16]);
        assert_eq!(codim2_c2(&kummer), int(0));
        assert_eq!(codim2_c2(&isolated(1, int(1), &["E6"])), rat(97, 24));
        let r = isolated_report(&kummer);
        assert_eq!(r.verdict, Verdict::HoldsWithEquality);
        assert_eq!(r.per_point.len(), 16);
        assert_eq!(r.per_point[0].contribution, rat(1, 8));
    }

    #[test]
    fn equivalence_examples() {
        assert!(codim2_equivalence_check(&isolated(2, int(0), &["A1"; 16])));
        let d = isolated(1, int(9), &["A1"]);
        assert_eq!(codim2_c2(&d), rat(3, 2));
        assert!(codim2_equivalence_check(&d));
        assert_eq!(isolated_report(&d).verdict, Verdict::Fails);
    }

    #[test]
    fn verdict_examples() {
        let r = bmy_verdict(int(0), int(0), true);
        assert_eq!((r.margin.clone(), r.verdict), (int(0), Verdict::HoldsWithEquality));
        let r = bmy_verdict(rat(9, 4), rat(3, 4), false);
        assert_eq!((r.margin.clone(), r.verdict), (int(0), Verdict::NotApplicable));
        let r = bmy_verdict(int(2), int(1), true);
        assert_eq!((r.margin.clone(), r.verdict), (int(1), Verdict::Holds));
        assert_eq!(bmy_verdict(int(4), int(1), true).verdict, Verdict::Fails);
    }

    #[test]
    fn gerbe_examples() {
        let r = bmy_verdict(int(2), int(1), true);
        assert_eq!(gerbe_scale(&r, 1).unwrap(), r);
        let s = gerbe_scale(&r, 2).unwrap();
        assert_eq!((s.margin.clone(), s.verdict), (rat(1, 2), Verdict::Holds));
        let z = gerbe_scale(&bmy_verdict(int(0), int(0), true), 5).unwrap();
        assert_eq!((z.margin, z.verdict), (int(0), Verdict::HoldsWithEquality));
        assert!(gerbe_scale(&r, 0).is_err());
    }
}
