//! Twisted-sector Todd contributions of du Val points.
//!
//! For a point `[C^2/G]` with `G ⊂ SU(2)`, a nontrivial `g` has eigenvalues
//! `ξ, ξ^{-1}`, and `2 - ξ - ξ^{-1} = 2 - tr g`. The contribution is
//!
//! ```text
//! Σ_{(g) ≠ (1)} 1/|C(g)| · 1/(2 - tr g)  =  (χ(E) - 1/|G|) / 12
//! ```
//!
//! where `E` is the exceptional divisor of the minimal resolution. This module
//! evaluates the left side over conjugacy classes, again over individual
//! elements, and the right side from the resolution catalog.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::ade_data::{resolution_data, AdeLabel};
use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, int, rat, CycloScalar, FieldScalar, Rational};
use crate::quaternion_groups::{build_ade_group, FiniteSubgroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTerm {
    pub representative: String,
    pub centralizer_order: usize,
    pub trace: String,
    /// `1/|C(g)| · 1/(2 - tr g)`, exact, in the field of the trace.
    pub term: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContributionReport {
    pub label: AdeLabel,
    pub class_sum: Rational,
    pub element_sum: Option<Rational>,
    pub closed_form: Rational,
    pub per_class_terms: Vec<ClassTerm>,
}

/// `1/(2 - t)` with a per-call cache keyed on the trace.
struct InverseCache(HashMap<FieldScalar, FieldScalar>);

impl InverseCache {
    fn new() -> Self {
        InverseCache(HashMap::new())
    }

    fn get(&mut self, trace: &FieldScalar) -> Result<FieldScalar> {
        if let Some(v) = self.0.get(trace) {
            return Ok(v.clone());
        }
        let v = trace.two_minus().inv()?;
        self.0.insert(trace.clone(), v.clone());
        Ok(v)
    }
}

fn collapse(total: FieldScalar) -> Result<Rational> {
    total
        .to_rational()
        .ok_or_else(|| Error::NonRationalTotal(total.canonical_string()))
}

fn class_terms(group: &FiniteSubgroup) -> Result<(Rational, Vec<ClassTerm>)> {
    let mut cache = InverseCache::new();
    let mut total = FieldScalar::Rational(Rational::zero());
    let mut terms = Vec::new();
    for class in &group.classes {
        if class.representative.is_identity() {
            continue;
        }
        if class.trace.is_two() {
            return Err(Error::TraceTwoNonIdentity(class.representative.to_string()));
        }
        let weight = rat(1, class.centralizer_order as i64);
        let term = cache.get(&class.trace)?.scale(&weight);
        total = total.checked_add(&term)?;
        terms.push(ClassTerm {
            representative: class.representative.to_string(),
            centralizer_order: class.centralizer_order,
            trace: class.trace.canonical_string(),
            term: match term.to_rational() {
                Some(r) => format_rational(&r),
                None => term.canonical_string(),
            },
        });
    }
    Ok((collapse(total)?, terms))
}

/// Sum over nontrivial conjugacy classes of `1/|C(g)| · 1/(2 - tr g)`.
pub fn class_sum_contribution(group: &FiniteSubgroup) -> Result<Rational> {
    class_terms(group).map(|(total, _)| total)
}

/// `1/|G| · Σ_{g ≠ 1} 1/(2 - tr g)` over the full element list.
pub fn element_sum_contribution(group: &FiniteSubgroup) -> Result<Rational> {
    let mut cache = InverseCache::new();
    let mut total = FieldScalar::Rational(Rational::zero());
    for g in &group.elements {
        if g.is_identity() {
            continue;
        }
        let t = g.trace();
        if t.is_two() {
            return Err(Error::TraceTwoNonIdentity(g.to_string()));
        }
        total = total.checked_add(&cache.get(&t)?)?;
    }
    let total = collapse(total)?;
    Ok(total / int(group.elements.len() as i64))
}

/// `(χ(E) - 1/|G|) / 12` from the resolution catalog.
pub fn closed_form_contribution(label: AdeLabel) -> Rational {
    let data = resolution_data(label);
    (int(i64::from(data.chi_exceptional)) - rat(1, data.group_order as i64)) / int(12)
}

fn mismatch(what: String, lhs: &Rational, rhs: &Rational) -> Error {
    Error::IdentityFailure {
        what,
        lhs: format_rational(lhs),
        rhs: format_rational(rhs),
    }
}

/// Builds the group, evaluates the class sum (and the element sum when
/// `with_element_sum`), and checks every route against the closed form.
pub fn contribution_report(label: AdeLabel, with_element_sum: bool) -> Result<ContributionReport> {
    let group = build_ade_group(label)?;
    contribution_report_for(&group, with_element_sum)
}

pub fn contribution_report_for(
    group: &FiniteSubgroup,
    with_element_sum: bool,
) -> Result<ContributionReport> {
    let label = group.label;
    let (class_sum, per_class_terms) = class_terms(group)?;
    let closed_form = closed_form_contribution(label);
    if class_sum != closed_form {
        return Err(mismatch(format!("class sum of {label}"), &class_sum, &closed_form));
    }
    let element_sum = if with_element_sum {
        let e = element_sum_contribution(group)?;
        if e != closed_form {
            return Err(mismatch(format!("element sum of {label}"), &e, &closed_form));
        }
        Some(e)
    } else {
        None
    };
    Ok(ContributionReport {
        label,
        class_sum,
        element_sum,
        closed_form,
        per_class_terms,
    })
}

fn require_n(n: u32) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidArgument(format!("n must be >= 2, got {n}")))
    } else {
        Ok(())
    }
}

/// `Σ_{k=1}^{count} 1/(2 - ζ_m^k - ζ_m^{-k})` in `Q(ζ_m)`, collapsed to a rational.
fn symmetric_inverse_sum(m: u32, count: u32) -> Result<Rational> {
    let two = CycloScalar::from_rational(m, int(2));
    let mut total = CycloScalar::zero(m);
    for k in 1..=i64::from(count) {
        let denom = two.checked_sub(&CycloScalar::zeta_pow_sym(m, k))?;
        total = total.checked_add(&denom.cyclo_invert()?)?;
    }
    total
        .cyclo_to_rational()
        .ok_or_else(|| Error::NonRationalTotal(total.canonical_string()))
}

/// Evaluates `(1/n) Σ_{l=1}^{n-1} 1/(2 - ζ_n^l - ζ_n^{-l})` in `Q(ζ_n)` and
/// checks it against `(n² - 1)/(12n)`.
pub fn verify_type_a_identity(n: u32) -> Result<Rational> {
    require_n(n)?;
    let value = symmetric_inverse_sum(n, n - 1)? / int(i64::from(n));
    let n = i64::from(n);
    let closed = rat(n * n - 1, 12 * n);
    if value != closed {
        return Err(mismatch(format!("type A identity at n={n}"), &value, &closed));
    }
    Ok(value)
}

/// Evaluates `Σ_{k=1}^{n-1} 1/(2 - ζ_{2n}^k - ζ_{2n}^{-k})` in `Q(ζ_{2n})` and
/// checks it against `(n² - 1)/6`.
pub fn verify_type_d_half_angle_identity(n: u32) -> Result<Rational> {
    require_n(n)?;
    let value = symmetric_inverse_sum(2 * n, n - 1)?;
    let n = i64::from(n);
    let closed = rat(n * n - 1, 6);
    if value != closed {
        return Err(mismatch(format!("half-angle identity at n={n}"), &value, &closed));
    }
    Ok(value)
}

/// `(1/(2n)) (n² - 1)/6 + 1/(16n) + 1/8 + 1/8`: the `a^l` classes, the central
/// `a^n`, and the two classes of `x`-words. Checked against the closed form for `D_{n+2}`.
pub fn assemble_type_d_contribution(n: u32) -> Result<Rational> {
    require_n(n)?;
    let label = AdeLabel::binary_dihedral(n)?;
    let m = i64::from(n);
    let value = rat(1, 2 * m) * rat(m * m - 1, 6) + rat(1, 16 * m) + rat(1, 8) + rat(1, 8);
    let closed = closed_form_contribution(label);
    if value != closed {
        return Err(mismatch(format!("assembled {label} sum"), &value, &closed));
    }
    Ok(value)
}

impl ContributionReport {
    /// True when every computed route equals the closed form.
    pub fn all_agree(&self) -> bool {
        self.class_sum == self.closed_form
            && self.element_sum.as_ref().is_none_or(|e| *e == self.closed_form)
    }

    /// Twelve times the contribution, `χ(E) - 1/|G|`.
    pub fn local_euler_defect(&self) -> Rational {
        &self.class_sum * int(12)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> AdeLabel {
        s.parse().unwrap()
    }

    fn group(s: &str) -> FiniteSubgroup {
        build_ade_group(label(s)).unwrap()
    }

    #[test]
    fn class_sum_examples() {
        assert_eq!(class_sum_contribution(&group("E6")).unwrap(), rat(167, 288));
        assert_eq!(class_sum_contribution(&group("A1")).unwrap(), rat(1, 8));
        assert_eq!(class_sum_contribution(&group("D4")).unwrap(), rat(13, 32));
        assert_eq!(class_sum_contribution(&group("E7")).unwrap(), rat(383, 576));
        assert_eq!(class_sum_contribution(&group("E8")).unwrap(), rat(1079, 1440));
    }

    #[test]
    fn element_sum_examples() {
        assert_eq!(element_sum_contribution(&group("A1")).unwrap(), rat(1, 8));
        assert_eq!(element_sum_contribution(&group("E6")).unwrap(), rat(167, 288));
        // Dic_3 is D5
        assert_eq!(element_sum_contribution(&group("D5")).unwrap(), rat(71, 144));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_contribution(label("A0")), Rational::zero());
        for n in 2..30i64 {
            let a = AdeLabel::cyclic(n as u32).unwrap();
            assert_eq!(closed_form_contribution(a), rat(n * n - 1, 12 * n));
            let d = AdeLabel::binary_dihedral(n as u32).unwrap();
            assert_eq!(
                closed_form_contribution(d),
                (int(n + 3) - rat(1, 4 * n)) / int(12)
            );
        }
    }

    #[test]
    fn e6_terms_match_table() {
        let report = contribution_report(label("E6"), true).unwrap();
        let mut weights: Vec<_> = report
            .per_class_terms
            .iter()
            .map(|t| (t.centralizer_order, t.trace.clone()))
            .collect();
        weights.sort();
        assert_eq!(
            weights,
            vec![
                (4, "0".to_string()),
                (6, "-1".to_string()),
                (6, "-1".to_string()),
                (6, "1".to_string()),
                (6, "1".to_string()),
                (24, "-2".to_string()),
            ]
        );
        assert!(report.all_agree());
        assert_eq!(report.local_euler_defect(), int(7) - rat(1, 24));
    }

    #[test]
    fn type_a_identity_examples() {
        assert_eq!(verify_type_a_identity(2).unwrap(), rat(1, 8));
        assert_eq!(verify_type_a_identity(3).unwrap(), rat(2, 9));
        assert_eq!(verify_type_a_identity(6).unwrap(), rat(35, 72));
        assert!(matches!(verify_type_a_identity(1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn half_angle_examples() {
        assert_eq!(verify_type_d_half_angle_identity(2).unwrap(), rat(1, 2));
        assert_eq!(verify_type_d_half_angle_identity(3).unwrap(), rat(4, 3));
        assert_eq!(verify_type_d_half_angle_identity(5).unwrap(), int(4));
    }

    #[test]
    fn assembled_type_d_examples() {
        assert_eq!(assemble_type_d_contribution(2).unwrap(), rat(13, 32));
        assert_eq!(assemble_type_d_contribution(3).unwrap(), rat(71, 144));
        assert_eq!(assemble_type_d_contribution(10).unwrap(), rat(173, 160));
    }

    #[test]
    fn trivial_group_contributes_zero() {
        let g = group("A0");
        assert_eq!(class_sum_contribution(&g).unwrap(), Rational::zero());
        assert_eq!(element_sum_contribution(&g).unwrap(), Rational::zero());
    }

    #[test]
    fn trace_two_class_rejected() {
        use crate::quaternion_groups::{GroupElement, Quaternion};
        // a bogus "group" whose second element has trace 2 but is not the identity
        let mut g = group("A1");
        let fake = Quaternion::new(int(1), int(0), int(0), int(0));
        g.classes[1].trace = GroupElement::Rational(fake).trace();
        assert!(matches!(
            class_sum_contribution(&g),
            Err(Error::TraceTwoNonIdentity(_))
        ));
    }

    #[test]
    fn strictly_increasing_in_a() {
        let vals: Vec<_> = (1..40).map(|n| closed_form_contribution(AdeLabel::cyclic(n).unwrap())).collect();
        assert!(vals.windows(2).all(|w| w[0] < w[1]));
    }
}
