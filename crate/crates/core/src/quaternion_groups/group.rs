use std::collections::{HashMap, VecDeque};

use super::element::GroupElement;
use super::quaternion::Quaternion;
use super::word::{Word, WordFamily};
use crate::ade_data::{AdeKind, AdeLabel};
use crate::error::{Error, Result};
use crate::exact_arith::{rat, FieldScalar, Quad, Rational, Ring};

/// Default cap on closure size; every ADE group used here is far below it.
pub const DEFAULT_BOUND: usize = 10_000;

/// Smallest multiplication-closed set containing `generators` and the identity,
/// in breadth-first discovery order.
pub fn generate_group(generators: &[GroupElement], bound: usize) -> Result<Vec<GroupElement>> {
    let first = generators
        .first()
        .ok_or_else(|| Error::MixedElements("no generators given".into()))?;
    let identity = first.identity_like();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<GroupElement, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let p = elements[i].compose(g)?;
            if index.contains_key(&p) {
                continue;
            }
            if elements.len() >= bound {
                return Err(Error::BoundExceeded { bound });
            }
            index.insert(p.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(p);
        }
    }
    Ok(elements)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub size: usize,
    pub centralizer_order: usize,
    pub trace: FieldScalar,
    /// All members, in the group's element order.
    pub members: Vec<GroupElement>,
}

/// Partition into conjugation orbits by brute force over all conjugators.
///
/// Classes are ordered identity first, then by `(size, trace, representative)`
/// using canonical text forms, so the result is reproducible.
pub fn conjugacy_classes(elements: &[GroupElement]) -> Result<Vec<ConjugacyClass>> {
    let order = elements.len();
    let index: HashMap<&GroupElement, usize> =
        elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let inverses: Vec<GroupElement> = elements.iter().map(GroupElement::inverse).collect();
    let mut class_of = vec![usize::MAX; order];
    let mut classes = Vec::new();
    for (i, g) in elements.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![i];
        class_of[i] = id;
        for (h, h_inv) in elements.iter().zip(&inverses) {
            let c = h.compose(g)?.compose(h_inv)?;
            let j = *index.get(&c).ok_or_else(|| {
                Error::MixedElements(format!("element set not closed under conjugation: {c}"))
            })?;
            if class_of[j] == usize::MAX {
                class_of[j] = id;
                members.push(j);
            }
        }
        members.sort_unstable();
        let size = members.len();
        classes.push(ConjugacyClass {
            representative: g.clone(),
            size,
            centralizer_order: order / size,
            trace: g.trace(),
            members: members.into_iter().map(|m| elements[m].clone()).collect(),
        });
    }
    classes.sort_by_cached_key(|c| {
        (
            !c.representative.is_identity(),
            c.size,
            c.trace.canonical_string(),
            c.representative.canonical_key(),
        )
    });
    Ok(classes)
}

/// An ADE-labelled finite subgroup of SU(2) with its class data.
#[derive(Debug, Clone)]
pub struct FiniteSubgroup {
    pub label: AdeLabel,
    pub order: usize,
    pub elements: Vec<GroupElement>,
    pub classes: Vec<ConjugacyClass>,
}

impl FiniteSubgroup {
    pub fn from_elements(label: AdeLabel, elements: Vec<GroupElement>) -> Result<Self> {
        let classes = conjugacy_classes(&elements)?;
        Ok(FiniteSubgroup {
            label,
            order: elements.len(),
            elements,
            classes,
        })
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn centralizer_orders(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.centralizer_order).collect()
    }
}

pub fn trace(g: &GroupElement) -> FieldScalar {
    g.trace()
}

fn half<T: Ring>(x: i64, y: i64, z: i64, w: i64) -> Quaternion<T> {
    Quaternion::new(
        T::from_ratio(x, 2),
        T::from_ratio(y, 2),
        T::from_ratio(z, 2),
        T::from_ratio(w, 2),
    )
}

/// The 24 unit quaternions `(±1±i±j±k)/2, ±i, ±j, ±k, ±1` of the binary
/// tetrahedral group, listed directly.
pub fn binary_tetrahedral_list() -> Vec<Quaternion<Rational>> {
    let mut out = Vec::with_capacity(24);
    for s in 0..16 {
        let sign = |bit: i64| if s >> bit & 1 == 1 { -1 } else { 1 };
        out.push(half(sign(0), sign(1), sign(2), sign(3)));
    }
    for u in [
        Quaternion::one(),
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
    ] {
        out.push(u.clone());
        out.push(-u);
    }
    out
}

/// `i` and `(1+i+j+k)/2`, which generate 2T.
pub fn binary_tetrahedral_generators<T: Ring>() -> Vec<Quaternion<T>> {
    vec![Quaternion::i(), half(1, 1, 1, 1)]
}

/// 2T's generators plus `(1+i)/sqrt2`.
pub fn binary_octahedral_generators() -> Vec<Quaternion<Quad<2>>> {
    let inv_sqrt2 = Quad::<2>::new(rat(0, 1), rat(1, 2));
    let mut gens = binary_tetrahedral_generators();
    gens.push(Quaternion::new(
        inv_sqrt2.clone(),
        inv_sqrt2,
        Quad::from_ratio(0, 1),
        Quad::from_ratio(0, 1),
    ));
    gens
}

/// `(phi^{-1} + i + phi j)/2` and `(1+i+j+k)/2`, with `phi = (1+sqrt5)/2`.
pub fn binary_icosahedral_generators() -> Vec<Quaternion<Quad<5>>> {
    // phi/2 = (1+sqrt5)/4, phi^{-1}/2 = (-1+sqrt5)/4
    let half_phi = Quad::<5>::new(rat(1, 4), rat(1, 4));
    let half_phi_inv = Quad::<5>::new(rat(-1, 4), rat(1, 4));
    vec![
        Quaternion::new(half_phi_inv, Quad::from_ratio(1, 2), half_phi, Quad::from_ratio(0, 1)),
        half(1, 1, 1, 1),
    ]
}

/// Generators of the group attached to `label`.
pub fn ade_generators(label: AdeLabel) -> Vec<GroupElement> {
    let n = label.parameter();
    match label.kind() {
        AdeKind::A => vec![GroupElement::Word(Word::power(WordFamily::Cyclic(n), 1))],
        AdeKind::D => {
            let fam = WordFamily::BinaryDihedral(n);
            vec![
                GroupElement::Word(Word::power(fam, 1)),
                GroupElement::Word(Word::x_times_power(fam, 0).expect("dihedral family")),
            ]
        }
        AdeKind::E => match n {
            6 => binary_tetrahedral_generators()
                .into_iter()
                .map(GroupElement::Rational)
                .collect(),
            7 => binary_octahedral_generators()
                .into_iter()
                .map(GroupElement::Sqrt2)
                .collect(),
            _ => binary_icosahedral_generators()
                .into_iter()
                .map(GroupElement::Sqrt5)
                .collect(),
        },
    }
}

/// Builds the finite subgroup of SU(2) for `label` by closure and classifies it.
pub fn build_ade_group(label: AdeLabel) -> Result<FiniteSubgroup> {
    let elements = generate_group(&ade_generators(label), DEFAULT_BOUND)?;
    let expected = label.group_order();
    if elements.len() as u64 != expected {
        return Err(Error::IdentityFailure {
            what: format!("order of {label}"),
            lhs: elements.len().to_string(),
            rhs: expected.to_string(),
        });
    }
    FiniteSubgroup::from_elements(label, elements)
}
