#![allow(dead_code)]

use duval_bmy::exact_arith::{int, rat, Rational};
use duval_bmy::{AdeLabel, FieldScalar, IsolatedPointsDescription};
use rand::Rng;

/// Numeric value of an exact real scalar; cyclotomic traces are real, so only
/// the cosine part of each power of zeta is summed.
pub fn to_f64(s: &FieldScalar) -> f64 {
    use num_traits::ToPrimitive;
    match s {
        FieldScalar::Rational(r) => r.to_f64().unwrap(),
        FieldScalar::Sqrt2(q) => q.to_f64(),
        FieldScalar::Sqrt5(q) => q.to_f64(),
        FieldScalar::Cyclo(c) => {
            let m = c.conductor() as f64;
            c.coeffs()
                .iter()
                .enumerate()
                .map(|(k, a)| a.to_f64().unwrap() * (std::f64::consts::TAU * k as f64 / m).cos())
                .sum()
        }
    }
}

pub fn rational_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap()
}

pub fn random_label<R: Rng>(rng: &mut R, max_a: u32, max_d: u32) -> AdeLabel {
    match rng.gen_range(0..10) {
        0..=4 => AdeLabel::cyclic(rng.gen_range(1..=max_a)).unwrap(),
        5..=8 => AdeLabel::binary_dihedral(rng.gen_range(2..=max_d)).unwrap(),
        _ => AdeLabel::e(rng.gen_range(6..=8)).unwrap(),
    }
}

fn euler_defect(l: AdeLabel) -> Rational {
    let d = duval_bmy::ade_data::resolution_data(l);
    int(d.chi_exceptional as i64) - rat(1, d.group_order as i64)
}

/// Random isolated-points description; about one in five is placed exactly on
/// the boundary `3 c2 = c1^2`.
pub fn random_isolated<R: Rng>(rng: &mut R) -> IsolatedPointsDescription {
    let chi = rng.gen_range(-3..=20i64);
    let count = rng.gen_range(0..=6);
    let points: Vec<AdeLabel> = (0..count).map(|_| random_label(rng, 30, 20)).collect();
    let c1_squared = if rng.gen_ratio(1, 5) {
        let s: Rational = points.iter().map(|&l| euler_defect(l)).sum();
        (int(36 * chi) - int(3) * s) / int(4)
    } else {
        rat(rng.gen_range(-60..=400), rng.gen_range(1..=12))
    };
    IsolatedPointsDescription {
        chi_structure_sheaf: chi,
        c1_squared,
        points,
        canonical_nef_asserted: rng.gen_bool(0.8),
    }
}
