use duval_bmy::exact_arith::{
    format_rational, parse_rational, rat, CycloScalar, Quad, Rational,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn quad<const D: i64>() -> impl Strategy<Value = Quad<D>> {
    (small_rat(), small_rat()).prop_map(|(a, b)| Quad::new(a, b))
}

fn cyclo(m: u32) -> impl Strategy<Value = CycloScalar> {
    let d = duval_bmy::exact_arith::totient(m) as usize;
    proptest::collection::vec(small_rat(), d).prop_map(move |c| CycloScalar::from_coeffs(m, c))
}

fn cyclo_triple() -> impl Strategy<Value = (CycloScalar, CycloScalar, CycloScalar)> {
    (1u32..=60).prop_flat_map(|m| (cyclo(m), cyclo(m), cyclo(m)))
}

proptest! {
    #[test]
    fn rational_text_round_trip(r in small_rat()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn quad2_field_axioms(a in quad::<2>(), b in quad::<2>(), c in quad::<2>()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
        if !a.is_zero() {
            prop_assert!((a.clone() * a.quad_invert().unwrap()).is_one());
        }
    }

    #[test]
    fn quad5_field_axioms(a in quad::<5>(), b in quad::<5>(), c in quad::<5>()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
        if !a.is_zero() {
            prop_assert!((a.clone() * a.quad_invert().unwrap()).is_one());
        }
    }

    #[test]
    fn quad_order_matches_floats(a in quad::<2>(), b in quad::<2>()) {
        let (x, y) = (a.to_f64(), b.to_f64());
        if (x - y).abs() > 1e-9 {
            prop_assert_eq!(a < b, x < y);
        }
    }

    #[test]
    fn cyclo_field_axioms((a, b, c) in cyclo_triple()) {
        let ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let rhs = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // canonical form: (a + b) - b is literally a
        prop_assert_eq!(a.checked_add(&b).unwrap().checked_sub(&b).unwrap(), a);
    }

    #[test]
    fn cyclo_inverse((a, _, _) in cyclo_triple()) {
        prop_assume!(!a.is_zero());
        let inv = a.cyclo_invert().unwrap();
        prop_assert!(inv.checked_mul(&a).unwrap().is_one());
    }

    #[test]
    fn rational_field_axioms(a in small_rat(), b in small_rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * a.recip()).is_one());
        }
        prop_assert_eq!(format_rational(&(&a - &a)), "0");
    }
}

#[test]
fn inverse_of_twisted_sector_denominators_up_to_200() {
    // 2 - ζ - ζ^{-1} for the hardest prime conductors
    for m in [191u32, 193, 197, 199] {
        for l in [1i64, 2, m as i64 / 2] {
            let z = CycloScalar::from_rational(m, rat(2, 1))
                .checked_sub(&CycloScalar::zeta_pow_sym(m, l))
                .unwrap();
            let inv = z.cyclo_invert().unwrap();
            assert!(inv.checked_mul(&z).unwrap().is_one(), "m={m} l={l}");
        }
    }
}
