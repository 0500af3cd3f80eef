use num_rational::BigRational;
use proptest::prelude::*;
use toroidal_core::coeff::{rat, CycNum};
use toroidal_core::Error;

fn cyc(order: u8) -> impl Strategy<Value = CycNum> {
    (-20i64..=20, 1i64..=7, -20i64..=20, 1i64..=7)
        .prop_map(move |(a, da, b, db)| CycNum::from_coords(rat(a, da), rat(b, db), order))
}

fn triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    (1u8..=3).prop_flat_map(|r| (cyc(r), cyc(r), cyc(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms((x, y, z) in triple()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &CycNum::one(x.order()), x.clone());
    }

    #[test]
    fn inverses((x, _y, _z) in triple()) {
        if x.is_zero() {
            prop_assert_eq!(x.inverse(), Err(Error::DivisionByZero));
        } else {
            let inv = x.inverse().unwrap();
            prop_assert!((&x * &inv).is_one());
        }
    }

    #[test]
    fn conjugation_is_a_ring_map((x, y, _z) in triple()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
    }

    #[test]
    fn powers_of_omega(r in 1u8..=3, k in -12i64..=12, l in -12i64..=12) {
        let w = CycNum::omega(r);
        prop_assert_eq!(w.pow(k).unwrap(), CycNum::omega_pow(k, r));
        prop_assert_eq!(
            &CycNum::omega_pow(k, r) * &CycNum::omega_pow(l, r),
            CycNum::omega_pow(k + l, r)
        );
        prop_assert!(CycNum::omega_pow(r as i64, r).is_one());
    }
}

#[test]
fn omega_squared_for_order_three() {
    let w = CycNum::omega(3);
    let want = CycNum::from_coords(rat(-1, 1), rat(-1, 1), 3);
    assert_eq!(&w * &w, want);
}

#[test]
fn order_two_omega_is_minus_one() {
    assert_eq!(CycNum::omega(2), CycNum::from_int(-1, 2));
    assert_eq!(
        CycNum::from_rational(BigRational::new(3.into(), 6.into()), 2).to_string(),
        "1/2"
    );
}

#[test]
fn mixed_orders_are_rejected() {
    let a = CycNum::one(2);
    let b = CycNum::omega(3);
    assert_eq!(a.try_add(&b), Err(Error::OrderMismatch(2, 3)));
    assert!(CycNum::zero(3).pow(-1).is_err());
}
