use affinv_core::bruhat_inv::{
    bruhat_leq_inv, bruhat_leq_inv_by_atoms, covering_property_at, covers_up_inv, pattern, tau,
};
use affinv_core::AffineInvolution;
use proptest::prelude::*;

fn involution() -> impl Strategy<Value = AffineInvolution> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(1..=n as i64, 0..=6)
            .prop_map(move |word| word.iter().fold(AffineInvolution::identity(n), |z, &i| z.demazure_conjugate(i)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covers_raise_hat_length_by_one(y in involution()) {
        for c in covers_up_inv(&y) {
            prop_assert_eq!(c.z.hat_length(), y.hat_length() + 1);
            prop_assert!(bruhat_leq_inv(&y, &c.z).unwrap());
            prop_assert!(bruhat_leq_inv_by_atoms(&y, &c.z).unwrap());
            prop_assert_eq!(tau(&y, c.i, c.j).unwrap(), c.z.clone());
            prop_assert_eq!(pattern(&y, c.i, c.j).unwrap(), c.pattern.clone());
        }
    }

    #[test]
    fn two_descriptions_of_the_order_agree(y in involution(), z in involution()) {
        if y.n() == z.n() {
            prop_assert_eq!(bruhat_leq_inv(&y, &z).unwrap(), bruhat_leq_inv_by_atoms(&y, &z).unwrap());
        }
    }

    #[test]
    fn tau_is_an_involution_and_nontrivial_moves_go_up(y in involution(), i in 1i64..=4, d in 1i64..=12) {
        let n = y.n() as i64;
        let i = (i - 1) % n + 1;
        let j = i + d;
        prop_assume!(d % n != 0);
        let z = tau(&y, i, j).unwrap();
        prop_assert!(z.perm().is_involution());
        if z != y {
            prop_assert!(bruhat_leq_inv(&y, &z).unwrap());
        }
    }

    #[test]
    fn covering_property_holds(y in involution()) {
        let (_, violations) = covering_property_at(&y).unwrap();
        prop_assert!(violations.is_empty(), "{:?}", violations);
    }
}
