use std::sync::Arc;

use kklab::power::{power, PowerRingElement};
use kklab::rings::Ring;
use kklab::simplicial::{boundary, circle, iterated_subdivision, standard_simplex, FiniteSimplicialSet};
use kklab::suites::{run, Suite, SuiteConfig};
use num_bigint::BigInt;
use proptest::prelude::*;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn complex(i: usize) -> FiniteSimplicialSet {
    match i {
        0 => standard_simplex(1),
        1 => standard_simplex(2),
        2 => boundary(2),
        _ => circle(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn subdivision_is_a_valid_simplicial_set(n in 1usize..=3, m in 0usize..=2) {
        prop_assume!(n < 3 || m < 2);
        let (sd, h) = iterated_subdivision(&Arc::new(standard_simplex(n)), m).unwrap();
        prop_assert!(sd.validate().is_ok());
        prop_assert!(h.validate().is_ok());
        prop_assert_eq!(sd.count(n), factorial(n + 1).pow(m as u32));
    }

    #[test]
    fn products_of_power_ring_elements_stay_inside(k in 0usize..4, d in 1u32..=4, cs in prop::collection::vec(-3i64..=3, 12)) {
        let k = Arc::new(complex(k));
        let (ring, _) = power(&k, 2 * d);
        let (low, _) = power(&k, d);
        let basis = low.basis();
        let combo = |off: usize| {
            basis.iter().enumerate().fold(PowerRingElement::zero(&k), |acc, (i, b)| {
                acc.add_ref(&b.scale(&BigInt::from(cs[(i + off) % cs.len()])))
            })
        };
        let (x, y) = (combo(0), combo(5));
        let xy = x.mul_ref(&y);
        prop_assert!(xy.is_compatible(&k));
        prop_assert!(ring.contains(&xy));
        prop_assert!(xy.degree().map_or(true, |e| e <= 2 * d));
        prop_assert!(ring.contains(&PowerRingElement::constant(&k, 1)));
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn reports_depend_only_on_flags(seed in 0u64..1000) {
        let cfg = SuiteConfig { seed, window: 16, ..Default::default() };
        let a = run(Suite::Gamma, &cfg).to_json();
        let b = run(Suite::Gamma, &cfg).to_json();
        prop_assert_eq!(a, b);
    }
}
