use std::collections::BTreeMap;

use canring_core::algebra::{
    cyclic_admissible, cyclic_parameter, generic_mu_profile, hilbert_fit, theta_splitting,
};
use canring_core::{CoverAlgebra, MuMode, MuTarget, SplitBundle};
use proptest::prelude::*;

fn window(b: &SplitBundle) -> BTreeMap<i64, usize> {
    let max = b.twists().first().copied().unwrap_or(0);
    let min = b.twists().last().copied().unwrap_or(0);
    (-max - 1..=-min + 1).map(|k| (k, b.h0(k))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hilbert_fit_round_trips(twists in prop::collection::vec(-10i64..=2, 1..=8)) {
        let b = SplitBundle::new(1, twists);
        prop_assert_eq!(hilbert_fit(&window(&b)).unwrap(), b);
    }
}

#[test]
fn hilbert_fit_rejects_bad_windows() {
    assert!(hilbert_fit(&BTreeMap::new()).is_err());
    // does not start at zero
    let b = SplitBundle::new(1, vec![0]);
    let dims: BTreeMap<i64, usize> = (0..=3).map(|k| (k, b.h0(k))).collect();
    assert!(hilbert_fit(&dims).is_err());
    // concave: no split bundle has these dimensions
    let dims: BTreeMap<i64, usize> = [(-1, 0), (0, 2), (1, 3)].into_iter().collect();
    assert!(hilbert_fit(&dims).is_err());
}

#[test]
fn theta_splitting_matches_cohomology() {
    for n in 2..=10 {
        for r in 1..=6 {
            let e = theta_splitting(n, r).unwrap();
            let full = e.with_trivial();
            assert_eq!(full.h0(0), 1);
            assert_eq!(full.h0(r), r as usize + 1);
            assert_eq!(full.h1_on_line(r), r as usize + 1);
            assert_eq!(full.h1_on_line(2 * r), 1);
            let mut expect = vec![-r - 1; n - 2];
            expect.push(-2 * r - 2);
            assert_eq!(e.twists(), &expect[..]);
        }
    }
}

#[test]
fn cyclic_only_in_degrees_two_and_three() {
    for n in 2..=10 {
        for r in 1..=5 {
            assert_eq!(cyclic_admissible(n, r).unwrap(), n <= 3, "n={n}, r={r}");
        }
    }
    assert_eq!(cyclic_parameter(3, 2).unwrap(), Some(3));
    assert_eq!(cyclic_parameter(2, 2).unwrap(), Some(6));
}

#[test]
fn generic_algebras_are_integral() {
    for n in 2..=8 {
        for r in 1..=4 {
            let a = CoverAlgebra::theta(n, r).unwrap();
            assert!(a.check_integrality().is_ok());
            if n >= 3 {
                let mut mu = generic_mu_profile(n);
                mu.set(0, 0, MuTarget::Summand(n - 2), MuMode::Zero);
                let b = a.with_mu(mu).unwrap();
                assert_eq!(b.proper_subalgebra_rank(), Some(n - 1));
                assert!(b.check_integrality().is_err());
            }
        }
    }
}
