use canring_core::ring::{
    beta_codim, generator_profile, graded_piece, hyperelliptic_profile, surface_canonical_profile,
    theta_char_degree1, GradedCover,
};
use canring_core::sections::h0;
use canring_core::GeneratorProfile;

#[test]
fn piece_dimensions_follow_the_splitting() {
    for n in 2..=6 {
        for r in 1..=6i64 {
            for l in 0..=8u32 {
                let li = l as i64;
                let expect = h0(1, li * r)
                    + (n - 2) * h0(1, (li - 1) * r - 1)
                    + h0(1, (li - 2) * r - 2);
                assert_eq!(graded_piece(n, r, l).unwrap().dim(), expect);
            }
        }
    }
}

#[test]
fn image_dimension_is_symmetric() {
    for n in 2..=5 {
        for r in 1..=4 {
            let ring = GradedCover::theta(n, r).unwrap();
            for s in 1..=5 {
                for t in 1..=5 {
                    assert_eq!(ring.beta_codim(s, t).unwrap(), ring.beta_codim(t, s).unwrap());
                }
            }
        }
    }
}

#[test]
fn surjective_for_large_levels() {
    for n in 2..=6 {
        for r in 1..=6 {
            let from = if r == 1 { 4 } else { 3 };
            for s in from..=7 {
                assert_eq!(beta_codim(n, r, s, 1).unwrap(), 0);
            }
        }
    }
}

#[test]
fn engine_profiles_match_surface_profiles() {
    for n in 2..=6 {
        for r in 1..=6 {
            let engine = generator_profile(n, r).unwrap();
            assert_eq!(surface_canonical_profile(n, r).unwrap(), engine);
            assert!(engine.max_degree().unwrap_or(0) <= 4);
        }
    }
}

#[test]
fn hyperelliptic_profiles() {
    assert_eq!(hyperelliptic_profile(2).unwrap(), GeneratorProfile::from_pairs(&[(3, 1)]));
    for g in 3..=12 {
        assert_eq!(
            hyperelliptic_profile(g).unwrap(),
            GeneratorProfile::from_pairs(&[(2, g as usize - 2)])
        );
    }
}

#[test]
fn theta_grading_reindexes_to_canonical_grading() {
    // theta^2 = K: canonical degree 2 is theta degree 4 = beta(2, 2)
    for g in (3..=13).step_by(2) {
        let r = (g as i64 - 1) / 2;
        assert_eq!(hyperelliptic_profile(g).unwrap().get(2), beta_codim(2, r, 2, 2).unwrap());
    }
}

#[test]
fn canonical_degree_one_generation_iff_not_double() {
    for n in 2..=6 {
        for r in 1..=4 {
            if n as i64 * r + 1 < 3 {
                assert!(theta_char_degree1(n, r).is_err());
                continue;
            }
            assert_eq!(theta_char_degree1(n, r).unwrap(), n >= 3, "n={n}, r={r}");
        }
    }
    assert!(theta_char_degree1(2, 1).is_ok());
}
