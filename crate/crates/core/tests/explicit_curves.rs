use canring_core::algebra::theta_splitting;
use canring_core::curve::{
    canonical_profile_bruteforce, hyperelliptic_fixtures, oracle_mult_codim, oracle_pushforward_split,
    trigonal_fixtures, Grading, OracleCurve,
};
use canring_core::ring::{beta_codim, hyperelliptic_profile};

fn theta_fixtures() -> Vec<(usize, i64, OracleCurve)> {
    let mut out = Vec::new();
    for g in [3, 5, 7] {
        for c in hyperelliptic_fixtures(g).unwrap() {
            out.push((2, (g as i64 - 1) / 2, OracleCurve::Hyperelliptic(c)));
        }
    }
    for r in 1..=3 {
        for c in trigonal_fixtures(r).unwrap() {
            out.push((3, r as i64, OracleCurve::Trigonal(c)));
        }
    }
    out
}

#[test]
fn explicit_codims_match_block_calculus() {
    for (n, r, curve) in theta_fixtures() {
        for s in 1..=5 {
            for t in 1..=6 - s {
                assert_eq!(
                    oracle_mult_codim(&curve, s, t).unwrap(),
                    beta_codim(n, r, s, t).unwrap(),
                    "n={n}, r={r}, f={:?}, ({s}, {t})",
                    curve.f()
                );
            }
        }
    }
}

#[test]
fn explicit_pushforward_matches_theta_splitting() {
    for (n, r, curve) in theta_fixtures() {
        assert_eq!(oracle_pushforward_split(&curve).unwrap(), theta_splitting(n, r).unwrap());
    }
}

#[test]
fn theta_is_a_square_root_of_k_on_fixtures() {
    for (_, _, curve) in theta_fixtures() {
        assert!(curve.theta_square_check().unwrap());
    }
}

#[test]
fn fixtures_of_one_shape_agree() {
    for (_, _, curve) in theta_fixtures() {
        let [a, b] = match &curve {
            OracleCurve::Hyperelliptic(c) => {
                let v = hyperelliptic_fixtures(c.genus()).unwrap();
                [OracleCurve::Hyperelliptic(v[0].clone()), OracleCurve::Hyperelliptic(v[1].clone())]
            }
            OracleCurve::Trigonal(c) => {
                let v = trigonal_fixtures(c.target_twist()).unwrap();
                [OracleCurve::Trigonal(v[0].clone()), OracleCurve::Trigonal(v[1].clone())]
            }
        };
        assert_ne!(a.f(), b.f());
        for (s, t) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 3)] {
            assert_eq!(a.mult_codim(Grading::Theta, s, t).unwrap(), b.mult_codim(Grading::Theta, s, t).unwrap());
        }
    }
}

#[test]
fn hyperelliptic_canonical_rings() {
    for g in 2..=6 {
        for c in hyperelliptic_fixtures(g).unwrap() {
            let curve = OracleCurve::Hyperelliptic(c);
            assert_eq!(
                canonical_profile_bruteforce(&curve).unwrap(),
                hyperelliptic_profile(g as u32).unwrap()
            );
        }
    }
}

#[test]
fn trigonal_canonical_rings_are_generated_in_degree_one() {
    for r in 1..=2 {
        for c in trigonal_fixtures(r).unwrap() {
            assert!(canonical_profile_bruteforce(&OracleCurve::Trigonal(c)).unwrap().is_trivial());
        }
    }
}

#[test]
fn section_counts_follow_riemann_roch() {
    for g in 2..=7 {
        let c = hyperelliptic_fixtures(g).unwrap().remove(0);
        assert_eq!(c.sections(1).unwrap().len(), g);
        for l in 2..=6u32 {
            assert_eq!(c.sections(l).unwrap().len(), (2 * l as usize - 1) * (g - 1));
        }
    }
    for r in 1..=4 {
        let c = trigonal_fixtures(r).unwrap().remove(0);
        for l in 1..=6u32 {
            // deg theta^l = 3 r l > 2g - 2 = 6r once l >= 3
            let expect = if l >= 3 { 3 * r * l as usize - 3 * r } else { [0, r + 1, 3 * r + 1][l as usize] };
            assert_eq!(c.theta_sections(l).unwrap().len(), expect, "r={r}, l={l}");
        }
    }
}
