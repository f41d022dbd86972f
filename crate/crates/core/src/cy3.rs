//! Normal generation for an ample, base-point-free `B` with `h^0(B) = 4` on
//! a Calabi-Yau threefold: the induced `phi : X -> P^3` is finite of degree
//! `n` with `phi_* O_X = O + (n-2) O(-2) + O(-4)`, and whether `B^2`, `B^3`
//! are normally generated comes down to the block calculus on `P^3`.

use alloc::vec::Vec;

use crate::algebra::{generic_mu_profile, theta_splitting, CoverAlgebra, MuMode, MuTarget, SplitBundle};
use crate::error::{Error, Result};
use crate::ring::GradedCover;
use crate::sections::{h0, mult_map};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CYCover {
    pub n: usize,
    /// Forces condition (*) on or off; `None` models the actual geometry.
    pub star_override: Option<bool>,
}

impl CYCover {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(alloc::format!("degree {n} < 2")));
        }
        Ok(Self { n, star_override: None })
    }

    pub fn with_star(mut self, star: bool) -> Self {
        self.star_override = Some(star);
        self
    }
}

/// `{(n-2) x -2, -4}` on `P^3`: the splitting over a general line, where the
/// restriction of `B` is a theta-characteristic of degree `n` onto `P^1`.
pub fn cy_pushforward(c: &CYCover) -> Result<SplitBundle> {
    Ok(theta_splitting(c.n, 1)?.on(3))
}

/// Condition (*): `E_1(2) (x) E_1(2) -> E_2(4)` is an isomorphism from at
/// least one pair of `O(-2)` summands onto `O(-4)`. Without it
/// `O + (n-2) O(-2)` is a subalgebra of rank `n - 1`, which cannot happen in
/// an integral cover unless `n = 2`.
pub fn star_condition(c: &CYCover) -> bool {
    c.star_override.unwrap_or(c.n >= 3)
}

/// Multiplication pattern on `E` honoring condition (*).
fn cy_algebra(c: &CYCover, target_twist: i64, ambient: usize) -> Result<CoverAlgebra> {
    let bundle = theta_splitting(c.n, 1)?.on(ambient);
    let mut mu = generic_mu_profile(c.n);
    if !star_condition(c) && c.n >= 3 {
        mu.set(0, 0, MuTarget::Summand(c.n - 2), MuMode::Zero);
    }
    CoverAlgebra::new(c.n, target_twist, bundle, mu)
}

/// Block-by-block surjectivity of `alpha = beta(2, 2)` and `beta = beta(3, 3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surjectivity {
    /// Rank of `H^0(O(2)) (x) H^0(O(2)) -> H^0(O(4))` on `P^3`.
    pub gamma_rank: usize,
    pub gamma_surjective: bool,
    /// `H^0(O(2)) (x) H^0(E_1(2)) -> H^0(E_1(4))`, both orders.
    pub delta_epsilon_surjective: bool,
    /// The `E_2(4)` block is covered.
    pub eta_covered: bool,
    pub alpha_surjective: bool,
    pub beta_surjective: bool,
    /// Codimension of the image in each block, at levels 4 and 6.
    pub alpha_block_codims: Vec<usize>,
    pub beta_block_codims: Vec<usize>,
}

pub fn alpha_beta_surjectivity(c: &CYCover) -> Result<Surjectivity> {
    let ring = GradedCover::new(3, cy_algebra(c, 1, 3)?);
    let alpha: Vec<usize> = ring.images(4, &[(2, 2)])?.iter().map(|b| b.codim()).collect();
    let beta: Vec<usize> = ring.images(6, &[(3, 3)])?.iter().map(|b| b.codim()).collect();

    let gamma_rank = mult_map(3, 2, 2).rank();
    let gamma_surjective = gamma_rank == h0(3, 4);
    let delta_epsilon_surjective = c.n < 3 || mult_map(3, 2, 0).rank() == h0(3, 2);
    let last = alpha.len() - 1;
    debug_assert_eq!(gamma_surjective, alpha[0] == 0);
    debug_assert!(alpha[1..last].iter().all(|&x| x == 0) == delta_epsilon_surjective);

    Ok(Surjectivity {
        gamma_rank,
        gamma_surjective,
        delta_epsilon_surjective,
        eta_covered: alpha[last] == 0,
        alpha_surjective: alpha.iter().all(|&x| x == 0),
        beta_surjective: beta.iter().all(|&x| x == 0),
        alpha_block_codims: alpha,
        beta_block_codims: beta,
    })
}

/// The four conditions that characterize normal generation of `B^2`, `B^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct N0Equivalences {
    pub n: usize,
    pub sectional_genus: usize,
    pub n0_b2: bool,
    pub n0_b3: bool,
    pub sectional_genus_gt_3: bool,
    pub c_nonhyperelliptic: bool,
}

impl N0Equivalences {
    pub fn all_equal(&self) -> bool {
        let v = [self.n0_b2, self.n0_b3, self.sectional_genus_gt_3, self.c_nonhyperelliptic];
        v.iter().all(|&x| x == v[0])
    }
}

/// `B^2` and `B^3` satisfy N0 iff the single maps `alpha` resp. `beta` are
/// surjective: multiplication into levels `>= 4` of the target is surjective
/// by Mumford's regularity bound. The curve `C` cut out by two members of
/// `|B|` carries `theta = B|_C` with `theta^2 = K_C`, mapping `n : 1` onto a
/// line; it is non-hyperelliptic iff `H^0(K_C)^2 -> H^0(K_C^2)` surjects.
pub fn n0_equivalences(c: &CYCover) -> Result<N0Equivalences> {
    let s = alpha_beta_surjectivity(c)?;
    let curve = GradedCover::new(1, cy_algebra(c, 1, 1)?);
    let genus = sectional_genus(c);
    Ok(N0Equivalences {
        n: c.n,
        sectional_genus: genus,
        n0_b2: s.alpha_surjective,
        n0_b3: s.beta_surjective,
        sectional_genus_gt_3: genus > 3,
        c_nonhyperelliptic: curve.beta_codim(2, 2)? == 0,
    })
}

/// `2g - 2 = deg K_C = 2 deg theta = 2n`.
pub fn sectional_genus(c: &CYCover) -> usize {
    c.n + 1
}
