//! Block calculus for section rings `R = + H^0(pi^* O(l d))` of a finite
//! cover `pi` of projective space with split pushforward.
//!
//! By the projection formula `R_l = H^0(O(ld)) + sum_i H^0(O(a_i + ld))`, one
//! block per summand of `pi_* O = O + E`. A product of two blocks is governed
//! by the ring structure of `O` and the module structure of `E`, except for
//! `E (x) E`, which follows the multiplication pattern of the algebra. Images
//! and codimensions of `R_s (x) R_t -> R_{s+t}` are computed block by block
//! with exact rank.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{CoverAlgebra, MuMode, MuTarget, SplitBundle};
use crate::error::{Error, Result};
use crate::sections::{block_images, BlockImage, BlockProduct, BlockSpace, Wiring, WiringMode};

/// Minimal generator counts of a graded ring in degrees `>= 2`; degree-1
/// generators (all of `R_1`) are implicit. Zero counts are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorProfile {
    counts: BTreeMap<u32, usize>,
}

impl GeneratorProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(u32, usize)]) -> Self {
        let mut p = Self::new();
        for &(d, c) in pairs {
            p.set(d, c);
        }
        p
    }

    pub fn set(&mut self, degree: u32, count: usize) {
        if count == 0 {
            self.counts.remove(&degree);
        } else {
            self.counts.insert(degree, count);
        }
    }

    pub fn get(&self, degree: u32) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// Generated in degree 1 alone.
    pub fn is_trivial(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for GeneratorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// One graded piece `R_l` with its block decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub level: u32,
    pub blocks: BlockSpace,
}

impl GradedPiece {
    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.block_dims()
    }

    pub fn dim(&self) -> usize {
        self.blocks.dim()
    }
}

/// A cover algebra on `P^n` graded by `pi^* O(d)`, `d` the algebra's target
/// twist. Block 0 of every piece is `O`; block `i + 1` is the `i`-th summand
/// of `E`.
#[derive(Clone, Debug)]
pub struct GradedCover {
    ambient: usize,
    algebra: CoverAlgebra,
    wiring: Vec<Wiring>,
}

impl GradedCover {
    pub fn new(ambient: usize, algebra: CoverAlgebra) -> Self {
        let wiring = wiring_for(&algebra);
        Self { ambient, algebra, wiring }
    }

    /// `theta`-graded ring of a degree-`n` cover of a rational normal curve
    /// of degree `r`.
    pub fn theta(n: usize, r: i64) -> Result<Self> {
        Ok(Self::new(1, CoverAlgebra::theta(n, r)?))
    }

    pub fn algebra(&self) -> &CoverAlgebra {
        &self.algebra
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn piece(&self, level: u32) -> GradedPiece {
        let shift = level as i64 * self.algebra.target_twist();
        let mut twists = Vec::with_capacity(self.algebra.degree());
        twists.push(shift);
        twists.extend(self.algebra.bundle().twists().iter().map(|a| a + shift));
        GradedPiece { level, blocks: BlockSpace::new(self.ambient, twists) }
    }

    /// Block images in `R_level` of the sum of `R_s (x) R_t` over `pairs`.
    pub fn images(&self, level: u32, pairs: &[(u32, u32)]) -> Result<Vec<BlockImage>> {
        let mut factors = Vec::with_capacity(pairs.len());
        for &(s, t) in pairs {
            if s == 0 || t == 0 {
                return Err(Error::InvalidParameter(format!("degenerate product ({s}, {t})")));
            }
            if s + t != level {
                return Err(Error::LevelMismatch(s + t, level));
            }
            factors.push((self.piece(s).blocks, self.piece(t).blocks));
        }
        let products: Vec<BlockProduct<'_>> = factors
            .iter()
            .map(|(l, r)| BlockProduct { left: l, right: r, wiring: &self.wiring })
            .collect();
        block_images(&self.piece(level).blocks, &products)
    }

    /// Codimension in `R_level` of the sum of the images over `pairs`.
    pub fn codim(&self, level: u32, pairs: &[(u32, u32)]) -> Result<usize> {
        Ok(self.images(level, pairs)?.iter().map(BlockImage::codim).sum())
    }

    /// Codimension of the image of `R_s (x) R_t -> R_{s+t}`.
    pub fn beta_codim(&self, s: u32, t: u32) -> Result<usize> {
        self.codim(s + t, &[(s, t)])
    }

    /// Whether `R_s1 (x) R_t1` and `R_s2 (x) R_t2` have the same image.
    pub fn beta_image_equal(&self, first: (u32, u32), second: (u32, u32)) -> Result<bool> {
        let (l1, l2) = (first.0 + first.1, second.0 + second.1);
        if l1 != l2 {
            return Err(Error::LevelMismatch(l1, l2));
        }
        let a = self.images(l1, &[first])?;
        let b = self.images(l2, &[second])?;
        Ok(a.iter().zip(&b).all(|(x, y)| x.same_subspace(y)))
    }

    /// Generators needed in degree `L`: the codimension of the sum of all
    /// images `R_a (x) R_(L-a)`. Levels above 4 must need none; anything else
    /// is reported as a failure to stabilize.
    pub fn generator_profile(&self, max_level: u32) -> Result<GeneratorProfile> {
        let mut profile = GeneratorProfile::new();
        for level in 2..=max_level {
            let pairs: Vec<(u32, u32)> = (1..=level / 2).map(|a| (a, level - a)).collect();
            let codim = self.codim(level, &pairs)?;
            if level > 4 && codim != 0 {
                return Err(Error::NotStabilized { level, codim });
            }
            profile.set(level, codim);
        }
        Ok(profile)
    }
}

/// Level-independent wiring: twists of `O` and of `E_i` move together with
/// the level, so the shift of each product is fixed by the algebra.
fn wiring_for(algebra: &CoverAlgebra) -> Vec<Wiring> {
    let blocks = algebra.degree();
    let mut wiring = Vec::new();
    for j in 0..blocks {
        wiring.push(Wiring::new(0, j, j, WiringMode::ModuleMult));
        if j != 0 {
            wiring.push(Wiring::new(j, 0, j, WiringMode::ModuleMult));
        }
    }
    for (i, j, target, mode) in algebra.mu().iter() {
        let t = match target {
            MuTarget::Trivial => 0,
            MuTarget::Summand(k) => k + 1,
        };
        let mode = match mode {
            MuMode::Zero => continue,
            MuMode::Nonzero => WiringMode::ModuleMult,
            MuMode::Iso => WiringMode::Iso,
        };
        wiring.push(Wiring::new(i + 1, j + 1, t, mode));
        if i != j {
            wiring.push(Wiring::new(j + 1, i + 1, t, mode));
        }
    }
    wiring
}

/// Depth of every generator search; stabilization is checked past level 4.
pub const SEARCH_DEPTH: u32 = 6;

pub fn graded_piece(n: usize, r: i64, level: u32) -> Result<GradedPiece> {
    Ok(GradedCover::theta(n, r)?.piece(level))
}

pub fn beta_codim(n: usize, r: i64, s: u32, t: u32) -> Result<usize> {
    GradedCover::theta(n, r)?.beta_codim(s, t)
}

pub fn beta_image_equal(n: usize, r: i64, first: (u32, u32), second: (u32, u32)) -> Result<bool> {
    GradedCover::theta(n, r)?.beta_image_equal(first, second)
}

/// Generators of `+ H^0(theta^l)` for a degree-`n` theta-cover of a
/// rational normal curve of degree `r`.
pub fn generator_profile(n: usize, r: i64) -> Result<GeneratorProfile> {
    GradedCover::theta(n, r)?.generator_profile(SEARCH_DEPTH)
}

/// Canonical-ring generators of a regular surface whose canonical map is a
/// degree-`n` cover of a surface of minimal degree `r`. The closed form is
/// checked against the curve-section computation, which has the same
/// codimensions in every degree.
pub fn surface_canonical_profile(n: usize, r: i64) -> Result<GeneratorProfile> {
    if n < 2 || r < 1 {
        return Err(Error::InvalidParameter(format!("need n >= 2 and r >= 1, got n={n}, r={r}")));
    }
    let closed = if (n, r) == (2, 1) {
        GeneratorProfile::from_pairs(&[(4, 1)])
    } else {
        GeneratorProfile::from_pairs(&[(2, r as usize * (n - 2)), (3, r as usize - 1)])
    };
    let computed = generator_profile(n, r)?;
    if closed != computed {
        return Err(Error::LiftMismatch { closed: display(&closed), computed: display(&computed) });
    }
    Ok(closed)
}

/// Canonical ring of a hyperelliptic curve of genus `g`, through its double
/// cover of `P^1`: `pi_* O = O + O(-g-1)` and `K = pi^* O(g - 1)`.
pub fn hyperelliptic_profile(g: u32) -> Result<GeneratorProfile> {
    if g < 2 {
        return Err(Error::InvalidParameter(format!("genus {g} < 2")));
    }
    let g = g as i64;
    let bundle = SplitBundle::new(1, vec![-g - 1]);
    let algebra = CoverAlgebra::new(2, g - 1, bundle, crate::algebra::generic_mu_profile(2))?;
    GradedCover::new(1, algebra).generator_profile(SEARCH_DEPTH)
}

/// Whether the canonical ring of a curve with a theta-cover of degree `n`
/// onto a rational normal curve of degree `r` is generated in degree 1. With
/// `K = theta^2` the multiplication `H^0(K^m) (x) H^0(K) -> H^0(K^(m+1))` is
/// `R_2m (x) R_2 -> R_(2m+2)`.
pub fn theta_char_degree1(n: usize, r: i64) -> Result<bool> {
    let genus = n as i64 * r + 1;
    if genus < 3 {
        return Err(Error::InvalidParameter(format!("genus {genus} < 3")));
    }
    let ring = GradedCover::theta(n, r)?;
    for m in 1..=4 {
        if ring.beta_codim(2 * m, 2)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn display(p: &GeneratorProfile) -> String {
    format!("{p}")
}
