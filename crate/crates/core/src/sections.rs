//! Global sections of `O(d)` on projective space, monomial bases, and the
//! multiplication maps between section spaces, including block-decomposed
//! spaces `H^0(O(d_1)) + ... + H^0(O(d_k))`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::poly::{monomials_of_degree, Monomial};
use crate::rational::Rational;

/// `h^0(O_{P^n}(d))`: `C(n + d, n)` for `d >= 0`, else 0.
pub fn h0(ambient: usize, twist: i64) -> usize {
    if twist < 0 {
        return 0;
    }
    binomial(ambient as u64 + twist as u64, ambient as u64) as usize
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `H^0(O_{P^n}(d))` with its lexicographically ordered monomial basis.
#[derive(Clone, Debug)]
pub struct SectionSpace {
    ambient: usize,
    twist: i64,
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl SectionSpace {
    pub fn new(ambient: usize, twist: i64) -> Self {
        let basis = if twist < 0 { Vec::new() } else { monomials_of_degree(ambient + 1, twist as u32) };
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self { ambient, twist, basis, index }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Matrix of `H^0(O(a)) (x) H^0(O(b)) -> H^0(O(a + b))` in monomial bases.
/// Column `i * h0(b) + j` is the image of `m_i (x) m_j`. When either factor
/// has negative twist the domain is zero and the matrix has no columns.
pub fn mult_map(ambient: usize, a: i64, b: i64) -> RationalMatrix {
    let left = SectionSpace::new(ambient, a);
    let right = SectionSpace::new(ambient, b);
    let target = SectionSpace::new(ambient, a + b);
    let cols = left.dim() * right.dim();
    let mut m = RationalMatrix::zeros(target.dim(), cols);
    for (i, u) in left.basis().iter().enumerate() {
        for (j, v) in right.basis().iter().enumerate() {
            let row = target.index_of(&u.mul(v)).expect("product has the target degree");
            m.set(row, i * right.dim() + j, Rational::one());
        }
    }
    m
}

/// A direct sum of section spaces `H^0(O(t_1)) + ... + H^0(O(t_k))` on one
/// `P^n`. Blocks of negative twist stay in the list with dimension 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpace {
    ambient: usize,
    twists: Vec<i64>,
}

impl BlockSpace {
    pub fn new(ambient: usize, twists: Vec<i64>) -> Self {
        Self { ambient, twists }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.twists.iter().map(|&t| h0(self.ambient, t)).collect()
    }

    pub fn dim(&self) -> usize {
        self.block_dims().iter().sum()
    }
}

/// How a pair of source blocks feeds a target block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WiringMode {
    Zero,
    /// Section multiplication `O(a) (x) O(b) -> O(a + b)`, followed by a fixed
    /// nonzero section of `O(t - a - b)` when the target twist `t` is larger.
    /// A map with `t < a + b` cannot be nonzero and contributes nothing.
    ModuleMult,
    /// The source product maps isomorphically onto the target block, which
    /// is then fully hit as soon as both sources are nonzero.
    Iso,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wiring {
    pub left: usize,
    pub right: usize,
    pub target: usize,
    pub mode: WiringMode,
}

impl Wiring {
    pub fn new(left: usize, right: usize, target: usize, mode: WiringMode) -> Self {
        Self { left, right, target, mode }
    }
}

/// One bilinear product `left (x) right -> target` described by its wiring.
#[derive(Clone, Copy, Debug)]
pub struct BlockProduct<'a> {
    pub left: &'a BlockSpace,
    pub right: &'a BlockSpace,
    pub wiring: &'a [Wiring],
}

/// The image arriving at one target block, as a spanning set of columns in
/// that block's monomial basis.
#[derive(Clone, Debug)]
pub struct BlockImage {
    target_dim: usize,
    generators: RationalMatrix,
}

impl BlockImage {
    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn generators(&self) -> &RationalMatrix {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.rank()
    }

    pub fn codim(&self) -> usize {
        self.target_dim - self.dim()
    }

    /// Subspace equality: both spans have the rank of their union.
    pub fn same_subspace(&self, other: &Self) -> bool {
        if self.target_dim != other.target_dim {
            return false;
        }
        let a = self.dim();
        a == other.dim() && self.generators.hstack(&other.generators).map(|m| m.rank()) == Ok(a)
    }
}

/// Images of a single product, per target block.
pub fn block_mult_image(
    left: &BlockSpace,
    right: &BlockSpace,
    target: &BlockSpace,
    wiring: &[Wiring],
) -> Result<Vec<usize>> {
    let images = block_images(target, &[BlockProduct { left, right, wiring }])?;
    Ok(images.iter().map(BlockImage::dim).collect())
}

/// Dimensions, per target block, of the sum of images of several products.
pub fn block_sum_image(target: &BlockSpace, products: &[BlockProduct<'_>]) -> Result<Vec<usize>> {
    Ok(block_images(target, products)?.iter().map(BlockImage::dim).collect())
}

/// Spanning sets of the sum of images of `products`, per target block.
/// Distinct target blocks are independent summands, so each is handled on
/// its own.
pub fn block_images(target: &BlockSpace, products: &[BlockProduct<'_>]) -> Result<Vec<BlockImage>> {
    let spaces: Vec<SectionSpace> =
        target.twists.iter().map(|&t| SectionSpace::new(target.ambient, t)).collect();
    let mut hits: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); target.len()];
    let mut cache: BTreeMap<i64, SectionSpace> = BTreeMap::new();

    for product in products {
        for space in [product.left, product.right] {
            if space.ambient != target.ambient {
                return Err(Error::InvalidParameter(format!(
                    "blocks on P^{} multiplied into P^{}",
                    space.ambient, target.ambient
                )));
            }
        }
        for w in product.wiring {
            let l = *product
                .left
                .twists
                .get(w.left)
                .ok_or(Error::BlockIndex { index: w.left, len: product.left.len() })?;
            let r = *product
                .right
                .twists
                .get(w.right)
                .ok_or(Error::BlockIndex { index: w.right, len: product.right.len() })?;
            let t = *target
                .twists
                .get(w.target)
                .ok_or(Error::BlockIndex { index: w.target, len: target.len() })?;
            match w.mode {
                WiringMode::Zero => {}
                WiringMode::Iso => {
                    if l + r != t {
                        return Err(Error::IsoTwist { left: l, right: r, target: t });
                    }
                    if h0(target.ambient, l) > 0 && h0(target.ambient, r) > 0 {
                        hits[w.target].extend(0..spaces[w.target].dim());
                    }
                }
                WiringMode::ModuleMult => {
                    let shift = t - l - r;
                    if shift < 0 || l < 0 || r < 0 {
                        continue;
                    }
                    let vars = target.ambient + 1;
                    let scale = Monomial::leading_power(vars, shift as u32);
                    let ls = cache.entry(l).or_insert_with(|| SectionSpace::new(target.ambient, l)).clone();
                    let rs = cache.entry(r).or_insert_with(|| SectionSpace::new(target.ambient, r));
                    let ts = &spaces[w.target];
                    for u in ls.basis() {
                        let us = u.mul(&scale);
                        for v in rs.basis() {
                            let idx = ts.index_of(&us.mul(v)).expect("degree matches target");
                            hits[w.target].insert(idx);
                        }
                    }
                }
            }
        }
    }

    Ok(spaces
        .iter()
        .zip(hits)
        .map(|(space, hit)| {
            let mut generators = RationalMatrix::zeros(space.dim(), hit.len());
            for (col, row) in hit.into_iter().enumerate() {
                generators.set(row, col, Rational::one());
            }
            BlockImage { target_dim: space.dim(), generators }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h0_values() {
        assert_eq!(h0(1, 2), 3);
        assert_eq!(h0(1, -1), 0);
        assert_eq!(h0(3, 4), 35);
        assert_eq!(h0(3, 0), 1);
        assert_eq!(h0(2, 3), 10);
    }

    #[test]
    fn mult_map_examples() {
        let m = mult_map(1, 1, 1);
        assert_eq!((m.rows(), m.cols()), (3, 4));
        assert_eq!(m.rank(), 3);

        let z = mult_map(1, 2, -1);
        assert_eq!(z.cols(), 0);
        assert_eq!(z.rank(), 0);

        let g = mult_map(3, 2, 2);
        assert_eq!((g.rows(), g.cols()), (35, 100));
        assert_eq!(g.rank(), 35);
    }

    #[test]
    fn single_module_mult_on_p1() {
        let l = BlockSpace::new(1, vec![2]);
        let t = BlockSpace::new(1, vec![4]);
        let w = [Wiring::new(0, 0, 0, WiringMode::ModuleMult)];
        assert_eq!(block_mult_image(&l, &l, &t, &w).unwrap(), vec![5]);
        let z = [Wiring::new(0, 0, 0, WiringMode::Zero)];
        assert_eq!(block_mult_image(&l, &l, &t, &z).unwrap(), vec![0]);
    }

    #[test]
    fn r1_times_r1_for_quadruple_cover_of_line() {
        // n = 4, r = 1: R_1 blocks [1, -1, -1, -3], R_2 blocks [2, 0, 0, -2].
        let r1 = BlockSpace::new(1, vec![1, -1, -1, -3]);
        let r2 = BlockSpace::new(1, vec![2, 0, 0, -2]);
        let mut wiring = Vec::new();
        for j in 0..4 {
            wiring.push(Wiring::new(0, j, j, WiringMode::ModuleMult));
            wiring.push(Wiring::new(j, 0, j, WiringMode::ModuleMult));
        }
        wiring.push(Wiring::new(1, 1, 3, WiringMode::Iso));
        let dims = block_mult_image(&r1, &r1, &r2, &wiring).unwrap();
        assert_eq!(dims, vec![3, 0, 0, 0]);
        assert_eq!(r2.dim() - dims.iter().sum::<usize>(), 2);
    }

    #[test]
    fn shifted_module_mult_is_injective() {
        // O(1) (x) O(1) -> O(4) through a fixed section of O(2)
        let l = BlockSpace::new(1, vec![1]);
        let t = BlockSpace::new(1, vec![4]);
        let w = [Wiring::new(0, 0, 0, WiringMode::ModuleMult)];
        assert_eq!(block_mult_image(&l, &l, &t, &w).unwrap(), vec![3]);
        // wrong direction: forced zero
        let t = BlockSpace::new(1, vec![1]);
        assert_eq!(block_mult_image(&l, &l, &t, &w).unwrap(), vec![0]);
    }

    #[test]
    fn wiring_errors() {
        let l = BlockSpace::new(1, vec![1]);
        let w = [Wiring::new(0, 3, 0, WiringMode::ModuleMult)];
        assert_eq!(
            block_mult_image(&l, &l, &l, &w),
            Err(Error::BlockIndex { index: 3, len: 1 })
        );
        let w = [Wiring::new(0, 0, 0, WiringMode::Iso)];
        assert!(matches!(block_mult_image(&l, &l, &l, &w), Err(Error::IsoTwist { .. })));
    }

    #[test]
    fn image_equality() {
        let l = BlockSpace::new(1, vec![1]);
        let t = BlockSpace::new(1, vec![2]);
        let mm = [Wiring::new(0, 0, 0, WiringMode::ModuleMult)];
        let iso = [Wiring::new(0, 0, 0, WiringMode::Iso)];
        let a = block_images(&t, &[BlockProduct { left: &l, right: &l, wiring: &mm }]).unwrap();
        let b = block_images(&t, &[BlockProduct { left: &l, right: &l, wiring: &iso }]).unwrap();
        assert!(a[0].same_subspace(&b[0]));
        let s = BlockSpace::new(1, vec![0]);
        let c = block_images(&t, &[BlockProduct { left: &s, right: &s, wiring: &mm }]).unwrap();
        assert_eq!(c[0].dim(), 1);
        assert!(!a[0].same_subspace(&c[0]));
    }
}
