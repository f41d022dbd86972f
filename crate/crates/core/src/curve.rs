//! Explicit cyclic covers `y^n = f(x)` of `P^1` with `n in {2, 3}`, used as an
//! independent check on the block calculus.
//!
//! With `deg f = n e` and `f` squarefree, the affine curve is smooth, the `n`
//! points over `x = infinity` are unramified, and the regular functions are
//! `Q[x] + Q[x] y + ... + Q[x] y^(n-1)`. At each point at infinity `x` has a
//! simple pole and `y` a pole of order `e`. Hence for `L = pi^* O(d)` the
//! sections of `L^l` are the functions `x^i y^j` with `i + j e <= l d`, and
//! products are multiplied as polynomials with `y^n` replaced by `f`. Nothing
//! here consults the split-bundle machinery.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{hilbert_fit, SplitBundle};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::poly::UniPoly;
use crate::rational::{int, Rational};
use crate::ring::{GeneratorProfile, SEARCH_DEPTH};

/// Polarization used to grade the section ring of an explicit curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    /// `theta = pi^* O(r)` with `theta^2 = K`.
    Theta,
    /// The canonical bundle.
    Canonical,
}

/// The smooth curve `y^sheets = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct CyclicCurve {
    sheets: usize,
    f: UniPoly,
    e: usize,
}

impl CyclicCurve {
    fn new(sheets: usize, f: UniPoly) -> Result<Self> {
        let deg = f.degree().unwrap_or(0);
        if f.is_zero() || deg == 0 || !deg.is_multiple_of(sheets) {
            return Err(Error::InvalidParameter(format!(
                "degree {deg} is not a positive multiple of {sheets}"
            )));
        }
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(Self { sheets, f, e: deg / sheets })
    }

    /// Riemann-Hurwitz: `2g - 2 = -2n + (n - 1) deg f`.
    fn genus(&self) -> usize {
        let n = self.sheets;
        ((n - 1) * n * self.e + 2 - 2 * n) / 2
    }

    /// `x^i y^j` with `i + j e <= l d`, stratum by stratum.
    fn sections(&self, twist: usize, level: u32) -> PluricanonicalBasis {
        let bound = level as i64 * twist as i64;
        let mut elements = Vec::new();
        for j in 0..self.sheets {
            let top = bound - (j * self.e) as i64;
            for i in 0..=top.max(-1) {
                elements.push(BasisElement { x_power: i as u32, y_power: j as u32 });
            }
        }
        PluricanonicalBasis { level, elements }
    }

    /// `h^0(pi_* O (x) O(k))`, counted on functions with bounded poles.
    fn pushforward_h0(&self, k: i64) -> usize {
        (0..self.sheets).map(|j| (k - (j * self.e) as i64 + 1).max(0) as usize).sum()
    }

    fn pushforward_split(&self) -> Result<SplitBundle> {
        let hi = ((self.sheets - 1) * self.e + 1) as i64;
        let dims: BTreeMap<i64, usize> = (-1..=hi).map(|k| (k, self.pushforward_h0(k))).collect();
        let full = hilbert_fit(&dims)?;
        let mut twists = full.twists().to_vec();
        let zero = twists
            .iter()
            .position(|&a| a == 0)
            .ok_or(Error::Inconsistent(0))?;
        twists.remove(zero);
        Ok(SplitBundle::new(1, twists))
    }

    /// Coordinates of `a * b` in `target`.
    fn product(
        &self,
        a: BasisElement,
        b: BasisElement,
        target: &BTreeMap<BasisElement, usize>,
    ) -> Result<Vec<(usize, Rational)>> {
        let i = (a.x_power + b.x_power) as usize;
        let j = (a.y_power + b.y_power) as usize;
        let (j, poly) = if j >= self.sheets {
            (j - self.sheets, &UniPoly::monomial(Rational::one(), i) * &self.f)
        } else {
            (j, UniPoly::monomial(Rational::one(), i))
        };
        let mut out = Vec::new();
        for (k, c) in poly.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let key = BasisElement { x_power: k as u32, y_power: j as u32 };
            match target.get(&key) {
                Some(&row) => out.push((row, c.clone())),
                None => return Err(Error::OutsideBasis { stratum: j, degree: k }),
            }
        }
        Ok(out)
    }

    /// Image of `sum_(s, t) V_s (x) V_t -> V_(s+t)` as a matrix whose columns
    /// are the products; `V_l` are the level-`l` sections of `pi^* O(d)`.
    fn mult_matrix(&self, twist: usize, level: u32, pairs: &[(u32, u32)]) -> Result<RationalMatrix> {
        let target = self.sections(twist, level);
        let index: BTreeMap<BasisElement, usize> =
            target.elements.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let mut columns = BTreeSet::new();
        for &(s, t) in pairs {
            if s == 0 || t == 0 || s + t != level {
                return Err(Error::LevelMismatch(s + t, level));
            }
            let left = self.sections(twist, s);
            let right = self.sections(twist, t);
            for (p, &a) in left.elements.iter().enumerate() {
                // on the diagonal only the symmetric square contributes new products
                let skip = if s == t { p } else { 0 };
                for &b in right.elements.iter().skip(skip) {
                    let col = self.product(a, b, &index)?;
                    columns.insert(col.into_iter().map(|(r, c)| (r, Key(c))).collect::<Vec<_>>());
                }
            }
        }
        let dense: Vec<Vec<Rational>> = columns
            .into_iter()
            .map(|col| {
                let mut v = vec![Rational::zero(); target.len()];
                for (r, Key(c)) in col {
                    v[r] = c;
                }
                v
            })
            .collect();
        RationalMatrix::from_columns(target.len(), &dense)
    }

    fn mult_codim(&self, twist: usize, level: u32, pairs: &[(u32, u32)]) -> Result<usize> {
        Ok(self.mult_matrix(twist, level, pairs)?.image_codim())
    }

    fn profile(&self, twist: usize) -> Result<GeneratorProfile> {
        let mut profile = GeneratorProfile::new();
        for level in 2..=SEARCH_DEPTH {
            let pairs: Vec<(u32, u32)> = (1..=level / 2).map(|a| (a, level - a)).collect();
            profile.set(level, self.mult_codim(twist, level, &pairs)?);
        }
        Ok(profile)
    }

    /// Whether `K = pi^* O(2r)`. The degrees agree exactly when
    /// `2 n r = 2g - 2`; then the class is trivial iff some holomorphic
    /// differential vanishes to order `>= 2r` at each point over infinity.
    ///
    /// A basis of differentials is `x^i dx / y^j` with `1 <= j < n` and
    /// `i <= j e - 2`. The group `mu_n` acts on stratum `j` through the
    /// character `j`, so the points at infinity impose the same conditions
    /// on a stratum and strata can be treated one at a time. In `t = 1/x`,
    /// `x^i dx / y^j = -c t^(j e - i - 2) P_j(t) dt` with
    /// `P_j = (f(1/t) t^(n e) / lead f)^(-j / n)`.
    fn theta_square(&self, r: usize) -> Result<bool> {
        if 2 * self.sheets * r != 2 * self.genus() - 2 {
            return Ok(false);
        }
        let order = 2 * r;
        let lead = self.f.leading().cloned().unwrap_or_else(Rational::one);
        let deg = self.sheets * self.e;
        let g: Vec<Rational> = (0..=deg).map(|k| self.f.coeff(deg - k) / &lead).collect();
        let mut sections = 0;
        for j in 1..self.sheets {
            let top = j * self.e;
            if top < 2 {
                continue;
            }
            let alpha = Rational::new((-(j as i64)).into(), (self.sheets as i64).into());
            let p = power_series(&g, &alpha, order);
            let cols = top - 1;
            let m = RationalMatrix::from_fn(order, cols, |k, i| {
                let shift = top - i - 2;
                if k >= shift {
                    p[k - shift].clone()
                } else {
                    Rational::zero()
                }
            });
            sections += cols - m.rank();
        }
        Ok(sections >= 1)
    }
}

/// Wrapper giving rationals a total order so product columns can be
/// deduplicated before elimination.
#[derive(Clone, PartialEq, Eq)]
struct Key(Rational);

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.0.cmp(&other.0)
    }
}

/// First `terms` coefficients of `G(t)^alpha` for `G(0) = 1`, by the
/// recurrence `k p_k = sum_(i=1..k) (alpha i - (k - i)) g_i p_(k-i)`.
fn power_series(g: &[Rational], alpha: &Rational, terms: usize) -> Vec<Rational> {
    let mut p = Vec::with_capacity(terms);
    if terms == 0 {
        return p;
    }
    p.push(Rational::one());
    for k in 1..terms {
        let mut acc = Rational::zero();
        for i in 1..=k.min(g.len().saturating_sub(1)) {
            if g[i].is_zero() {
                continue;
            }
            let w = alpha * int(i as i64) - int((k - i) as i64);
            acc += w * &g[i] * &p[k - i];
        }
        p.push(acc / int(k as i64));
    }
    p
}

/// A section `x^i y^j` of `L^l`; with `L = pi^* O(d)` it is the function
/// `x^i y^j` times the `l`-th power of the section of `L` with divisor `d`
/// times the fibre over infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElement {
    pub x_power: u32,
    pub y_power: u32,
}

/// Monomial basis of one graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluricanonicalBasis {
    pub level: u32,
    pub elements: Vec<BasisElement>,
}

impl PluricanonicalBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of elements with `y`-exponent `j`.
    pub fn stratum_len(&self, j: u32) -> usize {
        self.elements.iter().filter(|e| e.y_power == j).count()
    }
}

/// `y^2 = f(x)` with `f` squarefree of degree `2g + 2`, `g >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticCurve {
    inner: CyclicCurve,
}

impl HyperellipticCurve {
    pub fn new(f: UniPoly) -> Result<Self> {
        let inner = CyclicCurve::new(2, f)?;
        if inner.e < 3 {
            return Err(Error::InvalidParameter(format!("genus {} < 2", inner.genus())));
        }
        Ok(Self { inner })
    }

    pub fn f(&self) -> &UniPoly {
        &self.inner.f
    }

    pub fn genus(&self) -> usize {
        self.inner.genus()
    }

    /// `r` with `theta = pi^* O(r)` a theta-characteristic: `(g - 1) / 2`,
    /// defined for odd genus only.
    pub fn theta_twist(&self) -> Result<usize> {
        let g = self.genus();
        if g.is_multiple_of(2) {
            return Err(Error::Unsupported(format!(
                "theta grading needs odd genus, got {g}"
            )));
        }
        Ok((g - 1) / 2)
    }

    fn twist(&self, grading: Grading) -> Result<usize> {
        match grading {
            Grading::Theta => self.theta_twist(),
            Grading::Canonical => Ok(self.genus() - 1),
        }
    }

    /// Basis of `H^0(K^l)` for `l >= 1`.
    pub fn sections(&self, level: u32) -> Result<PluricanonicalBasis> {
        self.graded_sections(Grading::Canonical, level)
    }

    pub fn graded_sections(&self, grading: Grading, level: u32) -> Result<PluricanonicalBasis> {
        if level == 0 {
            return Err(Error::InvalidParameter("level must be >= 1".into()));
        }
        Ok(self.inner.sections(self.twist(grading)?, level))
    }

    pub fn mult_codim(&self, grading: Grading, s: u32, t: u32) -> Result<usize> {
        check_levels(s, t)?;
        self.inner.mult_codim(self.twist(grading)?, s + t, &[(s, t)])
    }

    pub fn pushforward_split(&self) -> Result<SplitBundle> {
        self.inner.pushforward_split()
    }

    pub fn theta_square_check(&self) -> Result<bool> {
        self.inner.theta_square(self.theta_twist()?)
    }

    pub fn canonical_profile(&self) -> Result<GeneratorProfile> {
        self.inner.profile(self.genus() - 1)
    }
}

/// `y^3 = f(x)` with `f` squarefree of degree `3r + 3`, `r >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicTrigonalCurve {
    inner: CyclicCurve,
}

impl CyclicTrigonalCurve {
    pub fn new(f: UniPoly) -> Result<Self> {
        let inner = CyclicCurve::new(3, f)?;
        if inner.e < 2 {
            return Err(Error::InvalidParameter("degree of f must be 3r + 3 with r >= 1".into()));
        }
        Ok(Self { inner })
    }

    pub fn f(&self) -> &UniPoly {
        &self.inner.f
    }

    pub fn target_twist(&self) -> usize {
        self.inner.e - 1
    }

    pub fn genus(&self) -> usize {
        self.inner.genus()
    }

    fn twist(&self, grading: Grading) -> Result<usize> {
        match grading {
            Grading::Theta => Ok(self.target_twist()),
            Grading::Canonical => {
                if !self.theta_square_check()? {
                    return Err(Error::Unsupported("K is not pi^* O(2r) on this curve".into()));
                }
                Ok(2 * self.target_twist())
            }
        }
    }

    /// Basis of `H^0(theta^l)` for `l >= 1`.
    pub fn theta_sections(&self, level: u32) -> Result<PluricanonicalBasis> {
        self.graded_sections(Grading::Theta, level)
    }

    pub fn graded_sections(&self, grading: Grading, level: u32) -> Result<PluricanonicalBasis> {
        if level == 0 {
            return Err(Error::InvalidParameter("level must be >= 1".into()));
        }
        Ok(self.inner.sections(self.twist(grading)?, level))
    }

    pub fn mult_codim(&self, grading: Grading, s: u32, t: u32) -> Result<usize> {
        check_levels(s, t)?;
        self.inner.mult_codim(self.twist(grading)?, s + t, &[(s, t)])
    }

    pub fn pushforward_split(&self) -> Result<SplitBundle> {
        self.inner.pushforward_split()
    }

    pub fn theta_square_check(&self) -> Result<bool> {
        self.inner.theta_square(self.target_twist())
    }

    /// Canonical ring generators; requires `theta^2 = K`.
    pub fn canonical_profile(&self) -> Result<GeneratorProfile> {
        self.inner.profile(self.twist(Grading::Canonical)?)
    }
}

fn check_levels(s: u32, t: u32) -> Result<()> {
    if s == 0 || t == 0 || s + t > 8 {
        return Err(Error::InvalidParameter(format!("need s, t >= 1 and s + t <= 8, got ({s}, {t})")));
    }
    Ok(())
}

/// Either kind of explicit curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleCurve {
    Hyperelliptic(HyperellipticCurve),
    Trigonal(CyclicTrigonalCurve),
}

impl OracleCurve {
    pub fn hyperelliptic(f: UniPoly) -> Result<Self> {
        HyperellipticCurve::new(f).map(Self::Hyperelliptic)
    }

    pub fn trigonal(f: UniPoly) -> Result<Self> {
        CyclicTrigonalCurve::new(f).map(Self::Trigonal)
    }

    pub fn sheets(&self) -> usize {
        match self {
            Self::Hyperelliptic(_) => 2,
            Self::Trigonal(_) => 3,
        }
    }

    pub fn genus(&self) -> usize {
        match self {
            Self::Hyperelliptic(c) => c.genus(),
            Self::Trigonal(c) => c.genus(),
        }
    }

    pub fn f(&self) -> &UniPoly {
        match self {
            Self::Hyperelliptic(c) => c.f(),
            Self::Trigonal(c) => c.f(),
        }
    }

    /// The `r` of the theta-grading.
    pub fn theta_twist(&self) -> Result<usize> {
        match self {
            Self::Hyperelliptic(c) => c.theta_twist(),
            Self::Trigonal(c) => Ok(c.target_twist()),
        }
    }

    pub fn sections(&self, grading: Grading, level: u32) -> Result<PluricanonicalBasis> {
        match self {
            Self::Hyperelliptic(c) => c.graded_sections(grading, level),
            Self::Trigonal(c) => c.graded_sections(grading, level),
        }
    }

    pub fn mult_codim(&self, grading: Grading, s: u32, t: u32) -> Result<usize> {
        match self {
            Self::Hyperelliptic(c) => c.mult_codim(grading, s, t),
            Self::Trigonal(c) => c.mult_codim(grading, s, t),
        }
    }

    pub fn pushforward_split(&self) -> Result<SplitBundle> {
        match self {
            Self::Hyperelliptic(c) => c.pushforward_split(),
            Self::Trigonal(c) => c.pushforward_split(),
        }
    }

    pub fn theta_square_check(&self) -> Result<bool> {
        match self {
            Self::Hyperelliptic(c) => c.theta_square_check(),
            Self::Trigonal(c) => c.theta_square_check(),
        }
    }

    pub fn canonical_profile(&self) -> Result<GeneratorProfile> {
        match self {
            Self::Hyperelliptic(c) => c.canonical_profile(),
            Self::Trigonal(c) => c.canonical_profile(),
        }
    }
}

pub fn hyperelliptic_sections(c: &HyperellipticCurve, level: u32) -> Result<PluricanonicalBasis> {
    c.sections(level)
}

pub fn trigonal_theta_sections(c: &CyclicTrigonalCurve, level: u32) -> Result<PluricanonicalBasis> {
    c.theta_sections(level)
}

/// Codimension of `H^0(theta^s) (x) H^0(theta^t) -> H^0(theta^(s+t))`.
pub fn oracle_mult_codim(c: &OracleCurve, s: u32, t: u32) -> Result<usize> {
    c.mult_codim(Grading::Theta, s, t)
}

pub fn oracle_pushforward_split(c: &OracleCurve) -> Result<SplitBundle> {
    c.pushforward_split()
}

pub fn theta_square_check(c: &CyclicTrigonalCurve) -> Result<bool> {
    c.theta_square_check()
}

pub fn canonical_profile_bruteforce(c: &OracleCurve) -> Result<GeneratorProfile> {
    c.canonical_profile()
}

/// The two standard fixtures of degree `d`: `x^d - 1`, and `x^d + x + 1`
/// (or `x^d + x^2 + 1` when the former has a repeated root).
pub fn fixture_polys(d: usize) -> [UniPoly; 2] {
    let mut first = vec![0; d + 1];
    first[0] = -1;
    first[d] = 1;
    let mut second = vec![0; d + 1];
    second[0] = 1;
    second[1] += 1;
    second[d] += 1;
    let mut second = UniPoly::from_ints(&second);
    if !second.is_squarefree() {
        let mut alt = vec![0; d + 1];
        alt[0] = 1;
        alt[2] += 1;
        alt[d] += 1;
        second = UniPoly::from_ints(&alt);
    }
    [UniPoly::from_ints(&first), second]
}

/// Hyperelliptic fixtures of genus `g`.
pub fn hyperelliptic_fixtures(g: usize) -> Result<Vec<HyperellipticCurve>> {
    fixture_polys(2 * g + 2).into_iter().map(HyperellipticCurve::new).collect()
}

/// Cyclic trigonal fixtures with `theta = pi^* O(r)`.
pub fn trigonal_fixtures(r: usize) -> Result<Vec<CyclicTrigonalCurve>> {
    fixture_polys(3 * r + 3).into_iter().map(CyclicTrigonalCurve::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyper(g: usize) -> HyperellipticCurve {
        hyperelliptic_fixtures(g).unwrap().remove(0)
    }

    fn trig(r: usize) -> CyclicTrigonalCurve {
        trigonal_fixtures(r).unwrap().remove(0)
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            HyperellipticCurve::new(UniPoly::from_ints(&[1, -2, 1, 0, 0, 0, 0, 1])).unwrap_err(),
            Error::InvalidParameter("degree 7 is not a positive multiple of 2".into())
        );
        // (x^3 - 1)^2
        let sq = UniPoly::from_ints(&[1, 0, 0, -2, 0, 0, 1]);
        assert_eq!(HyperellipticCurve::new(sq.clone()).unwrap_err(), Error::NotSquarefree);
        assert_eq!(CyclicTrigonalCurve::new(sq).unwrap_err(), Error::NotSquarefree);
        // genus 1
        assert!(HyperellipticCurve::new(UniPoly::from_ints(&[-1, 0, 0, 0, 1])).is_err());
    }

    #[test]
    fn hyperelliptic_section_counts() {
        assert_eq!(hyperelliptic_sections(&hyper(2), 1).unwrap().len(), 2);
        assert_eq!(hyperelliptic_sections(&hyper(2), 2).unwrap().len(), 3);
        assert_eq!(hyperelliptic_sections(&hyper(3), 2).unwrap().len(), 6);
        for g in 2..=7 {
            let c = hyper(g);
            assert_eq!(c.sections(1).unwrap().len(), g);
            for l in 2..=6u32 {
                assert_eq!(c.sections(l).unwrap().len(), (2 * l as usize - 1) * (g - 1));
            }
        }
    }

    #[test]
    fn trigonal_section_counts() {
        assert_eq!(trigonal_theta_sections(&trig(1), 1).unwrap().len(), 2);
        assert_eq!(trigonal_theta_sections(&trig(1), 2).unwrap().len(), 4);
        let b = trigonal_theta_sections(&trig(2), 3).unwrap();
        assert_eq!(b.len(), 12);
        assert_eq!((b.stratum_len(0), b.stratum_len(1), b.stratum_len(2)), (7, 4, 1));
    }

    #[test]
    fn mult_codim_examples() {
        let h3 = OracleCurve::Hyperelliptic(hyper(3));
        assert_eq!(oracle_mult_codim(&h3, 2, 2).unwrap(), 1);
        assert_eq!(oracle_mult_codim(&OracleCurve::Trigonal(trig(1)), 1, 1).unwrap(), 1);
        assert_eq!(oracle_mult_codim(&OracleCurve::Trigonal(trig(2)), 2, 1).unwrap(), 1);
        assert!(oracle_mult_codim(&h3, 0, 2).is_err());
        let h4 = OracleCurve::Hyperelliptic(hyper(4));
        assert!(oracle_mult_codim(&h4, 1, 1).is_err());
    }

    #[test]
    fn pushforward_examples() {
        let split = |c: OracleCurve| oracle_pushforward_split(&c).unwrap().twists().to_vec();
        assert_eq!(split(OracleCurve::Hyperelliptic(hyper(3))), vec![-4]);
        assert_eq!(split(OracleCurve::Trigonal(trig(1))), vec![-2, -4]);
        assert_eq!(split(OracleCurve::Trigonal(trig(3))), vec![-4, -8]);
    }

    #[test]
    fn theta_square_examples() {
        assert!(hyper(3).theta_square_check().unwrap());
        assert!(theta_square_check(&trig(1)).unwrap());
        for c in trigonal_fixtures(2).unwrap() {
            assert!(theta_square_check(&c).unwrap());
        }
        assert!(hyper(4).theta_square_check().is_err());
    }

    #[test]
    fn canonical_profiles() {
        let p = |c: OracleCurve| canonical_profile_bruteforce(&c).unwrap();
        assert_eq!(p(OracleCurve::Hyperelliptic(hyper(2))), GeneratorProfile::from_pairs(&[(3, 1)]));
        assert_eq!(p(OracleCurve::Hyperelliptic(hyper(4))), GeneratorProfile::from_pairs(&[(2, 2)]));
        assert!(p(OracleCurve::Trigonal(trig(1))).is_trivial());
    }

    #[test]
    fn power_series_inverts() {
        // (1 + t)^(-1/2) squared times (1 + t) is 1
        let g = vec![int(1), int(1)];
        let p = power_series(&g, &Rational::new((-1).into(), 2.into()), 6);
        let sq = (0..6)
            .map(|k| (0..=k).map(|i| &p[i] * &p[k - i]).sum::<Rational>())
            .collect::<Vec<_>>();
        let prod: Vec<Rational> = (0..6)
            .map(|k| &sq[k] + if k > 0 { sq[k - 1].clone() } else { Rational::zero() })
            .collect();
        assert_eq!(prod[0], int(1));
        assert!(prod[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn fixtures_are_squarefree() {
        for d in [6, 8, 9, 10, 12, 14, 16] {
            for f in fixture_polys(d) {
                assert!(f.is_squarefree());
                assert_eq!(f.degree(), Some(d));
            }
        }
    }
}
