//! The pushforward algebra `pi_* O_X = O + E` of a finite flat cover: the
//! splitting type of the trace-zero module `E`, the zero/nonzero/iso pattern
//! of the multiplication `E (x) E -> O + E`, and recovery of splitting types
//! from Hilbert functions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::sections::h0;

/// `O(a_1) + ... + O(a_k)` on `P^n`, twists kept in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitBundle {
    ambient: usize,
    twists: Vec<i64>,
}

impl SplitBundle {
    pub fn new(ambient: usize, mut twists: Vec<i64>) -> Self {
        twists.sort_unstable_by(|a, b| b.cmp(a));
        Self { ambient, twists }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn degree(&self) -> i64 {
        self.twists.iter().sum()
    }

    /// `h^0` of the bundle twisted by `O(k)`.
    pub fn h0(&self, k: i64) -> usize {
        self.twists.iter().map(|&a| h0(self.ambient, a + k)).sum()
    }

    /// `h^1` of the bundle twisted by `O(k)`; only meaningful on `P^1`.
    pub fn h1_on_line(&self, k: i64) -> usize {
        self.twists.iter().map(|&a| h0(1, -(a + k) - 2)).sum()
    }

    /// Twisted `h^0` over an inclusive window of `k`.
    pub fn hilbert_dims(&self, lo: i64, hi: i64) -> BTreeMap<i64, usize> {
        (lo..=hi).map(|k| (k, self.h0(k))).collect()
    }

    /// The same twists read on another projective space.
    pub fn on(&self, ambient: usize) -> Self {
        Self { ambient, twists: self.twists.clone() }
    }

    /// Adds `O` as a summand.
    pub fn with_trivial(&self) -> Self {
        let mut t = self.twists.clone();
        t.push(0);
        Self::new(self.ambient, t)
    }
}

impl fmt::Display for SplitBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.twists.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Where a product of two `E`-summands can land.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MuTarget {
    /// The `O` summand.
    Trivial,
    /// The `E`-summand with this index.
    Summand(usize),
}

impl fmt::Display for MuTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuTarget::Trivial => write!(f, "O"),
            MuTarget::Summand(k) => write!(f, "E{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MuMode {
    Zero,
    Nonzero,
    Iso,
}

/// Zero/nonzero/iso pattern of `E_i (x) E_j -> O + E`, stored on unordered
/// pairs so it is symmetric by construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MuProfile {
    entries: BTreeMap<(usize, usize), BTreeMap<MuTarget, MuMode>>,
}

impl MuProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, i: usize, j: usize, target: MuTarget, mode: MuMode) {
        let key = (i.min(j), i.max(j));
        let slot = self.entries.entry(key).or_default();
        if mode == MuMode::Zero {
            slot.remove(&target);
            if slot.is_empty() {
                self.entries.remove(&key);
            }
        } else {
            slot.insert(target, mode);
        }
    }

    pub fn get(&self, i: usize, j: usize, target: MuTarget) -> MuMode {
        self.entries
            .get(&(i.min(j), i.max(j)))
            .and_then(|m| m.get(&target))
            .copied()
            .unwrap_or(MuMode::Zero)
    }

    /// Nonzero entries as `(i, j, target, mode)` with `i <= j`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, MuTarget, MuMode)> + '_ {
        self.entries
            .iter()
            .flat_map(|(&(i, j), m)| m.iter().map(move |(&t, &mode)| (i, j, t, mode)))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `pi_* O_X = O + E` with `E` split and the multiplication pattern on `E`.
/// `target_twist` is the `r` with `theta = pi^* O(r)`, the polarization
/// used when grading section rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverAlgebra {
    degree: usize,
    target_twist: i64,
    bundle: SplitBundle,
    mu: MuProfile,
}

impl CoverAlgebra {
    /// Validates the rank, drops entries that cannot be nonzero for degree
    /// reasons (a map `O(a) (x) O(b) -> O(t)` vanishes when `a + b > t`), and
    /// rejects iso entries whose twists disagree.
    pub fn new(degree: usize, target_twist: i64, bundle: SplitBundle, mu: MuProfile) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidParameter(format!("cover degree {degree} < 2")));
        }
        if bundle.rank() + 1 != degree {
            return Err(Error::InvalidParameter(format!(
                "trace-zero module has rank {} but the cover has degree {degree}",
                bundle.rank()
            )));
        }
        let k = bundle.rank();
        let twist_of = |t: MuTarget| match t {
            MuTarget::Trivial => Some(0),
            MuTarget::Summand(s) => bundle.twists.get(s).copied(),
        };
        let mut clean = MuProfile::new();
        for (i, j, target, mode) in mu.iter() {
            let t = twist_of(target).filter(|_| j < k).ok_or_else(|| {
                Error::InvalidParameter(format!("mu entry ({i}, {j}) -> {target} out of range"))
            })?;
            let source = bundle.twists[i] + bundle.twists[j];
            if source > t {
                continue;
            }
            if mode == MuMode::Iso && source != t {
                return Err(Error::InvalidProfile { i, j, target: format!("{target}") });
            }
            clean.set(i, j, target, mode);
        }
        Ok(Self { degree, target_twist, bundle, mu: clean })
    }

    /// The algebra of a cover induced by a base-point-free theta-characteristic
    /// onto a rational normal curve of degree `r`, with the default
    /// multiplication pattern.
    pub fn theta(n: usize, r: i64) -> Result<Self> {
        Self::new(n, r, theta_splitting(n, r)?, generic_mu_profile(n))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn target_twist(&self) -> i64 {
        self.target_twist
    }

    pub fn bundle(&self) -> &SplitBundle {
        &self.bundle
    }

    pub fn mu(&self) -> &MuProfile {
        &self.mu
    }

    pub fn with_mu(&self, mu: MuProfile) -> Result<Self> {
        Self::new(self.degree, self.target_twist, self.bundle.clone(), mu)
    }

    /// Rank of `O + E_0 + ... + E_{k-2}` when it is closed under the
    /// multiplication, i.e. when no product of the first `k - 1` summands
    /// reaches the last one. `None` when the products do reach it or there is
    /// nothing to drop.
    pub fn proper_subalgebra_rank(&self) -> Option<usize> {
        let k = self.bundle.rank();
        if k < 2 {
            return None;
        }
        let last = MuTarget::Summand(k - 1);
        let reaches_last =
            (0..k - 1).any(|i| (i..k - 1).any(|j| self.mu.get(i, j, last) != MuMode::Zero));
        (!reaches_last).then_some(k)
    }

    /// For an integral cover, a free subalgebra of rank `m` forces `m | n`.
    pub fn check_integrality(&self) -> Result<()> {
        match self.proper_subalgebra_rank() {
            Some(m) if !self.degree.is_multiple_of(m) => Err(Error::Unsupported(format!(
                "closed subalgebra of rank {m} in an integral cover of degree {}",
                self.degree
            ))),
            _ => Ok(()),
        }
    }
}

/// Splitting type of the trace-zero module of a degree-`n` cover
/// `C -> P^1` induced by a complete base-point-free `theta` with
/// `theta^2 = K_C`, `theta = pi^* O(r)`.
///
/// Derived from cohomology on `P^1`: connectedness bounds every twist above,
/// `h^1(K_C) = 1` singles out exactly one summand, and
/// `h^0(theta) = h^1(theta) = r + 1` pins all other summands from both sides.
pub fn theta_splitting(n: usize, r: i64) -> Result<SplitBundle> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("cover degree {n} < 2")));
    }
    if r < 1 {
        return Err(Error::InvalidParameter(format!("target twist {r} < 1")));
    }
    let sec = |d: i64| h0(1, d);
    let h1 = |d: i64| h0(1, -d - 2);
    let target = sec(r);

    // h^0(O_C) = 1 and h^0(theta) = h^0(O(r)) leave no room for sections
    // of any summand of E twisted by 0 or by r.
    let upper = (0..).map(|s| -1 - s).find(|&a| sec(a) == 0 && sec(a + r) == 0).unwrap();

    // h^1(K_C) = 1 with K_C = pi^* O(2r): h^1(O(2r)) = 0, so exactly one
    // summand has h^1(O(a + 2r)) = 1 and the rest have none.
    let special = (0..).map(|s| upper - s).find(|&a| h1(a + 2 * r) == 1).unwrap();
    let others_min = (0..).map(|s| special + 1 + s).find(|&a| h1(a + 2 * r) == 0).unwrap();

    // h^1(theta) = r + 1: whatever the special summand contributes is taken
    // away from what the rest may contribute.
    let remaining = target
        .checked_sub(h1(special + r))
        .ok_or_else(|| Error::Unsupported(format!("h^1(theta) overshoots for n={n}, r={r}")))?;
    let mut others = Vec::new();
    if n > 2 {
        if remaining != 0 {
            return Err(Error::Unsupported(format!("other summands not pinned for n={n}, r={r}")));
        }
        let lower = (others_min..=upper).find(|&a| h1(a + r) == 0);
        match lower {
            Some(lo) if lo == upper => others.resize(n - 2, lo),
            _ => {
                return Err(Error::Unsupported(format!(
                    "twists not pinned for n={n}, r={r}"
                )))
            }
        }
    } else if remaining != 0 {
        return Err(Error::Unsupported(format!("h^1(theta) unmatched for n={n}, r={r}")));
    }
    others.push(special);
    let e = SplitBundle::new(1, others);

    let full = e.with_trivial();
    debug_assert_eq!(full.h0(0), 1);
    debug_assert_eq!(full.h0(r), r as usize + 1);
    debug_assert_eq!(full.h1_on_line(r), r as usize + 1);
    debug_assert_eq!(full.h1_on_line(2 * r), 1);
    Ok(e)
}

/// Default multiplication pattern on `E` for a degree-`n` cover with
/// `E = (n-2) O(-r-1) + O(-2r-2)`, summands indexed in that order.
///
/// For `n = 2` the cover is cyclic and `E (x) E` lands in `O` only. For
/// `n >= 3` the first two `O(-r-1)` factors multiply isomorphically onto
/// `O(-2r-2)`; otherwise `O + (n-2) O(-r-1)` would be a subalgebra of rank
/// `n - 1`. Every pair also pairs nontrivially into `O` through the trace form.
pub fn generic_mu_profile(n: usize) -> MuProfile {
    let mut mu = MuProfile::new();
    let k = n.saturating_sub(1);
    for i in 0..k {
        for j in i..k {
            mu.set(i, j, MuTarget::Trivial, MuMode::Nonzero);
        }
    }
    if n >= 3 {
        mu.set(0, 0, MuTarget::Summand(n - 2), MuMode::Iso);
    }
    mu
}

/// The `c` for which `{-c, -2c, ..., -(n-1)c}` equals the theta splitting,
/// if any.
pub fn cyclic_parameter(n: usize, r: i64) -> Result<Option<i64>> {
    let target = theta_splitting(n, r)?;
    let deepest = -target.twists().last().copied().unwrap_or(-1);
    Ok((1..=deepest).find(|&c| {
        SplitBundle::new(1, (1..n as i64).map(|j| -j * c).collect()) == target
    }))
}

/// Whether a totally cyclic pushforward `O + L^-1 + ... + L^(1-n)` is
/// compatible with the theta splitting.
pub fn cyclic_admissible(n: usize, r: i64) -> Result<bool> {
    Ok(cyclic_parameter(n, r)?.is_some())
}

/// Recovers the split bundle on `P^1` whose twisted `h^0` matches `dims` on a
/// contiguous window of `k`. The window has to start at a `k` where the
/// dimension is 0; a summand `O(a)` shows up as a unit jump in the second
/// difference at `k = -a - 1`, so only summands with `-a - 1 < k_max` are seen.
pub fn hilbert_fit(dims: &BTreeMap<i64, usize>) -> Result<SplitBundle> {
    let (&lo, &first) = dims.iter().next().ok_or(Error::Window)?;
    let (&hi, _) = dims.iter().next_back().unwrap();
    if hi - lo + 1 != dims.len() as i64 || first != 0 {
        return Err(Error::Window);
    }
    let at = |k: i64| -> i64 {
        if k < lo {
            0
        } else {
            dims[&k] as i64
        }
    };
    let mut twists = Vec::new();
    for k in lo..hi {
        let jump = at(k + 1) - 2 * at(k) + at(k - 1);
        if jump < 0 {
            return Err(Error::Inconsistent(k));
        }
        twists.extend(core::iter::repeat_n(-k - 1, jump as usize));
    }
    let fitted = SplitBundle::new(1, twists);
    if let Some(k) = (lo..=hi).find(|&k| fitted.h0(k) != dims[&k]) {
        return Err(Error::Inconsistent(k));
    }
    Ok(fitted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_splitting_examples() {
        assert_eq!(theta_splitting(2, 1).unwrap().twists(), &[-4]);
        assert_eq!(theta_splitting(3, 2).unwrap().twists(), &[-3, -6]);
        assert_eq!(theta_splitting(5, 1).unwrap().twists(), &[-2, -2, -2, -4]);
        assert!(theta_splitting(1, 1).is_err());
        assert!(theta_splitting(3, 0).is_err());
    }

    #[test]
    fn theta_splitting_shape() {
        for n in 2..=10 {
            for r in 1..=8 {
                let e = theta_splitting(n, r).unwrap();
                assert_eq!(e.rank(), n - 1);
                assert_eq!(e.degree(), -(n as i64 - 2) * (r + 1) - (2 * r + 2));
            }
        }
    }

    #[test]
    fn generic_profiles() {
        let p2 = generic_mu_profile(2);
        assert_eq!(p2.get(0, 0, MuTarget::Trivial), MuMode::Nonzero);
        assert!(p2.iter().all(|(_, _, t, _)| t == MuTarget::Trivial));

        let p3 = generic_mu_profile(3);
        assert_eq!(p3.get(0, 0, MuTarget::Summand(1)), MuMode::Iso);

        let p6 = generic_mu_profile(6);
        assert!(p6.iter().any(|(i, j, t, m)| i < 4 && j < 4 && t == MuTarget::Summand(4) && m == MuMode::Iso));
        for (i, j, t, m) in p6.iter() {
            assert_eq!(p6.get(j, i, t), m);
        }
    }

    #[test]
    fn degree_forcing_drops_impossible_entries() {
        // O(-2) (x) O(-2) -> O(-2) goes through a section of O(2): kept.
        let mut mu = generic_mu_profile(4);
        mu.set(0, 1, MuTarget::Summand(0), MuMode::Nonzero);
        let a = CoverAlgebra::new(4, 1, theta_splitting(4, 1).unwrap(), mu).unwrap();
        assert_eq!(a.mu().get(0, 1, MuTarget::Summand(0)), MuMode::Nonzero);

        // Twists [0, -4]: O (x) O -> O(-4) cannot be nonzero.
        let mut mu = MuProfile::new();
        mu.set(0, 0, MuTarget::Summand(1), MuMode::Nonzero);
        let b = CoverAlgebra::new(3, 1, SplitBundle::new(1, vec![0, -4]), mu).unwrap();
        assert!(b.mu().is_empty());
    }

    #[test]
    fn iso_needs_matching_twists() {
        let mut mu = MuProfile::new();
        mu.set(0, 0, MuTarget::Trivial, MuMode::Iso);
        assert!(matches!(
            CoverAlgebra::new(2, 1, SplitBundle::new(1, vec![-4]), mu),
            Err(Error::InvalidProfile { .. })
        ));
    }

    #[test]
    fn rank_mismatch_rejected() {
        assert!(CoverAlgebra::new(3, 1, SplitBundle::new(1, vec![-4]), MuProfile::new()).is_err());
    }

    #[test]
    fn integrality_contradiction_without_iso() {
        for n in 3..=7 {
            let a = CoverAlgebra::theta(n, 1).unwrap();
            assert!(a.check_integrality().is_ok());
            let mut mu = a.mu().clone();
            mu.set(0, 0, MuTarget::Summand(n - 2), MuMode::Zero);
            let b = a.with_mu(mu).unwrap();
            assert_eq!(b.proper_subalgebra_rank(), Some(n - 1));
            assert!(b.check_integrality().is_err());
        }
        assert!(CoverAlgebra::theta(2, 3).unwrap().check_integrality().is_ok());
    }

    #[test]
    fn cyclic_examples() {
        for r in 1..=5 {
            assert!(cyclic_admissible(2, r).unwrap());
        }
        assert_eq!(cyclic_parameter(3, 4).unwrap(), Some(5));
        assert!(!cyclic_admissible(4, 1).unwrap());
    }

    #[test]
    fn hilbert_fit_examples() {
        // O + O(-4) over k = -1..4: max(k+1,0) + max(k-3,0)
        let dims: BTreeMap<i64, usize> =
            [(-1, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 6)].into_iter().collect();
        assert_eq!(hilbert_fit(&dims).unwrap().twists(), &[0, -4]);

        let trivial: BTreeMap<i64, usize> = (-1..=5).map(|k| (k, (k + 1) as usize)).collect();
        assert_eq!(hilbert_fit(&trivial).unwrap().twists(), &[0]);
    }

    #[test]
    fn hilbert_fit_errors() {
        let gap: BTreeMap<i64, usize> = [(0, 0), (2, 1)].into_iter().collect();
        assert_eq!(hilbert_fit(&gap), Err(Error::Window));
        let nonzero_start: BTreeMap<i64, usize> = [(0, 1), (1, 2)].into_iter().collect();
        assert_eq!(hilbert_fit(&nonzero_start), Err(Error::Window));
        // concave: 0, 2, 3 has negative second difference at k = 1
        let concave: BTreeMap<i64, usize> = [(0, 0), (1, 2), (2, 3)].into_iter().collect();
        assert_eq!(hilbert_fit(&concave), Err(Error::Inconsistent(1)));
    }
}
