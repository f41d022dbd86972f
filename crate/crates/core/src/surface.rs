//! Divisor classes and line-bundle cohomology on Hirzebruch surfaces and on
//! `P^1 x P^1`, and towers of double covers branched along members of `|2L|`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ring::{surface_canonical_profile, GeneratorProfile};

/// A rational ruled surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuledSurface {
    /// `F_e` with minimal section `C0`, `C0^2 = -e`, and fibre `f`.
    Hirzebruch(u32),
    /// `P^1 x P^1` with the two rulings `f` and `f'`.
    P1xP1,
}

impl RuledSurface {
    pub fn class(self, a: i64, b: i64) -> DivisorClass {
        DivisorClass { surface: self, a, b }
    }

    pub fn zero(self) -> DivisorClass {
        self.class(0, 0)
    }

    pub fn canonical_class(self) -> DivisorClass {
        match self {
            Self::Hirzebruch(e) => self.class(-2, -(e as i64) - 2),
            Self::P1xP1 => self.class(-2, -2),
        }
    }
}

impl fmt::Display for RuledSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Hirzebruch(e) => write!(f, "F{e}"),
            Self::P1xP1 => write!(f, "P1xP1"),
        }
    }
}

/// `a C0 + b f` on `F_e`, or `a f + b f'` on `P^1 x P^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub surface: RuledSurface,
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    fn same_surface(&self, other: &Self) -> Result<()> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_surface(other)?;
        Ok(self.surface.class(self.a + other.a, self.b + other.b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.surface.class(-self.a, -self.b)
    }

    pub fn scale(&self, k: i64) -> Self {
        self.surface.class(k * self.a, k * self.b)
    }

    pub fn intersect(&self, other: &Self) -> Result<i64> {
        intersect(self, other)
    }

    pub fn self_intersection(&self) -> i64 {
        intersect(self, self).expect("same surface")
    }

    pub fn h0(&self) -> usize {
        h0_raw(self)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = match self.surface {
            RuledSurface::Hirzebruch(_) => ("C0", "f"),
            RuledSurface::P1xP1 => ("f", "f'"),
        };
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}{x}"),
            (0, b) => write!(f, "{b}{y}"),
            (a, b) if b < 0 => write!(f, "{a}{x} - {}{y}", -b),
            (a, b) => write!(f, "{a}{x} + {b}{y}"),
        }
    }
}

/// `C0^2 = -e`, `C0 f = 1`, `f^2 = 0` on `F_e`; `f f' = 1`, `f^2 = f'^2 = 0`
/// on `P^1 x P^1`.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
    d1.same_surface(d2)?;
    Ok(match d1.surface {
        RuledSurface::Hirzebruch(e) => -(e as i64) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b,
        RuledSurface::P1xP1 => d1.a * d2.b + d2.a * d1.b,
    })
}

pub fn canonical_class(s: RuledSurface) -> DivisorClass {
    s.canonical_class()
}

/// `h^0` by pushing forward to the base: `p_* O(a C0 + b f) =
/// sum_(k=0..a) O(b - k e)` on `F_e`, and Kunneth on `P^1 x P^1`.
fn h0_raw(d: &DivisorClass) -> usize {
    let line = |k: i64| (k + 1).max(0) as usize;
    match d.surface {
        RuledSurface::Hirzebruch(e) => {
            if d.a < 0 {
                return 0;
            }
            (0..=d.a).map(|k| line(d.b - k * e as i64)).sum()
        }
        RuledSurface::P1xP1 => line(d.a) * line(d.b),
    }
}

/// Riemann-Roch: `chi(D) = 1 + D (D - K) / 2`.
pub fn euler_characteristic(d: &DivisorClass) -> i64 {
    let k = d.surface.canonical_class();
    1 + intersect(d, &d.sub(&k).expect("same surface")).expect("same surface") / 2
}

/// `(h^0, h^1, h^2)`: `h^0` by pushforward, `h^2(D) = h^0(K - D)` by Serre
/// duality, and `h^1` from Riemann-Roch.
pub fn cohomology(d: &DivisorClass) -> (usize, usize, usize) {
    let h0 = h0_raw(d);
    let h2 = h0_raw(&d.surface.canonical_class().sub(d).expect("same surface"));
    let h1 = h0 as i64 + h2 as i64 - euler_characteristic(d);
    debug_assert!(h1 >= 0);
    (h0, h1 as usize, h2)
}

/// Numerical smoothability of a general member of `|D|`.
///
/// The base curve `C0` (on `F_e`, `e > 0`) is split off while `D C0 < 0`;
/// what remains moves in a base-point-free system when `a >= 0` and
/// `b >= a e`. A general member is smooth when the fixed part is empty, or is
/// `C0` once and the moving part does not meet it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchCheck {
    pub class: DivisorClass,
    pub effective: bool,
    pub fixed_c0: i64,
    pub moving: DivisorClass,
    pub moving_base_point_free: bool,
    pub smooth_member: bool,
}

pub fn branch_check(d: &DivisorClass) -> BranchCheck {
    let effective = h0_raw(d) > 0;
    let mut moving = *d;
    let mut fixed_c0 = 0;
    let bpf = match d.surface {
        RuledSurface::Hirzebruch(e) => {
            let c0 = d.surface.class(1, 0);
            if e > 0 {
                while moving.a > 0 && intersect(&moving, &c0).unwrap() < 0 {
                    moving = moving.sub(&c0).unwrap();
                    fixed_c0 += 1;
                }
            }
            moving.a >= 0 && moving.b >= moving.a * e as i64
        }
        RuledSurface::P1xP1 => d.a >= 0 && d.b >= 0,
    };
    let disjoint = fixed_c0 == 0
        || (fixed_c0 == 1 && intersect(&moving, &d.surface.class(1, 0)).unwrap() == 0);
    BranchCheck {
        class: *d,
        effective,
        fixed_c0,
        moving,
        moving_base_point_free: bpf,
        smooth_member: effective && bpf && disjoint,
    }
}

/// Two iterated double covers `X -> X' -> Y`: `X'` branched along
/// `D1 in |2 L1|`, `X` along the pullback of `D2 in |2 L2|`, so that
/// `phi_* O_X = O + O(-L1) + O(-L2) + O(-L1 - L2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleCoverTower {
    pub base: RuledSurface,
    pub l1: DivisorClass,
    pub l2: DivisorClass,
}

impl DoubleCoverTower {
    pub fn new(l1: DivisorClass, l2: DivisorClass) -> Result<Self> {
        l1.same_surface(&l2)?;
        Ok(Self { base: l1.surface, l1, l2 })
    }
}

pub fn tower_pushforward(t: &DoubleCoverTower) -> Vec<DivisorClass> {
    let both = t.l1.add(&t.l2).expect("same surface");
    vec![t.base.zero(), t.l1.neg(), t.l2.neg(), both.neg()]
}

/// The class `K_Y + L1 + L2` whose pullback is `K_X`.
pub fn tower_canonical(t: &DoubleCoverTower) -> DivisorClass {
    let k = t.base.canonical_class();
    k.add(&t.l1).and_then(|x| x.add(&t.l2)).expect("same surface")
}

/// `h^0(K_X) = sum_S h^0(K_Y + L1 + L2 + S)` over the pushforward summands.
#[allow(non_snake_case)]
pub fn tower_h0K(t: &DoubleCoverTower) -> usize {
    let k = tower_canonical(t);
    tower_pushforward(t).iter().map(|s| h0_raw(&k.add(s).expect("same surface"))).sum()
}

/// `h^1(O_X) = sum_S h^1(S) = 0`.
pub fn tower_regular(t: &DoubleCoverTower) -> bool {
    tower_pushforward(t).iter().all(|s| cohomology(s).1 == 0)
}

/// Outcome of checking that a tower is a canonical cover of a surface of
/// minimal degree embedded by `hyperplane`. Failures are recorded, not
/// raised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCoverReport {
    pub k_class_ok: bool,
    pub regular: bool,
    pub h0_k: usize,
    pub h0_hyperplane: usize,
    pub cover_degree: usize,
    pub target_degree: i64,
    pub minimal_degree: bool,
    pub predicted_profile: Option<GeneratorProfile>,
    pub branches: [BranchCheck; 2],
    pub image_is_cone: bool,
    pub assumptions: Vec<String>,
}

impl CanonicalCoverReport {
    pub fn branches_ok(&self) -> bool {
        self.branches.iter().all(|b| b.smooth_member)
    }

    pub fn passes(&self) -> bool {
        self.k_class_ok
            && self.regular
            && self.h0_k == self.h0_hyperplane
            && self.cover_degree == 4
            && self.minimal_degree
            && self.branches_ok()
    }
}

pub fn validate_canonical_cover(
    t: &DoubleCoverTower,
    hyperplane: &DivisorClass,
) -> Result<CanonicalCoverReport> {
    t.l1.same_surface(hyperplane)?;
    let target_degree = hyperplane.self_intersection();
    let h0_hyperplane = h0_raw(hyperplane);
    let predicted_profile = if target_degree >= 1 {
        Some(surface_canonical_profile(4, target_degree)?)
    } else {
        None
    };
    let image_is_cone = match t.base {
        RuledSurface::Hirzebruch(e) if e > 0 => {
            intersect(hyperplane, &t.base.class(1, 0))? == 0
        }
        _ => false,
    };
    Ok(CanonicalCoverReport {
        k_class_ok: tower_canonical(t) == *hyperplane,
        regular: tower_regular(t),
        h0_k: tower_h0K(t),
        h0_hyperplane,
        cover_degree: 4,
        target_degree,
        minimal_degree: target_degree >= 1 && target_degree == h0_hyperplane as i64 - 2,
        predicted_profile,
        branches: [branch_check(&t.l1.scale(2)), branch_check(&t.l2.scale(2))],
        image_is_cone,
        assumptions: vec![
            "general members of |2L1| and |2L2| are smooth and meet transversally (Bertini)".into(),
            "the hyperplane class embeds the base as a surface of minimal degree".into(),
        ],
    })
}

/// Parity constraint on a generically finite canonical map of degree `n`
/// onto a smooth scroll embedded by `hyperplane`. For a ruling `F` with
/// `F . H = 1`, adjunction on `X` makes `phi^*F (K_X + phi^*F) =
/// n (F . H + F^2)` even. Returns `true` when degree `n` is obstructed.
pub fn parity_obstruction(hyperplane: &DivisorClass, n: u32) -> Result<bool> {
    let s = hyperplane.surface;
    let rulings: &[DivisorClass] = match s {
        RuledSurface::Hirzebruch(_) => &[s.class(0, 1)],
        RuledSurface::P1xP1 => &[s.class(1, 0), s.class(0, 1)],
    };
    let ruling = rulings
        .iter()
        .find(|f| intersect(f, hyperplane).unwrap() == 1)
        .ok_or_else(|| {
            Error::InvalidParameter(alloc::format!("{hyperplane} is not of scroll type C + m f"))
        })?;
    let pairing = n as i64 * (intersect(ruling, hyperplane)? + ruling.self_intersection());
    Ok(pairing % 2 != 0)
}

/// A surface of minimal degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinimalSurface {
    Plane,
    Veronese,
    /// Smooth scroll `S(a, b)`, `1 <= a <= b`.
    Scroll { a: u32, b: u32 },
    /// Cone over the rational normal curve of degree `r`, i.e. `S(0, r)`.
    Cone { r: u32 },
}

impl MinimalSurface {
    pub fn degree(&self) -> u32 {
        match *self {
            Self::Plane => 1,
            Self::Veronese => 4,
            Self::Scroll { a, b } => a + b,
            Self::Cone { r } => r,
        }
    }

    /// Ruled model with the hyperplane class: `F_(b-a)` with `C0 + b f`; for
    /// a cone, `F_r` with `C0 + r f` contracting `C0`.
    pub fn ruled_model(&self) -> Option<DivisorClass> {
        match *self {
            Self::Scroll { a, b } => Some(RuledSurface::Hirzebruch(b - a).class(1, b as i64)),
            Self::Cone { r } => Some(RuledSurface::Hirzebruch(r).class(1, r as i64)),
            _ => None,
        }
    }
}

impl fmt::Display for MinimalSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Plane => write!(f, "P2"),
            Self::Veronese => write!(f, "Veronese"),
            Self::Scroll { a, b } => write!(f, "S({a},{b})"),
            Self::Cone { r } => write!(f, "S(0,{r}) cone"),
        }
    }
}

pub fn minimal_degree_catalog(r: u32) -> Result<Vec<MinimalSurface>> {
    match r {
        0 => Err(Error::InvalidParameter("degree must be >= 1".into())),
        1 => Ok(vec![MinimalSurface::Plane]),
        _ => {
            let mut out: Vec<_> =
                (1..=r / 2).map(|a| MinimalSurface::Scroll { a, b: r - a }).collect();
            out.push(MinimalSurface::Cone { r });
            if r == 4 {
                out.push(MinimalSurface::Veronese);
            }
            Ok(out)
        }
    }
}

/// Canonical cover data `(a1, a2, b1, b2)` on `P^1 x P^1` with
/// `L1 = a1 f + b1 f'`, `L2 = a2 f + b2 f'`, for the embedding by `f + m f'`
/// (`swap = false`) or `m f + f'` (`swap = true`), both branch options.
pub fn quadric_tower_options(m: i64, swap: bool) -> [(DoubleCoverTower, DivisorClass); 2] {
    let s = RuledSurface::P1xP1;
    let opts = if swap {
        [(m + 1, 1, 1, 2), (1, m + 1, 2, 1)]
    } else {
        [(1, 2, m + 1, 1), (2, 1, 1, m + 1)]
    };
    let h = if swap { s.class(m, 1) } else { s.class(1, m) };
    opts.map(|(a1, a2, b1, b2)| {
        (DoubleCoverTower::new(s.class(a1, b1), s.class(a2, b2)).unwrap(), h)
    })
}

/// Canonical cover data on `F_1` embedded by `C0 + m f`, both options.
pub fn f1_tower_options(m: i64) -> [(DoubleCoverTower, DivisorClass); 2] {
    let s = RuledSurface::Hirzebruch(1);
    let h = s.class(1, m);
    [(1, 2, m + 1, 2), (2, 1, 2, m + 1)].map(|(a1, a2, b1, b2)| {
        (DoubleCoverTower::new(s.class(a1, b1), s.class(a2, b2)).unwrap(), h)
    })
}

/// The tower on `F_2` with `L1 = C0 + 3f`, `L2 = 2C0 + 3f`, mapping 4:1 onto
/// the quadric cone.
pub fn f2_cone_tower() -> (DoubleCoverTower, DivisorClass) {
    let s = RuledSurface::Hirzebruch(2);
    (DoubleCoverTower::new(s.class(1, 3), s.class(2, 3)).unwrap(), s.class(1, 2))
}
