//! Classification of radial points and closed-form smoothness verdicts.
//!
//! A restricted root annihilates `Z` when its value there is a multiple of
//! `pi`. The annihilator set determines the double-coset dimension
//! (the sum of multiplicities of the non-annihilating roots) and thereby
//! whether convolution products of the corresponding orbital measures have
//! integrable or square-integrable densities. Every verdict is computed by
//! two independent routes — a case analysis on the space type and the
//! (strict) dimension-sum inequality — and the two are compared on every
//! call; a mismatch is reported as an internal error rather than silently
//! preferring one route.

use serde::Serialize;

use crate::catalog::{RootKind, SpaceFamily, SymmetricSpace};
use crate::error::{Error, Result};

/// How a radial point sits relative to the root lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrbitKind {
    /// All positive restricted roots annihilate: the point lies in the
    /// normaliser of `K`; its orbital measure is atomic.
    Normalizer,
    /// No annihilating root: maximal double-coset dimension.
    Regular,
    /// Only `2*alpha` annihilates (two-root spaces, `t = pi/2 mod pi`):
    /// continuous but non-regular orbital measure.
    ContinuousNonRegular,
}

/// Which positive restricted roots annihilate the point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Annihilators {
    pub alpha: bool,
    pub two_alpha: bool,
}

/// Classification of a point: kind, annihilator set and `dim KzK`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    pub kind: OrbitKind,
    pub annihilators: Annihilators,
    pub coset_dim: u32,
}

impl OrbitClass {
    pub fn is_continuous(&self) -> bool {
        self.kind != OrbitKind::Normalizer
    }
}

/// Default tolerance for deciding `t = 0 mod pi` on float input.
/// Classification of floats is inherently discontinuous at the lattice
/// points; exact rational multiples of `pi` classify exactly via
/// [`classify_exact_pi`].
pub const DEFAULT_EPS: f64 = 1e-9;

fn distance_to_pi_lattice(t: f64) -> f64 {
    let r = t.rem_euclid(std::f64::consts::PI);
    r.min(std::f64::consts::PI - r)
}

fn class_from_annihilators(space: &SymmetricSpace, alpha: bool, two_alpha: bool) -> OrbitClass {
    // alpha = 0 mod pi forces 2*alpha = 0 mod 2pi, hence annihilation of both.
    let two_alpha = match space.root_kind {
        RootKind::A1 => false,
        RootKind::BC1 => two_alpha || alpha,
    };
    let (kind, coset_dim) = if alpha {
        (OrbitKind::Normalizer, 0)
    } else if two_alpha {
        (OrbitKind::ContinuousNonRegular, space.m_alpha)
    } else {
        (OrbitKind::Regular, space.m_alpha + space.m_2alpha)
    };
    OrbitClass {
        kind,
        annihilators: Annihilators { alpha, two_alpha },
        coset_dim,
    }
}

/// Classify a float radial coordinate: a root `c*alpha` annihilates when
/// `dist(c*t, pi*Z) <= eps`. `eps` must lie in `(0, 1e-3]`.
pub fn classify_point(space: &SymmetricSpace, t: f64, eps: f64) -> Result<OrbitClass> {
    if !(eps > 0.0 && eps <= 1e-3) {
        return Err(Error::InvalidParameter(format!(
            "classification tolerance must lie in (0, 1e-3], got {eps}"
        )));
    }
    let alpha = distance_to_pi_lattice(t) <= eps;
    let two_alpha = distance_to_pi_lattice(2.0 * t) <= eps;
    Ok(class_from_annihilators(space, alpha, two_alpha))
}

/// Classify `t = (p/q) * pi` exactly: `alpha` annihilates iff `q | p`,
/// `2*alpha` iff `q | 2p`.
pub fn classify_exact_pi(space: &SymmetricSpace, p: i64, q: i64) -> Result<OrbitClass> {
    if q == 0 {
        return Err(Error::InvalidParameter(
            "zero denominator in rational multiple of pi".into(),
        ));
    }
    let alpha = p % q == 0;
    let two_alpha = (2 * p) % q == 0;
    Ok(class_from_annihilators(space, alpha, two_alpha))
}

/// Outcome of the case analysis, naming the rule that decided `l2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionCase {
    /// Some factor is an atomic measure: the product stays singular.
    SingularFactor,
    /// The two-sphere base case `m_alpha = 1`: no pair of orbital measures
    /// has a square-integrable convolution.
    Su2NeverSquare,
    /// Spaces with `m_alpha - m_2alpha = 1` and two roots: square-integrable
    /// exactly when at least one factor is regular.
    CriticalPairNeedsRegularFactor,
    /// Every other space: both factors continuous suffices.
    GenericContinuousPair,
    /// Triple products: all factors continuous suffices on every space.
    TripleAllContinuous,
}

impl DecisionCase {
    pub fn label(&self) -> &'static str {
        match self {
            DecisionCase::SingularFactor => "singular factor",
            DecisionCase::Su2NeverSquare => "SU(2)/SO(2): no square-integrable pairs",
            DecisionCase::CriticalPairNeedsRegularFactor => {
                "minimal multiplicity gap: needs a regular factor"
            }
            DecisionCase::GenericContinuousPair => "continuous pair on a space with gap > 1",
            DecisionCase::TripleAllContinuous => "triple of continuous factors",
        }
    }
}

/// Record of the case-analysis route.
#[derive(Debug, Clone, Serialize)]
pub struct CaseRoute {
    pub l1: bool,
    pub l2: bool,
    pub case: DecisionCase,
}

/// Record of the dimension-count route.
#[derive(Debug, Clone, Serialize)]
pub struct DimensionRoute {
    pub l1: bool,
    pub l2: bool,
    pub coset_dims: Vec<u32>,
    pub dim_sum: u32,
    pub dim_gk: u32,
}

/// Joint verdict: `l1` — the convolution has an integrable density;
/// `l2` — a square-integrable one. Both routes are retained.
#[derive(Debug, Clone, Serialize)]
pub struct SmoothnessVerdict {
    pub l1: bool,
    pub l2: bool,
    pub route_case_analysis: CaseRoute,
    pub route_dimension: DimensionRoute,
    pub classes: Vec<OrbitClass>,
}

fn is_su2(space: &SymmetricSpace) -> bool {
    space.family == SpaceFamily::AI
}

/// Verdict for a pair of already-classified points.
pub fn verdict_for_pair(
    space: &SymmetricSpace,
    c1: OrbitClass,
    c2: OrbitClass,
) -> Result<SmoothnessVerdict> {
    let both_continuous = c1.is_continuous() && c2.is_continuous();
    let any_regular = c1.kind == OrbitKind::Regular || c2.kind == OrbitKind::Regular;

    let case_route = if !both_continuous {
        CaseRoute {
            l1: false,
            l2: false,
            case: DecisionCase::SingularFactor,
        }
    } else if is_su2(space) {
        CaseRoute {
            l1: true,
            l2: false,
            case: DecisionCase::Su2NeverSquare,
        }
    } else if space.m_alpha == space.m_2alpha + 1 {
        CaseRoute {
            l1: true,
            l2: any_regular,
            case: DecisionCase::CriticalPairNeedsRegularFactor,
        }
    } else {
        CaseRoute {
            l1: true,
            l2: true,
            case: DecisionCase::GenericContinuousPair,
        }
    };

    let dim_sum = c1.coset_dim + c2.coset_dim;
    let dim_route = DimensionRoute {
        l1: dim_sum >= space.dim_gk,
        l2: dim_sum > space.dim_gk,
        coset_dims: vec![c1.coset_dim, c2.coset_dim],
        dim_sum,
        dim_gk: space.dim_gk,
    };

    if case_route.l1 != dim_route.l1 || case_route.l2 != dim_route.l2 {
        return Err(Error::Inconsistency(format!(
            "case-analysis route (l1={}, l2={}) disagrees with dimension route (l1={}, l2={}) on {} \
             for coset dims {:?}",
            case_route.l1, case_route.l2, dim_route.l1, dim_route.l2, space, dim_route.coset_dims
        )));
    }

    Ok(SmoothnessVerdict {
        l1: case_route.l1,
        l2: case_route.l2,
        route_case_analysis: case_route,
        route_dimension: dim_route,
        classes: vec![c1, c2],
    })
}

/// Closed-form verdict for a pair of float radial coordinates.
///
/// ```
/// use rankone::catalog::{SpaceFamily, SymmetricSpace};
/// use rankone::orbit::decide_pair;
/// use std::f64::consts::FRAC_PI_2;
///
/// // on SU(2)/SO(2) a pair of regular points convolves to an integrable
/// // density that is never square-integrable
/// let su2 = SymmetricSpace::new(SpaceFamily::AI).unwrap();
/// let v = decide_pair(&su2, FRAC_PI_2, FRAC_PI_2).unwrap();
/// assert!(v.l1 && !v.l2);
///
/// // an atomic factor keeps the product singular
/// let v = decide_pair(&su2, 0.0, FRAC_PI_2).unwrap();
/// assert!(!v.l1);
/// ```
pub fn decide_pair(space: &SymmetricSpace, t1: f64, t2: f64) -> Result<SmoothnessVerdict> {
    let c1 = classify_point(space, t1, DEFAULT_EPS)?;
    let c2 = classify_point(space, t2, DEFAULT_EPS)?;
    verdict_for_pair(space, c1, c2)
}

/// Verdict for a triple of already-classified points: square-integrable
/// (hence integrable) exactly when every factor is continuous.
pub fn verdict_for_triple(space: &SymmetricSpace, classes: [OrbitClass; 3]) -> SmoothnessVerdict {
    let all_continuous = classes.iter().all(|c| c.is_continuous());
    let case = if all_continuous {
        DecisionCase::TripleAllContinuous
    } else {
        DecisionCase::SingularFactor
    };
    let coset_dims: Vec<u32> = classes.iter().map(|c| c.coset_dim).collect();
    let dim_sum = coset_dims.iter().sum();
    SmoothnessVerdict {
        l1: all_continuous,
        l2: all_continuous,
        route_case_analysis: CaseRoute {
            l1: all_continuous,
            l2: all_continuous,
            case,
        },
        route_dimension: DimensionRoute {
            l1: all_continuous,
            l2: all_continuous,
            coset_dims,
            dim_sum,
            dim_gk: space.dim_gk,
        },
        classes: classes.to_vec(),
    }
}

/// Closed-form verdict for a triple of float radial coordinates.
pub fn decide_triple(
    space: &SymmetricSpace,
    t1: f64,
    t2: f64,
    t3: f64,
) -> Result<SmoothnessVerdict> {
    let classes = [
        classify_point(space, t1, DEFAULT_EPS)?,
        classify_point(space, t2, DEFAULT_EPS)?,
        classify_point(space, t3, DEFAULT_EPS)?,
    ];
    Ok(verdict_for_triple(space, classes))
}

/// Whether integrable products on this space are automatically
/// square-integrable: holds exactly when `m_alpha - m_2alpha > 1`.
pub fn dichotomy_holds(space: &SymmetricSpace) -> bool {
    space.m_alpha > space.m_2alpha + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::list_catalog;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn space(f: SpaceFamily) -> SymmetricSpace {
        SymmetricSpace::new(f).unwrap()
    }

    #[test]
    fn classify_examples() {
        let s = space(SpaceFamily::AI);
        let c = classify_point(&s, PI, DEFAULT_EPS).unwrap();
        assert_eq!(c.kind, OrbitKind::Normalizer);
        assert_eq!(c.coset_dim, 0);

        let s = space(SpaceFamily::AIII(2));
        let c = classify_point(&s, FRAC_PI_2, DEFAULT_EPS).unwrap();
        assert_eq!(c.kind, OrbitKind::ContinuousNonRegular);
        assert_eq!(c.coset_dim, 2);

        let s = space(SpaceFamily::FII);
        let c = classify_point(&s, 0.7, DEFAULT_EPS).unwrap();
        assert_eq!(c.kind, OrbitKind::Regular);
        assert_eq!(c.coset_dim, 15);
    }

    #[test]
    fn classify_rejects_bad_eps() {
        let s = space(SpaceFamily::AI);
        assert!(classify_point(&s, 0.3, 0.0).is_err());
        assert!(classify_point(&s, 0.3, 0.01).is_err());
    }

    #[test]
    fn exact_pi_classification() {
        let s = space(SpaceFamily::AIII(2));
        assert_eq!(
            classify_exact_pi(&s, 1, 2).unwrap().kind,
            OrbitKind::ContinuousNonRegular
        );
        assert_eq!(
            classify_exact_pi(&s, 1, 1).unwrap().kind,
            OrbitKind::Normalizer
        );
        assert_eq!(
            classify_exact_pi(&s, 2, 1).unwrap().kind,
            OrbitKind::Normalizer
        );
        assert_eq!(
            classify_exact_pi(&s, 1, 3).unwrap().kind,
            OrbitKind::Regular
        );
        assert_eq!(
            classify_exact_pi(&s, 3, 2).unwrap().kind,
            OrbitKind::ContinuousNonRegular
        );
        let s = space(SpaceFamily::AII);
        assert_eq!(
            classify_exact_pi(&s, 1, 2).unwrap().kind,
            OrbitKind::Regular
        );
        assert!(classify_exact_pi(&s, 1, 0).is_err());
    }

    #[test]
    fn decide_pair_examples() {
        let s = space(SpaceFamily::AI);
        let v = decide_pair(&s, FRAC_PI_2, FRAC_PI_2).unwrap();
        assert!(v.l1 && !v.l2);
        assert_eq!(v.route_dimension.dim_sum, 2);

        let s = space(SpaceFamily::AIII(2));
        let v = decide_pair(&s, 0.7, FRAC_PI_2).unwrap();
        assert!(v.l2);
        assert_eq!(v.route_dimension.dim_sum, 5);
        let v = decide_pair(&s, 0.7, 1.1).unwrap();
        assert!(v.l2);
        let v = decide_pair(&s, FRAC_PI_2, FRAC_PI_2).unwrap();
        assert!(v.l1 && !v.l2);
        assert_eq!(
            v.route_case_analysis.case,
            DecisionCase::CriticalPairNeedsRegularFactor
        );

        for s in list_catalog(4).unwrap() {
            let v = decide_pair(&s, 0.0, 0.9).unwrap();
            assert!(!v.l1, "{s}");
            assert_eq!(v.route_case_analysis.case, DecisionCase::SingularFactor);
        }
    }

    #[test]
    fn decide_triple_examples() {
        let s = space(SpaceFamily::AI);
        let v = decide_triple(&s, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        assert!(v.l1 && v.l2);
        let s = space(SpaceFamily::FII);
        let v = decide_triple(&s, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        assert!(v.l2);
        let v = decide_triple(&s, 0.0, 0.9, 1.3).unwrap();
        assert!(!v.l1 && !v.l2);
    }

    #[test]
    fn dichotomy_examples() {
        assert!(!dichotomy_holds(&space(SpaceFamily::AI)));
        assert!(!dichotomy_holds(&space(SpaceFamily::AIII(2))));
        assert!(!dichotomy_holds(&space(SpaceFamily::CII(2))));
        assert!(!dichotomy_holds(&space(SpaceFamily::FII)));
        assert!(dichotomy_holds(&space(SpaceFamily::AII)));
        assert!(dichotomy_holds(&space(SpaceFamily::BII(5))));
        assert!(dichotomy_holds(&space(SpaceFamily::AIII(3))));
        let failing: Vec<String> = list_catalog(100)
            .unwrap()
            .iter()
            .filter(|s| !dichotomy_holds(s))
            .map(|s| s.family.to_string())
            .collect();
        assert_eq!(failing, ["AI", "AIII(2)", "CII(2)", "FII"]);
    }

    #[test]
    fn routes_agree_on_grid() {
        // 101-point grid over one period; every ordered pair, q <= 6
        for s in list_catalog(6).unwrap() {
            let grid: Vec<f64> = (0..=100).map(|k| k as f64 * PI / 100.0).collect();
            for &t1 in &grid {
                for &t2 in &grid {
                    // decide_pair returns Err when the two routes disagree
                    let v = decide_pair(&s, t1, t2).unwrap();
                    assert!(v.l1 || !v.l2);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn annihilators_invariant_under_reflection_and_shift(
            t in -10.0f64..10.0,
            idx in 0usize..8,
        ) {
            let spaces = list_catalog(4).unwrap();
            let s = &spaces[idx % spaces.len()];
            let base = classify_point(s, t, 1e-6).unwrap();
            // skip points within the tolerance collar where float shifts flip the call
            prop_assume!(distance_to_pi_lattice(t) > 1e-5
                && distance_to_pi_lattice(2.0 * t) > 1e-5);
            let refl = classify_point(s, -t, 1e-6).unwrap();
            let shift = classify_point(s, t + PI, 1e-6).unwrap();
            prop_assert_eq!(base.annihilators, refl.annihilators);
            prop_assert_eq!(base.annihilators, shift.annihilators);
        }

        #[test]
        fn l2_implies_l1(t1 in 0.0f64..4.0, t2 in 0.0f64..4.0, idx in 0usize..8) {
            let spaces = list_catalog(4).unwrap();
            let s = &spaces[idx % spaces.len()];
            let v = decide_pair(s, t1, t2).unwrap();
            prop_assert!(!v.l2 || v.l1);
            let w = decide_triple(s, t1, t2, 0.9).unwrap();
            prop_assert!(!w.l2 || w.l1);
            prop_assert_eq!(w.l2, w.classes.iter().all(|c| c.coset_dim > 0));
        }
    }
}
