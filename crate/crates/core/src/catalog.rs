//! Catalog of the rank-one compact symmetric spaces.
//!
//! Each entry records the family tag, the multiplicities `m_alpha` and
//! `m_2alpha` of the restricted roots, the restricted root-system kind
//! (`A1` when only `alpha` occurs, `BC1` when `2*alpha` occurs as well)
//! and the dimension of `G/K`. Everything downstream — Jacobi exponents,
//! spherical-representation dimensions, double-coset dimensions — is a
//! function of these few integers, so the table is hard-coded rather than
//! derived from structure theory.
//!
//! The one rank-one space of type DIII is isomorphic to the AIII entry
//! with `q = 3` and is not listed separately.

use serde::Serialize;

use crate::error::{Error, Result};

/// Family tag of a rank-one compact symmetric space. The three infinite
/// families carry their integer parameter `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceFamily {
    /// SU(2)/SO(2).
    AI,
    /// SU(4)/Sp(4).
    AII,
    /// SU(q+1)/S(U(q)×U(1)), q > 1.
    AIII(u32),
    /// SO(q+1)/S(O(q)×O(1)), q > 2. `q = 2` is rejected: that quotient is
    /// isomorphic to SU(2)/SO(2) and is catalogued as AI.
    BII(u32),
    /// Sp(2q+2)/(Sp(2q)×Sp(2)), q > 1.
    CII(u32),
    /// F4/SO(9).
    FII,
}

impl SpaceFamily {
    /// Short tag without the parameter, e.g. `"AIII"`.
    pub fn tag(&self) -> &'static str {
        match self {
            SpaceFamily::AI => "AI",
            SpaceFamily::AII => "AII",
            SpaceFamily::AIII(_) => "AIII",
            SpaceFamily::BII(_) => "BII",
            SpaceFamily::CII(_) => "CII",
            SpaceFamily::FII => "FII",
        }
    }

    /// The parameter `q` for the parametrised families.
    pub fn q(&self) -> Option<u32> {
        match self {
            SpaceFamily::AIII(q) | SpaceFamily::BII(q) | SpaceFamily::CII(q) => Some(*q),
            _ => None,
        }
    }
}

impl std::fmt::Display for SpaceFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.q() {
            Some(q) => write!(f, "{}({q})", self.tag()),
            None => write!(f, "{}", self.tag()),
        }
    }
}

/// Restricted root-system kind. `A1` has the single positive root `alpha`;
/// `BC1` has `alpha` and `2*alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootKind {
    A1,
    BC1,
}

/// One catalog entry. Immutable value data; every field is determined by
/// the family.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricSpace {
    pub family: SpaceFamily,
    /// Multiplicity of the restricted root `alpha`.
    pub m_alpha: u32,
    /// Multiplicity of `2*alpha`; zero exactly when the root kind is `A1`.
    pub m_2alpha: u32,
    pub root_kind: RootKind,
    /// dim G/K = m_alpha + m_2alpha + 1.
    pub dim_gk: u32,
    /// Quotient notation, e.g. "SU(3)/S(U(2)×U(1))".
    pub name: String,
}

/// Jacobi exponent pair (a, b) attached to a space: with `beta` the larger
/// restricted root, `a = (m_{beta/2} + m_beta - 1)/2` and
/// `b = (m_beta - 1)/2`. For `A1` spaces `m_{beta/2} = 0`, `m_beta = m_alpha`;
/// for `BC1` spaces `m_{beta/2} = m_alpha`, `m_beta = m_2alpha`. Both values
/// are halves of integers; the doubled integers are kept so exact-arithmetic
/// paths need no float parsing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub a: f64,
    pub b: f64,
}

impl JacobiParams {
    /// General constructor used by tests and the oracle paths; requires
    /// `a >= b`, `a >= 0` and `b >= -1/2` (all catalog pairs satisfy this).
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a >= b && a >= 0.0 && b >= -0.5) {
            return Err(Error::InvalidParameter(format!(
                "jacobi parameters need a >= b, a >= 0, b >= -1/2; got a={a}, b={b}"
            )));
        }
        Ok(JacobiParams { a, b })
    }

    /// `(2a, 2b)` when both are halves of integers, which holds for every
    /// catalog space. Exact-arithmetic evaluation requires this form.
    pub fn doubled_integers(&self) -> Option<(i64, i64)> {
        let ta = 2.0 * self.a;
        let tb = 2.0 * self.b;
        if ta.fract() == 0.0 && tb.fract() == 0.0 {
            Some((ta as i64, tb as i64))
        } else {
            None
        }
    }
}

impl SymmetricSpace {
    fn build(family: SpaceFamily, m_alpha: u32, m_2alpha: u32, name: String) -> Self {
        let root_kind = if m_2alpha == 0 {
            RootKind::A1
        } else {
            RootKind::BC1
        };
        SymmetricSpace {
            family,
            m_alpha,
            m_2alpha,
            root_kind,
            dim_gk: m_alpha + m_2alpha + 1,
            name,
        }
    }

    /// Catalog lookup. Rejects parameters outside the table's constraints,
    /// naming the isomorphic space when the exclusion is an isomorphism.
    ///
    /// ```
    /// use rankone::catalog::{SpaceFamily, SymmetricSpace};
    ///
    /// let s = SymmetricSpace::new(SpaceFamily::AIII(2)).unwrap();
    /// assert_eq!((s.m_alpha, s.m_2alpha, s.dim_gk), (2, 1, 4));
    /// let p = s.jacobi_params();
    /// assert_eq!((p.a, p.b), (1.0, 0.0));
    ///
    /// // SO(3)/S(O(2)xO(1)) is catalogued as AI, not BII(2)
    /// assert!(SymmetricSpace::new(SpaceFamily::BII(2)).is_err());
    /// ```
    pub fn new(family: SpaceFamily) -> Result<Self> {
        match family {
            SpaceFamily::AI => Ok(Self::build(family, 1, 0, "SU(2)/SO(2)".into())),
            SpaceFamily::AII => Ok(Self::build(family, 4, 0, "SU(4)/Sp(4)".into())),
            SpaceFamily::AIII(q) => {
                if q < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "AIII requires q > 1, got q={q}"
                    )));
                }
                Ok(Self::build(
                    family,
                    2 * (q - 1),
                    1,
                    format!("SU({})/S(U({q})×U(1))", q + 1),
                ))
            }
            SpaceFamily::BII(q) => {
                if q == 2 {
                    return Err(Error::InvalidParameter(
                        "BII with q=2 is excluded: isomorphic to SU(2)/SO(2)".into(),
                    ));
                }
                if q < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "BII requires q > 2, got q={q}"
                    )));
                }
                Ok(Self::build(
                    family,
                    q - 1,
                    0,
                    format!("SO({})/S(O({q})×O(1))", q + 1),
                ))
            }
            SpaceFamily::CII(q) => {
                if q < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "CII requires q > 1, got q={q}"
                    )));
                }
                Ok(Self::build(
                    family,
                    4 * (q - 1),
                    3,
                    format!("Sp({})/(Sp({})×Sp(2))", 2 * q + 2, 2 * q),
                ))
            }
            SpaceFamily::FII => Ok(Self::build(family, 8, 7, "F4/SO(9)".into())),
        }
    }

    /// The Jacobi exponents for this space.
    pub fn jacobi_params(&self) -> JacobiParams {
        let (m_half, m_beta) = match self.root_kind {
            RootKind::A1 => (0, self.m_alpha),
            RootKind::BC1 => (self.m_alpha, self.m_2alpha),
        };
        JacobiParams {
            a: (m_half as f64 + m_beta as f64 - 1.0) / 2.0,
            b: (m_beta as f64 - 1.0) / 2.0,
        }
    }

    /// Angle of the larger restricted root at the radial coordinate `t`:
    /// `beta(Z) = t` for `A1`, `2t` for `BC1`.
    pub fn beta_angle(&self, t: f64) -> f64 {
        match self.root_kind {
            RootKind::A1 => t,
            RootKind::BC1 => 2.0 * t,
        }
    }

    /// Period of every spherical function in `t`: `2π` for `A1` spaces and
    /// `π` for `BC1` spaces (dependence is through `cos beta(Z)` only).
    pub fn period(&self) -> f64 {
        match self.root_kind {
            RootKind::A1 => 2.0 * std::f64::consts::PI,
            RootKind::BC1 => std::f64::consts::PI,
        }
    }
}

impl std::fmt::Display for SymmetricSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}", self.family, self.name)
    }
}

/// All catalog entries with parameters up to `max_q`, in table order with
/// ascending `q` inside each family. Requires `max_q >= 3` so every family
/// is represented.
pub fn list_catalog(max_q: u32) -> Result<Vec<SymmetricSpace>> {
    if max_q < 3 {
        return Err(Error::InvalidParameter(format!(
            "catalog enumeration requires max_q >= 3, got {max_q}"
        )));
    }
    let mut out = Vec::new();
    out.push(SymmetricSpace::new(SpaceFamily::AI)?);
    out.push(SymmetricSpace::new(SpaceFamily::AII)?);
    for q in 2..=max_q {
        out.push(SymmetricSpace::new(SpaceFamily::AIII(q))?);
    }
    for q in 3..=max_q {
        out.push(SymmetricSpace::new(SpaceFamily::BII(q))?);
    }
    for q in 2..=max_q {
        out.push(SymmetricSpace::new(SpaceFamily::CII(q))?);
    }
    out.push(SymmetricSpace::new(SpaceFamily::FII)?);
    Ok(out)
}
