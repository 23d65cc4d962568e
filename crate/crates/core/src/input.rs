//! Parsing of radial-coordinate arguments.
//!
//! Coordinates are accepted either as decimal radians ("0.7") or as exact
//! rational multiples of pi ("1/2pi", "pi", "-3/4pi"). The exact form
//! survives into classification, so lattice points are recognised without
//! tolerance games.

use crate::catalog::SymmetricSpace;
use crate::error::{Error, Result};
use crate::orbit::{classify_exact_pi, classify_point, OrbitClass};

/// A parsed radial coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialArg {
    /// Plain radians.
    Radians(f64),
    /// Exactly `(p/q) * pi`.
    PiRational { p: i64, q: i64 },
}

impl RadialArg {
    /// The coordinate as a float, for evaluation paths.
    pub fn radians(&self) -> f64 {
        match self {
            RadialArg::Radians(t) => *t,
            RadialArg::PiRational { p, q } => *p as f64 * std::f64::consts::PI / *q as f64,
        }
    }

    /// Classify, exactly when the coordinate is an exact multiple of pi.
    pub fn classify(&self, space: &SymmetricSpace, eps: f64) -> Result<OrbitClass> {
        match self {
            RadialArg::Radians(t) => classify_point(space, *t, eps),
            RadialArg::PiRational { p, q } => classify_exact_pi(space, *p, *q),
        }
    }
}

/// Parse "0.7", "pi", "2pi", "1/2pi" or "-3/4pi".
pub fn parse_radial(text: &str) -> Result<RadialArg> {
    let trimmed = text.trim();
    if let Some(head) = trimmed.strip_suffix("pi") {
        let head = head.trim();
        let (p, q) = if head.is_empty() || head == "-" {
            (if head == "-" { -1 } else { 1 }, 1)
        } else if let Some((ps, qs)) = head.split_once('/') {
            let p: i64 = ps.trim().parse().map_err(|_| bad(text))?;
            let q: i64 = qs.trim().parse().map_err(|_| bad(text))?;
            (p, q)
        } else {
            let p: i64 = head.parse().map_err(|_| bad(text))?;
            (p, 1)
        };
        if q == 0 {
            return Err(bad(text));
        }
        return Ok(RadialArg::PiRational { p, q });
    }
    trimmed
        .parse::<f64>()
        .map(RadialArg::Radians)
        .map_err(|_| bad(text))
}

fn bad(text: &str) -> Error {
    Error::InvalidParameter(format!(
        "cannot parse radial coordinate {text:?}: expected decimal radians or p/qpi"
    ))
}
