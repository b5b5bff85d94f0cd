//! Three total orders on the affine points of one curve.
//!
//! * Natural (`N`): lexicographic on (x, y). The two y-values that share an
//!   x-coordinate end up adjacent.
//! * Diffusion (`D`): by the plain integer sum x + y, which interleaves the
//!   y-values of different x-coordinates.
//! * Modulo diffusion (`M`): by (x + y) mod p.
//!
//! Distinct points can share a sum (never an x-coordinate when they do), so
//! the diffusion orders need a tie rule. Two conventions are in use and both
//! are total:
//!
//! * [`TieBreak::SquaredY`] — compare y² mod p. Equal squares would force
//!   y₂ = p − y₁, which is incompatible with the sums being equal, so this
//!   decides every tie. This is the convention the S-box generator uses; the
//!   bundled golden tables are sorted this way.
//! * [`TieBreak::XCoord`] — compare x. The correlation statistics over whole
//!   curves use this convention.

use std::cmp::Ordering as Cmp;
use std::fmt;
use std::str::FromStr;

use crate::curve::AffinePoint;
use crate::Error;

/// Which of the three orders to apply. String codes: `N`, `D`, `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderingKind {
    Natural,
    Diffusion,
    ModuloDiffusion,
}

/// Secondary comparison for diffusion-order ties (irrelevant for Natural).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TieBreak {
    #[default]
    SquaredY,
    XCoord,
}

impl OrderingKind {
    pub const ALL: [OrderingKind; 3] = [
        OrderingKind::Natural,
        OrderingKind::Diffusion,
        OrderingKind::ModuloDiffusion,
    ];

    pub fn code(self) -> &'static str {
        match self {
            OrderingKind::Natural => "N",
            OrderingKind::Diffusion => "D",
            OrderingKind::ModuloDiffusion => "M",
        }
    }
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for OrderingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "N" | "n" => Ok(OrderingKind::Natural),
            "D" | "d" => Ok(OrderingKind::Diffusion),
            "M" | "m" => Ok(OrderingKind::ModuloDiffusion),
            other => Err(format!("unknown ordering {other:?}, expected N, D or M")),
        }
    }
}

/// Sort key: the y-coordinate is unique per point, so appending it makes the
/// key total without ever overriding the documented comparison.
fn sort_key(kind: OrderingKind, tie: TieBreak, pt: &AffinePoint) -> (u64, u64, u64) {
    let (x, y) = (pt.x(), pt.y());
    let p = pt.curve().p();
    match kind {
        OrderingKind::Natural => (x, y, y),
        OrderingKind::Diffusion | OrderingKind::ModuloDiffusion => {
            let sum = match kind {
                OrderingKind::Diffusion => x + y,
                _ => (x + y) % p,
            };
            let tie_key = match tie {
                TieBreak::SquaredY => pt.curve().prime().mul(y, y),
                TieBreak::XCoord => x,
            };
            (sum, tie_key, y)
        }
    }
}

/// Compares two points of the same curve under the canonical convention
/// ([`TieBreak::SquaredY`]). `Equal` only ever means identical points.
pub fn compare(kind: OrderingKind, a: &AffinePoint, b: &AffinePoint) -> Result<Cmp, Error> {
    compare_with(kind, TieBreak::default(), a, b)
}

/// [`compare`] with an explicit tie convention.
pub fn compare_with(
    kind: OrderingKind,
    tie: TieBreak,
    a: &AffinePoint,
    b: &AffinePoint,
) -> Result<Cmp, Error> {
    if a.curve() != b.curve() {
        return Err(Error::MixedCurves);
    }
    Ok(sort_key(kind, tie, a).cmp(&sort_key(kind, tie, b)))
}

/// Sorts points into strictly increasing order under the canonical
/// convention. Fails if the points live on different curves.
pub fn sort_points(kind: OrderingKind, points: &[AffinePoint]) -> Result<Vec<AffinePoint>, Error> {
    sort_points_with(kind, TieBreak::default(), points)
}

/// [`sort_points`] with an explicit tie convention.
pub fn sort_points_with(
    kind: OrderingKind,
    tie: TieBreak,
    points: &[AffinePoint],
) -> Result<Vec<AffinePoint>, Error> {
    if points.windows(2).any(|w| w[0].curve() != w[1].curve()) {
        return Err(Error::MixedCurves);
    }
    let mut sorted = points.to_vec();
    // no ties exist between distinct points, so an unstable sort is fine
    sorted.sort_unstable_by_key(|pt| sort_key(kind, tie, pt));
    Ok(sorted)
}
