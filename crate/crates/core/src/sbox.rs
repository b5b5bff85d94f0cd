//! S-box generation: select the 256 curve points with y ≤ 255, sort them
//! under the chosen order, output the y-coordinates.

use crate::curve::{AffinePoint, CurveParams};
use crate::ordering::{self, OrderingKind};
use crate::Error;

/// Where a table came from, if it was generated here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub p: u64,
    pub b: u64,
    pub ordering: OrderingKind,
}

/// A 256-entry substitution table.
///
/// Generated tables are always bijections; externally loaded tables may not
/// be, which [`is_bijective`](Self::is_bijective) reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SBox {
    table: [u8; 256],
    provenance: Option<Provenance>,
}

/// Peak working-set measurement taken during generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationStats {
    pub peak_points_stored: usize,
}

impl SBox {
    pub fn from_table(table: [u8; 256]) -> Self {
        SBox {
            table,
            provenance: None,
        }
    }

    pub fn with_provenance(table: [u8; 256], provenance: Provenance) -> Self {
        SBox {
            table,
            provenance: Some(provenance),
        }
    }

    /// The identity substitution, useful as a degenerate reference.
    pub fn identity() -> Self {
        let mut table = [0u8; 256];
        for (i, v) in table.iter_mut().enumerate() {
            *v = i as u8;
        }
        SBox::from_table(table)
    }

    pub fn table(&self) -> &[u8; 256] {
        &self.table
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.table[x as usize]
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = [false; 256];
        for &v in &self.table {
            if seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }

    /// The table T with `T[self[i]] = i`. Fails on non-bijective tables.
    pub fn inverse(&self) -> Result<SBox, Error> {
        if !self.is_bijective() {
            return Err(Error::NotBijective);
        }
        let mut table = [0u8; 256];
        for (i, &v) in self.table.iter().enumerate() {
            table[v as usize] = i as u8;
        }
        Ok(SBox::from_table(table))
    }
}

impl std::ops::Index<u8> for SBox {
    type Output = u8;

    fn index(&self, i: u8) -> &u8 {
        &self.table[i as usize]
    }
}

/// Generates the S-box for (p, b, ordering) using the cube-root point
/// solver, O(log p) field operations per point.
pub fn generate(params: CurveParams, kind: OrderingKind) -> Result<SBox, Error> {
    build(params, kind, CurveParams::solve_x_for_y, &mut None)
}

/// Same output as [`generate`], but finds each point by scanning x over
/// `[0, p)` — the linear-time construction whose cost the benchmarks track.
pub fn generate_via_loop(params: CurveParams, kind: OrderingKind) -> Result<SBox, Error> {
    build(params, kind, CurveParams::solve_x_for_y_loop, &mut None)
}

/// [`generate_via_loop`] with the peak point count recorded; stays at 256
/// no matter how large p grows.
pub fn generate_via_loop_instrumented(
    params: CurveParams,
    kind: OrderingKind,
) -> Result<(SBox, GenerationStats), Error> {
    let mut stats = Some(GenerationStats {
        peak_points_stored: 0,
    });
    let sbox = build(params, kind, CurveParams::solve_x_for_y_loop, &mut stats)?;
    Ok((sbox, stats.unwrap()))
}

/// [`generate`] with the same instrumentation.
pub fn generate_instrumented(
    params: CurveParams,
    kind: OrderingKind,
) -> Result<(SBox, GenerationStats), Error> {
    let mut stats = Some(GenerationStats {
        peak_points_stored: 0,
    });
    let sbox = build(params, kind, CurveParams::solve_x_for_y, &mut stats)?;
    Ok((sbox, stats.unwrap()))
}

fn build(
    params: CurveParams,
    kind: OrderingKind,
    solve: impl Fn(&CurveParams, u64) -> AffinePoint,
    stats: &mut Option<GenerationStats>,
) -> Result<SBox, Error> {
    if params.p() < 257 {
        return Err(Error::PrimeTooSmall(params.p()));
    }
    // select the 256 points first, then sort; only they are ever stored
    let mut points = Vec::with_capacity(256);
    for y in 0..=255u64 {
        points.push(solve(&params, y));
        if let Some(s) = stats {
            s.peak_points_stored = s.peak_points_stored.max(points.len());
        }
    }
    let sorted = ordering::sort_points(kind, &points)?;
    let mut table = [0u8; 256];
    for (i, pt) in sorted.iter().enumerate() {
        table[i] = pt.y() as u8;
    }
    Ok(SBox::with_provenance(
        table,
        Provenance {
            p: params.p(),
            b: params.b(),
            ordering: kind,
        },
    ))
}
