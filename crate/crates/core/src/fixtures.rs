//! Bundled reference tables: the three curve-generated golden S-boxes and
//! the AES S-box, all in grid format under `fixtures/`.
//!
//! The golden files store each table in application order, S(0) first; the
//! AES table is the standard one and anchors the metric conventions
//! (nonlinearity 112, maximum differential count 4, algebraic complexity 9).

use crate::formats;
use crate::ordering::OrderingKind;
use crate::sbox::{Provenance, SBox};

pub const S_N_1667_351_GRID: &str = include_str!("../fixtures/s_n_1667_351.grid");
pub const S_D_3299_1451_GRID: &str = include_str!("../fixtures/s_d_3299_1451.grid");
pub const S_M_4229_2422_GRID: &str = include_str!("../fixtures/s_m_4229_2422.grid");
pub const AES_GRID: &str = include_str!("../fixtures/aes.grid");

fn parse(grid: &str, provenance: Option<Provenance>) -> SBox {
    let table = *formats::parse_grid(grid)
        .expect("bundled fixture must parse")
        .table();
    match provenance {
        Some(p) => SBox::with_provenance(table, p),
        None => SBox::from_table(table),
    }
}

/// Golden S-box for p = 1667, b = 351 under the natural order.
pub fn s_n_1667_351() -> SBox {
    parse(
        S_N_1667_351_GRID,
        Some(Provenance {
            p: 1667,
            b: 351,
            ordering: OrderingKind::Natural,
        }),
    )
}

/// Golden S-box for p = 3299, b = 1451 under the diffusion order.
pub fn s_d_3299_1451() -> SBox {
    parse(
        S_D_3299_1451_GRID,
        Some(Provenance {
            p: 3299,
            b: 1451,
            ordering: OrderingKind::Diffusion,
        }),
    )
}

/// Golden S-box for p = 4229, b = 2422 under the modulo diffusion order.
pub fn s_m_4229_2422() -> SBox {
    parse(
        S_M_4229_2422_GRID,
        Some(Provenance {
            p: 4229,
            b: 2422,
            ordering: OrderingKind::ModuloDiffusion,
        }),
    )
}

/// The AES S-box.
pub fn aes() -> SBox {
    parse(AES_GRID, None)
}

/// All three golden fixtures with their parameters.
pub fn golden() -> [(SBox, u64, u64, OrderingKind); 3] {
    [
        (s_n_1667_351(), 1667, 351, OrderingKind::Natural),
        (s_d_3299_1451(), 3299, 1451, OrderingKind::Diffusion),
        (s_m_4229_2422(), 4229, 2422, OrderingKind::ModuloDiffusion),
    ]
}
