//! Strength metrics for 256-entry substitution tables.
//!
//! Everything here is driven by exact integer counts; the `f64` views are
//! exact too, because every probability is a dyadic rational (k/256 or
//! k/2048). `round4` reproduces the half-up 4-decimal rendering used when
//! quoting such values.
//!
//! None of the metrics require bijectivity; they are well defined for any
//! 256-entry table.

use crate::sbox::SBox;

/// Number of set bits. The avalanche metrics count flipped output bits with
/// this.
pub fn hamming_weight(v: u8) -> u32 {
    v.count_ones()
}

/// Parity of the GF(2) dot product a·b.
fn dot(a: u8, b: u8) -> u32 {
    (a & b).count_ones() & 1
}

/// Rounds half away from zero to 4 decimals, the convention used for
/// rendering the metric tables.
pub fn round4(x: f64) -> f64 {
    (x * 10000.0 + 0.5 * x.signum()).trunc() / 10000.0
}

/// The full correlation table `w[α][β] = Σ_x (−1)^(α·x ⊕ β·S(x))`.
pub struct WalshSpectrum {
    // row-major [alpha][beta]
    w: Vec<i32>,
}

impl WalshSpectrum {
    pub fn get(&self, alpha: u8, beta: u8) -> i32 {
        self.w[alpha as usize * 256 + beta as usize]
    }

    /// max `|w[α][β]|` over all α and all β ≠ 0.
    pub fn max_abs(&self) -> u32 {
        let mut best = 0;
        for alpha in 0..256 {
            for beta in 1..256 {
                best = best.max(self.w[alpha * 256 + beta].unsigned_abs());
            }
        }
        best
    }

    /// max `|w[α][β]|` over all α with β restricted to single-bit masks.
    pub fn max_abs_single_bit_beta(&self) -> u32 {
        let mut best = 0;
        for alpha in 0..256 {
            for bit in 0..8 {
                best = best.max(self.w[alpha * 256 + (1usize << bit)].unsigned_abs());
            }
        }
        best
    }
}

/// Computes the spectrum with one fast Walsh–Hadamard transform per output
/// mask β.
pub fn walsh_spectrum(sbox: &SBox) -> WalshSpectrum {
    let mut w = vec![0i32; 256 * 256];
    let mut f = [0i32; 256];
    for beta in 0..256u16 {
        for (sign, &out) in f.iter_mut().zip(sbox.table()) {
            *sign = 1 - 2 * dot(beta as u8, out) as i32;
        }
        let mut step = 1;
        while step < 256 {
            let mut i = 0;
            while i < 256 {
                for j in i..i + step {
                    let (u, v) = (f[j], f[j + step]);
                    f[j] = u + v;
                    f[j + step] = u - v;
                }
                i += step * 2;
            }
            step *= 2;
        }
        for alpha in 0..256usize {
            w[alpha * 256 + beta as usize] = f[alpha];
        }
    }
    WalshSpectrum { w }
}

/// Nonlinearity: minimum Hamming distance from any nonzero component
/// function β·S to the affine functions, i.e. 128 − max|w|/2 over β ≠ 0.
pub fn nonlinearity(sbox: &SBox) -> u32 {
    128 - walsh_spectrum(sbox).max_abs() / 2
}

/// Nonlinearity restricted to the eight coordinate functions (single-bit
/// output masks). Coarser than [`nonlinearity`]; reported alongside it
/// because both readings circulate for this construction.
pub fn coordinate_nonlinearity(sbox: &SBox) -> u32 {
    128 - walsh_spectrum(sbox).max_abs_single_bit_beta() / 2
}

/// Largest bias count behind the linear approximation probability:
/// max over α, β ≠ 0 of |#{x : α·x = β·S(x)} − 128| = max|w|/2.
pub fn lap_count(sbox: &SBox) -> u32 {
    walsh_spectrum(sbox).max_abs() / 2
}

/// Linear approximation probability, `lap_count / 256`.
pub fn lap(sbox: &SBox) -> f64 {
    lap_count(sbox) as f64 / 256.0
}

/// Largest differential count: max over Δx ≠ 0, Δy of
/// #{x : S(x ⊕ Δx) = S(x) ⊕ Δy}.
pub fn dap_count(sbox: &SBox) -> u32 {
    let t = sbox.table();
    let mut best = 0u32;
    for dx in 1..256usize {
        let mut counts = [0u32; 256];
        for x in 0..256usize {
            let dy = t[x ^ dx] ^ t[x];
            counts[dy as usize] += 1;
        }
        for &c in &counts {
            best = best.max(c);
        }
    }
    best
}

/// Differential approximation probability, `dap_count / 256`.
pub fn dap(sbox: &SBox) -> f64 {
    dap_count(sbox) as f64 / 256.0
}

/// Avalanche matrix: entry (i, j) counts how often output bit i flips when
/// input bit j flips, over all 256 inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SacMatrix {
    counts: [[u16; 8]; 8],
}

impl SacMatrix {
    /// Flip count for output bit `i`, input bit `j` (0-based).
    pub fn count(&self, i: usize, j: usize) -> u16 {
        self.counts[i][j]
    }

    /// Flip probability, `count / 256`.
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.counts[i][j] as f64 / 256.0
    }

    pub fn values(&self) -> [[f64; 8]; 8] {
        self.counts.map(|row| row.map(|c| c as f64 / 256.0))
    }

    /// (max, min) over all 64 entries.
    pub fn min_max(&self) -> (f64, f64) {
        let mut lo = u16::MAX;
        let mut hi = 0;
        for row in &self.counts {
            for &c in row {
                lo = lo.min(c);
                hi = hi.max(c);
            }
        }
        (hi as f64 / 256.0, lo as f64 / 256.0)
    }
}

/// Strict avalanche criterion matrix.
pub fn sac_matrix(sbox: &SBox) -> SacMatrix {
    let t = sbox.table();
    let mut counts = [[0u16; 8]; 8];
    for j in 0..8 {
        let mask = 1usize << j;
        for x in 0..256usize {
            let delta = t[x ^ mask] ^ t[x];
            for (i, row) in counts.iter_mut().enumerate() {
                row[j] += u16::from(delta >> i & 1);
            }
        }
    }
    SacMatrix { counts }
}

/// (max, min) of the SAC matrix.
pub fn sac_minmax(sbox: &SBox) -> (f64, f64) {
    sac_matrix(sbox).min_max()
}

/// Bit independence matrix: entry (i, k) is the probability that output
/// bits i and k change together-or-not-together when a single input bit
/// flips, averaged over the eight input bits. Diagonal is zero by
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicMatrix {
    // summed flip counts over the eight input-bit masks; value = sum / 2048
    sums: [[u16; 8]; 8],
}

impl BicMatrix {
    pub fn count(&self, i: usize, k: usize) -> u16 {
        self.sums[i][k]
    }

    /// Dependence probability, `count / 2048`.
    pub fn value(&self, i: usize, k: usize) -> f64 {
        self.sums[i][k] as f64 / 2048.0
    }

    pub fn values(&self) -> [[f64; 8]; 8] {
        self.sums.map(|row| row.map(|c| c as f64 / 2048.0))
    }

    /// (max, min) over the off-diagonal entries.
    pub fn min_max(&self) -> (f64, f64) {
        let mut lo = u16::MAX;
        let mut hi = 0;
        for i in 0..8 {
            for k in 0..8 {
                if i != k {
                    lo = lo.min(self.sums[i][k]);
                    hi = hi.max(self.sums[i][k]);
                }
            }
        }
        (hi as f64 / 2048.0, lo as f64 / 2048.0)
    }
}

/// Bit independence criterion matrix.
pub fn bic_matrix(sbox: &SBox) -> BicMatrix {
    let t = sbox.table();
    let mut sums = [[0u16; 8]; 8];
    for j in 0..8 {
        let mask = 1usize << j;
        for x in 0..256usize {
            let delta = t[x ^ mask] ^ t[x];
            for (i, row) in sums.iter_mut().enumerate() {
                let di = delta >> i & 1;
                for (k, cell) in row.iter_mut().enumerate() {
                    *cell += u16::from(di ^ (delta >> k & 1) == 1);
                }
            }
        }
    }
    BicMatrix { sums }
}

/// (max, min) of the off-diagonal BIC entries.
pub fn bic_minmax(sbox: &SBox) -> (f64, f64) {
    bic_matrix(sbox).min_max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveParams;
    use crate::fixtures;
    use crate::ordering::OrderingKind;
    use crate::sbox::generate;

    fn golden_n() -> SBox {
        fixtures::s_n_1667_351()
    }

    #[test]
    fn weight_counts_bits() {
        assert_eq!(hamming_weight(0), 0);
        assert_eq!(hamming_weight(255), 8);
        assert_eq!(hamming_weight(0b1011_0000), 3);
    }

    #[test]
    fn round4_is_half_up() {
        assert_eq!(round4(0.40625), 0.4063);
        assert_eq!(round4(0.65625), 0.6563);
        assert_eq!(round4(0.52734375), 0.5273);
        assert_eq!(round4(-0.00025), -0.0003);
    }

    #[test]
    fn spectrum_structure() {
        let s = golden_n();
        let w = walsh_spectrum(&s);
        // balanced components of a bijection: zero at alpha = 0
        for beta in 1..=255u8 {
            assert_eq!(w.get(0, beta), 0);
        }
        // identity: w[alpha][alpha] = 256
        let wid = walsh_spectrum(&SBox::identity());
        for alpha in 0..=255u8 {
            assert_eq!(wid.get(alpha, alpha), 256);
        }
    }

    #[test]
    fn spectrum_entries_are_even_and_bounded() {
        let w = walsh_spectrum(&golden_n());
        for alpha in 0..=255u8 {
            for beta in 0..=255u8 {
                let v = w.get(alpha, beta);
                assert_eq!(v % 2, 0);
                assert!(v.abs() <= 256);
            }
        }
    }

    #[test]
    fn sac_entries_lie_in_unit_interval() {
        let m = sac_matrix(&golden_n());
        for i in 0..8 {
            for j in 0..8 {
                assert!((0.0..=1.0).contains(&m.value(i, j)));
            }
        }
    }

    #[test]
    fn parseval_per_output_mask() {
        let s = golden_n();
        let w = walsh_spectrum(&s);
        for beta in 1..=255u8 {
            let sum: i64 = (0..=255u8)
                .map(|alpha| {
                    let v = w.get(alpha, beta) as i64;
                    v * v
                })
                .sum();
            assert_eq!(sum, 1 << 16, "beta={beta}");
        }
    }

    #[test]
    fn nonlinearity_values() {
        assert_eq!(nonlinearity(&SBox::identity()), 0);
        assert_eq!(nonlinearity(&fixtures::aes()), 112);
        assert_eq!(nonlinearity(&golden_n()), 94);
        // the two readings split for the curve tables but agree for AES
        assert_eq!(coordinate_nonlinearity(&golden_n()), 106);
        assert_eq!(coordinate_nonlinearity(&fixtures::aes()), 112);
    }

    #[test]
    fn lap_values() {
        assert_eq!(lap(&fixtures::aes()), 0.0625);
        assert_eq!(lap(&SBox::identity()), 0.5);
        assert_eq!(lap_count(&golden_n()), 34); // 34/256 renders as 0.1328
    }

    #[test]
    fn lap_nl_identity() {
        for s in [
            SBox::identity(),
            fixtures::aes(),
            golden_n(),
            fixtures::s_d_3299_1451(),
        ] {
            assert_eq!(lap(&s) * 512.0, 2.0 * (128.0 - nonlinearity(&s) as f64));
        }
    }

    #[test]
    fn dap_values() {
        assert_eq!(dap(&SBox::identity()), 1.0);
        assert_eq!(dap_count(&fixtures::aes()), 4);
        assert_eq!(dap_count(&golden_n()), 10);
    }

    #[test]
    fn dap_counts_are_even_and_rows_sum_to_256() {
        let s = golden_n();
        let t = s.table();
        for dx in 1..256usize {
            let mut counts = [0u32; 256];
            for x in 0..256usize {
                counts[(t[x ^ dx] ^ t[x]) as usize] += 1;
            }
            assert_eq!(counts.iter().sum::<u32>(), 256);
            for &c in &counts {
                assert_eq!(c % 2, 0); // solutions pair up as {x, x ⊕ Δx}
            }
        }
        assert!(dap_count(&s) >= 2);
    }

    #[test]
    fn sac_of_identity_is_kronecker() {
        let m = sac_matrix(&SBox::identity());
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(m.value(i, j), if i == j { 1.0 } else { 0.0 });
            }
        }
        assert_eq!(sac_minmax(&SBox::identity()), (1.0, 0.0));
    }

    #[test]
    fn sac_golden_values() {
        let (max, min) = sac_minmax(&golden_n());
        assert_eq!((round4(max), round4(min)), (0.5938, 0.4531));

        let params = CurveParams::from_raw(4229, 2422).unwrap();
        let s = generate(params, OrderingKind::ModuloDiffusion).unwrap();
        let (max, min) = sac_minmax(&s);
        assert_eq!((round4(max), round4(min)), (0.5938, 0.375));
    }

    #[test]
    fn bic_of_identity() {
        // flipping input bit j flips exactly output bit j, so a pair (i, k)
        // disagrees for j = i and j = k: mean dependence 2/8
        let (max, min) = bic_minmax(&SBox::identity());
        assert_eq!((max, min), (0.25, 0.25));
    }

    #[test]
    fn bic_matrix_shape() {
        let m = bic_matrix(&golden_n());
        for i in 0..8 {
            assert_eq!(m.value(i, i), 0.0);
            for k in 0..8 {
                assert_eq!(m.count(i, k), m.count(k, i));
                assert!(m.value(i, k) <= 1.0);
            }
        }
    }

    #[test]
    fn bic_golden_values() {
        let (max, min) = bic_minmax(&golden_n());
        assert_eq!((round4(max), round4(min)), (0.5273, 0.4648));
    }

    #[test]
    fn metrics_accept_non_bijective_tables() {
        let constant = SBox::from_table([7u8; 256]);
        assert!(!constant.is_bijective());
        assert_eq!(nonlinearity(&constant), 0); // constant components are affine
        assert_eq!(dap_count(&constant), 256);
        assert_eq!(sac_minmax(&constant), (0.0, 0.0));
    }

    // independent oracles: direct triple loops over masks and inputs

    fn oracle_nl_lap(s: &SBox) -> (u32, u32) {
        let mut max_bias = 0u32;
        for alpha in 0..256u16 {
            for beta in 1..256u16 {
                let mut eq = 0i32;
                for x in 0..256u16 {
                    let a = (alpha as u8 & x as u8).count_ones() & 1;
                    let b = (beta as u8 & s.table()[x as usize]).count_ones() & 1;
                    if a == b {
                        eq += 1;
                    }
                }
                max_bias = max_bias.max((eq - 128).unsigned_abs());
            }
        }
        (128 - max_bias, max_bias)
    }

    #[test]
    fn oracle_agreement_on_golden_natural() {
        let s = golden_n();
        let (nl, bias) = oracle_nl_lap(&s);
        assert_eq!(nl, nonlinearity(&s));
        assert_eq!(bias, lap_count(&s));
    }
}
