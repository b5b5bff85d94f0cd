//! GF(2⁸) arithmetic modulo x⁸ + x⁴ + x³ + x + 1 and full-table polynomial
//! interpolation, used for the algebraic complexity metric.
//!
//! The reduction polynomial is the AES one; algebraic complexity depends on
//! the field representation and this choice is pinned by the AES S-box
//! anchor (exactly 9 nonzero terms).

use crate::sbox::SBox;

pub const REDUCTION_POLY: u16 = 0x11B;

/// Carry-less product reduced modulo the field polynomial.
pub fn gf_mul(a: u8, b: u8) -> u8 {
    let mut acc = 0u16;
    let mut a = a as u16;
    let mut b = b as u16;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        if a & 0x100 != 0 {
            a ^= REDUCTION_POLY;
        }
        b >>= 1;
    }
    acc as u8
}

pub fn gf_pow(mut a: u8, mut e: u32) -> u8 {
    let mut acc = 1u8;
    while e > 0 {
        if e & 1 == 1 {
            acc = gf_mul(acc, a);
        }
        a = gf_mul(a, a);
        e >>= 1;
    }
    acc
}

/// The unique polynomial of degree ≤ 255 interpolating a table over all of
/// GF(2⁸).
#[derive(Clone, PartialEq, Eq)]
pub struct SboxPolynomial {
    coeffs: [u8; 256],
}

impl SboxPolynomial {
    /// coefficient of x^k
    pub fn coeff(&self, k: usize) -> u8 {
        self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[u8; 256] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: u8) -> u8 {
        // Horner
        let mut acc = 0u8;
        for &c in self.coeffs.iter().rev() {
            acc = gf_mul(acc, x) ^ c;
        }
        acc
    }

    pub fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

impl std::fmt::Debug for SboxPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, c)| format!("{c:02x}·x^{k}"))
            .collect();
        write!(f, "SboxPolynomial({})", terms.join(" + "))
    }
}

/// Lagrange interpolation over the full field.
///
/// With all 256 field elements as nodes the master polynomial is
/// M(x) = x²⁵⁶ + x, whose formal derivative is 1, so each basis polynomial
/// is just M(x)/(x + xᵢ); synthetic division gives it in O(n) and the whole
/// interpolation in O(n²) without any field inversions.
pub fn interpolate(sbox: &SBox) -> SboxPolynomial {
    let mut coeffs = [0u8; 256];
    for xi in 0..256usize {
        let yi = sbox.table()[xi];
        if yi == 0 {
            continue;
        }
        let a = xi as u8;
        // quotient of x^256 + x by (x + a), high coefficient first
        let mut q = 1u8; // coefficient of x^255
        coeffs[255] ^= gf_mul(yi, q);
        for k in (1..255).rev() {
            q = gf_mul(a, q);
            coeffs[k] ^= gf_mul(yi, q);
        }
        q = gf_mul(a, q) ^ 1; // the + x term of M enters the constant coefficient
        coeffs[0] ^= gf_mul(yi, q);
    }
    SboxPolynomial { coeffs }
}

/// Number of nonzero coefficients of the interpolating polynomial.
pub fn algebraic_complexity(sbox: &SBox) -> usize {
    interpolate(sbox).nonzero_terms()
}
