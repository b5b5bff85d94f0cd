//! Arithmetic in the prime field F_p for primes p ≡ 2 (mod 3).
//!
//! Field elements are canonical `u64` representatives in `[0, p)`; every
//! operation reduces its result back into that range. Products go through
//! `u128` so any prime below 2^63 is safe, far beyond the desk-scale curves
//! this crate targets.

use crate::Error;

/// A validated field prime: p ≥ 5, prime, and p ≡ 2 (mod 3).
///
/// The residue condition makes cubing a bijection on F_p, which is what
/// guarantees a unique cube root (and hence a unique curve point per
/// y-coordinate).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldPrime {
    p: u64,
}

impl FieldPrime {
    /// Validates `p` and wraps it. Checks size, then primality, then the
    /// residue class, reporting the first failure.
    pub fn new(p: u64) -> Result<Self, Error> {
        if p < 5 {
            return Err(Error::TooSmall(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p % 3 != 2 {
            return Err(Error::WrongResidueClass(p));
        }
        Ok(FieldPrime { p })
    }

    pub fn value(self) -> u64 {
        self.p
    }

    /// Canonical representative of `v` in `[0, p)`.
    pub fn reduce(self, v: u64) -> u64 {
        v % self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    /// (a − b) mod p, reduced into `[0, p)` even when b > a.
    pub fn sub(self, a: u64, b: u64) -> u64 {
        let (a, b) = (self.reduce(a), self.reduce(b));
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    /// base^exp mod p by square and multiply.
    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let mut base = self.reduce(base);
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// The unique x with x³ ≡ a (mod p), computed as a^((2p−1)/3).
    ///
    /// The exponent is an integer exactly because p ≡ 2 (mod 3), and
    /// Fermat's little theorem gives (a^((2p−1)/3))³ = a^(2(p−1)) · a = a.
    pub fn cube_root(self, a: u64) -> u64 {
        let exp = ((2 * self.p as u128 - 1) / 3) as u64;
        self.pow(a, exp)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Deterministic Miller–Rabin primality test, exact for all u64 inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    // This base set decides primality for every integer below 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}
