//! Prime-field arithmetic for coloring scalars, plus a fixed GF(16) table.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported prime modulus; values are stored in a byte.
pub const MAX_PRIME: u8 = 251;

/// The field `F_q` for a prime `q <= 251`. Elements are bytes in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u8,
}

fn is_prime(v: u32) -> bool {
    v >= 2 && (2..).take_while(|d| d * d <= v).all(|d| v % d != 0)
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if q > MAX_PRIME as u32 || !is_prime(q) {
            return Err(Error::InvalidParameters(format!(
                "field order {q} is not a prime in [2, {MAX_PRIME}]"
            )));
        }
        Ok(PrimeField { q: q as u8 })
    }

    pub const F2: PrimeField = PrimeField { q: 2 };
    pub const F3: PrimeField = PrimeField { q: 3 };

    #[inline]
    pub fn order(self) -> u8 {
        self.q
    }

    /// Validates a raw value as an element.
    pub fn element(self, v: u32) -> Result<u8> {
        if v >= self.q as u32 {
            return Err(Error::Domain(format!(
                "{v} is not an element of F_{}",
                self.q
            )));
        }
        Ok(v as u8)
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.q as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.q as u16) as u8
    }

    /// Multiplicative inverse by Fermat: `a^(q-2)`.
    pub fn inv(self, a: u8) -> Result<u8> {
        if a % self.q == 0 {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(self.pow(a, self.q as u32 - 2))
    }

    pub fn pow(self, a: u8, mut e: u32) -> u8 {
        let mut base = a % self.q;
        let mut acc = 1 % self.q;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Reduces an arbitrary count into the field.
    #[inline]
    pub fn reduce(self, v: u64) -> u8 {
        (v % self.q as u64) as u8
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// GF(16) as bit-polynomials modulo `x^4 + x + 1`.
pub mod gf16 {
    const MODULUS: u8 = 0b1_0011;

    /// Product of two 4-bit field elements. Inputs are masked to 4 bits.
    pub fn mul(a: u8, b: u8) -> u8 {
        let (mut a, mut b) = (a & 0xF, b & 0xF);
        let mut acc = 0u8;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & 0x10 != 0 {
                a ^= MODULUS;
            }
        }
        acc
    }

    /// Addition (and subtraction) is XOR in characteristic 2.
    #[inline]
    pub fn add(a: u8, b: u8) -> u8 {
        (a ^ b) & 0xF
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(a: u8) -> Option<u32> {
        let a = a & 0xF;
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Discrete logarithm table to base `x` (element 2): `log[a]` for `a != 0`.
    pub fn log_table() -> [u8; 16] {
        let mut table = [0u8; 16];
        let mut x = 1u8;
        for k in 0..15 {
            table[x as usize] = k;
            x = mul(x, 2);
        }
        table
    }
}
