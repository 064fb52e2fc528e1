//! Arithmetic modulo a prime below 2^62.

use crate::error::{Error, Result};

/// Two primes just below 2^62 used by default.
pub const DEFAULT_PRIMES: [u64; 2] = [4611686018427387847, 4611686018427387817];

/// Further primes tried when the default ones disagree.
pub const SPARE_PRIMES: [u64; 4] = [4611686018427387787, 4611686018427387761, 4611686018427387751, 4611686018427387737];

pub fn is_prime(p: u64) -> bool {
    primal_check::miller_rabin(p)
}

/// The field `Z/pZ` for an odd prime `p < 2^62`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP {
    p: u64,
}

impl ModP {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 62).contains(&p) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(ModP { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(&self, x: i64) -> u64 {
        let r = x.rem_euclid(self.p as i64);
        r as u64
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// Precomputed `floor(a·2^64 / p)` for repeated multiplication by `a`.
    #[inline]
    pub fn shoup(&self, a: u64) -> u64 {
        (((a as u128) << 64) / self.p as u128) as u64
    }

    /// `a·b mod p` given `a_shoup = shoup(a)`.
    #[inline]
    pub fn mul_shoup(&self, a: u64, a_shoup: u64, b: u64) -> u64 {
        let q = ((a_shoup as u128 * b as u128) >> 64) as u64;
        let r = a.wrapping_mul(b).wrapping_sub(q.wrapping_mul(self.p));
        // r < 2p; the wrapped difference is huge exactly when r < p
        r.min(r.wrapping_sub(self.p))
    }

    /// `dst[i] -= f·src[i]` for all `i`.
    #[inline]
    pub fn axpy_neg(&self, dst: &mut [u64], f: u64, src: &[u64]) {
        let fs = self.shoup(f);
        let p = self.p;
        for (d, &s) in dst.iter_mut().zip(src) {
            let m = self.mul_shoup(f, fs, s);
            let r = d.wrapping_sub(m);
            *d = r.min(r.wrapping_add(p));
        }
    }

    /// `v[i] *= f` for all `i`.
    pub fn scale(&self, v: &mut [u64], f: u64) {
        let fs = self.shoup(f);
        for x in v.iter_mut() {
            *x = self.mul_shoup(f, fs, *x);
        }
    }
}
