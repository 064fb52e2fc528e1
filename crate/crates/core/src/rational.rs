//! Helpers around [`BigRational`] used by every exact container.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn one() -> Q {
    Q::one()
}

pub fn zero() -> Q {
    Q::zero()
}

/// `1 / n!` as an exact rational.
pub fn inv_factorial(n: u32) -> Q {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= i;
    }
    Q::new(BigInt::one(), f)
}

/// `(-1)^n` as a rational.
pub fn sign(n: u64) -> Q {
    if n.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format(x: &Q) -> String {
    x.to_string()
}

pub fn parse(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Q::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
    }
}

pub(crate) mod serde_q {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}
