//! lcm folding over arbitrary-precision integers.
//!
//! All lcm results are positive: inputs are folded by absolute value, zeros
//! are ignored, and the empty fold is 1.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// lcm of the absolute values of the non-zero inputs; 1 when there are none.
pub fn lcm_fold<'a, I>(values: I) -> BigUint
where
    I: IntoIterator<Item = &'a BigInt>,
{
    let mut acc = LcmAccumulator::new();
    for v in values {
        acc.push_big(v.magnitude());
    }
    acc.finish()
}

/// Commutative monoid for lcm folding, with a `u128` fast path.
///
/// Identity is 1; `merge` is associative and commutative, so any chunking
/// of the input produces the same result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmAccumulator {
    small: u128,
    big: Option<BigUint>,
}

impl Default for LcmAccumulator {
    fn default() -> Self {
        Self::new()
    }
}

impl LcmAccumulator {
    pub fn new() -> Self {
        Self {
            small: 1,
            big: None,
        }
    }

    pub fn push_u128(&mut self, value: u128) {
        if value == 0 {
            return;
        }
        match &mut self.big {
            Some(big) => {
                let v = BigUint::from(value);
                if !(&*big % &v).is_zero() {
                    *big = big.lcm(&v);
                }
            }
            None => {
                if self.small.is_multiple_of(value) {
                    return;
                }
                let g = self.small.gcd(&value);
                match (self.small / g).checked_mul(value) {
                    Some(l) => self.small = l,
                    None => {
                        let l = BigUint::from(self.small / g) * BigUint::from(value);
                        self.big = Some(l);
                    }
                }
            }
        }
    }

    pub fn push_big(&mut self, value: &BigUint) {
        if value.is_zero() {
            return;
        }
        if let Some(v) = to_u128(value) {
            self.push_u128(v);
            return;
        }
        let current = self.current();
        let l = current.lcm(value);
        self.big = Some(l);
    }

    pub fn merge(&mut self, other: &LcmAccumulator) {
        match &other.big {
            Some(b) => self.push_big(b),
            None => self.push_u128(other.small),
        }
    }

    pub fn current(&self) -> BigUint {
        match &self.big {
            Some(b) => b.clone(),
            None => BigUint::from(self.small),
        }
    }

    pub fn finish(self) -> BigUint {
        match self.big {
            Some(b) => b,
            None => BigUint::from(self.small),
        }
    }

    pub fn is_one(&self) -> bool {
        self.big.is_none() && self.small == 1
    }
}

pub(crate) fn to_u128(v: &BigUint) -> Option<u128> {
    if v.bits() > 128 {
        return None;
    }
    let mut out: u128 = 0;
    for (i, d) in v.iter_u64_digits().enumerate() {
        out |= (d as u128) << (64 * i);
    }
    Some(out)
}

/// `lcm(a, b)` treating 0 as "absent" on either side.
pub fn lcm_pair(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() {
        return if b.is_zero() {
            BigUint::one()
        } else {
            b.clone()
        };
    }
    if b.is_zero() {
        return a.clone();
    }
    a.lcm(b)
}
