//! Best-effort prime factorisation for display.
//!
//! Trial division up to a bound, then Pollard–Brent on the cofactor with a
//! fixed iteration budget. Every reported prime passes Miller–Rabin; anything
//! left over is kept as an explicit residual.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain_err, Result};

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

const RHO_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: BigUint,
    factors: Vec<(BigUint, u32)>,
    residual: BigUint,
}

impl FactoredInteger {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// Primes with exponents, ascending.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Unfactored cofactor (1 when the factorisation is complete).
    pub fn residual(&self) -> &BigUint {
        &self.residual
    }

    pub fn is_complete(&self) -> bool {
        self.residual.is_one()
    }

    pub fn exponent_of(&self, prime: u64) -> u32 {
        let p = BigUint::from(prime);
        self.factors
            .iter()
            .find(|(q, _)| *q == p)
            .map_or(0, |(_, e)| *e)
    }

    /// Renders as `base^e · p^k · …`, where `e` is the largest power of
    /// `base` dividing the value. The base power is always printed, even
    /// `base^1`; a base of 1 or 0 renders the plain form.
    ///
    /// `3672000` with base 60 renders `60^3 · 17`.
    pub fn render_with_base(&self, base: &BigUint) -> String {
        if base <= &BigUint::one() {
            return self.render();
        }
        let mut rest = self.value.clone();
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(base);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e == 0 {
            return self.render();
        }
        let mut out = alloc::format!("{}^{}", base, e);
        let tail = factor(&rest, DEFAULT_TRIAL_BOUND).expect("positive");
        if !tail.value.is_one() {
            out.push_str(" · ");
            out.push_str(&tail.render());
        }
        out
    }

    /// `2^6 · 3^3 · 5^3 · 17`; unfactored residuals appear in brackets.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if self.value.is_one() {
            out.push('1');
            return out;
        }
        for (p, e) in &self.factors {
            if !out.is_empty() {
                out.push_str(" · ");
            }
            if *e == 1 {
                let _ = write!(out, "{}", p);
            } else {
                let _ = write!(out, "{}^{}", p, e);
            }
        }
        if !self.residual.is_one() {
            if !out.is_empty() {
                out.push_str(" · ");
            }
            let _ = write!(out, "[{}]", self.residual);
        }
        out
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Factors `v ≥ 1` by trial division up to `trial_bound`, then a bounded
/// Pollard–Brent pass.
pub fn factor(v: &BigUint, trial_bound: u64) -> Result<FactoredInteger> {
    if v.is_zero() {
        return Err(domain_err!("cannot factor 0"));
    }
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = v.clone();

    let push = |primes: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32| match primes
        .iter_mut()
        .find(|(q, _)| *q == p)
    {
        Some(slot) => slot.1 += e,
        None => primes.push((p, e)),
    };

    let mut d: u64 = 2;
    while d <= trial_bound {
        if let Some(r) = rest.to_u64() {
            if d.saturating_mul(d) > r {
                break;
            }
        }
        let db = BigUint::from(d);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&db);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            push(&mut primes, db, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }

    let mut residual = BigUint::one();
    if !rest.is_one() {
        let bound_sq = BigUint::from(trial_bound) * BigUint::from(trial_bound);
        let small_enough = rest.to_u64().is_some_and(|r| d.saturating_mul(d) > r);
        if small_enough || rest < bound_sq || is_probable_prime(&rest) {
            push(&mut primes, rest, 1);
        } else {
            let mut stack = alloc::vec![rest];
            while let Some(x) = stack.pop() {
                if x.is_one() {
                    continue;
                }
                if is_probable_prime(&x) {
                    push(&mut primes, x, 1);
                } else if let Some(f) = pollard_brent(&x) {
                    let g = &x / &f;
                    stack.push(f);
                    stack.push(g);
                } else {
                    residual *= x;
                }
            }
        }
    }
    primes.sort();
    Ok(FactoredInteger {
        value: v.clone(),
        factors: primes,
        residual,
    })
}

const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller–Rabin with the first twelve prime bases (deterministic below
/// 3.3·10^24, probabilistic above).
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for b in MR_BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'bases: for b in MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    for c in 1u32..8 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut steps: u64 = 0;
        while g == one && steps < RHO_BUDGET {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                let m = (r - k).min(128);
                for _ in 0..m {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
                steps += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != one && g != *n {
            return Some(g);
        }
    }
    None
}
