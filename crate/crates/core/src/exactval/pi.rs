//! Rigorous enclosures of π.
//!
//! π is computed with Machin's formula in fixed point. Every truncated
//! division loses less than one unit, so the accumulated error is bounded
//! by the number of series terms; the enclosure widens by that bound.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const GUARD_BITS: u32 = 32;

/// Scaled enclosure: π ∈ [(mid - err) / 2^bits, (mid + err) / 2^bits].
#[derive(Clone, Debug)]
struct ScaledPi {
    bits: u32,
    mid: BigInt,
    err: BigInt,
}

fn cache() -> &'static RwLock<Option<ScaledPi>> {
    static CACHE: OnceLock<RwLock<Option<ScaledPi>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(None))
}

/// Σ (-1)^k / ((2k+1) x^(2k+1)) scaled by 2^bits, with the number of terms.
fn arctan_inv(x: u32, bits: u32) -> (BigInt, u64) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    (sum, k)
}

fn compute(bits: u32) -> ScaledPi {
    let work = bits + GUARD_BITS;
    let (a, ta) = arctan_inv(5, work);
    let (b, tb) = arctan_inv(239, work);
    let mid = a * 16 - b * 4;
    // per term: < 2 units from the running power, < 1 from the quotient;
    // the dropped tail is below one unit
    let err = BigInt::from(16 * (3 * ta + 2) + 4 * (3 * tb + 2));
    ScaledPi {
        bits: work,
        mid,
        err,
    }
}

/// Drops precision down to `bits`. Flooring loses under one unit in each of
/// mid and err.
fn truncate(c: ScaledPi, bits: u32) -> ScaledPi {
    if c.bits <= bits {
        return c;
    }
    let shift = c.bits - bits;
    ScaledPi {
        bits,
        mid: &c.mid >> shift,
        err: (&c.err >> shift) + 2,
    }
}

/// Lower and upper rational bounds on π with width at most about 2^-bits.
///
/// Results are memoised; a request at or below a cached precision reuses it.
pub fn pi_interval(bits: u32) -> (BigRational, BigRational) {
    let cached = cache().read().ok().and_then(|guard| {
        guard
            .as_ref()
            .filter(|c| c.bits >= bits + GUARD_BITS)
            .cloned()
    });
    let scaled = match cached {
        Some(c) => truncate(c, bits + GUARD_BITS),
        None => {
            let fresh = compute(bits);
            if let Ok(mut guard) = cache().write() {
                let replace = guard.as_ref().is_none_or(|c| c.bits < fresh.bits);
                if replace {
                    *guard = Some(fresh.clone());
                }
            }
            fresh
        }
    };
    // dyadic bounds; reducing them would only cost a gcd
    let denom = BigInt::one() << scaled.bits;
    (
        BigRational::new_raw(&scaled.mid - &scaled.err, denom.clone()),
        BigRational::new_raw(&scaled.mid + &scaled.err, denom),
    )
}
