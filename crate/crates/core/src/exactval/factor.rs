//! Integer factorisation used for square-free extraction.
//!
//! Trial division by the primes below [`TRIAL_LIMIT`] handles everything at
//! the scale of Clifford radii. Cofactors that survive are tested with BPSW
//! and split with Brent's variant of Pollard rho under a fixed work budget.
//! Running out of budget is an error, never a guess.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::ExactError;

const TRIAL_LIMIT: u32 = 10_000;

/// Extra Miller-Rabin bases run on top of BPSW.
const MR_BASES: [u32; 12] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Rho iterations allowed per polynomial constant.
const RHO_BUDGET: u64 = 1 << 20;
const RHO_CONSTANTS: u32 = 16;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        sieve
            .iter()
            .enumerate()
            .filter_map(|(p, &is_p)| is_p.then_some(p as u32))
            .collect()
    })
}

/// Prime factorisation of `n` as ascending `(prime, exponent)` pairs.
/// `n = 0` is rejected; `n = 1` yields an empty list.
pub(crate) fn factorize(n: &BigUint) -> Result<Vec<(BigUint, u32)>, ExactError> {
    if n.is_zero() {
        return Err(ExactError::Domain("cannot factor zero".into()));
    }
    let mut rest = n.clone();
    let mut out: Vec<(BigUint, u32)> = Vec::new();

    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((pb, e));
        }
    }
    if rest.is_one() {
        return Ok(out);
    }
    let limit = BigUint::from(TRIAL_LIMIT);
    if rest < (&limit * &limit) {
        // no factor below the trial limit, so the cofactor is prime
        out.push((rest, 1));
        return Ok(out);
    }

    let mut large: Vec<BigUint> = Vec::new();
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        let root = m.sqrt();
        if &root * &root == m {
            stack.push(root.clone());
            stack.push(root);
            continue;
        }
        if is_probable_prime(&m) {
            large.push(m);
            continue;
        }
        let d = split(&m).ok_or_else(|| ExactError::FactorizationFailed(m.clone()))?;
        stack.push(&m / &d);
        stack.push(d);
    }
    large.sort();
    for p in large {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Ok(out)
}

/// Baillie-PSW plus a handful of extra strong-pseudoprime bases.
pub(crate) fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for &p in small_primes().iter().take(64) {
            if small == p as u64 {
                return true;
            }
            if small % p as u64 == 0 {
                return false;
            }
        }
    } else if n.is_even() {
        return false;
    }
    if !miller_rabin(n, &BigUint::from(2u32)) {
        return false;
    }
    if !strong_lucas(n) {
        return false;
    }
    MR_BASES.iter().all(|&a| miller_rabin(n, &BigUint::from(a)))
}

fn miller_rabin(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let a = base % n;
    if a.is_zero() {
        return true;
    }
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    let n_int = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n_int).to_biguint().unwrap_or_default();
    let mut n = n.clone();
    let mut result = 1;
    let three = BigUint::from(3u32);
    let five = BigUint::from(5u32);
    let eight = BigUint::from(8u32);
    let four = BigUint::from(4u32);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = &n % &eight;
            if r == three || r == five {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if &a % &four == three && &n % &four == three {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0 => {
                let g = BigInt::from(n.clone()).gcd(&d);
                if g.magnitude() != n {
                    return false;
                }
            }
            _ => {}
        }
        let two = BigInt::from(2);
        d = if d.sign() == Sign::Plus {
            -(d + two)
        } else {
            -(d - two)
        };
    }
    let n_int = BigInt::from(n.clone());
    let md = |x: BigInt| x.mod_floor(&n_int);
    let half = |x: BigInt| {
        let x = md(x);
        if x.is_odd() {
            (x + &n_int) >> 1
        } else {
            x >> 1
        }
    };
    let p = BigInt::one();
    let q = md((BigInt::one() - &d) / 4);

    let n_plus_1 = n + 1u32;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let odd = &n_plus_1 >> s;

    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.clone();
    let bits = odd.bits();
    for i in (0..bits - 1).rev() {
        u = md(&u * &v);
        v = md(&v * &v - (&qk << 1));
        qk = md(&qk * &qk);
        if odd.bit(i) {
            let nu = half(&p * &u + &v);
            let nv = half(&d * &u + &p * &v);
            u = nu;
            v = nv;
            qk = md(&qk * &q);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = md(&v * &v - (&qk << 1));
        if v.is_zero() {
            return true;
        }
        qk = md(&qk * &qk);
    }
    false
}

/// A nontrivial divisor of the composite `n`, or `None` when the budget runs out.
fn split(n: &BigUint) -> Option<BigUint> {
    (1..=RHO_CONSTANTS).find_map(|c| brent_rho(n, &BigUint::from(c)))
}

fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

fn brent_rho(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let one = BigUint::one();
    let batch: u64 = 128;
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = one.clone();
    let mut g = one.clone();
    let mut r: u64 = 1;
    let mut spent: u64 = 0;

    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = f(&y);
                q = (q * abs_diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        spent += 2 * r;
        r *= 2;
        if spent > RHO_BUDGET {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = abs_diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}
