//! Exact values of the form `q · √s · π^(p/2)`.
//!
//! `q` is rational, `p` an integer and `s` a positive rational whose square
//! part has been pulled into `q`. Every area, radius and width produced by
//! this crate lives in that class, which is closed under multiplication,
//! division and integer powers but not under addition.
//!
//! Values are stored canonically, so structural equality is mathematical
//! equality: π is transcendental, and square roots of distinct square-free
//! integers are linearly independent over ℚ. Internally the radicand is kept
//! as its square-free kernel `k` (a sorted list of distinct primes) together
//! with a rational `scale` such that the value is `scale · √k · π^(p/2)`.
//! The public radicand is `ℓ/(k/ℓ)` with `ℓ` the smallest prime of `k`, so
//! `√15` reads as `5 · √(3/5)` and `√12` as `2 · √3`.
//!
//! Ordering between different powers of π is decided by interval
//! evaluation with an adaptively refined enclosure of π.

mod factor;
mod format;
mod gamma;
mod pi;

use std::cmp::Ordering;
use std::ops::{Mul, Neg};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use gamma::gamma_half;
pub use pi::pi_interval;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Starting precision for π when two values need a numeric comparison.
pub const SEED_PI_BITS: u32 = 128;

/// Default ceiling on π precision before a comparison gives up.
pub const DEFAULT_PI_BITS_CAP: u32 = 4096;

/// Environment variable overriding [`DEFAULT_PI_BITS_CAP`].
pub const PI_BITS_ENV: &str = "CLIFFORD_WIDTH_PI_BITS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("could not factor {0} within the work budget")]
    FactorizationFailed(BigUint),
    #[error("values could not be separated with π to {bits} bits")]
    Undecidable { bits: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("result is not representable as q·√s·π^(p/2): {0}")]
    NotRepresentable(String),
}

/// π precision cap in bits, read once from [`PI_BITS_ENV`].
pub fn pi_bits_cap() -> u32 {
    static CAP: OnceLock<u32> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(PI_BITS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .filter(|&bits| bits >= SEED_PI_BITS)
            .unwrap_or(DEFAULT_PI_BITS_CAP)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactReal {
    scale: Rational,
    pi_half_exp: i64,
    kernel: Vec<BigUint>,
}

fn product(primes: &[BigUint]) -> BigUint {
    primes.iter().fold(BigUint::one(), |acc, p| acc * p)
}

fn int_rat(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Symmetric difference of two sorted prime lists and the product of their intersection.
fn merge_kernels(a: &[BigUint], b: &[BigUint]) -> (Vec<BigUint>, BigUint) {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut common = BigUint::one();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                common *= &a[i];
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    (out, common)
}

impl ExactReal {
    pub fn zero() -> Self {
        ExactReal {
            scale: Rational::zero(),
            pi_half_exp: 0,
            kernel: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        ExactReal {
            scale: q,
            pi_half_exp: 0,
            kernel: Vec::new(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// π^(half_exp/2).
    pub fn pi_pow(half_exp: i64) -> Self {
        ExactReal {
            scale: Rational::one(),
            pi_half_exp: half_exp,
            kernel: Vec::new(),
        }
    }

    /// Builds the canonical form of `coeff · √radicand · π^(pi_half_exp/2)`.
    pub fn canonicalize(
        coeff: Rational,
        pi_half_exp: i64,
        radicand: Rational,
    ) -> Result<Self, ExactError> {
        if coeff.is_zero() {
            return Ok(Self::zero());
        }
        if !radicand.is_positive() {
            return Err(ExactError::Domain(format!(
                "square root of non-positive radicand {radicand}"
            )));
        }
        let num = radicand.numer().magnitude().clone();
        let den = radicand.denom().magnitude().clone();
        let mut scale = coeff;
        let mut kernel = Vec::new();
        for (p, e) in factor::factorize(&num)? {
            scale *= int_rat(p.pow(e / 2));
            if e % 2 == 1 {
                kernel.push(p);
            }
        }
        // √(1/p^e) = √p^(e mod 2) / p^⌈e/2⌉
        for (p, e) in factor::factorize(&den)? {
            scale /= int_rat(p.pow(e.div_ceil(2)));
            if e % 2 == 1 {
                kernel.push(p);
            }
        }
        kernel.sort();
        Ok(ExactReal {
            scale,
            pi_half_exp,
            kernel,
        })
    }

    /// √q for positive rational q.
    pub fn sqrt_rational(q: &Rational) -> Result<Self, ExactError> {
        if !q.is_positive() {
            return Err(ExactError::Domain(format!(
                "square root of non-positive {q}"
            )));
        }
        Self::canonicalize(Rational::one(), 0, q.clone())
    }

    /// Rational coefficient in front of `√radicand()`.
    pub fn coeff(&self) -> Rational {
        match self.kernel.split_first() {
            Some((_, rest)) => &self.scale * int_rat(product(rest)),
            None => self.scale.clone(),
        }
    }

    pub fn pi_half_exp(&self) -> i64 {
        self.pi_half_exp
    }

    /// Square-free radicand; 1 when there is no surd.
    pub fn radicand(&self) -> Rational {
        match self.kernel.split_first() {
            Some((smallest, rest)) => {
                Rational::new(BigInt::from(smallest.clone()), BigInt::from(product(rest)))
            }
            None => Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.scale.is_positive() {
            1
        } else if self.scale.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        ExactReal {
            scale: self.scale.abs(),
            ..self.clone()
        }
    }

    /// The value as a rational, when it has no surd and no π factor.
    pub fn to_rational(&self) -> Option<Rational> {
        (self.kernel.is_empty() && self.pi_half_exp == 0).then(|| self.scale.clone())
    }

    /// value² / π^pi_half_exp, always a nonnegative rational.
    fn magnitude_sq(&self) -> Rational {
        &self.scale * &self.scale * int_rat(product(&self.kernel))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (kernel, common) = merge_kernels(&self.kernel, &other.kernel);
        ExactReal {
            scale: &self.scale * &other.scale * int_rat(common),
            pi_half_exp: self.pi_half_exp + other.pi_half_exp,
            kernel,
        }
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // 1/(c√k) = √k / (c·k)
        let k = int_rat(product(&self.kernel));
        Ok(ExactReal {
            scale: (&self.scale * k).recip(),
            pi_half_exp: -self.pi_half_exp,
            kernel: self.kernel.clone(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow_int(&self, exp: i64) -> Result<Self, ExactError> {
        if exp == 0 {
            return Ok(Self::one());
        }
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Sum of two values sharing π exponent and radicand. Anything else
    /// leaves the representable class and is refused.
    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_half_exp != other.pi_half_exp || self.kernel != other.kernel {
            return Err(ExactError::NotRepresentable(format!("{self} + {other}")));
        }
        let scale = &self.scale + &other.scale;
        if scale.is_zero() {
            return Ok(Self::zero());
        }
        Ok(ExactReal {
            scale,
            ..self.clone()
        })
    }

    /// Total order with the default π precision cap.
    pub fn compare(&self, other: &Self) -> Result<Ordering, ExactError> {
        self.compare_with_cap(other, pi_bits_cap())
    }

    pub fn compare_with_cap(&self, other: &Self, cap_bits: u32) -> Result<Ordering, ExactError> {
        if self == other {
            return Ok(Ordering::Equal);
        }
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return Ok(sa.cmp(&sb));
        }
        // same nonzero sign from here on
        let by_magnitude = compare_magnitudes(self, other, cap_bits)?;
        Ok(if sa < 0 {
            by_magnitude.reverse()
        } else {
            by_magnitude
        })
    }
}

/// Compares |a| and |b| for nonzero a, b.
fn compare_magnitudes(a: &ExactReal, b: &ExactReal, cap_bits: u32) -> Result<Ordering, ExactError> {
    let ma = a.magnitude_sq();
    let mb = b.magnitude_sq();
    if a.pi_half_exp == b.pi_half_exp {
        return Ok(ma.cmp(&mb));
    }
    // |a| vs |b|  ⟺  ratio vs π^m  with ratio = ma/mb, m = pb - pa
    let ratio = ma / mb;
    let m = b.pi_half_exp - a.pi_half_exp;
    let mut bits = SEED_PI_BITS;
    loop {
        let (lo, hi) = pi_power_interval(m, bits);
        if ratio < lo {
            return Ok(Ordering::Less);
        }
        if ratio > hi {
            return Ok(Ordering::Greater);
        }
        if bits >= cap_bits {
            return Err(ExactError::Undecidable { bits });
        }
        bits = (bits * 2).min(cap_bits);
    }
}

/// Enclosure of π^m for any integer m.
pub(crate) fn pi_power_interval(m: i64, bits: u32) -> (Rational, Rational) {
    let (lo, hi) = pi_interval(bits);
    let e = m.unsigned_abs() as usize;
    let pow = |q: Rational| Rational::new_raw(q.numer().pow(e as u32), q.denom().pow(e as u32));
    let lo_p = pow(lo);
    let hi_p = pow(hi);
    if m >= 0 {
        (lo_p, hi_p)
    } else {
        (hi_p.recip(), lo_p.recip())
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl Mul for &ExactReal {
    type Output = ExactReal;
    fn mul(self, rhs: &ExactReal) -> ExactReal {
        ExactReal::mul(self, rhs)
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        ExactReal {
            scale: -self.scale,
            ..self
        }
    }
}

impl From<Rational> for ExactReal {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sqrt(n: i64, d: i64) -> ExactReal {
        ExactReal::sqrt_rational(&rat(n, d)).unwrap()
    }

    #[test]
    fn canonicalize_extracts_squares() {
        let x = ExactReal::canonicalize(rat(1, 1), 0, rat(12, 1)).unwrap();
        assert_eq!(x.coeff(), rat(2, 1));
        assert_eq!(x.pi_half_exp(), 0);
        assert_eq!(x.radicand(), rat(3, 1));

        let y = ExactReal::canonicalize(rat(3, 8), 6, rat(3, 1)).unwrap();
        assert_eq!(
            (y.coeff(), y.pi_half_exp(), y.radicand()),
            (rat(3, 8), 6, rat(3, 1))
        );

        let z = ExactReal::canonicalize(rat(1, 1), 0, rat(9, 4)).unwrap();
        assert_eq!((z.coeff(), z.radicand()), (rat(3, 2), rat(1, 1)));
    }

    #[test]
    fn canonicalize_rejects_bad_radicand() {
        assert!(matches!(
            ExactReal::canonicalize(rat(1, 1), 0, rat(0, 1)),
            Err(ExactError::Domain(_))
        ));
        assert!(ExactReal::canonicalize(rat(1, 1), 0, rat(-2, 1)).is_err());
        assert_eq!(
            ExactReal::canonicalize(rat(0, 1), 4, rat(-2, 1)).unwrap(),
            ExactReal::zero()
        );
    }

    #[test]
    fn reciprocal_radicands_share_one_form() {
        // (1/2)√2 and √(1/2) are the same number
        let a = ExactReal::from_ratio(1, 2).mul(&sqrt(2, 1));
        let b = sqrt(1, 2);
        assert_eq!(a, b);
        assert_eq!(sqrt(3, 5).radicand(), rat(3, 5));
        assert_eq!(sqrt(5, 3), ExactReal::from_ratio(5, 3).mul(&sqrt(3, 5)));
        assert_eq!(sqrt(15, 1).coeff(), rat(5, 1));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(sqrt(2, 1).mul(&sqrt(2, 1)), ExactReal::from_integer(2));

        let two_pi = ExactReal::from_integer(2).mul(&ExactReal::pi_pow(2));
        let other = two_pi.mul(&sqrt(1, 2));
        let expected = ExactReal::from_integer(2)
            .mul(&sqrt(2, 1))
            .mul(&ExactReal::pi_pow(4));
        assert_eq!(two_pi.mul(&other), expected);

        let x = sqrt(3, 5).mul(&ExactReal::pi_pow(6));
        assert_eq!(x.mul(&ExactReal::one()), x);
    }

    #[test]
    fn div_and_pow_examples() {
        assert_eq!(sqrt(3, 5).radicand(), rat(3, 5));
        let cubed = sqrt(1, 2).pow_int(3).unwrap();
        assert_eq!(cubed, ExactReal::from_ratio(1, 4).mul(&sqrt(2, 1)));
        let q = ExactReal::pi_pow(4).div(&ExactReal::pi_pow(3)).unwrap();
        assert_eq!(q, ExactReal::pi_pow(1));
        assert_eq!(
            ExactReal::one().div(&ExactReal::zero()),
            Err(ExactError::DivisionByZero)
        );
        assert_eq!(
            ExactReal::zero().pow_int(-1),
            Err(ExactError::DivisionByZero)
        );
        assert_eq!(sqrt(7, 3).pow_int(-2).unwrap(), ExactReal::from_ratio(3, 7));
    }

    #[test]
    fn compare_examples() {
        let two_pi2 = ExactReal::from_integer(2).mul(&ExactReal::pi_pow(4));
        let rp5_loser = ExactReal::from_ratio(3, 8)
            .mul(&sqrt(3, 1))
            .mul(&ExactReal::pi_pow(6));
        assert_eq!(two_pi2.compare(&rp5_loser), Ok(Ordering::Less));
        assert_eq!(rp5_loser.compare(&two_pi2), Ok(Ordering::Greater));

        let pi2 = ExactReal::pi_pow(4);
        assert_eq!(pi2.compare(&pi2.clone()), Ok(Ordering::Equal));

        let a = ExactReal::from_ratio(25, 216)
            .mul(&sqrt(5, 1))
            .mul(&ExactReal::pi_pow(8));
        let b = ExactReal::from_ratio(1, 4).mul(&ExactReal::pi_pow(8));
        assert_eq!(a.compare(&b), Ok(Ordering::Greater));
    }

    #[test]
    fn compare_handles_signs() {
        let a = ExactReal::pi_pow(2);
        let b = -ExactReal::from_integer(100);
        assert_eq!(b.compare(&a), Ok(Ordering::Less));
        assert_eq!(
            (-a.clone()).compare(&-ExactReal::from_integer(3)),
            Ok(Ordering::Less)
        );
        assert_eq!(ExactReal::zero().compare(&a), Ok(Ordering::Less));
        assert!(-ExactReal::from_integer(4) < -ExactReal::pi_pow(2));
    }

    #[test]
    fn near_ties_report_undecidable() {
        let pi = ExactReal::pi_pow(2);
        assert_eq!(
            pi.compare(&ExactReal::from_ratio(355, 113)),
            Ok(Ordering::Less)
        );

        // a rational within ~2^-300 of π cannot be separated from it with 256 bits
        let (lo, _) = pi_interval(400);
        let close = ExactReal::from_rational(lo);
        assert_eq!(
            pi.compare_with_cap(&close, 256),
            Err(ExactError::Undecidable { bits: 256 })
        );
        assert_eq!(pi.compare_with_cap(&close, 1024), Ok(Ordering::Greater));
    }

    #[test]
    fn try_add_stays_in_class() {
        let a = ExactReal::from_ratio(1, 3).mul(&sqrt(2, 1));
        let b = ExactReal::from_ratio(2, 3).mul(&sqrt(2, 1));
        assert_eq!(a.try_add(&b).unwrap(), sqrt(2, 1));
        assert!(matches!(
            a.try_add(&ExactReal::pi_pow(2)),
            Err(ExactError::NotRepresentable(_))
        ));
    }
}
