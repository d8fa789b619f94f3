//! Decimal rendering and the canonical text form.
//!
//! Canonical grammar (whitespace around `*` is free on input):
//!
//! ```text
//! value := ["-"] rat [" * sqrt(" rat ")"] [" * pi^" piexp]
//! rat   := int ["/" int]
//! piexp := int | "(" int "/2)"
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{pi_bits_cap, pi_power_interval, ExactError, ExactReal, Rational, SEED_PI_BITS};

/// Extra decimal digits carried before rounding.
const GUARD_DIGITS: i64 = 4;

fn log10_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.to_f64().unwrap_or(f64::INFINITY).log10()
    } else {
        let shift = bits - 64;
        (n >> shift).to_f64().unwrap_or(1.0).log10() + shift as f64 * std::f64::consts::LOG10_2
    }
}

fn log10_rational(q: &Rational) -> f64 {
    log10_big(q.numer().magnitude()) - log10_big(q.denom().magnitude())
}

fn round_off(x: &BigInt, digits: i64) -> BigInt {
    let unit = BigInt::from(10u32).pow(digits as u32);
    let half = &unit / 2;
    (x + half) / unit
}

fn format_scaled(n: &BigInt, places: i64, negative: bool) -> String {
    let sign = if negative && !n.is_zero() { "-" } else { "" };
    let mut digits = n.to_string();
    if places <= 0 {
        digits.push_str(&"0".repeat(places.unsigned_abs() as usize));
        return format!("{sign}{digits}");
    }
    let places = places as usize;
    if digits.len() <= places {
        digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
    }
    let split = digits.len() - places;
    format!("{sign}{}.{}", &digits[..split], &digits[split..])
}

impl ExactReal {
    /// Integer bounds `lo ≤ |self|·10^ten_exp ≤ hi` using π to `bits` bits.
    fn scaled_bounds(&self, ten_exp: i64, bits: u32) -> (BigInt, BigInt) {
        let (pi_lo, pi_hi) = pi_power_interval(self.pi_half_exp, bits);
        let mag = self.magnitude_sq();
        let ten = BigInt::from(10u32).pow(2 * ten_exp.unsigned_abs() as u32);
        let (mut num, mut den) = (mag.numer().clone(), mag.denom().clone());
        if ten_exp >= 0 {
            num *= ten;
        } else {
            den *= ten;
        }
        // plain integer division keeps the large dyadic π bounds unreduced
        let w_lo = (&num * pi_lo.numer()).div_floor(&(&den * pi_lo.denom()));
        let w_hi = (&num * pi_hi.numer()).div_ceil(&(&den * pi_hi.denom()));
        let lo = w_lo.sqrt();
        let r = w_hi.sqrt();
        let hi = if &r * &r == w_hi { r } else { r + 1 };
        (lo, hi)
    }

    /// round(|self| · 10^places), correct to within one unit.
    fn rounded_magnitude(&self, places: i64) -> BigInt {
        let cap = pi_bits_cap();
        let mut bits = SEED_PI_BITS;
        let mut guard = GUARD_DIGITS;
        loop {
            let (lo, hi) = self.scaled_bounds(places + guard, bits);
            let r_lo = round_off(&lo, guard);
            if r_lo == round_off(&hi, guard) || bits >= cap {
                return r_lo;
            }
            bits = (bits * 2).min(cap);
            guard += 8;
        }
    }

    /// Rough log10 |self|, for choosing how many places to compute.
    pub fn log10_estimate(&self) -> f64 {
        0.5 * log10_rational(&self.magnitude_sq())
            + 0.5 * self.pi_half_exp as f64 * std::f64::consts::PI.log10()
    }

    /// Decimal string with `places` digits after the point.
    pub fn to_fixed(&self, places: u32) -> String {
        let n = self.rounded_magnitude(places as i64);
        format_scaled(&n, places as i64, self.signum() < 0)
    }

    /// Decimal string with `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let digits = digits.max(1) as i64;
        if self.is_zero() {
            return "0".into();
        }
        let mut places = digits - 1 - self.log10_estimate().floor() as i64;
        let mut n = self.rounded_magnitude(places);
        for _ in 0..4 {
            let len = n.to_string().len() as i64;
            if len == digits {
                break;
            }
            places += digits - len;
            n = self.rounded_magnitude(places);
        }
        format_scaled(&n, places, self.signum() < 0)
    }

    /// Nearest f64, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(20).parse().unwrap_or(f64::NAN)
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<Self, ExactError> {
        s.parse()
    }
}

fn write_rat(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let coeff = self.coeff();
        if coeff.is_negative() {
            f.write_str("-")?;
        }
        write_rat(f, &coeff.abs())?;
        if !self.kernel.is_empty() {
            f.write_str(" * sqrt(")?;
            write_rat(f, &self.radicand())?;
            f.write_str(")")?;
        }
        match self.pi_half_exp {
            0 => Ok(()),
            p if p % 2 == 0 => write!(f, " * pi^{}", p / 2),
            p => write!(f, " * pi^({p}/2)"),
        }
    }
}

fn parse_err(msg: impl Into<String>) -> ExactError {
    ExactError::Parse(msg.into())
}

fn parse_uint(s: &str) -> Result<BigInt, ExactError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(format!("expected digits, found {s:?}")));
    }
    s.parse()
        .map_err(|_| parse_err(format!("bad integer {s:?}")))
}

fn parse_int(s: &str) -> Result<i64, ExactError> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let magnitude = parse_uint(body)?
        .to_i64()
        .ok_or_else(|| parse_err(format!("exponent {s:?} out of range")))?;
    Ok(if neg { -magnitude } else { magnitude })
}

fn parse_rat(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_uint(d.trim())?;
            if d.is_zero() {
                return Err(parse_err("zero denominator"));
            }
            Ok(Rational::new(parse_uint(n.trim())?, d))
        }
        None => Ok(Rational::from_integer(parse_uint(s)?)),
    }
}

fn parse_pi_exp(s: &str) -> Result<i64, ExactError> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(') {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| parse_err("unclosed π exponent"))?;
        let (n, d) = inner
            .split_once('/')
            .ok_or_else(|| parse_err("parenthesised π exponent must be n/2"))?;
        if d.trim() != "2" {
            return Err(parse_err("parenthesised π exponent must be n/2"));
        }
        parse_int(n.trim())
    } else {
        Ok(2 * parse_int(s)?)
    }
}

impl FromStr for ExactReal {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        let mut parts = s.split('*').map(str::trim);
        let head = parts.next().unwrap_or_default();
        let (negative, head) = match head.strip_prefix('-') {
            Some(rest) => (true, rest.trim_start()),
            None => (false, head),
        };
        let mut coeff = parse_rat(head)?;
        if negative {
            coeff = -coeff;
        }
        let mut radicand = None;
        let mut pi_half_exp = None;
        for part in parts {
            if let Some(body) = part.strip_prefix("sqrt(") {
                if radicand.is_some() || pi_half_exp.is_some() {
                    return Err(parse_err("sqrt factor out of place"));
                }
                let body = body
                    .strip_suffix(')')
                    .ok_or_else(|| parse_err("unclosed sqrt("))?;
                radicand = Some(parse_rat(body)?);
            } else if let Some(exp) = part.strip_prefix("pi^") {
                if pi_half_exp.is_some() {
                    return Err(parse_err("repeated π factor"));
                }
                pi_half_exp = Some(parse_pi_exp(exp)?);
            } else {
                return Err(parse_err(format!("unexpected factor {part:?}")));
            }
        }
        let radicand = radicand.unwrap_or_else(|| Rational::from_integer(BigInt::from(1)));
        if radicand.is_zero() {
            return Err(parse_err("sqrt(0)"));
        }
        ExactReal::canonicalize(coeff, pi_half_exp.unwrap_or(0), radicand)
    }
}
