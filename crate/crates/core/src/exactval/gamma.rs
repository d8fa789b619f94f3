use num_bigint::BigInt;
use num_traits::One;

use super::{ExactReal, Rational};

fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Γ(twice_arg / 2) in closed form.
///
/// Integer arguments give `(m-1)!`; half-integer arguments give
/// `Γ(m + 1/2) = (2m)! √π / (4^m m!)`.
///
/// # Panics
///
/// Panics if `twice_arg` is zero (the pole at 0).
pub fn gamma_half(twice_arg: u32) -> ExactReal {
    assert!(twice_arg >= 1, "Γ has a pole at 0");
    if twice_arg.is_multiple_of(2) {
        let m = twice_arg / 2;
        ExactReal::from_rational(Rational::from_integer(factorial(m - 1)))
    } else {
        let m = (twice_arg - 1) / 2;
        let num = factorial(2 * m);
        let den = (BigInt::one() << (2 * m)) * factorial(m);
        ExactReal::from_rational(Rational::new(num, den)).mul(&ExactReal::pi_pow(1))
    }
}
