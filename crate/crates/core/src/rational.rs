//! Scalar field: arbitrary-precision rationals.
//!
//! `BigRational` keeps values in lowest terms with a positive denominator,
//! which is exactly the normal form the rest of the crate relies on for
//! structural equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Integer as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `(-1)^k` for a parity exponent.
pub fn sign(odd: bool) -> Rational {
    if odd {
        -one()
    } else {
        one()
    }
}

/// Parses `3`, `-2`, `1/2`, `-7/3`. Rejects zero denominators.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical text form: `n` for integers, `p/q` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// True when the value is an integer (denominator 1).
pub fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Integer value as `i64` when it fits and is integral.
pub fn to_i64(value: &Rational) -> Option<i64> {
    if !is_integer(value) {
        return None;
    }
    i64::try_from(value.numer()).ok()
}

pub fn is_negative(value: &Rational) -> bool {
    value.is_negative()
}

pub fn is_positive(value: &Rational) -> bool {
    value.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(frac(0, 5), zero());
        assert_eq!(zero().denom(), &BigInt::from(1));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("1/2"), Some(frac(1, 2)));
        assert_eq!(parse_rational("-4/6"), Some(frac(-2, 3)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&frac(-2, 3)), "-2/3");
        assert_eq!(format_rational(&int(5)), "5");
    }
}
