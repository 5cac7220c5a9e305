//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`], an arbitrary-precision
//! rational kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// The integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `num/den` in lowest terms. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^k`.
pub fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Scalar::from_integer(acc)
}

/// Parses `"p"`, `"-p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    if !is_integer_literal(num) || !is_integer_literal(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise, `q > 0`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", parts.join(", "))
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_scalar("3"), Some(int(3)));
        assert_eq!(parse_scalar("-2/4"), Some(frac(-1, 2)));
        assert_eq!(parse_scalar(" 6 / -4 "), Some(frac(-3, 2)));
        assert_eq!(parse_scalar("+7"), Some(int(7)));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1.5", "1/0", "x", "1/2/3", "--1", "1e3"] {
            assert_eq!(parse_scalar(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn canonical_form() {
        assert_eq!(format_scalar(&frac(6, -4)), "-3/2");
        assert_eq!(format_scalar(&int(-5)), "-5");
        assert_eq!(format_scalar(&zero()), "0");
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), one());
        assert_eq!(factorial(4), int(24));
    }
}
