use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as an exact rational. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Formats a scalar as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `"p"`, `"p/q"` or a terminating decimal such as `"-0.25"`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Ok(v) = Scalar::from_str(t) {
        return Some(v);
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, fractional) = body.split_once('.')?;
    if whole.is_empty() && fractional.is_empty() {
        return None;
    }
    if !whole.chars().chain(fractional.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{fractional}");
    let numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
    let denom = num_traits::pow(BigInt::from(10), fractional.len());
    let v = Scalar::new(numer, denom);
    Some(if neg { -v } else { v })
}

pub fn is_positive(s: &Scalar) -> bool {
    s.is_positive()
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

/// Binomial coefficient with saturation, used for evaluation-budget estimates.
pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_uses_lowest_terms() {
        assert_eq!(format_scalar(&frac(6, -4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
        assert_eq!(format_scalar(&frac(0, 5)), "0");
    }

    #[test]
    fn parsing_accepts_fractions_and_decimals() {
        assert_eq!(parse_scalar("3/4"), Some(frac(3, 4)));
        assert_eq!(parse_scalar("-12"), Some(int(-12)));
        assert_eq!(parse_scalar("-0.25"), Some(frac(-1, 4)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
        assert_eq!(parse_scalar(""), None);
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 8), 495);
        assert_eq!(binomial(4, 0), 1);
    }
}
