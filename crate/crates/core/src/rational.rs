//! Exact rational arithmetic. All metric-space distances are `Rational`;
//! floating point appears nowhere in this crate.

use num::bigint::BigInt;
use num::{BigRational, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Parses `"p/q"` (or a bare integer `"p"`) into a rational in lowest terms.
/// The denominator must be positive after normalisation.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| Error::MalformedInput(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| Error::MalformedInput(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::MalformedInput(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `"p/q"` in lowest terms with `q > 0`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for raw in ["3/2", "-4/6", "7", "0/5"] {
            let r = parse_rational(raw).unwrap();
            let printed = format_rational(&r);
            assert_eq!(parse_rational(&printed).unwrap(), r);
        }
        assert_eq!(format_rational(&parse_rational("-4/6").unwrap()), "-2/3");
        assert_eq!(format_rational(&parse_rational("3").unwrap()), "3/1");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }
}
