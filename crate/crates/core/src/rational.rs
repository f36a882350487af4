//! Exact scalar type used throughout: arbitrary-precision rationals.

use num_bigint::BigInt;

/// Exact rational scalar. All coordinates, values, weights and masses in this
/// crate are of this type; no floating point enters any predicate.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d`. Panics if `d == 0`; intended for literals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Checked parse of `p/q` or `p` with explicit failure messages
/// (`Rational::from_str` panics on a zero denominator).
pub fn parse_rational(tok: &str) -> std::result::Result<Rational, String> {
    let parse_int = |s: &str| -> std::result::Result<BigInt, String> {
        s.parse::<BigInt>()
            .map_err(|_| format!("invalid integer `{s}`"))
    };
    match tok.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(tok)?)),
        Some((p, q)) => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom == BigInt::from(0) {
                return Err(format!("zero denominator in `{tok}`"));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Exact rational midpoint.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / rint(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), rint(5));
        assert_eq!(parse_rational("0/1").unwrap(), rint(0));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(rat(2, 4).to_string(), "1/2");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert_eq!(rat(1, -2).to_string(), "-1/2");
    }
}
