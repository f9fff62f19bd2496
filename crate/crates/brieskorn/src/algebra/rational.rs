//! Helpers for exact big-rational coefficients.
//!
//! `num::BigRational` already keeps every value in lowest terms with a
//! positive denominator, which is exactly the invariant we need; this module
//! only adds parsing, rendering and a rational gcd.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::{Error, Result};

/// Parses `"a"` or `"a/b"` into an exact rational.
pub fn parse(text: &str) -> Result<BigRational> {
    let bad = |msg: &str| Error::Parse {
        position: 0,
        message: format!("{msg}: {text:?}"),
    };
    let mut parts = text.splitn(2, '/');
    let num_part = parts.next().ok_or_else(|| bad("empty rational"))?;
    let numer: BigInt = num_part
        .trim()
        .parse()
        .map_err(|_| bad("invalid integer"))?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| bad("invalid denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Renders a rational as `"a"` or `"a/b"`.
pub fn render(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Positive gcd of two rationals: `gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2)`.
///
/// Both arguments divided by the result are integers; this is the
/// normalisation used when forming S-polynomials.
pub fn gcd(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let numer = a.numer().gcd(b.numer());
    let denom = a.denom().lcm(b.denom());
    BigRational::new(numer, denom).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> BigRational {
        parse(s).unwrap()
    }

    #[test]
    fn parse_and_render_round_trip() {
        for text in ["0", "7", "-3", "1/2", "-25/4", "75/16"] {
            assert_eq!(render(&r(text)), text);
        }
        // non-reduced input comes out in lowest terms
        assert_eq!(render(&r("4/6")), "2/3");
        assert_eq!(render(&r("3/-6")), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("a/b").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn rational_gcd_divides_both_to_integers() {
        let g = gcd(&r("2"), &r("5"));
        assert_eq!(g, r("1"));
        let g = gcd(&r("2"), &r("2"));
        assert_eq!(g, r("2"));
        let g = gcd(&r("1/2"), &r("3/4"));
        assert_eq!(g, r("1/4"));
        for (a, b) in [(r("2"), r("5")), (r("1/2"), r("3/4")), (r("-6"), r("4"))] {
            let g = gcd(&a, &b);
            assert!((a / &g).denom().is_one());
            assert!((b / &g).denom().is_one());
        }
    }
}
