//! Exact scalars: arbitrary-precision rationals and complex rationals.
//!
//! Both are thin aliases over `num` types. Everything crossing a serialization
//! boundary goes through [`fraction_string`] / [`parse_rational`] so rationals
//! are always rendered as exact `p/q` strings.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Exact complex number with rational real and imaginary parts.
pub type ComplexRational = Complex<Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseScalarError {
    #[error("invalid rational `{0}` (expected p/q or an integer)")]
    Rational(String),
    #[error("invalid complex rational `{0}` (expected a, bi or a+bi with rational a, b)")]
    Complex(String),
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn real(value: Rational) -> ComplexRational {
    Complex::new(value, Rational::zero())
}

pub fn cint(value: i64) -> ComplexRational {
    real(int(value))
}

/// Canonical `p/q` rendering (integers render as `k/1`).
pub fn fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Short human-readable rendering (`3`, `-7/2`).
pub fn short_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseScalarError> {
    let trimmed = s.trim();
    let err = || ParseScalarError::Rational(s.to_string());
    if trimmed.is_empty() {
        return Err(err());
    }
    match trimmed.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = trimmed.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Parses `a`, `bi`, `a+bi` or `a-bi` where `a`, `b` are rationals (`i` alone means `1i`).
pub fn parse_complex(s: &str) -> Result<ComplexRational, ParseScalarError> {
    let trimmed: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || ParseScalarError::Complex(s.to_string());
    if trimmed.is_empty() {
        return Err(err());
    }
    let Some(body) = trimmed.strip_suffix('i') else {
        return parse_rational(&trimmed).map(real).map_err(|_| err());
    };
    // Split point: last sign that is not the leading character.
    let split = body
        .char_indices()
        .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i)
        .next_back();
    let (re_part, im_part) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im_part {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        other => parse_rational(other.trim_start_matches('+')).map_err(|_| err())?,
    };
    let re = parse_rational(re_part).map_err(|_| err())?;
    Ok(Complex::new(re, im))
}

/// Human-readable rendering of a complex rational (`-1`, `1/2+3i`, `-i`).
pub fn complex_string(z: &ComplexRational) -> String {
    if z.im.is_zero() {
        return short_string(&z.re);
    }
    let im_abs = z.im.abs();
    let im_txt = if im_abs.is_one() {
        String::new()
    } else {
        short_string(&im_abs)
    };
    let sign = if z.im.is_negative() { "-" } else { "+" };
    if z.re.is_zero() {
        let lead = if z.im.is_negative() { "-" } else { "" };
        format!("{lead}{im_txt}i")
    } else {
        format!("{}{sign}{im_txt}i", short_string(&z.re))
    }
}

/// |z|² = re² + im², exact.
pub fn modulus_sq(z: &ComplexRational) -> Rational {
    z.norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let q = rat(6, -4);
        assert_eq!(fraction_string(&q), "-3/2");
        assert_eq!(fraction_string(&int(3)), "3/1");
        assert_eq!(short_string(&int(3)), "3");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn parse_complex_forms() {
        assert_eq!(parse_complex("3").unwrap(), cint(3));
        assert_eq!(parse_complex("i").unwrap(), Complex::new(int(0), int(1)));
        assert_eq!(parse_complex("-i").unwrap(), Complex::new(int(0), int(-1)));
        assert_eq!(parse_complex("1/2-3/4i").unwrap(), Complex::new(rat(1, 2), rat(-3, 4)));
        assert_eq!(parse_complex("-1+2i").unwrap(), Complex::new(int(-1), int(2)));
        assert!(parse_complex("1+").is_err());
    }

    #[test]
    fn complex_rendering_round_trips() {
        for s in ["-1", "1/2+3i", "-i", "2-5/3i", "7i"] {
            let z = parse_complex(s).unwrap();
            assert_eq!(complex_string(&z), s);
        }
    }
}
