//! Exact rational parameters and their text form (`p/q` or `p`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `2^k` as an exact rational; negative `k` gives `1/2^|k|`.
pub fn pow2(k: i64) -> Rational {
    let base = BigInt::one() << k.unsigned_abs() as usize;
    if k >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

/// Integer power that also accepts negative exponents for nonzero bases.
pub fn powi(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

pub fn parse(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::input(format!("not a rational: {text:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::input(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Canonical lowest-terms text; integers print without a denominator.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal expansion with `digits` fractional digits, rounded toward -inf
/// (`up = false`) or +inf (`up = true`).
pub fn to_decimal(r: &Rational, digits: usize, up: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    let n = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = n.is_negative();
    let mag = n.abs().to_string();
    let mag = if mag.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - mag.len()), mag)
    } else {
        mag
    };
    let (ip, fp) = mag.split_at(mag.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{fp}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(format(&parse(" -6/4 ").unwrap()), "-3/2");
        assert_eq!(format(&parse("7").unwrap()), "7");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(powi(&frac(2, 3), -2), frac(9, 4));
        assert_eq!(pow2(-3), frac(1, 8));
        assert_eq!(powi(&int(5), 0), int(1));
    }

    #[test]
    fn decimals_round_outward() {
        assert_eq!(to_decimal(&frac(1, 3), 3, false), "0.333");
        assert_eq!(to_decimal(&frac(1, 3), 3, true), "0.334");
        assert_eq!(to_decimal(&frac(-1, 3), 2, false), "-0.34");
        assert_eq!(to_decimal(&int(5), 2, true), "5.00");
    }
}
