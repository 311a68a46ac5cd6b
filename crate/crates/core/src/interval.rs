//! Closed intervals with exact rational endpoints.
//!
//! Endpoints are kept as dyadic rationals after [`Interval::round_outward`],
//! which keeps their size bounded while still enclosing the true value.
//! The transcendental helpers (`exp`, `ln`, roots of two) return rigorous
//! enclosures computed from exact partial sums and explicit tail bounds.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{pow2, to_decimal, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// True when `other` lies inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// Widens both endpoints to multiples of `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> Interval {
        let scale = pow2(bits as i64);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Interval { lo, hi }
    }

    pub fn recip(&self) -> Interval {
        assert!(!self.contains_zero(), "reciprocal of an interval containing zero");
        Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        if k.is_negative() {
            Interval {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            Interval {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    pub fn div(&self, other: &Interval) -> Interval {
        self * &other.recip()
    }

    /// `self^k` for a nonnegative interval.
    pub fn powi_nonneg(&self, k: u32) -> Interval {
        assert!(!self.lo.is_negative());
        Interval {
            lo: num_traits::pow(self.lo.clone(), k as usize),
            hi: num_traits::pow(self.hi.clone(), k as usize),
        }
    }

    /// Decimal rendering `[lo,hi]`, rounded outward at `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        format!(
            "[{},{}]",
            to_decimal(&self.lo, digits, false),
            to_decimal(&self.hi, digits, true)
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(12))
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }
}

/// Enclosure of `2^(num/den)` with endpoints on the `2^-bits` grid.
///
/// Exact (a point) whenever the power is rational, i.e. when `den` divides
/// `num` after reduction.
pub fn pow2_ratio(num: u64, den: u64, bits: u32) -> Interval {
    assert!(den > 0);
    let g = num.gcd(&den);
    let (num, den) = (num / g, den / g);
    let whole = pow2((num / den) as i64);
    let rem = num % den;
    if rem == 0 {
        return Interval::point(whole);
    }
    // floor(2^bits * 2^(rem/den)) = floor((2^(rem + den*bits))^(1/den))
    let radicand = BigUint::one() << (rem + den * bits as u64) as usize;
    let s = radicand.nth_root(den as u32);
    let scale = pow2(-(bits as i64));
    let lo = Rational::from_integer(BigInt::from(s.clone())) * &scale;
    let hi = Rational::from_integer(BigInt::from(s + 1u32)) * &scale;
    Interval::new(lo * &whole, hi * &whole)
}

/// Enclosure of `e^x` of width about `2^-bits` relative to its magnitude.
pub fn exp(x: &Rational, bits: u32) -> Interval {
    if x.is_negative() {
        return exp(&-x, bits).recip().round_outward(bits + 8);
    }
    if x.is_zero() {
        return Interval::point(Rational::one());
    }
    // halve until y <= 1/2, then square back up
    let mut k = 0u32;
    let mut y = x.clone();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    while y > half {
        y /= Rational::from_integer(BigInt::from(2));
        k += 1;
    }
    let guard = bits + 2 * k + 16;
    let tol = pow2(-(guard as i64));
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let mut j = 1u64;
    loop {
        term = term * &y / Rational::from_integer(BigInt::from(j));
        sum += &term;
        // remaining tail is at most 2 * next term since y <= 1/2
        let next = &term * &y / Rational::from_integer(BigInt::from(j + 1));
        let tail = &next * Rational::from_integer(BigInt::from(2));
        if tail < tol {
            let mut iv = Interval::new(sum.clone(), sum + tail).round_outward(guard);
            for _ in 0..k {
                iv = (&iv * &iv).round_outward(guard);
            }
            return iv.round_outward(bits + 8);
        }
        j += 1;
    }
}

/// Enclosure of `atanh(u)` for `0 <= u <= 1/2`.
fn atanh_small(u: &Rational, guard: u32) -> Interval {
    let tol = pow2(-(guard as i64));
    let u2 = u * u;
    let mut pow = u.clone();
    let mut sum = Rational::zero();
    let mut j = 0u64;
    // tail after term j is <= u^(2j+3)/(2j+3) / (1 - u^2) <= 4/3 * next term
    loop {
        sum += &pow / Rational::from_integer(BigInt::from(2 * j + 1));
        pow *= &u2;
        let next = &pow / Rational::from_integer(BigInt::from(2 * j + 3));
        let tail = next * Rational::new(BigInt::from(4), BigInt::from(3));
        if tail < tol {
            return Interval::new(sum.clone(), sum + tail);
        }
        j += 1;
    }
}

/// Enclosure of `ln 2`.
pub fn ln2(bits: u32) -> Interval {
    let guard = bits + 16;
    atanh_small(&Rational::new(BigInt::one(), BigInt::from(3)), guard)
        .scale(&Rational::from_integer(BigInt::from(2)))
        .round_outward(bits + 8)
}

/// Enclosure of `ln x` for rational `x > 0`.
pub fn ln(x: &Rational, bits: u32) -> Interval {
    assert!(x.is_positive(), "ln of a non-positive number");
    if x < &Rational::one() {
        let r = ln(&x.recip(), bits);
        return Interval::new(-r.hi, -r.lo);
    }
    // x = 2^k * y with 1 <= y < 2
    let mut k = 0i64;
    let mut y = x.clone();
    let two = Rational::from_integer(BigInt::from(2));
    while y >= two {
        y /= &two;
        k += 1;
    }
    let guard = bits + 16 + (64 - (k as u64).leading_zeros());
    let u = (&y - Rational::one()) / (&y + Rational::one());
    let ln_y = atanh_small(&u, guard).scale(&two);
    let ln_2 = atanh_small(&Rational::new(BigInt::one(), BigInt::from(3)), guard).scale(&two);
    (&ln_y + &ln_2.scale(&Rational::from_integer(BigInt::from(k)))).round_outward(bits + 8)
}
