//! The scalar type: arbitrary-precision reduced rationals.
//!
//! `Rat` is `num_rational::BigRational`, which already maintains the
//! invariants this crate relies on: the fraction is stored reduced with a
//! positive denominator, and all arithmetic is exact. The canonical text form
//! is `"p/q"` (or just `"p"` when q = 1), which is what `Display` produces
//! and `parse_rat` accepts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Error;

pub type Rat = num_rational::BigRational;

/// Rational from an integer pair; panics on q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from an integer.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or `"p"`, reducing and normalizing the sign.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    s.trim().parse::<Rat>().map_err(|_| Error::BadParameter(format!("not a rational: {:?}", s)))
}

/// Canonical `"p/q"` form (just `"p"` for integers).
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Generalized binomial coefficient by the falling-factorial product
/// n(n-1)...(n-k+1)/k!, defined for any rational upper index and a
/// non-negative integer lower index.
pub fn binomial(n: &Rat, k: i64) -> Result<Rat, Error> {
    if k < 0 {
        return Err(Error::NegativeLowerIndex(k));
    }
    let mut num = Rat::one();
    let mut term = n.clone();
    for _ in 0..k {
        num *= &term;
        term -= Rat::one();
    }
    Ok(num / Rat::from_integer(factorial(k as usize)))
}

/// Binomial coefficient with an integer (possibly negative) upper index.
pub fn binom(n: i64, k: i64) -> Rat {
    binomial(&rat_int(n), k).expect("lower index is non-negative")
}

/// Row n of Pascal's triangle, C(n,0)..C(n,n), by the additive recurrence.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigInt::one());
        for j in 1..m {
            next.push(&row[j - 1] + &row[j]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// (-1)^k as a rational.
pub fn alt_sign(k: usize) -> Rat {
    if k.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Integer power with a signed exponent; negative exponents require r != 0.
pub fn rat_pow(r: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(r.clone(), e as usize)
    } else {
        assert!(!r.is_zero(), "zero cannot be raised to a negative power");
        num_traits::pow::pow(r.clone(), (-e) as usize).recip()
    }
}
