//! Generators for the concrete number sequences and polynomial families:
//! Bernoulli, Euler, conjugate Bernoulli, and the self-dual corpus
//! (powers of 1/2, reciprocal binomials, Lucas, n F_{n-1}, harmonic).
//!
//! Every generator is exact and prefix-stable: regenerating at a larger
//! order extends the values without changing earlier ones.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::poly::Polynomial;
use crate::rational::{binomial_row, factorial, rat, rat_int, rat_pow, Rat};
use crate::series::PowerSeries;
use crate::Error;

/// How a sequence was produced, carried along for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Recurrence,
    GfExtraction,
}

/// A finite prefix a_0..a_N of a named sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSequence {
    pub name: String,
    pub values: Vec<Rat>,
    pub provenance: Provenance,
}

impl NamedSequence {
    pub fn new(name: impl Into<String>, values: Vec<Rat>, provenance: Provenance) -> Self {
        Self { name: name.into(), values, provenance }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// polys[n] is the degree-n member of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialFamily {
    pub name: String,
    pub polys: Vec<Polynomial>,
}

/// The self-dual corpus of plain number sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corpus {
    /// 1/2^n.
    PowHalf,
    /// 1/C(n+2m-1, m) for a fixed integer m >= 1.
    InvBinom(u32),
    /// (-1)^n B_n.
    SignedBernoulli,
    /// Lucas numbers, L_0 = 2, L_1 = 1.
    Lucas,
    /// n F_{n-1} with F_0 = 0, F_1 = 1; the n = 0 term is 0.
    NFib,
    /// Harmonic numbers H_n, H_0 = 0.
    Harmonic,
}

/// B_0..B_N extracted from the generating function t/(e^t - 1); the
/// convention is B_1 = -1/2.
pub fn bernoulli_numbers(n_max: usize) -> NamedSequence {
    let order = n_max + 1;
    let et_minus_1 = PowerSeries::exp(&Rat::one(), order).sub(&PowerSeries::one(order));
    let gf = PowerSeries::t(order)
        .divide(&et_minus_1)
        .expect("e^t - 1 has order exactly one");
    let values = gf.truncated(n_max).egf_values();
    NamedSequence::new("bernoulli", values, Provenance::GfExtraction)
}

/// B_n(x) = sum C(n,k) B_k x^(n-k), degree n and monic.
pub fn bernoulli_poly(n: usize) -> Polynomial {
    bernoulli_poly_family(n).polys.pop().expect("family has n+1 members")
}

pub fn bernoulli_poly_family(n_max: usize) -> PolynomialFamily {
    let b = bernoulli_numbers(n_max).values;
    let polys = (0..=n_max)
        .map(|n| {
            let row = binomial_row(n);
            let coeffs = (0..=n)
                .map(|j| Rat::from_integer(row[j].clone()) * &b[n - j])
                .collect();
            Polynomial::new(coeffs)
        })
        .collect();
    PolynomialFamily { name: "bernoulli-poly".into(), polys }
}

/// E_n(x) by the recurrence E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x),
/// which is the coefficient identity of (e^t + 1) * gf = 2 e^{xt}.
pub fn euler_poly_family(n_max: usize) -> PolynomialFamily {
    let mut polys: Vec<Polynomial> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let row = binomial_row(n);
        let mut sum = Polynomial::zero();
        for (k, poly) in polys.iter().enumerate() {
            sum = sum.add(&poly.scale(&Rat::from_integer(row[k].clone())));
        }
        let xn = Polynomial::monomial(Rat::one(), n);
        polys.push(xn.sub(&sum.scale(&rat(1, 2))));
    }
    PolynomialFamily { name: "euler-poly".into(), polys }
}

pub fn euler_poly(n: usize) -> Polynomial {
    euler_poly_family(n).polys.pop().expect("family has n+1 members")
}

/// Euler numbers E_n = 2^n E_n(1/2); all integers, odd ones zero.
pub fn euler_numbers(n_max: usize) -> NamedSequence {
    let family = euler_poly_family(n_max);
    let half = rat(1, 2);
    let values = family
        .polys
        .iter()
        .enumerate()
        .map(|(n, p)| p.eval(&half) * rat_pow(&rat_int(2), n as i64))
        .collect();
    NamedSequence::new("euler", values, Provenance::Recurrence)
}

/// E_n(1/2) - 1/2^n, the D2 self-dual sequence.
pub fn euler_half_diff(n_max: usize) -> NamedSequence {
    let family = euler_poly_family(n_max);
    let half = rat(1, 2);
    let values = family
        .polys
        .iter()
        .enumerate()
        .map(|(n, p)| p.eval(&half) - rat_pow(&half, n as i64))
        .collect();
    NamedSequence::new("euler-half-diff", values, Provenance::Recurrence)
}

/// (-1)^n (E_n(1/2) - 1/2^n), the D4 self-dual sequence.
pub fn signed_euler_half_diff(n_max: usize) -> NamedSequence {
    let base = euler_half_diff(n_max);
    let values = base
        .values
        .into_iter()
        .enumerate()
        .map(|(n, v)| if n % 2 == 0 { v } else { -v })
        .collect();
    NamedSequence::new("signed-euler-half-diff", values, Provenance::Recurrence)
}

/// Conjugate Bernoulli numbers from the generating function t/(1+2t-e^t)
/// and the polynomial family rebuilt from them binomially.
pub fn conjugate_bernoulli(n_max: usize) -> (NamedSequence, PolynomialFamily) {
    let order = n_max + 1;
    // 1 + 2t - e^t = t - t^2/2 - t^3/6 - ... has order exactly one.
    let den = PowerSeries::one(order)
        .add(&PowerSeries::t(order).scale(&rat_int(2)))
        .sub(&PowerSeries::exp(&Rat::one(), order));
    let gf = PowerSeries::t(order).divide(&den).expect("denominator has order one");
    let numbers = gf.truncated(n_max).egf_values();
    let polys = (0..=n_max)
        .map(|n| {
            let row = binomial_row(n);
            let coeffs = (0..=n)
                .map(|j| Rat::from_integer(row[j].clone()) * &numbers[n - j])
                .collect();
            Polynomial::new(coeffs)
        })
        .collect();
    let seq = NamedSequence::new("conj-bernoulli", numbers, Provenance::GfExtraction);
    (seq, PolynomialFamily { name: "conj-bernoulli-poly".into(), polys })
}

/// Harmonic numbers H_n = sum_{k=1..n} 1/k.
pub fn harmonic_numbers(n_max: usize) -> NamedSequence {
    let mut values = Vec::with_capacity(n_max + 1);
    let mut acc = Rat::zero();
    values.push(acc.clone());
    for k in 1..=n_max {
        acc += rat(1, k as i64);
        values.push(acc.clone());
    }
    NamedSequence::new("harmonic", values, Provenance::ClosedForm)
}

/// One of the corpus sequences at order N.
pub fn corpus(which: Corpus, n_max: usize) -> Result<NamedSequence, Error> {
    let seq = match which {
        Corpus::PowHalf => {
            let values = (0..=n_max).map(|n| rat_pow(&rat(1, 2), n as i64)).collect();
            NamedSequence::new("pow-half", values, Provenance::ClosedForm)
        }
        Corpus::InvBinom(m) => {
            if m < 1 {
                return Err(Error::BadParameter("inv-binom needs m >= 1".into()));
            }
            let m = m as i64;
            let values = (0..=n_max as i64)
                .map(|n| crate::rational::binom(n + 2 * m - 1, m).recip())
                .collect();
            NamedSequence::new(format!("inv-binom-{}", m), values, Provenance::ClosedForm)
        }
        Corpus::SignedBernoulli => {
            let b = bernoulli_numbers(n_max);
            let values = b
                .values
                .into_iter()
                .enumerate()
                .map(|(n, v)| if n % 2 == 0 { v } else { -v })
                .collect();
            NamedSequence::new("signed-bernoulli", values, Provenance::GfExtraction)
        }
        Corpus::Lucas => {
            let mut values = vec![rat_int(2), rat_int(1)];
            for n in 2..=n_max {
                let next = &values[n - 1] + &values[n - 2];
                values.push(next);
            }
            values.truncate(n_max + 1);
            NamedSequence::new("lucas", values, Provenance::Recurrence)
        }
        Corpus::NFib => {
            // F_0 = 0, F_1 = 1; term n is n F_{n-1}, with the n = 0 term 0.
            let mut fib = vec![Rat::zero(), Rat::one()];
            for n in 2..=n_max {
                let next = &fib[n - 1] + &fib[n - 2];
                fib.push(next);
            }
            let values = (0..=n_max)
                .map(|n| {
                    if n == 0 {
                        Rat::zero()
                    } else {
                        rat_int(n as i64) * &fib[n - 1]
                    }
                })
                .collect();
            NamedSequence::new("n-fib", values, Provenance::Recurrence)
        }
        Corpus::Harmonic => harmonic_numbers(n_max),
    };
    Ok(seq)
}

/// EGF of a sequence, sum a_n t^n/n!.
pub fn egf(seq: &NamedSequence) -> PowerSeries {
    let coeffs = seq
        .values
        .iter()
        .enumerate()
        .map(|(n, a)| a / Rat::from_integer(factorial(n)))
        .collect();
    PowerSeries::from_coeffs(coeffs)
}

/// OGF of a sequence, sum a_n t^n.
pub fn ogf(seq: &NamedSequence) -> PowerSeries {
    PowerSeries::from_coeffs(seq.values.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::alt_sign;

    #[test]
    fn bernoulli_prefix_and_parity() {
        let b = bernoulli_numbers(40);
        let expected = [rat_int(1), rat(-1, 2), rat(1, 6), rat_int(0), rat(-1, 30)];
        assert_eq!(&b.values[..5], &expected);
        for n in (3..=39).step_by(2) {
            assert!(b.values[n].is_zero(), "B_{} should vanish", n);
        }
    }

    #[test]
    fn bernoulli_matches_recurrence_oracle() {
        // Independent derivation: B_0 = 1 and sum_{k<=n} C(n+1,k) B_k = 0.
        let n_max = 32;
        let mut oracle: Vec<Rat> = vec![Rat::one()];
        for n in 1..=n_max {
            let row = binomial_row(n + 1);
            let mut acc = Rat::zero();
            for k in 0..n {
                acc += Rat::from_integer(row[k].clone()) * &oracle[k];
            }
            oracle.push(-acc / Rat::from_integer(row[n].clone()));
        }
        assert_eq!(bernoulli_numbers(n_max).values, oracle);
    }

    #[test]
    fn bernoulli_polynomials() {
        let family = bernoulli_poly_family(20);
        assert_eq!(family.polys[0], Polynomial::constant(rat_int(1)));
        assert_eq!(family.polys[1], Polynomial::new(vec![rat(-1, 2), rat_int(1)]));
        assert_eq!(family.polys[2].eval(&rat_int(1)), rat(1, 6));
        let b = bernoulli_numbers(20);
        for (n, p) in family.polys.iter().enumerate() {
            assert_eq!(p.degree(), n);
            assert_eq!(p.coeff(n), rat_int(1), "monic");
            // B_n(1) = (-1)^n B_n, the identity that forces B_1 = -1/2.
            assert_eq!(p.eval(&rat_int(1)), alt_sign(n) * &b.values[n]);
            assert_eq!(p.eval(&Rat::zero()), b.values[n]);
        }
    }

    #[test]
    fn euler_polynomials_and_numbers() {
        let family = euler_poly_family(20);
        assert_eq!(family.polys[0], Polynomial::constant(rat_int(1)));
        assert_eq!(family.polys[2], Polynomial::new(vec![rat_int(0), rat_int(-1), rat_int(1)]));
        let e = euler_numbers(10);
        assert_eq!(
            &e.values[..6],
            &[rat_int(1), rat_int(0), rat_int(-1), rat_int(0), rat_int(5), rat_int(0)]
        );
        for (n, v) in e.values.iter().enumerate() {
            assert!(v.is_integer(), "E_{} integer", n);
            if n % 2 == 1 {
                assert!(v.is_zero());
            }
        }
        // Reflection (-1)^n E_n(-x) = -E_n(x) + 2x^n as exact polynomials.
        for (n, p) in family.polys.iter().enumerate() {
            let lhs = p.compose_affine(&Rat::zero(), &rat_int(-1)).scale(&alt_sign(n));
            let rhs = p.neg().add(&Polynomial::monomial(rat_int(2), n));
            assert_eq!(lhs, rhs, "reflection at n = {}", n);
        }
    }

    #[test]
    fn euler_binomial_identity_against_numbers() {
        // E_n(x) = sum C(n,k) (x - 1/2)^{n-k} E_k / 2^k for n <= 20.
        let n_max = 20;
        let family = euler_poly_family(n_max);
        let e = euler_numbers(n_max);
        for n in 0..=n_max {
            let row = binomial_row(n);
            let mut acc = Polynomial::zero();
            for k in 0..=n {
                let c = Rat::from_integer(row[k].clone()) * &e.values[k]
                    / rat_pow(&rat_int(2), k as i64);
                let shifted = crate::poly::shifted_power(&rat(-1, 2), n - k).scale(&c);
                acc = acc.add(&shifted);
            }
            assert_eq!(acc, family.polys[n], "identity at n = {}", n);
        }
    }

    #[test]
    fn conjugate_bernoulli_printed_values() {
        let (numbers, family) = conjugate_bernoulli(5);
        assert_eq!(
            numbers.values,
            vec![rat_int(1), rat(1, 2), rat(5, 6), rat_int(2), rat(191, 30), rat(76, 3)]
        );
        let expected: Vec<Polynomial> = vec![
            Polynomial::constant(rat_int(1)),
            Polynomial::new(vec![rat(1, 2), rat_int(1)]),
            Polynomial::new(vec![rat(5, 6), rat_int(1), rat_int(1)]),
            Polynomial::new(vec![rat_int(2), rat(5, 2), rat(3, 2), rat_int(1)]),
            Polynomial::new(vec![rat(191, 30), rat_int(8), rat_int(5), rat_int(2), rat_int(1)]),
            Polynomial::new(vec![
                rat(76, 3),
                rat(191, 6),
                rat_int(20),
                rat(25, 3),
                rat(5, 2),
                rat_int(1),
            ]),
        ];
        assert_eq!(family.polys, expected);
    }

    #[test]
    fn conjugate_polynomials_match_gf_extraction_at_rational_points() {
        // Evaluating the rebuilt polynomials at x0 agrees with extracting
        // coefficients of t e^{x0 t}/(1 + 2t - e^t) directly.
        let n_max = 20;
        let (_, family) = conjugate_bernoulli(n_max);
        for x0 in [rat_int(0), rat(2, 3), rat(-5, 7), rat_int(3)] {
            let order = n_max + 1;
            let den = PowerSeries::one(order)
                .add(&PowerSeries::t(order).scale(&rat_int(2)))
                .sub(&PowerSeries::exp(&Rat::one(), order));
            let gf = PowerSeries::t(order)
                .mul(&PowerSeries::exp(&x0, order))
                .divide(&den)
                .unwrap();
            let values = gf.truncated(n_max).egf_values();
            for n in 0..=n_max {
                assert_eq!(family.polys[n].eval(&x0), values[n], "n = {}, x0 = {}", n, x0);
            }
        }
    }

    #[test]
    fn corpus_values() {
        let lucas = corpus(Corpus::Lucas, 7).unwrap();
        assert_eq!(
            lucas.values,
            [2, 1, 3, 4, 7, 11, 18, 29].iter().map(|&v| rat_int(v)).collect::<Vec<_>>()
        );
        let inv1 = corpus(Corpus::InvBinom(1), 3).unwrap();
        assert_eq!(inv1.values, vec![rat_int(1), rat(1, 2), rat(1, 3), rat(1, 4)]);
        let inv2 = corpus(Corpus::InvBinom(2), 2).unwrap();
        assert_eq!(inv2.values, vec![rat(1, 3), rat(1, 6), rat(1, 10)]);
        assert!(corpus(Corpus::InvBinom(0), 3).is_err());
        let h = corpus(Corpus::Harmonic, 3).unwrap();
        assert_eq!(h.values[3], rat(11, 6));
        let nf = corpus(Corpus::NFib, 6).unwrap();
        assert_eq!(
            nf.values,
            [0, 0, 2, 3, 8, 15, 30].iter().map(|&v| rat_int(v)).collect::<Vec<_>>()
        );
        let ph = corpus(Corpus::PowHalf, 3).unwrap();
        assert_eq!(ph.values[3], rat(1, 8));
    }

    #[test]
    fn corpus_is_prefix_stable() {
        for which in [
            Corpus::PowHalf,
            Corpus::InvBinom(2),
            Corpus::SignedBernoulli,
            Corpus::Lucas,
            Corpus::NFib,
            Corpus::Harmonic,
        ] {
            let short = corpus(which, 9).unwrap();
            let long = corpus(which, 21).unwrap();
            assert_eq!(short.values[..], long.values[..10], "{:?}", which);
        }
        assert_eq!(bernoulli_numbers(6).values[..], bernoulli_numbers(12).values[..7]);
        let (short, _) = conjugate_bernoulli(5);
        let (long, _) = conjugate_bernoulli(11);
        assert_eq!(short.values[..], long.values[..6]);
    }
}
