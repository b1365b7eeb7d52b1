//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored lowest degree first with trailing zeros trimmed;
//! the zero polynomial is the single coefficient `[0]`. That canonical form
//! makes derived equality representation-independent, which the residual
//! checks rely on.

use num_traits::{One, Zero};

use crate::rational::{binom, rat_pow, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    /// Polynomial from coefficients, lowest degree first; trims to canonical
    /// form.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![Rat::zero()] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// c * x^n.
    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// The polynomial x + c.
    pub fn x_plus(c: Rat) -> Self {
        Self::new(vec![c, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// p(a + b x): affine substitution, used for reflections like B_n(-x-1).
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Self {
        let inner = Self::new(vec![a.clone(), b.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(k.into()))
            .collect();
        Self::new(coeffs)
    }

    /// Exact antiderivative difference over [lo, hi].
    pub fn definite_integral(&self, lo: &Rat, hi: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut hi_pow = hi.clone();
        let mut lo_pow = lo.clone();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let denom = Rat::from_integer((k as i64 + 1).into());
                acc += c / denom * (&hi_pow - &lo_pow);
            }
            hi_pow *= hi;
            lo_pow *= lo;
        }
        acc
    }
}

/// Incomplete beta B(alpha, a, b) = integral of t^(a-1) (1-t)^(b-1) over
/// [0, alpha], exact for integer a, b >= 1 and rational alpha.
pub fn incomplete_beta(alpha: &Rat, a: usize, b: usize) -> Rat {
    assert!(a >= 1 && b >= 1, "incomplete beta needs integer parameters >= 1");
    let t_pow = Polynomial::monomial(Rat::one(), a - 1);
    let one_minus_t = Polynomial::new(vec![Rat::one(), -Rat::one()]);
    t_pow.mul(&one_minus_t.pow(b - 1)).definite_integral(&Rat::zero(), alpha)
}

/// (x + c)^n expanded by the binomial theorem.
pub fn shifted_power(c: &Rat, n: usize) -> Polynomial {
    let coeffs = (0..=n)
        .map(|k| binom(n as i64, (n - k) as i64) * rat_pow(c, (n - k) as i64))
        .collect();
    Polynomial::new(coeffs)
}
