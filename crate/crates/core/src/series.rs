//! Truncated formal power series over exact rationals.
//!
//! A `PowerSeries` stores the coefficients c_0..c_N of f(t) = sum c_k t^k
//! up to an explicit, inclusive truncation degree N (`order`). Invariants:
//! - `coeffs.len() == order + 1`
//! - binary operations truncate to the minimum of the operands' orders
//! - no coefficient is ever rounded; all arithmetic stays in `Rat`

use num_traits::{One, Zero};

use crate::rational::{factorial, Rat};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// Series from explicit coefficients, lowest degree first. The length
    /// fixes the truncation order (must be at least one coefficient).
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Self { coeffs }
    }

    /// Coefficients given as i64 numerators, for tests and builtins.
    pub fn from_ints(ints: &[i64], order: usize) -> Self {
        let mut coeffs: Vec<Rat> =
            ints.iter().map(|&v| Rat::from_integer(v.into())).collect();
        coeffs.resize(order + 1, Rat::zero());
        coeffs.truncate(order + 1);
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The series t.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    /// exp(c t) = sum c^k t^k / k!, exactly.
    pub fn exp(c: &Rat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Rat::one();
        for k in 0..=order {
            coeffs.push(&power / Rat::from_integer(factorial(k)));
            power *= c;
        }
        Self { coeffs }
    }

    /// 1/(1 - r t) = sum r^k t^k.
    pub fn geometric(r: &Rat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Rat::one();
        for _ in 0..=order {
            coeffs.push(power.clone());
            power *= r;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, if any up to the truncation.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.ord().is_none()
    }

    /// True when the series equals `other` on all coefficients both carry.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// Restriction to a smaller (or equal) truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Truncated Cauchy product. Kept sequential: parallelism lives one
    /// level up, across matrix columns and grid points.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = Rat::zero();
                for i in 0..=k {
                    let a = &self.coeffs[i];
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * &other.coeffs[k - i];
                }
                acc
            })
            .collect();
        Self { coeffs }
    }

    /// f(-t): flips the sign of every odd coefficient.
    pub fn substitute_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect();
        Self { coeffs }
    }

    /// Multiplication by t^k; the truncation order grows by k.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Division by t^k; the first k coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k <= self.order(), "shift below the constant term");
        assert!(
            self.coeffs[..k].iter().all(|c| c.is_zero()),
            "shift_down would drop nonzero coefficients"
        );
        Self { coeffs: self.coeffs[k..].to_vec() }
    }

    /// Reciprocal g with f*g = 1 up to the truncation order.
    /// Requires an invertible series (c0 != 0).
    pub fn reciprocal(&self) -> Result<Self, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = self.coeffs[0].recip();
        let mut out = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if a.is_zero() {
                    continue;
                }
                acc += a * &out[k - i];
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// Exact quotient self/den as a power series. The denominator's order of
    /// vanishing must not exceed the numerator's, otherwise the quotient has
    /// a pole at t = 0. The result order shrinks by ord(den).
    pub fn divide(&self, den: &Self) -> Result<Self, Error> {
        let r = den.ord().ok_or(Error::DegenerateDenominator)?;
        if self.coeffs[..r.min(self.order() + 1)].iter().any(|c| !c.is_zero()) {
            return Err(Error::SeriesNotDivisible);
        }
        if r > self.order() {
            return Err(Error::SeriesNotDivisible);
        }
        let num = self.shift_down(r);
        let den = den.shift_down(r);
        Ok(num.mul(&den.reciprocal()?))
    }

    /// Composition f(g(t)), requiring g(0) = 0 so that the truncated result
    /// is exact. Horner accumulation from the top coefficient down.
    pub fn compose(&self, inner: &Self) -> Result<Self, Error> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerSeriesHasConstantTerm);
        }
        let n = self.order().min(inner.order());
        let mut acc = PowerSeries::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Compositional inverse of a series of order exactly one, by
    /// order-by-order triangular solving: the coefficients u_n of the inverse
    /// u satisfy sum_k h_k u(t)^k = t, and at degree n only u_n is unknown.
    pub fn comp_inverse(&self) -> Result<Self, Error> {
        if self.ord() != Some(1) {
            return Err(Error::NotOrderOne);
        }
        let n = self.order();
        let h = &self.coeffs;
        let inv_h1 = h[1].recip();

        // powers[k][m] = [t^m] u(t)^k, filled in degree order so that the
        // entries consumed at degree m only involve u_1..u_{m-1}.
        let mut u = vec![Rat::zero(); n + 1];
        u[1] = inv_h1.clone();
        let mut powers: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n + 1]; n + 1];
        if n >= 1 {
            powers[1] = u.clone();
        }
        for m in 2..=n {
            for k in 2..=m {
                let mut acc = Rat::zero();
                for i in (k - 1)..m {
                    let a = &powers[k - 1][i];
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * &u[m - i];
                }
                powers[k][m] = acc;
            }
            let mut rhs = Rat::zero();
            for k in 2..=m {
                if h[k].is_zero() {
                    continue;
                }
                rhs += &h[k] * &powers[k][m];
            }
            u[m] = -(rhs * &inv_h1);
            powers[1][m] = u[m].clone();
        }
        let inverse = Self { coeffs: u };
        debug_assert!(
            self.compose(&inverse).expect("inverse has zero constant term").agrees_with(
                &PowerSeries::t(n)
            ),
            "compositional inverse failed to compose back to t"
        );
        Ok(inverse)
    }

    /// Column coefficient extraction helper: n! * c_n, turning an EGF
    /// coefficient into the sequence value it encodes.
    pub fn egf_values(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * Rat::from_integer(factorial(n)))
            .collect()
    }
}

/// EGF sum a_n t^n / n! of a value table.
pub fn egf_from_values(values: &[Rat]) -> PowerSeries {
    let coeffs = values
        .iter()
        .enumerate()
        .map(|(n, a)| a / Rat::from_integer(factorial(n)))
        .collect();
    PowerSeries::from_coeffs(coeffs)
}

/// OGF sum a_n t^n of a value table.
pub fn ogf_from_values(values: &[Rat]) -> PowerSeries {
    PowerSeries::from_coeffs(values.to_vec())
}
