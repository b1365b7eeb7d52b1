//! The four binomial dual transforms D1-D4 and everything built on them:
//! self-duality testing, dual Bernoulli numbers/polynomials with their
//! closed forms, the generating-function and parity characterizations of
//! self-dual sequences, and the shift transform connecting D1 to D2 and
//! D3 to D4.
//!
//! Transforms are applied through the Riordan involutions R1-R4 rather than
//! inlined loops, so the involution property is inherited from tested code.

use num_traits::{One, Zero};

use crate::poly::{shifted_power, Polynomial};
use crate::rational::{alt_sign, binomial_row, rat, rat_int, rat_pow, format_rat, Rat};
use crate::report::IdentityReport;
use crate::riordan::{BuiltinArray, RiordanArray};
use crate::sequences::{
    bernoulli_numbers, bernoulli_poly_family, egf, euler_poly_family, ogf, NamedSequence,
    Provenance,
};
use crate::series::PowerSeries;
use crate::Error;

/// The four dual relationships, tagged by their Riordan matrices R1-R4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualRelation {
    D1,
    D2,
    D3,
    D4,
}

impl DualRelation {
    pub const ALL: [DualRelation; 4] =
        [DualRelation::D1, DualRelation::D2, DualRelation::D3, DualRelation::D4];

    pub fn matrix(&self, order: usize) -> RiordanArray {
        let name = match self {
            DualRelation::D1 => BuiltinArray::R1,
            DualRelation::D2 => BuiltinArray::R2,
            DualRelation::D3 => BuiltinArray::R3,
            DualRelation::D4 => BuiltinArray::R4,
        };
        RiordanArray::builtin(name, order)
    }

    /// The matrix entry sign C(n,k) is multiplied by.
    pub fn sign(&self, n: usize, k: usize) -> Rat {
        match self {
            DualRelation::D1 => alt_sign(k),
            DualRelation::D2 => -alt_sign(k),
            DualRelation::D3 => alt_sign(n),
            DualRelation::D4 => -alt_sign(n),
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "D1" => Ok(DualRelation::D1),
            "D2" => Ok(DualRelation::D2),
            "D3" => Ok(DualRelation::D3),
            "D4" => Ok(DualRelation::D4),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl std::fmt::Display for DualRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DualRelation::D1 => "D1",
            DualRelation::D2 => "D2",
            DualRelation::D3 => "D3",
            DualRelation::D4 => "D4",
        };
        f.write_str(s)
    }
}

/// b_n = sum_k R_{n,k} a_k for the relation's matrix.
pub fn dual_transform(a: &NamedSequence, rel: DualRelation) -> NamedSequence {
    if a.is_empty() {
        return a.clone();
    }
    let order = a.len() - 1;
    let matrix = rel.matrix(order);
    let values = matrix.apply_to_values(&a.values);
    NamedSequence::new(format!("{}*[{}]", rel, a.name), values, a.provenance)
}

/// A sequence is self-dual when the transform fixes it exactly.
pub fn is_self_dual(a: &NamedSequence, rel: DualRelation) -> bool {
    dual_transform(a, rel).values == a.values
}

/// Dual Bernoulli numbers B*_n (the D1 duals of the Bernoulli numbers),
/// which satisfy the closed form B*_n = (-1)^n B_n + n.
pub fn dual_bernoulli(n_max: usize) -> NamedSequence {
    let b = bernoulli_numbers(n_max);
    let mut dual = dual_transform(&b, DualRelation::D1);
    dual.name = "dual-bernoulli".into();
    dual
}

/// Dual Bernoulli polynomials B*_n(x) = sum C(n,k) B*_k x^(n-k), satisfying
/// B*_n(x) = (-1)^n B_n(-x-1).
pub fn dual_bernoulli_poly(n: usize) -> Polynomial {
    dual_bernoulli_poly_family(n).pop().expect("family has n+1 members")
}

pub fn dual_bernoulli_poly_family(n_max: usize) -> Vec<Polynomial> {
    assemble_binomial_polys(&dual_bernoulli(n_max).values)
}

/// sum C(n,k) c_k x^{n-k} for each n, the standard binomial assembly of a
/// polynomial family from a number sequence.
pub fn assemble_binomial_polys(numbers: &[Rat]) -> Vec<Polynomial> {
    (0..numbers.len())
        .map(|n| {
            let row = binomial_row(n);
            let coeffs = (0..=n)
                .map(|j| Rat::from_integer(row[j].clone()) * &numbers[n - j])
                .collect();
            Polynomial::new(coeffs)
        })
        .collect()
}

/// The six closed forms of the duals of (-1)^n B_n (under D3) and of the
/// Euler midpoint sequences (under D4 and D2): three number identities and
/// three polynomial identities, each checked exactly for n <= n_max.
pub fn verify_thm12_closed_forms(n_max: usize) -> Vec<IdentityReport> {
    let b = bernoulli_numbers(n_max);
    let bp = bernoulli_poly_family(n_max);
    let ep = euler_poly_family(n_max);
    let signed_b = crate::sequences::corpus(crate::sequences::Corpus::SignedBernoulli, n_max)
        .expect("no parameter");
    let e_half = crate::sequences::euler_half_diff(n_max);
    let signed_e_half = crate::sequences::signed_euler_half_diff(n_max);
    let half = rat(1, 2);

    let mut reports = Vec::new();

    // Duals of (-1)^k B_k under D3 equal B_n + (-1)^n n.
    let lhs_014 = dual_transform(&signed_b, DualRelation::D3);
    reports.push(IdentityReport::new("thm12.0-14").record_residuals((0..=n_max).map(|n| {
        let closed = &b.values[n] + alt_sign(n) * rat_int(n as i64);
        (format!("n={}", n), &lhs_014.values[n] - closed)
    })));

    // Polynomials from those duals equal B_n(x) - n(x-1)^(n-1).
    let polys_015 = assemble_binomial_polys(&lhs_014.values);
    reports.push(IdentityReport::new("thm12.0-15").record_residuals((0..=n_max).flat_map(|n| {
        let closed = if n == 0 {
            bp.polys[0].clone()
        } else {
            bp.polys[n].sub(&shifted_power(&rat_int(-1), n - 1).scale(&rat_int(n as i64)))
        };
        poly_residuals(format!("n={}", n), &polys_015[n], &closed)
    })));

    // Duals of E_k(1/2) - 2^-k under D4 equal (-1)^n (E_n(1/2) + (3^n-2)/2^n).
    let lhs_016 = dual_transform(&e_half, DualRelation::D4);
    reports.push(IdentityReport::new("thm12.0-16").record_residuals((0..=n_max).map(|n| {
        let closed = alt_sign(n) * (ep.polys[n].eval(&half) + three_n_minus_2_over_2n(n));
        (format!("n={}", n), &lhs_016.values[n] - closed)
    })));

    // The corresponding polynomials in powers of (x - 1/2) equal
    // (-1)^n E_n(-x+1) - 2(x-1)^n + (x-2)^n.
    reports.push(IdentityReport::new("thm12.0-17").record_residuals((0..=n_max).flat_map(|n| {
        let assembled = assemble_midpoint_poly(&lhs_016.values, n);
        let closed = ep.polys[n]
            .compose_affine(&Rat::one(), &rat_int(-1))
            .scale(&alt_sign(n))
            .sub(&shifted_power(&rat_int(-1), n).scale(&rat_int(2)))
            .add(&shifted_power(&rat_int(-2), n));
        poly_residuals(format!("n={}", n), &assembled, &closed)
    })));

    // Duals of (-1)^k (E_k(1/2) - 2^-k) under D2 equal E_n(1/2) + (3^n-2)/2^n.
    let lhs_018 = dual_transform(&signed_e_half, DualRelation::D2);
    reports.push(IdentityReport::new("thm12.0-18").record_residuals((0..=n_max).map(|n| {
        let closed = ep.polys[n].eval(&half) + three_n_minus_2_over_2n(n);
        (format!("n={}", n), &lhs_018.values[n] - closed)
    })));

    // And their (x - 1/2)-assembly equals E_n(x) + (x+1)^n - 2x^n.
    reports.push(IdentityReport::new("thm12.0-19").record_residuals((0..=n_max).flat_map(|n| {
        let assembled = assemble_midpoint_poly(&lhs_018.values, n);
        let closed = ep.polys[n]
            .add(&shifted_power(&Rat::one(), n))
            .sub(&Polynomial::monomial(rat_int(2), n));
        poly_residuals(format!("n={}", n), &assembled, &closed)
    })));

    reports
}

fn three_n_minus_2_over_2n(n: usize) -> Rat {
    (rat_pow(&rat_int(3), n as i64) - rat_int(2)) / rat_pow(&rat_int(2), n as i64)
}

/// sum C(n,k) (x - 1/2)^{n-k} c_k.
fn assemble_midpoint_poly(numbers: &[Rat], n: usize) -> Polynomial {
    let row = binomial_row(n);
    let mut acc = Polynomial::zero();
    for k in 0..=n {
        let c = Rat::from_integer(row[k].clone()) * &numbers[k];
        acc = acc.add(&shifted_power(&rat(-1, 2), n - k).scale(&c));
    }
    acc
}

/// Coefficient-wise residuals of lhs - rhs, one entry per coefficient index
/// so failures point at the exact coefficient.
fn poly_residuals(label: String, lhs: &Polynomial, rhs: &Polynomial) -> Vec<(String, Rat)> {
    let diff = lhs.sub(rhs);
    if diff.is_zero() {
        vec![(label, Rat::zero())]
    } else {
        diff.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| (format!("{} coeff x^{}", label, j), c.clone()))
            .collect()
    }
}

/// The generating function of the dual Bernoulli polynomials at a sample
/// point x0 equals -t e^{(x0+1)t}/(e^{-t} - 1) up to the requested order.
pub fn verify_dual_gf(order: usize, samples: &[Rat]) -> IdentityReport {
    let polys = dual_bernoulli_poly_family(order);
    let mut residuals = Vec::new();
    for x0 in samples {
        let values: Vec<Rat> = polys.iter().map(|p| p.eval(x0)).collect();
        let lhs = crate::series::egf_from_values(&values);
        // -t e^{(x0+1)t} / (e^{-t} - 1), computed exactly: the denominator
        // has order one, matching the numerator's factor t.
        let num = PowerSeries::t(order + 1)
            .neg()
            .mul(&PowerSeries::exp(&(x0 + Rat::one()), order + 1));
        let den =
            PowerSeries::exp(&rat_int(-1), order + 1).sub(&PowerSeries::one(order + 1));
        let rhs = num.divide(&den).expect("denominator has order one").truncated(order);
        for n in 0..=order {
            residuals.push((
                format!("x0={}, t^{}", format_rat(x0), n),
                lhs.coeff(n) - rhs.coeff(n),
            ));
        }
    }
    IdentityReport::new("cor12.0-13").record_residuals(residuals)
}

/// Theorem-level OGF criterion: a D1/D2 self-dual sequence has
/// a(x/(x-1)) = ±(1-x) a(x); a D3/D4 self-dual has a(-x/(1+x)) = ±(1+x)a(x).
/// Returns whether the functional equation holds to the requested order.
pub fn ogf_functional_check(a: &NamedSequence, rel: DualRelation, order: usize) -> bool {
    let n = order.min(a.len().saturating_sub(1));
    let gf = ogf(a).truncated(n);
    // x/(x-1) = -x - x^2 - ...; -x/(1+x) = -x + x^2 - ...
    let substitution = match rel {
        DualRelation::D1 | DualRelation::D2 => {
            PowerSeries::t(n).mul(&PowerSeries::geometric(&Rat::one(), n)).neg()
        }
        DualRelation::D3 | DualRelation::D4 => {
            PowerSeries::t(n).mul(&PowerSeries::geometric(&rat_int(-1), n)).neg()
        }
    };
    let lhs = gf.compose(&substitution).expect("substitution has order one");
    let factor = match rel {
        DualRelation::D1 | DualRelation::D2 => PowerSeries::from_ints(&[1, -1], n),
        DualRelation::D3 | DualRelation::D4 => PowerSeries::from_ints(&[1, 1], n),
    };
    let mut rhs = factor.mul(&gf);
    if matches!(rel, DualRelation::D2 | DualRelation::D4) {
        rhs = rhs.neg();
    }
    lhs == rhs
}

/// Theorem-level EGF criterion: multiplied by e^{-x/2} (D1/D2) or e^{x/2}
/// (D3/D4), the EGF of a self-dual sequence is even (D1/D3) or odd (D2/D4).
pub fn egf_parity_check(a: &NamedSequence, rel: DualRelation, order: usize) -> bool {
    let n = order.min(a.len().saturating_sub(1));
    let gf = egf(a).truncated(n);
    let half = match rel {
        DualRelation::D1 | DualRelation::D2 => rat(-1, 2),
        DualRelation::D3 | DualRelation::D4 => rat(1, 2),
    };
    let product = gf.mul(&PowerSeries::exp(&half, n));
    let check_parity = |want_even: bool| {
        product
            .coeffs()
            .iter()
            .enumerate()
            .all(|(k, c)| if (k % 2 == 1) == want_even { c.is_zero() } else { true })
    };
    match rel {
        DualRelation::D1 | DualRelation::D3 => check_parity(true),
        DualRelation::D2 | DualRelation::D4 => check_parity(false),
    }
}

/// b_n = 2 a_{n+1} + sign a_n, one term shorter than a. With sign = -1 this
/// maps D1 self-duals to D2 self-duals; with sign = +1, D3 to D4.
pub fn shift_transform(a: &NamedSequence, sign: i64) -> Result<NamedSequence, Error> {
    if a.len() < 2 {
        return Err(Error::TooShort);
    }
    let s = rat_int(sign.signum());
    let values = (0..a.len() - 1)
        .map(|n| rat_int(2) * &a.values[n + 1] + &s * &a.values[n])
        .collect();
    Ok(NamedSequence::new(format!("shift[{}]", a.name), values, Provenance::ClosedForm))
}
