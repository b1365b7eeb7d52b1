//! Riordan arrays as pairs of power series.
//!
//! A proper Riordan array (d(t), h(t)) has invertible d and h of order
//! exactly one; its entries are d_{n,k} = [t^n] d(t) h(t)^k, forming an
//! infinite lower-triangular matrix of which we keep the top (N+1) x (N+1)
//! block, N being the common truncation order of d and h.
//!
//! Everything here is exact: group laws, A/Z-sequence extraction through the
//! compositional inverse, and the four equivalent pseudo-involution criteria
//! hold to the truncation order, never "approximately".

use num_traits::Zero;
use serde::Serialize;

use crate::exec;
use crate::rational::Rat;
use crate::series::PowerSeries;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanArray {
    d: PowerSeries,
    h: PowerSeries,
}

/// The four equivalent pseudo-involution characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PseudoCriterion {
    /// (d(t), -h(t)) squares to the identity.
    Square,
    /// Conjugation by (1,-t) gives the group inverse.
    Conjugate,
    /// A(t) = -t/h(-t) and Z(t) = (d(-t)-1)/h(-t).
    Az,
    /// hbar(t) = -h(-t) and d(t) = h(-t)/(h(-t) - t d(-t) + t).
    Dbar,
}

impl PseudoCriterion {
    pub const ALL: [PseudoCriterion; 4] = [
        PseudoCriterion::Square,
        PseudoCriterion::Conjugate,
        PseudoCriterion::Az,
        PseudoCriterion::Dbar,
    ];
}

/// Named arrays used throughout: Pascal, its inverse, the four signed
/// binomial involutions, the identity, and the diagonal flip M = (1,-t).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinArray {
    Pascal,
    PascalInv,
    R1,
    R2,
    R3,
    R4,
    Identity,
    M,
}

impl RiordanArray {
    /// Builds a proper Riordan array; d and h are truncated to the smaller
    /// of their orders.
    pub fn new(d: PowerSeries, h: PowerSeries) -> Result<Self, Error> {
        if d.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if h.ord() != Some(1) {
            return Err(Error::NotOrderOne);
        }
        let order = d.order().min(h.order());
        Ok(Self { d: d.truncated(order), h: h.truncated(order) })
    }

    pub fn builtin(name: BuiltinArray, order: usize) -> Self {
        let t = PowerSeries::t(order);
        let inv_one_minus_t = PowerSeries::from_ints(&[1, -1], order)
            .reciprocal()
            .expect("1 - t is invertible");
        let inv_one_plus_t = PowerSeries::from_ints(&[1, 1], order)
            .reciprocal()
            .expect("1 + t is invertible");
        let (d, h) = match name {
            BuiltinArray::Pascal => (inv_one_minus_t.clone(), t.mul(&inv_one_minus_t)),
            BuiltinArray::PascalInv => (inv_one_plus_t.clone(), t.mul(&inv_one_plus_t)),
            BuiltinArray::R1 => (inv_one_minus_t.clone(), t.mul(&inv_one_minus_t).neg()),
            BuiltinArray::R2 => (inv_one_minus_t.neg(), t.mul(&inv_one_minus_t).neg()),
            BuiltinArray::R3 => (inv_one_plus_t.clone(), t.mul(&inv_one_plus_t).neg()),
            BuiltinArray::R4 => (inv_one_plus_t.neg(), t.mul(&inv_one_plus_t).neg()),
            BuiltinArray::Identity => (PowerSeries::one(order), t),
            BuiltinArray::M => (PowerSeries::one(order), t.neg()),
        };
        Self { d, h }
    }

    pub fn identity(order: usize) -> Self {
        Self::builtin(BuiltinArray::Identity, order)
    }

    pub fn d(&self) -> &PowerSeries {
        &self.d
    }

    pub fn h(&self) -> &PowerSeries {
        &self.h
    }

    pub fn order(&self) -> usize {
        self.d.order()
    }

    /// -R, represented by negating d.
    pub fn negate(&self) -> Self {
        Self { d: self.d.neg(), h: self.h.clone() }
    }

    /// Entry d_{n,k}, zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat, Error> {
        if n > self.order() {
            return Err(Error::OutOfTruncation { n, order: self.order() });
        }
        if k > n {
            return Ok(Rat::zero());
        }
        let mut col = self.d.clone();
        for _ in 0..k {
            col = col.mul(&self.h);
        }
        Ok(col.coeff(n).clone())
    }

    /// The full (N+1) x (N+1) lower-triangular entry block, row-major.
    /// Column generating functions d h^k are cached as successive products;
    /// the per-column multiplication by d fans out across threads.
    pub fn entries(&self) -> Vec<Vec<Rat>> {
        let n = self.order();
        let mut h_powers = Vec::with_capacity(n + 1);
        h_powers.push(PowerSeries::one(n));
        for _ in 1..=n {
            let next = h_powers.last().expect("nonempty").mul(&self.h);
            h_powers.push(next);
        }
        let cols = exec::map_indexed(n + 1, |k| self.d.mul(&h_powers[k]));
        (0..=n)
            .map(|row| {
                (0..=n)
                    .map(|k| if k <= row { cols[k].coeff(row).clone() } else { Rat::zero() })
                    .collect()
            })
            .collect()
    }

    /// Matrix-vector product against the first `len(a)` coordinates.
    pub fn apply_to_values(&self, a: &[Rat]) -> Vec<Rat> {
        let rows = self.entries();
        let n = a.len().min(self.order() + 1);
        exec::map_indexed(n, |row| {
            let mut acc = Rat::zero();
            for (k, ak) in a.iter().enumerate().take(row + 1) {
                acc += &rows[row][k] * ak;
            }
            acc
        })
    }

    /// Riordan product (d1 d2(h1), h2(h1)).
    pub fn multiply(&self, other: &Self) -> Self {
        let d2_h1 = other.d.compose(&self.h).expect("h has zero constant term");
        let h2_h1 = other.h.compose(&self.h).expect("h has zero constant term");
        Self { d: self.d.mul(&d2_h1), h: h2_h1 }
    }

    /// Group inverse (1/d(hbar), hbar).
    pub fn inverse(&self) -> Result<Self, Error> {
        let hbar = self.h.comp_inverse()?;
        let d_at_hbar = self.d.compose(&hbar).expect("hbar has zero constant term");
        Ok(Self { d: d_at_hbar.reciprocal()?, h: hbar })
    }

    /// Fundamental theorem: (d, h) f = d(t) f(h(t)).
    pub fn apply_ftr(&self, f: &PowerSeries) -> PowerSeries {
        let f_h = f.compose(&self.h).expect("h has zero constant term");
        self.d.mul(&f_h)
    }

    fn is_identity(&self) -> bool {
        let order = self.order();
        self.d.agrees_with(&PowerSeries::one(order)) && self.h.agrees_with(&PowerSeries::t(order))
    }

    /// True iff the array squares to (1, t) up to the truncation order.
    pub fn is_involution(&self) -> bool {
        self.multiply(self).is_identity()
    }

    /// A-function A(t) = t/hbar(t), satisfying h(t) = t A(h(t)).
    /// The result is exact to order N-1.
    pub fn a_function(&self) -> Result<PowerSeries, Error> {
        let hbar = self.h.comp_inverse()?;
        let a = PowerSeries::t(self.order()).divide(&hbar)?;
        debug_assert!({
            let t_a_h = a.compose(&self.h).expect("proper h").shift_up(1);
            self.h.agrees_with(&t_a_h)
        });
        Ok(a)
    }

    /// Z-function Z(t) = (1 - d_{0,0}/d(hbar(t)))/hbar(t), satisfying
    /// d(t) = d_{0,0}/(1 - t Z(h(t))). Exact to order N-1.
    pub fn z_function(&self) -> Result<PowerSeries, Error> {
        let hbar = self.h.comp_inverse()?;
        let d_at_hbar = self.d.compose(&hbar).expect("hbar has zero constant term");
        let ratio = d_at_hbar.reciprocal()?.scale(self.d.coeff(0));
        let num = PowerSeries::one(self.order()).sub(&ratio);
        let z = num.divide(&hbar)?;
        debug_assert!({
            let t_z_h = z.compose(&self.h).expect("proper h").shift_up(1);
            let recon = PowerSeries::one(self.order())
                .sub(&t_z_h)
                .reciprocal()
                .expect("unit constant term")
                .scale(self.d.coeff(0));
            self.d.agrees_with(&recon)
        });
        Ok(z)
    }

    /// Tests one pseudo-involution criterion. All four are equivalent in
    /// exact arithmetic; `is_pseudo_involution_all` cross-checks them.
    pub fn is_pseudo_involution(&self, criterion: PseudoCriterion) -> Result<bool, Error> {
        let d_neg = self.d.substitute_neg();
        let h_neg = self.h.substitute_neg();
        match criterion {
            PseudoCriterion::Square => {
                let flipped = Self { d: self.d.clone(), h: self.h.neg() };
                Ok(flipped.is_involution())
            }
            PseudoCriterion::Conjugate => {
                // (1,-t)(d,h)(1,-t) = (d(-t), -h(-t)).
                let conjugated = Self { d: d_neg, h: h_neg.neg() };
                let inv = self.inverse()?;
                Ok(conjugated.d.agrees_with(&inv.d) && conjugated.h.agrees_with(&inv.h))
            }
            PseudoCriterion::Az => {
                let a = self.a_function()?;
                let a_rhs = match PowerSeries::t(self.order()).neg().divide(&h_neg) {
                    Ok(s) => s,
                    Err(Error::SeriesNotDivisible) => return Ok(false),
                    Err(e) => return Err(e),
                };
                if !a.agrees_with(&a_rhs) {
                    return Ok(false);
                }
                let z = self.z_function()?;
                let z_num = d_neg.sub(&PowerSeries::one(self.order()));
                let z_rhs = match z_num.divide(&h_neg) {
                    Ok(s) => s,
                    Err(Error::SeriesNotDivisible) => return Ok(false),
                    Err(e) => return Err(e),
                };
                Ok(z.agrees_with(&z_rhs))
            }
            PseudoCriterion::Dbar => {
                let hbar = self.h.comp_inverse()?;
                if !hbar.agrees_with(&h_neg.neg()) {
                    return Ok(false);
                }
                let den = h_neg
                    .sub(&d_neg.shift_up(1).truncated(self.order()))
                    .add(&PowerSeries::t(self.order()));
                if den.is_zero() {
                    return Err(Error::DegenerateDenominator);
                }
                let d_rhs = match h_neg.divide(&den) {
                    Ok(s) => s,
                    Err(Error::SeriesNotDivisible) => return Ok(false),
                    Err(e) => return Err(e),
                };
                Ok(self.d.agrees_with(&d_rhs))
            }
        }
    }

    /// Runs all four criteria and returns their (identical, by the theorem)
    /// verdicts in `PseudoCriterion::ALL` order.
    pub fn is_pseudo_involution_all(&self) -> Result<Vec<(PseudoCriterion, bool)>, Error> {
        PseudoCriterion::ALL
            .iter()
            .map(|&c| self.is_pseudo_involution(c).map(|v| (c, v)))
            .collect()
    }
}

/// Builds the pseudo-involution whose Z-function is the given series:
/// h = t Z(t) / (Z(-t)(1 - t Z(t))) and d = h Z(-t)/(t Z(t)), which
/// simplifies to d = 1/(1 - t Z(t)). Requires Z(0) != 0; the construction
/// degenerates otherwise.
pub fn construct_from_z(z: &PowerSeries, order: usize) -> Result<RiordanArray, Error> {
    if z.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if z.order() < order {
        return Err(Error::BadParameter(format!(
            "Z is truncated at order {} but order {} was requested",
            z.order(),
            order
        )));
    }
    let z = z.truncated(order);
    let z_neg = z.substitute_neg();
    let t_z = z.shift_up(1).truncated(order);
    let one_minus_tz = PowerSeries::one(order).sub(&t_z);
    let h = t_z.mul(&z_neg.mul(&one_minus_tz).reciprocal()?);
    // The quotient h Z(-t)/(t Z) equals 1/(1 - t Z) exactly; the latter form
    // avoids losing one order of truncation to the division by t Z. The
    // cross-multiplied identity d * t Z = h * Z(-t) is kept under test.
    let d = one_minus_tz.reciprocal()?;
    RiordanArray::new(d, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{alt_sign, binom, rat_int};

    fn pascal(order: usize) -> RiordanArray {
        RiordanArray::builtin(BuiltinArray::Pascal, order)
    }

    #[test]
    fn pascal_entries_are_binomials() {
        let p = pascal(8);
        assert_eq!(p.entry(4, 2).unwrap(), rat_int(6));
        assert_eq!(p.entry(2, 5).unwrap(), rat_int(0));
        assert!(matches!(p.entry(9, 0), Err(Error::OutOfTruncation { n: 9, order: 8 })));
        let m = p.entries();
        for n in 0..=8usize {
            for k in 0..=8usize {
                let expected = if k <= n { binom(n as i64, k as i64) } else { rat_int(0) };
                assert_eq!(m[n][k], expected, "entry ({}, {})", n, k);
            }
        }
    }

    #[test]
    fn signed_builtin_entry_patterns() {
        let order = 7;
        #[allow(clippy::type_complexity)]
        let cases: [(BuiltinArray, fn(usize, usize) -> Rat); 4] = [
            (BuiltinArray::R1, |_, k| alt_sign(k)),
            (BuiltinArray::R2, |_, k| -alt_sign(k)),
            (BuiltinArray::R3, |n, _| alt_sign(n)),
            (BuiltinArray::R4, |n, _| -alt_sign(n)),
        ];
        for (name, sign) in cases {
            let m = RiordanArray::builtin(name, order).entries();
            for n in 0..=order {
                for k in 0..=n {
                    assert_eq!(m[n][k], binom(n as i64, k as i64) * sign(n, k), "{:?}", name);
                }
            }
        }
        assert_eq!(RiordanArray::builtin(BuiltinArray::R1, 4).entry(3, 1).unwrap(), rat_int(-3));
    }

    #[test]
    fn product_and_identity_laws() {
        let order = 10;
        let p = pascal(order);
        let squared = p.multiply(&p);
        // Pascal^2 = (1/(1-2t), t/(1-2t)).
        let expected_d = PowerSeries::from_ints(&[1, -2], order).reciprocal().unwrap();
        assert_eq!(squared.d(), &expected_d);
        assert_eq!(squared.h(), &PowerSeries::t(order).mul(&expected_d));

        let r1 = RiordanArray::builtin(BuiltinArray::R1, order);
        assert!(r1.multiply(&r1).is_identity());

        let id = RiordanArray::identity(order);
        assert_eq!(p.multiply(&id), p);
        assert_eq!(id.multiply(&p), p);
    }

    #[test]
    fn product_matches_numeric_matrix_product() {
        let order = 6;
        let a = pascal(order);
        let b = RiordanArray::builtin(BuiltinArray::R3, order);
        let product = a.multiply(&b).entries();
        let (ma, mb) = (a.entries(), b.entries());
        for n in 0..=order {
            for k in 0..=order {
                let mut acc = rat_int(0);
                for j in 0..=order {
                    acc += &ma[n][j] * &mb[j][k];
                }
                assert_eq!(product[n][k], acc, "({}, {})", n, k);
            }
        }
    }

    #[test]
    fn inverse_of_pascal() {
        let order = 9;
        let p = pascal(order);
        let inv = p.inverse().unwrap();
        assert_eq!(inv, RiordanArray::builtin(BuiltinArray::PascalInv, order));
        let m = inv.entries();
        for n in 0..=order {
            for k in 0..=n {
                assert_eq!(m[n][k], binom(n as i64, k as i64) * alt_sign(n - k));
            }
        }
        assert!(p.multiply(&inv).is_identity());

        let id = RiordanArray::identity(order);
        assert_eq!(id.inverse().unwrap(), id);
        let r1 = RiordanArray::builtin(BuiltinArray::R1, order);
        assert_eq!(r1.inverse().unwrap(), r1);
    }

    #[test]
    fn ftr_matches_matrix_vector_product() {
        let order = 10;
        let p = pascal(order);
        let all_ones = PowerSeries::geometric(&rat_int(1), order);
        let transformed = p.apply_ftr(&all_ones);
        assert_eq!(transformed, PowerSeries::geometric(&rat_int(2), order));

        let by_matrix = p.apply_to_values(all_ones.coeffs());
        assert_eq!(by_matrix.as_slice(), transformed.coeffs());

        assert!(p.apply_ftr(&PowerSeries::zero(order)).is_zero());
    }

    #[test]
    fn az_functions_of_named_arrays() {
        let order = 12;
        let p = pascal(order);
        let a = p.a_function().unwrap();
        let z = p.z_function().unwrap();
        assert!(a.agrees_with(&PowerSeries::from_ints(&[1, 1], order - 1)));
        assert!(z.agrees_with(&PowerSeries::one(order - 1)));

        let id = RiordanArray::identity(order);
        assert!(id.a_function().unwrap().agrees_with(&PowerSeries::one(order - 1)));
        assert!(id.z_function().unwrap().is_zero());

        let q = RiordanArray::builtin(BuiltinArray::PascalInv, order);
        assert!(q.a_function().unwrap().agrees_with(&PowerSeries::from_ints(&[1, -1], order - 1)));
        assert!(q
            .z_function()
            .unwrap()
            .agrees_with(&PowerSeries::constant(rat_int(-1), order - 1)));
    }

    /// Independent extraction of the A- and Z-sequences by solving the
    /// triangular linear systems of the entry recurrences.
    fn az_by_linear_solve(r: &RiordanArray) -> (Vec<Rat>, Vec<Rat>) {
        let m = r.entries();
        let order = r.order();
        let mut a: Vec<Rat> = Vec::new();
        let mut z: Vec<Rat> = Vec::new();
        for j in 0..order {
            // d_{j+1,1} = sum_i a_i d_{j,i} determines a_j given a_0..a_{j-1}.
            let mut acc = m[j + 1][1].clone();
            for (i, ai) in a.iter().enumerate().take(j) {
                acc -= ai * &m[j][i];
            }
            a.push(acc / &m[j][j]);
            let mut acc = m[j + 1][0].clone();
            for (i, zi) in z.iter().enumerate().take(j) {
                acc -= zi * &m[j][i];
            }
            z.push(acc / &m[j][j]);
        }
        (a, z)
    }

    #[test]
    fn az_extraction_agrees_with_linear_system_oracle() {
        let order = 10;
        for array in [
            pascal(order),
            RiordanArray::builtin(BuiltinArray::PascalInv, order),
            construct_from_z(&PowerSeries::geometric(&rat_int(1), order), order).unwrap(),
            RiordanArray::new(
                PowerSeries::from_ints(&[1, 3, -2, 5], order),
                PowerSeries::from_ints(&[0, 2, 1, 0, -7], order),
            )
            .unwrap(),
        ] {
            let (a_seq, z_seq) = az_by_linear_solve(&array);
            let a = array.a_function().unwrap();
            let z = array.z_function().unwrap();
            assert_eq!(a.coeffs()[..order], a_seq[..]);
            assert_eq!(z.coeffs()[..order], z_seq[..]);
        }
    }

    #[test]
    fn az_recurrences_hold_entrywise() {
        let order = 9;
        let array = RiordanArray::new(
            PowerSeries::from_ints(&[2, 1, 0, -3], order),
            PowerSeries::from_ints(&[0, 1, -1, 4], order),
        )
        .unwrap();
        let m = array.entries();
        let a = array.a_function().unwrap();
        let z = array.z_function().unwrap();
        for n in 0..order {
            for k in 0..n {
                let mut acc = rat_int(0);
                for i in 0..=(n - k) {
                    acc += &a.coeffs()[i] * &m[n][k + i];
                }
                assert_eq!(m[n + 1][k + 1], acc, "A-recurrence at ({}, {})", n, k);
            }
            let mut acc = rat_int(0);
            for i in 0..=n {
                acc += &z.coeffs()[i] * &m[n][i];
            }
            assert_eq!(m[n + 1][0], acc, "Z-recurrence at row {}", n);
        }
    }

    #[test]
    fn involution_flags() {
        let order = 8;
        for name in [BuiltinArray::R1, BuiltinArray::R2, BuiltinArray::R3, BuiltinArray::R4] {
            assert!(RiordanArray::builtin(name, order).is_involution(), "{:?}", name);
        }
        assert!(RiordanArray::identity(order).is_involution());
        assert!(RiordanArray::builtin(BuiltinArray::M, order).is_involution());
        assert!(!pascal(order).is_involution());
    }

    #[test]
    fn pseudo_involution_criteria_agree() {
        let order = 10;
        // 1/(1-ct) paired with t/(1-ct) is a pseudo-involution for every c.
        let scaled = |c: i64| {
            let d = PowerSeries::from_ints(&[1, -c], order).reciprocal().unwrap();
            RiordanArray::new(d.clone(), PowerSeries::t(order).mul(&d)).unwrap()
        };
        let pseudo = [
            pascal(order),
            RiordanArray::builtin(BuiltinArray::PascalInv, order),
            RiordanArray::identity(order),
            scaled(3),
            scaled(-2),
        ];
        for r in &pseudo {
            for (c, verdict) in r.is_pseudo_involution_all().unwrap() {
                assert!(verdict, "{:?} should hold", c);
            }
        }
        let inv_one_minus_t = PowerSeries::from_ints(&[1, -1], order).reciprocal().unwrap();
        let not_pseudo = [
            RiordanArray::new(inv_one_minus_t.clone(), PowerSeries::t(order)).unwrap(),
            RiordanArray::builtin(BuiltinArray::R3, order),
            RiordanArray::builtin(BuiltinArray::R4, order),
            RiordanArray::new(
                inv_one_minus_t.clone(),
                PowerSeries::t(order).mul(&inv_one_minus_t).mul(&inv_one_minus_t),
            )
            .unwrap(),
            // The remark construction applied to a series that is not the
            // Z-function of any pseudo-involution: the criteria still agree.
            construct_from_z(&PowerSeries::geometric(&rat_int(1), order), order).unwrap(),
        ];
        for r in &not_pseudo {
            for (c, verdict) in r.is_pseudo_involution_all().unwrap() {
                assert!(!verdict, "{:?} should fail", c);
            }
        }
    }

    #[test]
    fn dbar_is_strictly_stronger_than_the_other_criteria() {
        // (1/(1-t)^2, t/(1-t)) is a genuine pseudo-involution: its flip by
        // (1,-t) squares to the identity and its A/Z functions satisfy the
        // reflection conditions. The closed-form d reconstruction behind the
        // DBAR criterion nevertheless fails for it (first at t^3), so DBAR
        // detects only a subclass.
        let order = 10;
        let inv = PowerSeries::from_ints(&[1, -1], order).reciprocal().unwrap();
        let r = RiordanArray::new(inv.mul(&inv), PowerSeries::t(order).mul(&inv)).unwrap();
        assert!(r.is_pseudo_involution(PseudoCriterion::Square).unwrap());
        assert!(r.is_pseudo_involution(PseudoCriterion::Conjugate).unwrap());
        assert!(r.is_pseudo_involution(PseudoCriterion::Az).unwrap());
        assert!(!r.is_pseudo_involution(PseudoCriterion::Dbar).unwrap());
        // Its Z-function is (2+t)/(1+t), not the 2-t that the d = 1/(1-tZ)
        // closed form would require.
        let z = r.z_function().unwrap();
        let expected = PowerSeries::from_ints(&[2, 1], order - 1)
            .mul(&PowerSeries::from_ints(&[1, 1], order - 1).reciprocal().unwrap());
        assert_eq!(z, expected);
    }

    #[test]
    fn eq_minus_one_five_decompositions() {
        let order = 8;
        let p = pascal(order);
        let q = RiordanArray::builtin(BuiltinArray::PascalInv, order);
        let m = RiordanArray::builtin(BuiltinArray::M, order);
        let r1 = RiordanArray::builtin(BuiltinArray::R1, order);
        let r2 = RiordanArray::builtin(BuiltinArray::R2, order);
        let r3 = RiordanArray::builtin(BuiltinArray::R3, order);
        let r4 = RiordanArray::builtin(BuiltinArray::R4, order);
        assert_eq!(p.multiply(&m), r1);
        assert_eq!(m.multiply(&q), r1);
        assert_eq!(p.multiply(&m).negate(), r2);
        assert_eq!(m.multiply(&p), r3);
        assert_eq!(q.multiply(&m), r3);
        assert_eq!(m.multiply(&p).negate(), r4);
    }

    #[test]
    fn construct_from_z_named_cases() {
        let order = 10;
        let from_one = construct_from_z(&PowerSeries::one(order), order).unwrap();
        assert_eq!(from_one, pascal(order));

        let from_minus_one =
            construct_from_z(&PowerSeries::constant(rat_int(-1), order), order).unwrap();
        assert_eq!(from_minus_one, RiordanArray::builtin(BuiltinArray::PascalInv, order));

        // Z = 1/(1-t) gives h = t(1+t)/(1-2t) and d = (1-t)/(1-2t) by the
        // remark formulas. No pseudo-involution has this Z-function: the
        // constructed h violates hbar = -h(-t), which every criterion flags.
        let z = PowerSeries::geometric(&rat_int(1), order);
        let r = construct_from_z(&z, order).unwrap();
        let expected_h = PowerSeries::from_ints(&[0, 1, 1], order)
            .mul(&PowerSeries::from_ints(&[1, -2], order).reciprocal().unwrap());
        assert_eq!(r.h(), &expected_h);
        let hbar = r.h().comp_inverse().unwrap();
        assert!(!hbar.agrees_with(&r.h().substitute_neg().neg()));

        assert_eq!(construct_from_z(&PowerSeries::t(order), order), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn construct_and_z_function_round_trip() {
        let order = 12;
        // construct_from_z . z_function fixes Pascal and its inverse.
        for name in [BuiltinArray::Pascal, BuiltinArray::PascalInv] {
            let r = RiordanArray::builtin(name, order);
            let z = r.z_function().unwrap();
            let rebuilt = construct_from_z(&z, z.order()).unwrap();
            assert_eq!(rebuilt, RiordanArray::builtin(name, z.order()));
        }

        // Same for the scaled family (1/(1-ct), t/(1-ct)), whose Z-function
        // is the constant c.
        for c in [2i64, -3, 5] {
            let d = PowerSeries::from_ints(&[1, -c], order).reciprocal().unwrap();
            let r = RiordanArray::new(d.clone(), PowerSeries::t(order).mul(&d)).unwrap();
            let z = r.z_function().unwrap();
            assert!(z.agrees_with(&PowerSeries::constant(rat_int(c), order - 1)));
            let rebuilt = construct_from_z(&z, z.order()).unwrap();
            assert!(rebuilt.d().agrees_with(r.d()));
            assert!(rebuilt.h().agrees_with(r.h()));
        }

        // The cross-multiplied remark identity d * tZ = h * Z(-t) holds for
        // the construction output whatever Z is.
        let z0 = PowerSeries::from_ints(&[2, -1, 5, 0, 3], order);
        let array = construct_from_z(&z0, order).unwrap();
        let t_z = z0.shift_up(1).truncated(order);
        let lhs = array.d().mul(&t_z);
        let rhs = array.h().mul(&z0.substitute_neg());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn properness_is_enforced() {
        let order = 5;
        assert_eq!(
            RiordanArray::new(PowerSeries::t(order), PowerSeries::t(order)),
            Err(Error::ZeroConstantTerm)
        );
        assert_eq!(
            RiordanArray::new(PowerSeries::one(order), PowerSeries::one(order)),
            Err(Error::NotOrderOne)
        );
        let r = RiordanArray::new(
            PowerSeries::from_ints(&[3, 1], order),
            PowerSeries::from_ints(&[0, 2, 2], order),
        )
        .unwrap();
        // entry(n,n) = d_0 h_1^n.
        let mut diag = rat_int(3);
        for n in 0..=order {
            assert_eq!(r.entry(n, n).unwrap(), diag);
            diag *= rat_int(2);
        }
    }
}
