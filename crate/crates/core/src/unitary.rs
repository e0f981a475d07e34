//! Ring-valued states and 2×2 unitaries.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{RingScalar, Sde};

/// A unit column vector `(z, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingState {
    pub z: RingScalar,
    pub w: RingScalar,
}

impl RingState {
    pub fn new(z: RingScalar, w: RingScalar) -> Self {
        Self { z, w }
    }

    /// `|0⟩`
    pub fn zero_ket() -> Self {
        Self::new(RingScalar::one(), RingScalar::zero())
    }

    pub fn validate(&self) -> Result<()> {
        let norm = &self.z.abs_sq() + &self.w.abs_sq();
        if norm != RingScalar::one() {
            return Err(Error::Unitarity(
                "state is not a unit vector (|z|² + |w|² ≠ 1)".into(),
            ));
        }
        Ok(())
    }

    pub fn mul_omega_pow(&self, j: i64) -> Self {
        Self::new(self.z.mul_omega_pow(j), self.w.mul_omega_pow(j))
    }
}

/// A 2×2 unitary with entries in Z[1/√2, i].
///
/// Only matrices that pass [`RingUnitary::validate`] should be fed to
/// synthesis; the constructors here do not check.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingUnitary {
    pub z00: RingScalar,
    pub z01: RingScalar,
    pub z10: RingScalar,
    pub z11: RingScalar,
}

impl RingUnitary {
    pub fn new(z00: RingScalar, z01: RingScalar, z10: RingScalar, z11: RingScalar) -> Self {
        Self { z00, z01, z10, z11 }
    }

    pub fn identity() -> Self {
        Self::diag(RingScalar::one(), RingScalar::one())
    }

    pub fn diag(a: RingScalar, b: RingScalar) -> Self {
        Self::new(a, RingScalar::zero(), RingScalar::zero(), b)
    }

    pub fn hadamard() -> Self {
        let h = RingScalar::inv_sqrt2();
        Self::new(h.clone(), h.clone(), h.clone(), -&h)
    }

    /// `T^j = diag(1, ω^j)`; covers T, P = T², Z = T⁴ and their inverses.
    pub fn t_pow(j: i64) -> Self {
        Self::diag(RingScalar::one(), RingScalar::omega_pow(j))
    }

    pub fn pauli_x() -> Self {
        Self::new(
            RingScalar::zero(),
            RingScalar::one(),
            RingScalar::one(),
            RingScalar::zero(),
        )
    }

    pub fn pauli_y() -> Self {
        Self::new(
            RingScalar::zero(),
            RingScalar::omega_pow(6),
            RingScalar::omega_pow(2),
            RingScalar::zero(),
        )
    }

    pub fn column(&self, i: usize) -> RingState {
        match i {
            0 => RingState::new(self.z00.clone(), self.z10.clone()),
            1 => RingState::new(self.z01.clone(), self.z11.clone()),
            _ => panic!("column index {i} out of range"),
        }
    }

    pub fn entries(&self) -> [&RingScalar; 4] {
        [&self.z00, &self.z01, &self.z10, &self.z11]
    }

    pub fn mul(&self, rhs: &RingUnitary) -> RingUnitary {
        let dot =
            |a: &RingScalar, b: &RingScalar, c: &RingScalar, d: &RingScalar| &(a * b) + &(c * d);
        RingUnitary::new(
            dot(&self.z00, &rhs.z00, &self.z01, &rhs.z10),
            dot(&self.z00, &rhs.z01, &self.z01, &rhs.z11),
            dot(&self.z10, &rhs.z00, &self.z11, &rhs.z10),
            dot(&self.z10, &rhs.z01, &self.z11, &rhs.z11),
        )
    }

    pub fn dagger(&self) -> RingUnitary {
        RingUnitary::new(
            self.z00.conj(),
            self.z10.conj(),
            self.z01.conj(),
            self.z11.conj(),
        )
    }

    pub fn apply(&self, s: &RingState) -> RingState {
        RingState::new(
            &(&self.z00 * &s.z) + &(&self.z01 * &s.w),
            &(&self.z10 * &s.z) + &(&self.z11 * &s.w),
        )
    }

    pub fn det(&self) -> RingScalar {
        &(&self.z00 * &self.z11) - &(&self.z01 * &self.z10)
    }

    /// Checks unitarity exactly and returns `j` with `det = ω^j`.
    pub fn validate(&self) -> Result<u8> {
        let one = RingScalar::one();
        if &self.z00.abs_sq() + &self.z10.abs_sq() != one {
            return Err(Error::Unitarity("column 0 is not a unit vector".into()));
        }
        if &self.z01.abs_sq() + &self.z11.abs_sq() != one {
            return Err(Error::Unitarity("column 1 is not a unit vector".into()));
        }
        let inner = &(&self.z00.conj() * &self.z01) + &(&self.z10.conj() * &self.z11);
        if !inner.is_zero() {
            return Err(Error::Unitarity("columns are not orthogonal".into()));
        }
        self.det()
            .unit_modulus_index()
            .ok_or_else(|| Error::Unitarity("determinant is not a power of ω".into()))
    }

    /// `sde(|z|²)` of any entry, or 0 for the monomial (diagonal and
    /// anti-diagonal phase) matrices.
    pub fn sde_measure(&self) -> u64 {
        let z = if self.z00.is_zero() {
            &self.z01
        } else {
            &self.z00
        };
        match z.sde_abs_sq() {
            Sde::Finite(s) if s > 0 => s as u64,
            _ => 0,
        }
    }

    pub fn mul_omega_pow(&self, j: i64) -> RingUnitary {
        RingUnitary::new(
            self.z00.mul_omega_pow(j),
            self.z01.mul_omega_pow(j),
            self.z10.mul_omega_pow(j),
            self.z11.mul_omega_pow(j),
        )
    }

    /// `Some(j)` with `self = ω^j · other`.
    pub fn equal_up_to_phase(&self, other: &RingUnitary) -> Option<u8> {
        // Every entry is scaled by the same unit, so exponents must match first.
        if self
            .entries()
            .iter()
            .zip(other.entries())
            .any(|(a, b)| a.k() != b.k() || a.is_zero() != b.is_zero())
        {
            return None;
        }
        (0..8u8).find(|&j| other.mul_omega_pow(j as i64) == *self)
    }

    /// The least of the eight phase multiples, with the `j` that produced it:
    /// `representative = ω^j · self`.
    pub fn phase_canonical(&self) -> (RingUnitary, u8) {
        let mut best = self.clone();
        let mut best_j = 0;
        for j in 1..8u8 {
            let cand = self.mul_omega_pow(j as i64);
            if cand.cmp_key(&best) == Ordering::Less {
                best = cand;
                best_j = j;
            }
        }
        (best, best_j)
    }

    /// Numerators of all four entries first, then their exponents.
    fn cmp_key(&self, other: &RingUnitary) -> Ordering {
        let a = self.entries();
        let b = other.entries();
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| x.num().cmp(y.num()))
            .chain(a.iter().zip(b.iter()).map(|(x, y)| x.k().cmp(&y.k())))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// The unitary with first column `s` and determinant `ω^k`.
    pub fn complete_from_column(s: &RingState, k: i64) -> RingUnitary {
        RingUnitary::new(
            s.z.clone(),
            (-&s.w.conj()).mul_omega_pow(k),
            s.w.clone(),
            s.z.conj().mul_omega_pow(k),
        )
    }

    /// `H · self`
    pub fn left_h(&self) -> RingUnitary {
        let half = |a: &RingScalar, b: &RingScalar, neg: bool| {
            let s = if neg { a - b } else { a + b };
            s.mul_sqrt2_pow(-1)
        };
        RingUnitary::new(
            half(&self.z00, &self.z10, false),
            half(&self.z01, &self.z11, false),
            half(&self.z00, &self.z10, true),
            half(&self.z01, &self.z11, true),
        )
    }

    /// `T^j · self`: scales the bottom row by `ω^j`.
    pub fn left_t_pow(&self, j: i64) -> RingUnitary {
        RingUnitary::new(
            self.z00.clone(),
            self.z01.clone(),
            self.z10.mul_omega_pow(j),
            self.z11.mul_omega_pow(j),
        )
    }

    /// `X · self`
    pub fn left_x(&self) -> RingUnitary {
        RingUnitary::new(
            self.z10.clone(),
            self.z11.clone(),
            self.z00.clone(),
            self.z01.clone(),
        )
    }

    /// `Y · self`, with `Y = [[0, −i], [i, 0]]`.
    pub fn left_y(&self) -> RingUnitary {
        RingUnitary::new(
            self.z10.mul_omega_pow(6),
            self.z11.mul_omega_pow(6),
            self.z00.mul_omega_pow(2),
            self.z01.mul_omega_pow(2),
        )
    }

    /// `self · T^j`: scales the right column by `ω^j`.
    pub fn right_t_pow(&self, j: i64) -> RingUnitary {
        RingUnitary::new(
            self.z00.clone(),
            self.z01.mul_omega_pow(j),
            self.z10.clone(),
            self.z11.mul_omega_pow(j),
        )
    }

    /// `self · H`
    pub fn right_h(&self) -> RingUnitary {
        self.dagger().left_h().dagger()
    }
}

impl fmt::Display for RingUnitary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.z00, self.z01, self.z10, self.z11
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ZOmega;

    fn h() -> RingUnitary {
        RingUnitary::hadamard()
    }

    fn t() -> RingUnitary {
        RingUnitary::t_pow(1)
    }

    fn ht_pow(n: usize) -> RingUnitary {
        let ht = h().mul(&t());
        (0..n).fold(RingUnitary::identity(), |acc, _| acc.mul(&ht))
    }

    fn scalar(c: [i64; 4], k: i64) -> RingScalar {
        RingScalar::new(ZOmega::new(c[0], c[1], c[2], c[3]), k)
    }

    #[test]
    fn products() {
        assert_eq!(h().mul(&h()), RingUnitary::identity());
        assert_eq!(t().mul(&t()), RingUnitary::t_pow(2));
        assert_eq!(
            RingUnitary::pauli_x().mul(&RingUnitary::pauli_x()),
            RingUnitary::identity()
        );
        let hd = h().mul(&t());
        assert_eq!(hd.mul(&hd.dagger()), RingUnitary::identity());
    }

    #[test]
    fn ht_on_zero_ket() {
        let s = ht_pow(1).apply(&RingState::zero_ket());
        assert_eq!(s.z, RingScalar::inv_sqrt2());
        assert_eq!(s.w, RingScalar::inv_sqrt2());
    }

    #[test]
    fn validate_cases() {
        assert_eq!(h().validate().unwrap(), 4);
        assert_eq!(t().validate().unwrap(), 1);
        // det Y = −1
        assert_eq!(RingUnitary::pauli_y().validate().unwrap(), 4);
        let bad = RingUnitary::new(
            RingScalar::one(),
            RingScalar::one(),
            RingScalar::zero(),
            RingScalar::one(),
        );
        let err = bad.validate().unwrap_err().to_string();
        assert!(err.contains("column 1"), "{err}");
        let skew = RingUnitary::new(
            RingScalar::inv_sqrt2(),
            RingScalar::inv_sqrt2(),
            RingScalar::inv_sqrt2(),
            RingScalar::inv_sqrt2(),
        );
        assert!(skew
            .validate()
            .unwrap_err()
            .to_string()
            .contains("orthogonal"));
        assert!(ht_pow(4).validate().is_ok());
    }

    #[test]
    fn det_index_adds() {
        let a = ht_pow(3);
        let b = t().mul(&h()).mul(&RingUnitary::pauli_y());
        let (da, db) = (a.validate().unwrap(), b.validate().unwrap());
        assert_eq!(a.mul(&b).validate().unwrap(), (da + db) % 8);
    }

    #[test]
    fn sde_measure_values() {
        for j in 0..8 {
            let d = RingUnitary::diag(RingScalar::omega_pow(j), RingScalar::omega_pow(3 * j));
            assert_eq!(d.sde_measure(), 0);
            assert_eq!(d.left_x().sde_measure(), 0);
        }
        assert_eq!(h().sde_measure(), 2);
        assert_eq!(ht_pow(4).sde_measure(), 5);
    }

    #[test]
    fn phase_equality() {
        let u = ht_pow(3).mul(&RingUnitary::t_pow(5));
        assert_eq!(u.equal_up_to_phase(&u), Some(0));
        assert_eq!(u.mul_omega_pow(3).equal_up_to_phase(&u), Some(3));
        assert_eq!(h().equal_up_to_phase(&t()), None);
        let (rep, j) = u.phase_canonical();
        assert_eq!(rep, u.mul_omega_pow(j as i64));
        for i in 0..8 {
            assert_eq!(u.mul_omega_pow(i).phase_canonical().0, rep);
        }
    }

    #[test]
    fn completion() {
        assert_eq!(
            RingUnitary::complete_from_column(&RingState::zero_ket(), 0),
            RingUnitary::identity()
        );
        let plus = RingState::new(RingScalar::inv_sqrt2(), RingScalar::inv_sqrt2());
        assert_eq!(RingUnitary::complete_from_column(&plus, 4), h());
        let u = ht_pow(5).mul(&RingUnitary::pauli_x());
        let col = u.column(0);
        let hits: Vec<i64> = (0..8)
            .filter(|&k| {
                let c = RingUnitary::complete_from_column(&col, k);
                c.validate().unwrap() == k as u8 && c.equal_up_to_phase(&u).is_some()
            })
            .collect();
        assert_eq!(hits.len(), 1);
    }

    #[test]
    fn table_rows_three_and_four() {
        let s3 = ht_pow(3).apply(&RingState::zero_ket());
        assert_eq!(s3.z, scalar([1, 0, 1, -1], 2));
        assert_eq!(s3.w, scalar([0, 1, 0, 0], 2));
        let s4 = ht_pow(4).apply(&RingState::zero_ket());
        assert_eq!(s4.z, scalar([1, 0, 2, -1], 3));
        assert_eq!(s4.w, scalar([1, 0, 0, -1], 3));
    }

    #[test]
    fn fast_paths_match_products() {
        let u = ht_pow(6).mul(&RingUnitary::t_pow(3));
        assert_eq!(u.left_h(), h().mul(&u));
        assert_eq!(u.left_t_pow(-3), RingUnitary::t_pow(5).mul(&u));
        assert_eq!(u.left_x(), RingUnitary::pauli_x().mul(&u));
        assert_eq!(u.left_y(), RingUnitary::pauli_y().mul(&u));
        assert_eq!(u.right_t_pow(2), u.mul(&RingUnitary::t_pow(2)));
        assert_eq!(u.right_h(), u.mul(&h()));
    }
}
