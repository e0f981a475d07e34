use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;

use super::gde::{gde_base2, GdeValue};
use super::zomega::ZOmega;

/// A real element `a + √2·b` of Z[ω].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RealZSqrt2 {
    pub a: BigInt,
    pub b: BigInt,
}

impl RealZSqrt2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a + b·(ω − ω³)`.
    pub fn to_zomega(&self) -> ZOmega {
        ZOmega::new(self.a.clone(), self.b.clone(), 0, -&self.b)
    }

    /// Galois conjugate `a − √2·b`.
    pub fn conj_sqrt2(&self) -> Self {
        Self::new(self.a.clone(), -&self.b)
    }

    /// Greatest dividing exponent of base `√2`.
    ///
    /// Even exactly when `gde(b, 2) ≥ gde(a, 2)`, in which case it is
    /// `2·gde(a, 2)`; otherwise `2·gde(b, 2) + 1`.
    pub fn gde(&self) -> GdeValue {
        let va = gde_base2(&self.a);
        let vb = gde_base2(&self.b);
        match (va, vb) {
            (GdeValue::Infinite, GdeValue::Infinite) => GdeValue::Infinite,
            (GdeValue::Finite(a), vb) if vb >= GdeValue::Finite(a) => GdeValue::Finite(2 * a),
            (_, GdeValue::Finite(b)) => GdeValue::Finite(2 * b + 1),
            (GdeValue::Finite(_), GdeValue::Infinite) => unreachable!(),
        }
    }
}

impl Add for &RealZSqrt2 {
    type Output = RealZSqrt2;
    fn add(self, rhs: &RealZSqrt2) -> RealZSqrt2 {
        RealZSqrt2::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Mul for &RealZSqrt2 {
    type Output = RealZSqrt2;
    fn mul(self, rhs: &RealZSqrt2) -> RealZSqrt2 {
        RealZSqrt2::new(
            &self.a * &rhs.a + 2 * (&self.b * &rhs.b),
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gde_real_examples() {
        assert_eq!(RealZSqrt2::new(2, 1).gde(), GdeValue::Finite(1));
        assert_eq!(RealZSqrt2::new(4, 0).gde(), GdeValue::Finite(4));
        assert_eq!(RealZSqrt2::new(0, 0).gde(), GdeValue::Infinite);
        assert_eq!(RealZSqrt2::new(0, 3).gde(), GdeValue::Finite(1));
        assert_eq!(RealZSqrt2::new(8, 4).gde(), GdeValue::Finite(5));
    }

    #[test]
    fn embedding_is_real_and_multiplicative() {
        let r = RealZSqrt2::new(3, -2);
        let s = RealZSqrt2::new(-1, 5);
        let e = r.to_zomega();
        assert_eq!(e.conj(), e);
        assert_eq!((&r * &s).to_zomega(), &e * &s.to_zomega());
        assert_eq!((&r + &s).to_zomega(), &e + &s.to_zomega());
        assert_eq!(r.gde(), e.gde());
    }
}
