use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gde::GdeValue;
use super::real::RealZSqrt2;
use super::zomega::ZOmega;
use crate::verifier::{CappedGde, ResidueVector};

/// Smallest denominator exponent of base `√2`. Zero has no finite one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sde {
    NegInfinity,
    Finite(i64),
}

impl Sde {
    pub fn finite(self) -> Option<i64> {
        match self {
            Sde::Finite(k) => Some(k),
            Sde::NegInfinity => None,
        }
    }
}

impl fmt::Display for Sde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sde::Finite(k) => write!(f, "{k}"),
            Sde::NegInfinity => f.write_str("-inf"),
        }
    }
}

/// An element `num / (√2)^k` of Z[1/√2, i].
///
/// Always canonical: either `num` is not divisible by `√2`, or the value is
/// zero and stored as `(0, 0)`. Canonical form makes equality structural and
/// makes `k` the smallest denominator exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingScalar {
    num: ZOmega,
    k: i64,
}

impl RingScalar {
    /// Builds and canonicalizes `num / (√2)^k`.
    pub fn new(num: ZOmega, k: i64) -> Self {
        if num.gde() == GdeValue::Finite(0) {
            return Self { num, k };
        }
        match num.split_sqrt2() {
            None => Self::zero(),
            Some((e, rest)) => Self {
                num: rest,
                k: k - e as i64,
            },
        }
    }

    /// Accepts `(num, k)` only if it is already canonical.
    pub fn from_canonical(num: ZOmega, k: i64) -> Option<Self> {
        let s = Self::new(num.clone(), k);
        (s.num == num && s.k == k).then_some(s)
    }

    pub fn zero() -> Self {
        Self {
            num: ZOmega::zero(),
            k: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_zomega(ZOmega::one())
    }

    pub fn from_zomega(x: ZOmega) -> Self {
        Self::new(x, 0)
    }

    pub fn omega_pow(j: i64) -> Self {
        Self {
            num: ZOmega::omega_pow(j),
            k: 0,
        }
    }

    /// `1/√2`.
    pub fn inv_sqrt2() -> Self {
        Self {
            num: ZOmega::one(),
            k: 1,
        }
    }

    pub fn num(&self) -> &ZOmega {
        &self.num
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn sde(&self) -> Sde {
        if self.is_zero() {
            Sde::NegInfinity
        } else {
            Sde::Finite(self.k)
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            num: self.num.conj(),
            k: self.k,
        }
    }

    /// Multiplication by a unit `ω^j` keeps canonical form.
    pub fn mul_omega_pow(&self, j: i64) -> Self {
        Self {
            num: self.num.mul_omega_pow(j),
            k: self.k,
        }
    }

    /// Multiply by `(√2)^e` for any integer `e`.
    pub fn mul_sqrt2_pow(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.clone(),
            k: self.k - e,
        }
    }

    /// `|z|²` as a real ring element.
    pub fn abs_sq(&self) -> RingScalar {
        Self::new(self.num.norm_sq().to_zomega(), 2 * self.k)
    }

    /// `sde(|z|²)` without building the product.
    ///
    /// A canonical numerator has `gde(|num|²) ∈ {0, 1}`, which its residues
    /// mod 8 already decide.
    pub fn sde_abs_sq(&self) -> Sde {
        if self.is_zero() {
            return Sde::NegInfinity;
        }
        if let CappedGde::Exact(g) = ResidueVector(self.num.residues_mod8()).gde_abs_sq() {
            return Sde::Finite(2 * self.k - i64::from(g));
        }
        match self.num.norm_sq().gde() {
            GdeValue::Infinite => Sde::NegInfinity,
            GdeValue::Finite(g) => Sde::Finite(2 * self.k - g as i64),
        }
    }

    /// `Some(j)` when the value is `ω^j`.
    pub fn unit_modulus_index(&self) -> Option<u8> {
        if self.k != 0 {
            return None;
        }
        let c = self.num.coords();
        let nonzero: Vec<usize> = (0..4).filter(|&i| !c[i].is_zero()).collect();
        let &[i] = nonzero.as_slice() else {
            return None;
        };
        if c[i].is_one() {
            Some(i as u8)
        } else if c[i] == -BigInt::one() {
            Some(i as u8 + 4)
        } else {
            None
        }
    }

    /// Orders by numerator coordinates, then exponent.
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        self.num.cmp(&other.num).then(self.k.cmp(&other.k))
    }

    /// Brings two scalars to a common exponent.
    fn aligned(a: &Self, b: &Self) -> (ZOmega, ZOmega, i64) {
        let k = a.k.max(b.k);
        let na = a.num.mul_sqrt2_pow((k - a.k) as u64);
        let nb = b.num.mul_sqrt2_pow((k - b.k) as u64);
        (na, nb, k)
    }
}

impl Add for &RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: &RingScalar) -> RingScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, k) = RingScalar::aligned(self, rhs);
        RingScalar::new(&a + &b, k)
    }
}

impl Sub for &RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: &RingScalar) -> RingScalar {
        self + &(-rhs)
    }
}

impl Neg for &RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        RingScalar {
            num: -&self.num,
            k: self.k,
        }
    }
}

impl Mul for &RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: &RingScalar) -> RingScalar {
        RingScalar::new(&self.num * &rhs.num, self.k + rhs.k)
    }
}

impl From<ZOmega> for RingScalar {
    fn from(x: ZOmega) -> Self {
        Self::from_zomega(x)
    }
}

impl From<RealZSqrt2> for RingScalar {
    fn from(r: RealZSqrt2) -> Self {
        Self::from_zomega(r.to_zomega())
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/√2^{}", self.num, self.k)
    }
}
