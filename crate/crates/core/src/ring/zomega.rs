use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gde::GdeValue;
use super::real::RealZSqrt2;
use crate::error::{Error, Result};

/// An element `x0 + x1·ω + x2·ω² + x3·ω³` of Z[ω], with `ω = e^{iπ/4}`.
///
/// Multiplication uses `ω⁴ = −1`, so the four coordinates are a basis and every
/// element has exactly one representation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZOmega {
    c: [BigInt; 4],
}

impl ZOmega {
    pub fn new(
        x0: impl Into<BigInt>,
        x1: impl Into<BigInt>,
        x2: impl Into<BigInt>,
        x3: impl Into<BigInt>,
    ) -> Self {
        Self {
            c: [x0.into(), x1.into(), x2.into(), x3.into()],
        }
    }

    pub fn from_coords(c: [BigInt; 4]) -> Self {
        Self { c }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0, 0)
    }

    pub fn omega() -> Self {
        Self::new(0, 1, 0, 0)
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c: [BigInt; 4] = Default::default();
        if k < 4 {
            c[k] = BigInt::one();
        } else {
            c[k - 4] = -BigInt::one();
        }
        Self { c }
    }

    /// `√2 = ω − ω³`.
    pub fn sqrt2() -> Self {
        Self::new(0, 1, 0, -1)
    }

    pub fn coords(&self) -> &[BigInt; 4] {
        &self.c
    }

    pub fn into_coords(self) -> [BigInt; 4] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn conj(&self) -> Self {
        // conj(ω^j) = ω^{-j} = −ω^{4−j}
        let [x0, x1, x2, x3] = &self.c;
        Self::new(x0.clone(), -x3, -x2, -x1)
    }

    /// Multiply by `ω`: `(y0, y1, y2, y3) ↦ (−y3, y0, y1, y2)`.
    pub fn mul_omega(&self) -> Self {
        let [y0, y1, y2, y3] = &self.c;
        Self::new(-y3, y0.clone(), y1.clone(), y2.clone())
    }

    /// Multiply by `ω^k`; coordinates only move and change sign.
    pub fn mul_omega_pow(&self, k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c: [BigInt; 4] = Default::default();
        for (i, x) in self.c.iter().enumerate() {
            let j = i + k;
            if j % 8 < 4 {
                c[j % 8] = x.clone();
            } else {
                c[j % 8 - 4] = -x;
            }
        }
        Self { c }
    }

    pub fn mul_sqrt2(&self) -> Self {
        let [x0, x1, x2, x3] = &self.c;
        Self::new(x1 - x3, x0 + x2, x1 + x3, x2 - x0)
    }

    /// Multiply by `(√2)^e`, `e ≥ 0`.
    pub fn mul_sqrt2_pow(&self, e: u64) -> Self {
        let shifted = self.shl(e / 2);
        if e % 2 == 1 {
            shifted.mul_sqrt2()
        } else {
            shifted
        }
    }

    /// Exact division by `√2`.
    pub fn div_sqrt2(&self) -> Result<Self> {
        let [x0, x1, x2, x3] = &self.c;
        // x / √2 = √2·x / 2
        let a = x1 - x3;
        let b = x0 + x2;
        let c = x1 + x3;
        let d = x2 - x0;
        if a.is_odd() || b.is_odd() || c.is_odd() || d.is_odd() {
            return Err(Error::Divisibility(self.to_string()));
        }
        Ok(Self::new(a >> 1, b >> 1, c >> 1, d >> 1))
    }

    /// Whether `√2` divides `x / 2^t`, given that `2^t` divides every
    /// coordinate: `x0 ≡ x2` and `x1 ≡ x3` mod 2.
    fn sqrt2_divides_shifted(&self, t: u64) -> bool {
        let [x0, x1, x2, x3] = &self.c;
        x0.bit(t) == x2.bit(t) && x1.bit(t) == x3.bit(t)
    }

    pub fn shl(&self, bits: u64) -> Self {
        if bits == 0 {
            return self.clone();
        }
        Self {
            c: self.c.clone().map(|x| x << bits),
        }
    }

    /// Exact division by `2^bits`; the caller guarantees divisibility.
    fn shr_exact(&self, bits: u64) -> Self {
        if bits == 0 {
            return self.clone();
        }
        Self {
            c: self.c.clone().map(|x| x >> bits),
        }
    }

    /// Greatest dividing exponent of base `√2`.
    pub fn gde(&self) -> GdeValue {
        match self.common_trailing_zeros() {
            None => GdeValue::Infinite,
            Some(t) => GdeValue::Finite(2 * t + u64::from(self.sqrt2_divides_shifted(t))),
        }
    }

    /// Greatest dividing exponent of base `2`.
    pub fn gde_base2(&self) -> GdeValue {
        let Some(t) = self.common_trailing_zeros() else {
            return GdeValue::Infinite;
        };
        GdeValue::Finite(t)
    }

    /// Greatest dividing exponent of base `ω`; `ω` is a unit.
    pub fn gde_omega(&self) -> GdeValue {
        GdeValue::Infinite
    }

    /// Writes a non-zero `x` as `(√2)^e · x'` with `√2 ∤ x'`.
    pub fn split_sqrt2(&self) -> Option<(u64, ZOmega)> {
        let t = self.common_trailing_zeros()?;
        let odd = self.shr_exact(t);
        // After removing the largest power of 2 at most one more √2 divides.
        if odd.sqrt2_divides_shifted(0) {
            Some((2 * t + 1, odd.div_sqrt2().expect("parity checked")))
        } else {
            Some((2 * t, odd))
        }
    }

    fn common_trailing_zeros(&self) -> Option<u64> {
        self.c.iter().filter_map(|x| x.trailing_zeros()).min()
    }

    /// `P(x) = x0² + x1² + x2² + x3²`.
    pub fn form_p(&self) -> BigInt {
        self.c.iter().map(|x| x * x).sum()
    }

    /// `Q(x) = x0(x1 − x3) + x2(x1 + x3)`.
    pub fn form_q(&self) -> BigInt {
        let [x0, x1, x2, x3] = &self.c;
        x0 * (x1 - x3) + x2 * (x1 + x3)
    }

    /// Coordinate dot product `F(x, y)`.
    pub fn form_f(&self, other: &ZOmega) -> BigInt {
        self.c.iter().zip(other.c.iter()).map(|(a, b)| a * b).sum()
    }

    /// `|x|² = P(x) + √2·Q(x)`.
    pub fn norm_sq(&self) -> RealZSqrt2 {
        RealZSqrt2::new(self.form_p(), self.form_q())
    }

    /// `Re(√2·x·y*) = √2·F(x, y) + F(√2x, y)`.
    pub fn re_sqrt2_mul_conj(&self, other: &ZOmega) -> RealZSqrt2 {
        RealZSqrt2::new(self.mul_sqrt2().form_f(other), self.form_f(other))
    }

    /// Largest coordinate bit length; a cheap size measure.
    pub fn bits(&self) -> u64 {
        self.c.iter().map(BigInt::bits).max().unwrap_or(0)
    }

    /// Coordinates reduced into `0..8`.
    pub fn residues_mod8(&self) -> [u8; 4] {
        self.c.each_ref().map(|x| {
            let low = (x.magnitude().iter_u32_digits().next().unwrap_or(0) & 7) as u8;
            if x.sign() == Sign::Minus {
                (8 - low) % 8
            } else {
                low
            }
        })
    }
}

impl Add for &ZOmega {
    type Output = ZOmega;
    fn add(self, rhs: &ZOmega) -> ZOmega {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &rhs.c;
        ZOmega::new(a0 + b0, a1 + b1, a2 + b2, a3 + b3)
    }
}

impl Add for ZOmega {
    type Output = ZOmega;
    fn add(self, rhs: ZOmega) -> ZOmega {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        ZOmega::new(a0 + b0, a1 + b1, a2 + b2, a3 + b3)
    }
}

impl Sub for &ZOmega {
    type Output = ZOmega;
    fn sub(self, rhs: &ZOmega) -> ZOmega {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &rhs.c;
        ZOmega::new(a0 - b0, a1 - b1, a2 - b2, a3 - b3)
    }
}

impl Sub for ZOmega {
    type Output = ZOmega;
    fn sub(self, rhs: ZOmega) -> ZOmega {
        &self - &rhs
    }
}

impl Neg for &ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        ZOmega {
            c: self.c.clone().map(|x| -x),
        }
    }
}

impl Neg for ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        ZOmega {
            c: self.c.map(|x| -x),
        }
    }
}

impl Mul for &ZOmega {
    type Output = ZOmega;
    fn mul(self, rhs: &ZOmega) -> ZOmega {
        let a = &self.c;
        let b = &rhs.c;
        // ω^i·ω^j with i + j ≥ 4 wraps around with a sign flip.
        let mut c: [BigInt; 4] = Default::default();
        for i in 0..4 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if b[j].is_zero() {
                    continue;
                }
                let p = &a[i] * &b[j];
                if i + j < 4 {
                    c[i + j] += p;
                } else {
                    c[i + j - 4] -= p;
                }
            }
        }
        ZOmega { c }
    }
}

impl Mul for ZOmega {
    type Output = ZOmega;
    fn mul(self, rhs: ZOmega) -> ZOmega {
        &self * &rhs
    }
}

impl From<i64> for ZOmega {
    fn from(n: i64) -> Self {
        Self::new(n, 0, 0, 0)
    }
}

impl From<BigInt> for ZOmega {
    fn from(n: BigInt) -> Self {
        Self::new(n, 0, 0, 0)
    }
}

/// Canonical text form `a,b,c,d`.
impl fmt::Display for ZOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.c;
        write!(f, "{a},{b},{c},{d}")
    }
}

impl FromStr for ZOmega {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "expected four comma-separated integers, got {s:?}"
            )));
        }
        let mut c: [BigInt; 4] = Default::default();
        for (slot, part) in c.iter_mut().zip(parts) {
            *slot = parse_decimal(part)?;
        }
        Ok(Self { c })
    }
}

/// Strict signed decimal: optional `-`, digits, no whitespace or `+`.
pub(crate) fn parse_decimal(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a decimal integer: {s:?}")));
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(Error::Parse(format!("leading zero in integer: {s:?}")));
    }
    if s.starts_with('-') && digits == "0" {
        return Err(Error::Parse(format!("negative zero: {s:?}")));
    }
    s.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}
