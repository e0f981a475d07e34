#![allow(dead_code)]

use std::sync::OnceLock;

use ctsynth::{Circuit, LookupTable, RingUnitary, ZOmega};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn table() -> &'static LookupTable {
    static TABLE: OnceLock<LookupTable> = OnceLock::new();
    TABLE.get_or_init(LookupTable::build)
}

pub fn random_word(rng: &mut ChaCha8Rng, alphabet: &[u8], len: usize) -> String {
    (0..len)
        .map(|_| alphabet[rng.random_range(0..alphabet.len())] as char)
        .collect()
}

pub fn eval(word: &str) -> RingUnitary {
    Circuit::from_text(word).unwrap().evaluate()
}

pub fn z(c: [i64; 4]) -> ZOmega {
    ZOmega::new(c[0], c[1], c[2], c[3])
}

/// Fixed-point complex value `(re, im) · 2^-SCALE`, accurate to a few units
/// in the last place for coordinates far below `2^SCALE`.
pub const SCALE: u32 = 256;

pub fn fixed(x: &ZOmega) -> (BigInt, BigInt) {
    let one = BigInt::from(1) << SCALE;
    // cos(π/4) = sin(π/4) = √(2^{2·SCALE} / 2)
    let s = (BigInt::from(1) << (2 * SCALE - 1)).sqrt();
    let [c0, c1, c2, c3] = x.coords();
    let re = c0 * &one + c1 * &s - c3 * &s;
    let im = c1 * &s + c2 * &one + c3 * &s;
    (re, im)
}

pub fn fixed_mul(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    let re = (&a.0 * &b.0 - &a.1 * &b.1) >> SCALE;
    let im = (&a.0 * &b.1 + &a.1 * &b.0) >> SCALE;
    (re, im)
}

pub fn close(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> bool {
    let tol = BigInt::from(1) << (SCALE / 2);
    (&a.0 - &b.0).magnitude() < tol.magnitude() && (&a.1 - &b.1).magnitude() < tol.magnitude()
}
