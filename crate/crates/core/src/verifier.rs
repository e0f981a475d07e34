//! Exhaustive check, over coordinate residues mod 8, that one of the four
//! descent candidates `x + ω^k·y`, `k ∈ {0, 1, 2, 3}`, hits every valuation
//! change the synthesis loop relies on.
//!
//! `|x|² = P(x) + √2·Q(x)` and the base-√2 valuation of a real element
//! `a + √2·b` is `2·v₂(a)` when `v₂(b) ≥ v₂(a)` and `2·v₂(b) + 1` otherwise.
//! Residues mod 8 fix `v₂` below 3, so valuations up to 5 are decided exactly.

use std::fmt;
use std::ops::Add;

use rayon::prelude::*;

/// Coordinates of a Z[ω] element reduced mod 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueVector(pub [u8; 4]);

impl ResidueVector {
    pub fn new(r: [u8; 4]) -> Self {
        Self(r.map(|x| x % 8))
    }

    /// All 4096 vectors in lexicographic order.
    pub fn all() -> impl Iterator<Item = ResidueVector> {
        (0..4096u16).map(|n| {
            ResidueVector([
                (n >> 9) as u8 & 7,
                (n >> 6) as u8 & 7,
                (n >> 3) as u8 & 7,
                n as u8 & 7,
            ])
        })
    }

    pub fn mul_omega(self) -> Self {
        let [y0, y1, y2, y3] = self.0;
        Self([(8 - y3) % 8, y0, y1, y2])
    }

    pub fn mul_omega_pow(self, k: u8) -> Self {
        (0..k % 8).fold(self, |acc, _| acc.mul_omega())
    }

    pub fn mul_sqrt2(self) -> Self {
        let [x0, x1, x2, x3] = self.0.map(u16::from);
        Self::new([
            ((x1 + 8 - x3) % 8) as u8,
            ((x0 + x2) % 8) as u8,
            ((x1 + x3) % 8) as u8,
            ((x2 + 8 - x0) % 8) as u8,
        ])
    }

    /// `(P mod 8, Q mod 8)`
    pub fn forms(self) -> (u8, u8) {
        let [x0, x1, x2, x3] = self.0.map(u32::from);
        let p = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
        let q = x0 * (x1 + 8 - x3) + x2 * (x1 + x3);
        ((p % 8) as u8, (q % 8) as u8)
    }

    /// Base-√2 valuation of `|x|²` as far as residues mod 8 determine it.
    pub fn gde_abs_sq(self) -> CappedGde {
        let (a, b) = self.forms();
        match (v2_mod8(a), v2_mod8(b)) {
            (Some(va), Some(vb)) if vb >= va => CappedGde::Exact(2 * va),
            (Some(_), Some(vb)) => CappedGde::Exact(2 * vb + 1),
            // v₂(b) ≥ 3 > v₂(a)
            (Some(va), None) => CappedGde::Exact(2 * va),
            // v₂(a) ≥ 3 > v₂(b)
            (None, Some(vb)) => CappedGde::Exact(2 * vb + 1),
            // both ≥ 3: the valuation is ≥ 6 either way
            (None, None) => CappedGde::AtLeast6,
        }
    }
}

impl Add for ResidueVector {
    type Output = ResidueVector;
    fn add(self, rhs: ResidueVector) -> ResidueVector {
        ResidueVector(std::array::from_fn(|i| (self.0[i] + rhs.0[i]) % 8))
    }
}

impl fmt::Display for ResidueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// 2-adic valuation of a residue mod 8; `None` means "at least 3".
fn v2_mod8(a: u8) -> Option<u8> {
    (a % 8 != 0).then(|| (a % 8).trailing_zeros() as u8)
}

/// A valuation known exactly up to 5, or only bounded below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CappedGde {
    Exact(u8),
    AtLeast6,
}

/// `(P mod 8, Q mod 8)` of a residue vector.
pub fn residue_forms(x: ResidueVector) -> (u8, u8) {
    x.forms()
}

pub fn residue_gde_abs_sq(x: ResidueVector) -> CappedGde {
    x.gde_abs_sq()
}

/// Which cases to run; the defaults are the full check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub strata: Vec<u8>,
    pub shifts: Vec<u8>,
    pub ks: Vec<u8>,
}

impl Default for LemmaCheck {
    fn default() -> Self {
        Self {
            strata: vec![0, 1],
            shifts: vec![1, 2, 3],
            ks: vec![0, 1, 2, 3],
        }
    }
}

/// A case with no `k` reaching valuation `shift + stratum`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: ResidueVector,
    pub y: ResidueVector,
    pub stratum: u8,
    pub shift: u8,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x = {}, y = {}, j = {}, d = {}",
            self.x, self.y, self.stratum, self.shift
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub holds: bool,
    /// First failing case in (j, a, b, x, y, d) order.
    pub witness: Option<Witness>,
    pub pairs_checked: u64,
}

/// Residue vectors grouped by `(j, P mod 8, Q mod 8)` for `j ∈ {0, 1}`.
struct Buckets([[[Vec<ResidueVector>; 8]; 8]; 2]);

impl Buckets {
    fn build() -> Self {
        let mut g: [[[Vec<ResidueVector>; 8]; 8]; 2] = Default::default();
        for x in ResidueVector::all() {
            if let CappedGde::Exact(j @ (0 | 1)) = x.gde_abs_sq() {
                let (a, b) = x.forms();
                g[j as usize][a as usize][b as usize].push(x);
            }
        }
        Buckets(g)
    }
}

fn check_stratum(
    buckets: &Buckets,
    check: &LemmaCheck,
    j: u8,
    ax: u8,
    bx: u8,
) -> (u64, Option<Witness>) {
    let ay = (8 - ax) % 8;
    let by = (8 - bx) % 8;
    let xs = &buckets.0[j as usize][ax as usize][bx as usize];
    let ys = &buckets.0[j as usize][ay as usize][by as usize];
    let mut pairs = 0u64;
    for &x in xs {
        for &y in ys {
            pairs += 1;
            for &d in &check.shifts {
                let want = CappedGde::Exact(d + j);
                let found = check
                    .ks
                    .iter()
                    .any(|&k| (x + y.mul_omega_pow(k)).gde_abs_sq() == want);
                if !found {
                    return (
                        pairs,
                        Some(Witness {
                            x,
                            y,
                            stratum: j,
                            shift: d,
                        }),
                    );
                }
            }
        }
    }
    (pairs, None)
}

fn strata(check: &LemmaCheck) -> Vec<(u8, u8, u8)> {
    let mut out = Vec::new();
    for &j in &check.strata {
        for ax in 0..8 {
            for bx in 0..8 {
                out.push((j, ax, bx));
            }
        }
    }
    out
}

/// Runs the residue check single-threaded.
pub fn verify_lemma_with(check: &LemmaCheck) -> Verification {
    let buckets = Buckets::build();
    let mut pairs_checked = 0;
    for (j, ax, bx) in strata(check) {
        let (pairs, witness) = check_stratum(&buckets, check, j, ax, bx);
        pairs_checked += pairs;
        if witness.is_some() {
            return Verification {
                holds: false,
                witness,
                pairs_checked,
            };
        }
    }
    Verification {
        holds: true,
        witness: None,
        pairs_checked,
    }
}

/// Same result as [`verify_lemma_with`], strata checked in parallel.
pub fn verify_lemma_parallel(check: &LemmaCheck) -> Verification {
    let buckets = Buckets::build();
    let results: Vec<(u64, Option<Witness>)> = strata(check)
        .into_par_iter()
        .map(|(j, ax, bx)| check_stratum(&buckets, check, j, ax, bx))
        .collect();
    let mut pairs_checked = 0;
    for (pairs, witness) in results {
        pairs_checked += pairs;
        if witness.is_some() {
            return Verification {
                holds: false,
                witness,
                pairs_checked,
            };
        }
    }
    Verification {
        holds: true,
        witness: None,
        pairs_checked,
    }
}

pub fn verify_lemma() -> bool {
    verify_lemma_with(&LemmaCheck::default()).holds
}
