use std::fmt;
use std::str::FromStr;

use super::gate::Gate;
use crate::error::{Error, Result};
use crate::unitary::RingUnitary;

/// Gate tallies in the usual resource-count columns.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GateCounts {
    pub n_g: usize,
    /// T and T†
    pub n_t: usize,
    pub n_h: usize,
    /// P and P†
    pub n_p: usize,
    /// X, Y and Z
    pub n_pl: usize,
}

/// A gate sequence in matrix-product order: `gates[0]` is the leftmost
/// factor and acts last on a ket.
///
/// The text form (`Display`/`FromStr`) is the reverse, application order:
/// the first token acts first. `"HT"` is the matrix `T·H`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Circuit {
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_gates(gates: Vec<Gate>) -> Self {
        Self { gates }
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn into_gates(self) -> Vec<Gate> {
        self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: Gate) {
        self.gates.push(g);
    }

    pub fn extend(&mut self, other: &Circuit) {
        self.gates.extend_from_slice(&other.gates);
    }

    /// The matrix `gates[0] · gates[1] · … · gates[n−1]`.
    pub fn evaluate(&self) -> RingUnitary {
        self.gates
            .iter()
            .rev()
            .fold(RingUnitary::identity(), |acc, g| g.apply_left(&acc))
    }

    pub fn counts(&self) -> GateCounts {
        let mut c = GateCounts {
            n_g: self.gates.len(),
            ..GateCounts::default()
        };
        for g in &self.gates {
            match g {
                Gate::H => c.n_h += 1,
                Gate::T | Gate::Tdag => c.n_t += 1,
                Gate::P | Gate::Pdag => c.n_p += 1,
                Gate::X | Gate::Y | Gate::Z => c.n_pl += 1,
            }
        }
        c
    }

    pub fn inverse(&self) -> Circuit {
        Circuit::from_gates(self.gates.iter().rev().map(|g| g.inverse()).collect())
    }

    /// Application-order text.
    pub fn to_text(&self) -> String {
        self.gates.iter().rev().map(|g| g.token()).collect()
    }

    pub fn from_text(s: &str) -> Result<Circuit> {
        let mut gates = s
            .chars()
            .map(Gate::from_token)
            .collect::<Result<Vec<_>>>()?;
        gates.reverse();
        Ok(Circuit { gates })
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Circuit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Circuit> {
        Circuit::from_text(s)
    }
}

/// Emitted form of `T^e`, in matrix order.
fn t_power_gates(e: i64, prefer_p: bool) -> &'static [Gate] {
    match e.rem_euclid(8) {
        0 => &[],
        1 => &[Gate::T],
        2 => &[Gate::P],
        3 if prefer_p => &[Gate::P, Gate::T],
        3 => &[Gate::Z, Gate::Tdag],
        4 => &[Gate::Z],
        5 => &[Gate::Z, Gate::T],
        6 => &[Gate::Pdag],
        _ => &[Gate::Tdag],
    }
}

/// Rewrites every maximal run of diagonal gates into its cheapest form:
/// `T⁴ → Z`, `T³ → Z·T†` (or `P·T` with `prefer_p`), `T² → P`, `T⁻¹ → T†`.
/// The evaluated matrix is unchanged exactly.
pub fn normalize_ht(c: &Circuit, prefer_p: bool) -> Circuit {
    let mut out = Vec::with_capacity(c.len());
    let mut run: Option<i64> = None;
    for &g in c.gates() {
        match g.t_exponent() {
            Some(e) => *run.get_or_insert(0) += e,
            None => {
                if let Some(e) = run.take() {
                    out.extend_from_slice(t_power_gates(e, prefer_p));
                }
                out.push(g);
            }
        }
    }
    if let Some(e) = run {
        out.extend_from_slice(t_power_gates(e, prefer_p));
    }
    Circuit::from_gates(out)
}
