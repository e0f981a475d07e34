use super::circuit::{normalize_ht, Circuit};
use super::gate::Gate;
use super::table::{LookupTable, TABLE_MAX_SDE};
use crate::error::{Error, Result};
use crate::json;
use crate::ring::Sde;
use crate::unitary::{RingState, RingUnitary};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SynthesisOptions {
    /// Reduce with `T^{-k}`, `k ∈ {0, 1, 2, 3}`, i.e. emit `T^{-k}·H`.
    pub negative_powers: bool,
    /// Write `T³` as `P·T` instead of `Z·T†`.
    pub prefer_p: bool,
}

/// Result of [`synthesize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synthesis {
    pub circuit: Circuit,
    /// `circuit.evaluate() = ω^phase · u`
    pub phase: u8,
    pub initial_sde: u64,
    pub descent_steps: u64,
}

/// One descent step: the first `k` (scanning 0, 1, 2, 3) such that
/// `H·T^{-k}·u` has `sde_measure` one less than `u`.
///
/// With `negative_powers` the scan is over `T^{k}` instead and the returned
/// `k` is negative.
pub fn reduce_step(u: &RingUnitary, negative_powers: bool) -> Result<(i64, RingUnitary)> {
    let s = u.sde_measure();
    if s <= TABLE_MAX_SDE {
        return Err(Error::InternalInvariant(format!(
            "reduce_step needs sde_measure ≥ 4, got {s}"
        )));
    }
    let target = Sde::Finite(s as i64 - 1);
    for step in 0..4i64 {
        let k = if negative_powers { -step } else { step };
        // Top-left entry of H·T^{-k}·u is (z00 + ω^{-k}·z10)/√2.
        let top = (&u.z00 + &u.z10.mul_omega_pow(-k)).mul_sqrt2_pow(-1);
        if top.sde_abs_sq() == target {
            return Ok((k, u.left_t_pow(-k).left_h()));
        }
    }
    Err(Error::InternalInvariant(format!(
        "no k in 0..4 lowers sde_measure {s} of {}",
        json::unitary_to_string(u)
    )))
}

/// Decomposes `u` as `T^{k₁}·H·T^{k₂}·H ⋯ T^{kₙ}·H·V` with `V` from the
/// table, then rewrites T runs into the cheaper gate forms.
pub fn synthesize(
    u: &RingUnitary,
    table: &LookupTable,
    options: SynthesisOptions,
) -> Result<Synthesis> {
    u.validate()?;
    let initial_sde = u.sde_measure();
    let mut raw: Vec<Gate> = Vec::new();
    let mut rest = u.clone();
    let mut steps = 0u64;
    while rest.sde_measure() > TABLE_MAX_SDE {
        let (k, next) = reduce_step(&rest, options.negative_powers)?;
        // rest = T^k·H·next
        let t = if k >= 0 { Gate::T } else { Gate::Tdag };
        raw.extend(std::iter::repeat_n(t, k.unsigned_abs() as usize));
        raw.push(Gate::H);
        rest = next;
        steps += 1;
    }
    let expected = initial_sde.saturating_sub(TABLE_MAX_SDE);
    if steps != expected {
        return Err(Error::InternalInvariant(format!(
            "descent took {steps} steps from sde {initial_sde}, expected {expected}"
        )));
    }
    let (tail, phase) = table
        .lookup(&rest)
        .ok_or_else(|| Error::TableMiss(json::unitary_to_string(&rest)))?;
    raw.extend_from_slice(tail.gates());
    Ok(Synthesis {
        circuit: normalize_ht(&Circuit::from_gates(raw), options.prefer_p),
        phase,
        initial_sde,
        descent_steps: steps,
    })
}

/// A circuit `C` with `C·|0⟩ = s` exactly, global phase included.
///
/// Tries every completion of `s` to a unitary and keeps the cheapest circuit
/// by (T count, H count, length). The global phase `ω^p` left over by
/// synthesis is cancelled on `|0⟩` by a trailing `X·T^{-p}·X`.
pub fn prepare_state(
    s: &RingState,
    table: &LookupTable,
    options: SynthesisOptions,
) -> Result<Circuit> {
    s.validate()?;
    let mut best: Option<Circuit> = None;
    for k in 0..8 {
        let u = RingUnitary::complete_from_column(s, k);
        let syn = synthesize(&u, table, options)?;
        let mut gates = syn.circuit.into_gates();
        if syn.phase != 0 {
            // diag(ω^{-p}, 1) = X·T^{-p}·X, applied first
            gates.push(Gate::X);
            gates.extend(std::iter::repeat_n(Gate::T, (8 - syn.phase as usize) % 8));
            gates.push(Gate::X);
        }
        let c = normalize_ht(&Circuit::from_gates(gates), options.prefer_p);
        let key = |c: &Circuit| {
            let n = c.counts();
            (n.n_t, n.n_h, n.n_g)
        };
        if best.as_ref().is_none_or(|b| key(&c) < key(b)) {
            best = Some(c);
        }
    }
    let c = best.expect("eight candidates");
    let prepared = c.evaluate().column(0);
    if prepared != *s {
        return Err(Error::InternalInvariant(
            "prepared state differs from the requested one".into(),
        ));
    }
    Ok(c)
}
