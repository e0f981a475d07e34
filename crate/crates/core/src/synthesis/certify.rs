use super::circuit::Circuit;
use crate::error::{Error, Result};
use crate::unitary::RingUnitary;

/// Claimed minimal Hadamard and T counts for a unitary with
/// `sde_measure ≥ 4`, with the witnesses `l`, `j` of
/// `sde_measure(H·T^l·U·T^j·H) = sde_measure(U) + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OptimalityCertificate {
    pub h_claimed: u64,
    pub t_claimed: u64,
    pub l: u8,
    pub j: u8,
}

/// Checks that `c` realizes the minimal counts for `u`:
/// `h = sde_measure(u) − 1` and `t = h + 1 − (l mod 2) − (j mod 2)`.
///
/// An H-optimal HT-normal circuit `S₀·H·S₁ ⋯ H·S_{k+1}` has one T in each
/// inner `Sᵢ`. `S₀` holds a T exactly when the extending `T^l` must be even
/// (an odd total exponent is needed between the new H pair), and the same
/// for `S_{k+1}` and `j`.
pub fn certify_optimality(u: &RingUnitary, c: &Circuit) -> Result<OptimalityCertificate> {
    let s = u.sde_measure();
    if s < 4 {
        return Err(Error::Certificate(format!(
            "certificates need sde_measure ≥ 4, got {s}"
        )));
    }
    let h_claimed = s - 1;
    let counts = c.counts();
    if counts.n_h as u64 != h_claimed {
        return Err(Error::Certificate(format!(
            "circuit has {} Hadamards, expected {h_claimed}",
            counts.n_h
        )));
    }
    let (l, j) = extension_witness(u)
        .ok_or_else(|| Error::Certificate("no l, j in 0..4 raise sde_measure by 2".into()))?;
    let t_claimed = t_from_witness(h_claimed, l, j);
    if counts.n_t as u64 != t_claimed {
        return Err(Error::Certificate(format!(
            "circuit has {} T gates, expected {t_claimed} (l = {l}, j = {j})",
            counts.n_t
        )));
    }
    Ok(OptimalityCertificate {
        h_claimed,
        t_claimed,
        l,
        j,
    })
}

/// `h + 1 − (l mod 2) − (j mod 2)`
pub fn t_from_witness(h: u64, l: u8, j: u8) -> u64 {
    h + 1 - u64::from(l % 2) - u64::from(j % 2)
}

/// First `(l, j)` in scan order with `sde_measure(H·T^l·u·T^j·H) = sde + 2`.
pub fn extension_witness(u: &RingUnitary) -> Option<(u8, u8)> {
    let target = u.sde_measure() + 2;
    (0..4u8).find_map(|l| {
        let left = u.left_t_pow(l as i64).left_h();
        (0..4u8).find_map(|j| {
            (left.right_t_pow(j as i64).right_h().sde_measure() == target).then_some((l, j))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthesis::{synthesize, LookupTable};

    #[test]
    fn ht_to_the_tenth() {
        let table = LookupTable::build();
        let u = Circuit::from_text(&"TH".repeat(10)).unwrap().evaluate();
        assert_eq!(u.sde_measure(), 11);
        let syn = synthesize(&u, &table, Default::default()).unwrap();
        let cert = certify_optimality(&u, &syn.circuit).unwrap();
        assert_eq!(cert.h_claimed, 10);
        assert_eq!(cert.t_claimed, t_from_witness(10, cert.l, cert.j));
    }

    #[test]
    fn rejects_padded_circuit() {
        let table = LookupTable::build();
        let u = Circuit::from_text("HTHTHTHTHT").unwrap().evaluate();
        let syn = synthesize(&u, &table, Default::default()).unwrap();
        let mut padded = syn.circuit.clone();
        padded.extend(&Circuit::from_text("HH").unwrap());
        assert!(matches!(
            certify_optimality(&u, &padded),
            Err(Error::Certificate(_))
        ));
        assert!(certify_optimality(&RingUnitary::hadamard(), &Circuit::new()).is_err());
    }
}
