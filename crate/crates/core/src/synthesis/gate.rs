use std::fmt;

use crate::error::{Error, Result};
use crate::unitary::RingUnitary;

/// A gate from the library {H, T, T†, P, P†, Z, X, Y}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    H,
    T,
    Tdag,
    P,
    Pdag,
    Z,
    X,
    Y,
}

impl Gate {
    pub const ALL: [Gate; 8] = [
        Gate::H,
        Gate::T,
        Gate::Tdag,
        Gate::P,
        Gate::Pdag,
        Gate::Z,
        Gate::X,
        Gate::Y,
    ];

    pub fn token(self) -> char {
        match self {
            Gate::H => 'H',
            Gate::T => 'T',
            Gate::Tdag => 't',
            Gate::P => 'P',
            Gate::Pdag => 'p',
            Gate::Z => 'Z',
            Gate::X => 'X',
            Gate::Y => 'Y',
        }
    }

    pub fn from_token(c: char) -> Result<Gate> {
        Ok(match c {
            'H' => Gate::H,
            'T' => Gate::T,
            't' => Gate::Tdag,
            'P' => Gate::P,
            'p' => Gate::Pdag,
            'Z' => Gate::Z,
            'X' => Gate::X,
            'Y' => Gate::Y,
            other => return Err(Error::Parse(format!("unknown gate token {other:?}"))),
        })
    }

    /// Exponent `j` with `gate = T^j`, for the diagonal gates.
    pub fn t_exponent(self) -> Option<i64> {
        match self {
            Gate::T => Some(1),
            Gate::Tdag => Some(7),
            Gate::P => Some(2),
            Gate::Pdag => Some(6),
            Gate::Z => Some(4),
            Gate::H | Gate::X | Gate::Y => None,
        }
    }

    pub fn matrix(self) -> RingUnitary {
        match self {
            Gate::H => RingUnitary::hadamard(),
            Gate::X => RingUnitary::pauli_x(),
            Gate::Y => RingUnitary::pauli_y(),
            d => RingUnitary::t_pow(d.t_exponent().expect("diagonal gate")),
        }
    }

    /// `self · u` without a general matrix product.
    pub fn apply_left(self, u: &RingUnitary) -> RingUnitary {
        match self {
            Gate::H => u.left_h(),
            Gate::X => u.left_x(),
            Gate::Y => u.left_y(),
            d => u.left_t_pow(d.t_exponent().expect("diagonal gate")),
        }
    }

    pub fn inverse(self) -> Gate {
        match self {
            Gate::T => Gate::Tdag,
            Gate::Tdag => Gate::T,
            Gate::P => Gate::Pdag,
            Gate::Pdag => Gate::P,
            g => g,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        for g in Gate::ALL {
            assert_eq!(Gate::from_token(g.token()).unwrap(), g);
        }
        assert!(Gate::from_token('S').is_err());
    }

    #[test]
    fn fast_application_matches_matrix() {
        let u = RingUnitary::hadamard()
            .mul(&RingUnitary::t_pow(1))
            .mul(&RingUnitary::hadamard())
            .mul(&RingUnitary::pauli_y());
        for g in Gate::ALL {
            assert_eq!(g.apply_left(&u), g.matrix().mul(&u), "{g}");
            assert_eq!(
                g.matrix().mul(&g.inverse().matrix()),
                RingUnitary::identity()
            );
        }
    }

    #[test]
    fn y_is_i_x_z() {
        // Y = i·X·Z exactly
        let xz = RingUnitary::pauli_x().mul(&RingUnitary::t_pow(4));
        assert_eq!(RingUnitary::pauli_y(), xz.mul_omega_pow(2));
    }
}
