mod common;

use common::{eval, random_word, table};
use ctsynth::synthesis::{
    brute_force_min_counts, certify_optimality, prepare_state, reachable_classes, synthesize,
    SynthesisOptions,
};
use ctsynth::{Circuit, Error, Gate, LookupTable, RingScalar, RingState, RingUnitary};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ALL_OPTIONS: [SynthesisOptions; 4] = [
    SynthesisOptions {
        negative_powers: false,
        prefer_p: false,
    },
    SynthesisOptions {
        negative_powers: true,
        prefer_p: false,
    },
    SynthesisOptions {
        negative_powers: false,
        prefer_p: true,
    },
    SynthesisOptions {
        negative_powers: true,
        prefer_p: true,
    },
];

fn t_exponent_between_hadamards(gates: &[Gate]) -> Vec<u8> {
    let hs: Vec<usize> = (0..gates.len()).filter(|&i| gates[i] == Gate::H).collect();
    hs.windows(2)
        .map(|w| {
            gates[w[0] + 1..w[1]]
                .iter()
                .map(|g| g.t_exponent().expect("only diagonal gates between H"))
                .sum::<i64>()
                .rem_euclid(8) as u8
        })
        .collect()
}

#[test]
fn random_words_round_trip_with_every_option() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let len = rng.random_range(0..200);
        let u = eval(&random_word(&mut rng, b"HTtPpZXY", len));
        for opts in ALL_OPTIONS {
            let syn = synthesize(&u, table(), opts).unwrap();
            assert_eq!(
                syn.circuit.evaluate(),
                u.mul_omega_pow(i64::from(syn.phase))
            );
            let s = u.sde_measure();
            let n = syn.circuit.counts();
            if s >= 4 {
                assert_eq!(n.n_h as u64, s - 1);
                assert_eq!(syn.descent_steps, s - 3);
                certify_optimality(&u, &syn.circuit).unwrap();
            }
            assert!(n.n_g as u64 <= table().stats().max_circuit_length as u64 + 4 * s);
        }
    }
}

#[test]
fn ht_normal_form_of_descent_output() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let u = eval(&random_word(&mut rng, b"HT", 300));
        let syn = synthesize(&u, table(), Default::default()).unwrap();
        let gates = syn.circuit.gates();
        let xy = gates
            .iter()
            .filter(|g| matches!(g, Gate::X | Gate::Y))
            .count();
        assert!(xy <= 3);
        // gaps fully inside the descent part hold one T or T† plus maybe P, P† or Z
        let steps = syn.descent_steps as usize;
        let exps = t_exponent_between_hadamards(gates);
        for e in exps.iter().take(steps.saturating_sub(1)) {
            assert_eq!(e % 2, 1, "{}", syn.circuit);
        }
        let hs: Vec<usize> = (0..gates.len()).filter(|&i| gates[i] == Gate::H).collect();
        for w in hs.windows(2).take(steps.saturating_sub(1)) {
            let gap = &gates[w[0] + 1..w[1]];
            let t_like = gap
                .iter()
                .filter(|g| matches!(g, Gate::T | Gate::Tdag))
                .count();
            let cliff = gap
                .iter()
                .filter(|g| matches!(g, Gate::P | Gate::Pdag | Gate::Z))
                .count();
            assert_eq!(t_like, 1, "{}", syn.circuit);
            assert!(cliff <= 1, "{}", syn.circuit);
        }
    }
}

#[test]
fn prefer_p_writes_t_cubed_as_p_t() {
    let u = eval("HTTTHTHTTTHTH");
    let plain = synthesize(&u, table(), Default::default()).unwrap().circuit;
    let opts = SynthesisOptions {
        prefer_p: true,
        ..Default::default()
    };
    let with_p = synthesize(&u, table(), opts).unwrap().circuit;
    assert_eq!(plain.counts().n_t, with_p.counts().n_t);
    assert_eq!(plain.counts().n_h, with_p.counts().n_h);
    assert!(with_p.counts().n_p >= 1, "{with_p}");
}

#[test]
fn table_survives_json_and_rejects_tampering() {
    let t = table();
    let v = t.to_json();
    let back = LookupTable::from_json(&v).unwrap();
    assert_eq!(back.len(), t.len());
    assert_eq!(back.to_json(), v);
    let dir = std::env::temp_dir().join(format!("ctsynth-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    let built = LookupTable::load_or_build(&path).unwrap();
    assert!(path.exists());
    let loaded = LookupTable::load_or_build(&path).unwrap();
    assert_eq!(built.to_json(), loaded.to_json());

    let text = serde_json::to_string(&v).unwrap();
    let tampered = text.replacen("\"circuit\":\"H\"", "\"circuit\":\"T\"", 1);
    assert_ne!(tampered, text);
    let err = LookupTable::from_json(&serde_json::from_str(&tampered).unwrap()).unwrap_err();
    assert!(matches!(err, Error::TableFormat(_)), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn certificate_rejects_suboptimal_circuits() {
    let u = eval(&"TH".repeat(6));
    let good = synthesize(&u, table(), Default::default()).unwrap().circuit;
    certify_optimality(&u, &good).unwrap();
    // T·T† inserted: same matrix, two extra T gates
    let mut padded = good.gates().to_vec();
    padded.extend([Gate::T, Gate::Tdag]);
    let padded = Circuit::from_gates(padded);
    assert_eq!(padded.evaluate(), good.evaluate());
    assert!(matches!(
        certify_optimality(&u, &padded),
        Err(Error::Certificate(_))
    ));
    // H·H inserted
    let mut extra_h = good.gates().to_vec();
    extra_h.extend([Gate::H, Gate::H]);
    assert!(matches!(
        certify_optimality(&u, &Circuit::from_gates(extra_h)),
        Err(Error::Certificate(_))
    ));
    assert!(matches!(
        certify_optimality(&RingUnitary::hadamard(), &Circuit::from_text("H").unwrap()),
        Err(Error::Certificate(_))
    ));
}

#[test]
fn brute_force_agrees_on_short_words() {
    for u in reachable_classes(&[Gate::H, Gate::T], 7) {
        let syn = synthesize(&u, table(), Default::default()).unwrap();
        let n = syn.circuit.counts();
        let want = brute_force_min_counts(&u, 12).unwrap();
        assert_eq!((n.n_h as u32, n.n_t as u32), want, "{}", syn.circuit);
    }
    // H·T·H·T·H needs three Hadamards and two T gates
    let u = eval("HTHTH");
    assert_eq!(u.sde_measure(), 4);
    assert_eq!(brute_force_min_counts(&u, 5), Some((3, 2)));
    assert_eq!(brute_force_min_counts(&u, 1), None);
}

#[test]
fn preparation_is_exact_including_phase() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..150 {
        let len = rng.random_range(0..120);
        let s = eval(&random_word(&mut rng, b"HTtPXY", len))
            .column(0)
            .mul_omega_pow(i % 8);
        for opts in ALL_OPTIONS {
            let c = prepare_state(&s, table(), opts).unwrap();
            assert_eq!(c.evaluate().apply(&RingState::zero_ket()), s);
            // no completion can beat the T count of the chosen one by more
            // than the phase fix-up costs
            let best_t = (0..8)
                .map(|k| {
                    let u = RingUnitary::complete_from_column(&s, k);
                    synthesize(&u, table(), opts).unwrap().circuit.counts().n_t
                })
                .min()
                .unwrap();
            assert!(c.counts().n_t <= best_t + 1, "{c}");
        }
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    let bad = RingUnitary::new(
        RingScalar::one(),
        RingScalar::one(),
        RingScalar::zero(),
        RingScalar::one(),
    );
    assert!(matches!(
        synthesize(&bad, table(), Default::default()),
        Err(Error::Unitarity(_))
    ));
    let bad_state = RingState::new(RingScalar::one(), RingScalar::one());
    assert!(matches!(
        prepare_state(&bad_state, table(), Default::default()),
        Err(Error::Unitarity(_))
    ));
    assert!(matches!(Circuit::from_text("HQ"), Err(Error::Parse(_))));
}
