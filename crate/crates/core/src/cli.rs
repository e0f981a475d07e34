//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it with in-memory streams.
//!
//! Exit codes: 0 success, 1 malformed input, 2 the residue check failed,
//! 3 an internal invariant broke (table miss, bad certificate).

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json;
use crate::synthesis::{
    brute_force_min_counts, certify_optimality, prepare_state, reachable_classes, synthesize,
    Circuit, Gate, LookupTable, SynthesisOptions,
};
use crate::unitary::RingUnitary;
use crate::verifier::{verify_lemma_parallel, verify_lemma_with, LemmaCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_LEMMA_FALSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ctsynth",
    version,
    about = "Exact Clifford+T synthesis with optimal H and T counts"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Lookup table cache; built and written here if missing
    #[arg(long, global = true)]
    table: Option<PathBuf>,
    /// Worker threads for batch work (default: one)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Descend with T^{-k} instead of T^{k}
    #[arg(long, global = true)]
    negative_powers: bool,
    /// Write T³ as P·T instead of Z·T†
    #[arg(long, global = true)]
    prefer_p: bool,
    /// Add wall-clock milliseconds to reports
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Synthesize a matrix (or an array of matrices) or a gate word
    Synth {
        /// JSON file, or - for standard input
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        matrix: Option<String>,
        /// Circuit text in application order, e.g. HTHT; - reads standard input
        #[arg(long)]
        word: Option<String>,
    },
    /// Find a circuit preparing a state from |0⟩
    Prepare {
        /// JSON file, or - for standard input
        #[arg(long)]
        state: String,
    },
    /// Run the exhaustive mod-8 residue check
    VerifyLemma {
        /// Shifts k to try, e.g. 0,1,2 for the ablation
        #[arg(long, value_delimiter = ',', default_values_t = [0u8, 1, 2, 3])]
        ks: Vec<u8>,
    },
    /// Build the lookup table and write it
    GenTable {
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare synthesized counts with a brute-force search
    OracleCheck {
        /// Longest {H, T} word whose classes are checked
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Evaluate a circuit text to its matrix
    Eval {
        /// Circuit text; - reads standard input
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TableMiss(_) | Error::Certificate(_) | Error::InternalInvariant(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Divisibility(_) => "DIVISIBILITY",
        Error::Unitarity(_) => "UNITARITY",
        Error::Parse(_) => "PARSE",
        Error::InternalInvariant(_) => "INTERNAL-INVARIANT",
        Error::TableMiss(_) => "TABLE-MISS",
        Error::Certificate(_) => "CERTIFICATE-ERROR",
        Error::TableFormat(_) => "TABLE-FORMAT",
        Error::Io(_) => "IO",
    }
}

fn diagnostic(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

fn emit(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("JSON value serializes")
    )
}

/// Runs the program on `argv` (including the program name).
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = emit(stdout, &diagnostic("USAGE", e.render().to_string().trim()));
                    EXIT_INPUT
                }
            };
        }
    };
    let start = Instant::now();
    let pool = match cli.global.jobs.map(|n| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
    }) {
        None => None,
        Some(Ok(pool)) => Some(pool),
        Some(Err(e)) => {
            let _ = emit(stdout, &diagnostic("INTERNAL-INVARIANT", &e.to_string()));
            return EXIT_INTERNAL;
        }
    };
    let result = dispatch(&cli, stdin, pool.as_ref());
    match result {
        Ok((mut report, code)) => {
            if cli.global.timing {
                if let Value::Object(m) = &mut report {
                    m.insert(
                        "timing_ms".into(),
                        json!(start.elapsed().as_millis() as u64),
                    );
                }
            }
            match emit(stdout, &report) {
                Ok(()) => code,
                Err(_) => EXIT_INTERNAL,
            }
        }
        Err(e) => {
            let _ = emit(stdout, &diagnostic(error_kind(&e), &e.to_string()));
            exit_code(&e)
        }
    }
}

fn read_input(source: &str, stdin: &mut dyn Read) -> Result<Value> {
    let text = if source == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(source)?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{source}: {e}")))
}

/// Circuit text from the flag, or from standard input for `-`.
fn read_word(word: &str, stdin: &mut dyn Read) -> Result<Circuit> {
    if word == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        return Circuit::from_text(s.trim());
    }
    Circuit::from_text(word)
}

fn table(global: &GlobalOpts) -> Result<LookupTable> {
    match &global.table {
        Some(path) => LookupTable::load_or_build(path),
        None => Ok(LookupTable::build()),
    }
}

fn options(global: &GlobalOpts) -> SynthesisOptions {
    SynthesisOptions {
        negative_powers: global.negative_powers,
        prefer_p: global.prefer_p,
    }
}

/// Synthesis report with a certificate whenever the unitary is large enough
/// to carry one.
fn synth_report(u: &RingUnitary, table: &LookupTable, opts: SynthesisOptions) -> Result<Value> {
    let syn = synthesize(u, table, opts)?;
    if syn.circuit.evaluate() != u.mul_omega_pow(i64::from(syn.phase)) {
        return Err(Error::InternalInvariant(
            "synthesized circuit does not evaluate to the input".into(),
        ));
    }
    let cert = if syn.initial_sde >= 4 {
        Some(certify_optimality(u, &syn.circuit)?)
    } else {
        None
    };
    Ok(json::report_value(&syn.circuit, syn.phase, cert.as_ref()))
}

/// Runs `f` on `pool` when one was requested; without `--jobs` everything
/// stays on the calling thread.
fn in_pool<R: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(f),
        None => rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .map(|p| p.install(f))
            .expect("single-thread pool"),
    }
}

fn dispatch(
    cli: &Cli,
    stdin: &mut dyn Read,
    pool: Option<&rayon::ThreadPool>,
) -> Result<(Value, i32)> {
    let g = &cli.global;
    match &cli.command {
        Command::Synth { matrix, word } => {
            let table = table(g)?;
            let opts = options(g);
            if let Some(w) = word {
                let u = read_word(w, stdin)?.evaluate();
                return Ok((synth_report(&u, &table, opts)?, EXIT_OK));
            }
            let source = matrix.as_deref().expect("clap requires --matrix or --word");
            match read_input(source, stdin)? {
                Value::Array(items) => {
                    let us = items
                        .iter()
                        .enumerate()
                        .map(|(i, v)| {
                            json::unitary_from_value(v)
                                .map_err(|e| Error::Parse(format!("matrix {i}: {e}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    // collect keeps input order whatever the scheduling
                    let reports = in_pool(pool, || {
                        us.par_iter()
                            .map(|u| synth_report(u, &table, opts))
                            .collect::<Result<Vec<_>>>()
                    })?;
                    Ok((Value::Array(reports), EXIT_OK))
                }
                v => {
                    let u = json::unitary_from_value(&v)?;
                    Ok((synth_report(&u, &table, opts)?, EXIT_OK))
                }
            }
        }
        Command::Prepare { state } => {
            let s = json::state_from_value(&read_input(state, stdin)?)?;
            let c = prepare_state(&s, &table(g)?, options(g))?;
            Ok((json::report_value(&c, 0, None), EXIT_OK))
        }
        Command::VerifyLemma { ks } => {
            let check = LemmaCheck {
                ks: ks.clone(),
                ..LemmaCheck::default()
            };
            let v = match pool {
                Some(p) => p.install(|| verify_lemma_parallel(&check)),
                None => verify_lemma_with(&check),
            };
            let witness = v
                .witness
                .map(|w| json!({ "x": w.x.0, "y": w.y.0, "j": w.stratum, "d": w.shift }));
            let report = json!({
                "holds": v.holds,
                "ks": ks,
                "pairs_checked": v.pairs_checked,
                "witness": witness,
            });
            Ok((report, if v.holds { EXIT_OK } else { EXIT_LEMMA_FALSE }))
        }
        Command::GenTable { out } => {
            let table = LookupTable::build();
            table.save(out)?;
            let s = table.stats();
            let report = json!({
                "out": out.display().to_string(),
                "entries": s.entries,
                "max_circuit_length": s.max_circuit_length,
                "expansion_set": s.expansion_set,
                "bfs_levels": s.bfs_levels,
            });
            Ok((report, EXIT_OK))
        }
        Command::OracleCheck { depth } => {
            let table = table(g)?;
            let opts = options(g);
            let classes = reachable_classes(&[Gate::H, Gate::T], *depth);
            let rows = in_pool(pool, || {
                classes
                    .par_iter()
                    .map(|u| oracle_row(u, &table, opts, *depth as u32))
                    .collect::<Result<Vec<_>>>()
            })?;
            let mismatches: Vec<Value> = rows.into_iter().flatten().collect();
            let report = json!({
                "depth": depth,
                "classes": classes.len(),
                "mismatches": mismatches,
            });
            let code = if mismatches.is_empty() {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            };
            Ok((report, code))
        }
        Command::Eval { word } => {
            let u = read_word(word, stdin)?.evaluate();
            Ok((json::unitary_to_value(&u), EXIT_OK))
        }
    }
}

/// `None` when synthesis matches the brute-force minimum counts.
fn oracle_row(
    u: &RingUnitary,
    table: &LookupTable,
    opts: SynthesisOptions,
    depth: u32,
) -> Result<Option<Value>> {
    let syn = synthesize(u, table, opts)?;
    let n = syn.circuit.counts();
    let got = (n.n_h as u32, n.n_t as u32);
    let want = brute_force_min_counts(u, depth.max(got.0 + got.1))
        .ok_or_else(|| Error::InternalInvariant("brute force missed a reachable class".into()))?;
    Ok((got != want).then(|| {
        json!({
            "matrix": json::unitary_to_value(u),
            "synthesized": { "n_H": got.0, "n_T": got.1 },
            "brute_force": { "n_H": want.0, "n_T": want.1 },
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let argv = std::iter::once("ctsynth").chain(args.iter().copied());
        let code = run(argv, &mut std::io::empty(), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn eval_empty_word_is_identity() {
        let (code, out) = run_str(&["eval", "--word", ""]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            json::unitary_from_value(&v).unwrap(),
            RingUnitary::identity()
        );
    }

    #[test]
    fn bad_word_is_exit_one() {
        let (code, out) = run_str(&["eval", "--word", "HQ"]);
        assert_eq!(code, 1);
        assert!(out.contains("PARSE"), "{out}");
        let (code, _) = run_str(&["frobnicate"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn lemma_and_ablation() {
        assert_eq!(run_str(&["verify-lemma"]).0, 0);
        let (code, out) = run_str(&["verify-lemma", "--ks", "0,1,2"]);
        assert_eq!(code, 2);
        assert!(out.contains("\"witness\": {"), "{out}");
    }
}
