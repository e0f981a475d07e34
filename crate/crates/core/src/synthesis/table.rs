use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::path::Path;

use serde_json::{json, Value};

use super::circuit::{normalize_ht, Circuit};
use super::gate::Gate;
use crate::error::{Error, Result};
use crate::json;
use crate::ring::{RealZSqrt2, RingScalar, ZOmega};
use crate::unitary::{RingState, RingUnitary};

/// Unitaries with `sde_measure` up to this value are looked up, not reduced.
pub const TABLE_MAX_SDE: u64 = 3;
/// The BFS keeps expanding through unitaries up to this `sde_measure`.
const EXPANSION_MAX_SDE: u64 = 4;

pub const TABLE_FORMAT: &str = "ctsynth-lookup-table";
pub const TABLE_VERSION: u64 = 1;
const CANONICALIZATION: &str =
    "least omega^j multiple; order by numerators z00,z01,z10,z11 then exponents";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub circuit: Circuit,
    /// `circuit.evaluate() = ω^phase · key`
    pub phase: u8,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableStats {
    pub entries: usize,
    pub max_circuit_length: usize,
    /// Phase classes visited by the {H, T} closure, `sde_measure ≤ 4`.
    pub expansion_set: usize,
    pub bfs_levels: usize,
}

/// Optimal circuits for every unitary with `sde_measure ≤ 3`, keyed by phase
/// class representative.
#[derive(Clone, Debug)]
pub struct LookupTable {
    entries: HashMap<RingUnitary, TableEntry>,
    stats: TableStats,
}

impl LookupTable {
    /// Breadth-first closure over {H, T} from the identity, up to global
    /// phase, through every class with `sde_measure ≤ 4`; the classes with
    /// `sde_measure ≤ 3` become keys.
    ///
    /// Each key stores a circuit over the full library that is minimal in
    /// Hadamard count, then T count, then length.
    pub fn build() -> LookupTable {
        let (keys, expansion_set, bfs_levels) = ht_closure();
        let circuits = optimal_library_circuits();

        let mut entries = HashMap::with_capacity(keys.len());
        for key in keys {
            let entry = circuits
                .get(&key)
                .unwrap_or_else(|| panic!("no library circuit found for table key {key}"))
                .clone();
            entries.insert(key, entry);
        }
        assert_eq!(
            entries.len(),
            circuits.len(),
            "library search and {{H, T}} closure disagree on the sde ≤ 3 classes"
        );
        Self::from_entries(entries, expansion_set, bfs_levels)
    }

    fn from_entries(
        entries: HashMap<RingUnitary, TableEntry>,
        expansion_set: usize,
        bfs_levels: usize,
    ) -> LookupTable {
        let stats = TableStats {
            entries: entries.len(),
            max_circuit_length: entries.values().map(|e| e.circuit.len()).max().unwrap_or(0),
            expansion_set,
            bfs_levels,
        };
        LookupTable { entries, stats }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn stats(&self) -> TableStats {
        self.stats
    }

    pub fn keys(&self) -> impl Iterator<Item = &RingUnitary> {
        self.entries.keys()
    }

    pub fn entry(&self, key: &RingUnitary) -> Option<&TableEntry> {
        self.entries.get(key)
    }

    /// Circuit `c` and `j` with `c.evaluate() = ω^j · u`.
    pub fn lookup(&self, u: &RingUnitary) -> Option<(Circuit, u8)> {
        let (rep, j) = u.phase_canonical();
        // rep = ω^j·u and eval = ω^p·rep
        self.entries
            .get(&rep)
            .map(|e| (e.circuit.clone(), (e.phase + j) % 8))
    }

    pub fn to_json(&self) -> Value {
        let mut keys: Vec<&RingUnitary> = self.entries.keys().collect();
        keys.sort_by(|a, b| {
            json::unitary_to_value(a)
                .to_string()
                .cmp(&json::unitary_to_value(b).to_string())
        });
        let rows: Vec<Value> = keys
            .into_iter()
            .map(|k| {
                let e = &self.entries[k];
                json!({
                    "key": json::unitary_to_value(k),
                    "circuit": e.circuit.to_text(),
                    "phase": e.phase,
                })
            })
            .collect();
        json!({
            "format": TABLE_FORMAT,
            "version": TABLE_VERSION,
            "generators": "HT",
            "library": "HTtPpZXY",
            "canonicalization": CANONICALIZATION,
            "max_sde": TABLE_MAX_SDE,
            "expansion_set": self.stats.expansion_set,
            "bfs_levels": self.stats.bfs_levels,
            "entries": rows,
        })
    }

    /// Parses and fully re-checks a table file.
    pub fn from_json(v: &Value) -> Result<LookupTable> {
        let bad = |m: String| Error::TableFormat(m);
        let field = |name: &str| v.get(name).ok_or_else(|| bad(format!("missing {name:?}")));
        if field("format")?.as_str() != Some(TABLE_FORMAT) {
            return Err(bad("unrecognized format tag".into()));
        }
        if field("version")?.as_u64() != Some(TABLE_VERSION) {
            return Err(bad(format!(
                "unsupported version, expected {TABLE_VERSION}"
            )));
        }
        if field("generators")?.as_str() != Some("HT")
            || field("canonicalization")?.as_str() != Some(CANONICALIZATION)
            || field("max_sde")?.as_u64() != Some(TABLE_MAX_SDE)
        {
            return Err(bad("header does not match this build".into()));
        }
        let count = |name: &str| -> Result<usize> {
            field(name)?
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| bad(format!("{name:?} is not a count")))
        };
        let expansion_set = count("expansion_set")?;
        let bfs_levels = count("bfs_levels")?;
        let rows = field("entries")?
            .as_array()
            .ok_or_else(|| bad("\"entries\" is not an array".into()))?;

        let mut entries = HashMap::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let key = json::unitary_from_value(row.get("key").unwrap_or(&Value::Null))
                .map_err(|e| bad(format!("entry {i}: {e}")))?;
            let circuit = row
                .get("circuit")
                .and_then(Value::as_str)
                .ok_or_else(|| bad(format!("entry {i}: missing circuit")))
                .and_then(|s| Circuit::from_text(s).map_err(|e| bad(format!("entry {i}: {e}"))))?;
            let phase = row
                .get("phase")
                .and_then(Value::as_u64)
                .filter(|&p| p < 8)
                .ok_or_else(|| bad(format!("entry {i}: bad phase")))? as u8;
            if key.phase_canonical().0 != key {
                return Err(bad(format!("entry {i}: key is not phase-canonical")));
            }
            if key.sde_measure() > TABLE_MAX_SDE {
                return Err(bad(format!("entry {i}: key has sde above {TABLE_MAX_SDE}")));
            }
            if circuit.evaluate() != key.mul_omega_pow(phase as i64) {
                return Err(bad(format!(
                    "entry {i}: circuit does not evaluate to its key"
                )));
            }
            if entries.insert(key, TableEntry { circuit, phase }).is_some() {
                return Err(bad(format!("entry {i}: duplicate key")));
            }
        }
        Ok(Self::from_entries(entries, expansion_set, bfs_levels))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string(&self.to_json())
            .map_err(|e| Error::TableFormat(e.to_string()))?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<LookupTable> {
        let text = std::fs::read_to_string(path)?;
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| Error::TableFormat(format!("{}: {e}", path.display())))?;
        Self::from_json(&v)
    }

    /// Loads `path` if it exists, otherwise builds the table and writes it.
    pub fn load_or_build(path: &Path) -> Result<LookupTable> {
        if path.exists() {
            return Self::load(path);
        }
        let table = Self::build();
        table.save(path)?;
        Ok(table)
    }
}

/// Phase classes reached from the identity by {H, T} while staying at
/// `sde_measure ≤ 4`. Returns the `≤ 3` classes, the visited count and the
/// number of BFS levels.
fn ht_closure() -> (Vec<RingUnitary>, usize, usize) {
    let start = RingUnitary::identity();
    let mut seen: HashSet<RingUnitary> = HashSet::new();
    seen.insert(start.phase_canonical().0);
    let mut frontier = vec![start];
    let mut levels = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for g in [Gate::H, Gate::T] {
                let v = g.apply_left(u);
                if v.sde_measure() > EXPANSION_MAX_SDE {
                    continue;
                }
                if seen.insert(v.phase_canonical().0) {
                    next.push(v);
                }
            }
        }
        if !next.is_empty() {
            levels += 1;
        }
        frontier = next;
    }
    let visited = seen.len();
    let keys = seen
        .into_iter()
        .filter(|u| u.sde_measure() <= TABLE_MAX_SDE)
        .collect();
    (keys, visited, levels)
}

type Cost = (u32, u32, u32);

fn gate_cost(g: Gate) -> Cost {
    match g {
        Gate::H => (1, 0, 1),
        Gate::T | Gate::Tdag => (0, 1, 1),
        _ => (0, 0, 1),
    }
}

/// Dijkstra over the full library, ordered by (Hadamards, T gates, length),
/// restricted to `sde_measure ≤ 3`. Every prefix of a circuit with at most two
/// Hadamards stays in that region, so the restriction loses no optimum.
fn optimal_library_circuits() -> HashMap<RingUnitary, TableEntry> {
    let mut settled: HashMap<RingUnitary, TableEntry> = HashMap::new();
    let mut nodes: Vec<(RingUnitary, Vec<Gate>)> = vec![(RingUnitary::identity(), Vec::new())];
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(((0, 0, 0), 0usize)));

    while let Some(Reverse((cost, id))) = heap.pop() {
        let (u, gates) = nodes[id].clone();
        let (rep, j) = u.phase_canonical();
        if settled.contains_key(&rep) {
            continue;
        }
        for g in Gate::ALL {
            let v = g.apply_left(&u);
            if v.sde_measure() > TABLE_MAX_SDE || settled.contains_key(&v.phase_canonical().0) {
                continue;
            }
            let c = gate_cost(g);
            let mut vg = Vec::with_capacity(gates.len() + 1);
            vg.push(g);
            vg.extend_from_slice(&gates);
            nodes.push((v, vg));
            heap.push(Reverse((
                (cost.0 + c.0, cost.1 + c.1, cost.2 + c.2),
                nodes.len() - 1,
            )));
        }
        // evaluate(gates) = u = ω^{-j}·rep
        let circuit = normalize_ht(&Circuit::from_gates(gates), false);
        settled.insert(
            rep,
            TableEntry {
                circuit,
                phase: ((8 - j) % 8),
            },
        );
    }
    settled
}

/// Independent enumeration of the `sde_measure ≤ 3` phase classes: every unit
/// column `(x, y)/(√2)^m` with `|x|² + |y|² = 2^m`, `m ≤ 2`, completed with
/// each of the eight determinants.
pub fn enumerate_sde_le3() -> HashSet<RingUnitary> {
    let mut out = HashSet::new();
    for m in 0..=2u32 {
        let bound = 1i64 << m;
        // Both real embeddings of |x|² are at most 2^m, so P(x) ≤ 2^m.
        let r = (0..=bound)
            .take_while(|r| r * r <= bound)
            .last()
            .unwrap_or(0);
        let mut xs = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    for d in -r..=r {
                        if a * a + b * b + c * c + d * d <= bound {
                            xs.push(ZOmega::new(a, b, c, d));
                        }
                    }
                }
            }
        }
        let target = RealZSqrt2::new(bound, 0);
        for x in &xs {
            let nx = x.norm_sq();
            for y in &xs {
                if &nx + &y.norm_sq() != target {
                    continue;
                }
                let s = RingState::new(
                    RingScalar::new(x.clone(), m as i64),
                    RingScalar::new(y.clone(), m as i64),
                );
                for k in 0..8 {
                    let u = RingUnitary::complete_from_column(&s, k);
                    if u.sde_measure() <= TABLE_MAX_SDE {
                        out.insert(u.phase_canonical().0);
                    }
                }
            }
        }
    }
    out
}
