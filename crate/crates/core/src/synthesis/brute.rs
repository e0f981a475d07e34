//! Exhaustive searches used as oracles for the optimality claims.

use std::collections::{HashMap, HashSet, VecDeque};

use super::gate::Gate;
use crate::unitary::RingUnitary;

/// Least total weight of a library circuit implementing each target up to
/// global phase, where every gate weighs 0 or 1. Explores weights up to
/// `max_cost`; `None` for targets not reached within it.
pub fn min_weight(
    targets: &[RingUnitary],
    weight: impl Fn(Gate) -> u32,
    max_cost: u32,
) -> Vec<Option<u32>> {
    let keys: Vec<RingUnitary> = targets.iter().map(|t| t.phase_canonical().0).collect();
    let mut remaining: HashSet<&RingUnitary> = keys.iter().collect();
    let mut dist: HashMap<RingUnitary, u32> = HashMap::new();
    let mut queue = VecDeque::new();
    let start = RingUnitary::identity();
    dist.insert(start.clone(), 0);
    queue.push_back((start, 0u32));

    // 0-1 BFS: nodes leave the queue in non-decreasing distance.
    while let Some((u, d)) = queue.pop_front() {
        if dist[&u] < d {
            continue;
        }
        remaining.remove(&u);
        if remaining.is_empty() {
            break;
        }
        for g in Gate::ALL {
            let w = weight(g);
            let nd = d + w;
            if nd > max_cost {
                continue;
            }
            // Phase classes are closed under left multiplication.
            let v = g.apply_left(&u).phase_canonical().0;
            if dist.get(&v).is_some_and(|&old| old <= nd) {
                continue;
            }
            dist.insert(v.clone(), nd);
            if w == 0 {
                queue.push_front((v, nd));
            } else {
                queue.push_back((v, nd));
            }
        }
    }
    keys.iter().map(|k| dist.get(k).copied()).collect()
}

pub fn hadamard_weight(g: Gate) -> u32 {
    u32::from(g == Gate::H)
}

pub fn t_weight(g: Gate) -> u32 {
    u32::from(matches!(g, Gate::T | Gate::Tdag))
}

/// Exact `(min H count, min T count)` over all library circuits implementing
/// `u` up to global phase. `depth` caps the H and T counts explored; `None`
/// when either minimum lies beyond it.
pub fn brute_force_min_counts(u: &RingUnitary, depth: u32) -> Option<(u32, u32)> {
    let targets = std::slice::from_ref(u);
    let h = min_weight(targets, hadamard_weight, depth)[0]?;
    let t = min_weight(targets, t_weight, depth)[0]?;
    Some((h, t))
}

/// Phase classes reachable from the identity with at most `depth` gates from
/// `generators`, as representatives.
pub fn reachable_classes(generators: &[Gate], depth: usize) -> Vec<RingUnitary> {
    let start = RingUnitary::identity();
    let mut seen = HashSet::new();
    seen.insert(start.clone());
    let mut order = vec![start.clone()];
    let mut frontier = vec![start];
    for _ in 0..depth {
        let mut next = Vec::new();
        for u in &frontier {
            for &g in generators {
                let v = g.apply_left(u).phase_canonical().0;
                if seen.insert(v.clone()) {
                    order.push(v.clone());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    order
}
