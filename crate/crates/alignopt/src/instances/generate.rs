//! Random instance generators.
//!
//! Everything is a pure function of `(kind, n, seed)`: the RNG stream is
//! derived from those three values alone, so regeneration is bit-identical
//! across runs and platforms.

use super::{CopInstance, InstanceError, ProblemKind};
use crate::rng::{fnv1a64, mix, Stream};

/// Raw vehicle capacity for n total nodes (depot included). Demands are
/// integers in 1..=9 divided by this, so the stored capacity is 1.
pub fn cvrp_raw_capacity(n: usize) -> f64 {
    if n <= 20 {
        30.0
    } else if n <= 50 {
        40.0
    } else {
        50.0
    }
}

/// Number of edge draws for MVC instances (3 per node). Draws are taken
/// with replacement, so the realized distinct-edge count is at most this.
pub fn mvc_edge_draws(n: usize) -> usize {
    3 * n
}

/// Number of edge draws for MIS instances (2 per node).
pub fn mis_edge_draws(n: usize) -> usize {
    2 * n
}

fn instance_stream(kind: ProblemKind, n: usize, seed: i64) -> Stream {
    Stream::seeded(mix(&[fnv1a64(kind.name().as_bytes()), n as u64, seed as u64]))
}

fn draw_coords(rng: &mut Stream, n: usize) -> Vec<[f64; 2]> {
    (0..n).map(|_| [rng.uniform(), rng.uniform()]).collect()
}

fn draw_graph(rng: &mut Stream, n: usize, draws: usize) -> Vec<Vec<u8>> {
    let mut adj = vec![vec![0u8; n]; n];
    if n < 2 {
        return adj;
    }
    for _ in 0..draws {
        let a = rng.below(n as u64) as usize;
        let mut b = rng.below(n as u64) as usize;
        while b == a {
            b = rng.below(n as u64) as usize;
        }
        adj[a][b] = 1;
        adj[b][a] = 1;
    }
    adj
}

/// Generates one instance. Deterministic in `(kind, n, seed)`.
pub fn generate_instance(
    kind: ProblemKind,
    n: usize,
    seed: i64,
) -> Result<CopInstance, InstanceError> {
    let min = kind.min_nodes();
    if n < min {
        return Err(InstanceError::TooFewNodes { kind, min, n });
    }
    let mut rng = instance_stream(kind, n, seed);
    let mut inst = CopInstance::empty(kind, n, seed);
    match kind {
        ProblemKind::TSP => {
            inst.coords = draw_coords(&mut rng, n);
        }
        ProblemKind::CVRP | ProblemKind::VRPB => {
            inst.coords = draw_coords(&mut rng, n);
            inst.depot_index = Some(0);
            inst.capacity = Some(1.0);
            let raw_cap = cvrp_raw_capacity(n);
            let mut demands = vec![0.0; n];
            for d in demands.iter_mut().skip(1) {
                *d = rng.range_u64(1, 9) as f64 / raw_cap;
            }
            if kind == ProblemKind::VRPB {
                // ~20% of customers are backhauls (negative demand).
                for d in demands.iter_mut().skip(1) {
                    if rng.uniform() < 0.2 {
                        *d = -*d;
                    }
                }
            }
            inst.demands = demands;
        }
        ProblemKind::KP => {
            inst.capacity = Some(n as f64 / 4.0);
            inst.weights = (0..n).map(|_| rng.uniform()).collect();
            inst.values = (0..n).map(|_| rng.uniform()).collect();
        }
        ProblemKind::MVC => {
            inst.adjacency = draw_graph(&mut rng, n, mvc_edge_draws(n));
        }
        ProblemKind::MIS => {
            inst.adjacency = draw_graph(&mut rng, n, mis_edge_draws(n));
        }
        ProblemKind::SMTWTP => {
            let mut w = Vec::with_capacity(n);
            let mut d = Vec::with_capacity(n);
            let mut p = Vec::with_capacity(n);
            for _ in 0..n {
                w.push(rng.uniform());
                d.push(rng.uniform());
                p.push(rng.uniform());
            }
            inst.job_weights = w;
            inst.due_times = d;
            inst.proc_times = p;
        }
    }
    Ok(inst)
}
