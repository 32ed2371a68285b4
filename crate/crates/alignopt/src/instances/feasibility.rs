//! Constraint checking. Violations are data, not errors: an empty list
//! means feasible.

use super::{CopInstance, ProblemKind, Solution};

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    IndexOutOfRange { index: usize },
    UnvisitedNode { node: usize },
    DuplicateVisit { node: usize },
    /// CVRP: route demand sum exceeds 1. VRPB: running load left [0, 1]
    /// at some prefix of the route.
    CapacityExceeded { route: usize, load: f64 },
    WeightOverCapacity { weight: f64, capacity: f64 },
    UncoveredEdge { a: usize, b: usize },
    AdjacentPairSelected { a: usize, b: usize },
    KindMismatch,
}

fn visit_cover(n: usize, visited: &[usize], skip: Option<usize>, out: &mut Vec<Violation>) {
    let mut count = vec![0usize; n];
    for &v in visited {
        if v >= n {
            out.push(Violation::IndexOutOfRange { index: v });
            return;
        }
        count[v] += 1;
    }
    for (node, &c) in count.iter().enumerate() {
        if Some(node) == skip {
            continue;
        }
        if c == 0 {
            out.push(Violation::UnvisitedNode { node });
        } else if c > 1 {
            out.push(Violation::DuplicateVisit { node });
        }
    }
}

/// Lists every constraint violation of `solution` on `instance`.
pub fn check_feasibility(instance: &CopInstance, solution: &Solution) -> Vec<Violation> {
    let mut out = Vec::new();
    if !solution.matches_kind(instance.kind) {
        out.push(Violation::KindMismatch);
        return out;
    }
    let n = instance.n;
    match (instance.kind, solution) {
        (ProblemKind::TSP | ProblemKind::SMTWTP, Solution::Permutation(order)) => {
            visit_cover(n, order, None, &mut out);
        }
        (ProblemKind::CVRP, Solution::Routes(routes)) => {
            let depot = instance.depot_index.unwrap_or(0);
            let flat: Vec<usize> = routes.iter().flatten().copied().collect();
            visit_cover(n, &flat, Some(depot), &mut out);
            if flat.contains(&depot) {
                out.push(Violation::DuplicateVisit { node: depot });
            }
            for (r, route) in routes.iter().enumerate() {
                let load: f64 = route
                    .iter()
                    .filter(|&&c| c < n)
                    .map(|&c| instance.demands[c])
                    .sum();
                if load > 1.0 + 1e-9 {
                    out.push(Violation::CapacityExceeded { route: r, load });
                }
            }
        }
        (ProblemKind::VRPB, Solution::Routes(routes)) => {
            let depot = instance.depot_index.unwrap_or(0);
            let flat: Vec<usize> = routes.iter().flatten().copied().collect();
            visit_cover(n, &flat, Some(depot), &mut out);
            if flat.contains(&depot) {
                out.push(Violation::DuplicateVisit { node: depot });
            }
            for (r, route) in routes.iter().enumerate() {
                if route.iter().any(|&c| c >= n) {
                    continue;
                }
                // The vehicle leaves the depot carrying every delivery on the
                // route; deliveries shed load, backhauls add it. The running
                // load must stay within [0, 1] at every prefix.
                let mut load: f64 = route
                    .iter()
                    .map(|&c| instance.demands[c].max(0.0))
                    .sum();
                let mut worst = load;
                let mut best = load;
                for &c in route {
                    load -= instance.demands[c];
                    worst = worst.max(load);
                    best = best.min(load);
                }
                if worst > 1.0 + 1e-9 || best < -1e-9 {
                    out.push(Violation::CapacityExceeded { route: r, load: worst });
                }
            }
        }
        (ProblemKind::KP, Solution::Subset(items)) => {
            let mut seen = vec![false; n];
            let mut weight = 0.0;
            for &i in items {
                if i >= n {
                    out.push(Violation::IndexOutOfRange { index: i });
                    return out;
                }
                if seen[i] {
                    out.push(Violation::DuplicateVisit { node: i });
                }
                seen[i] = true;
                weight += instance.weights[i];
            }
            let cap = instance.capacity.unwrap_or(f64::INFINITY);
            if weight > cap + 1e-9 {
                out.push(Violation::WeightOverCapacity {
                    weight,
                    capacity: cap,
                });
            }
        }
        (ProblemKind::MVC, Solution::Subset(nodes)) => {
            let mut in_set = vec![false; n];
            for &v in nodes {
                if v >= n {
                    out.push(Violation::IndexOutOfRange { index: v });
                    return out;
                }
                if in_set[v] {
                    out.push(Violation::DuplicateVisit { node: v });
                }
                in_set[v] = true;
            }
            for a in 0..n {
                for b in (a + 1)..n {
                    if instance.adjacency[a][b] != 0 && !in_set[a] && !in_set[b] {
                        out.push(Violation::UncoveredEdge { a, b });
                    }
                }
            }
        }
        (ProblemKind::MIS, Solution::Subset(nodes)) => {
            let mut in_set = vec![false; n];
            for &v in nodes {
                if v >= n {
                    out.push(Violation::IndexOutOfRange { index: v });
                    return out;
                }
                if in_set[v] {
                    out.push(Violation::DuplicateVisit { node: v });
                }
                in_set[v] = true;
            }
            for a in 0..n {
                for b in (a + 1)..n {
                    if instance.adjacency[a][b] != 0 && in_set[a] && in_set[b] {
                        out.push(Violation::AdjacentPairSelected { a, b });
                    }
                }
            }
        }
        _ => out.push(Violation::KindMismatch),
    }
    out
}
