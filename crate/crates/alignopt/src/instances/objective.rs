//! Objective evaluation per kind. Pure functions; no feasibility checking
//! beyond index validation (see `check_feasibility` for constraints).

use super::{CopInstance, InstanceError, ProblemKind, Solution};

fn check_indices(n: usize, ids: impl Iterator<Item = usize>) -> Result<(), InstanceError> {
    for i in ids {
        if i >= n {
            return Err(InstanceError::IndexOutOfRange(i, n));
        }
    }
    Ok(())
}

/// Objective value of `solution` on `instance`.
///
/// Tour/route lengths are exact Euclidean reals with cycle closure; KP is
/// total selected value; MVC/MIS is subset cardinality; SMTWTP is total
/// weighted tardiness.
pub fn evaluate_objective(
    instance: &CopInstance,
    solution: &Solution,
) -> Result<f64, InstanceError> {
    if !solution.matches_kind(instance.kind) {
        return Err(InstanceError::KindMismatch(instance.kind));
    }
    let n = instance.n;
    match (instance.kind, solution) {
        (ProblemKind::TSP, Solution::Permutation(tour)) => {
            check_indices(n, tour.iter().copied())?;
            if tour.len() < 2 {
                return Ok(0.0);
            }
            let mut len = 0.0;
            for i in 0..tour.len() {
                len += instance.distance(tour[i], tour[(i + 1) % tour.len()]);
            }
            Ok(len)
        }
        (ProblemKind::CVRP | ProblemKind::VRPB, Solution::Routes(routes)) => {
            let depot = instance.depot_index.unwrap_or(0);
            check_indices(n, routes.iter().flatten().copied())?;
            let mut len = 0.0;
            for route in routes {
                if route.is_empty() {
                    continue;
                }
                let mut prev = depot;
                for &c in route {
                    len += instance.distance(prev, c);
                    prev = c;
                }
                len += instance.distance(prev, depot);
            }
            Ok(len)
        }
        (ProblemKind::KP, Solution::Subset(items)) => {
            check_indices(n, items.iter().copied())?;
            Ok(items.iter().map(|&i| instance.values[i]).sum())
        }
        (ProblemKind::MVC | ProblemKind::MIS, Solution::Subset(nodes)) => {
            check_indices(n, nodes.iter().copied())?;
            Ok(nodes.len() as f64)
        }
        (ProblemKind::SMTWTP, Solution::Permutation(order)) => {
            check_indices(n, order.iter().copied())?;
            let mut t = 0.0;
            let mut tardiness = 0.0;
            for &j in order {
                t += instance.proc_times[j];
                tardiness += instance.job_weights[j] * (t - instance.due_times[j]).max(0.0);
            }
            Ok(tardiness)
        }
        _ => Err(InstanceError::KindMismatch(instance.kind)),
    }
}

#[cfg(test)]
mod tests {
    use super::super::generate_instance;
    use super::*;

    fn square_tsp() -> CopInstance {
        let mut inst = CopInstance::empty(ProblemKind::TSP, 4, 0);
        inst.coords = vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        inst
    }

    #[test]
    fn unit_square_perimeter_is_four() {
        let inst = square_tsp();
        let len = evaluate_objective(&inst, &Solution::Permutation(vec![0, 1, 2, 3])).unwrap();
        assert!((len - 4.0).abs() < 1e-12);
    }

    #[test]
    fn tour_rotation_and_reversal_invariant() {
        let inst = generate_instance(ProblemKind::TSP, 9, 4).unwrap();
        let base: Vec<usize> = (0..9).collect();
        let l0 = evaluate_objective(&inst, &Solution::Permutation(base.clone())).unwrap();
        let mut rot = base.clone();
        rot.rotate_left(3);
        let l1 = evaluate_objective(&inst, &Solution::Permutation(rot)).unwrap();
        let mut rev = base;
        rev.reverse();
        let l2 = evaluate_objective(&inst, &Solution::Permutation(rev)).unwrap();
        assert!((l0 - l1).abs() < 1e-12);
        assert!((l0 - l2).abs() < 1e-12);
    }

    #[test]
    fn kp_sums_selected_values() {
        let mut inst = CopInstance::empty(ProblemKind::KP, 3, 0);
        inst.weights = vec![0.5, 0.4, 0.3];
        inst.values = vec![0.6, 0.6, 0.3];
        inst.capacity = Some(0.8);
        let v = evaluate_objective(&inst, &Solution::Subset(vec![1, 2])).unwrap();
        assert!((v - 0.9).abs() < 1e-12);
    }

    #[test]
    fn smtwtp_job_before_due_has_zero_tardiness() {
        let mut inst = CopInstance::empty(ProblemKind::SMTWTP, 1, 0);
        inst.job_weights = vec![1.0];
        inst.due_times = vec![0.7];
        inst.proc_times = vec![0.5];
        let t = evaluate_objective(&inst, &Solution::Permutation(vec![0])).unwrap();
        assert_eq!(t, 0.0);
    }

    #[test]
    fn smtwtp_accumulates_weighted_tardiness() {
        let mut inst = CopInstance::empty(ProblemKind::SMTWTP, 2, 0);
        inst.job_weights = vec![2.0, 1.0];
        inst.due_times = vec![0.1, 0.3];
        inst.proc_times = vec![0.4, 0.2];
        // order (0,1): completion 0.4, 0.6 -> 2*(0.3) + 1*(0.3) = 0.9
        let t = evaluate_objective(&inst, &Solution::Permutation(vec![0, 1])).unwrap();
        assert!((t - 0.9).abs() < 1e-12);
    }

    #[test]
    fn index_out_of_range_is_an_error() {
        let inst = square_tsp();
        let err = evaluate_objective(&inst, &Solution::Permutation(vec![0, 9]));
        assert!(matches!(err, Err(InstanceError::IndexOutOfRange(9, 4))));
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let inst = square_tsp();
        let err = evaluate_objective(&inst, &Solution::Subset(vec![0]));
        assert!(matches!(err, Err(InstanceError::KindMismatch(_))));
    }

    #[test]
    fn cvrp_routes_close_at_depot() {
        let mut inst = CopInstance::empty(ProblemKind::CVRP, 3, 0);
        inst.coords = vec![[0.0, 0.0], [1.0, 0.0], [0.0, 2.0]];
        inst.depot_index = Some(0);
        inst.demands = vec![0.0, 0.5, 0.5];
        inst.capacity = Some(1.0);
        let len =
            evaluate_objective(&inst, &Solution::Routes(vec![vec![1], vec![2]])).unwrap();
        assert!((len - (2.0 + 4.0)).abs() < 1e-12);
    }
}
