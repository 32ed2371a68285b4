//! Instance -> dense graph tensors for the encoder.

use super::{CopInstance, ProblemKind};

pub const MASK_FORBIDDEN: f64 = f64::NEG_INFINITY;

/// Dense node features, edge features, and an attention structure mask.
///
/// `node_features` is N x d_in row-major; `edge_features` is N x N x d_e
/// (query-major: entry `[n][m]` describes edge m -> n for query n);
/// `structure_mask[n][m]` is 0 when key m may attend to query n and -inf
/// otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphTensors {
    pub kind: ProblemKind,
    pub n: usize,
    pub d_in: usize,
    pub d_e: usize,
    pub node_features: Vec<f64>,
    pub edge_features: Vec<f64>,
    pub structure_mask: Vec<f64>,
}

impl GraphTensors {
    pub fn node_row(&self, i: usize) -> &[f64] {
        &self.node_features[i * self.d_in..(i + 1) * self.d_in]
    }

    pub fn edge(&self, query: usize, key: usize) -> &[f64] {
        let base = (query * self.n + key) * self.d_e;
        &self.edge_features[base..base + self.d_e]
    }

    pub fn mask(&self, query: usize, key: usize) -> f64 {
        self.structure_mask[query * self.n + key]
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GraphOptions {
    /// When set, MVC/MIS attention is restricted to graph edges (plus the
    /// diagonal); default is dense attention.
    pub restrict_mask_to_edges: bool,
}

pub fn to_graph(instance: &CopInstance) -> GraphTensors {
    to_graph_with(instance, GraphOptions::default())
}

pub fn to_graph_with(instance: &CopInstance, opts: GraphOptions) -> GraphTensors {
    let n = instance.n;
    let (d_in, d_e) = feature_dims(instance.kind);
    let mut node_features = Vec::with_capacity(n * d_in);
    match instance.kind {
        ProblemKind::TSP => {
            for c in &instance.coords {
                node_features.extend_from_slice(c);
            }
        }
        ProblemKind::CVRP | ProblemKind::VRPB => {
            let depot = instance.depot_index.unwrap_or(0);
            for (i, c) in instance.coords.iter().enumerate() {
                node_features.extend_from_slice(c);
                node_features.push(instance.demands[i]);
                node_features.push(if i == depot { 1.0 } else { 0.0 });
            }
        }
        ProblemKind::KP => {
            for i in 0..n {
                node_features.push(instance.weights[i]);
                node_features.push(instance.values[i]);
            }
        }
        ProblemKind::MVC | ProblemKind::MIS => {
            for i in 0..n {
                node_features.push(instance.degree(i) as f64 / n as f64);
            }
        }
        ProblemKind::SMTWTP => {
            for i in 0..n {
                node_features.push(instance.job_weights[i]);
                node_features.push(instance.due_times[i]);
                node_features.push(instance.proc_times[i]);
            }
        }
    }

    let mut edge_features = vec![0.0; n * n * d_e];
    if d_e == 1 {
        for q in 0..n {
            for k in 0..n {
                edge_features[q * n + k] = match instance.kind {
                    ProblemKind::TSP | ProblemKind::CVRP | ProblemKind::VRPB => {
                        instance.distance(q, k)
                    }
                    ProblemKind::MVC | ProblemKind::MIS => instance.adjacency[q][k] as f64,
                    _ => unreachable!(),
                };
            }
        }
    }

    let restrict = opts.restrict_mask_to_edges
        && matches!(instance.kind, ProblemKind::MVC | ProblemKind::MIS);
    let mut structure_mask = vec![0.0; n * n];
    if restrict {
        for q in 0..n {
            for k in 0..n {
                if q != k && instance.adjacency[q][k] == 0 {
                    structure_mask[q * n + k] = MASK_FORBIDDEN;
                }
            }
        }
    }

    GraphTensors {
        kind: instance.kind,
        n,
        d_in,
        d_e,
        node_features,
        edge_features,
        structure_mask,
    }
}

/// `(d_in, d_e)` for each kind.
pub fn feature_dims(kind: ProblemKind) -> (usize, usize) {
    match kind {
        ProblemKind::TSP => (2, 1),
        ProblemKind::CVRP | ProblemKind::VRPB => (4, 1),
        ProblemKind::KP => (2, 0),
        ProblemKind::MVC | ProblemKind::MIS => (1, 1),
        ProblemKind::SMTWTP => (3, 0),
    }
}
