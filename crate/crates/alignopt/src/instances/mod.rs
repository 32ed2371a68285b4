//! Problem data model: instance generation, objectives, feasibility,
//! graph-tensor conversion, TSPLIB parsing, and JSON-lines persistence.

mod feasibility;
mod generate;
mod graph;
mod jsonl;
mod objective;
mod tsplib;

pub use feasibility::{check_feasibility, Violation};
pub use generate::{generate_instance, cvrp_raw_capacity, mis_edge_draws, mvc_edge_draws};
pub use graph::{to_graph, to_graph_with, GraphOptions, GraphTensors};
pub use jsonl::{read_instances_jsonl, write_instances_jsonl};
pub use objective::evaluate_objective;
pub use tsplib::parse_tsplib;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The seven supported problem kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProblemKind {
    TSP,
    CVRP,
    VRPB,
    KP,
    MVC,
    MIS,
    SMTWTP,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 7] = [
        ProblemKind::TSP,
        ProblemKind::CVRP,
        ProblemKind::VRPB,
        ProblemKind::KP,
        ProblemKind::MVC,
        ProblemKind::MIS,
        ProblemKind::SMTWTP,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ProblemKind::TSP => "TSP",
            ProblemKind::CVRP => "CVRP",
            ProblemKind::VRPB => "VRPB",
            ProblemKind::KP => "KP",
            ProblemKind::MVC => "MVC",
            ProblemKind::MIS => "MIS",
            ProblemKind::SMTWTP => "SMTWTP",
        }
    }

    pub fn parse(s: &str) -> Option<ProblemKind> {
        Self::ALL.iter().copied().find(|k| k.name() == s)
    }

    /// Kinds where the instance lives on 2-D coordinates with a tour/route
    /// objective.
    pub fn is_routing(&self) -> bool {
        matches!(self, ProblemKind::TSP | ProblemKind::CVRP | ProblemKind::VRPB)
    }

    /// Kinds with a depot at node 0.
    pub fn has_depot(&self) -> bool {
        matches!(self, ProblemKind::CVRP | ProblemKind::VRPB)
    }

    /// Kinds whose objective is maximized; all others minimize.
    pub fn maximizes(&self) -> bool {
        matches!(self, ProblemKind::KP | ProblemKind::MIS)
    }

    /// Smallest legal node count for the kind.
    pub fn min_nodes(&self) -> usize {
        if self.has_depot() {
            2
        } else {
            1
        }
    }
}

impl std::fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One concrete problem instance. Kind-irrelevant fields stay empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CopInstance {
    pub kind: ProblemKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coords: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depot_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub demands: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub capacity: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub adjacency: Vec<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub job_weights: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub due_times: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub proc_times: Vec<f64>,
    pub seed: i64,
}

impl CopInstance {
    pub fn empty(kind: ProblemKind, n: usize, seed: i64) -> Self {
        CopInstance {
            kind,
            n,
            coords: Vec::new(),
            depot_index: None,
            demands: Vec::new(),
            capacity: None,
            weights: Vec::new(),
            values: Vec::new(),
            adjacency: Vec::new(),
            job_weights: Vec::new(),
            due_times: Vec::new(),
            proc_times: Vec::new(),
            seed,
        }
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        let pa = self.coords[a];
        let pb = self.coords[b];
        ((pa[0] - pb[0]).powi(2) + (pa[1] - pb[1]).powi(2)).sqrt()
    }

    /// Number of distinct undirected edges in the adjacency matrix.
    pub fn edge_count(&self) -> usize {
        let mut m = 0;
        for i in 0..self.adjacency.len() {
            for j in (i + 1)..self.adjacency.len() {
                if self.adjacency[i][j] != 0 {
                    m += 1;
                }
            }
        }
        m
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].iter().filter(|&&b| b != 0).count()
    }
}

/// A candidate solution, kind-matched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solution {
    /// Node permutation (TSP tour, SMTWTP job order).
    Permutation(Vec<usize>),
    /// Routes of customer indices; depot bookends are implicit.
    Routes(Vec<Vec<usize>>),
    /// Selected node/item subset (KP, MVC, MIS).
    Subset(Vec<usize>),
}

impl Solution {
    pub fn matches_kind(&self, kind: ProblemKind) -> bool {
        match (self, kind) {
            (Solution::Permutation(_), ProblemKind::TSP | ProblemKind::SMTWTP) => true,
            (Solution::Routes(_), ProblemKind::CVRP | ProblemKind::VRPB) => true,
            (Solution::Subset(_), ProblemKind::KP | ProblemKind::MVC | ProblemKind::MIS) => true,
            _ => false,
        }
    }
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("{kind} requires at least {min} nodes, got {n}")]
    TooFewNodes {
        kind: ProblemKind,
        min: usize,
        n: usize,
    },
    #[error("solution shape does not match instance kind {0}")]
    KindMismatch(ProblemKind),
    #[error("node index {0} out of range for n={1}")]
    IndexOutOfRange(usize, usize),
    #[error("unsupported edge weight type: {0}")]
    UnsupportedWeightType(String),
    #[error("unsupported TSPLIB problem type: {0}")]
    UnsupportedProblemType(String),
    #[error("missing NODE_COORD_SECTION")]
    MissingNodeCoordSection,
    #[error("missing DIMENSION")]
    MissingDimension,
    #[error("DIMENSION says {declared} nodes but {parsed} coordinates were parsed")]
    DimensionMismatch { declared: usize, parsed: usize },
    #[error("malformed TSPLIB line: {0}")]
    MalformedLine(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
