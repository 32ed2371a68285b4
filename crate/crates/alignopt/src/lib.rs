//! Text-graph aligned constructive solver for combinatorial optimization.
//!
//! The pipeline: generate problem instances ([`instances`]), render them as
//! natural-language documents ([`tai`]), embed the text through a pluggable
//! provider ([`embed`]), align a mixed-attention graph encoder with the text
//! embeddings via contrastive and matching losses ([`pretrain`]), fine-tune a
//! constructive policy with REINFORCE and gradient-conflict erasure
//! ([`finetune`]), and evaluate against exact and heuristic references
//! ([`oracles`]). Everything numeric runs on a small tape-based autodiff
//! engine ([`tensor`]).

pub mod embed;
pub mod finetune;
pub mod instances;
pub mod model;
pub mod oracles;
pub mod pretrain;
pub mod rng;
pub mod tai;
pub mod tensor;
