//! Constructing profiles from margin targets and ordinal margin graphs.

mod debord;
mod exact;
mod synth;
mod transition;

pub use debord::{debord_realize, pair_gadget, realize_omg, MarginTarget};
pub use exact::OrderTable;
pub use synth::{synthesize_transition, synthesize_transition_with, SynthesisOptions};
pub use transition::{
    verify_transition, TransitionCheck, TransitionFailure, TransitionInstance, TransitionSolution,
};
