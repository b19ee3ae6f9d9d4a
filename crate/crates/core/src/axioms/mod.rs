//! Axiom checkers, violation searches, and the mechanical impossibility check.
//!
//! Checkers decide single instances. Searches report either a witness or the budget and seed
//! under which none was found; absence of a witness is never reported as the axiom holding.

mod condorcet;
mod involvement;
mod resolvability;
mod theorem;

use serde::Serialize;

use crate::error::Result;
use crate::methods::{evaluate, MethodId, WinnerSet};
use crate::omg::OrdinalMarginGraph;
use crate::profile::{Ballot, Profile};

pub use condorcet::{check_condorcet_criteria, lemma1_witness, Lemma1Variant, Lemma1Witness};
pub use involvement::{
    check_positive_involvement, search_pi_violation, SearchConfig, SearchReport,
};
pub use resolvability::{
    check_omg_invariance, check_single_voter_resolvability, estimate_tie_frequency,
    omg_realization_witness, BallotDomain, TieEstimate,
};
pub use theorem::{
    verify_theorem1, verify_theorem1_with, BranchTrace, GraphSummary, TheoremOptions,
    TheoremReport, TransitionSummary,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    PositiveInvolvement,
    CondorcetWinner,
    WeakCondorcetWinner,
    CondorcetLoser,
    SingleVoterResolvability,
    OrdinalMarginInvariance,
}

/// The outcome of checking one axiom on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds: bool,
    /// The axiom's hypothesis does not apply to this instance.
    pub vacuous: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl AxiomVerdict {
    fn holds(axiom: Axiom, vacuous: bool, note: Option<String>) -> AxiomVerdict {
        AxiomVerdict {
            axiom,
            holds: true,
            vacuous,
            witness: None,
            note,
        }
    }

    fn fails(axiom: Axiom, witness: Witness) -> AxiomVerdict {
        AxiomVerdict {
            axiom,
            holds: false,
            vacuous: false,
            witness: Some(witness),
            note: None,
        }
    }
}

/// A counterexample, stored in text form so it can be re-checked from scratch.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `favorite` wins in `profile` but loses after adding `ballot`.
    Involvement {
        method: MethodId,
        profile: String,
        ballot: String,
        favorite: String,
        before: WinnerSet,
        after: WinnerSet,
    },
    /// `alternative` is the (weak) Condorcet winner or the Condorcet loser, and `winners`
    /// disagrees with the criterion.
    Condorcet {
        method: MethodId,
        profile: String,
        alternative: Vec<String>,
        winners: WinnerSet,
    },
    /// No single added ballot from `domain` leaves a unique winner.
    Unresolvable {
        method: MethodId,
        profile: String,
        winners: WinnerSet,
        domain: BallotDomain,
        ballots_tried: usize,
    },
    /// Two realizations of the same ordinal margin graph with different winners.
    Realizations {
        method: MethodId,
        graph: String,
        first: String,
        second: String,
        first_winners: WinnerSet,
        second_winners: WinnerSet,
    },
}

impl Witness {
    /// Re-derives the counterexample from its text form; true if it still refutes the axiom.
    pub fn recheck(&self) -> Result<bool> {
        match self {
            Witness::Involvement {
                method,
                profile,
                ballot,
                favorite,
                ..
            } => {
                let p = Profile::parse(profile)?;
                let b = Ballot::parse(ballot, p.alternatives())?;
                let before = evaluate(*method, &p)?;
                let after = evaluate(*method, &p.with_ballot(&b)?)?;
                Ok(b.unique_top() == Some(p.index_of(favorite)?)
                    && before.contains(favorite)
                    && !after.contains(favorite))
            }
            Witness::Condorcet {
                method, profile, ..
            } => {
                let p = Profile::parse(profile)?;
                let verdicts = check_condorcet_criteria(*method, &p)?;
                Ok(verdicts.iter().any(|v| !v.holds))
            }
            Witness::Unresolvable {
                method,
                profile,
                domain,
                ..
            } => {
                let p = Profile::parse(profile)?;
                Ok(!check_single_voter_resolvability(*method, &p, *domain)?.holds)
            }
            Witness::Realizations {
                method,
                graph,
                first,
                second,
                ..
            } => {
                let g = OrdinalMarginGraph::from_json(graph)?;
                let (p, q) = (Profile::parse(first)?, Profile::parse(second)?);
                Ok(p.ordinal_margin_graph() == g
                    && q.ordinal_margin_graph() == g
                    && evaluate(*method, &p)? != evaluate(*method, &q)?)
            }
        }
    }
}
