use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::omg::OrdinalMarginGraph;
use crate::profile::{Alternative, Profile};

/// `source =>_favorite destination`: some profile realizing `source` becomes one realizing
/// `destination` after adding voters who all rank `favorite` uniquely first.
#[derive(Clone, Debug)]
pub struct TransitionInstance {
    pub source: OrdinalMarginGraph,
    pub destination: OrdinalMarginGraph,
    pub favorite: Alternative,
    pub voter_bound: u64,
}

impl TransitionInstance {
    pub fn new(
        source: OrdinalMarginGraph,
        destination: OrdinalMarginGraph,
        favorite: &str,
        voter_bound: u64,
    ) -> Result<Self> {
        if source.vertices() != destination.vertices() {
            return Err(Error::AlternativeMismatch);
        }
        source.index_of(favorite)?;
        if voter_bound == 0 {
            return Err(Error::InvalidProfile("voter bound must be positive".into()));
        }
        Ok(TransitionInstance {
            source,
            destination,
            favorite: Alternative::new(favorite)?,
            voter_bound,
        })
    }

    pub fn favorite_index(&self) -> usize {
        self.source
            .index_of(self.favorite.as_str())
            .expect("checked at construction")
    }
}

/// A base profile and the voters added to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionSolution {
    pub base: Profile,
    pub added: Profile,
}

impl TransitionSolution {
    pub fn total_voters(&self) -> u64 {
        self.base.num_voters() + self.added.num_voters()
    }

    pub fn result(&self) -> Result<Profile> {
        self.base.add_voters(&self.added)
    }
}

/// A failed transition invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TransitionFailure {
    AlternativeMismatch,
    SourceGraphMismatch,
    NoVotersAdded,
    FavoriteNotUniquelyFirst { ballot: String },
    DestinationGraphMismatch,
}

impl fmt::Display for TransitionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitionFailure::AlternativeMismatch => f.write_str("alternative set mismatch"),
            TransitionFailure::SourceGraphMismatch => f.write_str("source graph mismatch"),
            TransitionFailure::NoVotersAdded => f.write_str("no voters added"),
            TransitionFailure::FavoriteNotUniquelyFirst { ballot } => {
                write!(
                    f,
                    "added ballot {ballot} does not rank the favorite uniquely first"
                )
            }
            TransitionFailure::DestinationGraphMismatch => {
                f.write_str("destination graph mismatch")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionCheck {
    pub failures: Vec<TransitionFailure>,
}

impl TransitionCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for TransitionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        let msgs: Vec<String> = self.failures.iter().map(|x| x.to_string()).collect();
        f.write_str(&msgs.join("; "))
    }
}

/// Checks every transition invariant and reports each that fails.
pub fn verify_transition(sol: &TransitionSolution, inst: &TransitionInstance) -> TransitionCheck {
    let mut failures = Vec::new();
    let alts = sol.base.alternatives();
    if alts != inst.source.vertices() || sol.added.alternatives() != alts {
        return TransitionCheck {
            failures: vec![TransitionFailure::AlternativeMismatch],
        };
    }
    if sol.base.ordinal_margin_graph() != inst.source {
        failures.push(TransitionFailure::SourceGraphMismatch);
    }
    if sol.added.num_voters() == 0 {
        failures.push(TransitionFailure::NoVotersAdded);
    }
    let fav = inst.favorite_index();
    for (b, _) in sol.added.entries() {
        if b.unique_top() != Some(fav) {
            failures.push(TransitionFailure::FavoriteNotUniquelyFirst {
                ballot: b.display(alts).to_string(),
            });
        }
    }
    match sol.result() {
        Ok(p) if p.ordinal_margin_graph() == inst.destination => {}
        _ => failures.push(TransitionFailure::DestinationGraphMismatch),
    }
    TransitionCheck { failures }
}
