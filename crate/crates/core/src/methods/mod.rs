//! Voting methods over profiles, margin matrices and ordinal margin graphs.
//!
//! Every margin-based method here is ordinal: it only compares positive margins with one
//! another, so evaluating on an [`OrdinalMarginGraph`] goes through its rank matrix.

mod beat_path;
mod borda;
mod defensible;
mod minimax;
mod ranked_pairs;
mod split_cycle;
mod tournament;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::margin::MarginMatrix;
use crate::omg::OrdinalMarginGraph;
use crate::profile::{Alternative, Profile};

pub use beat_path::{beat_path, strongest_paths};
pub use borda::{black, borda, borda_scores};
pub use defensible::defensible_set;
pub use minimax::minimax;
pub use ranked_pairs::{ranked_pairs, ranked_pairs_with_cap, DEFAULT_LINEARIZATION_CAP};
pub use split_cycle::{split_cycle, split_cycle_defeats};
pub use tournament::{copeland, smith_set, uncovered_set};

/// The nonempty set of winning alternatives, sorted by label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WinnerSet {
    winners: Vec<Alternative>,
}

impl WinnerSet {
    /// `indices` must be nonempty and refer to `alts`.
    pub fn from_indices(alts: &[Alternative], indices: &[usize]) -> WinnerSet {
        assert!(!indices.is_empty(), "winner sets are nonempty");
        let mut winners: Vec<Alternative> = indices.iter().map(|&i| alts[i].clone()).collect();
        winners.sort();
        winners.dedup();
        WinnerSet { winners }
    }

    pub fn members(&self) -> &[Alternative] {
        &self.winners
    }

    pub fn contains(&self, label: &str) -> bool {
        self.winners.iter().any(|w| w.as_str() == label)
    }

    pub fn len(&self) -> usize {
        self.winners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.winners.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.winners.len() == 1
    }

    pub fn is_subset(&self, other: &WinnerSet) -> bool {
        self.winners.iter().all(|w| other.winners.contains(w))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.winners.iter().map(|w| w.as_str()).collect()
    }
}

impl fmt::Display for WinnerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

impl Serialize for WinnerSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.winners.serialize(s)
    }
}

/// The weakest input a method can be evaluated on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    OrdinalMarginGraph,
    MarginMatrix,
    Profile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodId {
    DefensibleSet,
    Minimax,
    SplitCycle,
    Copeland,
    SmithSet,
    UncoveredSet,
    DefensibleCapSmith,
    Borda,
    Black,
    BeatPath,
    RankedPairs,
}

impl MethodId {
    pub const ALL: [MethodId; 11] = [
        MethodId::DefensibleSet,
        MethodId::Minimax,
        MethodId::SplitCycle,
        MethodId::Copeland,
        MethodId::SmithSet,
        MethodId::UncoveredSet,
        MethodId::DefensibleCapSmith,
        MethodId::Borda,
        MethodId::Black,
        MethodId::BeatPath,
        MethodId::RankedPairs,
    ];

    /// The methods of the irresoluteness table, in table order.
    pub const TABLE1: [MethodId; 7] = [
        MethodId::SmithSet,
        MethodId::UncoveredSet,
        MethodId::Copeland,
        MethodId::DefensibleSet,
        MethodId::DefensibleCapSmith,
        MethodId::SplitCycle,
        MethodId::Minimax,
    ];

    pub fn token(self) -> &'static str {
        match self {
            MethodId::DefensibleSet => "defensible",
            MethodId::Minimax => "minimax",
            MethodId::SplitCycle => "split-cycle",
            MethodId::Copeland => "copeland",
            MethodId::SmithSet => "smith",
            MethodId::UncoveredSet => "uncovered",
            MethodId::DefensibleCapSmith => "defensible-smith",
            MethodId::Borda => "borda",
            MethodId::Black => "black",
            MethodId::BeatPath => "beat-path",
            MethodId::RankedPairs => "ranked-pairs",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MethodId::DefensibleSet => "Defensible set",
            MethodId::Minimax => "Minimax",
            MethodId::SplitCycle => "Split Cycle",
            MethodId::Copeland => "Copeland",
            MethodId::SmithSet => "Smith set",
            MethodId::UncoveredSet => "Uncovered set",
            MethodId::DefensibleCapSmith => "Defensible set \u{2229} Smith set",
            MethodId::Borda => "Borda",
            MethodId::Black => "Black's",
            MethodId::BeatPath => "Beat Path",
            MethodId::RankedPairs => "Ranked Pairs",
        }
    }

    pub fn requirement(self) -> Requirement {
        match self {
            MethodId::Borda | MethodId::Black => Requirement::Profile,
            _ => Requirement::OrdinalMarginGraph,
        }
    }

    /// Winners depend only on the ordinal margin graph.
    pub fn is_margin_sufficient(self) -> bool {
        self.requirement() != Requirement::Profile
    }

    pub fn valid_tokens() -> String {
        MethodId::ALL
            .iter()
            .map(|m| m.token())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Parses a comma-separated token list.
    pub fn parse_list(s: &str) -> Result<Vec<MethodId>> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse())
            .collect()
    }
}

impl FromStr for MethodId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MethodId::ALL
            .iter()
            .copied()
            .find(|m| m.token() == s)
            .ok_or_else(|| Error::UnknownMethod {
                token: s.to_string(),
                valid: MethodId::valid_tokens(),
            })
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl Serialize for MethodId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

/// Any input a method may be evaluated on.
#[derive(Clone, Copy, Debug)]
pub enum Input<'a> {
    Profile(&'a Profile),
    Margins(&'a MarginMatrix),
    Graph(&'a OrdinalMarginGraph),
}

impl<'a> From<&'a Profile> for Input<'a> {
    fn from(p: &'a Profile) -> Self {
        Input::Profile(p)
    }
}

impl<'a> From<&'a MarginMatrix> for Input<'a> {
    fn from(m: &'a MarginMatrix) -> Self {
        Input::Margins(m)
    }
}

impl<'a> From<&'a OrdinalMarginGraph> for Input<'a> {
    fn from(g: &'a OrdinalMarginGraph) -> Self {
        Input::Graph(g)
    }
}

/// Evaluates a margin-sufficient method on a margin matrix, returning winner indices.
pub fn evaluate_margins(method: MethodId, m: &MarginMatrix) -> Result<Vec<usize>> {
    Ok(match method {
        MethodId::DefensibleSet => defensible_set(m),
        MethodId::Minimax => minimax(m),
        MethodId::SplitCycle => split_cycle(m),
        MethodId::Copeland => copeland(m),
        MethodId::SmithSet => smith_set(m),
        MethodId::UncoveredSet => uncovered_set(m),
        MethodId::DefensibleCapSmith => {
            let smith = smith_set(m);
            let out: Vec<usize> = defensible_set(m)
                .into_iter()
                .filter(|x| smith.contains(x))
                .collect();
            if out.is_empty() {
                return Err(Error::EmptyIntersection(method.token()));
            }
            out
        }
        MethodId::BeatPath => beat_path(m),
        MethodId::RankedPairs => ranked_pairs(m)?,
        MethodId::Borda | MethodId::Black => {
            return Err(Error::ProfileRequired {
                method: method.token(),
            })
        }
    })
}

/// Evaluates a method on a profile, returning winner indices.
pub fn evaluate_profile(method: MethodId, p: &Profile) -> Result<Vec<usize>> {
    match method {
        MethodId::Borda => Ok(borda(p)),
        MethodId::Black => Ok(black(p)),
        _ => evaluate_margins(method, &p.margin_matrix()),
    }
}

/// Evaluates `method` on any sufficient input.
pub fn evaluate<'a>(method: MethodId, input: impl Into<Input<'a>>) -> Result<WinnerSet> {
    match input.into() {
        Input::Profile(p) => {
            evaluate_profile(method, p).map(|w| WinnerSet::from_indices(p.alternatives(), &w))
        }
        Input::Margins(m) => {
            evaluate_margins(method, m).map(|w| WinnerSet::from_indices(m.alternatives(), &w))
        }
        Input::Graph(g) => {
            let m = g.rank_matrix();
            evaluate_margins(method, &m).map(|w| WinnerSet::from_indices(g.vertices(), &w))
        }
    }
}

/// Indices attaining the extreme `key` value; `better(a, b)` means `a` beats `b`.
pub(crate) fn arg_best<K: PartialOrd + Copy>(
    n: usize,
    key: impl Fn(usize) -> K,
    better: impl Fn(K, K) -> bool,
) -> Vec<usize> {
    let keys: Vec<K> = (0..n).map(key).collect();
    let mut best = keys[0];
    for &k in &keys[1..] {
        if better(k, best) {
            best = k;
        }
    }
    (0..n).filter(|&i| keys[i] == best).collect()
}
