use serde::Serialize;

use super::{Axiom, AxiomVerdict, Witness};
use crate::error::{Error, Result};
use crate::methods::{defensible_set, evaluate, MethodId, WinnerSet};
use crate::profile::{Alternative, Ballot, Profile};

/// Verdicts for the Condorcet winner, weak Condorcet winner and Condorcet loser criteria,
/// in that order.
pub fn check_condorcet_criteria(method: MethodId, p: &Profile) -> Result<[AxiomVerdict; 3]> {
    let winners = evaluate(method, p)?;
    let m = p.margin_matrix();
    let alts = p.alternatives();
    let label = |i: usize| alts[i].as_str().to_string();
    let witness = |alternative: Vec<String>| Witness::Condorcet {
        method,
        profile: p.to_string(),
        alternative,
        winners: winners.clone(),
    };

    let strict = match m.condorcet_winner() {
        None => AxiomVerdict::holds(Axiom::CondorcetWinner, true, None),
        Some(w) if winners.labels() == [alts[w].as_str()] => {
            AxiomVerdict::holds(Axiom::CondorcetWinner, false, None)
        }
        Some(w) => AxiomVerdict::fails(Axiom::CondorcetWinner, witness(vec![label(w)])),
    };

    let weak_set = m.weak_condorcet_winners();
    let weak = if weak_set.is_empty() {
        AxiomVerdict::holds(Axiom::WeakCondorcetWinner, true, None)
    } else if winners.is_subset(&WinnerSet::from_indices(alts, &weak_set)) {
        AxiomVerdict::holds(Axiom::WeakCondorcetWinner, false, None)
    } else {
        AxiomVerdict::fails(
            Axiom::WeakCondorcetWinner,
            witness(weak_set.iter().map(|&i| label(i)).collect()),
        )
    };

    let loser = match m.condorcet_loser() {
        None => AxiomVerdict::holds(Axiom::CondorcetLoser, true, None),
        Some(l) if !winners.contains(alts[l].as_str()) => {
            AxiomVerdict::holds(Axiom::CondorcetLoser, false, None)
        }
        Some(l) => AxiomVerdict::fails(Axiom::CondorcetLoser, witness(vec![label(l)])),
    };
    Ok([strict, weak, loser])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma1Variant {
    /// Linear profiles: `k + 1` added voters make the defeater a Condorcet winner.
    Strict,
    /// Any profile: `k` added voters make the defeater a weak Condorcet winner that still
    /// beats `x`.
    Weak,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma1Witness {
    pub variant: Lemma1Variant,
    pub excluded: Alternative,
    pub defeater: Alternative,
    /// Largest margin of any other alternative over the defeater; negative if it already wins.
    pub k: i64,
    pub added: u64,
    pub ballot: String,
    pub profile: Profile,
}

/// Adds voters ranking `x` first and its undefended defeater `y` second (remaining
/// alternatives ascending), so that `y` becomes a (weak) Condorcet winner while `x` only
/// gained first-place support.
pub fn lemma1_witness(p: &Profile, x: &str, variant: Lemma1Variant) -> Result<Lemma1Witness> {
    let xi = p.index_of(x)?;
    let m = p.margin_matrix();
    let n = m.len();
    if defensible_set(&m).contains(&xi) {
        return Err(Error::NotApplicable(format!(
            "{x} is in the defensible set"
        )));
    }
    if variant == Lemma1Variant::Strict && !p.is_linear() {
        return Err(Error::NotApplicable(
            "the strict construction needs a linear profile".into(),
        ));
    }
    let y = (0..n)
        .find(|&y| (0..n).all(|z| m.get(z, y) < m.get(y, xi)))
        .expect("an alternative outside the defensible set has an undefended defeater");
    let k = (0..n)
        .filter(|&z| z != y)
        .map(|z| m.get(z, y))
        .max()
        .expect("at least two alternatives");
    // in a linear profile every margin shares the voter count's parity, so m(y, x) >= k + 2
    let added = match variant {
        Lemma1Variant::Strict => k + 1,
        Lemma1Variant::Weak => k,
    }
    .max(0) as u64;
    let mut order = vec![xi, y];
    order.extend((0..n).filter(|&z| z != xi && z != y));
    let ballot = Ballot::linear(&order)?;
    let out = if added == 0 {
        p.clone()
    } else {
        p.add_ballots(&[(ballot.clone(), added)])?
    };
    let after = out.margin_matrix();
    match variant {
        Lemma1Variant::Strict => assert_eq!(after.condorcet_winner(), Some(y)),
        Lemma1Variant::Weak => {
            assert!(after.weak_condorcet_winners().contains(&y));
            assert!(after.get(y, xi) > 0);
        }
    }
    Ok(Lemma1Witness {
        variant,
        excluded: p.alternatives()[xi].clone(),
        defeater: p.alternatives()[y].clone(),
        k,
        added,
        ballot: ballot.display(p.alternatives()).to_string(),
        profile: out,
    })
}
