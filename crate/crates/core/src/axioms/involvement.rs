use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Axiom, AxiomVerdict, Witness};
use crate::error::{Error, Result};
use crate::methods::{evaluate, evaluate_profile, MethodId};
use crate::profile::{letters, Ballot, Profile};

/// Checks positive involvement for one profile and one added ballot.
pub fn check_positive_involvement(
    method: MethodId,
    p: &Profile,
    ballot: &Ballot,
) -> Result<AxiomVerdict> {
    let x = ballot.unique_top().ok_or_else(|| {
        Error::NotApplicable("the added ballot must rank one alternative uniquely first".into())
    })?;
    let favorite = p.alternatives()[x].as_str();
    let before = evaluate(method, p)?;
    if !before.contains(favorite) {
        return Ok(AxiomVerdict::holds(
            Axiom::PositiveInvolvement,
            true,
            Some(format!(
                "{favorite} does not win before the ballot is added"
            )),
        ));
    }
    let after = evaluate(method, &p.with_ballot(ballot)?)?;
    if after.contains(favorite) {
        return Ok(AxiomVerdict::holds(Axiom::PositiveInvolvement, false, None));
    }
    Ok(AxiomVerdict::fails(
        Axiom::PositiveInvolvement,
        Witness::Involvement {
            method,
            profile: p.to_string(),
            ballot: ballot.display(p.alternatives()).to_string(),
            favorite: favorite.to_string(),
            before,
            after,
        },
    ))
}

/// Sampler and budget for [`search_pi_violation`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SearchConfig {
    pub seed: u64,
    /// Number of sampled (profile, ballot) instances.
    pub budget: u64,
    pub min_voters: u64,
    pub max_voters: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            budget: 100_000,
            min_voters: 1,
            max_voters: 15,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub method: MethodId,
    pub alternatives: usize,
    pub config: SearchConfig,
    /// Instances sampled before the first violation, or the whole budget.
    pub examined: u64,
    pub witness: Option<Witness>,
}

impl SearchReport {
    pub fn summary(&self) -> String {
        match &self.witness {
            Some(Witness::Involvement { profile, .. }) => format!(
                "violated: witness with {} voters after {} samples (seed {})",
                Profile::parse(profile).map(|p| p.num_voters()).unwrap_or(0),
                self.examined,
                self.config.seed
            ),
            _ => format!(
                "no violation found (budget {}, seed {})",
                self.config.budget, self.config.seed
            ),
        }
    }
}

/// Samples impartial-culture profiles with a uniform voter count, picks a random winner `x`
/// and a random linear ballot ranking `x` first, and reports the first instance (by sample
/// index) where `x` stops winning. The witness is then shrunk by deleting voters while the
/// violation persists. Results depend only on the configuration, not on the thread count.
pub fn search_pi_violation(
    method: MethodId,
    alternatives: usize,
    cfg: SearchConfig,
) -> Result<SearchReport> {
    if !(2..=8).contains(&alternatives) {
        return Err(Error::UnsupportedSize(alternatives));
    }
    if cfg.min_voters == 0 || cfg.min_voters > cfg.max_voters {
        return Err(Error::InvalidProfile(
            "voter range must be nonempty and positive".into(),
        ));
    }
    let alts = letters(alternatives);
    let found = (0..cfg.budget).into_par_iter().find_map_first(|i| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(i);
        match sample(method, &alts, &cfg, &mut rng) {
            Ok(Some(hit)) => Some(Ok((i, hit))),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    });
    let (examined, witness) = match found.transpose()? {
        None => (cfg.budget, None),
        Some((i, (p, b, x))) => {
            let p = shrink(method, p, &b, x)?;
            let verdict = check_positive_involvement(method, &p, &b)?;
            debug_assert!(!verdict.holds);
            (i + 1, verdict.witness)
        }
    };
    Ok(SearchReport {
        method,
        alternatives,
        config: cfg,
        examined,
        witness,
    })
}

type Hit = (Profile, Ballot, usize);

fn sample(
    method: MethodId,
    alts: &[crate::profile::Alternative],
    cfg: &SearchConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Hit>> {
    let n = alts.len();
    let voters = rng.gen_range(cfg.min_voters..=cfg.max_voters);
    let mut order: Vec<usize> = (0..n).collect();
    let mut entries = Vec::with_capacity(voters as usize);
    for _ in 0..voters {
        order.shuffle(rng);
        entries.push((Ballot::linear(&order)?, 1));
    }
    let p = Profile::new(alts.to_vec(), entries)?;
    let winners = evaluate_profile(method, &p)?;
    let x = winners[rng.gen_range(0..winners.len())];
    let mut rest: Vec<usize> = (0..n).filter(|&y| y != x).collect();
    rest.shuffle(rng);
    let mut ballot = vec![x];
    ballot.extend(rest);
    let b = Ballot::linear(&ballot)?;
    Ok(violates(method, &p, &b, x)?.then_some((p, b, x)))
}

fn violates(method: MethodId, p: &Profile, b: &Ballot, x: usize) -> Result<bool> {
    Ok(evaluate_profile(method, p)?.contains(&x)
        && !evaluate_profile(method, &p.with_ballot(b)?)?.contains(&x))
}

/// Greedily removes single voters while the violation survives.
fn shrink(method: MethodId, mut p: Profile, b: &Ballot, x: usize) -> Result<Profile> {
    'outer: loop {
        for e in 0..p.entries().len() {
            if let Some(q) = p.without_one(e) {
                if violates(method, &q, b, x)? {
                    p = q;
                    continue 'outer;
                }
            }
        }
        return Ok(p);
    }
}
