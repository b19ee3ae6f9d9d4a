use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Axiom, AxiomVerdict, Witness};
use crate::error::{Error, Result};
use crate::methods::{evaluate, MethodId, WinnerSet};
use crate::omg::OrdinalMarginGraph;
use crate::profile::{letters, linear_orders, weak_orders, Ballot, Profile};
use crate::rational::Rational;
use crate::realize::realize_omg;

/// Which ballots a single added voter may cast.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BallotDomain {
    Weak,
    Linear,
}

impl BallotDomain {
    fn ballots(self, n: usize) -> Vec<Ballot> {
        match self {
            BallotDomain::Weak => weak_orders(n),
            BallotDomain::Linear => linear_orders(n)
                .iter()
                .map(|o| Ballot::linear(o).expect("permutation"))
                .collect(),
        }
    }
}

/// Whether some single added ballot leaves exactly one winner.
pub fn check_single_voter_resolvability(
    method: MethodId,
    p: &Profile,
    domain: BallotDomain,
) -> Result<AxiomVerdict> {
    let n = p.num_alternatives();
    if n > 5 {
        return Err(Error::UnsupportedSize(n));
    }
    let winners = evaluate(method, p)?;
    if winners.is_singleton() {
        return Ok(AxiomVerdict::holds(
            Axiom::SingleVoterResolvability,
            true,
            None,
        ));
    }
    let ballots = domain.ballots(n);
    for b in &ballots {
        if evaluate(method, &p.with_ballot(b)?)?.is_singleton() {
            return Ok(AxiomVerdict::holds(
                Axiom::SingleVoterResolvability,
                false,
                Some(format!(
                    "resolved by adding {}",
                    b.display(p.alternatives())
                )),
            ));
        }
    }
    Ok(AxiomVerdict::fails(
        Axiom::SingleVoterResolvability,
        Witness::Unresolvable {
            method,
            profile: p.to_string(),
            winners,
            domain,
            ballots_tried: ballots.len(),
        },
    ))
}

/// Monte Carlo estimate of the fraction of impartial-culture profiles with several winners.
#[derive(Clone, Debug, Serialize)]
pub struct TieEstimate {
    pub method: MethodId,
    pub model: &'static str,
    pub alternatives: usize,
    pub voters: u64,
    pub samples: u64,
    pub seed: u64,
    pub ties: u64,
    #[serde(serialize_with = "crate::rational::serialize_ratio")]
    pub frequency: Rational,
    /// 95% Wilson score interval.
    pub interval: (f64, f64),
}

pub fn estimate_tie_frequency(
    method: MethodId,
    alternatives: usize,
    voters: u64,
    samples: u64,
    seed: u64,
) -> Result<TieEstimate> {
    if samples == 0 {
        return Err(Error::EmptySample);
    }
    if alternatives < 2 {
        return Err(Error::UnsupportedSize(alternatives));
    }
    if voters == 0 {
        return Err(Error::InvalidProfile("no voters".into()));
    }
    let alts = letters(alternatives);
    let ties = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<u64> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let mut order: Vec<usize> = (0..alternatives).collect();
            let mut entries = Vec::with_capacity(voters as usize);
            for _ in 0..voters {
                order.shuffle(&mut rng);
                entries.push((Ballot::linear(&order)?, 1));
            }
            let p = Profile::new(alts.clone(), entries)?;
            Ok(u64::from(evaluate(method, &p)?.len() > 1))
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(TieEstimate {
        method,
        model: "impartial culture",
        alternatives,
        voters,
        samples,
        seed,
        ties,
        frequency: Rational::new(ties, samples),
        interval: wilson(ties, samples),
    })
}

fn wilson(k: u64, n: u64) -> (f64, f64) {
    let z = 1.96f64;
    let (k, n) = (k as f64, n as f64);
    let p = k / n;
    let denom = 1.0 + z * z / n;
    let center = (p + z * z / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Realizes `g` under `trials` distinct margin assignments and checks that the method's
/// winners agree on all of them.
pub fn check_omg_invariance(
    method: MethodId,
    g: &OrdinalMarginGraph,
    trials: usize,
    seed: u64,
) -> Result<AxiomVerdict> {
    if !method.is_margin_sufficient() {
        return Err(Error::ProfileRequired {
            method: method.token(),
        });
    }
    Ok(match omg_realization_witness(method, g, trials, seed)? {
        Some(w) => AxiomVerdict::fails(Axiom::OrdinalMarginInvariance, w),
        None => AxiomVerdict::holds(
            Axiom::OrdinalMarginInvariance,
            false,
            Some(format!("{trials} realizations agree (seed {seed})")),
        ),
    })
}

/// Like [`check_omg_invariance`] but for any method, returning two realizations of `g`
/// with different winners if the trials produce them.
pub fn omg_realization_witness(
    method: MethodId,
    g: &OrdinalMarginGraph,
    trials: usize,
    seed: u64,
) -> Result<Option<Witness>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let realizations = realizations(g, trials, &mut rng)?;
    let mut first: Option<(Profile, WinnerSet)> = None;
    for p in realizations {
        let w = evaluate(method, &p)?;
        match &first {
            None => first = Some((p, w)),
            Some((p0, w0)) if *w0 != w => {
                return Ok(Some(Witness::Realizations {
                    method,
                    graph: g.to_json(),
                    first: p0.to_string(),
                    second: p.to_string(),
                    first_winners: w0.clone(),
                    second_winners: w,
                }))
            }
            Some(_) => {}
        }
    }
    Ok(None)
}

/// Distinct positive increasing assignments (even unless `g` is a tournament, where each
/// trial picks a parity), each realized and padded with a random number of reversal pairs.
fn realizations(
    g: &OrdinalMarginGraph,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Profile>> {
    let k = g.max_rank() as usize;
    let n = g.len();
    let tournament = g.edges().len() == n * (n - 1) / 2;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(trials);
    let mut attempts = 0;
    while out.len() < trials {
        attempts += 1;
        let parity = if tournament { rng.gen_range(0..2) } else { 0 };
        let mut values = Vec::with_capacity(k);
        let mut v = 2 * rng.gen_range(0..3) + if parity == 1 { 1 } else { 2 };
        for _ in 0..k {
            values.push(v);
            v += 2 * rng.gen_range(1..=3);
        }
        if k > 0 && !seen.insert(values.clone()) && attempts < 100 * trials {
            continue;
        }
        let mut p = realize_omg(g, Some(&values))?;
        let mut order: Vec<usize> = (0..n).collect();
        for _ in 0..rng.gen_range(0..=2) {
            order.shuffle(rng);
            let rev: Vec<usize> = order.iter().rev().copied().collect();
            p = p.add_ballots(&[(Ballot::linear(&order)?, 1), (Ballot::linear(&rev)?, 1)])?;
        }
        out.push(p);
    }
    Ok(out)
}
