//! Exhaustive check that no assignment of single winners to the five proof graphs satisfies
//! the constraints implied by positive involvement, the Condorcet criteria, resolvability and
//! ordinal margin invariance.
//!
//! Only the defensible set and Condorcet losers are consulted; the transitions come from
//! verified fixtures or are re-synthesized.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::{FixtureSet, TRANSITIONS};
use crate::methods::defensible_set;
use crate::omg::OrdinalMarginGraph;
use crate::realize::{
    synthesize_transition, verify_transition, TransitionInstance, TransitionSolution,
};

const VOTER_BOUND: u64 = 60;

#[derive(Clone, Copy, Debug, Default)]
pub struct TheoremOptions {
    /// Ignore the shipped transition profiles and synthesize fresh ones.
    pub resynthesize: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub name: String,
    pub defensible: Vec<String>,
    pub condorcet_loser: Option<String>,
    /// Defensible alternatives other than the Condorcet loser.
    pub candidates: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransitionSummary {
    pub name: String,
    pub source: String,
    pub destination: String,
    pub favorite: String,
    pub origin: &'static str,
    pub total_voters: u64,
}

/// Consequences of fixing the winner of the first graph, derived by propagation.
#[derive(Clone, Debug, Serialize)]
pub struct BranchTrace {
    pub assumption: String,
    pub steps: Vec<String>,
    pub contradiction: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub graphs: Vec<GraphSummary>,
    pub transitions: Vec<TransitionSummary>,
    /// Assignments satisfying the per-graph constraints.
    pub assignments_examined: usize,
    /// Assignments also satisfying every transition constraint.
    pub surviving: Vec<Vec<(String, String)>>,
    pub branches: Vec<BranchTrace>,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.surviving.is_empty() && self.branches.iter().all(|b| b.contradiction.is_some())
    }
}

pub fn verify_theorem1(opts: TheoremOptions) -> Result<TheoremReport> {
    verify_theorem1_with(&FixtureSet::builtin(), opts)
}

struct Edge {
    from: usize,
    to: usize,
    favorite: usize,
    name: String,
}

pub fn verify_theorem1_with(fx: &FixtureSet, opts: TheoremOptions) -> Result<TheoremReport> {
    let names: Vec<String> = fx.graphs.iter().map(|(n, _)| n.clone()).collect();
    let graphs: Vec<&OrdinalMarginGraph> = fx.graphs.iter().map(|(_, g)| g).collect();
    let graph_index = |name: &str| {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Fixture(format!("no graph named `{name}`")))
    };

    let mut transitions = Vec::new();
    let mut edges = Vec::new();
    for t in TRANSITIONS {
        let inst = TransitionInstance::new(
            fx.graph(t.source)?.clone(),
            fx.graph(t.destination)?.clone(),
            t.favorite,
            VOTER_BOUND,
        )?;
        let (sol, origin) = if opts.resynthesize {
            let sol = synthesize_transition(&inst)?.ok_or_else(|| {
                Error::Fixture(format!(
                    "{}: no transition within {VOTER_BOUND} voters",
                    t.name
                ))
            })?;
            (sol, "synthesized")
        } else {
            let sol = TransitionSolution {
                base: fx.profile(t.base)?.clone(),
                added: fx.added(t.added)?.clone(),
            };
            (sol, "fixture")
        };
        let check = verify_transition(&sol, &inst);
        if !check.ok() {
            return Err(Error::Fixture(format!("{}: {check}", t.name)));
        }
        transitions.push(TransitionSummary {
            name: t.name.to_string(),
            source: t.source.to_string(),
            destination: t.destination.to_string(),
            favorite: t.favorite.to_string(),
            origin,
            total_voters: sol.total_voters(),
        });
        edges.push(Edge {
            from: graph_index(t.source)?,
            to: graph_index(t.destination)?,
            favorite: inst.favorite_index(),
            name: t.name.to_string(),
        });
    }

    let mut summaries = Vec::new();
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for (name, g) in names.iter().zip(&graphs) {
        let m = g.rank_matrix();
        let defensible = defensible_set(&m);
        let loser = m.condorcet_loser();
        let allowed: Vec<usize> = defensible
            .iter()
            .copied()
            .filter(|&x| Some(x) != loser)
            .collect();
        let label = |i: usize| g.vertices()[i].as_str().to_string();
        summaries.push(GraphSummary {
            name: name.clone(),
            defensible: defensible.iter().map(|&i| label(i)).collect(),
            condorcet_loser: loser.map(label),
            candidates: allowed.iter().map(|&i| label(i)).collect(),
        });
        candidates.push(allowed);
    }

    let mut assignments_examined = 0;
    let mut surviving = Vec::new();
    let mut current = vec![0usize; graphs.len()];
    each_assignment(&candidates, 0, &mut current, &mut |a| {
        assignments_examined += 1;
        let consistent = edges
            .iter()
            .all(|e| a[e.from] != e.favorite || a[e.to] == e.favorite);
        if consistent {
            surviving.push(
                a.iter()
                    .enumerate()
                    .map(|(g, &w)| (names[g].clone(), graphs[g].vertices()[w].to_string()))
                    .collect(),
            );
        }
    });

    let branches = candidates[0]
        .iter()
        .map(|&w| branch(&names, &graphs, &candidates, &edges, w))
        .collect();

    Ok(TheoremReport {
        graphs: summaries,
        transitions,
        assignments_examined,
        surviving,
        branches,
    })
}

fn each_assignment(
    candidates: &[Vec<usize>],
    g: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if g == candidates.len() {
        visit(current);
        return;
    }
    for &w in &candidates[g] {
        current[g] = w;
        each_assignment(candidates, g + 1, current, visit);
    }
}

/// Fixes the first graph's winner and propagates: singleton candidate sets are forced, and a
/// forced winner `x` of a transition's source forces `x` at its destination.
fn branch(
    names: &[String],
    graphs: &[&OrdinalMarginGraph],
    candidates: &[Vec<usize>],
    edges: &[Edge],
    w: usize,
) -> BranchTrace {
    let label = |g: usize, x: usize| graphs[g].vertices()[x].as_str().to_string();
    let set = |g: usize, xs: &[usize]| {
        let labels: Vec<String> = xs.iter().map(|&x| label(g, x)).collect();
        format!("F({})={{{}}}", names[g].to_uppercase(), labels.join(","))
    };
    let mut forced: Vec<Option<(usize, String)>> = vec![None; graphs.len()];
    forced[0] = Some((w, "assumption".into()));
    let mut steps = Vec::new();
    for (g, c) in candidates.iter().enumerate().skip(1) {
        if c.len() == 1 {
            forced[g] = Some((c[0], "only candidate".into()));
            steps.push(format!(
                "{} since the defensible set minus the Condorcet loser is {{{}}}",
                set(g, c),
                label(g, c[0])
            ));
        }
    }
    loop {
        let mut progressed = false;
        for e in edges {
            let Some((x, _)) = forced[e.from].clone() else {
                continue;
            };
            if x != e.favorite {
                continue;
            }
            match forced[e.to].clone() {
                None => {
                    forced[e.to] = Some((x, e.name.clone()));
                    steps.push(format!("{} forces {}", e.name, set(e.to, &[x])));
                    progressed = true;
                }
                Some((y, why)) if y != x => {
                    return BranchTrace {
                        assumption: set(0, &[w]),
                        steps,
                        contradiction: Some(format!(
                            "{} forces {} but {} ({})",
                            e.name,
                            set(e.to, &[x]),
                            set(e.to, &[y]),
                            why
                        )),
                    };
                }
                Some(_) => {}
            }
        }
        if !progressed {
            return BranchTrace {
                assumption: set(0, &[w]),
                steps,
                contradiction: None,
            };
        }
    }
}
