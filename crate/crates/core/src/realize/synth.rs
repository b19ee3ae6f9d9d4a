//! Search for voter-addition transitions between ordinal margin graphs.
//!
//! For a base size `v` and an added size `a`, the unknowns are the base margins `u` (one per
//! pair, parity of `v`) and the margins `d` that the `a` favorite-first ballots induce among
//! the remaining alternatives (parity of `a`); pairs involving the favorite always move by
//! exactly `a`. Both graphs' sign and rank constraints are linear in these unknowns, as are
//! the 3-cycle bounds that any realizable margin vector obeys. A small bounds-propagating
//! branch-and-bound enumerates the integer points in a fixed order, and each candidate is
//! confirmed by an exact decomposition into ballots. Every `(v, a)` within the voter bound is
//! tried, so an empty result certifies that no transition exists within the bound.

use rayon::prelude::*;

use super::exact::OrderTable;
use super::transition::{TransitionInstance, TransitionSolution};
use crate::enumerate::pairs;
use crate::error::Result;
use crate::omg::OrdinalMarginGraph;
use crate::profile::{Ballot, Profile};

#[derive(Clone, Copy, Debug, Default)]
pub struct SynthesisOptions {
    /// Search by total voter count so the first solution found has the fewest voters.
    pub minimize: bool,
}

/// A solution, or `None` when no transition exists within `inst.voter_bound` total voters.
pub fn synthesize_transition(inst: &TransitionInstance) -> Result<Option<TransitionSolution>> {
    synthesize_transition_with(inst, SynthesisOptions::default())
}

pub fn synthesize_transition_with(
    inst: &TransitionInstance,
    opts: SynthesisOptions,
) -> Result<Option<TransitionSolution>> {
    let model = Model::new(inst);
    let bound = inst.voter_bound;
    // (base voters, added voters) in search order
    let mut schedule = Vec::new();
    if opts.minimize {
        for total in 2..=bound {
            for a in 1..total {
                schedule.push((total - a, a));
            }
        }
    } else {
        for a in 1..bound {
            for v in 1..=bound - a {
                schedule.push((v, a));
            }
        }
    }
    let found = schedule
        .par_iter()
        .find_map_first(|&(v, a)| model.solve(v, a));
    Ok(found.map(|(base, added)| model.solution(inst, &base, &added)))
}

#[derive(Clone, Debug)]
struct GraphSpec {
    sign: Vec<i64>,
    rank: Vec<u32>,
}

impl GraphSpec {
    fn new(g: &OrdinalMarginGraph, ps: &[(usize, usize)]) -> GraphSpec {
        let mut sign = Vec::with_capacity(ps.len());
        let mut rank = Vec::with_capacity(ps.len());
        for &(i, j) in ps {
            match (g.rank(i, j), g.rank(j, i)) {
                (Some(r), _) => {
                    sign.push(1);
                    rank.push(r);
                }
                (_, Some(r)) => {
                    sign.push(-1);
                    rank.push(r);
                }
                _ => {
                    sign.push(0);
                    rank.push(0);
                }
            }
        }
        GraphSpec { sign, rank }
    }
}

/// `sum(coef * var) + constant`.
#[derive(Clone, Debug)]
struct Expr {
    terms: Vec<(usize, i64)>,
    constant: i64,
}

impl Expr {
    fn scaled(&self, k: i64) -> Expr {
        Expr {
            terms: self.terms.iter().map(|&(v, c)| (v, c * k)).collect(),
            constant: self.constant * k,
        }
    }

    fn minus(&self, other: &Expr) -> Expr {
        let mut terms = self.terms.clone();
        for &(v, c) in &other.terms {
            match terms.iter_mut().find(|(w, _)| *w == v) {
                Some(t) => t.1 -= c,
                None => terms.push((v, -c)),
            }
        }
        terms.retain(|&(_, c)| c != 0);
        Expr {
            terms,
            constant: self.constant - other.constant,
        }
    }
}

/// `sum(coef * var) <= rhs`.
#[derive(Clone, Debug)]
struct Constraint {
    terms: Vec<(usize, i64)>,
    rhs: i64,
}

fn le(e: &Expr, bound: i64) -> Constraint {
    Constraint {
        terms: e.terms.clone(),
        rhs: bound - e.constant,
    }
}

#[derive(Clone, Copy, Debug)]
struct Domain {
    lo: i64,
    hi: i64,
    parity: i64,
}

impl Domain {
    fn new(lo: i64, hi: i64, parity: i64) -> Domain {
        let mut d = Domain { lo, hi, parity };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if (self.lo - self.parity).rem_euclid(2) != 0 {
            self.lo += 1;
        }
        if (self.hi - self.parity).rem_euclid(2) != 0 {
            self.hi -= 1;
        }
    }

    fn empty(&self) -> bool {
        self.lo > self.hi
    }

    fn size(&self) -> i64 {
        (self.hi - self.lo) / 2 + 1
    }

    fn min_of(&self, c: i64) -> i64 {
        if c >= 0 {
            c * self.lo
        } else {
            c * self.hi
        }
    }
}

struct Model {
    n: usize,
    favorite: usize,
    pairs: Vec<(usize, usize)>,
    /// For each pair: index among the non-favorite pairs, or `None` if it involves the favorite.
    sub_index: Vec<Option<usize>>,
    /// Non-favorite alternatives in ascending order.
    others: Vec<usize>,
    full: OrderTable,
    sub: OrderTable,
    source: GraphSpec,
    destination: GraphSpec,
}

impl Model {
    fn new(inst: &TransitionInstance) -> Model {
        let n = inst.source.len();
        let favorite = inst.favorite_index();
        let ps = pairs(n);
        let others: Vec<usize> = (0..n).filter(|&x| x != favorite).collect();
        let sub_pairs = pairs(others.len());
        let sub_index = ps
            .iter()
            .map(|&(i, j)| {
                if i == favorite || j == favorite {
                    return None;
                }
                let si = others.iter().position(|&x| x == i).unwrap();
                let sj = others.iter().position(|&x| x == j).unwrap();
                sub_pairs.iter().position(|&p| p == (si, sj))
            })
            .collect();
        Model {
            n,
            favorite,
            sub_index,
            full: OrderTable::new(n),
            sub: OrderTable::new(others.len()),
            others,
            source: GraphSpec::new(&inst.source, &ps),
            destination: GraphSpec::new(&inst.destination, &ps),
            pairs: ps,
        }
    }

    fn num_base(&self) -> usize {
        self.pairs.len()
    }

    fn graph_constraints(&self, exprs: &[Expr], g: &GraphSpec, out: &mut Vec<Constraint>) {
        let mut edges: Vec<usize> = Vec::new();
        for (p, e) in exprs.iter().enumerate() {
            match g.sign[p] {
                1 => out.push(le(&e.scaled(-1), -1)),
                -1 => out.push(le(e, -1)),
                _ => {
                    out.push(le(e, 0));
                    out.push(le(&e.scaled(-1), 0));
                }
            }
            if g.sign[p] != 0 {
                edges.push(p);
            }
        }
        edges.sort_by_key(|&p| g.rank[p]);
        for w in edges.windows(2) {
            let (p, q) = (w[0], w[1]);
            let sp = exprs[p].scaled(g.sign[p]);
            let sq = exprs[q].scaled(g.sign[q]);
            let diff = sp.minus(&sq);
            if g.rank[p] == g.rank[q] {
                out.push(le(&diff, 0));
                out.push(le(&diff.scaled(-1), 0));
            } else {
                out.push(le(&diff, -1));
            }
        }
    }

    fn triangle_constraints(
        &self,
        vars: &[usize],
        n: usize,
        bound: i64,
        out: &mut Vec<Constraint>,
    ) {
        let ps = pairs(n);
        let idx = |i: usize, j: usize| vars[ps.iter().position(|&p| p == (i, j)).unwrap()];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let terms = vec![(idx(i, j), 1), (idx(j, k), 1), (idx(i, k), -1)];
                    let neg = terms.iter().map(|&(v, c)| (v, -c)).collect();
                    out.push(Constraint { terms, rhs: bound });
                    out.push(Constraint {
                        terms: neg,
                        rhs: bound,
                    });
                }
            }
        }
    }

    /// Base and added margin vectors for sizes `(v, a)`, if any exist.
    fn solve(&self, v: u64, a: u64) -> Option<(Vec<u64>, Vec<u64>)> {
        let (vi, ai) = (v as i64, a as i64);
        let e = self.num_base();
        let sub_e = self.sub.pairs.len();
        let mut domains: Vec<Domain> = (0..e).map(|_| Domain::new(-vi, vi, vi)).collect();
        domains.extend((0..sub_e).map(|_| Domain::new(-ai, ai, ai)));

        let base: Vec<Expr> = (0..e)
            .map(|p| Expr {
                terms: vec![(p, 1)],
                constant: 0,
            })
            .collect();
        let after: Vec<Expr> = (0..e)
            .map(|p| {
                let (i, j) = self.pairs[p];
                match self.sub_index[p] {
                    Some(q) => Expr {
                        terms: vec![(p, 1), (e + q, 1)],
                        constant: 0,
                    },
                    None => Expr {
                        terms: vec![(p, 1)],
                        // favorite-first ballots all prefer the favorite
                        constant: if i == self.favorite {
                            ai
                        } else {
                            debug_assert_eq!(j, self.favorite);
                            -ai
                        },
                    },
                }
            })
            .collect();

        let mut cons = Vec::new();
        self.graph_constraints(&base, &self.source, &mut cons);
        self.graph_constraints(&after, &self.destination, &mut cons);
        let base_vars: Vec<usize> = (0..e).collect();
        self.triangle_constraints(&base_vars, self.n, vi, &mut cons);
        let sub_vars: Vec<usize> = (e..e + sub_e).collect();
        self.triangle_constraints(&sub_vars, self.others.len(), ai, &mut cons);

        let mut found = None;
        search(&mut domains, &cons, &mut |vals| {
            let base = self.full.decompose(&vals[..e], v)?;
            let added = self.sub.decompose(&vals[e..], a)?;
            found = Some((base, added));
            Some(())
        });
        found
    }

    fn solution(
        &self,
        inst: &TransitionInstance,
        base: &[u64],
        added: &[u64],
    ) -> TransitionSolution {
        let alts = inst.source.vertices().to_vec();
        let base_entries: Vec<(Ballot, u64)> = self
            .full
            .orders
            .iter()
            .zip(base)
            .filter(|(_, &c)| c > 0)
            .map(|(o, &c)| (Ballot::linear(o).expect("permutation"), c))
            .collect();
        let added_entries: Vec<(Ballot, u64)> = self
            .sub
            .orders
            .iter()
            .zip(added)
            .filter(|(_, &c)| c > 0)
            .map(|(o, &c)| {
                let mut order = vec![self.favorite];
                order.extend(o.iter().map(|&k| self.others[k]));
                (Ballot::linear(&order).expect("permutation"), c)
            })
            .collect();
        TransitionSolution {
            base: Profile::new(alts.clone(), base_entries).expect("nonempty base"),
            added: Profile::new(alts, added_entries).expect("nonempty added block"),
        }
    }
}

/// Tightens bounds to a fixpoint; false if some domain empties.
fn propagate(domains: &mut [Domain], cons: &[Constraint]) -> bool {
    loop {
        let mut changed = false;
        for c in cons {
            let total_min: i64 = c.terms.iter().map(|&(v, k)| domains[v].min_of(k)).sum();
            if total_min > c.rhs {
                return false;
            }
            for &(v, k) in &c.terms {
                let rest = total_min - domains[v].min_of(k);
                let slack = c.rhs - rest;
                let d = &mut domains[v];
                if k > 0 {
                    let hi = slack.div_euclid(k);
                    if hi < d.hi {
                        d.hi = hi;
                        d.normalize();
                        changed = true;
                    }
                } else {
                    // k * x <= slack  <=>  x >= ceil(slack / k) for k < 0
                    let lo = -(slack.div_euclid(-k));
                    if lo > d.lo {
                        d.lo = lo;
                        d.normalize();
                        changed = true;
                    }
                }
                if d.empty() {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Depth-first enumeration of integer points in ascending order of the branching variable;
/// stops when `leaf` returns `Some`.
fn search(
    domains: &mut [Domain],
    cons: &[Constraint],
    leaf: &mut impl FnMut(&[i64]) -> Option<()>,
) -> bool {
    if !propagate(domains, cons) {
        return false;
    }
    let branch = domains
        .iter()
        .enumerate()
        .filter(|(_, d)| d.size() > 1)
        .min_by_key(|(i, d)| (d.size(), *i))
        .map(|(i, _)| i);
    match branch {
        None => {
            let vals: Vec<i64> = domains.iter().map(|d| d.lo).collect();
            leaf(&vals).is_some()
        }
        Some(i) => {
            let Domain { lo, hi, .. } = domains[i];
            let mut x = lo;
            while x <= hi {
                let mut next = domains.to_vec();
                next[i].lo = x;
                next[i].hi = x;
                if search(&mut next, cons, leaf) {
                    return true;
                }
                x += 2;
            }
            false
        }
    }
}
