use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::margin::MarginMatrix;

/// Upper bound on distinct tie-breaking search states explored by [`ranked_pairs`].
pub const DEFAULT_LINEARIZATION_CAP: u128 = 10_000;

/// Ranked Pairs with the default cap.
pub fn ranked_pairs(m: &MarginMatrix) -> Result<Vec<usize>> {
    ranked_pairs_with_cap(m, DEFAULT_LINEARIZATION_CAP)
}

/// Locks majority edges from strongest to weakest, skipping any that would close a cycle;
/// winners are the alternatives with no locked edge against them. Tied margins are handled by
/// taking the union of winners over every ordering of each tied group.
///
/// Orderings are explored as a search over lock states (tied group, undecided edges, locked
/// reachability), so orderings that reach the same state are merged. More than `cap` distinct
/// states is reported as a tie explosion.
pub fn ranked_pairs_with_cap(m: &MarginMatrix, cap: u128) -> Result<Vec<usize>> {
    let n = m.len();
    if n > 64 {
        return Err(Error::InvalidMargins(
            "ranked pairs supports at most 64 alternatives".into(),
        ));
    }
    let mut edges = m.majority_edges();
    edges.sort_by(|a, b| b.2.cmp(&a.2).then((a.0, a.1).cmp(&(b.0, b.1))));
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut last = None;
    for (x, y, v) in edges {
        if last != Some(v) {
            groups.push(Vec::new());
            last = Some(v);
        }
        groups.last_mut().unwrap().push((x, y));
    }
    let mut search = Search {
        n,
        groups: &groups,
        cap,
        seen: HashSet::new(),
        winners: 0,
    };
    let first = groups
        .first()
        .map_or(Vec::new(), |g| (0..g.len()).collect());
    search.visit(0, first, vec![0; n])?;
    Ok((0..n).filter(|&x| search.winners >> x & 1 == 1).collect())
}

struct Search<'a> {
    n: usize,
    groups: &'a [Vec<(usize, usize)>],
    cap: u128,
    seen: HashSet<(usize, Vec<usize>, Vec<u64>)>,
    winners: u64,
}

impl Search<'_> {
    /// `reach[a]` has bit `b` set when locked edges lead from `a` to `b`.
    fn visit(&mut self, g: usize, remaining: Vec<usize>, reach: Vec<u64>) -> Result<()> {
        if g == self.groups.len() {
            for x in 0..self.n {
                if reach.iter().all(|r| r >> x & 1 == 0) {
                    self.winners |= 1 << x;
                }
            }
            return Ok(());
        }
        let group = &self.groups[g];
        // an edge whose endpoints are already connected has a fixed outcome
        let remaining: Vec<usize> = remaining
            .into_iter()
            .filter(|&i| {
                let (x, y) = group[i];
                reach[x] >> y & 1 == 0 && reach[y] >> x & 1 == 0
            })
            .collect();
        if remaining.is_empty() {
            let next = self
                .groups
                .get(g + 1)
                .map_or(Vec::new(), |h| (0..h.len()).collect());
            return self.visit(g + 1, next, reach);
        }
        // if locking everything left closes no cycle, every order locks everything
        let mut all = reach.clone();
        for &i in &remaining {
            all = self.lock(&all, group[i]);
        }
        if (0..self.n).all(|a| all[a] >> a & 1 == 0) {
            return self.visit(g, Vec::new(), all);
        }
        if !self.seen.insert((g, remaining.clone(), reach.clone())) {
            return Ok(());
        }
        if self.seen.len() as u128 > self.cap {
            return Err(Error::TieExplosion {
                linearizations: self.seen.len() as u128,
                cap: self.cap,
            });
        }
        for (k, &i) in remaining.iter().enumerate() {
            let next = self.lock(&reach, group[i]);
            let mut rest = remaining.clone();
            rest.remove(k);
            self.visit(g, rest, next)?;
        }
        Ok(())
    }

    fn lock(&self, reach: &[u64], (x, y): (usize, usize)) -> Vec<u64> {
        let mut next = reach.to_vec();
        let gained = reach[y] | 1 << y;
        for a in 0..self.n {
            if a == x || reach[a] >> x & 1 == 1 {
                next[a] |= gained;
            }
        }
        next
    }
}
