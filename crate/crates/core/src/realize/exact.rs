//! Exact decomposition of a margin vector into a fixed number of linear ballots.
//!
//! Margin vectors are indexed by pair `(i, j)`, `i < j`, in [`crate::enumerate::pairs`] order,
//! with entry `margin(i, j)`.

use std::collections::HashSet;

use crate::enumerate::pairs;
use crate::profile::linear_orders;

/// Linear orders of `0..n` with their pair-margin vectors.
#[derive(Clone, Debug)]
pub struct OrderTable {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    pub orders: Vec<Vec<usize>>,
    pub vectors: Vec<Vec<i64>>,
    /// `(ij, jk, ik)` pair indices of every triple `i < j < k`.
    triangles: Vec<(usize, usize, usize)>,
}

impl OrderTable {
    pub fn new(n: usize) -> OrderTable {
        let ps = pairs(n);
        let orders = linear_orders(n);
        let vectors = orders
            .iter()
            .map(|o| {
                let mut pos = vec![0; n];
                for (p, &x) in o.iter().enumerate() {
                    pos[x] = p;
                }
                ps.iter()
                    .map(|&(i, j)| if pos[i] < pos[j] { 1 } else { -1 })
                    .collect()
            })
            .collect();
        let idx = |i: usize, j: usize| ps.iter().position(|&p| p == (i, j)).unwrap();
        let mut triangles = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    triangles.push((idx(i, j), idx(j, k), idx(i, k)));
                }
            }
        }
        OrderTable {
            n,
            pairs: ps,
            orders,
            vectors,
            triangles,
        }
    }

    /// Necessary conditions for `margins` to be a sum of `voters` linear ballots:
    /// bounded entries, matching parity and 3-cycle sums within `[-voters, voters]`.
    pub fn plausible(&self, margins: &[i64], voters: i64) -> bool {
        if margins
            .iter()
            .any(|&m| m.abs() > voters || (m - voters).rem_euclid(2) != 0)
        {
            return false;
        }
        self.triangles.iter().all(|&(ij, jk, ik)| {
            let cycle = margins[ij] + margins[jk] - margins[ik];
            cycle.abs() <= voters
        })
    }

    /// Counts per order (indexed like `orders`) summing to `margins` with exactly `voters`
    /// ballots, or `None` if impossible. Deterministic: the lexicographically greatest count
    /// vector under the order listing is returned.
    pub fn decompose(&self, margins: &[i64], voters: u64) -> Option<Vec<u64>> {
        let v = voters as i64;
        if !self.plausible(margins, v) {
            return None;
        }
        let mut counts = vec![0u64; self.orders.len()];
        let mut residual = margins.to_vec();
        let mut failed = HashSet::new();
        if self.dfs(0, v, &mut residual, &mut counts, &mut failed) {
            Some(counts)
        } else {
            None
        }
    }

    fn dfs(
        &self,
        start: usize,
        remaining: i64,
        residual: &mut Vec<i64>,
        counts: &mut [u64],
        failed: &mut HashSet<(usize, Vec<i64>)>,
    ) -> bool {
        if remaining == 0 {
            return residual.iter().all(|&r| r == 0);
        }
        if failed.contains(&(start, residual.clone())) {
            return false;
        }
        for o in start..self.orders.len() {
            let vec = &self.vectors[o];
            for (r, d) in residual.iter_mut().zip(vec) {
                *r -= d;
            }
            if self.plausible(residual, remaining - 1) {
                counts[o] += 1;
                if self.dfs(o, remaining - 1, residual, counts, failed) {
                    for (r, d) in residual.iter_mut().zip(vec) {
                        *r += d;
                    }
                    return true;
                }
                counts[o] -= 1;
            }
            for (r, d) in residual.iter_mut().zip(vec) {
                *r += d;
            }
        }
        failed.insert((start, residual.clone()));
        false
    }
}
