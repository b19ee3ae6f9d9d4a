//! Pairwise support and margins.

use std::fmt;

use crate::error::{Error, Result};
use crate::profile::{index_of, Alternative, Profile};

/// Number of voters strictly preferring `x` to `y`.
pub fn support(p: &Profile, x: &str, y: &str) -> Result<u64> {
    let x = p.index_of(x)?;
    let y = p.index_of(y)?;
    Ok(support_idx(p, x, y))
}

pub(crate) fn support_idx(p: &Profile, x: usize, y: usize) -> u64 {
    p.entries()
        .iter()
        .filter(|(b, _)| b.prefers(x, y))
        .map(|(_, c)| *c)
        .sum()
}

/// `support(x, y) - support(y, x)`.
pub fn margin(p: &Profile, x: &str, y: &str) -> Result<i64> {
    let x = p.index_of(x)?;
    let y = p.index_of(y)?;
    Ok(support_idx(p, x, y) as i64 - support_idx(p, y, x) as i64)
}

/// Antisymmetric matrix of pairwise margins over lexicographically ordered alternatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarginMatrix {
    alternatives: Vec<Alternative>,
    m: Vec<i64>,
}

impl MarginMatrix {
    /// Builds and validates a matrix given row-major entries.
    pub fn new(alternatives: Vec<Alternative>, m: Vec<i64>) -> Result<Self> {
        let n = alternatives.len();
        if n == 0 {
            return Err(Error::InvalidMargins("no alternatives".into()));
        }
        if alternatives.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMargins(
                "alternatives must be sorted and distinct".into(),
            ));
        }
        if m.len() != n * n {
            return Err(Error::InvalidMargins(format!(
                "expected {} entries, got {}",
                n * n,
                m.len()
            )));
        }
        for x in 0..n {
            if m[x * n + x] != 0 {
                return Err(Error::InvalidMargins("nonzero diagonal".into()));
            }
            for y in 0..n {
                if m[x * n + y] != -m[y * n + x] {
                    return Err(Error::InvalidMargins("matrix is not antisymmetric".into()));
                }
            }
        }
        Ok(MarginMatrix { alternatives, m })
    }

    /// Builds from a closure over index pairs `x < y`; `f(x, y)` is the margin of `x` over `y`.
    pub fn from_fn(alternatives: Vec<Alternative>, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let n = alternatives.len();
        let mut m = vec![0; n * n];
        for x in 0..n {
            for y in x + 1..n {
                let v = f(x, y);
                m[x * n + y] = v;
                m[y * n + x] = -v;
            }
        }
        MarginMatrix { alternatives, m }
    }

    pub fn from_profile(p: &Profile) -> Self {
        let n = p.num_alternatives();
        let mut m = vec![0i64; n * n];
        for (ballot, count) in p.entries() {
            let pos = ballot.positions();
            let c = *count as i64;
            for x in 0..n {
                for y in 0..n {
                    if pos[x] < pos[y] {
                        m[x * n + y] += c;
                        m[y * n + x] -= c;
                    }
                }
            }
        }
        MarginMatrix {
            alternatives: p.alternatives().to_vec(),
            m,
        }
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.m[x * self.alternatives.len() + y]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        index_of(&self.alternatives, label)
    }

    pub fn margin(&self, x: &str, y: &str) -> Result<i64> {
        Ok(self.get(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn entries(&self) -> &[i64] {
        &self.m
    }

    /// `x` beats `y` head-to-head.
    #[inline]
    pub fn beats(&self, x: usize, y: usize) -> bool {
        self.get(x, y) > 0
    }

    /// Off-diagonal parity shared by every entry, if any.
    pub fn uniform_parity(&self) -> Option<i64> {
        let n = self.len();
        let mut parity = None;
        for x in 0..n {
            for y in x + 1..n {
                let p = self.get(x, y).rem_euclid(2);
                match parity {
                    None => parity = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        Some(parity.unwrap_or(0))
    }

    pub fn scaled(&self, k: i64) -> MarginMatrix {
        MarginMatrix {
            alternatives: self.alternatives.clone(),
            m: self.m.iter().map(|v| v * k).collect(),
        }
    }

    /// Relabels alternative `x` as `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> MarginMatrix {
        let n = self.len();
        let mut m = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                m[perm[x] * n + perm[y]] = self.get(x, y);
            }
        }
        MarginMatrix {
            alternatives: self.alternatives.clone(),
            m,
        }
    }

    pub fn condorcet_winner(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&x| (0..n).all(|y| y == x || self.get(x, y) > 0))
    }

    pub fn weak_condorcet_winners(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&x| (0..n).all(|y| self.get(x, y) >= 0))
            .collect()
    }

    pub fn condorcet_loser(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&x| (0..n).all(|y| y == x || self.get(y, x) > 0))
    }

    /// All pairwise margins as `(winner, loser, margin)` with positive margin.
    pub fn majority_edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let v = self.get(x, y);
                if v > 0 {
                    out.push((x, y, v));
                }
            }
        }
        out
    }
}

impl fmt::Display for MarginMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        write!(f, "    ")?;
        for a in &self.alternatives {
            write!(f, "{a:>5}")?;
        }
        writeln!(f)?;
        for x in 0..n {
            write!(f, "{:>4}", self.alternatives[x])?;
            for y in 0..n {
                write!(f, "{:>5}", self.get(x, y))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Profile {
    pub fn margin_matrix(&self) -> MarginMatrix {
        MarginMatrix::from_profile(self)
    }

    pub fn condorcet_winner(&self) -> Option<&Alternative> {
        self.margin_matrix()
            .condorcet_winner()
            .map(|i| &self.alternatives()[i])
    }

    pub fn weak_condorcet_winners(&self) -> Vec<&Alternative> {
        self.margin_matrix()
            .weak_condorcet_winners()
            .into_iter()
            .map(|i| &self.alternatives()[i])
            .collect()
    }

    pub fn condorcet_loser(&self) -> Option<&Alternative> {
        self.margin_matrix()
            .condorcet_loser()
            .map(|i| &self.alternatives()[i])
    }
}

/// One line of a margin listing: `x beats y by s1 - s2 = m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarginLine {
    pub winner: Alternative,
    pub loser: Alternative,
    pub support_for: u64,
    pub support_against: u64,
}

impl MarginLine {
    pub fn margin(&self) -> i64 {
        self.support_for as i64 - self.support_against as i64
    }
}

impl fmt::Display for MarginLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} beats {} by {} - {} = {}",
            self.winner,
            self.loser,
            self.support_for,
            self.support_against,
            self.margin()
        )
    }
}

/// Positive-margin pairs sorted by descending margin, ties by label.
pub fn margin_lines(p: &Profile) -> Vec<MarginLine> {
    let n = p.num_alternatives();
    let alts = p.alternatives();
    let mut lines = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let s1 = support_idx(p, x, y);
            let s2 = support_idx(p, y, x);
            if s1 > s2 {
                lines.push(MarginLine {
                    winner: alts[x].clone(),
                    loser: alts[y].clone(),
                    support_for: s1,
                    support_against: s2,
                });
            }
        }
    }
    lines.sort_by(|a, b| {
        b.margin()
            .cmp(&a.margin())
            .then_with(|| a.winner.cmp(&b.winner))
            .then_with(|| a.loser.cmp(&b.loser))
    });
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tie_counts_for_neither_side() {
        let p = Profile::parse("1: a=b>c\n").unwrap();
        assert_eq!(support(&p, "a", "b").unwrap(), 0);
        assert_eq!(support(&p, "a", "c").unwrap(), 1);
        assert_eq!(support(&p, "a", "a").unwrap(), 0);
        assert_eq!(margin(&p, "b", "b").unwrap(), 0);
        assert_eq!(
            support(&p, "a", "z"),
            Err(Error::UnknownAlternative("z".into()))
        );
    }

    #[test]
    fn one_voter_linear_margins_are_unit() {
        let m = Profile::parse("1: a>b>c\n").unwrap().margin_matrix();
        for x in 0..3 {
            for y in 0..3 {
                if x != y {
                    assert_eq!(m.get(x, y).abs(), 1);
                }
            }
        }
        assert_eq!(m.condorcet_winner(), Some(0));
        assert_eq!(m.condorcet_loser(), Some(2));
        assert_eq!(m.uniform_parity(), Some(1));
    }

    #[test]
    fn validation() {
        let alts = crate::profile::letters(2);
        assert!(MarginMatrix::new(alts.clone(), vec![0, 1, 1, 0]).is_err());
        assert!(MarginMatrix::new(alts.clone(), vec![1, 1, -1, 0]).is_err());
        assert!(MarginMatrix::new(alts, vec![0, 3, -3, 0]).is_ok());
    }

    #[test]
    fn all_tied_has_no_lines() {
        let p = Profile::parse("1: a>b\n1: b>a\n").unwrap();
        assert!(margin_lines(&p).is_empty());
        assert_eq!(p.margin_matrix().weak_condorcet_winners(), vec![0, 1]);
    }
}
