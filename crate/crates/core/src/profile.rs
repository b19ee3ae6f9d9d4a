//! Ballots and profiles over a fixed, lexicographically ordered alternative set.
//!
//! Text format, one entry per line:
//!
//! ```text
//! # comment
//! 14: b>d>a>c
//! 2: a=b>c>d
//! ```
//!
//! A tier is a single label or labels joined by `=`; earlier tiers are strictly preferred.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const RESERVED: [char; 4] = ['>', '=', ':', '#'];

/// A label naming one alternative, e.g. `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Alternative(String);

impl Alternative {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty()
            || label
                .chars()
                .any(|c| c.is_whitespace() || RESERVED.contains(&c))
        {
            return Err(Error::InvalidLabel(label));
        }
        Ok(Alternative(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Alternative {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Alternative::new(s)
    }
}

impl From<Alternative> for String {
    fn from(a: Alternative) -> String {
        a.0
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Builds a sorted, duplicate-free alternative list from labels.
pub fn alternatives<S: AsRef<str>>(labels: &[S]) -> Result<Vec<Alternative>> {
    let mut out = Vec::with_capacity(labels.len());
    for l in labels {
        out.push(Alternative::new(l.as_ref())?);
    }
    out.sort();
    for w in out.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateAlternative(w[0].to_string()));
        }
    }
    Ok(out)
}

/// The first `n` lowercase letters as alternatives (`a`, `b`, ...).
pub fn letters(n: usize) -> Vec<Alternative> {
    assert!(n <= 26);
    (0..n)
        .map(|i| Alternative(((b'a' + i as u8) as char).to_string()))
        .collect()
}

pub(crate) fn index_of(alts: &[Alternative], label: &str) -> Result<usize> {
    alts.binary_search_by(|a| a.as_str().cmp(label))
        .map_err(|_| Error::UnknownAlternative(label.to_string()))
}

/// A strict weak order, stored as indifference tiers of alternative indices.
///
/// Indices refer to the alternative list of the profile the ballot belongs to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ballot {
    tiers: Vec<Vec<usize>>,
}

impl Ballot {
    /// Builds a ballot from tiers, checking that they partition `0..n`.
    pub fn from_tiers(mut tiers: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for tier in &mut tiers {
            if tier.is_empty() {
                return Err(Error::InvalidBallot("empty tier".into()));
            }
            tier.sort_unstable();
            for &x in tier.iter() {
                if x >= n || seen[x] {
                    return Err(Error::InvalidBallot(format!(
                        "alternative index {x} out of range or repeated"
                    )));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidBallot(
                "ballot must rank every alternative".into(),
            ));
        }
        Ok(Ballot { tiers })
    }

    /// A linear ballot listing alternatives from most to least preferred.
    pub fn linear(order: &[usize]) -> Result<Self> {
        Ballot::from_tiers(order.iter().map(|&x| vec![x]).collect(), order.len())
    }

    /// Parses `a>b=c>d` against an alternative list.
    pub fn parse(text: &str, alts: &[Alternative]) -> Result<Self> {
        let mut tiers = Vec::new();
        for tier in text.split('>') {
            let mut t = Vec::new();
            for label in tier.split('=') {
                let label = label.trim();
                if label.is_empty() {
                    return Err(Error::InvalidBallot(format!("empty label in `{text}`")));
                }
                t.push(index_of(alts, label)?);
            }
            tiers.push(t);
        }
        Ballot::from_tiers(tiers, alts.len())
    }

    pub fn tiers(&self) -> &[Vec<usize>] {
        &self.tiers
    }

    pub fn len(&self) -> usize {
        self.tiers.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.tiers.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.tiers.iter().all(|t| t.len() == 1)
    }

    /// The uniquely top-ranked alternative, if the first tier is a singleton.
    pub fn unique_top(&self) -> Option<usize> {
        match self.tiers.first() {
            Some(t) if t.len() == 1 => Some(t[0]),
            _ => None,
        }
    }

    /// Tier index of every alternative; smaller is better.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, tier) in self.tiers.iter().enumerate() {
            for &x in tier {
                pos[x] = i;
            }
        }
        pos
    }

    pub fn prefers(&self, x: usize, y: usize) -> bool {
        let pos = self.positions();
        pos[x] < pos[y]
    }

    /// Applies an alternative relabeling `x -> perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Ballot {
        let mut tiers: Vec<Vec<usize>> = self
            .tiers
            .iter()
            .map(|t| t.iter().map(|&x| perm[x]).collect())
            .collect();
        for t in &mut tiers {
            t.sort_unstable();
        }
        Ballot { tiers }
    }

    pub fn display<'a>(&'a self, alts: &'a [Alternative]) -> BallotDisplay<'a> {
        BallotDisplay { ballot: self, alts }
    }
}

pub struct BallotDisplay<'a> {
    ballot: &'a Ballot,
    alts: &'a [Alternative],
}

impl fmt::Display for BallotDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tier) in self.ballot.tiers.iter().enumerate() {
            if i > 0 {
                f.write_str(">")?;
            }
            for (j, &x) in tier.iter().enumerate() {
                if j > 0 {
                    f.write_str("=")?;
                }
                write!(f, "{}", self.alts[x])?;
            }
        }
        Ok(())
    }
}

/// A multiset of ballots over a shared alternative set.
#[derive(Clone, Debug)]
pub struct Profile {
    alternatives: Vec<Alternative>,
    entries: Vec<(Ballot, u64)>,
}

impl PartialEq for Profile {
    fn eq(&self, other: &Self) -> bool {
        self.alternatives == other.alternatives && self.sorted_entries() == other.sorted_entries()
    }
}

impl Eq for Profile {}

impl Profile {
    /// Builds a profile, merging repeated ballots and dropping zero counts.
    ///
    /// `alternatives` must be sorted and duplicate-free (see [`alternatives`]).
    pub fn new(alternatives: Vec<Alternative>, entries: Vec<(Ballot, u64)>) -> Result<Self> {
        if alternatives.is_empty() {
            return Err(Error::InvalidProfile("no alternatives".into()));
        }
        if alternatives.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidProfile(
                "alternatives must be sorted and distinct".into(),
            ));
        }
        let n = alternatives.len();
        let mut merged: Vec<(Ballot, u64)> = Vec::with_capacity(entries.len());
        for (ballot, count) in entries {
            if ballot.len() != n {
                return Err(Error::InvalidBallot(
                    "ballot must rank exactly the profile's alternatives".into(),
                ));
            }
            if count == 0 {
                continue;
            }
            match merged.iter_mut().find(|(b, _)| *b == ballot) {
                Some((_, c)) => {
                    *c = c
                        .checked_add(count)
                        .ok_or_else(|| Error::InvalidProfile("voter count overflow".into()))?
                }
                None => merged.push((ballot, count)),
            }
        }
        if merged.is_empty() {
            return Err(Error::InvalidProfile("profile has no voters".into()));
        }
        Ok(Profile {
            alternatives,
            entries: merged,
        })
    }

    /// Parses the line-oriented profile text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw: Vec<(usize, u64, &str)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (count, ballot) = line.split_once(':').ok_or_else(|| Error::Parse {
                line: lineno + 1,
                message: "expected `<count>: <ballot>`".into(),
            })?;
            let count: u64 = count.trim().parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("invalid count `{}`", count.trim()),
            })?;
            raw.push((lineno + 1, count, ballot.trim()));
        }
        let Some(&(first_line, _, first)) = raw.first() else {
            return Err(Error::Parse {
                line: 0,
                message: "profile has no entries".into(),
            });
        };
        let labels: Vec<&str> = first.split(['>', '=']).map(str::trim).collect();
        let alts = alternatives(&labels).map_err(|e| Error::Parse {
            line: first_line,
            message: e.to_string(),
        })?;
        let mut entries = Vec::with_capacity(raw.len());
        for (line, count, ballot) in raw {
            let b = Ballot::parse(ballot, &alts).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            entries.push((b, count));
        }
        Profile::new(alts, entries).map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })
    }

    /// Builds a profile from `(count, ballot-text)` pairs; alternatives come from the first ballot.
    pub fn from_rows(rows: &[(u64, &str)]) -> Result<Self> {
        let text: String = rows.iter().map(|(c, b)| format!("{c}: {b}\n")).collect();
        Profile::parse(&text)
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    pub fn num_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn entries(&self) -> &[(Ballot, u64)] {
        &self.entries
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        index_of(&self.alternatives, label)
    }

    pub fn num_voters(&self) -> u64 {
        self.entries.iter().map(|(_, c)| c).sum()
    }

    pub fn is_linear(&self) -> bool {
        self.entries.iter().all(|(b, _)| b.is_linear())
    }

    pub fn sorted_entries(&self) -> Vec<(Ballot, u64)> {
        let mut e = self.entries.clone();
        e.sort();
        e
    }

    /// Every ballot count multiplied by `k`.
    pub fn scale(&self, k: u64) -> Result<Profile> {
        if k == 0 {
            return Err(Error::ZeroScale);
        }
        let entries = self
            .entries
            .iter()
            .map(|(b, c)| {
                c.checked_mul(k)
                    .map(|c| (b.clone(), c))
                    .ok_or_else(|| Error::InvalidProfile("voter count overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Profile {
            alternatives: self.alternatives.clone(),
            entries,
        })
    }

    /// Adds the voters of another profile over the same alternatives.
    pub fn add_voters(&self, added: &Profile) -> Result<Profile> {
        if added.alternatives != self.alternatives {
            return Err(Error::AlternativeMismatch);
        }
        self.add_ballots(&added.entries)
    }

    /// Adds ballot entries whose indices refer to this profile's alternatives.
    pub fn add_ballots(&self, added: &[(Ballot, u64)]) -> Result<Profile> {
        let mut entries = self.entries.clone();
        entries.extend(added.iter().cloned());
        Profile::new(self.alternatives.clone(), entries)
    }

    pub fn with_ballot(&self, ballot: &Ballot) -> Result<Profile> {
        self.add_ballots(&[(ballot.clone(), 1)])
    }

    /// Relabels alternative `x` as `perm[x]` (labels keep their sorted order).
    pub fn permuted(&self, perm: &[usize]) -> Profile {
        Profile {
            alternatives: self.alternatives.clone(),
            entries: self
                .entries
                .iter()
                .map(|(b, c)| (b.permuted(perm), *c))
                .collect(),
        }
    }

    /// Drops one voter with the given entry index; `None` if that would empty the profile.
    pub fn without_one(&self, entry: usize) -> Option<Profile> {
        let mut entries = self.entries.clone();
        entries[entry].1 -= 1;
        Profile::new(self.alternatives.clone(), entries).ok()
    }

    pub fn labels(&self) -> BTreeSet<&str> {
        self.alternatives.iter().map(|a| a.as_str()).collect()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, c) in &self.entries {
            writeln!(f, "{}: {}", c, b.display(&self.alternatives))?;
        }
        Ok(())
    }
}

impl Serialize for Profile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every linear order of `0..n`, in lexicographic order.
pub fn linear_orders(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Every strict weak order on `0..n` (ordered set partitions), deterministic order.
pub fn weak_orders(n: usize) -> Vec<Ballot> {
    let mut out = Vec::new();
    // assign each alternative a tier label, keep only surjective labelings onto 0..k
    let mut labels = vec![0usize; n];
    loop {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut hit = vec![false; k];
        for &l in &labels {
            hit[l] = true;
        }
        if hit.iter().all(|h| *h) {
            let mut tiers = vec![Vec::new(); k];
            for (x, &l) in labels.iter().enumerate() {
                tiers[l].push(x);
            }
            out.push(Ballot { tiers });
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            labels[i] += 1;
            if labels[i] < n {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ties_and_comments() {
        let p = Profile::parse("# x\n\n2: a=b>c\n1: c>b>a  # trailing\n").unwrap();
        assert_eq!(p.num_voters(), 3);
        assert_eq!(p.num_alternatives(), 3);
        assert!(!p.is_linear());
        assert_eq!(p.to_string(), "2: a=b>c\n1: c>b>a\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Profile::parse("1: a>b\n1: a>c\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Profile::parse("x: a>b\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(Profile::parse("1: a>a\n").is_err());
        assert!(Profile::parse("# nothing\n").is_err());
        assert!(Profile::parse("0: a>b\n").is_err());
        assert!(Alternative::new("a b").is_err());
        assert!(Alternative::new("").is_err());
        assert!(Alternative::new("a:").is_err());
    }

    #[test]
    fn merges_duplicate_ballots() {
        let p = Profile::parse("1: a>b\n2: b>a\n3: a>b\n").unwrap();
        assert_eq!(p.entries().len(), 2);
        assert_eq!(p.entries()[0].1, 4);
    }

    #[test]
    fn scale_and_add() {
        let p = Profile::parse("1: a>b>c\n").unwrap();
        assert_eq!(p.scale(1).unwrap(), p);
        assert_eq!(p.scale(3).unwrap().num_voters(), 3);
        assert_eq!(p.scale(0), Err(Error::ZeroScale));
        assert_eq!(p.add_ballots(&[]).unwrap(), p);
        let other = Profile::parse("1: a>b\n").unwrap();
        assert_eq!(p.add_voters(&other), Err(Error::AlternativeMismatch));
    }

    #[test]
    fn weak_order_counts() {
        // ordered Bell (Fubini) numbers
        assert_eq!(weak_orders(1).len(), 1);
        assert_eq!(weak_orders(2).len(), 3);
        assert_eq!(weak_orders(3).len(), 13);
        assert_eq!(weak_orders(4).len(), 75);
        assert_eq!(weak_orders(5).len(), 541);
        assert_eq!(linear_orders(4).len(), 24);
    }
}
