//! Linearly edge-ordered tournaments up to isomorphism, and irresoluteness statistics over them.
//!
//! A tournament on `n` vertices is encoded pair by pair, pairs in the order
//! `(0,1), (0,2), .., (n-2,n-1)`: a direction bit (0 when the lower index beats the higher)
//! followed, after all bits, by the rank of each pair's edge. The canonical key of a
//! tournament is the lexicographically least encoding over all vertex relabelings.
//!
//! Classes are generated orderly: for each orientation that is minimal in its orbit, every
//! rank sequence that is minimal under the orientation's automorphisms is emitted.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::margin::MarginMatrix;
use crate::methods::{evaluate_margins, MethodId};
use crate::omg::OrdinalMarginGraph;
use crate::profile::letters;
use crate::rational::{format_decimal, format_exact, Rational};

pub const MIN_VERTICES: usize = 2;
pub const MAX_VERTICES: usize = 5;

/// Index pairs `(i, j)` with `i < j`, in encoding order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    // pairs before row i, then offset within the row
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// A complete tournament with a linear order on its edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Leot {
    n: usize,
    /// Per pair: 0 if the lower index beats the higher, 1 otherwise.
    bits: Vec<u8>,
    /// Per pair: rank of that pair's edge, a permutation of `1..=pairs`.
    ranks: Vec<u8>,
}

/// Lexicographically minimal encoding of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl Leot {
    pub fn new(n: usize, bits: Vec<u8>, ranks: Vec<u8>) -> Result<Leot> {
        let e = n * (n.saturating_sub(1)) / 2;
        if bits.len() != e || ranks.len() != e || bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidGraph("malformed tournament encoding".into()));
        }
        let mut sorted = ranks.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(i, &r)| r as usize != i + 1) {
            return Err(Error::InvalidGraph(
                "edge ranks must be a permutation".into(),
            ));
        }
        Ok(Leot { n, bits, ranks })
    }

    pub fn from_graph(g: &OrdinalMarginGraph) -> Result<Leot> {
        if !g.is_linearly_edge_ordered_tournament() {
            return Err(Error::InvalidGraph(
                "not a linearly edge-ordered tournament".into(),
            ));
        }
        let n = g.len();
        let mut bits = Vec::new();
        let mut ranks = Vec::new();
        for (i, j) in pairs(n) {
            match (g.rank(i, j), g.rank(j, i)) {
                (Some(r), None) => {
                    bits.push(0);
                    ranks.push(r as u8);
                }
                (None, Some(r)) => {
                    bits.push(1);
                    ranks.push(r as u8);
                }
                _ => unreachable!("tournament"),
            }
        }
        Leot::new(n, bits, ranks)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Labels vertices `a, b, c, ...`.
    pub fn to_graph(&self) -> OrdinalMarginGraph {
        let mut edges = BTreeMap::new();
        for (k, (i, j)) in pairs(self.n).into_iter().enumerate() {
            let e = if self.bits[k] == 0 { (i, j) } else { (j, i) };
            edges.insert(e, self.ranks[k] as u32);
        }
        OrdinalMarginGraph::new(letters(self.n), edges).expect("valid tournament")
    }

    /// Margin matrix with `margin = rank` on each edge.
    pub fn rank_matrix(&self) -> MarginMatrix {
        let mut k = 0;
        MarginMatrix::from_fn(letters(self.n), |_, _| {
            let v = self.ranks[k] as i64;
            let s = if self.bits[k] == 0 { v } else { -v };
            k += 1;
            s
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Leot {
        let e = self.bits.len();
        let mut bits = vec![0; e];
        let mut ranks = vec![0; e];
        for (k, (i, j)) in pairs(self.n).into_iter().enumerate() {
            let (from, to) = if self.bits[k] == 0 { (i, j) } else { (j, i) };
            let (pf, pt) = (perm[from], perm[to]);
            let idx = pair_index(self.n, pf.min(pt), pf.max(pt));
            bits[idx] = u8::from(pf > pt);
            ranks[idx] = self.ranks[k];
        }
        Leot {
            n: self.n,
            bits,
            ranks,
        }
    }

    /// Every edge reversed, ranks kept.
    pub fn reversed(&self) -> Leot {
        Leot {
            n: self.n,
            bits: self.bits.iter().map(|b| 1 - b).collect(),
            ranks: self.ranks.clone(),
        }
    }

    fn encoding(&self) -> Vec<u8> {
        let mut v = self.bits.clone();
        v.extend_from_slice(&self.ranks);
        v
    }

    pub fn canonical_form(&self) -> CanonicalKey {
        let best = permutations(self.n)
            .iter()
            .map(|p| self.permuted(p).encoding())
            .min()
            .expect("at least the identity");
        CanonicalKey(best)
    }

    /// True when this tournament is its own class representative.
    pub fn is_canonical(&self) -> bool {
        self.canonical_form().0 == self.encoding()
    }
}

pub fn canonical_form(t: &Leot) -> CanonicalKey {
    t.canonical_form()
}

pub fn is_isomorphic(a: &Leot, b: &Leot) -> bool {
    a.n == b.n && a.canonical_form() == b.canonical_form()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    crate::profile::linear_orders(n)
}

fn check_size(n: usize) -> Result<()> {
    if (MIN_VERTICES..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedSize(n))
    }
}

/// Orientation bit vectors that are minimal in their orbit, with their automorphisms
/// expressed as pair permutations.
fn canonical_orientations(n: usize) -> Vec<(Vec<u8>, Vec<Vec<usize>>)> {
    let e = n * (n - 1) / 2;
    let perms = permutations(n);
    let ps = pairs(n);
    let apply = |bits: &[u8], perm: &[usize]| -> Vec<u8> {
        let mut out = vec![0u8; e];
        for (k, &(i, j)) in ps.iter().enumerate() {
            let (from, to) = if bits[k] == 0 { (i, j) } else { (j, i) };
            let (pf, pt) = (perm[from], perm[to]);
            out[pair_index(n, pf.min(pt), pf.max(pt))] = u8::from(pf > pt);
        }
        out
    };
    let mut out = Vec::new();
    for code in 0u32..(1 << e) {
        // bit for pair 0 is the most significant so integer order is lexicographic
        let bits: Vec<u8> = (0..e).map(|k| ((code >> (e - 1 - k)) & 1) as u8).collect();
        let mut minimal = true;
        let mut autos = Vec::new();
        for p in &perms {
            let img = apply(&bits, p);
            if img < bits {
                minimal = false;
                break;
            }
            if img == bits {
                let pair_map = ps
                    .iter()
                    .map(|&(i, j)| {
                        let (a, b) = (p[i], p[j]);
                        pair_index(n, a.min(b), a.max(b))
                    })
                    .collect();
                autos.push(pair_map);
            }
        }
        if minimal {
            out.push((bits, autos));
        }
    }
    out
}

/// Visits ranks of one orientation class that are minimal under its automorphisms.
fn visit_ranks(n: usize, bits: &[u8], autos: &[Vec<usize>], visit: &mut impl FnMut(&Leot)) {
    let e = bits.len();
    let mut ranks: Vec<u8> = (1..=e as u8).collect();
    let mut image = vec![0u8; e];
    loop {
        let minimal = autos.iter().all(|pm| {
            for k in 0..e {
                image[pm[k]] = ranks[k];
            }
            image >= ranks
        });
        if minimal {
            visit(&Leot {
                n,
                bits: bits.to_vec(),
                ranks: ranks.clone(),
            });
        }
        if !next_permutation(&mut ranks) {
            break;
        }
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Streams one representative per isomorphism class, in ascending canonical-key order.
pub fn enumerate_leot(n: usize, mut visit: impl FnMut(&Leot)) -> Result<()> {
    check_size(n)?;
    for (bits, autos) in canonical_orientations(n) {
        visit_ranks(n, &bits, &autos, &mut visit);
    }
    Ok(())
}

/// Number of isomorphism classes.
pub fn count_classes(n: usize) -> Result<u64> {
    check_size(n)?;
    let orients = canonical_orientations(n);
    Ok(orients
        .par_iter()
        .map(|(bits, autos)| {
            let mut c = 0u64;
            visit_ranks(n, bits, autos, &mut |_| c += 1);
            c
        })
        .sum())
}

/// One row of the irresoluteness table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrresolutenessRow {
    pub method: MethodId,
    pub classes: u64,
    pub num_multiple: u64,
    #[serde(serialize_with = "crate::rational::serialize_ratio")]
    pub mean_size: Rational,
    pub max_size: usize,
}

impl IrresolutenessRow {
    pub fn mean_exact(&self) -> String {
        format_exact(&self.mean_size)
    }

    pub fn mean_decimal(&self) -> String {
        format_decimal(&self.mean_size, 6)
    }
}

#[derive(Clone, Copy, Default)]
struct Acc {
    classes: u64,
    multiple: u64,
    total: u64,
    max: usize,
}

impl Acc {
    fn merge(self, o: Acc) -> Acc {
        Acc {
            classes: self.classes + o.classes,
            multiple: self.multiple + o.multiple,
            total: self.total + o.total,
            max: self.max.max(o.max),
        }
    }
}

fn check_methods(methods: &[MethodId]) -> Result<()> {
    match methods.iter().find(|m| !m.is_margin_sufficient()) {
        Some(m) => Err(Error::ProfileRequired { method: m.token() }),
        None => Ok(()),
    }
}

fn rows(methods: &[MethodId], acc: Vec<Acc>) -> Vec<IrresolutenessRow> {
    methods
        .iter()
        .zip(acc)
        .map(|(&method, a)| IrresolutenessRow {
            method,
            classes: a.classes,
            num_multiple: a.multiple,
            mean_size: Rational::new(a.total, a.classes.max(1)),
            max_size: a.max,
        })
        .collect()
}

fn tally(methods: &[MethodId], t: &Leot, acc: &mut [Acc]) -> Result<()> {
    let m = t.rank_matrix();
    for (a, &method) in acc.iter_mut().zip(methods) {
        let size = evaluate_margins(method, &m)?.len();
        a.classes += 1;
        a.multiple += u64::from(size > 1);
        a.total += size as u64;
        a.max = a.max.max(size);
    }
    Ok(())
}

/// Exact irresoluteness statistics over all classes on `n` vertices, computed in parallel.
pub fn irresoluteness(n: usize, methods: &[MethodId]) -> Result<Vec<IrresolutenessRow>> {
    check_size(n)?;
    check_methods(methods)?;
    let orients = canonical_orientations(n);
    let per_orientation: Vec<Vec<Acc>> = orients
        .par_iter()
        .map(|(bits, autos)| {
            let mut acc = vec![Acc::default(); methods.len()];
            let mut err = None;
            visit_ranks(n, bits, autos, &mut |t| {
                if err.is_none() {
                    err = tally(methods, t, &mut acc).err();
                }
            });
            match err {
                Some(e) => Err(e),
                None => Ok(acc),
            }
        })
        .collect::<Result<_>>()?;
    let total = per_orientation
        .into_iter()
        .fold(vec![Acc::default(); methods.len()], |a, b| {
            a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
        });
    Ok(rows(methods, total))
}

/// Same statistics computed by a single serial pass over the stream.
pub fn irresoluteness_serial(n: usize, methods: &[MethodId]) -> Result<Vec<IrresolutenessRow>> {
    check_methods(methods)?;
    let mut acc = vec![Acc::default(); methods.len()];
    let mut err = None;
    enumerate_leot(n, |t| {
        if err.is_none() {
            err = tally(methods, t, &mut acc).err();
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(rows(methods, acc))
}

/// The four-alternative irresoluteness table.
pub fn table1(methods: &[MethodId]) -> Result<Vec<IrresolutenessRow>> {
    irresoluteness(4, methods)
}
