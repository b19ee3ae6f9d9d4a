//! Brute-force reference implementations, written directly from the definitions.
#![allow(dead_code)]

use posinv::MarginMatrix;

/// Every simple path from `from` to `to` (as vertex lists).
pub fn simple_paths(n: usize, from: usize, to: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, path: &mut Vec<usize>, to: usize, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == to {
            out.push(path.clone());
            return;
        }
        for v in 0..n {
            if !path.contains(&v) {
                path.push(v);
                go(n, path, to, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![from], to, &mut out);
    out
}

fn path_min(m: &MarginMatrix, path: &[usize]) -> i64 {
    path.windows(2).map(|w| m.get(w[0], w[1])).min().unwrap()
}

pub fn defensible(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    (0..n)
        .filter(|&x| (0..n).all(|y| (0..n).any(|z| m.get(z, y) >= m.get(y, x))))
        .collect()
}

pub fn minimax(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let worst: Vec<i64> = (0..n)
        .map(|x| (0..n).map(|y| m.get(y, x).max(0)).max().unwrap())
        .collect();
    let best = *worst.iter().min().unwrap();
    (0..n).filter(|&x| worst[x] == best).collect()
}

/// `y` defeats `x` iff the edge `y -> x` is not a weakest edge of any majority cycle through it.
pub fn split_cycle(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let defeated = |x: usize| {
        (0..n).any(|y| {
            let w = m.get(y, x);
            w > 0 && simple_paths(n, x, y).iter().all(|p| path_min(m, p) < w)
        })
    };
    (0..n).filter(|&x| !defeated(x)).collect()
}

pub fn beat_path(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let strength = |x: usize, y: usize| {
        if x == y {
            return 0;
        }
        simple_paths(n, x, y)
            .iter()
            .map(|p| path_min(m, p))
            .filter(|&s| s > 0)
            .max()
            .unwrap_or(0)
    };
    (0..n)
        .filter(|&x| (0..n).all(|y| strength(x, y) >= strength(y, x)))
        .collect()
}

/// Ranked pairs for matrices whose positive margins are pairwise distinct.
pub fn ranked_pairs_distinct(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let mut edges: Vec<(i64, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if m.get(x, y) > 0 {
                edges.push((m.get(x, y), x, y));
            }
        }
    }
    edges.sort_by(|a, b| b.cmp(a));
    let mut locked = vec![vec![false; n]; n];
    let reaches = |locked: &Vec<Vec<bool>>, from: usize, to: usize| {
        let mut seen = vec![false; n];
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            if !seen[v] {
                seen[v] = true;
                stack.extend((0..n).filter(|&w| locked[v][w]));
            }
        }
        false
    };
    for (_, x, y) in edges {
        if !reaches(&locked, y, x) {
            locked[x][y] = true;
        }
    }
    (0..n).filter(|&x| (0..n).all(|y| !locked[y][x])).collect()
}

pub fn copeland(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let score: Vec<i64> = (0..n)
        .map(|x| (0..n).map(|y| m.get(x, y).signum()).sum())
        .collect();
    let best = *score.iter().max().unwrap();
    (0..n).filter(|&x| score[x] == best).collect()
}

/// Smallest nonempty set whose members are not beaten by any outsider.
pub fn smith(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let dominant = set
            .iter()
            .all(|&x| (0..n).filter(|y| !set.contains(y)).all(|y| m.get(x, y) > 0));
        if dominant && best.as_ref().is_none_or(|b| set.len() < b.len()) {
            best = Some(set);
        }
    }
    best.unwrap()
}

pub fn uncovered(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let covers =
        |y: usize, x: usize| m.get(y, x) > 0 && (0..n).all(|z| m.get(x, z) <= 0 || m.get(y, z) > 0);
    (0..n).filter(|&x| (0..n).all(|y| !covers(y, x))).collect()
}

/// Row sums of the margin matrix.
pub fn borda(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let score: Vec<i64> = (0..n).map(|x| (0..n).map(|y| m.get(x, y)).sum()).collect();
    let best = *score.iter().max().unwrap();
    (0..n).filter(|&x| score[x] == best).collect()
}

/// Ranked pairs as the union over every order of every tied group (brute force).
pub fn ranked_pairs_all_orders(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let mut edges: Vec<(i64, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if m.get(x, y) > 0 {
                edges.push((m.get(x, y), x, y));
            }
        }
    }
    let mut winners = vec![false; n];
    // every permutation of the edge list that keeps margins non-increasing
    fn go(
        m: &MarginMatrix,
        rest: &mut Vec<(i64, usize, usize)>,
        order: &mut Vec<(i64, usize, usize)>,
        winners: &mut Vec<bool>,
    ) {
        if rest.is_empty() {
            let distinct = MarginMatrix::from_fn(m.alternatives().to_vec(), |x, y| {
                match order
                    .iter()
                    .position(|&(_, a, b)| (a, b) == (x, y) || (a, b) == (y, x))
                {
                    Some(i) => {
                        let s = (order.len() - i) as i64;
                        if order[i].1 == x {
                            s
                        } else {
                            -s
                        }
                    }
                    None => 0,
                }
            });
            for w in ranked_pairs_distinct(&distinct) {
                winners[w] = true;
            }
            return;
        }
        let top = rest.iter().map(|e| e.0).max().unwrap();
        for i in 0..rest.len() {
            if rest[i].0 == top {
                let e = rest.remove(i);
                order.push(e);
                go(m, rest, order, winners);
                order.pop();
                rest.insert(i, e);
            }
        }
    }
    go(m, &mut edges, &mut Vec::new(), &mut winners);
    (0..n).filter(|&x| winners[x]).collect()
}
