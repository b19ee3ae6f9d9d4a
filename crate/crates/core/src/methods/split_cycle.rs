use crate::margin::MarginMatrix;

/// Defeat relation: `(x, y)` with positive margin such that on every simple majority cycle
/// through `(x, y)` the margin of `x` over `y` exceeds the cycle's weakest margin.
///
/// Cycles are enumerated explicitly as simple paths from `y` back to `x`.
pub fn split_cycle_defeats(m: &MarginMatrix) -> Vec<(usize, usize)> {
    let n = m.len();
    let mut defeats = Vec::new();
    let mut on_path = vec![false; n];
    for x in 0..n {
        for y in 0..n {
            let w = m.get(x, y);
            if w <= 0 {
                continue;
            }
            // a path y -> ... -> x whose weakest edge is at least w closes a cycle
            // on which (x, y) is a weakest edge
            on_path.iter_mut().for_each(|b| *b = false);
            on_path[x] = true;
            if !path_with_all_edges_at_least(m, y, x, w, &mut on_path) {
                defeats.push((x, y));
            }
        }
    }
    defeats
}

fn path_with_all_edges_at_least(
    m: &MarginMatrix,
    from: usize,
    to: usize,
    threshold: i64,
    on_path: &mut [bool],
) -> bool {
    // walks every simple path out of `from`; `to` is pre-marked so it is only
    // reached as the final step
    on_path[from] = true;
    let n = m.len();
    for next in 0..n {
        let v = m.get(from, next);
        if v <= 0 || v < threshold {
            continue;
        }
        if next == to {
            on_path[from] = false;
            return true;
        }
        if !on_path[next] && path_with_all_edges_at_least(m, next, to, threshold, on_path) {
            on_path[from] = false;
            return true;
        }
    }
    on_path[from] = false;
    false
}

/// Alternatives with no incoming Split Cycle defeat.
pub fn split_cycle(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let mut defeated = vec![false; n];
    for (_, y) in split_cycle_defeats(m) {
        defeated[y] = true;
    }
    (0..n).filter(|&x| !defeated[x]).collect()
}
