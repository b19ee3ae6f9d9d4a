use super::arg_best;
use crate::margin::MarginMatrix;

/// Maximizers of wins minus losses.
pub fn copeland(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    arg_best(
        n,
        |x| (0..n).map(|y| m.get(x, y).signum()).sum::<i64>(),
        |a, b| a > b,
    )
}

/// The smallest nonempty set whose members all beat every outsider.
///
/// Computed as the top class of the transitive closure of "does not lose to".
pub fn smith_set(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let mut reach = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            reach[x][y] = m.get(x, y) >= 0;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n).filter(|&x| (0..n).all(|y| reach[x][y])).collect()
}

/// Alternatives `x` with no `y` that beats `x` and beats everything `x` beats.
pub fn uncovered_set(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let covers =
        |y: usize, x: usize| m.beats(y, x) && (0..n).all(|z| !m.beats(x, z) || m.beats(y, z));
    (0..n).filter(|&x| (0..n).all(|y| !covers(y, x))).collect()
}
