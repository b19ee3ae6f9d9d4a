use super::arg_best;
use crate::margin::MarginMatrix;

/// Alternatives whose largest head-to-head loss is smallest; an undefeated alternative's
/// worst loss counts as 0.
pub fn minimax(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    arg_best(
        n,
        |x| (0..n).map(|y| m.get(y, x)).max().unwrap_or(0).max(0),
        |a, b| a < b,
    )
}
