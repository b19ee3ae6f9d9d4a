use crate::margin::MarginMatrix;

/// Alternatives `x` such that every `y` has some `z` with `margin(z, y) >= margin(y, x)`.
///
/// Taking `z = y` covers every `y` that does not beat `x`, so only defeats of `x` need a
/// counter-defeat of at least equal strength.
pub fn defensible_set(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    (0..n)
        .filter(|&x| (0..n).all(|y| (0..n).any(|z| m.get(z, y) >= m.get(y, x))))
        .collect()
}
