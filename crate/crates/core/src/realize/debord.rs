use crate::error::{Error, Result};
use crate::margin::MarginMatrix;
use crate::omg::OrdinalMarginGraph;
use crate::profile::{Ballot, Profile};

/// An antisymmetric integer matrix whose off-diagonal entries share one parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarginTarget(MarginMatrix);

impl MarginTarget {
    pub fn new(m: MarginMatrix) -> Result<Self> {
        if m.uniform_parity().is_none() {
            return Err(Error::ParityViolation);
        }
        Ok(MarginTarget(m))
    }

    pub fn matrix(&self) -> &MarginMatrix {
        &self.0
    }
}

/// The pair gadget for `x` over `y`: `x > y > rest ascending` and `rest descending > x > y`.
/// Together they add 2 to `margin(x, y)` and cancel on every other pair.
pub fn pair_gadget(n: usize, x: usize, y: usize) -> [Ballot; 2] {
    let rest: Vec<usize> = (0..n).filter(|&z| z != x && z != y).collect();
    let mut first = vec![x, y];
    first.extend(rest.iter().copied());
    let mut second: Vec<usize> = rest.iter().rev().copied().collect();
    second.extend([x, y]);
    [
        Ballot::linear(&first).expect("permutation"),
        Ballot::linear(&second).expect("permutation"),
    ]
}

/// Builds a linear profile whose margin matrix equals the target exactly.
///
/// Odd targets start from the seed ballot `0 > 1 > .. > n-1`; the even residual is then
/// filled with pair gadgets. An all-zero even target gets one ballot and its reverse.
pub fn debord_realize(t: &MarginTarget) -> Result<Profile> {
    let m = t.matrix();
    let n = m.len();
    let alts = m.alternatives().to_vec();
    if n == 1 {
        return Profile::new(alts, vec![(Ballot::linear(&[0])?, 1)]);
    }
    let mut entries: Vec<(Ballot, u64)> = Vec::new();
    let mut residual: Vec<i64> = m.entries().to_vec();
    if m.uniform_parity() == Some(1) {
        let seed: Vec<usize> = (0..n).collect();
        entries.push((Ballot::linear(&seed)?, 1));
        for x in 0..n {
            for y in 0..n {
                if x < y {
                    residual[x * n + y] -= 1;
                } else if x > y {
                    residual[x * n + y] += 1;
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let r = residual[x * n + y];
            if r > 0 {
                debug_assert_eq!(r % 2, 0);
                let k = (r / 2) as u64;
                for b in pair_gadget(n, x, y) {
                    entries.push((b, k));
                }
            }
        }
    }
    if entries.is_empty() {
        let up: Vec<usize> = (0..n).collect();
        let down: Vec<usize> = (0..n).rev().collect();
        entries.push((Ballot::linear(&up)?, 1));
        entries.push((Ballot::linear(&down)?, 1));
    }
    let p = Profile::new(alts, entries)?;
    debug_assert_eq!(p.margin_matrix(), *m);
    Ok(p)
}

/// Realizes an ordinal margin graph, giving rank-`i` edges margin `assignment[i - 1]`
/// (default `2i`).
pub fn realize_omg(g: &OrdinalMarginGraph, assignment: Option<&[i64]>) -> Result<Profile> {
    let k = g.max_rank() as usize;
    let values: Vec<i64> = match assignment {
        Some(a) => {
            if a.len() < k || a.iter().any(|&v| v <= 0) || a.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NonMonotoneAssignment);
            }
            a.to_vec()
        }
        None => (1..=k as i64).map(|i| 2 * i).collect(),
    };
    let n = g.len();
    let mut m = vec![0i64; n * n];
    for (&(x, y), &r) in g.edges() {
        let v = values[r as usize - 1];
        m[x * n + y] = v;
        m[y * n + x] = -v;
    }
    let target = MarginTarget::new(MarginMatrix::new(g.vertices().to_vec(), m)?)?;
    let p = debord_realize(&target)?;
    debug_assert_eq!(p.ordinal_margin_graph(), *g);
    Ok(p)
}
