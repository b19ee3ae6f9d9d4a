use crate::margin::MarginMatrix;

/// Widest-path strengths over positive margins (Floyd–Warshall with max-min).
pub fn strongest_paths(m: &MarginMatrix) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut p = vec![vec![0i64; n]; n];
    for x in 0..n {
        for y in 0..n {
            if x != y {
                p[x][y] = m.get(x, y).max(0);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..n {
                if j == i || j == k {
                    continue;
                }
                let via = p[i][k].min(p[k][j]);
                if via > p[i][j] {
                    p[i][j] = via;
                }
            }
        }
    }
    p
}

/// Schulze winners: `x` whose strongest path to every `y` is at least as strong as the reverse.
pub fn beat_path(m: &MarginMatrix) -> Vec<usize> {
    let n = m.len();
    let p = strongest_paths(m);
    (0..n)
        .filter(|&x| (0..n).all(|y| p[x][y] >= p[y][x]))
        .collect()
}
